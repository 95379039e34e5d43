//! Exhaustive, isomorphism-pruned enumeration of small semirings with
//! property filters.
//!
//! Zero is fixed at index 0 and one at index 1, so isomorphism reduces to
//! permutations of the remaining indices (any semiring isomorphism fixes
//! both identities). The backtracker fills the addition table first
//! (commutative monoid with identity 0), then the multiplication table
//! cell by cell with incremental associativity and distributivity checks.
//! Emission order is stabilized by branch index, so census output is
//! deterministic whether or not the parallel feature is enabled.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::analysis;
use crate::par;
use crate::report::PropertyKey;
use crate::tables::{validate_semiring, FiniteSemiring, OpTable};

/// Orders above this are refused outright.
pub const HARD_ORDER_CAP: usize = 5;
/// Default order cap; order 5 needs the explicit opt-in flag.
pub const DEFAULT_ORDER_CAP: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("order {order} out of range (2..={cap}; pass allow_order_5 for 5)")]
    BadOrder { order: usize, cap: usize },
    #[error("property {0} appears in both require and forbid")]
    ContradictoryFilter(PropertyKey),
}

/// What to enumerate and which property filters emitted records must
/// satisfy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchSpec {
    pub order: usize,
    pub require: Vec<PropertyKey>,
    pub forbid: Vec<PropertyKey>,
    /// Emit only canonical representatives (minimal table pair under all
    /// permutations fixing zero and one). Default true.
    pub canonical_only: bool,
    /// Cap on emitted records; hitting it truncates the census.
    pub cap: Option<usize>,
    /// Wall-clock budget; exceeding it truncates between branches.
    pub time_budget: Option<Duration>,
    pub allow_order_5: bool,
    /// Skip top-level branches below this index (resume a truncated run).
    pub resume_branch: usize,
}

impl SearchSpec {
    pub fn order(order: usize) -> Self {
        SearchSpec {
            order,
            require: Vec::new(),
            forbid: Vec::new(),
            canonical_only: true,
            cap: None,
            time_budget: None,
            allow_order_5: false,
            resume_branch: 0,
        }
    }
}

/// One emitted semiring with its full property vector.
#[derive(Debug, Clone)]
pub struct CensusRecord {
    pub semiring: FiniteSemiring,
    pub properties: Vec<(PropertyKey, bool)>,
    pub discovery_index: usize,
}

/// Census output plus the truncation marker.
#[derive(Debug, Clone)]
pub struct Census {
    pub records: Vec<CensusRecord>,
    pub truncated: bool,
    /// First branch not fully emitted, when truncated.
    pub resume_branch: Option<usize>,
    pub branches_total: usize,
}

/// Serializable one-line form of a census record.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CensusLine {
    pub discovery_index: usize,
    pub order: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    pub properties: Vec<(PropertyKey, bool)>,
}

impl CensusRecord {
    pub fn to_line(&self) -> CensusLine {
        let n = self.semiring.order();
        let grid = |t: &OpTable| -> Vec<Vec<usize>> {
            (0..n).map(|i| (0..n).map(|j| t.apply(i, j)).collect()).collect()
        };
        CensusLine {
            discovery_index: self.discovery_index,
            order: n,
            add: grid(&self.semiring.add),
            mul: grid(&self.semiring.mul),
            properties: self.properties.clone(),
        }
    }
}

/// Full property vector of a census record, recomputable from the tables.
pub fn census_properties(s: &FiniteSemiring) -> Vec<(PropertyKey, bool)> {
    PropertyKey::ALL
        .iter()
        .map(|&k| {
            let verdict = analysis::property_report(s, k)
                .expect("census orders are far below every analysis bound")
                .verdict;
            (k, verdict)
        })
        .collect()
}

/// Cheapest-first evaluation order for filter pruning.
const FILTER_ORDER: [PropertyKey; 14] = [
    PropertyKey::Commutative,
    PropertyKey::AddIdempotent,
    PropertyKey::MultIdempotent,
    PropertyKey::ZeroSums,
    PropertyKey::ZeroDivisorFree,
    PropertyKey::NonzeroNilpotents,
    PropertyKey::AddCancellative,
    PropertyKey::Semisubtractive,
    PropertyKey::MultCancellativeLeft,
    PropertyKey::MultCancellativeRight,
    PropertyKey::DivisionSemiring,
    PropertyKey::Reduced,
    PropertyKey::CentrallyEssential,
    PropertyKey::Semiprime,
];

/// Backtracking enumeration: add tables form the top-level branches, each
/// explored independently (and in parallel), with results re-assembled in
/// branch order.
pub fn enumerate(spec: &SearchSpec) -> Result<Census, SearchError> {
    let n = spec.order;
    let cap = if spec.allow_order_5 { HARD_ORDER_CAP } else { DEFAULT_ORDER_CAP };
    if n < 2 || n > cap {
        return Err(SearchError::BadOrder { order: n, cap });
    }
    for k in &spec.require {
        if spec.forbid.contains(k) {
            return Err(SearchError::ContradictoryFilter(*k));
        }
    }

    let started = Instant::now();
    let branches = enumerate_add_tables(n);
    let branches_total = branches.len();
    let mut records: Vec<CensusRecord> = Vec::new();
    let mut truncated = false;
    let mut resume_branch = None;

    const CHUNK: usize = 32;
    let mut next = spec.resume_branch.min(branches_total);
    'outer: while next < branches_total {
        if let Some(budget) = spec.time_budget {
            if started.elapsed() > budget {
                truncated = true;
                resume_branch = Some(next);
                break;
            }
        }
        let hi = (next + CHUNK).min(branches_total);
        let chunk: Vec<Vec<CensusRecord>> = par::map_indexed(hi - next, |k| {
            explore_branch(&branches[next + k], n, spec)
        });
        for (offset, found) in chunk.into_iter().enumerate() {
            if let Some(cap) = spec.cap {
                if records.len() + found.len() > cap {
                    truncated = true;
                    resume_branch = Some(next + offset);
                    break 'outer;
                }
            }
            records.extend(found);
        }
        next = hi;
    }
    for (i, r) in records.iter_mut().enumerate() {
        r.discovery_index = i;
    }
    Ok(Census { records, truncated, resume_branch, branches_total })
}

/// All commutative associative addition tables on `[0, n)` with identity
/// at index 0, in lexicographic cell order.
fn enumerate_add_tables(n: usize) -> Vec<Vec<usize>> {
    // free cells: (i, j) with 1 <= i <= j < n
    let cells: Vec<(usize, usize)> = (1..n)
        .flat_map(|i| (i..n).map(move |j| (i, j)))
        .collect();
    let mut table = vec![usize::MAX; n * n];
    for k in 0..n {
        table[k] = k; // 0 + k
        table[k * n] = k; // k + 0
    }
    let mut out = Vec::new();
    fill_add(&mut table, &cells, 0, n, &mut out);
    out
}

fn fill_add(
    table: &mut Vec<usize>,
    cells: &[(usize, usize)],
    at: usize,
    n: usize,
    out: &mut Vec<Vec<usize>>,
) {
    if at == cells.len() {
        out.push(table.clone());
        return;
    }
    let (i, j) = cells[at];
    for v in 0..n {
        table[i * n + j] = v;
        table[j * n + i] = v;
        if add_prefix_ok(table, n) {
            fill_add(table, cells, at + 1, n, out);
        }
    }
    table[i * n + j] = usize::MAX;
    table[j * n + i] = usize::MAX;
}

/// Associativity instances whose lookups are all defined.
fn add_prefix_ok(table: &[usize], n: usize) -> bool {
    let get = |i: usize, j: usize| table[i * n + j];
    for x in 0..n {
        for y in 0..n {
            let xy = get(x, y);
            if xy == usize::MAX {
                continue;
            }
            for z in 0..n {
                let yz = get(y, z);
                if yz == usize::MAX {
                    continue;
                }
                let left = get(xy, z);
                let right = get(x, yz);
                if left != usize::MAX && right != usize::MAX && left != right {
                    return false;
                }
            }
        }
    }
    true
}

fn explore_branch(add: &[usize], n: usize, spec: &SearchSpec) -> Vec<CensusRecord> {
    // multiplication grid: row/col 0 absorbing, row/col 1 identity
    let mut mul = vec![usize::MAX; n * n];
    for k in 0..n {
        mul[k] = 0;
        mul[k * n] = 0;
        mul[n + k] = k;
        mul[k * n + 1] = k;
    }
    let cells: Vec<(usize, usize)> = (2..n)
        .flat_map(|i| (2..n).map(move |j| (i, j)))
        .collect();
    let mut found = Vec::new();
    fill_mul(add, &mut mul, &cells, 0, n, spec, &mut found);
    found
}

fn fill_mul(
    add: &[usize],
    mul: &mut Vec<usize>,
    cells: &[(usize, usize)],
    at: usize,
    n: usize,
    spec: &SearchSpec,
    found: &mut Vec<CensusRecord>,
) {
    if at == cells.len() {
        if let Some(record) = finish_candidate(add, mul, n, spec) {
            found.push(record);
        }
        return;
    }
    let (i, j) = cells[at];
    for v in 0..n {
        mul[i * n + j] = v;
        if mul_prefix_ok(add, mul, n) {
            fill_mul(add, mul, cells, at + 1, n, spec, found);
        }
    }
    mul[i * n + j] = usize::MAX;
}

fn mul_prefix_ok(add: &[usize], mul: &[usize], n: usize) -> bool {
    let m = |i: usize, j: usize| mul[i * n + j];
    let a = |i: usize, j: usize| add[i * n + j];
    for x in 0..n {
        for y in 0..n {
            let xy = m(x, y);
            if xy == usize::MAX {
                continue;
            }
            for z in 0..n {
                // associativity
                let yz = m(y, z);
                if yz != usize::MAX {
                    let left = m(xy, z);
                    let right = m(x, yz);
                    if left != usize::MAX && right != usize::MAX && left != right {
                        return false;
                    }
                }
                // left distributivity: x(y + z) = xy + xz
                let xz = m(x, z);
                if xz != usize::MAX {
                    let lhs = m(x, a(y, z));
                    if lhs != usize::MAX && lhs != a(xy, xz) {
                        return false;
                    }
                }
                // right distributivity: (x + y)z = xz + yz
                let yz_prod = m(y, z);
                let xz_prod = m(x, z);
                if yz_prod != usize::MAX && xz_prod != usize::MAX {
                    let lhs = m(a(x, y), z);
                    if lhs != usize::MAX && lhs != a(xz_prod, yz_prod) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn finish_candidate(
    add: &[usize],
    mul: &[usize],
    n: usize,
    spec: &SearchSpec,
) -> Option<CensusRecord> {
    if spec.canonical_only && !is_canonical(add, mul, n) {
        return None;
    }
    let add_t = OpTable::new(n, add.to_vec()).expect("entries in range");
    let mul_t = OpTable::new(n, mul.to_vec()).expect("entries in range");
    let labels = (0..n)
        .map(|i| match i {
            0 => "0".to_string(),
            1 => "1".to_string(),
            _ => format!("x{i}"),
        })
        .collect();
    let s = FiniteSemiring::new(labels, add_t, mul_t, 0, 1).expect("shape is fixed");
    debug_assert!(validate_semiring(&s).is_valid());
    // cheap-first filter evaluation
    for key in FILTER_ORDER {
        let required = spec.require.contains(&key);
        let forbidden = spec.forbid.contains(&key);
        if !required && !forbidden {
            continue;
        }
        let verdict = analysis::property_report(&s, key)
            .expect("census orders are far below every analysis bound")
            .verdict;
        if (required && !verdict) || (forbidden && verdict) {
            return None;
        }
    }
    let properties = census_properties(&s);
    Some(CensusRecord { semiring: s, properties, discovery_index: 0 })
}

/// Canonical iff the concatenated (add, mul) entry vector is minimal over
/// all permutations of the indices above 1.
fn is_canonical(add: &[usize], mul: &[usize], n: usize) -> bool {
    if n <= 3 {
        return true; // at most one non-fixed index
    }
    let own: Vec<usize> = add.iter().chain(mul.iter()).copied().collect();
    let mut movable: Vec<usize> = (2..n).collect();
    let mut ok = true;
    permute(&mut movable, 0, &mut |perm| {
        // full permutation: identity on 0, 1, perm on the rest
        let mut map: Vec<usize> = (0..n).collect();
        for (offset, &target) in perm.iter().enumerate() {
            map[2 + offset] = target;
        }
        let image: Vec<usize> = [add, mul]
            .iter()
            .flat_map(|t| {
                let mut out = vec![0usize; n * n];
                for i in 0..n {
                    for j in 0..n {
                        out[map[i] * n + map[j]] = map[t[i * n + j]];
                    }
                }
                out
            })
            .collect();
        if image < own {
            ok = false;
        }
    });
    ok
}

fn permute(items: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}

/// Semiring isomorphism by exhaustive bijection search (identities are
/// forced, so only permutations fixing zero and one are tried).
pub fn isomorphic(a: &FiniteSemiring, b: &FiniteSemiring) -> bool {
    if a.order() != b.order() {
        return false;
    }
    let n = a.order();
    if a.zero != b.zero || a.one != b.one {
        // relabel-sensitive callers can permute beforehand; census
        // tables always carry zero at 0 and one at 1
        return false;
    }
    let mut movable: Vec<usize> = (0..n).filter(|&i| i != a.zero && i != a.one).collect();
    let mut hit = false;
    permute(&mut movable, 0, &mut |perm| {
        if hit {
            return;
        }
        let mut map: Vec<usize> = (0..n).collect();
        let slots: Vec<usize> = (0..n).filter(|&i| i != a.zero && i != a.one).collect();
        for (slot, &target) in slots.iter().zip(perm.iter()) {
            map[*slot] = target;
        }
        let good = (0..n).all(|x| {
            (0..n).all(|y| {
                map[a.add(x, y)] == b.add(map[x], map[y])
                    && map[a.mul(x, y)] == b.mul(map[x], map[y])
            })
        });
        if good {
            hit = true;
        }
    });
    hit
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tables::{boolean_semiring, zmod_semiring};

    /// Independent oracle: brute force over every pair of 2x2 tables.
    fn order2_brute_force() -> Vec<(Vec<usize>, Vec<usize>)> {
        let mut out = Vec::new();
        for add_bits in 0..16usize {
            for mul_bits in 0..16usize {
                let add: Vec<usize> = (0..4).map(|k| (add_bits >> k) & 1).collect();
                let mul: Vec<usize> = (0..4).map(|k| (mul_bits >> k) & 1).collect();
                let s = FiniteSemiring::new(
                    vec!["0".into(), "1".into()],
                    OpTable::new(2, add.clone()).unwrap(),
                    OpTable::new(2, mul.clone()).unwrap(),
                    0,
                    1,
                );
                let Ok(s) = s else { continue };
                if validate_semiring(&s).is_valid() {
                    out.push((add, mul));
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }

    #[test]
    fn order2_census_matches_brute_force_oracle() {
        let census = enumerate(&SearchSpec::order(2)).unwrap();
        let mut got: Vec<(Vec<usize>, Vec<usize>)> = census
            .records
            .iter()
            .map(|r| {
                let line = r.to_line();
                (
                    line.add.into_iter().flatten().collect(),
                    line.mul.into_iter().flatten().collect(),
                )
            })
            .collect();
        got.sort();
        let want = order2_brute_force();
        assert_eq!(got, want);
        assert_eq!(got.len(), 2); // the two-element field and the Boolean semiring
        assert!(!census.truncated);
    }

    #[test]
    fn order2_census_contains_z2_and_boolean() {
        let census = enumerate(&SearchSpec::order(2)).unwrap();
        let z2 = zmod_semiring(2);
        let b = boolean_semiring();
        assert!(census.records.iter().any(|r| r.semiring.add == z2.add && r.semiring.mul == z2.mul));
        assert!(census.records.iter().any(|r| r.semiring.add == b.add && r.semiring.mul == b.mul));
    }

    #[test]
    fn emitted_records_are_valid_and_pairwise_nonisomorphic() {
        for order in [2usize, 3] {
            let census = enumerate(&SearchSpec::order(order)).unwrap();
            for r in &census.records {
                assert!(validate_semiring(&r.semiring).is_valid());
            }
            for i in 0..census.records.len() {
                for j in (i + 1)..census.records.len() {
                    assert!(
                        !isomorphic(&census.records[i].semiring, &census.records[j].semiring),
                        "records {i} and {j} at order {order} are isomorphic"
                    );
                }
            }
        }
    }

    #[test]
    fn property_vectors_reverify() {
        let census = enumerate(&SearchSpec::order(3)).unwrap();
        assert!(!census.records.is_empty());
        for r in &census.records {
            assert_eq!(r.properties, census_properties(&r.semiring));
        }
    }

    #[test]
    fn filters_are_honored() {
        let mut spec = SearchSpec::order(3);
        spec.require = vec![PropertyKey::Commutative];
        let commutative = enumerate(&spec).unwrap();
        assert!(commutative
            .records
            .iter()
            .all(|r| r.properties.contains(&(PropertyKey::Commutative, true))));

        let mut spec = SearchSpec::order(3);
        spec.forbid = vec![PropertyKey::Commutative];
        let noncommutative = enumerate(&spec).unwrap();
        for r in &noncommutative.records {
            assert!(r.properties.contains(&(PropertyKey::Commutative, false)));
        }

        let full = enumerate(&SearchSpec::order(3)).unwrap();
        assert_eq!(
            full.records.len(),
            commutative.records.len() + noncommutative.records.len()
        );
    }

    #[test]
    fn contradictory_filters_rejected() {
        let mut spec = SearchSpec::order(2);
        spec.require = vec![PropertyKey::Commutative];
        spec.forbid = vec![PropertyKey::Commutative];
        assert!(matches!(
            enumerate(&spec),
            Err(SearchError::ContradictoryFilter(PropertyKey::Commutative))
        ));
        assert!(matches!(enumerate(&SearchSpec::order(9)), Err(SearchError::BadOrder { .. })));
    }

    #[test]
    fn cap_truncates_with_resume_marker() {
        let mut spec = SearchSpec::order(3);
        spec.cap = Some(1);
        let census = enumerate(&spec).unwrap();
        assert!(census.truncated);
        let resume = census.resume_branch.expect("resume branch is set");
        assert!(census.records.len() <= 1);
        // resuming from the marker and concatenating reproduces the full census
        let mut rest_spec = SearchSpec::order(3);
        rest_spec.resume_branch = resume;
        let rest = enumerate(&rest_spec).unwrap();
        let full = enumerate(&SearchSpec::order(3)).unwrap();
        assert_eq!(census.records.len() + rest.records.len(), full.records.len());
    }
}
