//! Operation tables for finite magmas, semigroups, and semirings, with
//! full axiom validation.
//!
//! Elements are dense indices in `[0, n)`; labels are presentation-only
//! and never affect a verdict. All tables are immutable once built and
//! every predicate here is a pure function, so carrier loops can run in
//! parallel freely.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::par;

/// Upper bound on materialized carriers (indices are stored as `u16`).
pub const MAX_ORDER: usize = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("order must be positive and at most {MAX_ORDER}, got {0}")]
    BadOrder(usize),
    #[error("table entry {value} at ({row}, {col}) is out of range for order {order}")]
    EntryOutOfRange { row: usize, col: usize, value: usize, order: usize },
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("index {0} out of range for order {1}")]
    IndexOutOfRange(usize, usize),
    #[error("generator set does not generate the carrier (closure has {closure} of {order} elements)")]
    NotGenerating { closure: usize, order: usize },
}

/// An `n x n` binary operation table over indices `[0, n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OpTable {
    order: usize,
    entries: Vec<u16>,
}

impl OpTable {
    pub fn new(order: usize, entries: Vec<usize>) -> Result<Self, TableError> {
        if order == 0 || order > MAX_ORDER {
            return Err(TableError::BadOrder(order));
        }
        if entries.len() != order * order {
            return Err(TableError::BadOrder(order));
        }
        let mut packed = Vec::with_capacity(entries.len());
        for (pos, &v) in entries.iter().enumerate() {
            if v >= order {
                return Err(TableError::EntryOutOfRange {
                    row: pos / order,
                    col: pos % order,
                    value: v,
                    order,
                });
            }
            packed.push(v as u16);
        }
        Ok(OpTable { order, entries: packed })
    }

    /// Build from a function of the two operand indices.
    pub fn from_fn(order: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self, TableError> {
        if order == 0 || order > MAX_ORDER {
            return Err(TableError::BadOrder(order));
        }
        let mut entries = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                entries.push(f(i, j));
            }
        }
        OpTable::new(order, entries)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn apply(&self, i: usize, j: usize) -> usize {
        self.entries[i * self.order + j] as usize
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u16]> {
        self.entries.chunks(self.order)
    }

    pub fn raw_entries(&self) -> &[u16] {
        &self.entries
    }

    /// Closure of `start` under the operation.
    pub fn closure(&self, start: &[usize]) -> Vec<usize> {
        let n = self.order;
        let mut in_set = vec![false; n];
        let mut work: Vec<usize> = Vec::new();
        for &g in start {
            if !in_set[g] {
                in_set[g] = true;
                work.push(g);
            }
        }
        let mut i = 0;
        while i < work.len() {
            let x = work[i];
            i += 1;
            for k in 0..work.len() {
                let y = work[k];
                for p in [self.apply(x, y), self.apply(y, x)] {
                    if !in_set[p] {
                        in_set[p] = true;
                        work.push(p);
                    }
                }
            }
        }
        let mut out: Vec<usize> = (0..n).filter(|&i| in_set[i]).collect();
        out.sort_unstable();
        out
    }
}

/// Verdict of an associativity test: either associative, or the first
/// failing triple in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Associativity {
    Associative,
    Fails { x: usize, y: usize, z: usize },
}

impl Associativity {
    pub fn holds(&self) -> bool {
        matches!(self, Associativity::Associative)
    }
}

/// Exhaustive scan over all `n^3` triples. This is the oracle that
/// [`lights_test`] is checked against.
pub fn naive_associativity(t: &OpTable) -> Associativity {
    let n = t.order();
    let hit = par::find_map_first(n, |x| {
        for y in 0..n {
            let xy = t.apply(x, y);
            for z in 0..n {
                if t.apply(xy, z) != t.apply(x, t.apply(y, z)) {
                    return Some((x, y, z));
                }
            }
        }
        None
    });
    match hit {
        Some((x, y, z)) => Associativity::Fails { x, y, z },
        None => Associativity::Associative,
    }
}

/// Light's associativity test: for each generator `g`, compare the table
/// of `x * (g * y)` against `(x * g) * y`. Sound when the generators
/// generate the carrier, which is checked first.
pub fn lights_test(t: &OpTable, generators: Option<&[usize]>) -> Result<Associativity, TableError> {
    let n = t.order();
    let all: Vec<usize> = (0..n).collect();
    let gens: &[usize] = match generators {
        Some(g) => {
            for &i in g {
                if i >= n {
                    return Err(TableError::IndexOutOfRange(i, n));
                }
            }
            g
        }
        None => &all,
    };
    let closure = t.closure(gens);
    if closure.len() != n {
        return Err(TableError::NotGenerating { closure: closure.len(), order: n });
    }
    for &g in gens {
        for x in 0..n {
            let xg = t.apply(x, g);
            for w in 0..n {
                if t.apply(xg, w) != t.apply(x, t.apply(g, w)) {
                    return Ok(Associativity::Fails { x, y: g, z: w });
                }
            }
        }
    }
    Ok(Associativity::Associative)
}

/// A labeled finite magma, optionally with distinguished zero/one and a
/// declared generating set (used by Light's test and by the power-set
/// construction).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteMagma {
    pub labels: Vec<String>,
    pub table: OpTable,
    pub zero: Option<usize>,
    pub one: Option<usize>,
    pub generators: Option<Vec<usize>>,
}

impl FiniteMagma {
    pub fn new(labels: Vec<String>, table: OpTable) -> Result<Self, TableError> {
        check_labels(&labels, table.order())?;
        Ok(FiniteMagma { labels, table, zero: None, one: None, generators: None })
    }

    pub fn order(&self) -> usize {
        self.table.order()
    }

    /// Two-sided absorbing element, if any.
    pub fn find_zero(&self) -> Option<usize> {
        let n = self.order();
        (0..n).find(|&z| (0..n).all(|x| self.table.apply(z, x) == z && self.table.apply(x, z) == z))
    }

    /// Two-sided identity, if any.
    pub fn find_identity(&self) -> Option<usize> {
        let n = self.order();
        (0..n).find(|&e| (0..n).all(|x| self.table.apply(e, x) == x && self.table.apply(x, e) == x))
    }
}

fn check_labels(labels: &[String], order: usize) -> Result<(), TableError> {
    if labels.len() != order {
        return Err(TableError::LabelCount { expected: order, got: labels.len() });
    }
    for (i, l) in labels.iter().enumerate() {
        if labels[..i].contains(l) {
            return Err(TableError::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}

/// A finite semiring as a pair of operation tables with distinguished
/// zero and one. Invariants are established by [`validate_semiring`]; the
/// constructor only checks shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSemiring {
    pub labels: Vec<String>,
    pub add: OpTable,
    pub mul: OpTable,
    pub zero: usize,
    pub one: usize,
}

impl FiniteSemiring {
    pub fn new(
        labels: Vec<String>,
        add: OpTable,
        mul: OpTable,
        zero: usize,
        one: usize,
    ) -> Result<Self, TableError> {
        let n = add.order();
        if mul.order() != n {
            return Err(TableError::BadOrder(mul.order()));
        }
        check_labels(&labels, n)?;
        if zero >= n {
            return Err(TableError::IndexOutOfRange(zero, n));
        }
        if one >= n {
            return Err(TableError::IndexOutOfRange(one, n));
        }
        Ok(FiniteSemiring { labels, add, mul, zero, one })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.add.order()
    }

    #[inline]
    pub fn add(&self, i: usize, j: usize) -> usize {
        self.add.apply(i, j)
    }

    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.mul.apply(i, j)
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels_of(&self, idxs: &[usize]) -> Vec<String> {
        idxs.iter().map(|&i| self.labels[i].clone()).collect()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Power `x^k` under multiplication, `k >= 1`.
    pub fn pow(&self, x: usize, k: usize) -> usize {
        let mut acc = x;
        for _ in 1..k {
            acc = self.mul(acc, x);
        }
        acc
    }
}

/// Which semiring axiom a violation is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    AddAssociative,
    AddCommutative,
    AddIdentity,
    MulAssociative,
    MulIdentity,
    DistributesLeft,
    DistributesRight,
    ZeroAbsorbing,
    ZeroOneDistinct,
}

/// One violated axiom together with the elements that witness it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomViolation {
    pub axiom: Axiom,
    pub witness: Vec<usize>,
}

/// Outcome of semiring validation: the empty violation list means every
/// axiom holds. Violations are data, not errors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub order: usize,
    pub violations: Vec<AxiomViolation>,
    /// Order-1 semiring (zero = one) is valid but degenerate.
    pub trivial: bool,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Check every semiring axiom, reporting each violated one with a witness
/// tuple. One witness per axiom (the lexicographically first).
pub fn validate_semiring(s: &FiniteSemiring) -> ValidationReport {
    let n = s.order();
    let mut violations = Vec::new();

    if let Associativity::Fails { x, y, z } = naive_associativity(&s.add) {
        violations.push(AxiomViolation { axiom: Axiom::AddAssociative, witness: vec![x, y, z] });
    }
    if let Some((x, y)) = par::find_map_first(n, |x| {
        (0..n).find(|&y| s.add(x, y) != s.add(y, x)).map(|y| (x, y))
    }) {
        violations.push(AxiomViolation { axiom: Axiom::AddCommutative, witness: vec![x, y] });
    }
    if let Some(x) = (0..n).find(|&x| s.add(s.zero, x) != x || s.add(x, s.zero) != x) {
        violations.push(AxiomViolation { axiom: Axiom::AddIdentity, witness: vec![x] });
    }
    if let Associativity::Fails { x, y, z } = naive_associativity(&s.mul) {
        violations.push(AxiomViolation { axiom: Axiom::MulAssociative, witness: vec![x, y, z] });
    }
    if let Some(x) = (0..n).find(|&x| s.mul(s.one, x) != x || s.mul(x, s.one) != x) {
        violations.push(AxiomViolation { axiom: Axiom::MulIdentity, witness: vec![x] });
    }
    if let Some((x, y, z)) = par::find_map_first(n, |x| {
        for y in 0..n {
            for z in 0..n {
                if s.mul(x, s.add(y, z)) != s.add(s.mul(x, y), s.mul(x, z)) {
                    return Some((x, y, z));
                }
            }
        }
        None
    }) {
        violations.push(AxiomViolation { axiom: Axiom::DistributesLeft, witness: vec![x, y, z] });
    }
    if let Some((x, y, z)) = par::find_map_first(n, |x| {
        for y in 0..n {
            for z in 0..n {
                if s.mul(s.add(y, z), x) != s.add(s.mul(y, x), s.mul(z, x)) {
                    return Some((x, y, z));
                }
            }
        }
        None
    }) {
        violations.push(AxiomViolation { axiom: Axiom::DistributesRight, witness: vec![x, y, z] });
    }
    if let Some(x) = (0..n).find(|&x| s.mul(s.zero, x) != s.zero || s.mul(x, s.zero) != s.zero) {
        violations.push(AxiomViolation { axiom: Axiom::ZeroAbsorbing, witness: vec![x] });
    }
    if n > 1 && s.zero == s.one {
        violations.push(AxiomViolation { axiom: Axiom::ZeroOneDistinct, witness: vec![s.zero] });
    }

    ValidationReport { order: n, violations, trivial: n == 1 }
}

/// `x + x = x` for every `x`.
pub fn is_additively_idempotent(s: &FiniteSemiring) -> bool {
    (0..s.order()).all(|x| s.add(x, x) == x)
}

/// `x * x = x` for every `x`.
pub fn is_multiplicatively_idempotent(s: &FiniteSemiring) -> bool {
    (0..s.order()).all(|x| s.mul(x, x) == x)
}

/// The ring `Z/m` as a table semiring; a convenient validated instance
/// for tests and the CLI.
pub fn zmod_semiring(m: usize) -> FiniteSemiring {
    assert!(m >= 1, "modulus must be positive");
    let add = OpTable::from_fn(m, |i, j| (i + j) % m).expect("valid table");
    let mul = OpTable::from_fn(m, |i, j| (i * j) % m).expect("valid table");
    let labels = (0..m).map(|i| i.to_string()).collect();
    FiniteSemiring::new(labels, add, mul, 0, 1 % m).expect("valid shape")
}

/// The Boolean semiring {0, 1} with 1 + 1 = 1.
pub fn boolean_semiring() -> FiniteSemiring {
    let add = OpTable::new(2, vec![0, 1, 1, 1]).unwrap();
    let mul = OpTable::new(2, vec![0, 0, 0, 1]).unwrap();
    FiniteSemiring::new(vec!["0".into(), "1".into()], add, mul, 0, 1).unwrap()
}
