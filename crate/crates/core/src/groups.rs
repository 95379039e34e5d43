//! Finite group machinery: validation, conjugacy classes, center,
//! commutator subgroup, upper central series, nilpotence class, and a
//! small family of builtin groups.
//!
//! Groups here are desk-scale (well under order 100), so everything is
//! computed directly from the Cayley table; quotient groups materialize
//! coset tables rather than working with transversals.

use thiserror::Error;

use crate::tables::{naive_associativity, OpTable, TableError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error(transparent)]
    Table(#[from] TableError),
    #[error("associativity fails at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("element {0} is not a two-sided identity")]
    BadIdentity(usize),
    #[error("element {0} has no two-sided inverse")]
    NoInverse(usize),
    #[error("unknown builtin group {0:?}")]
    UnknownBuiltin(String),
    #[error("subgroup is not normal: conjugation by {0} leaves it")]
    NotNormal(usize),
}

/// A finite group presented by its Cayley table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    pub labels: Vec<String>,
    pub cayley: OpTable,
    pub identity: usize,
}

impl FiniteGroup {
    pub fn new(labels: Vec<String>, cayley: OpTable, identity: usize) -> Result<Self, GroupError> {
        if identity >= cayley.order() {
            return Err(GroupError::Table(TableError::IndexOutOfRange(identity, cayley.order())));
        }
        if labels.len() != cayley.order() {
            return Err(GroupError::Table(TableError::LabelCount {
                expected: cayley.order(),
                got: labels.len(),
            }));
        }
        Ok(FiniteGroup { labels, cayley, identity })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.cayley.order()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.cayley.apply(a, b)
    }

    pub fn inv(&self, a: usize) -> usize {
        (0..self.order())
            .find(|&b| self.mul(a, b) == self.identity && self.mul(b, a) == self.identity)
            .expect("validated group element must have an inverse")
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        // g^{-1} x g
        self.mul(self.mul(self.inv(g), x), g)
    }
}

/// Exhaustive check of all group axioms.
pub fn validate_group(g: &FiniteGroup) -> Result<(), GroupError> {
    if let crate::tables::Associativity::Fails { x, y, z } = naive_associativity(&g.cayley) {
        return Err(GroupError::NotAssociative(x, y, z));
    }
    let e = g.identity;
    let n = g.order();
    if (0..n).any(|x| g.mul(e, x) != x || g.mul(x, e) != x) {
        return Err(GroupError::BadIdentity(e));
    }
    for x in 0..n {
        if !(0..n).any(|y| g.mul(x, y) == e && g.mul(y, x) == e) {
            return Err(GroupError::NoInverse(x));
        }
    }
    Ok(())
}

/// A conjugacy class: representative plus the full (sorted) member set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub representative: usize,
    pub members: Vec<usize>,
}

/// Conjugacy classes, ordered by minimal member index; together they
/// partition the carrier.
pub fn conjugacy_classes(g: &FiniteGroup) -> Vec<ConjugacyClass> {
    let n = g.order();
    let mut assigned = vec![false; n];
    let mut classes = Vec::new();
    for r in 0..n {
        if assigned[r] {
            continue;
        }
        let mut members: Vec<usize> = (0..n).map(|c| g.conjugate(c, r)).collect();
        members.sort_unstable();
        members.dedup();
        for &m in &members {
            assigned[m] = true;
        }
        classes.push(ConjugacyClass { representative: r, members });
    }
    classes
}

/// Elements commuting with the whole group.
pub fn group_center(g: &FiniteGroup) -> Vec<usize> {
    let n = g.order();
    (0..n).filter(|&z| (0..n).all(|x| g.mul(z, x) == g.mul(x, z))).collect()
}

/// Subgroup generated by all commutators `x^{-1} y^{-1} x y`.
pub fn commutator_subgroup(g: &FiniteGroup) -> Vec<usize> {
    let n = g.order();
    let mut seeds = vec![g.identity];
    for x in 0..n {
        for y in 0..n {
            seeds.push(g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y)));
        }
    }
    // in a finite group, closure under the product is already a subgroup
    g.cayley.closure(&seeds)
}

/// Quotient of `g` by a normal subgroup, as a coset Cayley table. Returns
/// the quotient group and the coset index of each element.
pub fn quotient(g: &FiniteGroup, normal: &[usize]) -> Result<(FiniteGroup, Vec<usize>), GroupError> {
    let n = g.order();
    let in_normal = {
        let mut v = vec![false; n];
        for &x in normal {
            v[x] = true;
        }
        v
    };
    // normality: g^{-1} N g = N for every g
    for c in 0..n {
        for &x in normal {
            if !in_normal[g.conjugate(c, x)] {
                return Err(GroupError::NotNormal(c));
            }
        }
    }
    let mut coset_of = vec![usize::MAX; n];
    let mut reps: Vec<usize> = Vec::new();
    for x in 0..n {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let idx = reps.len();
        reps.push(x);
        for &h in normal {
            coset_of[g.mul(x, h)] = idx;
        }
    }
    let q = reps.len();
    let table = OpTable::from_fn(q, |i, j| coset_of[g.mul(reps[i], reps[j])])?;
    let labels = reps.iter().map(|&r| format!("[{}]", g.labels[r])).collect();
    let qg = FiniteGroup::new(labels, table, coset_of[g.identity])?;
    Ok((qg, coset_of))
}

/// Ascending central series `{e} = C0 <= C1 <= ...` until it stabilizes;
/// each `C_{i+1}` is the preimage of the center of `G / C_i`.
pub fn upper_central_series(g: &FiniteGroup) -> Vec<Vec<usize>> {
    let mut chain: Vec<Vec<usize>> = vec![vec![g.identity]];
    loop {
        let current = chain.last().unwrap();
        let (q, coset_of) = quotient(g, current).expect("central subgroups are normal");
        let qcenter = group_center(&q);
        let mut next: Vec<usize> =
            (0..g.order()).filter(|&x| qcenter.contains(&coset_of[x])).collect();
        next.sort_unstable();
        if next.len() == current.len() {
            return chain;
        }
        chain.push(next);
        if chain.last().unwrap().len() == g.order() {
            return chain;
        }
    }
}

/// Nilpotence class, or `NotNilpotent` when the upper central series
/// stalls below the whole group. Not-nilpotent is a result, not an error.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Nilpotence {
    Class(usize),
    NotNilpotent,
}

pub fn nilpotence_class(g: &FiniteGroup) -> Nilpotence {
    let chain = upper_central_series(g);
    if chain.last().unwrap().len() == g.order() {
        Nilpotence::Class(chain.len() - 1)
    } else {
        Nilpotence::NotNilpotent
    }
}

/// Builtin groups by name: `q8`, cyclic `c<n>`, dihedral `d<2n>` (the
/// number is the group order).
pub fn builtin_group(name: &str) -> Result<FiniteGroup, GroupError> {
    let t = name.trim().to_ascii_lowercase();
    if t == "q8" {
        return Ok(quaternion_group());
    }
    if let Some(n) = t.strip_prefix('c') {
        if let Ok(n) = n.parse::<usize>() {
            if n >= 1 {
                return Ok(cyclic_group(n));
            }
        }
    }
    if let Some(k) = t.strip_prefix('d') {
        if let Ok(k) = k.parse::<usize>() {
            if k >= 2 && k % 2 == 0 {
                return Ok(dihedral_group(k));
            }
        }
    }
    Err(GroupError::UnknownBuiltin(name.to_string()))
}

/// The quaternion group of order 8 with labels
/// `e, a, a^2, a^3, b, ab, a^2b, a^3b`, satisfying `a^4 = e`,
/// `a^2 = b^2`, and `a b a^{-1} = b^{-1}`.
pub fn quaternion_group() -> FiniteGroup {
    // element (i, j) = a^i b^j with i mod 4, j mod 2;
    // b a^k = a^{-k} b and b^2 = a^2.
    let idx = |i: usize, j: usize| -> usize {
        if j == 0 {
            i % 4
        } else {
            4 + (i % 4)
        }
    };
    let parts = |x: usize| -> (usize, usize) {
        if x < 4 {
            (x, 0)
        } else {
            (x - 4, 1)
        }
    };
    let table = OpTable::from_fn(8, |x, y| {
        let (i, j) = parts(x);
        let (k, l) = parts(y);
        let mut exp = if j == 0 { i + k } else { i + 4 - (k % 4) };
        if j == 1 && l == 1 {
            exp += 2; // b^2 = a^2
        }
        idx(exp % 4, (j + l) % 2)
    })
    .expect("q8 table is well formed");
    let labels = ["e", "a", "a^2", "a^3", "b", "ab", "a^2b", "a^3b"].map(String::from).to_vec();
    FiniteGroup::new(labels, table, 0).expect("q8 is a group")
}

pub fn cyclic_group(n: usize) -> FiniteGroup {
    let table = OpTable::from_fn(n, |i, j| (i + j) % n).expect("cyclic table");
    let labels = (0..n)
        .map(|i| match i {
            0 => "e".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{i}"),
        })
        .collect();
    FiniteGroup::new(labels, table, 0).expect("cyclic group")
}

/// Dihedral group of order `2n`, elements `r^i s^j`.
pub fn dihedral_group(order: usize) -> FiniteGroup {
    assert!(order >= 2 && order % 2 == 0, "dihedral order must be even");
    let n = order / 2;
    let table = OpTable::from_fn(order, |x, y| {
        let (i, j) = (x % n, x / n);
        let (k, l) = (y % n, y / n);
        let exp = if j == 0 { i + k } else { i + n - (k % n) };
        (exp % n) + n * ((j + l) % 2)
    })
    .expect("dihedral table");
    let labels = (0..order)
        .map(|x| {
            let (i, j) = (x % n, x / n);
            match (i, j) {
                (0, 0) => "e".to_string(),
                (1, 0) => "r".to_string(),
                (_, 0) => format!("r^{i}"),
                (0, _) => "s".to_string(),
                (1, _) => "rs".to_string(),
                (_, _) => format!("r^{i}s"),
            }
        })
        .collect();
    FiniteGroup::new(labels, table, 0).expect("dihedral group")
}
