//! Builds semirings from other objects: power sets of semigroups, matrix
//! semirings over finite coefficient domains, rings of differences, and
//! finite group rings, plus exact symbolic matrices for witness checks on
//! infinite carriers.

use thiserror::Error;

use crate::analysis::is_additively_cancellative;
use crate::arith::{coeff_add, coeff_mul, ArithError, Coeff, CoeffDomain};
use crate::groups::FiniteGroup;
use crate::tables::{naive_associativity, Associativity, FiniteMagma, FiniteSemiring, OpTable, TableError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("base operation is not associative at ({0}, {1}, {2})")]
    BaseNotAssociative(usize, usize, usize),
    #[error("base has no absorbing zero element")]
    BaseMissingZero,
    #[error("base has no two-sided identity")]
    BaseMissingIdentity,
    #[error("base zero and identity coincide")]
    DegenerateBase,
    #[error("base order {order} exceeds the bound {max}")]
    BaseTooLarge { order: usize, max: usize },
    #[error("materialized order {needed} exceeds the bound {max}")]
    SizeBound { needed: u128, max: u128 },
    #[error("not additively cancellative: ({0} + {2}) = ({1} + {2}) with {0} != {1}")]
    NotAdditivelyCancellative(String, String, String),
    #[error("entry at ({row}, {col}) violates the declared shape")]
    ShapeViolation { row: usize, col: usize },
    #[error("matrix sizes differ: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Table(#[from] TableError),
}

/// Largest base magma the power-set construction accepts (output order is
/// `2^order`).
pub const SUBSET_BASE_MAX: usize = 16;

/// Largest materialized carrier for matrix semirings and group rings.
pub const MATERIALIZE_MAX: u128 = 1 << 16;

/// The power-set semiring of a finite semigroup with absorbing zero and
/// two-sided identity: subsets under union and setwise product, with
/// `zero = {}` and `one = {identity}`. Elements are bitmasks over the
/// base carrier.
pub fn subset_semiring(m: &FiniteMagma) -> Result<FiniteSemiring, ConstructError> {
    let n = m.order();
    if n > SUBSET_BASE_MAX {
        return Err(ConstructError::BaseTooLarge { order: n, max: SUBSET_BASE_MAX });
    }
    if let Associativity::Fails { x, y, z } = naive_associativity(&m.table) {
        return Err(ConstructError::BaseNotAssociative(x, y, z));
    }
    let zero = m.find_zero().ok_or(ConstructError::BaseMissingZero)?;
    let identity = m.find_identity().ok_or(ConstructError::BaseMissingIdentity)?;
    if zero == identity {
        return Err(ConstructError::DegenerateBase);
    }

    let order = 1usize << n;
    // product of a single base element with a subset mask
    let mut row_prod = vec![vec![0u32; order]; n];
    for (a, row) in row_prod.iter_mut().enumerate() {
        for mask in 1..order {
            let low = mask.trailing_zeros() as usize;
            row[mask] = row[mask & (mask - 1)] | (1u32 << m.table.apply(a, low));
        }
    }
    let mul = OpTable::from_fn(order, |x, y| {
        let mut acc = 0u32;
        let mut rest = x;
        while rest != 0 {
            let a = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            acc |= row_prod[a][y];
        }
        acc as usize
    })?;
    let add = OpTable::from_fn(order, |x, y| x | y)?;
    let labels = (0..order)
        .map(|mask| {
            let parts: Vec<&str> = (0..n)
                .filter(|&i| mask & (1 << i) != 0)
                .map(|i| m.labels[i].as_str())
                .collect();
            format!("{{{}}}", parts.join(","))
        })
        .collect();
    Ok(FiniteSemiring::new(labels, add, mul, 0, 1 << identity)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixShape {
    Full,
    UpperTriangular,
}

fn free_positions(size: usize, shape: MatrixShape) -> Vec<(usize, usize)> {
    let mut v = Vec::new();
    for i in 0..size {
        for j in 0..size {
            if shape == MatrixShape::Full || j >= i {
                v.push((i, j));
            }
        }
    }
    v
}

/// The semiring of `size x size` matrices (full or upper triangular) over
/// `Z/m`, materialized as operation tables. Entrywise addition, matrix
/// multiplication, `zero` the zero matrix and `one` the identity.
pub fn matrix_semiring(
    modulus: u64,
    size: usize,
    shape: MatrixShape,
) -> Result<FiniteSemiring, ConstructError> {
    let positions = free_positions(size, shape);
    let mut needed: u128 = 1;
    for _ in &positions {
        needed = needed.saturating_mul(modulus as u128);
        if needed > MATERIALIZE_MAX {
            return Err(ConstructError::SizeBound { needed, max: MATERIALIZE_MAX });
        }
    }
    let order = needed as usize;
    let m = modulus as usize;

    let decode = |idx: usize| -> Vec<Vec<usize>> {
        let mut grid = vec![vec![0usize; size]; size];
        let mut rest = idx;
        for &(i, j) in &positions {
            grid[i][j] = rest % m;
            rest /= m;
        }
        grid
    };
    let encode = |grid: &[Vec<usize>]| -> usize {
        let mut idx = 0usize;
        for &(i, j) in positions.iter().rev() {
            idx = idx * m + grid[i][j];
        }
        idx
    };

    let add = OpTable::from_fn(order, |x, y| {
        let (a, b) = (decode(x), decode(y));
        let mut sum = vec![vec![0usize; size]; size];
        for i in 0..size {
            for j in 0..size {
                sum[i][j] = (a[i][j] + b[i][j]) % m;
            }
        }
        encode(&sum)
    })?;
    let mul = OpTable::from_fn(order, |x, y| {
        let (a, b) = (decode(x), decode(y));
        let mut prod = vec![vec![0usize; size]; size];
        for i in 0..size {
            for j in 0..size {
                let mut acc = 0usize;
                for (k, a_row) in a[i].iter().enumerate() {
                    acc = (acc + a_row * b[k][j]) % m;
                }
                prod[i][j] = acc;
            }
        }
        encode(&prod)
    })?;
    let labels = (0..order)
        .map(|idx| {
            let grid = decode(idx);
            let rows: Vec<String> = grid
                .iter()
                .map(|r| {
                    let cells: Vec<String> = r.iter().map(|v| v.to_string()).collect();
                    format!("[{}]", cells.join(","))
                })
                .collect();
            format!("[{}]", rows.join(","))
        })
        .collect();
    let mut one_grid = vec![vec![0usize; size]; size];
    for (i, row) in one_grid.iter_mut().enumerate() {
        row[i] = 1 % m;
    }
    let one = encode(&one_grid);
    Ok(FiniteSemiring::new(labels, add, mul, 0, one)?)
}

/// Index of the matrix unit `E[rc]` in a materialized matrix semiring.
pub fn matrix_unit_index(
    modulus: u64,
    size: usize,
    shape: MatrixShape,
    row: usize,
    col: usize,
) -> usize {
    let positions = free_positions(size, shape);
    let m = modulus as usize;
    let mut idx = 0usize;
    for &(i, j) in positions.iter().rev() {
        idx = idx * m + usize::from(i == row && j == col);
    }
    idx
}

/// An exact matrix over one of the coefficient domains, for element-level
/// witness checks on semirings whose carrier is infinite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixElement {
    size: usize,
    shape: MatrixShape,
    entries: Vec<Coeff>,
}

impl MatrixElement {
    /// Build from row-major entries; the shape flag is enforced (entries
    /// below the diagonal must be zero for upper triangular).
    pub fn new(
        size: usize,
        shape: MatrixShape,
        entries: Vec<Coeff>,
    ) -> Result<Self, ConstructError> {
        assert_eq!(entries.len(), size * size, "entry count must be size^2");
        let domain = entries[0].domain();
        for e in &entries {
            if e.domain() != domain {
                return Err(ConstructError::Arith(ArithError::DomainMismatch(
                    domain.to_string(),
                    e.domain().to_string(),
                )));
            }
        }
        if shape == MatrixShape::UpperTriangular {
            for i in 0..size {
                for j in 0..i {
                    if !entries[i * size + j].is_zero() {
                        return Err(ConstructError::ShapeViolation { row: i, col: j });
                    }
                }
            }
        }
        Ok(MatrixElement { size, shape, entries })
    }

    /// Convenience constructor from unsigned integer rows.
    pub fn from_rows(
        domain: CoeffDomain,
        shape: MatrixShape,
        rows: &[&[u64]],
    ) -> Result<Self, ConstructError> {
        let size = rows.len();
        let mut entries = Vec::with_capacity(size * size);
        for row in rows {
            assert_eq!(row.len(), size, "rows must be square");
            for &v in *row {
                entries.push(domain.from_u64(v));
            }
        }
        MatrixElement::new(size, shape, entries)
    }

    pub fn zero(domain: CoeffDomain, size: usize, shape: MatrixShape) -> Self {
        let entries = vec![domain.zero(); size * size];
        MatrixElement { size, shape, entries }
    }

    pub fn identity(domain: CoeffDomain, size: usize, shape: MatrixShape) -> Self {
        Self::scalar(domain, size, shape, &domain.one())
    }

    pub fn scalar(domain: CoeffDomain, size: usize, shape: MatrixShape, c: &Coeff) -> Self {
        let mut m = Self::zero(domain, size, shape);
        for i in 0..size {
            m.entries[i * size + i] = c.clone();
        }
        m
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn shape(&self) -> MatrixShape {
        self.shape
    }

    pub fn get(&self, i: usize, j: usize) -> &Coeff {
        &self.entries[i * self.size + j]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Coeff::is_zero)
    }

    fn join_shape(&self, rhs: &Self) -> MatrixShape {
        if self.shape == MatrixShape::UpperTriangular && rhs.shape == MatrixShape::UpperTriangular
        {
            MatrixShape::UpperTriangular
        } else {
            MatrixShape::Full
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, ConstructError> {
        if self.size != rhs.size {
            return Err(ConstructError::SizeMismatch(self.size, rhs.size));
        }
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| coeff_add(a, b))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(MatrixElement { size: self.size, shape: self.join_shape(rhs), entries })
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, ConstructError> {
        if self.size != rhs.size {
            return Err(ConstructError::SizeMismatch(self.size, rhs.size));
        }
        let n = self.size;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = self.entries[0].domain().zero();
                for k in 0..n {
                    acc = coeff_add(&acc, &coeff_mul(self.get(i, k), rhs.get(k, j))?)?;
                }
                entries.push(acc);
            }
        }
        Ok(MatrixElement { size: n, shape: self.join_shape(rhs), entries })
    }

    pub fn render(&self) -> String {
        let rows: Vec<String> = (0..self.size)
            .map(|i| {
                let cells: Vec<String> =
                    (0..self.size).map(|j| self.get(i, j).to_string()).collect();
                format!("[{}]", cells.join(","))
            })
            .collect();
        format!("[{}]", rows.join(","))
    }
}

/// Validated exact-arithmetic matrix; the public constructor for witness
/// checks over symbolic (infinite) matrix semirings.
pub fn symbolic_matrix(
    entries: Vec<Coeff>,
    size: usize,
    shape: MatrixShape,
) -> Result<MatrixElement, ConstructError> {
    MatrixElement::new(size, shape, entries)
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        // keep the smaller index as representative
        if ra < rb {
            self.parent[rb] = ra;
        } else if rb < ra {
            self.parent[ra] = rb;
        }
    }
}

/// Ring of differences of an additively cancellative finite semiring:
/// the quotient of pairs `(pos, neg)` by `(a,b) ~ (c,d) iff a+d = b+c`,
/// with `(a,b)+(c,d) = (a+c, b+d)` and `(a,b)(c,d) = (ac+bd, ad+bc)`.
/// Returns the quotient semiring (a ring: every element gains an additive
/// inverse) and the embedding `x -> class of (x, 0)`.
pub fn difference_ring(
    s: &FiniteSemiring,
) -> Result<(FiniteSemiring, Vec<usize>), ConstructError> {
    let cancel = is_additively_cancellative(s);
    if !cancel.verdict {
        let labels = match cancel.witness {
            Some(crate::report::Witness::Elements { labels }) => labels,
            _ => vec![String::new(), String::new(), String::new()],
        };
        return Err(ConstructError::NotAdditivelyCancellative(
            labels[0].clone(),
            labels[1].clone(),
            labels[2].clone(),
        ));
    }
    let n = s.order();
    let pair = |a: usize, b: usize| a * n + b;
    // shifts (a,b) ~ (a+c, b+c) generate the whole relation under
    // cancellativity: any two related pairs meet after two shifts
    let mut uf = UnionFind::new(n * n);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                uf.union(pair(a, b), pair(s.add(a, c), s.add(b, c)));
            }
        }
    }
    let mut class_index: Vec<Option<usize>> = vec![None; n * n];
    let mut reps: Vec<(usize, usize)> = Vec::new();
    for p in 0..n * n {
        if uf.find(p) == p {
            class_index[p] = Some(reps.len());
            reps.push((p / n, p % n));
        }
    }
    let order = reps.len();
    let class_of = |a: usize, b: usize, uf: &mut UnionFind| -> usize {
        class_index[uf.find(pair(a, b))].expect("roots are indexed")
    };
    let mut add_entries = Vec::with_capacity(order * order);
    let mut mul_entries = Vec::with_capacity(order * order);
    for &(a, b) in &reps {
        for &(c, d) in &reps {
            add_entries.push(class_of(s.add(a, c), s.add(b, d), &mut uf));
            let pos = s.add(s.mul(a, c), s.mul(b, d));
            let neg = s.add(s.mul(a, d), s.mul(b, c));
            mul_entries.push(class_of(pos, neg, &mut uf));
        }
    }
    let labels: Vec<String> = reps
        .iter()
        .map(|&(a, b)| {
            if b == s.zero {
                s.label(a).to_string()
            } else {
                format!("{}-{}", s.label(a), s.label(b))
            }
        })
        .collect();
    let zero = class_of(s.zero, s.zero, &mut uf);
    let one = class_of(s.one, s.zero, &mut uf);
    let embedding: Vec<usize> = (0..n).map(|x| class_of(x, s.zero, &mut uf)).collect();
    let add = OpTable::new(order, add_entries)?;
    let mul = OpTable::new(order, mul_entries)?;
    let ring = FiniteSemiring::new(labels, add, mul, zero, one)?;
    Ok((ring, embedding))
}

/// The group ring over `Z/m`, materialized as a table semiring on formal
/// sums with the convolution product.
pub fn finite_group_ring(
    group: &FiniteGroup,
    modulus: u64,
) -> Result<FiniteSemiring, ConstructError> {
    let g = group.order();
    let mut needed: u128 = 1;
    for _ in 0..g {
        needed = needed.saturating_mul(modulus as u128);
        if needed > MATERIALIZE_MAX {
            return Err(ConstructError::SizeBound { needed, max: MATERIALIZE_MAX });
        }
    }
    let order = needed as usize;
    let m = modulus as usize;

    let decode = |idx: usize| -> Vec<usize> {
        let mut coeffs = vec![0usize; g];
        let mut rest = idx;
        for c in coeffs.iter_mut() {
            *c = rest % m;
            rest /= m;
        }
        coeffs
    };
    let encode = |coeffs: &[usize]| -> usize {
        let mut idx = 0usize;
        for &c in coeffs.iter().rev() {
            idx = idx * m + c;
        }
        idx
    };

    let add = OpTable::from_fn(order, |x, y| {
        let (a, b) = (decode(x), decode(y));
        let sum: Vec<usize> = a.iter().zip(&b).map(|(p, q)| (p + q) % m).collect();
        encode(&sum)
    })?;
    let mul = OpTable::from_fn(order, |x, y| {
        let (a, b) = (decode(x), decode(y));
        let mut prod = vec![0usize; g];
        for (i, &ca) in a.iter().enumerate() {
            if ca == 0 {
                continue;
            }
            for (j, &cb) in b.iter().enumerate() {
                if cb == 0 {
                    continue;
                }
                let k = group.mul(i, j);
                prod[k] = (prod[k] + ca * cb) % m;
            }
        }
        encode(&prod)
    })?;
    let labels = (0..order)
        .map(|idx| {
            let coeffs = decode(idx);
            let terms: Vec<String> = coeffs
                .iter()
                .enumerate()
                .filter(|&(_, &c)| c != 0)
                .map(|(i, &c)| {
                    if c == 1 {
                        group.labels[i].clone()
                    } else {
                        format!("{}{}", c, group.labels[i])
                    }
                })
                .collect();
            if terms.is_empty() {
                "0".to_string()
            } else {
                terms.join("+")
            }
        })
        .collect();
    let one = encode(
        &(0..g).map(|i| usize::from(i == group.identity)).collect::<Vec<_>>(),
    );
    Ok(FiniteSemiring::new(labels, add, mul, 0, one)?)
}

/// Index of the formal sum with the given coefficients in a materialized
/// group ring.
pub fn group_ring_index(modulus: u64, coeffs: &[u64]) -> usize {
    let m = modulus as usize;
    let mut idx = 0usize;
    for &c in coeffs.iter().rev() {
        idx = idx * m + (c as usize % m);
    }
    idx
}
