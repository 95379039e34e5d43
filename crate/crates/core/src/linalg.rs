//! Exact linear algebra over the rationals and over prime fields.
//!
//! The forward phase is fraction-free (Bareiss) after clearing row
//! denominators, so rational matrices stay integral until the final
//! normalization; prime-field matrices use the same pivoting with modular
//! inverses. There are no pivot tolerances because arithmetic is exact.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use thiserror::Error;

use crate::arith::{
    coeff_add, coeff_checked_sub, coeff_mul, ArithError, Coeff, CoeffDomain, Natural,
    NonNegRational, Rational,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinAlgError {
    #[error("domain {0} is not a field")]
    NotAField(CoeffDomain),
    #[error("expected {expected} entries, got {got}")]
    Shape { expected: usize, got: usize },
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// Dense matrix over an exact field (`q` or `f<p>`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldMatrix {
    domain: CoeffDomain,
    rows: usize,
    cols: usize,
    data: Vec<Coeff>,
}

fn c_add(a: &Coeff, b: &Coeff) -> Coeff {
    coeff_add(a, b).expect("uniform field domain")
}

fn c_sub(a: &Coeff, b: &Coeff) -> Coeff {
    coeff_checked_sub(a, b).expect("uniform field domain").expect("field subtraction is total")
}

fn c_mul(a: &Coeff, b: &Coeff) -> Coeff {
    coeff_mul(a, b).expect("uniform field domain")
}

fn c_div(a: &Coeff, b: &Coeff) -> Coeff {
    match (a, b) {
        (Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x.div(y).expect("nonzero divisor")),
        (Coeff::Mod(x), Coeff::Mod(y)) => {
            let inv = y.inv().expect("nonzero divisor in a prime field");
            Coeff::Mod(x.mul(&inv).expect("same modulus"))
        }
        _ => unreachable!("matrix entries come from one field"),
    }
}

fn c_neg(domain: &CoeffDomain, a: &Coeff) -> Coeff {
    c_sub(&domain.zero(), a)
}

impl FieldMatrix {
    pub fn new(
        domain: CoeffDomain,
        rows: usize,
        cols: usize,
        data: Vec<Coeff>,
    ) -> Result<Self, LinAlgError> {
        if !domain.is_field() {
            return Err(LinAlgError::NotAField(domain));
        }
        if data.len() != rows * cols {
            return Err(LinAlgError::Shape { expected: rows * cols, got: data.len() });
        }
        for c in &data {
            if c.domain() != domain {
                return Err(LinAlgError::Arith(ArithError::DomainMismatch(
                    domain.to_string(),
                    c.domain().to_string(),
                )));
            }
        }
        Ok(FieldMatrix { domain, rows, cols, data })
    }

    pub fn from_rows(domain: CoeffDomain, rows: Vec<Vec<Coeff>>) -> Result<Self, LinAlgError> {
        let r = rows.len();
        let c = rows.first().map(|v| v.len()).unwrap_or(0);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(LinAlgError::Shape { expected: c, got: row.len() });
            }
            data.extend(row);
        }
        FieldMatrix::new(domain, r, c, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Coeff {
        &self.data[i * self.cols + j]
    }

    fn set(&mut self, i: usize, j: usize, v: Coeff) {
        self.data[i * self.cols + j] = v;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Multiply every rational row by the lcm of its denominators so the
    /// fraction-free phase works on integers. Row scaling changes neither
    /// the row space nor the nullspace.
    fn clear_denominators(&mut self) {
        if self.domain != CoeffDomain::Rationals {
            return;
        }
        for i in 0..self.rows {
            let mut lcm = BigUint::one();
            for j in 0..self.cols {
                if let Coeff::Rat(r) = self.get(i, j) {
                    if !r.is_zero() {
                        lcm = lcm.lcm(r.magnitude().den().magnitude());
                    }
                }
            }
            if lcm.is_one() {
                continue;
            }
            let scale = Coeff::Rat(Rational::from_nonneg(
                NonNegRational::new(Natural::from(lcm), Natural::one()).expect("nonzero"),
            ));
            for j in 0..self.cols {
                let v = c_mul(self.get(i, j), &scale);
                self.set(i, j, v);
            }
        }
    }

    /// Reduced row echelon form with the pivot column list.
    pub fn rref(&self) -> (FieldMatrix, Vec<usize>) {
        let mut m = self.clone();
        m.clear_denominators();
        let zero = m.domain.zero();
        let mut pivots: Vec<usize> = Vec::new();
        let mut prev = m.domain.one();
        let mut r = 0;
        // fraction-free forward elimination
        for c in 0..m.cols {
            let Some(p) = (r..m.rows).find(|&i| *m.get(i, c) != zero) else {
                continue;
            };
            m.swap_rows(r, p);
            let pivot = m.get(r, c).clone();
            for i in (r + 1)..m.rows {
                let factor = m.get(i, c).clone();
                for j in 0..m.cols {
                    let num = c_sub(
                        &c_mul(&pivot, m.get(i, j)),
                        &c_mul(&factor, m.get(r, j)),
                    );
                    m.set(i, j, c_div(&num, &prev));
                }
            }
            pivots.push(c);
            prev = pivot;
            r += 1;
            if r == m.rows {
                break;
            }
        }
        // normalize pivot rows and eliminate upward (exact division)
        for (row, &col) in pivots.iter().enumerate().rev() {
            let pivot = m.get(row, col).clone();
            for j in 0..m.cols {
                let v = c_div(m.get(row, j), &pivot);
                m.set(row, j, v);
            }
            for above in 0..row {
                let factor = m.get(above, col).clone();
                if factor == zero {
                    continue;
                }
                for j in 0..m.cols {
                    let v = c_sub(m.get(above, j), &c_mul(&factor, m.get(row, j)));
                    m.set(above, j, v);
                }
            }
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the solution space of `M x = 0`, one vector per free
    /// column, in canonical reduced form.
    pub fn nullspace(&self) -> Vec<Vec<Coeff>> {
        let (m, pivots) = self.rref();
        let zero = self.domain.zero();
        let one = self.domain.one();
        let is_pivot: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (row, &col) in pivots.iter().enumerate() {
                v[col] = Some(row);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free].is_some() {
                continue;
            }
            let mut vec = vec![zero.clone(); self.cols];
            vec[free] = one.clone();
            for (row, &col) in pivots.iter().enumerate() {
                vec[col] = c_neg(&self.domain, m.get(row, free));
            }
            basis.push(vec);
        }
        basis
    }
}

/// Whether `v` lies in the span of `basis` (all over the same field).
pub fn in_span(domain: CoeffDomain, basis: &[Vec<Coeff>], v: &[Coeff]) -> bool {
    if v.iter().all(|c| c.is_zero()) {
        return true;
    }
    if basis.is_empty() {
        return false;
    }
    let base = FieldMatrix::from_rows(domain, basis.to_vec()).expect("basis rows");
    let mut rows = basis.to_vec();
    rows.push(v.to_vec());
    let stacked = FieldMatrix::from_rows(domain, rows).expect("stacked rows");
    base.rank() == stacked.rank()
}

/// Dot-free convenience: `a + b` componentwise.
pub fn vec_add(a: &[Coeff], b: &[Coeff]) -> Vec<Coeff> {
    a.iter().zip(b).map(|(x, y)| c_add(x, y)).collect()
}

/// `a - b` componentwise (fields only).
pub fn vec_sub(a: &[Coeff], b: &[Coeff]) -> Vec<Coeff> {
    a.iter().zip(b).map(|(x, y)| c_sub(x, y)).collect()
}

pub fn vec_is_zero(a: &[Coeff]) -> bool {
    a.iter().all(Coeff::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qm(rows: &[&[i64]]) -> FieldMatrix {
        let data: Vec<Coeff> =
            rows.iter().flat_map(|r| r.iter().map(|&v| Coeff::Rat(Rational::from_i64(v)))).collect();
        FieldMatrix::new(CoeffDomain::Rationals, rows.len(), rows[0].len(), data).unwrap()
    }

    #[test]
    fn rank_and_rref_over_q() {
        let m = qm(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let (r, pivots) = m.rref();
        assert_eq!(pivots, vec![0, 1]);
        // row 0 becomes [1, 0, 1]
        assert_eq!(*r.get(0, 0), Coeff::Rat(Rational::from_i64(1)));
        assert_eq!(*r.get(0, 2), Coeff::Rat(Rational::from_i64(1)));
    }

    #[test]
    fn nullspace_over_q_solves_exactly() {
        let m = qm(&[&[1, 2, 3], &[2, 4, 6]]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            // check M v = 0
            for i in 0..m.rows() {
                let mut acc = CoeffDomain::Rationals.zero();
                for j in 0..m.cols() {
                    acc = c_add(&acc, &c_mul(m.get(i, j), &v[j]));
                }
                assert!(acc.is_zero());
            }
        }
    }

    #[test]
    fn fractional_entries_are_handled() {
        let half = Coeff::Rat("1/2".parse::<Rational>().unwrap());
        let third = Coeff::Rat("1/3".parse::<Rational>().unwrap());
        let one = CoeffDomain::Rationals.one();
        let m = FieldMatrix::new(
            CoeffDomain::Rationals,
            2,
            2,
            vec![half.clone(), one.clone(), third, c_mul(&half, &half)],
        )
        .unwrap();
        // det = 1/8 - 1/3 != 0
        assert_eq!(m.rank(), 2);
        assert!(m.nullspace().is_empty());
    }

    #[test]
    fn nullspace_over_f2() {
        let f2 = CoeffDomain::Modular(2);
        let data: Vec<Coeff> = [1u64, 1, 0, 1, 1, 0].iter().map(|&v| f2.from_u64(v)).collect();
        let m = FieldMatrix::new(f2, 3, 2, data).unwrap();
        // rows: [1,1], [0,1], [1,0] -> full column rank
        assert_eq!(m.rank(), 2);
        assert!(m.nullspace().is_empty());
        let wide = FieldMatrix::new(
            f2,
            1,
            3,
            vec![f2.from_u64(1), f2.from_u64(1), f2.from_u64(0)],
        )
        .unwrap();
        let ns = wide.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            let mut acc = f2.zero();
            for (j, c) in v.iter().enumerate() {
                acc = c_add(&acc, &c_mul(wide.get(0, j), c));
            }
            assert!(acc.is_zero());
        }
    }

    #[test]
    fn span_membership() {
        let q = CoeffDomain::Rationals;
        let e = |v: &[i64]| -> Vec<Coeff> {
            v.iter().map(|&x| Coeff::Rat(Rational::from_i64(x))).collect()
        };
        let basis = vec![e(&[1, 0, 1]), e(&[0, 1, 1])];
        assert!(in_span(q, &basis, &e(&[2, 3, 5])));
        assert!(!in_span(q, &basis, &e(&[1, 0, 0])));
        assert!(in_span(q, &basis, &e(&[0, 0, 0])));
        assert!(!in_span(q, &[], &e(&[1])));
    }

    #[test]
    fn non_field_domain_rejected() {
        assert!(matches!(
            FieldMatrix::new(CoeffDomain::Naturals, 1, 1, vec![CoeffDomain::Naturals.one()]),
            Err(LinAlgError::NotAField(_))
        ));
        assert!(matches!(
            FieldMatrix::new(CoeffDomain::Modular(4), 1, 1, vec![CoeffDomain::Modular(4).one()]),
            Err(LinAlgError::NotAField(_))
        ));
    }
}
