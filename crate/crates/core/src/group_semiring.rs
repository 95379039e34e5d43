//! Symbolic group semirings over abstract coefficient domains, class
//! sums, the nilpotence-class-2 centrality certificate, and exact
//! linear-algebra analysis of group algebras over fields.
//!
//! Centrality for infinite group semirings is certified through the
//! class-sum argument, never decided by quantifying over the carrier;
//! everything probabilistic is a seeded probe whose outcome is reported
//! as such.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::arith::{
    coeff_add, coeff_checked_sub, coeff_mul, descriptor_of, ArithError, Coeff, CoeffDomain,
    NonNegRational, Rational,
};
use crate::groups::{
    conjugacy_classes, group_center, nilpotence_class, ConjugacyClass, FiniteGroup, Nilpotence,
};
use crate::linalg::{vec_is_zero, vec_sub, FieldMatrix, LinAlgError};
use crate::rng::SplitMix64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GsError {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
    #[error("coefficient domain {domain} lacks required flag: {flag}")]
    CoefficientHypotheses { domain: CoeffDomain, flag: &'static str },
    #[error("operation requires coefficient domain N or Q+, got {0}")]
    UnsupportedDomain(CoeffDomain),
    #[error("{0} must be nonzero")]
    ZeroArgument(&'static str),
    #[error("basis products are not associative at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("class-sum product for {0} failed the centrality check")]
    IdentityCheckFailed(String),
    #[error("cannot parse {0:?} as a formal sum")]
    Parse(String),
}

/// A finite-support formal sum of group elements with coefficients in a
/// fixed domain. Zero coefficients are never stored, so equality is
/// structural.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GsElement {
    domain: CoeffDomain,
    terms: BTreeMap<usize, Coeff>,
}

impl GsElement {
    pub fn zero(domain: CoeffDomain) -> Self {
        GsElement { domain, terms: BTreeMap::new() }
    }

    /// The single-term element `1 * g`.
    pub fn basis(domain: CoeffDomain, g: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(g, domain.one());
        GsElement { domain, terms }
    }

    pub fn from_terms(
        domain: CoeffDomain,
        terms: impl IntoIterator<Item = (usize, Coeff)>,
    ) -> Result<Self, GsError> {
        let mut map = BTreeMap::new();
        for (g, c) in terms {
            if c.domain() != domain {
                return Err(GsError::Arith(ArithError::DomainMismatch(
                    domain.to_string(),
                    c.domain().to_string(),
                )));
            }
            if c.is_zero() {
                continue;
            }
            let entry = match map.remove(&g) {
                Some(prev) => coeff_add(&prev, &c)?,
                None => c,
            };
            if !entry.is_zero() {
                map.insert(g, entry);
            }
        }
        Ok(GsElement { domain, terms: map })
    }

    pub fn domain(&self) -> CoeffDomain {
        self.domain
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, g: usize) -> Coeff {
        self.terms.get(&g).cloned().unwrap_or_else(|| self.domain.zero())
    }

    pub fn support(&self) -> impl Iterator<Item = (usize, &Coeff)> {
        self.terms.iter().map(|(&g, c)| (g, c))
    }

    pub fn render(&self, group: &FiniteGroup) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&g, c)| {
                if c.is_one() {
                    group.labels[g].clone()
                } else {
                    format!("{}*{}", self.domain.render_coeff(c), group.labels[g])
                }
            })
            .collect();
        parts.join(" + ")
    }

    /// Parse a formal sum like `3/2*a + b + 1*a^2b`; `0` is the empty sum.
    pub fn parse(text: &str, group: &FiniteGroup, domain: CoeffDomain) -> Result<Self, GsError> {
        let t = text.trim();
        if t == "0" {
            return Ok(GsElement::zero(domain));
        }
        let mut terms = Vec::new();
        for raw in t.split('+') {
            let term = raw.trim();
            if term.is_empty() {
                return Err(GsError::Parse(text.to_string()));
            }
            let (coeff, label) = match term.rsplit_once('*') {
                Some((c, l)) => (domain.parse_coeff(c.trim())?, l.trim()),
                None => (domain.one(), term),
            };
            let g = group
                .labels
                .iter()
                .position(|l| l == label)
                .ok_or_else(|| GsError::Parse(text.to_string()))?;
            terms.push((g, coeff));
        }
        GsElement::from_terms(domain, terms)
    }
}

/// Pointwise sum of two formal sums over the same group and domain.
pub fn gs_add(x: &GsElement, y: &GsElement) -> Result<GsElement, GsError> {
    if x.domain != y.domain {
        return Err(GsError::Arith(ArithError::DomainMismatch(
            x.domain.to_string(),
            y.domain.to_string(),
        )));
    }
    let terms = x
        .terms
        .iter()
        .map(|(&g, c)| (g, c.clone()))
        .chain(y.terms.iter().map(|(&g, c)| (g, c.clone())));
    GsElement::from_terms(x.domain, terms)
}

/// Convolution product: `(x*y)[k] = sum over g*h = k of x[g] y[h]`.
pub fn gs_mul(group: &FiniteGroup, x: &GsElement, y: &GsElement) -> Result<GsElement, GsError> {
    if x.domain != y.domain {
        return Err(GsError::Arith(ArithError::DomainMismatch(
            x.domain.to_string(),
            y.domain.to_string(),
        )));
    }
    let mut acc: BTreeMap<usize, Coeff> = BTreeMap::new();
    for (g, cg) in x.support() {
        for (h, ch) in y.support() {
            let k = group.mul(g, h);
            let prod = coeff_mul(cg, ch)?;
            let entry = match acc.remove(&k) {
                Some(prev) => coeff_add(&prev, &prod)?,
                None => prod,
            };
            acc.insert(k, entry);
        }
    }
    GsElement::from_terms(x.domain, acc)
}

/// Sum of the members of a class (or any element set) with coefficient
/// one.
pub fn class_sum(domain: CoeffDomain, members: &[usize]) -> GsElement {
    GsElement::from_terms(domain, members.iter().map(|&g| (g, domain.one())))
        .expect("coefficient one is valid")
}

/// Whether `x` commutes with every group basis element. Sufficient for
/// full centrality when the coefficient domain is commutative (checked
/// via its descriptor), since scalars then commute with everything.
pub fn gs_is_central(group: &FiniteGroup, x: &GsElement) -> Result<bool, GsError> {
    if !descriptor_of(x.domain).commutative {
        return Err(GsError::CoefficientHypotheses { domain: x.domain, flag: "commutative" });
    }
    for g in 0..group.order() {
        let basis = GsElement::basis(x.domain, g);
        if gs_mul(group, x, &basis)? != gs_mul(group, &basis, x)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One verified identity `h * sum(C(G)) = sum of class sums over the
/// coset h C(G)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassSumIdentity {
    /// Label of the group element `h`.
    pub element: String,
    /// Rendered product `h * sum(C(G))`.
    pub product: String,
    /// Representative labels of the conjugacy classes whose sums add up
    /// to the product.
    pub class_reps: Vec<String>,
}

impl ClassSumIdentity {
    pub fn rendered(&self) -> String {
        let rhs: Vec<String> = self.class_reps.iter().map(|r| format!("sum(K[{r}])")).collect();
        format!("{}*sum(C(G)) = {} = {}", self.element, self.product, rhs.join(" + "))
    }
}

/// Outcome of the sufficient-condition check for central essentiality of
/// a group semiring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CeCertification {
    /// Nilpotence class 1: the group is abelian and the group semiring is
    /// commutative, hence trivially centrally essential.
    AbelianTriviallyCe,
    /// Nilpotence class 2: certified centrally essential; carries the
    /// verified identity `h * sum(C(G))` for every group element.
    CertifiedClass2 { identities: Vec<ClassSumIdentity> },
    /// Nilpotence class above 2 (or not nilpotent): the sufficient
    /// condition does not apply. Explicitly not a refutation.
    HypothesesNotMet { class: Option<usize> },
}

/// Certify central essentiality of `SG` for a group of nilpotence class
/// at most 2 over a commutative, zero-sum-free, zero-divisor-free
/// coefficient domain. For class 2 the certificate verifies, for every
/// group element `h`, that `h * sum(C(G))` is nonzero and central.
pub fn certify_centrally_essential(group: &FiniteGroup, domain: CoeffDomain) -> Result<CeCertification, GsError> {
    let d = descriptor_of(domain);
    for (flag, ok) in [
        ("commutative", d.commutative),
        ("zero_divisor_free", d.zero_divisor_free),
        ("zero_sum_free", d.zero_sum_free),
    ] {
        if !ok {
            return Err(GsError::CoefficientHypotheses { domain, flag });
        }
    }
    let class = match nilpotence_class(group) {
        Nilpotence::Class(c) => c,
        Nilpotence::NotNilpotent => return Ok(CeCertification::HypothesesNotMet { class: None }),
    };
    if class <= 1 {
        return Ok(CeCertification::AbelianTriviallyCe);
    }
    if class > 2 {
        return Ok(CeCertification::HypothesesNotMet { class: Some(class) });
    }
    let classes = conjugacy_classes(group);
    let center_sum = class_sum(domain, &group_center(group));
    let mut identities = Vec::new();
    for h in 0..group.order() {
        let product = gs_mul(group, &GsElement::basis(domain, h), &center_sum)?;
        if product.is_zero() || !gs_is_central(group, &product)? {
            return Err(GsError::IdentityCheckFailed(group.labels[h].clone()));
        }
        let class_reps = coset_class_reps(group, &classes, &product, domain)?;
        identities.push(ClassSumIdentity {
            element: group.labels[h].clone(),
            product: product.render(group),
            class_reps,
        });
    }
    Ok(CeCertification::CertifiedClass2 { identities })
}

/// Decompose a coset sum into the class sums it equals; errors if the
/// product is not exactly a disjoint union of conjugacy classes.
fn coset_class_reps(
    group: &FiniteGroup,
    classes: &[ConjugacyClass],
    product: &GsElement,
    domain: CoeffDomain,
) -> Result<Vec<String>, GsError> {
    let support: Vec<usize> = product.support().map(|(g, _)| g).collect();
    let mut reps = Vec::new();
    let mut acc = GsElement::zero(domain);
    for class in classes {
        if class.members.iter().any(|m| support.contains(m)) {
            reps.push(group.labels[class.representative].clone());
            acc = gs_add(&acc, &class_sum(domain, &class.members))?;
        }
    }
    if acc != *product {
        return Err(GsError::IdentityCheckFailed(product.render(group)));
    }
    Ok(reps)
}

/// Does some `z` solve `x + z = y`? Over `N` and `Q+` this holds exactly
/// when every coefficient of `x` is bounded by the matching coefficient
/// of `y`; the witness `z = y - x` is returned.
pub fn gs_subtractive_compare(x: &GsElement, y: &GsElement) -> Result<Option<GsElement>, GsError> {
    if !matches!(x.domain, CoeffDomain::Naturals | CoeffDomain::NonNegRationals) {
        return Err(GsError::UnsupportedDomain(x.domain));
    }
    if x.domain != y.domain {
        return Err(GsError::Arith(ArithError::DomainMismatch(
            x.domain.to_string(),
            y.domain.to_string(),
        )));
    }
    let mut terms = Vec::new();
    let mut keys: Vec<usize> = x.terms.keys().chain(y.terms.keys()).copied().collect();
    keys.sort_unstable();
    keys.dedup();
    for g in keys {
        match coeff_checked_sub(&y.coeff(g), &x.coeff(g))? {
            Some(diff) => terms.push((g, diff)),
            None => return Ok(None),
        }
    }
    Ok(Some(GsElement::from_terms(x.domain, terms)?))
}

/// A finite-dimensional algebra over an exact field, presented by
/// structure constants on a labeled basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldAlgebra {
    field: CoeffDomain,
    dim: usize,
    labels: Vec<String>,
    /// `sc[i][j]`: sparse vector of the product `b_i * b_j`.
    sc: Vec<Vec<Vec<(usize, Coeff)>>>,
    unit: Vec<Coeff>,
}

impl FieldAlgebra {
    /// Build and check: the field must be exact, the induced product
    /// associative on all basis triples, and `unit` a two-sided unit.
    pub fn new(
        field: CoeffDomain,
        labels: Vec<String>,
        sc: Vec<Vec<Vec<(usize, Coeff)>>>,
        unit: Vec<Coeff>,
    ) -> Result<Self, GsError> {
        if !field.is_field() {
            return Err(GsError::LinAlg(LinAlgError::NotAField(field)));
        }
        let dim = labels.len();
        let algebra = FieldAlgebra { field, dim, labels, sc, unit };
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let left =
                        algebra.mul_vec(&algebra.mul_vec(&algebra.basis_vec(i), &algebra.basis_vec(j)), &algebra.basis_vec(k));
                    let right =
                        algebra.mul_vec(&algebra.basis_vec(i), &algebra.mul_vec(&algebra.basis_vec(j), &algebra.basis_vec(k)));
                    if left != right {
                        return Err(GsError::NotAssociative(i, j, k));
                    }
                }
            }
        }
        for i in 0..dim {
            let b = algebra.basis_vec(i);
            if algebra.mul_vec(&algebra.unit, &b) != b || algebra.mul_vec(&b, &algebra.unit) != b {
                return Err(GsError::ZeroArgument("unit"));
            }
        }
        Ok(algebra)
    }

    pub fn field(&self) -> CoeffDomain {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> Vec<Coeff> {
        self.unit.clone()
    }

    pub fn zero_vec(&self) -> Vec<Coeff> {
        vec![self.field.zero(); self.dim]
    }

    pub fn basis_vec(&self, i: usize) -> Vec<Coeff> {
        let mut v = self.zero_vec();
        v[i] = self.field.one();
        v
    }

    pub fn mul_vec(&self, x: &[Coeff], y: &[Coeff]) -> Vec<Coeff> {
        let mut out = self.zero_vec();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let prod = coeff_mul(xi, yj).expect("uniform field");
                for (k, c) in &self.sc[i][j] {
                    let add = coeff_mul(&prod, c).expect("uniform field");
                    out[*k] = coeff_add(&out[*k], &add).expect("uniform field");
                }
            }
        }
        out
    }

    pub fn render_vec(&self, v: &[Coeff]) -> String {
        let parts: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                if c.is_one() {
                    self.labels[i].clone()
                } else {
                    format!("{}*{}", self.field.render_coeff(c), self.labels[i])
                }
            })
            .collect();
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

/// The group algebra of a finite group over `q` or a prime field, with
/// structure constants read off the Cayley table.
pub fn to_group_algebra(group: &FiniteGroup, field: CoeffDomain) -> Result<FieldAlgebra, GsError> {
    let n = group.order();
    let mut sc = vec![vec![Vec::new(); n]; n];
    for (i, row) in sc.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            cell.push((group.mul(i, j), field.one()));
        }
    }
    let mut unit = vec![field.zero(); n];
    unit[group.identity] = field.one();
    FieldAlgebra::new(field, group.labels.clone(), sc, unit)
}

/// Coordinates of a `Q+` formal sum inside the rational group algebra.
/// The embedding is a homomorphism (checked on samples in the tests).
pub fn gs_to_vec(x: &GsElement, group_order: usize) -> Result<Vec<Coeff>, GsError> {
    if x.domain() != CoeffDomain::NonNegRationals {
        return Err(GsError::UnsupportedDomain(x.domain()));
    }
    let mut v = vec![CoeffDomain::Rationals.zero(); group_order];
    for (g, c) in x.support() {
        let Coeff::NonNegRat(r) = c else { unreachable!("domain checked") };
        v[g] = Coeff::Rat(Rational::from_nonneg(r.clone()));
    }
    Ok(v)
}

/// Exact basis of the center `{x : x b = b x for every basis b}`,
/// computed as the nullspace of the stacked commutator system.
pub fn algebra_center_basis(a: &FieldAlgebra) -> Vec<Vec<Coeff>> {
    let d = a.dim();
    // rows: for each basis j and coordinate k, the linear functional
    // x -> (x b_j - b_j x)_k
    let mut rows: Vec<Vec<Coeff>> = Vec::with_capacity(d * d);
    let columns: Vec<Vec<Coeff>> = (0..d)
        .map(|i| a.basis_vec(i))
        .collect();
    for j in 0..d {
        let bj = a.basis_vec(j);
        // commutator of each basis element with b_j
        let comms: Vec<Vec<Coeff>> =
            columns.iter().map(|bi| vec_sub(&a.mul_vec(bi, &bj), &a.mul_vec(&bj, bi))).collect();
        for k in 0..d {
            rows.push((0..d).map(|i| comms[i][k].clone()).collect());
        }
    }
    let m = FieldMatrix::from_rows(a.field(), rows).expect("commutator system");
    m.nullspace()
}

/// Check that `x` certifies failure of central essentiality: with `Z`
/// the center, compute `V = {y in Z : x y in Z}` by exact linear solve
/// and verify `x v = 0` on a spanning set of `V`, i.e. no nonzero
/// central multiple of `x` is central.
pub fn ce_failure_witness_check(a: &FieldAlgebra, x: &[Coeff]) -> Result<bool, GsError> {
    if vec_is_zero(x) {
        return Err(GsError::ZeroArgument("witness"));
    }
    let z = algebra_center_basis(a);
    let c = z.len();
    let d = a.dim();
    if c == 0 {
        // cannot happen: the unit is always central
        return Ok(true);
    }
    // columns: [x*z_1 ... x*z_c | -z_1 ... -z_c]; nullspace (t, u) gives
    // sum t_i (x z_i) = sum u_j z_j, i.e. x y in Z for y = sum t_i z_i
    let xz: Vec<Vec<Coeff>> = z.iter().map(|zi| a.mul_vec(x, zi)).collect();
    let zero = a.field().zero();
    let mut rows: Vec<Vec<Coeff>> = Vec::with_capacity(d);
    for k in 0..d {
        let mut row = Vec::with_capacity(2 * c);
        for col in xz.iter() {
            row.push(col[k].clone());
        }
        for col in z.iter() {
            let negated = coeff_checked_sub(&zero, &col[k])
                .expect("uniform field")
                .expect("fields have negation");
            row.push(negated);
        }
        rows.push(row);
    }
    let system = FieldMatrix::from_rows(a.field(), rows)?;
    for w in system.nullspace() {
        // y = sum t_i z_i from the t-part
        let mut y = a.zero_vec();
        for (i, zi) in z.iter().enumerate() {
            if w[i].is_zero() {
                continue;
            }
            for (k, yk) in y.iter_mut().enumerate() {
                let add = coeff_mul(&w[i], &zi[k]).expect("uniform field");
                *yk = coeff_add(yk, &add).expect("uniform field");
            }
        }
        if !vec_is_zero(&a.mul_vec(x, &y)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Outcome of a seeded randomized probe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbeReport {
    pub seed: u64,
    pub trials: u64,
    /// Rendered witness, when the probe found one.
    pub found: Option<String>,
}

fn random_vec(a: &FieldAlgebra, rng: &mut SplitMix64, bound: i64) -> Vec<Coeff> {
    (0..a.dim())
        .map(|_| match a.field() {
            CoeffDomain::Rationals => {
                Coeff::Rat(Rational::from_i64(rng.range_i64(-bound, bound)))
            }
            CoeffDomain::Modular(m) => CoeffDomain::Modular(m).from_u64(rng.below(m)),
            other => other.from_u64(rng.below(bound as u64 + 1)),
        })
        .collect()
}

/// Search for nonzero square-zero elements among random small-coordinate
/// vectors (both single samples and differences of pairs). A probe, not
/// a proof: "found nothing" only reports the trial budget was exhausted.
pub fn reduced_probe(a: &FieldAlgebra, trials: u64, seed: u64) -> ProbeReport {
    let mut rng = SplitMix64::new(seed);
    for _ in 0..trials {
        let x = random_vec(a, &mut rng, 3);
        if !vec_is_zero(&x) && vec_is_zero(&a.mul_vec(&x, &x)) {
            return ProbeReport { seed, trials, found: Some(a.render_vec(&x)) };
        }
        let y = random_vec(a, &mut rng, 3);
        let diff = vec_sub(&x, &y);
        if !vec_is_zero(&diff) && vec_is_zero(&a.mul_vec(&diff, &diff)) {
            return ProbeReport { seed, trials, found: Some(a.render_vec(&diff)) };
        }
    }
    ProbeReport { seed, trials, found: None }
}

/// Search for a zero-divisor pair: sample a random `x`, solve its right
/// annihilator exactly, and return the first pair found.
pub fn find_zero_divisor_pair(
    a: &FieldAlgebra,
    trials: u64,
    seed: u64,
) -> Option<(Vec<Coeff>, Vec<Coeff>)> {
    let mut rng = SplitMix64::new(seed);
    for _ in 0..trials {
        let x = random_vec(a, &mut rng, 3);
        if vec_is_zero(&x) {
            continue;
        }
        // columns of L_x are x * e_j
        let d = a.dim();
        let mut rows = Vec::with_capacity(d);
        let cols: Vec<Vec<Coeff>> = (0..d).map(|j| a.mul_vec(&x, &a.basis_vec(j))).collect();
        for k in 0..d {
            rows.push((0..d).map(|j| cols[j][k].clone()).collect());
        }
        let lx = FieldMatrix::from_rows(a.field(), rows).expect("annihilator system");
        if let Some(y) = lx.nullspace().into_iter().next() {
            debug_assert!(vec_is_zero(&a.mul_vec(&x, &y)));
            return Some((x, y));
        }
    }
    None
}

/// Probe a `Q+` group semiring for zero divisors: products of sampled
/// nonzero elements must stay nonzero.
pub fn zero_divisor_probe(
    group: &FiniteGroup,
    domain: CoeffDomain,
    trials: u64,
    seed: u64,
) -> Result<ProbeReport, GsError> {
    let mut rng = SplitMix64::new(seed);
    for _ in 0..trials {
        let x = random_gs(group, domain, &mut rng)?;
        let y = random_gs(group, domain, &mut rng)?;
        if x.is_zero() || y.is_zero() {
            continue;
        }
        let p = gs_mul(group, &x, &y)?;
        if p.is_zero() {
            return Ok(ProbeReport {
                seed,
                trials,
                found: Some(format!("{} , {}", x.render(group), y.render(group))),
            });
        }
    }
    Ok(ProbeReport { seed, trials, found: None })
}

/// Probe additive cancellativity coefficientwise on random triples.
pub fn add_cancellative_probe(
    group: &FiniteGroup,
    domain: CoeffDomain,
    trials: u64,
    seed: u64,
) -> Result<ProbeReport, GsError> {
    let mut rng = SplitMix64::new(seed);
    for _ in 0..trials {
        let x = random_gs(group, domain, &mut rng)?;
        let y = random_gs(group, domain, &mut rng)?;
        let z = random_gs(group, domain, &mut rng)?;
        if x != y && gs_add(&x, &z)? == gs_add(&y, &z)? {
            return Ok(ProbeReport {
                seed,
                trials,
                found: Some(format!(
                    "{} + {} = {} + {}",
                    x.render(group),
                    z.render(group),
                    y.render(group),
                    z.render(group)
                )),
            });
        }
    }
    Ok(ProbeReport { seed, trials, found: None })
}

fn random_gs(
    group: &FiniteGroup,
    domain: CoeffDomain,
    rng: &mut SplitMix64,
) -> Result<GsElement, GsError> {
    let mut terms = Vec::new();
    for g in 0..group.order() {
        let num = rng.below(4);
        if num == 0 {
            continue;
        }
        let den = 1 + rng.below(3);
        let c = match domain {
            CoeffDomain::NonNegRationals => {
                Coeff::NonNegRat(NonNegRational::from_ratio(num, den).expect("den nonzero"))
            }
            _ => domain.from_u64(num),
        };
        terms.push((g, c));
    }
    GsElement::from_terms(domain, terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{cyclic_group, dihedral_group, quaternion_group};
    use crate::linalg::in_span;

    fn qplus() -> CoeffDomain {
        CoeffDomain::NonNegRationals
    }

    #[test]
    fn single_term_products_follow_the_cayley_table() {
        let q8 = quaternion_group();
        let a = GsElement::basis(qplus(), 1);
        let b = GsElement::basis(qplus(), 4);
        let ab = gs_mul(&q8, &a, &b).unwrap();
        assert_eq!(ab.render(&q8), "ab");
        let ba = gs_mul(&q8, &b, &a).unwrap();
        assert_eq!(ba.render(&q8), "a^3b");
        assert_ne!(ab, ba);
    }

    #[test]
    fn doubling_the_center_sum() {
        let q8 = quaternion_group();
        let c = class_sum(qplus(), &group_center(&q8));
        let doubled = gs_add(&c, &c).unwrap();
        assert_eq!(doubled.render(&q8), "2*e + 2*a^2");
    }

    #[test]
    fn multiplying_center_sum_by_a() {
        let q8 = quaternion_group();
        let c = class_sum(qplus(), &group_center(&q8));
        let a = GsElement::basis(qplus(), 1);
        let p = gs_mul(&q8, &a, &c).unwrap();
        assert_eq!(p.render(&q8), "a + a^3");
    }

    #[test]
    fn centrality_of_class_sums() {
        for g in [quaternion_group(), dihedral_group(16), dihedral_group(6)] {
            for class in conjugacy_classes(&g) {
                let s = class_sum(qplus(), &class.members);
                assert!(gs_is_central(&g, &s).unwrap());
            }
        }
        let q8 = quaternion_group();
        let center_sum = class_sum(qplus(), &group_center(&q8));
        assert!(gs_is_central(&q8, &center_sum).unwrap());
        let a = GsElement::basis(qplus(), 1);
        assert!(!gs_is_central(&q8, &a).unwrap());
    }

    #[test]
    fn class2_certificate_on_q8_reproduces_the_six_identities() {
        let q8 = quaternion_group();
        let outcome = certify_centrally_essential(&q8, qplus()).unwrap();
        let identities = match outcome {
            CeCertification::CertifiedClass2 { identities } => identities,
            other => panic!("expected class-2 certificate, got {other:?}"),
        };
        assert_eq!(identities.len(), 8);
        let find = |label: &str| identities.iter().find(|i| i.element == label).unwrap();
        assert_eq!(find("a").product, "a + a^3");
        assert_eq!(find("a").class_reps, vec!["a"]);
        assert_eq!(find("b").product, "b + a^2b");
        assert_eq!(find("b").class_reps, vec!["b"]);
        assert_eq!(find("ab").product, "ab + a^3b");
        assert_eq!(find("ab").class_reps, vec!["ab"]);
        assert_eq!(find("a^3").product, "a + a^3");
        assert_eq!(find("a^2b").product, "b + a^2b");
        assert_eq!(find("a^3b").product, "ab + a^3b");
    }

    #[test]
    fn certification_class_boundaries() {
        assert_eq!(
            certify_centrally_essential(&cyclic_group(4), CoeffDomain::Naturals).unwrap(),
            CeCertification::AbelianTriviallyCe
        );
        assert_eq!(
            certify_centrally_essential(&dihedral_group(16), qplus()).unwrap(),
            CeCertification::HypothesesNotMet { class: Some(3) }
        );
        assert_eq!(
            certify_centrally_essential(&dihedral_group(6), qplus()).unwrap(),
            CeCertification::HypothesesNotMet { class: None }
        );
        // F2 has zero sums, so its descriptor fails the hypotheses
        assert!(matches!(
            certify_centrally_essential(&quaternion_group(), CoeffDomain::Modular(2)),
            Err(GsError::CoefficientHypotheses { flag: "zero_sum_free", .. })
        ));
    }

    #[test]
    fn subtractive_compare_cases() {
        let a = GsElement::basis(qplus(), 1);
        let b = GsElement::basis(qplus(), 4);
        // disjoint supports: no z in either direction
        assert_eq!(gs_subtractive_compare(&a, &b).unwrap(), None);
        assert_eq!(gs_subtractive_compare(&b, &a).unwrap(), None);
        let two_a = gs_add(&a, &a).unwrap();
        let z = gs_subtractive_compare(&a, &two_a).unwrap().unwrap();
        assert_eq!(z, a);
        assert_eq!(gs_add(&a, &z).unwrap(), two_a);
        let same = gs_subtractive_compare(&a, &a).unwrap().unwrap();
        assert!(same.is_zero());
        assert!(gs_subtractive_compare(
            &GsElement::basis(CoeffDomain::Rationals, 0),
            &GsElement::basis(CoeffDomain::Rationals, 0)
        )
        .is_err());
    }

    #[test]
    fn formal_sum_parse_and_render() {
        let q8 = quaternion_group();
        let x = GsElement::parse("3/2*a + b + 1*a^2b", &q8, qplus()).unwrap();
        assert_eq!(x.render(&q8), "3/2*a + b + a^2b");
        let back = GsElement::parse(&x.render(&q8), &q8, qplus()).unwrap();
        assert_eq!(x, back);
        assert!(GsElement::parse("0", &q8, qplus()).unwrap().is_zero());
        assert!(GsElement::parse("2*notanelement", &q8, qplus()).is_err());
    }

    #[test]
    fn group_algebra_dimensions_and_basis_products() {
        let q8 = quaternion_group();
        let alg = to_group_algebra(&q8, CoeffDomain::Rationals).unwrap();
        assert_eq!(alg.dim(), 8);
        for i in 0..8 {
            for j in 0..8 {
                let p = alg.mul_vec(&alg.basis_vec(i), &alg.basis_vec(j));
                assert_eq!(p, alg.basis_vec(q8.mul(i, j)));
            }
        }
    }

    #[test]
    fn center_basis_of_rational_q8_algebra() {
        let q8 = quaternion_group();
        let alg = to_group_algebra(&q8, CoeffDomain::Rationals).unwrap();
        let basis = algebra_center_basis(&alg);
        assert_eq!(basis.len(), 5);
        assert_eq!(basis.len(), conjugacy_classes(&q8).len());
        let rendered: Vec<String> = basis.iter().map(|v| alg.render_vec(v)).collect();
        assert_eq!(
            rendered,
            vec!["e", "a^2", "a + a^3", "b + a^2b", "ab + a^3b"]
        );
        // independent route: the span must equal the class-sum span
        let class_vecs: Vec<Vec<Coeff>> = conjugacy_classes(&q8)
            .iter()
            .map(|c| gs_to_vec(&class_sum(qplus(), &c.members), 8).unwrap())
            .collect();
        for v in &basis {
            assert!(in_span(CoeffDomain::Rationals, &class_vecs, v));
        }
        for v in &class_vecs {
            assert!(in_span(CoeffDomain::Rationals, &basis, v));
        }
    }

    #[test]
    fn center_of_commutative_algebra_is_everything() {
        let c4 = cyclic_group(4);
        let alg = to_group_algebra(&c4, CoeffDomain::Rationals).unwrap();
        assert_eq!(algebra_center_basis(&alg).len(), 4);
    }

    #[test]
    fn center_dimension_equals_class_count() {
        // holds in every characteristic: class sums are always a basis
        let groups = [quaternion_group(), cyclic_group(4), dihedral_group(6), dihedral_group(8)];
        let fields = [CoeffDomain::Rationals, CoeffDomain::Modular(2), CoeffDomain::Modular(3)];
        for g in &groups {
            let classes = conjugacy_classes(g).len();
            for &f in &fields {
                let alg = to_group_algebra(g, f).unwrap();
                assert_eq!(
                    algebra_center_basis(&alg).len(),
                    classes,
                    "group of order {} over {f}",
                    g.order()
                );
            }
        }
    }

    #[test]
    fn ce_failure_witness_for_rational_q8() {
        let q8 = quaternion_group();
        let alg = to_group_algebra(&q8, CoeffDomain::Rationals).unwrap();
        // x = a - a^3
        let mut x = alg.zero_vec();
        x[1] = Coeff::Rat(Rational::from_i64(1));
        x[3] = Coeff::Rat(Rational::from_i64(-1));
        assert!(ce_failure_witness_check(&alg, &x).unwrap());
        // in a commutative algebra no witness works (y = 1 always does)
        let c4 = cyclic_group(4);
        let calg = to_group_algebra(&c4, CoeffDomain::Rationals).unwrap();
        for i in 0..4 {
            assert!(!ce_failure_witness_check(&calg, &calg.basis_vec(i)).unwrap());
        }
        assert!(ce_failure_witness_check(&alg, &alg.zero_vec()).is_err());
    }

    #[test]
    fn reduced_probe_outcomes() {
        let q8 = quaternion_group();
        let rational = to_group_algebra(&q8, CoeffDomain::Rationals).unwrap();
        let clean = reduced_probe(&rational, 1000, 1);
        assert_eq!(clean.found, None);
        let f2 = to_group_algebra(&q8, CoeffDomain::Modular(2)).unwrap();
        let dirty = reduced_probe(&f2, 1000, 1);
        assert!(dirty.found.is_some());
        let c2 = to_group_algebra(&cyclic_group(2), CoeffDomain::Rationals).unwrap();
        assert_eq!(reduced_probe(&c2, 500, 7).found, None);
    }

    #[test]
    fn rational_q8_has_zero_divisors() {
        let q8 = quaternion_group();
        let alg = to_group_algebra(&q8, CoeffDomain::Rationals).unwrap();
        let (x, y) = find_zero_divisor_pair(&alg, 200, 5).expect("zero divisors exist");
        assert!(!vec_is_zero(&x) && !vec_is_zero(&y));
        assert!(vec_is_zero(&alg.mul_vec(&x, &y)));
        // the classical pair: (e + a^2)(e - a^2) = 0
        let mut p = alg.zero_vec();
        p[0] = Coeff::Rat(Rational::from_i64(1));
        p[2] = Coeff::Rat(Rational::from_i64(1));
        let mut q = alg.zero_vec();
        q[0] = Coeff::Rat(Rational::from_i64(1));
        q[2] = Coeff::Rat(Rational::from_i64(-1));
        assert!(vec_is_zero(&alg.mul_vec(&p, &q)));
    }

    #[test]
    fn gs_embedding_is_a_homomorphism_on_samples() {
        let q8 = quaternion_group();
        let alg = to_group_algebra(&q8, CoeffDomain::Rationals).unwrap();
        let mut rng = SplitMix64::new(41);
        for _ in 0..100 {
            let x = random_gs(&q8, qplus(), &mut rng).unwrap();
            let y = random_gs(&q8, qplus(), &mut rng).unwrap();
            let lhs = gs_to_vec(&gs_mul(&q8, &x, &y).unwrap(), 8).unwrap();
            let rhs =
                alg.mul_vec(&gs_to_vec(&x, 8).unwrap(), &gs_to_vec(&y, 8).unwrap());
            assert_eq!(lhs, rhs);
            let sum_lhs = gs_to_vec(&gs_add(&x, &y).unwrap(), 8).unwrap();
            let sum_rhs = crate::linalg::vec_add(&gs_to_vec(&x, 8).unwrap(), &gs_to_vec(&y, 8).unwrap());
            assert_eq!(sum_lhs, sum_rhs);
        }
    }

    #[test]
    fn central_formal_sums_land_in_the_center_span() {
        let q8 = quaternion_group();
        let alg = to_group_algebra(&q8, CoeffDomain::Rationals).unwrap();
        let center = algebra_center_basis(&alg);
        let classes = conjugacy_classes(&q8);
        // all class sums
        for class in &classes {
            let s = class_sum(qplus(), &class.members);
            assert!(gs_is_central(&q8, &s).unwrap());
            let v = gs_to_vec(&s, 8).unwrap();
            assert!(in_span(CoeffDomain::Rationals, &center, &v));
        }
        // 100 random nonnegative combinations of class sums
        let mut rng = SplitMix64::new(9);
        for _ in 0..100 {
            let mut acc = GsElement::zero(qplus());
            for class in &classes {
                let k = rng.below(4);
                for _ in 0..k {
                    acc = gs_add(&acc, &class_sum(qplus(), &class.members)).unwrap();
                }
            }
            assert!(gs_is_central(&q8, &acc).unwrap());
            let v = gs_to_vec(&acc, 8).unwrap();
            assert!(in_span(CoeffDomain::Rationals, &center, &v));
        }
    }
}
