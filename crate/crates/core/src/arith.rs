//! Exact coefficient domains: naturals, non-negative rationals, signed
//! rationals, and modular integers, behind one dynamically checked
//! semiring interface.
//!
//! Everything is arbitrary precision; there is no floating point anywhere
//! in this crate. Values are immutable after construction and safe to
//! share between threads.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("coefficient domain mismatch: {0} vs {1}")]
    DomainMismatch(String, String),
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(u64),
    #[error("denominator must be nonzero")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse {0:?} as {1}")]
    Parse(String, &'static str),
    #[error("operation {0} is not available in domain {1}")]
    Unsupported(&'static str, String),
}

/// Arbitrary-precision non-negative integer.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Natural(BigUint);

impl Natural {
    pub fn zero() -> Self {
        Natural(BigUint::zero())
    }

    pub fn one() -> Self {
        Natural(BigUint::one())
    }

    pub fn from_u64(k: u64) -> Self {
        Natural(BigUint::from(k))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Natural(&self.0 + &rhs.0)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Natural(&self.0 * &rhs.0)
    }

    /// `self - rhs` when `rhs <= self`, `None` otherwise.
    pub fn checked_sub(&self, rhs: &Self) -> Option<Self> {
        if rhs.0 <= self.0 {
            Some(Natural(&self.0 - &rhs.0))
        } else {
            None
        }
    }

    pub fn magnitude(&self) -> &BigUint {
        &self.0
    }
}

impl From<BigUint> for Natural {
    fn from(v: BigUint) -> Self {
        Natural(v)
    }
}

impl fmt::Display for Natural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for Natural {
    type Err = ArithError;

    fn from_str(s: &str) -> Result<Self, ArithError> {
        s.trim()
            .parse::<BigUint>()
            .map(Natural)
            .map_err(|_| ArithError::Parse(s.to_string(), "natural"))
    }
}

/// Non-negative rational, always stored in lowest terms with a positive
/// denominator. Equality is value equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NonNegRational {
    num: Natural,
    den: Natural,
}

impl NonNegRational {
    pub fn new(num: Natural, den: Natural) -> Result<Self, ArithError> {
        if den.is_zero() {
            return Err(ArithError::ZeroDenominator);
        }
        Ok(Self::reduced(num.0, den.0))
    }

    fn reduced(num: BigUint, den: BigUint) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return NonNegRational { num: Natural::zero(), den: Natural::one() };
        }
        let g = num.gcd(&den);
        NonNegRational { num: Natural(num / &g), den: Natural(den / g) }
    }

    pub fn zero() -> Self {
        NonNegRational { num: Natural::zero(), den: Natural::one() }
    }

    pub fn one() -> Self {
        NonNegRational { num: Natural::one(), den: Natural::one() }
    }

    pub fn from_u64(k: u64) -> Self {
        NonNegRational { num: Natural::from_u64(k), den: Natural::one() }
    }

    pub fn from_ratio(num: u64, den: u64) -> Result<Self, ArithError> {
        Self::new(Natural::from_u64(num), Natural::from_u64(den))
    }

    pub fn num(&self) -> &Natural {
        &self.num
    }

    pub fn den(&self) -> &Natural {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self::reduced(
            &self.num.0 * &rhs.den.0 + &rhs.num.0 * &self.den.0,
            &self.den.0 * &rhs.den.0,
        )
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self::reduced(&self.num.0 * &rhs.num.0, &self.den.0 * &rhs.den.0)
    }

    pub fn leq(&self, rhs: &Self) -> bool {
        &self.num.0 * &rhs.den.0 <= &rhs.num.0 * &self.den.0
    }

    /// `self - rhs` when `rhs <= self`, `None` otherwise.
    pub fn checked_sub(&self, rhs: &Self) -> Option<Self> {
        if !rhs.leq(self) {
            return None;
        }
        Some(Self::reduced(
            &self.num.0 * &rhs.den.0 - &rhs.num.0 * &self.den.0,
            &self.den.0 * &rhs.den.0,
        ))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, ArithError> {
        if rhs.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Self::reduced(&self.num.0 * &rhs.den.0, &self.den.0 * &rhs.num.0))
    }
}

impl fmt::Display for NonNegRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for NonNegRational {
    type Err = ArithError;

    fn from_str(s: &str) -> Result<Self, ArithError> {
        let s = s.trim();
        let parse = |t: &str| {
            t.trim()
                .parse::<BigUint>()
                .map_err(|_| ArithError::Parse(s.to_string(), "nonneg rational"))
        };
        match s.split_once('/') {
            Some((n, d)) => NonNegRational::new(Natural(parse(n)?), Natural(parse(d)?)),
            None => Ok(NonNegRational { num: Natural(parse(s)?), den: Natural::one() }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Neg,
    Zero,
    Pos,
}

/// Signed rational as sign plus magnitude; sign is `Zero` exactly when the
/// magnitude is zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rational {
    sign: Sign,
    mag: NonNegRational,
}

impl Rational {
    pub fn new(sign: Sign, mag: NonNegRational) -> Self {
        if mag.is_zero() {
            Rational { sign: Sign::Zero, mag }
        } else {
            debug_assert!(sign != Sign::Zero);
            Rational { sign, mag }
        }
    }

    pub fn zero() -> Self {
        Rational { sign: Sign::Zero, mag: NonNegRational::zero() }
    }

    pub fn one() -> Self {
        Rational { sign: Sign::Pos, mag: NonNegRational::one() }
    }

    pub fn from_i64(k: i64) -> Self {
        let mag = NonNegRational::from_u64(k.unsigned_abs());
        let sign = match k {
            0 => Sign::Zero,
            _ if k > 0 => Sign::Pos,
            _ => Sign::Neg,
        };
        Rational { sign, mag }
    }

    pub fn from_nonneg(mag: NonNegRational) -> Self {
        let sign = if mag.is_zero() { Sign::Zero } else { Sign::Pos };
        Rational { sign, mag }
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn magnitude(&self) -> &NonNegRational {
        &self.mag
    }

    pub fn is_zero(&self) -> bool {
        self.sign == Sign::Zero
    }

    pub fn is_one(&self) -> bool {
        self.sign == Sign::Pos && self.mag.is_one()
    }

    pub fn neg(&self) -> Self {
        let sign = match self.sign {
            Sign::Neg => Sign::Pos,
            Sign::Zero => Sign::Zero,
            Sign::Pos => Sign::Neg,
        };
        Rational { sign, mag: self.mag.clone() }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        match (self.sign, rhs.sign) {
            (Sign::Zero, _) => rhs.clone(),
            (_, Sign::Zero) => self.clone(),
            (a, b) if a == b => Rational { sign: a, mag: self.mag.add(&rhs.mag) },
            (a, _) => {
                // opposite signs: subtract the smaller magnitude
                if rhs.mag.leq(&self.mag) {
                    Rational::new(a, self.mag.checked_sub(&rhs.mag).unwrap())
                } else {
                    Rational::new(
                        if a == Sign::Pos { Sign::Neg } else { Sign::Pos },
                        rhs.mag.checked_sub(&self.mag).unwrap(),
                    )
                }
            }
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let sign = match (self.sign, rhs.sign) {
            (Sign::Zero, _) | (_, Sign::Zero) => Sign::Zero,
            (a, b) if a == b => Sign::Pos,
            _ => Sign::Neg,
        };
        Rational { sign, mag: self.mag.mul(&rhs.mag) }
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, ArithError> {
        if rhs.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        let sign = match (self.sign, rhs.sign) {
            (Sign::Zero, _) => Sign::Zero,
            (a, b) if a == b => Sign::Pos,
            _ => Sign::Neg,
        };
        Ok(Rational { sign, mag: self.mag.div(&rhs.mag)? })
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign == Sign::Neg {
            write!(f, "-{}", self.mag)
        } else {
            write!(f, "{}", self.mag)
        }
    }
}

impl FromStr for Rational {
    type Err = ArithError;

    fn from_str(s: &str) -> Result<Self, ArithError> {
        let t = s.trim();
        let (sign, rest) = match t.strip_prefix('-') {
            Some(rest) => (Sign::Neg, rest),
            None => (Sign::Pos, t.strip_prefix('+').unwrap_or(t)),
        };
        let mag: NonNegRational = rest.parse()?;
        Ok(Rational::new(if mag.is_zero() { Sign::Zero } else { sign }, mag))
    }
}

/// Residue `value` modulo `modulus`, with `modulus >= 2`. Operations are
/// only defined between equal moduli.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ModularInt {
    value: u64,
    modulus: u64,
}

impl ModularInt {
    pub fn new(value: u64, modulus: u64) -> Result<Self, ArithError> {
        if modulus < 2 {
            return Err(ArithError::BadModulus(modulus));
        }
        Ok(ModularInt { value: value % modulus, modulus })
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn is_one(&self) -> bool {
        self.value == 1
    }

    fn check(&self, rhs: &Self) -> Result<(), ArithError> {
        if self.modulus != rhs.modulus {
            Err(ArithError::ModulusMismatch(self.modulus, rhs.modulus))
        } else {
            Ok(())
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, ArithError> {
        self.check(rhs)?;
        let v = ((self.value as u128 + rhs.value as u128) % self.modulus as u128) as u64;
        Ok(ModularInt { value: v, modulus: self.modulus })
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, ArithError> {
        self.check(rhs)?;
        let v = ((self.value as u128 * rhs.value as u128) % self.modulus as u128) as u64;
        Ok(ModularInt { value: v, modulus: self.modulus })
    }

    pub fn neg(&self) -> Self {
        ModularInt { value: (self.modulus - self.value) % self.modulus, modulus: self.modulus }
    }

    /// Multiplicative inverse, if the value is a unit modulo the modulus.
    pub fn inv(&self) -> Option<Self> {
        // extended Euclid on (value, modulus)
        let (mut r0, mut r1) = (self.modulus as i128, self.value as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        if r0 != 1 {
            return None;
        }
        let m = self.modulus as i128;
        Some(ModularInt { value: (t0.rem_euclid(m)) as u64, modulus: self.modulus })
    }
}

impl fmt::Display for ModularInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.value, self.modulus)
    }
}

/// A coefficient value from one of the builtin domains.
///
/// The domains form a closed enumeration rather than an open plugin
/// system, so the structural flags reported by [`descriptor_of`] can be
/// trusted by everything downstream.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Coeff {
    Nat(Natural),
    NonNegRat(NonNegRational),
    Rat(Rational),
    Mod(ModularInt),
}

impl Coeff {
    pub fn domain(&self) -> CoeffDomain {
        match self {
            Coeff::Nat(_) => CoeffDomain::Naturals,
            Coeff::NonNegRat(_) => CoeffDomain::NonNegRationals,
            Coeff::Rat(_) => CoeffDomain::Rationals,
            Coeff::Mod(m) => CoeffDomain::Modular(m.modulus()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Nat(v) => v.is_zero(),
            Coeff::NonNegRat(v) => v.is_zero(),
            Coeff::Rat(v) => v.is_zero(),
            Coeff::Mod(v) => v.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Nat(v) => v.is_one(),
            Coeff::NonNegRat(v) => v.is_one(),
            Coeff::Rat(v) => v.is_one(),
            Coeff::Mod(v) => v.is_one(),
        }
    }

    fn mismatch(&self, rhs: &Self) -> ArithError {
        ArithError::DomainMismatch(self.domain().to_string(), rhs.domain().to_string())
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Nat(v) => write!(f, "{v}"),
            Coeff::NonNegRat(v) => write!(f, "{v}"),
            Coeff::Rat(v) => write!(f, "{v}"),
            Coeff::Mod(v) => write!(f, "{v}"),
        }
    }
}

/// Exact sum of two coefficients from the same domain.
pub fn coeff_add(a: &Coeff, b: &Coeff) -> Result<Coeff, ArithError> {
    match (a, b) {
        (Coeff::Nat(x), Coeff::Nat(y)) => Ok(Coeff::Nat(x.add(y))),
        (Coeff::NonNegRat(x), Coeff::NonNegRat(y)) => Ok(Coeff::NonNegRat(x.add(y))),
        (Coeff::Rat(x), Coeff::Rat(y)) => Ok(Coeff::Rat(x.add(y))),
        (Coeff::Mod(x), Coeff::Mod(y)) => Ok(Coeff::Mod(x.add(y)?)),
        _ => Err(a.mismatch(b)),
    }
}

/// Exact product of two coefficients from the same domain.
pub fn coeff_mul(a: &Coeff, b: &Coeff) -> Result<Coeff, ArithError> {
    match (a, b) {
        (Coeff::Nat(x), Coeff::Nat(y)) => Ok(Coeff::Nat(x.mul(y))),
        (Coeff::NonNegRat(x), Coeff::NonNegRat(y)) => Ok(Coeff::NonNegRat(x.mul(y))),
        (Coeff::Rat(x), Coeff::Rat(y)) => Ok(Coeff::Rat(x.mul(y))),
        (Coeff::Mod(x), Coeff::Mod(y)) => Ok(Coeff::Mod(x.mul(y)?)),
        _ => Err(a.mismatch(b)),
    }
}

/// `a - b` where the domain supports it (everywhere in `Q` and `Z/m`;
/// partial in `N` and `Q+`, where `None` means no difference exists).
pub fn coeff_checked_sub(a: &Coeff, b: &Coeff) -> Result<Option<Coeff>, ArithError> {
    match (a, b) {
        (Coeff::Nat(x), Coeff::Nat(y)) => Ok(x.checked_sub(y).map(Coeff::Nat)),
        (Coeff::NonNegRat(x), Coeff::NonNegRat(y)) => {
            Ok(x.checked_sub(y).map(Coeff::NonNegRat))
        }
        (Coeff::Rat(x), Coeff::Rat(y)) => Ok(Some(Coeff::Rat(x.sub(y)))),
        (Coeff::Mod(x), Coeff::Mod(y)) => Ok(Some(Coeff::Mod(x.add(&y.neg())?))),
        _ => Err(a.mismatch(b)),
    }
}

/// One of the builtin coefficient domains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CoeffDomain {
    /// `N`: the naturals with zero.
    Naturals,
    /// `Q+ ∪ {0}`: non-negative rationals.
    NonNegRationals,
    /// `Q`: signed rationals.
    Rationals,
    /// `Z/m`: integers modulo `m`.
    Modular(u64),
}

impl CoeffDomain {
    pub fn zero(&self) -> Coeff {
        match self {
            CoeffDomain::Naturals => Coeff::Nat(Natural::zero()),
            CoeffDomain::NonNegRationals => Coeff::NonNegRat(NonNegRational::zero()),
            CoeffDomain::Rationals => Coeff::Rat(Rational::zero()),
            CoeffDomain::Modular(m) => Coeff::Mod(ModularInt::new(0, *m).expect("modulus checked")),
        }
    }

    pub fn one(&self) -> Coeff {
        match self {
            CoeffDomain::Naturals => Coeff::Nat(Natural::one()),
            CoeffDomain::NonNegRationals => Coeff::NonNegRat(NonNegRational::one()),
            CoeffDomain::Rationals => Coeff::Rat(Rational::one()),
            CoeffDomain::Modular(m) => Coeff::Mod(ModularInt::new(1, *m).expect("modulus checked")),
        }
    }

    pub fn from_u64(&self, k: u64) -> Coeff {
        match self {
            CoeffDomain::Naturals => Coeff::Nat(Natural::from_u64(k)),
            CoeffDomain::NonNegRationals => Coeff::NonNegRat(NonNegRational::from_u64(k)),
            CoeffDomain::Rationals => Coeff::Rat(Rational::from_i64(k as i64)),
            CoeffDomain::Modular(m) => Coeff::Mod(ModularInt::new(k, *m).expect("modulus checked")),
        }
    }

    /// Number of elements, for the finite domains.
    pub fn finite_order(&self) -> Option<u64> {
        match self {
            CoeffDomain::Modular(m) => Some(*m),
            _ => None,
        }
    }

    /// Whether exact division by nonzero elements is total (field-like).
    pub fn is_field(&self) -> bool {
        match self {
            CoeffDomain::Rationals => true,
            CoeffDomain::Modular(m) => is_prime(*m),
            _ => false,
        }
    }

    pub fn parse_coeff(&self, s: &str) -> Result<Coeff, ArithError> {
        match self {
            CoeffDomain::Naturals => s.parse().map(Coeff::Nat),
            CoeffDomain::NonNegRationals => s.parse().map(Coeff::NonNegRat),
            CoeffDomain::Rationals => s.parse().map(Coeff::Rat),
            CoeffDomain::Modular(m) => {
                let t = s.trim();
                let head = t.split_once("mod").map(|(h, _)| h).unwrap_or(t);
                let v: u64 = head
                    .trim()
                    .parse()
                    .map_err(|_| ArithError::Parse(s.to_string(), "modular int"))?;
                ModularInt::new(v, *m).map(Coeff::Mod)
            }
        }
    }

    /// Coefficient rendering without the `mod m` suffix, for use inside
    /// formal sums where the domain is clear from context.
    pub fn render_coeff(&self, c: &Coeff) -> String {
        match c {
            Coeff::Mod(v) => v.value().to_string(),
            other => other.to_string(),
        }
    }
}

impl fmt::Display for CoeffDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoeffDomain::Naturals => write!(f, "nat"),
            CoeffDomain::NonNegRationals => write!(f, "qplus"),
            CoeffDomain::Rationals => write!(f, "q"),
            CoeffDomain::Modular(m) => write!(f, "z{m}"),
        }
    }
}

impl FromStr for CoeffDomain {
    type Err = ArithError;

    /// Accepts `nat`, `qplus`, `q`, `f<p>` (prime required), `z<m>`.
    fn from_str(s: &str) -> Result<Self, ArithError> {
        let t = s.trim().to_ascii_lowercase();
        match t.as_str() {
            "nat" | "n" => Ok(CoeffDomain::Naturals),
            "qplus" | "q+" => Ok(CoeffDomain::NonNegRationals),
            "q" => Ok(CoeffDomain::Rationals),
            _ => {
                if let Some(p) = t.strip_prefix('f') {
                    let p: u64 =
                        p.parse().map_err(|_| ArithError::Parse(s.to_string(), "domain"))?;
                    if !is_prime(p) {
                        return Err(ArithError::Parse(s.to_string(), "prime field order"));
                    }
                    Ok(CoeffDomain::Modular(p))
                } else if let Some(m) = t.strip_prefix('z') {
                    let m: u64 =
                        m.parse().map_err(|_| ArithError::Parse(s.to_string(), "domain"))?;
                    if m < 2 {
                        return Err(ArithError::BadModulus(m));
                    }
                    Ok(CoeffDomain::Modular(m))
                } else {
                    Err(ArithError::Parse(s.to_string(), "domain"))
                }
            }
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Structural flags of a coefficient domain, as used by the group-semiring
/// hypotheses checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientDescriptor {
    pub commutative: bool,
    pub zero_sum_free: bool,
    pub zero_divisor_free: bool,
    pub additively_cancellative: bool,
    pub is_ring: bool,
}

/// Structural flags of a builtin domain. For the finite domains the flags
/// are computed by scanning every instance of each axiom, not hard-coded;
/// for `N`, `Q+` and `Q` they are standard facts (spot-checked by sampling
/// in the test suite).
pub fn descriptor_of(domain: CoeffDomain) -> CoefficientDescriptor {
    match domain {
        CoeffDomain::Naturals | CoeffDomain::NonNegRationals => CoefficientDescriptor {
            commutative: true,
            zero_sum_free: true,
            zero_divisor_free: true,
            additively_cancellative: true,
            is_ring: false,
        },
        CoeffDomain::Rationals => CoefficientDescriptor {
            commutative: true,
            zero_sum_free: false,
            zero_divisor_free: true,
            additively_cancellative: true,
            is_ring: true,
        },
        CoeffDomain::Modular(m) => descriptor_of_modular(m),
    }
}

fn descriptor_of_modular(m: u64) -> CoefficientDescriptor {
    let mut commutative = true;
    let mut zero_divisor_free = true;
    for a in 0..m {
        for b in 0..m {
            let ab = (a as u128 * b as u128 % m as u128) as u64;
            let ba = (b as u128 * a as u128 % m as u128) as u64;
            if ab != ba {
                commutative = false;
            }
            if a != 0 && b != 0 && ab == 0 {
                zero_divisor_free = false;
            }
        }
    }
    // zero sums: a + b = 0 with a, b nonzero
    let mut zero_sum_free = true;
    for a in 1..m {
        let b = m - a;
        if b != 0 && (a + b) % m == 0 {
            zero_sum_free = false;
            break;
        }
    }
    // additive cancellativity: for each c the map a -> a + c must be injective
    let mut additively_cancellative = true;
    'outer: for c in 0..m {
        let mut seen = vec![false; m as usize];
        for a in 0..m {
            let s = ((a + c) % m) as usize;
            if seen[s] {
                additively_cancellative = false;
                break 'outer;
            }
            seen[s] = true;
        }
    }
    // ring: every element has an additive inverse
    let mut is_ring = true;
    for a in 0..m {
        if !(0..m).any(|b| (a + b) % m == 0) {
            is_ring = false;
            break;
        }
    }
    CoefficientDescriptor {
        commutative,
        zero_sum_free,
        zero_divisor_free,
        additively_cancellative,
        is_ring,
    }
}
