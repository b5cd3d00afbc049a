//! Runtime-selected exact commutative rings.
//!
//! A [`Ring`] is a descriptor chosen at runtime; its elements are
//! [`RingValue`]s. Values do not carry their ring, so every operation goes
//! through the descriptor, which checks membership and keeps results in
//! canonical form.

mod poly;

pub use poly::{Monomial, Poly};

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest accepted modulus (exclusive), so that residue products fit in `u64`.
pub const MAX_MODULUS: u64 = 1 << 32;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RingKind {
    Integer,
    Rational,
    PrimeField { p: u64 },
    /// `F_p[ε]/(ε²)`.
    DualNumbers { p: u64 },
    PolyOverInt { variables: Arc<[String]> },
}

/// Descriptor of a commutative ring. Construction validates the parameters,
/// so a `Ring` always has a prime modulus and well-formed variable names.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ring {
    kind: RingKind,
}

/// An element of some [`Ring`], always in canonical form:
/// fractions reduced with positive denominator, residues in `[0, p)`,
/// dual numbers `a + bε` as `Dual(a, b)` with both parts in `[0, p)`,
/// polynomials without zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RingValue {
    Int(BigInt),
    Rat(BigRational),
    Residue(u64),
    Dual(u64, u64),
    Poly(Poly),
}

pub(crate) const VALIDATED: &str = "operands were validated against the ring";

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn check_modulus(p: u64) -> Result<()> {
    if p >= MAX_MODULUS {
        return Err(Error::InvalidParameters(format!(
            "modulus {p} exceeds the supported bound {MAX_MODULUS}"
        )));
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(())
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn bigint_mod(x: &BigInt, p: u64) -> u64 {
    x.mod_floor(&BigInt::from(p))
        .to_u64()
        .expect("residue is below the modulus")
}

impl Ring {
    pub fn integer() -> Self {
        Ring { kind: RingKind::Integer }
    }

    pub fn rational() -> Self {
        Ring { kind: RingKind::Rational }
    }

    pub fn prime_field(p: u64) -> Result<Self> {
        check_modulus(p)?;
        Ok(Ring { kind: RingKind::PrimeField { p } })
    }

    pub fn dual_numbers(p: u64) -> Result<Self> {
        check_modulus(p)?;
        Ok(Ring { kind: RingKind::DualNumbers { p } })
    }

    pub fn polynomial<S: Into<String>, I: IntoIterator<Item = S>>(variables: I) -> Result<Self> {
        let vars: Vec<String> = variables.into_iter().map(Into::into).collect();
        if vars.is_empty() {
            return Err(Error::InvalidVariables("no variables".into()));
        }
        let mut seen = BTreeSet::new();
        for v in &vars {
            if v.is_empty() {
                return Err(Error::InvalidVariables("empty variable name".into()));
            }
            if !seen.insert(v.as_str()) {
                return Err(Error::InvalidVariables(format!("duplicate variable {v}")));
            }
        }
        Ok(Ring {
            kind: RingKind::PolyOverInt { variables: vars.into() },
        })
    }

    pub fn kind(&self) -> &RingKind {
        &self.kind
    }

    /// The prime `p` for `F_p` and `F_p[ε]`.
    pub fn modulus(&self) -> Option<u64> {
        match self.kind {
            RingKind::PrimeField { p } | RingKind::DualNumbers { p } => Some(p),
            _ => None,
        }
    }

    pub fn variables(&self) -> &[String] {
        match &self.kind {
            RingKind::PolyOverInt { variables } => variables,
            _ => &[],
        }
    }

    pub fn is_field(&self) -> bool {
        matches!(self.kind, RingKind::Rational | RingKind::PrimeField { .. })
    }

    pub fn is_integral_domain(&self) -> bool {
        !matches!(self.kind, RingKind::DualNumbers { .. })
    }

    /// Fields and dual numbers: local rings in which a unit pivot can always
    /// be found in a column that generates the unit ideal.
    pub fn is_local(&self) -> bool {
        self.is_field() || matches!(self.kind, RingKind::DualNumbers { .. })
    }

    pub fn is_reduced(&self) -> bool {
        self.is_integral_domain()
    }

    /// Number of elements, if finite.
    pub fn size(&self) -> Option<u64> {
        match self.kind {
            RingKind::PrimeField { p } => Some(p),
            RingKind::DualNumbers { p } => Some(p * p),
            _ => None,
        }
    }

    pub fn contains(&self, x: &RingValue) -> bool {
        match (&self.kind, x) {
            (RingKind::Integer, RingValue::Int(_)) => true,
            (RingKind::Rational, RingValue::Rat(q)) => {
                q.denom().is_positive() && q.numer().gcd(q.denom()).is_one()
            }
            (RingKind::PrimeField { p }, RingValue::Residue(a)) => a < p,
            (RingKind::DualNumbers { p }, RingValue::Dual(a, b)) => a < p && b < p,
            (RingKind::PolyOverInt { variables }, RingValue::Poly(f)) => {
                f.all_terms_have_nvars(variables.len())
            }
            _ => false,
        }
    }

    fn check(&self, x: &RingValue) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// Brings a value of the right shape into canonical form.
    pub fn canonicalize(&self, x: RingValue) -> Result<RingValue> {
        Ok(match (&self.kind, x) {
            (RingKind::Integer, v @ RingValue::Int(_)) => v,
            (RingKind::Rational, RingValue::Rat(q)) => {
                if q.denom().is_zero() {
                    return Err(Error::NotInRing);
                }
                RingValue::Rat(BigRational::new(q.numer().clone(), q.denom().clone()))
            }
            (RingKind::Rational, RingValue::Int(n)) => RingValue::Rat(BigRational::from_integer(n)),
            (RingKind::PrimeField { p }, RingValue::Residue(a)) => RingValue::Residue(a % p),
            (RingKind::DualNumbers { p }, RingValue::Dual(a, b)) => RingValue::Dual(a % p, b % p),
            (RingKind::PolyOverInt { variables }, RingValue::Poly(f)) => {
                if !f.all_terms_have_nvars(variables.len()) {
                    return Err(Error::NotInRing);
                }
                RingValue::Poly(Poly::from_terms(
                    f.terms().map(|(m, c)| (m.clone(), c.clone())),
                ))
            }
            _ => return Err(Error::NotInRing),
        })
    }

    pub fn zero(&self) -> RingValue {
        self.from_i64(0)
    }

    pub fn one(&self) -> RingValue {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> RingValue {
        self.from_bigint(&BigInt::from(n))
    }

    /// Image of an integer under the unique ring map `ℤ → R`.
    pub fn from_bigint(&self, n: &BigInt) -> RingValue {
        match &self.kind {
            RingKind::Integer => RingValue::Int(n.clone()),
            RingKind::Rational => RingValue::Rat(BigRational::from_integer(n.clone())),
            RingKind::PrimeField { p } => RingValue::Residue(bigint_mod(n, *p)),
            RingKind::DualNumbers { p } => RingValue::Dual(bigint_mod(n, *p), 0),
            RingKind::PolyOverInt { variables } => {
                RingValue::Poly(Poly::constant(variables.len(), n.clone()))
            }
        }
    }

    /// The dual-number unit `ε`.
    pub fn epsilon(&self) -> Result<RingValue> {
        match self.kind {
            RingKind::DualNumbers { .. } => Ok(RingValue::Dual(0, 1)),
            _ => Err(Error::UnsupportedRing("dual numbers")),
        }
    }

    /// The polynomial variable with the given index.
    pub fn var(&self, index: usize) -> Result<RingValue> {
        match &self.kind {
            RingKind::PolyOverInt { variables } if index < variables.len() => {
                Ok(RingValue::Poly(Poly::var(variables.len(), index)))
            }
            RingKind::PolyOverInt { .. } => Err(Error::InvalidVariables(format!(
                "variable index {index} out of range"
            ))),
            _ => Err(Error::UnsupportedRing("a polynomial ring")),
        }
    }

    pub fn var_named(&self, name: &str) -> Result<RingValue> {
        let idx = self
            .variables()
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::InvalidVariables(format!("unknown variable {name}")))?;
        self.var(idx)
    }

    pub fn add(&self, x: &RingValue, y: &RingValue) -> Result<RingValue> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.add_unchecked(x, y))
    }

    pub fn sub(&self, x: &RingValue, y: &RingValue) -> Result<RingValue> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.sub_unchecked(x, y))
    }

    pub fn neg(&self, x: &RingValue) -> Result<RingValue> {
        self.check(x)?;
        Ok(self.neg_unchecked(x))
    }

    pub fn mul(&self, x: &RingValue, y: &RingValue) -> Result<RingValue> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.mul_unchecked(x, y))
    }

    pub fn pow(&self, x: &RingValue, exp: u64) -> Result<RingValue> {
        self.check(x)?;
        Ok(self.pow_unchecked(x, exp))
    }

    pub fn is_zero(&self, x: &RingValue) -> bool {
        match x {
            RingValue::Int(n) => n.is_zero(),
            RingValue::Rat(q) => q.is_zero(),
            RingValue::Residue(a) => *a == 0,
            RingValue::Dual(a, b) => *a == 0 && *b == 0,
            RingValue::Poly(f) => f.is_zero(),
        }
    }

    pub fn is_one(&self, x: &RingValue) -> bool {
        *x == self.one()
    }

    /// Exact unit test for each ring: `±1` in ℤ and ℤ[X], nonzero elements
    /// of fields, `a + bε` with `a ≠ 0` in dual numbers.
    pub fn is_unit(&self, x: &RingValue) -> Result<bool> {
        self.check(x)?;
        Ok(self.is_unit_unchecked(x))
    }

    pub fn inverse(&self, x: &RingValue) -> Result<RingValue> {
        self.check(x)?;
        self.inverse_unchecked(x)
    }

    /// All elements of a finite ring, each exactly once. Dual numbers are
    /// listed as `a + bε` with `b` in the outer loop: `0, 1, …, ε, 1+ε, …`.
    pub fn elements(&self) -> Result<Elements> {
        match self.kind {
            RingKind::PrimeField { p } => Ok(Elements { p, dual: false, next: 0, total: p }),
            RingKind::DualNumbers { p } => Ok(Elements { p, dual: true, next: 0, total: p * p }),
            _ => Err(Error::InfiniteRing),
        }
    }

    /// Evaluates a polynomial of this ring at `assignment` in `target`,
    /// i.e. applies the ring map `ℤ[X] → target` sending `X_i ↦ assignment[i]`.
    pub fn evaluate(
        &self,
        f: &RingValue,
        target: &Ring,
        assignment: &[RingValue],
    ) -> Result<RingValue> {
        let RingKind::PolyOverInt { variables } = &self.kind else {
            return Err(Error::UnsupportedRing("a polynomial ring"));
        };
        self.check(f)?;
        if assignment.len() != variables.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} values for {} variables",
                assignment.len(),
                variables.len()
            )));
        }
        for a in assignment {
            target.check(a)?;
        }
        let RingValue::Poly(f) = f else { unreachable!() };
        let mut acc = target.zero();
        for (m, c) in f.terms() {
            let mut term = target.from_bigint(c);
            for (a, &e) in assignment.iter().zip(m.exponents()) {
                if e > 0 {
                    term = target.mul_unchecked(&term, &target.pow_unchecked(a, u64::from(e)));
                }
            }
            acc = target.add_unchecked(&acc, &term);
        }
        Ok(acc)
    }

    /// Displays `x` using this ring's notation (variable names, `ε`).
    pub fn show<'a>(&'a self, x: &'a RingValue) -> Show<'a> {
        Show { ring: self, value: x }
    }

    pub(crate) fn add_unchecked(&self, x: &RingValue, y: &RingValue) -> RingValue {
        use RingValue::*;
        match (&self.kind, x, y) {
            (_, Int(a), Int(b)) => Int(a + b),
            (_, Rat(a), Rat(b)) => Rat(a + b),
            (RingKind::PrimeField { p }, Residue(a), Residue(b)) => Residue((a + b) % p),
            (RingKind::DualNumbers { p }, Dual(a, b), Dual(c, d)) => Dual((a + c) % p, (b + d) % p),
            (_, Poly(a), Poly(b)) => Poly(a.add(b)),
            _ => panic!("{VALIDATED}"),
        }
    }

    pub(crate) fn neg_unchecked(&self, x: &RingValue) -> RingValue {
        use RingValue::*;
        match (&self.kind, x) {
            (_, Int(a)) => Int(-a),
            (_, Rat(a)) => Rat(-a),
            (RingKind::PrimeField { p }, Residue(a)) => Residue((p - a) % p),
            (RingKind::DualNumbers { p }, Dual(a, b)) => Dual((p - a) % p, (p - b) % p),
            (_, Poly(a)) => Poly(a.neg()),
            _ => panic!("{VALIDATED}"),
        }
    }

    pub(crate) fn sub_unchecked(&self, x: &RingValue, y: &RingValue) -> RingValue {
        use RingValue::*;
        match (x, y) {
            (Int(a), Int(b)) => Int(a - b),
            (Poly(a), Poly(b)) => Poly(a.sub(b)),
            _ => self.add_unchecked(x, &self.neg_unchecked(y)),
        }
    }

    pub(crate) fn mul_unchecked(&self, x: &RingValue, y: &RingValue) -> RingValue {
        use RingValue::*;
        match (&self.kind, x, y) {
            (_, Int(a), Int(b)) => Int(a * b),
            (_, Rat(a), Rat(b)) => Rat(a * b),
            (RingKind::PrimeField { p }, Residue(a), Residue(b)) => Residue(a * b % p),
            // (a + bε)(c + dε) = ac + (ad + bc)ε since ε² = 0
            (RingKind::DualNumbers { p }, Dual(a, b), Dual(c, d)) => {
                Dual(a * c % p, (a * d % p + b * c % p) % p)
            }
            (_, Poly(a), Poly(b)) => Poly(a.mul(b)),
            _ => panic!("{VALIDATED}"),
        }
    }

    pub(crate) fn pow_unchecked(&self, x: &RingValue, mut exp: u64) -> RingValue {
        let mut acc = self.one();
        let mut base = x.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul_unchecked(&acc, &base);
            }
            exp >>= 1;
            if exp > 0 {
                base = self.mul_unchecked(&base, &base);
            }
        }
        acc
    }

    pub(crate) fn is_unit_unchecked(&self, x: &RingValue) -> bool {
        match x {
            RingValue::Int(n) => n.abs().is_one(),
            RingValue::Rat(q) => !q.is_zero(),
            RingValue::Residue(a) => *a != 0,
            RingValue::Dual(a, _) => *a != 0,
            RingValue::Poly(f) => f.is_constant() && f.constant_term().abs().is_one(),
        }
    }

    pub(crate) fn inverse_unchecked(&self, x: &RingValue) -> Result<RingValue> {
        use RingValue::*;
        if !self.is_unit_unchecked(x) {
            return Err(Error::NotAUnit);
        }
        Ok(match (&self.kind, x) {
            (_, Int(_)) | (_, Poly(_)) => x.clone(),
            (_, Rat(q)) => Rat(q.recip()),
            (RingKind::PrimeField { p }, Residue(a)) => Residue(inv_mod(*a, *p)),
            // (a + bε)⁻¹ = a⁻¹ − b a⁻² ε
            (RingKind::DualNumbers { p }, Dual(a, b)) => {
                let ai = inv_mod(*a, *p);
                Dual(ai, (p - b * (ai * ai % p) % p) % p)
            }
            _ => panic!("{VALIDATED}"),
        })
    }

    /// `x / y` when `y` divides `x` exactly. Used by fraction-free elimination.
    pub(crate) fn div_exact_unchecked(&self, x: &RingValue, y: &RingValue) -> Result<RingValue> {
        use RingValue::*;
        match (x, y) {
            (Int(a), Int(b)) => {
                if b.is_zero() {
                    return Err(Error::InexactDivision);
                }
                let (q, r) = a.div_rem(b);
                if r.is_zero() {
                    Ok(Int(q))
                } else {
                    Err(Error::InexactDivision)
                }
            }
            (Poly(a), Poly(b)) => a.div_exact(b).map(Poly).ok_or(Error::InexactDivision),
            _ => {
                let inv = self.inverse_unchecked(y).map_err(|_| Error::InexactDivision)?;
                Ok(self.mul_unchecked(x, &inv))
            }
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            RingKind::Integer => write!(f, "ZZ"),
            RingKind::Rational => write!(f, "QQ"),
            RingKind::PrimeField { p } => write!(f, "F_{p}"),
            RingKind::DualNumbers { p } => write!(f, "F_{p}[e]/(e^2)"),
            RingKind::PolyOverInt { variables } => write!(f, "ZZ[{}]", variables.join(",")),
        }
    }
}

/// Iterator over the elements of a finite ring.
#[derive(Clone, Debug)]
pub struct Elements {
    p: u64,
    dual: bool,
    next: u64,
    total: u64,
}

impl Iterator for Elements {
    type Item = RingValue;

    fn next(&mut self) -> Option<RingValue> {
        if self.next >= self.total {
            return None;
        }
        let i = self.next;
        self.next += 1;
        Some(if self.dual {
            RingValue::Dual(i % self.p, i / self.p)
        } else {
            RingValue::Residue(i)
        })
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for Elements {}

pub struct Show<'a> {
    ring: &'a Ring,
    value: &'a RingValue,
}

impl fmt::Display for Show<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value {
            RingValue::Int(n) => write!(f, "{n}"),
            RingValue::Rat(q) => write!(f, "{q}"),
            RingValue::Residue(a) => write!(f, "{a}"),
            RingValue::Dual(a, b) => match (a, b) {
                (a, 0) => write!(f, "{a}"),
                (0, 1) => write!(f, "e"),
                (0, b) => write!(f, "{b}e"),
                (a, 1) => write!(f, "{a}+e"),
                (a, b) => write!(f, "{a}+{b}e"),
            },
            RingValue::Poly(p) => fmt_poly(p, self.ring.variables(), f),
        }
    }
}

fn fmt_poly(p: &Poly, vars: &[String], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    for (i, (m, c)) in p.terms().rev().enumerate() {
        let mut factors = Vec::new();
        for (name, &e) in vars.iter().zip(m.exponents()) {
            match e {
                0 => {}
                1 => factors.push(name.clone()),
                e => factors.push(format!("{name}^{e}")),
            }
        }
        let neg = c.is_negative();
        let abs = c.abs();
        if i == 0 {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { '-' } else { '+' })?;
        }
        let body = factors.join("*");
        if body.is_empty() {
            write!(f, "{abs}")?;
        } else if abs.is_one() {
            write!(f, "{body}")?;
        } else {
            write!(f, "{}*{body}", abs)?;
        }
    }
    Ok(())
}
