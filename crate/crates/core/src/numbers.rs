//! Exact arithmetic over valued fields.
//!
//! Three kinds of absolute value are supported: the usual archimedean one
//! on `Q`, the `p`-adic one on `Q`, and the `t`-adic one on Laurent
//! polynomials `F_p[t, 1/t]`. Norms are never turned into floating point
//! numbers. Archimedean norms are compared as exact rationals, ultrametric
//! norms through their integer valuations.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NumberError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("valuation mismatch: {0} vs {1}")]
    ValuationMismatch(Valuation, Valuation),
    #[error("value `{value}` cannot carry the {valuation} valuation")]
    IncompatibleKind { value: String, valuation: Valuation },
    #[error("zero is not allowed here")]
    Zero,
    #[error("`{0}` is not invertible")]
    NotInvertible(String),
    #[error("cannot parse `{0}`")]
    Parse(String),
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A verified prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self, NumberError> {
        if is_prime(p) {
            Ok(Prime(p))
        } else {
            Err(NumberError::NotPrime(p))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Order of an element at a prime (or at `t`). `Infinity` is the order of zero
/// and compares above every finite order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Order {
    Finite(i64),
    Infinity,
}

impl Order {
    pub fn finite(self) -> Option<i64> {
        match self {
            Order::Finite(v) => Some(v),
            Order::Infinity => None,
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(v) => write!(f, "{v}"),
            Order::Infinity => write!(f, "inf"),
        }
    }
}

/// The absolute value a field carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Valuation {
    Archimedean,
    PAdic(Prime),
    /// `t`-adic valuation on `F_p[t, 1/t]`; the prime is the characteristic.
    TAdic(Prime),
}

impl Valuation {
    pub fn p_adic(p: u64) -> Result<Self, NumberError> {
        Ok(Valuation::PAdic(Prime::new(p)?))
    }

    pub fn t_adic(p: u64) -> Result<Self, NumberError> {
        Ok(Valuation::TAdic(Prime::new(p)?))
    }

    pub fn is_ultrametric(self) -> bool {
        !matches!(self, Valuation::Archimedean)
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Archimedean => write!(f, "arch"),
            Valuation::PAdic(p) => write!(f, "{p}adic"),
            Valuation::TAdic(p) => write!(f, "tadic{p}"),
        }
    }
}

impl FromStr for Valuation {
    type Err = NumberError;

    /// Accepts `arch`, `<p>adic` and `tadic<p>`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "arch" || s == "archimedean" {
            return Ok(Valuation::Archimedean);
        }
        let bad = || NumberError::Parse(s.to_string());
        if let Some(p) = s.strip_prefix("tadic") {
            return Valuation::t_adic(p.parse().map_err(|_| bad())?);
        }
        if let Some(p) = s.strip_suffix("adic") {
            return Valuation::p_adic(p.parse().map_err(|_| bad())?);
        }
        Err(bad())
    }
}

fn bigint_order(n: &BigInt, p: u64) -> i64 {
    debug_assert!(!n.is_zero());
    let p = BigInt::from(p);
    let mut n = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

/// `v_p(x) = v_p(numerator) - v_p(denominator)`, infinite for zero.
pub fn padic_valuation(x: &BigRational, p: u64) -> Result<Order, NumberError> {
    Prime::new(p)?;
    Ok(rational_order(x, p))
}

fn rational_order(x: &BigRational, p: u64) -> Order {
    if x.is_zero() {
        Order::Infinity
    } else {
        Order::Finite(bigint_order(x.numer(), p) - bigint_order(x.denom(), p))
    }
}

/// Laurent polynomial over `F_p`. Only nonzero coefficients are stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    p: Prime,
    coeffs: BTreeMap<i64, u64>,
}

impl LaurentPoly {
    pub fn zero(p: Prime) -> Self {
        LaurentPoly { p, coeffs: BTreeMap::new() }
    }

    pub fn monomial(p: Prime, coeff: u64, exp: i64) -> Self {
        Self::from_terms(p, [(exp, coeff)])
    }

    /// Builds a polynomial from `(exponent, coefficient)` terms; repeated
    /// exponents are summed and coefficients reduced mod `p`.
    pub fn from_terms(p: Prime, terms: impl IntoIterator<Item = (i64, u64)>) -> Self {
        let mut coeffs = BTreeMap::new();
        for (e, c) in terms {
            let slot = coeffs.entry(e).or_insert(0u64);
            *slot = (*slot + c % p.0) % p.0;
        }
        coeffs.retain(|_, c| *c != 0);
        LaurentPoly { p, coeffs }
    }

    pub fn characteristic(&self) -> Prime {
        self.p
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.coeffs.iter().map(|(e, c)| (*e, *c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent present.
    pub fn order(&self) -> Order {
        self.coeffs.keys().next().map_or(Order::Infinity, |e| Order::Finite(*e))
    }

    /// `Some((c, k))` when the polynomial is the unit `c t^k`.
    pub fn as_unit(&self) -> Option<(u64, i64)> {
        if self.coeffs.len() == 1 {
            self.coeffs.iter().next().map(|(e, c)| (*c, *e))
        } else {
            None
        }
    }

    fn add(&self, other: &Self) -> Self {
        Self::from_terms(self.p, self.terms().chain(other.terms()))
    }

    fn neg(&self) -> Self {
        let p = self.p.0;
        Self::from_terms(self.p, self.terms().map(|(e, c)| (e, p - c)))
    }

    fn mul(&self, other: &Self) -> Self {
        let p = self.p.0;
        let mut terms = Vec::with_capacity(self.coeffs.len() * other.coeffs.len());
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                terms.push((e1 + e2, ((c1 as u128 * c2 as u128) % p as u128) as u64));
            }
        }
        Self::from_terms(self.p, terms)
    }

    fn inverse(&self) -> Result<Self, NumberError> {
        let (c, k) = self.as_unit().ok_or_else(|| NumberError::NotInvertible(self.to_string()))?;
        Ok(Self::monomial(self.p, mod_inverse(c, self.p.0), -k))
    }
}

fn mod_pow(base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u128;
    let mut b = (base % p) as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % p as u128;
        }
        b = b * b % p as u128;
        exp >>= 1;
    }
    acc as u64
}

fn mod_inverse(c: u64, p: u64) -> u64 {
    // p prime, c nonzero mod p
    mod_pow(c, p - 2, p)
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{};", self.p)?;
        for (i, (e, c)) in self.terms().enumerate() {
            let sep = if i == 0 { " " } else { "," };
            write!(f, "{sep}{e}:{c}")?;
        }
        write!(f, "}}")
    }
}

impl FromStr for LaurentPoly {
    type Err = NumberError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || NumberError::Parse(s.to_string());
        let inner = s.trim().strip_prefix('{').and_then(|r| r.strip_suffix('}')).ok_or_else(bad)?;
        let (p, body) = inner.split_once(';').ok_or_else(bad)?;
        let p = Prime::new(p.trim().parse().map_err(|_| bad())?)?;
        let mut terms = Vec::new();
        for item in body.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (e, c) = item.split_once(':').ok_or_else(bad)?;
            let e: i64 = e.trim().parse().map_err(|_| bad())?;
            let c: u64 = c.trim().parse().map_err(|_| bad())?;
            if c == 0 || c >= p.0 || terms.iter().any(|(e0, _)| *e0 == e) {
                return Err(bad());
            }
            terms.push((e, c));
        }
        Ok(Self::from_terms(p, terms))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldValue {
    Rational(BigRational),
    Laurent(LaurentPoly),
}

impl fmt::Display for FieldValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldValue::Rational(x) => write!(f, "{x}"),
            FieldValue::Laurent(x) => write!(f, "{x}"),
        }
    }
}

/// A field element together with the absolute value it is measured by.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ValuedScalar {
    value: FieldValue,
    valuation: Valuation,
}

impl ValuedScalar {
    pub fn rational(x: BigRational, valuation: Valuation) -> Result<Self, NumberError> {
        if let Valuation::TAdic(_) = valuation {
            return Err(NumberError::IncompatibleKind { value: x.to_string(), valuation });
        }
        Ok(ValuedScalar { value: FieldValue::Rational(x), valuation })
    }

    pub fn ratio(num: i64, den: i64, valuation: Valuation) -> Result<Self, NumberError> {
        if den == 0 {
            return Err(NumberError::Zero);
        }
        Self::rational(BigRational::new(num.into(), den.into()), valuation)
    }

    pub fn integer(n: i64, valuation: Valuation) -> Result<Self, NumberError> {
        Self::ratio(n, 1, valuation)
    }

    pub fn laurent(x: LaurentPoly) -> Self {
        let valuation = Valuation::TAdic(x.characteristic());
        ValuedScalar { value: FieldValue::Laurent(x), valuation }
    }

    pub fn value(&self) -> &FieldValue {
        &self.value
    }

    pub fn valuation(&self) -> Valuation {
        self.valuation
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.value {
            FieldValue::Rational(x) => Some(x),
            FieldValue::Laurent(_) => None,
        }
    }

    pub fn zero_like(&self) -> Self {
        self.with_value(match &self.value {
            FieldValue::Rational(_) => FieldValue::Rational(BigRational::zero()),
            FieldValue::Laurent(x) => FieldValue::Laurent(LaurentPoly::zero(x.p)),
        })
    }

    pub fn one_like(&self) -> Self {
        self.with_value(match &self.value {
            FieldValue::Rational(_) => FieldValue::Rational(BigRational::one()),
            FieldValue::Laurent(x) => FieldValue::Laurent(LaurentPoly::monomial(x.p, 1, 0)),
        })
    }

    fn with_value(&self, value: FieldValue) -> Self {
        ValuedScalar { value, valuation: self.valuation }
    }

    pub fn is_zero(&self) -> bool {
        match &self.value {
            FieldValue::Rational(x) => x.is_zero(),
            FieldValue::Laurent(x) => x.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    fn check(&self, other: &Self) -> Result<(), NumberError> {
        if self.valuation == other.valuation {
            Ok(())
        } else {
            Err(NumberError::ValuationMismatch(self.valuation, other.valuation))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, NumberError> {
        self.check(other)?;
        Ok(self.with_value(match (&self.value, &other.value) {
            (FieldValue::Rational(x), FieldValue::Rational(y)) => FieldValue::Rational(x + y),
            (FieldValue::Laurent(x), FieldValue::Laurent(y)) => FieldValue::Laurent(x.add(y)),
            _ => unreachable!("valuation fixes the value kind"),
        }))
    }

    pub fn neg(&self) -> Self {
        self.with_value(match &self.value {
            FieldValue::Rational(x) => FieldValue::Rational(-x),
            FieldValue::Laurent(x) => FieldValue::Laurent(x.neg()),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, NumberError> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self, NumberError> {
        self.check(other)?;
        Ok(self.with_value(match (&self.value, &other.value) {
            (FieldValue::Rational(x), FieldValue::Rational(y)) => FieldValue::Rational(x * y),
            (FieldValue::Laurent(x), FieldValue::Laurent(y)) => FieldValue::Laurent(x.mul(y)),
            _ => unreachable!("valuation fixes the value kind"),
        }))
    }

    pub fn inverse(&self) -> Result<Self, NumberError> {
        match &self.value {
            FieldValue::Rational(x) if x.is_zero() => Err(NumberError::NotInvertible(self.to_string())),
            FieldValue::Rational(x) => Ok(self.with_value(FieldValue::Rational(x.recip()))),
            FieldValue::Laurent(x) => Ok(self.with_value(FieldValue::Laurent(x.inverse()?))),
        }
    }

    /// Exact `j`-th power; negative exponents need an invertible base.
    pub fn pow(&self, j: i64) -> Result<Self, NumberError> {
        let (base, e) = if j < 0 { (self.inverse()?, j.unsigned_abs()) } else { (self.clone(), j as u64) };
        let mut acc = self.one_like();
        let mut b = base;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b)?;
            }
            e >>= 1;
            if e > 0 {
                b = b.mul(&b)?;
            }
        }
        Ok(acc)
    }

    /// Order at the prime (or at `t`). `None` for archimedean scalars.
    pub fn order(&self) -> Option<Order> {
        match (&self.value, self.valuation) {
            (_, Valuation::Archimedean) => None,
            (FieldValue::Rational(x), Valuation::PAdic(p)) => Some(rational_order(x, p.0)),
            (FieldValue::Laurent(x), _) => Some(x.order()),
            _ => unreachable!("valuation fixes the value kind"),
        }
    }

    /// Parses the canonical text form under a given valuation.
    pub fn parse(text: &str, valuation: Valuation) -> Result<Self, NumberError> {
        match valuation {
            Valuation::TAdic(p) => {
                let x: LaurentPoly = text.parse()?;
                if x.p != p {
                    return Err(NumberError::Parse(text.to_string()));
                }
                Ok(Self::laurent(x))
            }
            _ => {
                let x: BigRational = text.trim().parse().map_err(|_| NumberError::Parse(text.to_string()))?;
                Self::rational(x, valuation)
            }
        }
    }
}

impl fmt::Display for ValuedScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Exact comparison of `|x|` and `|y|`.
pub fn norm_compare(x: &ValuedScalar, y: &ValuedScalar) -> Result<Ordering, NumberError> {
    x.check(y)?;
    Ok(match (x.order(), y.order()) {
        (Some(vx), Some(vy)) => vy.cmp(&vx),
        _ => {
            let (x, y) = (x.as_rational().expect("archimedean"), y.as_rational().expect("archimedean"));
            x.abs().cmp(&y.abs())
        }
    })
}

/// `|a| >= 2`. For ultrametric valuations this is `v(a) <= -1`, since the
/// norm is then at least the residue characteristic.
pub fn has_norm_at_least_two(a: &ValuedScalar) -> Result<bool, NumberError> {
    if a.is_zero() {
        return Err(NumberError::Zero);
    }
    Ok(match a.order() {
        Some(Order::Finite(v)) => v <= -1,
        Some(Order::Infinity) => unreachable!("nonzero"),
        None => a.as_rational().expect("archimedean").abs() >= BigRational::from_integer(2.into()),
    })
}

pub fn scalar_pow(a: &ValuedScalar, j: i64) -> Result<ValuedScalar, NumberError> {
    a.pow(j)
}

/// `|x| / |y|` as an exact rational. Ultrametric norms use base `p`,
/// i.e. `|x| = p^(-v(x))`.
pub fn norm_ratio(x: &ValuedScalar, y: &ValuedScalar) -> Result<BigRational, NumberError> {
    x.check(y)?;
    if y.is_zero() {
        return Err(NumberError::Zero);
    }
    if x.is_zero() {
        return Ok(BigRational::zero());
    }
    match (x.order(), y.order(), x.valuation) {
        (Some(Order::Finite(vx)), Some(Order::Finite(vy)), Valuation::PAdic(p) | Valuation::TAdic(p)) => {
            let p = BigRational::from_integer(BigInt::from(p.0));
            Ok(num_traits::pow::Pow::pow(&p, vy - vx))
        }
        _ => {
            let (x, y) = (x.as_rational().expect("archimedean"), y.as_rational().expect("archimedean"));
            Ok(x.abs() / y.abs())
        }
    }
}

/// Floor of `log2 |x|` for a nonzero rational, computed from bit lengths.
pub fn floor_log2(x: &BigRational) -> Option<i64> {
    if x.is_zero() {
        return None;
    }
    let n = x.numer().abs();
    let d = x.denom().clone();
    let guess = n.bits() as i64 - d.bits() as i64;
    // 2^guess is within a factor 2 of n/d; settle the exact floor.
    let two = BigRational::from_integer(2.into());
    let q = BigRational::new(n, d);
    let mut k = guess;
    while num_traits::pow::Pow::pow(&two, k) > q {
        k -= 1;
    }
    while num_traits::pow::Pow::pow(&two, k + 1) <= q {
        k += 1;
    }
    Some(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn arch(n: i64, d: i64) -> ValuedScalar {
        ValuedScalar::ratio(n, d, Valuation::Archimedean).unwrap()
    }

    fn padic(n: i64, d: i64, p: u64) -> ValuedScalar {
        ValuedScalar::ratio(n, d, Valuation::p_adic(p).unwrap()).unwrap()
    }

    #[test]
    fn padic_valuation_examples() {
        assert_eq!(padic_valuation(&q(12, 1), 2), Ok(Order::Finite(2)));
        assert_eq!(padic_valuation(&q(1, 2), 2), Ok(Order::Finite(-1)));
        assert_eq!(padic_valuation(&q(0, 1), 5), Ok(Order::Infinity));
        assert_eq!(padic_valuation(&q(3, 1), 4), Err(NumberError::NotPrime(4)));
    }

    #[test]
    fn norm_compare_examples() {
        assert_eq!(norm_compare(&padic(1, 3, 3), &padic(1, 1, 3)), Ok(Ordering::Greater));
        assert_eq!(norm_compare(&padic(4, 1, 2), &padic(4, 1, 2)), Ok(Ordering::Equal));
        assert_eq!(norm_compare(&arch(2, 1), &arch(3, 1)), Ok(Ordering::Less));
        assert_eq!(norm_compare(&arch(-5, 1), &arch(3, 1)), Ok(Ordering::Greater));
        assert!(matches!(norm_compare(&arch(2, 1), &padic(2, 1, 2)), Err(NumberError::ValuationMismatch(..))));
    }

    #[test]
    fn norm_at_least_two_examples() {
        assert_eq!(has_norm_at_least_two(&arch(2, 1)), Ok(true));
        assert_eq!(has_norm_at_least_two(&arch(-3, 2)), Ok(false));
        assert_eq!(has_norm_at_least_two(&padic(1, 3, 3)), Ok(true));
        assert_eq!(has_norm_at_least_two(&padic(3, 1, 3)), Ok(false));
        assert_eq!(has_norm_at_least_two(&arch(0, 1)), Err(NumberError::Zero));
        let p = Prime::new(5).unwrap();
        let t_inv = ValuedScalar::laurent(LaurentPoly::monomial(p, 2, -1));
        assert_eq!(has_norm_at_least_two(&t_inv), Ok(true));
        let t = ValuedScalar::laurent(LaurentPoly::monomial(p, 1, 1));
        assert_eq!(has_norm_at_least_two(&t), Ok(false));
    }

    #[test]
    fn pow_examples() {
        assert_eq!(scalar_pow(&arch(2, 1), 3).unwrap(), arch(8, 1));
        assert_eq!(scalar_pow(&arch(2, 1), 0).unwrap(), arch(1, 1));
        assert_eq!(scalar_pow(&padic(1, 3, 3), -2).unwrap(), padic(9, 1, 3));
        assert!(matches!(scalar_pow(&arch(0, 1), -1), Err(NumberError::NotInvertible(_))));

        let p = Prime::new(3).unwrap();
        let not_unit = ValuedScalar::laurent(LaurentPoly::from_terms(p, [(0, 1), (1, 1)]));
        assert!(matches!(not_unit.pow(-1), Err(NumberError::NotInvertible(_))));
        // (1 + t)^3 = 1 + t^3 in characteristic 3
        assert_eq!(not_unit.pow(3).unwrap(), ValuedScalar::laurent(LaurentPoly::from_terms(p, [(0, 1), (3, 1)])));
        let unit = ValuedScalar::laurent(LaurentPoly::monomial(p, 2, -1));
        assert_eq!(unit.pow(-1).unwrap().mul(&unit).unwrap(), unit.one_like());
    }

    #[test]
    fn prime_and_valuation_parsing() {
        assert!(Prime::new(1).is_err());
        assert!(Prime::new(97).is_ok());
        assert_eq!("3adic".parse::<Valuation>(), Valuation::p_adic(3));
        assert_eq!("arch".parse::<Valuation>(), Ok(Valuation::Archimedean));
        assert_eq!("tadic5".parse::<Valuation>(), Valuation::t_adic(5));
        assert!("6adic".parse::<Valuation>().is_err());
        assert!("whatever".parse::<Valuation>().is_err());
    }

    #[test]
    fn text_forms_round_trip() {
        let p = Prime::new(3).unwrap();
        let x = LaurentPoly::from_terms(p, [(-1, 2), (0, 1), (4, 4)]);
        assert_eq!(x.to_string(), "{3; -1:2,0:1,4:1}");
        assert_eq!(x.to_string().parse::<LaurentPoly>().unwrap(), x);
        assert_eq!(LaurentPoly::zero(p).to_string(), "{3;}");
        assert_eq!("{3;}".parse::<LaurentPoly>().unwrap(), LaurentPoly::zero(p));
        assert!("{3; 0:3}".parse::<LaurentPoly>().is_err());
        assert!("{4; 0:1}".parse::<LaurentPoly>().is_err());

        let v = Valuation::p_adic(3).unwrap();
        let s = ValuedScalar::ratio(-6, 4, v).unwrap();
        assert_eq!(s.to_string(), "-3/2");
        assert_eq!(ValuedScalar::parse("-3/2", v).unwrap(), s);
    }

    #[test]
    fn mixed_kinds_are_rejected() {
        assert!(ValuedScalar::ratio(1, 1, Valuation::t_adic(3).unwrap()).is_err());
        let p = Prime::new(3).unwrap();
        let t = ValuedScalar::laurent(LaurentPoly::monomial(p, 1, 1));
        let s = ValuedScalar::laurent(LaurentPoly::monomial(Prime::new(5).unwrap(), 1, 1));
        assert!(t.add(&s).is_err());
        assert!(t.mul(&arch(1, 1)).is_err());
    }

    #[test]
    fn floor_log2_matches_bit_lengths() {
        assert_eq!(floor_log2(&q(1, 1)), Some(0));
        assert_eq!(floor_log2(&q(24, 1)), Some(4));
        assert_eq!(floor_log2(&q(32, 1)), Some(5));
        assert_eq!(floor_log2(&q(1, 3)), Some(-2));
        assert_eq!(floor_log2(&q(-1, 4)), Some(-2));
        assert_eq!(floor_log2(&q(0, 1)), None);
    }

    fn small_rational() -> impl Strategy<Value = BigRational> {
        (-2000i64..2000, 1i64..500).prop_map(|(n, d)| q(n, d))
    }

    proptest! {
        #[test]
        fn ultrametric_inequality(x in small_rational(), y in small_rational(), p in prop::sample::select(vec![2u64, 3, 5, 7])) {
            let vx = padic_valuation(&x, p).unwrap();
            let vy = padic_valuation(&y, p).unwrap();
            let vs = padic_valuation(&(&x + &y), p).unwrap();
            prop_assert!(vs >= vx.min(vy));
            if vx != vy {
                prop_assert_eq!(vs, vx.min(vy));
            }
        }

        #[test]
        fn valuation_is_multiplicative(x in small_rational(), y in small_rational(), p in prop::sample::select(vec![2u64, 3, 5])) {
            let vxy = padic_valuation(&(&x * &y), p).unwrap();
            match (padic_valuation(&x, p).unwrap(), padic_valuation(&y, p).unwrap()) {
                (Order::Finite(a), Order::Finite(b)) => prop_assert_eq!(vxy, Order::Finite(a + b)),
                _ => prop_assert_eq!(vxy, Order::Infinity),
            }
            prop_assert_eq!((&x * &y).abs(), x.abs() * y.abs());
        }

        #[test]
        fn norm_order_is_compatible_with_products(x in small_rational(), y in small_rational(), z in small_rational(),
                                                   val in prop::sample::select(vec!["arch", "2adic", "3adic"])) {
            prop_assume!(!z.is_zero());
            let val: Valuation = val.parse().unwrap();
            let (x, y, z) = (ValuedScalar::rational(x, val).unwrap(), ValuedScalar::rational(y, val).unwrap(),
                             ValuedScalar::rational(z, val).unwrap());
            let xy = norm_compare(&x, &y).unwrap();
            prop_assert_eq!(norm_compare(&y, &x).unwrap(), xy.reverse());
            prop_assert_eq!(norm_compare(&x.mul(&z).unwrap(), &y.mul(&z).unwrap()).unwrap(), xy);
        }

        #[test]
        fn laurent_arithmetic_is_a_ring(a in prop::collection::vec((-4i64..4, 0u64..5), 0..5),
                                        b in prop::collection::vec((-4i64..4, 0u64..5), 0..5),
                                        c in prop::collection::vec((-4i64..4, 0u64..5), 0..5)) {
            let p = Prime::new(5).unwrap();
            let (a, b, c) = (LaurentPoly::from_terms(p, a), LaurentPoly::from_terms(p, b), LaurentPoly::from_terms(p, c));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert!(a.add(&a.neg()).is_zero());
            // t-adic order is additive under products
            if !a.is_zero() && !b.is_zero() {
                let (Order::Finite(x), Order::Finite(y)) = (a.order(), b.order()) else { unreachable!() };
                prop_assert_eq!(a.mul(&b).order(), Order::Finite(x + y));
            }
            prop_assert_eq!(a.to_string().parse::<LaurentPoly>().unwrap(), a);
        }
    }

    /// Exhaustive check of the geometric-tail domination over a window of
    /// exponents: for `|a| >= 2` every signed tail below `J` is bounded by
    /// `|a^J|` (archimedean, `|a| = 2`), by `|a^J| / 2` (`|a| >= 3`), and by
    /// `|a^(J-1)|` in the ultrametric case.
    #[test]
    fn geometric_tail_domination() {
        let cases = [(arch(2, 1), q(1, 1)), (arch(3, 1), q(1, 2)), (arch(-5, 2), q(1, 1)), (padic(1, 3, 3), q(1, 3))];
        for (a, factor) in cases {
            let lo = -3;
            let top = 2;
            let big = a.pow(top).unwrap();
            for signs in 0..3i64.pow((top - lo) as u32) {
                let mut s = signs;
                let mut sum = a.zero_like();
                for j in lo..top {
                    let eps = s % 3 - 1;
                    s /= 3;
                    let term = a.pow(j).unwrap().mul(&ValuedScalar::integer(eps, a.valuation()).unwrap()).unwrap();
                    sum = sum.add(&term).unwrap();
                }
                let ratio = norm_ratio(&sum, &big).unwrap();
                assert!(ratio <= factor, "a={a} signs={signs} ratio={ratio}");
                if a.valuation().is_ultrametric() {
                    assert!(ratio < q(1, 2));
                }
            }
        }
    }
}
