//! Element arithmetic for the concrete groups handled by the crate.
//!
//! Every semidirect product uses the same convention: `(f, i)(g, j) =
//! (f + shift_i(g), i + j)` where `shift_i(g)(t) = g(t - i)`. Under this
//! convention right multiplication by a generator is the usual "act at the
//! current position" move, e.g. `(x, i) a = (x + (p/q)^i, i)` in `M_{p,q}`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::numbers::{NumberError, ValuedScalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("lamp moduli differ: {0} vs {1}")]
    ModulusMismatch(u32, u32),
    #[error("lamp modulus must be at least 2, got {0}")]
    BadModulus(u32),
    #[error("M_(p,q) parameters differ: {0} vs {1}")]
    ParameterMismatch(MpqParams, MpqParams),
    #[error("invalid M_(p,q) parameters p={0}, q={1}: need gcd(p,q)=1 and pq not in {{-1,0,1}}")]
    BadMpqParameters(i64, i64),
    #[error("{0} is not in Z[1/pq]")]
    NotInRing(String),
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("malformed element: {0}")]
    Malformed(String),
    #[error("cannot parse `{0}`")]
    Parse(String),
    #[error(transparent)]
    Number(#[from] NumberError),
}

/// Minimal element interface shared by all groups here. Elements carry their
/// own parameters, so multiplication can fail on a parameter mismatch.
pub trait GroupElement: Clone + Eq + Hash + fmt::Display + Send + Sync {
    fn op(&self, other: &Self) -> Result<Self, GroupError>;
    fn inverse(&self) -> Self;
    fn identity_like(&self) -> Self;
}

/// A finite symmetric generating set. The identity and duplicate elements are
/// dropped, so an involution contributes a single generator.
#[derive(Clone, Debug)]
pub struct GeneratingSet<E> {
    identity: E,
    generators: Vec<(String, E)>,
}

impl<E: GroupElement> GeneratingSet<E> {
    pub fn new(identity: E, generators: impl IntoIterator<Item = (String, E)>) -> Self {
        let mut kept: Vec<(String, E)> = Vec::new();
        for (name, g) in generators {
            if g != identity && kept.iter().all(|(_, h)| *h != g) {
                kept.push((name, g));
            }
        }
        GeneratingSet { identity, generators: kept }
    }

    pub fn identity(&self) -> &E {
        &self.identity
    }

    pub fn generators(&self) -> &[(String, E)] {
        &self.generators
    }

    pub fn names(&self) -> Vec<String> {
        self.generators.iter().map(|(n, _)| n.clone()).collect()
    }
}

fn write_int_map<V: fmt::Display>(f: &mut fmt::Formatter<'_>, map: &BTreeMap<i64, V>) -> fmt::Result {
    write!(f, "{{")?;
    for (k, (pos, v)) in map.iter().enumerate() {
        if k > 0 {
            write!(f, ",")?;
        }
        write!(f, "{pos}:{v}")?;
    }
    write!(f, "}}")
}

/// Splits `key:{a:b,...};key2:rest` into the pieces after each `key:`.
fn split_fields<'a>(text: &'a str, keys: &[&str]) -> Result<Vec<&'a str>, GroupError> {
    let bad = || GroupError::Parse(text.to_string());
    let parts: Vec<&str> = text.trim().split(';').collect();
    if parts.len() != keys.len() {
        return Err(bad());
    }
    parts
        .iter()
        .zip(keys)
        .map(|(part, key)| part.trim().strip_prefix(key).and_then(|r| r.strip_prefix(':')).ok_or_else(bad))
        .collect()
}

fn parse_int_map<V: std::str::FromStr>(text: &str) -> Result<BTreeMap<i64, V>, GroupError> {
    let bad = || GroupError::Parse(text.to_string());
    let body = text.trim().strip_prefix('{').and_then(|r| r.strip_suffix('}')).ok_or_else(bad)?;
    let mut out = BTreeMap::new();
    for item in body.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (k, v) = item.split_once(':').ok_or_else(bad)?;
        let k: i64 = k.trim().parse().map_err(|_| bad())?;
        let v: V = v.trim().parse().map_err(|_| bad())?;
        if out.insert(k, v).is_some() {
            return Err(bad());
        }
    }
    Ok(out)
}

fn parse_i64(text: &str) -> Result<i64, GroupError> {
    text.trim().parse().map_err(|_| GroupError::Parse(text.to_string()))
}

// ---------------------------------------------------------------------------
// Z_m wr Z

/// Finitely supported lamp configuration `Z -> Z_m`. Zero entries are never
/// stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LampConfig {
    modulus: u32,
    entries: BTreeMap<i64, u32>,
}

impl LampConfig {
    pub fn empty(modulus: u32) -> Result<Self, GroupError> {
        if modulus < 2 {
            return Err(GroupError::BadModulus(modulus));
        }
        Ok(LampConfig { modulus, entries: BTreeMap::new() })
    }

    /// Entries are reduced mod `m`; repeated positions are summed.
    pub fn from_entries(modulus: u32, entries: impl IntoIterator<Item = (i64, i64)>) -> Result<Self, GroupError> {
        let mut config = Self::empty(modulus)?;
        for (pos, value) in entries {
            config.add_at(pos, value);
        }
        Ok(config)
    }

    /// Lamps that are on, for `m = 2`.
    pub fn from_support(modulus: u32, support: impl IntoIterator<Item = i64>) -> Result<Self, GroupError> {
        Self::from_entries(modulus, support.into_iter().map(|p| (p, 1)))
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn get(&self, pos: i64) -> u32 {
        self.entries.get(&pos).copied().unwrap_or(0)
    }

    pub fn add_at(&mut self, pos: i64, delta: i64) {
        let m = self.modulus as i64;
        let value = (self.get(pos) as i64 + delta).rem_euclid(m) as u32;
        if value == 0 {
            self.entries.remove(&pos);
        } else {
            self.entries.insert(pos, value);
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (i64, u32)> + '_ {
        self.entries.iter().map(|(p, v)| (*p, *v))
    }

    pub fn support(&self) -> impl Iterator<Item = i64> + '_ {
        self.entries.keys().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn shifted(&self, by: i64) -> impl Iterator<Item = (i64, u32)> + '_ {
        self.entries.iter().map(move |(p, v)| (p + by, *v))
    }
}

/// Element `(f, i)` of `Z_m wr Z`: lamp configuration plus lamplighter position.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LamplighterElement {
    config: LampConfig,
    pos: i64,
}

/// Generator moves of the lamplighter group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LampGen {
    /// add 1 to the lamp at the current position
    S,
    SInv,
    /// walk right
    W,
    WInv,
}

impl LamplighterElement {
    pub fn new(config: LampConfig, pos: i64) -> Self {
        LamplighterElement { config, pos }
    }

    pub fn identity(modulus: u32) -> Result<Self, GroupError> {
        Ok(Self::new(LampConfig::empty(modulus)?, 0))
    }

    /// The switch `s = (delta_0, 0)`.
    pub fn switch(modulus: u32) -> Result<Self, GroupError> {
        Ok(Self::new(LampConfig::from_entries(modulus, [(0, 1)])?, 0))
    }

    /// The walk `w = (0, 1)`.
    pub fn walk(modulus: u32) -> Result<Self, GroupError> {
        Ok(Self::new(LampConfig::empty(modulus)?, 1))
    }

    /// `m = 2` element with the given lamps on.
    pub fn with_lamps(support: impl IntoIterator<Item = i64>, pos: i64) -> Self {
        Self::new(LampConfig::from_support(2, support).expect("modulus 2"), pos)
    }

    pub fn config(&self) -> &LampConfig {
        &self.config
    }

    pub fn pos(&self) -> i64 {
        self.pos
    }

    pub fn modulus(&self) -> u32 {
        self.config.modulus
    }

    /// Direct right multiplication by a generator, without going through the
    /// general product.
    pub fn step(&self, generator: LampGen) -> Self {
        let mut next = self.clone();
        match generator {
            LampGen::S => next.config.add_at(self.pos, 1),
            LampGen::SInv => next.config.add_at(self.pos, -1),
            LampGen::W => next.pos += 1,
            LampGen::WInv => next.pos -= 1,
        }
        next
    }

    pub fn parse(text: &str, modulus: u32) -> Result<Self, GroupError> {
        let fields = split_fields(text, &["lamps", "pos"])?;
        let entries: BTreeMap<i64, u32> = parse_int_map(fields[0])?;
        if entries.values().any(|v| *v == 0 || *v >= modulus) {
            return Err(GroupError::Parse(text.to_string()));
        }
        let config = LampConfig::from_entries(modulus, entries.into_iter().map(|(p, v)| (p, v as i64)))?;
        Ok(Self::new(config, parse_i64(fields[1])?))
    }
}

impl GroupElement for LamplighterElement {
    fn op(&self, other: &Self) -> Result<Self, GroupError> {
        if self.modulus() != other.modulus() {
            return Err(GroupError::ModulusMismatch(self.modulus(), other.modulus()));
        }
        let mut config = self.config.clone();
        for (p, v) in other.config.shifted(self.pos) {
            config.add_at(p, v as i64);
        }
        Ok(Self::new(config, self.pos + other.pos))
    }

    fn inverse(&self) -> Self {
        let mut config = LampConfig::empty(self.modulus()).expect("valid modulus");
        for (p, v) in self.config.shifted(-self.pos) {
            config.add_at(p, -(v as i64));
        }
        Self::new(config, -self.pos)
    }

    fn identity_like(&self) -> Self {
        Self::identity(self.modulus()).expect("valid modulus")
    }
}

impl fmt::Display for LamplighterElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "lamps:")?;
        write_int_map(f, &self.config.entries)?;
        write!(f, ";pos:{}", self.pos)
    }
}

/// `{s, s^-1, w, w^-1}`; for `m = 2` the switch is an involution and appears once.
pub fn lamplighter_generators(modulus: u32) -> Result<GeneratingSet<LamplighterElement>, GroupError> {
    let s = LamplighterElement::switch(modulus)?;
    let w = LamplighterElement::walk(modulus)?;
    Ok(GeneratingSet::new(
        LamplighterElement::identity(modulus)?,
        [("s".to_string(), s.clone()), ("S".to_string(), s.inverse()), ("w".to_string(), w.clone()), ("W".to_string(), w.inverse())],
    ))
}

/// Word length with respect to `{s^{±1}, w^{±1}}`.
///
/// Each lamp costs `min(e, m - e)` switch moves; the lamplighter must visit
/// every lit position, starting at 0 and ending at `pos`, and the cheaper of
/// the two sweeps (left end first or right end first) is optimal.
pub fn lamp_word_length(x: &LamplighterElement) -> u64 {
    let m = x.modulus() as u64;
    let switches: u64 = x.config.entries().map(|(_, e)| (e as u64).min(m - e as u64)).sum();
    let pos = x.pos;
    let lo = x.config.support().chain([0, pos]).min().unwrap();
    let hi = x.config.support().chain([0, pos]).max().unwrap();
    let left_first = -lo + (hi - lo) + (hi - pos);
    let right_first = hi + (hi - lo) + (pos - lo);
    switches + left_first.min(right_first) as u64
}

// ---------------------------------------------------------------------------
// Z wr Z

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WreathZZElement {
    entries: BTreeMap<i64, i64>,
    pos: i64,
}

impl WreathZZElement {
    pub fn new(entries: impl IntoIterator<Item = (i64, i64)>, pos: i64) -> Self {
        let mut out = WreathZZElement { entries: BTreeMap::new(), pos };
        for (p, v) in entries {
            out.add_at(p, v);
        }
        out
    }

    pub fn identity() -> Self {
        Self::new([], 0)
    }

    pub fn switch() -> Self {
        Self::new([(0, 1)], 0)
    }

    pub fn walk() -> Self {
        Self::new([], 1)
    }

    fn add_at(&mut self, p: i64, v: i64) {
        let value = self.entries.get(&p).copied().unwrap_or(0) + v;
        if value == 0 {
            self.entries.remove(&p);
        } else {
            self.entries.insert(p, value);
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.entries.iter().map(|(p, v)| (*p, *v))
    }

    pub fn pos(&self) -> i64 {
        self.pos
    }

    pub fn parse(text: &str) -> Result<Self, GroupError> {
        let fields = split_fields(text, &["entries", "pos"])?;
        let entries: BTreeMap<i64, i64> = parse_int_map(fields[0])?;
        if entries.values().any(|v| *v == 0) {
            return Err(GroupError::Parse(text.to_string()));
        }
        Ok(Self::new(entries, parse_i64(fields[1])?))
    }
}

impl GroupElement for WreathZZElement {
    fn op(&self, other: &Self) -> Result<Self, GroupError> {
        let mut out = self.clone();
        for (p, v) in other.entries() {
            out.add_at(p + self.pos, v);
        }
        out.pos += other.pos;
        Ok(out)
    }

    fn inverse(&self) -> Self {
        Self::new(self.entries().map(|(p, v)| (p - self.pos, -v)), -self.pos)
    }

    fn identity_like(&self) -> Self {
        Self::identity()
    }
}

impl fmt::Display for WreathZZElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "entries:")?;
        write_int_map(f, &self.entries)?;
        write!(f, ";pos:{}", self.pos)
    }
}

pub fn wreath_zz_generators() -> GeneratingSet<WreathZZElement> {
    let (s, w) = (WreathZZElement::switch(), WreathZZElement::walk());
    GeneratingSet::new(
        WreathZZElement::identity(),
        [("s".to_string(), s.clone()), ("S".to_string(), s.inverse()), ("w".to_string(), w.clone()), ("W".to_string(), w.inverse())],
    )
}

// ---------------------------------------------------------------------------
// M_{p,q} = Z[1/pq] x| Z

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MpqParams {
    p: i64,
    q: i64,
}

impl MpqParams {
    pub fn new(p: i64, q: i64) -> Result<Self, GroupError> {
        let pq = p.checked_mul(q).ok_or(GroupError::BadMpqParameters(p, q))?;
        if p.gcd(&q) != 1 || pq.abs() <= 1 {
            return Err(GroupError::BadMpqParameters(p, q));
        }
        Ok(MpqParams { p, q })
    }

    pub fn p(self) -> i64 {
        self.p
    }

    pub fn q(self) -> i64 {
        self.q
    }

    /// The multiplier `p/q` by which the generator of `Z` acts.
    pub fn ratio(self) -> BigRational {
        BigRational::new(self.p.into(), self.q.into())
    }

    /// `(p/q)^i`.
    pub fn ratio_pow(self, i: i64) -> BigRational {
        num_traits::pow::Pow::pow(&self.ratio(), i)
    }

    /// Whether `x` lies in `Z[1/pq]`, i.e. its denominator only has prime
    /// factors dividing `pq`.
    pub fn in_ring(self, x: &BigRational) -> bool {
        let pq = BigInt::from(self.p * self.q).abs();
        let mut den = x.denom().clone();
        loop {
            let g = den.gcd(&pq);
            if g.is_one() {
                return den.is_one();
            }
            while (&den % &g).is_zero() {
                den /= &g;
            }
        }
    }
}

impl fmt::Display for MpqParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={},q={}", self.p, self.q)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MpqElement {
    x: BigRational,
    i: i64,
    params: MpqParams,
}

impl MpqElement {
    pub fn new(x: BigRational, i: i64, params: MpqParams) -> Result<Self, GroupError> {
        if !params.in_ring(&x) {
            return Err(GroupError::NotInRing(x.to_string()));
        }
        Ok(MpqElement { x, i, params })
    }

    pub fn identity(params: MpqParams) -> Self {
        MpqElement { x: BigRational::zero(), i: 0, params }
    }

    /// The generator `a = 1 in Z[1/pq]`.
    pub fn a(params: MpqParams) -> Self {
        MpqElement { x: BigRational::one(), i: 0, params }
    }

    /// The generator `b = 1 in Z`.
    pub fn b(params: MpqParams) -> Self {
        MpqElement { x: BigRational::zero(), i: 1, params }
    }

    pub fn x(&self) -> &BigRational {
        &self.x
    }

    pub fn i(&self) -> i64 {
        self.i
    }

    pub fn params(&self) -> MpqParams {
        self.params
    }

    pub fn parse(text: &str, params: MpqParams) -> Result<Self, GroupError> {
        let fields = split_fields(text, &["x", "i"])?;
        let x: BigRational = fields[0].trim().parse().map_err(|_| GroupError::Parse(text.to_string()))?;
        Self::new(x, parse_i64(fields[1])?, params)
    }
}

impl GroupElement for MpqElement {
    fn op(&self, other: &Self) -> Result<Self, GroupError> {
        if self.params != other.params {
            return Err(GroupError::ParameterMismatch(self.params, other.params));
        }
        let x = &self.x + self.params.ratio_pow(self.i) * &other.x;
        Ok(MpqElement { x, i: self.i + other.i, params: self.params })
    }

    fn inverse(&self) -> Self {
        let x = -(self.params.ratio_pow(-self.i) * &self.x);
        MpqElement { x, i: -self.i, params: self.params }
    }

    fn identity_like(&self) -> Self {
        Self::identity(self.params)
    }
}

impl fmt::Display for MpqElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x:{};i:{}", self.x, self.i)
    }
}

pub fn mpq_generators(params: MpqParams) -> GeneratingSet<MpqElement> {
    let (a, b) = (MpqElement::a(params), MpqElement::b(params));
    GeneratingSet::new(
        MpqElement::identity(params),
        [("a".to_string(), a.clone()), ("A".to_string(), a.inverse()), ("b".to_string(), b.clone()), ("B".to_string(), b.inverse())],
    )
}

// ---------------------------------------------------------------------------
// Affine group k x| k^*

/// The affine map `x -> a x + b`, i.e. the matrix `[[a, b], [0, 1]]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineElement {
    b: ValuedScalar,
    a: ValuedScalar,
}

impl AffineElement {
    pub fn new(b: ValuedScalar, a: ValuedScalar) -> Result<Self, GroupError> {
        if b.valuation() != a.valuation() {
            return Err(NumberError::ValuationMismatch(b.valuation(), a.valuation()).into());
        }
        // the dilation part must be invertible in the ring we compute in
        a.inverse()?;
        Ok(AffineElement { b, a })
    }

    /// `(b, 1)`.
    pub fn translation(b: ValuedScalar) -> Self {
        let a = b.one_like();
        AffineElement { b, a }
    }

    /// `(0, a)`.
    pub fn dilation(a: ValuedScalar) -> Result<Self, GroupError> {
        Self::new(a.zero_like(), a)
    }

    pub fn b(&self) -> &ValuedScalar {
        &self.b
    }

    pub fn a(&self) -> &ValuedScalar {
        &self.a
    }

    pub fn is_translation(&self) -> bool {
        self.a.is_one()
    }

    pub fn is_dilation(&self) -> bool {
        self.b.is_zero()
    }

    /// `g . x = a x + b`.
    pub fn act(&self, x: &ValuedScalar) -> Result<ValuedScalar, GroupError> {
        Ok(self.a.mul(x)?.add(&self.b)?)
    }

    /// `g^j` by repeated squaring.
    pub fn pow(&self, j: i64) -> Self {
        let base = if j < 0 { self.inverse() } else { self.clone() };
        let mut acc = self.identity_like();
        let mut b = base;
        let mut e = j.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.op(&b).expect("same valuation");
            }
            e >>= 1;
            if e > 0 {
                b = b.op(&b).expect("same valuation");
            }
        }
        acc
    }

    pub fn parse(text: &str, valuation: crate::numbers::Valuation) -> Result<Self, GroupError> {
        let fields = split_fields(text, &["b", "a"])?;
        Self::new(ValuedScalar::parse(fields[0], valuation)?, ValuedScalar::parse(fields[1], valuation)?)
    }
}

impl GroupElement for AffineElement {
    /// `(b1, a1)(b2, a2) = (b1 + a1 b2, a1 a2)`, composition of maps with the
    /// right factor applied first.
    fn op(&self, other: &Self) -> Result<Self, GroupError> {
        let b = self.b.add(&self.a.mul(&other.b)?)?;
        let a = self.a.mul(&other.a)?;
        Ok(AffineElement { b, a })
    }

    fn inverse(&self) -> Self {
        let a_inv = self.a.inverse().expect("invertible by construction");
        let b = a_inv.mul(&self.b).expect("same valuation").neg();
        AffineElement { b, a: a_inv }
    }

    fn identity_like(&self) -> Self {
        AffineElement { b: self.b.zero_like(), a: self.a.one_like() }
    }
}

impl fmt::Display for AffineElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "b:{};a:{}", self.b, self.a)
    }
}

pub fn affine_multiply(g: &AffineElement, h: &AffineElement) -> Result<AffineElement, GroupError> {
    g.op(h)
}

pub fn affine_act(g: &AffineElement, x: &ValuedScalar) -> Result<ValuedScalar, GroupError> {
    g.act(x)
}

/// Generating set `{d^{±1}, delta^{±1}}` for the subgroup of `A(k)` spanned by
/// a translation `d` and a dilation `delta`.
pub fn affine_generators(d: &AffineElement, delta: &AffineElement) -> GeneratingSet<AffineElement> {
    GeneratingSet::new(
        d.identity_like(),
        [
            ("d".to_string(), d.clone()),
            ("D".to_string(), d.inverse()),
            ("delta".to_string(), delta.clone()),
            ("Delta".to_string(), delta.inverse()),
        ],
    )
}

/// Checks that the conjugates `delta^j d delta^-j`, `|j| <= range`, commute
/// pairwise. `d` must be a nontrivial translation and `delta` a dilation.
pub fn conjugates_commute_check(d: &AffineElement, delta: &AffineElement, range: u32) -> Result<bool, GroupError> {
    if !d.is_translation() || d.b.is_zero() {
        return Err(GroupError::Malformed(format!("d = ({d}) is not a nontrivial translation")));
    }
    if !delta.is_dilation() {
        return Err(GroupError::Malformed(format!("delta = ({delta}) is not a dilation")));
    }
    if d.b.valuation() != delta.a.valuation() {
        return Err(NumberError::ValuationMismatch(d.b.valuation(), delta.a.valuation()).into());
    }
    let r = range as i64;
    let conjugates: Vec<AffineElement> =
        (-r..=r).map(|j| delta.pow(j).op(d)?.op(&delta.pow(-j))).collect::<Result<_, _>>()?;
    for (k, x) in conjugates.iter().enumerate() {
        for y in &conjugates[k + 1..] {
            if x.op(y)? != y.op(x)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// Sym_fin(Z) x| Z

/// Finitely supported permutation of `Z`; only moved points are stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinitePerm {
    map: BTreeMap<i64, i64>,
}

impl FinitePerm {
    pub fn identity() -> Self {
        FinitePerm { map: BTreeMap::new() }
    }

    /// Builds `x -> map[x]`; fixed points may be listed and are dropped. The
    /// map must be a bijection of its key set.
    pub fn from_map(map: impl IntoIterator<Item = (i64, i64)>) -> Result<Self, GroupError> {
        let map: BTreeMap<i64, i64> = map.into_iter().filter(|(x, y)| x != y).collect();
        let keys: BTreeSet<i64> = map.keys().copied().collect();
        let values: BTreeSet<i64> = map.values().copied().collect();
        if keys != values || values.len() != map.len() {
            return Err(GroupError::NotAPermutation(format!("{map:?}")));
        }
        Ok(FinitePerm { map })
    }

    pub fn transposition(x: i64, y: i64) -> Self {
        Self::from_map([(x, y), (y, x)]).expect("a transposition is a permutation")
    }

    pub fn cycle(points: &[i64]) -> Result<Self, GroupError> {
        let n = points.len();
        Self::from_map((0..n).map(|k| (points[k], points[(k + 1) % n])))
    }

    pub fn apply(&self, x: i64) -> i64 {
        self.map.get(&x).copied().unwrap_or(x)
    }

    pub fn is_identity(&self) -> bool {
        self.map.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = i64> + '_ {
        self.map.keys().copied()
    }

    /// `(self . other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Self) -> Self {
        let points: BTreeSet<i64> = self.support().chain(other.support()).collect();
        Self::from_map(points.into_iter().map(|x| (x, self.apply(other.apply(x))))).expect("composition is bijective")
    }

    pub fn inverse(&self) -> Self {
        FinitePerm { map: self.map.iter().map(|(x, y)| (*y, *x)).collect() }
    }

    /// Conjugate by the shift: `x -> self(x - k) + k`.
    pub fn shifted(&self, k: i64) -> Self {
        FinitePerm { map: self.map.iter().map(|(x, y)| (x + k, y + k)).collect() }
    }

    /// Parses the moved points, e.g. `{0:1,1:0}`.
    pub fn parse(text: &str) -> Result<Self, GroupError> {
        Ok(SymShiftElement::parse(&format!("perm:{};shift:0", text.trim()))?.perm)
    }
}

impl fmt::Display for FinitePerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_int_map(f, &self.map)
    }
}

/// `(perm, shift)`, multiplied as `(p1, k1)(p2, k2) = (p1 . shift_k1(p2), k1 + k2)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymShiftElement {
    perm: FinitePerm,
    shift: i64,
}

impl SymShiftElement {
    pub fn new(perm: FinitePerm, shift: i64) -> Self {
        SymShiftElement { perm, shift }
    }

    pub fn identity() -> Self {
        Self::new(FinitePerm::identity(), 0)
    }

    pub fn shift_by(k: i64) -> Self {
        Self::new(FinitePerm::identity(), k)
    }

    pub fn perm(&self) -> &FinitePerm {
        &self.perm
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn parse(text: &str) -> Result<Self, GroupError> {
        let fields = split_fields(text, &["perm", "shift"])?;
        let map: BTreeMap<i64, i64> = parse_int_map(fields[0])?;
        if map.iter().any(|(x, y)| x == y) {
            return Err(GroupError::Parse(text.to_string()));
        }
        Ok(Self::new(FinitePerm::from_map(map)?, parse_i64(fields[1])?))
    }
}

impl GroupElement for SymShiftElement {
    fn op(&self, other: &Self) -> Result<Self, GroupError> {
        Ok(Self::new(self.perm.compose(&other.perm.shifted(self.shift)), self.shift + other.shift))
    }

    fn inverse(&self) -> Self {
        Self::new(self.perm.inverse().shifted(-self.shift), -self.shift)
    }

    fn identity_like(&self) -> Self {
        Self::identity()
    }
}

impl fmt::Display for SymShiftElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "perm:{};shift:{}", self.perm, self.shift)
    }
}

/// The given permutations and the unit shift, with inverses.
pub fn symshift_generators(perms: &[FinitePerm]) -> GeneratingSet<SymShiftElement> {
    let mut gens = Vec::new();
    for (k, p) in perms.iter().enumerate() {
        let g = SymShiftElement::new(p.clone(), 0);
        gens.push((format!("sigma{k}"), g.clone()));
        gens.push((format!("Sigma{k}"), g.inverse()));
    }
    gens.push(("t".to_string(), SymShiftElement::shift_by(1)));
    gens.push(("T".to_string(), SymShiftElement::shift_by(-1)));
    GeneratingSet::new(SymShiftElement::identity(), gens)
}
