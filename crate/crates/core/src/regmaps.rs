//! Explicit maps out of the lamplighter group `L = Z_2 wr Z` and exact,
//! exhaustive verification of their regularity on balls.
//!
//! A map is checked one domain edge at a time: for every `x` in the ball and
//! every generator `g` of `L`, `phi(x g)` must equal `phi(x)` or `phi(x) t`
//! for one of the map's declared step images `t`. When the target generating
//! set contains the step images this certifies a Lipschitz constant of 1
//! without computing any word metric in the target. Injectivity is checked by
//! collecting canonical encodings of exact images.

use std::collections::{BTreeMap, HashMap};

use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cayley::{self, Ball, GraphError};
use crate::groups::{
    AffineElement, FinitePerm, GroupElement, GroupError, LampGen, LamplighterElement, MpqElement, MpqParams,
    SymShiftElement, WreathZZElement,
};
use crate::numbers::{self, NumberError, Valuation, ValuedScalar};

pub const REPORT_SCHEMA: &str = "lampsep.regular-map-report/1";
pub const GAP_SCHEMA: &str = "lampsep.gap-survey/1";

const MAX_WITNESSES: usize = 16;

#[derive(Debug, Error)]
pub enum MapError {
    #[error("the translation part b must be nonzero")]
    ZeroTranslation,
    #[error("|a| must be at least 2 under the {valuation} valuation, got a = {a}")]
    NormTooSmall { a: String, valuation: Valuation },
    #[error("shift step {step} is too small for disjoint conjugates; need at least {need}")]
    ShiftTooSmall { step: i64, need: i64 },
    #[error("the permutation must not be the identity")]
    TrivialPermutation,
    #[error("maps are defined on Z_2 wr Z; got lamp modulus {0}")]
    WrongModulus(u32),
    #[error("the two elements must be distinct")]
    EqualInputs,
    #[error("the two elements must share a position, got {0} and {1}")]
    PositionMismatch(i64, i64),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Number(#[from] NumberError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn require_lamplighter(x: &LamplighterElement) -> Result<(), MapError> {
    if x.modulus() == 2 {
        Ok(())
    } else {
        Err(MapError::WrongModulus(x.modulus()))
    }
}

/// Data of an embedding of `L` into an affine group `k x| k^*`: the dilation
/// `delta = (0, a)` and the translation `d = (b, 1)`. The normalisations
/// (dilation fixing 0, `|a| >= 2`) are preconditions, not performed here.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineEmbeddingParams {
    a: ValuedScalar,
    b: ValuedScalar,
}

impl AffineEmbeddingParams {
    pub fn new(a: ValuedScalar, b: ValuedScalar) -> Result<Self, MapError> {
        if a.valuation() != b.valuation() {
            return Err(NumberError::ValuationMismatch(a.valuation(), b.valuation()).into());
        }
        if b.is_zero() {
            return Err(MapError::ZeroTranslation);
        }
        if !numbers::has_norm_at_least_two(&a)? {
            return Err(MapError::NormTooSmall { a: a.to_string(), valuation: a.valuation() });
        }
        a.inverse()?;
        Ok(AffineEmbeddingParams { a, b })
    }

    /// Parses `a` and `b` in their canonical text forms.
    pub fn parse(valuation: Valuation, a: &str, b: &str) -> Result<Self, MapError> {
        Self::new(ValuedScalar::parse(a, valuation)?, ValuedScalar::parse(b, valuation)?)
    }

    pub fn a(&self) -> &ValuedScalar {
        &self.a
    }

    pub fn b(&self) -> &ValuedScalar {
        &self.b
    }

    pub fn valuation(&self) -> Valuation {
        self.a.valuation()
    }

    pub fn delta(&self) -> AffineElement {
        AffineElement::dilation(self.a.clone()).expect("a is invertible")
    }

    pub fn d(&self) -> AffineElement {
        AffineElement::translation(self.b.clone())
    }
}

/// `(sum_j l_j b a^j, a^i)`, evaluated in closed form.
pub fn phi_affine(x: &LamplighterElement, params: &AffineEmbeddingParams) -> Result<AffineElement, MapError> {
    require_lamplighter(x)?;
    let mut sum = params.b.zero_like();
    for (j, lift) in x.config().entries() {
        let term = params.b.mul(&params.a.pow(j)?)?;
        for _ in 0..lift {
            sum = sum.add(&term)?;
        }
    }
    Ok(AffineElement::new(sum, params.a.pow(x.pos())?)?)
}

/// The same map computed as the literal product
/// `prod_j (delta^j d^{l_j} delta^-j) * delta^i` in the affine group.
pub fn phi_affine_word(x: &LamplighterElement, params: &AffineEmbeddingParams) -> Result<AffineElement, MapError> {
    require_lamplighter(x)?;
    let (d, delta) = (params.d(), params.delta());
    let mut acc = d.identity_like();
    for (j, lift) in x.config().entries() {
        let conj = delta.pow(j).op(&d.pow(lift as i64))?.op(&delta.pow(-j))?;
        acc = acc.op(&conj)?;
    }
    Ok(acc.op(&delta.pow(x.pos()))?)
}

/// `(f, i) -> (sum_j f(j) (p/q)^j, i)` in `M_{p,q}`.
pub fn phi_mpq(x: &LamplighterElement, params: MpqParams) -> Result<MpqElement, MapError> {
    require_lamplighter(x)?;
    let sum: BigRational = x
        .config()
        .entries()
        .map(|(j, lift)| BigRational::from_integer((lift as i64).into()) * params.ratio_pow(j))
        .sum();
    Ok(MpqElement::new(sum, x.pos(), params)?)
}

/// Entrywise inclusion `Z_2 = {0, 1} -> Z`.
pub fn phi_wreath_inclusion(x: &LamplighterElement) -> Result<WreathZZElement, MapError> {
    require_lamplighter(x)?;
    Ok(WreathZZElement::new(x.config().entries().map(|(j, v)| (j, v as i64)), x.pos()))
}

/// `s -> sigma`, `w -> shift^N`: the lamp at `j` becomes the conjugate of
/// `sigma` by `shift^{jN}`, and these conjugates have disjoint supports.
pub fn phi_symshift(x: &LamplighterElement, sigma: &FinitePerm, step: i64) -> Result<SymShiftElement, MapError> {
    require_lamplighter(x)?;
    check_shift_step(sigma, step)?;
    let mut perm = FinitePerm::identity();
    for (j, lift) in x.config().entries() {
        for _ in 0..lift {
            perm = perm.compose(&sigma.shifted(j * step));
        }
    }
    Ok(SymShiftElement::new(perm, step * x.pos()))
}

fn check_shift_step(sigma: &FinitePerm, step: i64) -> Result<(), MapError> {
    let (Some(lo), Some(hi)) = (sigma.support().min(), sigma.support().max()) else {
        return Err(MapError::TrivialPermutation);
    };
    let need = hi - lo + 1;
    if step < need {
        return Err(MapError::ShiftTooSmall { step, need });
    }
    Ok(())
}

/// A map out of `L` that can be verified on balls.
pub trait LamplighterMap: Sync {
    type Target: GroupElement;

    fn id(&self) -> String;

    fn parameters(&self) -> BTreeMap<String, String>;

    fn image(&self, x: &LamplighterElement) -> Result<Self::Target, MapError>;

    /// Target elements `t` allowed in `phi(x g) = phi(x) t` for a generator
    /// `g` of `L`; normally the images of the generators and their inverses.
    fn step_images(&self) -> Vec<Self::Target>;
}

#[derive(Clone, Debug)]
pub struct AffineMap(pub AffineEmbeddingParams);

impl LamplighterMap for AffineMap {
    type Target = AffineElement;

    fn id(&self) -> String {
        "affine".into()
    }

    fn parameters(&self) -> BTreeMap<String, String> {
        BTreeMap::from([
            ("valuation".into(), self.0.valuation().to_string()),
            ("a".into(), self.0.a.to_string()),
            ("b".into(), self.0.b.to_string()),
        ])
    }

    fn image(&self, x: &LamplighterElement) -> Result<AffineElement, MapError> {
        phi_affine(x, &self.0)
    }

    fn step_images(&self) -> Vec<AffineElement> {
        let (d, delta) = (self.0.d(), self.0.delta());
        vec![d.clone(), d.inverse(), delta.clone(), delta.inverse()]
    }
}

#[derive(Clone, Copy, Debug)]
pub struct MpqMap(pub MpqParams);

impl LamplighterMap for MpqMap {
    type Target = MpqElement;

    fn id(&self) -> String {
        "mpq".into()
    }

    fn parameters(&self) -> BTreeMap<String, String> {
        BTreeMap::from([("p".into(), self.0.p().to_string()), ("q".into(), self.0.q().to_string())])
    }

    fn image(&self, x: &LamplighterElement) -> Result<MpqElement, MapError> {
        phi_mpq(x, self.0)
    }

    fn step_images(&self) -> Vec<MpqElement> {
        let (a, b) = (MpqElement::a(self.0), MpqElement::b(self.0));
        vec![a.clone(), a.inverse(), b.clone(), b.inverse()]
    }
}

#[derive(Clone, Copy, Debug)]
pub struct WreathInclusion;

impl LamplighterMap for WreathInclusion {
    type Target = WreathZZElement;

    fn id(&self) -> String {
        "wreath".into()
    }

    fn parameters(&self) -> BTreeMap<String, String> {
        BTreeMap::new()
    }

    fn image(&self, x: &LamplighterElement) -> Result<WreathZZElement, MapError> {
        phi_wreath_inclusion(x)
    }

    fn step_images(&self) -> Vec<WreathZZElement> {
        let (s, w) = (WreathZZElement::switch(), WreathZZElement::walk());
        vec![s.clone(), s.inverse(), w.clone(), w.inverse()]
    }
}

#[derive(Clone, Debug)]
pub struct SymShiftMap {
    sigma: FinitePerm,
    step: i64,
}

impl SymShiftMap {
    pub fn new(sigma: FinitePerm, step: i64) -> Result<Self, MapError> {
        check_shift_step(&sigma, step)?;
        Ok(SymShiftMap { sigma, step })
    }
}

impl LamplighterMap for SymShiftMap {
    type Target = SymShiftElement;

    fn id(&self) -> String {
        "symshift".into()
    }

    fn parameters(&self) -> BTreeMap<String, String> {
        BTreeMap::from([("sigma".into(), self.sigma.to_string()), ("step".into(), self.step.to_string())])
    }

    fn image(&self, x: &LamplighterElement) -> Result<SymShiftElement, MapError> {
        phi_symshift(x, &self.sigma, self.step)
    }

    fn step_images(&self) -> Vec<SymShiftElement> {
        let s = SymShiftElement::new(self.sigma.clone(), 0);
        let w = SymShiftElement::shift_by(self.step);
        vec![s.clone(), s.inverse(), w.clone(), w.inverse()]
    }
}

/// Identity of `L`; a fixture for the verifiers.
#[derive(Clone, Copy, Debug)]
pub struct IdentityMap;

impl LamplighterMap for IdentityMap {
    type Target = LamplighterElement;

    fn id(&self) -> String {
        "identity".into()
    }

    fn parameters(&self) -> BTreeMap<String, String> {
        BTreeMap::new()
    }

    fn image(&self, x: &LamplighterElement) -> Result<LamplighterElement, MapError> {
        require_lamplighter(x)?;
        Ok(x.clone())
    }

    fn step_images(&self) -> Vec<LamplighterElement> {
        let gens = crate::groups::lamplighter_generators(2).expect("modulus 2");
        gens.generators().iter().map(|(_, g)| g.clone()).collect()
    }
}

/// Sends everything to the identity of `L`; a fixture whose fibres are the
/// whole ball.
#[derive(Clone, Copy, Debug)]
pub struct ConstantMap;

impl LamplighterMap for ConstantMap {
    type Target = LamplighterElement;

    fn id(&self) -> String {
        "constant".into()
    }

    fn parameters(&self) -> BTreeMap<String, String> {
        BTreeMap::new()
    }

    fn image(&self, x: &LamplighterElement) -> Result<LamplighterElement, MapError> {
        Ok(x.identity_like())
    }

    fn step_images(&self) -> Vec<LamplighterElement> {
        IdentityMap.step_images()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeWitness {
    pub source: String,
    pub generator: String,
    pub image_source: String,
    pub image_target: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Collision {
    pub first: String,
    pub second: String,
    pub image: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LipschitzFragment {
    pub edges_checked: usize,
    pub lipschitz: bool,
    /// Largest number of target steps needed for one domain step; `None` if
    /// some edge is not matched by at most one step.
    pub lipschitz_constant: Option<u32>,
    /// Failing edges, at most 16.
    pub witnesses: Vec<EdgeWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InjectivityFragment {
    pub domain_size: usize,
    pub injective: bool,
    pub max_fiber: usize,
    pub first_collision: Option<Collision>,
}

/// Outcome of checking (R1) and (R2) for a map on a ball of `L`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularMapReport {
    pub schema: String,
    pub map_id: String,
    pub parameters: BTreeMap<String, String>,
    pub radius: u32,
    pub domain_generators: Vec<String>,
    pub target_steps: Vec<String>,
    pub domain_size: usize,
    pub edges_checked: usize,
    pub lipschitz: bool,
    pub lipschitz_constant: Option<u32>,
    pub lipschitz_witnesses: Vec<EdgeWitness>,
    pub injective: bool,
    pub max_fiber: usize,
    pub first_collision: Option<Collision>,
}

const DOMAIN_MOVES: [(LampGen, &str); 3] = [(LampGen::S, "s"), (LampGen::W, "w"), (LampGen::WInv, "W")];

struct Evaluated<T> {
    ball: Ball<LamplighterElement>,
    images: Vec<T>,
}

fn evaluate<M: LamplighterMap>(map: &M, radius: u32) -> Result<Evaluated<M::Target>, MapError> {
    let gens = crate::groups::lamplighter_generators(2)?;
    let ball = cayley::ball(&gens, radius, cayley::DEFAULT_MAX_VERTICES)?;
    let images = ball.elements.par_iter().map(|x| map.image(x)).collect::<Result<Vec<_>, _>>()?;
    Ok(Evaluated { ball, images })
}

fn lipschitz_fragment<M: LamplighterMap>(map: &M, ev: &Evaluated<M::Target>) -> Result<LipschitzFragment, MapError> {
    let steps = map.step_images();
    let per_vertex: Vec<(u32, Vec<EdgeWitness>)> = ev
        .ball
        .elements
        .par_iter()
        .zip(ev.images.par_iter())
        .map(|(x, fx)| {
            let mut worst = 0u32;
            let mut failures = Vec::new();
            for (mv, name) in DOMAIN_MOVES {
                let y = x.step(mv);
                let fy = match ev.ball.index_of(&y) {
                    Some(k) => ev.images[k].clone(),
                    None => map.image(&y)?,
                };
                if fy == *fx {
                    continue;
                }
                let mut matched = false;
                for t in &steps {
                    if fx.op(t)? == fy {
                        matched = true;
                        break;
                    }
                }
                if matched {
                    worst = worst.max(1);
                } else {
                    worst = u32::MAX;
                    failures.push(EdgeWitness {
                        source: x.to_string(),
                        generator: name.to_string(),
                        image_source: fx.to_string(),
                        image_target: fy.to_string(),
                    });
                }
            }
            Ok((worst, failures))
        })
        .collect::<Result<_, MapError>>()?;
    let worst = per_vertex.iter().map(|(w, _)| *w).max().unwrap_or(0);
    let witnesses: Vec<EdgeWitness> = per_vertex.into_iter().flat_map(|(_, f)| f).take(MAX_WITNESSES).collect();
    Ok(LipschitzFragment {
        edges_checked: ev.ball.len() * DOMAIN_MOVES.len(),
        lipschitz: witnesses.is_empty(),
        lipschitz_constant: (worst != u32::MAX).then_some(worst),
        witnesses,
    })
}

fn injectivity_fragment<T: GroupElement>(ev: &Evaluated<T>) -> InjectivityFragment {
    let mut fibres: HashMap<String, (usize, usize)> = HashMap::with_capacity(ev.images.len());
    let mut first_collision = None;
    let mut max_fiber = 0;
    for (k, image) in ev.images.iter().enumerate() {
        let key = image.to_string();
        let entry = fibres.entry(key).or_insert((k, 0));
        entry.1 += 1;
        max_fiber = max_fiber.max(entry.1);
        if entry.1 == 2 && first_collision.is_none() {
            first_collision = Some(Collision {
                first: ev.ball.elements[entry.0].to_string(),
                second: ev.ball.elements[k].to_string(),
                image: image.to_string(),
            });
        }
    }
    InjectivityFragment { domain_size: ev.images.len(), injective: max_fiber <= 1, max_fiber, first_collision }
}

/// Checks every edge of the radius-`radius` ball of `L` against the map's
/// step images.
pub fn verify_edge_lipschitz<M: LamplighterMap>(map: &M, radius: u32) -> Result<LipschitzFragment, MapError> {
    lipschitz_fragment(map, &evaluate(map, radius)?)
}

/// Evaluates the map on the whole ball and measures its largest fibre.
pub fn verify_injectivity<M: LamplighterMap>(map: &M, radius: u32) -> Result<InjectivityFragment, MapError> {
    Ok(injectivity_fragment(&evaluate(map, radius)?))
}

pub fn verify_regular_map<M: LamplighterMap>(map: &M, radius: u32) -> Result<RegularMapReport, MapError> {
    let ev = evaluate(map, radius)?;
    let lip = lipschitz_fragment(map, &ev)?;
    let inj = injectivity_fragment(&ev);
    Ok(RegularMapReport {
        schema: REPORT_SCHEMA.into(),
        map_id: map.id(),
        parameters: map.parameters(),
        radius,
        domain_generators: DOMAIN_MOVES.iter().map(|(_, n)| n.to_string()).collect(),
        target_steps: map.step_images().iter().map(ToString::to_string).collect(),
        domain_size: inj.domain_size,
        edges_checked: lip.edges_checked,
        lipschitz: lip.lipschitz,
        lipschitz_constant: lip.lipschitz_constant,
        lipschitz_witnesses: lip.witnesses,
        injective: inj.injective,
        max_fiber: inj.max_fiber,
        first_collision: inj.first_collision,
    })
}

/// Result of comparing [`phi_affine`] with [`phi_affine_word`] on a ball.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizationCheck {
    pub checked: usize,
    pub first_mismatch: Option<String>,
}

pub fn verify_factorization(params: &AffineEmbeddingParams, radius: u32) -> Result<FactorizationCheck, MapError> {
    let gens = crate::groups::lamplighter_generators(2)?;
    let ball = cayley::ball(&gens, radius, cayley::DEFAULT_MAX_VERTICES)?;
    let agree: Vec<bool> = ball
        .elements
        .par_iter()
        .map(|x| Ok(phi_affine(x, params)? == phi_affine_word(x, params)?))
        .collect::<Result<_, MapError>>()?;
    let first_mismatch = agree.iter().position(|ok| !ok).map(|k| ball.elements[k].to_string());
    Ok(FactorizationCheck { checked: ball.len(), first_mismatch })
}

/// Gap between the images of two same-position elements acting on `0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapWitness {
    /// Largest position where the two configurations differ.
    pub j_max: i64,
    /// `phi(x).0 - phi(y).0`
    pub delta: ValuedScalar,
    /// `b a^{j_max}`
    pub reference: ValuedScalar,
    /// `|delta| / |reference|`, exact.
    pub ratio: BigRational,
    /// `|delta| >= |reference| / 2`
    pub holds: bool,
}

pub fn injectivity_gap(
    x: &LamplighterElement,
    y: &LamplighterElement,
    params: &AffineEmbeddingParams,
) -> Result<GapWitness, MapError> {
    require_lamplighter(x)?;
    require_lamplighter(y)?;
    if x.pos() != y.pos() {
        return Err(MapError::PositionMismatch(x.pos(), y.pos()));
    }
    let j_max = x
        .config()
        .support()
        .chain(y.config().support())
        .filter(|&j| x.config().get(j) != y.config().get(j))
        .max()
        .ok_or(MapError::EqualInputs)?;
    let zero = params.b.zero_like();
    let delta = phi_affine(x, params)?.act(&zero)?.sub(&phi_affine(y, params)?.act(&zero)?)?;
    let reference = params.b.mul(&params.a.pow(j_max)?)?;
    let ratio = numbers::norm_ratio(&delta, &reference)?;
    let holds = ratio >= BigRational::new(1.into(), 2.into());
    Ok(GapWitness { j_max, delta, reference, ratio, holds })
}

/// Exhaustive gap statistics over all ordered pairs of configurations
/// supported in a window.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapSurvey {
    pub schema: String,
    pub parameters: BTreeMap<String, String>,
    pub window: (i64, i64),
    pub pairs_total: usize,
    pub pairs_distinct: usize,
    /// No distinct pair has equal images.
    pub all_nonzero: bool,
    /// Every distinct pair has `|delta| >= |b a^{j_max}| / 2`.
    pub half_bound_all: bool,
    /// Every distinct pair has `|delta| = |b a^{j_max}|`.
    pub equality_all: bool,
    pub min_ratio: String,
    pub min_ratio_pair: Option<(String, String)>,
}

pub fn gap_survey(params: &AffineEmbeddingParams, lo: i64, hi: i64) -> Result<GapSurvey, MapError> {
    assert!(lo <= hi && hi - lo < 16, "window too wide");
    let width = (hi - lo + 1) as u32;
    let configs: Vec<LamplighterElement> = (0u32..1 << width)
        .map(|mask| LamplighterElement::with_lamps((0..width).filter(|b| mask >> b & 1 == 1).map(|b| lo + b as i64), 0))
        .collect();
    let zero = params.b.zero_like();
    let values: Vec<ValuedScalar> =
        configs.iter().map(|x| Ok(phi_affine(x, params)?.act(&zero)?)).collect::<Result<_, MapError>>()?;
    let references: Vec<ValuedScalar> =
        (lo..=hi).map(|j| Ok(params.b.mul(&params.a.pow(j)?)?)).collect::<Result<_, MapError>>()?;
    let half = BigRational::new(1.into(), 2.into());
    let one = BigRational::from_integer(1.into());

    // per source configuration: (min ratio, its partner, max ratio)
    let rows: Vec<(BigRational, usize, BigRational)> = (0..configs.len())
        .into_par_iter()
        .map(|f| {
            let mut row: Option<(BigRational, usize, BigRational)> = None;
            for g in (0..configs.len()).filter(|g| *g != f) {
                let top = 31 - ((f ^ g) as u32).leading_zeros();
                let ratio = numbers::norm_ratio(&values[f].sub(&values[g])?, &references[top as usize])?;
                row = Some(match row {
                    None => (ratio.clone(), g, ratio),
                    Some((lo, _, hi)) if ratio < lo => (ratio.clone(), g, hi.max(ratio)),
                    Some((lo, arg, hi)) => (lo, arg, hi.max(ratio)),
                });
            }
            Ok(row.expect("at least two configurations"))
        })
        .collect::<Result<_, MapError>>()?;

    let (f_min, (min_ratio, g_min, _)) =
        rows.iter().enumerate().min_by(|a, b| a.1 .0.cmp(&b.1 .0).then(a.0.cmp(&b.0))).expect("nonempty");
    let max_ratio = rows.iter().map(|r| &r.2).max().expect("nonempty");
    let mut parameters = AffineMap(params.clone()).parameters();
    parameters.insert("window".into(), format!("[{lo},{hi}]"));
    Ok(GapSurvey {
        schema: GAP_SCHEMA.into(),
        parameters,
        window: (lo, hi),
        pairs_total: configs.len() * configs.len(),
        pairs_distinct: configs.len() * (configs.len() - 1),
        all_nonzero: *min_ratio > BigRational::from_integer(0.into()),
        half_bound_all: *min_ratio >= half,
        equality_all: *min_ratio == one && *max_ratio == one,
        min_ratio: min_ratio.to_string(),
        min_ratio_pair: Some((configs[f_min].to_string(), configs[*g_min].to_string())),
    })
}
