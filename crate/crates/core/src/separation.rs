//! Balanced vertex separators: exact `Cut F` for small graphs, a randomized
//! upper bound, the fibre-based separator for lamplighter subgraphs, and the
//! path-congestion lower bound on the boxes `T_n`.
//!
//! `log` is base 2 throughout. Bounds of the form `c <= k v / log2 v` are
//! decided exactly as `v^c <= 2^(k v)`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cayley::{self, Ball, Graph, GraphError, VertexSubset};
use crate::groups::{GroupError, LampConfig, LamplighterElement};
use crate::numbers;
use crate::seed;

pub const CUT_SCHEMA: &str = "lampsep.cut-certificate/1";
pub const PATHS_SCHEMA: &str = "lampsep.path-family/1";
pub const CROSSING_SCHEMA: &str = "lampsep.crossing/1";
pub const PROFILE_HEADER: &str = "v,lower_witness,upper_witness,kind";

/// Largest graph `cut_exact` accepts.
pub const EXACT_CUT_CAP: usize = 30;

#[derive(Debug, Error)]
pub enum SeparationError {
    #[error("exact cut refused: {v} vertices exceeds the cap of {cap}")]
    TooLarge { v: usize, cap: usize },
    #[error("the graph is empty")]
    Empty,
    #[error("the subgraph is not connected")]
    Disconnected,
    #[error("need at least 2 vertices, got {0}")]
    TooSmall(usize),
    #[error("not a valid separator: a component of size {largest} remains out of {total}")]
    InvalidSeparator { largest: usize, total: usize },
    #[error("invalid box parameters: {0}")]
    BadDescriptor(String),
    #[error("vertex {0} is not in the box")]
    NotInBox(String),
    #[error("enumeration cap exceeded: {needed} > {cap}")]
    CapExceeded { needed: u128, cap: u128 },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CutKind {
    Exact,
    Heuristic,
    Constructive,
}

/// A bound checked against the certificate. Rational bounds have
/// `low == high`; bounds involving `log2 v` carry the bracket obtained from
/// `floor(log2 v) <= log2 v <= ceil(log2 v)`, while `satisfied` is decided
/// exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundAnnotation {
    pub name: String,
    pub low: String,
    pub high: String,
    pub satisfied: bool,
}

impl BoundAnnotation {
    fn exact(name: &str, value: &BigRational, satisfied: bool) -> Self {
        BoundAnnotation { name: name.into(), low: value.to_string(), high: value.to_string(), satisfied }
    }

    /// `k v / log2 v`, bracketed.
    fn over_log(name: &str, k: u64, v: usize, satisfied: bool) -> Self {
        let (lo, hi) = log2_bracket(v);
        let num = BigRational::from_integer((k * v as u64).into());
        let low = &num / BigRational::from_integer(hi.into());
        let high = if lo == 0 { "inf".to_string() } else { (&num / BigRational::from_integer(lo.into())).to_string() };
        BoundAnnotation { name: name.into(), low: low.to_string(), high, satisfied }
    }
}

/// `(floor(log2 v), ceil(log2 v))` for `v >= 1`.
pub fn log2_bracket(v: usize) -> (i64, i64) {
    let floor = numbers::floor_log2(&BigRational::from_integer(v.into())).expect("v >= 1");
    let ceil = if v.is_power_of_two() { floor } else { floor + 1 };
    (floor, ceil)
}

/// Largest `c` with `c <= k v / log2 v`, i.e. with `v^c <= 2^(k v)`. For
/// `v = 1` there is no constraint and `None` is returned.
pub fn max_count_under_log_bound(k: u64, v: usize) -> Option<u64> {
    if v < 2 {
        return None;
    }
    let limit = BigUint::one() << (k * v as u64);
    let base = BigUint::from(v);
    let mut power = BigUint::one();
    let mut c = 0u64;
    loop {
        power *= &base;
        if power > limit {
            return Some(c);
        }
        c += 1;
    }
}

/// `c <= k v / log2 v`, decided exactly.
pub fn within_log_bound(c: usize, k: u64, v: usize) -> bool {
    match max_count_under_log_bound(k, v) {
        Some(max) => c as u64 <= max,
        None => true,
    }
}

/// Removal of a vertex set from a graph, evaluated exactly.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CutCheck {
    pub largest_component: usize,
    pub total: usize,
    pub valid: bool,
}

/// Every component of `g` minus `cutset` has at most `|g|/2` vertices.
pub fn validate_cut(g: &Graph, cutset: &VertexSubset) -> CutCheck {
    let largest = cayley::component_sizes_without(g, &cutset.mask(g.len())).into_iter().max().unwrap_or(0);
    CutCheck { largest_component: largest, total: g.len(), valid: 2 * largest <= g.len() }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparatorTrace {
    pub i_g: i64,
    pub i_lower: i64,
    pub i_upper: i64,
    /// Largest fibre size allowed at `i_lower` and `i_upper`.
    pub fiber_threshold: u64,
    /// Distinct positions occupied by the subgraph.
    pub positions: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutCertificate {
    pub schema: String,
    pub kind: CutKind,
    pub cutset: VertexSubset,
    pub cut_labels: Vec<String>,
    pub cut_size: usize,
    pub largest_component: usize,
    pub total: usize,
    pub valid: bool,
    pub bounds: Vec<BoundAnnotation>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<SeparatorTrace>,
}

impl CutCertificate {
    fn build(g: &Graph, kind: CutKind, cutset: VertexSubset) -> Self {
        let check = validate_cut(g, &cutset);
        CutCertificate {
            schema: CUT_SCHEMA.into(),
            kind,
            cut_labels: cutset.indices().iter().map(|&v| g.label(v).to_string()).collect(),
            cut_size: cutset.len(),
            cutset,
            largest_component: check.largest_component,
            total: check.total,
            valid: check.valid,
            bounds: Vec::new(),
            trace: None,
        }
    }

    /// Re-checks the stored verdict against `g`.
    pub fn revalidate(&self, g: &Graph) -> bool {
        let check = validate_cut(g, &self.cutset);
        check.valid == self.valid
            && check.largest_component == self.largest_component
            && check.total == self.total
            && self.cut_size == self.cutset.len()
    }

    /// Valid, and every bound annotation satisfied.
    pub fn passes(&self) -> bool {
        self.valid && self.bounds.iter().all(|b| b.satisfied)
    }
}

struct Bitset {
    adj: Vec<u32>,
    full: u32,
    half: usize,
}

impl Bitset {
    fn new(g: &Graph) -> Self {
        let adj = (0..g.len()).map(|u| g.neighbors(u).iter().fold(0u32, |m, &w| m | 1 << w)).collect();
        Bitset { adj, full: if g.len() == 32 { u32::MAX } else { (1u32 << g.len()) - 1 }, half: g.len() / 2 }
    }

    /// No component of the complement of `cut` exceeds half the graph.
    fn balanced(&self, cut: u32) -> bool {
        let mut rest = self.full & !cut;
        while rest != 0 {
            let mut comp = rest & rest.wrapping_neg();
            let mut frontier = comp;
            while frontier != 0 {
                let u = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = self.adj[u] & rest & !comp;
                comp |= fresh;
                frontier |= fresh;
            }
            if comp.count_ones() as usize > self.half {
                return false;
            }
            rest &= !comp;
        }
        true
    }
}

/// Calls `f` on each `k`-subset of `first+1..n`, extended by `first`, in
/// lexicographic order, stopping when `f` returns true.
fn for_each_combination_from(first: usize, n: usize, k: usize, mut f: impl FnMut(u32) -> bool) -> bool {
    if k == 0 {
        return f(1 << first);
    }
    let start = first + 1;
    if start + k > n {
        return false;
    }
    let mut idx: Vec<usize> = (start..start + k).collect();
    loop {
        let mask = idx.iter().fold(1u32 << first, |m, &i| m | 1 << i);
        if f(mask) {
            return true;
        }
        let mut pos = k;
        loop {
            if pos == 0 {
                return false;
            }
            pos -= 1;
            if idx[pos] < n - k + pos {
                break;
            }
        }
        idx[pos] += 1;
        for j in pos + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn mask_to_subset(mask: u32, len: usize) -> VertexSubset {
    VertexSubset::new((0..len).filter(|v| mask >> v & 1 == 1), len).expect("in range")
}

fn check_exact_input(g: &Graph) -> Result<(), SeparationError> {
    if g.is_empty() {
        return Err(SeparationError::Empty);
    }
    if g.len() > EXACT_CUT_CAP {
        return Err(SeparationError::TooLarge { v: g.len(), cap: EXACT_CUT_CAP });
    }
    Ok(())
}

/// Smallest size of a balanced cutset.
fn min_cut_size(g: &Graph, bits: &Bitset) -> usize {
    if bits.balanced(0) {
        return 0;
    }
    (1..=g.len())
        .find(|&k| {
            (0..g.len()).into_par_iter().any(|first| for_each_combination_from(first, g.len(), k - 1, |m| bits.balanced(m)))
        })
        .expect("removing everything is balanced")
}

/// `Cut F`: a minimum balanced cutset, lexicographically first among those of
/// minimum size.
pub fn cut_exact(g: &Graph) -> Result<CutCertificate, SeparationError> {
    check_exact_input(g)?;
    let bits = Bitset::new(g);
    let k = min_cut_size(g, &bits);
    let mask = if k == 0 {
        0
    } else {
        (0..g.len())
            .into_par_iter()
            .find_map_first(|first| {
                let mut found = None;
                for_each_combination_from(first, g.len(), k - 1, |m| {
                    let ok = bits.balanced(m);
                    if ok {
                        found = Some(m);
                    }
                    ok
                });
                found
            })
            .expect("a cutset of minimum size exists")
    };
    let cert = CutCertificate::build(g, CutKind::Exact, mask_to_subset(mask, g.len()));
    debug_assert!(cert.valid);
    Ok(cert)
}

/// Every balanced cutset of minimum size, in lexicographic order.
pub fn minimum_cutsets(g: &Graph) -> Result<Vec<VertexSubset>, SeparationError> {
    check_exact_input(g)?;
    let bits = Bitset::new(g);
    let k = min_cut_size(g, &bits);
    if k == 0 {
        return Ok(vec![VertexSubset::default()]);
    }
    let masks: Vec<Vec<u32>> = (0..g.len())
        .into_par_iter()
        .map(|first| {
            let mut found = Vec::new();
            for_each_combination_from(first, g.len(), k - 1, |m| {
                if bits.balanced(m) {
                    found.push(m);
                }
                false
            });
            found
        })
        .collect();
    Ok(masks.into_iter().flatten().map(|m| mask_to_subset(m, g.len())).collect())
}

/// Breadth-first layers of the component of `start`, avoiding `blocked`.
fn bfs_layers(g: &Graph, start: usize, blocked: &[bool]) -> Vec<Vec<usize>> {
    let mut seen = blocked.to_vec();
    seen[start] = true;
    let mut layers = vec![vec![start]];
    loop {
        let mut next = Vec::new();
        for &u in layers.last().expect("nonempty") {
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    next.push(w);
                }
            }
        }
        if next.is_empty() {
            return layers;
        }
        layers.push(next);
    }
}

/// First layer at which the running count exceeds half of the total.
fn balanced_layer(layers: &[Vec<usize>]) -> &[usize] {
    let total: usize = layers.iter().map(Vec::len).sum();
    let mut seen = 0;
    for layer in layers {
        seen += layer.len();
        if 2 * seen > total {
            return layer;
        }
    }
    layers.last().expect("nonempty")
}

fn largest_component_without(g: &Graph, removed: &[bool]) -> Option<Vec<usize>> {
    let mut seen = removed.to_vec();
    let mut best: Option<Vec<usize>> = None;
    for start in 0..g.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut k = 0;
        while k < comp.len() {
            for &w in g.neighbors(comp[k]) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
            k += 1;
        }
        if best.as_ref().is_none_or(|b| comp.len() > b.len()) {
            best = Some(comp);
        }
    }
    best
}

/// A valid, not necessarily minimum, cutset. Each of `effort` rounds cuts a
/// balanced BFS layer from a random root, splits any oversized component the
/// same way, then drops cut vertices that are not needed. The smallest result
/// wins; earlier rounds win ties.
pub fn cut_heuristic_upper(g: &Graph, effort: usize, seed: u64) -> CutCertificate {
    let v = g.len();
    let empty = VertexSubset::default();
    if validate_cut(g, &empty).valid {
        return CutCertificate::build(g, CutKind::Heuristic, empty);
    }
    let mut rng = seed::stream(seed, "cut-heuristic");
    let mut best: Option<Vec<bool>> = None;
    for _ in 0..effort.max(1) {
        let mut cut = vec![false; v];
        while let Some(comp) = largest_component_without(g, &cut) {
            if 2 * comp.len() <= v {
                break;
            }
            let root = comp[rng.gen_range(0..comp.len())];
            for &u in balanced_layer(&bfs_layers(g, root, &cut)) {
                cut[u] = true;
            }
        }
        let mut order: Vec<usize> = (0..v).filter(|&u| cut[u]).collect();
        order.shuffle(&mut rng);
        for u in order {
            cut[u] = false;
            if 2 * cayley::component_sizes_without(g, &cut).into_iter().max().unwrap_or(0) > v {
                cut[u] = true;
            }
        }
        let size = cut.iter().filter(|c| **c).count();
        if best.as_ref().is_none_or(|b| size < b.iter().filter(|c| **c).count()) {
            best = Some(cut);
        }
    }
    let cut = best.expect("at least one round");
    let cert = CutCertificate::build(g, CutKind::Heuristic, VertexSubset::new((0..v).filter(|&u| cut[u]), v).expect("in range"));
    debug_assert!(cert.valid);
    cert
}

/// The fibre separator for a connected subgraph of a lamplighter Cayley
/// graph, given the position of every vertex. `modulus` is the lamp group
/// order, used for the count `v <= r m^r`.
pub fn separator_from_positions(f: &Graph, positions: &[i64], modulus: u32) -> Result<CutCertificate, SeparationError> {
    let v = f.len();
    assert_eq!(positions.len(), v, "one position per vertex");
    if v < 2 {
        return Err(SeparationError::TooSmall(v));
    }
    if !cayley::is_connected(f) {
        return Err(SeparationError::Disconnected);
    }
    let mut fibers: BTreeMap<i64, usize> = BTreeMap::new();
    for &p in positions {
        *fibers.entry(p).or_default() += 1;
    }
    let fiber = |i: i64| fibers.get(&i).copied().unwrap_or(0);
    let (lo, hi) = (*fibers.keys().next().expect("v >= 2"), *fibers.keys().next_back().expect("v >= 2"));

    // smallest i with at most v/2 vertices strictly on each side
    let mut below = 0;
    let mut i_g = lo;
    loop {
        let above = v - below - fiber(i_g);
        if 2 * below <= v && 2 * above <= v {
            break;
        }
        below += fiber(i_g);
        i_g += 1;
    }
    let threshold = max_count_under_log_bound(4, v).expect("v >= 2");
    let light = |i: i64| fiber(i) as u64 <= threshold;
    let i_lower = (lo - 1..=i_g).rev().find(|&i| light(i)).expect("empty fibre below the support");
    let i_upper = (i_g..=hi + 1).find(|&i| light(i)).expect("empty fibre above the support");

    let cut = VertexSubset::new((0..v).filter(|&k| positions[k] == i_lower || positions[k] == i_upper), v)?;
    let mut cert = CutCertificate::build(f, CutKind::Constructive, cut);
    let r = fibers.len();
    let capacity = BigUint::from(r) * BigUint::from(modulus).pow(r as u32);
    cert.bounds = vec![
        BoundAnnotation::over_log("fiber(i_lower) <= 4v/log2(v)", 4, v, light(i_lower)),
        BoundAnnotation::over_log("fiber(i_upper) <= 4v/log2(v)", 4, v, light(i_upper)),
        BoundAnnotation::over_log("|C| <= 8v/log2(v)", 8, v, within_log_bound(cert.cut_size, 8, v)),
        BoundAnnotation::exact(
            "v <= r*m^r",
            &BigRational::from_integer(num_bigint::BigInt::from(capacity.clone())),
            BigUint::from(v) <= capacity,
        ),
    ];
    cert.trace = Some(SeparatorTrace { i_g, i_lower, i_upper, fiber_threshold: threshold, positions: r });
    Ok(cert)
}

/// Positions read from lamplighter labels.
pub fn positions_from_labels(f: &Graph, modulus: u32) -> Result<Vec<i64>, SeparationError> {
    f.labels().iter().map(|l| Ok(LamplighterElement::parse(l, modulus)?.pos())).collect()
}

/// The fibre separator for the subgraph of a lamplighter ball induced on
/// `subset`. Cutset indices refer to the induced subgraph.
pub fn lamplighter_separator(ball: &Ball<LamplighterElement>, subset: &VertexSubset) -> Result<CutCertificate, SeparationError> {
    let f = cayley::induced_subgraph(&ball.graph, subset)?;
    let positions: Vec<i64> = subset.indices().iter().map(|&k| ball.elements[k].pos()).collect();
    let modulus = ball.elements.first().map_or(2, |x| x.modulus());
    separator_from_positions(&f, &positions, modulus)
}

/// The box `T_n`: lamp configurations on `[-n, n]` with values mod `m`, and
/// positions in `[-n, n]`. Vertex `code * (2n+1) + (pos + n)`, where `code`
/// lists the lamps in base `m`, lamp `-n` least significant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TnDescriptor {
    pub n: u32,
    pub m: u32,
}

impl TnDescriptor {
    pub fn new(n: u32, m: u32) -> Result<Self, SeparationError> {
        if m < 2 {
            return Err(SeparationError::BadDescriptor(format!("lamp modulus {m} < 2")));
        }
        if (m as u128).checked_pow(2 * n + 1).is_none_or(|c| c * (2 * n as u128 + 1) > usize::MAX as u128 / 4) {
            return Err(SeparationError::BadDescriptor(format!("n = {n}, m = {m} is too large")));
        }
        Ok(TnDescriptor { n, m })
    }

    pub fn width(self) -> usize {
        2 * self.n as usize + 1
    }

    pub fn configurations(self) -> usize {
        (self.m as usize).pow(2 * self.n + 1)
    }

    /// `(2n+1) m^(2n+1)`
    pub fn vertex_count(self) -> usize {
        self.width() * self.configurations()
    }

    pub fn index(self, code: usize, pos: i64) -> usize {
        code * self.width() + (pos + self.n as i64) as usize
    }

    pub fn decode(self, index: usize) -> (usize, i64) {
        let (code, offset) = index.div_rem(&self.width());
        (code, offset as i64 - self.n as i64)
    }

    /// Value of lamp `k` in `code`.
    pub fn lamp(self, code: usize, k: i64) -> u32 {
        let digit = (k + self.n as i64) as u32;
        (code / (self.m as usize).pow(digit) % self.m as usize) as u32
    }

    fn toggle(self, code: usize, k: i64, up: bool) -> usize {
        let unit = (self.m as usize).pow((k + self.n as i64) as u32);
        let value = self.lamp(code, k);
        if up {
            if value + 1 == self.m {
                code - value as usize * unit
            } else {
                code + unit
            }
        } else if value == 0 {
            code + (self.m - 1) as usize * unit
        } else {
            code - unit
        }
    }

    pub fn element(self, index: usize) -> LamplighterElement {
        let (code, pos) = self.decode(index);
        let n = self.n as i64;
        let config = LampConfig::from_entries(self.m, (-n..=n).map(|k| (k, self.lamp(code, k) as i64))).expect("m >= 2");
        LamplighterElement::new(config, pos)
    }

    /// Index of `x` if it lies in the box.
    pub fn locate(self, x: &LamplighterElement) -> Option<usize> {
        let n = self.n as i64;
        if x.modulus() != self.m || x.pos().abs() > n || x.config().support().any(|k| k.abs() > n) {
            return None;
        }
        let code = (-n..=n).rev().fold(0usize, |c, k| c * self.m as usize + x.config().get(k) as usize);
        Some(self.index(code, x.pos()))
    }

    /// `3 |T_n|^2 / m^(2n+1)`
    pub fn congestion_bound(self) -> BigRational {
        let t = BigRational::from_integer(self.vertex_count().into());
        BigRational::from_integer(3.into()) * &t * &t / BigRational::from_integer(self.configurations().into())
    }

    /// Most vertices on a canonical path: `6n + 1` position steps plus up to
    /// `floor(m/2)` switch steps at each of the `2n + 1` lamps; `8n + 2` for
    /// `m = 2`.
    pub fn path_vertex_limit(self) -> usize {
        6 * self.n as usize + 1 + self.width() * (self.m as usize / 2)
    }
}

impl fmt::Display for TnDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T_{}(m={})", self.n, self.m)
    }
}

/// The subgraph of the lamplighter Cayley graph induced on `T_n`.
pub fn tn_graph(desc: TnDescriptor, cap: usize) -> Result<Graph, SeparationError> {
    let total = desc.vertex_count();
    if total > cap {
        return Err(GraphError::CapExceeded { cap }.into());
    }
    let n = desc.n as i64;
    let mut edges = Vec::with_capacity(2 * total);
    for code in 0..desc.configurations() {
        for pos in -n..=n {
            let u = desc.index(code, pos);
            if pos < n {
                edges.push((u, u + 1));
            }
            edges.push((u, desc.index(desc.toggle(code, pos, true), pos)));
        }
    }
    let labels = (0..total).map(|u| desc.element(u).to_string()).collect();
    Ok(Graph::new(labels, edges)?)
}

fn push_path(desc: TnDescriptor, x: usize, y: usize, out: &mut Vec<usize>) {
    let n = desc.n as i64;
    let (mut code, mut pos) = desc.decode(x);
    let (target, end) = desc.decode(y);
    out.clear();
    out.push(x);
    while pos > -n {
        pos -= 1;
        out.push(desc.index(code, pos));
    }
    for k in -n..=n {
        let (from, to) = (desc.lamp(code, k), desc.lamp(target, k));
        if from != to {
            let up_steps = (to + desc.m - from) % desc.m;
            let (up, steps) = if up_steps <= desc.m - up_steps { (true, up_steps) } else { (false, desc.m - up_steps) };
            for _ in 0..steps {
                code = desc.toggle(code, k, up);
                out.push(desc.index(code, k));
            }
        }
        if k < n {
            pos += 1;
            out.push(desc.index(code, pos));
        }
    }
    while pos > end {
        pos -= 1;
        out.push(desc.index(code, pos));
    }
}

/// The walk from `x` to `y`: left to `-n`, then right to `n` setting each
/// lamp to its value in `y` before stepping on, then left to `y`'s position.
pub fn canonical_path(desc: TnDescriptor, x: usize, y: usize) -> Result<Vec<usize>, SeparationError> {
    for v in [x, y] {
        if v >= desc.vertex_count() {
            return Err(SeparationError::NotInBox(v.to_string()));
        }
    }
    let mut out = Vec::new();
    push_path(desc, x, y, &mut out);
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathFamilyStats {
    pub schema: String,
    pub n: u32,
    pub m: u32,
    pub vertices: usize,
    pub total_paths: u64,
    pub max_congestion: u64,
    pub max_congestion_vertex: String,
    pub congestion_bound: String,
    pub within_bound: bool,
    pub max_path_vertices: usize,
    pub path_vertex_limit: usize,
}

/// Per-vertex path counts over all ordered pairs, a vertex counted once per
/// path that visits it.
pub fn congestion_counts(desc: TnDescriptor, cap: u128) -> Result<(Vec<u64>, usize), SeparationError> {
    let total = desc.vertex_count();
    let needed = total as u128 * total as u128;
    if needed > cap {
        return Err(SeparationError::CapExceeded { needed, cap });
    }
    let (counts, longest) = (0..total)
        .into_par_iter()
        .fold(
            || (vec![0u64; total], vec![usize::MAX; total], 0usize, Vec::new()),
            |(mut counts, mut stamp, mut longest, mut path), x| {
                for y in 0..total {
                    push_path(desc, x, y, &mut path);
                    longest = longest.max(path.len());
                    let id = x * total + y;
                    for &u in &path {
                        if stamp[u] != id {
                            stamp[u] = id;
                            counts[u] += 1;
                        }
                    }
                }
                (counts, stamp, longest, path)
            },
        )
        .map(|(counts, _, longest, _)| (counts, longest))
        .reduce(
            || (vec![0u64; total], 0),
            |(mut a, la), (b, lb)| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                (a, la.max(lb))
            },
        );
    Ok((counts, longest))
}

pub fn congestion_stats(desc: TnDescriptor, cap: u128) -> Result<PathFamilyStats, SeparationError> {
    let (counts, longest) = congestion_counts(desc, cap)?;
    let (argmax, &max) = counts.iter().enumerate().max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0))).expect("nonempty");
    let bound = desc.congestion_bound();
    Ok(PathFamilyStats {
        schema: PATHS_SCHEMA.into(),
        n: desc.n,
        m: desc.m,
        vertices: desc.vertex_count(),
        total_paths: (desc.vertex_count() as u64).pow(2),
        max_congestion: max,
        max_congestion_vertex: desc.element(argmax).to_string(),
        within_bound: BigRational::from_integer(max.into()) <= bound,
        congestion_bound: bound.to_string(),
        max_path_vertices: longest,
        path_vertex_limit: desc.path_vertex_limit(),
    })
}

/// Lower bounds on `Cut T_n` from the crossing argument: at least half of
/// all ordered pairs are separated by any balanced cutset `W`, so `W` meets
/// at least `|T_n|^2 / 2` paths and `|W| >= |T_n|^2 / (2 * congestion)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongestionLowerBound {
    /// `m^(2n+1) / 6`, from the congestion bound.
    pub formula_bound: String,
    /// `|T_n|^2 / (2 * measured max congestion)`.
    pub measured_bound: String,
    /// Ceiling of the larger of the two.
    pub cut_at_least: u64,
}

pub fn congestion_lower_bound(desc: TnDescriptor, stats: &PathFamilyStats) -> CongestionLowerBound {
    let formula = BigRational::new(desc.configurations().into(), 6.into());
    let measured = BigRational::new((stats.total_paths).into(), (2 * stats.max_congestion).into());
    let best = if formula > measured { &formula } else { &measured };
    CongestionLowerBound {
        formula_bound: formula.to_string(),
        measured_bound: measured.to_string(),
        cut_at_least: best.ceil().to_integer().to_u64().expect("small"),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingReport {
    pub schema: String,
    pub n: u32,
    pub m: u32,
    pub separator: Vec<String>,
    pub pairs: u64,
    pub crossing: u64,
    pub fraction: String,
    pub at_least_half: bool,
}

/// Fraction of ordered pairs whose canonical path meets `w`, for a balanced
/// cutset `w` of `T_n`.
pub fn verify_crossing(desc: TnDescriptor, w: &VertexSubset) -> Result<CrossingReport, SeparationError> {
    let g = tn_graph(desc, cayley::DEFAULT_MAX_VERTICES)?;
    let w = VertexSubset::new(w.indices().iter().copied(), g.len())?;
    let check = validate_cut(&g, &w);
    if !check.valid {
        return Err(SeparationError::InvalidSeparator { largest: check.largest_component, total: check.total });
    }
    let mask = w.mask(g.len());
    let total = g.len();
    let crossing: u64 = (0..total)
        .into_par_iter()
        .map_init(Vec::new, |path, x| {
            (0..total)
                .filter(|&y| {
                    push_path(desc, x, y, path);
                    path.iter().any(|&u| mask[u])
                })
                .count() as u64
        })
        .sum();
    let pairs = (total * total) as u64;
    let fraction = BigRational::new(crossing.into(), pairs.into());
    Ok(CrossingReport {
        schema: CROSSING_SCHEMA.into(),
        n: desc.n,
        m: desc.m,
        separator: w.indices().iter().map(|&u| g.label(u).to_string()).collect(),
        pairs,
        crossing,
        at_least_half: fraction >= BigRational::new(1.into(), 2.into()),
        fraction: fraction.to_string(),
    })
}

/// Where a profile row's lower witness comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WitnessKind {
    /// `Cut` computed exactly on a sampled subgraph of this size.
    Exact,
    /// Congestion bound on a box `T_n` with `|T_n| <= v`.
    Congestion,
    /// Carried over from a smaller size.
    Carried,
    /// `Cut F >= 1` for a nonempty connected `F`.
    Trivial,
}

impl fmt::Display for WitnessKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            WitnessKind::Exact => "exact",
            WitnessKind::Congestion => "congestion",
            WitnessKind::Carried => "carried",
            WitnessKind::Trivial => "trivial",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileRow {
    pub v: usize,
    pub lower_witness: u64,
    pub upper_witness: u64,
    pub kind: WitnessKind,
}

#[derive(Clone, Debug)]
pub struct ProfileConfig {
    pub radius: u32,
    pub sizes: Vec<usize>,
    pub samples: usize,
    pub seed: u64,
    /// Sizes up to this get an exact `Cut` on every sample.
    pub exact_up_to: usize,
    pub max_vertices: usize,
}

impl Default for ProfileConfig {
    fn default() -> Self {
        ProfileConfig {
            radius: 6,
            sizes: vec![1, 2, 4, 8, 16, 24, 48, 96],
            samples: 4,
            seed: 0,
            exact_up_to: 20,
            max_vertices: cayley::DEFAULT_MAX_VERTICES,
        }
    }
}

/// Congestion lower bounds on `Cut T_n` for the boxes with `|T_n| <= v`.
fn box_lower_bounds(modulus: u32, v: usize) -> Result<u64, SeparationError> {
    let mut best = 0;
    for n in 0.. {
        let desc = TnDescriptor::new(n, modulus)?;
        if desc.vertex_count() > v || desc.vertex_count() > 1024 {
            break;
        }
        let stats = congestion_stats(desc, u128::MAX)?;
        best = best.max(congestion_lower_bound(desc, &stats).cut_at_least);
    }
    Ok(best)
}

/// Finite-sample estimate of the separation profile of a group: for each
/// size, the best certified lower bound on `Sep(v)` and the largest cutset
/// produced by the upper-bound construction on sampled connected subgraphs.
/// Lamplighter groups use the fibre separator and box bounds; other groups
/// use the heuristic cut.
pub fn sep_profile_table(kind: &cayley::GroupKind, config: &ProfileConfig) -> Result<Vec<ProfileRow>, SeparationError> {
    let (graph, _) = kind.ball(config.radius, config.max_vertices)?;
    let modulus = match kind {
        cayley::GroupKind::Lamplighter { modulus } => Some(*modulus),
        _ => None,
    };
    let positions = modulus.map(|m| positions_from_labels(&graph, m)).transpose()?;
    let mut rows: Vec<ProfileRow> = Vec::with_capacity(config.sizes.len());
    let mut sizes = config.sizes.clone();
    sizes.sort_unstable();
    sizes.dedup();
    for &v in &sizes {
        if v == 0 || v > graph.len() {
            return Err(GraphError::Unreachable { wanted: v, reachable: graph.len() }.into());
        }
        let mut rng = seed::stream(config.seed, &format!("profile/{v}"));
        let mut lower = (1u64, WitnessKind::Trivial);
        let mut upper = if v == 1 { 1u64 } else { 0 };
        for _ in 0..config.samples.max(1) {
            let subset = cayley::sample_connected_subgraph(&graph, v, &mut rng)?;
            let f = cayley::induced_subgraph(&graph, &subset)?;
            if v <= config.exact_up_to.min(EXACT_CUT_CAP) {
                let exact = cut_exact(&f)?;
                if exact.cut_size as u64 > lower.0 || lower.1 == WitnessKind::Trivial {
                    lower = (lower.0.max(exact.cut_size as u64), WitnessKind::Exact);
                }
            }
            if v >= 2 {
                let cert = match (&positions, modulus) {
                    (Some(pos), Some(m)) => {
                        let local: Vec<i64> = subset.indices().iter().map(|&k| pos[k]).collect();
                        separator_from_positions(&f, &local, m)?
                    }
                    _ => cut_heuristic_upper(&f, 4, rng.gen()),
                };
                if !cert.valid {
                    return Err(SeparationError::InvalidSeparator { largest: cert.largest_component, total: cert.total });
                }
                upper = upper.max(cert.cut_size as u64);
            }
        }
        if let Some(m) = modulus {
            let boxes = box_lower_bounds(m, v)?;
            if boxes > lower.0 {
                lower = (boxes, WitnessKind::Congestion);
            }
        }
        if let Some(prev) = rows.last() {
            if prev.lower_witness > lower.0 {
                lower = (prev.lower_witness, WitnessKind::Carried);
            }
        }
        rows.push(ProfileRow { v, lower_witness: lower.0, upper_witness: upper, kind: lower.1 });
    }
    Ok(rows)
}

pub fn profile_csv(rows: &[ProfileRow]) -> String {
    let mut out = String::from(PROFILE_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&format!("{},{},{},{}\n", r.v, r.lower_witness, r.upper_witness, r.kind));
    }
    out
}

/// Ball indices of the vertices of `T_n`, if the ball contains the box.
pub fn tn_in_ball(ball: &Ball<LamplighterElement>, desc: TnDescriptor) -> Option<VertexSubset> {
    let indices: Option<Vec<usize>> = (0..desc.vertex_count()).map(|u| ball.index_of(&desc.element(u))).collect();
    indices.map(|ix| VertexSubset::new(ix, ball.len()).expect("ball indices"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{lamp_word_length, LampGen};
    use proptest::prelude::*;

    fn path(n: usize) -> Graph {
        Graph::unlabelled(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::unlabelled(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
    }

    /// Oracle: brute force over all subsets with plain component counting.
    fn brute_cut(g: &Graph) -> usize {
        (0u32..1 << g.len())
            .filter(|mask| {
                let removed: Vec<bool> = (0..g.len()).map(|v| mask >> v & 1 == 1).collect();
                let sizes = cayley::component_sizes_without(g, &removed);
                sizes.iter().all(|&s| 2 * s <= g.len())
            })
            .map(|m| m.count_ones() as usize)
            .min()
            .unwrap()
    }

    fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
        let mut rng = crate::seed::stream(seed, "graph");
        let edges: Vec<(usize, usize)> =
            (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|_| rand::Rng::gen_bool(&mut rng, p)).collect::<Vec<_>>();
        Graph::unlabelled(n, edges).unwrap()
    }

    #[test]
    fn log_bounds_are_exact() {
        assert_eq!(log2_bracket(24), (4, 5));
        assert_eq!(log2_bracket(32), (5, 5));
        // 8 * 24 / log2 24 = 41.87...
        assert_eq!(max_count_under_log_bound(8, 24), Some(41));
        // 4 * 16 / 4 = 16 exactly
        assert_eq!(max_count_under_log_bound(4, 16), Some(16));
        assert_eq!(max_count_under_log_bound(4, 2), Some(8));
        assert!(within_log_bound(16, 4, 16) && !within_log_bound(17, 4, 16));
        for v in 2..300usize {
            let bound = 8.0 * v as f64 / (v as f64).log2();
            let c = max_count_under_log_bound(8, v).unwrap() as f64;
            assert!(c <= bound + 1e-9 && c + 1.0 > bound - 1e-9, "v = {v}");
        }
    }

    #[test]
    fn exact_cut_examples() {
        let single = cut_exact(&Graph::unlabelled(1, []).unwrap()).unwrap();
        assert_eq!(single.cutset.indices(), &[0]);
        let p3 = cut_exact(&path(3)).unwrap();
        assert_eq!(p3.cutset.indices(), &[1]);
        let k4 = cut_exact(&complete(4)).unwrap();
        assert_eq!((k4.cut_size, k4.cutset.indices()), (2, &[0, 1][..]));
        assert_eq!(brute_cut(&complete(4)), 2);
        assert!(matches!(cut_exact(&Graph::unlabelled(0, []).unwrap()), Err(SeparationError::Empty)));
        assert!(matches!(cut_exact(&path(31)), Err(SeparationError::TooLarge { v: 31, cap: 30 })));
        let two_edges = Graph::unlabelled(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(cut_exact(&two_edges).unwrap().cut_size, 0);
    }

    #[test]
    fn exact_cut_matches_brute_force() {
        for seed in 0..40 {
            let n = 3 + (seed as usize % 10);
            let g = random_graph(n, 0.35, seed);
            let cert = cut_exact(&g).unwrap();
            assert!(cert.valid && cert.revalidate(&g));
            assert_eq!(cert.cut_size, brute_cut(&g), "seed {seed}");
            let all = minimum_cutsets(&g).unwrap();
            assert_eq!(all[0], cert.cutset);
            assert!(all.iter().all(|c| c.len() == cert.cut_size && validate_cut(&g, c).valid));
            let heur = cut_heuristic_upper(&g, 8, seed);
            assert!(heur.valid && heur.cut_size >= cert.cut_size);
        }
    }

    #[test]
    fn heuristic_examples() {
        let g = Graph::unlabelled(6, [(0, 1), (2, 3), (4, 5)]).unwrap();
        assert!(cut_heuristic_upper(&g, 3, 0).cutset.is_empty());
        let k4 = cut_heuristic_upper(&complete(4), 3, 0);
        assert!(k4.valid && k4.cut_size <= 3);
        let one = cut_heuristic_upper(&Graph::unlabelled(1, []).unwrap(), 1, 0);
        assert_eq!(one.cut_size, 1);
        assert_eq!(cut_heuristic_upper(&path(20), 4, 9), cut_heuristic_upper(&path(20), 4, 9));
    }

    #[test]
    fn tn_sizes_and_structure() {
        for (n, m, count) in [(0, 2, 2), (1, 2, 24), (2, 2, 160), (1, 3, 81)] {
            let desc = TnDescriptor::new(n, m).unwrap();
            let g = tn_graph(desc, 1 << 20).unwrap();
            assert_eq!(g.len(), count);
            assert!(cayley::is_connected(&g));
            for u in 0..g.len() {
                assert_eq!(desc.locate(&desc.element(u)), Some(u));
            }
        }
        let t0 = tn_graph(TnDescriptor::new(0, 2).unwrap(), 10).unwrap();
        assert_eq!(t0.edge_count(), 1);
        assert!(matches!(tn_graph(TnDescriptor::new(2, 2).unwrap(), 100), Err(SeparationError::Graph(GraphError::CapExceeded { .. }))));
        assert!(TnDescriptor::new(1, 1).is_err());
    }

    /// The box is the induced subgraph of a Cayley ball on the same elements.
    #[test]
    fn tn_is_induced_from_the_cayley_graph() {
        for (n, m, radius) in [(1, 2, 8), (1, 3, 9)] {
            let desc = TnDescriptor::new(n, m).unwrap();
            let ball = cayley::lamplighter_ball_direct(m, radius, 1 << 22).unwrap();
            let subset = tn_in_ball(&ball, desc).expect("box inside the ball");
            let induced = cayley::induced_subgraph(&ball.graph, &subset).unwrap();
            let tn = tn_graph(desc, 1 << 20).unwrap();
            let relabel: Vec<usize> = subset.indices().iter().map(|&k| desc.locate(&ball.elements[k]).unwrap()).collect();
            let mut a: Vec<(usize, usize)> = induced.edges().map(|(u, v)| (relabel[u].min(relabel[v]), relabel[u].max(relabel[v]))).collect();
            a.sort_unstable();
            let b: Vec<(usize, usize)> = tn.edges().collect();
            assert_eq!(a, b);
        }
    }

    fn vertex(desc: TnDescriptor, support: &[i64], pos: i64) -> usize {
        desc.locate(&LamplighterElement::with_lamps(support.iter().copied(), pos)).unwrap()
    }

    #[test]
    fn canonical_path_hand_trace() {
        let desc = TnDescriptor::new(1, 2).unwrap();
        let p = canonical_path(desc, vertex(desc, &[], 1), vertex(desc, &[0], 0)).unwrap();
        let expected = [(&[][..], 1), (&[], 0), (&[], -1), (&[], 0), (&[0], 0), (&[0], 1), (&[0], 0)];
        let expected: Vec<usize> = expected.iter().map(|(s, i)| vertex(desc, s, *i)).collect();
        assert_eq!(p, expected);
        let x = vertex(desc, &[-1, 1], 0);
        let same = canonical_path(desc, x, x).unwrap();
        assert_eq!((same[0], *same.last().unwrap()), (x, x));
        assert!(canonical_path(desc, 24, 0).is_err());
    }

    #[test]
    fn canonical_paths_are_walks_in_tn() {
        for (n, m) in [(1, 2), (2, 2), (1, 3), (1, 4)] {
            let desc = TnDescriptor::new(n, m).unwrap();
            let g = tn_graph(desc, 1 << 20).unwrap();
            let limit = desc.path_vertex_limit();
            if m == 2 {
                assert_eq!(limit, 8 * n as usize + 2);
            }
            let mut longest = 0;
            for x in 0..g.len() {
                for y in 0..g.len() {
                    let p = canonical_path(desc, x, y).unwrap();
                    assert_eq!((p[0], *p.last().unwrap()), (x, y));
                    assert!(p.windows(2).all(|w| g.has_edge(w[0], w[1])), "{n} {m} {x} {y}");
                    longest = longest.max(p.len());
                }
            }
            assert_eq!(longest, limit);
        }
    }

    /// Independent congestion oracle: walk each path with group moves on
    /// lamplighter elements and count with a hash set.
    fn oracle_max_congestion(desc: TnDescriptor) -> u64 {
        let n = desc.n as i64;
        let total = desc.vertex_count();
        let mut counts = vec![0u64; total];
        for x in 0..total {
            for y in 0..total {
                let (gx, gy) = (desc.element(x), desc.element(y));
                let mut cur = gx.clone();
                let mut seen = std::collections::HashSet::from([cur.clone()]);
                while cur.pos() > -n {
                    cur = cur.step(LampGen::WInv);
                    seen.insert(cur.clone());
                }
                for k in -n..=n {
                    if cur.config().get(k) != gy.config().get(k) {
                        cur = cur.step(LampGen::S);
                        seen.insert(cur.clone());
                    }
                    if k < n {
                        cur = cur.step(LampGen::W);
                        seen.insert(cur.clone());
                    }
                }
                while cur.pos() > gy.pos() {
                    cur = cur.step(LampGen::WInv);
                    seen.insert(cur.clone());
                }
                assert_eq!(cur, gy);
                for e in seen {
                    counts[desc.locate(&e).unwrap()] += 1;
                }
            }
        }
        counts.into_iter().max().unwrap()
    }

    #[test]
    fn congestion_matches_oracle_and_bound() {
        let t0 = congestion_stats(TnDescriptor::new(0, 2).unwrap(), u128::MAX).unwrap();
        assert_eq!((t0.total_paths, t0.congestion_bound.as_str()), (4, "6"));
        assert!(t0.within_bound);
        for (n, bound) in [(1, "216"), (2, "2400")] {
            let desc = TnDescriptor::new(n, 2).unwrap();
            let stats = congestion_stats(desc, u128::MAX).unwrap();
            assert_eq!(stats.congestion_bound, bound);
            assert!(stats.within_bound);
            assert_eq!(stats.max_congestion, oracle_max_congestion(desc));
            assert!(stats.max_path_vertices <= stats.path_vertex_limit);
        }
        assert!(matches!(congestion_stats(TnDescriptor::new(2, 2).unwrap(), 1000), Err(SeparationError::CapExceeded { .. })));
    }

    /// With switch generators `s^{+-1}` a lamp can take several steps to set,
    /// and from `m = 5` on the congestion of `T_1` exceeds `3|T_1|^2 / m^3`.
    #[test]
    fn congestion_for_larger_lamp_groups() {
        for (m, within) in [(3, true), (4, true), (5, false), (6, false)] {
            let stats = congestion_stats(TnDescriptor::new(1, m).unwrap(), u128::MAX).unwrap();
            assert_eq!(stats.within_bound, within, "m = {m}: {stats:?}");
            assert_eq!(stats.max_path_vertices, stats.path_vertex_limit);
        }
    }

    #[test]
    fn congestion_lower_bounds() {
        let desc = TnDescriptor::new(1, 2).unwrap();
        let stats = congestion_stats(desc, u128::MAX).unwrap();
        let lb = congestion_lower_bound(desc, &stats);
        assert_eq!(lb.formula_bound, "4/3");
        let measured: BigRational = lb.measured_bound.parse().unwrap();
        assert!(measured >= BigRational::new(4.into(), 3.into()));
        assert!(lb.cut_at_least >= 2);
        let d2 = TnDescriptor::new(2, 2).unwrap();
        assert_eq!(congestion_lower_bound(d2, &congestion_stats(d2, u128::MAX).unwrap()).formula_bound, "16/3");
    }

    #[test]
    fn crossing_examples() {
        let desc = TnDescriptor::new(1, 2).unwrap();
        let all = verify_crossing(desc, &VertexSubset::all(24)).unwrap();
        assert_eq!(all.fraction, "1");
        let t0 = TnDescriptor::new(0, 2).unwrap();
        assert!(matches!(verify_crossing(t0, &VertexSubset::default()), Err(SeparationError::InvalidSeparator { .. })));
    }

    #[test]
    fn separator_examples() {
        let edge = Graph::new(vec!["lamps:{};pos:0".into(), "lamps:{};pos:1".into()], [(0, 1)]).unwrap();
        let cert = separator_from_positions(&edge, &positions_from_labels(&edge, 2).unwrap(), 2).unwrap();
        assert!(cert.passes());
        assert_eq!(cert.cut_size, 1);
        let lone = Graph::new(vec!["lamps:{};pos:0".into()], []).unwrap();
        assert!(matches!(separator_from_positions(&lone, &[0], 2), Err(SeparationError::TooSmall(1))));
        let apart = Graph::unlabelled(2, []).unwrap();
        assert!(matches!(separator_from_positions(&apart, &[0, 3], 2), Err(SeparationError::Disconnected)));

        let desc = TnDescriptor::new(1, 2).unwrap();
        let t1 = tn_graph(desc, 100).unwrap();
        let cert = separator_from_positions(&t1, &positions_from_labels(&t1, 2).unwrap(), 2).unwrap();
        assert!(cert.passes() && cert.revalidate(&t1));
        let trace = cert.trace.clone().unwrap();
        assert_eq!((trace.i_g, trace.i_lower, trace.i_upper), (0, 0, 0));
        assert_eq!(cert.cut_size, 8);

        let ball = cayley::lamplighter_ball_direct(2, 6, 1 << 20).unwrap();
        let cert = lamplighter_separator(&ball, &VertexSubset::all(ball.len())).unwrap();
        assert!(cert.passes(), "{cert:?}");
    }

    #[test]
    fn t1_sandwich() {
        let desc = TnDescriptor::new(1, 2).unwrap();
        let t1 = tn_graph(desc, 100).unwrap();
        let lower = congestion_lower_bound(desc, &congestion_stats(desc, u128::MAX).unwrap()).cut_at_least;
        let exact = cut_exact(&t1).unwrap();
        let upper = separator_from_positions(&t1, &positions_from_labels(&t1, 2).unwrap(), 2).unwrap();
        assert!(lower <= exact.cut_size as u64 && exact.cut_size <= upper.cut_size);
        for w in minimum_cutsets(&t1).unwrap() {
            assert!(verify_crossing(desc, &w).unwrap().at_least_half);
        }
    }

    #[test]
    fn profile_table() {
        let config = ProfileConfig { radius: 8, sizes: vec![1, 2, 12, 24, 40], samples: 2, ..ProfileConfig::default() };
        let rows = sep_profile_table(&cayley::GroupKind::Lamplighter { modulus: 2 }, &config).unwrap();
        assert_eq!((rows[0].v, rows[0].lower_witness), (1, 1));
        assert!(rows.windows(2).all(|w| w[0].lower_witness <= w[1].lower_witness));
        let r24 = rows.iter().find(|r| r.v == 24).unwrap();
        assert!(r24.lower_witness >= 2);
        let csv = profile_csv(&rows);
        assert!(csv.starts_with("v,lower_witness,upper_witness,kind\n1,1,1,"));
        let again = sep_profile_table(&cayley::GroupKind::Lamplighter { modulus: 2 }, &config).unwrap();
        assert_eq!(rows, again);
        let other = sep_profile_table(&cayley::GroupKind::Mpq { p: 2, q: 1 }, &ProfileConfig { radius: 5, sizes: vec![4, 30], ..config }).unwrap();
        assert_eq!(other.len(), 2);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn separator_is_valid_on_sampled_subgraphs(seed in 0u64..1_000_000, size in 2usize..400) {
            let ball = cayley::lamplighter_ball_direct(2, 8, 1 << 20).unwrap();
            let mut rng = crate::seed::stream(seed, "prop");
            let subset = cayley::sample_connected_subgraph(&ball.graph, size, &mut rng).unwrap();
            let cert = lamplighter_separator(&ball, &subset).unwrap();
            prop_assert!(cert.passes());
            let f = cayley::induced_subgraph(&ball.graph, &subset).unwrap();
            prop_assert!(cert.revalidate(&f));
        }

        #[test]
        fn heuristic_is_never_below_exact(seed in 0u64..10_000, n in 1usize..14) {
            let g = random_graph(n, 0.3, seed);
            let exact = cut_exact(&g).unwrap();
            let heur = cut_heuristic_upper(&g, 4, seed);
            prop_assert!(heur.valid);
            prop_assert!(heur.cut_size >= exact.cut_size);
        }
    }

    #[test]
    fn word_length_bounds_box_paths() {
        // every vertex of T_1 lies within distance 7 of the identity
        let desc = TnDescriptor::new(1, 2).unwrap();
        assert!((0..24).all(|u| lamp_word_length(&desc.element(u)) <= 7));
    }
}
