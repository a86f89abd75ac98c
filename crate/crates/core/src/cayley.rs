//! Finite graphs: Cayley balls, induced subgraphs, connectivity and random
//! connected subsets.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::groups::{self, GeneratingSet, GroupElement, GroupError, LampGen, LamplighterElement};

/// Default cap on the number of vertices a ball may have.
pub const DEFAULT_MAX_VERTICES: usize = 5_000_000;

pub const GRAPH_SCHEMA: &str = "lampsep.graph/1";

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("vertex index {index} out of range for a graph with {len} vertices")]
    BadIndex { index: usize, len: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex cap exceeded: more than {cap} vertices")]
    CapExceeded { cap: usize },
    #[error("cannot grow a connected subset of size {wanted}: only {reachable} vertices reachable")]
    Unreachable { wanted: usize, reachable: usize },
    #[error("malformed graph input: {0}")]
    Malformed(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Finite simple undirected graph with labelled vertices. Adjacency lists are
/// sorted and symmetric.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(labels: Vec<String>, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let len = labels.len();
        let mut adj = vec![Vec::new(); len];
        for (u, v) in edges {
            for index in [u, v] {
                if index >= len {
                    return Err(GraphError::BadIndex { index, len });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { labels, adj })
    }

    /// Unlabelled graph; vertices are labelled by their index.
    pub fn unlabelled(len: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        Self::new((0..len).map(|i| i.to_string()).collect(), edges)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| list.iter().filter(move |v| **v > u).map(move |v| (u, *v)))
    }

    /// Edge-list text: a header line `n m`, then one `u v` line per edge.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.len(), self.edge_count());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    pub fn from_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| GraphError::Malformed("missing header".into()))?;
        let nums = parse_pair(header)?;
        let (n, m) = (nums.0, nums.1);
        let edges: Vec<(usize, usize)> = lines.map(parse_pair).collect::<Result<_, _>>()?;
        if edges.len() != m {
            return Err(GraphError::Malformed(format!("header announces {m} edges, found {}", edges.len())));
        }
        Self::unlabelled(n, edges)
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("graph \"{name}\" {{\n");
        for (v, label) in self.labels.iter().enumerate() {
            let _ = writeln!(out, "  {v} [label=\"{}\"];", label.replace('"', "\\\""));
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }

    pub fn to_file(&self) -> GraphFile {
        GraphFile { schema: GRAPH_SCHEMA.to_string(), labels: self.labels.clone(), edges: self.edges().collect() }
    }
}

fn parse_pair(line: &str) -> Result<(usize, usize), GraphError> {
    let bad = || GraphError::Malformed(format!("expected two integers, got `{line}`"));
    let mut it = line.split_whitespace();
    let a = it.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
    let b = it.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
    if it.next().is_some() {
        return Err(bad());
    }
    Ok((a, b))
}

/// JSON form of a graph, with vertex labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub schema: String,
    pub labels: Vec<String>,
    pub edges: Vec<(usize, usize)>,
}

impl GraphFile {
    pub fn into_graph(self) -> Result<Graph, GraphError> {
        if self.schema != GRAPH_SCHEMA {
            return Err(GraphError::Malformed(format!("unknown schema `{}`", self.schema)));
        }
        Graph::new(self.labels, self.edges)
    }
}

/// Sorted set of distinct vertex indices of some parent graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VertexSubset(Vec<usize>);

impl VertexSubset {
    pub fn new(indices: impl IntoIterator<Item = usize>, parent_len: usize) -> Result<Self, GraphError> {
        let mut v: Vec<usize> = indices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        if let Some(&index) = v.last().filter(|i| **i >= parent_len) {
            return Err(GraphError::BadIndex { index, len: parent_len });
        }
        Ok(VertexSubset(v))
    }

    pub fn all(len: usize) -> Self {
        VertexSubset((0..len).collect())
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn mask(&self, len: usize) -> Vec<bool> {
        let mut mask = vec![false; len];
        for &v in &self.0 {
            mask[v] = true;
        }
        mask
    }
}

/// Subgraph induced on `f`; vertex `k` of the result is `f.indices()[k]`.
pub fn induced_subgraph(g: &Graph, f: &VertexSubset) -> Result<Graph, GraphError> {
    if let Some(&index) = f.indices().last().filter(|i| **i >= g.len()) {
        return Err(GraphError::BadIndex { index, len: g.len() });
    }
    let mut local = vec![usize::MAX; g.len()];
    for (k, &v) in f.indices().iter().enumerate() {
        local[v] = k;
    }
    let labels = f.indices().iter().map(|&v| g.labels[v].clone()).collect();
    let edges = f
        .indices()
        .iter()
        .flat_map(|&u| g.neighbors(u).iter().filter(move |&&w| w > u).map(move |&w| (u, w)))
        .filter(|&(_, w)| local[w] != usize::MAX)
        .map(|(u, w)| (local[u], local[w]));
    Graph::new(labels, edges)
}

/// Sizes of the connected components of `g` minus the vertices flagged in
/// `removed`.
pub fn component_sizes_without(g: &Graph, removed: &[bool]) -> Vec<usize> {
    let mut seen = removed.to_vec();
    let mut sizes = Vec::new();
    let mut stack = Vec::new();
    for start in 0..g.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        stack.push(start);
        let mut size = 0;
        while let Some(u) = stack.pop() {
            size += 1;
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        sizes.push(size);
    }
    sizes
}

/// Partition into connected components, each sorted, ordered by smallest vertex.
pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.len()];
    let mut out = Vec::new();
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
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

pub fn is_connected(g: &Graph) -> bool {
    component_sizes_without(g, &vec![false; g.len()]).len() <= 1
}

/// Grows a connected subset of exactly `size` vertices from a random start by
/// repeatedly absorbing a uniformly chosen frontier vertex.
pub fn sample_connected_subgraph<R: Rng>(g: &Graph, size: usize, rng: &mut R) -> Result<VertexSubset, GraphError> {
    if size == 0 || size > g.len() {
        return Err(GraphError::Unreachable { wanted: size, reachable: g.len() });
    }
    let start = rng.gen_range(0..g.len());
    let mut state = vec![0u8; g.len()]; // 0 untouched, 1 frontier, 2 taken
    let mut frontier = vec![start];
    state[start] = 1;
    let mut taken = Vec::with_capacity(size);
    while taken.len() < size {
        if frontier.is_empty() {
            return Err(GraphError::Unreachable { wanted: size, reachable: taken.len() });
        }
        let v = frontier.swap_remove(rng.gen_range(0..frontier.len()));
        state[v] = 2;
        taken.push(v);
        for &w in g.neighbors(v) {
            if state[w] == 0 {
                state[w] = 1;
                frontier.push(w);
            }
        }
    }
    VertexSubset::new(taken, g.len())
}

/// A ball in a Cayley graph together with the group elements at its vertices.
#[derive(Clone, Debug)]
pub struct Ball<E> {
    pub graph: Graph,
    pub elements: Vec<E>,
    /// distance from the identity, per vertex
    pub depth: Vec<u32>,
    index: HashMap<E, usize>,
}

impl<E: GroupElement> Ball<E> {
    pub fn index_of(&self, x: &E) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// Breadth-first ball of `radius` around `identity`. `successors(x)` lists the
/// neighbours of `x` (one per generator). Each new layer is numbered in the
/// order of the canonical encodings of its elements.
pub fn bfs_ball<E, F>(identity: E, radius: u32, cap: usize, successors: F) -> Result<Ball<E>, GraphError>
where
    E: GroupElement,
    F: Fn(&E) -> Vec<E>,
{
    let mut elements = vec![identity.clone()];
    let mut labels = vec![identity.to_string()];
    let mut depth = vec![0u32];
    let mut index = HashMap::from([(identity, 0usize)]);
    let mut layer = 0..1;
    for r in 1..=radius {
        let mut fresh: HashSet<E> = HashSet::new();
        for k in layer.clone() {
            for y in successors(&elements[k]) {
                if !index.contains_key(&y) {
                    fresh.insert(y);
                }
            }
        }
        let mut fresh: Vec<(String, E)> = fresh.into_iter().map(|e| (e.to_string(), e)).collect();
        fresh.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        if elements.len() + fresh.len() > cap {
            return Err(GraphError::CapExceeded { cap });
        }
        let begin = elements.len();
        for (label, e) in fresh {
            index.insert(e.clone(), elements.len());
            elements.push(e);
            labels.push(label);
            depth.push(r);
        }
        layer = begin..elements.len();
    }
    let mut edges = Vec::new();
    for (u, x) in elements.iter().enumerate() {
        for y in successors(x) {
            if let Some(&v) = index.get(&y) {
                if u < v {
                    edges.push((u, v));
                }
            }
        }
    }
    let graph = Graph::new(labels, edges)?;
    Ok(Ball { graph, elements, depth, index })
}

/// Ball of the Cayley graph of `gens`, via right multiplication by generators.
pub fn ball<E: GroupElement>(gens: &GeneratingSet<E>, radius: u32, cap: usize) -> Result<Ball<E>, GraphError> {
    bfs_ball(gens.identity().clone(), radius, cap, |x| {
        gens.generators().iter().map(|(_, g)| x.op(g).expect("generators share parameters")).collect()
    })
}

/// Ball of `Z_m wr Z` built from direct lamp/position updates instead of the
/// general product.
pub fn lamplighter_ball_direct(modulus: u32, radius: u32, cap: usize) -> Result<Ball<LamplighterElement>, GraphError> {
    let moves: &[LampGen] =
        if modulus == 2 { &[LampGen::S, LampGen::W, LampGen::WInv] } else { &[LampGen::S, LampGen::SInv, LampGen::W, LampGen::WInv] };
    bfs_ball(LamplighterElement::identity(modulus)?, radius, cap, |x| moves.iter().map(|m| x.step(*m)).collect())
}

/// Groups a ball can be built for, as named on the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupKind {
    Lamplighter { modulus: u32 },
    WreathZZ,
    Mpq { p: i64, q: i64 },
    Affine { valuation: String, a: String, b: String },
    SymShift,
}

impl GroupKind {
    pub fn name(&self) -> &'static str {
        match self {
            GroupKind::Lamplighter { .. } => "lamplighter",
            GroupKind::WreathZZ => "wreath-zz",
            GroupKind::Mpq { .. } => "mpq",
            GroupKind::Affine { .. } => "affine",
            GroupKind::SymShift => "symshift",
        }
    }

    /// Ball as a labelled graph, plus the generator names used.
    pub fn ball(&self, radius: u32, cap: usize) -> Result<(Graph, Vec<String>), GraphError> {
        fn finish<E: GroupElement>(gens: GeneratingSet<E>, radius: u32, cap: usize) -> Result<(Graph, Vec<String>), GraphError> {
            Ok((ball(&gens, radius, cap)?.graph, gens.names()))
        }
        match self {
            GroupKind::Lamplighter { modulus } => finish(groups::lamplighter_generators(*modulus)?, radius, cap),
            GroupKind::WreathZZ => finish(groups::wreath_zz_generators(), radius, cap),
            GroupKind::Mpq { p, q } => finish(groups::mpq_generators(groups::MpqParams::new(*p, *q)?), radius, cap),
            GroupKind::Affine { valuation, a, b } => {
                let val = valuation.parse().map_err(GroupError::from)?;
                let a = crate::numbers::ValuedScalar::parse(a, val).map_err(GroupError::from)?;
                let b = crate::numbers::ValuedScalar::parse(b, val).map_err(GroupError::from)?;
                let d = groups::AffineElement::translation(b);
                let delta = groups::AffineElement::dilation(a)?;
                finish(groups::affine_generators(&d, &delta), radius, cap)
            }
            GroupKind::SymShift => finish(groups::symshift_generators(&[groups::FinitePerm::transposition(0, 1)]), radius, cap),
        }
    }
}
