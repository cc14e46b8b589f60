//! Polymer graphs built from monomer units by point-attaching.
//!
//! Every construction lays the monomers out disjointly (monomer `i` first
//! occupies the ids after monomers `0..i`), identifies some pairs of vertices
//! and optionally adds new edges. A merged vertex takes the smallest id of its
//! class and ids are then compacted, so the composite is deterministic.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::io::GraphJson;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolymerError {
    #[error("a polymer needs at least one monomer")]
    NoMonomers,
    #[error("vertex {vertex} is out of range for monomer {monomer} on {n} vertices")]
    VertexOutOfRange { monomer: usize, vertex: usize, n: usize },
    #[error("monomer {0} is not connected")]
    MonomerNotConnected(usize),
    #[error("interior chain monomer {0} has x = y")]
    DegenerateHandles(usize),
    #[error("a {kind} needs at least {needed} monomers, got {got}")]
    TooFewMonomers { kind: PolymerKind, needed: usize, got: usize },
    #[error("tree edges do not form a spanning tree over the monomers: {0}")]
    NotATree(String),
    #[error("tree_edges are only meaningful for kind \"tree\", got {0}")]
    UnexpectedTreeEdges(PolymerKind),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PolymerKind {
    Link,
    Chain,
    Bouquet,
    Circuit,
    Tree,
}

impl fmt::Display for PolymerKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PolymerKind::Link => "link",
            PolymerKind::Chain => "chain",
            PolymerKind::Bouquet => "bouquet",
            PolymerKind::Circuit => "circuit",
            PolymerKind::Tree => "tree",
        })
    }
}

/// A monomer graph with its attachment vertices `x` and `y`.
///
/// Bouquets and circuits only use `x`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "MonomerJson", into = "MonomerJson")]
pub struct MonomerHandle {
    pub graph: Graph,
    pub x: usize,
    pub y: usize,
}

impl MonomerHandle {
    pub fn new(graph: Graph, x: usize, y: usize) -> Self {
        Self { graph, x, y }
    }

    /// Handle with a single attachment vertex (`y = x`).
    pub fn at(graph: Graph, x: usize) -> Self {
        Self { graph, x, y: x }
    }
}

#[derive(Serialize, Deserialize)]
struct MonomerJson {
    graph: GraphJson,
    x: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    y: Option<usize>,
}

impl TryFrom<MonomerJson> for MonomerHandle {
    type Error = crate::graph::GraphError;

    fn try_from(raw: MonomerJson) -> Result<Self, Self::Error> {
        Ok(Self {
            graph: Graph::try_from(raw.graph)?,
            x: raw.x,
            y: raw.y.unwrap_or(raw.x),
        })
    }
}

impl From<MonomerHandle> for MonomerJson {
    fn from(h: MonomerHandle) -> Self {
        Self { graph: GraphJson::from(&h.graph), x: h.x, y: Some(h.y) }
    }
}

/// Identification of vertex `va` of monomer `a` with vertex `vb` of monomer `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "[usize; 4]", into = "[usize; 4]")]
pub struct TreeEdge {
    pub a: usize,
    pub va: usize,
    pub b: usize,
    pub vb: usize,
}

impl From<[usize; 4]> for TreeEdge {
    fn from([a, va, b, vb]: [usize; 4]) -> Self {
        Self { a, va, b, vb }
    }
}

impl From<TreeEdge> for [usize; 4] {
    fn from(e: TreeEdge) -> Self {
        [e.a, e.va, e.b, e.vb]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolymerSpec {
    pub kind: PolymerKind,
    pub monomers: Vec<MonomerHandle>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub tree_edges: Vec<TreeEdge>,
}

impl PolymerSpec {
    pub fn new(kind: PolymerKind, monomers: Vec<MonomerHandle>) -> Self {
        Self { kind, monomers, tree_edges: Vec::new() }
    }

    pub fn tree(monomers: Vec<MonomerHandle>, tree_edges: Vec<TreeEdge>) -> Self {
        Self { kind: PolymerKind::Tree, monomers, tree_edges }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositionResult {
    pub graph: Graph,
    /// `vertex_map[i][v]` is the composite id of vertex `v` of monomer `i`.
    pub vertex_map: Vec<Vec<usize>>,
}

impl CompositionResult {
    pub fn map(&self, monomer: usize, v: usize) -> usize {
        self.vertex_map[monomer][v]
    }
}

type Slot = (usize, usize);

struct Layout<'a> {
    graphs: Vec<&'a Graph>,
    offsets: Vec<usize>,
    parent: Vec<usize>,
}

impl<'a> Layout<'a> {
    fn new(graphs: Vec<&'a Graph>) -> Self {
        let mut offsets = Vec::with_capacity(graphs.len());
        let mut total = 0;
        for g in &graphs {
            offsets.push(total);
            total += g.vertex_count();
        }
        Self { graphs, offsets, parent: (0..total).collect() }
    }

    fn global(&self, (monomer, v): Slot) -> usize {
        self.offsets[monomer] + v
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    fn identify(&mut self, a: Slot, b: Slot) {
        let ra = self.find(self.global(a));
        let rb = self.find(self.global(b));
        let (lo, hi) = (ra.min(rb), ra.max(rb));
        self.parent[hi] = lo;
    }

    fn finish(mut self, extra_edges: &[(Slot, Slot)]) -> CompositionResult {
        let total = self.parent.len();
        let mut id = vec![usize::MAX; total];
        let mut next = 0;
        for v in 0..total {
            let root = self.find(v);
            if root == v {
                id[v] = next;
                next += 1;
            } else {
                id[v] = id[root];
            }
        }
        let mut pairs = Vec::new();
        for (i, g) in self.graphs.iter().enumerate() {
            let off = self.offsets[i];
            pairs.extend(g.edges().iter().map(|&(u, v)| (id[off + u], id[off + v])));
        }
        for &(a, b) in extra_edges {
            pairs.push((id[self.global(a)], id[self.global(b)]));
        }
        let graph = Graph::from_edge_list(next, pairs)
            .expect("point-attaching disjoint monomers cannot create loops or parallel edges");
        let vertex_map = self
            .graphs
            .iter()
            .enumerate()
            .map(|(i, g)| (0..g.vertex_count()).map(|v| id[self.offsets[i] + v]).collect())
            .collect();
        CompositionResult { graph, vertex_map }
    }
}

fn check_vertex(monomer: usize, g: &Graph, vertex: usize) -> Result<(), PolymerError> {
    if vertex < g.vertex_count() {
        Ok(())
    } else {
        Err(PolymerError::VertexOutOfRange { monomer, vertex, n: g.vertex_count() })
    }
}

fn check_monomers(monomers: &[MonomerHandle]) -> Result<(), PolymerError> {
    if monomers.is_empty() {
        return Err(PolymerError::NoMonomers);
    }
    for (i, m) in monomers.iter().enumerate() {
        check_vertex(i, &m.graph, m.x)?;
        check_vertex(i, &m.graph, m.y)?;
        if !m.graph.is_connected() {
            return Err(PolymerError::MonomerNotConnected(i));
        }
    }
    Ok(())
}

fn layout(monomers: &[MonomerHandle]) -> Layout<'_> {
    Layout::new(monomers.iter().map(|m| &m.graph).collect())
}

/// Identifies `va` in `a` with `vb` in `b`.
pub fn point_attach(a: &Graph, va: usize, b: &Graph, vb: usize) -> Result<CompositionResult, PolymerError> {
    for (i, (g, v)) in [(a, va), (b, vb)].into_iter().enumerate() {
        check_vertex(i, g, v)?;
        if !g.is_connected() {
            return Err(PolymerError::MonomerNotConnected(i));
        }
    }
    let mut lay = Layout::new(vec![a, b]);
    lay.identify((0, va), (1, vb));
    Ok(lay.finish(&[]))
}

/// Disjoint union plus the bridges `y_i - x_{i+1}`.
pub fn build_link(monomers: &[MonomerHandle]) -> Result<CompositionResult, PolymerError> {
    check_monomers(monomers)?;
    let bridges: Vec<_> = monomers
        .windows(2)
        .enumerate()
        .map(|(i, w)| ((i, w[0].y), (i + 1, w[1].x)))
        .collect();
    Ok(layout(monomers).finish(&bridges))
}

/// Identifies `y_i` with `x_{i+1}`.
pub fn build_chain(monomers: &[MonomerHandle]) -> Result<CompositionResult, PolymerError> {
    check_monomers(monomers)?;
    let k = monomers.len();
    if let Some(i) = (1..k.saturating_sub(1)).find(|&i| monomers[i].x == monomers[i].y) {
        return Err(PolymerError::DegenerateHandles(i));
    }
    let mut lay = layout(monomers);
    for i in 0..k - 1 {
        lay.identify((i, monomers[i].y), (i + 1, monomers[i + 1].x));
    }
    Ok(lay.finish(&[]))
}

/// Identifies every `x_i` into one hub.
pub fn build_bouquet(monomers: &[MonomerHandle]) -> Result<CompositionResult, PolymerError> {
    check_monomers(monomers)?;
    let mut lay = layout(monomers);
    for i in 1..monomers.len() {
        lay.identify((0, monomers[0].x), (i, monomers[i].x));
    }
    Ok(lay.finish(&[]))
}

/// Places `x_i` at position `i` of a cycle `C_k` (`k >= 3`).
pub fn build_circuit(monomers: &[MonomerHandle]) -> Result<CompositionResult, PolymerError> {
    if monomers.len() < 3 {
        return Err(PolymerError::TooFewMonomers {
            kind: PolymerKind::Circuit,
            needed: 3,
            got: monomers.len(),
        });
    }
    check_monomers(monomers)?;
    let k = monomers.len();
    let cycle: Vec<_> = (0..k)
        .map(|i| ((i, monomers[i].x), ((i + 1) % k, monomers[(i + 1) % k].x)))
        .collect();
    Ok(layout(monomers).finish(&cycle))
}

/// Point-attaches monomers along an arbitrary spanning tree.
pub fn build_tree_attach(spec: &PolymerSpec) -> Result<CompositionResult, PolymerError> {
    let monomers = &spec.monomers;
    check_monomers(monomers)?;
    let k = monomers.len();
    if spec.tree_edges.len() != k - 1 {
        return Err(PolymerError::NotATree(format!(
            "{} monomers need {} tree edges, got {}",
            k,
            k - 1,
            spec.tree_edges.len()
        )));
    }
    let mut component: Vec<usize> = (0..k).collect();
    fn root(c: &mut [usize], mut v: usize) -> usize {
        while c[v] != v {
            c[v] = c[c[v]];
            v = c[v];
        }
        v
    }
    for e in &spec.tree_edges {
        if e.a >= k || e.b >= k {
            return Err(PolymerError::NotATree(format!(
                "edge {:?} names a monomer outside 0..{k}",
                [e.a, e.va, e.b, e.vb]
            )));
        }
        check_vertex(e.a, &monomers[e.a].graph, e.va)?;
        check_vertex(e.b, &monomers[e.b].graph, e.vb)?;
        let (ra, rb) = (root(&mut component, e.a), root(&mut component, e.b));
        if ra == rb {
            return Err(PolymerError::NotATree(format!(
                "edge between monomers {} and {} closes a cycle",
                e.a, e.b
            )));
        }
        component[ra] = rb;
    }
    let mut lay = layout(monomers);
    for e in &spec.tree_edges {
        lay.identify((e.a, e.va), (e.b, e.vb));
    }
    Ok(lay.finish(&[]))
}

/// Builds the composite described by `spec`.
pub fn compose(spec: &PolymerSpec) -> Result<CompositionResult, PolymerError> {
    if spec.kind != PolymerKind::Tree && !spec.tree_edges.is_empty() {
        return Err(PolymerError::UnexpectedTreeEdges(spec.kind));
    }
    match spec.kind {
        PolymerKind::Link => build_link(&spec.monomers),
        PolymerKind::Chain => build_chain(&spec.monomers),
        PolymerKind::Bouquet => build_bouquet(&spec.monomers),
        PolymerKind::Circuit => build_circuit(&spec.monomers),
        PolymerKind::Tree => build_tree_attach(spec),
    }
}
