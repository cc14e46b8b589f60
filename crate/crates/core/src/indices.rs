//! Mostar, edge Mostar and Wiener indices.
//!
//! For an edge `uv`, `n_u` counts the vertices strictly closer to `u` than to
//! `v`, and `m_u` counts the edges strictly closer to `u`, where the distance
//! from an edge `xy` to a vertex `w` is `min(d(x, w), d(y, w))`. Then
//!
//! * `Mo(G)   = sum over uv of |n_u - n_v|`
//! * `Mo_e(G) = sum over uv of |m_u - m_v|`
//! * `W(G)    = sum over unordered pairs of d(u, v)`
//!
//! Everything is computed from a single [`DistanceTable`].

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IndexError {
    #[error("graph is not connected")]
    NotConnected,
    #[error("({0}, {1}) is not an edge of the graph")]
    EdgeNotInGraph(usize, usize),
    #[error("index value overflows the scalar type")]
    Overflow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Parallelism {
    #[default]
    Sequential,
    /// BFS sources and per-edge counts run on the rayon pool. Results are
    /// assembled in source/edge order, so they match the sequential run.
    Parallel,
}

/// All-pairs hop counts of a connected graph, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceTable {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceTable {
    pub fn new(g: &Graph) -> Result<Self, IndexError> {
        Self::with_parallelism(g, Parallelism::Sequential)
    }

    pub fn with_parallelism(g: &Graph, par: Parallelism) -> Result<Self, IndexError> {
        let rows = match par {
            Parallelism::Sequential => g.all_pairs_distances(),
            Parallelism::Parallel => g.all_pairs_distances_par(),
        };
        let n = g.vertex_count();
        let mut dist = Vec::with_capacity(n * n);
        for row in rows {
            for d in row.dist {
                dist.push(d.finite().ok_or(IndexError::NotConnected)?);
            }
        }
        Ok(Self { n, dist })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn row(&self, source: usize) -> &[u32] {
        &self.dist[source * self.n..(source + 1) * self.n]
    }

    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }
}

/// Vertex partition of one edge `(u, v)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OrientationCounts {
    pub edge: (usize, usize),
    pub n_u: usize,
    pub n_v: usize,
    pub n_0: usize,
}

impl OrientationCounts {
    pub fn difference(&self) -> usize {
        self.n_u.abs_diff(self.n_v)
    }
}

/// Edge partition of one edge `(u, v)`; the edge itself is in `m_0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EdgeOrientationCounts {
    pub edge: (usize, usize),
    pub m_u: usize,
    pub m_v: usize,
    pub m_0: usize,
}

impl EdgeOrientationCounts {
    pub fn difference(&self) -> usize {
        self.m_u.abs_diff(self.m_v)
    }
}

/// Per-edge contributions `|n_u - n_v|` and `|m_u - m_v|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EdgeContribution {
    pub edge: (usize, usize),
    pub mostar: usize,
    pub edge_mostar: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndexReport<S> {
    pub mostar: S,
    pub edge_mostar: S,
    pub wiener: S,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub per_edge: Option<Vec<EdgeContribution>>,
}

fn check_edge(g: &Graph, (u, v): (usize, usize)) -> Result<(), IndexError> {
    if u < g.vertex_count() && v < g.vertex_count() && g.has_edge(u, v) {
        Ok(())
    } else {
        Err(IndexError::EdgeNotInGraph(u, v))
    }
}

fn check_table(g: &Graph, table: &DistanceTable) {
    assert_eq!(
        g.vertex_count(),
        table.vertex_count(),
        "distance table belongs to a different graph"
    );
}

fn count_vertices(table: &DistanceTable, (u, v): (usize, usize)) -> OrientationCounts {
    let (du, dv) = (table.row(u), table.row(v));
    let (mut n_u, mut n_v) = (0, 0);
    for (a, b) in du.iter().zip(dv) {
        match a.cmp(b) {
            std::cmp::Ordering::Less => n_u += 1,
            std::cmp::Ordering::Greater => n_v += 1,
            std::cmp::Ordering::Equal => {}
        }
    }
    OrientationCounts { edge: (u, v), n_u, n_v, n_0: table.vertex_count() - n_u - n_v }
}

fn count_edges(g: &Graph, table: &DistanceTable, (u, v): (usize, usize)) -> EdgeOrientationCounts {
    let (du, dv) = (table.row(u), table.row(v));
    let (mut m_u, mut m_v) = (0, 0);
    for &(x, y) in g.edges() {
        let to_u = du[x].min(du[y]);
        let to_v = dv[x].min(dv[y]);
        match to_u.cmp(&to_v) {
            std::cmp::Ordering::Less => m_u += 1,
            std::cmp::Ordering::Greater => m_v += 1,
            std::cmp::Ordering::Equal => {}
        }
    }
    EdgeOrientationCounts { edge: (u, v), m_u, m_v, m_0: g.edge_count() - m_u - m_v }
}

/// Splits `V(G)` into vertices closer to `e.0`, closer to `e.1`, and equidistant.
pub fn vertex_orientation(
    g: &Graph,
    e: (usize, usize),
    table: &DistanceTable,
) -> Result<OrientationCounts, IndexError> {
    check_table(g, table);
    check_edge(g, e)?;
    Ok(count_vertices(table, e))
}

/// Splits `E(G)` into edges closer to `e.0`, closer to `e.1`, and equidistant.
pub fn edge_orientation(
    g: &Graph,
    e: (usize, usize),
    table: &DistanceTable,
) -> Result<EdgeOrientationCounts, IndexError> {
    check_table(g, table);
    check_edge(g, e)?;
    Ok(count_edges(g, table, e))
}

/// Vertex partitions of every edge, in canonical edge order.
pub fn vertex_orientations(g: &Graph, table: &DistanceTable, par: Parallelism) -> Vec<OrientationCounts> {
    check_table(g, table);
    match par {
        Parallelism::Sequential => g.edges().iter().map(|&e| count_vertices(table, e)).collect(),
        Parallelism::Parallel => g.edges().par_iter().map(|&e| count_vertices(table, e)).collect(),
    }
}

/// Edge partitions of every edge, in canonical edge order.
pub fn edge_orientations(g: &Graph, table: &DistanceTable, par: Parallelism) -> Vec<EdgeOrientationCounts> {
    check_table(g, table);
    match par {
        Parallelism::Sequential => g.edges().iter().map(|&e| count_edges(g, table, e)).collect(),
        Parallelism::Parallel => g.edges().par_iter().map(|&e| count_edges(g, table, e)).collect(),
    }
}

fn checked_sum<S: Scalar>(terms: impl IntoIterator<Item = usize>) -> Result<S, IndexError> {
    terms.into_iter().try_fold(S::zero(), |acc, t| {
        S::from_count(t)
            .and_then(|t| acc.add_checked(&t))
            .ok_or(IndexError::Overflow)
    })
}

fn wiener_from_table<S: Scalar>(table: &DistanceTable) -> Result<S, IndexError> {
    let n = table.vertex_count();
    checked_sum((0..n).map(|u| table.row(u)[u + 1..].iter().map(|&d| d as usize).sum::<usize>()))
}

pub fn mostar_index<S: Scalar>(g: &Graph) -> Result<S, IndexError> {
    let table = DistanceTable::new(g)?;
    checked_sum(vertex_orientations(g, &table, Parallelism::Sequential).iter().map(|c| c.difference()))
}

pub fn edge_mostar_index<S: Scalar>(g: &Graph) -> Result<S, IndexError> {
    let table = DistanceTable::new(g)?;
    checked_sum(edge_orientations(g, &table, Parallelism::Sequential).iter().map(|c| c.difference()))
}

pub fn wiener_index<S: Scalar>(g: &Graph) -> Result<S, IndexError> {
    wiener_from_table(&DistanceTable::new(g)?)
}

/// All three indices from one distance table.
pub fn index_report<S: Scalar>(g: &Graph, include_per_edge: bool) -> Result<IndexReport<S>, IndexError> {
    index_report_with(g, include_per_edge, Parallelism::Sequential)
}

pub fn index_report_with<S: Scalar>(
    g: &Graph,
    include_per_edge: bool,
    par: Parallelism,
) -> Result<IndexReport<S>, IndexError> {
    let table = DistanceTable::with_parallelism(g, par)?;
    let vertex = vertex_orientations(g, &table, par);
    let edge = edge_orientations(g, &table, par);
    let mostar = checked_sum(vertex.iter().map(|c| c.difference()))?;
    let edge_mostar = checked_sum(edge.iter().map(|c| c.difference()))?;
    let wiener = wiener_from_table(&table)?;
    let per_edge = include_per_edge.then(|| {
        vertex
            .iter()
            .zip(&edge)
            .map(|(a, b)| EdgeContribution {
                edge: a.edge,
                mostar: a.difference(),
                edge_mostar: b.difference(),
            })
            .collect()
    });
    Ok(IndexReport { mostar, edge_mostar, wiener, per_edge })
}
