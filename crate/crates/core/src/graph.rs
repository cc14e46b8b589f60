//! Simple undirected graphs on dense vertex ids and unweighted shortest paths.

use std::collections::VecDeque;
use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    Empty,
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex {0} out of range for a graph on {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("relabeling is not a permutation of 0..{0}")]
    InvalidPermutation(usize),
}

/// Immutable simple undirected graph on vertices `0..n`.
///
/// The edge list is canonical: each edge is stored once as `(u, v)` with
/// `u < v`, and the list is strictly increasing in lexicographic order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Validates and normalizes an edge list.
    ///
    /// Pairs may be given in either orientation. Duplicates (in either
    /// orientation) are rejected, not merged.
    pub fn from_edge_list<I>(n: usize, pairs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut edges = Vec::new();
        for (a, b) in pairs {
            for v in [a, b] {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange(v, n));
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            edges.push((a.min(b), a.max(b)));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }
        Ok(Self { adjacency, edges })
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::from_edge_list(n, pairs)
    }

    /// Cycle `C_n` on `0 - 1 - ... - (n-1) - 0`, `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::Empty);
        }
        Self::from_edge_list(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// Path `P_n` on `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Result<Self, GraphError> {
        Self::from_edge_list(n, (1..n).map(|i| (i - 1, i)))
    }

    /// Star `K_{1,leaves}` centered at 0.
    pub fn star(leaves: usize) -> Result<Self, GraphError> {
        Self::from_edge_list(leaves + 1, (1..=leaves).map(|i| (0, i)))
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Position of `{u, v}` in the canonical edge list.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    /// Renames vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self, GraphError> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        if perm.len() != n {
            return Err(GraphError::InvalidPermutation(n));
        }
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(GraphError::InvalidPermutation(n));
            }
        }
        Self::from_edge_list(n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    /// Shortest-path hop counts from `source`.
    ///
    /// # Panics
    ///
    /// If `source` is not a vertex.
    pub fn bfs_distances(&self, source: usize) -> DistanceRow {
        let n = self.vertex_count();
        assert!(source < n, "source {source} out of range for {n} vertices");
        let mut dist = vec![Hops::Unreachable; n];
        let mut queue = VecDeque::with_capacity(n);
        dist[source] = Hops::Finite(0);
        queue.push_back((source, 0u32));
        while let Some((v, d)) = queue.pop_front() {
            for &w in &self.adjacency[v] {
                if dist[w] == Hops::Unreachable {
                    dist[w] = Hops::Finite(d + 1);
                    queue.push_back((w, d + 1));
                }
            }
        }
        DistanceRow { source, dist }
    }

    /// One BFS row per source, in source order.
    pub fn all_pairs_distances(&self) -> Vec<DistanceRow> {
        (0..self.vertex_count()).map(|s| self.bfs_distances(s)).collect()
    }

    /// Same table as [`Graph::all_pairs_distances`], with the sources spread
    /// over the rayon pool.
    pub fn all_pairs_distances_par(&self) -> Vec<DistanceRow> {
        (0..self.vertex_count())
            .into_par_iter()
            .map(|s| self.bfs_distances(s))
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_distances(0).dist.iter().all(|d| d.is_finite())
    }

    /// Number of connected components.
    pub fn component_count(&self) -> usize {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut count = 0;
        let mut stack = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            count += 1;
            seen[start] = true;
            stack.push(start);
            while let Some(v) = stack.pop() {
                for &w in &self.adjacency[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.vertex_count())
            .field("edges", &self.edges)
            .finish()
    }
}

/// A hop count, or the marker for a vertex in another component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Hops {
    Finite(u32),
    Unreachable,
}

impl Hops {
    pub fn is_finite(self) -> bool {
        matches!(self, Hops::Finite(_))
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Hops::Finite(d) => Some(d),
            Hops::Unreachable => None,
        }
    }
}

impl fmt::Display for Hops {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Hops::Finite(d) => write!(f, "{d}"),
            Hops::Unreachable => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceRow {
    pub source: usize,
    pub dist: Vec<Hops>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn finite(row: &DistanceRow) -> Vec<u32> {
        row.dist.iter().map(|d| d.finite().unwrap()).collect()
    }

    #[test]
    fn triangle_and_single_vertex() {
        let k3 = Graph::from_edge_list(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3.edge_count(), 3);
        assert_eq!(k3, Graph::complete(3).unwrap());
        let k1 = Graph::from_edge_list(1, []).unwrap();
        assert_eq!((k1.vertex_count(), k1.edge_count()), (1, 0));
        assert!(k1.is_connected());
    }

    #[test]
    fn rejects_invalid_input() {
        assert_eq!(
            Graph::from_edge_list(4, [(0, 1), (1, 1)]),
            Err(GraphError::SelfLoop(1))
        );
        assert_eq!(
            Graph::from_edge_list(3, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::from_edge_list(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange(3, 3))
        );
        assert_eq!(Graph::from_edge_list(0, []), Err(GraphError::Empty));
    }

    #[test]
    fn normalizes_orientation_and_order() {
        let g = Graph::from_edge_list(4, [(3, 2), (1, 0), (2, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (2, 3)]);
        assert_eq!(g.neighbors(0), &[1, 2]);
        assert_eq!(g.edge_index(3, 2), Some(2));
        assert!(!g.has_edge(1, 3));
    }

    #[test]
    fn bfs_examples() {
        let p4 = Graph::path(4).unwrap();
        assert_eq!(finite(&p4.bfs_distances(0)), [0, 1, 2, 3]);
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(finite(&k3.bfs_distances(2)), [1, 1, 0]);
        let c6 = Graph::cycle(6).unwrap();
        assert_eq!(finite(&c6.bfs_distances(0)), [0, 1, 2, 3, 2, 1]);
    }

    #[test]
    fn all_pairs_examples() {
        let k1 = Graph::complete(1).unwrap();
        assert_eq!(k1.all_pairs_distances()[0].dist, [Hops::Finite(0)]);
        let k2 = Graph::complete(2).unwrap();
        let rows: Vec<_> = k2.all_pairs_distances().iter().map(finite).collect();
        assert_eq!(rows, [vec![0, 1], vec![1, 0]]);
        let star = Graph::star(3).unwrap();
        let rows: Vec<_> = star.all_pairs_distances().iter().map(finite).collect();
        assert_eq!(rows[0], [0, 1, 1, 1]);
        assert_eq!(rows[1], [1, 0, 2, 2]);
        assert_eq!(rows[2], [1, 2, 0, 2]);
        assert_eq!(rows[3], [1, 2, 2, 0]);
    }

    #[test]
    fn parallel_table_matches_sequential() {
        let g = Graph::cycle(17).unwrap();
        assert_eq!(g.all_pairs_distances(), g.all_pairs_distances_par());
    }

    #[test]
    fn connectivity() {
        assert!(Graph::complete(3).unwrap().is_connected());
        let empty2 = Graph::from_edge_list(2, []).unwrap();
        assert!(!empty2.is_connected());
        assert_eq!(empty2.bfs_distances(0).dist[1], Hops::Unreachable);
        let two_triangles =
            Graph::from_edge_list(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(!two_triangles.is_connected());
        assert_eq!(two_triangles.component_count(), 2);
    }

    #[test]
    fn relabel_checks_permutation() {
        let p3 = Graph::path(3).unwrap();
        let r = p3.relabel(&[2, 0, 1]).unwrap();
        assert_eq!(r.edges(), &[(0, 1), (0, 2)]);
        assert_eq!(p3.relabel(&[0, 0, 1]), Err(GraphError::InvalidPermutation(3)));
        assert_eq!(p3.relabel(&[0, 1]), Err(GraphError::InvalidPermutation(3)));
    }

    #[test]
    fn unreachable_sorts_after_every_distance() {
        assert!(Hops::Finite(u32::MAX) < Hops::Unreachable);
        assert_eq!(Hops::Unreachable.to_string(), "inf");
    }
}
