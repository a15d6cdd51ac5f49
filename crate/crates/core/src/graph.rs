//! Simple undirected graphs over `0..n` stored as adjacency bitsets.

use std::fmt;

use thiserror::Error;

/// Hard upper bound on the vertex count: one `u64` word per neighbourhood.
pub const MAX_VERTICES: usize = 64;

/// A vertex subset of a graph with at most [`MAX_VERTICES`] vertices.
pub type VertexSet = u64;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    IndexOutOfRange { vertex: usize, n: usize },

    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),

    #[error("{n} vertices exceeds the supported maximum of {max}")]
    TooLarge { n: usize, max: usize },
}

/// Immutable simple graph. Neighbourhoods are bitsets, so `adj[u] >> v & 1`
/// tells whether `{u, v}` is an edge.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse to one.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge {
                n,
                max: MAX_VERTICES,
            });
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
        })
    }

    /// Builds from raw neighbourhood masks. The caller guarantees symmetry,
    /// no loops and that all bits are below `adj.len()`.
    pub(crate) fn from_masks(adj: Vec<VertexSet>) -> Graph {
        debug_assert!(adj.len() <= MAX_VERTICES);
        let g = Graph { n: adj.len(), adj };
        debug_assert!(g.is_well_formed());
        g
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn neighbours_mask(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Minimum degree; `None` for the graph without vertices.
    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).max()
    }

    /// `Some(d)` when every vertex has degree `d`.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.min_degree()?;
        (self.max_degree() == Some(d)).then_some(d)
    }

    /// Mask with one bit per vertex.
    pub fn all_vertices(&self) -> VertexSet {
        full_mask(self.n)
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.adj[u] & !full_mask(u + 1)).map(move |v| (u, v)))
    }

    /// Returns a copy with the extra edge `{u, v}`.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::LoopEdge(u));
        }
        let mut g = self.clone();
        g.insert_edge(u, v);
        Ok(g)
    }

    /// The subgraph induced by `set`, relabelled in increasing order.
    pub fn induced(&self, set: VertexSet) -> Graph {
        let keep: Vec<usize> = bits(set & self.all_vertices()).collect();
        let masks = keep
            .iter()
            .map(|&u| {
                keep.iter()
                    .enumerate()
                    .filter(|&(_, &v)| self.has_edge(u, v))
                    .fold(0, |m, (j, _)| m | 1 << j)
            })
            .collect();
        Graph::from_masks(masks)
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut adj = vec![0; self.n];
        for (u, v) in self.edges() {
            adj[perm[u]] |= 1 << perm[v];
            adj[perm[v]] |= 1 << perm[u];
        }
        Graph::from_masks(adj)
    }

    /// Whether every edge of `self` is an edge of `other` (same vertex set).
    pub fn is_spanning_subgraph_of(&self, other: &Graph) -> bool {
        self.n == other.n && self.adj.iter().zip(&other.adj).all(|(a, b)| a & !b == 0)
    }

    /// A proper 2-colouring as a mask of the vertices coloured 1, or `None`
    /// when the graph has an odd cycle. Components are rooted at their
    /// smallest vertex, which gets colour 0.
    pub fn bipartition(&self) -> Option<VertexSet> {
        let mut seen: VertexSet = 0;
        let mut side: VertexSet = 0;
        for root in 0..self.n {
            if seen >> root & 1 == 1 {
                continue;
            }
            seen |= 1 << root;
            let mut stack = vec![root];
            while let Some(u) = stack.pop() {
                let u_side = side >> u & 1;
                for v in self.neighbours(u) {
                    if seen >> v & 1 == 0 {
                        seen |= 1 << v;
                        side |= (1 - u_side) << v;
                        stack.push(v);
                    } else if side >> v & 1 == u_side {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    pub fn is_independent(&self, set: VertexSet) -> bool {
        bits(set).all(|v| self.adj[v] & set == 0)
    }

    /// Checks the representation invariants: symmetry, no loops, no
    /// neighbours outside `0..n`.
    pub fn is_well_formed(&self) -> bool {
        let all = full_mask(self.n);
        (0..self.n).all(|u| {
            self.adj[u] & !all == 0
                && self.adj[u] >> u & 1 == 0
                && bits(self.adj[u]).all(|v| self.adj[v] >> u & 1 == 1)
        })
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::IndexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    pub(crate) fn masks(&self) -> &[VertexSet] {
        &self.adj
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Mask of the first `n` vertices.
#[inline]
pub fn full_mask(n: usize) -> VertexSet {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of a mask in increasing order.
#[inline]
pub fn bits(mut mask: VertexSet) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

pub fn mask_of(vertices: impl IntoIterator<Item = usize>) -> VertexSet {
    vertices.into_iter().fold(0, |m, v| m | 1 << v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_on_three_vertices() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!((0..3).map(|v| g.degree(v)).collect::<Vec<_>>(), vec![1, 2, 1]);
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn five_cycle_is_two_regular() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(g.regular_degree(), Some(2));
        assert_eq!(g.edge_count(), 5);
    }

    #[test]
    fn empty_graph() {
        let g = Graph::new(0, &[]).unwrap();
        assert_eq!(g.n(), 0);
        assert_eq!(g.min_degree(), None);
        assert_eq!(g.edges().count(), 0);
    }

    #[test]
    fn duplicates_and_reversed_pairs_collapse() {
        let g = Graph::new(3, &[(0, 1), (1, 0), (0, 1), (2, 1)]).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            Graph::new(3, &[(0, 3)]),
            Err(GraphError::IndexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::new(3, &[(1, 1)]), Err(GraphError::LoopEdge(1)));
        assert!(matches!(Graph::empty(65), Err(GraphError::TooLarge { .. })));
        assert!(Graph::empty(64).is_ok());
    }

    #[test]
    fn bipartition_detects_odd_cycles() {
        let c6 = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        assert_eq!(c6.bipartition(), Some(0b101010));
        let c5 = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(c5.bipartition(), None);
    }

    #[test]
    fn induced_subgraph_relabels() {
        let c5 = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let p = c5.induced(mask_of([0, 1, 2]));
        assert_eq!(p.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn full_word_graph() {
        let edges: Vec<_> = (0..64).map(|i| (i, (i + 1) % 64)).collect();
        let g = Graph::new(64, &edges).unwrap();
        assert!(g.is_well_formed());
        assert_eq!(g.regular_degree(), Some(2));
        assert_eq!(g.all_vertices(), u64::MAX);
    }
}
