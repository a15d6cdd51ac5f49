//! Shortest walks of prescribed parity, odd girth and short-odd-cycle tests.
//!
//! The search runs over `(vertex, parity)` states one layer at a time, with
//! frontiers kept as bitsets. A vertex first reached at layer `d` with
//! parity `d mod 2` records as parent the smallest-index vertex of the
//! previous frontier adjacent to it, which makes witness extraction
//! deterministic.

use std::fmt;

use thiserror::Error;

use crate::graph::{bits, Graph, GraphError, VertexSet};

/// A walk length or the explicit absence of any walk.
///
/// `Finite` sorts before `Infinite`, so `min` behaves as on extended
/// naturals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Dist {
    Finite(usize),
    Infinite,
}

impl Dist {
    pub fn finite(self) -> Option<usize> {
        match self {
            Dist::Finite(d) => Some(d),
            Dist::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Dist::Finite(_))
    }

    /// `self <= bound` with `Infinite` above every bound.
    pub fn at_most(self, bound: usize) -> bool {
        matches!(self, Dist::Finite(d) if d <= bound)
    }
}

impl fmt::Display for Dist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dist::Finite(d) => write!(f, "{d}"),
            Dist::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ParityError {
    #[error(transparent)]
    Graph(#[from] GraphError),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
}

const NO_PARENT: usize = usize::MAX;

/// Shortest even and odd walk lengths from one source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityDistances {
    pub source: usize,
    pub even: Vec<Dist>,
    pub odd: Vec<Dist>,
    /// `parent[p][v]`: predecessor of state `(v, p)` on a shortest walk.
    parent: [Vec<usize>; 2],
}

impl ParityDistances {
    /// Shortest walk of the given parity (`0` even, `1` odd).
    pub fn get(&self, v: usize, parity: usize) -> Dist {
        if parity.is_multiple_of(2) {
            self.even[v]
        } else {
            self.odd[v]
        }
    }

    /// Whether a walk of length exactly `len` from the source to `v` exists.
    /// Walks can be padded by going back and forth along an edge, so this is
    /// `shortest walk of the same parity <= len`.
    pub fn has_walk_of_length(&self, v: usize, len: usize) -> bool {
        self.get(v, len % 2).at_most(len)
    }

    /// A shortest walk of the given parity from the source to `v`, listed
    /// from the source.
    pub fn walk_to(&self, v: usize, parity: usize) -> Option<Vec<usize>> {
        let len = self.get(v, parity).finite()?;
        let mut walk = Vec::with_capacity(len + 1);
        let (mut cur, mut p) = (v, parity % 2);
        walk.push(cur);
        for _ in 0..len {
            cur = self.parent[p][cur];
            p ^= 1;
            walk.push(cur);
        }
        debug_assert_eq!(cur, self.source);
        walk.reverse();
        Some(walk)
    }
}

pub fn parity_bfs(g: &Graph, source: usize) -> Result<ParityDistances, GraphError> {
    g.check_vertex(source)?;
    Ok(parity_bfs_bounded(g, source, usize::MAX))
}

/// Layered search stopping after `max_len` layers; lengths beyond the bound
/// are reported as `Infinite`.
pub(crate) fn parity_bfs_bounded(g: &Graph, source: usize, max_len: usize) -> ParityDistances {
    let n = g.n();
    let mut dist = [vec![Dist::Infinite; n], vec![Dist::Infinite; n]];
    let mut parent = [vec![NO_PARENT; n], vec![NO_PARENT; n]];
    let mut seen: [VertexSet; 2] = [1 << source, 0];
    dist[0][source] = Dist::Finite(0);
    let mut frontier: VertexSet = 1 << source;
    let mut layer = 0;
    while frontier != 0 && layer < max_len {
        layer += 1;
        let p = layer % 2;
        let reach = bits(frontier).fold(0, |m, u| m | g.neighbours_mask(u));
        let next = reach & !seen[p];
        for v in bits(next) {
            dist[p][v] = Dist::Finite(layer);
            parent[p][v] = (g.neighbours_mask(v) & frontier).trailing_zeros() as usize;
        }
        seen[p] |= next;
        frontier = next;
    }
    let [even, odd] = dist;
    ParityDistances {
        source,
        even,
        odd,
        parent,
    }
}

/// Parity distances from every source.
pub fn all_parity_distances(g: &Graph) -> Vec<ParityDistances> {
    (0..g.n()).map(|s| parity_bfs_bounded(g, s, usize::MAX)).collect()
}

/// Length of a shortest odd cycle; `Infinite` iff `g` is bipartite.
///
/// A shortest odd closed walk is always an odd cycle, so this is the
/// minimum over sources of the shortest odd walk back to the source.
pub fn odd_girth(g: &Graph) -> Dist {
    let mut best = Dist::Infinite;
    for s in 0..g.n() {
        let bound = best.finite().unwrap_or(usize::MAX);
        best = best.min(parity_bfs_bounded(g, s, bound).odd[s]);
    }
    best
}

/// An odd cycle given by its cyclic vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddCycleWitness {
    pub vertices: Vec<usize>,
}

impl OddCycleWitness {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Odd length, distinct vertices, consecutive pairs (cyclically) adjacent.
    pub fn validate(&self, g: &Graph) -> bool {
        let vs = &self.vertices;
        let distinct = {
            let mut sorted = vs.clone();
            sorted.sort_unstable();
            sorted.dedup();
            sorted.len() == vs.len()
        };
        vs.len() % 2 == 1
            && distinct
            && (0..vs.len()).all(|i| g.has_edge(vs[i], vs[(i + 1) % vs.len()]))
    }
}

/// A shortest odd cycle, rooted at the smallest vertex lying on one.
pub fn shortest_odd_cycle(g: &Graph) -> Option<OddCycleWitness> {
    let girth = odd_girth(g).finite()?;
    (0..g.n()).find_map(|s| {
        let pd = parity_bfs_bounded(g, s, girth);
        if pd.odd[s] != Dist::Finite(girth) {
            return None;
        }
        let mut walk = pd.walk_to(s, 1)?;
        walk.pop();
        let w = OddCycleWitness { vertices: walk };
        debug_assert!(w.validate(g));
        Some(w)
    })
}

/// Whether joining `u` and `v` closes an odd cycle of length at most
/// `2k - 1`, assuming `g` itself has odd girth at least `2k + 1`.
///
/// Every such cycle uses the new edge, so this asks for an even `u`–`v`
/// path of length at most `2k - 2`. Walks suffice: an even walk that short
/// cannot contain an odd closed sub-walk (it would hold an odd cycle
/// shorter than `2k + 1`), so removing closed sub-walks leaves an even path
/// no longer than the walk.
pub(crate) fn joins_short_odd_cycle(g: &Graph, u: usize, v: usize, k: usize) -> bool {
    let bound = 2 * k - 2;
    parity_bfs_bounded(g, u, bound).even[v].at_most(bound)
}

/// Checked form of the short-odd-cycle test: rejects loops, existing edges
/// and graphs whose odd girth is below `2k + 1`.
pub fn creates_short_odd_cycle(g: &Graph, u: usize, v: usize, k: usize) -> Result<bool, ParityError> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if k < 1 {
        return Err(ParityError::PreconditionViolated("k must be at least 1".into()));
    }
    if u == v {
        return Err(ParityError::PreconditionViolated(format!("loop at vertex {u}")));
    }
    if g.has_edge(u, v) {
        return Err(ParityError::PreconditionViolated(format!("{{{u}, {v}}} is already an edge")));
    }
    let girth = odd_girth(g);
    if girth < Dist::Finite(2 * k + 1) {
        return Err(ParityError::PreconditionViolated(format!(
            "odd girth {girth} is below {}",
            2 * k + 1
        )));
    }
    Ok(joins_short_odd_cycle(g, u, v, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, f_family, mobius_ladder};

    use Dist::{Finite, Infinite};

    #[test]
    fn five_cycle_walks() {
        // Hand enumeration on C5 from 0: 0-1 is odd (1); the shortest even
        // walk to 1 goes the long way round, 0-4-3-2-1 (4).
        let pd = parity_bfs(&cycle(5).unwrap(), 0).unwrap();
        assert_eq!(pd.odd[1], Finite(1));
        assert_eq!(pd.even[1], Finite(4));
        assert_eq!(pd.even[0], Finite(0));
        assert_eq!(pd.odd[0], Finite(5));
        assert_eq!(pd.walk_to(1, 0).unwrap(), vec![0, 4, 3, 2, 1]);
    }

    #[test]
    fn bipartite_parity_separation() {
        let pd = parity_bfs(&cycle(6).unwrap(), 0).unwrap();
        assert_eq!(pd.even[2], Finite(2));
        assert_eq!(pd.odd[2], Infinite);
        assert_eq!(pd.odd[1], Finite(1));
        assert_eq!(pd.even[1], Infinite);
        assert_eq!(pd.odd[0], Infinite);
    }

    #[test]
    fn single_edge() {
        let pd = parity_bfs(&complete(2).unwrap(), 0).unwrap();
        assert_eq!((pd.even[0], pd.odd[0]), (Finite(0), Infinite));
        assert_eq!((pd.odd[1], pd.even[1]), (Finite(1), Infinite));
        assert!(parity_bfs(&complete(2).unwrap(), 2).is_err());
    }

    #[test]
    fn odd_girths() {
        assert_eq!(odd_girth(&complete(4).unwrap()), Finite(3));
        assert_eq!(odd_girth(&mobius_ladder(8).unwrap()), Finite(5));
        assert_eq!(odd_girth(&cycle(6).unwrap()), Infinite);
        assert_eq!(odd_girth(&f_family(4, 2).unwrap()), Finite(5));
        assert_eq!(odd_girth(&Graph::empty(0).unwrap()), Infinite);
    }

    #[test]
    fn shortest_cycles() {
        let c7 = shortest_odd_cycle(&cycle(7).unwrap()).unwrap();
        assert_eq!(c7.len(), 7);
        assert!(c7.validate(&cycle(7).unwrap()));
        assert_eq!(shortest_odd_cycle(&cycle(6).unwrap()), None);
        let m8 = mobius_ladder(8).unwrap();
        let w = shortest_odd_cycle(&m8).unwrap();
        assert_eq!(w.len(), 5);
        assert!(w.validate(&m8));
    }

    #[test]
    fn short_odd_cycle_creation() {
        let c5 = cycle(5).unwrap();
        let c7 = cycle(7).unwrap();
        assert_eq!(creates_short_odd_cycle(&c5, 0, 2, 2), Ok(true));
        // Arcs of C7 between 0 and 3 have lengths 3 and 4: the even one is 4 > 2.
        assert_eq!(creates_short_odd_cycle(&c7, 0, 3, 2), Ok(false));
        assert_eq!(creates_short_odd_cycle(&c7, 0, 2, 3), Ok(true));
        assert!(matches!(creates_short_odd_cycle(&c7, 0, 1, 2), Err(ParityError::PreconditionViolated(_))));
        assert!(matches!(creates_short_odd_cycle(&c7, 0, 0, 2), Err(ParityError::PreconditionViolated(_))));
        assert!(matches!(creates_short_odd_cycle(&c5, 0, 2, 3), Err(ParityError::PreconditionViolated(_))));
        assert!(matches!(creates_short_odd_cycle(&c5, 0, 9, 2), Err(ParityError::Graph(_))));
    }

    #[test]
    fn distance_invariants_on_petersen_like_graph() {
        let g = f_family(4, 3).unwrap();
        for s in 0..g.n() {
            let pd = parity_bfs(&g, s).unwrap();
            let plain = parity_bfs_bounded(&g, s, usize::MAX);
            assert_eq!(pd, plain);
            for v in 0..g.n() {
                if let (Finite(e), Finite(o)) = (pd.even[v], pd.odd[v]) {
                    assert_eq!(e.abs_diff(o) % 2, 1);
                }
                for p in 0..2 {
                    if let Some(w) = pd.walk_to(v, p) {
                        assert_eq!(w.len() - 1, pd.get(v, p).finite().unwrap());
                        assert!(w.windows(2).all(|e| g.has_edge(e[0], e[1])));
                    }
                }
            }
        }
    }
}
