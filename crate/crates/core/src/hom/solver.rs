//! Backtracking search for vertex maps `G -> H` under three notions of
//! compatibility.
//!
//! Every mode preserves walks, so a vertex pair of `G` joined by a walk of
//! length `L` must map to a pair of `H` joined by a walk of length `L`.
//! Assigning a vertex therefore narrows the domain of every other vertex to
//! the targets reachable by walks of the right lengths.

use crate::budget::{Budget, BudgetExceeded};
use crate::graph::{bits, full_mask, Graph, VertexSet};
use crate::parity::all_parity_distances;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Mode {
    /// Edges map to edges.
    Hom,
    /// Edges map to edges and distinct vertices to distinct vertices.
    Injective,
    /// Adjacency is preserved and reflected, and every target vertex is hit.
    ExactSurjective,
}

pub(crate) struct Solver<'a> {
    g: &'a Graph,
    h: &'a Graph,
    mode: Mode,
    order: Vec<usize>,
    /// `lengths[u][w]`: shortest even and odd walk lengths in `g`.
    lengths: Vec<Vec<[Option<usize>; 2]>>,
    /// `within[t][l]`: targets reachable from `t` by a walk of length `l`.
    within: Vec<Vec<VertexSet>>,
}

impl<'a> Solver<'a> {
    pub fn new(g: &'a Graph, h: &'a Graph, mode: Mode) -> Solver<'a> {
        let gd = all_parity_distances(g);
        let lengths: Vec<Vec<[Option<usize>; 2]>> = gd
            .iter()
            .map(|d| (0..g.n()).map(|w| [d.even[w].finite(), d.odd[w].finite()]).collect())
            .collect();
        let lmax = lengths.iter().flatten().flatten().flatten().copied().max().unwrap_or(0);
        let hd = all_parity_distances(h);
        let within = hd
            .iter()
            .map(|d| {
                (0..=lmax)
                    .map(|l| bits(h.all_vertices()).filter(|&t| d.has_walk_of_length(t, l)).fold(0, |m, t| m | 1 << t))
                    .collect()
            })
            .collect();
        Solver { g, h, mode, order: search_order(g), lengths, within }
    }

    /// Targets `w` may take once `u` is mapped to `t`.
    fn allowed(&self, u: usize, t: usize, w: usize) -> VertexSet {
        let mut mask = self.h.all_vertices();
        for l in self.lengths[u][w].into_iter().flatten() {
            mask &= self.within[t][l];
        }
        match self.mode {
            Mode::Hom => mask,
            Mode::Injective => mask & !(1 << t),
            Mode::ExactSurjective => {
                if self.g.has_edge(u, w) {
                    mask & self.h.neighbours_mask(t)
                } else {
                    mask & !self.h.neighbours_mask(t)
                }
            }
        }
    }

    /// First solution in search order, or `None` when there is none.
    pub fn solve(&self, budget: &mut Budget) -> Result<Option<Vec<usize>>, BudgetExceeded> {
        let n = self.g.n();
        if n == 0 {
            let ok = self.mode != Mode::ExactSurjective || self.h.n() == 0;
            return Ok(ok.then(Vec::new));
        }
        if self.mode == Mode::Injective && n > self.h.n() {
            return Ok(None);
        }
        // A vertex on closed walks of length `l` needs a target with the same.
        let domains: Vec<VertexSet> = (0..n)
            .map(|u| {
                self.lengths[u][u]
                    .into_iter()
                    .flatten()
                    .fold(self.h.all_vertices(), |m, l| m & self.closed_walk_targets(l))
            })
            .collect();
        let mut map = vec![usize::MAX; n];
        Ok(self.extend(0, &domains, 0, &mut map, budget)?.then_some(map))
    }

    fn closed_walk_targets(&self, l: usize) -> VertexSet {
        bits(self.h.all_vertices()).filter(|&t| self.within[t][l] >> t & 1 == 1).fold(0, |m, t| m | 1 << t)
    }

    fn extend(
        &self,
        depth: usize,
        domains: &[VertexSet],
        hit: VertexSet,
        map: &mut [usize],
        budget: &mut Budget,
    ) -> Result<bool, BudgetExceeded> {
        if depth == self.order.len() {
            return Ok(self.mode != Mode::ExactSurjective || hit == full_mask(self.h.n()));
        }
        if self.mode == Mode::ExactSurjective {
            let missing = full_mask(self.h.n()) & !hit;
            let reachable = self.order[depth..].iter().fold(0, |m, &w| m | domains[w]);
            if missing & !reachable != 0 || (missing.count_ones() as usize) > self.order.len() - depth {
                return Ok(false);
            }
        }
        let u = self.order[depth];
        'targets: for t in bits(domains[u]) {
            budget.tick()?;
            let mut next = domains.to_vec();
            for &w in &self.order[depth + 1..] {
                next[w] &= self.allowed(u, t, w);
                if next[w] == 0 {
                    continue 'targets;
                }
            }
            map[u] = t;
            if self.extend(depth + 1, &next, hit | 1 << t, map, budget)? {
                return Ok(true);
            }
        }
        map[u] = usize::MAX;
        Ok(false)
    }
}

/// Breadth-first order, each component started from its highest-degree
/// vertex (smallest index on ties); neighbours are queued in increasing
/// order.
pub(crate) fn search_order(g: &Graph) -> Vec<usize> {
    let mut order = Vec::with_capacity(g.n());
    let mut seen: VertexSet = 0;
    while order.len() < g.n() {
        let root = (0..g.n())
            .filter(|&v| seen >> v & 1 == 0)
            .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))
            .expect("an unvisited vertex remains");
        seen |= 1 << root;
        let start = order.len();
        order.push(root);
        let mut head = start;
        while head < order.len() {
            let u = order[head];
            head += 1;
            for v in bits(g.neighbours_mask(u) & !seen) {
                seen |= 1 << v;
                order.push(v);
            }
        }
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, mobius_ladder};

    #[test]
    fn order_is_breadth_first_from_a_hub() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        assert_eq!(search_order(&g), vec![1, 0, 2, 3, 4]);
        let two = Graph::new(4, &[(2, 3)]).unwrap();
        assert_eq!(search_order(&two), vec![2, 3, 0, 1]);
    }

    #[test]
    fn modes() {
        let c5 = cycle(5).unwrap();
        let c10 = cycle(10).unwrap();
        let s = Solver::new(&c10, &c5, Mode::Hom);
        assert!(s.solve(&mut Budget::unlimited()).unwrap().is_some());
        let s = Solver::new(&c10, &c5, Mode::Injective);
        assert_eq!(s.solve(&mut Budget::unlimited()).unwrap(), None);
        let m8 = mobius_ladder(8).unwrap();
        let s = Solver::new(&m8, &m8, Mode::ExactSurjective);
        assert!(s.solve(&mut Budget::unlimited()).unwrap().is_some());
        let s = Solver::new(&m8, &c5, Mode::Hom);
        assert_eq!(s.solve(&mut Budget::unlimited()).unwrap(), None);
    }
}
