use crate::graph::{bits, mask_of, Graph, VertexSet};
use crate::parity::all_parity_distances;

use super::paths::{PathSystem, Segment};
use super::{check_k, is_simple_path, Budget, ForbiddenError};

/// Vertices `a0..a5` spanning the 6-cycle `a0 a1 a2 a3 a4 a5` plus the
/// diagonal `{a1, a4}`, with no other edges among them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PhiWitness {
    pub a: [usize; 6],
}

impl PhiWitness {
    pub fn edges(&self) -> [(usize, usize); 7] {
        let a = self.a;
        [(a[0], a[1]), (a[1], a[2]), (a[2], a[3]), (a[3], a[4]), (a[4], a[5]), (a[5], a[0]), (a[1], a[4])]
    }

    /// Distinct vertices, the seven edges present and the other eight pairs
    /// absent.
    pub fn validate(&self, g: &Graph) -> bool {
        let set = mask_of(self.a.iter().copied().filter(|&v| v < g.n()));
        if set.count_ones() != 6 || self.a.iter().any(|&v| v >= g.n()) {
            return false;
        }
        let induced_edges: u32 = self.a.iter().map(|&v| (g.neighbours_mask(v) & set).count_ones()).sum();
        self.edges().iter().all(|&(u, v)| g.has_edge(u, v)) && induced_edges == 14
    }
}

/// First induced `Φ` in the order: `a1` ascending, then `a4, a0, a5, a2, a3`
/// ascending.
pub fn find_induced_phi(g: &Graph) -> Option<PhiWitness> {
    let nb = |v: usize| g.neighbours_mask(v);
    for a1 in 0..g.n() {
        for a4 in bits(nb(a1)) {
            // a0 ~ a1, a0 !~ a4.
            for a0 in bits(nb(a1) & !nb(a4) & !(1 << a4)) {
                // a5 ~ a4, a5 ~ a0, a5 !~ a1.
                for a5 in bits(nb(a4) & nb(a0) & !nb(a1) & !(1 << a1)) {
                    let used = mask_of([a0, a1, a4, a5]);
                    // a2 ~ a1, a2 !~ a0, a4, a5.
                    let c2 = nb(a1) & !nb(a4) & !nb(a0) & !nb(a5) & !used;
                    for a2 in bits(c2) {
                        // a3 ~ a4, a3 ~ a2, a3 !~ a0, a1, a5.
                        let c3 = nb(a4) & nb(a2) & !nb(a0) & !nb(a1) & !nb(a5) & !used & !(1 << a2);
                        if let Some(a3) = bits(c3).next() {
                            let w = PhiWitness { a: [a0, a1, a2, a3, a4, a5] };
                            debug_assert!(w.validate(g));
                            return Some(w);
                        }
                    }
                }
            }
        }
    }
    None
}

/// A `4k`-cycle with three long diagonals.
///
/// The cycle is listed as `a0 a1 a2 P a5 a4 a3 Q` where `P` runs from `a2`
/// to `a5` and `Q` from `a3` back to `a0`, both of length `2k - 2`; the
/// diagonals are `{a0, a5}`, `{a1, a4}` and `{a2, a3}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiPrimeWitness {
    pub cycle: Vec<usize>,
    pub diagonals: [(usize, usize); 3],
}

impl PhiPrimeWitness {
    /// The cycle is a cycle of `g` of length `4k` and each diagonal is an
    /// edge joining two cycle vertices at cycle distance `2k`.
    pub fn validate(&self, g: &Graph, k: usize) -> bool {
        let len = self.cycle.len();
        if len == 0 || len != 4 * k || !is_simple_path(g, &self.cycle) || !g.has_edge(self.cycle[len - 1], self.cycle[0]) {
            return false;
        }
        let pos = |v: usize| self.cycle.iter().position(|&c| c == v);
        self.diagonals.iter().all(|&(u, v)| match (pos(u), pos(v)) {
            (Some(i), Some(j)) => g.has_edge(u, v) && i.abs_diff(j) == 2 * k,
            _ => false,
        })
    }
}

/// Searches for `Φ'`: a (not necessarily induced) `Φ` on `a0..a5` together
/// with disjoint paths `a2 → a5` and `a3 → a0` of length `2k - 2` avoiding
/// the six vertices.
pub fn find_phi_prime(g: &Graph, k: usize, budget: &mut Budget) -> Result<Option<PhiPrimeWitness>, ForbiddenError> {
    check_k(k)?;
    let dist = all_parity_distances(g);
    let nb = |v: usize| g.neighbours_mask(v);
    let plen = 2 * k - 2;
    for a1 in 0..g.n() {
        for a4 in bits(nb(a1)) {
            for a0 in bits(nb(a1) & !(1 << a4)) {
                for a5 in bits(nb(a4) & nb(a0) & !mask_of([a1])) {
                    for a2 in bits(nb(a1) & !mask_of([a0, a4, a5])) {
                        let used: VertexSet = mask_of([a0, a1, a2, a4, a5]);
                        for a3 in bits(nb(a4) & nb(a2) & !used) {
                            budget.tick()?;
                            let mut ps = PathSystem { graph: g, dist: &dist, budget };
                            let segments = [
                                Segment { from: a2, to: a5, len: plen },
                                Segment { from: a3, to: a0, len: plen },
                            ];
                            if let Some(paths) = ps.route(&segments, used | 1 << a3)? {
                                let mut cycle = vec![a0, a1];
                                cycle.extend(&paths[0][..paths[0].len() - 1]);
                                cycle.extend([a5, a4]);
                                cycle.extend(&paths[1][..paths[1].len() - 1]);
                                let w = PhiPrimeWitness {
                                    cycle,
                                    diagonals: [(a0, a5), (a1, a4), (a2, a3)],
                                };
                                debug_assert!(w.validate(g, k));
                                return Ok(Some(w));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete_bipartite, cycle, mobius_ladder};

    pub(crate) fn phi_graph() -> Graph {
        Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 4)]).unwrap()
    }

    /// Every 6-subset under every labelling.
    fn naive_has_induced_phi(g: &Graph) -> bool {
        let n = g.n();
        let mut found = false;
        let mut perm = [0usize; 6];
        fn rec(g: &Graph, perm: &mut [usize; 6], depth: usize, used: u64, found: &mut bool) {
            if *found {
                return;
            }
            if depth == 6 {
                *found = PhiWitness { a: *perm }.validate(g);
                return;
            }
            for v in 0..g.n() {
                if used >> v & 1 == 0 {
                    perm[depth] = v;
                    rec(g, perm, depth + 1, used | 1 << v, found);
                }
            }
        }
        if n >= 6 {
            rec(g, &mut perm, 0, 0, &mut found);
        }
        found
    }

    #[test]
    fn phi_contains_itself() {
        let g = phi_graph();
        let w = find_induced_phi(&g).unwrap();
        assert!(w.validate(&g));
    }

    #[test]
    fn hexagons_without_exactly_one_diagonal() {
        assert_eq!(find_induced_phi(&cycle(6).unwrap()), None);
        let two = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3), (1, 4)]).unwrap();
        assert!(!naive_has_induced_phi(&two));
        assert_eq!(find_induced_phi(&two), None);
    }

    #[test]
    fn validate_rejects_non_induced_copies() {
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 4), (0, 2)]).unwrap();
        assert!(!PhiWitness { a: [0, 1, 2, 3, 4, 5] }.validate(&g));
        assert!(!PhiWitness { a: [0, 1, 2, 3, 4, 4] }.validate(&phi_graph()));
        assert!(!PhiWitness { a: [0, 1, 2, 3, 4, 9] }.validate(&phi_graph()));
    }

    #[test]
    fn detector_matches_naive_on_small_graphs() {
        // All graphs on 6 vertices containing the hexagon 0..5.
        let chords: Vec<(usize, usize)> = (0..6)
            .flat_map(|u| (u + 2..6).map(move |v| (u, v)))
            .filter(|&(u, v)| !(u == 0 && v == 5))
            .collect();
        for mask in 0u32..1 << chords.len() {
            let mut edges: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
            edges.extend(chords.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e));
            let g = Graph::new(6, &edges).unwrap();
            let fast = find_induced_phi(&g);
            assert_eq!(fast.is_some(), naive_has_induced_phi(&g), "{g:?}");
            if let Some(w) = fast {
                assert!(w.validate(&g));
            }
        }
    }

    #[test]
    fn mobius_ladder_contains_phi_prime() {
        let m8 = mobius_ladder(8).unwrap();
        let w = find_phi_prime(&m8, 2, &mut Budget::default()).unwrap().unwrap();
        assert!(w.validate(&m8, 2));
        assert_eq!(w.cycle.len(), 8);
        let m12 = mobius_ladder(12).unwrap();
        let w = find_phi_prime(&m12, 3, &mut Budget::default()).unwrap().unwrap();
        assert!(w.validate(&m12, 3));
    }

    #[test]
    fn phi_prime_absent() {
        assert_eq!(find_phi_prime(&cycle(9).unwrap(), 2, &mut Budget::default()), Ok(None));
        // Diagonals of a 4k-cycle join vertices of equal colour, so a
        // bipartite graph never contains one.
        assert_eq!(find_phi_prime(&complete_bipartite(4, 4).unwrap(), 2, &mut Budget::default()), Ok(None));
        assert_eq!(find_phi_prime(&cycle(9).unwrap(), 1, &mut Budget::default()), Err(ForbiddenError::BadParameter(1)));
    }

    #[test]
    fn phi_prime_budget() {
        let m8 = mobius_ladder(8).unwrap();
        assert_eq!(
            find_phi_prime(&m8, 2, &mut Budget::new(1)),
            Err(ForbiddenError::SearchBudgetExceeded(1))
        );
    }
}
