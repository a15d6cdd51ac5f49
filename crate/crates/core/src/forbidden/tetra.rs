use crate::graph::{mask_of, Graph};
use crate::parity::{all_parity_distances, odd_girth, Dist};

use super::paths::{PathSystem, Segment};
use super::{check_k, is_simple_path, Budget, ForbiddenError};

/// An odd subdivision of `K4`: center `z`, branch vertices `a, b, c`,
/// spokes from `z` to each branch vertex and the outer cycle split into
/// the arcs `a→b`, `b→c`, `c→a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TetraWitness {
    pub center: usize,
    pub branches: [usize; 3],
    /// `spokes[i]` runs from the center to `branches[i]`.
    pub spokes: [Vec<usize>; 3],
    /// `arcs[i]` runs from `branches[i]` to `branches[(i + 1) % 3]`.
    pub arcs: [Vec<usize>; 3],
}

impl TetraWitness {
    /// `(p, q, r)`.
    pub fn spoke_lengths(&self) -> [usize; 3] {
        [0, 1, 2].map(|i| self.spokes[i].len().saturating_sub(1))
    }

    /// `(x, y, w)` for the arcs `a→b`, `b→c`, `c→a`.
    pub fn arc_lengths(&self) -> [usize; 3] {
        [0, 1, 2].map(|i| self.arcs[i].len().saturating_sub(1))
    }

    pub fn outer_length(&self) -> usize {
        self.arc_lengths().iter().sum()
    }

    /// Length of the cycle through the center and branches `i`, `i + 1`.
    pub fn center_cycle_length(&self, i: usize) -> usize {
        let s = self.spoke_lengths();
        s[i] + s[(i + 1) % 3] + self.arc_lengths()[i]
    }

    /// Vertices of the whole configuration: the four special vertices plus
    /// the interiors of the six paths.
    pub fn vertex_count(&self) -> usize {
        4 + self
            .spokes
            .iter()
            .chain(&self.arcs)
            .map(|p| p.len().saturating_sub(2))
            .sum::<usize>()
    }

    /// The even cycle left after deleting spoke `i` from the union of the
    /// two center cycles that share it, starting and ending at the branch.
    pub fn symmetric_difference_cycle(&self, i: usize) -> Vec<usize> {
        let (j, l) = ((i + 1) % 3, (i + 2) % 3);
        let mut cyc: Vec<usize> = self.arcs[i].clone();
        cyc.extend(self.spokes[j].iter().rev().skip(1));
        cyc.extend(self.spokes[l].iter().skip(1));
        cyc.extend(self.arcs[l].iter().skip(1));
        cyc
    }

    /// Structural and arithmetic checks: genuine disjoint paths of `g`,
    /// all three center cycles of length `2k + 1`, two spokes of length at
    /// least two, an odd outer cycle, the vertex count identity and the
    /// lengths of the three symmetric-difference cycles.
    pub fn validate(&self, g: &Graph, k: usize) -> bool {
        let z = self.center;
        let [a, b, c] = self.branches;
        let ends_ok = (0..3).all(|i| {
            let s = &self.spokes[i];
            let arc = &self.arcs[i];
            s.first() == Some(&z)
                && s.last() == Some(&self.branches[i])
                && arc.first() == Some(&self.branches[i])
                && arc.last() == Some(&self.branches[(i + 1) % 3])
        });
        if !ends_ok
            || self.spokes.iter().chain(&self.arcs).any(|p| p.len() < 2 || !is_simple_path(g, p))
        {
            return false;
        }
        let specials = mask_of([z, a, b, c]);
        if specials.count_ones() != 4 {
            return false;
        }
        let mut seen = specials;
        for p in self.spokes.iter().chain(&self.arcs) {
            for &v in &p[1..p.len() - 1] {
                if seen >> v & 1 == 1 {
                    return false;
                }
                seen |= 1 << v;
            }
        }
        let cycle_len = 2 * k + 1;
        if (0..3).any(|i| self.center_cycle_length(i) != cycle_len) {
            return false;
        }
        if self.spoke_lengths().iter().filter(|&&l| l >= 2).count() < 2 {
            return false;
        }
        let outer = self.outer_length();
        if outer.is_multiple_of(2) {
            return false;
        }
        // Summing the four cycles counts the special vertices three times
        // and everything else twice.
        let vertices = self.vertex_count();
        if 2 * vertices + 4 != 3 * cycle_len + outer || (outer >= cycle_len && vertices < 4 * k) {
            return false;
        }
        (0..3).all(|i| {
            let cyc = self.symmetric_difference_cycle(i);
            let len = cyc.len() - 1;
            cyc.first() == cyc.last()
                && is_simple_path(g, &cyc[..len])
                && g.has_edge(cyc[len - 1], cyc[0])
                && (4 * k + 2).checked_sub(2 * self.spoke_lengths()[i]) == Some(len)
        })
    }
}

/// Spoke length triples `(p, q, r)` admitting positive arc lengths, two
/// spokes of length at least two, and (when `short_outer_excluded`) an
/// outer cycle of length at least `2k + 1`. Sorted by sum, then
/// lexicographically.
pub(crate) fn spoke_triples(k: usize, short_outer_excluded: bool) -> Vec<[usize; 3]> {
    let c = 2 * k + 1;
    let mut out = Vec::new();
    for p in 1..c {
        for q in 1..c {
            for r in 1..c {
                if p + q >= c || q + r >= c || r + p >= c {
                    continue;
                }
                let long_spokes = [p, q, r].iter().filter(|&&l| l >= 2).count() >= 2;
                let outer = 3 * c - 2 * (p + q + r);
                if long_spokes && (!short_outer_excluded || outer >= c) {
                    out.push([p, q, r]);
                }
            }
        }
    }
    out.sort_by_key(|t| (t.iter().sum::<usize>(), *t));
    out
}

/// Searches for a `(2k+1)`-tetrahedron as a (not necessarily induced)
/// subgraph. Centers ascend, then branch triples `a < b < c`
/// lexicographically, then spoke triples by sum; the first hit is returned.
pub fn find_tetrahedron(g: &Graph, k: usize, budget: &mut Budget) -> Result<Option<TetraWitness>, ForbiddenError> {
    check_k(k)?;
    let cycle_len = 2 * k + 1;
    let high_girth = odd_girth(g) >= Dist::Finite(cycle_len);
    let triples = spoke_triples(k, high_girth);
    let dist = all_parity_distances(g);
    let hubs: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) >= 3).collect();

    for &z in &hubs {
        for (ia, &a) in hubs.iter().enumerate() {
            for (ib, &b) in hubs.iter().enumerate().skip(ia + 1) {
                for &c in hubs.iter().skip(ib + 1) {
                    if z == a || z == b || z == c {
                        continue;
                    }
                    let used = mask_of([z, a, b, c]);
                    for &[p, q, r] in &triples {
                        budget.tick()?;
                        let (x, y, w) = (cycle_len - p - q, cycle_len - q - r, cycle_len - r - p);
                        let segments = [
                            Segment { from: z, to: a, len: p },
                            Segment { from: z, to: b, len: q },
                            Segment { from: z, to: c, len: r },
                            Segment { from: a, to: b, len: x },
                            Segment { from: b, to: c, len: y },
                            Segment { from: c, to: a, len: w },
                        ];
                        let mut ps = PathSystem { graph: g, dist: &dist, budget };
                        if let Some(mut paths) = ps.route(&segments, used)? {
                            let arcs = [paths.remove(3), paths.remove(3), paths.remove(3)];
                            let spokes = [paths.remove(0), paths.remove(0), paths.remove(0)];
                            let t = TetraWitness { center: z, branches: [a, b, c], spokes, arcs };
                            debug_assert!(t.validate(g, k));
                            return Ok(Some(t));
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}
