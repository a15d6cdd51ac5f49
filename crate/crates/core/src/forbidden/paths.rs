//! Systems of internally disjoint paths with prescribed exact lengths.

use crate::graph::{bits, Graph, VertexSet};
use crate::parity::ParityDistances;

use super::{Budget, ForbiddenError};

/// One path to route: from `from` to `to` with exactly `len` edges.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Segment {
    pub from: usize,
    pub to: usize,
    pub len: usize,
}

pub(crate) struct PathSystem<'a> {
    pub graph: &'a Graph,
    /// Parity distances of the whole graph; a path of length `l` from `u`
    /// to `v` needs a walk of that length, so these bound every subgraph.
    pub dist: &'a [ParityDistances],
    pub budget: &'a mut Budget,
}

impl PathSystem<'_> {
    /// Routes every segment in order with pairwise disjoint interiors that
    /// avoid `used`. Endpoints of all segments must already be in `used`.
    /// On success the paths (each listed from `from` to `to`) are returned.
    pub fn route(&mut self, segments: &[Segment], used: VertexSet) -> Result<Option<Vec<Vec<usize>>>, ForbiddenError> {
        if segments
            .iter()
            .any(|s| s.len == 0 || !self.dist[s.from].has_walk_of_length(s.to, s.len))
        {
            return Ok(None);
        }
        let mut paths = Vec::with_capacity(segments.len());
        if self.route_from(segments, used, &mut paths)? {
            Ok(Some(paths))
        } else {
            Ok(None)
        }
    }

    fn route_from(
        &mut self,
        segments: &[Segment],
        used: VertexSet,
        paths: &mut Vec<Vec<usize>>,
    ) -> Result<bool, ForbiddenError> {
        let Some(seg) = segments.get(paths.len()) else {
            return Ok(true);
        };
        let mut path = Vec::with_capacity(seg.len + 1);
        path.push(seg.from);
        self.extend(segments, *seg, seg.from, seg.len, used, &mut path, paths)
    }

    #[allow(clippy::too_many_arguments)]
    fn extend(
        &mut self,
        segments: &[Segment],
        seg: Segment,
        cur: usize,
        remaining: usize,
        used: VertexSet,
        path: &mut Vec<usize>,
        paths: &mut Vec<Vec<usize>>,
    ) -> Result<bool, ForbiddenError> {
        self.budget.tick()?;
        if remaining == 1 {
            if !self.graph.has_edge(cur, seg.to) {
                return Ok(false);
            }
            path.push(seg.to);
            paths.push(path.clone());
            path.pop();
            if self.route_from(segments, used, paths)? {
                return Ok(true);
            }
            paths.pop();
            return Ok(false);
        }
        let candidates = self.graph.neighbours_mask(cur) & !used;
        for w in bits(candidates) {
            if !self.dist[w].has_walk_of_length(seg.to, remaining - 1) {
                continue;
            }
            path.push(w);
            if self.extend(segments, seg, w, remaining - 1, used | 1 << w, path, paths)? {
                return Ok(true);
            }
            path.pop();
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::cycle;
    use crate::graph::mask_of;
    use crate::parity::all_parity_distances;

    #[test]
    fn routes_both_arcs_of_a_cycle() {
        let g = cycle(7).unwrap();
        let dist = all_parity_distances(&g);
        let mut budget = Budget::new(1_000);
        let mut ps = PathSystem { graph: &g, dist: &dist, budget: &mut budget };
        let segs = [Segment { from: 0, to: 3, len: 3 }, Segment { from: 3, to: 0, len: 4 }];
        let paths = ps.route(&segs, mask_of([0, 3])).unwrap().unwrap();
        assert_eq!(paths, vec![vec![0, 1, 2, 3], vec![3, 4, 5, 6, 0]]);
        // Both segments cannot take the short arc.
        let segs = [Segment { from: 0, to: 3, len: 3 }, Segment { from: 0, to: 3, len: 3 }];
        assert_eq!(ps.route(&segs, mask_of([0, 3])).unwrap(), None);
    }

    #[test]
    fn budget_is_reported() {
        let g = cycle(9).unwrap();
        let dist = all_parity_distances(&g);
        let mut budget = Budget::new(2);
        let mut ps = PathSystem { graph: &g, dist: &dist, budget: &mut budget };
        let segs = [Segment { from: 0, to: 4, len: 4 }];
        assert_eq!(ps.route(&segs, mask_of([0, 4])), Err(ForbiddenError::SearchBudgetExceeded(2)));
    }
}
