//! Exhaustive generation of small graphs under odd-girth and minimum-degree
//! constraints.

use std::collections::HashSet;

use crate::graph::{Graph, MAX_VERTICES};
use crate::iso::canonical_form;
use crate::parity::parity_bfs_bounded;

use super::HarnessError;

/// Default largest `n` accepted by [`enumerate_graphs`].
pub const DEFAULT_MAX_N: usize = 10;
/// Largest `n` for which isomorphic copies can be removed.
pub const DEDUPE_MAX_N: usize = 8;
/// Environment variable overriding [`DEFAULT_MAX_N`].
pub const MAX_N_VAR: &str = "ODDGIRTH_MAX_N";

/// The vertex bound for enumeration: `ODDGIRTH_MAX_N` if it holds a number
/// (capped at the graph size limit), else [`DEFAULT_MAX_N`].
pub fn max_enumeration_n() -> usize {
    std::env::var(MAX_N_VAR)
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .map_or(DEFAULT_MAX_N, |n| n.min(MAX_VERTICES))
}

/// Which graphs on `n` vertices to generate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationConstraints {
    pub n: usize,
    /// Every odd cycle must have at least this length.
    pub min_odd_girth: usize,
    /// `Some((a, b))` demands `b * delta > a` (minimum degree strictly above
    /// `a / b`).
    pub min_degree_above: Option<(usize, usize)>,
    /// Keep one graph per isomorphism class (only for `n <= 8`).
    pub dedupe: bool,
}

impl EnumerationConstraints {
    /// Odd girth at least `2k + 1` and `4k * delta > 3n`, up to isomorphism
    /// where that is supported.
    pub fn theorem(n: usize, k: usize) -> EnumerationConstraints {
        EnumerationConstraints {
            n,
            min_odd_girth: 2 * k + 1,
            min_degree_above: Some((3 * n, 4 * k)),
            dedupe: n <= DEDUPE_MAX_N,
        }
    }

    /// Smallest admissible minimum degree.
    pub fn min_degree(&self) -> usize {
        match self.min_degree_above {
            None => 0,
            Some((_, 0)) => usize::MAX,
            Some((a, b)) => a / b + 1,
        }
    }

    /// Whether `g` satisfies the constraints (ignoring `dedupe`).
    pub fn admits(&self, g: &Graph) -> bool {
        g.n() == self.n
            && (self.min_degree_above.is_none() || g.min_degree().is_some_and(|d| d >= self.min_degree()))
            && crate::parity::odd_girth(g) >= crate::parity::Dist::Finite(self.min_odd_girth)
    }

    /// Longest even walk whose closing edge would create a forbidden odd
    /// cycle; `None` when no odd cycle is forbidden.
    fn even_walk_bound(&self) -> Option<usize> {
        let g = self.min_odd_girth;
        if g <= 3 {
            return None;
        }
        // Longest forbidden odd length.
        let longest = if g.is_multiple_of(2) { g - 1 } else { g - 2 };
        Some(longest - 1)
    }
}

/// How many graphs the search completed and how many it reported.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct EnumerationStats {
    pub labelled: u64,
    pub yielded: u64,
}

struct Search<'a, F> {
    c: &'a EnumerationConstraints,
    pairs: Vec<(usize, usize)>,
    g: Graph,
    degree: Vec<usize>,
    undecided: Vec<usize>,
    min_degree: usize,
    walk_bound: Option<usize>,
    seen: HashSet<crate::iso::CanonicalForm>,
    stats: EnumerationStats,
    visit: F,
}

impl<F: FnMut(&Graph)> Search<'_, F> {
    fn feasible(&self, v: usize) -> bool {
        self.degree[v] + self.undecided[v] >= self.min_degree
    }

    fn joins_short_odd_cycle(&self, u: usize, v: usize) -> bool {
        match self.walk_bound {
            None => false,
            Some(b) => parity_bfs_bounded(&self.g, u, b).even[v].at_most(b),
        }
    }

    fn run(&mut self, i: usize) {
        let Some(&(u, v)) = self.pairs.get(i) else {
            self.emit();
            return;
        };
        self.undecided[u] -= 1;
        self.undecided[v] -= 1;
        if !self.joins_short_odd_cycle(u, v) {
            self.g.insert_edge(u, v);
            self.degree[u] += 1;
            self.degree[v] += 1;
            self.run(i + 1);
            self.g.remove_edge(u, v);
            self.degree[u] -= 1;
            self.degree[v] -= 1;
        }
        if self.feasible(u) && self.feasible(v) {
            self.run(i + 1);
        }
        self.undecided[u] += 1;
        self.undecided[v] += 1;
    }

    fn emit(&mut self) {
        self.stats.labelled += 1;
        if self.c.dedupe {
            let form = canonical_form(&self.g).expect("dedupe bound is below the canonical-form bound");
            if !self.seen.insert(form) {
                return;
            }
        }
        self.stats.yielded += 1;
        (self.visit)(&self.g);
    }
}

/// Calls `visit` on every graph on `c.n` vertices meeting `c`, in a fixed
/// order. With `dedupe`, only the first member of each isomorphism class
/// is reported.
///
/// Pairs `(u, v)` are decided in lexicographic order, edge before
/// non-edge. A branch is cut when a vertex can no longer reach the required
/// degree or when the new edge would close a short odd cycle.
pub fn enumerate_graphs(
    c: &EnumerationConstraints,
    visit: impl FnMut(&Graph),
) -> Result<EnumerationStats, HarnessError> {
    let max = max_enumeration_n();
    if c.n > max {
        return Err(HarnessError::TooLarge { n: c.n, max });
    }
    if c.dedupe && c.n > DEDUPE_MAX_N {
        return Err(HarnessError::TooLarge { n: c.n, max: DEDUPE_MAX_N });
    }
    let n = c.n;
    let mut search = Search {
        c,
        pairs: (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect(),
        g: Graph::empty(n)?,
        degree: vec![0; n],
        undecided: vec![n.saturating_sub(1); n],
        min_degree: c.min_degree(),
        walk_bound: c.even_walk_bound(),
        seen: HashSet::new(),
        stats: EnumerationStats::default(),
        visit,
    };
    // The empty graph has no minimum degree to compare.
    let degree_ok = n > 0 || c.min_degree_above.is_none();
    if degree_ok && (0..n).all(|v| search.feasible(v)) {
        search.run(0);
    }
    Ok(search.stats)
}

/// [`enumerate_graphs`] into a vector.
pub fn collect_graphs(c: &EnumerationConstraints) -> Result<Vec<Graph>, HarnessError> {
    let mut out = Vec::new();
    enumerate_graphs(c, |g| out.push(g.clone()))?;
    Ok(out)
}
