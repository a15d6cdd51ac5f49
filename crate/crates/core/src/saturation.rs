//! Edge-maximal supergraphs of prescribed odd girth.
//!
//! A graph of odd girth at least `2k + 1` is edge-maximal (for `k`) when
//! joining any non-adjacent pair closes an odd cycle of length at most
//! `2k - 1`.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_xoshiro::Xoshiro256PlusPlus;
use thiserror::Error;

use crate::graph::Graph;
use crate::parity::{joins_short_odd_cycle, odd_girth, Dist};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum SaturationError {
    #[error("odd girth {found} is below the required {required}")]
    GirthTooSmall { found: Dist, required: usize },

    #[error("k must be at least 2, got {0}")]
    BadParameter(usize),
}

/// Order in which candidate pairs are offered to the saturation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SaturationOrder {
    /// Pairs `(u, v)`, `u < v`, in lexicographic order.
    #[default]
    Lexicographic,
    /// The lexicographic list shuffled by `Xoshiro256PlusPlus::seed_from_u64(seed)`.
    SeededRandom(u64),
}

impl SaturationOrder {
    pub fn pairs(self, n: usize) -> Vec<(usize, usize)> {
        let mut pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        if let SaturationOrder::SeededRandom(seed) = self {
            pairs.shuffle(&mut Xoshiro256PlusPlus::seed_from_u64(seed));
        }
        pairs
    }
}

fn require_girth(g: &Graph, k: usize) -> Result<(), SaturationError> {
    if k < 2 {
        return Err(SaturationError::BadParameter(k));
    }
    let found = odd_girth(g);
    if found < Dist::Finite(2 * k + 1) {
        return Err(SaturationError::GirthTooSmall {
            found,
            required: 2 * k + 1,
        });
    }
    Ok(())
}

/// Adds every pair, in `order`, whose edge keeps the odd girth at least
/// `2k + 1`.
///
/// One pass suffices: a pair rejected once stays rejected because adding
/// edges only shortens walks.
pub fn saturate(g: &Graph, k: usize, order: SaturationOrder) -> Result<Graph, SaturationError> {
    require_girth(g, k)?;
    let mut out = g.clone();
    for (u, v) in order.pairs(g.n()) {
        if !out.has_edge(u, v) && !joins_short_odd_cycle(&out, u, v, k) {
            out.insert_edge(u, v);
        }
    }
    Ok(out)
}

pub fn is_edge_maximal(g: &Graph, k: usize) -> Result<bool, SaturationError> {
    require_girth(g, k)?;
    Ok(non_edges(g).all(|(u, v)| joins_short_odd_cycle(g, u, v, k)))
}

fn non_edges(g: &Graph) -> impl Iterator<Item = (usize, usize)> + '_ {
    (0..g.n()).flat_map(move |u| (u + 1..g.n()).filter(move |&v| !g.has_edge(u, v)).map(move |v| (u, v)))
}

/// `4k * delta > 3n`, evaluated in integers.
pub fn exceeds_degree_threshold(g: &Graph, k: usize) -> bool {
    g.min_degree().is_some_and(|d| 4 * k * d > 3 * g.n())
}

/// Membership in the class of `n`-vertex graphs with minimum degree above
/// `3n / 4k` that are edge-maximal with odd girth at least `2k + 1`.
pub fn in_class_g(g: &Graph, k: usize) -> bool {
    k >= 2
        && odd_girth(g) >= Dist::Finite(2 * k + 1)
        && exceeds_degree_threshold(g, k)
        && non_edges(g).all(|(u, v)| joins_short_odd_cycle(g, u, v, k))
}
