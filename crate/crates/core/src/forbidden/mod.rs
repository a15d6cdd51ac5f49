//! Detectors for configurations that edge-maximal graphs above the degree
//! threshold cannot contain:
//!
//! * `Φ`: a 6-cycle with exactly one long diagonal, as an induced subgraph;
//! * `Φ'`: a `4k`-cycle with three consecutive long diagonals;
//! * `(2k+1)`-tetrahedra: odd subdivisions of `K4` in which the three
//!   cycles through the center all have length `2k + 1`.
//!
//! Searches over arbitrary graphs can be expensive, so they take a node
//! budget and report [`ForbiddenError::SearchBudgetExceeded`] instead of a
//! possibly wrong "absent".

mod paths;
mod phi;
mod record;
mod tetra;

use thiserror::Error;

use crate::budget::BudgetExceeded;
pub use crate::budget::{Budget, DEFAULT_BUDGET};

pub use phi::{find_induced_phi, find_phi_prime, PhiPrimeWitness, PhiWitness};
pub use record::{Witness, WitnessRecord};
pub use tetra::{find_tetrahedron, TetraWitness};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ForbiddenError {
    #[error("search budget of {0} nodes exhausted before the search completed")]
    SearchBudgetExceeded(u64),

    #[error("k must be at least 2, got {0}")]
    BadParameter(usize),
}

impl From<BudgetExceeded> for ForbiddenError {
    fn from(e: BudgetExceeded) -> ForbiddenError {
        ForbiddenError::SearchBudgetExceeded(e.0)
    }
}

fn check_k(k: usize) -> Result<(), ForbiddenError> {
    if k < 2 {
        Err(ForbiddenError::BadParameter(k))
    } else {
        Ok(())
    }
}

/// Whether `path` is a walk in `g` with pairwise distinct vertices.
pub(crate) fn is_simple_path(g: &crate::Graph, path: &[usize]) -> bool {
    let mut seen = 0u64;
    for &v in path {
        if v >= g.n() || seen >> v & 1 == 1 {
            return false;
        }
        seen |= 1 << v;
    }
    path.windows(2).all(|e| g.has_edge(e[0], e[1]))
}
