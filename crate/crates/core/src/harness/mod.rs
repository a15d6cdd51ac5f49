//! Verification campaigns over small graphs: exhaustive enumeration,
//! seeded sampling, and aggregated reports with replayable failures.

mod campaigns;
mod enumerate;
mod report;
mod sample;

use thiserror::Error;

use crate::generators::GenError;
use crate::graph::GraphError;

pub use campaigns::{
    check_lemma_instance, check_sharpness, check_theorem_instance, explore, verify_lemmas, verify_sharpness,
    verify_theorem, Exploration, InstanceCheck, Mode,
};
pub use enumerate::{
    collect_graphs, enumerate_graphs, max_enumeration_n, EnumerationConstraints, EnumerationStats, DEDUPE_MAX_N,
    DEFAULT_MAX_N, MAX_N_VAR,
};
pub use report::{CampaignReport, Counts, Failure, Parameters};
pub use sample::{lemma_candidate, theorem_candidate};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum HarnessError {
    #[error("{n} vertices exceeds the enumeration bound {max}")]
    TooLarge { n: usize, max: usize },

    #[error("bad parameter: {0}")]
    BadParameter(String),

    #[error(transparent)]
    Graph(#[from] GraphError),

    #[error(transparent)]
    Gen(#[from] GenError),
}
