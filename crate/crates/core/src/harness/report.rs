use std::fmt;

use serde::{Deserialize, Serialize};

/// One failed instance, with enough to reproduce it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Failure {
    /// The instance in canonical edge-list format.
    pub graph: String,
    pub reason: String,
    /// A witness record or certificate when one explains the failure.
    pub witness: Option<String>,
    /// Command that reproduces the failure with `graph` on standard input.
    pub replay: String,
}

/// Parameters a campaign ran with.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Parameters {
    pub k: usize,
    pub n_min: usize,
    pub n_max: usize,
    /// Class size of sharpness runs.
    pub t: Option<usize>,
    pub seed: Option<u64>,
    pub samples: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Counts {
    pub graphs_tested: u64,
    pub certificates_issued: u64,
    pub non_bipartite_certificates: u64,
    /// Graphs in the edge-maximal class reached by lemma runs.
    pub class_members: u64,
    pub non_bipartite_members: u64,
    pub failures: u64,
}

/// Aggregated outcome of a verification campaign. Serializes with the
/// fields in declaration order; `failures` is sorted.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CampaignReport {
    pub campaign: String,
    pub parameters: Parameters,
    pub counts: Counts,
    pub failures: Vec<Failure>,
    pub duration_secs: f64,
}

impl CampaignReport {
    pub(crate) fn new(campaign: &str, parameters: Parameters) -> CampaignReport {
        CampaignReport {
            campaign: campaign.to_string(),
            parameters,
            counts: Counts::default(),
            failures: Vec::new(),
            duration_secs: 0.0,
        }
    }

    pub(crate) fn fail(&mut self, failure: Failure) {
        self.failures.push(failure);
    }

    pub(crate) fn finish(mut self, started: std::time::Instant) -> CampaignReport {
        self.failures.sort();
        self.counts.failures = self.failures.len() as u64;
        self.duration_secs = started.elapsed().as_secs_f64();
        self
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// One JSON object on one line.
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("reports always serialize")
    }
}

impl fmt::Display for CampaignReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = &self.parameters;
        let c = &self.counts;
        write!(f, "{} k={} n={}..={}", self.campaign, p.k, p.n_min, p.n_max)?;
        if let Some(t) = p.t {
            write!(f, " t={t}")?;
        }
        if let (Some(seed), Some(samples)) = (p.seed, p.samples) {
            write!(f, " seed={seed} samples={samples}")?;
        }
        writeln!(f, ": {}", if self.passed() { "ok" } else { "FAILED" })?;
        write!(
            f,
            "  graphs {}  certificates {} ({} non-bipartite)  class members {} ({} non-bipartite)  failures {}  {:.2}s",
            c.graphs_tested,
            c.certificates_issued,
            c.non_bipartite_certificates,
            c.class_members,
            c.non_bipartite_members,
            c.failures,
            self.duration_secs
        )?;
        for fail in &self.failures {
            write!(f, "\n  - {} [replay: {}]", fail.reason, fail.replay)?;
        }
        Ok(())
    }
}
