//! The flat machine-readable stats record.

use serde::{Deserialize, Serialize};
use siggb_core::engine::RunStats;

/// One run, serialized as a flat JSON object. The eight counter keys come
/// first and are always present; the trailing keys are diagnostics.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatsRecord {
    pub pairs_generated: u64,
    pub rejected_nonregular: u64,
    pub rejected_criterion: u64,
    pub reduced: u64,
    pub zero_reductions: u64,
    pub basis_nonzero: u64,
    pub reduced_gb_size: u64,
    pub elapsed_ms: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub config: Option<String>,
    #[serde(default)]
    pub admissibility_violations: u64,
    #[serde(default)]
    pub vector_check_failures: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle_match: Option<bool>,
}

impl StatsRecord {
    pub fn from_stats(s: &RunStats) -> Self {
        Self {
            pairs_generated: s.pairs_generated,
            rejected_nonregular: s.rejected_nonregular,
            rejected_criterion: s.rejected_criterion,
            reduced: s.reduced,
            zero_reductions: s.zero_reductions,
            basis_nonzero: s.basis_nonzero,
            reduced_gb_size: s.reduced_gb_size,
            elapsed_ms: s.elapsed_ms,
            admissibility_violations: s.admissibility_violations,
            vector_check_failures: s.vector_check_failures,
            ..Self::default()
        }
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn with_config(mut self, config: impl Into<String>) -> Self {
        self.config = Some(config.into());
        self
    }

    /// Single-line JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("stats record serializes")
    }
}
