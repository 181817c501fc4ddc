use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

/// Run configuration shared by the CLI and the theorem harness. Echoed into
/// every JSON report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    /// Largest graph (usually a corona) handed to exact search.
    pub vertex_cap: usize,
    /// Largest automorphism group enumerated.
    pub group_cap: usize,
    /// Largest number of search nodes per label count `k`.
    pub labeling_cap: u64,
    pub seed: u64,
    pub worker_count: usize,
    /// Random labelings tried per `k` before the exhaustive pass. 0 disables.
    pub random_prepass: usize,
    pub output_format: OutputFormat,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            vertex_cap: 24,
            group_cap: 1_000_000,
            labeling_cap: 100_000_000,
            seed: 0,
            worker_count: 1,
            random_prepass: 0,
            output_format: OutputFormat::Text,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.vertex_cap == 0 || self.group_cap == 0 || self.labeling_cap == 0 {
            return Err(Error::InvalidArgument("caps must be positive".into()));
        }
        if self.worker_count == 0 {
            return Err(Error::InvalidArgument(
                "worker count must be positive".into(),
            ));
        }
        Ok(())
    }

    pub fn limits(&self) -> SearchLimits {
        SearchLimits {
            vertex_cap: self.vertex_cap,
            group_cap: self.group_cap,
            labeling_cap: self.labeling_cap,
            workers: self.worker_count,
            random_prepass: self.random_prepass,
            seed: self.seed,
        }
    }
}

/// The subset of [`RunConfig`] consumed by the exact-search routines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    pub vertex_cap: usize,
    pub group_cap: usize,
    pub labeling_cap: u64,
    pub workers: usize,
    pub random_prepass: usize,
    pub seed: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        RunConfig::default().limits()
    }
}

impl SearchLimits {
    pub fn with_vertex_cap(mut self, cap: usize) -> Self {
        self.vertex_cap = cap;
        self
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }
}
