use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Dot,
}

/// Settings shared by the verification sweeps.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    /// Largest total size any sweep may be asked to cover.
    pub max_total_size: usize,
    /// Size of the worker pool the sweeps run on.
    pub worker_count: usize,
    pub output_format: OutputFormat,
    /// Seed for the randomized property sweeps.
    pub seed: u64,
    /// Where to record progress; `None` disables checkpointing.
    pub checkpoint: Option<PathBuf>,
    /// Number of items between checkpoint writes.
    pub checkpoint_every: usize,
}

pub const DEFAULT_MAX_TOTAL_SIZE: usize = 24;
pub const DEFAULT_CHECKPOINT_EVERY: usize = 2000;

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            max_total_size: DEFAULT_MAX_TOTAL_SIZE,
            worker_count: std::thread::available_parallelism().map_or(1, |n| n.get()),
            output_format: OutputFormat::Text,
            seed: 0,
            checkpoint: None,
            checkpoint_every: DEFAULT_CHECKPOINT_EVERY,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_total_size == 0 {
            return Err(Error::BadInput("max_total_size must be positive".into()));
        }
        if self.worker_count == 0 {
            return Err(Error::BadInput("worker_count must be positive".into()));
        }
        if self.checkpoint_every == 0 {
            return Err(Error::BadInput("checkpoint_every must be positive".into()));
        }
        Ok(())
    }

    pub fn check_bound(&self, bound: usize) -> Result<()> {
        if bound > self.max_total_size {
            return Err(Error::BoundExceeded {
                bound,
                max: self.max_total_size,
            });
        }
        Ok(())
    }

    pub(crate) fn pool(&self) -> Result<rayon::ThreadPool> {
        self.validate()?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(self.worker_count)
            .build()
            .map_err(|e| Error::BadInput(format!("cannot start worker pool: {e}")))
    }
}
