//! Subcommand implementations and the small helpers they share.

pub mod eval_community;
pub mod eval_linkpred;
pub mod gen;
pub mod query;
pub mod stats;

use std::path::{Path, PathBuf};

use fbs_core::graph::NodeId;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::errors::{CliError, Result};

/// Write `text` to `path`, or to stdout when no path is given.
pub(crate) fn write_output(path: Option<&PathBuf>, text: &str) -> Result<()> {
    match path {
        Some(path) => write_file(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Write `text` to `path`, wrapping IO failures with the offending path.
pub(crate) fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Choose up to `samples` distinct query nodes, seeded and order-stable.
///
/// When the budget covers the whole graph every node is returned in id
/// order; otherwise a seeded partial Fisher-Yates shuffle picks the subset,
/// so reruns with the same seed sample the same queries.
pub(crate) fn sample_queries(node_count: usize, samples: usize, seed: u64) -> Vec<NodeId> {
    let mut ids: Vec<NodeId> = (0..node_count as NodeId).collect();
    if samples >= node_count {
        return ids;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..samples {
        let j = rng.random_range(i..ids.len());
        ids.swap(i, j);
    }
    ids.truncate(samples);
    ids
}
