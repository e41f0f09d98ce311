//! Personalized PageRank by power iteration.
//!
//! The engine iterates the mass-conserving form of the recurrence: at
//! every step a surfer restarts at the query with probability `epsilon`
//! and otherwise follows a uniformly random out-edge, with the entire
//! out-flow of dangling nodes redirected back to the query. Every iterate
//! is therefore an exact probability distribution and the iteration
//! contracts in L1 at rate `1 - epsilon`.
//!
//! The variant that instead lets dangling mass vanish (each iterate sums
//! to less than one) has the same fixed point up to one global factor.
//! [`PprRun::raw_scale`] is that factor, so both readings of the scores
//! are available from a single run: normalized values for reporting and
//! cross-node comparison, raw leaky values for feature combination.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};
use crate::math;

/// Parameters of the power iteration.
#[derive(Debug, Clone, PartialEq)]
pub struct PprConfig {
    /// Restart probability, in `(0, 1]`.
    pub epsilon: f64,
    /// L1 convergence threshold between consecutive iterates, positive.
    pub tolerance: f64,
    /// Iteration cap; exceeding it is a [`Error::NonConvergence`].
    pub max_iterations: u32,
}

impl Default for PprConfig {
    fn default() -> Self {
        PprConfig {
            epsilon: 0.15,
            tolerance: 1e-6,
            max_iterations: 1000,
        }
    }
}

impl PprConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.epsilon > 0.0 && self.epsilon <= 1.0) {
            return Err(Error::InvalidInput(format!(
                "epsilon must lie in (0, 1], got {}",
                self.epsilon
            )));
        }
        if !(self.tolerance > 0.0 && self.tolerance.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "tolerance must be positive and finite, got {}",
                self.tolerance
            )));
        }
        if self.max_iterations == 0 {
            return Err(Error::InvalidInput(
                "max_iterations must be at least 1".into(),
            ));
        }
        Ok(())
    }
}

/// A score per node for one query. PPR and SALSA fill it with a
/// probability distribution (scores sum to 1); similarity measures such
/// as SimRank reuse the container without that property.
#[derive(Debug, Clone, PartialEq)]
pub struct ScoreMap {
    pub query: NodeId,
    /// Dense, indexed by node id.
    pub scores: Vec<f64>,
}

impl ScoreMap {
    pub fn sum(&self) -> f64 {
        math::sum(&self.scores)
    }

    /// Nodes ranked by descending score, ties broken by ascending id.
    /// Zero-score nodes are dropped unless `include_zero`, in which case
    /// they trail the ranking in id order.
    pub fn ranked(&self, include_zero: bool) -> Vec<(NodeId, f64)> {
        rank_scores(&self.scores, include_zero)
    }

    /// Tab-separated `label \t score` lines in rank order, scores with
    /// nine decimals. `k` truncates the ranking when given.
    pub fn to_tsv(&self, graph: &Graph, k: Option<usize>, include_zero: bool) -> String {
        let mut ranked = self.ranked(include_zero);
        if let Some(k) = k {
            ranked.truncate(k);
        }
        let mut out = String::new();
        for (node, score) in ranked {
            out.push_str(&format!("{}\t{:.9}\n", graph.label_of(node), score));
        }
        out
    }
}

/// Ranks a dense score vector: positive scores descending, ties by
/// ascending node id; zero and negative scores appended in id order when
/// `include_zero` is set, otherwise dropped.
pub fn rank_scores(scores: &[f64], include_zero: bool) -> Vec<(NodeId, f64)> {
    let mut positive: Vec<(NodeId, f64)> = scores
        .iter()
        .enumerate()
        .filter(|(_, &s)| s > 0.0)
        .map(|(i, &s)| (i as NodeId, s))
        .collect();
    positive.sort_by(|a, b| b.1.total_cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    if include_zero {
        positive.extend(
            scores
                .iter()
                .enumerate()
                .filter(|(_, &s)| s <= 0.0)
                .map(|(i, &s)| (i as NodeId, s)),
        );
    }
    positive
}

/// Full record of one power iteration run.
#[derive(Debug, Clone)]
pub struct PprRun {
    pub query: NodeId,
    /// Converged distribution; sums to 1.
    pub scores: Vec<f64>,
    /// Factor relating the normalized fixed point to the leaky one:
    /// `raw = scores * raw_scale`, with
    /// `raw_scale = epsilon / (epsilon + (1 - epsilon) * dangling_mass)`.
    pub raw_scale: f64,
    /// Update steps performed.
    pub iterations: u32,
    /// L1 distance between consecutive iterates, one entry per step.
    pub residuals: Vec<f64>,
    /// Sum of each iterate, one entry per step; equals 1 up to rounding.
    pub iterate_sums: Vec<f64>,
}

impl PprRun {
    /// Leaky-recurrence value of one node.
    pub fn raw_score(&self, v: NodeId) -> f64 {
        self.scores[v as usize] * self.raw_scale
    }

    /// All leaky-recurrence values.
    pub fn raw_scores(&self) -> Vec<f64> {
        self.scores.iter().map(|s| s * self.raw_scale).collect()
    }

    pub fn score_map(&self) -> ScoreMap {
        ScoreMap {
            query: self.query,
            scores: self.scores.clone(),
        }
    }
}

/// Runs the power iteration from `query`, returning the full trace.
pub fn ppr_run(graph: &Graph, query: NodeId, config: &PprConfig) -> Result<PprRun> {
    config.validate()?;
    let n = graph.node_count();
    if query as usize >= n {
        return Err(Error::NodeOutOfRange {
            node: query,
            node_count: n,
        });
    }
    let eps = config.epsilon;
    let q = query as usize;

    let mut cur = vec![0.0f64; n];
    cur[q] = 1.0;
    let mut residuals = Vec::new();
    let mut iterate_sums = Vec::new();

    for step in 1..=config.max_iterations {
        let mut nxt = vec![0.0f64; n];
        let mut dangling = 0.0f64;
        for v in 0..n {
            let mass = cur[v];
            if mass == 0.0 {
                continue;
            }
            let nbrs = graph.out_neighbors(v as NodeId);
            if nbrs.is_empty() {
                dangling += mass;
            } else {
                let share = mass / nbrs.len() as f64;
                for &w in nbrs {
                    nxt[w as usize] += share;
                }
            }
        }
        for x in nxt.iter_mut() {
            *x *= 1.0 - eps;
        }
        nxt[q] += eps + (1.0 - eps) * dangling;

        let residual = math::l1_distance(&nxt, &cur);
        residuals.push(residual);
        iterate_sums.push(math::sum(&nxt));
        cur = nxt;

        if residual <= config.tolerance {
            let dangling_mass: f64 = (0..n)
                .filter(|&v| graph.out_neighbors(v as NodeId).is_empty())
                .map(|v| cur[v])
                .sum();
            let raw_scale = eps / (eps + (1.0 - eps) * dangling_mass);
            return Ok(PprRun {
                query,
                scores: cur,
                raw_scale,
                iterations: step,
                residuals,
                iterate_sums,
            });
        }
    }

    Err(Error::NonConvergence {
        iterations: config.max_iterations,
        residual: *residuals.last().unwrap(),
        last: cur,
    })
}

/// Personalized PageRank distribution of `query`.
pub fn ppr(graph: &Graph, query: NodeId, config: &PprConfig) -> Result<ScoreMap> {
    Ok(ppr_run(graph, query, config)?.score_map())
}

/// Nodes with positive PPR score, best first, ties by ascending id.
pub fn ppr_rank(graph: &Graph, query: NodeId, config: &PprConfig) -> Result<Vec<(NodeId, f64)>> {
    Ok(ppr(graph, query, config)?.ranked(false))
}
