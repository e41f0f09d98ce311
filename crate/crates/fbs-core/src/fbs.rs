//! Two-sided similarity search: a forward pass ranks candidates by
//! personalized PageRank from the query, a backward pass scores each
//! candidate by personalized PageRank toward the query on the reversed
//! graph, and a combiner fuses the two values into the final score.
//!
//! Forward and backward values are combined raw (leaky-recurrence scale,
//! see [`crate::ppr::PprRun::raw_scale`]) with no per-list
//! renormalization, so the two features of one candidate live on a
//! common probability scale.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};
use crate::ppr::{ppr_run, rank_scores, PprConfig};

/// Score fusion rule.
#[derive(Debug, Clone, PartialEq)]
pub enum CombinerSpec {
    /// `lambda·fwd + (1 - lambda)·bwd`, `lambda` in `[0, 1]`.
    Linear { lambda: f64 },
    /// `lambda·fwd/(fwd + k1) + (1 - lambda)·bwd/(bwd + k2)`, saturating
    /// each feature before blending; `k1, k2 > 0`.
    Saturation { lambda: f64, k1: f64, k2: f64 },
}

impl Default for CombinerSpec {
    fn default() -> Self {
        CombinerSpec::Linear { lambda: 0.5 }
    }
}

impl CombinerSpec {
    /// The shipped saturation preset (empirically tuned for entity
    /// search): `lambda = 0.571`, `k1 = 0.72`, `k2 = 0.3`.
    pub fn saturation_preset() -> Self {
        CombinerSpec::Saturation {
            lambda: 0.571,
            k1: 0.72,
            k2: 0.3,
        }
    }

    pub fn lambda(&self) -> f64 {
        match *self {
            CombinerSpec::Linear { lambda } => lambda,
            CombinerSpec::Saturation { lambda, .. } => lambda,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let lambda = self.lambda();
        if !(0.0..=1.0).contains(&lambda) {
            return Err(Error::InvalidInput(format!(
                "lambda must lie in [0, 1], got {lambda}"
            )));
        }
        if let CombinerSpec::Saturation { k1, k2, .. } = *self {
            if !(k1 > 0.0 && k2 > 0.0) {
                return Err(Error::InvalidInput(format!(
                    "saturation constants must be positive, got k1={k1}, k2={k2}"
                )));
            }
        }
        Ok(())
    }

    /// Applies the combiner; arguments must be non-negative.
    pub fn combine(&self, fwd: f64, bwd: f64) -> f64 {
        match *self {
            CombinerSpec::Linear { lambda } => combine_linear(fwd, bwd, lambda),
            CombinerSpec::Saturation { lambda, k1, k2 } => {
                combine_saturation(fwd, bwd, lambda, k1, k2)
            }
        }
    }
}

/// Affine blend of the two feature values.
pub fn combine_linear(fwd: f64, bwd: f64, lambda: f64) -> f64 {
    lambda * fwd + (1.0 - lambda) * bwd
}

/// Saturating blend: each feature is squashed by `x / (x + k)` before the
/// affine mix, so the result lies in `[0, 1)`.
pub fn combine_saturation(fwd: f64, bwd: f64, lambda: f64, k1: f64, k2: f64) -> f64 {
    let sat = |x: f64, k: f64| if x > 0.0 { x / (x + k) } else { 0.0 };
    lambda * sat(fwd, k1) + (1.0 - lambda) * sat(bwd, k2)
}

/// Parameters of a two-sided similarity query.
#[derive(Debug, Clone, PartialEq)]
pub struct FbsConfig {
    /// Candidate list size of the forward pass.
    pub n: usize,
    /// Forward/backward repetitions; 1 means one forward and one backward
    /// pass. Higher values intersect each fresh forward ranking with the
    /// previous round's surviving candidates (experimental).
    pub rounds: u32,
    pub ppr: PprConfig,
    pub combiner: CombinerSpec,
}

impl Default for FbsConfig {
    fn default() -> Self {
        FbsConfig {
            n: 20,
            rounds: 1,
            ppr: PprConfig::default(),
            combiner: CombinerSpec::default(),
        }
    }
}

impl FbsConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidInput("candidate size n must be at least 1".into()));
        }
        if self.rounds == 0 {
            return Err(Error::InvalidInput("rounds must be at least 1".into()));
        }
        self.ppr.validate()?;
        self.combiner.validate()
    }
}

/// One scored candidate of a two-sided query.
#[derive(Debug, Clone, PartialEq)]
pub struct FbsCandidate {
    pub node: NodeId,
    pub forward: f64,
    pub backward: f64,
    pub combined: f64,
}

/// Result of a two-sided similarity query.
///
/// Candidates are ordered by combined score descending with ties broken
/// by ascending node id. When every candidate other than the query has
/// backward score 0 the combined column carries no information beyond
/// the forward score, and the ordering falls back to forward score
/// descending (again ties by id).
#[derive(Debug, Clone, PartialEq)]
pub struct FbsResult {
    pub query: NodeId,
    pub candidates: Vec<FbsCandidate>,
}

impl FbsResult {
    /// Candidate rows padded with zero-score rows for every non-candidate
    /// node (ascending id) when `include_zero` is set, truncated to `k`
    /// rows when given.
    pub fn rows(&self, node_count: usize, k: Option<usize>, include_zero: bool) -> Vec<FbsCandidate> {
        let mut rows = self.candidates.clone();
        if include_zero {
            let present: BTreeSet<NodeId> = rows.iter().map(|c| c.node).collect();
            for v in 0..node_count as NodeId {
                if !present.contains(&v) {
                    rows.push(FbsCandidate {
                        node: v,
                        forward: 0.0,
                        backward: 0.0,
                        combined: 0.0,
                    });
                }
            }
        }
        if let Some(k) = k {
            rows.truncate(k);
        }
        rows
    }

    /// Tab-separated `rank \t label \t forward \t backward \t combined`
    /// lines, scores with nine decimals.
    pub fn to_tsv(
        &self,
        graph: &Graph,
        k: Option<usize>,
        include_zero: bool,
    ) -> String {
        let mut out = String::new();
        for (i, c) in self
            .rows(graph.node_count(), k, include_zero)
            .iter()
            .enumerate()
        {
            out.push_str(&format!(
                "{}\t{}\t{:.9}\t{:.9}\t{:.9}\n",
                i + 1,
                graph.label_of(c.node),
                c.forward,
                c.backward,
                c.combined
            ));
        }
        out
    }
}

/// Top-`n` nodes by forward score from `u` (fewer when fewer score
/// positively), as `(node, raw forward score)` pairs, best first, ties by
/// ascending id. The query itself is eligible.
pub fn forward_mode(
    graph: &Graph,
    u: NodeId,
    n: usize,
    ppr_cfg: &PprConfig,
) -> Result<Vec<(NodeId, f64)>> {
    if n == 0 {
        return Err(Error::InvalidInput("candidate size n must be at least 1".into()));
    }
    let run = ppr_run(graph, u, ppr_cfg)?;
    let mut ranked = rank_scores(&run.raw_scores(), false);
    ranked.truncate(n);
    Ok(ranked)
}

/// Raw backward score of each candidate: personalized PageRank from the
/// candidate on the reversed graph, read at `u`. Candidates that cannot
/// reach `u` there get exactly 0.
pub fn backward_mode(
    g_rev: &Graph,
    candidates: &[(NodeId, f64)],
    u: NodeId,
    ppr_cfg: &PprConfig,
) -> Result<BTreeMap<NodeId, f64>> {
    let mut scores = BTreeMap::new();
    for &(v, _) in candidates {
        scores.insert(v, ppr_run(g_rev, v, ppr_cfg)?.raw_score(u));
    }
    Ok(scores)
}

fn sort_candidates(cands: &mut [FbsCandidate], query: NodeId) {
    let informative = cands
        .iter()
        .any(|c| c.node != query && c.backward > 0.0);
    if informative {
        cands.sort_by(|a, b| {
            b.combined
                .total_cmp(&a.combined)
                .then_with(|| a.node.cmp(&b.node))
        });
    } else {
        cands.sort_by(|a, b| {
            b.forward
                .total_cmp(&a.forward)
                .then_with(|| a.node.cmp(&b.node))
        });
    }
}

/// Runs the full two-sided query: forward candidate selection, backward
/// scoring, combination, ordering.
pub fn fbs_query(graph: &Graph, u: NodeId, cfg: &FbsConfig) -> Result<FbsResult> {
    cfg.validate()?;
    let fwd_raw = ppr_run(graph, u, &cfg.ppr)?.raw_scores();
    let rev = graph.reverse();

    let mut bwd_cache: BTreeMap<NodeId, f64> = BTreeMap::new();
    let mut allowed: Option<BTreeSet<NodeId>> = None;
    let mut result: Vec<FbsCandidate> = Vec::new();

    for _ in 0..cfg.rounds {
        let mut ranked = rank_scores(&fwd_raw, false);
        if let Some(allow) = &allowed {
            ranked.retain(|(v, _)| allow.contains(v));
        }
        ranked.truncate(cfg.n);

        for &(v, _) in &ranked {
            if !bwd_cache.contains_key(&v) {
                let bwd = ppr_run(&rev, v, &cfg.ppr)?.raw_score(u);
                bwd_cache.insert(v, bwd);
            }
        }

        let cands: Vec<FbsCandidate> = ranked
            .iter()
            .map(|&(v, fwd)| {
                let bwd = bwd_cache[&v];
                FbsCandidate {
                    node: v,
                    forward: fwd,
                    backward: bwd,
                    combined: cfg.combiner.combine(fwd, bwd),
                }
            })
            .collect();

        let members: BTreeSet<NodeId> = cands.iter().map(|c| c.node).collect();
        let survivors: BTreeSet<NodeId> = cands
            .iter()
            .filter(|c| c.combined > 0.0)
            .map(|c| c.node)
            .collect();
        let fixpoint = survivors == members;
        result = cands;
        if fixpoint {
            break;
        }
        allowed = Some(survivors);
    }

    sort_candidates(&mut result, u);
    Ok(FbsResult {
        query: u,
        candidates: result,
    })
}

/// The pair `(π_{G,u}(v), π_{G',v}(u))` of normalized scores, computed
/// directly with no top-n pruning; the pairwise form used as two
/// features in link prediction.
pub fn fbs_two_feature(
    graph: &Graph,
    u: NodeId,
    v: NodeId,
    cfg: &FbsConfig,
) -> Result<(f64, f64)> {
    cfg.validate()?;
    let fwd = ppr_run(graph, u, &cfg.ppr)?.scores[v as usize];
    let rev = graph.reverse();
    let bwd = ppr_run(&rev, v, &cfg.ppr)?.scores[u as usize];
    Ok((fwd, bwd))
}
