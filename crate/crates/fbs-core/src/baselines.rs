//! Comparison measures: Adamic-Adar, personalized SALSA, and Monte Carlo
//! SimRank.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};
use crate::math;
use crate::ppr::ScoreMap;

/// Adamic-Adar index of a node pair: common neighbors on the undirected
/// simple projection, each weighted by the inverse natural log of its
/// projected degree. The self-pair scores 0 by definition.
pub fn adamic_adar(graph: &Graph, u: NodeId, v: NodeId) -> Result<f64> {
    let scores = adamic_adar_scores(graph, u)?;
    if v as usize >= scores.len() {
        return Err(Error::NodeOutOfRange {
            node: v,
            node_count: scores.len(),
        });
    }
    Ok(scores[v as usize])
}

/// Adamic-Adar score of `u` against every node, dense by node id.
/// A common neighbor shared by `u` and `v` always has projected degree
/// at least 2, so the log weights are finite and positive.
pub fn adamic_adar_scores(graph: &Graph, u: NodeId) -> Result<Vec<f64>> {
    if u as usize >= graph.node_count() {
        return Err(Error::NodeOutOfRange {
            node: u,
            node_count: graph.node_count(),
        });
    }
    let adj = graph.undirected_projection();
    let mut scores = vec![0.0f64; graph.node_count()];
    for &w in &adj[u as usize] {
        let weight = 1.0 / math::ln(adj[w as usize].len() as f64);
        for &v in &adj[w as usize] {
            if v != u {
                scores[v as usize] += weight;
            }
        }
    }
    scores[u as usize] = 0.0;
    Ok(scores)
}

/// Parameters of the personalized SALSA walk.
#[derive(Debug, Clone, PartialEq)]
pub struct SalsaConfig {
    /// Restart probability of the hub step, in `(0, 1]`.
    pub alpha: f64,
    /// L1 convergence threshold over both state vectors, positive.
    pub tolerance: f64,
    pub max_iterations: u32,
}

impl Default for SalsaConfig {
    fn default() -> Self {
        SalsaConfig {
            alpha: 0.15,
            tolerance: 1e-6,
            max_iterations: 1000,
        }
    }
}

impl SalsaConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.alpha > 0.0 && self.alpha <= 1.0) {
            return Err(Error::InvalidInput(format!(
                "alpha must lie in (0, 1], got {}",
                self.alpha
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

/// Personalized SALSA from `u`: stationary distribution of the
/// alternating hub/authority walk on the bipartite expansion of the
/// graph. A hub step restarts to the query's hub state with probability
/// `alpha` and otherwise follows a uniform out-edge to the target's
/// authority state; hub states without out-edges hand their whole mass
/// back to the query. An authority step walks a uniform in-edge back to
/// the source's hub state, with no restart.
///
/// The reported score of a node is its authority-side mass; the query
/// itself reports its hub-side mass (its authority mass would conflate
/// the query with its co-cited peers). Scores are normalized to sum to 1.
pub fn psalsa(graph: &Graph, u: NodeId, cfg: &SalsaConfig) -> Result<ScoreMap> {
    cfg.validate()?;
    let n = graph.node_count();
    if u as usize >= n {
        return Err(Error::NodeOutOfRange {
            node: u,
            node_count: n,
        });
    }
    let alpha = cfg.alpha;
    let q = u as usize;

    let mut hub = vec![0.0f64; n];
    let mut auth = vec![0.0f64; n];
    hub[q] = 1.0;
    let mut residual = f64::INFINITY;

    for _ in 0..cfg.max_iterations {
        let mut nh = vec![0.0f64; n];
        let mut na = vec![0.0f64; n];
        nh[q] += alpha * math::sum(&hub);
        for x in 0..n {
            let mass = hub[x];
            if mass == 0.0 {
                continue;
            }
            let outs = graph.out_neighbors(x as NodeId);
            if outs.is_empty() {
                nh[q] += (1.0 - alpha) * mass;
            } else {
                let share = (1.0 - alpha) * mass / outs.len() as f64;
                for &v in outs {
                    na[v as usize] += share;
                }
            }
        }
        for v in 0..n {
            let mass = auth[v];
            if mass == 0.0 {
                continue;
            }
            let ins = graph.in_neighbors(v as NodeId);
            if ins.is_empty() {
                nh[q] += mass;
            } else {
                let share = mass / ins.len() as f64;
                for &x in ins {
                    nh[x as usize] += share;
                }
            }
        }
        residual = math::l1_distance(&nh, &hub) + math::l1_distance(&na, &auth);
        hub = nh;
        auth = na;
        if residual <= cfg.tolerance {
            let mut scores = auth;
            scores[q] = hub[q];
            let total = math::sum(&scores);
            for s in scores.iter_mut() {
                *s /= total;
            }
            return Ok(ScoreMap { query: u, scores });
        }
    }

    let mut last = auth;
    last[q] = hub[q];
    Err(Error::NonConvergence {
        iterations: cfg.max_iterations,
        residual,
        last,
    })
}

/// Parameters of the Monte Carlo SimRank estimator.
#[derive(Debug, Clone, PartialEq)]
pub struct SimRankConfig {
    /// Decay per meeting step, in `(0, 1)`.
    pub c: f64,
    /// Walk length cap `T`.
    pub t: u32,
    /// Sample walks per node pair `R`.
    pub r: u32,
    pub seed: u64,
}

impl Default for SimRankConfig {
    fn default() -> Self {
        SimRankConfig {
            c: 0.8,
            t: 100,
            r: 10_000,
            seed: 42,
        }
    }
}

impl SimRankConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.c > 0.0 && self.c < 1.0) {
            return Err(Error::InvalidInput(format!(
                "decay c must lie in (0, 1), got {}",
                self.c
            )));
        }
        if self.t == 0 || self.r == 0 {
            return Err(Error::InvalidInput(
                "walk cap t and sample count r must be at least 1".into(),
            ));
        }
        Ok(())
    }
}

/// Deterministic per-pair stream seed; stable no matter how sampling is
/// sharded.
fn pair_seed(seed: u64, u: NodeId, v: NodeId) -> u64 {
    let mut z = seed
        ^ (u as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15)
        ^ (v as u64 + 1).wrapping_mul(0xD1B5_4A32_D192_ED03);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Monte Carlo SimRank of `u` against every node: `s(u,v)` is estimated
/// as the mean of `c^tau` over `r` pairs of synchronized reverse random
/// walks from `u` and `v`, where `tau` is their first meeting step. A
/// walk reaching a node with no in-edges halts the pair (no meeting is
/// possible afterward), contributing 0. `s(u,u)` is 1 exactly.
pub fn simrank_mc(graph: &Graph, u: NodeId, cfg: &SimRankConfig) -> Result<ScoreMap> {
    cfg.validate()?;
    let n = graph.node_count();
    if u as usize >= n {
        return Err(Error::NodeOutOfRange {
            node: u,
            node_count: n,
        });
    }

    let mut scores = vec![0.0f64; n];
    scores[u as usize] = 1.0;
    for v in 0..n as NodeId {
        if v == u {
            continue;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(pair_seed(cfg.seed, u, v));
        let mut total = 0.0f64;
        for _ in 0..cfg.r {
            let mut a = u;
            let mut b = v;
            let mut discount = 1.0f64;
            for _ in 0..cfg.t {
                let ins_a = graph.in_neighbors(a);
                let ins_b = graph.in_neighbors(b);
                if ins_a.is_empty() || ins_b.is_empty() {
                    break;
                }
                a = ins_a[rng.random_range(0..ins_a.len())];
                b = ins_b[rng.random_range(0..ins_b.len())];
                discount *= cfg.c;
                if a == b {
                    total += discount;
                    break;
                }
            }
        }
        scores[v as usize] = total / cfg.r as f64;
    }
    Ok(ScoreMap {
        query: u,
        scores,
    })
}
