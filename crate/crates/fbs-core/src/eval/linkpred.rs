//! Link prediction as binary classification: balanced edge/non-edge
//! sampling, pairwise feature extraction, and cross-validated logistic
//! regression scored by ROC AUC.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::baselines::adamic_adar_scores;
use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};
use crate::math;
use crate::ppr::{ppr_run, PprConfig};

/// A labeled sample of node pairs for link prediction.
#[derive(Debug, Clone, PartialEq)]
pub struct LinkPredictionSet {
    /// Existing edges, sampled without replacement.
    pub positives: Vec<(NodeId, NodeId)>,
    /// Distinct node pairs verified absent from the edge set.
    pub negatives: Vec<(NodeId, NodeId)>,
    pub seed: u64,
}

/// Samples `n_pos` edges uniformly without replacement and `n_neg`
/// uniform non-edges by rejection (self-pairs excluded; undirected pairs
/// canonicalized). Deterministic per seed. Errors when the graph has too
/// few edges, too few non-edges, or rejection exhausts its retry budget.
pub fn build_link_prediction_set(
    graph: &Graph,
    n_pos: usize,
    n_neg: usize,
    seed: u64,
) -> Result<LinkPredictionSet> {
    let n = graph.node_count();
    let mut edges = graph.edges();
    if n_pos > edges.len() {
        return Err(Error::InvalidInput(format!(
            "cannot sample {n_pos} positive edges from {} edges",
            edges.len()
        )));
    }
    let self_loops = edges.iter().filter(|&&(a, b)| a == b).count();
    let total_pairs = if graph.is_directed() {
        n * (n - 1)
    } else {
        n * (n - 1) / 2
    };
    let available = total_pairs - (edges.len() - self_loops);
    if n_neg > available {
        return Err(Error::InvalidInput(format!(
            "cannot sample {n_neg} negative pairs; only {available} non-edges exist"
        )));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..n_pos {
        let j = rng.random_range(i..edges.len());
        edges.swap(i, j);
    }
    let positives: Vec<(NodeId, NodeId)> = edges[..n_pos].to_vec();

    let mut negatives: Vec<(NodeId, NodeId)> = Vec::with_capacity(n_neg);
    let mut taken: BTreeSet<(NodeId, NodeId)> = BTreeSet::new();
    let mut budget = 100usize.saturating_mul(n_neg).saturating_add(1000);
    while negatives.len() < n_neg {
        if budget == 0 {
            return Err(Error::InvalidInput(
                "negative sampling exhausted its retry budget; graph too dense".into(),
            ));
        }
        budget -= 1;
        let a = rng.random_range(0..n as u32);
        let b = rng.random_range(0..n as u32);
        if a == b {
            continue;
        }
        let pair = if graph.is_directed() || a < b { (a, b) } else { (b, a) };
        if graph.has_edge(pair.0, pair.1) || !taken.insert(pair) {
            continue;
        }
        negatives.push(pair);
    }

    Ok(LinkPredictionSet {
        positives,
        negatives,
        seed,
    })
}

/// Pairwise feature kinds for link prediction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairFeature {
    /// Normalized personalized PageRank of the target from the source.
    FbsForward,
    /// Normalized personalized PageRank of the source from the target on
    /// the reversed graph.
    FbsBackward,
    /// Adamic-Adar index of the pair.
    AdamicAdar,
}

/// Feature matrix for node pairs, one row per pair in input order.
/// Score maps are cached per source node, so repeated sources cost one
/// computation each.
pub fn pair_features(
    graph: &Graph,
    pairs: &[(NodeId, NodeId)],
    kinds: &[PairFeature],
    ppr_cfg: &PprConfig,
) -> Result<Vec<Vec<f64>>> {
    if kinds.is_empty() {
        return Err(Error::InvalidInput("no pair features requested".into()));
    }
    let rev = graph.reverse();
    let mut fwd_cache: BTreeMap<NodeId, Vec<f64>> = BTreeMap::new();
    let mut bwd_cache: BTreeMap<NodeId, Vec<f64>> = BTreeMap::new();
    let mut aa_cache: BTreeMap<NodeId, Vec<f64>> = BTreeMap::new();

    let mut rows = Vec::with_capacity(pairs.len());
    for &(u, v) in pairs {
        let mut row = Vec::with_capacity(kinds.len());
        for kind in kinds {
            let value = match kind {
                PairFeature::FbsForward => {
                    if !fwd_cache.contains_key(&u) {
                        fwd_cache.insert(u, ppr_run(graph, u, ppr_cfg)?.scores);
                    }
                    fwd_cache[&u][v as usize]
                }
                PairFeature::FbsBackward => {
                    if !bwd_cache.contains_key(&v) {
                        bwd_cache.insert(v, ppr_run(&rev, v, ppr_cfg)?.scores);
                    }
                    bwd_cache[&v][u as usize]
                }
                PairFeature::AdamicAdar => {
                    if !aa_cache.contains_key(&u) {
                        aa_cache.insert(u, adamic_adar_scores(graph, u)?);
                    }
                    aa_cache[&u][v as usize]
                }
            };
            row.push(value);
        }
        rows.push(row);
    }
    Ok(rows)
}

/// The two-feature representation used by the two-sided similarity
/// model: `(forward, backward)` per pair, matching
/// [`crate::fbs::fbs_two_feature`] values.
pub fn two_feature_matrix(
    graph: &Graph,
    pairs: &[(NodeId, NodeId)],
    ppr_cfg: &PprConfig,
) -> Result<Vec<Vec<f64>>> {
    pair_features(
        graph,
        pairs,
        &[PairFeature::FbsForward, PairFeature::FbsBackward],
        ppr_cfg,
    )
}

fn sigmoid(z: f64) -> f64 {
    1.0 / (1.0 + math::exp(-z))
}

struct TrainedModel {
    weights: Vec<f64>,
    bias: f64,
    feat_mean: Vec<f64>,
    feat_std: Vec<f64>,
}

const GD_LEARNING_RATE: f64 = 0.5;
const GD_LOSS_TOLERANCE: f64 = 1e-8;
const GD_MAX_ITERATIONS: usize = 10_000;
const L2_PENALTY: f64 = 1e-4;

/// Full-batch gradient descent on L2-regularized log-loss over
/// standardized features. Runs to a fixed loss-delta tolerance (or the
/// iteration cap); deterministic.
fn train_logistic(rows: &[&[f64]], labels: &[bool]) -> TrainedModel {
    let n = rows.len();
    let dim = rows[0].len();

    let mut feat_mean = vec![0.0f64; dim];
    for row in rows {
        for (m, x) in feat_mean.iter_mut().zip(*row) {
            *m += x;
        }
    }
    for m in feat_mean.iter_mut() {
        *m /= n as f64;
    }
    let mut feat_std = vec![0.0f64; dim];
    for row in rows {
        for d in 0..dim {
            let c = row[d] - feat_mean[d];
            feat_std[d] += c * c;
        }
    }
    for s in feat_std.iter_mut() {
        *s = math::sqrt(*s / n as f64);
        if *s == 0.0 {
            *s = 1.0;
        }
    }

    let x: Vec<Vec<f64>> = rows
        .iter()
        .map(|row| {
            (0..dim)
                .map(|d| (row[d] - feat_mean[d]) / feat_std[d])
                .collect()
        })
        .collect();
    let y: Vec<f64> = labels.iter().map(|&l| if l { 1.0 } else { 0.0 }).collect();

    let mut w = vec![0.0f64; dim];
    let mut b = 0.0f64;
    let mut prev_loss = f64::INFINITY;
    for _ in 0..GD_MAX_ITERATIONS {
        let mut grad_w = vec![0.0f64; dim];
        let mut grad_b = 0.0f64;
        let mut loss = 0.0f64;
        for (xi, &yi) in x.iter().zip(&y) {
            let z = b + xi.iter().zip(&w).map(|(a, c)| a * c).sum::<f64>();
            let p = sigmoid(z);
            let err = p - yi;
            for (g, &xv) in grad_w.iter_mut().zip(xi) {
                *g += err * xv;
            }
            grad_b += err;
            let p_safe = p.clamp(1e-15, 1.0 - 1e-15);
            loss -= yi * math::ln(p_safe) + (1.0 - yi) * math::ln(1.0 - p_safe);
        }
        loss /= n as f64;
        loss += 0.5 * L2_PENALTY * w.iter().map(|c| c * c).sum::<f64>();
        for (g, &c) in grad_w.iter_mut().zip(&w) {
            *g = *g / n as f64 + L2_PENALTY * c;
        }
        grad_b /= n as f64;
        for (c, g) in w.iter_mut().zip(&grad_w) {
            *c -= GD_LEARNING_RATE * g;
        }
        b -= GD_LEARNING_RATE * grad_b;
        if math::abs(prev_loss - loss) < GD_LOSS_TOLERANCE {
            break;
        }
        prev_loss = loss;
    }

    TrainedModel {
        weights: w,
        bias: b,
        feat_mean,
        feat_std,
    }
}

impl TrainedModel {
    fn score(&self, row: &[f64]) -> f64 {
        let z = self.bias
            + row
                .iter()
                .enumerate()
                .map(|(d, &x)| (x - self.feat_mean[d]) / self.feat_std[d] * self.weights[d])
                .sum::<f64>();
        sigmoid(z)
    }
}

/// Stratified k-fold cross-validated logistic regression. Folds are
/// assigned round-robin within each shuffled class, every fold is scored
/// by the model trained on the others, and the pooled out-of-fold scores
/// yield one ROC curve and its trapezoid AUC. Deterministic per seed.
pub fn logistic_cv_auc(
    features: &[Vec<f64>],
    labels: &[bool],
    folds: usize,
    seed: u64,
) -> Result<(f64, Vec<(f64, f64)>)> {
    if features.len() != labels.len() {
        return Err(Error::InvalidInput(format!(
            "{} feature rows but {} labels",
            features.len(),
            labels.len()
        )));
    }
    if folds < 2 {
        return Err(Error::InvalidInput("cross-validation needs folds >= 2".into()));
    }
    let dim = features.first().map(|r| r.len()).unwrap_or(0);
    if dim == 0 {
        return Err(Error::InvalidInput("empty feature rows".into()));
    }
    if features.iter().any(|r| r.len() != dim) {
        return Err(Error::InvalidInput("ragged feature rows".into()));
    }
    let pos_count = labels.iter().filter(|&&l| l).count();
    let neg_count = labels.len() - pos_count;
    if pos_count < 2 * folds || neg_count < 2 * folds {
        return Err(Error::InvalidInput(format!(
            "need at least 2 examples per class per fold (folds={folds}, positives={pos_count}, negatives={neg_count})"
        )));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut fold_of = vec![0usize; labels.len()];
    for target in [true, false] {
        let mut idx: Vec<usize> = (0..labels.len()).filter(|&i| labels[i] == target).collect();
        for i in 0..idx.len() {
            let j = rng.random_range(i..idx.len());
            idx.swap(i, j);
        }
        for (pos, &i) in idx.iter().enumerate() {
            fold_of[i] = pos % folds;
        }
    }

    let mut oof_scores = vec![0.0f64; labels.len()];
    for fold in 0..folds {
        let train_rows: Vec<&[f64]> = (0..labels.len())
            .filter(|&i| fold_of[i] != fold)
            .map(|i| features[i].as_slice())
            .collect();
        let train_labels: Vec<bool> = (0..labels.len())
            .filter(|&i| fold_of[i] != fold)
            .map(|i| labels[i])
            .collect();
        let model = train_logistic(&train_rows, &train_labels);
        for i in (0..labels.len()).filter(|&i| fold_of[i] == fold) {
            oof_scores[i] = model.score(&features[i]);
        }
    }

    let roc = roc_points(&oof_scores, labels)?;
    Ok((trapezoid_auc(&roc), roc))
}

/// ROC curve by descending-score threshold sweep with tied scores
/// grouped, from `(0, 0)` to `(1, 1)`. Points are `(fpr, tpr)`. Needs at
/// least one example of each class.
pub fn roc_points(scores: &[f64], labels: &[bool]) -> Result<Vec<(f64, f64)>> {
    if scores.len() != labels.len() {
        return Err(Error::InvalidInput(format!(
            "{} scores but {} labels",
            scores.len(),
            labels.len()
        )));
    }
    let p = labels.iter().filter(|&&l| l).count();
    let n = labels.len() - p;
    if p == 0 || n == 0 {
        return Err(Error::InvalidInput(
            "ROC needs at least one example of each class".into(),
        ));
    }
    let mut order: Vec<usize> = (0..scores.len()).collect();
    order.sort_by(|&a, &b| scores[b].total_cmp(&scores[a]).then(a.cmp(&b)));

    let mut points = Vec::with_capacity(scores.len() + 1);
    points.push((0.0, 0.0));
    let mut tp = 0usize;
    let mut fp = 0usize;
    let mut i = 0usize;
    while i < order.len() {
        let threshold = scores[order[i]];
        while i < order.len() && scores[order[i]] == threshold {
            if labels[order[i]] {
                tp += 1;
            } else {
                fp += 1;
            }
            i += 1;
        }
        points.push((fp as f64 / n as f64, tp as f64 / p as f64));
    }
    Ok(points)
}

/// Area under a curve of `(x, y)` points by the trapezoid rule.
pub fn trapezoid_auc(points: &[(f64, f64)]) -> f64 {
    points
        .windows(2)
        .map(|w| (w[1].0 - w[0].0) * (w[0].1 + w[1].1) / 2.0)
        .sum()
}
