//! `fbs eval-linkpred` — cross-validated link-prediction AUC from
//! pairwise similarity features.

use std::path::PathBuf;

use clap::Args;
use fbs_core::eval::linkpred::{
    build_link_prediction_set, logistic_cv_auc, pair_features, PairFeature,
};

use crate::commands::write_output;
use crate::errors::{CliError, Result};
use crate::opts::{AlgoOpts, GraphOpts};

#[derive(Args)]
pub struct EvalLinkpredArgs {
    #[command(flatten)]
    graph: GraphOpts,
    /// Number of existing edges to sample as positives.
    #[arg(long)]
    pos: usize,
    /// Number of absent pairs to sample as negatives.
    #[arg(long)]
    neg: usize,
    /// Feature set to evaluate; repeat the flag to compare several.
    /// Each value is a comma-joined list of: fbs (forward+backward),
    /// ppr (forward only), aa (adamic-adar).
    #[arg(long = "features", default_values_t = [String::from("fbs")])]
    features: Vec<String>,
    #[command(flatten)]
    algo: AlgoOpts,
    /// Stratified cross-validation folds.
    #[arg(long, default_value_t = 5)]
    folds: usize,
    /// Seed for pair sampling and fold shuffling.
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Emit a JSON report (including ROC points) instead of text rows.
    #[arg(long)]
    json: bool,
    /// Write the report to this file instead of stdout.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

pub fn run(args: &EvalLinkpredArgs) -> Result<()> {
    let graph = args.graph.load()?;
    let resolved = args.algo.resolve()?;
    let set = build_link_prediction_set(&graph, args.pos, args.neg, args.seed)?;

    let mut pairs = set.positives.clone();
    pairs.extend_from_slice(&set.negatives);
    let mut labels = vec![true; set.positives.len()];
    labels.extend(std::iter::repeat(false).take(set.negatives.len()));

    let mut text_rows = String::new();
    let mut json_sets = Vec::new();
    for token in &args.features {
        let kinds = parse_feature_token(token)?;
        let features = pair_features(&graph, &pairs, &kinds, &resolved.ppr)?;
        let (auc, roc) = logistic_cv_auc(&features, &labels, args.folds, args.seed)?;
        if args.json {
            let roc: Vec<serde_json::Value> = roc
                .iter()
                .map(|&(fpr, tpr)| serde_json::json!([fpr, tpr]))
                .collect();
            json_sets.push(serde_json::json!({
                "features": token,
                "auc": auc,
                "roc": roc,
            }));
        } else {
            text_rows.push_str(&format!("{token}\t{auc:.9}\n"));
        }
    }

    let text = if args.json {
        let report = serde_json::json!({
            "sets": json_sets,
            "positives": set.positives.len(),
            "negatives": set.negatives.len(),
            "folds": args.folds,
            "seed": args.seed,
        });
        let mut text =
            serde_json::to_string_pretty(&report).expect("link-prediction report serializes");
        text.push('\n');
        text
    } else {
        text_rows
    };
    write_output(args.output.as_ref(), &text)
}

/// Expands a comma-joined feature token into concrete pair features,
/// deduplicated in first-seen order.
fn parse_feature_token(token: &str) -> Result<Vec<PairFeature>> {
    let mut kinds: Vec<PairFeature> = Vec::new();
    for part in token.split(',') {
        let add: &[PairFeature] = match part.trim() {
            "fbs" => &[PairFeature::FbsForward, PairFeature::FbsBackward],
            "ppr" => &[PairFeature::FbsForward],
            "aa" | "adamic-adar" => &[PairFeature::AdamicAdar],
            other => {
                return Err(CliError::Usage(format!(
                    "unknown feature {other:?} in --features {token:?} \
                     (expected fbs, ppr, aa, or adamic-adar)"
                )))
            }
        };
        for &kind in add {
            if !kinds.contains(&kind) {
                kinds.push(kind);
            }
        }
    }
    Ok(kinds)
}
