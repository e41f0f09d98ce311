//! `fbs eval-community` — MAJ@k curves: how well each measure's top-k
//! lists overlap the query node's ground-truth communities.

use std::path::PathBuf;

use clap::Args;
use fbs_core::baselines::{adamic_adar_scores, psalsa, simrank_mc};
use fbs_core::fbs::fbs_query;
use fbs_core::graph::{Graph, NodeId};
use fbs_core::eval::metrics::{maj_at_k, CommunityAssignment};
use fbs_core::ppr::{ppr, rank_scores};

use crate::commands::{sample_queries, write_output};
use crate::errors::{CliError, Result};
use crate::opts::{AlgoOpts, CombinerKind, GraphOpts, Measure, Resolved};

/// Lambda grid swept for FBS curves when no lambda is pinned by flag or
/// config file: backward-heavy, balanced, and forward-heavy mixes.
const LAMBDA_SWEEP: [f64; 3] = [0.05, 0.5, 0.95];

#[derive(Args)]
pub struct EvalCommunityArgs {
    #[command(flatten)]
    graph: GraphOpts,
    /// Ground-truth community file (node label, tab, comma-joined names).
    #[arg(long)]
    communities: PathBuf,
    /// Measure to evaluate; repeat the flag to compare several.
    #[arg(long = "measure", value_enum, default_values_t = [Measure::Ppr, Measure::Fbs])]
    measures: Vec<Measure>,
    #[command(flatten)]
    algo: AlgoOpts,
    /// Number of query nodes to sample (seeded; whole graph if larger).
    #[arg(long, default_value_t = 100)]
    samples: usize,
    /// Curve depth: MAJ@k is reported for every k from 1 to this.
    #[arg(long, default_value_t = 10)]
    k: usize,
    /// Seed for query sampling and randomized measures.
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Emit a JSON report instead of tab-separated rows.
    #[arg(long)]
    json: bool,
    /// Write the report to this file instead of stdout.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

struct Curve {
    measure: Measure,
    lambda: Option<f64>,
    /// `(k, maj@k)` for k = 1..=depth.
    points: Vec<(usize, f64)>,
    skipped: usize,
}

pub fn run(args: &EvalCommunityArgs) -> Result<()> {
    if args.k == 0 {
        return Err(CliError::Usage("--k must be at least 1".into()));
    }
    let graph = args.graph.load()?;
    let text = std::fs::read_to_string(&args.communities).map_err(|source| CliError::Io {
        path: args.communities.clone(),
        source,
    })?;
    let comms = CommunityAssignment::parse(&text, &graph)?;
    let resolved = args.algo.resolve()?;
    let queries = sample_queries(graph.node_count(), args.samples, args.seed);

    let mut curves = Vec::new();
    for &measure in &args.measures {
        let lambdas: Vec<Option<f64>> = if measure == Measure::Fbs {
            match resolved.lambda {
                Some(l) => vec![Some(l)],
                // No pinned lambda with the plain linear mix: sweep the
                // grid so the report contrasts backward- and
                // forward-heavy scoring.
                None if resolved.combiner == CombinerKind::Linear => {
                    LAMBDA_SWEEP.iter().map(|&l| Some(l)).collect()
                }
                None => vec![Some(resolved.default_lambda())],
            }
        } else {
            vec![None]
        };

        for lambda in lambdas {
            let mut rankings = Vec::with_capacity(queries.len());
            for &q in &queries {
                rankings.push(ranking_ids(&graph, q, measure, &resolved, lambda, args)?);
            }
            let mut points = Vec::with_capacity(args.k);
            let mut skipped = 0;
            for k in 1..=args.k {
                let (maj, skip) = maj_at_k(&queries, &rankings, &comms, k)?;
                points.push((k, maj));
                skipped = skip;
            }
            curves.push(Curve {
                measure,
                lambda,
                points,
                skipped,
            });
        }
    }

    let text = if args.json {
        render_json(&curves, args, queries.len())
    } else {
        render_text(&curves)
    };
    write_output(args.output.as_ref(), &text)
}

/// Top-k node ids for one query under one measure.
fn ranking_ids(
    graph: &Graph,
    q: NodeId,
    measure: Measure,
    resolved: &Resolved,
    lambda: Option<f64>,
    args: &EvalCommunityArgs,
) -> Result<Vec<NodeId>> {
    let mut ids: Vec<NodeId> = match measure {
        Measure::Fbs => {
            let lambda = lambda.unwrap_or_else(|| resolved.default_lambda());
            fbs_query(graph, q, &resolved.fbs_config(lambda))?
                .candidates
                .iter()
                .map(|c| c.node)
                .collect()
        }
        Measure::Ppr => ids_of(ppr(graph, q, &resolved.ppr)?.ranked(false)),
        Measure::Psalsa => ids_of(psalsa(graph, q, &resolved.salsa_config())?.ranked(false)),
        Measure::Simrank => {
            ids_of(simrank_mc(graph, q, &resolved.simrank_config(args.seed))?.ranked(false))
        }
        Measure::AdamicAdar => ids_of(rank_scores(&adamic_adar_scores(graph, q)?, false)),
    };
    ids.truncate(args.k);
    Ok(ids)
}

fn ids_of(ranked: Vec<(NodeId, f64)>) -> Vec<NodeId> {
    ranked.into_iter().map(|(id, _)| id).collect()
}

fn render_text(curves: &[Curve]) -> String {
    let mut out = String::new();
    for curve in curves {
        let lambda = match curve.lambda {
            Some(l) => format!("{l:.3}"),
            None => "-".to_string(),
        };
        for &(k, maj) in &curve.points {
            out.push_str(&format!(
                "{}\t{}\t{}\t{:.9}\t{}\n",
                curve.measure.name(),
                lambda,
                k,
                maj,
                curve.skipped
            ));
        }
    }
    out
}

fn render_json(curves: &[Curve], args: &EvalCommunityArgs, sampled: usize) -> String {
    let curves: Vec<serde_json::Value> = curves
        .iter()
        .map(|curve| {
            let points: Vec<serde_json::Value> = curve
                .points
                .iter()
                .map(|&(k, maj)| serde_json::json!({ "k": k, "maj": maj }))
                .collect();
            serde_json::json!({
                "measure": curve.measure.name(),
                "lambda": curve.lambda,
                "skipped": curve.skipped,
                "points": points,
            })
        })
        .collect();
    let report = serde_json::json!({
        "curves": curves,
        "samples": sampled,
        "k": args.k,
        "seed": args.seed,
    });
    let mut text = serde_json::to_string_pretty(&report).expect("community report serializes");
    text.push('\n');
    text
}
