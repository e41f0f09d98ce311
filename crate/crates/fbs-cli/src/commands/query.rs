//! `fbs query` — rank nodes by similarity to a query node under one of
//! the supported measures.

use std::path::PathBuf;

use clap::Args;
use fbs_core::baselines::{adamic_adar_scores, psalsa, simrank_mc};
use fbs_core::fbs::fbs_query;
use fbs_core::graph::Graph;
use fbs_core::ppr::{ppr, ScoreMap};

use crate::commands::write_output;
use crate::errors::Result;
use crate::opts::{AlgoOpts, GraphOpts, Measure};

#[derive(Args)]
pub struct QueryArgs {
    #[command(flatten)]
    graph: GraphOpts,
    /// Label of the query node.
    #[arg(short, long)]
    query: String,
    /// Similarity measure to rank with.
    #[arg(long, value_enum)]
    measure: Measure,
    #[command(flatten)]
    algo: AlgoOpts,
    /// Number of top-ranked rows to report.
    #[arg(long, default_value_t = 10)]
    k: usize,
    /// Keep zero-scored nodes in the ranking instead of dropping them.
    #[arg(long)]
    include_zero: bool,
    /// Seed for randomized measures (simrank).
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Emit a JSON report instead of tab-separated rows.
    #[arg(long)]
    json: bool,
    /// Write the ranking to this file instead of stdout.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

pub fn run(args: &QueryArgs) -> Result<()> {
    let graph = args.graph.load()?;
    let q = graph.node_by_label(&args.query)?;
    let resolved = args.algo.resolve()?;
    let k = Some(args.k);

    let text = match args.measure {
        Measure::Fbs => {
            let lambda = resolved.lambda.unwrap_or_else(|| resolved.default_lambda());
            let result = fbs_query(&graph, q, &resolved.fbs_config(lambda))?;
            if args.json {
                fbs_json(&graph, &result, args)
            } else {
                result.to_tsv(&graph, k, args.include_zero)
            }
        }
        measure => {
            let scores = match measure {
                Measure::Ppr => ppr(&graph, q, &resolved.ppr)?,
                Measure::Psalsa => psalsa(&graph, q, &resolved.salsa_config())?,
                Measure::Simrank => simrank_mc(&graph, q, &resolved.simrank_config(args.seed))?,
                Measure::AdamicAdar => ScoreMap {
                    query: q,
                    scores: adamic_adar_scores(&graph, q)?,
                },
                Measure::Fbs => unreachable!("handled above"),
            };
            if args.json {
                score_map_json(&graph, &scores, args)
            } else {
                scores.to_tsv(&graph, k, args.include_zero)
            }
        }
    };

    write_output(args.output.as_ref(), &text)
}

fn score_map_json(graph: &Graph, scores: &ScoreMap, args: &QueryArgs) -> String {
    let mut ranked = scores.ranked(args.include_zero);
    ranked.truncate(args.k);
    let rows: Vec<serde_json::Value> = ranked
        .iter()
        .map(|&(node, score)| {
            serde_json::json!({ "label": graph.label_of(node), "score": score })
        })
        .collect();
    render_json(&args.query, args.measure, rows)
}

fn fbs_json(graph: &Graph, result: &fbs_core::fbs::FbsResult, args: &QueryArgs) -> String {
    let rows: Vec<serde_json::Value> = result
        .rows(graph.node_count(), Some(args.k), args.include_zero)
        .iter()
        .map(|c| {
            serde_json::json!({
                "label": graph.label_of(c.node),
                "forward": c.forward,
                "backward": c.backward,
                "combined": c.combined,
            })
        })
        .collect();
    render_json(&args.query, args.measure, rows)
}

fn render_json(query: &str, measure: Measure, rows: Vec<serde_json::Value>) -> String {
    let report = serde_json::json!({
        "query": query,
        "measure": measure.name(),
        "rows": rows,
    });
    let mut text = serde_json::to_string_pretty(&report).expect("query report serializes");
    text.push('\n');
    text
}
