//! `fbs` — command-line front end for the graph similarity toolkit.
//!
//! Subcommands:
//! * `stats`          — structural summary of an edge-list graph
//! * `query`          — rank nodes by similarity to a query node
//! * `eval-community` — community-overlap quality of ranked lists (MAJ@k curves)
//! * `eval-linkpred`  — link-prediction AUC from pairwise similarity features
//! * `gen`            — generate a seeded planted-partition benchmark graph

mod commands;
mod errors;
mod opts;

use std::process::ExitCode;

use clap::Parser;

/// Graph similarity search over directed and undirected edge lists:
/// random-walk similarity measures, classic baselines, and evaluation
/// harnesses for community overlap and link prediction.
#[derive(Parser)]
#[command(name = "fbs", version, propagate_version = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Subcommand)]
enum Command {
    /// Print structural statistics of a graph (optionally with community quality).
    Stats(commands::stats::StatsArgs),
    /// Rank nodes by similarity to a query node under a chosen measure.
    Query(commands::query::QueryArgs),
    /// Score ranked lists against ground-truth communities (MAJ@k curves).
    EvalCommunity(commands::eval_community::EvalCommunityArgs),
    /// Cross-validated link-prediction AUC from pairwise similarity features.
    EvalLinkpred(commands::eval_linkpred::EvalLinkpredArgs),
    /// Generate a seeded planted-partition graph as an edge list.
    Gen(commands::gen::GenArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Stats(args) => commands::stats::run(&args),
        Command::Query(args) => commands::query::run(&args),
        Command::EvalCommunity(args) => commands::eval_community::run(&args),
        Command::EvalLinkpred(args) => commands::eval_linkpred::run(&args),
        Command::Gen(args) => commands::gen::run(&args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
