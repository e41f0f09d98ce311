//! `fbs gen` — seeded planted-partition benchmark graphs.

use std::path::PathBuf;

use clap::Args;
use fbs_core::eval::synth::planted_partition;

use crate::commands::write_file;
use crate::errors::Result;

#[derive(Args)]
pub struct GenArgs {
    /// Number of planted communities.
    #[arg(long)]
    k: usize,
    /// Nodes per community.
    #[arg(long)]
    size: usize,
    /// Edge probability inside a community.
    #[arg(long)]
    p_in: f64,
    /// Edge probability across communities (must be below p-in).
    #[arg(long)]
    p_out: f64,
    /// Generate a directed graph (each ordered pair drawn separately).
    #[arg(long)]
    directed: bool,
    /// Seed for the edge draws.
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Edge-list output path.
    #[arg(short, long)]
    output: PathBuf,
    /// Also write the planted community assignment to this file.
    #[arg(long)]
    communities_out: Option<PathBuf>,
}

pub fn run(args: &GenArgs) -> Result<()> {
    let (graph, comms) = planted_partition(
        args.k,
        args.size,
        args.p_in,
        args.p_out,
        args.directed,
        args.seed,
    )?;
    write_file(&args.output, &graph.to_edge_list())?;
    if let Some(path) = &args.communities_out {
        write_file(path, &comms.to_community_text(&graph))?;
    }
    Ok(())
}
