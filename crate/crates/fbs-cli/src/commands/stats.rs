//! `fbs stats` — structural summary of a graph, optionally scored
//! against a ground-truth community file.

use std::path::PathBuf;

use clap::Args;
use fbs_core::eval::metrics::{modularity, CommunityAssignment};

use crate::commands::write_output;
use crate::errors::{CliError, Result};
use crate::opts::GraphOpts;

#[derive(Args)]
pub struct StatsArgs {
    #[command(flatten)]
    graph: GraphOpts,
    /// Community file; adds modularity, coverage, and community count.
    #[arg(long)]
    communities: Option<PathBuf>,
    /// Emit a JSON object instead of tab-separated key/value lines.
    #[arg(long)]
    json: bool,
    /// Write the report to this file instead of stdout.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

pub fn run(args: &StatsArgs) -> Result<()> {
    let graph = args.graph.load()?;
    let stats = graph.stats();

    let community_block = match &args.communities {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
                path: path.clone(),
                source,
            })?;
            let comms = CommunityAssignment::parse(&text, &graph)?;
            let q = modularity(&graph, &comms.partition()?)?;
            let cpv = comms.cpv()?;
            Some((comms.community_count(), q, cpv))
        }
        None => None,
    };

    let text = if args.json {
        let mut map = serde_json::Map::new();
        map.insert("nodes".into(), stats.node_count.into());
        map.insert("edges".into(), stats.edge_count.into());
        map.insert("directed".into(), graph.is_directed().into());
        map.insert("avg_degree".into(), stats.avg_degree.into());
        map.insert("bridge_fraction".into(), stats.bridge_fraction.into());
        if let Some((count, q, cpv)) = community_block {
            map.insert("communities".into(), count.into());
            map.insert("modularity".into(), q.into());
            map.insert("communities_per_vertex".into(), cpv.into());
        }
        let mut text = serde_json::to_string_pretty(&serde_json::Value::Object(map))
            .expect("stats report serializes");
        text.push('\n');
        text
    } else {
        let mut text = String::new();
        text.push_str(&format!("nodes\t{}\n", stats.node_count));
        text.push_str(&format!("edges\t{}\n", stats.edge_count));
        text.push_str(&format!("directed\t{}\n", graph.is_directed()));
        text.push_str(&format!("avg_degree\t{:.9}\n", stats.avg_degree));
        text.push_str(&format!("bridge_fraction\t{:.9}\n", stats.bridge_fraction));
        if let Some((count, q, cpv)) = community_block {
            text.push_str(&format!("communities\t{count}\n"));
            text.push_str(&format!("modularity\t{q:.9}\n"));
            text.push_str(&format!("communities_per_vertex\t{cpv:.9}\n"));
        }
        text
    };

    write_output(args.output.as_ref(), &text)
}
