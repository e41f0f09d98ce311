//! Shared argument groups: graph loading and algorithm parameters, with
//! optional key=value defaults files (explicit flags always win).

use std::fs;
use std::path::PathBuf;

use clap::{Args, ValueEnum};
use fbs_core::baselines::{SalsaConfig, SimRankConfig};
use fbs_core::fbs::{CombinerSpec, FbsConfig};
use fbs_core::graph::{load_edge_list, Graph};
use fbs_core::ppr::PprConfig;

use crate::errors::{CliError, Result};

#[derive(Args, Debug)]
pub struct GraphOpts {
    /// Edge-list file: one `source <tab> target` pair per line, `#` comments
    #[arg(long, short = 'g')]
    pub graph: PathBuf,
    /// Treat edges as directed (default: undirected)
    #[arg(long)]
    pub directed: bool,
}

impl GraphOpts {
    pub fn load(&self) -> Result<Graph> {
        let text = fs::read_to_string(&self.graph).map_err(|source| CliError::Io {
            path: self.graph.clone(),
            source,
        })?;
        Ok(load_edge_list(&text, self.directed)?)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Measure {
    /// Personalized PageRank from the query
    Ppr,
    /// Forward-backward combined similarity
    Fbs,
    /// Personalized SALSA (authority scores)
    Psalsa,
    /// Monte Carlo SimRank
    Simrank,
    /// Adamic-Adar neighborhood overlap
    AdamicAdar,
}

impl Measure {
    pub fn name(self) -> &'static str {
        match self {
            Measure::Ppr => "ppr",
            Measure::Fbs => "fbs",
            Measure::Psalsa => "psalsa",
            Measure::Simrank => "simrank",
            Measure::AdamicAdar => "adamic-adar",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CombinerKind {
    /// Weighted sum: lambda * forward + (1 - lambda) * backward
    Linear,
    /// Saturating squash of both scores before the weighted sum
    Saturation,
}

/// Algorithm flags. Every value is optional so that a `--config` file can
/// supply defaults; an explicit flag beats the file, the file beats the
/// built-in default.
#[derive(Args, Debug)]
pub struct AlgoOpts {
    /// Restart probability of the walk [default: 0.15]
    #[arg(long)]
    pub epsilon: Option<f64>,
    /// L1 residual convergence threshold [default: 1e-6]
    #[arg(long)]
    pub tolerance: Option<f64>,
    /// Iteration cap for fixed-point solvers [default: 1000]
    #[arg(long)]
    pub max_iterations: Option<u32>,
    /// Forward weight of the combiner [default: 0.5 linear, 0.571 saturation]
    #[arg(long)]
    pub lambda: Option<f64>,
    /// How forward and backward scores combine [default: linear]
    #[arg(long, value_enum)]
    pub combiner: Option<CombinerKind>,
    /// Saturation constant for the forward score [default: 0.72]
    #[arg(long)]
    pub k1: Option<f64>,
    /// Saturation constant for the backward score [default: 0.3]
    #[arg(long)]
    pub k2: Option<f64>,
    /// Forward candidate-list size [default: 20]
    #[arg(long)]
    pub n: Option<usize>,
    /// Candidate refinement rounds [default: 1]
    #[arg(long)]
    pub rounds: Option<u32>,
    /// key=value file supplying defaults for the flags above
    #[arg(long)]
    pub config: Option<PathBuf>,
}

/// Fully resolved algorithm parameters.
#[derive(Clone, Debug)]
pub struct Resolved {
    pub ppr: PprConfig,
    /// Explicitly chosen forward weight, if any; `None` means "use the
    /// combiner's default, or sweep where a sweep is defined".
    pub lambda: Option<f64>,
    pub combiner: CombinerKind,
    pub k1: f64,
    pub k2: f64,
    pub n: usize,
    pub rounds: u32,
}

impl Resolved {
    pub fn default_lambda(&self) -> f64 {
        match self.combiner {
            CombinerKind::Linear => 0.5,
            CombinerKind::Saturation => 0.571,
        }
    }

    pub fn combiner_spec(&self, lambda: f64) -> CombinerSpec {
        match self.combiner {
            CombinerKind::Linear => CombinerSpec::Linear { lambda },
            CombinerKind::Saturation => CombinerSpec::Saturation {
                lambda,
                k1: self.k1,
                k2: self.k2,
            },
        }
    }

    pub fn fbs_config(&self, lambda: f64) -> FbsConfig {
        FbsConfig {
            n: self.n,
            rounds: self.rounds,
            ppr: self.ppr.clone(),
            combiner: self.combiner_spec(lambda),
        }
    }

    /// The hub-walk restart probability is the shared reset probability.
    pub fn salsa_config(&self) -> SalsaConfig {
        SalsaConfig {
            alpha: self.ppr.epsilon,
            tolerance: self.ppr.tolerance,
            max_iterations: self.ppr.max_iterations,
        }
    }

    pub fn simrank_config(&self, seed: u64) -> SimRankConfig {
        SimRankConfig {
            seed,
            ..SimRankConfig::default()
        }
    }
}

#[derive(Default)]
struct FileDefaults {
    epsilon: Option<f64>,
    tolerance: Option<f64>,
    max_iterations: Option<u32>,
    lambda: Option<f64>,
    combiner: Option<CombinerKind>,
    k1: Option<f64>,
    k2: Option<f64>,
    n: Option<usize>,
    rounds: Option<u32>,
}

fn parse_config_file(path: &PathBuf) -> Result<FileDefaults> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.clone(),
        source,
    })?;
    let mut out = FileDefaults::default();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = |what: &str| {
            CliError::Usage(format!(
                "{}:{}: {what}: {line:?}",
                path.display(),
                lineno + 1
            ))
        };
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| bad("expected key=value"))?;
        let (key, value) = (key.trim(), value.trim());
        macro_rules! num {
            ($slot:ident) => {{
                if out.$slot.is_some() {
                    return Err(bad("duplicate key"));
                }
                out.$slot = Some(value.parse().map_err(|_| bad("invalid value"))?);
            }};
        }
        match key {
            "epsilon" => num!(epsilon),
            "tolerance" => num!(tolerance),
            "max_iterations" => num!(max_iterations),
            "lambda" => num!(lambda),
            "k1" => num!(k1),
            "k2" => num!(k2),
            "n" => num!(n),
            "rounds" => num!(rounds),
            "combiner" => {
                if out.combiner.is_some() {
                    return Err(bad("duplicate key"));
                }
                out.combiner = Some(match value {
                    "linear" => CombinerKind::Linear,
                    "saturation" => CombinerKind::Saturation,
                    _ => return Err(bad("combiner must be linear or saturation")),
                });
            }
            _ => return Err(bad("unknown config key")),
        }
    }
    Ok(out)
}

impl AlgoOpts {
    pub fn resolve(&self) -> Result<Resolved> {
        let file = match &self.config {
            Some(path) => parse_config_file(path)?,
            None => FileDefaults::default(),
        };
        let defaults = PprConfig::default();
        let resolved = Resolved {
            ppr: PprConfig {
                epsilon: self.epsilon.or(file.epsilon).unwrap_or(defaults.epsilon),
                tolerance: self
                    .tolerance
                    .or(file.tolerance)
                    .unwrap_or(defaults.tolerance),
                max_iterations: self
                    .max_iterations
                    .or(file.max_iterations)
                    .unwrap_or(defaults.max_iterations),
            },
            lambda: self.lambda.or(file.lambda),
            combiner: self.combiner.or(file.combiner).unwrap_or(CombinerKind::Linear),
            k1: self.k1.or(file.k1).unwrap_or(0.72),
            k2: self.k2.or(file.k2).unwrap_or(0.3),
            n: self.n.or(file.n).unwrap_or(20),
            rounds: self.rounds.or(file.rounds).unwrap_or(1),
        };
        Ok(resolved)
    }
}
