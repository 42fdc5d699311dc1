//! Command-line front end.
//!
//! Exit codes: 0 on success, 2 on usage errors and graphs that cannot be
//! loaded, 1 when a computation fails.

use std::ffi::OsString;
use std::io::Write;
use std::path::Path;

use clap::{Parser, ValueEnum};
use gsbound_core::bounds::{
    best_bipartite_lower_bound, bipartite_entanglement, max_independent_set,
};
use gsbound_core::named::named_graph;
use gsbound_core::optimize::{
    entanglement_bounds_report, optimize_product_fidelity, optimize_symmetric,
};
use gsbound_core::state::{amplitude, symmetric_coefficients, verify_stabilizer};
use gsbound_core::{Error, Graph, OptimizerConfig, VertexSet};
use serde_json::Value;

use crate::format::{parse_graph, ParseError};
use crate::report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Lower and upper bounds, with an exactness verdict.
    Report,
    /// Maximum independent set and the bound n - |A|.
    Mis,
    /// Cut rank for --partition, or the best over all cuts.
    Rank,
    /// Symmetric-ansatz coefficients c_0..c_n.
    Coeffs,
    /// General multi-start product-state search.
    Optimize,
    /// Symmetric-ansatz fidelity maximization.
    Symmetric,
    /// Stabilizer and normalization self-check.
    Verify,
}

#[derive(Debug, Parser)]
#[command(name = "gsbound", version, about = "Entanglement bounds for graph states")]
pub struct Cli {
    #[arg(value_enum)]
    pub command: Command,

    /// Named graph (ring:k, star:k, edgeless:k, petersen, code613) or a file path.
    #[arg(long)]
    pub graph: String,

    /// Emit a single JSON object.
    #[arg(long)]
    pub json: bool,

    /// Comma-separated 1-based vertices on one side of the cut (rank only).
    #[arg(long, value_delimiter = ',')]
    pub partition: Option<Vec<usize>>,

    /// Random starts for the general search.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub starts: Option<u64>,

    /// Seed for the random starts.
    #[arg(long)]
    pub seed: Option<u64>,

    /// Grid points per axis for the symmetric scan.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub grid: Option<u64>,
}

impl Cli {
    fn config(&self) -> OptimizerConfig {
        let mut cfg = OptimizerConfig::default();
        if let Some(s) = self.starts {
            cfg.starts = s as usize;
        }
        if let Some(seed) = self.seed {
            cfg.seed = seed;
        }
        if let Some(g) = self.grid {
            cfg.grid_p = g as usize;
            cfg.grid_phi = g as usize;
        }
        cfg
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read graph file `{path}`: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("graph `{name}`: {source}")]
    Named { name: String, source: Error },
    #[error("{0}")]
    Compute(#[from] Error),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Compute(_) => 1,
            _ => 2,
        }
    }
}

/// Named graphs take precedence; anything else is read as a file.
fn resolve_graph(source: &str) -> Result<Graph, CliError> {
    match named_graph(source) {
        Ok(g) => Ok(g),
        Err(Error::UnknownGraph(_)) => {
            let text = std::fs::read_to_string(Path::new(source)).map_err(|e| CliError::Read {
                path: source.to_string(),
                source: e,
            })?;
            parse_graph(&text).map_err(|e| CliError::Parse {
                path: source.to_string(),
                source: e,
            })
        }
        Err(e) => Err(CliError::Named {
            name: source.to_string(),
            source: e,
        }),
    }
}

fn partition_set(vertices: &[usize], n: usize) -> Result<VertexSet, CliError> {
    let mut side = VertexSet::EMPTY;
    for &v in vertices {
        if v == 0 || v > n {
            return Err(CliError::Usage(format!(
                "--partition: vertex `{v}` out of range 1..={n}"
            )));
        }
        if side.contains(v - 1) {
            return Err(CliError::Usage(format!("--partition: vertex `{v}` repeated")));
        }
        side.insert(v - 1);
    }
    Ok(side)
}

enum Output {
    Json(Value),
    Text(String),
}

fn execute(cli: &Cli) -> Result<(Output, i32), CliError> {
    if cli.partition.is_some() && cli.command != Command::Rank {
        return Err(CliError::Usage(
            "`--partition` is only valid with `rank`".to_string(),
        ));
    }
    let g = resolve_graph(&cli.graph)?;
    let n = g.n();
    let cfg = cli.config();
    let json = cli.json;
    let out = match cli.command {
        Command::Report => {
            let r = entanglement_bounds_report(&g, &cfg)?;
            if json {
                Output::Json(report::bounds_json(&g, &r))
            } else {
                Output::Text(report::bounds_text(&g, &r))
            }
        }
        Command::Mis => {
            let r = max_independent_set(&g);
            if json {
                Output::Json(report::mis_json(&r, n))
            } else {
                Output::Text(report::mis_text(&r, n))
            }
        }
        Command::Rank => {
            let r = match &cli.partition {
                Some(vs) => bipartite_entanglement(&g, partition_set(vs, n)?)?,
                None => best_bipartite_lower_bound(&g)?,
            };
            if json {
                Output::Json(report::rank_json(&r))
            } else {
                Output::Text(format!("{}\n", r.ebits))
            }
        }
        Command::Coeffs => {
            let c = symmetric_coefficients(&g);
            if json {
                Output::Json(report::coeffs_json(&c))
            } else {
                Output::Text(format!("{c}\n"))
            }
        }
        Command::Optimize => {
            let r = optimize_product_fidelity(&g, &cfg)?;
            if json {
                Output::Json(report::product_json(&r, n))
            } else {
                Output::Text(report::product_text(&r, n))
            }
        }
        Command::Symmetric => {
            let r = optimize_symmetric(&g, &cfg)?;
            if json {
                Output::Json(report::symmetric_json(&r))
            } else {
                Output::Text(report::symmetric_text(&r))
            }
        }
        Command::Verify => {
            let failed: Vec<usize> = (0..n).filter(|&a| !verify_stabilizer(&g, a)).collect();
            let norm: f64 = (0..1u32 << n)
                .map(|bits| amplitude(&g, VertexSet::from_bits(bits)).powi(2))
                .sum();
            let failed_1: Vec<usize> = failed.iter().map(|a| a + 1).collect();
            let body = if json {
                Output::Json(serde_json::json!({
                    "stabilizers": n,
                    "failed": failed_1,
                    "normalization": report::sig12(norm),
                }))
            } else {
                let mut s = format!("stabilizers checked: {n}\nnormalization: {norm:.12}\n");
                for a in &failed_1 {
                    s.push_str(&format!("stabilizer K_{a} FAILED\n"));
                }
                Output::Text(s)
            };
            // Output is still printed on failure, with exit code 1.
            let code = if failed.is_empty() { 0 } else { 1 };
            return Ok((body, code));
        }
    };
    Ok((out, 0))
}

/// Runs one invocation, writing results to `out` and diagnostics to `err`.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    match execute(&cli) {
        Ok((Output::Json(v), code)) => {
            let _ = writeln!(out, "{}", serde_json::to_string(&v).expect("serializable"));
            code
        }
        Ok((Output::Text(s), code)) => {
            let _ = write!(out, "{s}");
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
