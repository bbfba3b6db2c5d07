use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use swcorr_cli::config::RunConfig;
use swcorr_cli::error::CliError;
use swcorr_cli::export::{orbit_table, symbol_table};
use swcorr_cli::suites::run_suites;

/// Verification suites and symbol exports for Stratonovich-Weyl
/// correspondences on the Heisenberg and motion groups.
#[derive(Parser)]
#[command(name = "swcorr", version)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// JSON config file; flags override its values.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[arg(long, global = true)]
    lambda: Option<f64>,
    /// Complex dimension of the Heisenberg suites (1 or 2).
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Fock truncation degree.
    #[arg(long, global = true)]
    cutoff: Option<usize>,
    /// Compact factor: su2 or u1.
    #[arg(long, global = true)]
    group: Option<String>,
    /// Spin of the su2 factor.
    #[arg(long, global = true)]
    j: Option<f64>,
    /// Character of the u1 factor.
    #[arg(long, global = true, allow_negative_numbers = true)]
    charge: Option<i32>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Multiplier applied to every tolerance.
    #[arg(long, global = true)]
    tol_scale: Option<f64>,
    #[arg(long, global = true)]
    plane_order: Option<usize>,
    #[arg(long, global = true)]
    sphere_order: Option<usize>,
    /// Output file; `verify` writes to standard output when omitted.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites and emit a JSON report.
    Verify {
        /// Comma-separated suites: fock, heisenberg, berezin, weyl0, compact,
        /// motion. All of them when omitted.
        #[arg(long, value_delimiter = ',')]
        suites: Vec<String>,
    },
    /// Sample a symbol on a grid and write CSV.
    #[command(after_help = OPERATOR_HELP)]
    Symbol {
        /// berezin or weyl.
        #[arg(long, default_value = "weyl")]
        target: String,
        /// Operator specification, see below.
        #[arg(long)]
        operator: String,
        /// Samples per axis (n = 1) or square root of the sample count.
        #[arg(long, default_value_t = 11)]
        points: usize,
        /// Half-width of the sampled box; defaults to 2√λ.
        #[arg(long)]
        radius: Option<f64>,
    },
    /// Sample the moment map and its equivariance residual and write CSV.
    Orbit {
        #[arg(long, default_value_t = 20)]
        count: usize,
    },
}

const OPERATOR_HELP: &str = "Operator specifications:
  identity                       the identity
  E p q                          matrix unit |e_p><e_q|, e.g. 'E 1 0'
  A p q                          z^p (d/dz)^q, e.g. 'A 1 1'
  dpi0 X1,Y2,Z                   dpi0 of a sum of Heisenberg generators
  dpi v=<vec> c=<real> A=<mat>   dpi of a motion algebra element
  tensor(<fock-spec>, <mat>)     elementary tensor on the product space
Multi-indices are comma separated (1,0). Complex numbers are re or re:im.
Matrices are [a,b;c,d].";

fn config(common: &Common) -> Result<RunConfig, CliError> {
    let mut cfg = match &common.config {
        Some(path) => RunConfig::from_file(path)?,
        None => RunConfig::default(),
    };
    if let Some(v) = common.lambda {
        cfg.lambda = v;
    }
    if let Some(v) = common.n {
        cfg.n = v;
    }
    if let Some(v) = common.cutoff {
        cfg.cutoff = v;
    }
    if let Some(v) = &common.group {
        cfg.group = v.clone();
    }
    if let Some(v) = common.j {
        cfg.j = v;
    }
    if let Some(v) = common.charge {
        cfg.charge = v;
    }
    if let Some(v) = common.seed {
        cfg.seed = v;
    }
    if let Some(v) = common.tol_scale {
        cfg.tol_scale = v;
    }
    if let Some(v) = common.plane_order {
        cfg.plane_order = v;
    }
    if let Some(v) = common.sphere_order {
        cfg.sphere_order = v;
    }
    cfg.validated()
}

fn required_out(common: &Common) -> Result<&PathBuf, CliError> {
    common
        .out
        .as_ref()
        .ok_or_else(|| CliError::Config("--out is required for this command".into()))
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    let cfg = config(&cli.common)?;
    match cli.command {
        Command::Verify { suites } => {
            let report = run_suites(&cfg, &suites)?;
            let json = report.to_json();
            match &cli.common.out {
                Some(path) => std::fs::write(path, json + "\n")
                    .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?,
                None => println!("{json}"),
            }
            for c in report.failures() {
                eprintln!(
                    "FAIL {}: value {:e} tolerance {:e}{}",
                    c.check,
                    c.value,
                    c.tolerance,
                    c.note.as_deref().map(|n| format!(" ({n})")).unwrap_or_default()
                );
            }
            Ok(if report.passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Symbol {
            target,
            operator,
            points,
            radius,
        } => {
            let out = required_out(&cli.common)?;
            let radius = radius.unwrap_or(2.0 * cfg.lambda.sqrt());
            symbol_table(&cfg, &target, &operator, points, radius)?.write(out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Orbit { count } => {
            let out = required_out(&cli.common)?;
            orbit_table(&cfg, count)?.write(out)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
