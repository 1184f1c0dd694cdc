//! `aoq`: batch checks for the free orthogonal quantum group `A_o(n)`.
//!
//! Every subcommand prints a JSON report (or writes it to `--report`).
//! Exit status is 0 when all checks pass, 1 when a check fails and 2 on
//! errors.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use aoq_core::frontend::{parse_presentation, run, Check, RunConfig};
use aoq_core::rewriting::BasisDocument;
use aoq_core::resolution::Resolution;
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "aoq", version, about = "Exact checks for the free resolution of A_o(n)")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Seed for all random sampling.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Number of random samples for property checks.
    #[arg(long, global = true, default_value_t = RunConfig::DEFAULT_SAMPLES)]
    samples: usize,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    report: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Complete the A_o(n) relations up to a degree bound.
    Gb {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        degree: usize,
        /// Also write the basis in the JSON exchange format.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Symbolic identities of the resolution.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        degree: usize,
        #[arg(long, value_delimiter = ',', default_value = "complex,comput1,duality,injectivity")]
        checks: Vec<String>,
    },
    /// Homology of the complex with trivial coefficients.
    Homology {
        #[arg(long)]
        n: usize,
    },
    /// Truncated exactness at every position, kernels in degree d - margin.
    Exactness {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value_t = RunConfig::DEFAULT_MARGIN)]
        margin: usize,
    },
    /// Truncated cohomology of the transposed complex.
    Dual {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value_t = RunConfig::DEFAULT_MARGIN)]
        margin: usize,
    },
    /// Normal-word counts per degree, cross-checked by linear algebra.
    Hilbert {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        degree: usize,
    },
    /// Parse a presentation file and print it in canonical form.
    Parse { file: PathBuf },
    /// Run a JSON-encoded run configuration.
    Run { config: PathBuf },
}

fn config(common: &Common, n: usize, degree: usize, checks: Vec<Check>) -> RunConfig {
    let mut c = RunConfig::new(n, degree, checks);
    c.seed = common.seed;
    c.samples = common.samples;
    c.output = common.report.clone();
    c
}

fn execute(cli: Cli) -> Result<bool, Box<dyn std::error::Error>> {
    let common = &cli.common;
    let cfg = match cli.command {
        Command::Parse { file } => {
            let text = fs::read_to_string(&file)?;
            let doc = parse_presentation(&text).map_err(|e| format!("{}:{e}", file.display()))?;
            print!("{doc}");
            return Ok(true);
        }
        Command::Gb { n, degree, out } => {
            if let Some(path) = out {
                let res = Resolution::new(n, degree)?;
                fs::write(path, BasisDocument::from_basis(res.basis()).to_json()?)?;
            }
            config(common, n, degree, vec![Check::Gb])
        }
        Command::Verify { n, degree, checks } => {
            let checks = checks.iter().map(|c| c.parse()).collect::<Result<Vec<Check>, _>>()?;
            config(common, n, degree, checks)
        }
        Command::Homology { n } => config(common, n, 3, vec![Check::Homology]),
        Command::Exactness { n, degree, margin } => {
            let mut c = config(common, n, degree + 1, vec![Check::Exactness]);
            c.window = Some(degree);
            c.margin = margin;
            c
        }
        Command::Dual { n, degree, margin } => {
            let mut c = config(common, n, degree + 1, vec![Check::Dual]);
            c.window = Some(degree);
            c.margin = margin;
            c
        }
        Command::Hilbert { n, degree } => {
            let mut c = config(common, n, degree.max(2), vec![Check::Hilbert]);
            c.window = Some(degree);
            c
        }
        Command::Run { config } => {
            let mut c: RunConfig = serde_json::from_str(&fs::read_to_string(config)?)?;
            if common.report.is_some() {
                c.output = common.report.clone();
            }
            c
        }
    };
    let report = run(&cfg)?;
    let json = report.to_json()?;
    match &cfg.output {
        Some(path) => fs::write(path, json)?,
        None => print!("{json}"),
    }
    Ok(report.passed)
}

fn main() -> ExitCode {
    match execute(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("aoq: {e}");
            ExitCode::from(2)
        }
    }
}
