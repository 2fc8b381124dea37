//! `bispinor`: grid sweeps of boosted two-particle entanglement and the
//! built-in acceptance checks.
//!
//! Exit codes: 0 success, 1 invalid input or failed run, 2 acceptance
//! failure.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use bispinor::sweep::{emit, run_sweep, run_sweep_with_workers, SweepConfig};
use bispinor::verify::Verifier;
use clap::{Args, Parser, Subcommand};

const EXIT_INVALID: u8 = 1;
const EXIT_ACCEPTANCE: u8 = 2;

#[derive(Parser)]
#[command(name = "bispinor", version, about = "Dirac bispinor entanglement under Lorentz boosts")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep boost rapidity and direction, emitting CSV or JSON.
    Sweep(Box<SweepArgs>),
    /// Run the acceptance checks.
    Verify {
        /// Print a machine-readable JSON summary.
        #[arg(long)]
        json: bool,
    },
}

/// Every flag overrides the same key from `--config`.
#[derive(Args)]
struct SweepArgs {
    /// Line-oriented key=value file (keys match the long flag names).
    #[arg(long)]
    config: Option<PathBuf>,
    /// psi1, psi2, psi3, chiral-psi2, chiral-psi3 or custom.
    #[arg(long)]
    scenario: Option<String>,
    /// Rapidity of the initial momenta.
    #[arg(long)]
    omega0: Option<String>,
    #[arg(long)]
    mass: Option<String>,
    /// Boost rapidity grid, min:max:steps.
    #[arg(long)]
    omega: Option<String>,
    /// Boost angle grid from e_z towards e_x in radians, min:max:steps.
    #[arg(long)]
    theta: Option<String>,
    /// Comma-separated subset of eg,delta_eg,negativity,delta_negativity,bloch.
    #[arg(long)]
    measures: Option<String>,
    /// csv or json.
    #[arg(long)]
    format: Option<String>,
    /// Chirality labels f,g for the chiral scenarios.
    #[arg(long)]
    chiral: Option<String>,
    /// Custom term re,im,sA,omega0A,dirA,sB,omega0B,dirB (repeatable).
    #[arg(long = "term", allow_hyphen_values = true)]
    terms: Vec<String>,
    /// Fixed boost direction x,y,z replacing the theta grid.
    #[arg(long, allow_hyphen_values = true)]
    direction: Option<String>,
    /// Worker threads (default: all cores).
    #[arg(long)]
    workers: Option<usize>,
    /// Output file (default: stdout).
    #[arg(long)]
    out: Option<PathBuf>,
}

impl SweepArgs {
    fn config(&self) -> bispinor::Result<SweepConfig> {
        let mut cfg = SweepConfig::default();
        if let Some(path) = &self.config {
            cfg.apply_file(path)?;
        }
        let flags = [
            ("scenario", &self.scenario),
            ("omega0", &self.omega0),
            ("mass", &self.mass),
            ("omega", &self.omega),
            ("theta", &self.theta),
            ("measures", &self.measures),
            ("format", &self.format),
            ("chiral", &self.chiral),
            ("direction", &self.direction),
        ];
        for (key, value) in flags {
            if let Some(v) = value {
                cfg.set(key, v)?;
            }
        }
        if !self.terms.is_empty() {
            cfg.custom_terms.clear();
            for t in &self.terms {
                cfg.set("term", t)?;
            }
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

fn sweep(args: &SweepArgs) -> Result<(), String> {
    let cfg = args.config().map_err(|e| e.to_string())?;
    let rows = match args.workers {
        Some(n) => run_sweep_with_workers(&cfg, n),
        None => run_sweep(&cfg),
    }
    .map_err(|e| e.to_string())?;
    let mut buf = Vec::new();
    emit(&rows, cfg.output_format, &mut buf).map_err(|e| e.to_string())?;
    match &args.out {
        Some(path) => fs::write(path, &buf).map_err(|e| format!("writing {}: {e}", path.display())),
        None => io::stdout().write_all(&buf).map_err(|e| e.to_string()),
    }
}

fn verify(json: bool) -> ExitCode {
    let report = Verifier::new().run();
    if json {
        println!("{}", report.to_json());
    } else {
        for check in &report.checks {
            println!("{check}");
        }
        let passed = report.checks.iter().filter(|c| c.passed).count();
        println!("{passed} of {} checks passed", report.checks.len());
    }
    if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_ACCEPTANCE)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_INVALID)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match cli.command {
        Command::Sweep(args) => match sweep(&args) {
            Ok(()) => ExitCode::SUCCESS,
            Err(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(EXIT_INVALID)
            }
        },
        Command::Verify { json } => verify(json),
    }
}
