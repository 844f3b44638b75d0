//! Command-line front end for the line-circle quadratic solver.
//!
//! Exit codes: 0 success, 1 usage or internal error, 2 degenerate input,
//! 3 verification failure.

pub mod batch;
pub mod literal;
pub mod report;
pub mod svg;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use lc_core::{Complex, LcError, QuadraticCoefficients, SolverConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DEGENERATE: i32 = 2;
pub const EXIT_VERIFY_FAILED: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "lcq", version, about = "Roots of x^2 + c1 x + c2 as line-circle intersections")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub tol: TolArgs,
}

#[derive(Debug, Args)]
pub struct TolArgs {
    /// Root residual bound, relative to max(|c2|, 1).
    #[arg(long, global = true, value_parser = positive_f64)]
    pub tol_root: Option<f64>,
    /// Degeneracy classification threshold, relative to max(|c1|^2, |c2|, 1).
    #[arg(long, global = true, value_parser = positive_f64)]
    pub tol_degenerate: Option<f64>,
    /// Collinearity threshold for the circle fit, relative to |w1|·|w2|.
    #[arg(long, global = true, value_parser = positive_f64)]
    pub tol_collinear: Option<f64>,
}

#[derive(Debug, Args)]
pub struct Coefficients {
    /// Linear coefficient, e.g. "-1-7i".
    #[arg(long, allow_hyphen_values = true, value_parser = complex_literal)]
    pub c1: Complex,
    /// Constant coefficient, e.g. "-18+1i".
    #[arg(long, allow_hyphen_values = true, value_parser = complex_literal)]
    pub c2: Complex,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve one quadratic and print the construction and roots.
    Solve {
        #[command(flatten)]
        coeffs: Coefficients,
        /// Print the JSON report instead of a table.
        #[arg(long)]
        json: bool,
        /// Skip Newton polishing of the intersections.
        #[arg(long)]
        no_polish: bool,
    },
    /// Draw the line and circle for one quadratic as SVG.
    Figure {
        #[command(flatten)]
        coeffs: Coefficients,
        #[arg(long)]
        out: PathBuf,
        /// Image width in pixels.
        #[arg(long, default_value_t = 800, value_parser = clap::value_parser!(u32).range(1..))]
        width: u32,
    },
    /// Check the geometric properties over seeded random instances.
    Verify {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, default_value_t = 10.0, value_parser = positive_f64)]
        scale: f64,
    },
    /// Compare the LC solver with the direct formula over seeded random instances.
    Batch {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, default_value_t = 10.0, value_parser = positive_f64)]
        scale: f64,
        /// Generate instances close to the degeneracy boundaries.
        #[arg(long)]
        near_degenerate: bool,
        /// Also write the statistics JSON here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads; defaults to the available parallelism.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        workers: Option<u64>,
        #[arg(long)]
        no_polish: bool,
    },
}

fn complex_literal(s: &str) -> Result<Complex, String> {
    literal::parse_complex(s).map_err(|e| e.to_string())
}

fn positive_f64(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
        _ => Err(format!("expected a positive number, got {s:?}")),
    }
}

impl TolArgs {
    fn apply(&self, mut config: SolverConfig) -> SolverConfig {
        if let Some(v) = self.tol_root {
            config.tol.root = v;
        }
        if let Some(v) = self.tol_degenerate {
            config.tol.degenerate = v;
        }
        if let Some(v) = self.tol_collinear {
            config.tol.collinear = v;
        }
        config
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn coefficients(c: &Coefficients) -> Result<QuadraticCoefficients, LcError> {
    QuadraticCoefficients::new(c.c1, c.c2)
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Box<dyn std::error::Error>> {
    let base = cli.tol.apply(SolverConfig::default());
    match &cli.command {
        Command::Solve { coeffs, json, no_polish } => {
            let config = SolverConfig {
                polish: !no_polish,
                ..base
            };
            let outcome = report::run_solve(&coefficients(coeffs)?, &config);
            if *json {
                writeln!(out, "{}", serde_json::to_string_pretty(&outcome.report)?)?;
            } else {
                write!(out, "{}", report::render_table(&outcome.report))?;
            }
            Ok(outcome.exit_code)
        }
        Command::Figure { coeffs, out: path, width } => {
            let coeffs = coefficients(coeffs)?;
            match svg::render_figure(&coeffs, &base, *width) {
                Ok(fig) => {
                    std::fs::write(path, fig.svg)?;
                    writeln!(out, "wrote {}", path.display())?;
                    Ok(EXIT_OK)
                }
                Err(e @ LcError::DegenerateInput(_)) => {
                    writeln!(err, "error: {e}")?;
                    Ok(EXIT_DEGENERATE)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Verify { seed, trials, scale } => {
            let summary = verify::run_verify(*seed, *trials, *scale, &base);
            write!(out, "{}", verify::render_summary(*seed, &summary))?;
            Ok(if summary.passed() { EXIT_OK } else { EXIT_VERIFY_FAILED })
        }
        Command::Batch {
            seed,
            trials,
            scale,
            near_degenerate,
            out: path,
            workers,
            no_polish,
        } => {
            let workers = match workers {
                Some(w) => *w as usize,
                None => std::thread::available_parallelism().map_or(1, |n| n.get()),
            };
            let opts = batch::BatchOptions {
                seed: *seed,
                trials: *trials,
                scale: *scale,
                near_degenerate: *near_degenerate,
                workers,
                config: SolverConfig {
                    polish: !no_polish,
                    ..base
                },
            };
            let stats = batch::run_batch(&opts)?;
            let json = stats.to_json();
            if let Some(path) = path {
                std::fs::write(path, format!("{json}\n"))?;
            }
            writeln!(out, "{json}")?;
            Ok(if stats.passed() { EXIT_OK } else { EXIT_VERIFY_FAILED })
        }
    }
}
