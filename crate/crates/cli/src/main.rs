mod expand;
mod numeric;
mod output;
mod suite;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use jordanian::hopf::Family;
use jordanian::ncalg::parse_rational;
use jordanian::Config;
use num_rational::BigRational;

/// Verify Jordanian twist deformations, print series expansions and evaluate
/// plane-wave star products.
#[derive(Parser, Debug)]
#[command(name = "jordanian", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the verification suite, or the checks named by --checks.
    Verify(Common),
    /// Print a twist, an R-matrix or a twisted coproduct/antipode.
    Expand {
        /// F0, F1, FL, FR, FLR, rmatrix, coproduct:<gen> or antipode:<gen>
        /// (generators P0, P1, ..., D).
        expr: String,
        #[command(flatten)]
        common: Common,
    },
    /// Evaluate the star-product kernel on one pair of momenta.
    Star(Common),
    /// Compare closed forms against numerically integrated flows.
    OdeCheck(Common),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Truncation order in 1/kappa.
    #[arg(short = 'N', long, default_value_t = 6)]
    pub order: u32,
    /// Truncation order for triple-tensor checks.
    #[arg(long, default_value_t = 4)]
    pub triple_order: u32,
    #[arg(short = 'n', long, default_value_t = 2)]
    pub dim: usize,
    /// Family parameter, `a/b` or a decimal; repeatable.
    #[arg(long = "u", value_name = "U")]
    pub us: Vec<String>,
    /// Twist families to include (F0, F1, L, R, LR); comma separated.
    #[arg(long, value_delimiter = ',')]
    pub family: Vec<String>,
    #[arg(long, default_value = "1")]
    pub kappa: String,
    /// Deformation direction, comma separated rationals.
    #[arg(long, allow_hyphen_values = true)]
    pub v: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub k: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub q: Option<String>,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    /// Relative tolerance of the numeric checks.
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    /// Check names to run; comma separated.
    #[arg(long, value_delimiter = ',', value_parser = clap::builder::PossibleValuesParser::new(suite::CHECKS))]
    pub checks: Vec<String>,
    /// Also write a JSON report to this path.
    #[arg(long)]
    pub report: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

pub const DEFAULT_US: [&str; 6] = ["0", "1/4", "1/2", "3/4", "1", "2"];

fn usage_error(msg: impl std::fmt::Display) -> ! {
    Cli::command().error(ErrorKind::ValueValidation, msg).exit()
}

impl Common {
    pub fn us(&self) -> Vec<BigRational> {
        let raw: Vec<&str> =
            if self.us.is_empty() { DEFAULT_US.to_vec() } else { self.us.iter().map(String::as_str).collect() };
        raw.iter().map(|s| parse_rational(s).unwrap_or_else(|e| usage_error(e))).collect()
    }

    /// The single `u` of commands that evaluate one point.
    pub fn single_u(&self) -> Option<BigRational> {
        match self.us.as_slice() {
            [] => None,
            [u] => Some(parse_rational(u).unwrap_or_else(|e| usage_error(e))),
            _ => usage_error("this command takes at most one --u"),
        }
    }

    pub fn families(&self) -> Vec<Family> {
        if self.family.is_empty() {
            return Family::ALL.to_vec();
        }
        self.family.iter().map(|s| s.parse().unwrap_or_else(|e| usage_error(e))).collect()
    }

    pub fn kappa(&self) -> f64 {
        parse_real(&self.kappa)
    }

    pub fn v(&self) -> Vec<BigRational> {
        match &self.v {
            Some(s) => parse_vector(s),
            None => (0..self.dim).map(|i| BigRational::from_integer(i64::from(i == 0).into())).collect(),
        }
    }

    /// Configuration at `order`; invalid values are usage errors.
    pub fn config_at(&self, order: u32) -> Config {
        if self.order == 0 && order == 0 {
            usage_error("--order must be at least 1");
        }
        let v = self.v();
        if v.len() != self.dim {
            usage_error(format!("--v has {} components but --dim is {}", v.len(), self.dim));
        }
        Config::new(self.dim, order, v)
            .and_then(|c| c.with_triple_order(self.triple_order.min(order)))
            .unwrap_or_else(|e| usage_error(e))
    }

    pub fn config(&self) -> Config {
        self.config_at(self.order)
    }
}

pub fn parse_vector(s: &str) -> Vec<BigRational> {
    s.split(',').map(|x| parse_rational(x).unwrap_or_else(|e| usage_error(e))).collect()
}

pub fn parse_real(s: &str) -> f64 {
    let r = parse_rational(s).unwrap_or_else(|e| usage_error(e));
    to_f64(&r)
}

pub fn to_f64(r: &BigRational) -> f64 {
    num_traits::ToPrimitive::to_f64(r).unwrap_or(f64::NAN)
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Verify(common) => {
            let reports = suite::run(&common, suite::Selection::from_args(&common.checks));
            finish(&common, &reports)
        }
        Command::OdeCheck(common) => {
            let selection = if common.checks.is_empty() {
                suite::Selection::Named(vec!["ode-oracle".into(), "star-properties".into()])
            } else {
                suite::Selection::from_args(&common.checks)
            };
            let reports = suite::run(&common, selection);
            finish(&common, &reports)
        }
        Command::Expand { expr, common } => {
            expand::run(&expr, &common)?;
            Ok(true)
        }
        Command::Star(common) => numeric::star(&common),
    }
}

fn finish(common: &Common, reports: &[jordanian::Report]) -> Result<bool> {
    if let Some(path) = &common.report {
        let json = output::reports_json(reports)?;
        std::fs::write(path, json + "\n").with_context(|| format!("writing {}", path.display()))?;
    }
    print!("{}", output::render_reports(reports, common.format)?);
    Ok(reports.iter().all(jordanian::Report::passed))
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
