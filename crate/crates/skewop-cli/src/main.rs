//! `skewop`: exact skew orthogonal polynomial pairs for Gaussian, induced,
//! spherical and anti-spherical ensembles over the reals and quaternions,
//! plus grid self-checks and Monte Carlo verification.
//!
//! Exit codes: 0 success / all checks pass, 1 a check failed, 2 usage,
//! 3 mathematical domain error (pole, divergent average, moment guard).

mod checks;
mod output;
mod params;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use skewop_core::error::CoreError;
use skewop_core::jack::{jack_average, DensityFamily, EigenDensity};
use skewop_core::partition::Partition;
use skewop_core::rational::parse_rat;
use skewop_core::skew::{closed_form, derive_pair};
use skewop_mc::{run_mc, Estimand, McConfig, McError};

use output::Format;

#[derive(Debug)]
pub(crate) struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> CliError {
        CliError { code: 2, message: message.into() }
    }

    fn from_core(e: CoreError) -> CliError {
        CliError { code: core_exit_code(&e), message: e.to_string() }
    }

    fn from_mc(e: McError) -> CliError {
        let code = match &e {
            McError::Domain(inner) => core_exit_code(inner),
            McError::MomentGuard { .. } | McError::AdvisoryEnsemble | McError::NonFiniteSample => 3,
            McError::InvalidEnsemble { .. } | McError::InvalidConfig { .. } => 2,
        };
        CliError { code, message: e.to_string() }
    }
}

/// 3 for genuinely mathematical failures, 2 for requests outside the
/// supported input domain.
pub(crate) fn core_exit_code(e: &CoreError) -> u8 {
    match e {
        CoreError::GammaPole { .. }
        | CoreError::PochhammerPole { .. }
        | CoreError::DivergentAverage { .. }
        | CoreError::ParameterPole { .. }
        | CoreError::NonIntegerGammaDifference { .. }
        | CoreError::CancellationFailure { .. } => 3,
        _ => 2,
    }
}

#[derive(Parser)]
#[command(name = "skewop", version, about = "skew orthogonal polynomial toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Pretty)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the polynomial pair through the symbolic averaging engine
    Derive(SymbolicArgs),
    /// Compute the same pair from the closed-form coefficient formulas
    ClosedForm(SymbolicArgs),
    /// Sweep parameter grids and compare the two routes coefficient by
    /// coefficient
    CheckSymbolic(CheckSymbolicArgs),
    /// Compare the closed forms against published special-case formulas
    CheckLiterature(CheckLiteratureArgs),
    /// Evaluate one exact Jack-polynomial average
    JackAverage(JackAverageArgs),
    /// Monte Carlo estimate of the averaged characteristic polynomial,
    /// judged against the exact target
    VerifyMc(VerifyMcArgs),
}

#[derive(Args)]
struct SymbolicArgs {
    /// ginibre-r, ginibre-q, induced-r, induced-q, spherical-r,
    /// spherical-q, antispherical-r, antispherical-q
    #[arg(long)]
    ensemble: String,
    /// Half-size: the polynomial pair has degrees 2n and 2n+1
    #[arg(long)]
    n: usize,
    /// Ensemble parameter as NAME=RATIONAL (alpha= for induced, a1=/a2=
    /// for spherical, b1=/b2= for anti-spherical); repeatable
    #[arg(long = "param", value_name = "NAME=RATIONAL")]
    params: Vec<String>,
}

#[derive(Args)]
struct CheckSymbolicArgs {
    #[arg(long, default_value_t = 8)]
    n_max: usize,
    /// Override one default parameter grid, e.g. --grid alpha=0,1/2,4;
    /// a2 values are absolute (the default a2 grid tracks n)
    #[arg(long = "grid", value_name = "NAME=V1,V2,...")]
    grids: Vec<String>,
    /// Test hook: adds 1 to this closed-form coefficient degree so the
    /// comparison must fail
    #[arg(long, hide = true)]
    corrupt_degree: Option<usize>,
}

#[derive(Args)]
struct CheckLiteratureArgs {
    /// Restrict to one published slice (default: all three)
    #[arg(long, value_enum)]
    kind: Option<LitKindArg>,
    #[arg(long, default_value_t = 5)]
    n_max: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum LitKindArg {
    SphericalInduced,
    Antispherical,
    AntisphericalInduced,
}

#[derive(Args)]
struct JackAverageArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Jack parameter (2 real-symmetry, 1/2 quaternion, 1 Schur)
    #[arg(long, allow_hyphen_values = true)]
    alpha: String,
    #[arg(long, allow_hyphen_values = true, default_value = "0")]
    l1: String,
    #[arg(long, allow_hyphen_values = true, default_value = "0")]
    l2: String,
    #[arg(long)]
    nvars: usize,
    /// Partition as a comma list, e.g. 1,1,1; empty for the trivial shape
    #[arg(long, default_value = "")]
    kappa: String,
    #[arg(long, allow_hyphen_values = true, default_value = "1")]
    scale: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Jacobi,
    Laguerre,
    Cauchy,
}

#[derive(Args)]
struct VerifyMcArgs {
    /// Same names as the symbolic commands; the construction parameters
    /// are integer dimensions (see --param)
    #[arg(long)]
    ensemble: String,
    #[arg(long)]
    n: usize,
    /// Construction sizes: m= or alpha= (induced), m1= (spherical),
    /// k= (anti-spherical); a1=/b1= accepted when 0
    #[arg(long = "param", value_name = "NAME=RATIONAL")]
    params: Vec<String>,
    #[arg(long, default_value_t = 100_000)]
    samples: u64,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Pass/fail threshold in standard errors per coefficient
    #[arg(long, default_value_t = 4.0)]
    sigma: f64,
    #[arg(long, value_enum, default_value_t = WhichArg::Both)]
    which: WhichArg,
    /// Worker threads (default: SKEWOP_THREADS, else all cores)
    #[arg(long)]
    workers: Option<usize>,
    /// Samples per RNG stream; changing it changes the draws
    #[arg(long, default_value_t = 8192)]
    chunk_size: u64,
    /// Run constructions whose parameter dictionary is only cross-checked
    /// statistically (quaternion spherical)
    #[arg(long)]
    allow_advisory: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WhichArg {
    /// Plain characteristic-polynomial average (degree-2n target)
    Even,
    /// Trace-weighted average (the odd polynomial's series part)
    Odd,
    Both,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Derive(args) => cmd_pair(&args, cli.format, "derive"),
        Command::ClosedForm(args) => cmd_pair(&args, cli.format, "closed-form"),
        Command::CheckSymbolic(args) => cmd_check_symbolic(&args, cli.format),
        Command::CheckLiterature(args) => cmd_check_literature(&args, cli.format),
        Command::JackAverage(args) => cmd_jack_average(&args, cli.format),
        Command::VerifyMc(args) => cmd_verify_mc(&args, cli.format),
    }
}

fn cmd_pair(args: &SymbolicArgs, format: Format, command: &str) -> Result<u8, CliError> {
    let (spec, echo) = params::symbolic_spec(&args.ensemble, args.n, &args.params)?;
    let pair = match command {
        "derive" => derive_pair(&spec),
        _ => closed_form(&spec),
    }
    .map_err(CliError::from_core)?;
    output::print_pair(format, command, &spec.label(), args.n, &echo, &pair);
    Ok(0)
}

fn cmd_check_symbolic(args: &CheckSymbolicArgs, format: Format) -> Result<u8, CliError> {
    if args.n_max == 0 {
        return Err(CliError::usage("--n-max must be at least 1"));
    }
    let grids = params::parse_grids(&args.grids)?;
    let outcome = checks::run_symbolic_grid(args.n_max, &grids, args.corrupt_degree)?;
    output::print_check(format, "check-symbolic", &outcome);
    Ok(if outcome.failure.is_none() { 0 } else { 1 })
}

fn cmd_check_literature(args: &CheckLiteratureArgs, format: Format) -> Result<u8, CliError> {
    if args.n_max == 0 {
        return Err(CliError::usage("--n-max must be at least 1"));
    }
    let kinds = match args.kind {
        Some(LitKindArg::SphericalInduced) => vec![checks::LitKind::SphericalInduced],
        Some(LitKindArg::Antispherical) => vec![checks::LitKind::Antispherical],
        Some(LitKindArg::AntisphericalInduced) => vec![checks::LitKind::AntisphericalInduced],
        None => vec![
            checks::LitKind::SphericalInduced,
            checks::LitKind::Antispherical,
            checks::LitKind::AntisphericalInduced,
        ],
    };
    let outcome = checks::run_literature_grid(&kinds, args.n_max);
    output::print_check(format, "check-literature", &outcome);
    Ok(if outcome.failure.is_none() { 0 } else { 1 })
}

fn cmd_jack_average(args: &JackAverageArgs, format: Format) -> Result<u8, CliError> {
    let parse = |name: &str, s: &str| {
        parse_rat(s).map_err(|e| CliError::usage(format!("--{name}: {e}")))
    };
    let alpha = parse("alpha", &args.alpha)?;
    let l1 = parse("l1", &args.l1)?;
    let l2 = parse("l2", &args.l2)?;
    let scale = parse("scale", &args.scale)?;
    let (family, family_name) = match args.family {
        FamilyArg::Jacobi => (DensityFamily::Jacobi, "jacobi"),
        FamilyArg::Laguerre => (DensityFamily::Laguerre, "laguerre"),
        FamilyArg::Cauchy => (DensityFamily::Cauchy, "cauchy"),
    };
    use num::Zero;
    if family == DensityFamily::Laguerre && !l2.is_zero() {
        return Err(CliError::usage("--l2 is not a laguerre parameter"));
    }
    let kappa = parse_partition(&args.kappa)?;
    let echo = vec![
        ("family", family_name.to_string()),
        ("alpha", alpha.to_string()),
        ("l1", l1.to_string()),
        ("l2", l2.to_string()),
        ("nvars", args.nvars.to_string()),
        ("kappa", kappa.to_string()),
        ("scale", scale.to_string()),
    ];
    let density = EigenDensity::new(family, l1, l2, alpha, args.nvars, scale)
        .map_err(CliError::from_core)?;
    let value = jack_average(&density, &kappa).map_err(CliError::from_core)?;
    output::print_jack(format, &echo, &value);
    Ok(0)
}

fn parse_partition(s: &str) -> Result<Partition, CliError> {
    let mut parts = Vec::new();
    for piece in s.split(',').filter(|p| !p.trim().is_empty()) {
        let part: usize = piece
            .trim()
            .parse()
            .map_err(|_| CliError::usage(format!("--kappa parts must be positive integers, got {piece:?}")))?;
        if part == 0 {
            return Err(CliError::usage("--kappa parts must be positive"));
        }
        parts.push(part);
    }
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return Err(CliError::usage(format!(
            "--kappa must be weakly decreasing, got {s:?}"
        )));
    }
    Ok(Partition::new(parts))
}

fn default_workers() -> usize {
    std::env::var("SKEWOP_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&w| w > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |p| p.get()))
}

fn cmd_verify_mc(args: &VerifyMcArgs, format: Format) -> Result<u8, CliError> {
    let (ensemble, echo) = params::mc_ensemble(&args.ensemble, args.n, &args.params)?;
    let config = McConfig {
        samples: args.samples,
        seed: args.seed,
        sigma_threshold: args.sigma,
        workers: args.workers.unwrap_or_else(default_workers),
        chunk_size: args.chunk_size,
        allow_quaternion_spherical: args.allow_advisory,
    };
    let spec = ensemble.ensemble_spec();
    let mut reports = Vec::new();
    if args.which != WhichArg::Odd {
        reports.push(("even", run_mc(&ensemble, Estimand::Charpoly, &config).map_err(CliError::from_mc)?));
    }
    if args.which != WhichArg::Even {
        reports.push((
            "odd",
            run_mc(&ensemble, Estimand::CharpolyTimesTrace, &config).map_err(CliError::from_mc)?,
        ));
    }
    // the guard in run_mc screens the parameters, so this cannot pole here
    let pair = derive_pair(&spec).map_err(CliError::from_core)?;
    let pass = reports.iter().all(|(_, r)| r.verdict.is_pass());
    output::print_mc(format, &spec.label(), args.n, &echo, &pair, &reports, pass);
    Ok(if pass { 0 } else { 1 })
}
