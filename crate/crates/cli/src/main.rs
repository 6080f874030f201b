//! `lindelof-lab`: evaluate the strip functions, sweep the bound checks on
//! grids, estimate growth exponents, run moment integrals and inverse-Mellin
//! recoveries, and write deterministic reports.

mod config;

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lindelof_core::chifn::{self, CharacterSpec};
use lindelof_core::gammafn;
use lindelof_core::harness::{
    check_ids, read_report_json, render_csv, render_json, render_markdown, run_bounds_suite,
    write_report, GridSpec, ReportFormat, SuiteReport, SweepConfig, TauScale,
};
use lindelof_core::lindelof::{
    estimate_mu_slope, moment_integral, HeavisideConvention, MuEstimate, SlopeTarget, StepRule,
};
use lindelof_core::mellin::{inverse_mellin_lambda, inverse_mellin_reciprocal, ContourSpec};
use lindelof_core::zetafn::{self, ZetaConfig};
use lindelof_core::{Complex64, Error, Evaluation, Result};

use config::{resolve, ConfigFile};

#[derive(Parser)]
#[command(
    name = "lindelof-lab",
    version,
    about = "Growth bounds and identities of the zeta chi-factor, checked numerically"
)]
struct Cli {
    /// INI-style key=value config file; command-line flags win
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    /// Write the command's artifact here
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Artifact format: json, csv or markdown
    #[arg(long, global = true, value_name = "FMT")]
    format: Option<String>,

    /// Worker threads (default: all cores, or LINDELOF_LAB_WORKERS)
    #[arg(long, global = true, value_name = "N")]
    workers: Option<usize>,

    /// Seed for the randomized strip samples
    #[arg(long, global = true, value_name = "N")]
    seed: Option<u64>,

    /// Heaviside jump value H(0), in (0, 0.5)
    #[arg(long, global = true, value_name = "C")]
    c0: Option<f64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one function at one complex point
    Eval {
        function: EvalFunction,
        /// The point s, e.g. '2', '0.5+14.1i', '-1+0i'
        #[arg(allow_hyphen_values = true)]
        s: String,
        /// Modulus for chi-k and L (built-in characters: 5, 8, 12)
        #[arg(long)]
        k: Option<u32>,
    },
    /// Sweep bound/identity checks over a sigma-tau grid
    Bounds(BoundsArgs),
    /// Estimate growth exponents from windowed modulus maxima
    Mu(MuArgs),
    /// Mean-value moment of |zeta| on the critical line
    Moment(MomentArgs),
    /// Inverse-Mellin recovery of the cosine pair
    Mellin(MellinArgs),
    /// Re-render a stored JSON report as csv or markdown
    Report {
        /// Path to a report written by `bounds --format json`
        input: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum EvalFunction {
    Zeta,
    Gamma,
    Chi,
    #[value(name = "chi-k", alias = "chi_k")]
    ChiK,
    #[value(name = "l", alias = "L")]
    LFunction,
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long)]
    sigma_min: Option<f64>,
    #[arg(long)]
    sigma_max: Option<f64>,
    #[arg(long)]
    sigma_steps: Option<usize>,
    #[arg(long)]
    tau_min: Option<f64>,
    #[arg(long)]
    tau_max: Option<f64>,
    #[arg(long)]
    tau_steps: Option<usize>,
    /// linear or geometric
    #[arg(long)]
    tau_scale: Option<String>,
    /// Comma-separated check ids, or 'all'
    #[arg(long)]
    checks: Option<String>,
}

#[derive(Args)]
struct MuArgs {
    /// zeta, chi or chi-k
    #[arg(long)]
    target: String,
    /// Comma-separated sigma values
    #[arg(long, allow_hyphen_values = true)]
    sigmas: String,
    #[arg(long, default_value_t = 10.0)]
    tau_min: f64,
    #[arg(long, default_value_t = 3000.0)]
    tau_max: f64,
    #[arg(long, default_value_t = 8)]
    windows: usize,
    /// Modulus for the chi-k target
    #[arg(long)]
    k: Option<u32>,
    /// Fixed sampling step (default: min(0.1, pi/ln tau))
    #[arg(long)]
    step: Option<f64>,
}

#[derive(Args)]
struct MomentArgs {
    #[arg(long)]
    k: u32,
    #[arg(long, value_name = "T")]
    t: f64,
    #[arg(long, default_value_t = 0.05)]
    step: f64,
}

#[derive(Args)]
struct MellinArgs {
    /// lambda or reciprocal
    #[arg(long)]
    which: String,
    /// Comma-separated x values
    #[arg(long)]
    x: String,
    /// Contour abscissa override
    #[arg(long)]
    c: Option<f64>,
    /// Truncation height override
    #[arg(long, value_name = "T")]
    t_max: Option<f64>,
    #[arg(long)]
    panels: Option<u32>,
    #[arg(long)]
    windows: Option<u32>,
}

fn main() -> ExitCode {
    // die quietly when a downstream pipe closes (e.g. `report ... | head`)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Usage(_) | Error::Io { .. } => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let file = match &cli.config {
        Some(path) => ConfigFile::load(path)?,
        None => ConfigFile::default(),
    };

    let env_workers = std::env::var("LINDELOF_LAB_WORKERS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok());
    let workers = cli
        .workers
        .or(file.get_parsed::<usize>("workers")?)
        .or(env_workers);
    if let Some(n) = workers {
        if n == 0 {
            return Err(Error::Usage("workers must be positive".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Error::Usage(format!("thread pool: {e}")))?;
    }

    let c0 = resolve(cli.c0, file.get_parsed("c0")?, 0.25);
    let conv = HeavisideConvention::new(c0)
        .map_err(|_| Error::Usage(format!("c0 = {c0} outside the open interval (0, 0.5)")))?;
    let seed = resolve(cli.seed, file.get_parsed("seed")?, 1);
    let format = match cli.format.as_deref().or(file.get("format")) {
        Some(name) => Some(ReportFormat::from_str(name)?),
        None => None,
    };
    let out = cli
        .out
        .clone()
        .or_else(|| file.get("out").map(PathBuf::from));

    match cli.command {
        Command::Eval { function, s, k } => cmd_eval(function, &s, k),
        Command::Bounds(args) => cmd_bounds(args, &file, conv, seed, format, out),
        Command::Mu(args) => cmd_mu(args, out),
        Command::Moment(args) => cmd_moment(args),
        Command::Mellin(args) => cmd_mellin(args),
        Command::Report { input } => cmd_report(&input, format, out),
    }
}

// ---------------------------------------------------------------------------
// eval
// ---------------------------------------------------------------------------

fn cmd_eval(function: EvalFunction, s_text: &str, k: Option<u32>) -> Result<ExitCode> {
    let s = parse_complex(s_text)?;
    let need_k = || k.ok_or_else(|| Error::Usage("--k is required for this function".into()));
    let (name, eval): (&str, Evaluation) = match function {
        EvalFunction::Zeta => ("zeta", zetafn::zeta(s, &ZetaConfig::default())?),
        EvalFunction::Gamma => ("gamma", gammafn::gamma(s)?),
        EvalFunction::Chi => ("chi", chifn::chi(s)?),
        EvalFunction::ChiK => ("chi_k", chifn::chi_k(s, need_k()?)?),
        EvalFunction::LFunction => {
            let spec = CharacterSpec::builtin(need_k()?)?;
            ("L", chifn::l_function(s, &spec)?)
        }
    };
    println!("{name}({})", fmt_complex(s));
    println!("  value   = {}", fmt_complex(eval.value));
    println!("  modulus = {}", fmt_sig(eval.modulus()));
    println!("  abs_err = {}", fmt_sig(eval.abs_err));
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// bounds
// ---------------------------------------------------------------------------

fn cmd_bounds(
    args: BoundsArgs,
    file: &ConfigFile,
    conv: HeavisideConvention,
    seed: u64,
    format: Option<ReportFormat>,
    out: Option<PathBuf>,
) -> Result<ExitCode> {
    let defaults = GridSpec::default_half_strip();
    let grid = GridSpec {
        sigma_min: resolve(
            args.sigma_min,
            file.get_parsed("sigma-min")?,
            defaults.sigma_min,
        ),
        sigma_max: resolve(
            args.sigma_max,
            file.get_parsed("sigma-max")?,
            defaults.sigma_max,
        ),
        sigma_steps: resolve(
            args.sigma_steps,
            file.get_parsed("sigma-steps")?,
            defaults.sigma_steps,
        ),
        tau_min: resolve(args.tau_min, file.get_parsed("tau-min")?, defaults.tau_min),
        tau_max: resolve(args.tau_max, file.get_parsed("tau-max")?, defaults.tau_max),
        tau_scale: match args.tau_scale.as_deref().or(file.get("tau-scale")) {
            Some(name) => TauScale::from_str(name)?,
            None => defaults.tau_scale,
        },
        tau_steps: resolve(
            args.tau_steps,
            file.get_parsed("tau-steps")?,
            defaults.tau_steps,
        ),
    };
    let selector = args
        .checks
        .or_else(|| file.get("checks").map(String::from))
        .ok_or_else(|| Error::Usage("no checks selected: pass --checks <list|all>".into()))?;
    let checks = parse_check_list(&selector)?;

    let mut cfg = SweepConfig::new(grid, checks, conv);
    cfg.seed = seed;
    let report = run_bounds_suite(&cfg)?;

    println!(
        "{:<24} {:>8} {:>9} {:>14}  worst at (sigma, tau)",
        "check", "records", "failures", "worst margin"
    );
    for (id, s) in &report.summaries {
        println!(
            "{:<24} {:>8} {:>9} {:>14.6e}  ({:.4}, {:.4})",
            id, s.records, s.failures, s.worst_margin, s.worst_sigma, s.worst_tau
        );
    }
    if let Some(sup) = report.observed_ratio_sup {
        println!("observed sup of |chi| tau^(sigma-1/2): {sup:.6}");
    }
    let failures = report.total_failures();
    println!(
        "total: {} records, {} failures",
        report.records.len(),
        failures
    );

    if let Some(path) = out {
        let fmt = format.unwrap_or(ReportFormat::Json);
        write_report(&report, fmt, &path)?;
        println!("report written to {}", path.display());
    }
    Ok(if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn parse_check_list(selector: &str) -> Result<Vec<String>> {
    if selector.trim() == "all" {
        return Ok(check_ids().iter().map(|s| s.to_string()).collect());
    }
    let list: Vec<String> = selector
        .split(',')
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect();
    if list.is_empty() {
        return Err(Error::Usage("empty check list".into()));
    }
    Ok(list)
}

// ---------------------------------------------------------------------------
// mu
// ---------------------------------------------------------------------------

fn cmd_mu(args: MuArgs, out: Option<PathBuf>) -> Result<ExitCode> {
    let target = match args.target.as_str() {
        "zeta" => SlopeTarget::Zeta,
        "chi" => SlopeTarget::Chi,
        "chi-k" | "chi_k" => SlopeTarget::ChiK(
            args.k
                .ok_or_else(|| Error::Usage("--k is required for target chi-k".into()))?,
        ),
        other => return Err(Error::Usage(format!("unknown mu target '{other}'"))),
    };
    let step_rule = match args.step {
        Some(h) => StepRule::Fixed(h),
        None => StepRule::Default,
    };
    let sigmas = parse_f64_list(&args.sigmas)?;

    let mut estimates: Vec<MuEstimate> = Vec::new();
    println!(
        "{:<10} {:>10} {:>14} {:>9}",
        "sigma", "slope", "residual_rms", "windows"
    );
    for sigma in sigmas {
        let est = estimate_mu_slope(
            target,
            sigma,
            args.tau_min,
            args.tau_max,
            args.windows,
            step_rule,
        )?;
        println!(
            "{:<10} {:>10.5} {:>14.3e} {:>9}",
            fmt_short(sigma),
            est.slope,
            est.residual_rms,
            est.window_maxima.len()
        );
        estimates.push(est);
    }

    if let Some(path) = out {
        let mut csv = String::from("target,sigma,tau_mid,window_max,slope,residual_rms\n");
        for est in &estimates {
            for (mid, max) in &est.window_maxima {
                csv.push_str(&format!(
                    "{},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e}\n",
                    args.target, est.sigma, mid, max, est.slope, est.residual_rms
                ));
            }
        }
        std::fs::write(&path, csv).map_err(|e| Error::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        println!("window maxima written to {}", path.display());
    }
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// moment
// ---------------------------------------------------------------------------

fn cmd_moment(args: MomentArgs) -> Result<ExitCode> {
    let m = moment_integral(args.k, args.t, args.step)?;
    println!("k               = {}", m.k);
    println!("T               = {}", fmt_short(m.t_end));
    println!("(1/T) integral  = {}", fmt_sig(m.normalized_moment));
    println!("quadrature_err  = {:.3e}", m.quadrature_err);
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// mellin
// ---------------------------------------------------------------------------

fn cmd_mellin(args: MellinArgs) -> Result<ExitCode> {
    let lambda = match args.which.as_str() {
        "lambda" => true,
        "reciprocal" => false,
        other => return Err(Error::Usage(format!("unknown transform '{other}'"))),
    };
    let mut spec = if lambda {
        ContourSpec::lambda_default()
    } else {
        ContourSpec::reciprocal_default()
    };
    if let Some(c) = args.c {
        spec.c = c;
    }
    if let Some(t) = args.t_max {
        spec.t_max = t;
    }
    if let Some(p) = args.panels {
        spec.panels = p;
    }
    if let Some(w) = args.windows {
        spec.averaging_windows = w;
    }

    let xs = parse_f64_list(&args.x)?;
    println!(
        "{:<8} {:>18} {:>12} {:>18} {:>12}",
        "x", "recovered", "abs_err", "target", "deviation"
    );
    for x in xs {
        let (value, target) = if lambda {
            let v = inverse_mellin_lambda(x, &spec)?;
            (v, 2.0 * (std::f64::consts::TAU * x).cos())
        } else {
            let v = inverse_mellin_reciprocal(x, &spec)?;
            (v, (2.0 / x) * (std::f64::consts::TAU / x).cos())
        };
        println!(
            "{:<8} {:>18.12} {:>12.3e} {:>18.12} {:>12.3e}",
            fmt_short(x),
            value.value.re,
            value.abs_err,
            target,
            (value.value.re - target).abs()
        );
    }
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// report
// ---------------------------------------------------------------------------

fn cmd_report(
    input: &PathBuf,
    format: Option<ReportFormat>,
    out: Option<PathBuf>,
) -> Result<ExitCode> {
    let text = std::fs::read_to_string(input).map_err(|e| Error::Io {
        path: input.display().to_string(),
        message: e.to_string(),
    })?;
    let report: SuiteReport = read_report_json(&text)?;
    let fmt = format.unwrap_or(ReportFormat::Markdown);
    match out {
        Some(path) => {
            write_report(&report, fmt, &path)?;
            println!("report written to {}", path.display());
        }
        None => {
            let body = match fmt {
                ReportFormat::Json => render_json(&report)?,
                ReportFormat::Csv => render_csv(&report),
                ReportFormat::Markdown => render_markdown(&report),
            };
            print!("{body}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// parsing / printing helpers
// ---------------------------------------------------------------------------

fn parse_f64_list(text: &str) -> Result<Vec<f64>> {
    let values: Vec<f64> = text
        .split(',')
        .map(|s| s.trim())
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<f64>()
                .map_err(|_| Error::Usage(format!("bad number '{s}'")))
        })
        .collect::<Result<_>>()?;
    if values.is_empty() {
        return Err(Error::Usage("empty value list".into()));
    }
    Ok(values)
}

/// Parse 'a', 'bi', 'a+bi', 'a-bi', 'i', '-i' (also with an exponent, e.g.
/// '1e2+3.5e-1i').
fn parse_complex(text: &str) -> Result<Complex64> {
    let bad = || Error::Usage(format!("cannot parse complex number '{text}'"));
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err(bad());
    }
    let Some(head) = t.strip_suffix('i') else {
        return t
            .parse::<f64>()
            .map(|re| Complex64::new(re, 0.0))
            .map_err(|_| bad());
    };
    let bytes = head.as_bytes();
    let mut split = None;
    for idx in (1..bytes.len()).rev() {
        if (bytes[idx] == b'+' || bytes[idx] == b'-') && !matches!(bytes[idx - 1], b'e' | b'E') {
            split = Some(idx);
            break;
        }
    }
    let imag_part = |s: &str| -> Result<f64> {
        match s {
            "" | "+" => Ok(1.0),
            "-" => Ok(-1.0),
            _ => s.parse::<f64>().map_err(|_| bad()),
        }
    };
    match split {
        Some(idx) => {
            let re = head[..idx].parse::<f64>().map_err(|_| bad())?;
            Ok(Complex64::new(re, imag_part(&head[idx..])?))
        }
        None => Ok(Complex64::new(0.0, imag_part(head)?)),
    }
}

/// 16 significant digits, plain decimal in a human range.
fn fmt_sig(x: f64) -> String {
    let a = x.abs();
    if x == 0.0 || (1e-3..1e6).contains(&a) {
        format!("{x:.15}")
    } else {
        format!("{x:.15e}")
    }
}

fn fmt_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        fmt_sig(z.re)
    } else if z.im < 0.0 {
        format!("{} - {}i", fmt_sig(z.re), fmt_sig(-z.im))
    } else {
        format!("{} + {}i", fmt_sig(z.re), fmt_sig(z.im))
    }
}

fn fmt_short(x: f64) -> String {
    if x == x.trunc() && x.abs() < 1e9 {
        format!("{x:.0}")
    } else {
        format!("{x}")
    }
}
