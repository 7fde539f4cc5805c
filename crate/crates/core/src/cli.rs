//! Command-line front end: `project`, `table1`, `figure` and `polar`.
//!
//! Exit codes: 0 on success, 2 on invalid input, 3 on numerical failure.

use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::error::Error;
use crate::figures::{self, FigureName};
use crate::format::{fixed_sig, sci_sig};
use crate::homproj::{project_homogenization, BisectionTrace, ConePoint, ProjectionOptions};
use crate::oracle::{self, OracleConfig, SampledSupport};
use crate::polar::{self, DEFAULT_TOL};
use crate::reference_run;
use crate::scaledfun::PsiEvaluator;
use crate::sets::{SetDescriptor, SetSpec};
use crate::vector::Vector;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;

pub const SEED_ENV: &str = "HOMCONE_SEED";

const DIGITS: usize = 8;
const DPSI_DIGITS: usize = 3;

#[derive(Debug, Parser)]
#[command(name = "homcone", version, about = "Projections onto homogenization cones")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Project (y, s) onto K = cl cone(C x {1}).
    Project(ProjectArgs),
    /// Print the reference bisection run as CSV.
    Table1(Table1Args),
    /// Emit a labeled point cloud as CSV.
    Figure(FigureArgs),
    /// Polar-set, polar-cone and K-polar membership.
    Polar(PolarArgs),
}

#[derive(Debug, Args)]
struct ProjectArgs {
    /// Set spec: inline JSON, or a path to a JSON file.
    #[arg(long)]
    set: String,
    /// Comma-separated coordinates of y.
    #[arg(long, allow_hyphen_values = true)]
    point: String,
    #[arg(long, allow_hyphen_values = true)]
    height: f64,
    #[arg(long, default_value_t = 1.0)]
    alpha0: f64,
    #[arg(long, default_value_t = 2.0)]
    beta0: f64,
    #[arg(long, default_value_t = 1e-6)]
    eps: f64,
    #[arg(long, default_value_t = 200)]
    max_iter: usize,
    /// Append the bisection trace as CSV.
    #[arg(long)]
    trace: bool,
    /// Skip the closed-form fast paths.
    #[arg(long)]
    force_iterative: bool,
    /// Also report a brute-force minimizer of Psi.
    #[arg(long)]
    oracle: bool,
}

#[derive(Debug, Args)]
struct Table1Args {
    /// Exit with code 3 if any row differs from the expected trace.
    #[arg(long)]
    verify: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct FigureArgs {
    #[arg(long)]
    name: String,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 200)]
    density: usize,
}

#[derive(Debug, Args)]
struct PolarArgs {
    #[arg(long)]
    set: String,
    #[arg(long, allow_hyphen_values = true)]
    point: String,
    /// Height s for the K-polar query.
    #[arg(long, allow_hyphen_values = true)]
    height: Option<f64>,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    /// Also report a sampled support value.
    #[arg(long)]
    oracle: bool,
}

#[derive(Debug)]
enum Failure {
    Invalid(String),
    Numerical(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::MaxIterationsExceeded(_) | Error::CapabilityMissing(_) => Failure::Numerical(e.to_string()),
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Invalid(format!("i/o error: {e}"))
    }
}

type CmdResult = std::result::Result<(), Failure>;

/// Parse `args` (including the program name) and run the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Project(a) => cmd_project(a, out),
        Command::Table1(a) => cmd_table1(a, out, err),
        Command::Figure(a) => cmd_figure(a, out),
        Command::Polar(a) => cmd_polar(a, out),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Invalid(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INVALID
        }
        Err(Failure::Numerical(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_NUMERICAL
        }
    }
}

fn load_set(arg: &str) -> Result<SetDescriptor, Failure> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg).map_err(|e| Failure::Invalid(format!("cannot read {arg}: {e}")))?
    };
    Ok(SetDescriptor::try_from(SetSpec::from_json(&text)?)?)
}

fn parse_point(arg: &str) -> Result<Vector, Failure> {
    let coords = arg
        .split(',')
        .map(|c| {
            c.trim()
                .parse::<f64>()
                .map_err(|_| Failure::Invalid(format!("bad coordinate {c:?} in --point")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Vector::new(coords)?)
}

fn finite(name: &str, x: f64) -> CmdResult {
    if x.is_finite() {
        Ok(())
    } else {
        Err(Failure::Invalid(format!("{name} must be finite")))
    }
}

fn seed() -> Result<u64, Failure> {
    match std::env::var(SEED_ENV) {
        Ok(text) => text
            .trim()
            .parse()
            .map_err(|_| Failure::Invalid(format!("{SEED_ENV} must be an unsigned integer"))),
        Err(_) => Ok(OracleConfig::default().seed),
    }
}

/// A JSON number rounded to [`DIGITS`] significant digits.
fn num(x: f64) -> Value {
    let rounded: f64 = format!("{:.*e}", DIGITS - 1, x).parse().unwrap_or(x);
    let rounded = if rounded == 0.0 { 0.0 } else { rounded };
    json!(rounded)
}

fn write_json(out: &mut dyn Write, value: &Value) -> CmdResult {
    writeln!(out, "{value}")?;
    Ok(())
}

fn opt_cell(x: Option<f64>, f: impl Fn(f64) -> String) -> String {
    x.map(f).unwrap_or_default()
}

fn write_trace(out: &mut dyn Write, trace: &BisectionTrace) -> CmdResult {
    writeln!(out, "n,alpha,mid,beta,dpsi_alpha,dpsi_mid,dpsi_beta")?;
    for r in &trace.rows {
        writeln!(
            out,
            "{},{},{},{},{},{},{}",
            r.n,
            fixed_sig(r.alpha, DIGITS),
            opt_cell(r.mid, |m| fixed_sig(m, DIGITS)),
            fixed_sig(r.beta, DIGITS),
            sci_sig(r.dpsi_alpha, DPSI_DIGITS),
            opt_cell(r.dpsi_mid, |m| sci_sig(m, DPSI_DIGITS)),
            sci_sig(r.dpsi_beta, DPSI_DIGITS),
        )?;
    }
    Ok(())
}

fn cmd_project(a: ProjectArgs, out: &mut dyn Write) -> CmdResult {
    let set = load_set(&a.set)?;
    let y = parse_point(&a.point)?;
    finite("--height", a.height)?;
    for (name, x) in [("--alpha0", a.alpha0), ("--beta0", a.beta0), ("--eps", a.eps)] {
        finite(name, x)?;
    }
    if !(a.alpha0 > 0.0 && a.beta0 > a.alpha0) {
        return Err(Failure::Invalid("need 0 < --alpha0 < --beta0".into()));
    }
    if !(a.eps > 0.0) || a.max_iter == 0 {
        return Err(Failure::Invalid("--eps and --max-iter must be positive".into()));
    }
    set.check_dim(&y)?;
    let p = ConePoint::new(y, a.height)?;
    let opts = ProjectionOptions {
        alpha0: a.alpha0,
        beta0: a.beta0,
        eps: a.eps,
        max_iter: a.max_iter,
        force_iterative: a.force_iterative,
        keep_trace: a.trace,
    };
    let result = project_homogenization(&set, &p, &opts)?;
    let mut value = json!({
        "alpha_star": num(result.alpha_star),
        "point": result.point.y.coords().iter().map(|&c| num(c)).collect::<Vec<_>>(),
        "height": num(result.point.s),
        "branch": result.branch.as_str(),
        "iterations": result.iterations,
    });
    if a.oracle {
        let cfg = OracleConfig {
            seed: seed()?,
            ..Default::default()
        };
        let ev = PsiEvaluator::new(&set, p.y.clone(), p.s)?;
        value["oracle_alpha_star"] = num(oracle::brute_force_alpha_star(&ev, &cfg)?);
    }
    write_json(out, &value)?;
    if a.trace {
        write_trace(out, &result.trace.unwrap_or_default())?;
    }
    Ok(())
}

fn cmd_table1(a: Table1Args, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let (_, trace) = reference_run::run()?;
    match &a.out {
        Some(path) => {
            let mut file = io::BufWriter::new(File::create(path)?);
            write_trace(&mut file, &trace)?;
            file.flush()?;
        }
        None => write_trace(out, &trace)?,
    }
    if a.verify {
        let deviations = reference_run::compare(&trace);
        for d in &deviations {
            writeln!(
                err,
                "row {} {}: computed {}, printed {}",
                d.n,
                d.column,
                opt_cell(d.computed, |x| x.to_string()),
                opt_cell(d.printed, |x| x.to_string()),
            )?;
        }
        if !deviations.is_empty() {
            return Err(Failure::Numerical(format!(
                "{} cell(s) differ from the reference table",
                deviations.len()
            )));
        }
    }
    Ok(())
}

fn cmd_figure(a: FigureArgs, out: &mut dyn Write) -> CmdResult {
    let name: FigureName = a.name.parse()?;
    if a.density == 0 {
        return Err(Failure::Invalid("--density must be positive".into()));
    }
    let rows = figures::figure_rows(name, a.density)?;
    match &a.out {
        Some(path) => figures::write_csv(&rows, io::BufWriter::new(File::create(path)?))?,
        None => figures::write_csv(&rows, out)?,
    }
    Ok(())
}

fn cmd_polar(a: PolarArgs, out: &mut dyn Write) -> CmdResult {
    let set = load_set(&a.set)?;
    let y = parse_point(&a.point)?;
    if !(a.tol >= 0.0 && a.tol.is_finite()) {
        return Err(Failure::Invalid("--tol must be a nonnegative number".into()));
    }
    if let Some(s) = a.height {
        finite("--height", s)?;
    }
    set.check_dim(&y)?;
    let sigma = set.support_function(&y)?;
    let sigma_value = if sigma.is_finite() { num(sigma) } else { json!(fixed_sig(sigma, DIGITS)) };
    let in_k_polar = match a.height {
        Some(s) => json!(polar::homogenization_polar_membership(&set, &ConePoint::new(y.clone(), s)?, a.tol)?),
        None => Value::Null,
    };
    let mut value = json!({
        "sigma": sigma_value,
        "in_polar_set": polar::polar_membership(&set, &y, a.tol)?,
        "in_polar_cone": polar::polar_cone_membership(&set, &y, a.tol)?,
        "in_K_polar": in_k_polar,
    });
    if a.oracle {
        let cfg = OracleConfig {
            seed: seed()?,
            ..Default::default()
        };
        value["sampled_sigma"] = match oracle::sampled_support(&set, &y, &cfg)? {
            SampledSupport::Finite(x) => num(x),
            SampledSupport::UnboundedDirection => json!("+inf"),
        };
    }
    write_json(out, &value)
}
