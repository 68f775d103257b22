//! Command-line front end: compute any implemented local quantity, or run
//! the oracle-vs-formula verification grid.
//!
//! Exit codes: 0 success, 1 invalid parameters / failed checks / baseline
//! mismatch, 2 work budget exceeded.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use serde::Serialize;

use localperiod::algebra::rat::{rat_from_str, rat_int, rat_to_string, Rat};
use localperiod::algebra::RatFun2;
use localperiod::error::Error;
use localperiod::formulas::{
    constant_term_factor, hecke_shift, local_period_shifted, pi, weil_zeta, x_at_zero, x_exp_poly,
};
use localperiod::local::{make_shape, realize_form, GoodPlace, Sign};
use localperiod::oracle::pi_table_oracle;
use localperiod::output::{rat_list, to_canonical_json, ConstantTermDto, PeriodDto, RatFunDto};
use localperiod::verify::{default_lmax, run_verify, CheckStatus, GridSpec, DEFAULT_BUDGET_CELLS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Command {
    XSeries,
    XZero,
    Pi,
    Period,
    WeilZeta,
    ConstantTerm,
    Verify,
    Table,
}

impl Command {
    fn name(self) -> &'static str {
        match self {
            Command::XSeries => "x-series",
            Command::XZero => "x-zero",
            Command::Pi => "pi",
            Command::Period => "period",
            Command::WeilZeta => "weil-zeta",
            Command::ConstantTerm => "constant-term",
            Command::Verify => "verify",
            Command::Table => "table",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Human,
    Structured,
}

#[derive(Debug, Parser)]
#[command(
    name = "localperiod",
    about = "Exact local factors of Eisenstein periods at good places, with a brute-force verification oracle",
    allow_negative_numbers = true
)]
struct Args {
    /// What to compute.
    #[arg(long, value_enum)]
    command: Command,

    /// Odd prime for oracle work (residue rings Z/p^l); also sets q = p.
    #[arg(long)]
    p: Option<u64>,

    /// Residue field cardinality for symbolic work ("5", "9", "25/1", ...).
    /// Defaults to p.
    #[arg(long)]
    q: Option<String>,

    /// Discriminant sign: +1 or -1 (default +1; verify runs both signs
    /// unless one is given).
    #[arg(long)]
    eps: Option<i32>,

    /// Dimension n of the quadratic form.
    #[arg(long)]
    n: Option<u32>,

    /// Series depth (default: 5 for p=3, 4 for p=5, else 3).
    #[arg(long = "l-max")]
    l_max: Option<u32>,

    /// Valuation bound T (the single T for x-series; the row bound for
    /// table and verify).
    #[arg(long = "t-max")]
    t_max: Option<u32>,

    /// Evaluate at alpha (integer, so that a = q^-alpha is rational).
    #[arg(long)]
    alpha: Option<i64>,

    /// Evaluate at s instead; alpha = (n+1)s must be an integer.
    #[arg(long)]
    s: Option<String>,

    /// Evaluate at beta (integer, so that z = q^-beta is rational).
    #[arg(long)]
    beta: Option<i64>,

    /// Unramified Hecke shift: replace alpha by alpha + beta0.
    #[arg(long = "beta0", default_value_t = 0)]
    beta0: i64,

    #[arg(long, value_enum, default_value = "human")]
    out: OutFormat,

    /// Work budget per histogram, in visited cells.
    #[arg(long = "budget-cells", default_value_t = DEFAULT_BUDGET_CELLS)]
    budget_cells: u64,

    /// Compare the structured output against a stored baseline (created on
    /// first use).
    #[arg(long)]
    baseline: Option<PathBuf>,
}

#[derive(Debug)]
enum CliError {
    Core(Error),
    Usage(String),
    BaselineMismatch,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::BaselineMismatch => write!(f, "structured output differs from baseline"),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Debug, Serialize)]
struct Params {
    p: Option<u64>,
    q: String,
    eps: Option<i32>,
    n: Option<u32>,
    l_max: u32,
    t_max: u32,
    alpha: Option<i64>,
    beta: Option<i64>,
    beta0: i64,
}

#[derive(Serialize)]
struct Envelope<T: Serialize> {
    format: &'static str,
    command: String,
    params: Params,
    result: T,
}

struct Output {
    human: String,
    structured: String,
    failed: bool,
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

struct Ctx {
    place: GoodPlace,
    params: Params,
    eps_explicit: Option<Sign>,
    n: u32,
    lmax: u32,
    tmax: u32,
    budget: u64,
    alpha: Option<i64>,
    beta: Option<i64>,
    beta0: i64,
}

fn build_ctx(args: &Args) -> CliResult<Ctx> {
    let eps_explicit = match args.eps {
        None => None,
        Some(v) => Some(Sign::from_i32(v).ok_or_else(|| usage("--eps must be +1 or -1"))?),
    };
    let eps = eps_explicit.unwrap_or(Sign::Plus);
    let q: Rat = match (&args.q, args.p) {
        (Some(qs), _) => rat_from_str(qs).ok_or_else(|| usage("--q must be an exact rational"))?,
        (None, Some(p)) => rat_int(p as i64),
        // verify has a default grid; other commands need a cardinality
        (None, None) if args.command == Command::Verify => rat_int(3),
        (None, None) => return Err(usage("one of --p or --q is required")),
    };
    if let Some(p) = args.p {
        if q != rat_int(p as i64) {
            return Err(usage("--q must equal --p when both are given"));
        }
    }
    let place = match args.p {
        Some(p) => GoodPlace::residue(p, eps)?,
        None => GoodPlace::symbolic(q.clone(), eps)?,
    };
    let n = args.n.unwrap_or(0);

    let alpha = match (&args.s, args.alpha) {
        (Some(_), Some(_)) => return Err(usage("--alpha and --s are mutually exclusive")),
        (None, a) => a,
        (Some(s_str), None) => {
            let s = rat_from_str(s_str).ok_or_else(|| usage("--s must be an exact rational"))?;
            let alpha = s * rat_int(n as i64 + 1);
            if !alpha.is_integer() {
                return Err(usage(format!(
                    "(n+1)s = {} is not an integer; q^-alpha would be irrational",
                    rat_to_string(&alpha)
                )));
            }
            Some(i64::try_from(alpha.to_integer()).map_err(|_| usage("alpha out of range"))?)
        }
    };

    let lmax = args
        .l_max
        .unwrap_or_else(|| default_lmax(args.p.unwrap_or(0)));
    let tmax = args.t_max.unwrap_or(3);
    Ok(Ctx {
        params: Params {
            p: args.p,
            q: rat_to_string(&q),
            eps: args.eps,
            n: args.n,
            l_max: lmax,
            t_max: tmax,
            alpha,
            beta: args.beta,
            beta0: args.beta0,
        },
        place,
        eps_explicit,
        n,
        lmax,
        tmax,
        budget: args.budget_cells,
        alpha,
        beta: args.beta,
        beta0: args.beta0,
    })
}

impl Ctx {
    fn a_value(&self) -> Option<Rat> {
        self.alpha.map(|alpha| self.place.q_pow(-alpha))
    }

    fn z_value(&self) -> Option<Rat> {
        self.beta.map(|beta| self.place.q_pow(-beta))
    }

    fn shift(&self, f: &RatFun2) -> CliResult<RatFun2> {
        Ok(hecke_shift(f, self.beta0, &self.place)?)
    }

    fn envelope<T: Serialize>(&self, command: &Command, result: T) -> String {
        to_canonical_json(&Envelope {
            format: "localperiod/v1",
            command: command.name().to_string(),
            params: Params {
                p: self.params.p,
                q: self.params.q.clone(),
                eps: self.params.eps,
                n: self.params.n,
                l_max: self.params.l_max,
                t_max: self.params.t_max,
                alpha: self.params.alpha,
                beta: self.params.beta,
                beta0: self.params.beta0,
            },
            result,
        })
    }
}

#[derive(Serialize)]
struct FunctionResult {
    function: RatFunDto,
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<String>,
}

/// Evaluate a function at whichever of (a, z) are pinned; returns None when
/// the needed variables are free.
fn maybe_value(ctx: &Ctx, f: &RatFun2) -> CliResult<Option<String>> {
    let needs_a = !f.num().is_z_only() || !f.den().is_z_only();
    let a = ctx.a_value();
    let z = ctx.z_value();
    if needs_a && a.is_none() {
        return Ok(None);
    }
    // beta = 0 goes through the exact specialization that cancels any
    // removable 1-z factor.
    let f = if ctx.beta == Some(0) {
        f.specialize_z_one()?
    } else {
        f.clone()
    };
    if ctx.beta.is_none() && (f.num().max_degz() > 0 || f.den().max_degz() > 0) {
        return Ok(None);
    }
    let v = f.eval(
        &a.unwrap_or_else(|| rat_int(0)),
        &z.unwrap_or_else(|| rat_int(0)),
    )?;
    Ok(Some(rat_to_string(&v)))
}

fn function_output(ctx: &Ctx, command: &Command, label: &str, f: &RatFun2) -> CliResult<Output> {
    let f = ctx.shift(f)?;
    let value = maybe_value(ctx, &f)?;
    let mut human = format!("{label} = {f}\n");
    if let Some(v) = &value {
        writeln!(human, "value = {v}").unwrap();
    }
    let structured = ctx.envelope(
        command,
        FunctionResult {
            function: (&f).into(),
            value,
        },
    );
    Ok(Output {
        human,
        structured,
        failed: false,
    })
}

fn run_command(ctx: &Ctx, command: Command) -> CliResult<Output> {
    match command {
        Command::XSeries => {
            let t = ctx.tmax;
            let f = x_exp_poly(ctx.n, &ctx.place)?.eval_at(t);
            let series = f.series_expand(0, ctx.lmax);
            let coeffs: Vec<Rat> = (0..=ctx.lmax).map(|l| series.coeff(0, l).clone()).collect();
            let human = format!(
                "X_l at T={t} for l = 0..={}: [{}]\n",
                ctx.lmax,
                rat_list(&coeffs).join(", ")
            );
            #[derive(Serialize)]
            struct R {
                t: u32,
                coeffs: Vec<String>,
            }
            let structured = ctx.envelope(
                &command,
                R {
                    t,
                    coeffs: rat_list(&coeffs),
                },
            );
            Ok(Output {
                human,
                structured,
                failed: false,
            })
        }
        Command::XZero => {
            let f = x_at_zero(ctx.n, &ctx.place)?;
            function_output(ctx, &command, "X(beta; 0)", &f)
        }
        Command::Pi => {
            let f = pi(ctx.n, &ctx.place)?;
            function_output(ctx, &command, "Pi(alpha, beta)", &f)
        }
        Command::WeilZeta => {
            let f = weil_zeta(ctx.n, &ctx.place)?;
            function_output(ctx, &command, "weil zeta", &f)
        }
        Command::Period => {
            let report = local_period_shifted(ctx.n, &ctx.place, ctx.beta0)?;
            let mut human = String::new();
            let mut values = serde_json::Map::new();
            for (label, f) in [
                ("raw", &report.raw),
                ("normalized", &report.normalized),
                ("adjusted", &report.adjusted),
                ("constant_ratio", &report.constant_ratio),
            ] {
                writeln!(human, "{label} = {f}").unwrap();
                if let Some(a) = ctx.a_value() {
                    let v = f.eval(&a, &rat_int(0))?;
                    writeln!(human, "{label} value = {}", rat_to_string(&v)).unwrap();
                    values.insert(label.to_string(), rat_to_string(&v).into());
                }
            }
            #[derive(Serialize)]
            struct R {
                period: PeriodDto,
                #[serde(skip_serializing_if = "serde_json::Map::is_empty")]
                values: serde_json::Map<String, serde_json::Value>,
            }
            let structured = ctx.envelope(
                &command,
                R {
                    period: (&report).into(),
                    values,
                },
            );
            Ok(Output {
                human,
                structured,
                failed: false,
            })
        }
        Command::ConstantTerm => {
            let ct = constant_term_factor(ctx.n, &ctx.place)?;
            let factor = ctx.shift(&ct.factor)?;
            let mut human = format!(
                "prefactor = |lambda|^({})\nfactor = {}\n",
                ct.lambda_exponent, factor
            );
            let mut value = None;
            if let Some(a) = ctx.a_value() {
                let v = factor.eval(&a, &rat_int(0))?;
                writeln!(human, "factor value = {}", rat_to_string(&v)).unwrap();
                value = Some(rat_to_string(&v));
            }
            #[derive(Serialize)]
            struct R {
                constant_term: ConstantTermDto,
                #[serde(skip_serializing_if = "Option::is_none")]
                value: Option<String>,
            }
            let shifted = localperiod::formulas::ConstantTerm {
                lambda_exponent: ct.lambda_exponent,
                factor,
            };
            let structured = ctx.envelope(
                &command,
                R {
                    constant_term: (&shifted).into(),
                    value,
                },
            );
            Ok(Output {
                human,
                structured,
                failed: false,
            })
        }
        Command::Table => {
            let eps = ctx.place.epsilon();
            let form = realize_form(&make_shape(ctx.n, eps)?, &ctx.place)?;
            let table = pi_table_oracle(&form, ctx.tmax, ctx.lmax, &ctx.place, ctx.budget)?;
            let mut human = String::new();
            for (t, row) in table.iter().enumerate() {
                writeln!(human, "T={t}: [{}]", rat_list(row).join(", ")).unwrap();
            }
            #[derive(Serialize)]
            struct R {
                rows: Vec<Vec<String>>,
            }
            let structured = ctx.envelope(
                &command,
                R {
                    rows: table.iter().map(|r| rat_list(r)).collect(),
                },
            );
            Ok(Output {
                human,
                structured,
                failed: false,
            })
        }
        Command::Verify => {
            let grid = GridSpec {
                primes: ctx.params.p.map_or_else(|| vec![3, 5, 7], |p| vec![p]),
                epsilons: ctx
                    .eps_explicit
                    .map_or_else(|| vec![Sign::Plus, Sign::Minus], |s| vec![s]),
                dims: ctx.params.n.map_or_else(|| (0..=6).collect(), |n| vec![n]),
                t_max: ctx.tmax,
                budget_cells: ctx.budget,
            };
            let report = run_verify(&grid)?;
            let mut human = String::new();
            for cell in &report.cells {
                write!(human, "p={} eps={:+} n={}:", cell.p, cell.epsilon, cell.n).unwrap();
                for check in &cell.checks {
                    match check.status {
                        CheckStatus::Pass => write!(human, " {}:pass", check.name).unwrap(),
                        CheckStatus::NotApplicable => write!(human, " {}:n/a", check.name).unwrap(),
                        CheckStatus::Fail => {
                            write!(human, " {}:FAIL", check.name).unwrap();
                            if let Some(m) = &check.mismatch {
                                write!(
                                    human,
                                    "(at {:?}: expected {}, got {})",
                                    m.indices, m.expected, m.got
                                )
                                .unwrap();
                            }
                            if let Some(note) = &check.note {
                                write!(human, "({note})").unwrap();
                            }
                        }
                    }
                }
                human.push('\n');
            }
            writeln!(
                human,
                "summary: {} checks, {} pass, {} fail, {} n/a -> {}",
                report.summary.total,
                report.summary.pass,
                report.summary.fail,
                report.summary.not_applicable,
                if report.has_failures() {
                    "FAIL"
                } else {
                    "PASS"
                }
            )
            .unwrap();
            let failed = report.has_failures();
            let structured = ctx.envelope(&command, report);
            Ok(Output {
                human,
                structured,
                failed,
            })
        }
    }
}

fn handle_baseline(path: &PathBuf, structured: &str) -> CliResult<Option<String>> {
    if path.exists() {
        let stored = std::fs::read_to_string(path)
            .map_err(|e| usage(format!("cannot read baseline {}: {e}", path.display())))?;
        if stored == structured {
            Ok(Some(format!("baseline match: {}", path.display())))
        } else {
            Err(CliError::BaselineMismatch)
        }
    } else {
        std::fs::write(path, structured)
            .map_err(|e| usage(format!("cannot write baseline {}: {e}", path.display())))?;
        Ok(Some(format!("baseline created: {}", path.display())))
    }
}

fn run(args: &Args) -> CliResult<bool> {
    let ctx = build_ctx(args)?;
    let needs_n = !matches!(args.command, Command::Verify);
    if needs_n && args.n.is_none() {
        return Err(usage("--n is required for this command"));
    }
    let out = run_command(&ctx, args.command)?;
    match args.out {
        OutFormat::Human => print!("{}", out.human),
        OutFormat::Structured => print!("{}", out.structured),
    }
    if let Some(path) = &args.baseline {
        if let Some(note) = handle_baseline(path, &out.structured)? {
            eprintln!("{note}");
        }
    }
    Ok(out.failed)
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(&args) {
        Ok(false) => ExitCode::from(0),
        Ok(true) => ExitCode::from(1),
        Err(CliError::Core(Error::BudgetExceeded { required, budget })) => {
            eprintln!("error: work budget exceeded (needs {required} cells, budget {budget})");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
