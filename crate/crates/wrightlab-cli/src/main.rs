//! wrightlab command-line front end: single evaluations with method
//! selection, paper-table reproduction, coefficient dumps and the
//! verification suites.

mod render;
mod tables;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use wrightlab::asymptotics::{
    psi11_algebraic_expansion, psi11_largek_smallx, psi11_saddle_approx,
};
use wrightlab::closed_forms::{
    psi11_half_integer_neg, psi11_nonint_k_neg_half, psi11_polynomial, psi11_rho1, ArgSign,
};
use wrightlab::error::WrightError;
use wrightlab::integral_reps::{mixing_relation_rhs, phi_mikusinski, phi_real_integral};
use wrightlab::logscale::LogScaledReal;
use wrightlab::report::MethodReport;
use wrightlab::wright_core::{phi_series, psi11_normalized, psi11_series, PhiParams, WrightParams};
use wrightlab::{asymptotics, closed_forms};

use render::{format_logscaled, write_csv, write_json, EvalRow};

#[derive(Parser)]
#[command(
    name = "wrightlab",
    about = "Evaluates the Wright function 1Psi1(rho,k;rho,delta;x) and the reduced Wright function phi(rho,delta;x) by several independent methods and cross-validates them",
    after_help = "The WRIGHTLAB_MAX_TERMS environment variable overrides the 10000-term series cap."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one function by one or all applicable methods
    Eval(EvalArgs),
    /// Reproduce a numeric table and check it against the printed values
    Table(TableArgs),
    /// Run a named verification suite
    Verify(VerifyArgs),
    /// Print expansion-coefficient sequences (exact rationals where available)
    Coeffs(CoeffsArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FnName {
    Psi11,
    Phi,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct EvalArgs {
    /// Which function to evaluate
    #[arg(long = "fn", value_enum)]
    function: FnName,
    #[arg(long, allow_negative_numbers = true)]
    rho: f64,
    /// Parameter k (1Psi1 only)
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    k: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    delta: f64,
    #[arg(long, allow_negative_numbers = true)]
    x: f64,
    /// Method label (series|poly|closed|saddle|largek|algebraic|quad:<id>|regime) or "all"
    #[arg(long, default_value = "series")]
    method: String,
    /// Divide 1Psi1 by Gamma(k)
    #[arg(long, default_value_t = false)]
    normalized: bool,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Pairwise-difference alert threshold for --method all
    #[arg(long, default_value_t = 1e-6)]
    tol: f64,
}

#[derive(Args)]
struct TableArgs {
    /// Table id: 1 or 2
    #[arg(long)]
    id: u8,
    /// Output CSV path (stdout when omitted)
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// identities | integrals | asymptotics | coeffs | all
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = 1e-6)]
    tol: f64,
}

#[derive(Args)]
struct CoeffsArgs {
    /// d | b | c
    #[arg(long)]
    which: String,
    /// rho as a decimal or p/q fraction
    #[arg(long, allow_hyphen_values = true)]
    rho: String,
    /// k (d-coefficients)
    #[arg(long, default_value_t = 4)]
    k: u32,
    /// number of coefficients (b, c)
    #[arg(long, default_value_t = 5)]
    n: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Eval(a) => cmd_eval(a),
        Command::Table(a) => tables::cmd_table(a.id, a.out.as_deref()),
        Command::Verify(a) => cmd_verify(a),
        Command::Coeffs(a) => cmd_coeffs(a),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("wrightlab: {e}");
            if e.is_validation() {
                ExitCode::from(2)
            } else {
                ExitCode::from(3)
            }
        }
    }
}

fn timed<F: FnOnce() -> wrightlab::Result<MethodReport>>(f: F) -> wrightlab::Result<MethodReport> {
    let start = std::time::Instant::now();
    let mut rep = f()?;
    rep.wall_ns = start.elapsed().as_nanos();
    Ok(rep)
}

fn psi11_methods(a: &EvalArgs) -> Vec<&'static str> {
    let mut m = vec!["series"];
    let int_k = (a.k - a.k.round()).abs() < 1e-12;
    if int_k && a.k >= 1.0 && a.x != 0.0 && a.delta == 0.0 {
        m.push("poly");
    }
    if a.delta == 0.0 && ((a.rho - 1.0).abs() < 1e-12 || (a.rho + 0.5).abs() < 1e-12) {
        m.push("closed");
    }
    if a.delta == 0.0 && a.k > 0.0 && ((a.rho > 0.0 && a.x > 0.0) || (a.rho < 0.0 && a.x < 0.0)) {
        m.push("saddle");
    }
    if a.delta == 0.0 && a.rho > 0.0 && a.x > 0.0 && a.k > 0.0 {
        m.push("largek");
    }
    if a.delta == 0.0 && a.rho > 0.0 && !int_k && a.k > 0.0 && a.x < 0.0 {
        m.push("algebraic");
    }
    if a.delta == 0.0 && a.x != 0.0 && (a.rho > 0.0 || int_k) {
        m.push("quad:mixing");
    }
    m
}

fn eval_psi11_method(a: &EvalArgs, method: &str) -> wrightlab::Result<MethodReport> {
    let p = WrightParams::new(a.rho, a.k, a.delta, a.x)?;
    let gamma_k = wrightlab::specfun::ln_gamma_signed(a.k.max(f64::MIN_POSITIVE))?;
    let normalize = |v: LogScaledReal| -> wrightlab::Result<LogScaledReal> {
        if a.normalized {
            if a.k <= 0.0 {
                return Err(WrightError::Domain("--normalized requires k > 0".into()));
            }
            v.div(gamma_k)
        } else {
            Ok(v)
        }
    };
    match method {
        "series" => timed(|| {
            let v = if a.normalized { psi11_normalized(&p)? } else { psi11_series(&p)? };
            Ok(MethodReport::new("series", v))
        }),
        "poly" => timed(|| {
            let v = normalize(psi11_polynomial(a.rho, a.k.round() as u32, a.x)?)?;
            Ok(MethodReport::new("poly", v))
        }),
        "closed" => timed(|| {
            let int_k = (a.k - a.k.round()).abs() < 1e-12;
            let v = if (a.rho - 1.0).abs() < 1e-12 && int_k {
                psi11_rho1(a.k.round() as u32, a.x)?
            } else if (a.rho + 0.5).abs() < 1e-12 {
                let sign = if a.x >= 0.0 { ArgSign::Plus } else { ArgSign::Minus };
                let v = if int_k {
                    psi11_half_integer_neg(a.k.round() as u32, a.x.abs(), sign)?
                } else {
                    psi11_nonint_k_neg_half(a.k, a.x.abs(), sign)?
                };
                LogScaledReal::from_real(v)
            } else {
                return Err(WrightError::Domain(format!(
                    "closed: no closed form for rho = {}",
                    a.rho
                )));
            };
            Ok(MethodReport::new("closed", normalize(v)?))
        }),
        "saddle" => timed(|| {
            let v = normalize(psi11_saddle_approx(a.rho, a.k, a.x)?)?;
            Ok(MethodReport::new("saddle", v))
        }),
        "largek" => timed(|| {
            let v = normalize(psi11_largek_smallx(a.rho, a.k, a.x, 3)?)?;
            Ok(MethodReport::new("largek", v))
        }),
        "algebraic" => timed(|| {
            let v = normalize(LogScaledReal::from_real(psi11_algebraic_expansion(
                a.rho, a.k, a.x, 6,
            )?))?;
            Ok(MethodReport::new("algebraic", v))
        }),
        "quad:mixing" => timed(|| {
            let r = mixing_relation_rhs(a.rho, a.k, a.x.abs())?;
            let mut rep = MethodReport::new("quad:mixing", normalize(LogScaledReal::from_real(r.value))?);
            rep.est_error = Some(r.abs_err_estimate);
            Ok(rep)
        }),
        other => Err(WrightError::Domain(format!(
            "eval: unknown or inapplicable method '{other}' for psi11"
        ))),
    }
}

fn phi_methods(a: &EvalArgs) -> Vec<&'static str> {
    let mut m = vec!["series"];
    let close = |v: f64| {
        [1.0, -0.5, -1.0 / 3.0, -2.0 / 3.0].iter().any(|c| (v - c).abs() < 1e-12)
    };
    if a.delta == 0.0 && close(a.rho) {
        m.push("closed");
    }
    if a.delta == 0.0 && a.x != 0.0 {
        m.push("regime");
    }
    if a.delta == 0.0 && a.rho < 0.0 && a.x != 0.0 {
        m.push("quad:branch-cut");
        if a.x < 0.0 {
            m.push("quad:mikusinski");
        }
    }
    m
}

fn eval_phi_method(a: &EvalArgs, method: &str) -> wrightlab::Result<MethodReport> {
    let p = PhiParams::new(a.rho, a.delta, a.x)?;
    match method {
        "series" => timed(|| {
            let v = phi_series(&p)?;
            Ok(MethodReport::new("series", LogScaledReal::from_real(v)))
        }),
        "closed" => timed(|| {
            let v = closed_forms::phi_closed(a.rho, a.x)?;
            Ok(MethodReport::new("closed", LogScaledReal::from_real(v)))
        }),
        "regime" => timed(|| {
            if a.rho > 0.0 {
                let v = asymptotics::phi_asym_pos_rho(a.rho, a.x, 4)?;
                let mut rep =
                    MethodReport::new("regime:exponential", LogScaledReal::from_real(v));
                rep.regime = Some("exponential".into());
                Ok(rep)
            } else if a.x > 0.0 {
                Ok(asymptotics::phi_asym_neg_rho_pos_x(-a.rho, a.x, 4)?)
            } else {
                let v = asymptotics::phi_asym_neg_rho_neg_x(-a.rho, -a.x, 5)?;
                let mut rep =
                    MethodReport::new("regime:exponentially-small", LogScaledReal::from_real(v));
                rep.regime = Some("exponentially-small".into());
                Ok(rep)
            }
        }),
        "quad:branch-cut" => timed(|| {
            let r = phi_real_integral(-a.rho, a.x.abs(), a.x > 0.0)?;
            let mut rep =
                MethodReport::new("quad:branch-cut", LogScaledReal::from_real(r.value));
            rep.est_error = Some(r.abs_err_estimate);
            Ok(rep)
        }),
        "quad:mikusinski" => timed(|| {
            let r = phi_mikusinski(-a.rho, -a.x)?;
            let mut rep =
                MethodReport::new("quad:mikusinski", LogScaledReal::from_real(r.value));
            rep.est_error = Some(r.abs_err_estimate);
            Ok(rep)
        }),
        other => Err(WrightError::Domain(format!(
            "eval: unknown or inapplicable method '{other}' for phi"
        ))),
    }
}

fn cmd_eval(a: EvalArgs) -> wrightlab::Result<ExitCode> {
    // validate up front so bad inputs exit 2 regardless of method choice
    match a.function {
        FnName::Psi11 => {
            WrightParams::new(a.rho, a.k, a.delta, a.x)?;
        }
        FnName::Phi => {
            PhiParams::new(a.rho, a.delta, a.x)?;
        }
    }
    let methods: Vec<String> = if a.method == "all" {
        match a.function {
            FnName::Psi11 => psi11_methods(&a).into_iter().map(String::from).collect(),
            FnName::Phi => phi_methods(&a).into_iter().map(String::from).collect(),
        }
    } else {
        vec![a.method.clone()]
    };
    let mut reports = Vec::new();
    for m in &methods {
        let rep = match a.function {
            FnName::Psi11 => eval_psi11_method(&a, m)?,
            FnName::Phi => eval_phi_method(&a, m)?,
        };
        reports.push(rep);
    }
    let mut rows: Vec<EvalRow> = reports
        .iter()
        .map(|r| EvalRow {
            method: r.method.clone(),
            value: format_logscaled(r.value),
            est_error: r.est_error,
            regime: r.regime.clone(),
        })
        .collect();
    if a.method == "all" {
        for i in 0..reports.len() {
            for j in i + 1..reports.len() {
                let d = reports[i].value.rel_diff(reports[j].value);
                rows.push(EvalRow {
                    method: format!("diff:{}|{}", reports[i].method, reports[j].method),
                    value: format!("{d:.8e}"),
                    est_error: None,
                    regime: None,
                });
            }
        }
    }
    match a.format {
        Format::Csv => write_csv(&rows, &mut std::io::stdout())
            .map_err(|e| WrightError::Numerical(format!("io: {e}")))?,
        Format::Json => write_json(&rows, &mut std::io::stdout())
            .map_err(|e| WrightError::Numerical(format!("io: {e}")))?,
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(a: VerifyArgs) -> wrightlab::Result<ExitCode> {
    let results = wrightlab::verify::run_suite(&a.suite, a.tol)?;
    let mut all_pass = true;
    for r in &results {
        let status = if r.passed { "PASS" } else { "FAIL" };
        println!(
            "{status}  {name}  worst_residual={worst:.3e}  tolerance={tol:.3e}",
            name = r.name,
            worst = r.worst_residual,
            tol = r.tolerance
        );
        all_pass &= r.passed;
    }
    Ok(if all_pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_coeffs(a: CoeffsArgs) -> wrightlab::Result<ExitCode> {
    let rho = wrightlab::asymptotics::coeffs::parse_rational(&a.rho).ok_or_else(|| {
        WrightError::Domain(format!("coeffs: cannot parse rho = '{}' as a rational", a.rho))
    })?;
    let rendered: Vec<String> = match a.which.as_str() {
        "d" => wrightlab::asymptotics::coeffs::d_coeffs_rational(&rho, a.k)?
            .iter()
            .map(|r| r.to_string())
            .collect(),
        "b" => wrightlab::asymptotics::coeffs::b_coeffs_rational(&rho, a.n)?
            .iter()
            .map(|r| r.to_string())
            .collect(),
        "c" => wrightlab::asymptotics::coeffs::c_coeffs_rational(&rho, a.n)?
            .iter()
            .map(|r| r.to_string())
            .collect(),
        other => {
            return Err(WrightError::Domain(format!(
                "coeffs: unknown table '{other}' (expected d|b|c)"
            )))
        }
    };
    println!("{}", rendered.join(", "));
    Ok(ExitCode::SUCCESS)
}
