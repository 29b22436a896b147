//! `ellik` — evaluate complete elliptic integrals and their sharp
//! logarithmic bounds, emit the exact coefficient sequences behind them,
//! and run the verification suites.
//!
//! Exit codes: 0 all pass, 1 claim failure, 2 usage/domain error,
//! 3 indeterminate sign decision.

use clap::{Parser, Subcommand};
use ellik_core::bounds::{self, ln_c_sharp};
use ellik_core::coeffseq::{SeqKind, Sequences};
use ellik_core::elliptic::{agm, ellip_e, ellip_k, grotzsch_mu, mu_inverse, Modulus};
use ellik_core::error::Error;
use ellik_core::exact::{dd_to_rational, rational_to_decimal};
use ellik_core::grid::{GridSpec, Spacing};
use ellik_core::hypergeom::{gauss_2f1, HypParams};
use ellik_core::real::{Dd, Precision, Real};
use ellik_core::verify::{run_suite, Status, VerifyOptions, SUITES};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "ellik",
    about = "Complete elliptic integrals of the first kind, their sharp logarithmic bounds, and the exact machinery that certifies them",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate a named function: K, E, mu, mu_inv, F, Q1, Q2, D, h.
    /// F takes four arguments (a b c x); the others take one.
    Eval {
        function: String,
        args: Vec<String>,
        /// double (17 significant digits) or extended (32)
        #[arg(long, default_value = "double")]
        precision: String,
        /// Constant for Q1; accepts a decimal or the tokens e^{4/3}, pi/ln25
        #[arg(long)]
        c: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit an exact sequence as n,num,den rows:
    /// wallis, beta, alpha, thm2_ratio, q, P5, f3.
    Coeffs {
        sequence: String,
        n_max: usize,
        #[arg(long, default_value = "csv")]
        format: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite (thm1, thm2, thm3, corollaries, sequences,
    /// asymptotics, or all) and emit the report.
    Verify {
        suite: String,
        /// Override the Theorem-1 constant (decimal or e^{4/3}); anything
        /// off the sharp constant makes the concavity claims fail, which
        /// is the point of the flag.
        #[arg(long)]
        c: Option<String>,
        #[arg(long, default_value = "double")]
        precision: String,
        #[arg(long)]
        lo: Option<f64>,
        #[arg(long)]
        hi: Option<f64>,
        #[arg(long)]
        points: Option<usize>,
        #[arg(long, default_value = "json")]
        format: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit x,value CSV rows for K, E, mu, Q1, Q2, D or h over a grid.
    Sweep {
        function: String,
        #[arg(long)]
        c: Option<String>,
        #[arg(long, default_value = "double")]
        precision: String,
        #[arg(long, default_value_t = 1e-6)]
        lo: f64,
        #[arg(long, default_value_t = 1.0 - 1e-6)]
        hi: f64,
        #[arg(long, default_value_t = 1000)]
        points: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Constant argument: a decimal literal or a symbolic token kept exact.
#[derive(Clone, Copy, Debug, PartialEq)]
enum CConst {
    /// e^{4/3}: evaluated through ln c = 4/3 exactly
    Sharp,
    Value(f64),
}

impl CConst {
    fn parse(s: &str) -> Result<CConst, Error> {
        match s {
            "e^{4/3}" => Ok(CConst::Sharp),
            "pi/ln25" => Ok(CConst::Value(std::f64::consts::PI / 25.0f64.ln())),
            other => other
                .parse::<f64>()
                .map(CConst::Value)
                .map_err(|_| Error::Domain(format!("cannot parse constant `{other}`"))),
        }
    }

    fn ln_c<R: Real>(self) -> R {
        match self {
            CConst::Sharp => ln_c_sharp::<R>(),
            CConst::Value(c) => R::from_f64(c).ln(),
        }
    }

    fn value(self) -> f64 {
        match self {
            CConst::Sharp => (4.0f64 / 3.0).exp(),
            CConst::Value(c) => c,
        }
    }
}

fn parse_precision(s: &str) -> Result<Precision, Error> {
    match s {
        "double" => Ok(Precision::Double),
        "extended" => Ok(Precision::Extended),
        other => Err(Error::Domain(format!(
            "precision must be double or extended, got `{other}`"
        ))),
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), Error> {
    match out {
        None => {
            print!("{text}");
            std::io::stdout().flush().ok();
            Ok(())
        }
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::Domain(format!("cannot write {}: {e}", path.display()))),
    }
}

fn format_value(prec: Precision, double: f64, extended: Option<Dd>) -> String {
    match (prec, extended) {
        (Precision::Double, _) | (Precision::Extended, None) => format!("{double:.16e}"),
        (Precision::Extended, Some(v)) => rational_to_decimal(&dd_to_rational(v), 32),
    }
}

fn parse_f64(s: &str) -> Result<f64, Error> {
    s.parse::<f64>()
        .map_err(|_| Error::Domain(format!("cannot parse number `{s}`")))
}

fn mu_dd(r: Dd) -> Result<Dd, Error> {
    let rp = ((Dd::one() - r) * (Dd::one() + r)).sqrt();
    Ok(Dd::PI * Dd::from_ratio(1, 2) * agm(Dd::one(), rp)? / agm(Dd::one(), r)?)
}

fn cmd_eval(
    function: &str,
    args: &[String],
    precision: Precision,
    c: CConst,
    out: &Option<PathBuf>,
) -> Result<(), Error> {
    let need = |n: usize| -> Result<Vec<f64>, Error> {
        if args.len() != n {
            return Err(Error::Domain(format!(
                "{function} takes {n} argument(s), got {}",
                args.len()
            )));
        }
        args.iter().map(|a| parse_f64(a)).collect()
    };
    let line = match function {
        "K" => {
            let a = need(1)?;
            let m = Modulus::new(a[0])?;
            let dd = bounds::k_of_r(Dd::from_f64(a[0]))?;
            format_value(precision, ellip_k(&m), Some(dd))
        }
        "E" => {
            let a = need(1)?;
            let m = Modulus::new(a[0])?;
            let p = HypParams {
                a: 0.5,
                b: -0.5,
                c: 1.0,
            };
            let x = Dd::from_f64(a[0]) * Dd::from_f64(a[0]);
            let dd = Dd::PI * Dd::from_ratio(1, 2) * gauss_2f1(&p, x)?;
            format_value(precision, ellip_e(&m), Some(dd))
        }
        "mu" => {
            let a = need(1)?;
            let m = Modulus::new(a[0])?;
            format_value(precision, grotzsch_mu(&m), Some(mu_dd(Dd::from_f64(a[0]))?))
        }
        "mu_inv" => {
            let a = need(1)?;
            format_value(precision, mu_inverse(a[0])?, None)
        }
        "F" => {
            let a = need(4)?;
            let p = HypParams::new(a[0], a[1], a[2])?;
            let double: f64 = gauss_2f1(&p, a[3])?;
            let dd = gauss_2f1(&p, Dd::from_f64(a[3]))?;
            format_value(precision, double, Some(dd))
        }
        "Q1" => {
            let a = need(1)?;
            if c.value() < 1.0 {
                return Err(Error::Domain(format!("Q1 needs c >= 1, got {}", c.value())));
            }
            let double: f64 = bounds::q1(a[0], c.ln_c::<f64>())?;
            let dd = bounds::q1(Dd::from_f64(a[0]), c.ln_c::<Dd>())?;
            format_value(precision, double, Some(dd))
        }
        "Q2" => {
            let a = need(1)?;
            let double: f64 = bounds::q2(a[0])?;
            let dd = bounds::q2(Dd::from_f64(a[0]))?;
            format_value(precision, double, Some(dd))
        }
        "D" => {
            let a = need(1)?;
            let double: f64 = bounds::d_func(a[0])?;
            let dd = bounds::d_func(Dd::from_f64(a[0]))?;
            format_value(precision, double, Some(dd))
        }
        "h" => {
            let a = need(1)?;
            let double = bounds::h_func(a[0])?.value;
            let dd = bounds::h_func(Dd::from_f64(a[0]))?.value;
            format_value(precision, double, Some(dd))
        }
        other => return Err(Error::Unknown(format!("function `{other}`"))),
    };
    emit(out, &format!("{line}\n"))
}

fn cmd_coeffs(
    sequence: &str,
    n_max: usize,
    format: &str,
    out: &Option<PathBuf>,
) -> Result<(), Error> {
    let kind = SeqKind::parse(sequence)?;
    if n_max < 1 {
        return Err(Error::Domain("n_max must be >= 1".into()));
    }
    let mut seqs = Sequences::new();
    let mut rows = Vec::new();
    for n in kind.first_index()..=n_max {
        let v = kind.value(&mut seqs, n);
        rows.push((n, v.numer().to_string(), v.denom().to_string()));
    }
    let text = match format {
        "csv" => {
            let mut s = String::from("n,num,den\n");
            for (n, num, den) in &rows {
                s.push_str(&format!("{n},{num},{den}\n"));
            }
            s
        }
        "json" => {
            let arr: Vec<serde_json::Value> = rows
                .iter()
                .map(|(n, num, den)| {
                    serde_json::json!({ "n": n, "num": num, "den": den })
                })
                .collect();
            format!("{}\n", serde_json::to_string_pretty(&arr).unwrap())
        }
        other => return Err(Error::Domain(format!("format must be csv or json, got `{other}`"))),
    };
    emit(out, &text)
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    suite: &str,
    c: Option<CConst>,
    precision: Precision,
    lo: Option<f64>,
    hi: Option<f64>,
    points: Option<usize>,
    format: &str,
    out: &Option<PathBuf>,
) -> Result<ExitCode, Error> {
    if suite != "all" && !SUITES.contains(&suite) {
        return Err(Error::Unknown(format!(
            "suite `{suite}` (expected one of {SUITES:?} or all)"
        )));
    }
    let mut opts = VerifyOptions {
        precision,
        ..Default::default()
    };
    if lo.is_some() || hi.is_some() || points.is_some() {
        opts.grid_override = Some(GridSpec::new(
            lo.unwrap_or(GridSpec::DEFAULT_LO),
            hi.unwrap_or(GridSpec::DEFAULT_HI),
            points.unwrap_or(GridSpec::DEFAULT_POINTS),
            Spacing::LogEndpointRefined,
        )?);
    }
    opts.c_override = match c {
        None | Some(CConst::Sharp) => None, // sharp constant stays exact
        Some(CConst::Value(v)) => Some(v),
    };
    let reports = run_suite(suite, &opts)?;
    let text = match format {
        "json" => format!("{}\n", serde_json::to_string_pretty(&reports).unwrap()),
        "csv" => {
            let mut s = String::from("claim_id,status,worst_margin,worst_point,runtime_ms\n");
            for r in &reports {
                s.push_str(&format!(
                    "{},{:?},{},{},{}\n",
                    r.claim_id,
                    r.status,
                    r.worst_margin,
                    r.worst_point,
                    r.runtime_ms
                ));
            }
            s.to_lowercase()
        }
        other => {
            return Err(Error::Domain(format!(
                "format must be csv or json, got `{other}`"
            )))
        }
    };
    emit(out, &text)?;
    let any_fail = reports.iter().any(|r| r.status == Status::Fail);
    let any_indet = reports.iter().any(|r| r.status == Status::Indeterminate);
    Ok(if any_fail {
        ExitCode::from(1)
    } else if any_indet {
        ExitCode::from(3)
    } else {
        ExitCode::SUCCESS
    })
}

fn cmd_sweep(
    function: &str,
    c: CConst,
    precision: Precision,
    lo: f64,
    hi: f64,
    points: usize,
    out: &Option<PathBuf>,
) -> Result<(), Error> {
    let grid = GridSpec::new(lo, hi, points, Spacing::Uniform)?;
    let eval = |x: f64| -> Result<f64, Error> {
        Ok(match function {
            "K" => ellip_k(&Modulus::new(x)?),
            "E" => ellip_e(&Modulus::new(x)?),
            "mu" => grotzsch_mu(&Modulus::new(x)?),
            "Q1" => {
                if precision == Precision::Extended {
                    bounds::q1(Dd::from_f64(x), c.ln_c::<Dd>())?.to_f64()
                } else {
                    bounds::q1(x, c.ln_c::<f64>())?
                }
            }
            "Q2" => bounds::q2(x)?,
            "D" => bounds::d_func(x)?,
            "h" => {
                if precision == Precision::Extended {
                    bounds::h_func(Dd::from_f64(x))?.value.to_f64()
                } else {
                    bounds::h_func(x)?.value
                }
            }
            other => return Err(Error::Unknown(format!("function `{other}`"))),
        })
    };
    let mut text = String::from("x,value\n");
    for x in grid.points_vec() {
        text.push_str(&format!("{x},{}\n", eval(x)?));
    }
    emit(out, &text)
}

fn run() -> Result<ExitCode, Error> {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Eval {
            function,
            args,
            precision,
            c,
            out,
        } => {
            let prec = parse_precision(&precision)?;
            let c = match c {
                None => CConst::Sharp,
                Some(s) => CConst::parse(&s)?,
            };
            cmd_eval(&function, &args, prec, c, &out)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Coeffs {
            sequence,
            n_max,
            format,
            out,
        } => {
            cmd_coeffs(&sequence, n_max, &format, &out)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify {
            suite,
            c,
            precision,
            lo,
            hi,
            points,
            format,
            out,
        } => {
            let prec = parse_precision(&precision)?;
            let c = c.map(|s| CConst::parse(&s)).transpose()?;
            cmd_verify(&suite, c, prec, lo, hi, points, &format, &out)
        }
        Cmd::Sweep {
            function,
            c,
            precision,
            lo,
            hi,
            points,
            out,
        } => {
            let prec = parse_precision(&precision)?;
            let c = match c {
                None => CConst::Sharp,
                Some(s) => CConst::parse(&s)?,
            };
            cmd_sweep(&function, c, prec, lo, hi, points, &out)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("ellik: {e}");
            match e {
                Error::Indeterminate(_) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}
