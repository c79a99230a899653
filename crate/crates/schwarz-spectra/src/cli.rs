//! Command-line front end.
//!
//! Grammar: `schwarz-spectra <analyze|to-schwarz|charpoly|verify>
//! [--backend exact|float] [--format plain|json] [--mode ...] [INPUT]`,
//! with the input JSON taken from the argument or standard input (`-`).
//! The environment variable `SCHWARZ_BACKEND` overrides the default backend.
//!
//! Exit codes: 0 success, 1 verification failure or internal inconsistency,
//! 2 theorem precondition failure (vanishing Hurwitz determinant, wrong root
//! pattern, nonpositive sum, ...), 3 malformed input (JSON or literal parse
//! errors, spectra not closed under conjugation, bad flags).

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::classify::{almost_generalized_hurwitz, generalized_hurwitz, Classification};
use crate::error::{Error, Result};
use crate::hurwitz::{hurwitz_determinants, rhp_root_count_from_table};
use crate::inverse::{
    bebiano_from_spectrum, general_from_spectrum, holtz_from_spectrum, schwarz_from_polynomial,
    sn_from_spectrum, stable_from_spectrum, InverseReport, SnFlavor,
};
use crate::oracle;
use crate::poly::{from_roots, Poly};
use crate::scalar::{Rat, Scalar};
use crate::schwarz::{charpoly, classify_by_sign_pattern, SchwarzMatrix};
use crate::spectrum::Spectrum;
use crate::wall::{cf_evaluate, wall_from_determinants, wall_from_euclid};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BackendArg {
    Exact,
    Float,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Plain,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Auto,
    Stable,
    Holtz,
    Sn,
    Bebiano,
}

#[derive(Parser, Debug)]
#[command(
    name = "schwarz-spectra",
    about = "Direct and inverse spectral problems for Schwarz matrices",
    version
)]
struct Cli {
    /// Coefficient backend (default: exact; env SCHWARZ_BACKEND overrides)
    #[arg(long, global = true, value_enum)]
    backend: Option<BackendArg>,

    /// Output format
    #[arg(long, global = true, value_enum)]
    format: Option<FormatArg>,

    /// Float-backend zero threshold for Hurwitz determinants
    #[arg(long, global = true)]
    eps_zero: Option<f64>,

    /// Float-backend realness threshold for roots
    #[arg(long, global = true)]
    eps_im: Option<f64>,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Hurwitz table, half-plane count, classification, Wall coefficients
    Analyze { input: Option<String> },
    /// Reconstruct the unique Schwarz matrix from a polynomial or spectrum
    #[command(name = "to-schwarz")]
    ToSchwarz {
        /// Inverse solver to apply; auto matches preconditions
        #[arg(long, value_enum, default_value_t = ModeArg::Auto)]
        mode: ModeArg,
        input: Option<String>,
    },
    /// Characteristic polynomial and classification of a Schwarz matrix
    Charpoly { input: Option<String> },
    /// Round-trip consistency check (matrix, polynomial, oracle)
    Verify { input: Option<String> },
}

pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Parse(_)
        | Error::ConjugationViolation(_)
        | Error::InvalidInput(_)
        | Error::ZeroEntry(_) => 3,
        Error::Inconsistency(_) | Error::ConvergenceFailure => 1,
        _ => 2,
    }
}

/// Parsed input payload, discriminated by its JSON key.
enum Input {
    Polynomial(Value),
    SpectrumIn(Value),
    Matrix(Value),
}

fn classify_input(text: &str) -> Result<Input> {
    let v: Value = serde_json::from_str(text.trim())
        .map_err(|e| Error::Parse(format!("invalid JSON input: {e}")))?;
    if v.get("coeffs").is_some() {
        Ok(Input::Polynomial(v))
    } else if v.get("roots").is_some() {
        Ok(Input::SpectrumIn(v))
    } else if v.get("b").is_some() {
        Ok(Input::Matrix(v))
    } else {
        Err(Error::Parse(
            "input must carry \"coeffs\" (polynomial), \"roots\" (spectrum) or \"b\" (matrix)"
                .into(),
        ))
    }
}

/// Entry point shared by the binary and the tests. `read_stdin` is consulted
/// only when the input argument is missing or `-`.
pub fn run(args: &[String], read_stdin: impl FnOnce() -> String) -> Outcome {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            // clap renders help/version on stdout with code 0
            if e.use_stderr() {
                return Outcome {
                    code: 3,
                    stdout: String::new(),
                    stderr: e.to_string(),
                };
            }
            return Outcome {
                code: 0,
                stdout: e.to_string(),
                stderr: String::new(),
            };
        }
    };

    if let Err(e) = crate::scalar::set_eps_zero(cli.eps_zero) {
        return fail(&e);
    }
    if let Err(e) = crate::scalar::set_eps_im(cli.eps_im) {
        let _ = crate::scalar::set_eps_zero(None);
        return fail(&e);
    }

    let backend = cli.backend.unwrap_or_else(|| {
        match std::env::var("SCHWARZ_BACKEND").ok().as_deref() {
            Some("float") => BackendArg::Float,
            _ => BackendArg::Exact,
        }
    });
    let format = cli.format.unwrap_or(FormatArg::Plain);

    let input_arg = match &cli.cmd {
        Cmd::Analyze { input }
        | Cmd::ToSchwarz { input, .. }
        | Cmd::Charpoly { input }
        | Cmd::Verify { input } => input.clone(),
    };
    let text = match input_arg.as_deref() {
        Some("-") | None => read_stdin(),
        Some(s) => s.to_string(),
    };

    let result = match backend {
        BackendArg::Exact => dispatch::<Rat>(&cli.cmd, &text, format),
        BackendArg::Float => dispatch::<f64>(&cli.cmd, &text, format),
    };

    // restore default tolerances so embedded callers are unaffected
    let _ = crate::scalar::set_eps_zero(None);
    let _ = crate::scalar::set_eps_im(None);

    match result {
        Ok(outcome) => outcome,
        Err(e) => fail(&e),
    }
}

fn fail(e: &Error) -> Outcome {
    Outcome {
        code: exit_code(e),
        stdout: String::new(),
        stderr: format!("error: {e}\n"),
    }
}

fn dispatch<T: Scalar>(cmd: &Cmd, text: &str, format: FormatArg) -> Result<Outcome> {
    let input = classify_input(text)?;
    match cmd {
        Cmd::Analyze { .. } => cmd_analyze::<T>(input, format),
        Cmd::ToSchwarz { mode, .. } => cmd_to_schwarz::<T>(input, *mode, format),
        Cmd::Charpoly { .. } => cmd_charpoly::<T>(input, format),
        Cmd::Verify { .. } => cmd_verify::<T>(input, format),
    }
}

fn input_poly<T: Scalar>(input: Input) -> Result<Poly<T>> {
    match input {
        Input::Polynomial(v) => {
            let p = Poly::<T>::from_value(&v)?;
            p.require_monic()
        }
        Input::SpectrumIn(v) => from_roots(&Spectrum::<T>::from_value(&v)?),
        Input::Matrix(_) => Err(Error::Parse(
            "this command needs a polynomial or spectrum input".into(),
        )),
    }
}

fn render_deltas<T: Scalar>(deltas: &[T]) -> String {
    deltas
        .iter()
        .enumerate()
        .map(|(i, d)| format!("  Δ{} = {}", i + 1, d.literal()))
        .collect::<Vec<_>>()
        .join("\n")
}

fn cmd_analyze<T: Scalar>(input: Input, format: FormatArg) -> Result<Outcome> {
    let p = input_poly::<T>(input)?;
    let table = hurwitz_determinants(&p)?;
    let degenerate = table.strict_signs().err();
    let rhp = if degenerate.is_none() {
        Some(rhp_root_count_from_table(&table)?)
    } else {
        None
    };
    let stable = table.signs().iter().all(|s| s.is_pos());
    let classification = generalized_hurwitz(&p)?;
    let almost = match almost_generalized_hurwitz(&p) {
        Ok(c) => Some(c),
        Err(Error::VanishesAtZero) => None,
        Err(e) => return Err(e),
    };
    let wall = if degenerate.is_none() {
        Some(wall_from_determinants(&p)?)
    } else {
        None
    };

    let stdout = match format {
        FormatArg::Json => {
            let v = json!({
                "backend": T::NAME,
                "degree": p.degree(),
                "polynomial": p.to_value(),
                "hurwitz": table.to_value(),
                "hurwitz_stable": stable,
                "rhp_count": rhp,
                "classification": classification.to_value(),
                "almost": almost.as_ref().map(Classification::to_value),
                "wall": wall.as_ref().map(|w| w.to_value()),
            });
            format!("{v}\n")
        }
        FormatArg::Plain => {
            let mut out = String::new();
            out.push_str(&format!("backend: {}\n", T::NAME));
            out.push_str(&format!("polynomial: {p}  (degree {})\n", p.degree()));
            out.push_str("hurwitz determinants:\n");
            out.push_str(&render_deltas(table.deltas()));
            out.push('\n');
            out.push_str(&format!("hurwitz stable: {}\n", if stable { "yes" } else { "no" }));
            match rhp {
                Some(m) => out.push_str(&format!("roots in the open right half-plane: {m}\n")),
                None => out.push_str("roots in the open right half-plane: undefined (degenerate)\n"),
            }
            out.push_str(&format!("classification: {classification}\n"));
            if let Some(a) = &almost {
                out.push_str(&format!("almost generalized: {a}\n"));
            }
            if let Some(w) = &wall {
                out.push_str(&format!(
                    "wall coefficients: b = ({})\n",
                    w.b().iter().map(|x| x.literal()).collect::<Vec<_>>().join(", ")
                ));
            }
            out
        }
    };

    if let Some(err) = degenerate {
        return Ok(Outcome {
            code: exit_code(&err),
            stdout,
            stderr: format!("error: {err}\n"),
        });
    }
    Ok(Outcome {
        code: 0,
        stdout,
        stderr: String::new(),
    })
}

fn solve_auto<T: Scalar>(s: &Spectrum<T>) -> Result<InverseReport<T>> {
    if let Ok(r) = stable_from_spectrum(s) {
        return Ok(r);
    }
    if let Ok(r) = holtz_from_spectrum(s) {
        return Ok(r);
    }
    if let Ok(r) = bebiano_from_spectrum(s) {
        return Ok(r);
    }
    if let Ok(r) = sn_from_spectrum(s, SnFlavor::Generalized) {
        return Ok(r);
    }
    if let Ok(r) = sn_from_spectrum(s, SnFlavor::Almost) {
        return Ok(r);
    }
    general_from_spectrum(s)
}

fn cmd_to_schwarz<T: Scalar>(input: Input, mode: ModeArg, format: FormatArg) -> Result<Outcome> {
    let report = match input {
        Input::Polynomial(v) => {
            let p = Poly::<T>::from_value(&v)?.require_monic()?;
            schwarz_from_polynomial(&p)?
        }
        Input::SpectrumIn(v) => {
            let s = Spectrum::<T>::from_value(&v)?;
            match mode {
                ModeArg::Auto => solve_auto(&s)?,
                ModeArg::Stable => stable_from_spectrum(&s)?,
                ModeArg::Holtz => holtz_from_spectrum(&s)?,
                ModeArg::Bebiano => bebiano_from_spectrum(&s)?,
                ModeArg::Sn => sn_from_spectrum(&s, SnFlavor::Generalized)
                    .or_else(|_| sn_from_spectrum(&s, SnFlavor::Almost))?,
            }
        }
        Input::Matrix(_) => {
            return Err(Error::Parse(
                "to-schwarz needs a polynomial or spectrum input".into(),
            ))
        }
    };
    let stdout = match format {
        FormatArg::Json => format!("{}\n", report.to_value()),
        FormatArg::Plain => {
            let mut out = String::new();
            out.push_str(&format!(
                "b = ({})\n",
                report
                    .matrix
                    .b()
                    .iter()
                    .map(|x| x.literal())
                    .collect::<Vec<_>>()
                    .join(", ")
            ));
            out.push_str(&format!("verdict: {}\n", report.verdict));
            for c in &report.checked {
                out.push_str(&format!(
                    "  [{}] {}: {}\n",
                    if c.passed { "ok" } else { "!!" },
                    c.name,
                    c.detail
                ));
            }
            out
        }
    };
    Ok(Outcome {
        code: 0,
        stdout,
        stderr: String::new(),
    })
}

fn cmd_charpoly<T: Scalar>(input: Input, format: FormatArg) -> Result<Outcome> {
    let Input::Matrix(v) = input else {
        return Err(Error::Parse("charpoly needs a matrix input (\"b\")".into()));
    };
    let j = SchwarzMatrix::<T>::from_value(&v)?;
    let p = charpoly(&j);
    let classification = classify_by_sign_pattern(&j);
    let stdout = match format {
        FormatArg::Json => {
            let v = json!({
                "polynomial": p.to_value(),
                "classification": classification.to_value(),
            });
            format!("{v}\n")
        }
        FormatArg::Plain => format!("charpoly: {p}\nclassification: {classification}\n"),
    };
    Ok(Outcome {
        code: 0,
        stdout,
        stderr: String::new(),
    })
}

struct VerifyStep {
    name: &'static str,
    passed: bool,
    detail: String,
}

fn polys_match<T: Scalar>(a: &Poly<T>, b: &Poly<T>) -> bool {
    if T::EXACT {
        return a == b;
    }
    if a.degree() != b.degree() {
        return false;
    }
    a.coeffs().iter().zip(b.coeffs()).all(|(x, y)| {
        let scale = 1.0 + x.approx().abs().max(y.approx().abs());
        (x.approx() - y.approx()).abs() <= 1e-9 * scale
    })
}

fn cmd_verify<T: Scalar>(input: Input, format: FormatArg) -> Result<Outcome> {
    let mut steps: Vec<VerifyStep> = Vec::new();
    let mut step = |name: &'static str, passed: bool, detail: String| {
        steps.push(VerifyStep {
            name,
            passed,
            detail,
        });
    };

    let (j, p) = match input {
        Input::Polynomial(v) => {
            let p = Poly::<T>::from_value(&v)?.require_monic()?;
            let report = schwarz_from_polynomial(&p)?;
            (report.matrix, p)
        }
        Input::SpectrumIn(v) => {
            let s = Spectrum::<T>::from_value(&v)?;
            let p = from_roots(&s)?;
            let report = general_from_spectrum(&s)?;
            let eig = oracle::eigenvalues(&report.matrix)?;
            let dist = oracle::match_distance(eig.roots.as_slice(), s.approx().roots())
                .unwrap_or(f64::INFINITY);
            step(
                "oracle eigenvalues match the input spectrum",
                dist <= 1e-6,
                format!("max pairing distance {dist:.3e}"),
            );
            (report.matrix, p)
        }
        Input::Matrix(v) => {
            let j = SchwarzMatrix::<T>::from_value(&v)?;
            (j.clone(), charpoly(&j))
        }
    };

    step(
        "charpoly reproduces the polynomial",
        polys_match(&charpoly(&j), &p),
        format!("{}", charpoly(&j)),
    );

    let det_route = wall_from_determinants(&p)?;
    let euclid_route = wall_from_euclid(&p)?;
    step(
        "determinant and euclid routes agree",
        det_route == euclid_route.b,
        format!("{} coefficients", det_route.len()),
    );
    step(
        "matrix entries equal the expansion coefficients",
        det_route.b() == j.b(),
        String::new(),
    );
    let (_, den) = cf_evaluate(&det_route);
    step(
        "continued fraction collapses back to p",
        polys_match(&den, &p),
        String::new(),
    );

    let from_poly = oracle::roots(&p)?;
    let from_matrix = oracle::eigenvalues(&j)?;
    let dist = oracle::match_distance(&from_poly.roots, &from_matrix.roots).unwrap_or(f64::INFINITY);
    step(
        "polynomial roots match matrix eigenvalues",
        dist <= 1e-6,
        format!("max pairing distance {dist:.3e}"),
    );

    let pattern_verdict = classify_by_sign_pattern(&j);
    let poly_verdict = generalized_hurwitz(&p)?;
    let agree = match (pattern_verdict.generalized_view(), poly_verdict.generalized_view()) {
        (Some(a), Some(b)) => a == b,
        _ => true, // almost-only patterns have no generalized view to compare
    };
    step(
        "sign-pattern and determinant classifications agree",
        agree,
        format!("{pattern_verdict} / {poly_verdict}"),
    );

    let all_passed = steps.iter().all(|s| s.passed);
    let stdout = match format {
        FormatArg::Json => {
            let v = json!({
                "result": if all_passed { "PASS" } else { "FAIL" },
                "matrix": j.to_value(),
                "checks": steps
                    .iter()
                    .map(|s| json!({ "name": s.name, "passed": s.passed, "detail": s.detail }))
                    .collect::<Vec<_>>(),
            });
            format!("{v}\n")
        }
        FormatArg::Plain => {
            let mut out = String::new();
            for s in &steps {
                out.push_str(&format!(
                    "[{}] {}{}\n",
                    if s.passed { "PASS" } else { "FAIL" },
                    s.name,
                    if s.detail.is_empty() {
                        String::new()
                    } else {
                        format!("  ({})", s.detail)
                    }
                ));
            }
            out.push_str(if all_passed { "PASS\n" } else { "FAIL\n" });
            out
        }
    };
    Ok(Outcome {
        code: if all_passed { 0 } else { 1 },
        stdout,
        stderr: String::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_cli(args: &[&str], stdin: &str) -> Outcome {
        let argv: Vec<String> = std::iter::once("schwarz-spectra".to_string())
            .chain(args.iter().map(|s| s.to_string()))
            .collect();
        let input = stdin.to_string();
        run(&argv, move || input)
    }

    #[test]
    fn analyze_stable_cubic() {
        let out = run_cli(&["analyze", r#"{"coeffs":["1","6","11","6"]}"#], "");
        assert_eq!(out.code, 0, "{}", out.stderr);
        assert!(out.stdout.contains("hurwitz stable: yes"));
        assert!(out.stdout.contains("b = (6, 10, 1)"));
    }

    #[test]
    fn analyze_self_interlacing_cubic() {
        let out = run_cli(
            &["analyze", "--format", "json", r#"{"coeffs":["1","-2","-5","6"]}"#],
            "",
        );
        assert_eq!(out.code, 0);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["classification"]["kind"], "SelfInterlacing");
        assert_eq!(v["classification"]["order"], 2);
        assert_eq!(v["rhp_count"], 2);
        assert_eq!(v["wall"]["b"][0], "-2");
    }

    #[test]
    fn analyze_degenerate_exits_two() {
        let out = run_cli(&["analyze", r#"{"coeffs":["1","0","1"]}"#], "");
        assert_eq!(out.code, 2);
        assert!(out.stderr.contains("Δ1"), "stderr: {}", out.stderr);
    }

    #[test]
    fn to_schwarz_modes() {
        let stable = r#"{"roots":[{"re":"-1","im":"0"},{"re":"-2","im":"0"},{"re":"-3","im":"0"}]}"#;
        let out = run_cli(&["to-schwarz", "--mode", "stable", stable], "");
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains("b = (6, 10, 1)"));

        let holtz = r#"{"roots":[{"re":"3","im":"0"},{"re":"-2","im":"0"},{"re":"1","im":"0"}]}"#;
        let out = run_cli(&["to-schwarz", "--mode", "holtz", holtz], "");
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains("b = (-2, -2, -3)"));

        let imaginary = r#"{"roots":[{"re":"0","im":"1"},{"re":"0","im":"-1"}]}"#;
        let out = run_cli(&["to-schwarz", "--mode", "auto", imaginary], "");
        assert_eq!(out.code, 2, "{}", out.stderr);
    }

    #[test]
    fn charpoly_command() {
        let out = run_cli(&["charpoly", r#"{"b":["-1","1","-1"]}"#], "");
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains("z^3 - z^2 + 1"));
        assert!(out.stdout.contains("type II"));
    }

    #[test]
    fn verify_commands() {
        let out = run_cli(&["verify", r#"{"b":["2","2"]}"#], "");
        assert_eq!(out.code, 0, "{} {}", out.stdout, out.stderr);
        assert!(out.stdout.ends_with("PASS\n"));

        let spectrum = r#"{"roots":[{"re":"3","im":"0"},{"re":"-2","im":"0"},{"re":"1","im":"0"}]}"#;
        let out = run_cli(&["verify", spectrum], "");
        assert_eq!(out.code, 0);

        let orphan = r#"{"roots":[{"re":"1","im":"1"}]}"#;
        let out = run_cli(&["verify", orphan], "");
        assert_eq!(out.code, 3);
    }

    #[test]
    fn parse_errors_exit_three() {
        let out = run_cli(&["analyze", "not json"], "");
        assert_eq!(out.code, 3);
        let out = run_cli(&["analyze", r#"{"coeffs":["1","1.5"]}"#], "");
        assert_eq!(out.code, 3, "exact backend must reject decimals");
        let out = run_cli(&["bogus-subcommand"], "");
        assert_eq!(out.code, 3);
    }

    #[test]
    fn float_backend_accepts_decimals() {
        let out = run_cli(
            &["analyze", "--backend", "float", r#"{"coeffs":["1","2.5","1.5"]}"#],
            "",
        );
        assert_eq!(out.code, 0, "{}", out.stderr);
        assert!(out.stdout.contains("backend: float"));
    }

    #[test]
    fn stdin_input() {
        let out = run_cli(&["analyze", "-"], r#"{"coeffs":["1","5"]}"#);
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains("Δ1 = 5"));
    }

    #[test]
    fn bad_tolerance_exits_three() {
        let out = run_cli(
            &["analyze", "--eps-zero", "-1.0", r#"{"coeffs":["1","5"]}"#],
            "",
        );
        assert_eq!(out.code, 3);
    }
}
