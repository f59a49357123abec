//! Command-line front end. The binary only forwards `std::env::args` here.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::polycore::{
    format_rational, jacobi_classical, laguerre_classical, parse_rational, Poly, Rational,
};
use crate::potentials::{PotentialSpec, Preset};
use crate::quad::{golub_welsch, Integrator, WeightSpec};
use crate::solver::{solve_levels, spectrum_compare, Grid, Level, SpectrumReport};
use crate::verify::{in_pool, run_verification, write_atomic, VerificationConfig};
use crate::xop::{
    exact_member, gram_schmidt_family, write_family_csv, FamilyRow, Route, XFamilySpec,
};

#[derive(Debug, Parser)]
#[command(
    name = "xop",
    version,
    about = "Exceptional orthogonal polynomials, extended potentials and their checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a verification campaign and write its JSON report.
    Verify {
        #[arg(long)]
        config: PathBuf,
        /// Overrides `output.report` from the config.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print polynomial coefficients.
    Poly(PolyArgs),
    /// Solve a preset Hamiltonian on a grid.
    Spectrum(SpectrumArgs),
    /// Print a Gauss rule.
    Quad(QuadArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RouteArg {
    Operator,
    NullSpace,
    GramSchmidt,
}

impl From<RouteArg> for Route {
    fn from(r: RouteArg) -> Self {
        match r {
            RouteArg::Operator => Route::Operator,
            RouteArg::NullSpace => Route::NullSpace,
            RouteArg::GramSchmidt => Route::GramSchmidt,
        }
    }
}

#[derive(Debug, clap::Args)]
pub struct PolyArgs {
    /// x1-laguerre, x1-jacobi, xj-laguerre, laguerre or jacobi.
    #[arg(long)]
    pub family: String,
    /// Degree.
    #[arg(long)]
    pub n: usize,
    /// Emit every degree from the lowest member up to `n`.
    #[arg(long)]
    pub upto: bool,
    #[arg(long, default_value = "1")]
    pub k: String,
    #[arg(long, default_value = "1")]
    pub alpha: String,
    #[arg(long, default_value = "2")]
    pub beta: String,
    /// Codimension for `xj-laguerre`.
    #[arg(long, default_value_t = 2)]
    pub j: u32,
    #[arg(long, value_enum, default_value = "operator")]
    pub route: RouteArg,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
pub struct SpectrumArgs {
    /// oscillator3d, coulomb, morse or scarf.
    #[arg(long)]
    pub preset: String,
    #[arg(long, default_value_t = 0)]
    pub l: u32,
    #[arg(long = "A", alias = "a", default_value_t = 3.0)]
    pub a: f64,
    #[arg(long = "B", alias = "b", default_value_t = 1.0)]
    pub b: f64,
    #[arg(long, default_value_t = 1.0)]
    pub alpha: f64,
    /// Solve with the rational extension added.
    #[arg(long)]
    pub extended: bool,
    /// Level the extension is built for, where it depends on one.
    #[arg(long, default_value_t = 0)]
    pub level: usize,
    /// Solve both potentials and append the level mapping.
    #[arg(long)]
    pub compare: bool,
    #[arg(long, default_value_t = 3)]
    pub levels: usize,
    #[arg(long = "grid-n", default_value_t = 8000)]
    pub grid_n: usize,
    /// `a,b`; the preset's working interval when absent.
    #[arg(long, allow_hyphen_values = true)]
    pub domain: Option<String>,
    /// Relative tolerance for matching levels.
    #[arg(long, default_value_t = 1e-4)]
    pub tol: f64,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
pub struct QuadArgs {
    /// laguerre, jacobi or legendre.
    #[arg(long)]
    pub rule: String,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 0.0)]
    pub k: f64,
    #[arg(long, default_value_t = 0.0)]
    pub alpha: f64,
    #[arg(long, default_value_t = 0.0)]
    pub beta: f64,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            if code == 0 {
                let _ = write!(stdout, "{}", e.render());
                return 0;
            }
            let _ = write!(stderr, "{}", e.render());
            return 2;
        }
    };
    let outcome = match cli.command {
        Command::Verify { config, out } => cmd_verify(&config, out.as_deref(), stdout, stderr),
        Command::Poly(a) => cmd_poly(&a, stdout).map(|_| 0),
        Command::Spectrum(a) => cmd_spectrum(&a, stdout).map(|_| 0),
        Command::Quad(a) => cmd_quad(&a, stdout).map(|_| 0),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn emit(out: Option<&Path>, bytes: &[u8], stdout: &mut dyn Write) -> Result<()> {
    match out {
        Some(p) => write_atomic(p, bytes),
        None => Ok(stdout.write_all(bytes)?),
    }
}

/// Exit status 1 when any check failed, 0 otherwise.
pub fn cmd_verify(
    config: &Path,
    out: Option<&Path>,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32> {
    let cfg = VerificationConfig::load(config)?;
    let report = run_verification(&cfg)?;
    let mut text = report.to_json()?;
    text.push('\n');
    let target = out
        .map(Path::to_path_buf)
        .or_else(|| cfg.output.report.clone());
    emit(target.as_deref(), text.as_bytes(), stdout)?;
    let s = report.summary;
    writeln!(
        stderr,
        "{} checks: {} pass, {} fail, {} reported",
        s.total, s.pass, s.fail, s.reported
    )?;
    for c in report
        .checks
        .iter()
        .filter(|c| c.status == crate::susy::ClaimStatus::Fail)
    {
        writeln!(
            stderr,
            "FAIL {} (metric {:e}, tolerance {:e})",
            c.id, c.metric, c.tolerance
        )?;
    }
    Ok(report.exit_code())
}

#[derive(Serialize)]
struct PolyJson {
    family: String,
    params: String,
    route: String,
    degree: usize,
    coefficients: Value,
}

fn rational_arg(name: &str, s: &str) -> Result<Rational> {
    parse_rational(s)
        .map_err(|_| Error::invalid(format!("--{name}: cannot parse {s:?} as a rational")))
}

pub fn cmd_poly(a: &PolyArgs, stdout: &mut dyn Write) -> Result<()> {
    let k = || rational_arg("k", &a.k);
    let ab = || {
        Ok::<_, Error>((
            rational_arg("alpha", &a.alpha)?,
            rational_arg("beta", &a.beta)?,
        ))
    };
    let spec = match a.family.as_str() {
        "x1-laguerre" => Some(XFamilySpec::x1_laguerre(k()?)),
        "xj-laguerre" => Some(XFamilySpec::Laguerre { j: a.j, k: k()? }),
        "x1-jacobi" => {
            let (alpha, beta) = ab()?;
            Some(XFamilySpec::Jacobi { alpha, beta })
        }
        "laguerre" | "jacobi" => None,
        other => {
            return Err(Error::invalid(format!(
                "unknown family {other:?} (expected x1-laguerre, x1-jacobi, xj-laguerre, laguerre or jacobi)"
            )))
        }
    };
    let rows: Vec<(FamilyRow, Value)> = match &spec {
        Some(spec) => {
            spec.validate()?;
            if a.n == 0 {
                return Err(Error::invalid(format!("{}: no degree-0 member", spec.id())));
            }
            let lowest = match spec {
                XFamilySpec::Laguerre { j, .. } => *j as usize,
                XFamilySpec::Jacobi { .. } => 1,
            };
            let degrees: Vec<usize> = if a.upto {
                (lowest.min(a.n)..=a.n).collect()
            } else {
                vec![a.n]
            };
            let route = Route::from(a.route);
            if route == Route::GramSchmidt {
                let integrator = Integrator::new(spec.weight())?;
                let family = gram_schmidt_family(spec, &integrator, a.n)?;
                degrees
                    .iter()
                    .map(|&d| {
                        let p = &family[d - 1];
                        (FamilyRow::numeric(p, route, spec), json!(p.coeffs()))
                    })
                    .collect()
            } else {
                degrees
                    .iter()
                    .map(|&d| {
                        let p = exact_member(spec, d, route)?;
                        Ok((FamilyRow::exact(&p, route, spec), serde_json::to_value(&p)?))
                    })
                    .collect::<Result<_>>()?
            }
        }
        None => {
            let degrees: Vec<usize> = if a.upto {
                (0..=a.n).collect()
            } else {
                vec![a.n]
            };
            let (label, make): (String, Box<dyn Fn(usize) -> Poly>) = if a.family == "laguerre" {
                let m = k()?;
                (
                    format!("k={}", format_rational(&m)),
                    Box::new(move |d| laguerre_classical(d, &m)),
                )
            } else {
                let (alpha, beta) = ab()?;
                (
                    format!(
                        "alpha={};beta={}",
                        format_rational(&alpha),
                        format_rational(&beta)
                    ),
                    Box::new(move |d| jacobi_classical(d, &alpha, &beta)),
                )
            };
            degrees
                .iter()
                .map(|&d| {
                    let p = make(d);
                    let row = FamilyRow {
                        degree: d,
                        coefficients: p.coeffs().iter().map(format_rational).collect(),
                        route: "classical".into(),
                        params: label.clone(),
                    };
                    Ok((row, serde_json::to_value(&p)?))
                })
                .collect::<Result<_>>()?
        }
    };
    let mut buf = Vec::new();
    match a.format {
        Format::Csv => write_family_csv(
            &rows.iter().map(|r| r.0.clone()).collect::<Vec<_>>(),
            &mut buf,
        )?,
        Format::Json => {
            let items: Vec<PolyJson> = rows
                .into_iter()
                .map(|(row, coefficients)| PolyJson {
                    family: a.family.clone(),
                    params: row.params,
                    route: row.route,
                    degree: row.degree,
                    coefficients,
                })
                .collect();
            serde_json::to_writer_pretty(&mut buf, &items)?;
            buf.push(b'\n');
        }
    }
    emit(a.out.as_deref(), &buf, stdout)
}

fn parse_domain(s: &str) -> Result<(f64, f64)> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let bad = || Error::invalid(format!("--domain expects a,b with a < b, got {s:?}"));
    if parts.len() != 2 {
        return Err(bad());
    }
    let a: f64 = parts[0].parse().map_err(|_| bad())?;
    let b: f64 = parts[1].parse().map_err(|_| bad())?;
    if !(a < b) || !a.is_finite() || !b.is_finite() {
        return Err(bad());
    }
    Ok((a, b))
}

pub fn spectrum_report(a: &SpectrumArgs) -> Result<SpectrumReport> {
    if a.levels == 0 {
        return Err(Error::invalid("--levels must be at least 1"));
    }
    if !(a.tol > 0.0) {
        return Err(Error::invalid("--tol must be positive"));
    }
    let preset = Preset::from_id(&a.preset, a.l, a.a, a.b, a.alpha)?;
    let (lo, hi) = match &a.domain {
        Some(d) => parse_domain(d)?,
        None => preset.default_domain(a.levels.max(a.level + 1))?,
    };
    let grid = Grid::new(lo, hi, a.grid_n)?;
    let classical = PotentialSpec::classical(preset);
    let extended = PotentialSpec::extended(preset, a.level);
    if a.extended || a.compare {
        extended.validate()?;
    }
    let solve = |spec: PotentialSpec| -> Result<Vec<Level>> {
        Ok(solve_levels(|x| spec.eval(x), &grid, a.levels)?.0)
    };
    let (levels, mapping) = if a.compare {
        let (c, e) = in_pool(|| rayon::join(|| solve(classical), || solve(extended)))?;
        let (c, e) = (c?, e?);
        let ce: Vec<f64> = c.iter().map(|l| l.energy).collect();
        let ee: Vec<f64> = e.iter().map(|l| l.energy).collect();
        let scale = ce.iter().chain(&ee).fold(1.0f64, |m, v| m.max(v.abs()));
        let mapping = spectrum_compare(&ce, &ee, a.tol * scale);
        (if a.extended { e } else { c }, Some(mapping))
    } else {
        (solve(if a.extended { extended } else { classical })?, None)
    };
    let mut params = preset.params_json();
    if let Value::Object(m) = &mut params {
        m.insert("extended".into(), json!(a.extended));
        if preset.level_dependent() && (a.extended || a.compare) {
            m.insert("level".into(), json!(a.level));
        }
    }
    Ok(SpectrumReport {
        preset: preset.id().to_string(),
        params,
        grid,
        levels,
        mapping,
    })
}

pub fn cmd_spectrum(a: &SpectrumArgs, stdout: &mut dyn Write) -> Result<()> {
    let report = spectrum_report(a)?;
    let mut buf = Vec::new();
    match a.format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut buf, &report)?;
            buf.push(b'\n');
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut buf);
            w.write_record(["index", "E", "residual"])?;
            for (i, l) in report.levels.iter().enumerate() {
                w.write_record([
                    i.to_string(),
                    format!("{:e}", l.energy),
                    format!("{:e}", l.residual),
                ])?;
            }
            w.flush()?;
        }
    }
    emit(a.out.as_deref(), &buf, stdout)
}

pub fn cmd_quad(a: &QuadArgs, stdout: &mut dyn Write) -> Result<()> {
    let weight = match a.rule.as_str() {
        "laguerre" => WeightSpec::Laguerre { k: a.k },
        "jacobi" => WeightSpec::Jacobi { alpha: a.alpha, beta: a.beta },
        "legendre" => WeightSpec::legendre(),
        "x1-laguerre" | "x1-jacobi" => {
            return Err(Error::invalid(format!(
                "{}: rational weights have no tabulated rule; integrals against them use the classical rule with node doubling",
                a.rule
            )))
        }
        other => {
            return Err(Error::invalid(format!(
                "unknown rule {other:?} (expected laguerre, jacobi or legendre)"
            )))
        }
    };
    weight.validate()?;
    let rule = golub_welsch(&weight.recurrence(a.n), a.n)?;
    let mut buf = Vec::new();
    match a.format {
        Format::Csv => rule.write_csv(&format!("{} n={}", weight.label(), a.n), &mut buf)?,
        Format::Json => {
            serde_json::to_writer_pretty(
                &mut buf,
                &json!({ "weight": weight, "n": a.n, "rule": rule }),
            )?;
            buf.push(b'\n');
        }
    }
    emit(a.out.as_deref(), &buf, stdout)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("xop").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn poly_lowest_member() {
        let (code, out, _) = run_str(&["poly", "--family", "x1-laguerre", "--k", "1", "--n", "1"]);
        assert_eq!(code, 0);
        assert!(out.contains("-2/1 -1/1"), "{out}");
    }

    #[test]
    fn poly_degree_zero_is_rejected() {
        let (code, _, err) = run_str(&["poly", "--family", "x1-jacobi", "--n", "0"]);
        assert_eq!(code, 2);
        assert!(err.contains("no degree-0 member"));
    }

    #[test]
    fn quad_rejects_rational_weight() {
        assert_eq!(run_str(&["quad", "--rule", "x1-laguerre", "--n", "4"]).0, 2);
        assert_eq!(run_str(&["quad", "--rule", "legendre", "--n", "4"]).0, 0);
    }

    #[test]
    fn bad_arguments_exit_two() {
        assert_eq!(
            run_str(&["spectrum", "--preset", "oscillator3d", "--grid-n", "8"]).0,
            2
        );
        assert_eq!(run_str(&["spectrum", "--preset", "nope"]).0, 2);
        assert_eq!(run_str(&["frobnicate"]).0, 2);
        assert_eq!(run_str(&["--help"]).0, 0);
    }

    #[test]
    fn domain_parsing() {
        assert_eq!(parse_domain("0, 12").unwrap(), (0.0, 12.0));
        assert!(parse_domain("3,1").is_err());
        assert!(parse_domain("1").is_err());
    }
}
