//! The four check suites.

use std::f64::consts::FRAC_PI_2;
use std::time::Instant;

use rayon::prelude::*;
use serde_json::{json, Value};

use super::config::{Suite, VerificationConfig};
use super::report::{Bound, CheckResult};
use crate::error::Result;
use crate::polycore::{format_rational, int, laguerre_classical, to_f64, FloatPoly, Poly};
use crate::potentials::{
    closed_form_eigenstate, jacobi_quotient_identity_check, quotient_identity_check,
    xj_quotient_identity_check, xj_quotient_polynomial_solve, PotentialSpec, Preset,
    QuotientConvention, StateKind,
};
use crate::quad::{gram_matrix, max_normalized_off_diagonal, Integrator};
use crate::solver::{discretize, rayleigh_quotient, solve_levels, spectrum_compare, Grid};
use crate::susy::{
    audit_claims, commutator_residual, factorized_lowest, intertwine_check, partner_potentials,
    random_smooth_states, superpotential_from_ground_state, ClaimStatus, ImpReading,
    Superpotential,
};
use crate::xop::{
    coefficient_rel_diff, exact_member, gram_schmidt_family, x1_jacobi_ode_residual,
    x1_laguerre_ode_residual, Route, XFamilySpec,
};

type Job<'a> = Box<dyn FnOnce() -> Vec<CheckResult> + Send + 'a>;

/// Identity of a check, handed to its body so it can build the result.
struct Ctx {
    id: String,
    claim: &'static str,
    params: Value,
}

impl Ctx {
    fn checked(&self, metric: f64, tolerance: f64, bound: Bound) -> CheckResult {
        CheckResult::checked(
            self.id.clone(),
            self.claim,
            self.params.clone(),
            metric,
            tolerance,
            bound,
        )
    }

    fn reported(&self, metric: f64, tolerance: f64) -> CheckResult {
        CheckResult::reported(
            self.id.clone(),
            self.claim,
            self.params.clone(),
            metric,
            tolerance,
        )
    }
}

fn job<'a>(
    id: String,
    claim: &'static str,
    params: Value,
    body: impl FnOnce(&Ctx) -> Result<CheckResult> + Send + 'a,
) -> Job<'a> {
    let id = format!("{id}[{}]", params_tag(&params));
    Box::new(move || vec![run_one(id, claim, params, body)])
}

/// `k=7/2,j=2` from a flat parameter object, so ids stay unique across a grid.
fn params_tag(params: &Value) -> String {
    match params {
        Value::Object(m) => m
            .iter()
            .map(|(k, v)| match v {
                Value::String(s) => format!("{k}={s}"),
                other => format!("{k}={other}"),
            })
            .collect::<Vec<_>>()
            .join(","),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

fn run_one(
    id: String,
    claim: &'static str,
    params: Value,
    body: impl FnOnce(&Ctx) -> Result<CheckResult>,
) -> CheckResult {
    let start = Instant::now();
    let ctx = Ctx { id, claim, params };
    match body(&ctx) {
        Ok(r) => r.timed(start),
        Err(e) => CheckResult::errored(ctx.id, ctx.claim, ctx.params, &e).timed(start),
    }
}

/// Runs one suite; results keep the suite's own deterministic order.
pub fn run_suite(suite: Suite, cfg: &VerificationConfig) -> Vec<CheckResult> {
    let jobs = match suite {
        Suite::Xop => xop_jobs(cfg),
        Suite::Theorem => theorem_jobs(cfg),
        Suite::Spectra => spectra_jobs(cfg),
        Suite::Susy => susy_jobs(cfg),
        Suite::All => {
            return Suite::CONCRETE
                .iter()
                .flat_map(|&s| run_suite(s, cfg))
                .collect()
        }
    };
    jobs.into_par_iter().flat_map_iter(|j| j()).collect()
}

/// A check that must fail: an exact eigen-equation residual of a perturbed member.
pub fn negative_control_check() -> CheckResult {
    let params = json!({ "k": "1", "n": 3 });
    run_one(
        "negative-control/corrupted-exact-residual".into(),
        "x1-laguerre eigen-equation on a member with its constant term shifted by one",
        params,
        |ctx| {
            let k = int(1);
            let f = exact_member(&XFamilySpec::x1_laguerre(k.clone()), 3, Route::Operator)?;
            let corrupted = &f + &Poly::one();
            let nonzero = !x1_laguerre_ode_residual(&corrupted, &k, 3).is_zero();
            Ok(ctx.checked(f64::from(u8::from(nonzero)), 0.0, Bound::Below))
        },
    )
}

fn families(cfg: &VerificationConfig) -> Vec<XFamilySpec> {
    let p = &cfg.params;
    p.k.iter()
        .map(|k| XFamilySpec::x1_laguerre(k.0.clone()))
        .chain(p.jacobi.iter().map(|j| XFamilySpec::Jacobi {
            alpha: j.alpha.0.clone(),
            beta: j.beta.0.clone(),
        }))
        .collect()
}

fn family_params(spec: &XFamilySpec) -> Value {
    match spec {
        XFamilySpec::Laguerre { j, k } => json!({ "j": j, "k": format_rational(k) }),
        XFamilySpec::Jacobi { alpha, beta } => {
            json!({ "alpha": format_rational(alpha), "beta": format_rational(beta) })
        }
    }
}

fn ode_residual(spec: &XFamilySpec, f: &Poly, n: usize) -> Result<Poly> {
    match spec {
        XFamilySpec::Laguerre { k, .. } => Ok(x1_laguerre_ode_residual(f, k, n)),
        XFamilySpec::Jacobi { alpha, beta } => x1_jacobi_ode_residual(f, alpha, beta, n),
    }
}

fn xop_jobs(cfg: &VerificationConfig) -> Vec<Job<'_>> {
    let mut jobs: Vec<Job<'_>> = Vec::new();
    let exact_max = cfg.params.exact_max_degree;
    let max = cfg.params.max_degree;
    let tol = &cfg.tolerances;
    for spec in families(cfg) {
        let fam = spec.id();
        let params = family_params(&spec);
        let s = spec.clone();
        jobs.push(job(
            format!("xop/{fam}/ode-residual"),
            "cleared eigen-equation residual of the operator-route members is the zero polynomial",
            params.clone(),
            move |ctx| {
                let mut nonzero = Vec::new();
                for n in 1..=exact_max {
                    let f = exact_member(&s, n, Route::Operator)?;
                    if !ode_residual(&s, &f, n)?.is_zero() {
                        nonzero.push(n);
                    }
                }
                Ok(ctx
                    .checked(nonzero.len() as f64, 0.0, Bound::Below)
                    .with_detail(json!({ "degrees": [1, exact_max], "nonzero_at": nonzero })))
            },
        ));
        let s = spec.clone();
        jobs.push(job(
            format!("xop/{fam}/route-agreement"),
            "operator, null-space and Gram-Schmidt members agree up to scale",
            params.clone(),
            move |ctx| {
                let integrator = Integrator::new(s.weight())?;
                let gs = gram_schmidt_family(&s, &integrator, max)?;
                let (mut ns_worst, mut gs_worst) = (0.0f64, 0.0f64);
                for n in 1..=max {
                    let op = exact_member(&s, n, Route::Operator)?.to_f64_coeffs();
                    let ns = exact_member(&s, n, Route::NullSpace)?.to_f64_coeffs();
                    ns_worst = ns_worst.max(coefficient_rel_diff(&op, &ns));
                    gs_worst = gs_worst.max(coefficient_rel_diff(&op, gs[n - 1].coeffs()));
                }
                Ok(ctx
                    .checked(ns_worst.max(gs_worst), tol.route_agreement, Bound::Below)
                    .with_detail(json!({ "null_space": ns_worst, "gram_schmidt": gs_worst, "max_degree": max })))
            },
        ));
        let s = spec;
        jobs.push(job(
            format!("xop/{fam}/orthogonality"),
            "members are orthogonal under the rational weight",
            params,
            move |ctx| {
                let integrator = Integrator::new(s.weight())?;
                let polys = (1..=max)
                    .map(|n| exact_member(&s, n, Route::Operator).map(|p| FloatPoly::from(&p)))
                    .collect::<Result<Vec<_>>>()?;
                let g = gram_matrix(&polys, &integrator)?;
                Ok(ctx.checked(
                    max_normalized_off_diagonal(&g),
                    tol.orthogonality,
                    Bound::Below,
                ))
            },
        ));
    }
    jobs
}

fn theorem_jobs(cfg: &VerificationConfig) -> Vec<Job<'_>> {
    let mut jobs: Vec<Job<'_>> = Vec::new();
    let max = cfg.params.max_degree;
    let tol = &cfg.tolerances;
    for k in cfg.params.k.iter().map(|k| k.0.clone()) {
        let params = json!({ "k": format_rational(&k) });
        for conv in [
            QuotientConvention::Consistent,
            QuotientConvention::AsPrinted,
        ] {
            let k = k.clone();
            let (id, claim) = match conv {
                QuotientConvention::Consistent => (
                    "theorem/laguerre-quotient",
                    "g = f/(x+k) solves the classical Laguerre equation with the extension subtracted",
                ),
                QuotientConvention::AsPrinted => (
                    "theorem/laguerre-quotient-as-printed",
                    "g = f/(x+k) solves the classical Laguerre equation with the extension added",
                ),
            };
            jobs.push(job(id.into(), claim, params.clone(), move |ctx| {
                let grid = Grid::new(0.01, 40.0, 4000)?;
                let mut worst = 0.0f64;
                for n in 1..=max {
                    let f = exact_member(&XFamilySpec::x1_laguerre(k.clone()), n, Route::Operator)?;
                    worst = worst.max(quotient_identity_check(&f, &k, &grid, conv)?);
                }
                Ok(match conv {
                    QuotientConvention::Consistent => ctx.checked(worst, tol.theorem, Bound::Below),
                    QuotientConvention::AsPrinted => ctx.reported(worst, tol.theorem),
                })
            }));
        }
        let kk = k.clone();
        jobs.push(job(
            "theorem/laguerre-quotient-negative-control".into(),
            "classical Laguerre polynomials in place of exceptional members leave a large residual",
            params.clone(),
            move |ctx| {
                let grid = Grid::new(0.01, 40.0, 4000)?;
                let mut smallest = f64::INFINITY;
                for n in 1..=4 {
                    let wrong = laguerre_classical(n, &kk);
                    smallest = smallest.min(quotient_identity_check(
                        &wrong,
                        &kk,
                        &grid,
                        QuotientConvention::Consistent,
                    )?);
                }
                Ok(ctx.checked(smallest, tol.negative_control, Bound::Above))
            },
        ));
        for &j in &cfg.params.xj {
            let params = json!({ "k": format_rational(&k), "j": j });
            let kk = k.clone();
            jobs.push(job(
                "theorem/xj-quotient".into(),
                "g = f/(x+k)^j built from the analytic solution of the codimension-j equation solves the classical equation with the extension",
                params.clone(),
                move |ctx| {
                    let grid = Grid::new(0.0, 0.8 * to_f64(&kk), 400)?;
                    let mut worst = 0.0f64;
                    let mut rows = Vec::new();
                    for n in j..=j + 3 {
                        let rep = xj_quotient_identity_check(&kk, j, &int(n as i64), &grid)?;
                        worst = worst.max(rep.consistent);
                        rows.push(serde_json::to_value(&rep)?);
                    }
                    Ok(ctx.checked(worst, tol.theorem, Bound::Below).with_detail(json!({ "labels": rows })))
                },
            ));
            let kk = k.clone();
            jobs.push(job(
                "theorem/xj-polynomial-members".into(),
                "the cleared codimension-j quotient equation has a polynomial solution of every degree from j upward",
                params,
                move |ctx| {
                    let mut missing = Vec::new();
                    let mut missing_printed = Vec::new();
                    for d in j as usize..=max {
                        if xj_quotient_polynomial_solve(&kk, j, d, QuotientConvention::Consistent)?.is_empty() {
                            missing.push(d);
                        }
                        if xj_quotient_polynomial_solve(&kk, j, d, QuotientConvention::AsPrinted)?.is_empty() {
                            missing_printed.push(d);
                        }
                    }
                    Ok(ctx
                        .checked(missing.len() as f64, 0.0, Bound::Below)
                        .with_detail(json!({ "missing_degrees": missing, "missing_degrees_as_printed": missing_printed })))
                },
            ));
        }
    }
    for pair in &cfg.params.jacobi {
        let (a, b) = (pair.alpha.0.clone(), pair.beta.0.clone());
        let params = json!({ "alpha": format_rational(&a), "beta": format_rational(&b) });
        for conv in [
            QuotientConvention::Consistent,
            QuotientConvention::AsPrinted,
        ] {
            let (a, b) = (a.clone(), b.clone());
            let (id, claim) = match conv {
                QuotientConvention::Consistent => (
                    "theorem/jacobi-quotient",
                    "g = f/(x-b) solves the classical Jacobi equation with the extension, eigenvalue shifted consistently",
                ),
                QuotientConvention::AsPrinted => (
                    "theorem/jacobi-quotient-as-printed",
                    "g = f/(x-b) solves the Jacobi equation with the extension folded into the eigenvalue as printed",
                ),
            };
            jobs.push(job(id.into(), claim, params.clone(), move |ctx| {
                let grid = Grid::new(-0.999, 0.999, 2000)?;
                let spec = XFamilySpec::Jacobi {
                    alpha: a.clone(),
                    beta: b.clone(),
                };
                let mut worst = 0.0f64;
                for n in 1..=max {
                    let f = exact_member(&spec, n, Route::Operator)?;
                    worst = worst.max(jacobi_quotient_identity_check(&f, &a, &b, &grid, conv)?);
                }
                Ok(match conv {
                    QuotientConvention::Consistent => ctx.checked(worst, tol.theorem, Bound::Below),
                    QuotientConvention::AsPrinted => ctx.reported(worst, tol.theorem),
                })
            }));
        }
    }
    jobs
}

const SPECTRUM_LEVELS: usize = 3;

fn lowest_energies(p: &Preset, grid: &Grid, count: usize, extended: bool) -> Result<Vec<f64>> {
    let spec = if extended {
        PotentialSpec::extended(*p, 0)
    } else {
        PotentialSpec::classical(*p)
    };
    spec.validate()?;
    Ok(solve_levels(|x| spec.eval(x), grid, count)?
        .0
        .into_iter()
        .map(|l| l.energy)
        .collect())
}

fn relative_errors(p: &Preset, energies: &[f64]) -> Result<Vec<f64>> {
    energies
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let exact = p.energy(i)?;
            Ok((e - exact).abs() / exact.abs().max(1.0))
        })
        .collect()
}

fn scarf_presets(cfg: &VerificationConfig) -> Vec<Preset> {
    cfg.params
        .scarf
        .iter()
        .map(|s| Preset::Scarf {
            a: s.a,
            b: s.b,
            alpha: s.alpha,
        })
        .collect()
}

fn spectra_jobs(cfg: &VerificationConfig) -> Vec<Job<'_>> {
    let mut jobs: Vec<Job<'_>> = Vec::new();
    let tol = &cfg.tolerances;
    let grid_cfg = &cfg.grid;
    for &l in &cfg.params.l {
        let p = Preset::Oscillator3d { l };
        let params = p.params_json();
        jobs.push(job(
            "spectra/oscillator-levels".into(),
            "the grid spectrum reproduces the closed-form oscillator levels",
            params.clone(),
            move |ctx| {
                let (a, b) = p.default_domain(SPECTRUM_LEVELS)?;
                let grid = Grid::new(a, b, grid_cfg.spectrum_n)?;
                let e = lowest_energies(&p, &grid, SPECTRUM_LEVELS, false)?;
                let err = relative_errors(&p, &e)?;
                let worst = err.iter().fold(0.0f64, |m, v| m.max(*v));
                Ok(ctx
                    .checked(worst, tol.spectrum, Bound::Below)
                    .with_detail(json!({ "energies": e, "relative_errors": err, "grid": grid })))
            },
        ));
        jobs.push(job(
            "spectra/convergence-order".into(),
            "eigenvalue error falls off as the square of the grid spacing",
            params.clone(),
            move |ctx| {
                let (a, b) = p.default_domain(SPECTRUM_LEVELS)?;
                let coarse = Grid::new(a, b, (grid_cfg.spectrum_n + 1) / 4 - 1)?;
                let fine = coarse.refined(4);
                let ec =
                    relative_errors(&p, &lowest_energies(&p, &coarse, SPECTRUM_LEVELS, false)?)?;
                let ef = relative_errors(&p, &lowest_energies(&p, &fine, SPECTRUM_LEVELS, false)?)?;
                let orders: Vec<f64> = ec
                    .iter()
                    .zip(&ef)
                    .map(|(c, f)| (c / f).ln() / 4f64.ln())
                    .collect();
                let worst = orders.iter().fold(0.0f64, |m, o| m.max((o - 2.0).abs()));
                Ok(ctx
                    .checked(worst, tol.convergence_order, Bound::Below)
                    .with_detail(
                        json!({ "orders": orders, "coarse_n": coarse.n, "fine_n": fine.n }),
                    ))
            },
        ));
    }
    let iso: Vec<Preset> = cfg
        .params
        .l
        .iter()
        .map(|&l| Preset::Oscillator3d { l })
        .chain(scarf_presets(cfg))
        .collect();
    for p in iso {
        let params = p.params_json();
        jobs.push(job(
            format!("spectra/{}/isospectral-rayleigh", p.id()),
            "exceptional closed-form states of the extended potential carry the classical energies",
            params.clone(),
            move |ctx| {
                let (a, b) = p.default_domain(SPECTRUM_LEVELS + 1)?;
                let grid = Grid::new(a, b, grid_cfg.rayleigh_n)?;
                let mut rel = Vec::new();
                for level in 0..SPECTRUM_LEVELS {
                    let spec = PotentialSpec::extended(p, level);
                    let t = discretize(|x| spec.eval(x), &grid)?;
                    let psi =
                        closed_form_eigenstate(&p, level, StateKind::Exceptional)?.sample(&grid)?;
                    let e = p.energy(level)?;
                    rel.push((rayleigh_quotient(&t, &psi)? - e).abs() / e.abs().max(1.0));
                }
                let worst = rel.iter().fold(0.0f64, |m, v| m.max(*v));
                Ok(ctx
                    .checked(worst, tol.isospectral, Bound::Below)
                    .with_detail(json!({ "relative_errors": rel })))
            },
        ));
        jobs.push(job(
            format!("spectra/{}/level-mapping", p.id()),
            "classical and extended spectra coincide, ground state included",
            params,
            move |ctx| {
                let count = SPECTRUM_LEVELS + 1;
                let (a, b) = p.default_domain(count + 1)?;
                let grid = Grid::new(a, b, grid_cfg.spectrum_n)?;
                let classical = lowest_energies(&p, &grid, count, false)?;
                let extended = lowest_energies(&p, &grid, count, true)?;
                let scale = classical
                    .iter()
                    .chain(&extended)
                    .fold(1.0f64, |m, e| m.max(e.abs()));
                let mapping = spectrum_compare(&classical, &extended, tol.spectrum * scale);
                Ok(ctx
                    .reported(mapping.max_diff, mapping.tol)
                    .with_detail(json!({
                        "classical": classical,
                        "extended": extended,
                        "mapping": mapping,
                    })))
            },
        ));
    }
    jobs
}

fn scarf_edge(alpha: f64, inset: f64) -> f64 {
    FRAC_PI_2 / alpha - inset
}

/// Superpotentials under test, each with the grid it is examined on.
fn superpotentials(cfg: &VerificationConfig) -> Result<Vec<(Superpotential, Grid)>> {
    let mut out = Vec::new();
    for &l in &cfg.params.l {
        let g = Grid::new(0.1, 10.0, 2000)?;
        out.push((Superpotential::oscillator_extension(l), g));
        for reading in ImpReading::ALL {
            out.push((Superpotential::imp_candidate(l, l as f64 + 0.5, reading), g));
        }
        let p = Preset::Oscillator3d { l };
        let (a, b) = p.default_domain(1)?;
        let gg = Grid::new(a, b.min(10.0), 2000)?;
        let psi0 = closed_form_eigenstate(&p, 0, StateKind::Classical)?.sample(&gg)?;
        out.push((superpotential_from_ground_state(&psi0)?, gg));
    }
    for s in &cfg.params.scarf {
        let edge = scarf_edge(s.alpha, 1e-3);
        out.push((
            Superpotential::scarf_extension(s.a, s.b, s.alpha)?,
            Grid::new(-edge, edge, 2000)?,
        ));
    }
    Ok(out)
}

fn susy_jobs(cfg: &VerificationConfig) -> Vec<Job<'_>> {
    let mut jobs: Vec<Job<'_>> = Vec::new();
    let tol = &cfg.tolerances;
    let grid_cfg = &cfg.grid;
    match superpotentials(cfg) {
        Ok(ws) => {
            for (w, grid) in ws {
                let params = json!({ "W": w.label(), "provenance": w.provenance() });
                jobs.push(job(
                    "susy/construction".into(),
                    "partner potentials built from one superpotential differ by twice its derivative",
                    params,
                    move |ctx| {
                        let (wv, dw) = w.sample(&grid)?;
                        let scale = wv.iter().map(|v| v * v).chain(dw.iter().map(|d| 2.0 * d.abs())).fold(1.0f64, f64::max);
                        let dev = partner_potentials(&w, 0.0).construction_deviation(&grid)?;
                        Ok(ctx.checked(dev / scale, tol.construction, Bound::Below))
                    },
                ));
            }
        }
        Err(e) => jobs.push(job(
            "susy/construction".into(),
            "partner potentials built from one superpotential differ by twice its derivative",
            Value::Null,
            move |_| Err(e),
        )),
    }

    let mut commutator_cases: Vec<(Superpotential, (f64, f64))> = Vec::new();
    for &l in &cfg.params.l {
        commutator_cases.push((Superpotential::oscillator_extension(l), (0.5, 10.0)));
        commutator_cases.push((
            Superpotential::imp_candidate(l, l as f64 + 0.5, ImpReading::Literal),
            (0.5, 10.0),
        ));
    }
    for s in &cfg.params.scarf {
        if let Ok(w) = Superpotential::scarf_extension(s.a, s.b, s.alpha) {
            let edge = scarf_edge(s.alpha, 0.3);
            commutator_cases.push((w, (-edge, edge)));
        }
    }
    for (w, (a, b)) in commutator_cases {
        let params = json!({ "W": w.label(), "states": 5, "seed": grid_cfg.seed });
        jobs.push(job(
            "susy/commutator".into(),
            "the intertwining relation holds as an operator identity for partners of one superpotential",
            params,
            move |ctx| {
                let grid = Grid::new(a, b, grid_cfg.operator_n)?;
                let mut worst = 0.0f64;
                for psi in random_smooth_states(&grid, 5, grid_cfg.seed)? {
                    worst = worst.max(commutator_residual(&w, &psi)?);
                }
                Ok(ctx.checked(worst, tol.commutator, Bound::Below))
            },
        ));
    }

    let mut ls: Vec<u32> = cfg.params.l.iter().map(|&l| l.max(1)).collect();
    ls.sort_unstable();
    ls.dedup();
    for l in ls {
        let params = json!({ "l": l, "levels": 4 });
        jobs.push(job(
            "susy/oscillator-positivity".into(),
            "both factorized operators are non-negative",
            params.clone(),
            move |ctx| {
                let w = Superpotential::oscillator_extension(l);
                let grid = Grid::new(0.0, 14.0, grid_cfg.spectrum_n)?;
                let (plus, minus) = factorized_lowest(&w, &grid)?;
                Ok(ctx
                    .checked(plus.min(minus), -tol.positivity, Bound::Above)
                    .with_detail(json!({ "lowest_a_dagger_a": plus, "lowest_a_a_dagger": minus })))
            },
        ));
        jobs.push(job(
            "susy/oscillator-intertwining".into(),
            "the intertwiner maps each classical state of angular momentum l-1 onto an exceptional state of angular momentum l",
            params,
            move |ctx| {
                let grid = Grid::new(0.0, 14.0, grid_cfg.intertwine_n)?;
                let w = Superpotential::oscillator_extension(l);
                let targets = (0..4)
                    .map(|mu| closed_form_eigenstate(&Preset::Oscillator3d { l }, mu, StateKind::Exceptional)?.sample(&grid))
                    .collect::<Result<Vec<_>>>()?;
                let mut best_worst = 0.0f64;
                let mut mismatch_min = f64::INFINITY;
                let mut mapping = Vec::new();
                for nu in 0..4 {
                    let src = closed_form_eigenstate(&Preset::Oscillator3d { l: l - 1 }, nu, StateKind::Classical)?.sample(&grid)?;
                    let res = targets
                        .iter()
                        .map(|t| intertwine_check(&w, &src, t).map(|r| r.rel_residual))
                        .collect::<Result<Vec<_>>>()?;
                    let (best, best_res) = res
                        .iter()
                        .copied()
                        .enumerate()
                        .min_by(|a, b| a.1.total_cmp(&b.1))
                        .unwrap_or((0, f64::INFINITY));
                    best_worst = best_worst.max(best_res);
                    for (mu, r) in res.iter().enumerate() {
                        if mu != best {
                            mismatch_min = mismatch_min.min(*r);
                        }
                    }
                    mapping.push(json!({ "source": nu, "target": best, "residual": best_res, "all": res }));
                }
                let ok = best_worst <= tol.intertwine && mismatch_min > tol.mismatch;
                let mut r = ctx.checked(best_worst, tol.intertwine, Bound::Below).with_detail(json!({
                    "mapping": mapping,
                    "smallest_mismatch": mismatch_min,
                    "mismatch_tolerance": tol.mismatch,
                    "separation": mismatch_min / best_worst,
                }));
                if !ok {
                    r.status = ClaimStatus::Fail;
                }
                Ok(r)
            },
        ));
    }

    let presets: Vec<Preset> = cfg
        .params
        .l
        .iter()
        .map(|&l| Preset::Oscillator3d { l })
        .chain(cfg.params.l.iter().map(|&l| Preset::Coulomb { l }))
        .chain(scarf_presets(cfg))
        .collect();
    jobs.push(Box::new(move || claim_checks(&presets)));
    jobs
}

const REQUIRED_CLAIMS: [&str; 4] = [
    "imp-w/",
    "osc-2w-prime/",
    "coulomb-mapped/",
    "o-j-normalization",
];

/// One result per audited row, preceded by a verdict on whether every
/// required row is present and measured.
fn claim_checks(presets: &[Preset]) -> Vec<CheckResult> {
    let params = json!({ "presets": presets.iter().map(|p| json!({ "id": p.id(), "params": p.params_json() })).collect::<Vec<_>>() });
    let mut rows = Vec::new();
    let audit = run_one(
        "susy/claim-audit".into(),
        "every audited supersymmetry statement has a measured row",
        params,
        |ctx| {
            rows = audit_claims(presets)?;
            let unmeasured = rows.iter().filter(|r| !r.max_abs_dev.is_finite()).count();
            let failed = rows
                .iter()
                .filter(|r| r.status == ClaimStatus::Fail)
                .count();
            let missing: Vec<&str> = REQUIRED_CLAIMS
                .iter()
                .copied()
                .filter(|req| !rows.iter().any(|r| r.claim_id.starts_with(req)))
                .collect();
            let metric = (unmeasured + failed + missing.len()) as f64;
            Ok(ctx.checked(metric, 0.0, Bound::Below).with_detail(json!({
                "rows": rows.len(),
                "missing": missing,
                "unmeasured": unmeasured,
                "failed": failed,
            })))
        },
    );
    let mut out = vec![audit];
    out.extend(rows.into_iter().map(|r| CheckResult {
        id: format!("susy/claim/{}/{}", r.preset, r.claim_id),
        paper_eq: r.paper_eq,
        params: json!({ "preset": r.preset, "lhs_max": r.lhs_max, "rhs_max": r.rhs_max }),
        status: r.status,
        metric: r.max_abs_dev,
        tolerance: r.tol,
        bound: Bound::Below,
        runtime_ms: 0.0,
        detail: None,
    }));
    out
}
