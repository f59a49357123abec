// Acceptance criteria, one test each. Every test prints a single
// `criterion N: PASS|FAIL ...` line before asserting.

use std::f64::consts::FRAC_PI_2;
use std::time::{Duration, Instant};

use xop::polycore::{int, laguerre_classical, rat, FloatPoly, Rational};
use xop::potentials::{
    closed_form_eigenstate, quotient_identity_check, xj_quotient_identity_check, PotentialSpec,
    Preset, QuotientConvention, StateKind,
};
use xop::quad::{gram_matrix, max_normalized_off_diagonal, Integrator};
use xop::solver::{discretize, rayleigh_quotient, solve_levels, spectrum_compare, Grid};
use xop::susy::{
    audit_claims, commutator_residual, intertwine_check, partner_potentials, random_smooth_states,
    superpotential_from_ground_state, ImpReading, Superpotential,
};
use xop::xop::{
    coefficient_rel_diff, exact_member, gram_schmidt_family, x1_jacobi_ode_residual,
    x1_laguerre_ode_residual, Route, XFamilySpec,
};

fn verdict(n: u32, ok: bool, detail: String) {
    println!(
        "criterion {n}: {} {detail}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "criterion {n}: {detail}");
}

fn ks() -> [Rational; 3] {
    [int(1), int(2), rat(7, 2)]
}

fn jacobi_pairs() -> [(Rational, Rational); 3] {
    [(int(1), int(2)), (int(2), int(5)), (rat(1, 2), rat(3, 2))]
}

fn families() -> Vec<XFamilySpec> {
    ks().into_iter()
        .map(XFamilySpec::x1_laguerre)
        .chain(
            jacobi_pairs()
                .into_iter()
                .map(|(alpha, beta)| XFamilySpec::Jacobi { alpha, beta }),
        )
        .collect()
}

fn secs(d: Duration) -> f64 {
    d.as_secs_f64()
}

#[test]
fn criterion_01_exact_laguerre_eigenrelation() {
    let start = Instant::now();
    let mut nonzero = Vec::new();
    for k in ks() {
        for n in 1..=10 {
            let f = exact_member(&XFamilySpec::x1_laguerre(k.clone()), n, Route::Operator).unwrap();
            if !x1_laguerre_ode_residual(&f, &k, n).is_zero() {
                nonzero.push((k.to_string(), n));
            }
        }
    }
    let t = start.elapsed();
    verdict(
        1,
        nonzero.is_empty() && t < Duration::from_secs(1),
        format!("30 residuals, nonzero {nonzero:?}, {:.3}s", secs(t)),
    );
}

#[test]
fn criterion_02_exact_jacobi_eigenrelation() {
    let start = Instant::now();
    let mut nonzero = Vec::new();
    for (a, b) in jacobi_pairs() {
        let spec = XFamilySpec::Jacobi {
            alpha: a.clone(),
            beta: b.clone(),
        };
        for n in 1..=10 {
            let f = exact_member(&spec, n, Route::Operator).unwrap();
            if !x1_jacobi_ode_residual(&f, &a, &b, n).unwrap().is_zero() {
                nonzero.push((a.to_string(), b.to_string(), n));
            }
        }
    }
    let t = start.elapsed();
    verdict(
        2,
        nonzero.is_empty() && t < Duration::from_secs(1),
        format!("30 residuals, nonzero {nonzero:?}, {:.3}s", secs(t)),
    );
}

#[test]
fn criterion_03_route_agreement() {
    let start = Instant::now();
    let mut worst = 0.0f64;
    for spec in families() {
        let integrator = Integrator::new(spec.weight()).unwrap();
        let gs = gram_schmidt_family(&spec, &integrator, 8).unwrap();
        for n in 1..=8 {
            let op = exact_member(&spec, n, Route::Operator)
                .unwrap()
                .to_f64_coeffs();
            let ns = exact_member(&spec, n, Route::NullSpace)
                .unwrap()
                .to_f64_coeffs();
            worst = worst
                .max(coefficient_rel_diff(&op, &ns))
                .max(coefficient_rel_diff(&op, gs[n - 1].coeffs()))
                .max(coefficient_rel_diff(&ns, gs[n - 1].coeffs()));
        }
    }
    let t = start.elapsed();
    verdict(
        3,
        worst < 1e-9 && t < Duration::from_secs(30),
        format!(
            "worst relative coefficient difference {worst:.2e}, {:.2}s",
            secs(t)
        ),
    );
}

#[test]
fn criterion_04_orthogonality() {
    let start = Instant::now();
    let mut worst = 0.0f64;
    for spec in families() {
        let integrator = Integrator::new(spec.weight()).unwrap();
        let polys: Vec<FloatPoly> = (1..=8)
            .map(|n| FloatPoly::from(&exact_member(&spec, n, Route::Operator).unwrap()))
            .collect();
        worst = worst.max(max_normalized_off_diagonal(
            &gram_matrix(&polys, &integrator).unwrap(),
        ));
    }
    let t = start.elapsed();
    verdict(
        4,
        worst < 1e-10 && t < Duration::from_secs(30),
        format!(
            "largest normalized off-diagonal {worst:.2e}, {:.2}s",
            secs(t)
        ),
    );
}

#[test]
fn criterion_05_quotient_identities() {
    let grid = Grid::new(0.01, 40.0, 4000).unwrap();
    let mut laguerre = 0.0f64;
    let mut control = f64::INFINITY;
    for k in ks() {
        for n in 1..=8 {
            let f = exact_member(&XFamilySpec::x1_laguerre(k.clone()), n, Route::Operator).unwrap();
            laguerre = laguerre.max(
                quotient_identity_check(&f, &k, &grid, QuotientConvention::Consistent).unwrap(),
            );
        }
        for n in 1..=4 {
            let wrong = laguerre_classical(n, &k);
            control = control.min(
                quotient_identity_check(&wrong, &k, &grid, QuotientConvention::Consistent).unwrap(),
            );
        }
    }
    let mut xj = 0.0f64;
    for k in ks() {
        let g = Grid::new(0.0, 0.8 * to_f64(&k), 400).unwrap();
        for n in 2..=5 {
            xj = xj.max(
                xj_quotient_identity_check(&k, 2, &int(n), &g)
                    .unwrap()
                    .consistent,
            );
        }
    }
    verdict(
        5,
        laguerre < 1e-8 && xj < 1e-8 && control > 1e-2,
        format!("laguerre quotient {laguerre:.2e}, codimension-2 quotient {xj:.2e}, negative control {control:.2e}"),
    );
}

fn to_f64(r: &Rational) -> f64 {
    xop::polycore::to_f64(r)
}

#[test]
fn criterion_06_oscillator_spectrum() {
    let start = Instant::now();
    let mut worst = 0.0f64;
    let mut orders = Vec::new();
    for l in [0u32, 1] {
        let p = Preset::Oscillator3d { l };
        let spec = PotentialSpec::classical(p);
        let (a, b) = p.default_domain(3).unwrap();
        let rel = |grid: &Grid| -> Vec<f64> {
            let (levels, _) = solve_levels(|x| spec.eval(x), grid, 3).unwrap();
            levels
                .iter()
                .enumerate()
                .map(|(i, lv)| {
                    // 2 n_r + l + 3/2
                    let exact = 2.0 * i as f64 + l as f64 + 1.5;
                    (lv.energy - exact).abs() / exact
                })
                .collect()
        };
        let fine = Grid::new(a, b, 8000).unwrap();
        let ef = rel(&fine);
        worst = ef.iter().fold(worst, |m, v| m.max(*v));
        let coarse = Grid::new(a, b, 1999).unwrap();
        let ec = rel(&coarse);
        let fine4 = coarse.refined(4);
        let ef4 = rel(&fine4);
        orders.extend(ec.iter().zip(&ef4).map(|(c, f)| (c / f).ln() / 4f64.ln()));
    }
    let t = start.elapsed();
    let orders_ok = orders.iter().all(|o| (1.8..=2.2).contains(o));
    verdict(
        6,
        worst < 1e-4 && orders_ok && t < Duration::from_secs(60),
        format!(
            "worst relative error {worst:.2e}, orders {orders:.3?}, {:.2}s",
            secs(t)
        ),
    );
}

#[test]
fn criterion_07_isospectrality() {
    let presets = [
        Preset::Oscillator3d { l: 0 },
        Preset::Oscillator3d { l: 1 },
        Preset::Scarf {
            a: 3.0,
            b: 1.0,
            alpha: 1.0,
        },
    ];
    let mut worst = 0.0f64;
    let mut flags = Vec::new();
    for p in presets {
        let (a, b) = p.default_domain(4).unwrap();
        let grid = Grid::new(a, b, 100_000).unwrap();
        for level in 0..3 {
            let spec = PotentialSpec::extended(p, level);
            let t = discretize(|x| spec.eval(x), &grid).unwrap();
            let psi = closed_form_eigenstate(&p, level, StateKind::Exceptional)
                .unwrap()
                .sample(&grid)
                .unwrap();
            let e = p.energy(level).unwrap();
            worst = worst.max((rayleigh_quotient(&t, &psi).unwrap() - e).abs() / e.abs().max(1.0));
        }
        let g = Grid::new(a, b, 6000).unwrap();
        let solve = |spec: PotentialSpec| -> Vec<f64> {
            solve_levels(|x| spec.eval(x), &g, 4)
                .unwrap()
                .0
                .iter()
                .map(|l| l.energy)
                .collect()
        };
        let c = solve(PotentialSpec::classical(p));
        let e = solve(PotentialSpec::extended(p, 0));
        let m = spectrum_compare(&c, &e, 1e-3 * c[3].abs().max(1.0));
        flags.push(format!(
            "{}: {} pairs, ground state unmatched {:?}",
            p.label(),
            m.pairs.len(),
            m.ground_state_unmatched
        ));
    }
    verdict(
        7,
        worst < 1e-6,
        format!("worst Rayleigh deviation {worst:.2e}; {}", flags.join("; ")),
    );
}

#[test]
fn criterion_08_susy_construction() {
    let mut ws: Vec<(Superpotential, Grid)> = Vec::new();
    for l in [0u32, 1, 2] {
        let g = Grid::new(0.1, 10.0, 2000).unwrap();
        ws.push((Superpotential::oscillator_extension(l), g));
        for reading in ImpReading::ALL {
            ws.push((Superpotential::imp_candidate(l, l as f64 + 0.5, reading), g));
        }
        let p = Preset::Oscillator3d { l };
        let gg = Grid::new(0.0, 10.0, 2000).unwrap();
        let psi0 = closed_form_eigenstate(&p, 0, StateKind::Classical)
            .unwrap()
            .sample(&gg)
            .unwrap();
        ws.push((superpotential_from_ground_state(&psi0).unwrap(), gg));
    }
    let edge = FRAC_PI_2 - 1e-3;
    ws.push((
        Superpotential::scarf_extension(3.0, 1.0, 1.0).unwrap(),
        Grid::new(-edge, edge, 2000).unwrap(),
    ));
    let mut construction = 0.0f64;
    for (w, grid) in &ws {
        let (wv, dw) = w.sample(grid).unwrap();
        let scale = wv
            .iter()
            .map(|v| v * v)
            .chain(dw.iter().map(|d| 2.0 * d.abs()))
            .fold(1.0f64, f64::max);
        construction = construction.max(
            partner_potentials(w, 0.0)
                .construction_deviation(grid)
                .unwrap()
                / scale,
        );
    }

    let edge = FRAC_PI_2 - 0.3;
    let cases = [
        (
            Superpotential::oscillator_extension(1),
            Grid::new(0.5, 10.0, 20_000).unwrap(),
        ),
        (
            Superpotential::imp_candidate(1, 1.5, ImpReading::Literal),
            Grid::new(0.5, 10.0, 20_000).unwrap(),
        ),
        (
            Superpotential::scarf_extension(3.0, 1.0, 1.0).unwrap(),
            Grid::new(-edge, edge, 20_000).unwrap(),
        ),
    ];
    let mut commutator = 0.0f64;
    for (w, grid) in &cases {
        for psi in random_smooth_states(grid, 5, 2024).unwrap() {
            commutator = commutator.max(commutator_residual(w, &psi).unwrap());
        }
    }
    verdict(
        8,
        construction < 1e-12 && commutator < 1e-5,
        format!(
            "{} superpotentials, construction {construction:.2e}, commutator {commutator:.2e}",
            ws.len()
        ),
    );
}

#[test]
fn criterion_09_intertwining() {
    let grid = Grid::new(0.0, 14.0, 40_000).unwrap();
    let mut best_worst = 0.0f64;
    let mut mismatch = f64::INFINITY;
    let mut mapping = Vec::new();
    for l in [1u32, 2] {
        let w = Superpotential::oscillator_extension(l);
        let targets: Vec<_> = (0..4)
            .map(|mu| {
                closed_form_eigenstate(&Preset::Oscillator3d { l }, mu, StateKind::Exceptional)
                    .unwrap()
                    .sample(&grid)
                    .unwrap()
            })
            .collect();
        for nu in 0..4 {
            let src = closed_form_eigenstate(
                &Preset::Oscillator3d { l: l - 1 },
                nu,
                StateKind::Classical,
            )
            .unwrap()
            .sample(&grid)
            .unwrap();
            let res: Vec<f64> = targets
                .iter()
                .map(|t| intertwine_check(&w, &src, t).unwrap().rel_residual)
                .collect();
            let best = (0..4).min_by(|&a, &b| res[a].total_cmp(&res[b])).unwrap();
            best_worst = best_worst.max(res[best]);
            for (mu, r) in res.iter().enumerate() {
                if mu != best {
                    mismatch = mismatch.min(*r);
                }
            }
            mapping.push((nu, best));
        }
    }
    let separation = mismatch / best_worst;
    verdict(
        9,
        best_worst < 1e-5 && mismatch > 1e-1 && separation >= 1e4,
        format!("best {best_worst:.2e}, smallest mismatch {mismatch:.2e}, separation {separation:.1e}, mapping {mapping:?}"),
    );
}

#[test]
fn criterion_10_claim_audit() {
    let presets = [
        Preset::Oscillator3d { l: 0 },
        Preset::Oscillator3d { l: 1 },
        Preset::Coulomb { l: 1 },
        Preset::Scarf {
            a: 3.0,
            b: 1.0,
            alpha: 1.0,
        },
    ];
    let rows = audit_claims(&presets).unwrap();
    let required = [
        "imp-w/",
        "osc-2w-prime/",
        "coulomb-mapped/",
        "o-j-normalization",
    ];
    let missing: Vec<&str> = required
        .iter()
        .copied()
        .filter(|p| {
            !rows
                .iter()
                .any(|r| r.claim_id.starts_with(p) && r.max_abs_dev.is_finite())
        })
        .collect();
    let unmeasured = rows.iter().filter(|r| !r.max_abs_dev.is_finite()).count();
    verdict(
        10,
        missing.is_empty() && unmeasured == 0,
        format!(
            "{} rows, missing {missing:?}, unmeasured {unmeasured}",
            rows.len()
        ),
    );
}
