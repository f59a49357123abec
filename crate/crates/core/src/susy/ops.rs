//! Partner potentials, the first-order operators `Â = d/dx + W`, `Â† = -d/dx + W`,
//! and grid checks of the intertwining relation `Â H⁺ = H⁻ Â`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::superpotential::{grid_derivative, Superpotential};
use crate::error::{Error, Result};
use crate::solver::{laplacian_tridiagonal, Grid, GridFunction};

/// `V± = W² ∓ W' + E`.
#[derive(Clone, Debug)]
pub struct PartnerPair {
    pub w: Superpotential,
    pub energy: f64,
}

pub fn partner_potentials(w: &Superpotential, energy: f64) -> PartnerPair {
    PartnerPair {
        w: w.clone(),
        energy,
    }
}

impl PartnerPair {
    pub fn v_plus(&self, x: f64) -> Result<f64> {
        let (w, dw) = self.w.eval(x)?;
        Ok(w * w - dw + self.energy)
    }

    pub fn v_minus(&self, x: f64) -> Result<f64> {
        let (w, dw) = self.w.eval(x)?;
        Ok(w * w + dw + self.energy)
    }

    /// `(V⁺, V⁻)` at the interior nodes.
    pub fn sample(&self, grid: &Grid) -> Result<(Vec<f64>, Vec<f64>)> {
        let (w, dw) = self.w.sample(grid)?;
        Ok(w.iter()
            .zip(&dw)
            .map(|(w, dw)| (w * w - dw + self.energy, w * w + dw + self.energy))
            .unzip())
    }

    /// `max |(V⁻ - V⁺) - 2W'|` over the grid; zero up to roundoff for any `W`.
    pub fn construction_deviation(&self, grid: &Grid) -> Result<f64> {
        let (vp, vm) = self.sample(grid)?;
        let (_, dw) = self.w.sample(grid)?;
        Ok((0..grid.n)
            .map(|i| ((vm[i] - vp[i]) - 2.0 * dw[i]).abs())
            .fold(0.0, f64::max))
    }
}

/// `Âψ = ψ' + Wψ`, or `Â†ψ = -ψ' + Wψ` when `dagger` is set.
pub fn apply_a(w: &Superpotential, psi: &GridFunction, dagger: bool) -> Result<GridFunction> {
    let (wv, _) = w.sample(&psi.grid)?;
    let d = grid_derivative(&psi.values, psi.grid.h());
    let sign = if dagger { -1.0 } else { 1.0 };
    GridFunction::new(
        psi.grid,
        d.iter()
            .zip(&psi.values)
            .zip(&wv)
            .map(|((d, p), w)| sign * d + w * p)
            .collect(),
    )
}

/// Least-squares fit `Âψ_source ≈ scale · ψ_target`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct IntertwineResult {
    pub scale: f64,
    /// `‖Âψ_source - scale·ψ_target‖ / ‖ψ_target‖`.
    pub rel_residual: f64,
}

pub fn intertwine_check(
    w: &Superpotential,
    source: &GridFunction,
    target: &GridFunction,
) -> Result<IntertwineResult> {
    if source.grid != target.grid {
        return Err(Error::GridMismatch);
    }
    let tt = target.dot(target)?;
    if tt == 0.0 {
        return Err(Error::ZeroVector);
    }
    let phi = apply_a(w, source, false)?;
    let scale = phi.dot(target)? / tt;
    let rest = phi.sub(&target.scaled(scale))?;
    Ok(IntertwineResult {
        scale,
        rel_residual: rest.norm() / tt.sqrt(),
    })
}

/// `e^{-∫W}` from the first node, by the trapezoidal rule.
pub fn zero_mode(w: &Superpotential, grid: &Grid) -> Result<GridFunction> {
    let (wv, _) = w.sample(grid)?;
    let h = grid.h();
    let mut acc = 0.0;
    let mut values = Vec::with_capacity(grid.n);
    for i in 0..grid.n {
        if i > 0 {
            acc += 0.5 * h * (wv[i - 1] + wv[i]);
        }
        values.push((-acc).exp());
    }
    GridFunction::new(*grid, values)
}

/// `‖(Â H⁺ - H⁻ Â)ψ‖/‖ψ‖` with `H± = -d² + W² ∓ W'` on the grid.
///
/// Expanding the product, the first- and second-difference stencils appear
/// as `D₂D₁ - D₁D₂`, which vanishes identically except in the two outermost
/// rows at each end. It is evaluated only there: forming it everywhere adds
/// a third-difference roundoff of order `ε/h³` and nothing else.
pub fn commutator_residual(w: &Superpotential, psi: &GridFunction) -> Result<f64> {
    let grid = psi.grid;
    let h = grid.h();
    let n = grid.n;
    let (wv, dw) = w.sample(&grid)?;
    let p = &psi.values;
    let times =
        |a: &[f64], b: &[f64]| -> Vec<f64> { a.iter().zip(b).map(|(x, y)| x * y).collect() };
    let vp: Vec<f64> = wv.iter().zip(&dw).map(|(w, d)| w * w - d).collect();
    let vm: Vec<f64> = wv.iter().zip(&dw).map(|(w, d)| w * w + d).collect();
    let d1p = grid_derivative(p, h);
    let d2p = second_difference(p, h);
    let d1_vp = grid_derivative(&times(&vp, p), h);
    let d2_wp = second_difference(&times(&wv, p), h);
    let d2_d1p = second_difference(&d1p, h);
    let d1_d2p = grid_derivative(&d2p, h);
    let values: Vec<f64> = (0..n)
        .map(|i| {
            let edge = if i < 2 || i + 2 >= n {
                d2_d1p[i] - d1_d2p[i]
            } else {
                0.0
            };
            edge + d1_vp[i] - vm[i] * d1p[i] - wv[i] * d2p[i]
                + d2_wp[i]
                + wv[i] * (vp[i] - vm[i]) * p[i]
        })
        .collect();
    let norm = psi.norm();
    if norm == 0.0 {
        return Err(Error::ZeroVector);
    }
    Ok(GridFunction::new(grid, values)?.norm() / norm)
}

/// `D₂v` with zero Dirichlet values beyond both ends.
fn second_difference(v: &[f64], h: f64) -> Vec<f64> {
    let n = v.len();
    let h2 = h * h;
    (0..n)
        .map(|i| {
            let left = if i > 0 { v[i - 1] } else { 0.0 };
            let right = if i + 1 < n { v[i + 1] } else { 0.0 };
            (left - 2.0 * v[i] + right) / h2
        })
        .collect()
}

/// Lowest eigenvalues of the grid operators `Â†Â` and `ÂÂ†`.
pub fn factorized_lowest(w: &Superpotential, grid: &Grid) -> Result<(f64, f64)> {
    let (wv, dw) = w.sample(grid)?;
    let lowest = |sign: f64| -> Result<f64> {
        let v: Vec<f64> = wv.iter().zip(&dw).map(|(w, d)| w * w + sign * d).collect();
        let t = laplacian_tridiagonal(grid.h(), &v)?;
        t.eigenvalue_bisect(0)
    };
    Ok((lowest(-1.0)?, lowest(1.0)?))
}

/// Normalized test functions `sin⁶(πt)·(c₀ + Σ cᵢ sin(iπt))`, `t = (x-a)/(b-a)`,
/// with uniform random coefficients in `[-1, 1]`. They vanish to high order at
/// both ends, so Dirichlet truncation does not disturb operator checks.
pub fn random_smooth_states(grid: &Grid, count: usize, seed: u64) -> Result<Vec<GridFunction>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pi = std::f64::consts::PI;
    (0..count)
        .map(|_| {
            let c: [f64; 4] = std::array::from_fn(|_| rng.gen_range(-1.0..1.0));
            GridFunction::from_fn(*grid, |x| {
                let t = (x - grid.a) / (grid.b - grid.a);
                let series = c[0]
                    + (1..4)
                        .map(|i| c[i] * (i as f64 * pi * t).sin())
                        .sum::<f64>();
                (pi * t).sin().powi(6) * series
            })?
            .normalized()
        })
        .collect()
}
