//! Uniform grids, sampled functions and the finite-difference Hamiltonian.

use serde::{Deserialize, Serialize};

use super::tridiag::{dot, SymTridiagonal};
use crate::error::{Error, Result};

/// Smallest number of interior points a grid may have.
pub const MIN_INTERIOR: usize = 16;

/// Uniform grid with `n` interior points on `[a, b]`; the end points carry
/// Dirichlet conditions and are not stored.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    pub a: f64,
    pub b: f64,
    #[serde(rename = "N")]
    pub n: usize,
}

impl Grid {
    pub fn new(a: f64, b: f64, n: usize) -> Result<Self> {
        if !(a.is_finite() && b.is_finite()) || a >= b {
            return Err(Error::invalid(format!(
                "grid needs finite a < b, got [{a}, {b}]"
            )));
        }
        if n < MIN_INTERIOR {
            return Err(Error::invalid(format!(
                "grid needs at least {MIN_INTERIOR} interior points, got {n}"
            )));
        }
        Ok(Grid { a, b, n })
    }

    pub fn h(&self) -> f64 {
        (self.b - self.a) / (self.n as f64 + 1.0)
    }

    pub fn x(&self, i: usize) -> f64 {
        self.a + (i as f64 + 1.0) * self.h()
    }

    pub fn nodes(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.x(i)).collect()
    }

    /// Same interval, `factor` times as many cells.
    pub fn refined(&self, factor: usize) -> Self {
        Grid {
            n: (self.n + 1) * factor - 1,
            ..*self
        }
    }
}

/// Values at the interior nodes of a grid.
#[derive(Clone, Debug, PartialEq)]
pub struct GridFunction {
    pub grid: Grid,
    pub values: Vec<f64>,
}

impl GridFunction {
    pub fn new(grid: Grid, values: Vec<f64>) -> Result<Self> {
        if values.len() != grid.n {
            return Err(Error::GridMismatch);
        }
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinitePotential {
                index: i,
                x: grid.x(i),
            });
        }
        Ok(GridFunction { grid, values })
    }

    pub fn from_fn(grid: Grid, f: impl Fn(f64) -> f64) -> Result<Self> {
        Self::new(grid, grid.nodes().into_iter().map(f).collect())
    }

    /// Trapezoidal inner product (end values are zero).
    pub fn dot(&self, other: &GridFunction) -> Result<f64> {
        if self.grid != other.grid {
            return Err(Error::GridMismatch);
        }
        Ok(self.grid.h() * dot(&self.values, &other.values))
    }

    pub fn norm(&self) -> f64 {
        (self.grid.h() * dot(&self.values, &self.values)).sqrt()
    }

    pub fn scaled(&self, c: f64) -> GridFunction {
        GridFunction {
            grid: self.grid,
            values: self.values.iter().map(|v| v * c).collect(),
        }
    }

    pub fn sub(&self, other: &GridFunction) -> Result<GridFunction> {
        if self.grid != other.grid {
            return Err(Error::GridMismatch);
        }
        Ok(GridFunction {
            grid: self.grid,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn normalized(&self) -> Result<GridFunction> {
        let n = self.norm();
        if n == 0.0 {
            return Err(Error::ZeroVector);
        }
        Ok(self.scaled(1.0 / n))
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }
}

/// `tridiag(-1/h², 2/h² + v_i, -1/h²)`.
pub fn laplacian_tridiagonal(h: f64, v: &[f64]) -> Result<SymTridiagonal> {
    let inv = 1.0 / (h * h);
    SymTridiagonal::new(
        v.iter().map(|vi| 2.0 * inv + vi).collect(),
        vec![-inv; v.len().saturating_sub(1)],
    )
}

/// Three-point discretization of `-d²/dx² + V` with Dirichlet ends.
pub fn discretize(potential: impl Fn(f64) -> f64, grid: &Grid) -> Result<SymTridiagonal> {
    let mut v = Vec::with_capacity(grid.n);
    for i in 0..grid.n {
        let x = grid.x(i);
        let vi = potential(x);
        if !vi.is_finite() {
            return Err(Error::NonFinitePotential { index: i, x });
        }
        v.push(vi);
    }
    laplacian_tridiagonal(grid.h(), &v)
}

/// `⟨ψ, Tψ⟩/⟨ψ, ψ⟩`.
pub fn rayleigh_quotient(t: &SymTridiagonal, psi: &GridFunction) -> Result<f64> {
    if t.dim() != psi.values.len() {
        return Err(Error::GridMismatch);
    }
    t.rayleigh_quotient(&psi.values)
}

/// `‖(T - E)ψ‖/‖ψ‖`.
pub fn hamiltonian_residual(t: &SymTridiagonal, psi: &GridFunction, energy: f64) -> Result<f64> {
    if t.dim() != psi.values.len() {
        return Err(Error::GridMismatch);
    }
    if psi.norm() == 0.0 {
        return Err(Error::ZeroVector);
    }
    Ok(super::tridiag::residual_norm(t, energy, &psi.values))
}
