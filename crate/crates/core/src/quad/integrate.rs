//! Convergence-controlled integration against the classical and x1 weights.

use std::sync::OnceLock;

use rayon::prelude::*;

use super::rule::{golub_welsch, QuadratureRule};
use super::weight::WeightSpec;
use crate::error::{Error, Result};
use crate::polycore::PolyEval;

pub const DEFAULT_REL_TOL: f64 = 1e-12;
pub const DEFAULT_MAX_NODES: usize = 1 << 13;
const START_NODES: usize = 16;

/// Integrates `f·w` by classical Gauss rules of doubling size.
///
/// For the x1 kinds the rational factor is folded into the integrand. Rules
/// are built lazily and shared between calls.
pub struct Integrator {
    weight: WeightSpec,
    rel_tol: f64,
    levels: Vec<OnceLock<Result<QuadratureRule>>>,
}

impl Integrator {
    pub fn new(weight: WeightSpec) -> Result<Self> {
        Self::with_limits(weight, DEFAULT_REL_TOL, DEFAULT_MAX_NODES)
    }

    pub fn with_limits(weight: WeightSpec, rel_tol: f64, max_nodes: usize) -> Result<Self> {
        weight.validate()?;
        if !(rel_tol > 0.0) {
            return Err(Error::invalid(format!(
                "rel_tol must be positive, got {rel_tol}"
            )));
        }
        if max_nodes < 2 * START_NODES {
            return Err(Error::invalid(format!(
                "node ceiling must be at least {}",
                2 * START_NODES
            )));
        }
        let mut count = 0;
        while START_NODES << count <= max_nodes {
            count += 1;
        }
        Ok(Integrator {
            weight,
            rel_tol,
            levels: (0..count).map(|_| OnceLock::new()).collect(),
        })
    }

    pub fn weight(&self) -> &WeightSpec {
        &self.weight
    }

    fn rule(&self, level: usize) -> Result<&QuadratureRule> {
        let n = START_NODES << level;
        self.levels[level]
            .get_or_init(|| golub_welsch(&self.weight.recurrence(n), n))
            .as_ref()
            .map_err(|e| Error::Eigensolver(e.to_string()))
    }

    /// `∫ f·w` over the weight's domain.
    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> Result<f64> {
        let g = |x: f64| f(x) * self.weight.rational_factor(x);
        let mut prev: Option<f64> = None;
        let mut last_change = f64::INFINITY;
        let mut estimate = f64::NAN;
        for level in 0..self.levels.len() {
            let rule = self.rule(level)?;
            let mut sum = 0.0;
            let mut abs_sum = 0.0;
            for (x, w) in rule.nodes.iter().zip(&rule.weights) {
                let t = w * g(*x);
                sum += t;
                abs_sum += t.abs();
            }
            if !sum.is_finite() {
                return Err(Error::QuadratureNotConverged {
                    nodes: rule.len(),
                    last_change,
                    estimate: sum,
                });
            }
            estimate = sum;
            if let Some(p) = prev {
                last_change = (sum - p).abs();
                if last_change <= self.rel_tol * sum.abs().max(abs_sum) {
                    return Ok(sum);
                }
            }
            prev = Some(sum);
        }
        Err(Error::QuadratureNotConverged {
            nodes: START_NODES << (self.levels.len() - 1),
            last_change,
            estimate,
        })
    }

    /// `(p, q)` under the weight.
    pub fn inner<P: PolyEval, Q: PolyEval>(&self, p: &P, q: &Q) -> Result<f64> {
        self.integrate(|x| p.eval_at(x) * q.eval_at(x))
    }
}

/// `∫ f·w` with a fresh integrator.
pub fn integrate(f: impl Fn(f64) -> f64, weight: WeightSpec, rel_tol: f64) -> Result<f64> {
    Integrator::with_limits(weight, rel_tol, DEFAULT_MAX_NODES)?.integrate(f)
}

/// Symmetric matrix of pairwise inner products; each entry is computed once.
pub fn gram_matrix<P: PolyEval>(polys: &[P], integrator: &Integrator) -> Result<Vec<Vec<f64>>> {
    let n = polys.len();
    if n == 0 {
        return Err(Error::invalid("gram matrix of an empty list"));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let values: Vec<f64> = pairs
        .par_iter()
        .map(|&(i, j)| integrator.inner(&polys[i], &polys[j]))
        .collect::<Result<_>>()?;
    let mut g = vec![vec![0.0; n]; n];
    for (&(i, j), v) in pairs.iter().zip(values) {
        g[i][j] = v;
        g[j][i] = v;
    }
    Ok(g)
}

/// Largest `|G_ij| / sqrt(G_ii G_jj)` over `i != j`.
pub fn max_normalized_off_diagonal(g: &[Vec<f64>]) -> f64 {
    let mut worst: f64 = 0.0;
    for i in 0..g.len() {
        for j in 0..g.len() {
            if i != j {
                worst = worst.max(g[i][j].abs() / (g[i][i] * g[j][j]).sqrt());
            }
        }
    }
    worst
}
