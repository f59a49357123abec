//! Gauss rules from three-term recurrences.

use std::io::Write;

use serde::Serialize;

use super::weight::Recurrence;
use crate::error::{Error, Result};
use crate::solver::SymTridiagonal;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuadratureRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub exact_degree: usize,
}

impl QuadratureRule {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn apply(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(x, w)| w * f(*x))
            .sum()
    }

    /// `node,weight` rows after a `# header` comment line.
    pub fn write_csv<W: Write>(&self, header: &str, out: W) -> Result<()> {
        let mut out = out;
        writeln!(out, "# {header}")?;
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["node", "weight"])?;
        for (x, wt) in self.nodes.iter().zip(&self.weights) {
            w.write_record([format!("{x:e}"), format!("{wt:e}")])?;
        }
        w.flush()?;
        Ok(())
    }
}

/// Orthonormal polynomial values at `x`, kept in scaled form so large
/// degrees neither overflow nor underflow.
struct OrthonormalEval {
    /// `ln Σ_{j<n} p̃_j(x)²`
    ln_sum_sq: f64,
    /// `p̃_n / p̃_n'`
    newton_step: f64,
}

fn orthonormal_eval(rec: &Recurrence, n: usize, x: f64) -> OrthonormalEval {
    const BIG: f64 = 1e100;
    let mut log_scale = 0.0;
    let (mut p_prev, mut p) = (0.0, 1.0 / rec.mu0.sqrt());
    let (mut dp_prev, mut dp) = (0.0, 0.0);
    let mut sum = p * p;
    for j in 0..n {
        let sb_next = rec.b[j + 1].sqrt();
        let sb = rec.b[j].sqrt();
        let p_next = ((x - rec.a[j]) * p - sb * p_prev) / sb_next;
        let dp_next = ((x - rec.a[j]) * dp + p - sb * dp_prev) / sb_next;
        p_prev = p;
        p = p_next;
        dp_prev = dp;
        dp = dp_next;
        if j + 1 < n {
            sum += p * p;
        }
        if p.abs() > BIG || dp.abs() > BIG {
            p /= BIG;
            p_prev /= BIG;
            dp /= BIG;
            dp_prev /= BIG;
            sum /= BIG * BIG;
            log_scale += BIG.ln();
        }
    }
    OrthonormalEval {
        ln_sum_sq: sum.ln() + 2.0 * log_scale,
        newton_step: p / dp,
    }
}

/// `n`-point Gauss rule: nodes are the eigenvalues of the Jacobi matrix
/// (polished by Newton steps on `p̃_n`), weights are `1/Σ_{j<n} p̃_j(x)²`.
pub fn golub_welsch(rec: &Recurrence, n: usize) -> Result<QuadratureRule> {
    if n == 0 {
        return Err(Error::invalid("quadrature rule needs n >= 1"));
    }
    if rec.len() < n || rec.b.len() < n + 1 {
        return Err(Error::invalid(format!(
            "recurrence has {} terms, rule needs {n}",
            rec.len()
        )));
    }
    if rec.b[1..=n].iter().any(|b| !(*b > 0.0)) || !(rec.mu0 > 0.0) {
        return Err(Error::invalid(
            "recurrence is not that of a positive measure",
        ));
    }
    let t = SymTridiagonal::new(
        rec.a[..n].to_vec(),
        rec.b[1..n].iter().map(|b| b.sqrt()).collect(),
    )?;
    let mut nodes = t.eigenvalues()?;
    for i in 0..n {
        let gap = neighbour_gap(&nodes, i);
        for _ in 0..3 {
            let step = orthonormal_eval(rec, n, nodes[i]).newton_step;
            if !step.is_finite() || step.abs() > 0.25 * gap {
                break;
            }
            nodes[i] -= step;
            if step.abs() <= 4.0 * f64::EPSILON * nodes[i].abs() {
                break;
            }
        }
    }
    let weights: Vec<f64> = nodes
        .iter()
        .map(|&x| (-orthonormal_eval(rec, n, x).ln_sum_sq).exp())
        .collect();
    if nodes.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(Error::Eigensolver(
            "quadrature nodes are not strictly increasing".into(),
        ));
    }
    Ok(QuadratureRule {
        nodes,
        weights,
        exact_degree: 2 * n - 1,
    })
}

fn neighbour_gap(nodes: &[f64], i: usize) -> f64 {
    let left = if i > 0 {
        nodes[i] - nodes[i - 1]
    } else {
        f64::INFINITY
    };
    let right = if i + 1 < nodes.len() {
        nodes[i + 1] - nodes[i]
    } else {
        f64::INFINITY
    };
    let g = left.min(right);
    if g.is_finite() {
        g
    } else {
        1.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use statrs::function::gamma::ln_gamma;

    #[test]
    fn two_point_legendre() {
        let r = golub_welsch(&Recurrence::legendre(2), 2).unwrap();
        let s = 1.0 / 3f64.sqrt();
        assert!((r.nodes[0] + s).abs() < 1e-15 && (r.nodes[1] - s).abs() < 1e-15);
        assert!((r.weights[0] - 1.0).abs() < 1e-14 && (r.weights[1] - 1.0).abs() < 1e-14);
        assert_eq!(r.exact_degree, 3);
    }

    #[test]
    fn one_point_rules_match_moments() {
        for k in [0.0, 1.0, 2.5] {
            let r = golub_welsch(&Recurrence::laguerre(1, k), 1).unwrap();
            assert!((r.nodes[0] - (k + 1.0)).abs() < 1e-14);
            assert!((r.weights[0] - ln_gamma(k + 1.0).exp()).abs() < 1e-13);
        }
        let (a, b) = (0.5, 1.5);
        let r = golub_welsch(&Recurrence::jacobi(1, a, b), 1).unwrap();
        assert!((r.nodes[0] - (b - a) / (a + b + 2.0)).abs() < 1e-15);
        assert!((r.weights[0] - Recurrence::jacobi(1, a, b).mu0).abs() < 1e-14);
    }

    // Moments of the classical weights: Γ(k+p+1) on the half line; for Legendre 2/(p+1) or 0.
    #[test]
    fn monomials_integrated_exactly() {
        for n in [1usize, 2, 5, 12, 30] {
            let k = 1.5;
            let r = golub_welsch(&Recurrence::laguerre(n, k), n).unwrap();
            for p in 0..2 * n {
                let got = r.apply(|x| x.powi(p as i32));
                let want = ln_gamma(k + p as f64 + 1.0).exp();
                assert!((got - want).abs() < 1e-12 * want, "n={n} p={p}");
            }
            let r = golub_welsch(&Recurrence::legendre(n), n).unwrap();
            for p in 0..2 * n {
                let got = r.apply(|x| x.powi(p as i32));
                let want = if p % 2 == 1 {
                    0.0
                } else {
                    2.0 / (p as f64 + 1.0)
                };
                assert!((got - want).abs() < 1e-13, "n={n} p={p}");
            }
        }
    }

    #[test]
    fn weights_positive_and_nodes_increasing_up_to_128() {
        for n in [8usize, 64, 128] {
            for rec in [
                Recurrence::laguerre(n, 0.5),
                Recurrence::laguerre(n, 3.5),
                Recurrence::jacobi(n, 1.0, 2.0),
                Recurrence::jacobi(n, -0.5, 0.5),
            ] {
                let r = golub_welsch(&rec, n).unwrap();
                assert!(r.weights.iter().all(|w| *w > 0.0));
                assert!(r.nodes.windows(2).all(|w| w[0] < w[1]));
                let total: f64 = r.weights.iter().sum();
                assert!((total - rec.mu0).abs() < 1e-12 * rec.mu0);
            }
        }
    }

    #[test]
    fn large_laguerre_rule_stays_finite() {
        let r = golub_welsch(&Recurrence::laguerre(2048, 1.0), 2048).unwrap();
        assert!(r.weights.iter().all(|w| w.is_finite() && *w >= 0.0));
        assert!((r.apply(|x| x) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn csv_output() {
        let r = golub_welsch(&Recurrence::legendre(2), 2).unwrap();
        let mut buf = Vec::new();
        r.write_csv("legendre n=2", &mut buf).unwrap();
        let s = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = s.lines().collect();
        assert_eq!(lines[0], "# legendre n=2");
        assert_eq!(lines[1], "node,weight");
        assert_eq!(lines.len(), 4);
    }
}
