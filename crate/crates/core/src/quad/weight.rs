//! Weight functions and the three-term recurrences of their orthogonal polynomials.

use serde::{Deserialize, Serialize};
use statrs::function::gamma::ln_gamma;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Domain {
    /// `(0, ∞)`
    HalfLine,
    /// `[-1, 1]`
    Symmetric,
}

/// A weight on its domain.
///
/// The x1 kinds are the classical weight divided by `(x+k)²` or `(x-b)²`
/// with `b = (β+α)/(β-α)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum WeightSpec {
    Laguerre { k: f64 },
    Jacobi { alpha: f64, beta: f64 },
    X1Laguerre { k: f64 },
    X1Jacobi { alpha: f64, beta: f64 },
}

impl WeightSpec {
    pub fn legendre() -> Self {
        WeightSpec::Jacobi {
            alpha: 0.0,
            beta: 0.0,
        }
    }

    pub fn domain(&self) -> Domain {
        match self {
            WeightSpec::Laguerre { .. } | WeightSpec::X1Laguerre { .. } => Domain::HalfLine,
            _ => Domain::Symmetric,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            WeightSpec::Laguerre { k } => {
                if !(k > -1.0 && k.is_finite()) {
                    return Err(Error::invalid(format!(
                        "laguerre weight needs k > -1, got {k}"
                    )));
                }
            }
            WeightSpec::X1Laguerre { k } => {
                if !(k > 0.0 && k.is_finite()) {
                    return Err(Error::invalid(format!(
                        "x1-laguerre weight needs k > 0, got {k}"
                    )));
                }
            }
            WeightSpec::Jacobi { alpha, beta } | WeightSpec::X1Jacobi { alpha, beta } => {
                if !(alpha > -1.0 && beta > -1.0 && alpha.is_finite() && beta.is_finite()) {
                    return Err(Error::invalid(format!(
                        "jacobi weight needs alpha, beta > -1, got ({alpha}, {beta})"
                    )));
                }
                if let WeightSpec::X1Jacobi { .. } = self {
                    if alpha == beta {
                        return Err(Error::invalid("x1-jacobi weight needs alpha != beta"));
                    }
                    let b = (beta + alpha) / (beta - alpha);
                    if b.abs() <= 1.0 {
                        return Err(Error::PoleInDomain { location: b });
                    }
                }
            }
        }
        Ok(())
    }

    /// The classical weight underlying this one.
    pub fn classical(&self) -> WeightSpec {
        match *self {
            WeightSpec::X1Laguerre { k } => WeightSpec::Laguerre { k },
            WeightSpec::X1Jacobi { alpha, beta } => WeightSpec::Jacobi { alpha, beta },
            w => w,
        }
    }

    /// Rational factor multiplying the classical weight (1 for classical kinds).
    pub fn rational_factor(&self, x: f64) -> f64 {
        match *self {
            WeightSpec::X1Laguerre { k } => 1.0 / ((x + k) * (x + k)),
            WeightSpec::X1Jacobi { alpha, beta } => {
                let b = (beta + alpha) / (beta - alpha);
                1.0 / ((x - b) * (x - b))
            }
            _ => 1.0,
        }
    }

    /// Pointwise value of the full weight.
    pub fn eval(&self, x: f64) -> f64 {
        let classical = match self.classical() {
            WeightSpec::Laguerre { k } => x.powf(k) * (-x).exp(),
            WeightSpec::Jacobi { alpha, beta } => (1.0 - x).powf(alpha) * (1.0 + x).powf(beta),
            _ => unreachable!(),
        };
        classical * self.rational_factor(x)
    }

    pub fn recurrence(&self, n: usize) -> Recurrence {
        match self.classical() {
            WeightSpec::Laguerre { k } => Recurrence::laguerre(n, k),
            WeightSpec::Jacobi { alpha, beta } => Recurrence::jacobi(n, alpha, beta),
            _ => unreachable!(),
        }
    }

    pub fn label(&self) -> String {
        match *self {
            WeightSpec::Laguerre { k } => format!("laguerre(k={k})"),
            WeightSpec::Jacobi { alpha, beta } => format!("jacobi(alpha={alpha},beta={beta})"),
            WeightSpec::X1Laguerre { k } => format!("x1-laguerre(k={k})"),
            WeightSpec::X1Jacobi { alpha, beta } => format!("x1-jacobi(alpha={alpha},beta={beta})"),
        }
    }
}

/// Monic recurrence `p_{j+1} = (x - a_j) p_j - b_j p_{j-1}` with total mass `mu0`.
#[derive(Clone, Debug, PartialEq)]
pub struct Recurrence {
    pub a: Vec<f64>,
    /// `b[0]` is unused and set to zero.
    pub b: Vec<f64>,
    pub mu0: f64,
}

impl Recurrence {
    /// Coefficients `a_0..a_{n-1}` and `b_1..b_n`.
    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    pub fn legendre(n: usize) -> Self {
        Self::jacobi(n, 0.0, 0.0)
    }

    /// `x^k e^{-x}` on `(0, ∞)`.
    pub fn laguerre(n: usize, k: f64) -> Self {
        let a = (0..n).map(|j| 2.0 * j as f64 + k + 1.0).collect();
        let b = (0..=n)
            .map(|j| {
                if j == 0 {
                    0.0
                } else {
                    j as f64 * (j as f64 + k)
                }
            })
            .collect();
        Recurrence {
            a,
            b,
            mu0: ln_gamma(k + 1.0).exp(),
        }
    }

    /// `(1-x)^α (1+x)^β` on `[-1, 1]`.
    pub fn jacobi(n: usize, alpha: f64, beta: f64) -> Self {
        let s = alpha + beta;
        let a = (0..n)
            .map(|j| {
                if j == 0 {
                    (beta - alpha) / (s + 2.0)
                } else {
                    let t = 2.0 * j as f64 + s;
                    (beta * beta - alpha * alpha) / (t * (t + 2.0))
                }
            })
            .collect();
        let b = (0..=n)
            .map(|j| {
                let jf = j as f64;
                match j {
                    0 => 0.0,
                    // the generic formula has a removable 0/0 at α+β = -1
                    1 => 4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + s).powi(2) * (3.0 + s)),
                    _ => {
                        let t = 2.0 * jf + s;
                        4.0 * jf * (jf + alpha) * (jf + beta) * (jf + s)
                            / (t * t * (t + 1.0) * (t - 1.0))
                    }
                }
            })
            .collect();
        let ln_mu0 =
            (s + 1.0) * std::f64::consts::LN_2 + ln_gamma(alpha + 1.0) + ln_gamma(beta + 1.0)
                - ln_gamma(s + 2.0);
        Recurrence {
            a,
            b,
            mu0: ln_mu0.exp(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn masses() {
        assert!((Recurrence::legendre(1).mu0 - 2.0).abs() < 1e-13);
        assert!((Recurrence::laguerre(1, 0.0).mu0 - 1.0).abs() < 1e-13);
        // Γ(5/2) = 3√π/4
        let want = 0.75 * std::f64::consts::PI.sqrt();
        assert!((Recurrence::laguerre(1, 1.5).mu0 - want).abs() < 1e-13);
        // ∫(1-x)(1+x)^2 dx over [-1,1] = 4/3
        assert!((Recurrence::jacobi(1, 1.0, 2.0).mu0 - 4.0 / 3.0).abs() < 1e-13);
    }

    #[test]
    fn validation() {
        assert!(WeightSpec::X1Laguerre { k: 0.0 }.validate().is_err());
        assert!(WeightSpec::X1Jacobi {
            alpha: 1.0,
            beta: 1.0
        }
        .validate()
        .is_err());
        assert!(matches!(
            WeightSpec::X1Jacobi {
                alpha: -0.5,
                beta: 0.5
            }
            .validate(),
            Err(Error::PoleInDomain { .. })
        ));
        assert!(WeightSpec::X1Jacobi {
            alpha: 1.0,
            beta: 2.0
        }
        .validate()
        .is_ok());
    }

    #[test]
    fn json_form() {
        let w: WeightSpec = serde_json::from_str(r#"{"kind":"x1-laguerre","k":2}"#).unwrap();
        assert_eq!(w, WeightSpec::X1Laguerre { k: 2.0 });
        assert_eq!(w.domain(), Domain::HalfLine);
    }
}
