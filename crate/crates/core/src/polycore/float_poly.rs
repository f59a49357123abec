//! Floating-point polynomials for numerically constructed families.

use serde::{Deserialize, Serialize};

use super::poly::Poly;

/// Coefficients in ascending powers, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FloatPoly {
    coeffs: Vec<f64>,
}

impl FloatPoly {
    pub fn from_coeffs(mut coeffs: Vec<f64>) -> Self {
        while coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        FloatPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<f64> {
        self.coeffs.last().copied()
    }

    pub fn scale(&self, c: f64) -> FloatPoly {
        FloatPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `self - c·other`
    pub fn sub_scaled(&self, c: f64, other: &FloatPoly) -> FloatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let get = |v: &[f64], i: usize| v.get(i).copied().unwrap_or(0.0);
        FloatPoly::from_coeffs(
            (0..n)
                .map(|i| get(&self.coeffs, i) - c * get(&other.coeffs, i))
                .collect(),
        )
    }

    pub fn monic(&self) -> FloatPoly {
        match self.leading() {
            Some(lc) => self.scale(1.0 / lc),
            None => self.clone(),
        }
    }
}

impl From<&Poly> for FloatPoly {
    fn from(p: &Poly) -> Self {
        FloatPoly::from_coeffs(p.to_f64_coeffs())
    }
}

/// Anything that can be evaluated as a real polynomial.
pub trait PolyEval: Sync {
    fn eval_at(&self, x: f64) -> f64;
}

impl PolyEval for FloatPoly {
    fn eval_at(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
    }
}

impl PolyEval for Poly {
    fn eval_at(&self, x: f64) -> f64 {
        self.eval_f64(x)
    }
}
