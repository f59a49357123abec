//! Classical Laguerre and Jacobi polynomials in their standard normalizations.

use num_traits::{One, Signed, Zero};

use super::poly::Poly;
use super::rational::{int, Rational};
use crate::error::{Error, Result};

/// Generalized Laguerre polynomial `L_n^{(m)}`, leading coefficient `(-1)^n/n!`.
pub fn laguerre_classical(n: usize, m: &Rational) -> Poly {
    let mut prev = Poly::one();
    if n == 0 {
        return prev;
    }
    // L_1 = 1 + m - x
    let mut cur = Poly::linear(int(-1), int(1) + m);
    for i in 1..n {
        let ir = int(i as i64);
        let lin = Poly::linear(int(-1), int(2) * &ir + int(1) + m);
        let next = &(&lin * &cur) - &prev.scale(&(&ir + m));
        prev = cur;
        cur = next.scale(&(int(1) / (ir + int(1))));
    }
    cur
}

/// Jacobi polynomial `P_n^{(α,β)}` with `P_n(1) = C(n+α, n)`.
pub fn jacobi_classical(n: usize, alpha: &Rational, beta: &Rational) -> Poly {
    let mut prev = Poly::one();
    if n == 0 {
        return prev;
    }
    let two = int(2);
    let s = alpha + beta;
    let mut cur = Poly::linear((&s + &two) / &two, (alpha - beta) / &two);
    for i in 1..n {
        let ir = int(i as i64);
        let t = &two * &ir + &s;
        let denom = &two * (&ir + int(1)) * (&ir + &s + int(1)) * &t;
        let lin = Poly::linear(
            (&t + int(1)) * (&t + &two) * &t,
            (&t + int(1)) * (alpha * alpha - beta * beta),
        );
        let back = &two * (&ir + alpha) * (&ir + beta) * (&t + &two);
        let next = &(&lin * &cur) - &prev.scale(&back);
        prev = cur;
        cur = next.scale(&(int(1) / denom));
    }
    cur
}

#[derive(Clone, Debug, PartialEq)]
pub enum ClassicalFamily {
    Laguerre { m: Rational },
    Jacobi { alpha: Rational, beta: Rational },
}

impl ClassicalFamily {
    /// Eigenvalue belonging to the degree-`n` member.
    pub fn degree_eigenvalue(&self, n: usize) -> Rational {
        let nr = int(n as i64);
        match self {
            ClassicalFamily::Laguerre { .. } => nr,
            ClassicalFamily::Jacobi { alpha, beta } => &nr * (&nr + alpha + beta + int(1)),
        }
    }

    pub fn member(&self, n: usize) -> Poly {
        match self {
            ClassicalFamily::Laguerre { m } => laguerre_classical(n, m),
            ClassicalFamily::Jacobi { alpha, beta } => jacobi_classical(n, alpha, beta),
        }
    }
}

/// `x g'' + (m+1-x) g' + eig·g` or `(1-z²) g'' + [β-α-(α+β+2)z] g' + eig·g`.
///
/// `eig` is the degree-based eigenvalue: `n` for Laguerre, `n(n+α+β+1)` for Jacobi.
pub fn classical_ode_residual(g: &Poly, family: &ClassicalFamily, eig: &Rational) -> Poly {
    let d1 = g.derivative();
    let d2 = d1.derivative();
    let (p2, p1) = match family {
        ClassicalFamily::Laguerre { m } => (Poly::x(), Poly::linear(int(-1), m + int(1))),
        ClassicalFamily::Jacobi { alpha, beta } => (
            Poly::from_coeffs(vec![int(1), int(0), int(-1)]),
            Poly::linear(-(alpha + beta + int(2)), beta - alpha),
        ),
    };
    &(&(&p2 * &d2) + &(&p1 * &d1)) + &g.scale(eig)
}

/// The constants `a`, `b`, `c` attached to an X₁-Jacobi parameter pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiConstants {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

impl JacobiConstants {
    /// `a = (β-α)/2`, `b = (β+α)/(β-α)`, `c = b + 1/a`. Rejects `α = β`.
    pub fn new(alpha: &Rational, beta: &Rational) -> Result<Self> {
        if alpha == beta {
            return Err(Error::invalid("alpha = beta leaves a, b, c undefined"));
        }
        let a = (beta - alpha) / int(2);
        let b = (beta + alpha) / (beta - alpha);
        let c = &b + a.recip();
        Ok(JacobiConstants { a, b, c })
    }

    /// True when the pole at `b` lies outside `[-1, 1]`.
    pub fn pole_outside(&self) -> bool {
        self.b.abs() > Rational::one()
    }
}

pub(crate) fn check_jacobi_params(alpha: &Rational, beta: &Rational) -> Result<()> {
    if *alpha <= int(-1) || *beta <= int(-1) {
        return Err(Error::invalid(format!(
            "jacobi parameters must exceed -1 (alpha = {alpha}, beta = {beta})"
        )));
    }
    Ok(())
}

pub(crate) fn check_positive(name: &str, v: &Rational) -> Result<()> {
    if v.is_zero() || v.is_negative() {
        return Err(Error::invalid(format!("{name} must be positive, got {v}")));
    }
    Ok(())
}
