//! Family descriptions, the Gram–Schmidt route and cross-route comparison.

use std::io::Write;

use serde::{Deserialize, Serialize};

use super::jacobi::{x1_jacobi_op_route, x1_jacobi_polynomial_solve};
use super::laguerre::{x1_laguerre_op_route, xj_polynomial_solve};
use crate::error::{Error, Result};
use crate::polycore::classical::{check_jacobi_params, check_positive};
use crate::polycore::{
    format_rational, int, to_f64, FloatPoly, JacobiConstants, Poly, PolyEval, Rational,
};
use crate::quad::{Integrator, WeightSpec};

/// An exceptional family: Laguerre of codimension `j` with parameter `k`,
/// or X₁-Jacobi with `(α, β)`.
#[derive(Clone, Debug, PartialEq)]
pub enum XFamilySpec {
    Laguerre { j: u32, k: Rational },
    Jacobi { alpha: Rational, beta: Rational },
}

impl XFamilySpec {
    pub fn x1_laguerre(k: Rational) -> Self {
        XFamilySpec::Laguerre { j: 1, k }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            XFamilySpec::Laguerre { j, k } => {
                if *j == 0 {
                    return Err(Error::invalid("codimension j must be at least 1"));
                }
                check_positive("k", k)
            }
            XFamilySpec::Jacobi { alpha, beta } => {
                check_jacobi_params(alpha, beta)?;
                let c = JacobiConstants::new(alpha, beta)?;
                if *alpha > int(0) && *beta > int(0) && !c.pole_outside() {
                    return Err(Error::PoleInDomain {
                        location: to_f64(&c.b),
                    });
                }
                Ok(())
            }
        }
    }

    pub fn weight(&self) -> WeightSpec {
        match self {
            XFamilySpec::Laguerre { k, .. } => WeightSpec::X1Laguerre { k: to_f64(k) },
            XFamilySpec::Jacobi { alpha, beta } => WeightSpec::X1Jacobi {
                alpha: to_f64(alpha),
                beta: to_f64(beta),
            },
        }
    }

    /// Seeds `v_1 = x+k+1, v_i = (x+k)^i` or `u_1 = x-c, u_i = (x-b)^i`, for `i = 1..=count`.
    pub fn seeds(&self, count: usize) -> Result<Vec<Poly>> {
        self.validate()?;
        let (first, base) = match self {
            XFamilySpec::Laguerre { j: 1, k } => (
                Poly::linear(int(1), k + int(1)),
                Poly::linear(int(1), k.clone()),
            ),
            XFamilySpec::Laguerre { .. } => {
                return Err(Error::invalid("seed sequences exist only for X1 families"))
            }
            XFamilySpec::Jacobi { alpha, beta } => {
                let c = JacobiConstants::new(alpha, beta)?;
                (Poly::linear(int(1), -c.c), Poly::linear(int(1), -c.b))
            }
        };
        Ok((1..=count)
            .map(|i| {
                if i == 1 {
                    first.clone()
                } else {
                    base.pow(i as u32)
                }
            })
            .collect())
    }

    pub fn params_label(&self) -> String {
        match self {
            XFamilySpec::Laguerre { j, k } => format!("j={j};k={}", format_rational(k)),
            XFamilySpec::Jacobi { alpha, beta } => {
                format!(
                    "alpha={};beta={}",
                    format_rational(alpha),
                    format_rational(beta)
                )
            }
        }
    }

    pub fn id(&self) -> &'static str {
        match self {
            XFamilySpec::Laguerre { j: 1, .. } => "x1-laguerre",
            XFamilySpec::Laguerre { .. } => "xj-laguerre",
            XFamilySpec::Jacobi { .. } => "x1-jacobi",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    Operator,
    NullSpace,
    GramSchmidt,
}

impl Route {
    pub fn tag(&self) -> &'static str {
        match self {
            Route::Operator => "operator",
            Route::NullSpace => "null-space",
            Route::GramSchmidt => "gram-schmidt",
        }
    }
}

/// Exact member of degree `n` by the operator or null-space route.
pub fn exact_member(spec: &XFamilySpec, n: usize, route: Route) -> Result<Poly> {
    spec.validate()?;
    if n == 0 {
        return Err(Error::invalid("no degree-0 member"));
    }
    match (spec, route) {
        (XFamilySpec::Laguerre { j: 1, k }, Route::Operator) => x1_laguerre_op_route(n - 1, k),
        (XFamilySpec::Jacobi { alpha, beta }, Route::Operator) => {
            x1_jacobi_op_route(n - 1, alpha, beta)
        }
        (XFamilySpec::Laguerre { j, k }, Route::NullSpace) => {
            one_dimensional(xj_polynomial_solve(k, *j, &int(n as i64), n)?, n)
        }
        (XFamilySpec::Jacobi { alpha, beta }, Route::NullSpace) => {
            one_dimensional(x1_jacobi_polynomial_solve(alpha, beta, n, n)?, n)
        }
        (XFamilySpec::Laguerre { .. }, Route::Operator) => Err(Error::invalid(
            "no raising operator is available for codimension j >= 2",
        )),
        (_, Route::GramSchmidt) => Err(Error::invalid("the Gram-Schmidt route is numeric")),
    }
}

fn one_dimensional(basis: Vec<Poly>, n: usize) -> Result<Poly> {
    match basis.len() {
        1 => Ok(basis.into_iter().next().unwrap_or_default()),
        0 => Err(Error::invalid(format!(
            "no polynomial eigenfunction of degree {n}"
        ))),
        d => Err(Error::invalid(format!(
            "solution space of degree {n} has dimension {d}"
        ))),
    }
}

/// First `count` members orthonormalized in `L²(weight)` by modified
/// Gram–Schmidt with one reorthogonalization pass. Each member has unit
/// norm and a positive leading coefficient.
pub fn gram_schmidt_family(
    spec: &XFamilySpec,
    integrator: &Integrator,
    count: usize,
) -> Result<Vec<FloatPoly>> {
    if count == 0 {
        return Err(Error::invalid("count must be at least 1"));
    }
    if *integrator.weight() != spec.weight() {
        return Err(Error::invalid(format!(
            "weight {} does not match the {} seeds",
            integrator.weight().label(),
            spec.id()
        )));
    }
    let mut out: Vec<FloatPoly> = Vec::with_capacity(count);
    for seed in spec.seeds(count)? {
        let mut v = FloatPoly::from(&seed);
        for _ in 0..2 {
            for q in &out {
                let c = integrator.inner(&v, q)?;
                v = v.sub_scaled(c, q);
            }
        }
        let norm = integrator.inner(&v, &v)?.sqrt();
        if !(norm > 0.0) {
            return Err(Error::ZeroVector);
        }
        let sign = if v.leading().unwrap_or(1.0) < 0.0 {
            -1.0
        } else {
            1.0
        };
        out.push(v.scale(sign / norm));
    }
    Ok(out)
}

/// Leading coefficient scaled to one.
pub fn monic_coeffs(c: &[f64]) -> Vec<f64> {
    match c.last() {
        Some(&lc) if lc != 0.0 => c.iter().map(|v| v / lc).collect(),
        _ => c.to_vec(),
    }
}

/// `max|a_i - b_i| / max|a_i|` after making both monic; infinite on a degree mismatch.
pub fn coefficient_rel_diff(a: &[f64], b: &[f64]) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    let (a, b) = (monic_coeffs(a), monic_coeffs(b));
    let scale = a.iter().fold(0.0, |m: f64, v| m.max(v.abs()));
    let diff = a
        .iter()
        .zip(&b)
        .fold(0.0, |m: f64, (x, y)| m.max((x - y).abs()));
    if scale == 0.0 {
        diff
    } else {
        diff / scale
    }
}

/// Unit norm under the integrator's weight, positive leading coefficient.
pub fn unit_normalize<P: PolyEval>(
    p: &P,
    coeffs: &[f64],
    integrator: &Integrator,
) -> Result<FloatPoly> {
    let norm = integrator.inner(p, p)?.sqrt();
    if !(norm > 0.0) {
        return Err(Error::ZeroVector);
    }
    let sign = if coeffs.last().copied().unwrap_or(1.0) < 0.0 {
        -1.0
    } else {
        1.0
    };
    Ok(FloatPoly::from_coeffs(coeffs.to_vec()).scale(sign / norm))
}

/// One row of a family table.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FamilyRow {
    pub degree: usize,
    pub coefficients: Vec<String>,
    pub route: String,
    pub params: String,
}

impl FamilyRow {
    pub fn exact(p: &Poly, route: Route, spec: &XFamilySpec) -> Self {
        FamilyRow {
            degree: p.degree().unwrap_or(0),
            coefficients: p.coeffs().iter().map(format_rational).collect(),
            route: route.tag().into(),
            params: spec.params_label(),
        }
    }

    pub fn numeric(p: &FloatPoly, route: Route, spec: &XFamilySpec) -> Self {
        FamilyRow {
            degree: p.degree().unwrap_or(0),
            coefficients: p.coeffs().iter().map(|c| format!("{c:e}")).collect(),
            route: route.tag().into(),
            params: spec.params_label(),
        }
    }
}

/// CSV with columns `degree, coefficients, route, params`; coefficients are
/// space-separated in ascending powers.
pub fn write_family_csv<W: Write>(rows: &[FamilyRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["degree", "coefficients", "route", "params"])?;
    for r in rows {
        w.write_record([
            r.degree.to_string(),
            r.coefficients.join(" "),
            r.route.clone(),
            r.params.clone(),
        ])?;
    }
    w.flush()?;
    Ok(())
}
