//! Pointwise checks of the quotient ansatz `g = f/(x+k)^j` and `g = f/(z-b)`.
//!
//! Every check returns `max |residual| / max |g|` over the grid nodes.

use serde::Serialize;

use super::ve::{ve_jacobi, ve_jacobi_consistent, ve_laguerre};
use crate::error::{Error, Result};
use crate::polycore::{int, to_f64, JacobiConstants, Poly, Rational};
use crate::solver::Grid;
use crate::xop::polynomial_null_space;

/// How the extra term enters the modified classical equation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum QuotientConvention {
    /// Subtracted like a potential: `... + (λ - V_e) g = 0`. This is the sign
    /// under which the identity holds.
    Consistent,
    /// Added to the eigenvalue as printed: `... + (λ + V_e) g = 0`.
    AsPrinted,
}

fn relative_max(res: &[f64], g: &[f64]) -> f64 {
    let rmax = res.iter().fold(0.0, |m: f64, v| m.max(v.abs()));
    let gmax = g.iter().fold(0.0, |m: f64, v| m.max(v.abs()));
    if gmax == 0.0 {
        f64::INFINITY
    } else {
        rmax / gmax
    }
}

/// `g = f/(x+k)^j` and its first two derivatives from those of `f`.
fn quotient_derivs(f: (f64, f64, f64), q: f64, j: i32) -> (f64, f64, f64) {
    let (f0, f1, f2) = f;
    let jf = j as f64;
    let qj = q.powi(j);
    let g = f0 / qj;
    let g1 = f1 / qj - jf * f0 / (qj * q);
    let g2 = f2 / qj - 2.0 * jf * f1 / (qj * q) + jf * (jf + 1.0) * f0 / (qj * q * q);
    (g, g1, g2)
}

/// Checks `x g'' + (k+1-x) g' + (n-1 ∓ V_e(x,k)) g = 0` for `g = f/(x+k)`,
/// where `n = deg f`.
pub fn quotient_identity_check(
    f: &Poly,
    k: &Rational,
    grid: &Grid,
    convention: QuotientConvention,
) -> Result<f64> {
    let n = f
        .degree()
        .filter(|&d| d >= 1)
        .ok_or_else(|| Error::invalid("quotient check needs a polynomial of degree >= 1"))?;
    let kf = to_f64(k);
    let eig = n as f64 - 1.0;
    let sign = match convention {
        QuotientConvention::Consistent => -1.0,
        QuotientConvention::AsPrinted => 1.0,
    };
    let mut res = Vec::with_capacity(grid.n);
    let mut gs = Vec::with_capacity(grid.n);
    for x in grid.nodes() {
        let (g, g1, g2) = quotient_derivs(f.eval_with_derivs(x), x + kf, 1);
        res.push(x * g2 + (kf + 1.0 - x) * g1 + (eig + sign * ve_laguerre(x, kf, 1)) * g);
        gs.push(g);
    }
    Ok(relative_max(&res, &gs))
}

/// Outcome of the codimension-`j` quotient check.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct XjQuotientReport {
    pub k: f64,
    pub j: u32,
    pub n: f64,
    /// Terms kept in the series solution of the Xⱼ equation.
    pub series_terms: usize,
    pub consistent: f64,
    pub as_printed: f64,
    /// Best constant replacing `n-j` under the consistent sign, and its residual.
    pub best_constant: f64,
    pub best_residual: f64,
    /// The same with the printed sign.
    pub best_constant_printed: f64,
    pub best_residual_printed: f64,
}

/// Taylor coefficients (in `f64`) of the analytic solution of the Xⱼ
/// equation with `f(0) = 1`.
fn xj_series_f64(k: f64, j: u32, n: f64, terms: usize) -> Vec<f64> {
    let jf = j as f64;
    let mut c = vec![1.0];
    for p in 0..terms.saturating_sub(1) {
        let pf = p as f64;
        let a_p = -pf * (pf - 1.0) + (3.0 - 2.0 * jf) * pf + jf * k - (n - jf) * k;
        let prev = if p == 0 { 0.0 } else { c[p - 1] };
        c.push(((pf - 1.0 - n) * prev + a_p * c[p]) / (k * (pf + 1.0) * (pf + 1.0 + k)));
    }
    c
}

/// The Xⱼ equation has no polynomial solutions for `j >= 2`, so `f` is its
/// series solution analytic at the origin (radius `k`). The grid must lie
/// inside `(0, 0.8k]`.
///
/// Checks `x g'' + (k+1-x) g' + (n-j ∓ V_e^{(j)}(x,k)) g = 0` for
/// `g = f/(x+k)^j`.
pub fn xj_quotient_identity_check(
    k: &Rational,
    j: u32,
    n: &Rational,
    grid: &Grid,
) -> Result<XjQuotientReport> {
    let kf = to_f64(k);
    let nf = to_f64(n);
    if !(kf > 0.0) || j == 0 {
        return Err(Error::invalid("xj quotient check needs k > 0 and j >= 1"));
    }
    if grid.a < 0.0 || grid.b > 0.8 * kf {
        return Err(Error::invalid(format!(
            "grid [{}, {}] leaves the series disc [0, {}]",
            grid.a,
            grid.b,
            0.8 * kf
        )));
    }
    let ratio = (grid.b / kf).max(1e-3);
    let terms = ((-40.0 / ratio.ln()).ceil() as usize).clamp(20, 600);
    let c = xj_series_f64(kf, j, nf, terms);
    let eig = nf - j as f64;
    let mut base_cons = Vec::with_capacity(grid.n);
    let mut base_print = Vec::with_capacity(grid.n);
    let mut gs = Vec::with_capacity(grid.n);
    for x in grid.nodes() {
        let (g, g1, g2) = quotient_derivs(crate::xop::eval_series(&c, x), x + kf, j as i32);
        let kinetic = x * g2 + (kf + 1.0 - x) * g1;
        let ve = ve_laguerre(x, kf, j);
        base_cons.push(kinetic - ve * g);
        base_print.push(kinetic + ve * g);
        gs.push(g);
    }
    let with_constant = |base: &[f64], c: f64| -> Vec<f64> {
        base.iter().zip(&gs).map(|(b, g)| b + c * g).collect()
    };
    let gg: f64 = gs.iter().map(|g| g * g).sum();
    let best = |base: &[f64]| -base.iter().zip(&gs).map(|(b, g)| b * g).sum::<f64>() / gg;
    let (bc, bp) = (best(&base_cons), best(&base_print));
    Ok(XjQuotientReport {
        k: kf,
        j,
        n: nf,
        series_terms: terms,
        consistent: relative_max(&with_constant(&base_cons, eig), &gs),
        as_printed: relative_max(&with_constant(&base_print, eig), &gs),
        best_constant: bc,
        best_residual: relative_max(&with_constant(&base_cons, bc), &gs),
        best_constant_printed: bp,
        best_residual_printed: relative_max(&with_constant(&base_print, bp), &gs),
    })
}

/// The quotient equation for `g = f/(x+k)^j` multiplied through by
/// `(x+k)^{j+2}`, as a polynomial in `x`:
///
/// `x[q²f'' - 2jqf' + j(j+1)f] + (k+1-x)[q²f' - jqf] + [λq² ∓ (jq - j(j+1)k)]f`
/// with `q = x+k`; the upper sign is [`QuotientConvention::Consistent`].
pub fn xj_quotient_cleared_residual(
    f: &Poly,
    k: &Rational,
    j: u32,
    lambda: &Rational,
    convention: QuotientConvention,
) -> Poly {
    let jr = int(j as i64);
    let jj1 = &jr * int(j as i64 + 1);
    let q = Poly::linear(int(1), k.clone());
    let q2 = &q * &q;
    let x = Poly::x();
    let d1 = f.derivative();
    let d2 = d1.derivative();
    let second = &(&(&q2 * &d2) - &(&q * &d1).scale(&(int(2) * &jr))) + &f.scale(&jj1);
    let first = &(&q2 * &d1) - &(&q * f).scale(&jr);
    let ve_num = &q.scale(&jr) - &Poly::constant(&jj1 * k);
    let ve_term = match convention {
        QuotientConvention::Consistent => -&ve_num,
        QuotientConvention::AsPrinted => ve_num,
    };
    let zeroth = &q2.scale(lambda) + &ve_term;
    &(&(&x * &second) + &(&Poly::linear(int(-1), k + int(1)) * &first)) + &(&zeroth * f)
}

/// Polynomials `f` of degree exactly `degree` for which `f/(x+k)^j` solves the
/// quotient equation. The top coefficient of the cleared residual forces
/// `λ = degree - j`.
pub fn xj_quotient_polynomial_solve(
    k: &Rational,
    j: u32,
    degree: usize,
    convention: QuotientConvention,
) -> Result<Vec<Poly>> {
    if !(k > &int(0)) || j == 0 {
        return Err(Error::invalid("quotient solve needs k > 0 and j >= 1"));
    }
    let lambda = int(degree as i64) - int(j as i64);
    Ok(polynomial_null_space(
        |f| xj_quotient_cleared_residual(f, k, j, &lambda, convention),
        degree,
    )
    .into_iter()
    .filter(|p| p.degree() == Some(degree))
    .collect())
}

/// Checks the Jacobi analogue for `g = f/(z-b)` with `n' = deg f - 1`:
/// consistent form `J g + (n'(n'+α+β+1) - U(z)) g = 0` with
/// `U = 2(1-bz)/(z-b)²`, or the printed form `J g + n'(n' + V_e + α+β+1) g = 0`
/// with `V_e = 2/(z-b) - 2b/(z-b)²`.
pub fn jacobi_quotient_identity_check(
    f: &Poly,
    alpha: &Rational,
    beta: &Rational,
    grid: &Grid,
    convention: QuotientConvention,
) -> Result<f64> {
    let consts = JacobiConstants::new(alpha, beta)?;
    let n = f
        .degree()
        .filter(|&d| d >= 1)
        .ok_or_else(|| Error::invalid("quotient check needs a polynomial of degree >= 1"))?;
    if grid.a < -1.0 || grid.b > 1.0 {
        return Err(Error::invalid("jacobi grid must lie in [-1, 1]"));
    }
    let (a, b) = (to_f64(alpha), to_f64(beta));
    let pole = to_f64(&consts.b);
    let np = n as f64 - 1.0;
    let mut res = Vec::with_capacity(grid.n);
    let mut gs = Vec::with_capacity(grid.n);
    for z in grid.nodes() {
        let (f0, f1, f2) = f.eval_with_derivs(z);
        // (z-b)^{-1} is the j = 1 quotient with q = z - b
        let (g, g1, g2) = quotient_derivs((f0, f1, f2), z - pole, 1);
        let kinetic = (1.0 - z * z) * g2 + (b - a - (a + b + 2.0) * z) * g1;
        let r = match convention {
            QuotientConvention::Consistent => {
                kinetic + (np * (np + a + b + 1.0) - ve_jacobi_consistent(z, pole)?) * g
            }
            QuotientConvention::AsPrinted => {
                kinetic + np * (np + ve_jacobi(z, pole)? + a + b + 1.0) * g
            }
        };
        res.push(r);
        gs.push(g);
    }
    Ok(relative_max(&res, &gs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::{int, laguerre_classical, rat};
    use crate::xop::{x1_jacobi_op_route, x1_laguerre_op_route};

    fn grid() -> Grid {
        Grid::new(0.01, 40.0, 4000).unwrap()
    }

    #[test]
    fn lowest_member_passes() {
        let k = int(1);
        let f = Poly::linear(int(1), int(2));
        assert!(
            quotient_identity_check(&f, &k, &grid(), QuotientConvention::Consistent).unwrap()
                < 1e-8
        );
    }

    #[test]
    fn higher_members_pass() {
        for k in [int(1), int(2), rat(7, 2)] {
            for n in 1..=4 {
                let f = x1_laguerre_op_route(n - 1, &k).unwrap();
                let r = quotient_identity_check(&f, &k, &grid(), QuotientConvention::Consistent)
                    .unwrap();
                assert!(r < 1e-8, "k={k} n={n}: {r}");
            }
        }
    }

    #[test]
    fn printed_sign_leaves_twice_the_extension() {
        let k = int(1);
        let f = x1_laguerre_op_route(0, &k).unwrap();
        let g = Grid::new(0.01, 40.0, 4000).unwrap();
        let r = quotient_identity_check(&f, &k, &g, QuotientConvention::AsPrinted).unwrap();
        // residual is 2 V_e g; |2 V_e| peaks at x = 0.01 near 2
        assert!(r > 1.0);
    }

    #[test]
    fn wrong_polynomial_fails_loudly() {
        let k = int(1);
        let wrong = laguerre_classical(2, &int(1));
        let r =
            quotient_identity_check(&wrong, &k, &grid(), QuotientConvention::Consistent).unwrap();
        assert!(r > 1e-2);
    }

    #[test]
    fn jacobi_consistent_form_holds() {
        for (a, b) in [(int(1), int(2)), (int(2), int(5)), (rat(1, 2), rat(3, 2))] {
            let g = Grid::new(-0.999, 0.999, 2000).unwrap();
            for n in 0..4 {
                let f = x1_jacobi_op_route(n, &a, &b).unwrap();
                let r =
                    jacobi_quotient_identity_check(&f, &a, &b, &g, QuotientConvention::Consistent)
                        .unwrap();
                assert!(r < 1e-9, "({a},{b}) n={n}: {r}");
                let p =
                    jacobi_quotient_identity_check(&f, &a, &b, &g, QuotientConvention::AsPrinted)
                        .unwrap();
                assert!(p > 1e-3);
            }
        }
    }

    #[test]
    fn xj_series_matches_exact_recurrence() {
        let (k, n) = (int(2), int(4));
        let exact = crate::xop::xj_power_series(&k, 2, &n, 12).unwrap();
        let float = xj_series_f64(2.0, 2, 4.0, 12);
        for (e, f) in exact.iter().zip(&float) {
            assert!((to_f64(e) - f).abs() <= 1e-14 * f.abs().max(1e-300));
        }
    }

    #[test]
    fn xj_at_j1_reduces_to_x1_check() {
        // with j = 1 and n = 1 the series solution is x + k + 1 (up to scale)
        let k = int(2);
        let g = Grid::new(0.01, 1.5, 500).unwrap();
        let rep = xj_quotient_identity_check(&k, 1, &int(1), &g).unwrap();
        assert!(rep.consistent < 1e-12, "{rep:?}");
    }

    #[test]
    fn cleared_quotient_recovers_x1_members() {
        for k in [int(1), int(3), rat(7, 2)] {
            for d in 1..=5 {
                let sols =
                    xj_quotient_polynomial_solve(&k, 1, d, QuotientConvention::Consistent).unwrap();
                assert_eq!(sols.len(), 1, "k={k} d={d}");
                let op = x1_laguerre_op_route(d - 1, &k).unwrap();
                assert_eq!(sols[0], op.monic());
            }
            assert!(
                xj_quotient_polynomial_solve(&k, 1, 0, QuotientConvention::Consistent)
                    .unwrap()
                    .is_empty()
            );
        }
    }

    #[test]
    fn codimension_two_quotient_has_no_polynomial_solutions() {
        for k in [int(1), int(3), rat(7, 2)] {
            for d in 0..=8 {
                for conv in [
                    QuotientConvention::Consistent,
                    QuotientConvention::AsPrinted,
                ] {
                    let sols = xj_quotient_polynomial_solve(&k, 2, d, conv).unwrap();
                    assert!(sols.is_empty(), "k={k} d={d} {conv:?}: {sols:?}");
                }
            }
        }
    }

    #[test]
    fn xj_grid_must_stay_in_disc() {
        let g = Grid::new(0.01, 5.0, 100).unwrap();
        assert!(xj_quotient_identity_check(&int(1), 2, &int(2), &g).is_err());
    }
}
