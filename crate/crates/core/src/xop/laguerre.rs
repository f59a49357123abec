//! X₁ and Xⱼ exceptional Laguerre polynomials.

use num_traits::{One, Zero};

use super::nullspace::polynomial_null_space;
use crate::error::{Error, Result};
use crate::polycore::classical::check_positive;
use crate::polycore::{int, laguerre_classical, to_f64, Poly, Rational};

/// `Ô L_ν^{(k-1)}` with `Ô = (x+k)(d/dx - 1) - 1`; degree `ν+1`.
pub fn x1_laguerre_op_route(nu: usize, k: &Rational) -> Result<Poly> {
    check_positive("k", k)?;
    Ok(apply_o_hat(&laguerre_classical(nu, &(k - int(1))), k))
}

/// `(x+k)(p' - p) - p`
pub fn apply_o_hat(p: &Poly, k: &Rational) -> Poly {
    let xk = Poly::linear(int(1), k.clone());
    &(&xk * &(&p.derivative() - p)) - p
}

/// Leading coefficient `-(-1)^{n-1}/(n-1)!` of the conventionally normalized
/// member of degree `n`, the normalization under which `Ô L_ν^{(k-1)}` is
/// exactly the degree-`ν+1` member.
pub fn x1_laguerre_reference_leading(n: usize) -> Result<Rational> {
    if n == 0 {
        return Err(Error::invalid("the X1 family has no degree-0 member"));
    }
    let mut f = Rational::one();
    for i in 2..n {
        f *= int(i as i64);
    }
    let sign = if (n - 1) % 2 == 0 { int(-1) } else { int(1) };
    Ok(sign / f)
}

/// `-x(x+k)f'' + (x-k)[(x+k+1)f' - f] - (n-1)(x+k)f`
///
/// Zero exactly when `f` is an X₁ eigenpolynomial with eigenvalue `n-1`.
pub fn x1_laguerre_ode_residual(f: &Poly, k: &Rational, n: usize) -> Poly {
    xj_laguerre_ode_residual(f, k, 1, &int(n as i64))
}

/// `-x(x+k)f'' + [(x-k)(x+k+1) - 2x(j-1)]f' - j(x-k)f - (n-j)(x+k)f`
///
/// `n` is rational so the solver can probe non-integer eigenvalue labels.
pub fn xj_laguerre_ode_residual(f: &Poly, k: &Rational, j: u32, n: &Rational) -> Poly {
    let jr = int(j as i64);
    let d1 = f.derivative();
    let d2 = d1.derivative();
    let x = Poly::x();
    let xk = Poly::linear(int(1), k.clone());
    let xmk = Poly::linear(int(1), -k.clone());
    let p2 = -&(&x * &xk);
    let p1 = &(&xmk * &Poly::linear(int(1), k + int(1))) - &x.scale(&(int(2) * (&jr - int(1))));
    let p0 = &(-&xmk.scale(&jr)) - &xk.scale(&(n - &jr));
    &(&(&p2 * &d2) + &(&p1 * &d1)) + &(&p0 * f)
}

/// Polynomials of degree at most `max_degree` solving the Xⱼ equation.
pub fn xj_polynomial_solve(
    k: &Rational,
    j: u32,
    n: &Rational,
    max_degree: usize,
) -> Result<Vec<Poly>> {
    check_positive("k", k)?;
    if j == 0 {
        return Err(Error::invalid("codimension j must be at least 1"));
    }
    Ok(polynomial_null_space(
        |f| xj_laguerre_ode_residual(f, k, j, n),
        max_degree,
    ))
}

/// For each integer label `n` in `0..=max_degree`, the dimension of the
/// polynomial solution space of degree at most `max_degree`.
///
/// The `x^{d+1}` coefficient of the residual is `(d - n)·lc(f)`, so only
/// `n = deg f` can carry solutions; scanning integer `n` is exhaustive.
pub fn xj_admissible_degrees(
    k: &Rational,
    j: u32,
    max_degree: usize,
) -> Result<Vec<(usize, usize)>> {
    (0..=max_degree)
        .map(|n| {
            Ok((
                n,
                xj_polynomial_solve(k, j, &int(n as i64), max_degree)?.len(),
            ))
        })
        .collect()
}

/// Taylor coefficients at 0 of the solution of the Xⱼ equation with `f(0) = 1`.
///
/// The origin is a regular singular point with exponents 0 and `-k`; the
/// analytic branch converges for `|x| < k`.
pub fn xj_power_series(k: &Rational, j: u32, n: &Rational, terms: usize) -> Result<Vec<Rational>> {
    check_positive("k", k)?;
    let jr = int(j as i64);
    let mut c: Vec<Rational> = vec![Rational::one()];
    for p in 0..terms.saturating_sub(1) {
        let pr = int(p as i64);
        let a_p = -&pr * (&pr - int(1)) + (int(3) - int(2) * &jr) * &pr + &jr * k - (n - &jr) * k;
        let prev = if p == 0 {
            Rational::zero()
        } else {
            c[p - 1].clone()
        };
        let num = (&pr - int(1) - n) * prev + a_p * &c[p];
        let den = k * (&pr + int(1)) * (&pr + int(1) + k);
        c.push(num / den);
    }
    Ok(c)
}

/// Value and first two derivatives of a truncated power series.
pub fn eval_series(c: &[f64], x: f64) -> (f64, f64, f64) {
    let (mut p, mut dp, mut ddp) = (0.0, 0.0, 0.0);
    for a in c.iter().rev() {
        ddp = ddp * x + 2.0 * dp;
        dp = dp * x + p;
        p = p * x + a;
    }
    (p, dp, ddp)
}

pub fn series_to_f64(c: &[Rational]) -> Vec<f64> {
    c.iter().map(to_f64).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::rat;
    use proptest::prelude::*;

    fn ks() -> Vec<Rational> {
        vec![int(1), int(2), rat(7, 2)]
    }

    #[test]
    fn op_route_low_members() {
        for k in ks() {
            let v1 = Poly::linear(int(1), &k + int(1));
            assert_eq!(x1_laguerre_op_route(0, &k).unwrap(), -&v1);
            assert_eq!(
                x1_laguerre_op_route(1, &k).unwrap(),
                Poly::from_coeffs(vec![-(&k * (&k + int(2))), int(0), int(1)])
            );
        }
        assert!(x1_laguerre_op_route(1, &int(0)).is_err());
    }

    #[test]
    fn residual_examples() {
        for k in ks() {
            assert!(x1_laguerre_ode_residual(&Poly::linear(int(1), &k + int(1)), &k, 1).is_zero());
            assert!(
                x1_laguerre_ode_residual(&x1_laguerre_op_route(1, &k).unwrap(), &k, 2).is_zero()
            );
            for n in 1..6 {
                let want = Poly::linear(int(-(n as i64)), &k * int(2 - n as i64));
                assert_eq!(x1_laguerre_ode_residual(&Poly::one(), &k, n), want);
            }
        }
    }

    #[test]
    fn op_route_solves_x1_equation() {
        for k in ks() {
            for n in 1..=10 {
                let f = x1_laguerre_op_route(n - 1, &k).unwrap();
                assert_eq!(f.degree(), Some(n));
                assert!(x1_laguerre_ode_residual(&f, &k, n).is_zero(), "k={k} n={n}");
            }
        }
    }

    #[test]
    fn op_route_matches_reference_normalization() {
        for k in ks() {
            for n in 1..=8 {
                let f = x1_laguerre_op_route(n - 1, &k).unwrap();
                assert_eq!(
                    f.leading().unwrap(),
                    &x1_laguerre_reference_leading(n).unwrap()
                );
            }
        }
    }

    #[test]
    fn null_space_examples() {
        for k in ks() {
            let b = xj_polynomial_solve(&k, 1, &int(1), 1).unwrap();
            assert_eq!(b, vec![Poly::linear(int(1), &k + int(1))]);
            assert!(xj_polynomial_solve(&k, 1, &int(0), 0).unwrap().is_empty());
            for n in 1..=8usize {
                let b = xj_polynomial_solve(&k, 1, &int(n as i64), n).unwrap();
                assert_eq!(b.len(), 1);
                let op = x1_laguerre_op_route(n - 1, &k).unwrap();
                assert!(op.ratio_to(&b[0]).is_some(), "k={k} n={n}");
            }
        }
    }

    #[test]
    fn no_degree_zero_member() {
        for k in ks() {
            let scan = xj_admissible_degrees(&k, 1, 6).unwrap();
            assert_eq!(scan[0], (0, 0));
            assert!(scan[1..].iter().all(|&(_, dim)| dim == 1));
        }
    }

    // The printed Xⱼ equation for j >= 2 admits no polynomial solution at all.
    #[test]
    fn xj_codimension_two_has_no_polynomials() {
        for k in [int(1), int(3), rat(7, 2)] {
            for j in [2, 3] {
                let scan = xj_admissible_degrees(&k, j, 8).unwrap();
                assert!(scan.iter().all(|&(_, dim)| dim == 0), "k={k} j={j}");
            }
        }
    }

    #[test]
    fn power_series_satisfies_equation() {
        let k = int(2);
        let n = int(4);
        let c = xj_power_series(&k, 2, &n, 40).unwrap();
        // truncated series: residual vanishes through x^{38}
        let r = xj_laguerre_ode_residual(&Poly::from_coeffs(c), &k, 2, &n);
        for i in 0..=38 {
            assert!(r.coeff(i).is_zero(), "coefficient {i}");
        }
    }

    proptest! {
        #[test]
        fn xj_reduces_to_x1_at_j1(cs in prop::collection::vec(-9i64..9, 0..6), kn in 1i64..9, kd in 1i64..4, n in 1usize..8) {
            let f = Poly::from_ints(&cs);
            let k = rat(kn, kd);
            prop_assert_eq!(
                xj_laguerre_ode_residual(&f, &k, 1, &int(n as i64)),
                x1_laguerre_ode_residual(&f, &k, n)
            );
        }
    }
}
