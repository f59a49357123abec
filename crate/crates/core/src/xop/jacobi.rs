//! X₁ exceptional Jacobi polynomials.

use super::nullspace::polynomial_null_space;
use crate::error::{Error, Result};
use crate::polycore::classical::check_jacobi_params;
use crate::polycore::{int, jacobi_classical, JacobiConstants, Poly, Rational};

/// `O_j = [α+β-(β-α)x]((1+x)d/dx + β+1) + (β-α)(1+x)` applied to `p`.
pub fn apply_o_j(p: &Poly, alpha: &Rational, beta: &Rational) -> Poly {
    let one_plus_x = Poly::linear(int(1), int(1));
    let front = Poly::linear(-(beta - alpha), alpha + beta);
    let inner = &(&one_plus_x * &p.derivative()) + &p.scale(&(beta + int(1)));
    &(&front * &inner) + &(&one_plus_x.scale(&(beta - alpha)) * p)
}

/// `O_j P_n^{(α-1, β+1)}`; degree `n+1`.
pub fn x1_jacobi_op_route(n: usize, alpha: &Rational, beta: &Rational) -> Result<Poly> {
    JacobiConstants::new(alpha, beta)?;
    check_jacobi_params(&(alpha - int(1)), &(beta + int(1)))?;
    Ok(apply_o_j(
        &jacobi_classical(n, &(alpha - int(1)), &(beta + int(1))),
        alpha,
        beta,
    ))
}

/// `(b-x)(x²-1)f'' + 2a(1-bx)[(x-c)f' - f] - λ(b-x)f` with `λ = (n-1)(α+β+n)`.
pub fn x1_jacobi_ode_residual(
    f: &Poly,
    alpha: &Rational,
    beta: &Rational,
    n: usize,
) -> Result<Poly> {
    let consts = JacobiConstants::new(alpha, beta)?;
    let nr = int(n as i64);
    let lambda = (&nr - int(1)) * (alpha + beta + &nr);
    Ok(x1_jacobi_residual_with(f, &consts, &lambda))
}

pub(crate) fn x1_jacobi_residual_with(f: &Poly, c: &JacobiConstants, lambda: &Rational) -> Poly {
    let d1 = f.derivative();
    let d2 = d1.derivative();
    let b_minus_x = Poly::linear(int(-1), c.b.clone());
    let x2m1 = Poly::from_coeffs(vec![int(-1), int(0), int(1)]);
    let one_minus_bx = Poly::linear(-c.b.clone(), int(1));
    let x_minus_c = Poly::linear(int(1), -c.c.clone());
    let bracket = &(&x_minus_c * &d1) - f;
    let t1 = &(&b_minus_x * &x2m1) * &d2;
    let t2 = &one_minus_bx.scale(&(int(2) * &c.a)) * &bracket;
    let t3 = &b_minus_x.scale(lambda) * f;
    &(&t1 + &t2) - &t3
}

/// Polynomials of degree at most `max_degree` solving the X₁-Jacobi equation
/// with eigenvalue `(n-1)(α+β+n)`.
pub fn x1_jacobi_polynomial_solve(
    alpha: &Rational,
    beta: &Rational,
    n: usize,
    max_degree: usize,
) -> Result<Vec<Poly>> {
    let consts = JacobiConstants::new(alpha, beta)?;
    let nr = int(n as i64);
    let lambda = (&nr - int(1)) * (alpha + beta + &nr);
    Ok(polynomial_null_space(
        |f| x1_jacobi_residual_with(f, &consts, &lambda),
        max_degree,
    ))
}

/// Leading coefficient `-lc(P_{n-1}^{(α,β)})/2` of the conventionally
/// normalized degree-`n` member.
pub fn x1_jacobi_reference_leading(
    n: usize,
    alpha: &Rational,
    beta: &Rational,
) -> Result<Rational> {
    if n == 0 {
        return Err(Error::invalid("the X1 family has no degree-0 member"));
    }
    let p = jacobi_classical(n - 1, alpha, beta);
    Ok(-p.leading().cloned().unwrap_or_else(|| int(1)) / int(2))
}

/// The constant `C` with `O_j P_n^{(α-1,β+1)} = C·𝒫_{n+1}` under the reference
/// normalization, next to the closed form `2(β-α)(β+n)`.
pub fn o_j_normalization(
    n: usize,
    alpha: &Rational,
    beta: &Rational,
) -> Result<(Rational, Rational)> {
    let out = x1_jacobi_op_route(n, alpha, beta)?;
    let lc = out
        .leading()
        .cloned()
        .ok_or_else(|| Error::invalid("O_j output vanished"))?;
    let measured = lc / x1_jacobi_reference_leading(n + 1, alpha, beta)?;
    let printed = int(2) * (beta - alpha) * (beta + int(n as i64));
    Ok((measured, printed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::rat;

    fn samples() -> Vec<(Rational, Rational)> {
        vec![(int(1), int(2)), (int(2), int(5)), (rat(1, 2), rat(3, 2))]
    }

    #[test]
    fn first_member_for_alpha1_beta3() {
        let p = x1_jacobi_op_route(0, &int(1), &int(3)).unwrap();
        assert_eq!(p, Poly::from_ints(&[18, -6]));
        let u1 = Poly::linear(int(1), int(-3));
        assert_eq!(p.ratio_to(&u1), Some(int(-6)));
        assert!(x1_jacobi_ode_residual(&p, &int(1), &int(3), 1)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn u1_is_forced() {
        for (a, b) in samples() {
            let c = JacobiConstants::new(&a, &b).unwrap();
            let u1 = Poly::linear(int(1), -c.c);
            assert!(x1_jacobi_ode_residual(&u1, &a, &b, 1).unwrap().is_zero());
        }
    }

    #[test]
    fn constants_are_never_eigenpolynomials() {
        for n in 1..8 {
            assert!(!x1_jacobi_ode_residual(&Poly::one(), &int(1), &int(3), n)
                .unwrap()
                .is_zero());
        }
    }

    #[test]
    fn rejects_equal_parameters() {
        assert!(x1_jacobi_op_route(1, &int(2), &int(2)).is_err());
        assert!(x1_jacobi_ode_residual(&Poly::one(), &int(2), &int(2), 1).is_err());
    }

    #[test]
    fn op_route_solves_equation_and_matches_null_space() {
        for (a, b) in samples() {
            for n in 1..=10 {
                let f = x1_jacobi_op_route(n - 1, &a, &b).unwrap();
                assert_eq!(f.degree(), Some(n));
                assert!(x1_jacobi_ode_residual(&f, &a, &b, n).unwrap().is_zero());
                if n <= 8 {
                    let basis = x1_jacobi_polynomial_solve(&a, &b, n, n).unwrap();
                    assert_eq!(basis.len(), 1);
                    assert!(f.ratio_to(&basis[0]).is_some());
                }
            }
        }
    }

    #[test]
    fn normalization_constant_matches_closed_form() {
        for (a, b) in samples() {
            for n in 0..6 {
                let (measured, printed) = o_j_normalization(n, &a, &b).unwrap();
                assert_eq!(measured, printed);
            }
        }
    }
}
