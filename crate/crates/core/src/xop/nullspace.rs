//! Exact null spaces of linear maps on polynomials of bounded degree.

use num_traits::{One, Zero};

use crate::polycore::{Poly, Rational};

/// Basis of `{f : deg f <= max_degree, op(f) = 0}` for a linear `op`.
///
/// Each basis element is scaled to be monic; the basis is ordered by degree.
pub fn polynomial_null_space(op: impl Fn(&Poly) -> Poly, max_degree: usize) -> Vec<Poly> {
    let cols: Vec<Poly> = (0..=max_degree)
        .map(|i| op(&Poly::monomial(Rational::one(), i)))
        .collect();
    let rows = cols
        .iter()
        .filter_map(|c| c.degree())
        .max()
        .map_or(0, |d| d + 1);
    let ncols = cols.len();
    let mut m: Vec<Vec<Rational>> = (0..rows)
        .map(|r| cols.iter().map(|c| c.coeff(r)).collect())
        .collect();
    let pivots = rref(&mut m, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    let mut basis: Vec<Poly> = free
        .iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); ncols];
            v[f] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -m[row][f].clone();
            }
            Poly::from_coeffs(v).monic()
        })
        .collect();
    basis.sort_by_key(|p| p.degree());
    basis
}

/// Reduced row echelon form in place; returns the pivot column of each pivot row.
fn rref(m: &mut [Vec<Rational>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for v in m[row].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = m[row].clone();
        for (r, other) in m.iter_mut().enumerate() {
            if r != row && !other[col].is_zero() {
                let factor = other[col].clone();
                for (o, pv) in other.iter_mut().zip(&pivot_row) {
                    *o -= &factor * pv;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    pivots
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::int;

    #[test]
    fn kernel_of_second_derivative() {
        let basis = polynomial_null_space(|p| p.derivative().derivative(), 5);
        assert_eq!(basis, vec![Poly::one(), Poly::x()]);
    }

    #[test]
    fn kernel_of_euler_operator() {
        // x p' - 3p vanishes only on multiples of x^3
        let basis =
            polynomial_null_space(|p| &(&Poly::x() * &p.derivative()) - &p.scale(&int(3)), 6);
        assert_eq!(basis, vec![Poly::monomial(int(1), 3)]);
    }

    #[test]
    fn injective_map_has_empty_kernel() {
        assert!(polynomial_null_space(|p| p.clone(), 4).is_empty());
    }
}
