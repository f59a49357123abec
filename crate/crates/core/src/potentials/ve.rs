//! The extra potentials that turn classical eigenproblems into exceptional ones.

use crate::error::{Error, Result};

/// `j/(x+k) - j(j+1)k/(x+k)²`; for `j = 1` this is `1/(x+k) - 2k/(x+k)²`.
pub fn ve_laguerre(x: f64, k: f64, j: u32) -> f64 {
    let j = j as f64;
    let q = x + k;
    j / q - j * (j + 1.0) * k / (q * q)
}

/// `2/(z-b) - 2b/(z-b)²` as printed for the Jacobi case.
pub fn ve_jacobi(z: f64, b: f64) -> Result<f64> {
    check_jacobi_pole(b)?;
    let q = z - b;
    Ok(2.0 / q - 2.0 * b / (q * q))
}

/// `2(1-bz)/(z-b)²`, the term that actually makes `f/(z-b)` solve the
/// modified Jacobi equation when `f` is an X₁-Jacobi polynomial:
/// `(1-z²)g'' + [β-α-(α+β+2)z]g' + (n(n+α+β+1) - U(z))g = 0`.
pub fn ve_jacobi_consistent(z: f64, b: f64) -> Result<f64> {
    check_jacobi_pole(b)?;
    let q = z - b;
    Ok(2.0 * (1.0 - b * z) / (q * q))
}

fn check_jacobi_pole(b: f64) -> Result<()> {
    if !(b.abs() > 1.0) {
        return Err(Error::PoleInDomain { location: b });
    }
    Ok(())
}
