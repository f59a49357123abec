//! Exceptional X₁ and Xⱼ polynomials by operator, null-space and
//! Gram–Schmidt routes, with their defining equations checked exactly.

pub mod family;
pub mod jacobi;
pub mod laguerre;
pub mod nullspace;

pub use family::{
    coefficient_rel_diff, exact_member, gram_schmidt_family, monic_coeffs, unit_normalize,
    write_family_csv, FamilyRow, Route, XFamilySpec,
};
pub use jacobi::{
    apply_o_j, o_j_normalization, x1_jacobi_ode_residual, x1_jacobi_op_route,
    x1_jacobi_polynomial_solve, x1_jacobi_reference_leading,
};
pub use laguerre::{
    apply_o_hat, eval_series, series_to_f64, x1_laguerre_ode_residual, x1_laguerre_op_route,
    x1_laguerre_reference_leading, xj_admissible_degrees, xj_laguerre_ode_residual,
    xj_polynomial_solve, xj_power_series,
};
pub use nullspace::polynomial_null_space;
