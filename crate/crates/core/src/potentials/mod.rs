//! Preset potentials, their rational extensions, closed-form eigenstates
//! and the quotient-ansatz identity checks.

pub mod preset;
pub mod theorem;
pub mod ve;

pub use preset::{
    closed_form_eigenstate, ve_preset, EigenstateClosedForm, PotentialSpec, Preset, StateKind,
    REGISTRY, SCARF_EDGE,
};
pub use theorem::{
    jacobi_quotient_identity_check, quotient_identity_check, xj_quotient_cleared_residual,
    xj_quotient_identity_check, xj_quotient_polynomial_solve, QuotientConvention, XjQuotientReport,
};
pub use ve::{ve_jacobi, ve_jacobi_consistent, ve_laguerre};
