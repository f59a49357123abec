//! Superpotentials, partner potentials and intertwining checks.

mod claims;
mod ops;
mod superpotential;

pub use claims::{audit_claims, verify_section3_claims, ClaimRow, ClaimStatus, CLAIM_TOL};
pub use ops::{
    apply_a, commutator_residual, factorized_lowest, intertwine_check, partner_potentials,
    random_smooth_states, zero_mode, IntertwineResult, PartnerPair,
};
pub use superpotential::{
    grid_derivative, oscillator_factorization_energy, scarf_factorization_energy,
    superpotential_from_ground_state, ImpReading, Provenance, Superpotential,
};

/// `O_j P_n^{(α-1,β+1)}`, the exceptional Jacobi member of degree `n+1`.
pub use crate::xop::x1_jacobi_op_route as op_route_jacobi;
/// `Ô L_ν^{(k-1)}`, the exceptional Laguerre member of degree `ν+1`.
pub use crate::xop::x1_laguerre_op_route as op_route_raising;
