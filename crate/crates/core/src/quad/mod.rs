//! Gauss quadrature for the classical weights and convergence-controlled
//! integration for their rational x1 modifications.

pub mod integrate;
pub mod rule;
pub mod weight;

pub use integrate::{
    gram_matrix, integrate, max_normalized_off_diagonal, Integrator, DEFAULT_MAX_NODES,
    DEFAULT_REL_TOL,
};
pub use rule::{golub_welsch, QuadratureRule};
pub use weight::{Domain, Recurrence, WeightSpec};
