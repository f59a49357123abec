//! Exact rational arithmetic and the classical Laguerre and Jacobi families.

pub mod classical;
pub mod float_poly;
pub mod poly;
pub mod rational;

pub use classical::{
    classical_ode_residual, jacobi_classical, laguerre_classical, ClassicalFamily, JacobiConstants,
};
pub use float_poly::{FloatPoly, PolyEval};
pub use poly::Poly;
pub use rational::{format_rational, int, parse_rational, rat, to_f64, Exact, Rational};
