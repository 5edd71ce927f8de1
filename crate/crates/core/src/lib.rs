//! Exact symbolic deformation quantization of quaternion-valued polynomials.
//!
//! The algebra is generic over a [`Scalar`] field; the aliases below fix it
//! to arbitrary-precision rationals, which is what the verifier, the
//! expression language and the command line use.

pub mod error;
pub mod expr;
pub mod fuzz;
pub mod matrix;
pub mod oracle;
pub mod poly;
pub mod quat;
pub mod scalar;
pub mod star;
pub mod verify;

pub use error::{Error, Result};
pub use matrix::{to_matrix_rep, MatrixRep, RepKind};
pub use poly::{EvalAssignment, Monomial, QPolynomial, Var};
pub use quat::Quaternion;
pub use scalar::Scalar;
pub use star::{
    associator, poisson_bracket, star, star_commutator, star_order_term, BracketPair, NuMode,
    StarConfig, ThetaSpec,
};

/// Exact rational scalar.
pub type Rational = num_rational::BigRational;
/// Quaternion with exact rational components.
pub type Quat = Quaternion<Rational>;
/// Polynomial with exact rational quaternion coefficients.
pub type QPoly = QPolynomial<Rational>;

pub const ENGINE_VERSION: &str = concat!("quatstar ", env!("CARGO_PKG_VERSION"));
