pub mod chars;
pub mod combinat;
pub mod error;
pub mod exact;
pub mod hopf;
pub mod json;
pub mod lagrange;
pub mod operad;
pub mod symfun;
pub mod verify;

pub use error::{Error, Result};

/// Exact rational numbers.
pub type Rational = num_rational::BigRational;
/// Polynomials with rational coefficients.
pub type QPoly = exact::Poly<Rational>;
/// Rational functions over the rationals.
pub type QRatFun = exact::RatFun<Rational>;
