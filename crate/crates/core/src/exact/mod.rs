//! Exact arithmetic: coefficient rings, free modules, polynomials,
//! rational functions, truncated series and elimination.

pub mod linalg;
pub mod lincomb;
pub mod poly;
pub mod ratfun;
pub mod scalar;
pub mod series;

pub use linalg::{kernel_dimension, span_dimension, Echelon};
pub use lincomb::{Graded, LinComb, Tensor};
pub use poly::{Monomial, Poly, Var};
pub use ratfun::RatFun;
pub use scalar::{binomial, catalan, factorial, Field, Ring};
pub use series::{series_sqrt_expand, TruncSeries};
