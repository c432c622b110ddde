//! Exact integers, rationals and univariate polynomials over them.

pub mod interpolate;
pub mod numbers;
pub mod poly;
pub mod wronskian;

pub use interpolate::interpolate;
pub use numbers::{binomial, factorial, parse_rational, vandermonde};
pub use poly::{Coeff, IntPolynomial, Polynomial, RatPolynomial};
pub use wronskian::{determinant, wronskian};
