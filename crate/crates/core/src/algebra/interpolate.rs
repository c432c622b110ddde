//! Exact polynomial interpolation through rational points.

use num_rational::BigRational;

use super::poly::RatPolynomial;
use crate::error::{Result, WhpError};

/// The polynomial of degree below `points.len()` through every point, built
/// from Newton divided differences.
pub fn interpolate(points: &[(BigRational, BigRational)]) -> Result<RatPolynomial> {
    for i in 0..points.len() {
        for j in 0..i {
            if points[i].0 == points[j].0 {
                return Err(WhpError::DuplicateAbscissa(points[i].0.to_string()));
            }
        }
    }
    let xs: Vec<&BigRational> = points.iter().map(|p| &p.0).collect();
    let mut table: Vec<BigRational> = points.iter().map(|p| p.1.clone()).collect();
    let n = points.len();
    for level in 1..n {
        for i in (level..n).rev() {
            table[i] = (&table[i] - &table[i - 1]) / (xs[i] - xs[i - level]);
        }
    }
    let mut poly = RatPolynomial::zero();
    for i in (0..n).rev() {
        let factor = RatPolynomial::from_coeffs(vec![-xs[i].clone(), num_traits::One::one()]);
        poly = &(&poly * &factor) + &RatPolynomial::constant(table[i].clone());
    }
    Ok(poly)
}
