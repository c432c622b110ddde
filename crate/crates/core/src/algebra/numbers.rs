//! Small exact-integer helpers and rational text parsing.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Result, WhpError};

pub fn factorial(n: usize) -> BigInt {
    falling_factorial(n, n)
}

/// `n (n-1) ... (n-k+1)`, i.e. `n!/(n-k)!`.
pub fn falling_factorial(n: usize, k: usize) -> BigInt {
    assert!(k <= n, "falling factorial {n}_{k}");
    let mut acc = BigInt::one();
    for t in (n - k + 1)..=n {
        acc *= t;
    }
    acc
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `(Σ ks)! / Π ks_i!`
pub fn multinomial(ks: &[usize]) -> BigInt {
    let mut total = 0;
    let mut acc = BigInt::one();
    for &k in ks {
        total += k;
        acc *= binomial(total, k);
    }
    acc
}

/// `Π_{i<j} (x_j - x_i)`; 1 for fewer than two entries.
pub fn vandermonde(xs: &[BigRational]) -> BigRational {
    let mut acc = BigRational::one();
    for i in 0..xs.len() {
        for j in i + 1..xs.len() {
            acc *= &xs[j] - &xs[i];
        }
    }
    acc
}

pub fn vandermonde_int(xs: &[i64]) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..xs.len() {
        for j in i + 1..xs.len() {
            acc *= xs[j] - xs[i];
        }
    }
    acc
}

pub fn sign(parity: usize) -> BigInt {
    if parity.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Returns the integer value of `q` if its denominator is 1.
pub fn as_integer(q: &BigRational) -> Option<BigInt> {
    q.is_integer().then(|| q.to_integer())
}

/// Exact quotient `a / b`, or `None` when `b` does not divide `a`.
pub fn div_exact_int(a: &BigInt, b: &BigInt) -> Option<BigInt> {
    if b.is_zero() {
        return None;
    }
    let (q, r) = a.div_rem(b);
    r.is_zero().then_some(q)
}

/// Parses `"3"`, `"-1/2"` or `" 7 / 4 "` into a reduced rational.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let bad = || WhpError::InvalidArgument(format!("invalid rational `{}`", text.trim()));
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

/// Comma separated list of rationals.
pub fn parse_rational_list(text: &str) -> Result<Vec<BigRational>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',').map(parse_rational).collect()
}

pub fn rational_to_f64(q: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or_else(|| {
        // outside f64 range of numer/denom separately; scale down both
        let n = q.numer().bits() as i64;
        let d = q.denom().bits() as i64;
        let shift = (n.max(d) - 1000).max(0) as u64;
        let nn = (q.numer().abs() >> shift).to_f64().unwrap_or(f64::MAX);
        let dd = (q.denom() >> shift).to_f64().unwrap_or(f64::MAX);
        let v = nn / dd;
        if q.is_negative() {
            -v
        } else {
            v
        }
    })
}
