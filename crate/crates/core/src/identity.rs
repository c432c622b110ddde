//! The rational identity
//! `Σ_j x_j(x_j-1) Π_{i≠j} (x_j-x_i-2)/(x_j-x_i) = Σ_j (x_j-n+j)(x_j-n-j+1)`
//! for pairwise distinct `x_1, ..., x_n`, checked numerically and, for small
//! `n`, as a polynomial identity after clearing the Vandermonde denominator.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Result, WhpError};
use crate::partitions::Partition;

/// Both sides evaluated at `xs`.
pub fn identity_check(xs: &[BigRational]) -> Result<(BigRational, BigRational)> {
    for (i, a) in xs.iter().enumerate() {
        if xs[..i].contains(a) {
            return Err(WhpError::DuplicateEntry(a.to_string()));
        }
    }
    let n = xs.len() as i64;
    let two = BigRational::from_integer(2.into());
    let one = BigRational::one();
    let mut lhs = BigRational::zero();
    for (j, xj) in xs.iter().enumerate() {
        let mut term = xj * (xj - &one);
        for (i, xi) in xs.iter().enumerate() {
            if i != j {
                term = term * (xj - xi - &two) / (xj - xi);
            }
        }
        lhs += term;
    }
    let mut rhs = BigRational::zero();
    for (j, xj) in xs.iter().enumerate() {
        let j = BigRational::from_integer(BigInt::from(j as i64 + 1));
        let nn = BigRational::from_integer(BigInt::from(n));
        rhs += (xj - &nn + &j) * (xj - &nn - &j + &one);
    }
    Ok((lhs, rhs))
}

/// At the degree vector of `λ` the left side equals `2 c(λ)`.
pub fn degree_vector_check(lambda: &Partition) -> bool {
    let xs: Vec<BigRational> = lambda
        .degree_vector()
        .into_iter()
        .map(|n| BigRational::from_integer(n.into()))
        .collect();
    let (lhs, rhs) = identity_check(&xs).expect("degree vectors are strictly decreasing");
    let c = BigRational::from_integer(BigInt::from(2 * lambda.content_sum()));
    lhs == c && rhs == c
}

/// Sparse polynomial in `n` variables keyed by exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
struct MultiPoly {
    n: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl MultiPoly {
    fn constant(n: usize, c: i64) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(vec![0; n], BigInt::from(c));
        }
        MultiPoly { n, terms }
    }

    fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        MultiPoly {
            n,
            terms: BTreeMap::from([(e, BigInt::one())]),
        }
    }

    /// `x_a - x_b + c`
    fn linear(n: usize, a: usize, b: Option<usize>, c: i64) -> Self {
        let mut p = Self::var(n, a).add(&Self::constant(n, c));
        if let Some(b) = b {
            p = p.add(&Self::var(n, b).scale(-1));
        }
        p
    }

    fn scale(&self, c: i64) -> Self {
        let mut out = Self::constant(self.n, 0);
        if c != 0 {
            for (e, v) in &self.terms {
                out.terms.insert(e.clone(), v * c);
            }
        }
        out
    }

    fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (e, v) in &other.terms {
            let entry = terms.entry(e.clone()).or_insert_with(BigInt::zero);
            *entry += v;
            if entry.is_zero() {
                terms.remove(e);
            }
        }
        MultiPoly { n: self.n, terms }
    }

    fn mul(&self, other: &Self) -> Self {
        let mut terms: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        for (ea, va) in &self.terms {
            for (eb, vb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                *terms.entry(e).or_insert_with(BigInt::zero) += va * vb;
            }
        }
        terms.retain(|_, v| !v.is_zero());
        MultiPoly { n: self.n, terms }
    }
}

/// Largest `n` for which [`identity_symbolic`] expands the polynomials; the
/// expansion has `O(n!)`-ish growth in the number of monomials.
pub const SYMBOLIC_MAX_N: usize = 5;

/// Verifies the identity with `x_1, ..., x_n` as indeterminates. Both sides
/// are multiplied by `V = Π_{a<b} (x_a - x_b)`; the `j`-th summand then
/// becomes `(-1)^{j-1} x_j(x_j-1) Π_{i≠j}(x_j-x_i-2) V_{-j}`, where `V_{-j}`
/// omits `x_j`.
pub fn identity_symbolic(n: usize) -> Result<bool> {
    if n > SYMBOLIC_MAX_N {
        return Err(WhpError::InvalidArgument(format!(
            "symbolic check is capped at n = {SYMBOLIC_MAX_N}"
        )));
    }
    let vandermonde_without = |skip: Option<usize>| {
        let mut v = MultiPoly::constant(n, 1);
        for a in 0..n {
            for b in a + 1..n {
                if Some(a) != skip && Some(b) != skip {
                    v = v.mul(&MultiPoly::linear(n, a, Some(b), 0));
                }
            }
        }
        v
    };
    let mut lhs = MultiPoly::constant(n, 0);
    for j in 0..n {
        let mut term = MultiPoly::var(n, j).mul(&MultiPoly::linear(n, j, None, -1));
        for i in (0..n).filter(|&i| i != j) {
            term = term.mul(&MultiPoly::linear(n, j, Some(i), -2));
        }
        term = term.mul(&vandermonde_without(Some(j)));
        lhs = lhs.add(&term.scale(if j % 2 == 0 { 1 } else { -1 }));
    }
    let nn = n as i64;
    let mut rhs = MultiPoly::constant(n, 0);
    for j in 0..n {
        let jj = j as i64 + 1;
        let f =
            MultiPoly::linear(n, j, None, jj - nn).mul(&MultiPoly::linear(n, j, None, 1 - nn - jj));
        rhs = rhs.add(&f);
    }
    rhs = rhs.mul(&vandermonde_without(None));
    Ok(lhs == rhs)
}
