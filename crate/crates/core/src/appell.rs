//! Wronskians of Appell sequences.
//!
//! The `p`-family `q_n` has exponential generating function
//! `exp(t x - t^p / p)`; `p = 2` gives the Hermite polynomials and `p = 1`
//! gives `(x - 1)^n`. For a partition `λ` with degree vector `n`,
//! `q_λ = Wr[q_{n_1}, ..., q_{n_ℓ}] / Δ(n)`, and `q_λ(x) = x^{|core|} R(x^p)`.
//!
//! Four routes produce `q_λ`: the determinant itself, the strip-removal
//! recurrence, the character expansion, and the hook-length formula for the
//! coefficients of `R`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::numbers::{binomial, factorial, falling_factorial, sign, vandermonde_int};
use crate::algebra::{wronskian, IntPolynomial, RatPolynomial};
use crate::characters::{character_path_sum, CharacterQuery};
use crate::error::{Result, WhpError};
use crate::partitions::Partition;
use crate::quotient::{
    contained_tuples, core_and_quotient_p, height_p, hook_products_split, remove_border_strips,
    tuple_path_count, tuple_skew_path_count, QuotientDataP,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Determinant,
    Recurrence,
    Characters,
    Hooks,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::Determinant,
        Method::Recurrence,
        Method::Characters,
        Method::Hooks,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Determinant => "determinant",
            Method::Recurrence => "recurrence",
            Method::Characters => "characters",
            Method::Hooks => "hooks",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = WhpError;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| WhpError::InvalidArgument(format!("unknown method `{s}`")))
    }
}

/// Which Appell sequence to take Wronskians of.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AppellSpec {
    /// `exp(t x - t^p / p)`, `p ≥ 1`.
    PFamily(usize),
    /// `A_n = Σ_j C(n, j) z_j x^{n-j}` with `z_0 = 1`; the vector holds
    /// `z_1, z_2, ...`.
    Generic(Vec<BigRational>),
}

/// `q_n` for the `p`-family by the three-term recurrence.
pub fn q_poly(p: usize, n: usize) -> IntPolynomial {
    assert!(p >= 1, "p must be positive");
    let mut seq: Vec<IntPolynomial> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        let next = if m < p {
            IntPolynomial::monomial(BigInt::one(), m)
        } else {
            let shifted = seq[m - 1].shift(1);
            let tail = seq[m - p].scale(&falling_factorial(m - 1, p - 1));
            &shifted - &tail
        };
        seq.push(next);
    }
    seq.pop().unwrap()
}

/// `q_n = Σ_j (-1)^j n! / (j! (n-pj)! p^j) x^{n-pj}`.
pub fn q_poly_explicit(p: usize, n: usize) -> IntPolynomial {
    assert!(p >= 1);
    let mut coeffs = vec![BigInt::zero(); n + 1];
    let pb = BigInt::from(p);
    for j in 0..=n / p {
        let denom = factorial(j) * factorial(n - p * j) * pb.pow(j as u32);
        coeffs[n - p * j] = sign(j) * (factorial(n) / denom);
    }
    IntPolynomial::from_coeffs(coeffs)
}

/// `q_λ` for the `p`-family by the chosen route.
pub fn q_lambda(p: usize, lambda: &Partition, method: Method) -> IntPolynomial {
    match method {
        Method::Determinant => q_lambda_determinant(p, lambda),
        Method::Recurrence => q_lambda_recurrence(p, lambda),
        Method::Characters => q_lambda_characters(p, lambda),
        Method::Hooks => factor_p(p, lambda).full,
    }
}

fn q_lambda_determinant(p: usize, lambda: &Partition) -> IntPolynomial {
    if lambda.is_empty() {
        return IntPolynomial::one();
    }
    let degrees = lambda.degree_vector();
    let fs: Vec<IntPolynomial> = degrees.iter().map(|&n| q_poly(p, n)).collect();
    let delta = vandermonde_int(&degrees.iter().map(|&n| n as i64).collect::<Vec<_>>());
    wronskian(&fs)
        .div_exact_scalar(&delta)
        .expect("Wronskian must be divisible by the Vandermonde of the degrees")
}

/// `F q = (x/n) F q' - (n-1)!/(n-p)! Σ (-1)^{ht} F_λ̃ q_λ̃` over single strip
/// removals, solved coefficientwise.
fn q_lambda_recurrence(p: usize, lambda: &Partition) -> IntPolynomial {
    let mut memo = HashMap::new();
    recurrence(p, lambda, &mut memo)
}

fn recurrence(
    p: usize,
    lambda: &Partition,
    memo: &mut HashMap<Partition, IntPolynomial>,
) -> IntPolynomial {
    if let Some(v) = memo.get(lambda) {
        return v.clone();
    }
    let n = lambda.size();
    let strips = remove_border_strips(lambda, p);
    let result = if strips.is_empty() {
        IntPolynomial::monomial(BigInt::one(), n)
    } else {
        let mut sum = IntPolynomial::zero();
        for (below, ht) in &strips {
            let q = recurrence(p, below, memo);
            sum = &sum + &q.scale(&(sign(*ht) * below.path_count()));
        }
        let f = lambda.path_count();
        let scale = falling_factorial(n, p);
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::one();
        for (m, c) in coeffs.iter_mut().enumerate().take(n) {
            let s = sum.coeff(m);
            if s.is_zero() {
                continue;
            }
            let num = -(&scale * s);
            let den = BigInt::from(n - m) * &f;
            *c = crate::algebra::numbers::div_exact_int(&num, &den)
                .expect("recurrence coefficient must be an integer");
        }
        IntPolynomial::from_coeffs(coeffs)
    };
    memo.insert(lambda.clone(), result.clone());
    result
}

/// `F_λ q_λ = Σ_j (-1)^j n!/(j!(n-pj)!p^j) χ_λ(p^j 1^{n-pj}) x^{n-pj}`.
fn q_lambda_characters(p: usize, lambda: &Partition) -> IntPolynomial {
    let n = lambda.size();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    let pb = BigInt::from(p);
    for j in 0..=n / p {
        let class = factorial(n) / (factorial(j) * factorial(n - p * j) * pb.pow(j as u32));
        let chi = character_path_sum(&CharacterQuery {
            lambda: lambda.clone(),
            p,
            j,
        });
        coeffs[n - p * j] = sign(j) * class * chi;
    }
    IntPolynomial::from_coeffs(coeffs)
        .div_exact_scalar(&lambda.path_count())
        .expect("character expansion must be divisible by F_λ")
}

/// `q_λ(x) = x^{core_size} R(x^p)` together with the data describing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub p: usize,
    pub lambda: Partition,
    pub core: Partition,
    pub core_size: usize,
    /// Total size of the quotient, the degree of `remainder`.
    pub weight: usize,
    pub remainder: IntPolynomial,
    pub full: IntPolynomial,
    /// `ht_p(λ/core) + (|λ| - |core|)/p`; only its parity is canonical.
    pub h: usize,
}

impl Factorization {
    pub fn h_parity(&self) -> usize {
        self.h % 2
    }

    pub fn constant(&self) -> BigInt {
        self.remainder.coeff(0)
    }
}

/// Factorization over the `p`-core with `R` from the hook-length formula.
pub fn factor_p(p: usize, lambda: &Partition) -> Factorization {
    let data = core_and_quotient_p(lambda, p);
    let remainder = remainder_by_hooks(lambda, &data);
    let core_size = data.core.size();
    let full = remainder.substitute_power(p).shift(core_size);
    let weight = data.weight();
    let h = height_p(lambda, &data.core, p).expect("core is reachable") + weight;
    Factorization {
        p,
        lambda: lambda.clone(),
        core: data.core,
        core_size,
        weight,
        remainder,
        full,
        h,
    }
}

/// Reads `(core_size, R)` off a full polynomial, checking the support.
pub fn split_full(full: &IntPolynomial, p: usize, core_size: usize) -> Option<IntPolynomial> {
    let shifted = full.unshift(core_size)?;
    shifted
        .supported_on_class(p, 0)
        .then(|| shifted.decimate(0, p))
}

/// `R_λ(0) = (-1)^h H_{non-p-fold}(λ) / H(core)`.
pub fn remainder_constant_formula(p: usize, lambda: &Partition) -> BigInt {
    let data = core_and_quotient_p(lambda, p);
    let (non_fold, _) = hook_products_split(lambda, p);
    let core_h = data.core.hook_product();
    let h = height_p(lambda, &data.core, p).expect("core is reachable") + data.weight();
    sign(h)
        * crate::algebra::numbers::div_exact_int(&non_fold, &core_h)
            .expect("H_non-p-fold(λ)/H(core) must be an integer")
}

/// Coefficient `r_{λ,j}` of `x^{|μ|-j}` in `R_λ`:
/// `(-1)^j C(|μ|, j) Σ (-1)^{ht} F_μ̃ F_{μ/μ̃} / F_μ · H'(λ)/H'(λ̃)`, where the
/// sum runs over quotient tuples `j` steps below and `H'` is the product of
/// hooks not divisible by `p`.
pub fn remainder_coefficient(p: usize, lambda: &Partition, j: usize) -> BigInt {
    let data = core_and_quotient_p(lambda, p);
    let (non_fold, _) = hook_products_split(lambda, p);
    hook_coefficient(lambda, &data, &non_fold, j)
}

fn remainder_by_hooks(lambda: &Partition, data: &QuotientDataP) -> IntPolynomial {
    let w = data.weight();
    let (non_fold, _) = hook_products_split(lambda, data.p);
    let mut coeffs = vec![BigInt::zero(); w + 1];
    for j in 0..=w {
        coeffs[w - j] = hook_coefficient(lambda, data, &non_fold, j);
    }
    IntPolynomial::from_coeffs(coeffs)
}

fn hook_coefficient(
    lambda: &Partition,
    data: &QuotientDataP,
    non_fold: &BigInt,
    j: usize,
) -> BigInt {
    let w = data.weight();
    if j > w {
        return BigInt::zero();
    }
    if j == 0 {
        return BigInt::one();
    }
    let top = tuple_path_count(&data.components);
    let mut total = BigRational::zero();
    for lower in contained_tuples(&data.components, j) {
        let small = data.rebuild(&lower);
        let ht = height_p(lambda, &small, data.p).expect("same core");
        let (small_non_fold, _) = hook_products_split(&small, data.p);
        let weight = tuple_path_count(&lower)
            * tuple_skew_path_count(&data.components, &lower).expect("contained tuple");
        let term = BigRational::new(sign(ht) * weight * non_fold, &top * small_non_fold);
        total += term;
    }
    total *= BigRational::from_integer(sign(j) * binomial(w, j));
    assert!(
        total.is_integer(),
        "remainder coefficient must be an integer"
    );
    total.to_integer()
}

/// The `z`-sequence (`z_1, z_2, ...`, length `len`) of the `p`-family, so that
/// generic mode reproduces it.
pub fn p_family_z(p: usize, len: usize) -> Vec<BigRational> {
    // exp(-t^p/p) = Σ_m (-1)^m t^{pm} / (p^m m!)
    (1..=len)
        .map(|i| {
            if i % p != 0 {
                return BigRational::zero();
            }
            let m = i / p;
            let num = sign(m) * factorial(i);
            let den = BigInt::from(p).pow(m as u32) * factorial(m);
            BigRational::new(num, den)
        })
        .collect()
}

/// `A_n = Σ_j C(n, j) z_j x^{n-j}`.
pub fn generic_appell(z: &[BigRational], n: usize) -> Result<RatPolynomial> {
    if n > z.len() {
        return Err(WhpError::InvalidArgument(format!(
            "z-sequence has {} terms but degree {n} needs {n}",
            z.len()
        )));
    }
    let coeffs = (0..=n)
        .map(|j| {
            let zj = if j == 0 {
                BigRational::one()
            } else {
                z[j - 1].clone()
            };
            zj * BigRational::from_integer(binomial(n, j))
        })
        .rev()
        .collect();
    Ok(RatPolynomial::from_coeffs(coeffs))
}

pub fn wronskian_appell(
    spec: &AppellSpec,
    lambda: &Partition,
    method: Method,
) -> Result<RatPolynomial> {
    match spec {
        AppellSpec::PFamily(p) => {
            if *p == 0 {
                return Err(WhpError::InvalidArgument("p must be positive".into()));
            }
            Ok(q_lambda(*p, lambda, method).to_rational())
        }
        AppellSpec::Generic(z) => {
            if method != Method::Determinant {
                return Err(WhpError::UnsupportedMethod {
                    method: method.to_string(),
                    mode: "a generic Appell sequence".into(),
                });
            }
            if lambda.is_empty() {
                return Ok(RatPolynomial::one());
            }
            let degrees = lambda.degree_vector();
            let fs = degrees
                .iter()
                .map(|&n| generic_appell(z, n))
                .collect::<Result<Vec<_>>>()?;
            let delta = vandermonde_int(&degrees.iter().map(|&n| n as i64).collect::<Vec<_>>());
            Ok(wronskian(&fs).scale(&BigRational::new(BigInt::one(), delta)))
        }
    }
}

/// Coefficients of `x^{n-1}` and `x^{n-2}` in the Wronskian of a generic
/// Appell sequence: `n z_1` and `c(λ)(z_2 - z_1²) + C(n,2) z_1²`.
pub fn appell_leading_coeffs(
    z: &[BigRational],
    lambda: &Partition,
) -> Result<(BigRational, BigRational)> {
    let n = lambda.size();
    if n < 2 {
        return Err(WhpError::InvalidArgument(format!(
            "partition {lambda} has size below 2"
        )));
    }
    let z1 = z.first().cloned().unwrap_or_else(BigRational::zero);
    let z2 = z.get(1).cloned().unwrap_or_else(BigRational::zero);
    let nq = BigRational::from_integer(BigInt::from(n));
    let a1 = &nq * &z1;
    let sq = &z1 * &z1;
    let a2 = BigRational::from_integer(BigInt::from(lambda.content_sum())) * (&z2 - &sq)
        + BigRational::from_integer(binomial(n, 2)) * sq;
    Ok((a1, a2))
}

/// Conjugation: `R_λ(x) = (-1)^{(p-1)|μ|} R_{λ'}((-1)^{p-1} x)`.
pub fn conjugation_holds(p: usize, lambda: &Partition) -> bool {
    let a = factor_p(p, lambda);
    let b = factor_p(p, &lambda.conjugate());
    let p_even = p.is_multiple_of(2);
    let flip = if p_even {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    let rhs = b.remainder.compose_scale(&flip);
    let rhs = if p_even && a.weight % 2 == 1 {
        -rhs
    } else {
        rhs
    };
    a.remainder == rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{enumerate_partitions, partitions_up_to};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn ip(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn family_polynomials() {
        assert_eq!(q_poly(3, 3), ip(&[-2, 0, 0, 1]));
        assert_eq!(q_poly(2, 4), ip(&[3, 0, -6, 0, 1]));
        for n in 0..10 {
            assert_eq!(q_poly(1, n), ip(&[-1, 1]).pow(n));
            for pp in 1..6 {
                assert_eq!(q_poly(pp, n), q_poly_explicit(pp, n), "p={pp} n={n}");
            }
        }
    }

    #[test]
    fn appell_property() {
        for pp in 1..5 {
            for n in 1..10 {
                assert_eq!(
                    q_poly(pp, n).derive(),
                    q_poly(pp, n - 1).scale(&BigInt::from(n))
                );
            }
        }
    }

    #[test]
    fn small_wronskians() {
        assert_eq!(
            q_lambda(3, &p("3"), Method::Determinant),
            ip(&[-2, 0, 0, 1])
        );
        let f = factor_p(3, &p("3"));
        assert_eq!(f.core_size, 0);
        assert_eq!(f.remainder, ip(&[-2, 1]));
        assert_eq!(f.constant(), remainder_constant_formula(3, &p("3")));
        assert_eq!(q_lambda(2, &p("1,1"), Method::Determinant), ip(&[1, 0, 1]));
        assert_eq!(
            q_lambda(2, &Partition::empty(), Method::Recurrence),
            ip(&[1])
        );
    }

    #[test]
    fn routes_agree_for_small_p() {
        for pp in [1usize, 2, 3, 4] {
            for lam in partitions_up_to(8) {
                let det = q_lambda(pp, &lam, Method::Determinant);
                assert!(det.is_monic() || lam.is_empty());
                assert_eq!(det.degree(), Some(lam.size()));
                for m in [Method::Recurrence, Method::Characters, Method::Hooks] {
                    assert_eq!(q_lambda(pp, &lam, m), det, "p={pp} {lam} {m}");
                }
                if pp == 1 {
                    assert_eq!(det, ip(&[-1, 1]).pow(lam.size()));
                }
            }
        }
    }

    #[test]
    fn factorization_data_for_three() {
        for lam in partitions_up_to(9) {
            let f = factor_p(3, &lam);
            let det = q_lambda(3, &lam, Method::Determinant);
            assert_eq!(split_full(&det, 3, f.core_size), Some(f.remainder.clone()));
            assert_eq!(f.remainder.degree(), Some(f.weight));
            assert!(f.remainder.is_monic());
            assert_eq!(f.constant(), remainder_constant_formula(3, &lam));
            assert!(conjugation_holds(3, &lam), "{lam}");
        }
    }

    #[test]
    fn conjugation_for_two() {
        for lam in partitions_up_to(10) {
            assert!(conjugation_holds(2, &lam), "{lam}");
        }
    }

    #[test]
    fn plancherel_average() {
        for (pp, max) in [(2usize, 8usize), (3, 8)] {
            for n in 0..=max {
                let mut acc = RatPolynomial::zero();
                for lam in enumerate_partitions(n) {
                    let f = lam.path_count();
                    let w = BigRational::new(&f * &f, factorial(n));
                    acc = &acc
                        + &q_lambda(pp, &lam, Method::Recurrence)
                            .to_rational()
                            .scale(&w);
                }
                assert_eq!(acc, RatPolynomial::monomial(BigRational::one(), n));
            }
        }
    }

    #[test]
    fn generic_mode_matches_family_and_leading_formula() {
        let z = p_family_z(3, 12);
        for lam in partitions_up_to(6) {
            let g = wronskian_appell(&AppellSpec::Generic(z.clone()), &lam, Method::Determinant)
                .unwrap();
            assert_eq!(g, q_lambda(3, &lam, Method::Determinant).to_rational());
        }
        let z: Vec<BigRational> = [2, 5, -1, 3, 7, 1]
            .iter()
            .map(|&v| BigRational::from_integer(v.into()))
            .collect();
        let a = |l: &str| {
            wronskian_appell(&AppellSpec::Generic(z.clone()), &p(l), Method::Determinant).unwrap()
        };
        // x² + 2 z1 x + z2 and x² + 2 z1 x + 2 z1² - z2
        assert_eq!(a("2"), RatPolynomial::from_i64s(&[5, 4, 1]));
        assert_eq!(a("1,1"), RatPolynomial::from_i64s(&[3, 4, 1]));
        for lam in partitions_up_to(6).into_iter().filter(|l| l.size() >= 2) {
            let n = lam.size();
            let (a1, a2) = appell_leading_coeffs(&z, &lam).unwrap();
            let w = a(&lam.to_string());
            assert_eq!(w.coeff(n - 1), a1);
            assert_eq!(w.coeff(n - 2), a2);
        }
        assert!(appell_leading_coeffs(&z, &p("1")).is_err());
        assert!(matches!(
            wronskian_appell(&AppellSpec::Generic(z.clone()), &p("2"), Method::Recurrence),
            Err(WhpError::UnsupportedMethod { .. })
        ));
        assert!(wronskian_appell(
            &AppellSpec::Generic(z[..2].to_vec()),
            &p("3"),
            Method::Determinant
        )
        .is_err());
    }

    #[test]
    fn coefficient_support_classes() {
        for pp in [2usize, 3, 5] {
            for n in 0..=12 {
                assert!(q_poly(pp, n).supported_on_class(pp, n % pp));
            }
        }
    }

    #[test]
    fn method_names_round_trip() {
        for m in Method::ALL {
            assert_eq!(m.name().parse::<Method>().unwrap(), m);
        }
        assert!("pfaffian".parse::<Method>().is_err());
    }
}
