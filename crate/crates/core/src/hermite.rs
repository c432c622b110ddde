//! Wronskian Hermite polynomials `He_λ = Wr[He_{n_1}, ..., He_{n_ℓ}] / Δ(n)`.
//!
//! This is the `p = 2` member of [`crate::appell`], with the extra structure
//! that only exists for two-quotients: the core length `k`, the ordered pair
//! `(μ, ν)` and the factorization `He_λ(x) = x^{k(k+1)/2} R_λ(x²)`.

use num_bigint::BigInt;

use crate::algebra::numbers::sign;
use crate::algebra::IntPolynomial;
use crate::appell::{factor_p, q_lambda, q_poly, q_poly_explicit, split_full, Factorization};
use crate::error::{Result, WhpError};
use crate::partitions::Partition;
use crate::quotient::{core_and_quotient_2, height_p, hook_products_split, QuotientData2};

pub use crate::appell::Method;

/// Factorization data for `p = 2`.
pub type HermiteFactorization = Factorization;

/// Probabilists' Hermite polynomial `He_n`.
pub fn hermite(n: usize) -> IntPolynomial {
    q_poly(2, n)
}

/// `He_n = Σ_j (-1)^j n! / (j! (n-2j)! 2^j) x^{n-2j}`.
pub fn hermite_explicit(n: usize) -> IntPolynomial {
    q_poly_explicit(2, n)
}

pub fn wronskian_hermite(lambda: &Partition, method: Method) -> IntPolynomial {
    q_lambda(2, lambda, method)
}

/// `R_λ` with its factorization data; the coefficients come from the
/// hook-length formula, which stays cheap for large cores.
pub fn remainder_polynomial(lambda: &Partition) -> HermiteFactorization {
    factor_p(2, lambda)
}

/// Reads `R_λ` off an already computed `He_λ`.
pub fn remainder_from_full(lambda: &Partition, full: &IntPolynomial) -> Option<IntPolynomial> {
    split_full(full, 2, core_and_quotient_2(lambda).core_size())
}

/// `(-1)^{h_λ} H_odd(λ) / H(core)` with `h_λ = ht_2(λ/core) + (|λ| - |core|)/2`.
pub fn remainder_constant(lambda: &Partition) -> BigInt {
    let q = core_and_quotient_2(lambda);
    let core = q.core();
    let h = height_p(lambda, &core, 2).expect("core is reachable") + q.weight();
    let (odd, _) = hook_products_split(lambda, 2);
    let core_h = core.hook_product();
    assert_eq!(
        &odd % &core_h,
        BigInt::from(0),
        "H_odd(λ)/H(core) must be an integer"
    );
    sign(h) * (odd / core_h)
}

/// `r_{λ,1} = -c(λ)`.
pub fn subleading_by_content(lambda: &Partition) -> Result<BigInt> {
    require_nonempty_quotient(lambda, &core_and_quotient_2(lambda))?;
    Ok(BigInt::from(-lambda.content_sum()))
}

/// `r_{λ,1} = (|μ| - |ν|)(2k + 1) - 4(c(μ) + c(ν))`.
pub fn subleading_by_quotient(lambda: &Partition) -> Result<BigInt> {
    let q = core_and_quotient_2(lambda);
    require_nonempty_quotient(lambda, &q)?;
    let diff = q.mu.size() as i64 - q.nu.size() as i64;
    let k = q.k as i64;
    Ok(BigInt::from(
        diff * (2 * k + 1) - 4 * (q.mu.content_sum() + q.nu.content_sum()),
    ))
}

fn require_nonempty_quotient(lambda: &Partition, q: &QuotientData2) -> Result<()> {
    if q.weight() == 0 {
        return Err(WhpError::InvalidArgument(format!(
            "{lambda} is a core; its remainder is constant and has no subleading coefficient"
        )));
    }
    Ok(())
}

/// `R_λ(x) = (-1)^{|μ|+|ν|} R_{λ'}(-x)`.
pub fn conjugation_check(lambda: &Partition) -> bool {
    crate::appell::conjugation_holds(2, lambda)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::partitions_up_to;
    use num_traits::One;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn ip(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn single_polynomials() {
        assert_eq!(hermite(0), ip(&[1]));
        assert_eq!(hermite(1), ip(&[0, 1]));
        assert_eq!(hermite(4).coeff(0), BigInt::from(3));
        assert_eq!(hermite(5).derive().coeff(0), BigInt::from(15));
        for n in 0..=20 {
            assert_eq!(hermite(n), hermite_explicit(n));
            // He_{2m}(0) = (-1)^m (2m-1)!!
            if n % 2 == 0 {
                let m = n / 2;
                let dfact: BigInt = (1..n).step_by(2).map(BigInt::from).product();
                assert_eq!(hermite(n).coeff(0), sign(m) * dfact);
            }
        }
    }

    #[test]
    fn figure_polynomial() {
        let lam = p("4,2,2,1");
        let expected = ip(&[0, 0, 0, -35, 0, -7, 0, 1, 0, 1]);
        for m in Method::ALL {
            assert_eq!(wronskian_hermite(&lam, m), expected, "{m}");
        }
        let f = remainder_polynomial(&lam);
        assert_eq!(f.remainder, ip(&[-35, -7, 1, 1]));
        assert_eq!(f.core_size, 3);
        assert_eq!(f.full, expected);
    }

    #[test]
    fn small_cases() {
        assert_eq!(
            wronskian_hermite(&p("1,1"), Method::Determinant),
            ip(&[1, 0, 1])
        );
        for k in 0..6 {
            let s = Partition::staircase(k);
            let f = remainder_polynomial(&s);
            assert!(f.remainder.coeff(0).is_one() && f.remainder.degree() == Some(0));
            assert_eq!(
                wronskian_hermite(&s, Method::Determinant),
                IntPolynomial::monomial(BigInt::one(), s.size())
            );
        }
        let f = remainder_polynomial(&p("2"));
        assert_eq!(f.remainder, ip(&[-1, 1]));
        assert_eq!(remainder_constant(&p("2")), BigInt::from(-1));
        let e = remainder_polynomial(&Partition::empty());
        assert_eq!((e.full, e.remainder, e.core_size), (ip(&[1]), ip(&[1]), 0));
    }

    #[test]
    fn subleading_examples() {
        assert_eq!(
            subleading_by_content(&p("5,4,2")).unwrap(),
            BigInt::from(-9)
        );
        assert_eq!(subleading_by_content(&p("2,2,2")).unwrap(), BigInt::from(3));
        assert_eq!(subleading_by_quotient(&p("3")).unwrap(), BigInt::from(-3));
        assert!(subleading_by_quotient(&p("2,1")).is_err());
        assert!(subleading_by_content(&Partition::empty()).is_err());
    }

    #[test]
    fn sweep_to_ten() {
        for lam in partitions_up_to(10) {
            let det = wronskian_hermite(&lam, Method::Determinant);
            let f = remainder_polynomial(&lam);
            assert_eq!(det, f.full, "{lam}");
            assert_eq!(remainder_from_full(&lam, &det), Some(f.remainder.clone()));
            assert_eq!(f.constant(), remainder_constant(&lam));
            assert!(conjugation_check(&lam));
            if f.weight > 0 {
                let r1 = f.remainder.coeff(f.weight - 1);
                assert_eq!(subleading_by_content(&lam).unwrap(), r1);
                assert_eq!(subleading_by_quotient(&lam).unwrap(), r1, "{lam}");
            }
        }
    }

    #[test]
    fn self_conjugate_example() {
        let lam = p("4,3,2,1,1");
        // (4,3,2,1,1)' = (5,3,2,1): not self-conjugate, so no parity claim
        assert!(!lam.is_self_conjugate());
        let r = remainder_polynomial(&p("2,1")).remainder;
        assert!(r.supported_on_class(2, 0));
        let sc = p("3,1,1");
        assert!(sc.is_self_conjugate());
        assert!(remainder_polynomial(&sc).remainder.supported_on_class(2, 0));
    }
}
