//! Monic Laguerre polynomials `L̂_n^{(α)} = (-1)^n n! L_n^{(α)}` and the two
//! Wronskian families `L̂_{μ,ν}^{(α)}` and `Ω̂_{μ,ν}^{(α)}` built from them.
//!
//! Wronskian entries have the form `P(x) x^s e^{cx}` with rational `s`, `c`.
//! The `i`-th derivative is `x^{s-i} e^{cx} P_i(x)` with
//! `P_{i+1} = x P_i' + (s - i) P_i + c x P_i`, so the Wronskian factors as
//! `x^{Σs - N(N-1)/2} e^{Σc x} det[P_{j,i}]` and the monomial and exponential
//! prefactors cancel exactly.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::numbers::{binomial, sign, vandermonde};
use crate::algebra::{determinant, RatPolynomial};
use crate::error::{Result, WhpError};
use crate::hermite::{hermite, remainder_polynomial};
use crate::partitions::Partition;
use crate::quotient::core_and_quotient_2;

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn degrees(p: &Partition) -> Vec<BigRational> {
    p.degree_vector()
        .into_iter()
        .map(|n| rat(n as i64))
        .collect()
}

/// Coefficient of `x^i` is `(-1)^{n-i} C(n,i) Π_{t=i+1}^{n} (α + t)`.
pub fn laguerre(n: usize, alpha: &BigRational) -> RatPolynomial {
    let mut coeffs = vec![BigRational::zero(); n + 1];
    let mut prod = BigRational::one();
    for i in (0..=n).rev() {
        coeffs[i] = BigRational::from_integer(sign(n - i) * binomial(n, i)) * &prod;
        prod *= alpha + rat(i as i64);
    }
    RatPolynomial::from_coeffs(coeffs)
}

/// A Wronskian entry `poly(x) · x^power · e^{rate·x}`.
#[derive(Clone, Debug)]
struct QuasiEntry {
    poly: RatPolynomial,
    power: BigRational,
    rate: BigRational,
}

impl QuasiEntry {
    /// `P_0, ..., P_{count-1}` of the derivative recurrence.
    fn reduced_derivatives(&self, count: usize) -> Vec<RatPolynomial> {
        let x = RatPolynomial::x();
        let cx = x.scale(&self.rate);
        let mut out = Vec::with_capacity(count);
        let mut cur = self.poly.clone();
        for i in 0..count {
            let s = &self.power - rat(i as i64);
            let next = &(&(&x * &cur.derive()) + &cur.scale(&s)) + &(&cx * &cur);
            out.push(cur);
            cur = next;
        }
        out
    }
}

/// `det[P_{j,i}]` together with the exponent of `x` that multiplies it.
fn quasi_wronskian(entries: &[QuasiEntry]) -> (RatPolynomial, BigRational) {
    let n = entries.len();
    let cols: Vec<Vec<RatPolynomial>> = entries.iter().map(|e| e.reduced_derivatives(n)).collect();
    let rows = (0..n)
        .map(|i| cols.iter().map(|c| c[i].clone()).collect())
        .collect();
    let power: BigRational = entries.iter().map(|e| e.power.clone()).sum::<BigRational>()
        - rat((n * n.saturating_sub(1) / 2) as i64);
    (determinant(rows), power)
}

/// Multiplies `poly` by `x^power` where `power` must be an integer, possibly
/// negative; the result has to stay a polynomial.
fn apply_power(poly: RatPolynomial, power: &BigRational) -> RatPolynomial {
    assert!(
        power.is_integer(),
        "monomial prefactor must cancel to an integer power"
    );
    let e: i64 = power.to_integer().try_into().expect("small exponent");
    if e >= 0 {
        poly.shift(e as usize)
    } else {
        poly.unshift((-e) as usize)
            .expect("Wronskian must vanish to the order of the prefactor")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaguerreWronskianQuery {
    pub mu: Partition,
    pub nu: Partition,
    pub alpha: BigRational,
}

impl LaguerreWronskianQuery {
    /// Rejects parameters where some `n_i` equals some `m_j - α`.
    pub fn new(mu: Partition, nu: Partition, alpha: BigRational) -> Result<Self> {
        let ns = degrees(&mu);
        let ms: Vec<BigRational> = degrees(&nu).into_iter().map(|m| m - &alpha).collect();
        for n in &ns {
            if let Some(m) = ms.iter().find(|m| *m == n) {
                return Err(WhpError::ParameterCollision {
                    degree: n.to_string(),
                    shifted: m.to_string(),
                });
            }
        }
        Ok(LaguerreWronskianQuery { mu, nu, alpha })
    }

    /// `n_μ` followed by `m_ν - α`.
    pub fn parameters(&self) -> Vec<BigRational> {
        let mut v = degrees(&self.mu);
        v.extend(degrees(&self.nu).into_iter().map(|m| m - &self.alpha));
        v
    }
}

/// `x^{(ℓ(μ)+α)ℓ(ν)} Wr[f, g] / Δ(n_μ, m_ν - α)` with `f_j = L̂_{n_j}^{(α)}` and
/// `g_j = x^{-α} L̂_{m_j}^{(-α)}`.
pub fn wronskian_laguerre(q: &LaguerreWronskianQuery) -> RatPolynomial {
    let alpha = &q.alpha;
    let neg = -alpha;
    let mut entries: Vec<QuasiEntry> =
        q.mu.degree_vector()
            .into_iter()
            .map(|n| QuasiEntry {
                poly: laguerre(n, alpha),
                power: BigRational::zero(),
                rate: BigRational::zero(),
            })
            .collect();
    entries.extend(q.nu.degree_vector().into_iter().map(|m| QuasiEntry {
        poly: laguerre(m, &neg),
        power: neg.clone(),
        rate: BigRational::zero(),
    }));
    if entries.is_empty() {
        return RatPolynomial::one();
    }
    let (det, power) = quasi_wronskian(&entries);
    let lm = rat(q.mu.length() as i64);
    let ln = rat(q.nu.length() as i64);
    let prefactor = (lm + alpha) * ln;
    let delta = vandermonde(&q.parameters());
    apply_power(det, &(power + prefactor))
        .div_exact_scalar(&delta)
        .expect("nonzero Vandermonde")
}

/// `(-1)^{Σm} e^{-ℓ(ν)x} Wr[f, h] / (Δ(n_μ) Δ(m_ν))` with `f_j = L̂_{n_j}^{(α)}`
/// and `h_j = e^x L̂_{m_j}^{(α)}(-x)`.
pub fn omega_polynomial(mu: &Partition, nu: &Partition, alpha: &BigRational) -> RatPolynomial {
    let ns = mu.degree_vector();
    let ms = nu.degree_vector();
    let mut entries: Vec<QuasiEntry> = ns
        .iter()
        .map(|&n| QuasiEntry {
            poly: laguerre(n, alpha),
            power: BigRational::zero(),
            rate: BigRational::zero(),
        })
        .collect();
    entries.extend(ms.iter().map(|&m| QuasiEntry {
        poly: laguerre(m, alpha).compose_scale(&rat(-1)),
        power: BigRational::zero(),
        rate: BigRational::one(),
    }));
    if entries.is_empty() {
        return RatPolynomial::one();
    }
    let (det, power) = quasi_wronskian(&entries);
    let delta = vandermonde(&degrees(mu)) * vandermonde(&degrees(nu));
    let delta = if ms.iter().sum::<usize>() % 2 == 1 {
        -delta
    } else {
        delta
    };
    apply_power(det, &power)
        .div_exact_scalar(&delta)
        .expect("nonzero Vandermonde")
}

/// Both sides of an exact identity.
#[derive(Clone, Debug, PartialEq)]
pub struct IdentitySides {
    pub alpha: BigRational,
    pub lhs: RatPolynomial,
    pub rhs: RatPolynomial,
}

impl IdentitySides {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

fn two_pow(w: usize) -> BigRational {
    rat(2).pow(w as i32)
}

/// `R_λ(x)` against `2^{|μ|+|ν|} L̂_{μ,ν}^{(α_k)}(x/2)`, `α_k = -1/2 - ℓ(μ) + ℓ(ν) - k`.
pub fn hermite_laguerre_sides(lambda: &Partition) -> IdentitySides {
    let q = core_and_quotient_2(lambda);
    let alpha = BigRational::new((-1).into(), 2.into()) - rat(q.mu.length() as i64)
        + rat(q.nu.length() as i64)
        - rat(q.k as i64);
    let query = LaguerreWronskianQuery::new(q.mu.clone(), q.nu.clone(), alpha.clone())
        .expect("half-integer α never collides with integer degrees");
    let rhs = wronskian_laguerre(&query)
        .compose_scale(&BigRational::new(1.into(), 2.into()))
        .scale(&two_pow(q.weight()));
    IdentitySides {
        alpha,
        lhs: remainder_polynomial(lambda).remainder.to_rational(),
        rhs,
    }
}

pub fn hermite_laguerre_check(lambda: &Partition) -> bool {
    hermite_laguerre_sides(lambda).holds()
}

/// `R_λ(x)` against `2^{|μ|+|ν|} Ω̂_{μ,ν'}^{(α)}(x/2)`, `α = -1/2 - ℓ(μ) - ℓ(ν') - k`.
pub fn hermite_omega_sides(lambda: &Partition) -> IdentitySides {
    let q = core_and_quotient_2(lambda);
    let nu_c = q.nu.conjugate();
    let alpha = BigRational::new((-1).into(), 2.into())
        - rat(q.mu.length() as i64)
        - rat(nu_c.length() as i64)
        - rat(q.k as i64);
    let rhs = omega_polynomial(&q.mu, &nu_c, &alpha)
        .compose_scale(&BigRational::new(1.into(), 2.into()))
        .scale(&two_pow(q.weight()));
    IdentitySides {
        alpha,
        lhs: remainder_polynomial(lambda).remainder.to_rational(),
        rhs,
    }
}

pub fn hermite_omega_check(lambda: &Partition) -> bool {
    hermite_omega_sides(lambda).holds()
}

/// `He_{2n}(x) = 2^n L̂_n^{(-1/2)}(x²/2)` and `He_{2n+1}(x) = 2^n x L̂_n^{(1/2)}(x²/2)`.
pub fn classical_identity_holds(n: usize) -> bool {
    let half = BigRational::new(1.into(), 2.into());
    let scale = two_pow(n);
    let even = laguerre(n, &-half.clone())
        .compose_scale(&half)
        .substitute_power(2)
        .scale(&scale);
    let odd = laguerre(n, &half)
        .compose_scale(&half)
        .substitute_power(2)
        .scale(&scale)
        .shift(1);
    hermite(2 * n).to_rational() == even && hermite(2 * n + 1).to_rational() == odd
}

/// `d^{i-1}/dx^{i-1} L̂_m^{(α)} = Σ_l (-1)^l C(i-1,l) L̂_m^{(α+l)}`.
pub fn derivative_identity_holds(m: usize, i: usize, alpha: &BigRational) -> bool {
    assert!(i >= 1);
    let lhs = laguerre(m, alpha).nth_derivative(i - 1);
    let mut rhs = RatPolynomial::zero();
    for l in 0..i {
        let c = BigRational::from_integer(sign(l) * binomial(i - 1, l));
        rhs = &rhs + &laguerre(m, &(alpha + rat(l as i64))).scale(&c);
    }
    lhs == rhs
}

fn limit_error(
    poly: &RatPolynomial,
    alpha: &BigRational,
    mu: &Partition,
    nu: &Partition,
) -> BigRational {
    let w = mu.size() + nu.size();
    let scaled = poly
        .compose_scale(alpha)
        .div_exact_scalar(&alpha.pow(w as i32))
        .expect("α ≠ 0");
    let target = &RatPolynomial::from_i64s(&[-1, 1]).pow(mu.size())
        * &RatPolynomial::from_i64s(&[1, 1]).pow(nu.size());
    (&scaled - &target).max_abs_coeff()
}

/// Max-abs coefficient of `Ω̂_{μ,ν}^{(α)}(αx)/α^{|μ|+|ν|} - (x-1)^{|μ|}(x+1)^{|ν|}`.
pub fn omega_scaled_error(
    mu: &Partition,
    nu: &Partition,
    alpha: &BigRational,
) -> Result<BigRational> {
    if alpha.is_zero() {
        return Err(WhpError::InvalidArgument("α must be nonzero".into()));
    }
    Ok(limit_error(&omega_polynomial(mu, nu, alpha), alpha, mu, nu))
}

/// The same error for `L̂_{μ,ν}^{(α)}`.
pub fn laguerre_scaled_error(
    mu: &Partition,
    nu: &Partition,
    alpha: &BigRational,
) -> Result<BigRational> {
    if alpha.is_zero() {
        return Err(WhpError::InvalidArgument("α must be nonzero".into()));
    }
    let q = LaguerreWronskianQuery::new(mu.clone(), nu.clone(), alpha.clone())?;
    let err = limit_error(&wronskian_laguerre(&q), alpha, mu, nu);
    debug_assert!(!err.is_negative());
    Ok(err)
}
