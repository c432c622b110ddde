//! Behaviour of `R_{Φ(μ,ν,k)}` as a function of the core length `k`, and
//! numerical zero sets of `He_λ` and its `p` analogues.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::numbers::{binomial, rational_to_f64, sign};
use crate::algebra::{interpolate, IntPolynomial, RatPolynomial};
use crate::appell::factor_p;
use crate::error::{Result, WhpError};
use crate::hermite::remainder_polynomial;
use crate::maya::to_maya;
use crate::partitions::Partition;
use crate::quotient::{height_p, phi};

/// `Ψ_{μ,ν}` as a polynomial in the core length `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiPolynomial {
    pub mu: Partition,
    pub nu: Partition,
    pub poly: IntPolynomial,
}

impl PsiPolynomial {
    pub fn eval(&self, k: i64) -> BigInt {
        self.poly.eval(&BigInt::from(k))
    }
}

/// Product over the shifted diagrams `M_μ + s` and `M_ν + s'` with
/// `ℓ(μ) + s = ℓ(ν) + s'`, one linear factor per odd hook of `Φ(μ, ν, 0)`.
pub fn psi(mu: &Partition, nu: &Partition) -> PsiPolynomial {
    psi_with_shift(mu, nu, 0)
}

/// Same product with both diagrams shifted `extra` further; the result does
/// not depend on `extra`.
pub fn psi_with_shift(mu: &Partition, nu: &Partition, extra: usize) -> PsiPolynomial {
    let (lm, ln) = (mu.length(), nu.length());
    let s = ln.saturating_sub(lm) + extra;
    let s2 = lm.saturating_sub(ln) + extra;
    let mm = to_maya(mu, s);
    let mn = to_maya(nu, s2);

    let mut poly = IntPolynomial::one();
    for &m in mm.filled() {
        for n in 0..m as i64 {
            if !mn.is_filled(n) {
                // 2(m - n) - 1 - 2z
                poly = &poly * &IntPolynomial::from_i64s(&[2 * (m as i64 - n) - 1, -2]);
            }
        }
    }
    for &n in mn.filled() {
        for m in 0..=n as i64 {
            if !mm.is_filled(m) {
                // 2(n - m) + 1 + 2z
                poly = &poly * &IntPolynomial::from_i64s(&[2 * (n as i64 - m) + 1, 2]);
            }
        }
    }
    let lam0 = phi(mu, nu, 0);
    let h = height_p(&lam0, &Partition::empty(), 2).expect("empty core") + lam0.size() / 2;
    PsiPolynomial {
        mu: mu.clone(),
        nu: nu.clone(),
        poly: poly.scale(&sign(h)),
    }
}

/// `R_{Φ(μ,ν,k)}`; negative `k` goes through `Φ(μ,ν,k) = Φ(ν,μ,-k-1)`.
pub fn remainder_at(mu: &Partition, nu: &Partition, k: i64) -> IntPolynomial {
    remainder_polynomial(&phi(mu, nu, k)).remainder
}

/// `2^j Σ_l (-1)^l C(|μ|, j-l) C(|ν|, l)`.
pub fn leading_k_coefficient(mu: &Partition, nu: &Partition, j: usize) -> BigInt {
    let mut total = BigInt::zero();
    for l in 0..=j {
        total += sign(l) * binomial(mu.size(), j - l) * binomial(nu.size(), l);
    }
    total << j
}

/// Extra sample points used to confirm an interpolated polynomial.
const CHECK_POINTS: usize = 5;

/// `r_{Φ(μ,ν,k),j}` as a polynomial in `k`: interpolated on `k = 0..=j` and
/// confirmed on five further values.
pub fn coeff_in_k(mu: &Partition, nu: &Partition, j: usize) -> Result<RatPolynomial> {
    let w = mu.size() + nu.size();
    if j > w {
        return Err(WhpError::InvalidArgument(format!(
            "coefficient index {j} exceeds |μ|+|ν| = {w}"
        )));
    }
    let sample = |k: usize| -> BigRational {
        BigRational::from_integer(remainder_at(mu, nu, k as i64).coeff(w - j))
    };
    let points: Vec<(BigRational, BigRational)> = (0..=j)
        .map(|k| (BigRational::from_integer(k.into()), sample(k)))
        .collect();
    let poly = interpolate(&points)?;
    for k in j + 1..=j + CHECK_POINTS {
        assert_eq!(
            poly.eval(&BigRational::from_integer(k.into())),
            sample(k),
            "coefficient {j} of R_Φ({mu},{nu},k) is not polynomial of degree ≤ {j} at k={k}"
        );
    }
    let lead = poly.coeff(j);
    assert_eq!(
        lead,
        BigRational::from_integer(leading_k_coefficient(mu, nu, j)),
        "k^{j} coefficient"
    );
    Ok(poly)
}

/// `(x+1)^{|μ|} (x-1)^{|ν|}`
pub fn asymptotic_limit(mu: &Partition, nu: &Partition) -> RatPolynomial {
    &RatPolynomial::from_i64s(&[1, 1]).pow(mu.size())
        * &RatPolynomial::from_i64s(&[-1, 1]).pow(nu.size())
}

/// Max-abs coefficient of `R_{Φ(μ,ν,k)}(2kx)/(2k)^{|μ|+|ν|} - (x+1)^{|μ|}(x-1)^{|ν|}`.
pub fn asymptotic_error(mu: &Partition, nu: &Partition, k: i64) -> Result<BigRational> {
    if k == 0 {
        return Err(WhpError::InvalidArgument(
            "asymptotic error needs k ≠ 0".into(),
        ));
    }
    let w = mu.size() + nu.size();
    let two_k = BigRational::from_integer(BigInt::from(2 * k));
    let scaled = remainder_at(mu, nu, k)
        .to_rational()
        .compose_scale(&two_k)
        .div_exact_scalar(&two_k.pow(w as i32))
        .expect("k ≠ 0");
    Ok((&scaled - &asymptotic_limit(mu, nu)).max_abs_coeff())
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Root {
    pub re: f64,
    pub im: f64,
    pub multiplicity: usize,
}

impl Root {
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

/// Two-quotient data reported alongside `p = 2` zero sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StringMetadata {
    pub mu: Partition,
    pub nu: Partition,
    pub k: usize,
    /// `ℓ(μ') + ℓ(ν) - 1`
    pub threshold: i64,
    pub above_threshold: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ZeroDataset {
    pub lambda: Partition,
    pub p: usize,
    /// Nonzero roots; the origin is recorded only through its multiplicity.
    pub zeros: Vec<Root>,
    pub origin_multiplicity: usize,
    pub strings: Option<StringMetadata>,
}

impl ZeroDataset {
    /// Number of roots counted with multiplicity, origin included.
    pub fn total(&self) -> usize {
        self.origin_multiplicity + self.zeros.iter().map(|z| z.multiplicity).sum::<usize>()
    }
}

pub fn zeros(lambda: &Partition, tol: f64) -> Result<ZeroDataset> {
    zeros_p(lambda, 2, tol)
}

/// Roots of `q_λ(x) = x^{|core|} R_λ(x^p)`: multiplicities come from an exact
/// square-free split of `R_λ`, roots of each factor from Aberth iteration,
/// then every root `y` contributes its `p` complex `p`-th roots.
pub fn zeros_p(lambda: &Partition, p: usize, tol: f64) -> Result<ZeroDataset> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(WhpError::InvalidArgument(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    if p < 2 {
        return Err(WhpError::InvalidArgument("zeros need p ≥ 2".into()));
    }
    let f = factor_p(p, lambda);
    let mut out = Vec::new();
    for (factor, mult) in square_free_parts(&f.remainder.to_rational()) {
        let coeffs: Vec<f64> = factor.coeffs().iter().map(rational_to_f64).collect();
        for y in aberth(&coeffs, tol)? {
            let r = y.norm().powf(1.0 / p as f64);
            let theta = y.arg() / p as f64;
            for t in 0..p {
                let angle = theta + 2.0 * std::f64::consts::PI * t as f64 / p as f64;
                let x = Complex64::from_polar(r, angle);
                out.push(Root {
                    re: clean(x.re),
                    im: clean(x.im),
                    multiplicity: mult,
                });
            }
        }
    }
    out.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    let strings = (p == 2).then(|| {
        let q = crate::quotient::core_and_quotient_2(lambda);
        let threshold = q.mu.part(0) as i64 + q.nu.length() as i64 - 1;
        StringMetadata {
            above_threshold: q.k as i64 >= threshold,
            threshold,
            mu: q.mu,
            nu: q.nu,
            k: q.k,
        }
    });
    Ok(ZeroDataset {
        lambda: lambda.clone(),
        p,
        zeros: out,
        origin_multiplicity: f.core_size,
        strings,
    })
}

fn clean(v: f64) -> f64 {
    if v.abs() < 1e-300 {
        0.0
    } else {
        v
    }
}

/// Yun's square-free decomposition: `f = c Π a_i^i` with square-free,
/// pairwise coprime monic `a_i`. Constant factors are dropped.
pub fn square_free_parts(f: &RatPolynomial) -> Vec<(RatPolynomial, usize)> {
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let d = f.derive();
    let a0 = f.gcd(&d);
    let mut b = f.div_exact(&a0).expect("gcd divides");
    let c = d.div_exact(&a0).expect("gcd divides");
    let mut dd = &c - &b.derive();
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = b.gcd(&dd);
        b = b.div_exact(&a).expect("gcd divides");
        let c = dd.div_exact(&a).expect("gcd divides");
        dd = &c - &b.derive();
        if a.degree().unwrap_or(0) > 0 {
            let lead = a.leading();
            out.push((a.div_exact_scalar(&lead).expect("nonzero"), i));
        }
        i += 1;
    }
    out
}

const MAX_ITERATIONS: usize = 200;

fn horner(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::zero();
    let mut dp = Complex64::zero();
    for c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// `|f(z)| / Σ |c_i| |z|^i`
pub fn relative_residual(coeffs: &[f64], z: Complex64) -> f64 {
    let cs: Vec<Complex64> = coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect();
    let (v, _) = horner(&cs, z);
    let scale: f64 = coeffs
        .iter()
        .rev()
        .fold(0.0, |acc, c| acc * z.norm() + c.abs());
    if scale == 0.0 {
        v.norm()
    } else {
        v.norm() / scale
    }
}

/// Simultaneous Aberth–Ehrlich iteration for all roots of a square-free
/// polynomial given by ascending coefficients.
pub fn aberth(coeffs: &[f64], tol: f64) -> Result<Vec<Complex64>> {
    let n = coeffs.len().saturating_sub(1);
    if n == 0 {
        return Ok(Vec::new());
    }
    let lead = coeffs[n];
    let cs: Vec<Complex64> = coeffs
        .iter()
        .map(|&c| Complex64::new(c / lead, 0.0))
        .collect();
    let bound = 1.0 + cs[..n].iter().map(|c| c.norm()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|i| {
            let angle = 2.0 * std::f64::consts::PI * i as f64 / n as f64 + 0.4;
            Complex64::from_polar(bound, angle)
        })
        .collect();
    for _ in 0..MAX_ITERATIONS {
        let mut converged = true;
        for k in 0..n {
            let (p, dp) = horner(&cs, z[k]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != k)
                .map(|j| (z[k] - z[j]).inv())
                .sum();
            let step = ratio / (Complex64::one() - ratio * repulsion);
            if step.norm() > tol * z[k].norm().max(1.0) {
                converged = false;
            }
            z[k] -= step;
        }
        if converged {
            return Ok(polish(&cs, z));
        }
    }
    Err(WhpError::NonConvergence {
        iterations: MAX_ITERATIONS,
        partial: z.iter().map(|c| (c.re, c.im)).collect(),
    })
}

/// A few Newton steps per root; roots on the real axis are snapped there when
/// the imaginary part is below the achievable accuracy.
fn polish(cs: &[Complex64], mut z: Vec<Complex64>) -> Vec<Complex64> {
    for r in z.iter_mut() {
        for _ in 0..3 {
            let (p, dp) = horner(cs, *r);
            if dp.norm() == 0.0 {
                break;
            }
            *r -= p / dp;
        }
        if r.im.abs() < 1e-13 * r.norm().max(1.0) {
            let (p_real, _) = horner(cs, Complex64::new(r.re, 0.0));
            let (p_here, _) = horner(cs, *r);
            if p_real.norm() <= p_here.norm() * 10.0 {
                r.im = 0.0;
            }
        }
    }
    z
}
