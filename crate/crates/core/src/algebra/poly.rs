//! Dense univariate polynomials with exact coefficients.
//!
//! Coefficients are stored in ascending degree with no trailing zeros, so the
//! zero polynomial is the empty vector and structural equality is polynomial
//! equality.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Coefficient ring operations needed by [`Polynomial`].
pub trait Coeff:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + Send
    + Sync
{
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    /// `self / rhs` when the quotient exists in the ring.
    fn div_exact(&self, rhs: &Self) -> Option<Self>;
    fn from_bigint(v: BigInt) -> Self;
    fn is_negative_value(&self) -> bool;

    fn from_i64(v: i64) -> Self {
        Self::from_bigint(BigInt::from(v))
    }
}

impl Coeff for BigInt {
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        r.is_zero().then_some(q)
    }
    fn from_bigint(v: BigInt) -> Self {
        v
    }
    fn is_negative_value(&self) -> bool {
        self.is_negative()
    }
}

impl Coeff for BigRational {
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        (!rhs.is_zero()).then(|| self / rhs)
    }
    fn from_bigint(v: BigInt) -> Self {
        BigRational::from_integer(v)
    }
    fn is_negative_value(&self) -> bool {
        self.is_negative()
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Polynomial<C> {
    coeffs: Vec<C>,
}

pub type IntPolynomial = Polynomial<BigInt>;
pub type RatPolynomial = Polynomial<BigRational>;

impl<C: Coeff> Polynomial<C> {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn x() -> Self {
        Self::monomial(C::one(), 1)
    }

    pub fn constant(c: C) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c x^degree`
    pub fn monomial(c: C, degree: usize) -> Self {
        let mut coeffs = vec![C::zero(); degree];
        coeffs.push(c);
        Self::from_coeffs(coeffs)
    }

    /// Ascending coefficients; trailing zeros are removed.
    pub fn from_coeffs(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| C::from_i64(c)).collect())
    }

    /// `Π (x - r)` over the given roots.
    pub fn from_roots(roots: &[C]) -> Self {
        let mut acc = Self::one();
        for r in roots {
            acc = &acc * &Self::from_coeffs(vec![-r.clone(), C::one()]);
        }
        acc
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> C {
        self.coeffs.last().cloned().unwrap_or_else(C::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    /// Lowest degree with a non-zero coefficient (`None` for zero).
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn eval(&self, x: &C) -> C {
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(x).add_ref(c);
        }
        acc
    }

    pub fn derive(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.mul_ref(&C::from_i64(i as i64)))
            .collect();
        Self::from_coeffs(coeffs)
    }

    pub fn nth_derivative(&self, n: usize) -> Self {
        let mut out = self.clone();
        for _ in 0..n {
            out = out.derive();
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.mul_ref(c)).collect())
    }

    /// `f(a x)`
    pub fn compose_scale(&self, a: &C) -> Self {
        let mut pow = C::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            coeffs.push(c.mul_ref(&pow));
            pow = pow.mul_ref(a);
        }
        Self::from_coeffs(coeffs)
    }

    /// `f(x^p)`
    pub fn substitute_power(&self, p: usize) -> Self {
        assert!(p >= 1);
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); (self.coeffs.len() - 1) * p + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * p] = c.clone();
        }
        Self::from_coeffs(coeffs)
    }

    /// `f(g(x))`
    pub fn compose(&self, g: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * g) + &Self::constant(c.clone());
        }
        acc
    }

    /// `x^m f(x)`
    pub fn shift(&self, m: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); m];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    /// `f(x) / x^m` when `x^m` divides `f`.
    pub fn unshift(&self, m: usize) -> Option<Self> {
        if self.coeffs.iter().take(m).any(|c| !c.is_zero()) {
            return None;
        }
        Some(Polynomial {
            coeffs: self.coeffs.iter().skip(m).cloned().collect(),
        })
    }

    pub fn pow(&self, n: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Divides every coefficient by `c`, or `None` if some quotient is inexact.
    pub fn div_exact_scalar(&self, c: &C) -> Option<Self> {
        let coeffs: Option<Vec<C>> = self.coeffs.iter().map(|a| a.div_exact(c)).collect();
        coeffs.map(Self::from_coeffs)
    }

    /// Exact polynomial division; `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let dd = d.degree()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let n = self.degree().unwrap();
        if n < dd {
            return None;
        }
        let lead = d.leading();
        let mut rem = self.coeffs.clone();
        let mut q = vec![C::zero(); n - dd + 1];
        for i in (0..=n - dd).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let t = top.div_exact(&lead)?;
            for (j, dc) in d.coeffs.iter().enumerate() {
                let sub = t.mul_ref(dc);
                rem[i + j] -= sub;
            }
            q[i] = t;
        }
        rem.iter()
            .all(|c| c.is_zero())
            .then(|| Self::from_coeffs(q))
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Polynomial<D> {
        Polynomial::from_coeffs(self.coeffs.iter().map(f).collect())
    }

    /// True when the only non-zero coefficients sit in degrees `≡ r (mod p)`.
    pub fn supported_on_class(&self, p: usize, r: usize) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(i, c)| c.is_zero() || i % p == r % p)
    }

    /// Coefficient of `x^{start + p i}` for `i = 0, 1, ...`; used to read
    /// `g` off `f(x) = x^start g(x^p)`.
    pub fn decimate(&self, start: usize, p: usize) -> Self {
        Self::from_coeffs(self.coeffs.iter().skip(start).step_by(p).cloned().collect())
    }

    /// Decimal (or `p/q`) strings, ascending degree.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    /// Human readable form in the given variable name, highest degree first.
    pub fn to_string_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative_value();
            let mag = if neg { -c.clone() } else { c.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let unit = mag.is_one();
            match (i, unit) {
                (0, _) => out.push_str(&mag.to_string()),
                (_, true) => {}
                (_, false) => {
                    let s = mag.to_string();
                    if s.contains('/') {
                        out.push_str(&format!("({s})*"));
                    } else {
                        out.push_str(&format!("{s}*"));
                    }
                }
            }
            match i {
                0 => {}
                1 => out.push_str(var),
                _ => out.push_str(&format!("{var}^{i}")),
            }
        }
        out
    }
}

impl IntPolynomial {
    pub fn to_rational(&self) -> RatPolynomial {
        self.map(|c| BigRational::from_integer(c.clone()))
    }

    /// Largest absolute coefficient (0 for the zero polynomial).
    pub fn max_abs_coeff(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_default()
    }
}

impl RatPolynomial {
    /// `Some` when every coefficient is an integer.
    pub fn to_integer(&self) -> Option<IntPolynomial> {
        if self.coeffs.iter().all(|c| c.is_integer()) {
            Some(self.map(|c| c.to_integer()))
        } else {
            None
        }
    }

    pub fn max_abs_coeff(&self) -> BigRational {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigRational::zero)
    }

    /// Euclidean division over the rationals.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead = d.leading();
        let mut rem = self.coeffs.clone();
        let n = match self.degree() {
            Some(n) if n >= dd => n,
            _ => return (Self::zero(), self.clone()),
        };
        let mut q = vec![BigRational::zero(); n - dd + 1];
        for i in (0..=n - dd).rev() {
            let t = &rem[i + dd] / &lead;
            if t.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] -= &t * dc;
            }
            q[i] = t;
        }
        rem.truncate(dd);
        (Self::from_coeffs(q), Self::from_coeffs(rem))
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let lead = a.leading();
        a.scale(&(BigRational::one() / lead))
    }
}

impl<C: Coeff> Add for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(self, rhs: Self) -> Polynomial<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a.add_ref(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Polynomial::from_coeffs(coeffs)
    }
}

impl<C: Coeff> Sub for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn sub(self, rhs: Self) -> Polynomial<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a.sub_ref(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => -b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Polynomial::from_coeffs(coeffs)
    }
}

impl<C: Coeff> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, rhs: Self) -> Polynomial<C> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a.mul_ref(b);
            }
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl<C: Coeff> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<C: Coeff> $tr for Polynomial<C> {
            type Output = Polynomial<C>;
            fn $m(self, rhs: Self) -> Polynomial<C> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<C: Coeff> Neg for Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        -&self
    }
}

impl<C: Coeff> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ip(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn basic_calculus() {
        let f = ip(&[0, -3, 0, 1]);
        assert_eq!(f.derive(), ip(&[-3, 0, 3]));
        assert_eq!(ip(&[-1, 1]).substitute_power(2), ip(&[-1, 0, 1]));
        let he2 = ip(&[-1, 0, 1]);
        assert_eq!(he2.compose_scale(&BigInt::one()), he2);
        assert_eq!(f.eval(&BigInt::from(2)), BigInt::from(2));
        assert_eq!(ip(&[0, 0, 5]).valuation(), Some(2));
        assert_eq!(ip(&[0, 0, 5]).unshift(2), Some(ip(&[5])));
        assert_eq!(ip(&[1, 0, 5]).unshift(1), None);
        assert_eq!(ip(&[3, 0, 0]).degree(), Some(0));
        assert!(ip(&[0]).is_zero());
    }

    #[test]
    fn display_forms() {
        assert_eq!(
            ip(&[0, 0, 0, -35, 0, -7, 0, 1, 0, 1]).to_string(),
            "x^9 + x^7 - 7*x^5 - 35*x^3"
        );
        assert_eq!(ip(&[]).to_string(), "0");
        assert_eq!(ip(&[-1, 1]).to_string_in("k"), "k - 1");
    }

    #[test]
    fn exact_division() {
        let a = ip(&[-1, 1]);
        let b = ip(&[1, 1]);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!(ip(&[1, 0, 1]).div_exact(&a), None);
        assert_eq!(
            ip(&[2, 4]).div_exact_scalar(&BigInt::from(2)),
            Some(ip(&[1, 2]))
        );
        assert_eq!(ip(&[2, 3]).div_exact_scalar(&BigInt::from(2)), None);
        // integer ring: 2x+2 / 2x = not exact, x+1 / 2 not exact
        assert_eq!(ip(&[1, 1]).div_exact(&ip(&[0, 2])), None);
    }

    #[test]
    fn rational_gcd() {
        let a = ip(&[-1, 1]).to_rational();
        let b = ip(&[2, 1]).to_rational();
        let c = ip(&[5, 0, 1]).to_rational();
        let g = (&(&a * &b) * &c).gcd(&(&a * &c));
        assert_eq!(g, &a * &c);
        assert!(a.gcd(&b).degree() == Some(0));
    }

    fn arb_poly() -> impl Strategy<Value = IntPolynomial> {
        proptest::collection::vec(-20i64..20, 0..6).prop_map(|v| ip(&v))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a - &a, IntPolynomial::zero());
            prop_assert_eq!(&a * &IntPolynomial::one(), a.clone());
            prop_assert_eq!(&a + &(-&a), IntPolynomial::zero());
        }

        #[test]
        fn derivative_is_linear_and_leibniz(a in arb_poly(), b in arb_poly()) {
            prop_assert_eq!((&a + &b).derive(), &a.derive() + &b.derive());
            prop_assert_eq!((&a * &b).derive(), &(&a.derive() * &b) + &(&a * &b.derive()));
        }

        #[test]
        fn evaluation_is_a_homomorphism(a in arb_poly(), b in arb_poly(), x in -5i64..5) {
            let x = BigInt::from(x);
            prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
            prop_assert_eq!(a.compose(&b).eval(&x), a.eval(&b.eval(&x)));
        }

        #[test]
        fn division_recovers_factor(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let prod = &a * &b;
            prop_assert_eq!(prod.div_exact(&b), Some(a.clone()));
            let (q, r) = prod.to_rational().div_rem(&b.to_rational());
            prop_assert_eq!(q, a.to_rational());
            prop_assert!(r.is_zero());
        }

        #[test]
        fn scale_substitution_commute(a in arb_poly(), p in 1usize..4) {
            let two = BigInt::from(2);
            let lhs = a.substitute_power(p).compose_scale(&two);
            let rhs = a.compose_scale(&two.pow(p as u32)).substitute_power(p);
            prop_assert_eq!(lhs, rhs);
            prop_assert_eq!(a.substitute_power(p).decimate(0, p), a);
        }
    }
}
