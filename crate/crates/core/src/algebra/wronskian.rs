//! Fraction-free determinants of polynomial matrices and Wronskians.

use super::poly::{Coeff, Polynomial};

/// Determinant by Bareiss elimination. Every intermediate division is exact in
/// the polynomial ring, so integer inputs never leave the integers.
pub fn determinant<C: Coeff>(mut m: Vec<Vec<Polynomial<C>>>) -> Polynomial<C> {
    let n = m.len();
    assert!(m.iter().all(|row| row.len() == n), "matrix must be square");
    if n == 0 {
        return Polynomial::one();
    }
    let mut negate = false;
    let mut prev = Polynomial::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return Polynomial::zero();
            };
            m.swap(k, swap);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num
                    .div_exact(&prev)
                    .expect("Bareiss step must divide exactly");
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// `det [f_j^{(i)}]` with rows indexed by derivative order.
pub fn wronskian<C: Coeff>(fs: &[Polynomial<C>]) -> Polynomial<C> {
    assert!(!fs.is_empty(), "Wronskian of an empty family");
    let n = fs.len();
    let mut rows = Vec::with_capacity(n);
    let mut current: Vec<Polynomial<C>> = fs.to_vec();
    for _ in 0..n {
        let next = current.iter().map(|f| f.derive()).collect();
        rows.push(current);
        current = next;
    }
    determinant(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::IntPolynomial;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn ip(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn cofactor(m: &[Vec<IntPolynomial>]) -> IntPolynomial {
        let n = m.len();
        if n == 0 {
            return IntPolynomial::one();
        }
        let mut acc = IntPolynomial::zero();
        for col in 0..n {
            let minor: Vec<Vec<IntPolynomial>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(j, _)| j != col)
                        .map(|(_, e)| e.clone())
                        .collect()
                })
                .collect();
            let term = &m[0][col] * &cofactor(&minor);
            acc = if col % 2 == 0 {
                &acc + &term
            } else {
                &acc - &term
            };
        }
        acc
    }

    #[test]
    fn small_wronskians() {
        let he3 = ip(&[0, -3, 0, 1]);
        let he1 = ip(&[0, 1]);
        assert_eq!(wronskian(&[he3.clone(), he1.clone()]), ip(&[0, 0, 0, -2]));
        assert_eq!(wronskian(std::slice::from_ref(&he3)), he3);
        let dep = he1.scale(&BigInt::from(3));
        assert!(wronskian(&[he1, dep]).is_zero());
    }

    #[test]
    fn zero_pivot_needs_swap() {
        let m = vec![vec![ip(&[0]), ip(&[1])], vec![ip(&[1]), ip(&[0])]];
        assert_eq!(determinant(m), ip(&[-1]));
    }

    fn arb_matrix(n: usize) -> impl Strategy<Value = Vec<Vec<IntPolynomial>>> {
        proptest::collection::vec(
            proptest::collection::vec(proptest::collection::vec(-5i64..5, 0..3), n),
            n,
        )
        .prop_map(|rows| {
            rows.into_iter()
                .map(|r| r.into_iter().map(|c| ip(&c)).collect())
                .collect()
        })
    }

    proptest! {
        #[test]
        fn bareiss_matches_cofactor_3(m in arb_matrix(3)) {
            prop_assert_eq!(determinant(m.clone()), cofactor(&m));
        }

        #[test]
        fn bareiss_matches_cofactor_4(m in arb_matrix(4)) {
            prop_assert_eq!(determinant(m.clone()), cofactor(&m));
        }
    }
}
