//! Symmetric group characters at cycle types `(p^j, 1^{n-pj})`.
//!
//! Two independent evaluations: a sum over paths in the `p`-quotient lattice,
//! and the Murnaghan–Nakayama border-strip recursion over the whole cycle type.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::numbers::sign;
use crate::error::{Result, WhpError};
use crate::partitions::Partition;
use crate::quotient::{
    contained_tuples, core_and_quotient_p, height_p, remove_border_strips, tuple_skew_path_count,
};

/// The character of `lambda` at cycle type `(p^j, 1^{|λ|-pj})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CharacterQuery {
    pub lambda: Partition,
    pub p: usize,
    pub j: usize,
}

impl CharacterQuery {
    pub fn new(lambda: Partition, p: usize, j: usize) -> Result<Self> {
        if p == 0 {
            return Err(WhpError::InvalidArgument(
                "cycle length p must be positive".into(),
            ));
        }
        if p * j > lambda.size() {
            return Err(WhpError::InvalidArgument(format!(
                "{j} cycles of length {p} do not fit in size {}",
                lambda.size()
            )));
        }
        Ok(CharacterQuery { lambda, p, j })
    }

    pub fn cycle_type(&self) -> Vec<usize> {
        let mut c = vec![self.p; self.j];
        c.extend(std::iter::repeat_n(1, self.lambda.size() - self.p * self.j));
        c
    }
}

/// `Σ (-1)^{ht(λ/λ̃)} F^{(p)}_{μ/μ̃} F_{λ̃}` over quotient tuples `μ̃` that sit
/// `j` steps below the quotient `μ` of `λ`, with `λ̃` sharing the core of `λ`.
pub fn character_path_sum(q: &CharacterQuery) -> BigInt {
    let data = core_and_quotient_p(&q.lambda, q.p);
    if q.j > data.weight() {
        return BigInt::zero();
    }
    let mut total = BigInt::zero();
    for lower in contained_tuples(&data.components, q.j) {
        let small = data.rebuild(&lower);
        let ht = height_p(&q.lambda, &small, q.p).expect("same core");
        let paths = tuple_skew_path_count(&data.components, &lower).expect("contained tuple");
        total += sign(ht) * paths * small.path_count();
    }
    total
}

pub fn character_mn_oracle(q: &CharacterQuery) -> BigInt {
    character_mn(&q.lambda, &q.cycle_type())
}

/// Character value at an arbitrary cycle type by border-strip recursion.
pub fn character_mn(lambda: &Partition, cycle_type: &[usize]) -> BigInt {
    assert_eq!(
        cycle_type.iter().sum::<usize>(),
        lambda.size(),
        "cycle type must partition |λ|"
    );
    let mut memo = HashMap::new();
    mn(lambda, cycle_type, &mut memo)
}

fn mn(
    lambda: &Partition,
    cycles: &[usize],
    memo: &mut HashMap<(Partition, usize), BigInt>,
) -> BigInt {
    let Some((&r, rest)) = cycles.split_first() else {
        return if lambda.is_empty() {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    };
    let key = (lambda.clone(), rest.len());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut total = BigInt::zero();
    for (below, ht) in remove_border_strips(lambda, r) {
        total += sign(ht) * mn(&below, rest, memo);
    }
    memo.insert(key, total.clone());
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{enumerate_partitions, partitions_up_to};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn path(l: &str, pp: usize, j: usize) -> BigInt {
        character_path_sum(&CharacterQuery::new(p(l), pp, j).unwrap())
    }

    #[test]
    fn examples() {
        assert_eq!(path("1,1", 2, 1), BigInt::from(-1));
        assert_eq!(path("2,1", 2, 1), BigInt::zero());
        assert_eq!(path("4,2,2,1", 2, 0), p("4,2,2,1").path_count());
        assert!(CharacterQuery::new(p("2,1"), 2, 2).is_err());
    }

    #[test]
    fn trivial_and_sign_representations() {
        for n in 1..=8usize {
            let row = Partition::new(vec![n]).unwrap();
            let col = row.conjugate();
            for j in 0..=n / 2 {
                let q = CharacterQuery::new(row.clone(), 2, j).unwrap();
                assert!(character_mn_oracle(&q).is_one());
                let q = CharacterQuery::new(col.clone(), 2, j).unwrap();
                assert_eq!(character_mn_oracle(&q), sign(j));
            }
            for ct in enumerate_partitions(n) {
                assert!(character_mn(&row, ct.parts()).is_one());
            }
        }
    }

    #[test]
    fn path_sum_matches_oracle() {
        for lam in partitions_up_to(9) {
            for pp in [1usize, 2, 3] {
                for j in 0..=lam.size() / pp {
                    let q = CharacterQuery::new(lam.clone(), pp, j).unwrap();
                    assert_eq!(
                        character_path_sum(&q),
                        character_mn_oracle(&q),
                        "{lam} p={pp} j={j}"
                    );
                }
            }
        }
    }

    #[test]
    fn column_orthogonality_with_identity() {
        for n in 1..=9usize {
            let all: Vec<Partition> = enumerate_partitions(n).collect();
            for j in 0..=n / 2 {
                let s: BigInt = all
                    .iter()
                    .map(|l| l.path_count() * path(&l.to_string(), 2, j))
                    .sum();
                if j == 0 {
                    assert_eq!(s, crate::algebra::factorial(n));
                } else {
                    assert!(s.is_zero());
                }
            }
        }
    }

    #[test]
    fn transposition_character_from_content() {
        for lam in partitions_up_to(10) {
            let n = lam.size();
            if n < 2 {
                continue;
            }
            let a1 = path(&lam.to_string(), 2, 1);
            assert_eq!(
                a1 * BigInt::from(n * (n - 1) / 2),
                lam.path_count() * BigInt::from(lam.content_sum())
            );
        }
    }
}
