//! Maya diagrams: 0/1 sequences on the integers that are filled far to the
//! left and empty far to the right.
//!
//! Every negative position is filled, so a diagram is stored as the finite
//! set of filled non-negative positions. The diagram of `λ` shifted by `t` has
//! filled positions `λ_i + (ℓ + t) - i` for `i = 1..ℓ+t`; the canonical
//! diagram (`t = 0`) has position 0 empty unless `λ` is empty.

use std::fmt::Write as _;

use crate::partitions::Partition;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MayaDiagram {
    /// Filled non-negative positions, strictly decreasing.
    filled: Vec<usize>,
}

impl MayaDiagram {
    pub fn from_filled(positions: impl IntoIterator<Item = usize>) -> Self {
        let mut filled: Vec<usize> = positions.into_iter().collect();
        filled.sort_unstable_by(|a, b| b.cmp(a));
        filled.dedup();
        MayaDiagram { filled }
    }

    /// Filled non-negative positions in decreasing order.
    pub fn filled(&self) -> &[usize] {
        &self.filled
    }

    pub fn is_filled(&self, pos: i64) -> bool {
        pos < 0
            || self
                .filled
                .binary_search_by(|&f| (pos as usize).cmp(&f))
                .is_ok()
    }

    /// The `t` with `self = M_λ + t`: length of the filled run starting at 0.
    pub fn shift(&self) -> usize {
        self.filled
            .iter()
            .rev()
            .enumerate()
            .take_while(|&(i, &f)| i == f)
            .count()
    }

    /// Moves the origin so that position 0 is empty.
    pub fn canonical(&self) -> MayaDiagram {
        let t = self.shift();
        MayaDiagram {
            filled: self.filled[..self.filled.len() - t]
                .iter()
                .map(|&f| f - t)
                .collect(),
        }
    }

    /// `M + t`: every position moves `t` to the right.
    pub fn shifted(&self, t: usize) -> MayaDiagram {
        let mut filled: Vec<usize> = self.filled.iter().map(|&f| f + t).collect();
        filled.extend((0..t).rev());
        MayaDiagram { filled }
    }

    pub fn equivalent(&self, other: &MayaDiagram) -> bool {
        self.canonical() == other.canonical()
    }

    pub fn partition(&self) -> Partition {
        from_maya(self)
    }

    /// Reflect `z ↦ -z-1` and swap filled with empty; returned canonical.
    pub fn conjugate(&self) -> MayaDiagram {
        let Some(&top) = self.filled.first() else {
            return self.clone();
        };
        let reflected = (0..=top)
            .filter(|z| !self.is_filled(*z as i64))
            .map(|z| top - z);
        MayaDiagram::from_filled(reflected).canonical()
    }

    /// One-line picture: `●` filled, `○` empty, `|` marks the origin.
    pub fn render(&self) -> String {
        let top = self.filled.first().map_or(0, |&t| t as i64);
        let mut out = String::from("… ");
        for pos in -3..=top + 2 {
            if pos == 0 {
                out.push_str("| ");
            }
            out.push(if self.is_filled(pos) { '●' } else { '○' });
            out.push(' ');
        }
        let _ = write!(out, "…");
        out
    }
}

/// Diagram of `λ` with the origin moved `t` steps.
pub fn to_maya(lambda: &Partition, t: usize) -> MayaDiagram {
    let total = lambda.length() + t;
    MayaDiagram {
        filled: (0..total).map(|i| lambda.part(i) + total - 1 - i).collect(),
    }
}

/// Reads the partition: part `i` counts the empty boxes left of the `i`-th
/// filled box.
pub fn from_maya(m: &MayaDiagram) -> Partition {
    let l = m.filled.len();
    let parts: Vec<usize> = m
        .filled
        .iter()
        .enumerate()
        .map(|(i, &s)| s - (l - 1 - i))
        .filter(|&v| v > 0)
        .collect();
    Partition::from_sorted(parts)
}

/// `M^(i) = { m : p m + i ∈ M }` for `i = 0..p`.
pub fn p_modular_decompose(m: &MayaDiagram, p: usize) -> Vec<MayaDiagram> {
    assert!(p >= 1);
    let mut parts = vec![Vec::new(); p];
    for &f in &m.filled {
        parts[f % p].push(f / p);
    }
    parts
        .into_iter()
        .map(|filled| MayaDiagram { filled })
        .collect()
}

/// Inverse of [`p_modular_decompose`] with `p = components.len()`.
pub fn p_modular_compose(components: &[MayaDiagram]) -> MayaDiagram {
    let p = components.len();
    assert!(p >= 1);
    MayaDiagram::from_filled(
        components
            .iter()
            .enumerate()
            .flat_map(|(i, c)| c.filled.iter().map(move |&m| p * m + i)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::partitions_up_to;
    use proptest::prelude::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn figure_diagrams() {
        let lam = p("4,4,2,2,1");
        assert_eq!(to_maya(&lam, 0).filled(), &[8, 7, 4, 3, 1]);
        assert_eq!(to_maya(&lam, 2).filled(), &[10, 9, 6, 5, 3, 1, 0]);
        assert!(to_maya(&Partition::empty(), 0).filled().is_empty());
        let m = MayaDiagram::from_filled([10, 9, 6, 5, 3, 1, 0]);
        assert_eq!(from_maya(&m), lam);
        assert_eq!(m.shift(), 2);
        assert_eq!(m.canonical(), to_maya(&lam, 0));
        assert_eq!(from_maya(&MayaDiagram::from_filled([])), Partition::empty());
        assert!(m.is_filled(-5) && m.is_filled(9) && !m.is_filled(8));
    }

    #[test]
    fn compose_of_quotient_pair() {
        let m = p_modular_compose(&[to_maya(&p("3,2"), 1), to_maya(&p("1"), 3)]);
        assert!(m.equivalent(&to_maya(&p("4,4,2,2,1"), 0)));
        let parts = p_modular_decompose(&to_maya(&Partition::empty(), 4), 3);
        assert!(parts.iter().all(|c| c.partition().is_empty()));
    }

    #[test]
    fn sweep_round_trips_and_conjugation() {
        for lam in partitions_up_to(12) {
            for t in 0..3 {
                let m = to_maya(&lam, t);
                assert_eq!(from_maya(&m), lam);
                assert_eq!(m.shift(), t);
                assert_eq!(m.filled().iter().filter(|&&f| f >= t).count(), lam.length());
            }
            assert_eq!(to_maya(&lam, 0).conjugate().partition(), lam.conjugate());
        }
    }

    fn arb_partition() -> impl Strategy<Value = Partition> {
        proptest::collection::vec(1usize..8, 0..8).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            Partition::new(v).unwrap()
        })
    }

    proptest! {
        #[test]
        fn modular_round_trip(lam in arb_partition(), t in 0usize..4, p in 2usize..4) {
            let m = to_maya(&lam, t);
            prop_assert_eq!(p_modular_compose(&p_modular_decompose(&m, p)), m.clone());
            prop_assert_eq!(m.shifted(3).canonical(), m.canonical());
        }
    }
}
