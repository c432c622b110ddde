//! Cores, quotients, border strips and the map `(μ, ν, k) ↦ λ`.
//!
//! Removing a border strip of size `p` is the Maya move `m ↦ m - p` of a filled
//! box onto an empty one; its height is the number of filled boxes jumped
//! over. All constructions here go through [`crate::maya`].

use std::collections::BTreeSet;

use num_bigint::BigInt;

use crate::algebra::numbers::multinomial;
use crate::error::{Result, WhpError};
use crate::maya::{from_maya, p_modular_compose, p_modular_decompose, to_maya, MayaDiagram};
use crate::partitions::{skew_path_count, Partition};

/// Two-quotient `(μ, ν)` and core length `k`; the core is `(k, k-1, ..., 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuotientData2 {
    pub mu: Partition,
    pub nu: Partition,
    pub k: usize,
}

impl QuotientData2 {
    pub fn core(&self) -> Partition {
        Partition::staircase(self.k)
    }

    pub fn core_size(&self) -> usize {
        self.k * (self.k + 1) / 2
    }

    pub fn weight(&self) -> usize {
        self.mu.size() + self.nu.size()
    }
}

/// `p`-core and `p`-quotient.
///
/// The components come from the `p`-modular decomposition of `M_λ + t` where
/// `t` is the least shift making `ℓ(λ) + t` divisible by `p`; `beads[i]` is
/// the number of filled non-negative positions of component `i`. The ordering
/// is only meaningful together with these bead counts and callers should rely
/// on order-insensitive data.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuotientDataP {
    pub p: usize,
    pub components: Vec<Partition>,
    pub core: Partition,
    pub beads: Vec<usize>,
}

impl QuotientDataP {
    pub fn weight(&self) -> usize {
        self.components.iter().map(Partition::size).sum()
    }

    /// The partition with this core whose quotient is `components`; each
    /// component must fit in its bead count.
    pub fn rebuild(&self, components: &[Partition]) -> Partition {
        assert_eq!(components.len(), self.p);
        let diagrams: Vec<MayaDiagram> = components
            .iter()
            .zip(&self.beads)
            .map(|(c, &b)| to_maya(c, b - c.length()))
            .collect();
        from_maya(&p_modular_compose(&diagrams))
    }
}

/// The partition with two-quotient `(μ, ν)` and core length `k`; negative `k`
/// is read through `Φ(μ, ν, k) = Φ(ν, μ, -k-1)`.
pub fn phi(mu: &Partition, nu: &Partition, k: i64) -> Partition {
    if k < 0 {
        return phi(nu, mu, -k - 1);
    }
    // need ℓ(ν) + s' - ℓ(μ) - s = k with s, s' ≥ 0
    let d = k + mu.length() as i64 - nu.length() as i64;
    let (s, s2) = if d >= 0 {
        (0, d as usize)
    } else {
        ((-d) as usize, 0)
    };
    from_maya(&p_modular_compose(&[to_maya(mu, s), to_maya(nu, s2)]))
}

pub fn core_and_quotient_2(lambda: &Partition) -> QuotientData2 {
    let parts = p_modular_decompose(&to_maya(lambda, 0), 2);
    let (s, s2) = (parts[0].shift() as i64, parts[1].shift() as i64);
    let mu = parts[0].partition();
    let nu = parts[1].partition();
    let k = nu.length() as i64 + s2 - mu.length() as i64 - s;
    if k >= 0 {
        QuotientData2 {
            mu,
            nu,
            k: k as usize,
        }
    } else {
        QuotientData2 {
            mu: nu,
            nu: mu,
            k: (-k - 1) as usize,
        }
    }
}

/// Core length `k` read off the parities of the degree vector: with `a` odd
/// and `b` even entries, `k = a - b` or `b - a - 1`.
pub fn core_length_from_degrees(lambda: &Partition) -> usize {
    let dv = lambda.degree_vector();
    let odd = dv.iter().filter(|&&n| n % 2 == 1).count() as i64;
    let even = dv.len() as i64 - odd;
    if odd >= even {
        (odd - even) as usize
    } else {
        (even - odd - 1) as usize
    }
}

pub fn core_and_quotient_p(lambda: &Partition, p: usize) -> QuotientDataP {
    assert!(p >= 1, "p must be positive");
    let t = (p - lambda.length() % p) % p;
    let parts = p_modular_decompose(&to_maya(lambda, t), p);
    let beads: Vec<usize> = parts.iter().map(|m| m.filled().len()).collect();
    let components: Vec<Partition> = parts.iter().map(MayaDiagram::partition).collect();
    // removing every strip pushes each runner's beads down to its bottom
    let empties: Vec<MayaDiagram> = beads
        .iter()
        .map(|&b| to_maya(&Partition::empty(), b))
        .collect();
    let core = from_maya(&p_modular_compose(&empties));
    QuotientDataP {
        p,
        components,
        core,
        beads,
    }
}

/// Every partition obtained by removing one border strip of size `p`, with
/// the strip's height (rows minus one).
pub fn remove_border_strips(lambda: &Partition, p: usize) -> Vec<(Partition, usize)> {
    assert!(p >= 1);
    let m = to_maya(lambda, 0);
    let filled = m.filled();
    let mut out = Vec::new();
    for (idx, &src) in filled.iter().enumerate() {
        if src < p || m.is_filled((src - p) as i64) {
            continue;
        }
        let dst = src - p;
        // beads strictly between dst and src sit right after idx
        let height = filled[idx + 1..].iter().take_while(|&&f| f > dst).count();
        let mut moved: Vec<usize> = filled.to_vec();
        moved[idx] = dst;
        out.push((from_maya(&MayaDiagram::from_filled(moved)), height));
    }
    out
}

/// Total strip height removing `p`-strips from `lambda` down to `target`.
///
/// Strips are removed along a fixed sequence (always the legal move with the
/// largest source position); the parity is independent of the sequence.
pub fn height_p(lambda: &Partition, target: &Partition, p: usize) -> Result<usize> {
    let unreachable = || WhpError::Unreachable {
        source_partition: lambda.to_string(),
        target: target.to_string(),
        p,
    };
    if lambda.size() < target.size() || !(lambda.size() - target.size()).is_multiple_of(p) {
        return Err(unreachable());
    }
    let beads = lambda.length().max(target.length());
    let mut current: BTreeSet<usize> = to_maya(lambda, beads - lambda.length())
        .filled()
        .iter()
        .copied()
        .collect();
    let goal = to_maya(target, beads - target.length());
    let runner = |set: &mut dyn Iterator<Item = usize>, r: usize| -> Vec<usize> {
        let mut v: Vec<usize> = set.filter(|x| x % p == r).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    };
    let goal_runners: Vec<Vec<usize>> = (0..p)
        .map(|r| runner(&mut goal.filled().iter().copied(), r))
        .collect();
    for (r, g) in goal_runners.iter().enumerate() {
        let c = runner(&mut current.iter().copied(), r);
        if c.len() != g.len() || c.iter().zip(g).any(|(a, b)| a < b) {
            return Err(unreachable());
        }
    }
    let mut height = 0;
    loop {
        let mut chosen = None;
        for &src in current.iter().rev() {
            if src < p || current.contains(&(src - p)) {
                continue;
            }
            let r = src % p;
            let rank = current.iter().filter(|&&b| b % p == r && b > src).count();
            if src > goal_runners[r][rank] {
                chosen = Some(src);
                break;
            }
        }
        let Some(src) = chosen else { break };
        height += current.range(src - p + 1..src).count();
        current.remove(&src);
        current.insert(src - p);
    }
    let reached: Vec<usize> = current.iter().rev().copied().collect();
    debug_assert_eq!(reached.as_slice(), goal.filled());
    Ok(height)
}

/// `(product of hooks not divisible by p, product of hooks divisible by p)`.
pub fn hook_products_split(lambda: &Partition, p: usize) -> (BigInt, BigInt) {
    let table = lambda.hook_table();
    (
        table.product_where(|h| h % p != 0),
        table.product_where(|h| h % p == 0),
    )
}

/// Every partition contained in `mu`, `mu` itself included.
pub fn contained_partitions(mu: &Partition) -> Vec<Partition> {
    fn go(
        mu: &Partition,
        i: usize,
        bound: usize,
        prefix: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if i == mu.length() || bound == 0 {
            out.push(Partition::from_sorted(prefix.clone()));
            return;
        }
        let top = bound.min(mu.part(i));
        for v in (0..=top).rev() {
            if v == 0 {
                out.push(Partition::from_sorted(prefix.clone()));
                continue;
            }
            prefix.push(v);
            go(mu, i + 1, v, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(mu, 0, usize::MAX, &mut Vec::new(), &mut out);
    out
}

/// Tuples `(ν_0, ..., ν_{p-1})` with `ν_i ⊆ μ_i` and total size
/// `Σ|μ_i| - removed`.
pub fn contained_tuples(components: &[Partition], removed: usize) -> Vec<Vec<Partition>> {
    let total: usize = components.iter().map(Partition::size).sum();
    if removed > total {
        return Vec::new();
    }
    let target = total - removed;
    let options: Vec<Vec<Partition>> = components.iter().map(contained_partitions).collect();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(components.len());
    fn go(
        options: &[Vec<Partition>],
        remaining: usize,
        current: &mut Vec<Partition>,
        out: &mut Vec<Vec<Partition>>,
    ) {
        let i = current.len();
        if i == options.len() {
            if remaining == 0 {
                out.push(current.clone());
            }
            return;
        }
        let rest_max: usize = options[i + 1..].iter().map(|o| o[0].size()).sum();
        for nu in &options[i] {
            let s = nu.size();
            if s > remaining || remaining - s > rest_max {
                continue;
            }
            current.push(nu.clone());
            go(options, remaining - s, current, out);
            current.pop();
        }
    }
    go(&options, target, &mut current, &mut out);
    out
}

/// Chains in the product lattice from the all-empty tuple to `components`:
/// a multinomial times the chain counts of each component.
pub fn tuple_path_count(components: &[Partition]) -> BigInt {
    let sizes: Vec<usize> = components.iter().map(Partition::size).collect();
    let mut acc = multinomial(&sizes);
    for c in components {
        acc *= c.path_count();
    }
    acc
}

/// Chains in the product lattice from `inner` up to `outer`.
pub fn tuple_skew_path_count(outer: &[Partition], inner: &[Partition]) -> Result<BigInt> {
    let sizes: Vec<usize> = outer
        .iter()
        .zip(inner)
        .map(|(o, i)| o.size().saturating_sub(i.size()))
        .collect();
    let mut acc = multinomial(&sizes);
    for (o, i) in outer.iter().zip(inner) {
        acc *= skew_path_count(o, i)?;
    }
    Ok(acc)
}
