//! Integer partitions and their Young diagrams.
//!
//! A [`Partition`] stores its parts in weakly decreasing order with no
//! trailing zeros; the empty vector is the empty partition. Rows and columns
//! are 0-indexed throughout. The text form is a comma separated list such as
//! `4,2,2,1`, with `-` standing for the empty partition.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::numbers::factorial;
use crate::error::{Result, WhpError};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

/// Hook lengths and contents of every cell of a Young diagram, row by row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HookTable {
    pub hooks: Vec<Vec<usize>>,
    pub contents: Vec<Vec<i64>>,
}

impl HookTable {
    pub fn product(&self) -> BigInt {
        self.product_where(|_| true)
    }

    /// Product of the hooks accepted by `keep`.
    pub fn product_where(&self, keep: impl Fn(usize) -> bool) -> BigInt {
        let mut acc = BigInt::one();
        for &h in self.hooks.iter().flatten() {
            if keep(h) {
                acc *= h;
            }
        }
        acc
    }

    pub fn first_column(&self) -> Vec<usize> {
        self.hooks.iter().map(|row| row[0]).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.hooks.iter().flatten().copied()
    }
}

impl Partition {
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition, dropping trailing zeros. Fails if the parts are not
    /// weakly decreasing or a zero sits between positive parts.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(WhpError::InvalidPartition {
                    token: join(&parts),
                    reason: format!("part {} is followed by the larger part {}", w[0], w[1]),
                });
            }
        }
        if parts.contains(&0) {
            return Err(WhpError::InvalidPartition {
                token: join(&parts),
                reason: "zero part before a positive part".into(),
            });
        }
        Ok(Partition { parts })
    }

    /// Caller guarantees weakly decreasing positive parts.
    pub(crate) fn from_sorted(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(!parts.contains(&0));
        Partition { parts }
    }

    /// Parses `"4,2,2,1"`; `"-"` and the empty string give the empty partition.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() || text == "-" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for token in text.split(',') {
            let t = token.trim();
            let v: usize = t.parse().map_err(|_| WhpError::InvalidPartition {
                token: t.to_string(),
                reason: "not a non-negative integer".into(),
            })?;
            if let Some(&prev) = parts.last() {
                if v > prev {
                    return Err(WhpError::InvalidPartition {
                        token: t.to_string(),
                        reason: format!("parts must be weakly decreasing but {prev} precedes {v}"),
                    });
                }
            }
            parts.push(v);
        }
        Partition::new(parts)
    }

    /// The staircase `(k, k-1, ..., 1)`.
    pub fn staircase(k: usize) -> Self {
        Partition {
            parts: (1..=k).rev().collect(),
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `i`, or 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `parts[i] + length - i - 1`, strictly decreasing.
    pub fn degree_vector(&self) -> Vec<usize> {
        let l = self.length();
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| p + l - i - 1)
            .collect()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let mut cols = Vec::with_capacity(width);
        for j in 0..width {
            cols.push(self.parts.iter().take_while(|&&p| p > j).count());
        }
        Partition { parts: cols }
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    pub fn hook_table(&self) -> HookTable {
        let conj = self.conjugate();
        let mut hooks = Vec::with_capacity(self.length());
        let mut contents = Vec::with_capacity(self.length());
        for (i, &row) in self.parts.iter().enumerate() {
            let mut h = Vec::with_capacity(row);
            let mut c = Vec::with_capacity(row);
            for j in 0..row {
                h.push(row - j + conj.parts[j] - i - 1);
                c.push(j as i64 - i as i64);
            }
            hooks.push(h);
            contents.push(c);
        }
        HookTable { hooks, contents }
    }

    pub fn hook_product(&self) -> BigInt {
        self.hook_table().product()
    }

    /// Sum of `j - i` over all cells.
    pub fn content_sum(&self) -> i64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| {
                let p = p as i64;
                let i = i as i64;
                p * (p - 1) / 2 - i * p
            })
            .sum()
    }

    /// Number of standard Young tableaux, `|λ|! / H(λ)`.
    pub fn path_count(&self) -> BigInt {
        let n = factorial(self.size());
        let h = self.hook_product();
        debug_assert!((&n % &h).is_zero());
        n / h
    }

    /// True when every part of `other` fits inside the matching part of `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.length() <= self.length() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Partitions obtained by deleting one corner cell.
    pub fn covers_below(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..self.length() {
            if self.part(i) > self.part(i + 1) {
                let mut parts = self.parts.clone();
                parts[i] -= 1;
                if parts[i] == 0 {
                    parts.pop();
                }
                out.push(Partition { parts });
            }
        }
        out
    }

    /// Partitions obtained by adding one cell.
    pub fn covers_above(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..=self.length() {
            if i == 0 || self.part(i - 1) > self.part(i) {
                let mut parts = self.parts.clone();
                if i == parts.len() {
                    parts.push(1);
                } else {
                    parts[i] += 1;
                }
                out.push(Partition { parts });
            }
        }
        out
    }
}

/// Number of saturated chains from `inner` up to `outer` in Young's lattice.
pub fn skew_path_count(outer: &Partition, inner: &Partition) -> Result<BigInt> {
    if !outer.contains(inner) {
        return Err(WhpError::NotContained {
            inner: inner.to_string(),
            outer: outer.to_string(),
        });
    }
    let mut memo = HashMap::new();
    Ok(chains_down(outer, inner, &mut memo))
}

fn chains_down(nu: &Partition, inner: &Partition, memo: &mut HashMap<Partition, BigInt>) -> BigInt {
    if nu.size() == inner.size() {
        return BigInt::one();
    }
    if let Some(v) = memo.get(nu) {
        return v.clone();
    }
    let mut total = BigInt::zero();
    for below in nu.covers_below() {
        if below.contains(inner) {
            total += chains_down(&below, inner, memo);
        }
    }
    memo.insert(nu.clone(), total.clone());
    total
}

/// All partitions of `n` in reverse-lexicographic order, starting at `(n)` and
/// ending at `(1^n)`.
pub fn enumerate_partitions(n: usize) -> Partitions {
    Partitions {
        next: Some(if n == 0 { Vec::new() } else { vec![n] }),
    }
}

/// Every partition of size `0..=max`, sizes ascending, each size in
/// reverse-lexicographic order.
pub fn partitions_up_to(max: usize) -> Vec<Partition> {
    (0..=max).flat_map(enumerate_partitions).collect()
}

pub struct Partitions {
    next: Option<Vec<usize>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        self.next = successor(&current);
        Some(Partition { parts: current })
    }
}

fn successor(parts: &[usize]) -> Option<Vec<usize>> {
    let idx = parts.iter().rposition(|&p| p > 1)?;
    let mut out = parts[..idx].to_vec();
    let v = parts[idx] - 1;
    out.push(v);
    // the trailing ones plus the cell taken from parts[idx]
    let mut rest = parts.len() - idx;
    while rest > 0 {
        let take = rest.min(v);
        out.push(take);
        rest -= take;
    }
    Some(out)
}

fn join(parts: &[usize]) -> String {
    if parts.is_empty() {
        return "-".into();
    }
    parts
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.parts))
    }
}

impl FromStr for Partition {
    type Err = WhpError;

    fn from_str(s: &str) -> Result<Self> {
        Partition::parse(s)
    }
}
