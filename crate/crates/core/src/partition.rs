//! Integer partitions, weight vectors and dominance order.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// The derived `Ord` is lexicographic on the parts, which is a linear
/// extension of dominance order on partitions of a fixed size.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Trailing zeros are dropped; any other zero or an increase is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has an interior zero")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(entries: &[usize]) -> Self {
        let mut parts: Vec<usize> = entries.iter().copied().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// The partition `2^twos 1^ones`.
    pub fn twos_ones(twos: usize, ones: usize) -> Self {
        let mut parts = vec![2; twos];
        parts.extend(std::iter::repeat_n(1, ones));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn largest(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let m = self.largest();
        Partition((1..=m).map(|j| self.0.iter().filter(|&&p| p >= j).count()).collect())
    }

    /// Multiplicity of each part size, indexed by size.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.largest() + 1];
        for &p in &self.0 {
            m[p] += 1;
        }
        m
    }

    /// Dominance order: every prefix sum of `self` is at most that of `other`.
    pub fn dominance_leq(&self, other: &Partition) -> Result<bool> {
        prefix_dominated(&self.0, &other.0)
    }

    /// The partition padded with zeros to `k` entries, or `None` if it has
    /// more than `k` parts.
    pub fn padded(&self, k: usize) -> Option<WeightVector> {
        if self.len() > k {
            return None;
        }
        let mut v = self.0.clone();
        v.resize(k, 0);
        Some(WeightVector(v))
    }

    /// All partitions of `n` in decreasing lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        Self::with_max_parts(n, n)
    }

    /// Partitions of `n` with at most `k` parts, decreasing lexicographic order.
    pub fn with_max_parts(n: usize, k: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(rem: usize, max: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if cur.len() == k {
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, k, cur, out);
                cur.pop();
            }
        }
        rec(n, n, k, &mut cur, &mut out);
        out
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, &self.0)
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_usize_list(s)?)
    }
}

/// A point of `N^k`; entries are kept in the order given.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightVector(pub Vec<usize>);

impl WeightVector {
    pub fn new(entries: Vec<usize>) -> Self {
        WeightVector(entries)
    }

    pub fn zeros(k: usize) -> Self {
        WeightVector(vec![0; k])
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn sorted(&self) -> Partition {
        Partition::from_unsorted(&self.0)
    }

    /// Dominance for compositions: prefix sums of the unsorted entries.
    pub fn dominance_leq(&self, other: &WeightVector) -> Result<bool> {
        prefix_dominated(&self.0, &other.0)
    }

    /// `alpha!` = product of the factorials of the entries.
    pub fn factorial(&self) -> BigInt {
        self.0.iter().map(|&a| factorial(a)).product()
    }

    /// `self + e_i - e_j`, or `None` if an entry would go negative.
    pub fn shifted(&self, plus: usize, minus: usize) -> Option<WeightVector> {
        if self.0[minus] == 0 && plus != minus {
            return None;
        }
        let mut v = self.0.clone();
        v[minus] -= 1;
        v[plus] += 1;
        Some(WeightVector(v))
    }

    pub fn with_added(&self, r: usize, s: usize) -> WeightVector {
        let mut v = self.0.clone();
        v[r] += 1;
        v[s] += 1;
        WeightVector(v)
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        write_joined(f, &self.0)?;
        write!(f, ")")
    }
}

impl FromStr for WeightVector {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(WeightVector(parse_usize_list(s.trim().trim_start_matches('(').trim_end_matches(')'))?))
    }
}

fn prefix_dominated(x: &[usize], y: &[usize]) -> Result<bool> {
    let sx: usize = x.iter().sum();
    let sy: usize = y.iter().sum();
    if sx != sy {
        return Err(Error::SizeMismatch(sx, sy));
    }
    let len = x.len().max(y.len());
    let (mut px, mut py) = (0usize, 0usize);
    for i in 0..len {
        px += x.get(i).copied().unwrap_or(0);
        py += y.get(i).copied().unwrap_or(0);
        if px > py {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Dominance order on partitions or compositions given as slices.
pub fn dominance_leq(x: &[usize], y: &[usize]) -> Result<bool> {
    prefix_dominated(x, y)
}

/// The discrete simplex: all points of `N^k` with coordinate sum `n`, in
/// decreasing lexicographic order.
pub fn simplex_points(k: usize, n: usize) -> Vec<WeightVector> {
    let mut out = Vec::new();
    if k == 0 {
        if n == 0 {
            out.push(WeightVector(Vec::new()));
        }
        return out;
    }
    let mut cur = vec![0; k];
    fn rec(i: usize, rem: usize, cur: &mut Vec<usize>, out: &mut Vec<WeightVector>) {
        let k = cur.len();
        if i == k - 1 {
            cur[i] = rem;
            out.push(WeightVector(cur.clone()));
            return;
        }
        for a in (0..=rem).rev() {
            cur[i] = a;
            rec(i + 1, rem - a, cur, out);
        }
    }
    rec(0, n, &mut cur, &mut out);
    out
}

/// All distinct rearrangements of `v`, in increasing lexicographic order.
pub fn distinct_permutations(v: &[usize]) -> Vec<Vec<usize>> {
    let mut cur: Vec<usize> = v.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    // next_permutation
    loop {
        let n = cur.len();
        if n < 2 {
            break;
        }
        let mut i = n - 1;
        while i > 0 && cur[i - 1] >= cur[i] {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        let mut j = n - 1;
        while cur[j] <= cur[i - 1] {
            j -= 1;
        }
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
    out
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

pub(crate) fn parse_usize_list(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
        })
        .collect()
}

fn write_joined(f: &mut fmt::Formatter<'_>, v: &[usize]) -> fmt::Result {
    for (i, x) in v.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn dominance_examples() {
        assert!(p(&[1, 1, 1, 1, 1]).dominance_leq(&p(&[2, 2, 1])).unwrap());
        assert!(p(&[2, 2, 1]).dominance_leq(&p(&[2, 2, 1])).unwrap());
        assert!(!p(&[3, 1, 1]).dominance_leq(&p(&[2, 2, 1])).unwrap());
        assert_eq!(
            p(&[3, 1]).dominance_leq(&p(&[2, 2, 1])),
            Err(Error::SizeMismatch(4, 5))
        );
    }

    #[test]
    fn composition_dominance_uses_given_order() {
        let a = WeightVector::new(vec![0, 2, 1]);
        let b = WeightVector::new(vec![1, 1, 1]);
        assert!(a.dominance_leq(&b).unwrap());
        assert!(!b.dominance_leq(&a).unwrap());
    }

    #[test]
    fn rejects_bad_partitions() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0, 1]).is_err());
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap(), p(&[2, 1]));
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=12).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]);
        let all = Partition::all(6);
        assert!(all.windows(2).all(|w| w[0] > w[1]));
        assert_eq!(Partition::with_max_parts(6, 2).len(), 4);
    }

    #[test]
    fn conjugate_is_involution() {
        for n in 0..=10 {
            for lam in Partition::all(n) {
                assert_eq!(lam.conjugate().conjugate(), lam);
            }
        }
        assert_eq!(p(&[2, 2, 1]).conjugate(), p(&[3, 2]));
    }

    #[test]
    fn simplex_and_permutations() {
        assert_eq!(simplex_points(3, 2).len(), 6);
        assert_eq!(simplex_points(6, 6).len(), 462);
        assert_eq!(simplex_points(3, 2)[0].entries(), &[2, 0, 0]);
        assert_eq!(distinct_permutations(&[2, 2, 1]).len(), 3);
        assert_eq!(distinct_permutations(&[1, 2, 3]).len(), 6);
        assert_eq!(distinct_permutations(&[]).len(), 1);
    }
}
