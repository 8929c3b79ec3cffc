//! Supports of symmetric functions in finitely many variables, permutahedra,
//! saturation of Newton polytopes and M-convexity.

use std::collections::{BTreeSet, HashMap};
use std::sync::Mutex;

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::csf::greedy_weight;
use crate::dyck::DyckPath;
use crate::error::{Error, Result};
use crate::listing::{greedy_weight_31free, PartListing};
use crate::lp::in_convex_hull;
use crate::partition::{distinct_permutations, simplex_points, Partition, WeightVector};
use crate::symfunc::{Basis, SymFunc};

/// A set of points of `N^k` with coordinate sum `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupportSet {
    k: usize,
    n: usize,
    points: BTreeSet<WeightVector>,
}

impl SupportSet {
    pub fn new(k: usize, n: usize, points: impl IntoIterator<Item = WeightVector>) -> Result<Self> {
        let points: BTreeSet<WeightVector> = points.into_iter().collect();
        for p in &points {
            if p.len() != k || p.sum() != n {
                return Err(Error::SizeMismatch(p.len(), k));
            }
        }
        Ok(SupportSet { k, n, points })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn points(&self) -> &BTreeSet<WeightVector> {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, alpha: &WeightVector) -> bool {
        self.points.contains(alpha)
    }

    /// The sorted partitions occurring in the set.
    pub fn partitions(&self) -> BTreeSet<Partition> {
        self.points.iter().map(WeightVector::sorted).collect()
    }

    /// Closed under permuting coordinates.
    pub fn is_symmetric(&self) -> bool {
        let total: usize = self
            .partitions()
            .iter()
            .map(|p| distinct_permutations(p.padded(self.k).expect("fits").entries()).len())
            .sum();
        total == self.points.len()
    }
}

/// `conv` of the rearrangements of `lambda` padded to `k` coordinates; empty
/// when `k < l(lambda)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Permutahedron {
    lambda: Partition,
    k: usize,
}

impl Permutahedron {
    pub fn new(lambda: Partition, k: usize) -> Self {
        Permutahedron { lambda, k }
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn is_empty(&self) -> bool {
        self.k < self.lambda.len()
    }

    pub fn contains(&self, alpha: &WeightVector) -> bool {
        alpha.len() == self.k && in_permutahedron(alpha, &self.lambda)
    }

    /// Rearrangements of every partition dominated by `lambda` with at most
    /// `k` parts.
    pub fn lattice_points(&self) -> SupportSet {
        let n = self.lambda.size();
        let points = Partition::with_max_parts(n, self.k)
            .into_iter()
            .filter(|mu| mu.dominance_leq(&self.lambda).unwrap_or(false))
            .flat_map(|mu| distinct_permutations(mu.padded(self.k).expect("fits").entries()))
            .map(WeightVector::new);
        SupportSet::new(self.k, n, points).expect("points have the right shape")
    }
}

/// All rearrangements in `k` coordinates of the partitions in the support.
pub fn expand_support(f: &SymFunc, k: usize) -> Result<SupportSet> {
    let f = f.to_basis(Basis::Monomial)?;
    let points = f
        .support()
        .into_iter()
        .filter_map(|lambda| lambda.padded(k))
        .flat_map(|w| distinct_permutations(w.entries()))
        .map(WeightVector::new);
    SupportSet::new(k, f.degree(), points)
}

/// Rado: `alpha` lies in the permutahedron of `lambda` iff its sorted
/// rearrangement is dominated by `lambda`.
pub fn in_permutahedron(alpha: &WeightVector, lambda: &Partition) -> bool {
    alpha.sum() == lambda.size() && alpha.sorted().dominance_leq(lambda).unwrap_or(false)
}

/// `alpha, beta` in the set with `alpha_i > beta_i` such that no `j` with
/// `alpha_j < beta_j` has both `alpha - e_i + e_j` and `beta - e_j + e_i` in
/// the set. `i` is 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExchangeWitness {
    pub alpha: WeightVector,
    pub beta: WeightVector,
    pub i: usize,
}

fn step(v: &WeightVector, minus: usize, plus: usize) -> WeightVector {
    v.shifted(plus, minus).expect("coordinate is positive")
}

/// The first failing `i` for the ordered pair `(alpha, beta)`.
fn exchange_failure(s: &SupportSet, alpha: &WeightVector, beta: &WeightVector) -> Option<usize> {
    let (a, b) = (alpha.entries(), beta.entries());
    (0..s.k).find(|&i| {
        a[i] > b[i]
            && !(0..s.k).any(|j| {
                a[j] < b[j] && s.contains(&step(alpha, i, j)) && s.contains(&step(beta, j, i))
            })
    })
}

/// Checks whether the given two points violate the exchange axiom in either
/// order.
pub fn exchange_pair_witness(s: &SupportSet, x: &WeightVector, y: &WeightVector) -> Option<ExchangeWitness> {
    if !s.contains(x) || !s.contains(y) {
        return None;
    }
    if let Some(i) = exchange_failure(s, x, y) {
        return Some(ExchangeWitness { alpha: x.clone(), beta: y.clone(), i: i + 1 });
    }
    exchange_failure(s, y, x).map(|i| ExchangeWitness { alpha: y.clone(), beta: x.clone(), i: i + 1 })
}

/// If the set is exactly the lattice points of a permutahedron, its `lambda`.
pub fn as_permutahedron(s: &SupportSet) -> Option<Partition> {
    if s.is_empty() || !s.is_symmetric() {
        return None;
    }
    let parts = s.partitions();
    let top = parts.iter().next_back()?.clone();
    let expected: BTreeSet<Partition> = Partition::with_max_parts(s.n, s.k)
        .into_iter()
        .filter(|mu| mu.dominance_leq(&top).unwrap_or(false))
        .collect();
    (parts == expected).then_some(top)
}

/// The first exchange violation, scanning `alpha`, then `beta`, then `i` in
/// increasing order. Lattice points of permutahedra are recognized directly.
pub fn m_convex_witness(s: &SupportSet) -> Option<ExchangeWitness> {
    if as_permutahedron(s).is_some() {
        return None;
    }
    m_convex_witness_exhaustive(s)
}

/// The pairwise scan without the permutahedron shortcut.
pub fn m_convex_witness_exhaustive(s: &SupportSet) -> Option<ExchangeWitness> {
    let pts: Vec<&WeightVector> = s.points.iter().collect();
    pts.par_iter().find_map_first(|alpha| {
        pts.iter().find_map(|beta| {
            exchange_failure(s, alpha, beta)
                .map(|i| ExchangeWitness { alpha: (*alpha).clone(), beta: (*beta).clone(), i: i + 1 })
        })
    })
}

pub fn is_m_convex(s: &SupportSet) -> bool {
    m_convex_witness(s).is_none()
}

/// The first point of the simplex, in decreasing lexicographic order, that
/// lies in the convex hull of the set but not in the set.
pub fn snp_witness(s: &SupportSet) -> Option<WeightVector> {
    if s.is_empty() {
        return None;
    }
    let pts: Vec<Vec<i64>> = s.points.iter().map(|p| p.entries().iter().map(|&x| x as i64).collect()).collect();
    let symmetric = s.is_symmetric();
    // largest sum of any j coordinates over the set; a hull point of a
    // symmetric set cannot exceed it
    let mut caps = vec![0usize; s.k + 1];
    for p in s.partitions() {
        let mut acc = 0;
        for (j, &x) in p.parts().iter().enumerate() {
            acc += x;
            caps[j + 1] = caps[j + 1].max(acc);
        }
    }
    for j in 1..=s.k {
        caps[j] = caps[j].max(caps[j - 1]);
    }
    let cache: Mutex<HashMap<Partition, bool>> = Mutex::new(HashMap::new());
    simplex_points(s.k, s.n).par_iter().find_map_first(|alpha| {
        if s.contains(alpha) {
            return None;
        }
        let key = alpha.sorted();
        if symmetric {
            let mut acc = 0;
            for (j, &x) in key.parts().iter().enumerate() {
                acc += x;
                if acc > caps[j + 1] {
                    return None;
                }
            }
        }
        if symmetric {
            if let Some(&hit) = cache.lock().expect("cache lock").get(&key) {
                return hit.then(|| alpha.clone());
            }
        }
        let target: Vec<i64> = alpha.entries().iter().map(|&x| x as i64).collect();
        let hit = in_convex_hull(&pts, &target);
        if symmetric {
            cache.lock().expect("cache lock").insert(key, hit);
        }
        hit.then(|| alpha.clone())
    })
}

pub fn is_snp(s: &SupportSet) -> bool {
    snp_witness(s).is_none()
}

/// Whether the support of `f` in `k` variables is exactly the set of lattice
/// points of the permutahedron of `lambda`.
pub fn newton_equals_permutahedron(f: &SymFunc, k: usize, lambda: &Partition) -> Result<bool> {
    let s = expand_support(f, k)?;
    let poly = Permutahedron::new(lambda.clone(), k);
    if !s.points.iter().all(|p| poly.contains(p)) {
        return Ok(false);
    }
    Ok(poly.lattice_points().points.iter().all(|p| s.contains(p)))
}

/// The object whose coloring weights are queried.
#[derive(Clone, Debug)]
pub enum NonvanishingInput {
    Dyck(DyckPath),
    Listing(PartListing),
}

/// Whether the coefficient of `x^alpha` in the chromatic symmetric function
/// is nonzero, decided from the greedy weight alone.
pub fn nonvanishing_decision(input: &NonvanishingInput, alpha: &WeightVector) -> Result<bool> {
    let top = match input {
        NonvanishingInput::Dyck(d) => greedy_weight(d),
        NonvanishingInput::Listing(l) => greedy_weight_31free(l)?,
    };
    Ok(in_permutahedron(alpha, &top))
}

/// Whether every partition in the support of `f` is dominated by `lambda`.
pub fn support_dominated_by(f: &SymFunc, lambda: &Partition) -> Result<bool> {
    let f = f.to_basis(Basis::Monomial)?;
    let dominated = f.terms().all(|(mu, c)| c.is_zero() || mu.dominance_leq(lambda).unwrap_or(false));
    Ok(dominated)
}
