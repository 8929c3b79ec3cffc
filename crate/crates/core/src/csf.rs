//! Chromatic symmetric functions: exhaustive coloring counts, the rook-number
//! formula for co-bipartite graphs, and the greedy (bounce path) coloring.

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use crate::dyck::{DyckPath, Step};
use crate::error::{Error, Result};
use crate::graph::{mask_below, SimpleGraph};
use crate::partition::{factorial, Partition};
use crate::rook::Board;
use crate::symfunc::{Basis, SymFunc};

pub use crate::graph::ProperColoring as Coloring;

/// Vertex limit for exhaustive coloring counts.
pub const MAX_BRUTEFORCE_VERTICES: usize = 12;

/// `X_G` in the monomial basis. The coefficient of `m_lambda` is the number of
/// proper colorings using color `i` exactly `lambda_i` times.
pub fn csf_bruteforce(g: &SimpleGraph) -> Result<SymFunc> {
    let n = g.n();
    if n > MAX_BRUTEFORCE_VERTICES {
        return Err(Error::TooLarge(format!("{n} vertices (limit {MAX_BRUTEFORCE_VERTICES})")));
    }
    let independent: Vec<bool> = (0..1u64 << n).map(|s| g.is_independent(s)).collect();
    let counts: Vec<(Partition, u64)> = Partition::all(n)
        .into_par_iter()
        .map(|lambda| {
            let c = count_colorings(n, &independent, lambda.parts());
            (lambda, c)
        })
        .collect();
    let terms = counts
        .into_iter()
        .filter(|(_, c)| *c != 0)
        .map(|(l, c)| (l, BigRational::from_integer(BigInt::from(c))));
    SymFunc::from_terms(n, Basis::Monomial, terms)
}

/// Colorings with class sizes `parts` in order, built one class at a time
/// over subsets of the vertex set.
fn count_colorings(n: usize, independent: &[bool], parts: &[usize]) -> u64 {
    let full = mask_below(n);
    let mut layer: Vec<(u64, u64)> = vec![(0, 1)];
    for &p in parts {
        let mut next = vec![0u64; 1 << n];
        for &(mask, ways) in &layer {
            let free = full & !mask;
            // submasks of `free` of size p
            let mut s = free;
            loop {
                if s.count_ones() as usize == p && independent[s as usize] {
                    next[(mask | s) as usize] += ways;
                }
                if s == 0 {
                    break;
                }
                s = (s - 1) & free;
            }
        }
        layer = next.iter().enumerate().filter(|(_, &w)| w != 0).map(|(m, &w)| (m as u64, w)).collect();
        if layer.is_empty() {
            return 0;
        }
    }
    layer.iter().find(|(m, _)| *m == full).map_or(0, |&(_, w)| w)
}

/// `sum_i i! (n-2i)! r_i(B) m_{2^i 1^{n-2i}}` with `n = n1 + n2`.
pub fn csf_cobipartite(b: &Board) -> Result<SymFunc> {
    let n = b.n1() + b.n2();
    let r = b.rook_numbers();
    let terms = r.iter().enumerate().filter(|(i, _)| 2 * i <= n).map(|(i, ri)| {
        let c = factorial(i) * factorial(n - 2 * i) * ri;
        (Partition::twos_ones(i, n - 2 * i), BigRational::from_integer(c))
    });
    SymFunc::from_terms(n, Basis::Monomial, terms)
}

/// The bounce path coloring of `G(d)`: color `c` starts at the first
/// uncolored vertex `j` and repeatedly jumps to the first uncolored vertex
/// after `h(j)`. Returns 0-based colors per vertex.
pub fn bounce_coloring(d: &DyckPath) -> Vec<usize> {
    let h = d.hessenberg();
    let h = h.values();
    let n = h.len();
    let mut color = vec![usize::MAX; n];
    let mut c = 0;
    while let Some(mut j) = color.iter().position(|&x| x == usize::MAX) {
        loop {
            color[j] = c;
            // h is 1-based: vertices after h(j) start at 0-based index h[j]
            match (h[j]..n).find(|&v| color[v] == usize::MAX) {
                Some(v) => j = v,
                None => break,
            }
        }
        c += 1;
    }
    color
}

/// `lambda^gr(d)`: class sizes of the greedy coloring of `G(d)`.
pub fn greedy_weight(d: &DyckPath) -> Partition {
    let colors = bounce_coloring(d);
    let k = colors.iter().max().map_or(0, |m| m + 1);
    let mut w = vec![0; k];
    for c in colors {
        w[c] += 1;
    }
    debug_assert!(w.windows(2).all(|p| p[0] >= p[1]));
    Partition::from_unsorted(&w)
}

/// `n^{l'_1} e^{l'_1} ... n^{l'_m} e^{l'_m}` where `l'` is the conjugate of
/// `lambda`; its greedy weight is `lambda`.
pub fn greedy_weight_from_partition(lambda: &Partition) -> Result<DyckPath> {
    if lambda.is_empty() {
        return Err(Error::InvalidPartition("empty partition".into()));
    }
    let mut steps = Vec::with_capacity(2 * lambda.size());
    for &c in lambda.conjugate().parts() {
        steps.extend(std::iter::repeat_n(Step::North, c));
        steps.extend(std::iter::repeat_n(Step::East, c));
    }
    DyckPath::new(steps)
}

/// True iff the partition support is closed downward under dominance.
pub fn is_nice_witness(f: &SymFunc) -> Result<bool> {
    let support = f.support();
    for lambda in &support {
        for mu in Partition::all(f.degree()) {
            if mu.dominance_leq(lambda)? && f.coeff(&mu) == BigRational::from_integer(0.into()) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Every support partition of `f` is dominated by `lambda`, and `lambda` is
/// itself in the support.
pub fn dominated_with_top(f: &SymFunc, lambda: &Partition) -> Result<bool> {
    if !f.support().contains(lambda) {
        return Ok(false);
    }
    for mu in f.support() {
        if !mu.dominance_leq(lambda)? {
            return Ok(false);
        }
    }
    Ok(true)
}
