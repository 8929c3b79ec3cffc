//! Finite posets stored as transitively closed strict relations.

use std::fmt;

use crate::dyck::HessenbergFunction;
use crate::error::{Error, Result};
use crate::graph::{bits, mask_below, SimpleGraph, MAX_VERTICES};

/// A strict partial order on `0..n`. `up[x]` holds every `y` with `x < y`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poset {
    n: usize,
    up: Vec<u64>,
    down: Vec<u64>,
}

impl Poset {
    pub fn antichain(n: usize) -> Result<Self> {
        Self::from_up_masks(vec![0; check_size(n)?])
    }

    /// `0 < 1 < ... < n-1`.
    pub fn chain(n: usize) -> Result<Self> {
        let n = check_size(n)?;
        Self::from_up_masks((0..n).map(|i| mask_below(n) & !mask_below(i + 1)).collect())
    }

    /// Builds the transitive closure of 1-based relations `(i, j)` meaning `i < j`.
    pub fn from_relations(n: usize, relations: &[(usize, usize)]) -> Result<Self> {
        let n = check_size(n)?;
        let mut up = vec![0u64; n];
        for &(a, b) in relations {
            if a == 0 || b == 0 || a > n || b > n {
                return Err(Error::InvalidPoset(format!("relation {a}<{b} outside [1, {n}]")));
            }
            up[a - 1] |= 1 << (b - 1);
        }
        // Warshall on bitmasks
        for k in 0..n {
            for i in 0..n {
                if up[i] >> k & 1 == 1 {
                    up[i] |= up[k];
                }
            }
        }
        if let Some(i) = (0..n).find(|&i| up[i] >> i & 1 == 1) {
            return Err(Error::InvalidPoset(format!("relations contain a cycle through {}", i + 1)));
        }
        Self::from_up_masks(up)
    }

    /// Parses cover relations `"1<4,2<5"`.
    pub fn parse_relations(n: usize, s: &str) -> Result<Self> {
        let mut rel = Vec::new();
        for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (a, b) = tok
                .split_once('<')
                .ok_or_else(|| Error::Parse(format!("relation {tok:?} is not of the form i<j")))?;
            let a = a.trim().parse().map_err(|_| Error::Parse(format!("bad element in {tok:?}")))?;
            let b = b.trim().parse().map_err(|_| Error::Parse(format!("bad element in {tok:?}")))?;
            rel.push((a, b));
        }
        Self::from_relations(n, &rel)
    }

    /// Masks must already be transitively closed and acyclic.
    pub(crate) fn from_up_masks(up: Vec<u64>) -> Result<Self> {
        let n = check_size(up.len())?;
        let mut down = vec![0u64; n];
        for (x, &m) in up.iter().enumerate() {
            for y in bits(m) {
                down[y] |= 1 << x;
            }
        }
        Ok(Poset { n, up, down })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `x < y`, 0-based.
    pub fn less(&self, x: usize, y: usize) -> bool {
        self.up[x] >> y & 1 == 1
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.less(x, y) || self.less(y, x)
    }

    pub fn up_set(&self, x: usize) -> u64 {
        self.up[x]
    }

    pub fn down_set(&self, x: usize) -> u64 {
        self.down[x]
    }

    /// All 1-based pairs `(i, j)` with `i < j` in the order.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.n {
            for y in bits(self.up[x]) {
                out.push((x + 1, y + 1));
            }
        }
        out
    }

    /// 1-based cover relations.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.n {
            for y in bits(self.up[x]) {
                if self.up[x] & self.down[y] == 0 {
                    out.push((x + 1, y + 1));
                }
            }
        }
        out
    }

    pub fn incomparability_graph(&self) -> SimpleGraph {
        let mut g = SimpleGraph::empty(self.n).expect("size already checked");
        for x in 0..self.n {
            for y in x + 1..self.n {
                if !self.comparable(x, y) {
                    g.add_edge(x, y);
                }
            }
        }
        g
    }

    /// Relabels so that new element `i` is old element `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Poset {
        let mut pos = vec![0; self.n];
        for (i, &p) in perm.iter().enumerate() {
            pos[p] = i;
        }
        let up = perm.iter().map(|&p| bits(self.up[p]).fold(0u64, |m, y| m | 1 << pos[y])).collect();
        Poset::from_up_masks(up).expect("same size")
    }

    /// Longest chain (number of elements) inside `within`.
    pub fn longest_chain_in(&self, within: u64) -> usize {
        // elements in a linear extension order: by down-set size
        let mut elems: Vec<usize> = bits(within).collect();
        elems.sort_by_key(|&x| self.down[x].count_ones());
        let mut best = vec![0usize; self.n];
        let mut overall = 0;
        for &y in &elems {
            let below = bits(self.down[y] & within).map(|x| best[x]).max().unwrap_or(0);
            best[y] = below + 1;
            overall = overall.max(best[y]);
        }
        overall
    }

    /// True iff there are no disjoint chains of lengths `m` and `k` whose
    /// elements are pairwise incomparable across the two chains.
    pub fn is_mn_free(&self, m: usize, k: usize) -> bool {
        if m == 0 || k == 0 {
            return self.n < m + k;
        }
        let all = mask_below(self.n);
        let mut found = false;
        // enumerate m-chains upward; every element in the chain restricts
        // the candidate partner set to the incomparable ones
        let mut stack: Vec<(u64, usize, u64)> = (0..self.n).map(|x| (1u64 << x, x, all & !self.related(x))).collect();
        while let Some((chain, top, partners)) = stack.pop() {
            if self.longest_chain_in(partners) < k {
                continue;
            }
            if chain.count_ones() as usize == m {
                found = true;
                break;
            }
            for y in bits(self.up[top]) {
                stack.push((chain | 1 << y, y, partners & !self.related(y)));
            }
        }
        !found
    }

    pub fn is_unit_interval_order(&self) -> bool {
        self.is_mn_free(3, 1) && self.is_mn_free(2, 2)
    }

    pub fn is_isomorphic(&self, other: &Poset) -> bool {
        find_isomorphism(self, other).is_some()
    }

    fn related(&self, x: usize) -> u64 {
        self.up[x] | self.down[x] | 1 << x
    }

    fn signature(&self, x: usize) -> (u32, u32) {
        (self.down[x].count_ones(), self.up[x].count_ones())
    }
}

impl fmt::Display for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.covers().iter().map(|(a, b)| format!("{a}<{b}")).collect();
        write!(f, "{}:{}", self.n, c.join(","))
    }
}

fn check_size(n: usize) -> Result<usize> {
    if n > MAX_VERTICES {
        Err(Error::TooLarge(format!("{n} elements (limit {MAX_VERTICES})")))
    } else {
        Ok(n)
    }
}

/// `map[x]` is the image in `b` of element `x` of `a`.
pub fn find_isomorphism(a: &Poset, b: &Poset) -> Option<Vec<usize>> {
    if a.n != b.n {
        return None;
    }
    let mut sa: Vec<_> = (0..a.n).map(|x| a.signature(x)).collect();
    let mut sb: Vec<_> = (0..b.n).map(|x| b.signature(x)).collect();
    let (ua, ub) = (sa.clone(), sb.clone());
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return None;
    }
    // assign rare signature classes first
    let mut order: Vec<usize> = (0..a.n).collect();
    order.sort_by_key(|&x| (ua.iter().filter(|&&s| s == ua[x]).count(), ua[x]));
    let mut map = vec![usize::MAX; a.n];
    let mut used = 0u64;
    fn rec(
        depth: usize,
        order: &[usize],
        a: &Poset,
        b: &Poset,
        ua: &[(u32, u32)],
        ub: &[(u32, u32)],
        map: &mut Vec<usize>,
        used: &mut u64,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let x = order[depth];
        for y in 0..b.n {
            if *used >> y & 1 == 1 || ub[y] != ua[x] {
                continue;
            }
            let ok = order[..depth].iter().all(|&p| {
                let q = map[p];
                a.less(p, x) == b.less(q, y) && a.less(x, p) == b.less(y, q)
            });
            if !ok {
                continue;
            }
            map[x] = y;
            *used |= 1 << y;
            if rec(depth + 1, order, a, b, ua, ub, map, used) {
                return true;
            }
            *used &= !(1u64 << y);
            map[x] = usize::MAX;
        }
        false
    }
    if rec(0, &order, a, b, &ua, &ub, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

/// `i < j` whenever `h(i) < j` (1-based).
pub fn poset_from_hessenberg(h: &HessenbergFunction) -> Poset {
    let n = h.len();
    let up = h.values().iter().map(|&hi| mask_below(n) & !mask_below(hi)).collect();
    Poset::from_up_masks(up).expect("Hessenberg functions are at most 64 long here")
}

/// For a unit interval order, the Hessenberg function of its natural
/// labelling together with that labelling (`perm[i]` is the element placed
/// at position `i`).
pub fn unit_interval_hessenberg(p: &Poset) -> Result<(HessenbergFunction, Vec<usize>)> {
    let n = p.n();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.sort_by(|&x, &y| {
        let (dx, ux) = p.signature(x);
        let (dy, uy) = p.signature(y);
        dx.cmp(&dy).then(uy.cmp(&ux)).then(x.cmp(&y))
    });
    let h: Vec<usize> = perm.iter().map(|&x| n - p.up_set(x).count_ones() as usize).collect();
    let h = HessenbergFunction::new(h).map_err(|_| Error::NotUnitIntervalOrder)?;
    if poset_from_hessenberg(&h) != p.relabel(&perm) {
        return Err(Error::NotUnitIntervalOrder);
    }
    Ok((h, perm))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dyck::enumerate_dyck;
    use crate::graph::indifference_graph;

    fn running() -> HessenbergFunction {
        "3,3,5,5,5".parse().unwrap()
    }

    #[test]
    fn hessenberg_poset_examples() {
        let p = poset_from_hessenberg(&running());
        assert_eq!(p.relations(), vec![(1, 4), (1, 5), (2, 4), (2, 5)]);
        let anti: HessenbergFunction = "3,3,3".parse().unwrap();
        assert_eq!(poset_from_hessenberg(&anti), Poset::antichain(3).unwrap());
        let chain: HessenbergFunction = "1,2,3".parse().unwrap();
        assert_eq!(poset_from_hessenberg(&chain), Poset::chain(3).unwrap());
    }

    #[test]
    fn incomparability_examples() {
        assert_eq!(Poset::antichain(4).unwrap().incomparability_graph(), SimpleGraph::complete(4).unwrap());
        assert_eq!(Poset::chain(4).unwrap().incomparability_graph().edge_count(), 0);
        let p = Poset::parse_relations(5, "1<4,1<5,2<4,2<5").unwrap();
        let d = running().to_dyck();
        assert_eq!(p.incomparability_graph(), indifference_graph(&d).unwrap());
    }

    #[test]
    fn closure_and_cycles() {
        let p = Poset::parse_relations(3, "1<2,2<3").unwrap();
        assert!(p.less(0, 2));
        assert_eq!(p.covers(), vec![(1, 2), (2, 3)]);
        assert!(Poset::parse_relations(3, "1<2,2<1").is_err());
        assert!(Poset::parse_relations(3, "1<4").is_err());
    }

    #[test]
    fn mn_free_examples() {
        let chain = Poset::chain(5).unwrap();
        assert!(chain.is_mn_free(3, 1));
        let two_two = Poset::parse_relations(4, "1<2,3<4").unwrap();
        assert!(!two_two.is_mn_free(2, 2));
        assert!(two_two.is_mn_free(3, 1));
        let three_one = Poset::parse_relations(4, "1<2,2<3").unwrap();
        assert!(!three_one.is_mn_free(3, 1));
        let p = poset_from_hessenberg(&running());
        assert!(p.is_mn_free(3, 1));
        assert!(p.is_mn_free(2, 2));
    }

    #[test]
    fn hessenberg_round_trip_through_incomparability() {
        for n in 1..=7 {
            for d in enumerate_dyck(n).unwrap() {
                let p = poset_from_hessenberg(&d.hessenberg());
                assert_eq!(p.incomparability_graph(), indifference_graph(&d).unwrap());
                let (h, _) = unit_interval_hessenberg(&p).unwrap();
                assert_eq!(h, d.hessenberg());
            }
        }
    }

    #[test]
    fn isomorphism_detects_relabelling() {
        let p = poset_from_hessenberg(&"2,4,4,5,5".parse().unwrap());
        let q = p.relabel(&[4, 2, 0, 3, 1]);
        let map = find_isomorphism(&p, &q).unwrap();
        for x in 0..5 {
            for y in 0..5 {
                assert_eq!(p.less(x, y), q.less(map[x], map[y]));
            }
        }
        assert!(!p.is_isomorphic(&Poset::chain(5).unwrap()));
    }

    fn graph_isomorphic(a: &SimpleGraph, b: &SimpleGraph) -> bool {
        // symmetric adjacency read as a relation; degrees appear in both slots
        let as_poset = |g: &SimpleGraph| Poset {
            n: g.n(),
            up: (0..g.n()).map(|u| g.neighbors(u)).collect(),
            down: (0..g.n()).map(|u| g.neighbors(u)).collect(),
        };
        find_isomorphism(&as_poset(a), &as_poset(b)).is_some()
    }

    /// Naturally labelled posets (`i < j` only if `i < j` as integers) cover
    /// every isomorphism class.
    fn natural_posets(n: usize) -> Vec<Poset> {
        let mut out = Vec::new();
        fn rec(x: usize, n: usize, up: &mut Vec<u64>, out: &mut Vec<Poset>) {
            if x == 0 {
                out.push(Poset::from_up_masks(up.clone()).unwrap());
                return;
            }
            // choose the up-set of x - 1 among elements above it, closed upward
            let v = x - 1;
            let above = mask_below(n) & !mask_below(x);
            let mut sub = above;
            loop {
                let closed = bits(sub).all(|y| up[y] & !sub == 0);
                if closed {
                    up[v] = sub;
                    rec(v, n, up, out);
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & above;
            }
            up[v] = 0;
        }
        let mut up = vec![0u64; n];
        rec(n, n, &mut up, &mut out);
        out
    }

    #[test]
    fn unit_interval_orders_are_exactly_the_indifference_posets() {
        for n in 1..=6 {
            let candidates: Vec<SimpleGraph> =
                enumerate_dyck(n).unwrap().iter().map(|d| indifference_graph(d).unwrap()).collect();
            for p in natural_posets(n) {
                let g = p.incomparability_graph();
                let is_indiff = candidates.iter().any(|c| c.edge_count() == g.edge_count() && graph_isomorphic(c, &g));
                assert_eq!(p.is_unit_interval_order(), is_indiff, "{p}");
                assert_eq!(unit_interval_hessenberg(&p).is_ok(), is_indiff, "{p}");
            }
        }
    }

    #[test]
    fn natural_poset_counts() {
        // naturally labelled posets: 1, 2, 7, 40, 357
        let counts: Vec<usize> = (1..=5).map(|n| natural_posets(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 7, 40, 357]);
    }
}
