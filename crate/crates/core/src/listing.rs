//! Part listings of (3+1)-free posets, the bicolored-graph decomposition into
//! unit interval orders, and canonical listings.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::csf::{csf_bruteforce, greedy_weight, MAX_BRUTEFORCE_VERTICES};
use crate::dyck::AreaSequence;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poset::{find_isomorphism, unit_interval_hessenberg, Poset};
use crate::rook::Board;
use crate::symfunc::{Basis, SymFunc};

/// A bipartite graph between `r` lower and `s` upper vertices; edges are
/// 1-based pairs `(lower, upper)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "BicoRepr", into = "BicoRepr")]
pub struct BicoloredGraph {
    r: usize,
    s: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl BicoloredGraph {
    pub fn new(r: usize, s: usize, edges: &[(usize, usize)]) -> Result<Self> {
        for &(a, b) in edges {
            if a == 0 || b == 0 || a > r || b > s {
                return Err(Error::InvalidListing(format!("edge ({a},{b}) outside [{r}]x[{s}]")));
            }
        }
        Ok(BicoloredGraph { r, s, edges: edges.iter().copied().collect() })
    }

    pub fn complete(r: usize, s: usize) -> Self {
        let edges = (1..=r).flat_map(|a| (1..=s).map(move |b| (a, b))).collect();
        BicoloredGraph { r, s, edges }
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn edges(&self) -> impl Iterator<Item = &(usize, usize)> {
        self.edges.iter()
    }

    /// 0-based adjacency test.
    pub fn has_edge(&self, lower: usize, upper: usize) -> bool {
        self.edges.contains(&(lower + 1, upper + 1))
    }

    /// The edge set as a board inside `[r] x [s]`.
    pub fn as_board(&self) -> Result<Board> {
        Board::new(self.r, self.s, &self.edges.iter().copied().collect::<Vec<_>>())
    }

    /// Size of a maximum matching inside `H` (augmenting paths).
    pub fn max_matching(&self) -> usize {
        let mut match_upper: Vec<Option<usize>> = vec![None; self.s];
        fn augment(a: usize, h: &BicoloredGraph, seen: &mut [bool], mu: &mut [Option<usize>]) -> bool {
            for b in 0..h.s {
                if h.has_edge(a, b) && !seen[b] {
                    seen[b] = true;
                    if mu[b].is_none() || augment(mu[b].unwrap(), h, seen, mu) {
                        mu[b] = Some(a);
                        return true;
                    }
                }
            }
            false
        }
        (0..self.r)
            .filter(|&a| {
                let mut seen = vec![false; self.s];
                augment(a, self, &mut seen, &mut match_upper)
            })
            .count()
    }
}

#[derive(Serialize, Deserialize)]
struct BicoRepr {
    r: usize,
    s: usize,
    edges: Vec<[usize; 2]>,
}

impl TryFrom<BicoRepr> for BicoloredGraph {
    type Error = Error;
    fn try_from(b: BicoRepr) -> Result<Self> {
        BicoloredGraph::new(b.r, b.s, &b.edges.iter().map(|e| (e[0], e[1])).collect::<Vec<_>>())
    }
}

impl From<BicoloredGraph> for BicoRepr {
    fn from(h: BicoloredGraph) -> Self {
        BicoRepr { r: h.r, s: h.s, edges: h.edges.iter().map(|&(a, b)| [a, b]).collect() }
    }
}

/// `v_i` or `b_{i,i+1}(H)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Part {
    Vertex(usize),
    Bico(usize, BicoloredGraph),
}

impl Part {
    pub fn level(&self) -> usize {
        match self {
            Part::Vertex(l) | Part::Bico(l, _) => *l,
        }
    }

    pub fn vertex_count(&self) -> usize {
        match self {
            Part::Vertex(_) => 1,
            Part::Bico(_, h) => h.r + h.s,
        }
    }
}

#[derive(Serialize, Deserialize)]
enum PartRepr {
    #[serde(rename = "v")]
    V(usize),
    #[serde(rename = "b")]
    B {
        level: usize,
        #[serde(flatten)]
        graph: BicoloredGraph,
    },
}

impl Serialize for Part {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Part::Vertex(l) => PartRepr::V(*l),
            Part::Bico(l, h) => PartRepr::B { level: *l, graph: h.clone() },
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Part {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(match PartRepr::deserialize(d)? {
            PartRepr::V(l) => Part::Vertex(l),
            PartRepr::B { level, graph } => Part::Bico(level, graph),
        })
    }
}

/// A word of parts. Vertices are numbered in reading order; a bicolored
/// part contributes its `r` lower vertices and then its `s` upper ones.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PartListing {
    parts: Vec<Part>,
}

/// One vertex of a listing: its level, the index of its part, and for
/// bicolored parts whether it is lower and its index within its side.
#[derive(Clone, Copy, Debug)]
struct Slot {
    level: usize,
    part: usize,
    side: Option<(bool, usize)>,
}

impl PartListing {
    pub fn new(parts: Vec<Part>) -> Self {
        PartListing { parts }
    }

    /// `v_{a_1} ... v_{a_n}`.
    pub fn from_levels(levels: &[usize]) -> Self {
        PartListing { parts: levels.iter().map(|&l| Part::Vertex(l)).collect() }
    }

    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    pub fn vertex_count(&self) -> usize {
        self.parts.iter().map(Part::vertex_count).sum()
    }

    pub fn bico_positions(&self) -> Vec<usize> {
        self.parts.iter().enumerate().filter(|(_, p)| matches!(p, Part::Bico(..))).map(|(i, _)| i).collect()
    }

    /// Levels of a listing without bicolored parts.
    pub fn levels(&self) -> Option<Vec<usize>> {
        self.parts
            .iter()
            .map(|p| match p {
                Part::Vertex(l) => Some(*l),
                Part::Bico(..) => None,
            })
            .collect()
    }

    fn slots(&self) -> Vec<Slot> {
        let mut out = Vec::with_capacity(self.vertex_count());
        for (idx, p) in self.parts.iter().enumerate() {
            match p {
                Part::Vertex(l) => out.push(Slot { level: *l, part: idx, side: None }),
                Part::Bico(l, h) => {
                    out.extend((0..h.r).map(|a| Slot { level: *l, part: idx, side: Some((true, a)) }));
                    out.extend((0..h.s).map(|b| Slot { level: l + 1, part: idx, side: Some((false, b)) }));
                }
            }
        }
        out
    }

    /// The poset of the listing: `x < y` when `y` is at least two levels
    /// above `x`, or one level above and either in a later part or joined to
    /// `x` by an edge of the same bicolored graph.
    pub fn poset(&self) -> Result<Poset> {
        let slots = self.slots();
        let n = slots.len();
        let mut rel = Vec::new();
        for (x, sx) in slots.iter().enumerate() {
            for (y, sy) in slots.iter().enumerate() {
                let below = if sy.level >= sx.level + 2 {
                    true
                } else if sy.level == sx.level + 1 {
                    if sx.part < sy.part {
                        true
                    } else if sx.part == sy.part {
                        match (&self.parts[sx.part], sx.side, sy.side) {
                            (Part::Bico(_, h), Some((true, a)), Some((false, b))) => h.has_edge(a, b),
                            _ => false,
                        }
                    } else {
                        false
                    }
                } else {
                    false
                };
                if below {
                    rel.push((x + 1, y + 1));
                }
            }
        }
        Poset::from_relations(n, &rel)
    }

    /// Replaces the part at `pos` by a sequence of vertices.
    fn splice(&self, pos: usize, with: Vec<Part>) -> PartListing {
        let mut parts = self.parts[..pos].to_vec();
        parts.extend(with);
        parts.extend_from_slice(&self.parts[pos + 1..]);
        PartListing { parts }
    }
}

impl fmt::Display for PartListing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.parts {
            match p {
                Part::Vertex(l) => write!(f, "v{l}")?,
                Part::Bico(l, h) => {
                    let e: Vec<String> = h.edges.iter().map(|(a, b)| format!("{a}-{b}")).collect();
                    write!(f, "b{l},{}[{}x{}:{}]", l + 1, h.r, h.s, e.join(","))?;
                }
            }
        }
        Ok(())
    }
}

pub fn poset_from_listing(l: &PartListing) -> Result<Poset> {
    l.poset()
}

/// `q_j`: the fraction of maximum matchings of the complete bipartite graph
/// on `r + s` vertices that share exactly `j` edges with `H`. Every such
/// matching is enumerated.
pub fn matching_probabilities(h: &BicoloredGraph) -> Result<Vec<BigRational>> {
    if h.r == 0 || h.s == 0 {
        return Err(Error::InvalidListing("bicolored graph needs r, s >= 1".into()));
    }
    let (small, large) = (h.r.min(h.s), h.r.max(h.s));
    if large > 10 {
        return Err(Error::TooLarge(format!("matching enumeration on {}x{}", h.r, h.s)));
    }
    let mut hits = vec![0u64; small + 1];
    let mut used = vec![false; large];
    // match each vertex of the smaller side to a distinct vertex of the larger
    fn rec(i: usize, shared: usize, h: &BicoloredGraph, used: &mut [bool], hits: &mut [u64]) {
        let lower_is_small = h.r <= h.s;
        let small = if lower_is_small { h.r } else { h.s };
        if i == small {
            hits[shared] += 1;
            return;
        }
        for j in 0..used.len() {
            if used[j] {
                continue;
            }
            used[j] = true;
            let e = if lower_is_small { h.has_edge(i, j) } else { h.has_edge(j, i) };
            rec(i + 1, shared + usize::from(e), h, used, hits);
            used[j] = false;
        }
    }
    rec(0, 0, h, &mut used, &mut hits);
    let total: u64 = hits.iter().sum();
    Ok(hits.iter().map(|&c| BigRational::new(BigInt::from(c), BigInt::from(total))).collect())
}

/// `U_j = v_{i+1}^{s-j} v_i^r v_{i+1}^j` for `r >= s`, otherwise
/// `D_j = v_i^j v_{i+1}^s v_i^{r-j}`.
pub fn replacement(level: usize, r: usize, s: usize, j: usize) -> Vec<Part> {
    let (lo, hi) = (Part::Vertex(level), Part::Vertex(level + 1));
    let mut out = Vec::with_capacity(r + s);
    if r >= s {
        out.extend(std::iter::repeat_n(hi.clone(), s - j));
        out.extend(std::iter::repeat_n(lo, r));
        out.extend(std::iter::repeat_n(hi, j));
    } else {
        out.extend(std::iter::repeat_n(lo.clone(), j));
        out.extend(std::iter::repeat_n(hi, s));
        out.extend(std::iter::repeat_n(lo, r - j));
    }
    out
}

/// `(q_j, L_j)` for `j = 0..=min(r, s)`, zero weights included.
pub fn decompose_bico(l: &PartListing, pos: usize) -> Result<Vec<(BigRational, PartListing)>> {
    let Some(Part::Bico(level, h)) = l.parts.get(pos) else {
        return Err(Error::NotABicoPart(pos));
    };
    let q = matching_probabilities(h)?;
    Ok(q.into_iter()
        .enumerate()
        .map(|(j, qj)| (qj, l.splice(pos, replacement(*level, h.r, h.s, j))))
        .collect())
}

/// `X(L)` by eliminating bicolored parts left to right, then counting
/// colorings of the resulting unit interval orders.
pub fn csf_listing(l: &PartListing) -> Result<SymFunc> {
    csf_listing_ordered(l, false)
}

pub(crate) fn csf_listing_ordered(l: &PartListing, from_right: bool) -> Result<SymFunc> {
    let n = l.vertex_count();
    if n > MAX_BRUTEFORCE_VERTICES {
        return Err(Error::TooLarge(format!("{n} vertices (limit {MAX_BRUTEFORCE_VERTICES})")));
    }
    let bicos = l.bico_positions();
    let pick = if from_right { bicos.last() } else { bicos.first() };
    let Some(&pos) = pick else {
        return csf_bruteforce(&l.poset()?.incomparability_graph());
    };
    let mut acc = SymFunc::zero(n, Basis::Monomial);
    for (q, lj) in decompose_bico(l, pos)? {
        if q.is_zero() {
            continue;
        }
        acc = acc.add(&csf_listing_ordered(&lj, from_right)?.scale(&q))?;
    }
    Ok(acc)
}

/// The canonical listing `(a_1, ..., a_n)` of a unit interval order, found by
/// testing every tuple with `a_1 = 0`, `a_{i+1} <= a_i + 1` for isomorphism,
/// largest tuples first.
pub fn lex_maximal_listing(p: &Poset) -> Result<AreaSequence> {
    if !p.is_unit_interval_order() {
        return Err(Error::NotUnitIntervalOrder);
    }
    let mut target: Vec<(u32, u32)> =
        (0..p.n()).map(|x| (p.down_set(x).count_ones(), p.up_set(x).count_ones())).collect();
    target.sort_unstable();
    for a in AreaSequence::all(p.n()).into_iter().rev() {
        let q = PartListing::from_levels(a.values()).poset()?;
        let mut sig: Vec<(u32, u32)> =
            (0..q.n()).map(|x| (q.down_set(x).count_ones(), q.up_set(x).count_ones())).collect();
        sig.sort_unstable();
        if sig == target && find_isomorphism(&q, p).is_some() {
            return Ok(a);
        }
    }
    Err(Error::InternalSearchFailure("no canonical listing matches the poset".into()))
}

/// Replaces every bicolored part by its `U_j` / `D_j` with the largest
/// `j` of positive probability, i.e. the maximum matching size of `H`.
pub fn dominant_unit_listing(l: &PartListing) -> PartListing {
    let mut cur = l.clone();
    while let Some(&pos) = cur.bico_positions().first() {
        let Part::Bico(level, h) = &cur.parts[pos] else { unreachable!() };
        let j = h.max_matching();
        cur = cur.splice(pos, replacement(*level, h.r, h.s, j));
    }
    cur
}

/// `lambda^gr(P)` for the poset of `l`.
pub fn greedy_weight_31free(l: &PartListing) -> Result<Partition> {
    let unit = dominant_unit_listing(l);
    let (h, _) = unit_interval_hessenberg(&unit.poset()?)?;
    Ok(greedy_weight(&h.to_dyck()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dyck::{enumerate_dyck, HessenbergFunction};
    use crate::graph::indifference_graph;
    use crate::poset::poset_from_hessenberg;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn big_h() -> BicoloredGraph {
        BicoloredGraph::new(2, 2, &[(1, 1), (2, 1), (2, 2)]).unwrap()
    }

    fn big_listing() -> PartListing {
        let mut parts: Vec<Part> = [0, 1, 2, 2, 0].iter().map(|&l| Part::Vertex(l)).collect();
        parts.push(Part::Bico(0, big_h()));
        PartListing::new(parts)
    }

    #[test]
    fn small_posets() {
        assert_eq!(PartListing::from_levels(&[0, 0, 0]).poset().unwrap(), Poset::antichain(3).unwrap());
        assert_eq!(PartListing::from_levels(&[0, 1]).poset().unwrap(), Poset::chain(2).unwrap());
        assert_eq!(PartListing::from_levels(&[1, 0]).poset().unwrap(), Poset::antichain(2).unwrap());
    }

    #[test]
    fn big_example_poset() {
        let p = big_listing().poset().unwrap();
        assert_eq!(p.n(), 9);
        assert!(p.is_mn_free(3, 1));
    }

    #[test]
    fn probabilities() {
        assert_eq!(matching_probabilities(&big_h()).unwrap(), vec![q(0, 1), q(1, 2), q(1, 2)]);
        let empty = BicoloredGraph::new(2, 3, &[]).unwrap();
        assert_eq!(matching_probabilities(&empty).unwrap(), vec![q(1, 1), q(0, 1), q(0, 1)]);
        assert_eq!(matching_probabilities(&BicoloredGraph::complete(2, 2)).unwrap(), vec![q(0, 1), q(0, 1), q(1, 1)]);
        assert!(matching_probabilities(&BicoloredGraph::new(0, 2, &[]).unwrap()).is_err());
    }

    #[test]
    fn probabilities_match_hit_numbers() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for r in 1..=5 {
            for s in 1..=5 {
                for _ in 0..4 {
                    let edges: Vec<(usize, usize)> =
                        (1..=r).flat_map(|a| (1..=s).map(move |b| (a, b))).filter(|_| rng.gen_bool(0.5)).collect();
                    let h = BicoloredGraph::new(r, s, &edges).unwrap();
                    let qs = matching_probabilities(&h).unwrap();
                    let sum: BigRational = qs.iter().sum();
                    assert_eq!(sum, q(1, 1));
                    let hits = h.as_board().unwrap().hit_numbers();
                    let total: BigInt = hits.iter().sum();
                    for (qj, hj) in qs.iter().zip(&hits) {
                        assert_eq!(qj, &BigRational::new(hj.clone(), total.clone()));
                    }
                    let top = qs.iter().rposition(|x| !x.is_zero()).unwrap();
                    assert_eq!(top, h.max_matching());
                }
            }
        }
    }

    #[test]
    fn decomposition_examples() {
        let parts = decompose_bico(&big_listing(), 5).unwrap();
        let levels: Vec<Vec<usize>> = parts.iter().map(|(_, l)| l.levels().unwrap()).collect();
        assert_eq!(levels[0], vec![0, 1, 2, 2, 0, 1, 1, 0, 0]);
        assert_eq!(levels[1], vec![0, 1, 2, 2, 0, 1, 0, 0, 1]);
        assert_eq!(levels[2], vec![0, 1, 2, 2, 0, 0, 0, 1, 1]);
        assert_eq!(parts.iter().map(|(w, _)| w.clone()).collect::<Vec<_>>(), vec![q(0, 1), q(1, 2), q(1, 2)]);

        let edgeless = PartListing::new(vec![Part::Bico(0, BicoloredGraph::new(1, 1, &[]).unwrap())]);
        let d = decompose_bico(&edgeless, 0).unwrap();
        assert_eq!(d[0], (q(1, 1), PartListing::from_levels(&[1, 0])));
        assert!(d[1].0.is_zero());
        let edge = PartListing::new(vec![Part::Bico(0, BicoloredGraph::complete(1, 1))]);
        let d = decompose_bico(&edge, 0).unwrap();
        assert_eq!(d[1], (q(1, 1), PartListing::from_levels(&[0, 1])));
        assert_eq!(decompose_bico(&edge, 1), Err(Error::NotABicoPart(1)));
        // r < s uses D_j
        assert_eq!(replacement(0, 1, 2, 1), vec![Part::Vertex(0), Part::Vertex(1), Part::Vertex(1)]);
    }

    #[test]
    fn big_example_csf() {
        let x = csf_listing(&big_listing()).unwrap();
        let expected = SymFunc::from_int_terms(
            9,
            Basis::Monomial,
            &[
                (362880, &[1; 9]),
                (90720, &[2, 1, 1, 1, 1, 1, 1, 1]),
                (23040, &[2, 2, 1, 1, 1, 1, 1]),
                (6048, &[2, 2, 2, 1, 1, 1]),
                (1728, &[2, 2, 2, 2, 1]),
                (1440, &[3, 1, 1, 1, 1, 1, 1]),
                (384, &[3, 2, 1, 1, 1, 1]),
                (112, &[3, 2, 2, 1, 1]),
                (48, &[3, 2, 2, 2]),
            ],
        )
        .unwrap();
        assert_eq!(x, expected);
        assert_eq!(csf_bruteforce(&big_listing().poset().unwrap().incomparability_graph()).unwrap(), expected);
        assert_eq!(greedy_weight_31free(&big_listing()).unwrap(), Partition::new(vec![3, 2, 2, 2]).unwrap());
    }

    #[test]
    fn canonical_listings() {
        let l2 = PartListing::from_levels(&[0, 1, 2, 2, 0, 0, 0, 1, 1]);
        let p = l2.poset().unwrap();
        assert_eq!(lex_maximal_listing(&p).unwrap().values(), &[0, 1, 2, 2, 0, 0, 0, 1, 1]);
        let (h, _) = unit_interval_hessenberg(&p).unwrap();
        assert_eq!(h, "4,5,5,5,7,9,9,9,9".parse::<HessenbergFunction>().unwrap());
        assert_eq!(lex_maximal_listing(&Poset::antichain(4).unwrap()).unwrap().values(), &[0, 0, 0, 0]);
        assert_eq!(lex_maximal_listing(&Poset::chain(3).unwrap()).unwrap().values(), &[0, 1, 2]);
        let two_two = Poset::parse_relations(4, "1<2,3<4").unwrap();
        assert_eq!(lex_maximal_listing(&two_two), Err(Error::NotUnitIntervalOrder));
    }

    #[test]
    fn big_example_table() {
        let rows = [
            (vec![0, 1, 2, 2, 0, 1, 1, 0, 0], "4,5,7,7,7,9,9,9,9", vec![3, 2, 2, 1, 1]),
            (vec![0, 1, 2, 2, 0, 1, 0, 0, 1], "4,5,6,6,7,9,9,9,9", vec![3, 2, 2, 2]),
            (vec![0, 1, 2, 2, 0, 0, 0, 1, 1], "4,5,5,5,7,9,9,9,9", vec![3, 2, 2, 2]),
        ];
        for (a, h, gr) in rows {
            let p = PartListing::from_levels(&a).poset().unwrap();
            let (hp, _) = unit_interval_hessenberg(&p).unwrap();
            assert_eq!(hp.to_string(), h);
            assert_eq!(greedy_weight(&hp.to_dyck()), Partition::new(gr).unwrap());
            let area = AreaSequence::new(a).unwrap();
            assert_eq!(area.to_dyck().zeta().hessenberg().to_string(), h);
        }
    }

    #[test]
    fn greedy_weight_31free_examples() {
        assert_eq!(greedy_weight_31free(&PartListing::from_levels(&[0, 1, 2, 3])).unwrap(), Partition::new(vec![4]).unwrap());
        assert_eq!(greedy_weight_31free(&PartListing::from_levels(&[0, 0, 0])).unwrap(), Partition::new(vec![1, 1, 1]).unwrap());
    }

    #[test]
    fn canonical_listing_round_trips_for_all_unit_interval_orders() {
        for n in 1..=6 {
            for d in enumerate_dyck(n).unwrap() {
                let p = poset_from_hessenberg(&d.hessenberg());
                let a = lex_maximal_listing(&p).unwrap();
                assert!(AreaSequence::new(a.values().to_vec()).is_ok());
                let q = PartListing::from_levels(a.values()).poset().unwrap();
                assert!(q.is_isomorphic(&p));
            }
        }
    }

    fn random_listing(rng: &mut ChaCha8Rng, max_vertices: usize, bicos: usize) -> PartListing {
        let mut parts = Vec::new();
        let mut used = 0;
        for _ in 0..bicos {
            let r = rng.gen_range(1..=2);
            let s = rng.gen_range(1..=2);
            let edges: Vec<(usize, usize)> =
                (1..=r).flat_map(|a| (1..=s).map(move |b| (a, b))).filter(|_| rng.gen_bool(0.5)).collect();
            parts.push(Part::Bico(rng.gen_range(0..=2), BicoloredGraph::new(r, s, &edges).unwrap()));
            used += r + s;
        }
        while used < max_vertices {
            parts.push(Part::Vertex(rng.gen_range(0..=3)));
            used += 1;
        }
        // shuffle part order
        for i in (1..parts.len()).rev() {
            let j = rng.gen_range(0..=i);
            parts.swap(i, j);
        }
        PartListing::new(parts)
    }

    #[test]
    fn convex_combination_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..40 {
            let n = rng.gen_range(3..=8);
            let l = random_listing(&mut rng, n, 1);
            let direct = csf_bruteforce(&l.poset().unwrap().incomparability_graph()).unwrap();
            assert_eq!(csf_listing(&l).unwrap(), direct, "{l}");
            let p = l.poset().unwrap();
            assert!(p.is_mn_free(3, 1), "{l}");
        }
    }

    #[test]
    fn elimination_order_does_not_matter() {
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        for _ in 0..15 {
            let l = random_listing(&mut rng, 8, 2);
            let left = csf_listing_ordered(&l, false).unwrap();
            let right = csf_listing_ordered(&l, true).unwrap();
            assert_eq!(left, right, "{l}");
            assert_eq!(left, csf_bruteforce(&l.poset().unwrap().incomparability_graph()).unwrap());
        }
    }

    #[test]
    fn supports_grow_with_j() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..20 {
            let l = random_listing(&mut rng, 7, 1);
            let pos = l.bico_positions()[0];
            let parts = decompose_bico(&l, pos).unwrap();
            let supports: Vec<BTreeSet<Partition>> = parts
                .iter()
                .map(|(_, lj)| csf_listing(lj).unwrap().support().into_iter().collect())
                .collect();
            for w in supports.windows(2) {
                assert!(w[0].is_subset(&w[1]), "{l}");
            }
        }
    }

    #[test]
    fn greedy_weight_31free_dominates() {
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        for _ in 0..30 {
            let bicos = rng.gen_range(0..=2);
            let l = random_listing(&mut rng, 7, bicos);
            let x = csf_listing(&l).unwrap();
            let top = greedy_weight_31free(&l).unwrap();
            assert!(crate::csf::dominated_with_top(&x, &top).unwrap(), "{l}");
            assert!(x.to_schur().unwrap().is_nonnegative(), "{l}");
        }
    }

    #[test]
    fn json_format() {
        let l = PartListing::new(vec![Part::Vertex(0), Part::Bico(1, BicoloredGraph::new(2, 1, &[(2, 1)]).unwrap())]);
        let s = serde_json::to_string(&l).unwrap();
        assert_eq!(s, r#"[{"v":0},{"b":{"level":1,"r":2,"s":1,"edges":[[2,1]]}}]"#);
        assert_eq!(serde_json::from_str::<PartListing>(&s).unwrap(), l);
        assert!(serde_json::from_str::<PartListing>(r#"[{"b":{"level":0,"r":1,"s":1,"edges":[[2,1]]}}]"#).is_err());
    }

    #[test]
    fn unit_listings_match_indifference_graphs() {
        for n in 1..=5 {
            for a in AreaSequence::all(n) {
                let p = PartListing::from_levels(a.values()).poset().unwrap();
                let (h, perm) = unit_interval_hessenberg(&p).unwrap();
                let g = p.relabel(&perm).incomparability_graph();
                assert_eq!(g, indifference_graph(&h.to_dyck()).unwrap());
            }
        }
    }
}
