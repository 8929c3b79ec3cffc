//! Boards, rook and hit numbers, hit polynomials, permanents and the
//! co-bipartite graph / board correspondence.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::dyck::DyckPath;
use crate::error::{Error, Result};
use crate::graph::{bits, SimpleGraph, MAX_VERTICES};
use crate::partition::{factorial, Partition};
use crate::poly::Polynomial;

/// Rook DP keeps a bitmask over the shorter side.
const MAX_SHORT_SIDE: usize = 24;

/// A set of cells of the rectangle `[n1] x [n2]`. Cells are 1-based in every
/// textual format.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "BoardRepr", into = "BoardRepr")]
pub struct Board {
    n1: usize,
    n2: usize,
    rows: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct BoardRepr {
    n1: usize,
    n2: usize,
    cells: Vec<(usize, usize)>,
}

impl TryFrom<BoardRepr> for Board {
    type Error = Error;
    fn try_from(r: BoardRepr) -> Result<Self> {
        Board::new(r.n1, r.n2, &r.cells)
    }
}

impl From<Board> for BoardRepr {
    fn from(b: Board) -> Self {
        BoardRepr { n1: b.n1, n2: b.n2, cells: b.cells() }
    }
}

impl Board {
    pub fn new(n1: usize, n2: usize, cells: &[(usize, usize)]) -> Result<Self> {
        let mut b = Self::empty(n1, n2)?;
        for &(i, j) in cells {
            if i == 0 || j == 0 || i > n1 || j > n2 {
                return Err(Error::InvalidBoard(format!("cell ({i},{j}) outside [{n1}]x[{n2}]")));
            }
            b.rows[i - 1] |= 1 << (j - 1);
        }
        Ok(b)
    }

    pub fn empty(n1: usize, n2: usize) -> Result<Self> {
        if n1 > MAX_VERTICES || n2 > MAX_VERTICES {
            return Err(Error::TooLarge(format!("board {n1}x{n2}")));
        }
        Ok(Board { n1, n2, rows: vec![0; n1] })
    }

    pub fn full(n1: usize, n2: usize) -> Result<Self> {
        let mut b = Self::empty(n1, n2)?;
        for r in &mut b.rows {
            *r = crate::graph::mask_below(n2);
        }
        Ok(b)
    }

    /// Parses `"(1,1),(2,2)"`.
    pub fn parse(n1: usize, n2: usize, s: &str) -> Result<Self> {
        let mut cells = Vec::new();
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        for tok in cleaned.split("),").map(|t| t.trim_matches(|c| c == '(' || c == ')')).filter(|t| !t.is_empty()) {
            let (a, b) = tok
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("cell {tok:?} is not of the form (i,j)")))?;
            let a = a.parse().map_err(|_| Error::Parse(format!("bad row in {tok:?}")))?;
            let b = b.parse().map_err(|_| Error::Parse(format!("bad column in {tok:?}")))?;
            cells.push((a, b));
        }
        Self::new(n1, n2, &cells)
    }

    pub fn n1(&self) -> usize {
        self.n1
    }

    pub fn n2(&self) -> usize {
        self.n2
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.rows[i] >> j & 1 == 1
    }

    /// 1-based cells in row-major order.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, &r) in self.rows.iter().enumerate() {
            out.extend(bits(r).map(|j| (i + 1, j + 1)));
        }
        out
    }

    pub fn len(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn transpose(&self) -> Board {
        let mut rows = vec![0u64; self.n2];
        for (i, &r) in self.rows.iter().enumerate() {
            for j in bits(r) {
                rows[j] |= 1 << i;
            }
        }
        Board { n1: self.n2, n2: self.n1, rows }
    }

    /// Cells of the rectangle not in the board.
    pub fn complement(&self) -> Board {
        let full = crate::graph::mask_below(self.n2);
        Board { n1: self.n1, n2: self.n2, rows: self.rows.iter().map(|r| full & !r).collect() }
    }

    /// If the rows are nested under inclusion the board is a Ferrers board up
    /// to permuting rows and columns; returns the row lengths.
    pub fn nested_shape(&self) -> Option<Partition> {
        let mut rows = self.rows.clone();
        rows.sort_by_key(|r| std::cmp::Reverse(r.count_ones()));
        if rows.windows(2).all(|w| w[1] & !w[0] == 0) {
            Some(Partition::from_unsorted(&rows.iter().map(|r| r.count_ones() as usize).collect::<Vec<_>>()))
        } else {
            None
        }
    }

    /// `r_k(B)` for `k = 0..=min(n1, n2)`.
    pub fn rook_numbers(&self) -> Vec<BigInt> {
        let b = if self.n2 <= self.n1 { self.clone() } else { self.transpose() };
        assert!(b.n2 <= MAX_SHORT_SIDE, "rook numbers need a side of at most {MAX_SHORT_SIDE}");
        let mut dp = vec![0u128; 1 << b.n2];
        dp[0] = 1;
        for &row in &b.rows {
            let mut next = dp.clone();
            for (mask, &cnt) in dp.iter().enumerate() {
                if cnt == 0 {
                    continue;
                }
                for j in bits(row & !(mask as u64)) {
                    next[mask | 1 << j] += cnt;
                }
            }
            dp = next;
        }
        let mut r = vec![BigInt::zero(); b.n2 + 1];
        for (mask, &cnt) in dp.iter().enumerate() {
            r[mask.count_ones() as usize] += BigInt::from(cnt);
        }
        r
    }

    /// `h_j(B)`: placements of `min(n1, n2)` non-attacking rooks on the
    /// rectangle with exactly `j` of them on the board.
    pub fn hit_numbers(&self) -> Vec<BigInt> {
        // one rook in every row of the shorter side
        let b = if self.n1 <= self.n2 { self.clone() } else { self.transpose() };
        assert!(b.n2 <= MAX_SHORT_SIDE, "hit numbers need a side of at most {MAX_SHORT_SIDE}");
        let m = b.n1;
        let mut dp: Vec<Vec<u128>> = vec![vec![0; m + 1]; 1 << b.n2];
        dp[0][0] = 1;
        for &row in &b.rows {
            let mut next: Vec<Vec<u128>> = vec![vec![0; m + 1]; 1 << b.n2];
            for (mask, counts) in dp.iter().enumerate() {
                if counts.iter().all(|&c| c == 0) {
                    continue;
                }
                for j in 0..b.n2 {
                    if mask >> j & 1 == 1 {
                        continue;
                    }
                    let hit = (row >> j & 1) as usize;
                    for (t, &c) in counts.iter().enumerate() {
                        if c != 0 {
                            next[mask | 1 << j][t + hit] += c;
                        }
                    }
                }
            }
            dp = next;
        }
        let mut h = vec![BigInt::zero(); m + 1];
        for counts in &dp {
            for (t, &c) in counts.iter().enumerate() {
                h[t] += BigInt::from(c);
            }
        }
        h
    }
}

impl fmt::Display for Board {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.cells().iter().map(|(i, j)| format!("({i},{j})")).collect();
        write!(f, "[{}]x[{}]:{}", self.n1, self.n2, c.join(","))
    }
}

/// The Ferrers board of `mu`: cell `(i, j)` iff `j <= mu_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FerrersBoard {
    mu: Partition,
    n1: usize,
    n2: usize,
}

impl FerrersBoard {
    pub fn new(mu: Partition, n1: usize, n2: usize) -> Result<Self> {
        if mu.len() > n1 || mu.largest() > n2 {
            return Err(Error::InvalidBoard(format!("{mu} does not fit in [{n1}]x[{n2}]")));
        }
        Ok(FerrersBoard { mu, n1, n2 })
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn n1(&self) -> usize {
        self.n1
    }

    pub fn n2(&self) -> usize {
        self.n2
    }

    pub fn board(&self) -> Board {
        let mut cells = Vec::new();
        for (i, &m) in self.mu.parts().iter().enumerate() {
            cells.extend((1..=m).map(|j| (i + 1, j)));
        }
        Board::new(self.n1, self.n2, &cells).expect("shape fits by construction")
    }

    pub fn rook_numbers(&self) -> Vec<BigInt> {
        self.board().rook_numbers()
    }
}

impl FromStr for Board {
    type Err = Error;
    /// `"n1xn2:(i,j),..."`.
    fn from_str(s: &str) -> Result<Self> {
        let (dims, cells) = s.split_once(':').unwrap_or((s, ""));
        let (a, b) = dims
            .trim()
            .trim_matches(|c| c == '[' || c == ']')
            .split_once('x')
            .ok_or_else(|| Error::Parse(format!("board dimensions {dims:?} are not n1xn2")))?;
        let n1 = a.trim_matches(|c| c == '[' || c == ']').parse().map_err(|_| Error::Parse(format!("bad n1 {a:?}")))?;
        let n2 = b.trim_matches(|c| c == '[' || c == ']').parse().map_err(|_| Error::Parse(format!("bad n2 {b:?}")))?;
        Board::parse(n1, n2, cells)
    }
}

/// Cell `(i, j)` iff `i` and `n1 + j` are not adjacent in `g`.
pub fn cobipartite_board(g: &SimpleGraph, n1: usize, n2: usize) -> Result<Board> {
    if n1 + n2 != g.n() {
        return Err(Error::SizeMismatch(n1 + n2, g.n()));
    }
    let first = crate::graph::mask_below(n1);
    let second = crate::graph::mask_below(n1 + n2) & !first;
    if !g.is_clique(first) {
        return Err(Error::CoBipartiteViolation(1, n1));
    }
    if !g.is_clique(second) {
        return Err(Error::CoBipartiteViolation(n1 + 1, n1 + n2));
    }
    let mut b = Board::empty(n1, n2)?;
    for i in 0..n1 {
        b.rows[i] = (!g.neighbors(i) & second) >> n1;
    }
    Ok(b)
}

/// Two cliques `{1..n1}`, `{n1+1..n1+n2}` joined by every cross edge not in `b`.
pub fn cobipartite_graph(b: &Board) -> Result<SimpleGraph> {
    let n = b.n1 + b.n2;
    let mut g = SimpleGraph::empty(n)?;
    for u in 0..n {
        for v in u + 1..n {
            let cross = u < b.n1 && v >= b.n1;
            if !cross || !b.contains(u, v - b.n1) {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// The split `(n1, n2)` making `G(d)` co-bipartite with cliques `{1..n1}` and
/// `{n1+1..n}`, if any. `n1 = h(1)` is the largest candidate and works
/// whenever some split does.
pub fn abelian_split(d: &DyckPath) -> Option<(usize, usize)> {
    let h = d.hessenberg();
    let v = h.values();
    let n = v.len();
    if n == 0 {
        return None;
    }
    let n1 = v[0];
    (n1 == n || v[n1] == n).then_some((n1, n - n1))
}

/// For an abelian path, its Ferrers board `B_mu` with
/// `mu = (n - h(n1), ..., n - h(1))` inside `[n1] x [n2]`.
pub fn abelian_board(d: &DyckPath) -> Option<FerrersBoard> {
    let (n1, n2) = abelian_split(d)?;
    let h = d.hessenberg();
    let n = h.len();
    let mu: Vec<usize> = h.values()[..n1].iter().rev().map(|&x| n - x).collect();
    FerrersBoard::new(Partition::from_unsorted(&mu), n1, n2).ok()
}

/// `T(x; mu) = sum_i (N - i)! r_i(B_mu) (x - 1)^i` with `mu` transposed if
/// needed so that `mu_1 >= l(mu)`, and `N = mu_1`.
pub fn hit_polynomial(mu: &Partition) -> Result<Polynomial> {
    if mu.is_empty() {
        return Err(Error::InvalidPartition("hit polynomial of the empty partition".into()));
    }
    let mu = if mu.largest() >= mu.len() { mu.clone() } else { mu.conjugate() };
    let big_n = mu.largest();
    let r = FerrersBoard::new(mu.clone(), mu.len(), big_n)?.rook_numbers();
    let x_minus_1 = Polynomial::from_ints(&[-1, 1]);
    let mut t = Polynomial::zero();
    for (i, ri) in r.iter().enumerate() {
        let c = BigRational::from_integer(factorial(big_n - i) * ri);
        t = &t + &x_minus_1.pow(i).scale(&c);
    }
    Ok(t)
}

fn ratio(num: usize, den: usize) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// `r_i^2 >= (1+1/i)(1+1/(l-i))(1+1/(mu_1-i)) r_{i-1} r_{i+1}` for `B_mu`.
/// Holds vacuously whenever `r_{i+1} = 0`.
pub fn ulc_inequality_check(mu: &Partition, i: usize) -> Result<bool> {
    if i == 0 {
        return Err(Error::IndexOutOfRange(i));
    }
    let l = mu.len();
    let m1 = mu.largest();
    let r = FerrersBoard::new(mu.clone(), l, m1)?.rook_numbers();
    let r_next = r.get(i + 1).cloned().unwrap_or_else(BigInt::zero);
    if r_next.is_zero() {
        return Ok(true);
    }
    // r_{i+1} != 0 forces i + 1 <= min(l, mu_1)
    let factor = (BigRational::one() + ratio(1, i)) * (BigRational::one() + ratio(1, l - i)) * (BigRational::one() + ratio(1, m1 - i));
    let lhs = BigRational::from_integer(&r[i] * &r[i]);
    let rhs = factor * BigRational::from_integer(&r[i - 1] * r_next);
    Ok(lhs >= rhs)
}

/// Both sides of `r_i^2 >= (1+1/i)(1+2/(n-2i))(1+1/(n-2i)) r_{i-1} r_{i+1}`
/// for an arbitrary rook vector and degree `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawInequality {
    pub lhs: BigRational,
    pub rhs: BigRational,
    pub holds: bool,
}

pub fn uulc2_raw(r: &[BigInt], n: usize, i: usize) -> Result<RawInequality> {
    if i == 0 || i >= r.len() || 2 * i >= n {
        return Err(Error::IndexOutOfRange(i));
    }
    let m = n - 2 * i;
    let factor = (BigRational::one() + ratio(1, i)) * (BigRational::one() + ratio(2, m)) * (BigRational::one() + ratio(1, m));
    let r_next = r.get(i + 1).cloned().unwrap_or_else(BigInt::zero);
    let lhs = BigRational::from_integer(&r[i] * &r[i]);
    let rhs = factor * BigRational::from_integer(&r[i - 1] * r_next);
    Ok(RawInequality { holds: lhs >= rhs, lhs, rhs })
}

/// `2 i! (n1+n2-2i)! r_i <= (i-1)! (n1+n2-2i+2)! r_{i-1}` for any board.
pub fn first_condition_raw(b: &Board, i: usize) -> Result<RawInequality> {
    let r = b.rook_numbers();
    let n = b.n1() + b.n2();
    if i == 0 || 2 * i > n {
        return Err(Error::IndexOutOfRange(i));
    }
    let ri = r.get(i).cloned().unwrap_or_else(BigInt::zero);
    let lhs = BigInt::from(2) * factorial(i) * factorial(n - 2 * i) * ri;
    let r_prev = r.get(i - 1).cloned().unwrap_or_else(BigInt::zero);
    let rhs = factorial(i - 1) * factorial(n - 2 * i + 2) * r_prev;
    Ok(RawInequality {
        holds: lhs <= rhs,
        lhs: BigRational::from_integer(lhs),
        rhs: BigRational::from_integer(rhs),
    })
}

/// Permanent of a square 0-1 matrix by Ryser's formula.
pub fn permanent(a: &[Vec<u8>]) -> Result<BigInt> {
    let n = a.len();
    if a.iter().any(|r| r.len() != n) {
        return Err(Error::NotSquare);
    }
    if a.iter().flatten().any(|&x| x > 1) {
        return Err(Error::NotZeroOne);
    }
    if n > 20 {
        return Err(Error::TooLarge(format!("permanent of a {n}x{n} matrix")));
    }
    if n == 0 {
        return Ok(BigInt::one());
    }
    let cols: Vec<u64> = (0..n).map(|i| (0..n).fold(0u64, |m, j| m | (a[i][j] as u64) << j)).collect();
    let mut total = BigInt::zero();
    for s in 1u64..(1 << n) {
        let prod: i128 = cols.iter().map(|&row| (row & s).count_ones() as i128).product();
        if prod == 0 {
            continue;
        }
        let sign = if (n - s.count_ones() as usize).is_multiple_of(2) { 1 } else { -1 };
        total += BigInt::from(sign * prod);
    }
    Ok(total)
}

/// The board of the support of a square 0-1 matrix.
pub fn support_board(a: &[Vec<u8>]) -> Result<Board> {
    let n = a.len();
    let cells: BTreeSet<(usize, usize)> = (0..n)
        .flat_map(|i| (0..a[i].len()).filter(move |&j| a[i][j] != 0).map(move |j| (i + 1, j + 1)))
        .collect();
    Board::new(n, a.first().map_or(0, Vec::len), &cells.into_iter().collect::<Vec<_>>())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn b22() -> FerrersBoard {
        FerrersBoard::new(Partition::new(vec![2, 2]).unwrap(), 2, 3).unwrap()
    }

    fn diagonal() -> Board {
        Board::new(2, 2, &[(1, 1), (2, 2)]).unwrap()
    }

    #[test]
    fn rook_number_examples() {
        assert_eq!(b22().rook_numbers(), ints(&[1, 4, 2]));
        assert_eq!(Board::empty(3, 2).unwrap().rook_numbers(), ints(&[1, 0, 0]));
        assert_eq!(diagonal().rook_numbers(), ints(&[1, 2, 1]));
    }

    #[test]
    fn hit_number_examples() {
        assert_eq!(Board::full(2, 2).unwrap().hit_numbers(), ints(&[0, 0, 2]));
        assert_eq!(Board::empty(2, 2).unwrap().hit_numbers(), ints(&[2, 0, 0]));
        // the path 1-1, 2-1, 2-2 inside [2]x[2] as a board
        let h = Board::new(2, 2, &[(1, 1), (2, 1), (2, 2)]).unwrap();
        assert_eq!(h.hit_numbers(), ints(&[0, 1, 1]));
        assert_eq!(h.complement().hit_numbers(), ints(&[1, 1, 0]));
    }

    #[test]
    fn hit_polynomial_examples() {
        let p = |v: Vec<usize>| hit_polynomial(&Partition::new(v).unwrap()).unwrap();
        assert_eq!(p(vec![1]), Polynomial::from_ints(&[0, 1]));
        assert_eq!(p(vec![2, 2]), Polynomial::from_ints(&[0, 0, 2]));
        assert_eq!(p(vec![1, 1]), Polynomial::from_ints(&[0, 2]));
    }

    #[test]
    fn ulc_examples() {
        let mu = Partition::new(vec![2, 2]).unwrap();
        assert!(ulc_inequality_check(&mu, 1).unwrap());
        assert!(ulc_inequality_check(&mu, 2).unwrap());
        assert_eq!(ulc_inequality_check(&mu, 0), Err(Error::IndexOutOfRange(0)));
        let raw = uulc2_raw(&diagonal().rook_numbers(), 4, 1).unwrap();
        assert!(!raw.holds);
        assert_eq!(raw.lhs, BigRational::from_integer(4.into()));
        assert_eq!(raw.rhs, BigRational::from_integer(6.into()));
    }

    #[test]
    fn permanent_examples() {
        let id = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
        assert_eq!(permanent(&id).unwrap(), BigInt::one());
        assert_eq!(permanent(&[vec![1; 3], vec![1; 3], vec![1; 3]]).unwrap(), BigInt::from(6));
        let d = vec![vec![1, 0], vec![0, 1]];
        assert_eq!(permanent(&d).unwrap(), diagonal().rook_numbers()[2]);
        assert_eq!(permanent(&[vec![1, 0]]), Err(Error::NotSquare));
        assert_eq!(permanent(&[vec![2]]), Err(Error::NotZeroOne));
    }

    #[test]
    fn cobipartite_running_example() {
        let d: DyckPath = "nnneenneee".parse().unwrap();
        let g = crate::graph::indifference_graph(&d).unwrap();
        let b = cobipartite_board(&g, 2, 3).unwrap();
        assert_eq!(b.nested_shape(), Some(Partition::new(vec![2, 2]).unwrap()));
        assert_eq!(b.rook_numbers(), ints(&[1, 4, 2]));
        assert_eq!(cobipartite_graph(&b).unwrap(), g);
        assert_eq!(abelian_split(&d), Some((3, 2)));
        let fb = abelian_board(&d).unwrap();
        assert_eq!(fb.rook_numbers(), ints(&[1, 4, 2]));
        assert!(cobipartite_board(&g, 3, 2).is_ok());
        assert_eq!(cobipartite_board(&g, 1, 4), Err(Error::CoBipartiteViolation(2, 5)));
    }

    #[test]
    fn cycle_and_complete_boards() {
        // C4 = 1-2-3-4-1 with parts {1,2}, {3,4}
        let c4 = SimpleGraph::from_edges(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        assert_eq!(cobipartite_board(&c4, 2, 2).unwrap(), diagonal());
        let k5 = SimpleGraph::complete(5).unwrap();
        assert!(cobipartite_board(&k5, 2, 3).unwrap().is_empty());
    }

    #[test]
    fn nonabelian_paths_have_no_split() {
        assert_eq!(abelian_split(&DyckPath::staircase(3)), None);
        assert_eq!(abelian_split(&DyckPath::full(3)), Some((3, 0)));
    }

    fn random_board(rng: &mut ChaCha8Rng, n1: usize, n2: usize) -> Board {
        let cells: Vec<(usize, usize)> = (1..=n1)
            .flat_map(|i| (1..=n2).map(move |j| (i, j)))
            .filter(|_| rng.gen_bool(0.5))
            .collect::<Vec<_>>();
        Board::new(n1, n2, &cells).unwrap()
    }

    #[test]
    fn permanent_equals_top_rook_number() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let n = rng.gen_range(1..=6);
            let a: Vec<Vec<u8>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(0..2)).collect()).collect();
            let b = support_board(&a).unwrap();
            assert_eq!(permanent(&a).unwrap(), b.rook_numbers()[n]);
        }
    }

    #[test]
    fn hit_numbers_sum_and_match_rook_expansion() {
        for n1 in 0..=5 {
            for n2 in 0..=5 {
                let mut rng = ChaCha8Rng::seed_from_u64((n1 * 10 + n2) as u64);
                for _ in 0..6 {
                    let b = random_board(&mut rng, n1, n2);
                    let h = b.hit_numbers();
                    let (m, big) = (n1.min(n2), n1.max(n2));
                    let total: BigInt = h.iter().sum();
                    assert_eq!(total, factorial(big) / factorial(big - m));
                    // sum_j h_j C(j,k) = r_k (N-k)!/(N-m)!
                    let r = b.rook_numbers();
                    for k in 0..=m {
                        let lhs: BigInt = h
                            .iter()
                            .enumerate()
                            .filter(|(j, _)| *j >= k)
                            .map(|(j, hj)| hj * factorial(j) / (factorial(k) * factorial(j - k)))
                            .sum();
                        assert_eq!(lhs, &r[k] * factorial(big - k) / factorial(big - m));
                    }
                }
            }
        }
    }

    #[test]
    fn first_condition_holds_for_all_small_boards() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..300 {
            let n1 = rng.gen_range(1..=5);
            let n2 = rng.gen_range(1..=5);
            let b = random_board(&mut rng, n1, n2);
            for i in 1..=(n1 + n2) / 2 {
                assert!(first_condition_raw(&b, i).unwrap().holds, "{b} i={i}");
            }
        }
    }

    #[test]
    fn ulc_holds_on_all_ferrers_shapes_up_to_7() {
        for n in 1..=14 {
            for mu in Partition::all(n) {
                if mu.largest() > 7 || mu.len() > 7 {
                    continue;
                }
                for i in 1..=mu.len().min(mu.largest()) {
                    assert!(ulc_inequality_check(&mu, i).unwrap(), "{mu} i={i}");
                }
            }
        }
    }

    #[test]
    fn hit_polynomials_of_random_ferrers_boards_are_real_rooted() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let l = rng.gen_range(1..=7);
            let mut parts: Vec<usize> = (0..l).map(|_| rng.gen_range(1..=7)).collect();
            parts.sort_unstable_by(|a, b| b.cmp(a));
            let mu = Partition::new(parts).unwrap();
            assert!(hit_polynomial(&mu).unwrap().is_real_rooted().unwrap(), "{mu}");
        }
    }

    #[test]
    fn parsing_boards() {
        let b: Board = "2x2:(1,1),(2,2)".parse().unwrap();
        assert_eq!(b, diagonal());
        assert!(Board::parse(2, 2, "(3,1)").is_err());
        let json = serde_json::to_string(&b).unwrap();
        assert_eq!(serde_json::from_str::<Board>(&json).unwrap(), b);
    }

    proptest! {
        #[test]
        fn rook_numbers_invariant_under_transpose(cells in prop::collection::btree_set((1usize..=4, 1usize..=5), 0..12)) {
            let b = Board::new(4, 5, &cells.into_iter().collect::<Vec<_>>()).unwrap();
            prop_assert_eq!(b.rook_numbers(), b.transpose().rook_numbers());
            prop_assert_eq!(b.rook_numbers()[1].clone(), BigInt::from(b.len()));
        }
    }
}
