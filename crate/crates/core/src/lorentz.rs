//! Exact checks of the Lorentzian property, discrete log-concavity, the block
//! matrices of the abelian case, and random real-rootedness probes.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matrix::SymmetricIntMatrix;
use crate::newton::{expand_support, m_convex_witness, ExchangeWitness};
use crate::partition::{factorial, simplex_points, Partition, WeightVector};
use crate::poly::{FactoredPolynomial, Polynomial};
use crate::rook::FerrersBoard;
use crate::symfunc::{Basis, SymFunc};

fn ser_big<S: Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

/// Monomial-basis copy of `f` with nonnegative integer coefficients.
fn integral_monomial(f: &SymFunc) -> Result<SymFunc> {
    let f = f.to_basis(Basis::Monomial)?;
    for (lambda, c) in f.terms() {
        if c.is_negative() {
            return Err(Error::NegativeCoefficient(lambda.to_string()));
        }
        if !c.is_integer() {
            return Err(Error::NotIntegral(lambda.to_string()));
        }
    }
    Ok(f)
}

fn coefficient(f: &SymFunc, alpha: &WeightVector) -> BigInt {
    f.monomial_coefficient(alpha).to_integer()
}

/// `H_alpha = ((alpha + e_r + e_s)! c_{alpha + e_r + e_s})_{r,s}` for `f` in
/// `k` variables.
pub fn hessian_at(f: &SymFunc, k: usize, alpha: &WeightVector) -> Result<SymmetricIntMatrix> {
    let f = integral_monomial(f)?;
    let n = f.degree();
    if n < 2 {
        return Err(Error::DegreeTooSmall(n));
    }
    if alpha.len() != k {
        return Err(Error::SizeMismatch(alpha.len(), k));
    }
    if alpha.sum() + 2 != n {
        return Err(Error::SizeMismatch(alpha.sum() + 2, n));
    }
    Ok(hessian_unchecked(&f, alpha))
}

fn hessian_unchecked(f: &SymFunc, alpha: &WeightVector) -> SymmetricIntMatrix {
    let k = alpha.len();
    let rows = (0..k)
        .map(|r| {
            (0..k)
                .map(|s| {
                    let w = alpha.with_added(r, s);
                    w.factorial() * coefficient(f, &w)
                })
                .collect()
        })
        .collect();
    SymmetricIntMatrix::new(rows).expect("Hessian is symmetric")
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LorentzOptions {
    /// Every `alpha` of the simplex rather than one per partition.
    pub all_alphas: bool,
    /// Keep going after the first failure and list them all.
    pub exhaustive: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LorentzWitness {
    Exchange(ExchangeWitness),
    Hessian { alpha: WeightVector, positive_eigenvalues: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LorentzReport {
    pub lorentzian: bool,
    pub m_convex: bool,
    pub hessians_checked: usize,
    pub max_positive_eigenvalues: usize,
    pub witness: Option<LorentzWitness>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<LorentzWitness>,
}

pub fn is_lorentzian(f: &SymFunc, k: usize) -> Result<LorentzReport> {
    is_lorentzian_with(f, k, LorentzOptions::default())
}

/// Support M-convex and every Hessian with at most one positive eigenvalue.
/// By symmetry one `alpha` per partition of `n - 2` suffices; polynomials of
/// degree below 2 only need the support condition.
pub fn is_lorentzian_with(f: &SymFunc, k: usize, opts: LorentzOptions) -> Result<LorentzReport> {
    let f = integral_monomial(f)?;
    let n = f.degree();
    let support = expand_support(&f, k)?;
    let exchange = m_convex_witness(&support);
    let mut report = LorentzReport {
        lorentzian: exchange.is_none(),
        m_convex: exchange.is_none(),
        hessians_checked: 0,
        max_positive_eigenvalues: 0,
        witness: exchange.map(LorentzWitness::Exchange),
        failures: Vec::new(),
    };
    if opts.exhaustive {
        report.failures.extend(report.witness.clone());
    }
    if n < 2 || (!report.m_convex && !opts.exhaustive) {
        return Ok(report);
    }
    let mut alphas: Vec<WeightVector> = if opts.all_alphas {
        simplex_points(k, n - 2)
    } else {
        Partition::with_max_parts(n - 2, k).iter().filter_map(|p| p.padded(k)).collect()
    };
    alphas.sort();
    let counts: Vec<usize> = alphas.par_iter().map(|a| hessian_unchecked(&f, a).count_positive_eigenvalues()).collect();
    for (alpha, &pos) in alphas.iter().zip(&counts) {
        report.hessians_checked += 1;
        report.max_positive_eigenvalues = report.max_positive_eigenvalues.max(pos);
        if pos > 1 {
            let w = LorentzWitness::Hessian { alpha: alpha.clone(), positive_eigenvalues: pos };
            report.lorentzian = false;
            if report.witness.is_none() {
                report.witness = Some(w.clone());
            }
            if !opts.exhaustive {
                break;
            }
            report.failures.push(w);
        }
    }
    Ok(report)
}

/// `(alpha, i, j)` with `i, j` 1-based where the exchange inequality fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LogConcavityWitness {
    pub alpha: WeightVector,
    pub i: usize,
    pub j: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LogConcavityReport {
    /// `(alpha! c_alpha)^2 >= (alpha+e_i-e_j)! (alpha-e_i+e_j)! c_+ c_-`.
    pub normalized: bool,
    /// `c_alpha^2 >= c_+ c_-`.
    pub unnormalized: bool,
    pub normalized_witness: Option<LogConcavityWitness>,
    pub unnormalized_witness: Option<LogConcavityWitness>,
}

/// Both log-concavity inequalities over every point of the simplex and every
/// pair of coordinates, scanning in decreasing lexicographic order.
pub fn discrete_log_concavity(f: &SymFunc, k: usize) -> Result<LogConcavityReport> {
    let f = integral_monomial(f)?;
    let points = simplex_points(k, f.degree());
    let failures: Vec<(Option<(usize, usize)>, Option<(usize, usize)>)> = points
        .par_iter()
        .map(|alpha| {
            let c = coefficient(&f, alpha);
            let fact = alpha.factorial();
            let (mut norm, mut plain) = (None, None);
            for i in 0..k {
                for j in 0..k {
                    if i == j || alpha.entries()[i] == 0 || alpha.entries()[j] == 0 {
                        continue;
                    }
                    let plus = alpha.shifted(i, j).expect("positive");
                    let minus = alpha.shifted(j, i).expect("positive");
                    let (cp, cm) = (coefficient(&f, &plus), coefficient(&f, &minus));
                    if plain.is_none() && &c * &c < &cp * &cm {
                        plain = Some((i + 1, j + 1));
                    }
                    let lhs = (&fact * &c) * (&fact * &c);
                    if norm.is_none() && lhs < plus.factorial() * minus.factorial() * &cp * &cm {
                        norm = Some((i + 1, j + 1));
                    }
                }
            }
            (norm, plain)
        })
        .collect();
    let first = |pick: fn(&(Option<(usize, usize)>, Option<(usize, usize)>)) -> Option<(usize, usize)>| {
        points.iter().zip(&failures).find_map(|(alpha, f)| {
            pick(f).map(|(i, j)| LogConcavityWitness { alpha: alpha.clone(), i, j })
        })
    };
    let normalized_witness = first(|f| f.0);
    let unnormalized_witness = first(|f| f.1);
    Ok(LogConcavityReport {
        normalized: normalized_witness.is_none(),
        unnormalized: unnormalized_witness.is_none(),
        normalized_witness,
        unnormalized_witness,
    })
}

/// `M_{p,q}(a,b,c)`: a block of size `p+1` with zero diagonal and `a` off the
/// diagonal, a block of size `q+1` with `b` on and `c` off the diagonal, and
/// `b` between them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockMatrixParams {
    pub p: usize,
    pub q: usize,
    #[serde(serialize_with = "ser_big")]
    pub a: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub b: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub c: BigInt,
}

impl BlockMatrixParams {
    pub fn new(p: usize, q: usize, a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>) -> Self {
        BlockMatrixParams { p, q, a: a.into(), b: b.into(), c: c.into() }
    }
}

/// The block pattern with arbitrary block sizes, either of which may be 0.
pub fn block_matrix_sized(first: usize, second: usize, a: &BigInt, b: &BigInt, c: &BigInt) -> SymmetricIntMatrix {
    let k = first + second;
    let rows = (0..k)
        .map(|r| {
            (0..k)
                .map(|s| match (r < first, s < first) {
                    (true, true) if r == s => BigInt::zero(),
                    (true, true) => a.clone(),
                    (false, false) if r == s => b.clone(),
                    (false, false) => c.clone(),
                    _ => b.clone(),
                })
                .collect()
        })
        .collect();
    SymmetricIntMatrix::new(rows).expect("pattern is symmetric")
}

pub fn block_matrix(params: &BlockMatrixParams) -> SymmetricIntMatrix {
    block_matrix_sized(params.p + 1, params.q + 1, &params.a, &params.b, &params.c)
}

/// `(x+a)^p (x-b+c)^q (x^2 - x(pa+b+qc) - (p+1)(q+1)b^2 + pa(b+qc))`,
/// checked against the characteristic polynomial of the explicit matrix.
pub fn block_charpoly(params: &BlockMatrixParams) -> FactoredPolynomial {
    let BlockMatrixParams { p, q, a, b, c } = params;
    let (pb, qb) = (BigInt::from(*p), BigInt::from(*q));
    let lin = |c0: BigInt| Polynomial::from_ints(&[c0, BigInt::one()]);
    let quad = Polynomial::from_ints(&[
        -(&pb + 1u32) * (&qb + 1u32) * b * b + &pb * a * (b + &qb * c),
        -(&pb * a + b + &qb * c),
        BigInt::one(),
    ]);
    let fp = FactoredPolynomial {
        unit: BigRational::one(),
        factors: vec![(lin(a.clone()), *p), (lin(c - b), *q), (quad, 1)],
    };
    assert_eq!(fp.expand(), block_matrix(params).charpoly(), "block determinant identity");
    fp
}

/// `alpha = (2^{i-1}, 1^{n-2i}, 0^{k-n+i+1})`, when it fits in `k` variables.
pub fn abelian_alpha(n: usize, k: usize, i: usize) -> Option<WeightVector> {
    if i == 0 || 2 * i > n || k + i + 1 < n {
        return None;
    }
    let mut v = vec![2; i - 1];
    v.extend(std::iter::repeat_n(1, n - 2 * i));
    v.extend(std::iter::repeat_n(0, k + i + 1 - n));
    Some(WeightVector::new(v))
}

/// The constants of the block `H'_alpha` for a given `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AbelianRow {
    pub i: usize,
    #[serde(serialize_with = "ser_big")]
    pub a: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub b: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub c: BigInt,
    /// `b - c <= 0`.
    pub first: bool,
    /// `-(n-2i)(k-n+i+1) b^2 + (n-2i-1) a (b + (k-n+i) c) <= 0`.
    pub second: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AbelianCertificate {
    pub holds: bool,
    pub n: usize,
    pub k: usize,
    pub rows: Vec<AbelianRow>,
}

fn abelian_constants(r: &[BigInt], n: usize, i: usize) -> (BigInt, BigInt, BigInt) {
    let rk = |j: usize| r.get(j).cloned().unwrap_or_default();
    let term = |j: usize| -> BigInt {
        if j == 0 || 2 * j > n {
            return BigInt::zero();
        }
        BigInt::from(2).pow(j as u32) * factorial(j) * factorial(n - 2 * j) * rk(j)
    };
    // c uses 2^{i-1} (i-1)! (n-2i+2)! r_{i-1}, which is term(i-1) except at i = 1
    let c = if i == 1 { factorial(n) * rk(0) } else { term(i - 1) };
    (term(i + 1), term(i), c)
}

/// The inequalities certifying at most one positive eigenvalue for every
/// Hessian of `X_{G(d)}` when `G(d)` has Ferrers board `board`.
pub fn abelian_certificate(board: &FerrersBoard, k: usize) -> AbelianCertificate {
    let n = board.n1() + board.n2();
    let r = board.rook_numbers();
    let mut rows = Vec::new();
    for i in 1..=n / 2 {
        if abelian_alpha(n, k, i).is_none() {
            continue;
        }
        let (a, b, c) = abelian_constants(&r, n, i);
        let first = b <= c;
        let (ni, zi) = (BigInt::from(n - 2 * i), BigInt::from(k + i + 1 - n));
        let lhs: BigInt = -(&ni * &zi * &b * &b) + (&ni - 1u32) * &a * (&b + (&zi - 1u32) * &c);
        rows.push(AbelianRow { i, a, b, c, first, second: !lhs.is_positive() });
    }
    AbelianCertificate { holds: rows.iter().all(|r| r.first && r.second), n, k, rows }
}

/// `H_alpha` predicted for the abelian `alpha` of index `i`: a zero block
/// of size `i-1` beside the block matrix with the certificate's constants.
pub fn abelian_hessian_model(board: &FerrersBoard, k: usize, i: usize) -> Option<SymmetricIntMatrix> {
    let n = board.n1() + board.n2();
    abelian_alpha(n, k, i)?;
    let (a, b, c) = abelian_constants(&board.rook_numbers(), n, i);
    let block = block_matrix_sized(n - 2 * i, k + i + 1 - n, &a, &b, &c);
    let z = i - 1;
    let rows = (0..k)
        .map(|r| {
            (0..k)
                .map(|s| if r < z || s < z { BigInt::zero() } else { block.get(r - z, s - z).clone() })
                .collect()
        })
        .collect();
    SymmetricIntMatrix::new(rows).ok()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StabilityBounds {
    pub u: (i64, i64),
    pub v: (i64, i64),
}

impl Default for StabilityBounds {
    fn default() -> Self {
        StabilityBounds { u: (-5, 5), v: (1, 5) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilityFailure {
    pub u: Vec<i64>,
    pub v: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilityReport {
    pub trials: usize,
    pub real_rooted: usize,
    pub failures: Vec<StabilityFailure>,
}

pub fn probe_stability(f: &SymFunc, k: usize, trials: usize, seed: u64) -> Result<StabilityReport> {
    probe_stability_with(f, k, trials, seed, StabilityBounds::default())
}

/// `t -> f(u + t v)` as an exact polynomial.
pub fn restrict_to_line(f: &SymFunc, u: &[i64], v: &[i64]) -> Result<Polynomial> {
    let f = f.to_basis(Basis::Monomial)?;
    let k = u.len();
    if v.len() != k {
        return Err(Error::SizeMismatch(v.len(), k));
    }
    let n = f.degree();
    let powers: Vec<Vec<Polynomial>> = (0..k)
        .map(|i| {
            let line = Polynomial::from_ints(&[u[i], v[i]]);
            let mut out = vec![Polynomial::one()];
            for e in 1..=n {
                out.push(&out[e - 1] * &line);
            }
            out
        })
        .collect();
    let support = expand_support(&f, k)?;
    let mut acc = Polynomial::zero();
    for alpha in support.points() {
        let term = alpha
            .entries()
            .iter()
            .enumerate()
            .fold(Polynomial::constant(f.monomial_coefficient(alpha)), |p, (i, &e)| &p * &powers[i][e]);
        acc = &acc + &term;
    }
    Ok(acc)
}

/// Real-rootedness of random line restrictions `f(u + t v)` with `v > 0`,
/// evidence for stability. The polynomial is nonzero whenever `f` has a
/// positive coefficient.
pub fn probe_stability_with(
    f: &SymFunc,
    k: usize,
    trials: usize,
    seed: u64,
    bounds: StabilityBounds,
) -> Result<StabilityReport> {
    if trials == 0 {
        return Err(Error::InvalidConfig("at least one trial".into()));
    }
    if bounds.v.0 < 1 || bounds.u.0 > bounds.u.1 || bounds.v.0 > bounds.v.1 {
        return Err(Error::InvalidConfig("bounds must be ordered with v >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draws: Vec<(Vec<i64>, Vec<i64>)> = (0..trials)
        .map(|_| {
            let u = (0..k).map(|_| rng.gen_range(bounds.u.0..=bounds.u.1)).collect();
            let v = (0..k).map(|_| rng.gen_range(bounds.v.0..=bounds.v.1)).collect();
            (u, v)
        })
        .collect();
    let verdicts: Vec<Result<bool>> = draws
        .par_iter()
        .map(|(u, v)| {
            let p = restrict_to_line(f, u, v)?;
            if p.is_zero() {
                return Ok(true);
            }
            p.is_real_rooted()
        })
        .collect();
    let mut report = StabilityReport { trials, real_rooted: 0, failures: Vec::new() };
    for ((u, v), ok) in draws.into_iter().zip(verdicts) {
        if ok? {
            report.real_rooted += 1;
        } else {
            report.failures.push(StabilityFailure { u, v });
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::csf::{csf_bruteforce, csf_cobipartite};
    use crate::dyck::{enumerate_dyck, HessenbergFunction};
    use crate::graph::{indifference_graph, SimpleGraph};
    use crate::rook::{abelian_board, Board};

    fn running() -> SymFunc {
        let d = HessenbergFunction::new(vec![3, 3, 5, 5, 5]).unwrap().to_dyck();
        csf_bruteforce(&indifference_graph(&d).unwrap()).unwrap()
    }

    fn c4() -> SymFunc {
        csf_bruteforce(&SimpleGraph::parse_edges(4, "1-2,2-3,3-4,1-4").unwrap()).unwrap()
    }

    fn wv(v: &[usize]) -> WeightVector {
        WeightVector::new(v.to_vec())
    }

    fn int(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn c4_hessian() {
        let h = hessian_at(&c4(), 5, &wv(&[1, 1, 0, 0, 0])).unwrap();
        let expected = SymmetricIntMatrix::from_i64(&[
            vec![0, 8, 8, 8, 8],
            vec![8, 0, 8, 8, 8],
            vec![8, 8, 8, 24, 24],
            vec![8, 8, 24, 8, 24],
            vec![8, 8, 24, 24, 8],
        ])
        .unwrap();
        assert_eq!(h, expected);
        assert_eq!(h.count_positive_eigenvalues(), 2);
        let report = is_lorentzian(&c4(), 5).unwrap();
        assert!(!report.lorentzian);
        assert!(report.m_convex);
        assert_eq!(report.witness, Some(LorentzWitness::Hessian { alpha: wv(&[1, 1, 0, 0, 0]), positive_eigenvalues: 2 }));
        let fp = block_charpoly(&BlockMatrixParams::new(1, 2, 8, 8, 24));
        assert_eq!(fp.expand(), h.charpoly());
        assert_eq!(block_matrix(&BlockMatrixParams::new(1, 2, 8, 8, 24)), h);
    }

    #[test]
    fn k2_hessian() {
        let f = SymFunc::from_int_terms(2, Basis::Monomial, &[(2, &[1, 1])]).unwrap();
        let h = hessian_at(&f, 2, &wv(&[0, 0])).unwrap();
        assert_eq!(h, SymmetricIntMatrix::from_i64(&[vec![0, 2], vec![2, 0]]).unwrap());
        let f1 = SymFunc::from_int_terms(1, Basis::Monomial, &[(1, &[1])]).unwrap();
        assert_eq!(hessian_at(&f1, 2, &wv(&[0, 0])), Err(Error::DegreeTooSmall(1)));
        assert!(is_lorentzian(&f1, 3).unwrap().lorentzian);
        let neg = SymFunc::from_int_terms(2, Basis::Monomial, &[(-1, &[1, 1])]).unwrap();
        assert!(matches!(is_lorentzian(&neg, 2), Err(Error::NegativeCoefficient(_))));
    }

    #[test]
    fn lorentzian_examples() {
        for k in 1..=6 {
            let r = is_lorentzian(&running(), k).unwrap();
            assert!(r.lorentzian, "k={k}");
            assert!(r.max_positive_eigenvalues <= 1);
        }
        for n in 2..=5 {
            let kn = SymFunc::from_int_terms(n, Basis::Monomial, &[(factorial(n).try_into().unwrap(), &vec![1; n])]).unwrap();
            assert!(is_lorentzian(&kn, n).unwrap().lorentzian);
        }
        let full = is_lorentzian_with(&c4(), 5, LorentzOptions { all_alphas: true, exhaustive: true }).unwrap();
        assert!(!full.lorentzian);
        // every rearrangement of (1,1,0,0,0) fails
        assert_eq!(full.failures.len(), 10);
    }

    #[test]
    fn log_concavity_examples() {
        let r = discrete_log_concavity(&running(), 5).unwrap();
        assert!(r.normalized);
        let f = SymFunc::from_int_terms(2, Basis::Monomial, &[(1, &[2]), (1, &[1, 1])]).unwrap();
        assert!(discrete_log_concavity(&f, 2).unwrap().unnormalized);
        let bad = SymFunc::from_int_terms(2, Basis::Monomial, &[(1, &[2])]).unwrap();
        let w = discrete_log_concavity(&bad, 2).unwrap();
        assert!(!w.unnormalized);
        assert_eq!(w.unnormalized_witness, Some(LogConcavityWitness { alpha: wv(&[1, 1]), i: 1, j: 2 }));
        let c = discrete_log_concavity(&c4(), 5).unwrap();
        assert!(c.normalized && c.unnormalized);
    }

    #[test]
    fn block_identity_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(101);
        for _ in 0..200 {
            let params = BlockMatrixParams::new(
                rng.gen_range(0..=4),
                rng.gen_range(0..=4),
                rng.gen_range(-20..=20),
                rng.gen_range(-20..=20),
                rng.gen_range(-20..=20),
            );
            let m = block_matrix(&params);
            assert_eq!(block_charpoly(&params).expand(), m.charpoly_by_interpolation());
        }
        let zero = block_charpoly(&BlockMatrixParams::new(0, 0, 5, 3, 7)).expand();
        assert_eq!(zero, Polynomial::from_ints(&[-9, -3, 1]));
    }

    #[test]
    fn abelian_paths() {
        for n in 2..=6 {
            for d in enumerate_dyck(n).unwrap() {
                let Some(board) = abelian_board(&d) else { continue };
                let x = csf_bruteforce(&indifference_graph(&d).unwrap()).unwrap();
                for k in 2..=n + 2 {
                    let cert = abelian_certificate(&board, k);
                    assert!(cert.holds, "{d} k={k}");
                    assert!(is_lorentzian(&x, k).unwrap().lorentzian, "{d} k={k}");
                    for i in 1..=n / 2 {
                        if let Some(alpha) = abelian_alpha(n, k, i) {
                            let h = hessian_at(&x, k, &alpha).unwrap();
                            assert_eq!(Some(h), abelian_hessian_model(&board, k, i), "{d} k={k} i={i}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn certificate_rows() {
        let board = FerrersBoard::new(Partition::new(vec![2, 2]).unwrap(), 2, 3).unwrap();
        let cert = abelian_certificate(&board, 6);
        assert!(cert.holds);
        assert_eq!(cert.rows.len(), 2);
        // r = (1, 4, 2): b = 2 * 1 * 3! * 4
        assert_eq!(cert.rows[0].b, int(48));
        assert_eq!(cert.rows[0].c, int(120));
        assert_eq!(cert.rows[0].a, int(4 * 2 * 2));
        let x = csf_cobipartite(&board.board()).unwrap();
        assert!(is_lorentzian(&x, 6).unwrap().lorentzian);
    }

    #[test]
    fn diagonal_board_breaks_second_condition() {
        // the co-bipartite graph of the diagonal board is C4
        let b = Board::new(2, 2, &[(1, 1), (2, 2)]).unwrap();
        assert_eq!(csf_cobipartite(&b).unwrap(), c4());
        let r = b.rook_numbers();
        let (a, bb, c) = abelian_constants(&r, 4, 1);
        assert_eq!((a, bb.clone(), c), (int(8), int(8), int(24)));
    }

    #[test]
    fn hessian_equivariance() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let fs = [running(), c4()];
        for t in 0..50 {
            let f = &fs[t % 2];
            let n = f.degree();
            let k = rng.gen_range(2..=5);
            let pts = simplex_points(k, n - 2);
            let alpha = pts[rng.gen_range(0..pts.len())].clone();
            let mut perm: Vec<usize> = (0..k).collect();
            for i in (1..k).rev() {
                perm.swap(i, rng.gen_range(0..=i));
            }
            let mut moved = vec![0; k];
            for i in 0..k {
                moved[perm[i]] = alpha.entries()[i];
            }
            let h = hessian_at(f, k, &alpha).unwrap();
            let hp = hessian_at(f, k, &WeightVector::new(moved)).unwrap();
            assert_eq!(hp, h.permuted(&perm));
            assert_eq!(hp.count_positive_eigenvalues(), h.count_positive_eigenvalues());
        }
    }

    #[test]
    fn lorentzian_implies_log_concave() {
        for n in 2..=5 {
            for d in enumerate_dyck(n).unwrap() {
                let x = csf_bruteforce(&indifference_graph(&d).unwrap()).unwrap();
                for k in 2..=4 {
                    if is_lorentzian(&x, k).unwrap().lorentzian {
                        assert!(discrete_log_concavity(&x, k).unwrap().normalized, "{d} k={k}");
                    }
                }
            }
        }
    }

    #[test]
    fn stability_probes() {
        let r = probe_stability(&running(), 4, 100, 1).unwrap();
        assert_eq!(r.real_rooted, 100);
        let sq = SymFunc::from_int_terms(2, Basis::Monomial, &[(1, &[2]), (2, &[1, 1])]).unwrap();
        assert_eq!(probe_stability(&sq, 2, 50, 3).unwrap().real_rooted, 50);
        assert_eq!(restrict_to_line(&sq, &[1, -1], &[1, 1]).unwrap(), Polynomial::from_ints(&[0, 0, 4]));
        // a non-stable quadratic form: x^2 + y^2 has no real roots along (1,0) + t(0,1)
        let circle = SymFunc::from_int_terms(2, Basis::Monomial, &[(1, &[2])]).unwrap();
        let p = restrict_to_line(&circle, &[1, 0], &[0, 1]).unwrap();
        assert!(!p.is_real_rooted().unwrap());
        assert!(probe_stability(&running(), 4, 0, 1).is_err());
    }
}
