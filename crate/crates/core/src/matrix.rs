//! Exact integer matrices: characteristic polynomials, fraction-free
//! determinants and positive-eigenvalue counts for symmetric matrices.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::Polynomial;

/// A square integer matrix checked to be symmetric.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SymmetricIntMatrix {
    #[serde(serialize_with = "serialize_rows")]
    rows: Vec<Vec<BigInt>>,
}

fn serialize_rows<S: serde::Serializer>(rows: &[Vec<BigInt>], s: S) -> std::result::Result<S::Ok, S::Error> {
    let strs: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
    strs.serialize(s)
}

impl SymmetricIntMatrix {
    pub fn new(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let k = rows.len();
        if rows.iter().any(|r| r.len() != k) {
            return Err(Error::NotSquare);
        }
        for i in 0..k {
            for j in i + 1..k {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::NotSymmetric);
                }
            }
        }
        Ok(SymmetricIntMatrix { rows })
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }

    pub fn zero(k: usize) -> Self {
        SymmetricIntMatrix { rows: vec![vec![BigInt::zero(); k]; k] }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, r: usize, s: usize) -> &BigInt {
        &self.rows[r][s]
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    /// `P A P^T` for the permutation sending index `i` to `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let k = self.dim();
        let mut rows = vec![vec![BigInt::zero(); k]; k];
        for i in 0..k {
            for j in 0..k {
                rows[perm[i]][perm[j]] = self.rows[i][j].clone();
            }
        }
        SymmetricIntMatrix { rows }
    }

    /// `det(xI - A)` by Faddeev-LeVerrier in exact integers.
    pub fn charpoly(&self) -> Polynomial {
        Polynomial::from_ints(&charpoly_faddeev(&self.rows))
    }

    /// `det(xI - A)` by interpolating fraction-free determinants at `k+1` points.
    pub fn charpoly_by_interpolation(&self) -> Polynomial {
        let k = self.dim();
        let points: Vec<(BigInt, BigInt)> = (0..=k as i64)
            .map(|t| {
                let t = BigInt::from(t);
                let m: Vec<Vec<BigInt>> = (0..k)
                    .map(|i| {
                        (0..k)
                            .map(|j| {
                                let d = if i == j { t.clone() } else { BigInt::zero() };
                                d - &self.rows[i][j]
                            })
                            .collect()
                    })
                    .collect();
                (t, det_bareiss(&m))
            })
            .collect();
        interpolate(&points)
    }

    /// Number of positive eigenvalues, with multiplicity. The characteristic
    /// polynomial of a symmetric matrix is real-rooted, so after dividing out
    /// the zero roots the Descartes sign count is exact.
    pub fn count_positive_eigenvalues(&self) -> usize {
        let cp = self.charpoly();
        let m = cp.x_valuation();
        let shifted = Polynomial::new(cp.coeffs()[m..].to_vec());
        shifted.descartes_sign_changes()
    }
}

impl fmt::Display for SymmetricIntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            let s: Vec<String> = r.iter().map(|x| format!("{x:>4}")).collect();
            writeln!(f, "[{}]", s.join(" "))?;
        }
        Ok(())
    }
}

/// Coefficients of `det(xI - A)`, ascending; monic of degree `k`.
pub fn charpoly_faddeev(a: &[Vec<BigInt>]) -> Vec<BigInt> {
    let k = a.len();
    let mut c = vec![BigInt::zero(); k + 1];
    c[k] = BigInt::one();
    // M_0 = 0, c_k = 1; M_j = A M_{j-1} + c_{k-j+1} I, c_{k-j} = -tr(A M_j) / j
    let mut m = vec![vec![BigInt::zero(); k]; k];
    for j in 1..=k {
        let am = mat_mul(a, &m);
        let mut next = am;
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &c[k - j + 1];
        }
        let prod = mat_mul(a, &next);
        let tr: BigInt = (0..k).map(|i| prod[i][i].clone()).sum();
        let (q, r) = tr.div_rem(&BigInt::from(j));
        debug_assert!(r.is_zero());
        c[k - j] = -q;
        m = next;
    }
    c
}

fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let k = a.len();
    let mut out = vec![vec![BigInt::zero(); k]; k];
    for i in 0..k {
        for l in 0..k {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..k {
                out[i][j] += &a[i][l] * &b[l][j];
            }
        }
    }
    out
}

/// Fraction-free Gaussian elimination with row pivoting.
pub fn det_bareiss(m: &[Vec<BigInt>]) -> BigInt {
    let k = m.len();
    if k == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for p in 0..k {
        if a[p][p].is_zero() {
            match (p + 1..k).find(|&r| !a[r][p].is_zero()) {
                Some(r) => {
                    a.swap(p, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in p + 1..k {
            for j in p + 1..k {
                let v = &a[i][j] * &a[p][p] - &a[i][p] * &a[p][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[p][p].clone();
    }
    sign * &a[k - 1][k - 1]
}

/// Lagrange interpolation through integer points.
fn interpolate(points: &[(BigInt, BigInt)]) -> Polynomial {
    let mut out = Polynomial::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut basis = Polynomial::one();
        let mut denom = BigInt::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i != j {
                basis = &basis * &Polynomial::linear_root(BigRational::from_integer(xj.clone()));
                denom *= xi - xj;
            }
        }
        out = &out + &basis.scale(&BigRational::new(yi.clone(), denom));
    }
    out
}
