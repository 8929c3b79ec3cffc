//! Homogeneous symmetric functions in the monomial, Schur and elementary
//! bases with exact rational coefficients.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::{Partition, WeightVector};

/// Largest degree accepted by the basis conversions.
pub const MAX_DEGREE: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Basis {
    #[serde(rename = "m")]
    Monomial,
    #[serde(rename = "s")]
    Schur,
    #[serde(rename = "e")]
    Elementary,
}

impl Basis {
    pub fn letter(self) -> char {
        match self {
            Basis::Monomial => 'm',
            Basis::Schur => 's',
            Basis::Elementary => 'e',
        }
    }
}

impl std::str::FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "m" | "monomial" => Ok(Basis::Monomial),
            "s" | "schur" => Ok(Basis::Schur),
            "e" | "elementary" => Ok(Basis::Elementary),
            _ => Err(Error::Parse(format!("unknown basis {s:?} (expected m, s or e)"))),
        }
    }
}

/// `sum_lambda c_lambda b_lambda` for a basis `b`; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymFunc {
    degree: usize,
    basis: Basis,
    coeffs: BTreeMap<Partition, BigRational>,
}

impl SymFunc {
    pub fn zero(degree: usize, basis: Basis) -> Self {
        SymFunc { degree, basis, coeffs: BTreeMap::new() }
    }

    pub fn from_terms<I, C>(degree: usize, basis: Basis, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, C)>,
        C: Into<BigRational>,
    {
        let mut f = Self::zero(degree, basis);
        for (lambda, c) in terms {
            f.add_term(lambda, c.into())?;
        }
        Ok(f)
    }

    /// Convenience constructor from integer coefficients and part vectors.
    pub fn from_int_terms(degree: usize, basis: Basis, terms: &[(i64, &[usize])]) -> Result<Self> {
        let mut f = Self::zero(degree, basis);
        for &(c, parts) in terms {
            f.add_term(Partition::new(parts.to_vec())?, BigRational::from_integer(c.into()))?;
        }
        Ok(f)
    }

    pub fn add_term(&mut self, lambda: Partition, c: BigRational) -> Result<()> {
        if lambda.size() != self.degree {
            return Err(Error::SizeMismatch(lambda.size(), self.degree));
        }
        let entry = self.coeffs.entry(lambda.clone()).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&lambda);
        }
        Ok(())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coeff(&self, lambda: &Partition) -> BigRational {
        self.coeffs.get(lambda).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Terms in increasing lexicographic order of the partitions.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Partition, &BigRational)> {
        self.coeffs.iter()
    }

    pub fn support(&self) -> Vec<Partition> {
        self.coeffs.keys().cloned().collect()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.values().all(|c| c.is_integer())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    pub fn scale(&self, c: &BigRational) -> SymFunc {
        let mut out = Self::zero(self.degree, self.basis);
        if !c.is_zero() {
            out.coeffs = self.coeffs.iter().map(|(k, v)| (k.clone(), v * c)).collect();
        }
        out
    }

    /// Sum of two functions in the same basis and degree.
    pub fn add(&self, other: &SymFunc) -> Result<SymFunc> {
        if self.degree != other.degree {
            return Err(Error::SizeMismatch(self.degree, other.degree));
        }
        let other = other.to_basis(self.basis)?;
        let mut out = self.clone();
        for (k, v) in other.coeffs {
            out.add_term(k, v)?;
        }
        Ok(out)
    }

    /// Coefficient of `x^alpha` for a monomial-basis function.
    pub fn monomial_coefficient(&self, alpha: &WeightVector) -> BigRational {
        debug_assert_eq!(self.basis, Basis::Monomial);
        if alpha.sum() != self.degree {
            return BigRational::zero();
        }
        self.coeff(&alpha.sorted())
    }

    pub fn to_basis(&self, basis: Basis) -> Result<SymFunc> {
        if basis == self.basis {
            return Ok(self.clone());
        }
        let m = self.to_monomial()?;
        match basis {
            Basis::Monomial => Ok(m),
            Basis::Schur => m.to_schur(),
            Basis::Elementary => m.to_elementary(),
        }
    }

    pub fn to_monomial(&self) -> Result<SymFunc> {
        check_degree(self.degree)?;
        let mut out = Self::zero(self.degree, Basis::Monomial);
        match self.basis {
            Basis::Monomial => return Ok(self.clone()),
            Basis::Schur => {
                let table = KostkaTable::new(self.degree);
                for (lambda, c) in &self.coeffs {
                    for mu in Partition::all(self.degree) {
                        let k = table.get(lambda, &mu);
                        if !k.is_zero() {
                            out.add_term(mu, c * BigRational::from_integer(k))?;
                        }
                    }
                }
            }
            Basis::Elementary => {
                let mut memo = HashMap::new();
                for (lambda, c) in &self.coeffs {
                    for mu in Partition::all(self.degree) {
                        let k = zero_one_matrices(lambda.parts(), mu.parts(), &mut memo);
                        if k != 0 {
                            out.add_term(mu, c * BigRational::from_integer(k.into()))?;
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Solves the unitriangular Kostka system.
    pub fn to_schur(&self) -> Result<SymFunc> {
        let m = self.to_monomial()?;
        let table = KostkaTable::new(self.degree);
        let mut residual = m.coeffs.clone();
        let mut out = Self::zero(self.degree, Basis::Schur);
        // K_{lambda,mu} != 0 only for lambda >= mu, and lex order extends dominance
        for lambda in Partition::all(self.degree) {
            let Some(c) = residual.get(&lambda).cloned() else { continue };
            if c.is_zero() {
                continue;
            }
            for mu in Partition::all(self.degree) {
                let k = table.get(&lambda, &mu);
                if !k.is_zero() {
                    let e = residual.entry(mu).or_insert_with(BigRational::zero);
                    *e -= &c * BigRational::from_integer(k);
                }
            }
            out.add_term(lambda, c)?;
        }
        debug_assert!(residual.values().all(Zero::is_zero));
        Ok(out)
    }

    /// `e_lambda = m_{lambda'} + (terms dominated by lambda')`.
    pub fn to_elementary(&self) -> Result<SymFunc> {
        let m = self.to_monomial()?;
        let mut residual = m.coeffs.clone();
        let mut memo = HashMap::new();
        let mut out = Self::zero(self.degree, Basis::Elementary);
        for mu in Partition::all(self.degree) {
            let Some(c) = residual.get(&mu).cloned() else { continue };
            if c.is_zero() {
                continue;
            }
            let lambda = mu.conjugate();
            for nu in Partition::all(self.degree) {
                let k = zero_one_matrices(lambda.parts(), nu.parts(), &mut memo);
                if k != 0 {
                    let e = residual.entry(nu).or_insert_with(BigRational::zero);
                    *e -= &c * BigRational::from_integer(k.into());
                }
            }
            out.add_term(lambda, c)?;
        }
        debug_assert!(residual.values().all(Zero::is_zero));
        Ok(out)
    }

    pub fn is_schur_positive(&self) -> Result<bool> {
        Ok(self.to_schur()?.is_nonnegative())
    }

    pub fn is_e_positive(&self) -> Result<bool> {
        Ok(self.to_elementary()?.is_nonnegative())
    }
}

fn check_degree(n: usize) -> Result<()> {
    if n > MAX_DEGREE {
        Err(Error::TooLarge(format!("degree {n} > {MAX_DEGREE}")))
    } else {
        Ok(())
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        // dominant terms first
        for (lambda, c) in self.coeffs.iter().rev() {
            let neg = c.is_negative();
            if !first {
                f.write_str(if neg { " - " } else { " + " })?;
            } else if neg {
                f.write_str("-")?;
            }
            first = false;
            write!(f, "{}{}[{}]", c.abs(), self.basis.letter(), lambda)?;
        }
        Ok(())
    }
}

impl Serialize for SymFunc {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        struct Coeffs<'a>(&'a BTreeMap<Partition, BigRational>);
        impl Serialize for Coeffs<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                s.collect_map(self.0.iter().rev().map(|(k, v)| (k.to_string(), v.to_string())))
            }
        }
        let mut st = s.serialize_struct("SymFunc", 3)?;
        st.serialize_field("degree", &self.degree)?;
        st.serialize_field("basis", &self.basis)?;
        st.serialize_field("coeffs", &Coeffs(&self.coeffs))?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for SymFunc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            degree: usize,
            basis: Basis,
            coeffs: BTreeMap<String, String>,
        }
        let r = Repr::deserialize(d)?;
        let mut f = SymFunc::zero(r.degree, r.basis);
        for (k, v) in r.coeffs {
            let lambda: Partition = k.parse().map_err(D::Error::custom)?;
            let c: BigRational = v.parse().map_err(|_| D::Error::custom(format!("bad coefficient {v:?}")))?;
            f.add_term(lambda, c).map_err(D::Error::custom)?;
        }
        Ok(f)
    }
}

/// Kostka numbers `K_{lambda,mu}` for all partitions of one size.
pub struct KostkaTable {
    values: HashMap<(Partition, Partition), BigInt>,
}

impl KostkaTable {
    pub fn new(n: usize) -> Self {
        let all = Partition::all(n);
        let mut memo: HashMap<(Vec<usize>, Vec<usize>), u64> = HashMap::new();
        let mut values = HashMap::new();
        for lambda in &all {
            for mu in &all {
                if !mu.dominance_leq(lambda).unwrap() {
                    continue;
                }
                let k = kostka_rec(lambda.parts(), mu.parts(), &mut memo);
                if k != 0 {
                    values.insert((lambda.clone(), mu.clone()), BigInt::from(k));
                }
            }
        }
        KostkaTable { values }
    }

    pub fn get(&self, lambda: &Partition, mu: &Partition) -> BigInt {
        self.values.get(&(lambda.clone(), mu.clone())).cloned().unwrap_or_else(BigInt::zero)
    }
}

/// Single Kostka number: semistandard tableaux of shape `lambda` and content `mu`.
pub fn kostka(lambda: &Partition, mu: &Partition) -> BigInt {
    if lambda.size() != mu.size() {
        return BigInt::zero();
    }
    BigInt::from(kostka_rec(lambda.parts(), mu.parts(), &mut HashMap::new()))
}

/// The entries equal to the largest letter form a horizontal strip; peel it off.
fn kostka_rec(shape: &[usize], content: &[usize], memo: &mut HashMap<(Vec<usize>, Vec<usize>), u64>) -> u64 {
    let shape: Vec<usize> = shape.iter().copied().filter(|&p| p > 0).collect();
    let content: Vec<usize> = content.iter().copied().filter(|&p| p > 0).collect();
    if content.is_empty() {
        return u64::from(shape.is_empty());
    }
    if shape.len() > content.len() {
        return 0;
    }
    let key = (shape.clone(), content.clone());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let last = *content.last().unwrap();
    let rest = &content[..content.len() - 1];
    let mut total = 0;
    let mut inner = vec![0usize; shape.len()];
    // inner shape nu with shape[i+1] <= nu[i] <= shape[i] and |shape/nu| = last
    fn strips(
        i: usize,
        remaining: usize,
        shape: &[usize],
        inner: &mut Vec<usize>,
        rest: &[usize],
        memo: &mut HashMap<(Vec<usize>, Vec<usize>), u64>,
        total: &mut u64,
    ) {
        if i == shape.len() {
            if remaining == 0 {
                *total += kostka_rec(inner, rest, memo);
            }
            return;
        }
        let lo = shape.get(i + 1).copied().unwrap_or(0);
        for nu in (lo..=shape[i]).rev() {
            let take = shape[i] - nu;
            if take > remaining {
                break;
            }
            inner[i] = nu;
            strips(i + 1, remaining - take, shape, inner, rest, memo, total);
        }
    }
    strips(0, last, &shape, &mut inner, rest, memo, &mut total);
    memo.insert(key, total);
    total
}

/// Number of 0-1 matrices with row sums `rows` and column sums `cols`.
fn zero_one_matrices(rows: &[usize], cols: &[usize], memo: &mut HashMap<(Vec<usize>, Vec<usize>), u64>) -> u64 {
    if rows.iter().sum::<usize>() != cols.iter().sum::<usize>() {
        return 0;
    }
    let mut caps: Vec<usize> = cols.iter().copied().filter(|&c| c > 0).collect();
    caps.sort_unstable_by(|a, b| b.cmp(a));
    let rows: Vec<usize> = rows.iter().copied().filter(|&r| r > 0).collect();
    zero_one_rec(&rows, caps, memo)
}

fn zero_one_rec(rows: &[usize], caps: Vec<usize>, memo: &mut HashMap<(Vec<usize>, Vec<usize>), u64>) -> u64 {
    let Some((&r, rest)) = rows.split_first() else {
        return u64::from(caps.iter().all(|&c| c == 0));
    };
    let key = (rows.to_vec(), caps.clone());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut total = 0;
    let mut chosen = Vec::with_capacity(r);
    fn choose(
        start: usize,
        need: usize,
        caps: &[usize],
        chosen: &mut Vec<usize>,
        rest: &[usize],
        memo: &mut HashMap<(Vec<usize>, Vec<usize>), u64>,
        total: &mut u64,
    ) {
        if need == 0 {
            let mut next = caps.to_vec();
            for &j in chosen.iter() {
                next[j] -= 1;
            }
            next.retain(|&c| c > 0);
            next.sort_unstable_by(|a, b| b.cmp(a));
            *total += zero_one_rec(rest, next, memo);
            return;
        }
        for j in start..caps.len() {
            if caps.len() - j < need {
                break;
            }
            chosen.push(j);
            choose(j + 1, need - 1, caps, chosen, rest, memo, total);
            chosen.pop();
        }
    }
    choose(0, r, &caps, &mut chosen, rest, memo, &mut total);
    memo.insert(key, total);
    total
}
