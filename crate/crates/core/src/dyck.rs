//! Dyck paths and their Hessenberg-function and area-sequence encodings,
//! bounce points, and the level-scan `zeta` map.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::parse_usize_list;

/// Largest length accepted by [`enumerate_dyck`].
pub const MAX_ENUMERATION_LENGTH: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    North,
    East,
}

/// A lattice path from `(0,0)` to `(n,n)` that never drops below the diagonal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut height: i64 = 0;
        for (i, s) in steps.iter().enumerate() {
            height += if *s == Step::North { 1 } else { -1 };
            if height < 0 {
                return Err(Error::InvalidDyckPath(format!("prefix of length {} dips below the diagonal", i + 1)));
            }
        }
        if height != 0 {
            return Err(Error::InvalidDyckPath("unequal numbers of north and east steps".into()));
        }
        Ok(DyckPath { steps })
    }

    /// `n^n e^n`: the path whose indifference graph is complete.
    pub fn full(n: usize) -> Self {
        let mut steps = vec![Step::North; n];
        steps.extend(std::iter::repeat_n(Step::East, n));
        DyckPath { steps }
    }

    /// `(ne)^n`: the path whose indifference graph is edgeless.
    pub fn staircase(n: usize) -> Self {
        DyckPath { steps: (0..n).flat_map(|_| [Step::North, Step::East]).collect() }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// The length `n` (half the number of steps).
    pub fn len(&self) -> usize {
        self.steps.len() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// `h(i)` = number of north steps before the `i`-th east step.
    pub fn hessenberg(&self) -> HessenbergFunction {
        let mut norths = 0;
        let mut h = Vec::with_capacity(self.len());
        for s in &self.steps {
            match s {
                Step::North => norths += 1,
                Step::East => h.push(norths),
            }
        }
        HessenbergFunction(h)
    }

    pub fn from_hessenberg(h: &HessenbergFunction) -> Self {
        let mut steps = Vec::with_capacity(2 * h.len());
        let mut norths = 0;
        for &hi in h.values() {
            while norths < hi {
                steps.push(Step::North);
                norths += 1;
            }
            steps.push(Step::East);
        }
        DyckPath { steps }
    }

    /// `a_i` = cells in row `i` strictly between the path and the diagonal.
    pub fn area_sequence(&self) -> AreaSequence {
        let mut easts = 0;
        let mut norths = 0;
        let mut a = Vec::with_capacity(self.len());
        for s in &self.steps {
            match s {
                Step::North => {
                    a.push(norths - easts);
                    norths += 1;
                }
                Step::East => easts += 1,
            }
        }
        AreaSequence(a)
    }

    /// Each `a_i` becomes one north step followed by `a_i - a_{i+1} + 1` east
    /// steps, with `a_{n+1} = 0`.
    pub fn from_area(a: &AreaSequence) -> Self {
        let v = a.values();
        let mut steps = Vec::with_capacity(2 * v.len());
        for i in 0..v.len() {
            let next = v.get(i + 1).copied().unwrap_or(0);
            steps.push(Step::North);
            for _ in 0..(v[i] + 1 - next) {
                steps.push(Step::East);
            }
        }
        DyckPath { steps }
    }

    pub fn area(&self) -> usize {
        self.area_sequence().values().iter().sum()
    }

    /// Diagonal points `(j, j)` where the bounce path touches down, excluding
    /// the origin and ending with `(n, n)`.
    pub fn bounce_points(&self) -> Vec<(usize, usize)> {
        let h = self.hessenberg();
        let n = self.len();
        let mut pts = Vec::new();
        let mut j = 0;
        while j < n {
            j = h.values()[j];
            pts.push((j, j));
        }
        pts
    }

    /// Sum of `n - j` over the bounce points `(j, j)` other than `(n, n)`.
    pub fn bounce(&self) -> usize {
        let n = self.len();
        self.bounce_points().iter().map(|&(j, _)| n - j).sum()
    }

    /// The level-scan map: for `b = 0, 1, ..., max(a) + 1`, read the area word
    /// of `self` left to right, writing a north step for each entry equal to
    /// `b` and an east step for each entry equal to `b - 1`.
    pub fn zeta(&self) -> DyckPath {
        let a = self.area_sequence();
        let v = a.values();
        let max = v.iter().copied().max().unwrap_or(0);
        let mut steps = Vec::with_capacity(self.steps.len());
        for b in 0..=max + 1 {
            for &ai in v {
                if ai == b {
                    steps.push(Step::North);
                } else if ai + 1 == b {
                    steps.push(Step::East);
                }
            }
        }
        DyckPath { steps }
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::North => "n",
                Step::East => "e",
            })?;
        }
        Ok(())
    }
}

impl FromStr for DyckPath {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .chars()
            .map(|c| match c {
                'n' | 'N' | '𝗇' => Ok(Step::North),
                'e' | 'E' | '𝖾' => Ok(Step::East),
                other => Err(Error::Parse(format!("unexpected character {other:?} in Dyck path"))),
            })
            .collect::<Result<Vec<_>>>()?;
        DyckPath::new(steps)
    }
}

impl Serialize for DyckPath {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for DyckPath {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Column heights of a Dyck path: nondecreasing, `i <= h(i) <= n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct HessenbergFunction(Vec<usize>);

impl HessenbergFunction {
    pub fn new(h: Vec<usize>) -> Result<Self> {
        let n = h.len();
        for (i, &hi) in h.iter().enumerate() {
            if hi < i + 1 {
                return Err(Error::InvalidHessenberg(format!("h({}) = {hi} < {}", i + 1, i + 1)));
            }
            if hi > n {
                return Err(Error::InvalidHessenberg(format!("h({}) = {hi} > {n}", i + 1)));
            }
            if i > 0 && h[i - 1] > hi {
                return Err(Error::InvalidHessenberg(format!("h decreases at {}", i + 1)));
            }
        }
        Ok(HessenbergFunction(h))
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn to_dyck(&self) -> DyckPath {
        DyckPath::from_hessenberg(self)
    }
}

impl fmt::Display for HessenbergFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

impl FromStr for HessenbergFunction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        HessenbergFunction::new(parse_usize_list(s)?)
    }
}

/// `a_1 = 0` and `a_{i+1} <= a_i + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct AreaSequence(Vec<usize>);

impl AreaSequence {
    pub fn new(a: Vec<usize>) -> Result<Self> {
        if let Some(&first) = a.first() {
            if first != 0 {
                return Err(Error::InvalidAreaSequence("a_1 must be 0".into()));
            }
        }
        if let Some(i) = a.windows(2).position(|w| w[1] > w[0] + 1) {
            return Err(Error::InvalidAreaSequence(format!("a_{} > a_{} + 1", i + 2, i + 1)));
        }
        Ok(AreaSequence(a))
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn to_dyck(&self) -> DyckPath {
        DyckPath::from_area(self)
    }

    /// All valid area sequences of length `n`, in increasing lexicographic order.
    pub fn all(n: usize) -> Vec<AreaSequence> {
        let mut out = Vec::new();
        if n == 0 {
            out.push(AreaSequence(Vec::new()));
            return out;
        }
        let mut cur = vec![0];
        fn rec(n: usize, cur: &mut Vec<usize>, out: &mut Vec<AreaSequence>) {
            if cur.len() == n {
                out.push(AreaSequence(cur.clone()));
                return;
            }
            let last = *cur.last().unwrap();
            for a in 0..=last + 1 {
                cur.push(a);
                rec(n, cur, out);
                cur.pop();
            }
        }
        rec(n, &mut cur, &mut out);
        out
    }
}

impl fmt::Display for AreaSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

impl FromStr for AreaSequence {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        AreaSequence::new(parse_usize_list(s)?)
    }
}

pub fn catalan(n: usize) -> u64 {
    let mut c: u64 = 1;
    for i in 0..n as u64 {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c
}

/// All Dyck paths of length `n`, sorted by their `n`/`e` step strings.
pub fn enumerate_dyck(n: usize) -> Result<Vec<DyckPath>> {
    if n > MAX_ENUMERATION_LENGTH {
        return Err(Error::TooLarge(format!("Dyck path enumeration for n = {n} > {MAX_ENUMERATION_LENGTH}")));
    }
    // 'e' < 'n', so emitting east before north yields lexicographic order.
    let mut out = Vec::with_capacity(catalan(n) as usize);
    let mut cur = Vec::with_capacity(2 * n);
    fn rec(n: usize, norths: usize, easts: usize, cur: &mut Vec<Step>, out: &mut Vec<DyckPath>) {
        if norths == n && easts == n {
            out.push(DyckPath { steps: cur.clone() });
            return;
        }
        if easts < norths {
            cur.push(Step::East);
            rec(n, norths, easts + 1, cur, out);
            cur.pop();
        }
        if norths < n {
            cur.push(Step::North);
            rec(n, norths + 1, easts, cur, out);
            cur.pop();
        }
    }
    rec(n, 0, 0, &mut cur, &mut out);
    Ok(out)
}
