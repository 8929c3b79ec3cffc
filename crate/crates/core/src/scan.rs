//! Batch verification over every Dyck path of a given size, and the check
//! relating canonical listings to the zeta map.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::csf::{csf_bruteforce, greedy_weight};
use crate::dyck::{enumerate_dyck, DyckPath};
use crate::error::{Error, Result};
use crate::graph::indifference_graph;
use crate::listing::lex_maximal_listing;
use crate::lorentz::{discrete_log_concavity, is_lorentzian, probe_stability};
use crate::newton::{expand_support, m_convex_witness, newton_equals_permutahedron};
use crate::poset::poset_from_hessenberg;
use crate::symfunc::SymFunc;

pub const SCHEMA_VERSION: u32 = 1;
pub const MAX_UNFORCED_N: usize = 8;
pub const MAX_UNFORCED_K: usize = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    Newton,
    MConvex,
    Lorentzian,
    LogConcavity,
    Stability,
    Zeta,
    GreedyDominance,
}

impl Check {
    pub const ALL: [Check; 7] = [
        Check::Newton,
        Check::MConvex,
        Check::Lorentzian,
        Check::LogConcavity,
        Check::Stability,
        Check::Zeta,
        Check::GreedyDominance,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Newton => "newton",
            Check::MConvex => "m_convex",
            Check::Lorentzian => "lorentzian",
            Check::LogConcavity => "log_concavity",
            Check::Stability => "stability",
            Check::Zeta => "zeta",
            Check::GreedyDominance => "greedy_dominance",
        }
    }

    /// Proven statements; a failure is a defect rather than a finding.
    pub fn is_theorem(self) -> bool {
        matches!(self, Check::Newton | Check::MConvex | Check::GreedyDominance)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().replace('-', "_");
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown check {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanConfig {
    pub n: usize,
    pub k: usize,
    pub checks: BTreeSet<Check>,
    pub trials: usize,
    pub seed: u64,
    /// Worker threads; 0 uses the default pool size.
    pub workers: usize,
    pub force: bool,
}

impl ScanConfig {
    pub fn new(n: usize, k: usize, checks: impl IntoIterator<Item = Check>) -> Self {
        ScanConfig { n, k, checks: checks.into_iter().collect(), trials: 20, seed: 1, workers: 0, force: false }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 || self.k == 0 {
            return Err(Error::InvalidConfig("n and k must be positive".into()));
        }
        if self.checks.is_empty() {
            return Err(Error::InvalidConfig("no checks selected".into()));
        }
        if !self.force && (self.n > MAX_UNFORCED_N || self.k > MAX_UNFORCED_K) {
            return Err(Error::InvalidConfig(format!(
                "n > {MAX_UNFORCED_N} or k > {MAX_UNFORCED_K} needs force"
            )));
        }
        if self.checks.contains(&Check::Stability) && self.trials == 0 {
            return Err(Error::InvalidConfig("stability needs at least one trial".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckOutcome {
    pub pass: bool,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub detail: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl CheckOutcome {
    fn ok(pass: bool, detail: Value) -> Self {
        CheckOutcome { pass, detail, error: None }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckSummary {
    pub kind: &'static str,
    pub passed: usize,
    pub failed: usize,
    pub errors: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScanReport {
    pub schema: u32,
    pub n: usize,
    pub k: usize,
    pub checks: Vec<Check>,
    pub instance_count: usize,
    pub summary: BTreeMap<Check, CheckSummary>,
    pub instances: BTreeMap<String, BTreeMap<Check, CheckOutcome>>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl ScanReport {
    pub fn all_passed(&self) -> bool {
        self.summary.values().all(|s| s.failed == 0 && s.errors == 0)
    }

    /// Failures of proven statements.
    pub fn defects(&self) -> usize {
        self.summary.iter().filter(|(c, _)| c.is_theorem()).map(|(_, s)| s.failed + s.errors).sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZetaDetail {
    pub holds: bool,
    pub path: String,
    pub listing: Vec<usize>,
    pub listing_path: String,
    pub zeta_of_listing_path: String,
}

/// Whether `zeta` of the path of the canonical listing of `P(d)` is `d`.
pub fn zeta_conjecture_check(d: &DyckPath) -> Result<ZetaDetail> {
    let p = poset_from_hessenberg(&d.hessenberg());
    let a = lex_maximal_listing(&p)?;
    let d_prime = a.to_dyck();
    let z = d_prime.zeta();
    Ok(ZetaDetail {
        holds: &z == d,
        path: d.to_string(),
        listing: a.values().to_vec(),
        listing_path: d_prime.to_string(),
        zeta_of_listing_path: z.to_string(),
    })
}

fn run_check(check: Check, d: &DyckPath, x: &SymFunc, cfg: &ScanConfig) -> Result<CheckOutcome> {
    let top = greedy_weight(d);
    let per_k = |f: &dyn Fn(usize) -> Result<Option<Value>>| -> Result<CheckOutcome> {
        for k in 1..=cfg.k {
            if let Some(detail) = f(k)? {
                return Ok(CheckOutcome::ok(false, json!({ "k": k, "witness": detail })));
            }
        }
        Ok(CheckOutcome::ok(true, Value::Null))
    };
    match check {
        Check::Newton => per_k(&|k| {
            Ok((!newton_equals_permutahedron(x, k, &top)?).then(|| json!({ "lambda": top.to_string() })))
        }),
        Check::MConvex => per_k(&|k| Ok(m_convex_witness(&expand_support(x, k)?).map(|w| json!(w)))),
        Check::Lorentzian => per_k(&|k| {
            let r = is_lorentzian(x, k)?;
            Ok((!r.lorentzian).then(|| json!(r)))
        }),
        Check::LogConcavity => per_k(&|k| {
            let r = discrete_log_concavity(x, k)?;
            Ok((!r.normalized).then(|| json!(r)))
        }),
        Check::Stability => {
            let r = probe_stability(x, cfg.k, cfg.trials, cfg.seed)?;
            let pass = r.failures.is_empty();
            Ok(CheckOutcome::ok(pass, if pass { Value::Null } else { json!(r) }))
        }
        Check::Zeta => {
            let z = zeta_conjecture_check(d)?;
            Ok(CheckOutcome::ok(z.holds, if z.holds { Value::Null } else { json!(z) }))
        }
        Check::GreedyDominance => {
            let outside: Vec<String> = x
                .terms()
                .filter(|(mu, c)| !c.is_zero() && !mu.dominance_leq(&top).unwrap_or(false))
                .map(|(mu, _)| mu.to_string())
                .collect();
            let present = !x.coeff(&top).is_zero();
            let pass = outside.is_empty() && present;
            let detail = if pass {
                Value::Null
            } else {
                json!({ "lambda": top.to_string(), "not_dominated": outside, "lambda_in_support": present })
            };
            Ok(CheckOutcome::ok(pass, detail))
        }
    }
}

fn scan_instance(d: &DyckPath, cfg: &ScanConfig) -> BTreeMap<Check, CheckOutcome> {
    let x = indifference_graph(d).and_then(|g| csf_bruteforce(&g));
    cfg.checks
        .iter()
        .map(|&c| {
            let outcome = match &x {
                Ok(x) => run_check(c, d, x, cfg),
                Err(e) => Err(e.clone()),
            };
            let outcome = outcome.unwrap_or_else(|e| CheckOutcome { pass: false, detail: Value::Null, error: Some(e.to_string()) });
            (c, outcome)
        })
        .collect()
}

/// Runs every selected check on every Dyck path of size `n`. The report does
/// not depend on the number of workers.
pub fn run_scan(cfg: &ScanConfig) -> Result<ScanReport> {
    cfg.validate()?;
    let start = Instant::now();
    let paths = enumerate_dyck(cfg.n)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers)
        .build()
        .map_err(|e| Error::InvalidConfig(e.to_string()))?;
    let results: Vec<(String, BTreeMap<Check, CheckOutcome>)> =
        pool.install(|| paths.par_iter().map(|d| (d.to_string(), scan_instance(d, cfg))).collect());
    let mut summary: BTreeMap<Check, CheckSummary> = cfg
        .checks
        .iter()
        .map(|&c| (c, CheckSummary { kind: if c.is_theorem() { "theorem" } else { "conjecture" }, ..Default::default() }))
        .collect();
    for (_, outcomes) in &results {
        for (c, o) in outcomes {
            let s = summary.get_mut(c).expect("selected check");
            match (&o.error, o.pass) {
                (Some(_), _) => s.errors += 1,
                (None, true) => s.passed += 1,
                (None, false) => s.failed += 1,
            }
        }
    }
    Ok(ScanReport {
        schema: SCHEMA_VERSION,
        n: cfg.n,
        k: cfg.k,
        checks: cfg.checks.iter().copied().collect(),
        instance_count: results.len(),
        summary,
        instances: results.into_iter().collect(),
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dyck::{catalan, HessenbergFunction};

    #[test]
    fn zeta_examples() {
        let h = HessenbergFunction::new(vec![4, 5, 5, 5, 7, 9, 9, 9, 9]).unwrap();
        let z = zeta_conjecture_check(&h.to_dyck()).unwrap();
        assert!(z.holds);
        assert_eq!(z.listing, vec![0, 1, 2, 2, 0, 0, 0, 1, 1]);
        assert!(zeta_conjecture_check(&"ne".parse().unwrap()).unwrap().holds);
    }

    #[test]
    fn zeta_small_sizes() {
        for n in 1..=5 {
            for d in enumerate_dyck(n).unwrap() {
                assert!(zeta_conjecture_check(&d).unwrap().holds, "{d}");
            }
        }
    }

    #[test]
    fn config_guards() {
        assert!(ScanConfig::new(9, 4, [Check::Zeta]).validate().is_err());
        assert!(ScanConfig::new(4, 10, [Check::Zeta]).validate().is_err());
        let mut forced = ScanConfig::new(9, 4, [Check::Zeta]);
        forced.force = true;
        assert!(forced.validate().is_ok());
        assert!(ScanConfig::new(3, 3, []).validate().is_err());
        assert!(ScanConfig::new(0, 3, [Check::Zeta]).validate().is_err());
        assert_eq!("greedy-dominance".parse::<Check>().unwrap(), Check::GreedyDominance);
        assert!("nope".parse::<Check>().is_err());
    }

    #[test]
    fn small_scans_pass() {
        let r = run_scan(&ScanConfig::new(4, 5, [Check::Newton, Check::GreedyDominance])).unwrap();
        assert_eq!(r.instance_count, catalan(4) as usize);
        assert!(r.all_passed());
        let r = run_scan(&ScanConfig::new(3, 4, [Check::Zeta])).unwrap();
        assert!(r.all_passed());
        let r = run_scan(&ScanConfig::new(4, 4, Check::ALL)).unwrap();
        assert!(r.all_passed(), "{}", serde_json::to_string(&r.summary).unwrap());
    }

    #[test]
    fn report_is_independent_of_workers() {
        let mut a = ScanConfig::new(5, 4, [Check::Lorentzian, Check::Stability, Check::Zeta]);
        a.trials = 5;
        let mut b = a.clone();
        a.workers = 1;
        b.workers = 4;
        let ja = serde_json::to_string(&run_scan(&a).unwrap()).unwrap();
        let jb = serde_json::to_string(&run_scan(&b).unwrap()).unwrap();
        assert_eq!(ja, jb);
        assert!(ja.starts_with(r#"{"schema":1,"#));
    }
}
