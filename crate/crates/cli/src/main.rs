use std::fs;
use std::process::ExitCode;

use chromatic::csf::{csf_bruteforce, csf_cobipartite, greedy_weight};
use chromatic::dyck::{AreaSequence, DyckPath, HessenbergFunction};
use chromatic::graph::{indifference_graph, SimpleGraph};
use chromatic::listing::{
    csf_listing, greedy_weight_31free, lex_maximal_listing, matching_probabilities, Part, PartListing,
};
use chromatic::lorentz::{discrete_log_concavity, is_lorentzian_with, probe_stability, LorentzOptions};
use chromatic::newton::{
    expand_support, m_convex_witness, newton_equals_permutahedron, nonvanishing_decision, snp_witness,
    NonvanishingInput,
};
use chromatic::partition::{Partition, WeightVector};
use chromatic::rook::{hit_polynomial, Board, FerrersBoard};
use chromatic::scan::{run_scan, zeta_conjecture_check, Check, ScanConfig};
use chromatic::symfunc::{Basis, SymFunc};
use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "chromatic", version, about = "Chromatic symmetric functions, Newton polytopes and Lorentzian checks")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone, Default)]
struct Input {
    /// Dyck path as a word in n and e, e.g. nnenee
    #[arg(long)]
    dyck: Option<String>,
    /// Hessenberg function, e.g. 3,3,5,5,5
    #[arg(long)]
    hessenberg: Option<String>,
    /// Area sequence, e.g. 0,1,1,0
    #[arg(long)]
    area: Option<String>,
    /// Graph as n:edges, e.g. 4:1-2,2-3,3-4
    #[arg(long)]
    graph: Option<String>,
    /// Board of a co-bipartite graph, e.g. 2x3:(1,1),(2,3)
    #[arg(long)]
    board: Option<String>,
    /// Part listing JSON, or @file
    #[arg(long)]
    listing: Option<String>,
    /// Symmetric function JSON, or @file
    #[arg(long)]
    symfunc: Option<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Chromatic symmetric function in a chosen basis
    Csf {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "m")]
        basis: String,
        #[arg(long)]
        pretty: bool,
    },
    /// Support, saturation and M-convexity in k variables
    Newton {
        #[command(flatten)]
        input: Input,
        #[arg(short)]
        k: usize,
        #[arg(long)]
        pretty: bool,
    },
    /// Lorentzian property in k variables
    Lorentzian {
        #[command(flatten)]
        input: Input,
        #[arg(short)]
        k: usize,
        /// List every failing Hessian instead of stopping at the first
        #[arg(long)]
        exhaustive: bool,
        /// Check every point of the simplex, not one per partition
        #[arg(long)]
        all_alphas: bool,
        /// Also run discrete log-concavity
        #[arg(long)]
        log_concavity: bool,
        /// Random real-rootedness probes along lines
        #[arg(long, default_value_t = 0)]
        stability_trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        pretty: bool,
    },
    /// Run checks over every Dyck path of size n
    Scan {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        k: usize,
        /// Comma-separated: newton, m_convex, lorentzian, log_concavity, stability, zeta, greedy_dominance
        #[arg(long, default_value = "lorentzian")]
        checks: String,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 0)]
        workers: usize,
        #[arg(long)]
        force: bool,
        /// Write the JSON report here as well
        #[arg(long)]
        out: Option<String>,
        #[arg(long)]
        pretty: bool,
    },
    /// Compare a Dyck path with zeta of its canonical listing path
    Zeta {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        pretty: bool,
    },
    /// Rook and hit numbers of a board
    Rook {
        #[arg(long)]
        board: Option<String>,
        /// Ferrers shape, e.g. 2,2 (with --n1 and --n2)
        #[arg(long)]
        ferrers: Option<String>,
        #[arg(long)]
        n1: Option<usize>,
        #[arg(long)]
        n2: Option<usize>,
        #[arg(long)]
        pretty: bool,
    },
    /// Poset, decomposition and greedy weight of a part listing
    Listing {
        /// Part listing JSON, or @file
        #[arg(long)]
        listing: String,
        #[arg(long)]
        pretty: bool,
    },
    /// Whether a monomial coefficient is nonzero, without enumeration
    Nonvanish {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        pretty: bool,
    },
}

/// Result of a subcommand: the report and whether every check passed.
type Run = Result<(Value, bool), String>;

fn read_arg(s: &str) -> Result<String, String> {
    match s.strip_prefix('@') {
        Some(path) => fs::read_to_string(path).map_err(|e| format!("{path}: {e}")),
        None => Ok(s.to_string()),
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn dyck_of(input: &Input) -> Result<Option<DyckPath>, String> {
    if let Some(s) = &input.dyck {
        return s.parse::<DyckPath>().map(Some).map_err(err);
    }
    if let Some(s) = &input.hessenberg {
        return s.parse::<HessenbergFunction>().map(|h| Some(h.to_dyck())).map_err(err);
    }
    if let Some(s) = &input.area {
        return s.parse::<AreaSequence>().map(|a| Some(a.to_dyck())).map_err(err);
    }
    Ok(None)
}

fn listing_of(s: &str) -> Result<PartListing, String> {
    serde_json::from_str(&read_arg(s)?).map_err(|e| format!("listing: {e}"))
}

/// The chromatic symmetric function of the input, with its greedy weight when
/// the input is a Dyck path, co-bipartite board or part listing.
fn resolve(input: &Input) -> Result<(SymFunc, Option<Partition>, Value), String> {
    let given = [
        &input.dyck,
        &input.hessenberg,
        &input.area,
        &input.graph,
        &input.board,
        &input.listing,
        &input.symfunc,
    ]
    .iter()
    .filter(|x| x.is_some())
    .count();
    if given != 1 {
        return Err("give exactly one of --dyck, --hessenberg, --area, --graph, --board, --listing, --symfunc".into());
    }
    if let Some(d) = dyck_of(input)? {
        let x = csf_bruteforce(&indifference_graph(&d).map_err(err)?).map_err(err)?;
        return Ok((x, Some(greedy_weight(&d)), json!({ "dyck": d.to_string(), "hessenberg": d.hessenberg().to_string() })));
    }
    if let Some(s) = &input.graph {
        let (n, edges) = s.split_once(':').ok_or("graph must look like n:1-2,2-3")?;
        let n: usize = n.trim().parse().map_err(|_| format!("bad vertex count {n:?}"))?;
        let g = SimpleGraph::parse_edges(n, edges).map_err(err)?;
        return Ok((csf_bruteforce(&g).map_err(err)?, None, json!({ "graph": g.to_string() })));
    }
    if let Some(s) = &input.board {
        let b: Board = s.parse().map_err(err)?;
        let j = b.rook_numbers().iter().rposition(|x| !x.is_zero()).unwrap_or(0);
        let lambda = Partition::twos_ones(j, b.n1() + b.n2() - 2 * j);
        return Ok((csf_cobipartite(&b).map_err(err)?, Some(lambda), json!({ "board": s })));
    }
    if let Some(s) = &input.listing {
        let l = listing_of(s)?;
        let x = csf_listing(&l).map_err(err)?;
        return Ok((x, Some(greedy_weight_31free(&l).map_err(err)?), json!({ "listing": l })));
    }
    let s = input.symfunc.as_ref().expect("counted above");
    let f: SymFunc = serde_json::from_str(&read_arg(s)?).map_err(|e| format!("symfunc: {e}"))?;
    Ok((f.to_monomial().map_err(err)?, None, json!({ "symfunc": "given" })))
}

fn csf_cmd(input: &Input, basis: &str) -> Run {
    let basis: Basis = basis.parse().map_err(err)?;
    let (x, top, source) = resolve(input)?;
    let f = x.to_basis(basis).map_err(err)?;
    Ok((
        json!({
            "input": source,
            "csf": f,
            "text": f.to_string(),
            "greedy_weight": top.map(|t| t.to_string()),
        }),
        true,
    ))
}

fn newton_cmd(input: &Input, k: usize) -> Run {
    let (x, top, source) = resolve(input)?;
    let s = expand_support(&x, k).map_err(err)?;
    let mconv = m_convex_witness(&s);
    let snp = snp_witness(&s);
    let mut ok = mconv.is_none() && snp.is_none();
    let mut out = json!({
        "input": source,
        "k": k,
        "support_size": s.len(),
        "m_convex": mconv.is_none(),
        "m_convex_witness": mconv,
        "snp": snp.is_none(),
        "snp_witness": snp,
    });
    if let Some(top) = top {
        let eq = newton_equals_permutahedron(&x, k, &top).map_err(err)?;
        ok &= eq;
        out["lambda"] = json!(top.to_string());
        out["newton_is_permutahedron"] = json!(eq);
    }
    Ok((out, ok))
}

#[allow(clippy::too_many_arguments)]
fn lorentzian_cmd(
    input: &Input,
    k: usize,
    exhaustive: bool,
    all_alphas: bool,
    log_concavity: bool,
    trials: usize,
    seed: u64,
) -> Run {
    let (x, _, source) = resolve(input)?;
    let report = is_lorentzian_with(&x, k, LorentzOptions { all_alphas, exhaustive }).map_err(err)?;
    let mut ok = report.lorentzian;
    let mut out = json!({ "input": source, "k": k, "report": report });
    if log_concavity {
        let lc = discrete_log_concavity(&x, k).map_err(err)?;
        ok &= lc.normalized;
        out["log_concavity"] = json!(lc);
    }
    if trials > 0 {
        let st = probe_stability(&x, k, trials, seed).map_err(err)?;
        ok &= st.failures.is_empty();
        out["stability"] = json!(st);
    }
    Ok((out, ok))
}

#[allow(clippy::too_many_arguments)]
fn scan_cmd(
    n: usize,
    k: usize,
    checks: &str,
    trials: usize,
    seed: u64,
    workers: usize,
    force: bool,
    out: Option<&str>,
) -> Run {
    let checks: Vec<Check> = checks.split(',').map(str::parse).collect::<Result<_, _>>().map_err(err)?;
    let cfg = ScanConfig { trials, seed, workers, force, ..ScanConfig::new(n, k, checks) };
    let report = run_scan(&cfg).map_err(err)?;
    let value = json!(report);
    if let Some(path) = out {
        fs::write(path, serde_json::to_string_pretty(&value).map_err(err)?).map_err(|e| format!("{path}: {e}"))?;
    }
    Ok((value, report.all_passed()))
}

fn zeta_cmd(input: &Input) -> Run {
    let d = dyck_of(input)?.ok_or("give --dyck, --hessenberg or --area")?;
    let z = zeta_conjecture_check(&d).map_err(err)?;
    let ok = z.holds;
    Ok((json!(z), ok))
}

fn rook_cmd(board: Option<&str>, ferrers: Option<&str>, n1: Option<usize>, n2: Option<usize>) -> Run {
    let (b, mu) = match (board, ferrers) {
        (Some(s), None) => (s.parse::<Board>().map_err(err)?, None),
        (None, Some(s)) => {
            let mu: Partition = s.parse().map_err(err)?;
            let n1 = n1.unwrap_or(mu.len());
            let n2 = n2.unwrap_or(mu.largest());
            (FerrersBoard::new(mu.clone(), n1, n2).map_err(err)?.board(), Some(mu))
        }
        _ => return Err("give exactly one of --board or --ferrers".into()),
    };
    let strs = |v: Vec<BigInt>| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    let mut out = json!({
        "n1": b.n1(),
        "n2": b.n2(),
        "cells": b.cells(),
        "rook_numbers": strs(b.rook_numbers()),
        "hit_numbers": strs(b.hit_numbers()),
        "nested_shape": b.nested_shape().map(|p| p.to_string()),
        "csf": csf_cobipartite(&b).map_err(err)?.to_string(),
    });
    if let Some(mu) = mu {
        let t = hit_polynomial(&mu).map_err(err)?;
        out["square_hit_polynomial"] = json!(t.to_string());
        out["square_hit_polynomial_real_rooted"] = json!(t.is_real_rooted().map_err(err)?);
    }
    Ok((out, true))
}

fn listing_cmd(s: &str) -> Run {
    let l = listing_of(s)?;
    let p = l.poset().map_err(err)?;
    let mut bicos = Vec::new();
    for pos in l.bico_positions() {
        if let Part::Bico(level, h) = &l.parts()[pos] {
            let q = matching_probabilities(h).map_err(err)?;
            bicos.push(json!({
                "position": pos,
                "level": level,
                "q": q.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            }));
        }
    }
    let canonical = if p.is_unit_interval_order() {
        Some(lex_maximal_listing(&p).map_err(err)?.values().to_vec())
    } else {
        None
    };
    let x = csf_listing(&l).map_err(err)?;
    Ok((
        json!({
            "vertices": p.n(),
            "covers": p.covers(),
            "three_plus_one_free": p.is_mn_free(3, 1),
            "unit_interval_order": p.is_unit_interval_order(),
            "canonical_listing": canonical,
            "bicolored_parts": bicos,
            "csf": x,
            "text": x.to_string(),
            "greedy_weight": greedy_weight_31free(&l).map_err(err)?.to_string(),
        }),
        true,
    ))
}

fn nonvanish_cmd(input: &Input, alpha: &str) -> Run {
    let alpha: WeightVector = alpha.parse().map_err(err)?;
    let query = match (dyck_of(input)?, &input.listing) {
        (Some(d), None) => NonvanishingInput::Dyck(d),
        (None, Some(s)) => NonvanishingInput::Listing(listing_of(s)?),
        _ => return Err("give one of --dyck, --hessenberg, --area or --listing".into()),
    };
    let nonzero = nonvanishing_decision(&query, &alpha).map_err(err)?;
    Ok((json!({ "alpha": alpha.entries(), "nonzero": nonzero }), true))
}

fn print_pretty(v: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (key, val) in map {
                match val {
                    Value::Object(m) if !m.is_empty() => {
                        println!("{pad}{key}:");
                        print_pretty(val, indent + 1);
                    }
                    Value::String(s) => println!("{pad}{key}: {s}"),
                    other => println!("{pad}{key}: {other}"),
                }
            }
        }
        Value::String(s) => println!("{pad}{s}"),
        other => println!("{pad}{other}"),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let (result, pretty) = match &cli.cmd {
        Cmd::Csf { input, basis, pretty } => (csf_cmd(input, basis), *pretty),
        Cmd::Newton { input, k, pretty } => (newton_cmd(input, *k), *pretty),
        Cmd::Lorentzian { input, k, exhaustive, all_alphas, log_concavity, stability_trials, seed, pretty } => (
            lorentzian_cmd(input, *k, *exhaustive, *all_alphas, *log_concavity, *stability_trials, *seed),
            *pretty,
        ),
        Cmd::Scan { n, k, checks, trials, seed, workers, force, out, pretty } => {
            (scan_cmd(*n, *k, checks, *trials, *seed, *workers, *force, out.as_deref()), *pretty)
        }
        Cmd::Zeta { input, pretty } => (zeta_cmd(input), *pretty),
        Cmd::Rook { board, ferrers, n1, n2, pretty } => {
            (rook_cmd(board.as_deref(), ferrers.as_deref(), *n1, *n2), *pretty)
        }
        Cmd::Listing { listing, pretty } => (listing_cmd(listing), *pretty),
        Cmd::Nonvanish { input, alpha, pretty } => (nonvanish_cmd(input, alpha), *pretty),
    };
    match result {
        Ok((value, ok)) => {
            if pretty {
                print_pretty(&value, 0);
            } else {
                println!("{value}");
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
