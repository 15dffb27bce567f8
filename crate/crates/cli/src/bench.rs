//! Workloads for `weda bench`: one row per size with probe counts and,
//! when timing is on, wall time.

use std::time::Instant;

use serde::{Deserialize, Serialize};
use weda_core::approx::{approx_eda, bicriteria_approx};
use weda_core::approx_lce::{approx_lce_query, build_approx_lce};
use weda_core::cost::{floor_mul, ratio_f64};
use weda_core::exact::eda_exact;
use weda_core::oracle::plant_edits;
use weda_core::text::probes_of;
use weda_core::{ByteText, RandomSource, Rational, Threshold};

use crate::input::{rational, seed_or_fresh, threshold};
use crate::report::{fraction, RunReport};
use crate::{usage, BenchArgs, CliError, Outcome, EXIT_OK};

pub const SUITES: [&str; 4] = ["exact", "approx", "bicriteria", "lce"];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub suite: String,
    pub size: u64,
    pub n: usize,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub regime: Option<String>,
    pub probes: u64,
    pub lce_queries: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<f64>,
}

/// A planted pair `(X, Y)` over four symbols whose edits cost at most `k`:
/// `⌊k/2⌋` indels and as many substitutions as the rest of the budget buys.
pub fn planted_within(n: usize, a: u64, k: Rational, rng: &mut RandomSource) -> (ByteText, ByteText) {
    let whole = k.to_integer();
    let indels = (whole / 2) as usize;
    let rest = k - Rational::from_integer(indels as u64);
    let subs = floor_mul(rest, a).unwrap_or(u64::MAX).min(n as u64 / 2) as usize;
    let (x, y) = plant_edits(n, 4, indels, subs, rng);
    (ByteText::new(x), ByteText::new(y))
}

fn parse_sizes(s: &str) -> Result<Vec<u64>, CliError> {
    let sizes: Result<Vec<u64>, _> = s.split(',').map(|t| t.trim().parse::<u64>()).collect();
    match sizes {
        Ok(v) if !v.is_empty() && v.iter().all(|&x| x > 0) => Ok(v),
        _ => usage(format!("--sizes: expected a comma-separated list of positive integers, got {s:?}")),
    }
}

fn verdict_name(v: impl Serialize) -> Option<String> {
    serde_json::to_value(v).ok().and_then(|v| v.as_str().map(str::to_owned))
}

fn run_row(
    suite: &str,
    size: u64,
    args: &BenchArgs,
    k: &Threshold,
    eps: Rational,
    seed: u64,
    timing: bool,
) -> Result<BenchRow, CliError> {
    let mut rng = RandomSource::new(seed);
    let mut row = BenchRow {
        suite: suite.into(),
        size,
        n: 0,
        seed,
        verdict: None,
        regime: None,
        probes: 0,
        lce_queries: 0,
        wall_time_ms: None,
    };
    let t;
    match suite {
        "exact" => {
            let kk = Threshold::integer(size, args.a)?;
            let (x, y) = planted_within(args.n, args.a, kk.value, &mut rng);
            x.set_counting(true);
            y.set_counting(true);
            t = Instant::now();
            let out = eda_exact(&x, &y, &kk);
            row.n = x.len() + y.len();
            row.verdict = Some(if out.value().is_some() { "WITHIN" } else { "EXCEEDS" }.into());
            row.probes = probes_of(&x, &y);
        }
        "approx" => {
            let (x, y) = planted_within(size as usize, args.a, k.value, &mut rng);
            x.set_counting(true);
            y.set_counting(true);
            t = Instant::now();
            let v = approx_eda(&x, &y, k, eps, &mut rng)?;
            row.n = x.len() + y.len();
            row.verdict = verdict_name(v.verdict);
            row.regime = verdict_name(v.regime);
            row.probes = probes_of(&x, &y);
            row.lce_queries = v.lce_queries;
        }
        "bicriteria" => {
            let ks = k.value.to_integer() as usize;
            let (xv, yv) = plant_edits(size as usize, 4, 2, ks.min(size as usize / 2), &mut rng);
            let (x, y) = (ByteText::new(xv), ByteText::new(yv));
            x.set_counting(true);
            y.set_counting(true);
            t = Instant::now();
            let v = bicriteria_approx(&x, &y, 2, ks, eps, &mut rng)?;
            row.n = x.len() + y.len();
            row.verdict = verdict_name(v.verdict);
            row.probes = probes_of(&x, &y);
            row.lce_queries = v.lce_queries;
        }
        "lce" => {
            let d = k.value.to_integer().max(1);
            let (xv, yv) = plant_edits(size as usize, 4, 0, (4 * d) as usize, &mut rng);
            let (x, y) = (ByteText::new(xv), ByteText::new(yv));
            x.set_counting(true);
            y.set_counting(true);
            t = Instant::now();
            let idx = build_approx_lce(&x, &y, d, ratio_f64(eps), 4, &mut rng)?;
            for _ in 0..64 {
                let p = rng.below(size) as usize;
                approx_lce_query(&idx, p, p)?;
                row.lce_queries += 1;
            }
            row.n = x.len() + y.len();
            row.probes = probes_of(&x, &y);
        }
        other => return usage(format!("unknown suite {other:?}; expected one of {}", SUITES.join(", "))),
    }
    if timing {
        row.wall_time_ms = Some(t.elapsed().as_secs_f64() * 1e3);
    }
    Ok(row)
}

pub(crate) fn bench(args: &BenchArgs, timing: bool) -> Result<Outcome, CliError> {
    if !SUITES.contains(&args.suite.as_str()) {
        return usage(format!("--suite must be one of {}, got {:?}", SUITES.join(", "), args.suite));
    }
    let sizes = parse_sizes(&args.sizes)?;
    let k = threshold(&args.k, args.a)?;
    let eps = rational("eps", &args.eps)?;
    let seed = seed_or_fresh(args.seed);
    let root = RandomSource::new(seed);
    let rows = sizes
        .iter()
        .enumerate()
        .map(|(i, &s)| run_row(&args.suite, s, args, &k, eps, root.derive_seed(i as u64), timing))
        .collect::<Result<Vec<_>, _>>()?;
    let mut r = RunReport::new("bench")
        .param("suite", &args.suite)
        .param("sizes", &sizes)
        .param("a", args.a)
        .param("k", fraction(k.value))
        .param("eps", fraction(eps));
    if args.suite == "exact" {
        r = r.param("n", args.n);
    }
    r.seed = Some(seed);
    let rows_json = serde_json::to_value(&rows).map_err(|e| CliError::Runtime(e.into()))?;
    match &args.json_out {
        Some(path) => {
            std::fs::write(path, serde_json::to_string_pretty(&rows_json).unwrap_or_default() + "\n")?;
            r.notes.push(format!("rows written to {}", path.display()));
        }
        None => r.data = Some(rows_json),
    }
    Ok(Outcome { report: r, exit: EXIT_OK })
}
