use std::fs;
use std::path::Path;
use std::time::Instant;

use serde_json::json;
use weda_core::approx::{approx_eda, bicriteria_approx};
use weda_core::exact::{bicriteria_exact, eda_exact, exact_path};
use weda_core::gadgets::{GadgetMeta, OvInstance, OvReduction};
use weda_core::oracle::{oracle_eda_limited, oracle_ov, DEFAULT_CELL_LIMIT};
use weda_core::text::probes_of;
use weda_core::{ByteText, RandomSource, ScaledCost};

use crate::input::{load_pair, rational, seed_or_fresh, threshold};
use crate::report::{fraction, CostReport, RunReport};
use crate::{usage, ApproxArgs, BicriteriaArgs, CliError, ExactArgs, Expect, GenGadgetArgs, Outcome, VerifyArgs};
use crate::{EXIT_FAIL, EXIT_OK};

pub(crate) const X_FILE: &str = "x.bin";
pub(crate) const Y_FILE: &str = "y.bin";
pub(crate) const META_FILE: &str = "meta.json";

fn ok(report: RunReport) -> Result<Outcome, CliError> {
    Ok(Outcome { report, exit: EXIT_OK })
}

fn elapsed_ms(t: Instant) -> Option<f64> {
    Some(t.elapsed().as_secs_f64() * 1e3)
}

fn counting(x: &ByteText, y: &ByteText, on: bool) {
    x.set_counting(on);
    y.set_counting(on);
}

fn serde_name(v: impl serde::Serialize) -> Option<String> {
    serde_json::to_value(v).ok().and_then(|v| v.as_str().map(str::to_owned))
}

pub(crate) fn exact(args: &ExactArgs) -> Result<Outcome, CliError> {
    let k = threshold(&args.k, args.a)?;
    let (x, y) = load_pair(&args.input)?;
    counting(&x, &y, args.count_probes);
    let t = Instant::now();
    let outcome = eda_exact(&x, &y, &k);
    let mut r = RunReport::new("exact")
        .param("a", args.a)
        .param("k", fraction(k.value))
        .param("k_floor_units", k.scaled_units)
        .param("n", x.len() + y.len());
    r.wall_time_ms = elapsed_ms(t);
    r.path = serde_json::to_value(exact_path(x.len() + y.len(), &k)).ok();
    r.probe_count = args.count_probes.then(|| probes_of(&x, &y));
    match outcome.value() {
        Some(c) => {
            r.verdict = Some("WITHIN".into());
            r.value = Some(CostReport::new(c));
        }
        None => r.verdict = Some("EXCEEDS".into()),
    }
    ok(r)
}

pub(crate) fn approx(args: &ApproxArgs) -> Result<Outcome, CliError> {
    let k = threshold(&args.k, args.a)?;
    let eps = rational("eps", &args.eps)?;
    let (x, y) = load_pair(&args.input)?;
    let seed = seed_or_fresh(args.seed);
    let mut rng = RandomSource::new(seed);
    counting(&x, &y, args.count_probes);
    let t = Instant::now();
    let v = approx_eda(&x, &y, &k, eps, &mut rng)?;
    let mut r = RunReport::new("approx")
        .param("a", args.a)
        .param("k", fraction(k.value))
        .param("eps", fraction(eps))
        .param("n", x.len() + y.len());
    r.wall_time_ms = elapsed_ms(t);
    r.verdict = serde_name(v.verdict);
    r.regime = serde_name(v.regime);
    r.lce_queries = Some(v.lce_queries);
    r.seed = Some(seed);
    r.probe_count = args.count_probes.then(|| probes_of(&x, &y));
    if let Some(w) = v.witness_cost {
        r.data = Some(json!({ "witness_cost": CostReport::new(w) }));
    }
    ok(r)
}

pub(crate) fn bicriteria(args: &BicriteriaArgs) -> Result<Outcome, CliError> {
    let (x, y) = load_pair(&args.input)?;
    counting(&x, &y, args.count_probes);
    let mut r = RunReport::new("bicriteria").param("ki", args.ki).param("ks", args.ks).param("n", x.len() + y.len());
    let t = Instant::now();
    if args.exact {
        let yes = bicriteria_exact(&x, &y, args.ki, args.ks);
        r.verdict = Some(if yes { "YES" } else { "NO" }.into());
        r.path = Some(json!({ "kind": "EXACT" }));
    } else {
        let Some(eps) = &args.eps else {
            return usage("bicriteria needs --eps (with --seed) or --exact");
        };
        let eps = rational("eps", eps)?;
        let seed = seed_or_fresh(args.seed);
        let v = bicriteria_approx(&x, &y, args.ki, args.ks, eps, &mut RandomSource::new(seed))?;
        r = r.param("eps", fraction(eps));
        r.verdict = serde_name(v.verdict);
        r.path = serde_json::to_value(v.path).ok();
        r.lce_queries = Some(v.lce_queries);
        r.seed = Some(seed);
    }
    r.wall_time_ms = elapsed_ms(t);
    r.probe_count = args.count_probes.then(|| probes_of(&x, &y));
    ok(r)
}

pub(crate) fn gen_gadget(args: &GenGadgetArgs) -> Result<Outcome, CliError> {
    let (n, m) = (args.n as usize, args.m as usize);
    if m > n {
        return usage(format!("--m must satisfy 1 <= m <= n, got m={m}, n={n}"));
    }
    if !(0.0..=1.0).contains(&args.density) {
        return usage("--density must lie in [0, 1]");
    }
    let seed = seed_or_fresh(args.seed);
    let t = Instant::now();
    let inst = OvInstance::random(n, args.d, args.density, seed);
    let g = OvReduction::new(n, args.d, args.a, m)?.build(&inst, Some(seed))?;
    fs::create_dir_all(&args.out_dir)?;
    fs::write(args.out_dir.join(X_FILE), &g.x)?;
    fs::write(args.out_dir.join(Y_FILE), &g.y)?;
    let meta = serde_json::to_string_pretty(&g.meta).map_err(|e| CliError::Runtime(e.into()))?;
    fs::write(args.out_dir.join(META_FILE), meta + "\n")?;
    let mut r = RunReport::new("gen-gadget")
        .param("n", n)
        .param("d", args.d)
        .param("a", args.a)
        .param("m", m)
        .param("density", args.density)
        .param("x_len", g.x.len())
        .param("y_len", g.y.len());
    r.wall_time_ms = elapsed_ms(t);
    r.verdict = Some("WRITTEN".into());
    r.value = Some(CostReport::new(ScaledCost::new(g.threshold_units, g.weight_a)));
    r.seed = Some(seed);
    r.notes.extend(g.meta.warning.clone());
    r.data = serde_json::to_value(&g.meta).ok();
    ok(r)
}

fn read_bytes(dir: &Path, name: &str) -> Result<Vec<u8>, CliError> {
    let p = dir.join(name);
    fs::read(&p).map_err(|e| CliError::Runtime(anyhow::anyhow!("{}: {e}", p.display())))
}

fn parse_vectors(rows: &[String]) -> Result<Vec<Vec<u8>>, CliError> {
    rows.iter()
        .map(|s| {
            s.bytes()
                .map(|b| match b {
                    b'0' | b'1' => Ok(b - b'0'),
                    _ => usage(format!("metadata vector {s:?} is not a 0/1 string")),
                })
                .collect()
        })
        .collect()
}

fn verify_bundle(dir: &Path, limit: u128) -> Result<Outcome, CliError> {
    let meta_text = fs::read_to_string(dir.join(META_FILE))?;
    let meta: GadgetMeta =
        serde_json::from_str(&meta_text).map_err(|e| CliError::Usage(format!("{META_FILE}: {e}")))?;
    let x = read_bytes(dir, X_FILE)?;
    let y = read_bytes(dir, Y_FILE)?;
    let mut r = RunReport::new("verify")
        .param("bundle", dir.display().to_string())
        .param("a", meta.a)
        .param("threshold_units", meta.threshold_units);
    let mut problems = Vec::new();
    if meta.construction != "ov-reduce-v1" {
        problems.push(format!("unknown construction {:?}", meta.construction));
    }
    let inst = OvInstance::new(parse_vectors(&meta.u)?, parse_vectors(&meta.v)?)?;
    let rebuilt = OvReduction::new(meta.n, meta.d, meta.a, meta.m)?.build(&inst, meta.seed)?;
    if rebuilt.x != x || rebuilt.y != y {
        problems.push("strings differ from the construction recorded in the metadata".into());
    }
    if rebuilt.threshold_units != meta.threshold_units {
        problems.push(format!(
            "threshold is {} units but the construction gives {}",
            meta.threshold_units, rebuilt.threshold_units
        ));
    }
    let t = Instant::now();
    let e = oracle_eda_limited(&x, &y, meta.a, limit)?;
    let ov = oracle_ov(&inst)?;
    let within = e.units <= meta.threshold_units;
    if within != ov {
        problems.push(format!(
            "ED_a {} the threshold but the vectors {} an orthogonal pair",
            if within { "is within" } else { "exceeds" },
            if ov { "have" } else { "lack" }
        ));
    }
    r.wall_time_ms = elapsed_ms(t);
    r.value = Some(CostReport::new(e));
    r.data = Some(json!({ "orthogonal_pair": ov, "within_threshold": within }));
    Ok(finish(r, problems))
}

fn finish(mut r: RunReport, problems: Vec<String>) -> Outcome {
    let pass = problems.is_empty();
    r.verdict = Some(if pass { "PASS" } else { "FAIL" }.into());
    r.notes = problems;
    Outcome { report: r, exit: if pass { EXIT_OK } else { EXIT_FAIL } }
}

pub(crate) fn verify(args: &VerifyArgs) -> Result<Outcome, CliError> {
    let limit = args.cell_limit.unwrap_or(DEFAULT_CELL_LIMIT);
    if let Some(dir) = &args.bundle {
        return verify_bundle(dir, limit);
    }
    let (Some(a), Some(k)) = (args.a, &args.k) else {
        return usage("verify needs --bundle, or a string pair with --a and --k");
    };
    let k = threshold(k, a)?;
    let (x, y) = load_pair(&args.input)?;
    let t = Instant::now();
    let e = oracle_eda_limited(x.as_bytes(), y.as_bytes(), a, limit)?;
    let mut r = RunReport::new("verify")
        .param("a", a)
        .param("k", fraction(k.value))
        .param("expect", if args.expect == Expect::Within { "within" } else { "exceeds" });
    r.wall_time_ms = elapsed_ms(t);
    r.value = Some(CostReport::new(e));
    let within = k.admits(e);
    let mut problems = Vec::new();
    if within != (args.expect == Expect::Within) {
        problems.push(format!(
            "ED_a = {} {} k = {}",
            fraction(e.value()),
            if within { "is within" } else { "exceeds" },
            fraction(k.value)
        ));
    }
    Ok(finish(r, problems))
}
