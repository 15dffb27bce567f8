//! Randomized `(1+ε)`-gap decisions for `ED_a` and for bicriteria alignment.
//!
//! [`approx_eda`] distinguishes `ED_a(X, Y) <= k` from `ED_a(X, Y) > (1+ε)k`
//! and picks one of four regimes from `(n, a, k, ε)` alone:
//!
//! | regime            | condition                    | method                          |
//! |-------------------|------------------------------|---------------------------------|
//! | `HammingSmallK`   | `k < 1`                      | length check, Hamming gap test  |
//! | `TrivialLargeK`   | `k >= 1`, `k·ε·a >= n`       | length check only, no probes    |
//! | `ExactFallback`   | `1 <= k < n/(εa)`, `εa < 7`  | exact bounded distance          |
//! | `Main`            | `1 <= k < n/(εa)`, `εa >= 7` | coarse waves with `ε̄ = ⌊εa/7⌋/a` |
//!
//! The coarse waves step through costs in multiples of `e = ε̄a` units and
//! extend every diagonal with an approximate LCE query that tolerates `e`
//! mismatches. Bicriteria decisions follow the same pattern with
//! substitution granularity `d = ⌈ε k_S / (2 + k_I)⌉`.

mod waves;

use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::approx_lce::{build_approx_lce_with, LceOptions};
use crate::cost::{Rational, ScaledCost, Threshold};
use crate::error::{contract, Result};
use crate::exact::{bicriteria_exact, eda_exact, EdaOutcome};
use crate::rng::RandomSource;
use crate::sketch::{hamming_gap_test, Verdict};
use crate::text::ByteText;

pub use waves::ApproxWaveTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Answer {
    Yes,
    No,
}

impl Answer {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Answer::Yes
        } else {
            Answer::No
        }
    }

    pub fn is_yes(self) -> bool {
        self == Answer::Yes
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Regime {
    HammingSmallK,
    Main,
    TrivialLargeK,
    ExactFallback,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApproxVerdict {
    pub verdict: Answer,
    pub regime: Regime,
    /// The grid cost at which `YES` fired, when the answer came from waves
    /// or from the exact fallback.
    pub witness_cost: Option<ScaledCost>,
    pub lce_queries: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE", tag = "kind")]
pub enum BicriteriaPath {
    Exact,
    Core { d: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BicriteriaVerdict {
    pub verdict: Answer,
    pub path: BicriteriaPath,
    pub lce_queries: u64,
}

fn check_eps(eps: Rational) -> Result<()> {
    if eps.is_zero() || eps >= Ratio::from_integer(1) {
        return contract(format!("ε = {eps} outside (0, 1)"));
    }
    Ok(())
}

fn eps_f64(eps: Rational) -> f64 {
    eps.to_f64().unwrap_or(f64::NAN)
}

/// Whether `Π lhs >= Π rhs`, exactly when both products fit in `u128`.
fn product_ge(lhs: [u64; 3], rhs: [u64; 3]) -> bool {
    let mul = |v: [u64; 3]| (v[0] as u128).checked_mul(v[1] as u128).and_then(|p| p.checked_mul(v[2] as u128));
    match (mul(lhs), mul(rhs)) {
        (Some(l), Some(r)) => l >= r,
        _ => {
            let lf: f64 = lhs.iter().map(|&v| (v as f64).ln()).sum();
            let rf: f64 = rhs.iter().map(|&v| (v as f64).ln()).sum();
            lf >= rf
        }
    }
}

/// Regime chosen for inputs of total length `n`.
pub fn regime_for(n: usize, k: &Threshold, eps: Rational) -> Regime {
    let a = k.weight_a;
    if k.value < Ratio::from_integer(1) {
        return Regime::HammingSmallK;
    }
    // k·ε·a >= n  ⇔  kn·εn·a >= n·kd·εd
    let large = product_ge(
        [*k.value.numer(), *eps.numer(), a],
        [n as u64, *k.value.denom(), *eps.denom()],
    );
    if large {
        Regime::TrivialLargeK
    } else if (*eps.numer() as u128) * (a as u128) < 7 * (*eps.denom() as u128) {
        Regime::ExactFallback
    } else {
        Regime::Main
    }
}

/// `⌊εa/7⌋`, the grid step in units used by the main regime.
pub fn main_step_units(a: u64, eps: Rational) -> u64 {
    ((*eps.numer() as u128 * a as u128) / (7 * *eps.denom() as u128)) as u64
}

/// Number of grid steps `⌈ak/e⌉`.
fn grid_last(k: &Threshold, e: u64) -> Result<u64> {
    let num = (*k.value.numer() as u128)
        .checked_mul(k.weight_a as u128)
        .ok_or(crate::error::Error::Overflow("grid size"))?;
    let den = *k.value.denom() as u128 * e as u128;
    u64::try_from(num.div_ceil(den)).map_err(|_| crate::error::Error::Overflow("grid size"))
}

fn lce_width(k: &Threshold) -> usize {
    (k.ceil() as usize).max(1)
}

/// Coarse waves with `e = εa` units per grid step (`εa` must be a positive
/// integer). `YES` if `ED_a <= k`; `NO` if
/// `ED_a > k(1+ε+ε²) + 2ε + 2ε² + ε³` (with high probability).
pub fn approx_eda_core(
    x: &ByteText,
    y: &ByteText,
    k: &Threshold,
    eps: Rational,
    rng: &mut RandomSource,
) -> Result<ApproxVerdict> {
    approx_eda_core_with(x, y, k, eps, &LceOptions::default(), rng)
}

pub fn approx_eda_core_with(
    x: &ByteText,
    y: &ByteText,
    k: &Threshold,
    eps: Rational,
    opts: &LceOptions,
    rng: &mut RandomSource,
) -> Result<ApproxVerdict> {
    check_eps(eps)?;
    let a = k.weight_a;
    let scaled = eps * Ratio::from_integer(a);
    if !scaled.is_integer() {
        return contract(format!("ε·a = {scaled} is not an integer"));
    }
    let e = scaled.to_integer();
    let last = grid_last(k, e)?;
    let lce = build_approx_lce_with(x, y, e, eps_f64(eps), lce_width(k), opts, rng)?;
    let run = waves::run_coarse(&lce, x.len(), y.len(), a, e, last, false)?;
    Ok(ApproxVerdict {
        verdict: Answer::from_bool(run.hit.is_some()),
        regime: Regime::Main,
        witness_cost: run.hit.map(|t| ScaledCost::new(t * e, a)),
        lce_queries: run.queries,
    })
}

/// Runs the coarse waves keeping every layer.
pub fn approx_wave_table(
    x: &ByteText,
    y: &ByteText,
    k: &Threshold,
    eps: Rational,
    rng: &mut RandomSource,
) -> Result<ApproxWaveTable> {
    check_eps(eps)?;
    let a = k.weight_a;
    let scaled = eps * Ratio::from_integer(a);
    if !scaled.is_integer() {
        return contract(format!("ε·a = {scaled} is not an integer"));
    }
    let e = scaled.to_integer();
    let last = grid_last(k, e)?;
    let lce = build_approx_lce_with(x, y, e, eps_f64(eps), lce_width(k), &LceOptions::default(), rng)?;
    let run = waves::run_coarse(&lce, x.len(), y.len(), a, e, last, true)?;
    Ok(run.table.expect("table requested"))
}

/// `YES` if `ED_a(X, Y) <= k`, `NO` if `ED_a(X, Y) > (1+ε)k`, with high
/// probability; the answer between the two is unconstrained.
pub fn approx_eda(x: &ByteText, y: &ByteText, k: &Threshold, eps: Rational, rng: &mut RandomSource) -> Result<ApproxVerdict> {
    approx_eda_with(x, y, k, eps, &LceOptions::default(), rng)
}

pub fn approx_eda_with(
    x: &ByteText,
    y: &ByteText,
    k: &Threshold,
    eps: Rational,
    opts: &LceOptions,
    rng: &mut RandomSource,
) -> Result<ApproxVerdict> {
    check_eps(eps)?;
    let a = k.weight_a;
    let n = x.len() + y.len();
    let regime = regime_for(n, k, eps);
    let verdict = |yes: bool, witness: Option<ScaledCost>| ApproxVerdict {
        verdict: Answer::from_bool(yes),
        regime,
        witness_cost: witness,
        lce_queries: 0,
    };
    match regime {
        Regime::HammingSmallK => {
            if x.len() != y.len() {
                return Ok(verdict(false, None));
            }
            if x.is_empty() {
                return Ok(verdict(true, Some(ScaledCost::zero(a))));
            }
            let low = k.scaled_units;
            let one_eps = Ratio::from_integer(1) + eps;
            let high = crate::cost::floor_mul(k.value * one_eps, a).ok_or(crate::error::Error::Overflow("gap bound"))?;
            let yes = if high > low {
                let fail = (1.0 / (n as f64).powi(opts.c as i32)).min(0.25);
                hamming_gap_test(x, y, 0, low, high, fail, rng)?.verdict == Verdict::Low
            } else {
                let mut h = 0;
                for i in 0..x.len() {
                    if x.at(i) != y.at(i) {
                        h += 1;
                        if h > low {
                            break;
                        }
                    }
                }
                h <= low
            };
            Ok(verdict(yes, None))
        }
        Regime::TrivialLargeK => {
            let gap = x.len().abs_diff(y.len()) as u64;
            Ok(verdict(Ratio::from_integer(gap) <= k.value, None))
        }
        Regime::ExactFallback => {
            let out = eda_exact(x, y, k);
            Ok(verdict(matches!(out, EdaOutcome::Within(_)), out.value()))
        }
        Regime::Main => {
            let e = main_step_units(a, eps);
            let eps_bar = Ratio::new(e, a);
            let mut v = approx_eda_core_with(x, y, k, eps_bar, opts, rng)?;
            v.regime = Regime::Main;
            Ok(v)
        }
    }
}

/// `⌈ε k_S / (2 + k_I)⌉`.
pub fn bicriteria_granularity(k_i: usize, k_s: usize, eps: Rational) -> u64 {
    let num = *eps.numer() as u128 * k_s as u128;
    let den = *eps.denom() as u128 * (2 + k_i) as u128;
    num.div_ceil(den) as u64
}

/// `YES` if a `(k_I, k_S)`-alignment exists; `NO` if no
/// `(k_I, (1+ε)(2 + k_I + (1+ε)k_S))`-alignment exists (with high
/// probability).
pub fn bicriteria_approx_core(
    x: &ByteText,
    y: &ByteText,
    k_i: usize,
    k_s: usize,
    eps: Rational,
    rng: &mut RandomSource,
) -> Result<BicriteriaVerdict> {
    check_eps(eps)?;
    let d = bicriteria_granularity(k_i, k_s, eps);
    if d == 0 {
        return Ok(BicriteriaVerdict {
            verdict: Answer::from_bool(bicriteria_exact(x, y, k_i, 0)),
            path: BicriteriaPath::Core { d },
            lce_queries: 0,
        });
    }
    let last = (k_s as u64).div_ceil(d);
    let lce = build_approx_lce_with(x, y, d, eps_f64(eps), k_i.max(1), &LceOptions::default(), rng)?;
    let (yes, queries) = if x.len().abs_diff(y.len()) > k_i {
        (false, 0)
    } else {
        waves::run_bicriteria_coarse(&lce, x.len(), y.len(), k_i, last)?
    };
    Ok(BicriteriaVerdict { verdict: Answer::from_bool(yes), path: BicriteriaPath::Core { d }, lce_queries: queries })
}

/// `YES` if a `(k_I, k_S)`-alignment exists; `NO` if no
/// `(k_I, (1+ε)k_S)`-alignment exists.
pub fn bicriteria_approx(
    x: &ByteText,
    y: &ByteText,
    k_i: usize,
    k_s: usize,
    eps: Rational,
    rng: &mut RandomSource,
) -> Result<BicriteriaVerdict> {
    check_eps(eps)?;
    // ε k_S / 5 < 2 + k_I
    if (*eps.numer() as u128) * (k_s as u128) < 5 * (*eps.denom() as u128) * (2 + k_i) as u128 {
        return Ok(BicriteriaVerdict {
            verdict: Answer::from_bool(bicriteria_exact(x, y, k_i, k_s)),
            path: BicriteriaPath::Exact,
            lce_queries: 0,
        });
    }
    bicriteria_approx_core(x, y, k_i, k_s, eps / Ratio::from_integer(5), rng)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cost::parse_rational;
    use crate::oracle::{oracle_eda, plant_edits};

    fn q(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    fn th(k: &str, a: u64) -> Threshold {
        Threshold::new(q(k), a).unwrap()
    }

    #[test]
    fn regime_boundaries() {
        // n = 1000, a = 10, ε = 1/2: n/(εa) = 200.
        let eps = q("1/2");
        assert_eq!(regime_for(1000, &th("999/1000", 10), eps), Regime::HammingSmallK);
        assert_eq!(regime_for(1000, &th("1", 10), eps), Regime::ExactFallback);
        assert_eq!(regime_for(1000, &th("1", 20), eps), Regime::Main);
        assert_eq!(regime_for(1000, &th("99999/1000", 20), eps), Regime::Main);
        assert_eq!(regime_for(1000, &th("100", 20), eps), Regime::TrivialLargeK);
        assert_eq!(regime_for(1000, &th("200", 10), eps), Regime::TrivialLargeK);
        assert_eq!(regime_for(1000, &th("1999999/10000", 10), eps), Regime::ExactFallback);
        // εa = 7 exactly is the main regime.
        assert_eq!(regime_for(1000, &th("2", 14), eps), Regime::Main);
        assert_eq!(regime_for(1000, &th("2", 13), eps), Regime::ExactFallback);
    }

    #[test]
    fn main_step_and_granularity() {
        assert_eq!(main_step_units(1024, q("1/2")), 73);
        assert_eq!(main_step_units(14, q("1/2")), 1);
        assert_eq!(bicriteria_granularity(3, 300, q("1/10")), 6);
        assert_eq!(bicriteria_granularity(0, 0, q("1/2")), 0);
    }

    #[test]
    fn trivial_large_k_reads_nothing() {
        let x = ByteText::new(vec![1u8; 100]);
        let y = ByteText::new(vec![2u8; 103]);
        x.set_counting(true);
        y.set_counting(true);
        let v = approx_eda(&x, &y, &th("50", 10), q("1/2"), &mut RandomSource::new(0)).unwrap();
        assert_eq!((v.verdict, v.regime), (Answer::Yes, Regime::TrivialLargeK));
        assert_eq!(x.probes() + y.probes(), 0);
        let v = approx_eda(&x, &y, &th("2", 1000), q("1/2"), &mut RandomSource::new(0)).unwrap();
        assert_eq!((v.verdict, v.regime), (Answer::No, Regime::TrivialLargeK));
    }

    #[test]
    fn small_k_cases() {
        let (x, y) = (ByteText::from("abcd"), ByteText::from("abc"));
        let v = approx_eda(&x, &y, &th("1/2", 100), q("1/2"), &mut RandomSource::new(0)).unwrap();
        assert_eq!((v.verdict, v.regime), (Answer::No, Regime::HammingSmallK));
        let (x, y) = (ByteText::from("abcd"), ByteText::from("abce"));
        let v = approx_eda(&x, &y, &th("1/2", 4), q("1/2"), &mut RandomSource::new(0)).unwrap();
        assert_eq!(v.verdict, Answer::Yes);
        let v = approx_eda(&x, &y, &th("1/8", 4), q("1/2"), &mut RandomSource::new(0)).unwrap();
        assert_eq!(v.verdict, Answer::No);
        let e = ByteText::from("");
        let v = approx_eda(&e, &e, &th("0", 4), q("1/2"), &mut RandomSource::new(0)).unwrap();
        assert_eq!(v.verdict, Answer::Yes);
    }

    #[test]
    fn identity_fires_at_zero() {
        let x = ByteText::new((0..500u32).map(|i| (i * 13 % 5) as u8).collect::<Vec<_>>());
        let v = approx_eda_core(&x, &x, &th("3", 16), q("1/4"), &mut RandomSource::new(0)).unwrap();
        assert_eq!(v.verdict, Answer::Yes);
        assert_eq!(v.witness_cost, Some(ScaledCost::zero(16)));
        assert_eq!(v.lce_queries, 1);
    }

    #[test]
    fn core_rejects_fractional_grid() {
        let x = ByteText::from("ab");
        assert!(approx_eda_core(&x, &x, &th("1", 3), q("1/2"), &mut RandomSource::new(0)).is_err());
        assert!(approx_eda(&x, &x, &th("1", 3), q("1"), &mut RandomSource::new(0)).is_err());
    }

    #[test]
    fn core_query_budget() {
        let mut rng = RandomSource::new(4);
        for case in 0..30 {
            let (xv, yv) = plant_edits(300, 4, 2, 10, &mut rng);
            let (x, y) = (ByteText::new(xv), ByteText::new(yv));
            let k = th(["2", "5/2", "4"][case % 3], 16);
            let eps = q("1/4");
            let v = approx_eda_core(&x, &y, &k, eps, &mut rng).unwrap();
            let kc = k.ceil();
            let grid = 1 + (k.value / eps).ceil().to_integer();
            assert!(v.lce_queries <= (1 + kc) * grid * (2 * kc + 1));
        }
    }

    #[test]
    fn core_gap_contract_on_planted() {
        let a = 16;
        let eps = q("1/4");
        let k = th("4", a);
        let mut rng = RandomSource::new(7);
        let (mut yes_ok, mut no_ok, mut yes_n, mut no_n) = (0, 0, 0, 0);
        for _ in 0..60 {
            let (xv, yv) = plant_edits(400, 4, 1, 8, &mut rng);
            let dist = oracle_eda(&xv, &yv, a).unwrap().value();
            let (x, y) = (ByteText::new(xv), ByteText::new(yv));
            let v = approx_eda_core(&x, &y, &k, eps, &mut rng).unwrap();
            if dist <= k.value {
                yes_n += 1;
                yes_ok += v.verdict.is_yes() as u32;
            }
            let e = ratio(eps);
            let bound = 4.0 * (1.0 + e + e * e) + 2.0 * e + 2.0 * e * e + e * e * e;
            if ratio(dist) > bound {
                no_n += 1;
                no_ok += (!v.verdict.is_yes()) as u32;
            }
        }
        assert_eq!(yes_ok, yes_n);
        assert_eq!(no_ok, no_n);
        assert!(yes_n > 0);
    }

    fn ratio(r: Rational) -> f64 {
        r.to_f64().unwrap()
    }

    #[test]
    fn wave_table_sandwich() {
        let a = 8;
        let eps = q("1/4");
        let mut rng = RandomSource::new(1);
        for _ in 0..20 {
            let (xv, yv) = plant_edits(60, 3, 1, 3, &mut rng);
            let (x, y) = (ByteText::new(xv.clone()), ByteText::new(yv.clone()));
            let k = th("3", a);
            let t = approx_wave_table(&x, &y, &k, eps, &mut rng).unwrap();
            let full = crate::oracle::oracle_eda_table(&xv, &yv, a, 1 << 20).unwrap();
            let e = ratio(eps);
            for g in 0..t.grid_points() as u64 {
                let v = g as f64 * e;
                for xi in 0..=xv.len() {
                    for yi in 0..=yv.len() {
                        let s = yi as i64 - xi as i64;
                        let tv = full.get(xi, yi) as f64 / a as f64;
                        let reach = t.get(g, s) >= xi as i64;
                        if s.unsigned_abs() <= (v as i64) as u64 && tv <= v {
                            assert!(reach, "T={tv} <= v={v} but not reached at ({xi},{yi})");
                        }
                        if reach {
                            assert!(tv <= v * (1.0 + e + e * e) + e + e * e + 1e-9);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn bicriteria_wrapper_paths() {
        let (x, y) = (ByteText::from("abc"), ByteText::from("adc"));
        let v = bicriteria_approx(&x, &y, 0, 1, q("1/2"), &mut RandomSource::new(0)).unwrap();
        assert_eq!((v.verdict, v.path), (Answer::Yes, BicriteriaPath::Exact));
        let v = bicriteria_approx(&x, &y, 0, 0, q("1/2"), &mut RandomSource::new(0)).unwrap();
        assert_eq!(v.verdict, Answer::No);

        let mut rng = RandomSource::new(2);
        let (xv, yv) = plant_edits(2000, 4, 3, 200, &mut rng);
        let (x, y) = (ByteText::new(xv), ByteText::new(yv));
        let v = bicriteria_approx(&x, &y, 3, 300, q("1/2"), &mut rng).unwrap();
        assert_eq!(v.path, BicriteriaPath::Core { d: 6 });
        assert_eq!(v.verdict, Answer::Yes);
    }

    #[test]
    fn bicriteria_core_identity_and_no() {
        let x = ByteText::new((0..300u32).map(|i| (i % 7) as u8).collect::<Vec<_>>());
        let v = bicriteria_approx_core(&x, &x, 2, 10, q("1/2"), &mut RandomSource::new(0)).unwrap();
        assert_eq!(v.verdict, Answer::Yes);
        let y = ByteText::new((0..300u32).map(|i| (i % 7 + 1) as u8).collect::<Vec<_>>());
        let v = bicriteria_approx_core(&x, &y, 2, 10, q("1/2"), &mut RandomSource::new(0)).unwrap();
        assert_eq!(v.verdict, Answer::No);
    }
}
