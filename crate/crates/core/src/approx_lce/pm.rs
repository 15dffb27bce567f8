//! Text-to-pattern Hamming sampling for arbitrary strings.
//!
//! Building first sorts the shifts `s ∈ [0..w)` into survivors
//! (`HD <= dw`, kept) and eliminated ones (`HD > 2dw`, dropped) by a gap test
//! run at failure probability `δ/w` per shift. Zero survivors make every
//! answer `|X|`; a single survivor gets one precomputed rate-`r` paired
//! sample; two or more survivors certify a period `p` equal to the gap
//! between the two smallest, and queries are delegated to the periodic index
//! under a hard step limit.

use num_rational::Ratio;

use crate::error::{contract, Result};
use crate::rng::{sample_rate_positions, RandomSource};
use crate::sketch::{gap_decide, gap_positions, CappedBinomialSample, Slack, Verdict};
use crate::text::ByteText;

use super::periodic::{build_periodic_frag, PeriodicPMIndex};
use super::Frag;

/// Tuning knobs shared by all components of an index.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PmOptions {
    /// `C_cap` in the periodic step limit `C_cap · d · w · ln²(1/δ) · ln n`.
    pub cap_constant: f64,
    /// Sample sets larger than `budget_factor · (|T| r + 3 ln(1/δ))` are
    /// treated as a preprocessing failure.
    pub budget_factor: f64,
}

impl Default for PmOptions {
    fn default() -> Self {
        PmOptions { cap_constant: 4.0, budget_factor: 4.0 }
    }
}

#[derive(Debug, Clone)]
enum Class<'t> {
    Eliminated,
    Single { shift: usize, value: u64 },
    Periodic { index: PeriodicPMIndex<'t>, cap: u64 },
    Failed,
}

/// Observable summary of a built [`PMIndex`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PmKind {
    Eliminated,
    Single(usize),
    Periodic(usize),
    Failed,
}

#[derive(Debug, Clone)]
pub struct PMIndex<'t> {
    len_x: usize,
    pub width: usize,
    pub d: u64,
    pub rate: f64,
    slack: Slack,
    class: Class<'t>,
}

/// `δ` as a float, from its exact form.
pub(crate) fn slack_f64(s: &Slack) -> f64 {
    *s.numer() as f64 / *s.denom() as f64
}

fn sample_budget(len: usize, r: f64, ln_inv_delta: f64, factor: f64) -> usize {
    (factor * (len as f64 * r + 3.0 * ln_inv_delta)).ceil() as usize
}

/// Survivor shifts in ascending order.
fn filter_shifts(x: Frag<'_>, y: Frag<'_>, low: u64, high: u64, fail: f64, rng: &mut RandomSource) -> Vec<usize> {
    let n = x.len();
    let w = y.len() - n + 1;
    if low >= n as u64 {
        return (0..w).collect();
    }
    match gap_positions(n, low, high, fail, rng) {
        None => {
            let xs: Vec<u8> = (0..n).map(|i| x.at(i)).collect();
            let mid2 = low + high;
            (0..w)
                .filter(|&s| {
                    let mut h = 0u64;
                    for (i, &c) in xs.iter().enumerate() {
                        if c != y.at(s + i) {
                            h += 1;
                            if 2 * h > mid2 {
                                return false;
                            }
                        }
                    }
                    true
                })
                .collect()
        }
        Some(pos) => {
            let xs: Vec<u8> = pos.iter().map(|&i| x.at(i)).collect();
            (0..w)
                .filter(|&s| {
                    let c = pos.iter().zip(&xs).filter(|&(&i, &ch)| ch != y.at(s + i)).count() as u64;
                    gap_decide(c, pos.len() as u64, n, low, high) == Verdict::Low
                })
                .collect()
        }
    }
}

pub(crate) fn build_pm_frag<'t>(
    x: Frag<'t>,
    y: Frag<'t>,
    d: u64,
    r: f64,
    delta: Slack,
    total_len: usize,
    opts: &PmOptions,
    rng: &mut RandomSource,
) -> PMIndex<'t> {
    let n = x.len();
    let w = y.len() - n + 1;
    let delta_f = slack_f64(&delta);
    let ln_inv = (1.0 / delta_f).ln();
    let slack = delta * Ratio::from_integer(4);
    let low = d * w as u64;
    let survivors = filter_shifts(x, y, low, 2 * low, delta_f / w as f64, rng);
    let budget = sample_budget(n, r, ln_inv, opts.budget_factor);
    let class = match survivors.as_slice() {
        [] => Class::Eliminated,
        [s] => match sample_rate_positions(n, r, rng) {
            Ok(pos) if pos.len() <= budget => {
                let value = pos.iter().filter(|&&i| x.at(i) != y.at(s + i)).count() as u64;
                Class::Single { shift: *s, value }
            }
            _ => Class::Failed,
        },
        [s1, s2, ..] => {
            let p = s2 - s1;
            let m = 8 * low + w as u64;
            let y_budget = sample_budget(y.len(), r, ln_inv, opts.budget_factor);
            match build_periodic_frag(x, y, p, m, r, delta_f, Some(budget + y_budget), rng) {
                Ok(index) => {
                    let ln_n = (total_len.max(3) as f64).ln();
                    let cap = opts.cap_constant * d as f64 * w as f64 * ln_inv * ln_inv * ln_n;
                    Class::Periodic { index, cap: cap.ceil().min(u64::MAX as f64) as u64 }
                }
                Err(_) => Class::Failed,
            }
        }
    };
    PMIndex { len_x: n, width: w, d, rate: r, slack, class }
}

/// Builds the general text-to-pattern structure for `X` against `Y`.
pub fn build_pm_index<'t>(
    x: &'t ByteText,
    y: &'t ByteText,
    d: u64,
    r: f64,
    delta: Slack,
    rng: &mut RandomSource,
) -> Result<PMIndex<'t>> {
    build_pm_index_with(x, y, d, r, delta, &PmOptions::default(), rng)
}

pub fn build_pm_index_with<'t>(
    x: &'t ByteText,
    y: &'t ByteText,
    d: u64,
    r: f64,
    delta: Slack,
    opts: &PmOptions,
    rng: &mut RandomSource,
) -> Result<PMIndex<'t>> {
    if x.len() > y.len() {
        return contract("pattern longer than text");
    }
    if !(r > 0.0 && r <= 1.0) {
        return contract(format!("rate {r} outside (0, 1]"));
    }
    if d == 0 || *delta.numer() == 0 || delta >= Ratio::from_integer(1) {
        return contract("need d >= 1 and 0 < δ < 1");
    }
    let total = x.len() + y.len();
    Ok(build_pm_frag(Frag::whole(x), Frag::whole(y), d, r, delta, total, opts, rng))
}

impl<'t> PMIndex<'t> {
    pub fn kind(&self) -> PmKind {
        match &self.class {
            Class::Eliminated => PmKind::Eliminated,
            Class::Single { shift, .. } => PmKind::Single(*shift),
            Class::Periodic { index, .. } => PmKind::Periodic(index.p),
            Class::Failed => PmKind::Failed,
        }
    }

    pub(crate) fn sample(&self, s: usize) -> CappedBinomialSample {
        let n = self.len_x as u64;
        let value = match &self.class {
            Class::Eliminated | Class::Failed => n,
            Class::Single { shift, value } => {
                if *shift == s {
                    *value
                } else {
                    n
                }
            }
            Class::Periodic { index, cap } => index.query_capped(s, *cap).unwrap_or(n),
        };
        CappedBinomialSample::new(value, self.d, self.slack, self.rate)
    }
}

/// A sample for shift `s` following `Bin_{d,O(δ)}(HD(X, Y[s..s+|X|)), r)`.
pub fn pm_query(idx: &PMIndex<'_>, s: usize) -> Result<CappedBinomialSample> {
    if s >= idx.width {
        return contract(format!("shift {s} outside [0..{})", idx.width));
    }
    Ok(idx.sample(s))
}
