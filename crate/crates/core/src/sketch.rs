//! Randomized Hamming-distance estimators.
//!
//! * [`NaiveHDSampler`]: a rate-`r` subset of positions of `X`; a query counts
//!   the sampled mismatches inside its interval, which is `Bin(h, r)`.
//! * [`CappedBinomialSample`]: a sample together with its cap `d` and its
//!   total-variation slack, combined additively.
//! * [`hamming_gap_test`]: a sampling tester separating `HD <= low` from
//!   `HD > high`.
//!
//! # Gap tester constants
//!
//! Positions are drawn uniformly with replacement, `m` times, and `HIGH` is
//! declared iff the scaled count `count · N / m` exceeds `(low + high) / 2`.
//! With `g = high - low`, Bernstein's inequality bounds either error by
//! `exp(-m g² / (8 N (high + g/6)))` (the worst case of the upper side is
//! `h = high + 1`, since the exponent grows with `h` beyond the midpoint).
//! Hence `m = ceil(8 N (high + g/6) ln(1/f) / g²)` samples suffice for
//! failure probability `f` on each side. When `m >= N` the distance is
//! computed exactly instead.

use num_rational::Ratio;
use num_traits::CheckedAdd;
use serde::{Deserialize, Serialize};

use crate::error::{contract, Error, Result};
use crate::rng::{sample_rate_positions, RandomSource};
use crate::text::ByteText;

/// Rate-`r` sampled positions of `X` for mismatch counting against `Y`.
#[derive(Debug, Clone)]
pub struct NaiveHDSampler<'t> {
    y: &'t ByteText,
    len_x: usize,
    positions: Vec<usize>,
    chars: Vec<u8>,
    rate: f64,
}

/// Draws `S_X` and caches `X` at the sampled positions.
pub fn build_naive_sampler<'t>(x: &ByteText, y: &'t ByteText, r: f64, rng: &mut RandomSource) -> Result<NaiveHDSampler<'t>> {
    let positions = sample_rate_positions(x.len(), r, rng)?;
    let chars = positions.iter().map(|&p| x.at(p)).collect();
    Ok(NaiveHDSampler { y, len_x: x.len(), positions, chars, rate: r })
}

impl<'t> NaiveHDSampler<'t> {
    pub fn rate(&self) -> f64 {
        self.rate
    }

    pub fn sample_size(&self) -> usize {
        self.positions.len()
    }

    /// Sampled mismatches between `X[x..x+l)` and `Y[y..y+l)`.
    #[inline]
    pub fn count(&self, x: usize, y: usize, l: usize) -> u64 {
        let lo = self.positions.partition_point(|&p| p < x);
        let hi = self.positions.partition_point(|&p| p < x + l);
        let mut h = 0;
        for i in lo..hi {
            let q = y + (self.positions[i] - x);
            if self.chars[i] != self.y.at(q) {
                h += 1;
            }
        }
        h
    }
}

/// Checked query; ranges beyond either text are a contract violation.
pub fn naive_hd_query(s: &NaiveHDSampler<'_>, x: usize, y: usize, l: usize) -> Result<u64> {
    if x + l > s.len_x || y + l > s.y.len() {
        return contract(format!("naive_hd_query({x}, {y}, {l}) out of range"));
    }
    Ok(s.count(x, y, l))
}

/// Exact rational slack; denominators are powers of the text length.
pub type Slack = Ratio<u128>;

/// An integer draw contracted to follow `Bin(h, r)` when `h <= cap_d` and to
/// dominate it otherwise, up to total variation `slack`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CappedBinomialSample {
    pub value: u64,
    pub cap_d: u64,
    pub slack: Slack,
    pub rate: f64,
}

impl CappedBinomialSample {
    pub fn new(value: u64, cap_d: u64, slack: Slack, rate: f64) -> Self {
        CappedBinomialSample { value, cap_d, slack, rate }
    }

    /// The neutral element for [`combine_capped`].
    pub fn zero(cap_d: u64, rate: f64) -> Self {
        Self::new(0, cap_d, Ratio::from_integer(0), rate)
    }
}

/// Sum of two independent capped samples with equal rate and cap.
pub fn combine_capped(b1: &CappedBinomialSample, b2: &CappedBinomialSample) -> Result<CappedBinomialSample> {
    if b1.rate != b2.rate || b1.cap_d != b2.cap_d {
        return contract(format!(
            "combine_capped: (rate {}, cap {}) vs (rate {}, cap {})",
            b1.rate, b1.cap_d, b2.rate, b2.cap_d
        ));
    }
    let value = b1.value.checked_add(b2.value).ok_or(Error::Overflow("combine_capped value"))?;
    let slack = b1.slack.checked_add(&b2.slack).ok_or(Error::Overflow("combine_capped slack"))?;
    Ok(CappedBinomialSample::new(value, b1.cap_d, slack, b1.rate))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Low,
    High,
}

/// Outcome of a gap test between two Hamming thresholds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapVerdict {
    pub verdict: Verdict,
    pub low_bound: u64,
    pub high_bound: u64,
}

/// Number of with-replacement samples for the gap test (see module docs).
pub fn gap_sample_count(n: usize, low: u64, high: u64, fail_prob: f64) -> u64 {
    let g = (high - low) as f64;
    let m = 8.0 * n as f64 * (high as f64 + g / 6.0) * (1.0 / fail_prob).ln() / (g * g);
    m.ceil().max(1.0) as u64
}

/// `HIGH` iff `count · n / m > (low + high) / 2`, in integers.
pub(crate) fn gap_decide(count: u64, m: u64, n: usize, low: u64, high: u64) -> Verdict {
    if 2 * count as u128 * n as u128 > m as u128 * (low + high) as u128 {
        Verdict::High
    } else {
        Verdict::Low
    }
}

/// Positions drawn for a gap test over a length-`n` pattern, or `None` when
/// the exact distance is cheaper.
pub(crate) fn gap_positions(n: usize, low: u64, high: u64, fail_prob: f64, rng: &mut RandomSource) -> Option<Vec<usize>> {
    let m = gap_sample_count(n, low, high, fail_prob);
    if m >= n as u64 {
        return None;
    }
    Some((0..m).map(|_| rng.below(n as u64) as usize).collect())
}

/// Distinguishes `HD(X, Y[y_off..y_off+|X|)) <= low` from `> high`.
pub fn hamming_gap_test(
    x: &ByteText,
    y: &ByteText,
    y_off: usize,
    low: u64,
    high: u64,
    fail_prob: f64,
    rng: &mut RandomSource,
) -> Result<GapVerdict> {
    if low >= high {
        return contract("hamming_gap_test requires low < high");
    }
    if x.len() + y_off > y.len() {
        return contract("hamming_gap_test: pattern does not fit at the offset");
    }
    if !(fail_prob > 0.0 && fail_prob < 1.0) {
        return contract("hamming_gap_test: fail_prob must lie in (0, 1)");
    }
    let n = x.len();
    let verdict = match gap_positions(n, low, high, fail_prob, rng) {
        None => {
            let h = (0..n).filter(|&i| x.at(i) != y.at(y_off + i)).count() as u64;
            gap_decide(h, 1, 1, low, high)
        }
        Some(pos) => {
            let c = pos.iter().filter(|&&i| x.at(i) != y.at(y_off + i)).count() as u64;
            gap_decide(c, pos.len() as u64, n, low, high)
        }
    };
    Ok(GapVerdict { verdict, low_bound: low, high_bound: high })
}
