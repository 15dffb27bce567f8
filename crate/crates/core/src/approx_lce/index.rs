use num_rational::Ratio;

use crate::error::{contract, Result};
use crate::rng::RandomSource;
use crate::sketch::{build_naive_sampler, combine_capped, CappedBinomialSample, NaiveHDSampler, Slack};
use crate::text::ByteText;

use super::pm::{build_pm_frag, PMIndex, PmOptions};
use super::Frag;

/// Build-time options of [`ApproxLceIndex`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LceOptions {
    /// Component failure probability is `n^-(c+1)`.
    pub c: u32,
    pub pm: PmOptions,
}

impl Default for LceOptions {
    fn default() -> Self {
        LceOptions { c: 3, pm: PmOptions::default() }
    }
}

/// `min(1, 27 ε⁻² d⁻¹ ln n)`.
pub fn lce_rate(eps: f64, d: u64, n: usize) -> f64 {
    let ln_n = (n.max(2) as f64).ln();
    (27.0 * ln_n / (eps * eps * d as f64)).min(1.0)
}

/// `n^-(c+1)` as an exact fraction; saturates at `1/u128::MAX`, which is an
/// upper bound whenever the power overflows.
pub fn component_delta(n: usize, c: u32) -> Slack {
    match (n.max(2) as u128).checked_pow(c + 1) {
        Some(den) => Ratio::new(1, den),
        None => Ratio::new(1, u128::MAX),
    }
}

/// Deterministic-query approximate LCE structure after randomized build.
#[derive(Debug)]
pub struct ApproxLceIndex<'t> {
    x: &'t ByteText,
    y: &'t ByteText,
    pub d: u64,
    pub eps: f64,
    pub w: usize,
    pub rate: f64,
    naive: NaiveHDSampler<'t>,
    /// Smallest dyadic level served by a [`PMIndex`].
    pm_level: u32,
    /// `levels[j - pm_level][i]` covers `[i·2^j, (i+1)·2^j)`.
    levels: Vec<Vec<Option<PMIndex<'t>>>>,
}

pub fn build_approx_lce<'t>(
    x: &'t ByteText,
    y: &'t ByteText,
    d: u64,
    eps: f64,
    w: usize,
    rng: &mut RandomSource,
) -> Result<ApproxLceIndex<'t>> {
    build_approx_lce_with(x, y, d, eps, w, &LceOptions::default(), rng)
}

pub fn build_approx_lce_with<'t>(
    x: &'t ByteText,
    y: &'t ByteText,
    d: u64,
    eps: f64,
    w: usize,
    opts: &LceOptions,
    rng: &mut RandomSource,
) -> Result<ApproxLceIndex<'t>> {
    if d == 0 || w == 0 {
        return contract("approximate LCE needs d >= 1 and w >= 1");
    }
    if !(eps > 0.0 && eps < 1.0) {
        return contract(format!("ε = {eps} outside (0, 1)"));
    }
    let n = x.len() + y.len();
    let rate = lce_rate(eps, d, n);
    let delta = component_delta(n, opts.c);
    let naive = build_naive_sampler(x, y, rate, &mut rng.derive(u64::MAX))?;

    let min_len = (d as f64 * (2 * w + 1) as f64 / rate).ceil() as usize;
    let pm_level = min_len.max(1).next_power_of_two().trailing_zeros();
    let mut levels = Vec::new();
    let mut j = pm_level;
    while j < usize::BITS && (1usize << j) <= x.len() {
        let len = 1usize << j;
        let comps = (0..x.len() / len)
            .map(|i| {
                let start = i * len;
                let ys = start.saturating_sub(w);
                let ye = (start + len + w).min(y.len());
                if ye < ys + len {
                    return None;
                }
                let tag = ((j as u64) << 48) | i as u64;
                let xf = Frag::new(x, start, len);
                let yf = Frag::new(y, ys, ye - ys);
                Some(build_pm_frag(xf, yf, d, rate, delta, n, &opts.pm, &mut rng.derive(tag)))
            })
            .collect();
        levels.push(comps);
        j += 1;
    }
    Ok(ApproxLceIndex { x, y, d, eps, w, rate, naive, pm_level, levels })
}

impl<'t> ApproxLceIndex<'t> {
    pub fn pm_components(&self) -> usize {
        self.levels.iter().flatten().filter(|c| c.is_some()).count()
    }

    /// Shortest dyadic length served by a text-to-pattern component.
    pub fn pm_min_length(&self) -> usize {
        1 << self.pm_level
    }

    /// Acceptance threshold `(1 + ε/3) r d`.
    pub fn threshold(&self) -> f64 {
        (1.0 + self.eps / 3.0) * self.rate * self.d as f64
    }

    /// Sample for the dyadic block `[pos, pos + 2^j)` against `Y[y..)`.
    fn block(&self, pos: usize, j: u32, y: usize) -> CappedBinomialSample {
        let len = 1usize << j;
        if j >= self.pm_level {
            if let Some(Some(c)) = self.levels[(j - self.pm_level) as usize].get(pos >> j) {
                let ys = pos.saturating_sub(self.w);
                return c.sample(y - ys);
            }
        }
        let v = self.naive.count(pos, y, len);
        CappedBinomialSample::new(v, self.d, Ratio::from_integer(0), self.rate)
    }

    /// Combined sample for `X[x..x+l)` against `Y[y..y+l)` over the canonical
    /// dyadic cover.
    pub fn estimate(&self, x: usize, y: usize, l: usize) -> Result<CappedBinomialSample> {
        self.check(x, y)?;
        if x + l > self.x.len() || y + l > self.y.len() {
            return contract("estimate range outside the texts");
        }
        let mut acc = CappedBinomialSample::zero(self.d, self.rate);
        let (mut pos, end) = (x, x + l);
        while pos < end {
            let mut j = if pos == 0 { (end - pos).ilog2() } else { pos.trailing_zeros() };
            while pos + (1usize << j) > end {
                j -= 1;
            }
            acc = combine_capped(&acc, &self.block(pos, j, y + (pos - x)))?;
            pos += 1 << j;
        }
        Ok(acc)
    }

    fn check(&self, x: usize, y: usize) -> Result<()> {
        if x.abs_diff(y) > self.w {
            return contract(format!("|{x} - {y}| exceeds the width {}", self.w));
        }
        if x > self.x.len() || y > self.y.len() {
            return contract(format!("query ({x}, {y}) outside the texts"));
        }
        Ok(())
    }

    /// Greedy dyadic extension: aligned blocks of growing size are appended
    /// while the running sum stays below the threshold; after the first
    /// rejection the block size halves at every step, so the final length is
    /// followed by a rejected length exactly one longer (or by the end).
    fn extend(&self, x: usize, y: usize) -> Result<usize> {
        let limit = (self.x.len() - x).min(self.y.len() - y);
        if limit as u64 <= self.d {
            return Ok(limit);
        }
        let thr = self.threshold();
        let end = x + limit;
        let mut acc = CappedBinomialSample::zero(self.d, self.rate);
        let mut pos = x;
        let (mut j, mut climbing) = if x == 0 { (limit.ilog2(), false) } else { (x.trailing_zeros(), true) };
        loop {
            while pos + (1usize << j) > end {
                if j == 0 {
                    return Ok(pos - x);
                }
                j -= 1;
                climbing = false;
            }
            let cand = combine_capped(&acc, &self.block(pos, j, y + (pos - x)))?;
            let accepted = (cand.value as f64) < thr;
            if accepted {
                acc = cand;
                pos += 1 << j;
                if pos == end {
                    return Ok(limit);
                }
                if climbing {
                    j = pos.trailing_zeros();
                    continue;
                }
            }
            climbing = false;
            if j == 0 {
                return Ok(pos - x);
            }
            j -= 1;
        }
    }
}

/// A value in `[LCE_d(x, y), LCE_{(1+ε)d}(x, y)]` with high probability over
/// the build; repeated queries return the same value.
pub fn approx_lce_query(idx: &ApproxLceIndex<'_>, x: usize, y: usize) -> Result<usize> {
    idx.check(x, y)?;
    idx.extend(x, y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::oracle_lce_d;
    use crate::rng::sample_rate_positions;

    #[test]
    fn rate_formula() {
        assert_eq!(lce_rate(0.5, 1, 1000), 1.0);
        let r = lce_rate(0.5, 100_000, 1 << 16);
        assert!((r - 27.0 * (65536f64).ln() / (0.25 * 100_000.0)).abs() < 1e-12);
        assert_eq!(component_delta(10, 3), Ratio::new(1, 10_000));
    }

    #[test]
    fn identical_strings_full_extension() {
        let x = ByteText::new((0..300u32).map(|i| (i * 31 % 7) as u8).collect::<Vec<_>>());
        let idx = build_approx_lce(&x, &x, 2, 0.5, 3, &mut RandomSource::new(0)).unwrap();
        for p in 0..=300 {
            assert_eq!(approx_lce_query(&idx, p, p).unwrap(), 300 - p);
        }
    }

    #[test]
    fn block_example() {
        let mut xv = vec![b'a'; 100];
        xv.extend(vec![b'b'; 100]);
        let (x, y) = (ByteText::new(xv), ByteText::new(vec![b'a'; 200]));
        for seed in 0..20 {
            let idx = build_approx_lce(&x, &y, 10, 0.5, 2, &mut RandomSource::new(seed)).unwrap();
            let v = approx_lce_query(&idx, 0, 0).unwrap();
            assert!((110..=115).contains(&v), "{v}");
        }
    }

    #[test]
    fn large_d_returns_remaining_length() {
        let (x, y) = (ByteText::from("abcdef"), ByteText::from("ghijklmn"));
        let idx = build_approx_lce(&x, &y, 6, 0.5, 3, &mut RandomSource::new(0)).unwrap();
        assert_eq!(approx_lce_query(&idx, 1, 3).unwrap(), 5);
        assert_eq!(approx_lce_query(&idx, 4, 2).unwrap(), 2);
        assert!(approx_lce_query(&idx, 0, 4).is_err());
    }

    #[test]
    fn sandwich_with_pm_components() {
        // Large d·w relative to n is avoided so dyadic components exist.
        let n = 4096;
        let mut rng = RandomSource::new(11);
        let base: Vec<u8> = (0..n + 8).map(|_| rng.below(4) as u8).collect();
        let xv = base[..n].to_vec();
        let mut yv = base.clone();
        for p in sample_rate_positions(yv.len(), 0.01, &mut rng).unwrap() {
            yv[p] = 9;
        }
        let (x, y) = (ByteText::new(xv), ByteText::new(yv));
        let (d, w, eps) = (2u64, 2usize, 0.5);
        let idx = build_approx_lce(&x, &y, d, eps, w, &mut RandomSource::new(3)).unwrap();
        assert!(idx.pm_components() > 0);
        for p in (0..n).step_by(37) {
            for q in p.saturating_sub(w)..=(p + w).min(y.len()) {
                let got = approx_lce_query(&idx, p, q).unwrap();
                let lo = oracle_lce_d(x.as_bytes(), y.as_bytes(), p, q, d as usize);
                let hi = oracle_lce_d(x.as_bytes(), y.as_bytes(), p, q, ((1.0 + eps) * d as f64).floor() as usize);
                assert!(lo <= got && got <= hi, "({p},{q}): {lo} <= {got} <= {hi}");
                assert_eq!(approx_lce_query(&idx, p, q).unwrap(), got);
            }
        }
    }

    #[test]
    fn estimate_is_hamming_without_components() {
        let x = ByteText::new((0..200u32).map(|i| (i % 3) as u8).collect::<Vec<_>>());
        let y = ByteText::new((0..203u32).map(|i| (i % 3 + (i % 17 == 0) as u32) as u8).collect::<Vec<_>>());
        let idx = build_approx_lce(&x, &y, 40, 0.5, 3, &mut RandomSource::new(0)).unwrap();
        assert_eq!(idx.pm_components(), 0);
        assert_eq!(idx.rate, 1.0);
        for l in [0, 1, 17, 64, 199, 200] {
            for q in 0..=3 {
                let want = crate::oracle::hamming(&x.as_bytes()[..l], &y.as_bytes()[q..q + l]) as u64;
                assert_eq!(idx.estimate(0, q, l).unwrap().value, want);
            }
        }
    }
}
