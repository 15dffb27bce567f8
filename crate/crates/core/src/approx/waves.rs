//! Coarse-grained waves driven by approximate LCE queries.

use crate::approx_lce::{approx_lce_query, ApproxLceIndex};
use crate::error::Result;
use crate::exact::NEG;

/// `D̃_v[s]` for grid points `v = t·e` units, `t = 0..=last`, and diagonals
/// `s ∈ [-floor(v)..=floor(v)]`.
#[derive(Debug, Clone)]
pub struct ApproxWaveTable {
    pub weight_a: u64,
    /// Grid step `e = εa` in units.
    pub step_units: u64,
    pub half_width: i64,
    layers: Vec<Vec<i64>>,
}

impl ApproxWaveTable {
    /// `D̃` at grid index `t` (cost `t·e/a`) on diagonal `s`.
    pub fn get(&self, t: u64, s: i64) -> i64 {
        let Some(layer) = self.layers.get(t as usize) else {
            return NEG;
        };
        let h = (t * self.step_units / self.weight_a) as i64;
        if s < -h || s > h {
            return NEG;
        }
        layer[(s + self.half_width) as usize]
    }

    pub fn grid_points(&self) -> usize {
        self.layers.len()
    }
}

pub(crate) struct CoarseRun {
    /// Grid index at which the full strings were reached.
    pub hit: Option<u64>,
    pub queries: u64,
    pub table: Option<ApproxWaveTable>,
}

/// Runs the coarse waves for grid indices `0..=last`. The insertion and
/// deletion predecessor `v - 1` is read at grid index `t - floor(a/e)`, the
/// smallest grid point not below `v - 1`.
pub(crate) fn run_coarse(
    lce: &ApproxLceIndex<'_>,
    nx: usize,
    ny: usize,
    a: u64,
    e: u64,
    last: u64,
    keep: bool,
) -> Result<CoarseRun> {
    let q = a / e;
    let half = (last * e / a) as i64;
    let width = (2 * half + 1) as usize;
    let ring = q as usize + 1;
    let mut layers: Vec<Vec<i64>> = if keep { Vec::new() } else { vec![vec![NEG; width]; ring] };
    let slot = |t: u64| if keep { t as usize } else { (t % (q + 1)) as usize };
    let get = |layers: &Vec<Vec<i64>>, t: u64, s: i64| -> i64 {
        let h = (t * e / a) as i64;
        if s < -h || s > h {
            NEG
        } else {
            layers[slot(t)][(s + half) as usize]
        }
    };
    let (nx_i, ny_i) = (nx as i64, ny as i64);
    let target = ny_i - nx_i;
    let mut queries = 0;
    let mut hit = None;
    for t in 0..=last {
        let h = (t * e / a) as i64;
        let mut cur = vec![NEG; width];
        for s in -h..=h {
            let mut best = NEG;
            if t >= q {
                best = best.max(get(&layers, t - q, s - 1)).max(get(&layers, t - q, s + 1).saturating_add(1));
            }
            if t >= 1 {
                best = best.max(get(&layers, t - 1, s));
            }
            let mut dp = if best <= NEG / 2 { NEG } else { best.min(nx_i).min(ny_i - s) };
            if s == 0 {
                dp = dp.max(0);
            }
            if dp < 0 || dp + s < 0 {
                continue;
            }
            queries += 1;
            cur[(s + half) as usize] = dp + approx_lce_query(lce, dp as usize, (dp + s) as usize)? as i64;
        }
        let reached = target.abs() <= h && cur[(target + half) as usize] == nx_i;
        if keep {
            layers.push(cur);
        } else {
            layers[slot(t)] = cur;
        }
        if reached {
            hit = Some(t);
            break;
        }
    }
    let table = keep.then(|| ApproxWaveTable { weight_a: a, step_units: e, half_width: half, layers });
    Ok(CoarseRun { hit, queries, table })
}

/// Bicriteria coarse waves over `v_S ∈ {0, d, ..., last·d}` and
/// `v_I ∈ [0..=k_i]`; returns whether the strings were reached and the
/// number of approximate LCE queries.
pub(crate) fn run_bicriteria_coarse(
    lce: &ApproxLceIndex<'_>,
    nx: usize,
    ny: usize,
    k_i: usize,
    last: u64,
) -> Result<(bool, u64)> {
    let row = 2 * k_i + 1;
    let idx = |vi: usize, s: i64| vi * row + (s + k_i as i64) as usize;
    let get = |l: &[i64], vi: usize, s: i64| if s.unsigned_abs() as usize > vi { NEG } else { l[idx(vi, s)] };
    let (nx_i, ny_i) = (nx as i64, ny as i64);
    let target = ny_i - nx_i;
    let mut prev: Option<Vec<i64>> = None;
    let mut queries = 0;
    for _ in 0..=last {
        let mut cur = vec![NEG; (k_i + 1) * row];
        for vi in 0..=k_i {
            for s in -(vi as i64)..=(vi as i64) {
                let mut best = NEG;
                if vi >= 1 {
                    best = best.max(get(&cur, vi - 1, s - 1)).max(get(&cur, vi - 1, s + 1).saturating_add(1));
                }
                if let Some(p) = &prev {
                    best = best.max(get(p, vi, s));
                }
                let mut dp = if best <= NEG / 2 { NEG } else { best.min(nx_i).min(ny_i - s) };
                if s == 0 {
                    dp = dp.max(0);
                }
                if dp < 0 || dp + s < 0 {
                    continue;
                }
                queries += 1;
                cur[idx(vi, s)] = dp + approx_lce_query(lce, dp as usize, (dp + s) as usize)? as i64;
            }
            if target.unsigned_abs() as usize <= vi && get(&cur, vi, target) == nx_i {
                return Ok((true, queries));
            }
        }
        prev = Some(cur);
    }
    Ok((false, queries))
}
