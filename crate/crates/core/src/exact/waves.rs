//! Diagonal waves over the cost grid `{0, 1/a, ..., floor(ak)/a}`.
//!
//! `D_u[s]` is the furthest row reachable on diagonal `s = y - x` with cost at
//! most `u` units. Each entry is one exact LCE query away from its
//! predecessors `D_{u-a}[s-1]`, `D_{u-1}[s] + 1` and `D_{u-a}[s+1] + 1`.

use crate::cost::{ScaledCost, Threshold};
use crate::error::{contract, Result};
use crate::lce::{build_lce, LceIndex};
use crate::text::ByteText;

use super::script::{EditOp, EditScript};
use super::EdaOutcome;

/// Marker for `-∞` (unreachable or outside the grid).
pub const NEG: i64 = i64::MIN / 4;

/// Every layer `D_u` for `u = 0..=last`, diagonals `[-floor(u/a) ..= floor(u/a)]`.
#[derive(Debug, Clone)]
pub struct WaveTable {
    pub weight_a: u64,
    /// Diagonal half-width of the widest layer, `floor(k_units / a)`.
    pub half_width: i64,
    layers: Vec<Vec<i64>>,
    /// Cost in units at which `D_u[|Y| - |X|] = |X|` first held, if ever.
    pub certified: Option<u64>,
}

impl WaveTable {
    /// `D_u[s]`, with out-of-grid entries reading as [`NEG`].
    pub fn get(&self, u: u64, s: i64) -> i64 {
        let Some(layer) = self.layers.get(u as usize) else {
            return NEG;
        };
        let h = (u / self.weight_a) as i64;
        if s < -h || s > h {
            return NEG;
        }
        layer[(s + self.half_width) as usize]
    }

    pub fn layer_count(&self) -> usize {
        self.layers.len()
    }
}

/// Ring of the last `a + 1` layers, or all layers when a table is requested.
struct Layers {
    a: u64,
    half: i64,
    width: usize,
    keep_all: bool,
    data: Vec<Vec<i64>>,
}

impl Layers {
    fn new(a: u64, half: i64, keep_all: bool) -> Self {
        let width = (2 * half + 1) as usize;
        let data = if keep_all { Vec::new() } else { vec![vec![NEG; width]; a as usize + 1] };
        Layers { a, half, width, keep_all, data }
    }

    fn slot(&self, u: u64) -> usize {
        if self.keep_all {
            u as usize
        } else {
            (u % (self.a + 1)) as usize
        }
    }

    fn get(&self, u: u64, s: i64) -> i64 {
        let h = (u / self.a) as i64;
        if s < -h || s > h {
            return NEG;
        }
        self.data[self.slot(u)][(s + self.half) as usize]
    }

    fn begin(&mut self, u: u64) -> usize {
        if self.keep_all {
            self.data.push(vec![NEG; self.width]);
        }
        let slot = self.slot(u);
        self.data[slot].fill(NEG);
        slot
    }
}

pub(crate) struct WaveRun {
    pub outcome: EdaOutcome,
    pub table: Option<WaveTable>,
    pub lce_queries: u64,
}

pub(crate) fn run_waves(x: &ByteText, y: &ByteText, k: &Threshold, keep_all: bool) -> WaveRun {
    let lce = build_lce(x, y);
    run_waves_with(&lce, x.len(), y.len(), k, keep_all)
}

fn run_waves_with(lce: &LceIndex, nx: usize, ny: usize, k: &Threshold, keep_all: bool) -> WaveRun {
    let a = k.weight_a;
    let k_units = k.scaled_units;
    let half = (k_units / a) as i64;
    let (nx_i, ny_i) = (nx as i64, ny as i64);
    let target = ny_i - nx_i;
    let mut layers = Layers::new(a, half, keep_all);
    let mut queries = 0u64;
    let mut certified = None;

    for u in 0..=k_units {
        let h = (u / a) as i64;
        let slot = layers.begin(u);
        for s in -h..=h {
            let mut best = NEG;
            if u >= a {
                best = best
                    .max(layers.get(u - a, s - 1))
                    .max(layers.get(u - a, s + 1).saturating_add(1));
            }
            if u >= 1 {
                best = best.max(layers.get(u - 1, s).saturating_add(1));
            }
            let mut dp = if best <= NEG / 2 { NEG } else { best.min(nx_i).min(ny_i - s) };
            if s == 0 {
                dp = dp.max(0);
            }
            if dp < 0 || dp + s < 0 {
                continue;
            }
            queries += 1;
            let d = dp + lce.lce(dp as usize, (dp + s) as usize) as i64;
            if u >= 1 {
                debug_assert!(d >= layers.get(u - 1, s), "wave monotonicity violated");
            }
            layers.data[slot][(s + half) as usize] = d;
        }
        if target.abs() <= h && layers.get(u, target) == nx_i {
            certified = Some(u);
            break;
        }
    }

    let outcome = match certified {
        Some(u) => EdaOutcome::Within(ScaledCost::new(u, a)),
        None => EdaOutcome::Exceeds,
    };
    let table = keep_all.then(|| WaveTable {
        weight_a: a,
        half_width: half,
        layers: layers.data,
        certified,
    });
    WaveRun { outcome, table, lce_queries: queries }
}

/// Exact `ED_a` if it is at most `k`, by the wave algorithm.
pub fn eda_waves(x: &ByteText, y: &ByteText, k: &Threshold) -> EdaOutcome {
    run_waves(x, y, k, false).outcome
}

/// Like [`eda_waves`], also returning the number of LCE queries issued.
pub fn eda_waves_counted(x: &ByteText, y: &ByteText, k: &Threshold) -> (EdaOutcome, u64) {
    let r = run_waves(x, y, k, false);
    (r.outcome, r.lce_queries)
}

/// Runs the wave algorithm keeping every layer.
pub fn wave_table(x: &ByteText, y: &ByteText, k: &Threshold) -> WaveTable {
    run_waves(x, y, k, true).table.expect("table requested")
}

/// Walks predecessors from `(|X|, |Y|)` at the certified cost back to the
/// origin. Greedy matches are taken first; otherwise the first predecessor
/// whose wave still reaches the required row is followed.
pub fn reconstruct_waves(t: &WaveTable, x: &ByteText, y: &ByteText) -> Result<EditScript> {
    let Some(mut u) = t.certified else {
        return contract("wave table does not certify a distance");
    };
    let a = t.weight_a;
    let (mut i, mut j) = (x.len() as i64, y.len() as i64);
    let mut rev = Vec::new();
    while i > 0 || j > 0 {
        let s = j - i;
        if i > 0 && j > 0 && x.at(i as usize - 1) == y.at(j as usize - 1) {
            rev.push(EditOp::Match(1));
            i -= 1;
            j -= 1;
        } else if i > 0 && j > 0 && u >= 1 && t.get(u - 1, s) >= i - 1 {
            rev.push(EditOp::Substitute(y.at(j as usize - 1)));
            u -= 1;
            i -= 1;
            j -= 1;
        } else if i > 0 && u >= a && t.get(u - a, s + 1) >= i - 1 {
            rev.push(EditOp::Delete);
            u -= a;
            i -= 1;
        } else if j > 0 && u >= a && t.get(u - a, s - 1) >= i {
            rev.push(EditOp::Insert(y.at(j as usize - 1)));
            u -= a;
            j -= 1;
        } else {
            return contract("wave table is inconsistent with the texts");
        }
    }
    Ok(EditScript::from_reversed(rev))
}
