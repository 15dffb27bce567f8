//! Banded dynamic programming: only cells with `|x - y| <= floor(k)` are
//! filled, and values above the threshold are discarded.

use crate::cost::{ScaledCost, Threshold};
use crate::text::ByteText;

use super::script::{EditOp, EditScript};
use super::EdaOutcome;

const INF: u64 = u64::MAX / 4;

/// Copies a text into a local buffer, one probe per character.
pub(crate) fn read_all(t: &ByteText) -> Vec<u8> {
    (0..t.len()).map(|i| t.at(i)).collect()
}

struct Band {
    b: usize,
    width: usize,
}

impl Band {
    fn lo(&self, x: usize) -> usize {
        x.saturating_sub(self.b)
    }

    fn hi(&self, x: usize, ny: usize) -> usize {
        (x + self.b).min(ny)
    }

    /// Slot of column `y` in row `x` (valid for `lo(x) <= y <= hi(x)`).
    fn slot(&self, x: usize, y: usize) -> usize {
        y + self.b - x
    }
}

fn fill<F: FnMut(usize, &[u64])>(xs: &[u8], ys: &[u8], a: u64, k_units: u64, mut on_row: F) -> u64 {
    let b = (k_units / a) as usize;
    let band = Band { b, width: 2 * b + 1 };
    let mut prev = vec![INF; band.width];
    let mut cur = vec![INF; band.width];
    let clip = |v: u64| if v > k_units { INF } else { v };

    for y in 0..=band.hi(0, ys.len()) {
        prev[band.slot(0, y)] = clip(y as u64 * a);
    }
    on_row(0, &prev);
    for x in 1..=xs.len() {
        cur.fill(INF);
        let (lo, hi) = (band.lo(x), band.hi(x, ys.len()));
        for y in lo..=hi {
            let s = band.slot(x, y);
            let mut best = INF;
            if s + 1 < band.width {
                best = prev[s + 1].saturating_add(a);
            }
            if y > 0 {
                best = best.min(prev[s].saturating_add(u64::from(xs[x - 1] != ys[y - 1])));
                if y > lo {
                    best = best.min(cur[s - 1].saturating_add(a));
                }
            } else {
                best = best.min(x as u64 * a);
            }
            cur[s] = clip(best);
        }
        std::mem::swap(&mut prev, &mut cur);
        on_row(x, &prev);
    }
    let (nx, ny) = (xs.len(), ys.len());
    if nx.abs_diff(ny) > b {
        return INF;
    }
    prev[band.slot(nx, ny)]
}

/// Exact `ED_a` if it is at most `k`, by the banded recurrence.
pub fn eda_banded(x: &ByteText, y: &ByteText, k: &Threshold) -> EdaOutcome {
    let a = k.weight_a;
    let b = (k.scaled_units / a) as usize;
    if x.len().abs_diff(y.len()) > b {
        return EdaOutcome::Exceeds;
    }
    let (xs, ys) = (read_all(x), read_all(y));
    let v = fill(&xs, &ys, a, k.scaled_units, |_, _| {});
    if v >= INF {
        EdaOutcome::Exceeds
    } else {
        EdaOutcome::Within(ScaledCost::new(v, a))
    }
}

/// Like [`eda_banded`] but keeps the whole band for a traceback.
/// Memory is `(|X| + 1) · (2·floor(k) + 1)` words.
pub fn eda_banded_with_script(x: &ByteText, y: &ByteText, k: &Threshold) -> (EdaOutcome, Option<EditScript>) {
    let a = k.weight_a;
    let b = (k.scaled_units / a) as usize;
    if x.len().abs_diff(y.len()) > b {
        return (EdaOutcome::Exceeds, None);
    }
    let (xs, ys) = (read_all(x), read_all(y));
    let band = Band { b, width: 2 * b + 1 };
    let mut rows: Vec<u64> = Vec::with_capacity((xs.len() + 1) * band.width);
    let v = fill(&xs, &ys, a, k.scaled_units, |_, row| rows.extend_from_slice(row));
    if v >= INF {
        return (EdaOutcome::Exceeds, None);
    }
    let at = |x: usize, y: usize| -> u64 {
        if y < band.lo(x) || y > band.hi(x, ys.len()) {
            INF
        } else {
            rows[x * band.width + band.slot(x, y)]
        }
    };
    let (mut i, mut j) = (xs.len(), ys.len());
    let mut rev = Vec::new();
    while i > 0 || j > 0 {
        let here = at(i, j);
        if i > 0 && j > 0 {
            let mis = u64::from(xs[i - 1] != ys[j - 1]);
            if at(i - 1, j - 1).saturating_add(mis) == here {
                rev.push(if mis == 0 { EditOp::Match(1) } else { EditOp::Substitute(ys[j - 1]) });
                i -= 1;
                j -= 1;
                continue;
            }
        }
        if i > 0 && at(i - 1, j).saturating_add(a) == here {
            rev.push(EditOp::Delete);
            i -= 1;
        } else {
            debug_assert!(j > 0 && at(i, j - 1).saturating_add(a) == here);
            rev.push(EditOp::Insert(ys[j - 1]));
            j -= 1;
        }
    }
    (EdaOutcome::Within(ScaledCost::new(v, a)), Some(EditScript::from_reversed(rev)))
}
