//! Exact `(k_I, k_S)`-alignment decision by two-parameter waves.

use crate::error::{contract, Result};
use crate::lce::build_lce;
use crate::text::ByteText;

use super::script::{EditOp, EditScript};
use super::waves::NEG;

/// `D_{vI,vS}[s]` for `vS ∈ [0..=k_S]`, `vI ∈ [0..=k_I]`, `s ∈ [-vI..=vI]`.
#[derive(Debug, Clone)]
pub struct BiWaveTable {
    pub k_i: usize,
    layers: Vec<Vec<i64>>,
    /// First `(vI, vS)` at which the full strings were certified.
    pub certified: Option<(usize, usize)>,
}

impl BiWaveTable {
    fn width(k_i: usize) -> usize {
        (k_i + 1) * (2 * k_i + 1)
    }

    pub fn get(&self, vi: usize, vs: usize, s: i64) -> i64 {
        get(&self.layers, self.k_i, vi, vs, s)
    }
}

fn get(layers: &[Vec<i64>], k_i: usize, vi: usize, vs: usize, s: i64) -> i64 {
    if s < -(vi as i64) || s > vi as i64 {
        return NEG;
    }
    match layers.get(vs) {
        Some(l) => l[vi * (2 * k_i + 1) + (s + k_i as i64) as usize],
        None => NEG,
    }
}

fn run(x: &ByteText, y: &ByteText, k_i: usize, k_s: usize, keep_all: bool) -> (bool, Option<BiWaveTable>) {
    if x.len().abs_diff(y.len()) > k_i {
        let t = keep_all.then(|| BiWaveTable { k_i, layers: Vec::new(), certified: None });
        return (false, t);
    }
    let lce = build_lce(x, y);
    let (nx, ny) = (x.len() as i64, y.len() as i64);
    let target = ny - nx;
    let row = 2 * k_i + 1;
    let mut layers: Vec<Vec<i64>> = Vec::new();
    let mut certified = None;

    'outer: for vs in 0..=k_s {
        let mut cur = vec![NEG; BiWaveTable::width(k_i)];
        let prev = if vs == 0 { None } else { layers.last() };
        for vi in 0..=k_i {
            for s in -(vi as i64)..=(vi as i64) {
                let mut best = NEG;
                if vi >= 1 {
                    best = best
                        .max(get_cur(&cur, k_i, vi - 1, s - 1))
                        .max(get_cur(&cur, k_i, vi - 1, s + 1).saturating_add(1));
                }
                if let Some(p) = prev {
                    best = best.max(get_cur(p, k_i, vi, s).saturating_add(1));
                }
                let mut dp = if best <= NEG / 2 { NEG } else { best.min(nx).min(ny - s) };
                if s == 0 {
                    dp = dp.max(0);
                }
                if dp < 0 || dp + s < 0 {
                    continue;
                }
                let d = dp + lce.lce(dp as usize, (dp + s) as usize) as i64;
                cur[vi * row + (s + k_i as i64) as usize] = d;
            }
            if target.unsigned_abs() as usize <= vi && get_cur(&cur, k_i, vi, target) == nx {
                certified = Some((vi, vs));
                layers.push(cur);
                break 'outer;
            }
        }
        if !keep_all {
            layers.clear();
        }
        layers.push(cur);
    }
    let yes = certified.is_some();
    let t = keep_all.then(|| BiWaveTable { k_i, layers, certified });
    (yes, t)
}

fn get_cur(cur: &[i64], k_i: usize, vi: usize, s: i64) -> i64 {
    if s < -(vi as i64) || s > vi as i64 {
        return NEG;
    }
    cur[vi * (2 * k_i + 1) + (s + k_i as i64) as usize]
}

/// Whether `X` and `Y` admit an alignment with at most `k_i` indels and at
/// most `k_s` substitutions.
pub fn bicriteria_exact(x: &ByteText, y: &ByteText, k_i: usize, k_s: usize) -> bool {
    run(x, y, k_i, k_s, false).0
}

/// Runs the bicriteria waves keeping every layer.
pub fn bicriteria_table(x: &ByteText, y: &ByteText, k_i: usize, k_s: usize) -> BiWaveTable {
    run(x, y, k_i, k_s, true).1.expect("table requested")
}

/// Walks the bicriteria waves back to the origin, yielding a script with at
/// most the certified numbers of indels and substitutions.
pub fn reconstruct_bicriteria(t: &BiWaveTable, x: &ByteText, y: &ByteText) -> Result<EditScript> {
    let Some((mut vi, mut vs)) = t.certified else {
        return contract("bicriteria table does not certify an alignment");
    };
    let (mut i, mut j) = (x.len() as i64, y.len() as i64);
    let mut rev = Vec::new();
    while i > 0 || j > 0 {
        let s = j - i;
        if i > 0 && j > 0 && x.at(i as usize - 1) == y.at(j as usize - 1) {
            rev.push(EditOp::Match(1));
            i -= 1;
            j -= 1;
        } else if i > 0 && j > 0 && vs >= 1 && t.get(vi, vs - 1, s) >= i - 1 {
            rev.push(EditOp::Substitute(y.at(j as usize - 1)));
            vs -= 1;
            i -= 1;
            j -= 1;
        } else if i > 0 && vi >= 1 && t.get(vi - 1, vs, s + 1) >= i - 1 {
            rev.push(EditOp::Delete);
            vi -= 1;
            i -= 1;
        } else if j > 0 && vi >= 1 && t.get(vi - 1, vs, s - 1) >= i {
            rev.push(EditOp::Insert(y.at(j as usize - 1)));
            vi -= 1;
            j -= 1;
        } else {
            return contract("bicriteria table is inconsistent with the texts");
        }
    }
    Ok(EditScript::from_reversed(rev))
}
