//! Brute-force reference implementations.
//!
//! Everything here is deliberately plain: full quadratic tables, linear
//! scans, exhaustive enumeration. These functions read raw byte slices and
//! never touch probe counters or the optimized modules.

use crate::cost::ScaledCost;
use crate::error::{Error, Result};
use crate::gadgets::OvInstance;
use crate::rng::RandomSource;

/// Default bound on the number of DP cells an oracle will fill.
pub const DEFAULT_CELL_LIMIT: u128 = 10_000_000;

fn check_cells(cells: u128, limit: u128) -> Result<()> {
    if cells > limit {
        Err(Error::OracleRefused { cells, limit })
    } else {
        Ok(())
    }
}

/// The full table `T[x][y] = ED_a(X[0..x), Y[0..y))` in units.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FullDPTable {
    pub weight_a: u64,
    cols: usize,
    cells: Vec<u64>,
}

impl FullDPTable {
    pub fn get(&self, x: usize, y: usize) -> u64 {
        self.cells[x * self.cols + y]
    }

    pub fn rows(&self) -> usize {
        self.cells.len() / self.cols
    }

    pub fn cols(&self) -> usize {
        self.cols
    }
}

pub fn oracle_eda_table(x: &[u8], y: &[u8], a: u64, limit: u128) -> Result<FullDPTable> {
    let cols = y.len() + 1;
    check_cells((x.len() as u128 + 1) * cols as u128, limit)?;
    let mut cells = vec![0u64; (x.len() + 1) * cols];
    for j in 0..cols {
        cells[j] = j as u64 * a;
    }
    for i in 1..=x.len() {
        let (prev, cur) = cells[(i - 1) * cols..(i + 1) * cols].split_at_mut(cols);
        cur[0] = i as u64 * a;
        for j in 1..cols {
            let sub = prev[j - 1] + u64::from(x[i - 1] != y[j - 1]);
            cur[j] = sub.min(prev[j] + a).min(cur[j - 1] + a);
        }
    }
    Ok(FullDPTable { weight_a: a, cols, cells })
}

/// `ED_a(X, Y)` by the quadratic recurrence, refusing beyond `limit` cells.
pub fn oracle_eda_limited(x: &[u8], y: &[u8], a: u64, limit: u128) -> Result<ScaledCost> {
    check_cells((x.len() as u128 + 1) * (y.len() as u128 + 1), limit)?;
    let mut row: Vec<u64> = (0..=y.len() as u64).map(|j| j * a).collect();
    for i in 1..=x.len() {
        let mut diag = row[0];
        row[0] = i as u64 * a;
        let xi = x[i - 1];
        for j in 1..=y.len() {
            let up = row[j];
            let sub = diag + u64::from(xi != y[j - 1]);
            row[j] = sub.min(up + a).min(row[j - 1] + a);
            diag = up;
        }
    }
    Ok(ScaledCost::new(row[y.len()], a))
}

/// `ED_a(X, Y)` with the default cell limit.
pub fn oracle_eda(x: &[u8], y: &[u8], a: u64) -> Result<ScaledCost> {
    oracle_eda_limited(x, y, a, DEFAULT_CELL_LIMIT)
}

/// `D_a(X, Y) = ED_a(X, Y) + |Y| - |X|` in units (always nonnegative).
pub fn oracle_d_a(x: &[u8], y: &[u8], a: u64, limit: u128) -> Result<u64> {
    let e = oracle_eda_limited(x, y, a, limit)?.units;
    let v = e as i128 + (y.len() as i128 - x.len() as i128) * a as i128;
    Ok(v as u64)
}

/// Whether `X` and `Y` admit an alignment with at most `k_i` indels and
/// `k_s` substitutions. DP over `(x, y, indels)` minimizing substitutions.
pub fn oracle_bicriteria(x: &[u8], y: &[u8], k_i: usize, k_s: usize) -> Result<bool> {
    oracle_bicriteria_limited(x, y, k_i, k_s, DEFAULT_CELL_LIMIT)
}

pub fn oracle_bicriteria_limited(x: &[u8], y: &[u8], k_i: usize, k_s: usize, limit: u128) -> Result<bool> {
    check_cells(
        (x.len() as u128 + 1) * (y.len() as u128 + 1) * (k_i as u128 + 1),
        limit,
    )?;
    Ok(min_substitutions(x, y, k_i)
        .iter()
        .any(|&s| s <= k_s as u64))
}

/// For every indel budget `i <= k_i`, the minimum number of substitutions of
/// an alignment using exactly `i` indels (`u64::MAX` if none exists).
pub fn min_substitutions(x: &[u8], y: &[u8], k_i: usize) -> Vec<u64> {
    const INF: u64 = u64::MAX / 4;
    let w = k_i + 1;
    let cols = y.len() + 1;
    let mut prev = vec![INF; cols * w];
    let mut cur = vec![INF; cols * w];
    for j in 0..cols.min(w) {
        prev[j * w + j] = 0;
    }
    for i in 1..=x.len() {
        cur.fill(INF);
        if i < w {
            cur[i] = 0;
        }
        for j in 1..cols {
            let mis = u64::from(x[i - 1] != y[j - 1]);
            for t in 0..w {
                let mut best = prev[(j - 1) * w + t].saturating_add(mis);
                if t > 0 {
                    best = best.min(prev[j * w + t - 1]).min(cur[(j - 1) * w + t - 1]);
                }
                cur[j * w + t] = best;
            }
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[(cols - 1) * w..cols * w]
        .iter()
        .map(|&v| if v >= INF { u64::MAX } else { v })
        .collect()
}

/// Number of mismatching positions of two equal-length strings.
pub fn hamming(x: &[u8], y: &[u8]) -> usize {
    assert_eq!(x.len(), y.len(), "hamming distance needs equal lengths");
    x.iter().zip(y).filter(|(a, b)| a != b).count()
}

/// Plain longest common extension by scanning.
pub fn naive_lce(x: &[u8], y: &[u8], p: usize, q: usize) -> usize {
    x[p..].iter().zip(&y[q..]).take_while(|(a, b)| a == b).count()
}

/// `LCE_d(p, q)`: the longest `l` with at most `d` mismatches between
/// `X[p..p+l)` and `Y[q..q+l)`.
pub fn oracle_lce_d(x: &[u8], y: &[u8], p: usize, q: usize, d: usize) -> usize {
    let mut budget = d;
    let mut l = 0;
    for (a, b) in x[p..].iter().zip(&y[q..]) {
        if a != b {
            if budget == 0 {
                break;
            }
            budget -= 1;
        }
        l += 1;
    }
    l
}

/// A random `X` of length `n` over `[0..sigma)` and a copy `Y` with exactly
/// `subs` substitutions at distinct positions followed by `indels` random
/// insertions or deletions. Edits may cancel; callers that need the true
/// distance must measure it.
pub fn plant_edits(n: usize, sigma: u8, indels: usize, subs: usize, rng: &mut RandomSource) -> (Vec<u8>, Vec<u8>) {
    assert!(sigma >= 2, "need at least two symbols");
    let x: Vec<u8> = (0..n).map(|_| rng.below(sigma as u64) as u8).collect();
    let mut y = x.clone();
    let mut picked = std::collections::BTreeSet::new();
    while picked.len() < subs.min(n) {
        picked.insert(rng.below(n as u64) as usize);
    }
    for &p in &picked {
        let shift = 1 + rng.below(sigma as u64 - 1) as u8;
        y[p] = (y[p] + shift) % sigma;
    }
    for _ in 0..indels {
        if y.is_empty() || rng.bernoulli(0.5) {
            let p = rng.below(y.len() as u64 + 1) as usize;
            y.insert(p, rng.below(sigma as u64) as u8);
        } else {
            let p = rng.below(y.len() as u64) as usize;
            y.remove(p);
        }
    }
    (x, y)
}

/// Whether some `u ∈ U`, `v ∈ V` have scalar product zero.
pub fn oracle_ov(inst: &OvInstance) -> Result<bool> {
    check_cells(
        inst.u.len() as u128 * inst.v.len() as u128 * inst.d.max(1) as u128,
        DEFAULT_CELL_LIMIT,
    )?;
    Ok(inst
        .u
        .iter()
        .any(|u| inst.v.iter().any(|v| u.iter().zip(v).all(|(&p, &q)| p & q == 0))))
}

/// All sets of pairs `(i, j)` in `[0..n) × [0..m)` that are strictly
/// increasing in both coordinates (non-crossing matchings), including the
/// empty set.
pub fn noncrossing_matchings(n: usize, m: usize) -> Vec<Vec<(usize, usize)>> {
    fn rec(i0: usize, j0: usize, n: usize, m: usize, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        out.push(cur.clone());
        for i in i0..n {
            for j in j0..m {
                cur.push((i, j));
                rec(i + 1, j + 1, n, m, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(0, 0, n, m, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::collection::vec;
    use proptest::prelude::*;

    fn classic_edit_distance(x: &[u8], y: &[u8]) -> u64 {
        let mut d = vec![vec![0u64; y.len() + 1]; x.len() + 1];
        for (i, row) in d.iter_mut().enumerate() {
            row[0] = i as u64;
        }
        for j in 0..=y.len() {
            d[0][j] = j as u64;
        }
        for i in 1..=x.len() {
            for j in 1..=y.len() {
                let c = if x[i - 1] == y[j - 1] { 0 } else { 1 };
                d[i][j] = (d[i - 1][j] + 1).min(d[i][j - 1] + 1).min(d[i - 1][j - 1] + c);
            }
        }
        d[x.len()][y.len()]
    }

    #[test]
    fn eda_examples() {
        assert_eq!(oracle_eda(b"abc", b"abc", 5).unwrap().units, 0);
        assert_eq!(oracle_eda(b"", b"abcd", 3).unwrap().units, 12);
        assert_eq!(oracle_eda(b"ab", b"ba", 2).unwrap().units, 2);
        assert_eq!(oracle_eda(b"aXbYc", b"abc", 3).unwrap().units, 6);
    }

    #[test]
    fn eda_refuses_large() {
        let x = vec![0u8; 5000];
        assert!(matches!(
            oracle_eda(&x, &x, 1),
            Err(Error::OracleRefused { .. })
        ));
        assert!(oracle_eda_limited(&x, &x, 1, 30_000_000).is_ok());
    }

    #[test]
    fn table_matches_rowwise() {
        let t = oracle_eda_table(b"kitten", b"sitting", 3, DEFAULT_CELL_LIMIT).unwrap();
        assert_eq!(t.get(0, 0), 0);
        assert_eq!(t.get(6, 7), oracle_eda(b"kitten", b"sitting", 3).unwrap().units);
        for x in 0..=6 {
            for y in 0..=7 {
                let v = oracle_eda(&b"kitten"[..x], &b"sitting"[..y], 3).unwrap().units;
                assert_eq!(t.get(x, y), v);
            }
        }
    }

    #[test]
    fn bicriteria_examples() {
        assert!(oracle_bicriteria(b"abc", b"abc", 0, 0).unwrap());
        assert!(oracle_bicriteria(b"abc", b"adc", 0, 1).unwrap());
        assert!(!oracle_bicriteria(b"abc", b"adc", 0, 0).unwrap());
        assert!(!oracle_bicriteria(b"abcd", b"ab", 1, 10).unwrap());
        assert!(oracle_bicriteria(b"abcd", b"ab", 2, 0).unwrap());
        assert!(oracle_bicriteria(b"ab", b"ba", 2, 0).unwrap());
        assert!(oracle_bicriteria(b"ab", b"ba", 0, 2).unwrap());
        assert!(!oracle_bicriteria(b"ab", b"ba", 1, 1).unwrap());
    }

    #[test]
    fn lce_d_examples() {
        let x = b"aaaaabaaaaa";
        let y = b"aaaaaaaaaaa";
        assert_eq!(oracle_lce_d(x, y, 0, 0, 1), 11);
        assert_eq!(oracle_lce_d(x, y, 0, 0, 0), 5);
        assert_eq!(oracle_lce_d(x, y, 0, 0, 0), naive_lce(x, y, 0, 0));
        assert_eq!(oracle_lce_d(b"abcd", b"xyz", 1, 0, 10), 3);
    }

    #[test]
    fn ov_examples() {
        let zero = OvInstance::new(vec![vec![1, 1], vec![0, 0]], vec![vec![1, 1]]).unwrap();
        assert!(oracle_ov(&zero).unwrap());
        let no = OvInstance::new(vec![vec![1, 1]], vec![vec![1, 1]]).unwrap();
        assert!(!oracle_ov(&no).unwrap());
    }

    #[test]
    fn ov_matches_bitset_recomputation() {
        let mut rng = crate::rng::RandomSource::new(11);
        for _ in 0..200 {
            let gen = |rng: &mut crate::rng::RandomSource| -> Vec<Vec<u8>> {
                (0..8).map(|_| (0..6).map(|_| rng.below(2) as u8).collect()).collect()
            };
            let inst = OvInstance::new(gen(&mut rng), gen(&mut rng)).unwrap();
            let bits = |v: &Vec<u8>| v.iter().fold(0u32, |acc, &b| acc << 1 | b as u32);
            let ub: Vec<u32> = inst.u.iter().map(bits).collect();
            let vb: Vec<u32> = inst.v.iter().map(bits).collect();
            let expect = ub.iter().any(|p| vb.iter().any(|q| p & q == 0));
            assert_eq!(oracle_ov(&inst).unwrap(), expect);
        }
    }

    #[test]
    fn matchings_enumerated() {
        let all = noncrossing_matchings(3, 2);
        // empty + 6 singletons + 3 pairs with i1<i2
        assert_eq!(all.len(), 1 + 6 + 3);
        for a in &all {
            assert!(a.windows(2).all(|w| w[0].0 < w[1].0 && w[0].1 < w[1].1));
        }
    }

    proptest! {
        #[test]
        fn a_one_is_classic(x in vec(0u8..3, 0..20), y in vec(0u8..3, 0..20)) {
            prop_assert_eq!(oracle_eda(&x, &y, 1).unwrap().units, classic_edit_distance(&x, &y));
        }

        #[test]
        fn metric(x in vec(0u8..2, 0..14), y in vec(0u8..2, 0..14), z in vec(0u8..2, 0..14), a in 1u64..6) {
            let xy = oracle_eda(&x, &y, a).unwrap().units;
            prop_assert_eq!(xy, oracle_eda(&y, &x, a).unwrap().units);
            let yz = oracle_eda(&y, &z, a).unwrap().units;
            let xz = oracle_eda(&x, &z, a).unwrap().units;
            prop_assert!(xz <= xy + yz);
        }

        #[test]
        fn hamming_regime(pair in (1usize..16).prop_flat_map(|n| (vec(0u8..3, n), vec(0u8..3, n)))) {
            let (x, y) = pair;
            let a = x.len() as u64;
            prop_assert_eq!(oracle_eda(&x, &y, a).unwrap().units, hamming(&x, &y) as u64);
        }

        #[test]
        fn bicriteria_consistent_with_eda(x in vec(0u8..2, 0..10), y in vec(0u8..2, 0..10), a in 1u64..5) {
            // ED_a is the minimum over feasible (indels, substitutions) of i*a + s.
            let e = oracle_eda(&x, &y, a).unwrap().units;
            let n = x.len() + y.len();
            let mut best = u64::MAX;
            for i in 0..=n {
                for s in 0..=n {
                    if oracle_bicriteria(&x, &y, i, s).unwrap() {
                        best = best.min(i as u64 * a + s as u64);
                    }
                }
            }
            prop_assert_eq!(best, e);
        }
    }
}
