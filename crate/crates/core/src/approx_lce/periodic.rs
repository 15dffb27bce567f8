//! Text-to-pattern Hamming sampling for almost periodic strings.
//!
//! Every mismatch `X[x] != Y[y]` is charged either to `x` (counted iff
//! `x ∈ S_X`) or to `y` (counted iff `y ∈ S_Y`), depending on which of the two
//! characters is rarer in the contexts `C_x = {x, x+p, ..., x+(c-1)p}` and
//! `C_y`. Because the charge depends only on the strings, the count is an
//! exact rate-`r` thinning of the mismatch set. A position is skipped when all
//! sampled characters of its contexts agree; for a true mismatch this happens
//! with probability at most `(1-r)^c <= δ²`.

use crate::error::{contract, Result};
use crate::rng::{sample_rate_positions, RandomSource};
use crate::text::ByteText;

use super::Frag;

/// Sampled positions of one string grouped by residue modulo `p`, each list
/// with a "next entry holding a different character" link.
#[derive(Debug, Clone)]
pub(crate) struct ClassLists {
    p: usize,
    pos: Vec<Vec<usize>>,
    ch: Vec<Vec<u8>>,
    next_diff: Vec<Vec<u32>>,
    total: usize,
}

const NONE: u32 = u32::MAX;

impl ClassLists {
    pub(crate) fn build(f: Frag<'_>, sampled: &[usize], p: usize) -> Self {
        let classes = p.min(f.len().max(1));
        let mut pos = vec![Vec::new(); classes];
        let mut ch = vec![Vec::new(); classes];
        for &q in sampled {
            pos[q % p].push(q);
            ch[q % p].push(f.at(q));
        }
        let next_diff = ch
            .iter()
            .map(|c| {
                let mut nd = vec![NONE; c.len()];
                for i in (0..c.len()).rev() {
                    if i + 1 < c.len() {
                        nd[i] = if c[i + 1] != c[i] { (i + 1) as u32 } else { nd[i + 1] };
                    }
                }
                nd
            })
            .collect();
        ClassLists { p, pos, ch, next_diff, total: sampled.len() }
    }

    pub(crate) fn len(&self) -> usize {
        self.total
    }

    fn class(&self, q: usize) -> Option<(usize, usize)> {
        let k = q % self.p;
        let list = self.pos.get(k)?;
        let i = list.partition_point(|&v| v < q);
        (i < list.len()).then_some((k, i))
    }

    /// Cached character if `q` is sampled.
    pub(crate) fn get(&self, q: usize) -> Option<u8> {
        let (k, i) = self.class(q)?;
        (self.pos[k][i] == q).then(|| self.ch[k][i])
    }

    /// Smallest sampled position `>= q` congruent to `q` modulo `p`.
    pub(crate) fn next_sampled(&self, q: usize) -> Option<usize> {
        let (k, i) = self.class(q)?;
        Some(self.pos[k][i])
    }

    /// Smallest sampled position `>= q` congruent to `q` holding a character
    /// other than `a`.
    pub(crate) fn next_different(&self, q: usize, a: u8) -> Option<usize> {
        let (k, i) = self.class(q)?;
        if self.ch[k][i] != a {
            return Some(self.pos[k][i]);
        }
        match self.next_diff[k][i] {
            NONE => None,
            j => Some(self.pos[k][j as usize]),
        }
    }
}

/// Query structure for strings with small periodicity violation at period `p`.
#[derive(Debug, Clone)]
pub struct PeriodicPMIndex<'t> {
    x: Frag<'t>,
    y: Frag<'t>,
    pub p: usize,
    pub m: u64,
    pub rate: f64,
    pub context: usize,
    sx: ClassLists,
    sy: ClassLists,
}

/// Context length `ceil(2 ln(1/δ) / r)`.
pub fn context_length(r: f64, delta: f64) -> usize {
    let c = (2.0 * (1.0 / delta).ln() / r).ceil().max(1.0) as usize;
    debug_assert!(r * c as f64 >= 2.0 * (1.0 / delta).ln() - 1e-9);
    c
}

/// Builds the periodic index over the full strings.
pub fn build_periodic_pm<'t>(
    x: &'t ByteText,
    y: &'t ByteText,
    p: usize,
    m: u64,
    r: f64,
    delta: f64,
    rng: &mut RandomSource,
) -> Result<PeriodicPMIndex<'t>> {
    if p == 0 {
        return contract("period must be positive");
    }
    if !(delta > 0.0 && delta < 1.0) {
        return contract("δ must lie in (0, 1)");
    }
    if x.len() > y.len() {
        return contract("pattern longer than text");
    }
    build_periodic_frag(Frag::whole(x), Frag::whole(y), p, m, r, delta, None, rng)
}

#[allow(clippy::too_many_arguments)]
pub(crate) fn build_periodic_frag<'t>(
    x: Frag<'t>,
    y: Frag<'t>,
    p: usize,
    m: u64,
    r: f64,
    delta: f64,
    budget: Option<usize>,
    rng: &mut RandomSource,
) -> Result<PeriodicPMIndex<'t>> {
    let px = sample_rate_positions(x.len(), r, rng)?;
    let py = sample_rate_positions(y.len(), r, rng)?;
    if let Some(b) = budget {
        if px.len() + py.len() > b {
            return contract("sample budget exceeded");
        }
    }
    let sx = ClassLists::build(x, &px, p);
    let sy = ClassLists::build(y, &py, p);
    Ok(PeriodicPMIndex { x, y, p, m, rate: r, context: context_length(r, delta), sx, sy })
}

impl<'t> PeriodicPMIndex<'t> {
    pub fn sample_sizes(&self) -> (usize, usize) {
        (self.sx.len(), self.sy.len())
    }

    /// Runs the query, giving up once `cap` elementary steps are spent.
    pub(crate) fn query_capped(&self, s: usize, cap: u64) -> Option<u64> {
        let (n, ny, p, c) = (self.x.len(), self.y.len(), self.p, self.context);
        let span = (c - 1).saturating_mul(p);
        let mut h = 0u64;
        let mut steps = 0u64;
        for rho in 0..p.min(n) {
            let mut xi = rho;
            while xi < n {
                steps += 1;
                if steps > cap {
                    return None;
                }
                let yi = s + xi;
                let (cx, cy) = (self.sx.get(xi), self.sy.get(yi));
                let Some(a) = cx.or(cy) else {
                    let nx = self.sx.next_sampled(xi);
                    let ny_ = self.sy.next_sampled(yi).map(|q| q - s);
                    xi = match (nx, ny_) {
                        (Some(u), Some(v)) => u.min(v),
                        (Some(u), None) => u,
                        (None, Some(v)) => v,
                        (None, None) => break,
                    };
                    continue;
                };
                let dx = self.sx.next_different(xi, a).map_or(usize::MAX, |q| q - xi);
                let dy = self.sy.next_different(yi, a).map_or(usize::MAX, |q| q - yi);
                let lim = (n - xi).min(dx).min(dy);
                if span < lim {
                    xi += p * (lim - span).div_ceil(p);
                    continue;
                }
                let xc = cx.unwrap_or_else(|| self.x.at(xi));
                let yc = cy.unwrap_or_else(|| self.y.at(yi));
                if xc != yc {
                    let (mut mx, mut my) = (0u64, 0u64);
                    for t in 0..c {
                        let q = xi + t * p;
                        if q < n {
                            let v = self.x.at(q);
                            mx += (v == xc) as u64;
                            my += (v == yc) as u64;
                        }
                        let q = yi + t * p;
                        if q < ny {
                            let v = self.y.at(q);
                            mx += (v == xc) as u64;
                            my += (v == yc) as u64;
                        }
                        if q >= ny && xi + t * p >= n {
                            break;
                        }
                    }
                    steps += 2 * c as u64;
                    if (cx.is_some() && mx <= my) || (cy.is_some() && my < mx) {
                        h += 1;
                    }
                }
                xi += p;
            }
        }
        Some(h)
    }
}

/// Sampled mismatch count at shift `s`, distributed within total variation
/// `δ` of `Bin(HD(X, Y[s..s+|X|)), r)`.
pub fn periodic_pm_query(idx: &PeriodicPMIndex<'_>, s: usize) -> Result<u64> {
    if s + idx.x.len() > idx.y.len() {
        return contract(format!("shift {s} outside [0..={}]", idx.y.len() - idx.x.len()));
    }
    Ok(idx.query_capped(s, u64::MAX).expect("uncapped query"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::hamming;
    use proptest::collection::vec;
    use proptest::prelude::*;

    fn tiny_delta() -> f64 {
        1e-12
    }

    #[test]
    fn class_lists_jumps() {
        let t = ByteText::from("aabaaaba");
        let l = ClassLists::build(Frag::whole(&t), &[0, 1, 2, 3, 4, 6, 7], 2);
        assert_eq!(l.get(2), Some(b'b'));
        assert_eq!(l.get(5), None);
        assert_eq!(l.next_sampled(5), Some(7));
        assert_eq!(l.next_different(0, b'a'), Some(2));
        assert_eq!(l.next_different(4, b'a'), Some(6));
        assert_eq!(l.next_different(1, b'a'), None);
        assert_eq!(l.next_different(1, b'b'), Some(1));
    }

    #[test]
    fn spec_small_example_exact_at_full_rate() {
        let (x, y) = (ByteText::from("aab"), ByteText::from("aabab"));
        let idx = build_periodic_pm(&x, &y, 1, 4, 1.0, tiny_delta(), &mut RandomSource::new(0)).unwrap();
        for s in 0..=2 {
            let want = hamming(b"aab", &b"aabab"[s..s + 3]) as u64;
            assert_eq!(periodic_pm_query(&idx, s).unwrap(), want, "shift {s}");
        }
        assert!(periodic_pm_query(&idx, 3).is_err());
    }

    #[test]
    fn uniform_strings_skip_quickly() {
        let x = ByteText::new(vec![b'a'; 1000]);
        let idx = build_periodic_pm(&x, &x, 1, 0, 0.2, 1e-6, &mut RandomSource::new(3)).unwrap();
        // One group; the filter jumps over everything except the tail of
        // length c where contexts leave the string.
        let cap = 4 * idx.context as u64 + 50;
        assert_eq!(idx.query_capped(0, cap), Some(0));
    }

    #[test]
    fn nothing_sampled_counts_zero() {
        let x = ByteText::from("abc");
        let y = ByteText::from("xyz");
        let mut seed = 0;
        let idx = loop {
            let idx = build_periodic_pm(&x, &y, 1, 6, 0.01, 0.5, &mut RandomSource::new(seed)).unwrap();
            if idx.sample_sizes() == (0, 0) {
                break idx;
            }
            seed += 1;
        };
        assert_eq!(periodic_pm_query(&idx, 0).unwrap(), 0);
    }

    #[test]
    fn mean_tracks_rate_times_h() {
        // h = 50 planted mismatches, r = 0.2: mean 10.
        let n = 1000;
        let x = ByteText::new((0..n).map(|i| b"ab"[i % 2]).collect::<Vec<_>>());
        let mut yv = x.as_bytes().to_vec();
        for i in 0..50 {
            yv[i * 20 + 7] = b'z';
        }
        let y = ByteText::new(yv);
        let trials = 2000;
        let mut sum = 0;
        for t in 0..trials {
            let idx = build_periodic_pm(&x, &y, 2, 100, 0.2, 1e-9, &mut RandomSource::new(t)).unwrap();
            sum += periodic_pm_query(&idx, 0).unwrap();
        }
        let mean = sum as f64 / trials as f64;
        assert!((mean - 10.0).abs() < 1.0, "{mean}");
    }

    proptest! {
        #[test]
        fn full_rate_partition_is_exact(
            x in vec(0u8..3, 1..=128),
            extra in vec(0u8..3, 0..6),
            p in 1usize..5,
        ) {
            let mut y = x.clone();
            y.extend_from_slice(&extra);
            let (bx, by) = (ByteText::new(x.clone()), ByteText::new(y.clone()));
            let idx = build_periodic_pm(&bx, &by, p, 0, 1.0, tiny_delta(), &mut RandomSource::new(1)).unwrap();
            for s in 0..=extra.len() {
                let want = hamming(&x, &y[s..s + x.len()]) as u64;
                prop_assert_eq!(periodic_pm_query(&idx, s).unwrap(), want);
            }
        }
    }
}
