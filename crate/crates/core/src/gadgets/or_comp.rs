use serde::{Deserialize, Serialize};

use super::measure::PAD;
use crate::error::{contract, Result};

/// Fresh separator symbols used by [`or_composition_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrSymbols {
    pub a: u8,
    pub b: u8,
    pub c: u8,
    pub d: u8,
}

impl Default for OrSymbols {
    fn default() -> Self {
        OrSymbols { a: 6, b: 7, c: 8, d: 10 }
    }
}

/// Output of [`or_composition`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrComposition {
    pub x: Vec<u8>,
    pub y: Vec<u8>,
    /// `ℓ = ℓ_X + ℓ_Y`.
    pub ell: usize,
    pub ell_x: usize,
    pub ell_y: usize,
    /// `None` when `a >= n`; otherwise a note that the exact-value identity
    /// `D_a(X, Y) = (n-1)ℓ/a + min_i D_a^+(X_i, Y_i)` is not claimed.
    pub warning: Option<String>,
}

impl OrComposition {
    /// `(n-1)·ℓ`, the additive offset of the exact-value identity, in units.
    pub fn offset_units(&self, n: usize) -> u64 {
        (n.saturating_sub(1) * self.ell) as u64
    }
}

/// [`or_composition_with`] using `A, B, C, D = 6, 7, 8, 10`.
pub fn or_composition(pairs: &[(Vec<u8>, Vec<u8>)], a: u64) -> Result<OrComposition> {
    or_composition_with(pairs, a, OrSymbols::default())
}

/// Combines `n` pairs into `X = A^{ℓ_Y} ⊙_j (B^ℓ X_j C^ℓ A^{ℓ_Y})` and
/// `Y = Y_1 ⊙_{j≥2} (B^ℓ D^{ℓ_X} C^ℓ Y_j)`.
pub fn or_composition_with(pairs: &[(Vec<u8>, Vec<u8>)], a: u64, sym: OrSymbols) -> Result<OrComposition> {
    let n = pairs.len();
    if n == 0 {
        return contract("OR-composition needs at least one pair");
    }
    if a == 0 {
        return contract("weight a must be positive");
    }
    let ell_x = pairs[0].0.len();
    let ell_y = pairs[0].1.len();
    if pairs.iter().any(|(x, y)| x.len() != ell_x || y.len() != ell_y) {
        return contract("OR-composition pairs must share lengths");
    }
    let reserved = [sym.a, sym.b, sym.c, sym.d, PAD];
    let distinct = reserved.iter().enumerate().all(|(i, s)| !reserved[..i].contains(s));
    if !distinct {
        return contract("separator symbols must be pairwise distinct and differ from the padding symbol");
    }
    if pairs.iter().flat_map(|(x, y)| x.iter().chain(y)).any(|c| reserved.contains(c)) {
        return contract("input strings use a separator symbol");
    }
    let ell = ell_x + ell_y;
    let run = |out: &mut Vec<u8>, c: u8, len: usize| out.extend(std::iter::repeat_n(c, len));
    let mut x = Vec::with_capacity(ell_y + n * (2 * ell + ell));
    run(&mut x, sym.a, ell_y);
    for (xj, _) in pairs {
        run(&mut x, sym.b, ell);
        x.extend_from_slice(xj);
        run(&mut x, sym.c, ell);
        run(&mut x, sym.a, ell_y);
    }
    let mut y = pairs[0].1.clone();
    for (_, yj) in &pairs[1..] {
        run(&mut y, sym.b, ell);
        run(&mut y, sym.d, ell_x);
        run(&mut y, sym.c, ell);
        y.extend_from_slice(yj);
    }
    let warning = ((a as u128) < n as u128).then(|| {
        format!("a = {a} is below the {n} composed pairs, so the exact-value identity does not apply")
    });
    Ok(OrComposition { x, y, ell, ell_x, ell_y, warning })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::{d_a, d_plus};

    #[test]
    fn single_pair_shape() {
        let r = or_composition(&[(vec![0, 1], vec![1])], 1).unwrap();
        assert_eq!(r.x, vec![6, 7, 7, 7, 0, 1, 8, 8, 8, 6]);
        assert_eq!(r.y, vec![1]);
        assert!(r.warning.is_none());
    }

    #[test]
    fn lengths_and_warning() {
        let pairs = vec![(vec![0, 1, 0], vec![1, 1]); 3];
        let r = or_composition(&pairs, 2).unwrap();
        let (n, lx, ly, l) = (3, 3, 2, 5);
        assert_eq!(r.x.len(), ly + n * (2 * l + lx + ly));
        assert_eq!(r.y.len(), n * ly + (n - 1) * (2 * l + lx));
        assert!(r.warning.is_some());
    }

    #[test]
    fn rejects_reserved_symbols() {
        assert!(or_composition(&[(vec![6], vec![0])], 1).is_err());
        assert!(or_composition(&[(vec![0], vec![10])], 1).is_err());
        assert!(or_composition(&[(vec![0], vec![0]), (vec![0, 0], vec![0])], 2).is_err());
    }

    #[test]
    fn identity_on_small_cases() {
        let cases: Vec<Vec<(Vec<u8>, Vec<u8>)>> = vec![
            vec![(vec![0, 0], vec![1]), (vec![0, 1], vec![1])],
            vec![(vec![1, 0], vec![0, 0]), (vec![1, 1], vec![1, 0]), (vec![0], vec![1, 1])]
                .into_iter()
                .map(|(mut x, y)| {
                    x.resize(2, 0);
                    (x, y)
                })
                .collect(),
        ];
        for pairs in cases {
            let n = pairs.len() as u64;
            for a in n..=n + 2 {
                let r = or_composition(&pairs, a).unwrap();
                let best = pairs.iter().map(|(x, y)| d_plus(x, y, a).unwrap().units).min().unwrap();
                assert_eq!(d_a(&r.x, &r.y, a).unwrap().units, r.offset_units(pairs.len()) + best);
            }
        }
    }
}
