use serde::{Deserialize, Serialize};

use super::measure::PAD;
use crate::error::{contract, Result};

/// Output of [`alignment_gadget`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlignmentGadget {
    pub x: Vec<u8>,
    pub y: Vec<u8>,
    /// `(n + m)·ℓ_Y`, the additive constant of both bounding lemmas, in units.
    pub c_units: u64,
    pub ell: usize,
}

fn common_len(items: &[Vec<u8>], what: &str) -> Result<usize> {
    let len = items.first().map_or(0, Vec::len);
    if items.iter().any(|s| s.len() != len) {
        return contract(format!("{what} strings must share one length"));
    }
    Ok(len)
}

fn push_run(out: &mut Vec<u8>, c: u8, len: usize) {
    out.extend(std::iter::repeat_n(c, len));
}

/// X side: `⊙_i A^{2ℓ} X_i A^ℓ B^ℓ` with `A = σ_Y`, `B = σ_Y + 1`.
pub fn gadget_x(xs: &[Vec<u8>], sigma_y: u8, ell: usize) -> Vec<u8> {
    let (a, b) = (sigma_y, sigma_y + 1);
    let mut out = Vec::new();
    for xi in xs {
        push_run(&mut out, a, 2 * ell);
        out.extend_from_slice(xi);
        push_run(&mut out, a, ell);
        push_run(&mut out, b, ell);
    }
    out
}

/// Y side: `B^{nℓ} ⊙_j (A^ℓ Y_j B^ℓ) B^{nℓ}` where `n` is the X-side count.
pub fn gadget_y(ys: &[Vec<u8>], n: usize, sigma_y: u8) -> Vec<u8> {
    let ell = ys.first().map_or(0, Vec::len);
    let (a, b) = (sigma_y, sigma_y + 1);
    let mut out = Vec::new();
    push_run(&mut out, b, n * ell);
    for yj in ys {
        push_run(&mut out, a, ell);
        out.extend_from_slice(yj);
        push_run(&mut out, b, ell);
    }
    push_run(&mut out, b, n * ell);
    out
}

/// Builds the alignment gadget over `n` X-side and `m` Y-side strings.
/// Every `Y_j` symbol must be below `σ_Y`, and `σ_Y + 1` must stay clear of
/// the padding symbol.
pub fn alignment_gadget(xs: &[Vec<u8>], ys: &[Vec<u8>], sigma_y: u8) -> Result<AlignmentGadget> {
    let (n, m) = (xs.len(), ys.len());
    if m == 0 || n < m {
        return contract(format!("alignment gadget needs n >= m >= 1, got n={n}, m={m}"));
    }
    common_len(xs, "X-side")?;
    let ell = common_len(ys, "Y-side")?;
    if sigma_y.checked_add(1).is_none_or(|b| b >= PAD) {
        return contract("sigma_Y + 1 collides with the padding symbol");
    }
    if ys.iter().flatten().any(|&c| c >= sigma_y) {
        return contract("Y-side symbols must be below sigma_Y");
    }
    if xs.iter().flatten().any(|&c| c == PAD) {
        return contract("X-side strings contain the padding symbol");
    }
    Ok(AlignmentGadget {
        x: gadget_x(xs, sigma_y, ell),
        y: gadget_y(ys, n, sigma_y),
        c_units: ((n + m) * ell) as u64,
        ell,
    })
}
