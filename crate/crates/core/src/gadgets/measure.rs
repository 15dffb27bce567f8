use crate::cost::{ScaledCost, Threshold};
use crate::error::{contract, Result};
use crate::exact::eda_exact;
use crate::text::ByteText;

/// The padding symbol `$` used by [`d_plus`].
pub const PAD: u8 = 11;

/// `ED_a(X, Y)` computed by the exact module under a threshold that always
/// admits the distance.
pub fn eda_value(x: &[u8], y: &[u8], a: u64) -> Result<ScaledCost> {
    if a == 0 {
        return contract("weight a must be positive");
    }
    let short = x.len().min(y.len()) as u64;
    let diff = x.len().abs_diff(y.len()) as u64;
    let bound = a * diff + short;
    let k = Threshold::from_units(bound, a);
    match eda_exact(&ByteText::new(x), &ByteText::new(y), &k).value() {
        Some(c) => Ok(c),
        None => unreachable!("the bound is realized by a substitute-then-indel alignment"),
    }
}

/// `D_a(X, Y) = ED_a(X, Y) + |Y| - |X|`, never negative.
pub fn d_a(x: &[u8], y: &[u8], a: u64) -> Result<ScaledCost> {
    let e = eda_value(x, y, a)?.units as i128;
    let v = e + (y.len() as i128 - x.len() as i128) * a as i128;
    Ok(ScaledCost::new(v as u64, a))
}

/// `$^{|Y|} · X · $^{|Y|}`.
pub fn pad_dollar(x: &[u8], y_len: usize) -> Vec<u8> {
    let mut p = Vec::with_capacity(x.len() + 2 * y_len);
    p.extend(std::iter::repeat_n(PAD, y_len));
    p.extend_from_slice(x);
    p.extend(std::iter::repeat_n(PAD, y_len));
    p
}

/// `D_a^+(X, Y) = D_a($^{|Y|} X $^{|Y|}, Y)`. Fails if `Y` contains `$`.
pub fn d_plus(x: &[u8], y: &[u8], a: u64) -> Result<ScaledCost> {
    if y.contains(&PAD) {
        return contract("padding symbol occurs in Y");
    }
    d_a(&pad_dollar(x, y.len()), y, a)
}

/// Coordinate value `0_X = 01`, `1_X = 00`.
pub fn coordinate_x(bit: u8) -> Vec<u8> {
    if bit == 0 {
        vec![0, 1]
    } else {
        vec![0, 0]
    }
}

/// Coordinate value `0_Y = 0`, `1_Y = 1`.
pub fn coordinate_y(bit: u8) -> Vec<u8> {
    vec![bit.min(1)]
}
