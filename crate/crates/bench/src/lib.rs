//! Shared inputs for the benchmarks.

use weda_core::oracle::plant_edits;
use weda_core::{ByteText, RandomSource};

/// A random length-`n` string over four symbols and a copy carrying
/// `indels` insertions/deletions and `subs` substitutions.
pub fn planted(n: usize, indels: usize, subs: usize, seed: u64) -> (ByteText, ByteText) {
    let (x, y) = plant_edits(n, 4, indels, subs, &mut RandomSource::new(seed));
    (ByteText::new(x), ByteText::new(y))
}
