//! Approximate longest common extension with mismatch budget.
//!
//! `LCE_{d,ε}(x, y)` is any value between `LCE_d(x, y)` and
//! `LCE_{(1+ε)d}(x, y)`, where `LCE_d` is the longest common prefix of
//! `X[x..]` and `Y[y..]` allowing `d` mismatches. The index keeps a naive
//! sampler for short dyadic ranges and a text-to-pattern component
//! ([`PMIndex`]) for every dyadic range long enough to amortize one; a
//! query greedily extends over dyadic blocks and compares the combined
//! sampled mismatch count with `(1 + ε/3) r d`.

mod index;
mod periodic;
mod pm;

pub use index::{
    approx_lce_query, build_approx_lce, build_approx_lce_with, component_delta, lce_rate, ApproxLceIndex, LceOptions,
};
pub use periodic::{build_periodic_pm, context_length, periodic_pm_query, PeriodicPMIndex};
pub use pm::{build_pm_index, build_pm_index_with, pm_query, PMIndex, PmKind, PmOptions};

use crate::text::ByteText;

/// A window `T[off..off+len)` read through the parent's probe counter.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Frag<'t> {
    text: &'t ByteText,
    off: usize,
    len: usize,
}

impl<'t> Frag<'t> {
    pub(crate) fn whole(text: &'t ByteText) -> Self {
        Frag { text, off: 0, len: text.len() }
    }

    pub(crate) fn new(text: &'t ByteText, off: usize, len: usize) -> Self {
        debug_assert!(off + len <= text.len());
        Frag { text, off, len }
    }

    #[inline]
    pub(crate) fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub(crate) fn at(&self, i: usize) -> u8 {
        self.text.at(self.off + i)
    }
}
