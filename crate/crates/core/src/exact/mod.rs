//! Exact bounded `ED_a` and exact bicriteria alignment.
//!
//! Two algorithms decide `ED_a(X, Y) <= k` exactly: a banded DP in
//! `O(n + nk)` time and diagonal waves over exact LCE queries in
//! `O(n + ak²)` time. [`eda_exact`] runs waves when `a·k < n` and the band
//! otherwise.

mod banded;
mod bicriteria;
mod script;
mod waves;

use serde::{Deserialize, Serialize};

use crate::cost::{ScaledCost, Threshold};
use crate::error::Result;
use crate::text::ByteText;

pub use banded::{eda_banded, eda_banded_with_script};
pub use bicriteria::{bicriteria_exact, bicriteria_table, reconstruct_bicriteria, BiWaveTable};
pub use script::{EditOp, EditScript};
pub use waves::{eda_waves, eda_waves_counted, reconstruct_waves, wave_table, WaveTable, NEG};

/// Result of a bounded distance computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum EdaOutcome {
    /// The exact distance, which is at most the threshold.
    Within(ScaledCost),
    /// The distance exceeds the threshold.
    Exceeds,
}

impl EdaOutcome {
    pub fn value(&self) -> Option<ScaledCost> {
        match self {
            EdaOutcome::Within(c) => Some(*c),
            EdaOutcome::Exceeds => None,
        }
    }

    pub fn units(&self) -> Option<u64> {
        self.value().map(|c| c.units)
    }
}

/// Which exact algorithm the dispatcher picked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ExactPath {
    Banded,
    Waves,
}

/// `Waves` iff `a·k < n` with `n = |X| + |Y|`, compared exactly.
pub fn exact_path(n: usize, k: &Threshold) -> ExactPath {
    let lhs = k.weight_a as u128 * *k.value.numer() as u128;
    let rhs = n as u128 * *k.value.denom() as u128;
    if lhs < rhs {
        ExactPath::Waves
    } else {
        ExactPath::Banded
    }
}

/// Exact `ED_a` if at most `k`, dispatching between the two algorithms.
pub fn eda_exact(x: &ByteText, y: &ByteText, k: &Threshold) -> EdaOutcome {
    match exact_path(x.len() + y.len(), k) {
        ExactPath::Waves => eda_waves(x, y, k),
        ExactPath::Banded => eda_banded(x, y, k),
    }
}

/// [`eda_exact`] together with an optimal alignment when within the bound.
pub fn eda_exact_with_script(x: &ByteText, y: &ByteText, k: &Threshold) -> Result<(EdaOutcome, Option<EditScript>)> {
    match exact_path(x.len() + y.len(), k) {
        ExactPath::Banded => Ok(eda_banded_with_script(x, y, k)),
        ExactPath::Waves => {
            let t = wave_table(x, y, k);
            match t.certified {
                Some(u) => {
                    let script = reconstruct_waves(&t, x, y)?;
                    Ok((EdaOutcome::Within(ScaledCost::new(u, k.weight_a)), Some(script)))
                }
                None => Ok((EdaOutcome::Exceeds, None)),
            }
        }
    }
}

/// A table that certifies an alignment and can be walked back into one.
pub trait AlignmentCertificate {
    fn reconstruct(&self, x: &ByteText, y: &ByteText) -> Result<EditScript>;
}

impl AlignmentCertificate for WaveTable {
    fn reconstruct(&self, x: &ByteText, y: &ByteText) -> Result<EditScript> {
        reconstruct_waves(self, x, y)
    }
}

impl AlignmentCertificate for BiWaveTable {
    fn reconstruct(&self, x: &ByteText, y: &ByteText) -> Result<EditScript> {
        reconstruct_bicriteria(self, x, y)
    }
}

/// Reconstructs an alignment from a certifying wave table.
pub fn reconstruct_alignment<T: AlignmentCertificate>(table: &T, x: &ByteText, y: &ByteText) -> Result<EditScript> {
    table.reconstruct(x, y)
}
