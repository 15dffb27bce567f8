use serde::{Deserialize, Serialize};

use crate::error::{contract, Result};

/// One step of an alignment transforming `X` into `Y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum EditOp {
    /// Copy the next `n` characters of `X` unchanged.
    Match(usize),
    /// Replace the next character of `X` by the given symbol.
    Substitute(u8),
    /// Emit the given symbol without consuming `X`.
    Insert(u8),
    /// Drop the next character of `X`.
    Delete,
}

/// An ordered list of edit operations.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EditScript {
    ops: Vec<EditOp>,
}

impl EditScript {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn ops(&self) -> &[EditOp] {
        &self.ops
    }

    /// Appends an operation, merging adjacent match runs.
    pub fn push(&mut self, op: EditOp) {
        if let EditOp::Match(0) = op {
            return;
        }
        if let (Some(EditOp::Match(prev)), EditOp::Match(n)) = (self.ops.last_mut(), op) {
            *prev += n;
            return;
        }
        self.ops.push(op);
    }

    /// Builds a script from operations listed back to front.
    pub(crate) fn from_reversed(mut rev: Vec<EditOp>) -> Self {
        rev.reverse();
        let mut s = EditScript::new();
        for op in rev {
            s.push(op);
        }
        s
    }

    /// `(indels, substitutions)`.
    pub fn counts(&self) -> (u64, u64) {
        let mut indels = 0;
        let mut subs = 0;
        for op in &self.ops {
            match op {
                EditOp::Match(_) => {}
                EditOp::Substitute(_) => subs += 1,
                EditOp::Insert(_) | EditOp::Delete => indels += 1,
            }
        }
        (indels, subs)
    }

    /// Cost in units of `1/a`: `a` per indel, one per substitution.
    pub fn cost_units(&self, a: u64) -> u64 {
        let (i, s) = self.counts();
        i * a + s
    }

    /// Applies the script to `x`.
    pub fn apply(&self, x: &[u8]) -> Result<Vec<u8>> {
        let mut out = Vec::with_capacity(x.len());
        let mut pos = 0usize;
        for op in &self.ops {
            match *op {
                EditOp::Match(n) => {
                    if pos + n > x.len() {
                        return contract("match run past the end of X");
                    }
                    out.extend_from_slice(&x[pos..pos + n]);
                    pos += n;
                }
                EditOp::Substitute(c) => {
                    if pos >= x.len() {
                        return contract("substitution past the end of X");
                    }
                    out.push(c);
                    pos += 1;
                }
                EditOp::Insert(c) => out.push(c),
                EditOp::Delete => {
                    if pos >= x.len() {
                        return contract("deletion past the end of X");
                    }
                    pos += 1;
                }
            }
        }
        if pos != x.len() {
            return contract("script does not consume all of X");
        }
        Ok(out)
    }

    /// Whether applying the script to `x` yields `y`, with every match and
    /// substitution being genuine (matches equal, substitutions different).
    pub fn replays(&self, x: &[u8], y: &[u8]) -> bool {
        let mut pos = 0usize;
        let mut out = 0usize;
        for op in &self.ops {
            match *op {
                EditOp::Match(n) => {
                    if pos + n > x.len() || out + n > y.len() || x[pos..pos + n] != y[out..out + n] {
                        return false;
                    }
                    pos += n;
                    out += n;
                }
                EditOp::Substitute(c) => {
                    if pos >= x.len() || out >= y.len() || y[out] != c || x[pos] == c {
                        return false;
                    }
                    pos += 1;
                    out += 1;
                }
                EditOp::Insert(c) => {
                    if out >= y.len() || y[out] != c {
                        return false;
                    }
                    out += 1;
                }
                EditOp::Delete => {
                    if pos >= x.len() {
                        return false;
                    }
                    pos += 1;
                }
            }
        }
        pos == x.len() && out == y.len()
    }
}
