//! Immutable byte strings with an optional character-probe counter.

use std::io::Read;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use crate::error::Result;

/// An immutable string over the octet alphabet.
///
/// Every call to [`ByteText::at`] is a *probe*. When counting is enabled the
/// probe counter is incremented by one per access; it is never decremented.
/// Reference implementations that must not influence measurements read the
/// raw slice through [`ByteText::as_bytes`], which is never counted.
#[derive(Debug, Default)]
pub struct ByteText {
    bytes: Vec<u8>,
    counting: AtomicBool,
    probes: AtomicU64,
}

impl ByteText {
    pub fn new(bytes: impl Into<Vec<u8>>) -> Self {
        ByteText {
            bytes: bytes.into(),
            counting: AtomicBool::new(false),
            probes: AtomicU64::new(0),
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bytes.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bytes.is_empty()
    }

    /// Symbol at position `i`, counted as one probe.
    #[inline]
    pub fn at(&self, i: usize) -> u8 {
        if self.counting.load(Ordering::Relaxed) {
            self.probes.fetch_add(1, Ordering::Relaxed);
        }
        self.bytes[i]
    }

    /// Uncounted view of the underlying bytes.
    #[inline]
    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn set_counting(&self, on: bool) {
        self.counting.store(on, Ordering::Relaxed);
    }

    pub fn is_counting(&self) -> bool {
        self.counting.load(Ordering::Relaxed)
    }

    pub fn probes(&self) -> u64 {
        self.probes.load(Ordering::Relaxed)
    }
}

impl Clone for ByteText {
    /// Clones the content; the clone starts with a fresh, disabled counter.
    fn clone(&self) -> Self {
        ByteText::new(self.bytes.clone())
    }
}

impl PartialEq for ByteText {
    fn eq(&self, other: &Self) -> bool {
        self.bytes == other.bytes
    }
}

impl Eq for ByteText {}

impl From<&[u8]> for ByteText {
    fn from(b: &[u8]) -> Self {
        ByteText::new(b.to_vec())
    }
}

impl From<&str> for ByteText {
    fn from(s: &str) -> Self {
        ByteText::new(s.as_bytes().to_vec())
    }
}

impl From<Vec<u8>> for ByteText {
    fn from(b: Vec<u8>) -> Self {
        ByteText::new(b)
    }
}

/// Reads a whole byte stream into a [`ByteText`] with counting disabled.
pub fn load_text<R: Read>(mut source: R) -> Result<ByteText> {
    let mut buf = Vec::new();
    source.read_to_end(&mut buf)?;
    Ok(ByteText::new(buf))
}

/// Total probes recorded on a pair of texts.
pub fn probes_of(x: &ByteText, y: &ByteText) -> u64 {
    x.probes() + y.probes()
}
