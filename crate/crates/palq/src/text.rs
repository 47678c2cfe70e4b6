use crate::error::{Error, Result};

/// The indexed byte string. Positions are 1-based throughout the crate,
/// matching the query convention `1 <= i <= j <= n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Text {
    bytes: Vec<u8>,
}

impl Text {
    /// Wraps a non-empty byte string. Empty input is rejected here, at the
    /// API boundary, so every downstream structure may assume `n >= 1`.
    pub fn new(bytes: impl Into<Vec<u8>>) -> Result<Self> {
        let bytes = bytes.into();
        if bytes.is_empty() {
            return Err(Error::EmptyText);
        }
        Ok(Text { bytes })
    }

    pub fn len(&self) -> usize {
        self.bytes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Byte at 1-based position `i`. Panics if `i` is out of 1..=n.
    #[inline]
    pub fn at(&self, i: usize) -> u8 {
        self.bytes[i - 1]
    }

    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn reversed(&self) -> Text {
        let mut bytes = self.bytes.clone();
        bytes.reverse();
        Text { bytes }
    }

    /// The substring T[i..j], 1-based inclusive.
    pub fn slice(&self, i: usize, j: usize) -> &[u8] {
        &self.bytes[i - 1..j]
    }

    pub fn check_range(&self, i: usize, j: usize) -> Result<()> {
        let n = self.len();
        if i >= 1 && i <= j && j <= n {
            Ok(())
        } else {
            Err(Error::InvalidRange { i, j, n })
        }
    }
}

/// A (start, end) span in the text, 1-based inclusive. Always non-empty.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub fn len(&self) -> usize {
        self.end - self.start + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}
