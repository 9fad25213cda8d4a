//! Fixed-length binary words.
//!
//! A [`Codeword`] stores its bits left to right: position 0 of the backing
//! vector is the left-most bit `c_{m-1}`, the last position is `c_0`. All
//! textual forms print the left-most bit first.

use std::fmt;
use std::str::FromStr;

use crate::error::{LocoError, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Codeword {
    bits: Vec<bool>,
}

impl Codeword {
    /// Builds a word from bits listed left-most first.
    pub fn from_bits(bits: Vec<bool>) -> Self {
        Self { bits }
    }

    pub fn zeros(len: usize) -> Self {
        Self { bits: vec![false; len] }
    }

    pub fn ones(len: usize) -> Self {
        Self { bits: vec![true; len] }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// Bits in transmission order (left-most first).
    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn into_bits(self) -> Vec<bool> {
        self.bits
    }

    /// The bit `c_i`, counted from the right (`c_0` is the right-most bit).
    pub fn bit(&self, i: usize) -> bool {
        self.bits[self.bits.len() - 1 - i]
    }

    /// The left-most bit `c_{m-1}`.
    pub fn leading(&self) -> bool {
        self.bits[0]
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn complement(&self) -> Self {
        Self {
            bits: self.bits.iter().map(|b| !b).collect(),
        }
    }

    pub fn is_constant(&self) -> bool {
        self.bits.windows(2).all(|w| w[0] == w[1])
    }

    /// Locates the first forbidden pattern `0 1^y 0` or `1 0^y 1`
    /// (`1 <= y <= x`), returning its offset and length.
    ///
    /// A word avoids the patterns exactly when every run that touches
    /// neither end of the word is longer than `x`.
    pub fn find_violation(&self, x: usize) -> Option<(usize, usize)> {
        let mut start = 0;
        let n = self.bits.len();
        while start < n {
            let mut end = start;
            while end < n && self.bits[end] == self.bits[start] {
                end += 1;
            }
            let run = end - start;
            if start > 0 && end < n && run <= x {
                return Some((start - 1, run + 2));
            }
            start = end;
        }
        None
    }

    pub fn satisfies(&self, x: usize) -> bool {
        self.find_violation(x).is_none()
    }

    /// Errors with [`LocoError::ConstraintViolation`] if a forbidden pattern is present.
    pub fn check(&self, x: usize) -> Result<()> {
        match self.find_violation(x) {
            None => Ok(()),
            Some((offset, len)) => Err(LocoError::ConstraintViolation {
                codeword: self.to_string(),
                pattern: bits_to_string(&self.bits[offset..offset + len]),
                offset,
            }),
        }
    }
}

pub(crate) fn bits_to_string(bits: &[bool]) -> String {
    bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

impl fmt::Display for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&bits_to_string(&self.bits))
    }
}

impl fmt::Debug for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Codeword({self})")
    }
}

impl FromStr for Codeword {
    type Err = LocoError;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(LocoError::MalformedStream(format!(
                    "unexpected character {other:?} in binary word"
                ))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Codeword::from_bits)
    }
}
