//! Code cardinalities, group sizes and index shifts.
//!
//! `N(i, x)` counts the length-`i` binary words that avoid every pattern
//! `0 1^y 0` and `1 0^y 1` with `1 <= y <= x`. It obeys
//!
//! ```text
//! N(i, x) = 2                          for i <= 1
//! N(i, x) = N(i-1, x) + N(i-x-1, x)    for i >= 2
//! ```
//!
//! and every value is even. [`CardinalityTable`] stores `N(i, x)` for
//! `i` in `[-x+1, m]` together with the halves `N(i, x) / 2`, which are what
//! the index arithmetic actually consumes.

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};

use crate::error::{LocoError, Result};

/// The pair `(m, x)`: codeword length and constraint parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CodeParams {
    m: usize,
    x: usize,
}

impl CodeParams {
    /// Accepts any `m >= 1` and `x >= 1`. The codec additionally needs `m >= 2`.
    pub fn new(m: usize, x: usize) -> Result<Self> {
        if m < 1 {
            return Err(LocoError::InvalidParams { m, x, reason: "m must be at least 1" });
        }
        if x < 1 {
            return Err(LocoError::InvalidParams { m, x, reason: "x must be at least 1" });
        }
        Ok(Self { m, x })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn x(&self) -> usize {
        self.x
    }

    /// Codeword plus bridge length, `m + x`.
    pub fn frame_len(&self) -> usize {
        self.m + self.x
    }
}

/// Memoized `N(i, x)` for `i` in `[-x+1, m]`. Immutable once built.
#[derive(Debug, Clone)]
pub struct CardinalityTable {
    params: CodeParams,
    values: Vec<BigUint>,
    halves: Vec<BigUint>,
    // Present when N(m, x) < 2^128, so every index fits in a u128.
    halves_u128: Option<Vec<u128>>,
}

impl CardinalityTable {
    pub fn new(params: CodeParams) -> Self {
        let x = params.x;
        let len = params.m + x;
        let mut values: Vec<BigUint> = Vec::with_capacity(len);
        // slot k holds i = k - (x - 1); i <= 1 means k <= x
        for k in 0..len {
            if k <= x {
                values.push(BigUint::from(2u32));
            } else {
                let next = &values[k - 1] + &values[k - x - 1];
                values.push(next);
            }
        }
        let halves: Vec<BigUint> = values
            .iter()
            .map(|v| {
                assert!(!v.bit(0), "cardinality {v} is odd; table corrupted");
                v >> 1u32
            })
            .collect();
        let halves_u128 = if values[len - 1].bits() < 128 {
            Some(halves.iter().map(|h| h.to_u128().expect("fits")).collect())
        } else {
            None
        };
        Self { params, values, halves, halves_u128 }
    }

    /// Convenience wrapper validating `(m, x)` first.
    pub fn build(m: usize, x: usize) -> Result<Self> {
        Ok(Self::new(CodeParams::new(m, x)?))
    }

    pub fn params(&self) -> CodeParams {
        self.params
    }

    pub fn m(&self) -> usize {
        self.params.m
    }

    pub fn x(&self) -> usize {
        self.params.x
    }

    fn slot(&self, i: i64) -> usize {
        let k = i + self.params.x as i64 - 1;
        assert!(
            k >= 0 && (k as usize) < self.values.len(),
            "N({i}, {}) outside stored range [{}, {}]",
            self.params.x,
            1 - self.params.x as i64,
            self.params.m
        );
        k as usize
    }

    /// `N(i, x)`. Any `i <= 1` yields 2; `i > m` panics.
    pub fn n(&self, i: i64) -> &BigUint {
        let lo = 1 - self.params.x as i64;
        &self.values[self.slot(i.max(lo))]
    }

    /// `N(i, x) / 2`, exact because every entry is even.
    pub fn half(&self, i: i64) -> &BigUint {
        let lo = 1 - self.params.x as i64;
        &self.halves[self.slot(i.max(lo))]
    }

    /// `N(m, x)` for the table's own length.
    pub fn cardinality(&self) -> &BigUint {
        self.values.last().expect("table is never empty")
    }

    /// All stored values, ordered by `i` from `-x+1` to `m`.
    pub fn values(&self) -> &[BigUint] {
        &self.values
    }

    pub(crate) fn halves_big(&self) -> &[BigUint] {
        &self.halves
    }

    pub(crate) fn halves_u128(&self) -> Option<&[u128]> {
        self.halves_u128.as_deref()
    }

    /// Group sizes of `C(len, x)` for `2 <= len <= m`.
    pub fn group_cardinalities(&self, len: usize) -> Result<GroupCardinalities> {
        if len < 2 || len > self.params.m {
            return Err(LocoError::OutOfTableRange {
                requested: len,
                min: 2,
                max: self.params.m,
            });
        }
        let l = len as i64;
        let x = self.params.x as i64;
        let h_prev = self.half(l - 1);
        let h_short = self.half(l - x - 1);
        Ok(GroupCardinalities {
            n1: h_prev.clone(),
            n2: h_short.clone(),
            n3: h_prev - h_short,
            n4: h_short.clone(),
            n5: h_short.clone(),
        })
    }

    /// Index shifts `zeta_1..zeta_5` between `C(m+1, x)` and its shorter
    /// counterparts, for `3 <= m_plus_1 <= table m`.
    pub fn index_shifts(&self, m_plus_1: usize) -> Result<IndexShifts> {
        if m_plus_1 < 3 || m_plus_1 > self.params.m {
            return Err(LocoError::OutOfTableRange {
                requested: m_plus_1,
                min: 3,
                max: self.params.m,
            });
        }
        let m = m_plus_1 as i64 - 1;
        let x = self.params.x as i64;
        let big = |v: &BigUint| BigInt::from(v.clone());
        let n_m = big(self.n(m));
        let n_mx = big(self.n(m - x));
        Ok(IndexShifts {
            zeta: [
                BigInt::zero(),
                -((&n_m - &n_mx) / BigInt::from(2)),
                n_mx.clone(),
                big(self.half(m + 1)),
                n_m,
            ],
        })
    }
}

/// Sizes of the five prefix groups of `C(m, x)`:
/// `00…`, `0 1^{x+1}…`, `1^y 0^{x+1}…` (`2 <= y <= x+1`), `1 0^{x+1}…`, `1 1^{x+1}…`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupCardinalities {
    pub n1: BigUint,
    pub n2: BigUint,
    pub n3: BigUint,
    pub n4: BigUint,
    pub n5: BigUint,
}

impl GroupCardinalities {
    pub fn as_array(&self) -> [&BigUint; 5] {
        [&self.n1, &self.n2, &self.n3, &self.n4, &self.n5]
    }

    pub fn total(&self) -> BigUint {
        self.as_array().into_iter().sum()
    }
}

/// Per-group index shift; `zeta[l - 1]` is the shift of group `l`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexShifts {
    pub zeta: [BigInt; 5],
}

impl IndexShifts {
    pub fn get(&self, group: usize) -> &BigInt {
        &self.zeta[group - 1]
    }
}
