//! Index <-> codeword mapping and C-LOCO message blocks.
//!
//! The index of a codeword `c = c_{m-1} … c_0` in lexicographic order is
//!
//! ```text
//! g(c) = [c_{m-1}] * N(m,x)/2 + sum over i in 0..=m-2 with c_i = 1 of N(i-x+1, x)/2
//! ```
//!
//! Encoding walks the same weights from the left, subtracting whenever a `1`
//! is placed, with a guard that refuses a `1` that would close a `0 1^j 0`
//! pattern (`j <= x`) further to the right.
//!
//! Arithmetic runs on `u128` whenever the whole code fits, and on
//! [`BigUint`] otherwise; both go through the same generic routines.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::cardinality::CardinalityTable;
use crate::codeword::{bits_to_string, Codeword};
use crate::error::{LocoError, Result};

/// Unsigned integer arithmetic needed by ranking and unranking.
pub(crate) trait Magnitude: Clone + Ord + fmt::Display {
    fn zero() -> Self;
    fn add_ref(&mut self, other: &Self);
    fn sub_ref(&mut self, other: &Self);
    fn to_big(&self) -> BigUint;
}

impl Magnitude for u128 {
    fn zero() -> Self {
        0
    }
    fn add_ref(&mut self, other: &Self) {
        *self += *other;
    }
    fn sub_ref(&mut self, other: &Self) {
        *self -= *other;
    }
    fn to_big(&self) -> BigUint {
        BigUint::from(*self)
    }
}

impl Magnitude for BigUint {
    fn zero() -> Self {
        Zero::zero()
    }
    fn add_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn sub_ref(&mut self, other: &Self) {
        *self -= other;
    }
    fn to_big(&self) -> BigUint {
        self.clone()
    }
}

/// Weighted sum over the codeword bits. `halves[k]` is `N(k-x+1, x)/2`, so
/// the weight of bit `c_i` (`i <= m-2`) sits at `halves[i]` and the weight of
/// the leading bit `N(m,x)/2` at `halves[m+x-1]`.
///
/// With `mirror_tail`, a leading `1` adds nothing and the tail counts zeros
/// instead of ones: this is the balanced index, equal for a word and its
/// complement.
pub(crate) fn rank<T: Magnitude>(bits: &[bool], halves: &[T], x: usize, mirror_tail: bool) -> T {
    let m = bits.len();
    let lead = bits[0];
    let mut g = T::zero();
    if lead && !mirror_tail {
        g.add_ref(&halves[m + x - 1]);
    }
    let target = !(mirror_tail && lead);
    for i in 0..m - 1 {
        if bits[m - 1 - i] == target {
            g.add_ref(&halves[i]);
        }
    }
    g
}

/// One decision of the encoder loop, kept for inspection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EncodeStep {
    /// Bit position `i` (`m-1` is the left-most bit).
    pub position: usize,
    /// Residual before the decision.
    pub residual: BigUint,
    /// Weight the residual was compared against.
    pub threshold: BigUint,
    /// `Some(j)` if a `0 1^j 0` guard forced this bit to 0.
    pub guard: Option<usize>,
    pub bit: bool,
}

fn unrank<T: Magnitude>(
    mut residual: T,
    halves: &[T],
    m: usize,
    x: usize,
    mut trace: Option<&mut Vec<EncodeStep>>,
) -> Vec<bool> {
    let mut bits = vec![false; m];
    let top = &halves[m + x - 1];
    let lead = residual >= *top;
    if let Some(t) = trace.as_deref_mut() {
        t.push(EncodeStep {
            position: m - 1,
            residual: residual.to_big(),
            threshold: top.to_big(),
            guard: None,
            bit: lead,
        });
    }
    if lead {
        bits[0] = true;
        residual.sub_ref(top);
    }
    for i in (0..m - 1).rev() {
        let threshold = &halves[i];
        let before = trace.is_some().then(|| residual.to_big());
        let mut guard = None;
        let bit = if residual < *threshold {
            false
        } else {
            // previous (left-hand) bit c_{i+1}
            if !bits[m - 2 - i] {
                let mut beta_prev = threshold.clone();
                for j in 1..=x {
                    if j > i {
                        break;
                    }
                    let mut beta = beta_prev.clone();
                    beta.add_ref(&halves[i - j]);
                    if beta_prev <= residual && residual < beta {
                        guard = Some(j);
                        break;
                    }
                    beta_prev = beta;
                }
            }
            guard.is_none()
        };
        if bit {
            bits[m - 1 - i] = true;
            residual.sub_ref(threshold);
        }
        if let Some(t) = trace.as_deref_mut() {
            t.push(EncodeStep {
                position: i,
                residual: before.expect("tracing"),
                threshold: threshold.to_big(),
                guard,
                bit,
            });
        }
    }
    debug_assert!(residual == T::zero(), "unranking left residual {residual}");
    bits
}

fn require_codec_table(table: &CardinalityTable) -> Result<()> {
    if table.m() < 2 {
        return Err(LocoError::InvalidParams {
            m: table.m(),
            x: table.x(),
            reason: "codec requires m >= 2",
        });
    }
    Ok(())
}

pub(crate) fn check_codeword(codeword: &Codeword, table: &CardinalityTable) -> Result<()> {
    require_codec_table(table)?;
    if codeword.len() != table.m() {
        return Err(LocoError::LengthMismatch {
            expected: table.m(),
            found: codeword.len(),
        });
    }
    codeword.check(table.x())
}

/// Lexicographic index of a valid codeword. Words containing a forbidden
/// pattern are rejected rather than ranked.
pub fn index_of(codeword: &Codeword, table: &CardinalityTable) -> Result<BigUint> {
    check_codeword(codeword, table)?;
    Ok(index_unchecked(codeword.bits(), table, false))
}

pub(crate) fn index_unchecked(bits: &[bool], table: &CardinalityTable, mirror_tail: bool) -> BigUint {
    match table.halves_u128() {
        Some(h) => BigUint::from(rank(bits, h, table.x(), mirror_tail)),
        None => rank(bits, table.halves_big(), table.x(), mirror_tail),
    }
}

fn check_index(g: &BigUint, table: &CardinalityTable) -> Result<()> {
    require_codec_table(table)?;
    if g >= table.cardinality() {
        return Err(LocoError::IndexOutOfRange {
            index: g.to_string(),
            limit: table.cardinality().to_string(),
        });
    }
    Ok(())
}

/// The codeword whose lexicographic index is `g`, `0 <= g < N(m, x)`.
pub fn codeword_of(g: &BigUint, table: &CardinalityTable) -> Result<Codeword> {
    check_index(g, table)?;
    Ok(unrank_dispatch(g, table, None))
}

/// As [`codeword_of`], also returning the per-bit decisions.
pub fn codeword_of_traced(g: &BigUint, table: &CardinalityTable) -> Result<(Codeword, Vec<EncodeStep>)> {
    check_index(g, table)?;
    let mut steps = Vec::with_capacity(table.m());
    let cw = unrank_dispatch(g, table, Some(&mut steps));
    Ok((cw, steps))
}

fn unrank_dispatch(g: &BigUint, table: &CardinalityTable, trace: Option<&mut Vec<EncodeStep>>) -> Codeword {
    let (m, x) = (table.m(), table.x());
    let bits = match table.halves_u128() {
        Some(h) => unrank(g.to_u128().expect("index below N fits"), h, m, x, trace),
        None => unrank(g.clone(), table.halves_big(), m, x, trace),
    };
    Codeword::from_bits(bits)
}

/// `floor(log2(v))` for `v >= 1`, exact.
pub fn floor_log2(v: &BigUint) -> u64 {
    assert!(!v.is_zero(), "log2 of zero");
    v.bits() - 1
}

/// Message length `s = floor(log2(N(m,x) - 2))` of the self-clocked code.
/// Indices `1..=2^s` then avoid both `0^m` (index 0) and `1^m` (index N-1).
pub fn message_length(table: &CardinalityTable) -> Result<usize> {
    let n = table.cardinality();
    if *n < BigUint::from(4u32) {
        return Err(LocoError::Underfull {
            m: table.m(),
            x: table.x(),
            cardinality: n.to_string(),
        });
    }
    Ok(floor_log2(&(n - 2u32)) as usize)
}

/// A fixed-length message, most significant bit first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MessageBlock {
    bits: Vec<bool>,
}

impl MessageBlock {
    pub fn from_bits(bits: Vec<bool>) -> Self {
        Self { bits }
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// Unsigned value, most significant bit first.
    pub fn value(&self) -> BigUint {
        let mut v = <BigUint as Zero>::zero();
        for &b in &self.bits {
            v <<= 1u32;
            if b {
                v += 1u32;
            }
        }
        v
    }

    /// The `len`-bit binary form of `value`; `value` must be below `2^len`.
    pub fn from_value(value: &BigUint, len: usize) -> Self {
        debug_assert!(value.bits() as usize <= len);
        let bits = (0..len).rev().map(|k| value.bit(k as u64)).collect();
        Self { bits }
    }
}

impl fmt::Display for MessageBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&bits_to_string(&self.bits))
    }
}

impl fmt::Debug for MessageBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MessageBlock({self})")
    }
}

impl FromStr for MessageBlock {
    type Err = LocoError;

    fn from_str(s: &str) -> Result<Self> {
        let cw: Codeword = s.parse()?;
        Ok(Self { bits: cw.into_bits() })
    }
}

fn bits_to_u128(bits: &[bool]) -> u128 {
    bits.iter().fold(0u128, |acc, &b| (acc << 1) | b as u128)
}

fn u128_to_bits(v: u128, len: usize) -> Vec<bool> {
    (0..len).rev().map(|k| (v >> k) & 1 == 1).collect()
}

/// Maps a message block to the codeword indexed by `value + 1`, which is
/// never `0^m` or `1^m`.
pub fn encode_block(message: &MessageBlock, table: &CardinalityTable) -> Result<Codeword> {
    require_codec_table(table)?;
    let s = message_length(table)?;
    encode_with_length(message.bits(), s, table)
}

/// Shared by the plain and balanced encoders: both map `value + 1` through
/// the unranker, differing only in message length.
pub(crate) fn encode_with_length(
    bits: &[bool],
    s: usize,
    table: &CardinalityTable,
) -> Result<Codeword> {
    if bits.len() != s {
        return Err(LocoError::MessageLength {
            expected: s,
            found: bits.len(),
        });
    }
    let (m, x) = (table.m(), table.x());
    let out = match table.halves_u128() {
        Some(h) => unrank(bits_to_u128(bits) + 1, h, m, x, None),
        None => {
            let g = MessageBlock::from_bits(bits.to_vec()).value() + 1u32;
            unrank(g, table.halves_big(), m, x, None)
        }
    };
    Ok(Codeword::from_bits(out))
}

/// Inverse of [`encode_block`]. A valid codeword whose index is 0 or above
/// `2^s` is reported as [`LocoError::NonMessageCodeword`].
pub fn decode_block(codeword: &Codeword, table: &CardinalityTable) -> Result<MessageBlock> {
    check_codeword(codeword, table)?;
    let s = message_length(table)?;
    decode_with_length(codeword, s, table, false)
}

pub(crate) fn decode_with_length(
    codeword: &Codeword,
    s: usize,
    table: &CardinalityTable,
    balanced: bool,
) -> Result<MessageBlock> {
    let bits = codeword.bits();
    let non_message = |g: String| LocoError::NonMessageCodeword {
        codeword: codeword.to_string(),
        index: g,
        max: (BigUint::one() << s).to_string(),
    };
    if let Some(h) = table.halves_u128() {
        let g = rank(bits, h, table.x(), balanced);
        // s <= 127 here, so 2^s fits
        if g == 0 || g > (1u128 << s) {
            return Err(non_message(g.to_string()));
        }
        return Ok(MessageBlock::from_bits(u128_to_bits(g - 1, s)));
    }
    let g = rank(bits, table.halves_big(), table.x(), balanced);
    if g.is_zero() || (&g - 1u32).bits() as usize > s {
        return Err(non_message(g.to_string()));
    }
    Ok(MessageBlock::from_value(&(g - 1u32), s))
}

/// A C-LOCO encoder/decoder bound to one table, with the message length
/// computed once.
#[derive(Debug, Clone)]
pub struct ClocoCodec {
    table: CardinalityTable,
    message_len: usize,
}

impl ClocoCodec {
    pub fn new(table: CardinalityTable) -> Result<Self> {
        require_codec_table(&table)?;
        let message_len = message_length(&table)?;
        Ok(Self { table, message_len })
    }

    pub fn table(&self) -> &CardinalityTable {
        &self.table
    }

    pub fn message_len(&self) -> usize {
        self.message_len
    }

    pub fn encode_bits(&self, bits: &[bool]) -> Result<Codeword> {
        encode_with_length(bits, self.message_len, &self.table)
    }

    pub fn decode(&self, codeword: &Codeword) -> Result<MessageBlock> {
        check_codeword(codeword, &self.table)?;
        decode_with_length(codeword, self.message_len, &self.table, false)
    }
}
