//! Balanced (B-LOCO) and self-clocked balanced (CB-LOCO) codes.
//!
//! Codewords at indices `g` and `N(m,x) - 1 - g` are bitwise complements,
//! so their disparities cancel. A balanced code sends one message as either
//! member of such a pair, picking the member whose disparity pulls the
//! running disparity back toward zero. Both members share one balanced
//! index, so decoding needs no state.

use num_bigint::BigUint;
use num_traits::One;

use crate::cardinality::CardinalityTable;
use crate::codec::{self, check_codeword, decode_with_length, encode_with_length, message_length};
use crate::codeword::Codeword;
use crate::error::{LocoError, Result};

/// `p(c) = 2 * ones(c) - m`: the count of `+A` symbols minus `-A` symbols.
pub fn disparity(codeword: &Codeword) -> i64 {
    2 * codeword.count_ones() as i64 - codeword.len() as i64
}

/// Running disparity `p_r` of an encoding session, measured before the next
/// codeword. Bridging `z` symbols contribute nothing.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DisparityState {
    p_r: i64,
}

impl DisparityState {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn value(&self) -> i64 {
        self.p_r
    }

    pub fn record(&mut self, codeword: &Codeword) {
        self.p_r += disparity(codeword);
    }

    /// Adds non-codeword symbols, such as bridge bits, to the running sum.
    pub fn record_levels(&mut self, levels: i64) {
        self.p_r += levels;
    }
}

/// A complement pair: `c0` leads with 0, `c1` with 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BalancedPair {
    pub c0: Codeword,
    pub c1: Codeword,
}

/// The pair `(codeword_of(g_b), codeword_of(N - 1 - g_b))` for
/// `0 <= g_b < N/2`.
pub fn balanced_pair(g_b: &BigUint, table: &CardinalityTable) -> Result<BalancedPair> {
    let half = table.half(table.m() as i64);
    if g_b >= half {
        return Err(LocoError::IndexOutOfRange {
            index: g_b.to_string(),
            limit: half.to_string(),
        });
    }
    let c0 = codec::codeword_of(g_b, table)?;
    let mirror = table.cardinality() - 1u32 - g_b;
    let c1 = codec::codeword_of(&mirror, table)?;
    debug_assert_eq!(c1, c0.complement());
    Ok(BalancedPair { c0, c1 })
}

/// Balanced index: the plain index for words leading with 0, and the plain
/// index of the complement for words leading with 1.
pub fn bloco_index_of(codeword: &Codeword, table: &CardinalityTable) -> Result<BigUint> {
    check_codeword(codeword, table)?;
    Ok(codec::index_unchecked(codeword.bits(), table, true))
}

/// Chooses the pair member that opposes the sign of the running disparity.
/// With `p_r = 0`, or when both members have zero disparity, `c0` is sent.
pub fn select_codeword<'a>(pair: &'a BalancedPair, state: &DisparityState) -> &'a Codeword {
    let p0 = disparity(&pair.c0);
    let pick_c0 = match state.value() {
        p if p > 0 => p0 <= 0,
        p if p < 0 => p0 >= 0,
        _ => true,
    };
    if pick_c0 {
        &pair.c0
    } else {
        &pair.c1
    }
}

/// `s_cb = floor(log2(N(m,x) - 2)) - 1`; needs `N(m,x) >= 6`.
pub fn cb_message_length(table: &CardinalityTable) -> Result<usize> {
    let underfull = || LocoError::Underfull {
        m: table.m(),
        x: table.x(),
        cardinality: table.cardinality().to_string(),
    };
    if *table.cardinality() < BigUint::from(6u32) {
        return Err(underfull());
    }
    Ok(message_length(table)? - 1)
}

/// Encodes one CB-LOCO block and advances the session's running disparity.
pub fn cb_encode_block(bits: &[bool], state: &mut DisparityState, table: &CardinalityTable) -> Result<Codeword> {
    let s = cb_message_length(table)?;
    cb_encode_with_length(bits, s, state, table)
}

fn cb_encode_with_length(
    bits: &[bool],
    s: usize,
    state: &mut DisparityState,
    table: &CardinalityTable,
) -> Result<Codeword> {
    let c0 = encode_with_length(bits, s, table)?;
    Ok(orient(c0, state))
}

/// Replaces `c0` by its complement when that opposes `p_r`, then records it.
/// Same choice as [`select_codeword`], without building the pair.
pub(crate) fn orient(c0: Codeword, state: &mut DisparityState) -> Codeword {
    let p0 = disparity(&c0);
    let flip = (state.value() > 0 && p0 > 0) || (state.value() < 0 && p0 < 0);
    let chosen = if flip { c0.complement() } else { c0 };
    state.record(&chosen);
    chosen
}

/// Stateless CB-LOCO decoding; either pair member yields the same message.
pub fn cb_decode_block(codeword: &Codeword, table: &CardinalityTable) -> Result<Vec<bool>> {
    check_codeword(codeword, table)?;
    let s = cb_message_length(table)?;
    Ok(decode_with_length(codeword, s, table, true)?.bits().to_vec())
}

/// A CB-LOCO encoding session: one writer, running disparity starts at 0.
#[derive(Debug, Clone)]
pub struct CbEncoder {
    table: CardinalityTable,
    message_len: usize,
    state: DisparityState,
}

impl CbEncoder {
    pub fn new(table: CardinalityTable) -> Result<Self> {
        let message_len = cb_message_length(&table)?;
        Ok(Self {
            table,
            message_len,
            state: DisparityState::new(),
        })
    }

    pub fn message_len(&self) -> usize {
        self.message_len
    }

    pub fn state(&self) -> DisparityState {
        self.state
    }

    pub fn encode(&mut self, bits: &[bool]) -> Result<Codeword> {
        cb_encode_with_length(bits, self.message_len, &mut self.state, &self.table)
    }
}

/// Stateless CB-LOCO decoder bound to one table.
#[derive(Debug, Clone)]
pub struct CbDecoder {
    table: CardinalityTable,
    message_len: usize,
}

impl CbDecoder {
    pub fn new(table: CardinalityTable) -> Result<Self> {
        let message_len = cb_message_length(&table)?;
        Ok(Self { table, message_len })
    }

    pub fn message_len(&self) -> usize {
        self.message_len
    }

    pub fn decode(&self, codeword: &Codeword) -> Result<Vec<bool>> {
        check_codeword(codeword, &self.table)?;
        Ok(decode_with_length(codeword, self.message_len, &self.table, true)?
            .bits()
            .to_vec())
    }
}

/// Largest balanced index that carries a message, `2^s_cb`.
pub fn cb_max_index(table: &CardinalityTable) -> Result<BigUint> {
    Ok(BigUint::one() << cb_message_length(table)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn table(m: usize, x: usize) -> CardinalityTable {
        CardinalityTable::build(m, x).unwrap()
    }

    fn cw(s: &str) -> Codeword {
        s.parse().unwrap()
    }

    fn bits(s: &str) -> Vec<bool> {
        s.chars().map(|c| c == '1').collect()
    }

    #[test]
    fn disparity_examples() {
        assert_eq!(disparity(&cw("000001")), -4);
        assert_eq!(disparity(&cw("001111")), 2);
        assert_eq!(disparity(&Codeword::zeros(9)), -9);
    }

    #[test]
    fn pair_for_index_6() {
        let t = table(6, 1);
        let pair = balanced_pair(&BigUint::from(6u32), &t).unwrap();
        assert_eq!(pair.c0, cw("001110"));
        assert_eq!(pair.c1, cw("110001"));
        let extreme = balanced_pair(&BigUint::from(0u32), &t).unwrap();
        assert_eq!((extreme.c0, extreme.c1), (cw("000000"), cw("111111")));
        assert!(balanced_pair(&BigUint::from(13u32), &t).is_err());
    }

    #[test]
    fn balanced_index_examples() {
        let t = table(6, 1);
        assert_eq!(bloco_index_of(&cw("001110"), &t).unwrap(), BigUint::from(6u32));
        assert_eq!(bloco_index_of(&cw("110001"), &t).unwrap(), BigUint::from(6u32));
        assert!(bloco_index_of(&cw("101100"), &t).is_err());
    }

    #[test]
    fn selection_rule() {
        let pair = BalancedPair { c0: cw("000001"), c1: cw("111110") };
        let plus = DisparityState { p_r: 2 };
        assert_eq!(select_codeword(&pair, &plus), &cw("000001"));
        let minus = DisparityState { p_r: -3 };
        assert_eq!(select_codeword(&pair, &minus), &cw("111110"));
        assert_eq!(select_codeword(&pair, &DisparityState::new()), &cw("000001"));

        let zero = BalancedPair { c0: cw("000111"), c1: cw("111000") };
        for p_r in [-4, 0, 4] {
            assert_eq!(select_codeword(&zero, &DisparityState { p_r }), &cw("000111"));
        }
    }

    #[test]
    fn session_follows_running_disparity() {
        let t = table(6, 1);
        assert_eq!(cb_message_length(&t).unwrap(), 3);
        let mut state = DisparityState::new();
        let first = cb_encode_block(&bits("000"), &mut state, &t).unwrap();
        assert_eq!((first, state.value()), (cw("000001"), -4));
        let second = cb_encode_block(&bits("000"), &mut state, &t).unwrap();
        assert_eq!((second, state.value()), (cw("111110"), 0));
        assert!(cb_encode_block(&bits("0000"), &mut state, &t).is_err());
    }

    #[test]
    fn decoding_ignores_pair_member() {
        let t = table(6, 1);
        assert_eq!(cb_decode_block(&cw("001110"), &t).unwrap(), bits("101"));
        assert_eq!(cb_decode_block(&cw("110001"), &t).unwrap(), bits("101"));
        // balanced indices 0 and 9..12 carry no message
        for s in ["000000", "111111", "011001", "100000"] {
            assert!(matches!(
                cb_decode_block(&cw(s), &t),
                Err(LocoError::NonMessageCodeword { .. })
            ));
        }
    }

    #[test]
    fn tiny_codes_are_underfull() {
        assert!(cb_message_length(&table(2, 1)).is_err());
        assert!(cb_message_length(&table(3, 1)).is_ok());
    }

    proptest! {
        #[test]
        fn running_disparity_stays_bounded(
            m in 3usize..40,
            x in 1usize..4,
            seeds in prop::collection::vec(any::<u64>(), 1..200),
        ) {
            let t = table(m, x);
            prop_assume!(cb_message_length(&t).is_ok());
            let mut enc = CbEncoder::new(t.clone()).unwrap();
            let dec = CbDecoder::new(t).unwrap();
            let s = enc.message_len();
            for seed in seeds {
                let msg: Vec<bool> = (0..s).map(|k| (seed >> (k % 64)) & 1 == 1).collect();
                let c = enc.encode(&msg).unwrap();
                prop_assert!(enc.state().value().abs() <= m as i64 - 2);
                prop_assert_eq!(dec.decode(&c).unwrap(), msg);
            }
        }
    }
}
