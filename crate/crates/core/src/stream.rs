//! NRZ symbol streams: codewords joined by bridging patterns.
//!
//! A stream is `(codeword · bridge)* codeword`, every codeword `m` symbols
//! and every bridge `x` symbols. Two bridging methods exist:
//!
//! * method 1 inserts `z^x`, the no-transmission symbol, regardless of
//!   context;
//! * method 2 (defined for `x = 1` only) picks a bit or `z` from the two
//!   right-most bits of the previous codeword and the two left-most bits of
//!   the next one.
//!
//! Text form is one character per symbol from `{0, 1, z}`. Binary form packs
//! four symbols per byte, most significant pair first, with `00 = 0`,
//! `01 = 1`, `10 = z`; the reserved code `11` only fills unused slots of the
//! last byte.

use std::fmt;

use crate::cardinality::CodeParams;
use crate::codeword::{bits_to_string, Codeword};
use crate::error::{LocoError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LineSymbol {
    /// Bit 0, level `-A`.
    Lo,
    /// Bit 1, level `+A`.
    Hi,
    /// No transmission.
    Z,
}

impl LineSymbol {
    pub fn from_bit(bit: bool) -> Self {
        if bit {
            LineSymbol::Hi
        } else {
            LineSymbol::Lo
        }
    }

    pub fn bit(self) -> Option<bool> {
        match self {
            LineSymbol::Lo => Some(false),
            LineSymbol::Hi => Some(true),
            LineSymbol::Z => None,
        }
    }

    /// Contribution to disparity.
    pub fn level(self) -> i64 {
        match self {
            LineSymbol::Lo => -1,
            LineSymbol::Hi => 1,
            LineSymbol::Z => 0,
        }
    }

    pub fn complement(self) -> Self {
        match self {
            LineSymbol::Lo => LineSymbol::Hi,
            LineSymbol::Hi => LineSymbol::Lo,
            LineSymbol::Z => LineSymbol::Z,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            LineSymbol::Lo => '0',
            LineSymbol::Hi => '1',
            LineSymbol::Z => 'z',
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            '0' => Some(LineSymbol::Lo),
            '1' => Some(LineSymbol::Hi),
            'z' | 'Z' => Some(LineSymbol::Z),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BridgingMethod {
    /// `z^x` between every pair of codewords.
    Method1,
    /// Context-dependent single symbol, `x = 1` only.
    Method2,
}

impl BridgingMethod {
    pub fn from_number(n: u8) -> Option<Self> {
        match n {
            1 => Some(BridgingMethod::Method1),
            2 => Some(BridgingMethod::Method2),
            _ => None,
        }
    }

    fn check(self, x: usize) -> Result<()> {
        if self == BridgingMethod::Method2 && x != 1 {
            return Err(LocoError::UnsupportedBridging { x });
        }
        Ok(())
    }
}

// (previous right-most bits, bridge, next left-most bits); longer contexts first
const METHOD2_RULES: [(&str, LineSymbol, &str); 8] = [
    ("00", LineSymbol::Hi, "10"),
    ("01", LineSymbol::Z, "01"),
    ("11", LineSymbol::Lo, "01"),
    ("10", LineSymbol::Z, "10"),
    ("0", LineSymbol::Lo, "11"),
    ("1", LineSymbol::Hi, "00"),
    ("0", LineSymbol::Lo, "0"),
    ("1", LineSymbol::Hi, "1"),
];

fn ends_with(bits: &[bool], pattern: &str) -> bool {
    pattern.len() <= bits.len() && bits_to_string(&bits[bits.len() - pattern.len()..]) == pattern
}

fn starts_with(bits: &[bool], pattern: &str) -> bool {
    pattern.len() <= bits.len() && bits_to_string(&bits[..pattern.len()]) == pattern
}

/// Bridging symbols between a codeword ending in `prev_suffix` and one
/// starting with `next_prefix`.
pub fn bridge(method: BridgingMethod, prev_suffix: &[bool], next_prefix: &[bool], x: usize) -> Result<Vec<LineSymbol>> {
    method.check(x)?;
    match method {
        BridgingMethod::Method1 => Ok(vec![LineSymbol::Z; x]),
        BridgingMethod::Method2 => METHOD2_RULES
            .iter()
            .find(|(prev, _, next)| ends_with(prev_suffix, prev) && starts_with(next_prefix, next))
            .map(|&(_, symbol, _)| vec![symbol])
            .ok_or_else(|| LocoError::NoBridgeRule {
                prev: bits_to_string(prev_suffix),
                next: bits_to_string(next_prefix),
            }),
    }
}

/// A framed symbol sequence together with the parameters needed to read it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolStream {
    pub symbols: Vec<LineSymbol>,
    pub params: CodeParams,
    pub method: BridgingMethod,
}

/// A forbidden pattern found inside a `z`-free segment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// Symbol offset of the pattern's first symbol.
    pub position: usize,
    pub pattern: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "offset {}: {}", self.position, self.pattern)
    }
}

/// Joins codewords with bridges. Every codeword must have length `m` and
/// satisfy the constraint.
pub fn assemble(codewords: &[Codeword], params: CodeParams, method: BridgingMethod) -> Result<SymbolStream> {
    let (m, x) = (params.m(), params.x());
    method.check(x)?;
    let mut symbols = Vec::with_capacity(codewords.len() * (m + x));
    for (k, cw) in codewords.iter().enumerate() {
        if cw.len() != m {
            return Err(LocoError::MixedParams { expected_m: m, expected_x: x });
        }
        cw.check(x)?;
        if k > 0 {
            let prev = codewords[k - 1].bits();
            let tail = &prev[prev.len().saturating_sub(x + 1)..];
            let head = &cw.bits()[..(x + 1).min(m)];
            symbols.extend(bridge(method, tail, head, x)?);
        }
        symbols.extend(cw.bits().iter().map(|&b| LineSymbol::from_bit(b)));
    }
    Ok(SymbolStream { symbols, params, method })
}

impl SymbolStream {
    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    fn frame_count(&self) -> Result<usize> {
        let (m, frame) = (self.params.m(), self.params.frame_len());
        let n = self.symbols.len();
        if n == 0 {
            return Ok(0);
        }
        if n < m || !(n - m).is_multiple_of(frame) {
            return Err(LocoError::MalformedStream(format!(
                "{n} symbols do not form whole frames of {m} + {} symbols",
                self.params.x()
            )));
        }
        Ok((n - m) / frame + 1)
    }

    /// Splits the stream back into codewords, discarding bridges.
    pub fn parse(&self) -> Result<Vec<Codeword>> {
        let count = self.frame_count()?;
        let (m, frame) = (self.params.m(), self.params.frame_len());
        (0..count)
            .map(|k| {
                let start = k * frame;
                self.symbols[start..start + m]
                    .iter()
                    .map(|s| s.bit())
                    .collect::<Option<Vec<bool>>>()
                    .map(Codeword::from_bits)
                    .ok_or_else(|| {
                        LocoError::MalformedStream(format!("z symbol inside codeword frame {k} at offset {start}"))
                    })
            })
            .collect()
    }

    /// Every forbidden pattern in every maximal `z`-free segment. Patterns
    /// never span a `z`.
    pub fn validate(&self) -> Vec<Violation> {
        let x = self.params.x();
        let mut out = Vec::new();
        let mut seg_start = 0;
        let n = self.symbols.len();
        while seg_start < n {
            if self.symbols[seg_start] == LineSymbol::Z {
                seg_start += 1;
                continue;
            }
            let mut seg_end = seg_start;
            while seg_end < n && self.symbols[seg_end] != LineSymbol::Z {
                seg_end += 1;
            }
            // runs strictly inside the segment must be longer than x
            let seg = &self.symbols[seg_start..seg_end];
            let mut run_start = 0;
            while run_start < seg.len() {
                let mut run_end = run_start;
                while run_end < seg.len() && seg[run_end] == seg[run_start] {
                    run_end += 1;
                }
                if run_start > 0 && run_end < seg.len() && run_end - run_start <= x {
                    let pattern: String = seg[run_start - 1..=run_end].iter().map(|s| s.to_char()).collect();
                    out.push(Violation {
                        position: seg_start + run_start - 1,
                        pattern,
                    });
                }
                run_start = run_end;
            }
            seg_start = seg_end;
        }
        out
    }

    /// Longest stretch of bit durations without a transition. A transition
    /// is a change between successive non-`z` symbols and is placed at the
    /// later symbol; `z` symbols occupy a duration but never transition.
    /// The stream ends count as boundaries.
    pub fn max_transition_gap(&self) -> usize {
        let mut last_boundary = 0;
        let mut last_bit: Option<LineSymbol> = None;
        let mut best = 0;
        for (pos, &s) in self.symbols.iter().enumerate() {
            if s == LineSymbol::Z {
                continue;
            }
            if let Some(prev) = last_bit {
                if prev != s {
                    best = best.max(pos - last_boundary);
                    last_boundary = pos;
                }
            }
            last_bit = Some(s);
        }
        best.max(self.symbols.len() - last_boundary)
    }

    /// Running disparity sampled after each codeword frame, counting the
    /// bridge that precedes each frame.
    pub fn disparity_trace(&self) -> Result<Vec<i64>> {
        let count = self.frame_count()?;
        let (m, frame) = (self.params.m(), self.params.frame_len());
        let mut acc = 0i64;
        let mut pos = 0;
        let mut trace = Vec::with_capacity(count);
        for k in 0..count {
            let end = k * frame + m;
            acc += self.symbols[pos..end].iter().map(|s| s.level()).sum::<i64>();
            pos = end;
            trace.push(acc);
        }
        Ok(trace)
    }

    pub fn to_text(&self) -> String {
        self.symbols.iter().map(|s| s.to_char()).collect()
    }

    pub fn from_text(text: &str, params: CodeParams, method: BridgingMethod) -> Result<Self> {
        let symbols = text
            .chars()
            .enumerate()
            .map(|(k, c)| {
                LineSymbol::from_char(c)
                    .ok_or_else(|| LocoError::MalformedStream(format!("invalid symbol {c:?} at offset {k}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { symbols, params, method })
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        self.symbols
            .chunks(4)
            .map(|chunk| {
                (0..4).fold(0u8, |acc, k| {
                    let code = match chunk.get(k) {
                        Some(LineSymbol::Lo) => 0b00,
                        Some(LineSymbol::Hi) => 0b01,
                        Some(LineSymbol::Z) => 0b10,
                        None => 0b11,
                    };
                    (acc << 2) | code
                })
            })
            .collect()
    }

    pub fn from_bytes(bytes: &[u8], params: CodeParams, method: BridgingMethod) -> Result<Self> {
        let mut symbols = Vec::with_capacity(bytes.len() * 4);
        for (k, &byte) in bytes.iter().enumerate() {
            let last = k + 1 == bytes.len();
            let mut filler = false;
            for slot in 0..4 {
                let code = (byte >> (6 - 2 * slot)) & 0b11;
                if filler && code != 0b11 {
                    return Err(LocoError::MalformedStream(format!("symbol after filler in byte {k}")));
                }
                match code {
                    0b00 => symbols.push(LineSymbol::Lo),
                    0b01 => symbols.push(LineSymbol::Hi),
                    0b10 => symbols.push(LineSymbol::Z),
                    _ if last && slot > 0 => filler = true,
                    _ => {
                        return Err(LocoError::MalformedStream(format!(
                            "reserved symbol code in byte {k}, slot {slot}"
                        )))
                    }
                }
            }
        }
        Ok(Self { symbols, params, method })
    }
}

impl fmt::Display for SymbolStream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cw(s: &str) -> Codeword {
        s.parse().unwrap()
    }

    fn bits(s: &str) -> Vec<bool> {
        s.chars().map(|c| c == '1').collect()
    }

    fn params(m: usize, x: usize) -> CodeParams {
        CodeParams::new(m, x).unwrap()
    }

    fn text(s: &str, m: usize, x: usize, method: BridgingMethod) -> SymbolStream {
        SymbolStream::from_text(s, params(m, x), method).unwrap()
    }

    #[test]
    fn method1_is_all_z() {
        let b = bridge(BridgingMethod::Method1, &bits("110"), &bits("011"), 2).unwrap();
        assert_eq!(b, vec![LineSymbol::Z, LineSymbol::Z]);
    }

    #[test]
    fn method2_table_rows() {
        let m2 = |p: &str, n: &str| bridge(BridgingMethod::Method2, &bits(p), &bits(n), 1).unwrap()[0];
        assert_eq!(m2("00", "10"), LineSymbol::Hi);
        assert_eq!(m2("01", "01"), LineSymbol::Z);
        assert_eq!(m2("11", "11"), LineSymbol::Hi);
        assert_eq!(m2("10", "00"), LineSymbol::Lo);
        assert_eq!(m2("10", "11"), LineSymbol::Lo);
        assert_eq!(m2("01", "00"), LineSymbol::Hi);
        assert_eq!(m2("11", "01"), LineSymbol::Lo);
        assert_eq!(m2("10", "10"), LineSymbol::Z);
    }

    #[test]
    fn method2_needs_x1() {
        assert!(matches!(
            bridge(BridgingMethod::Method2, &bits("000"), &bits("111"), 2),
            Err(LocoError::UnsupportedBridging { x: 2 })
        ));
        assert!(matches!(
            bridge(BridgingMethod::Method2, &[], &bits("11"), 1),
            Err(LocoError::NoBridgeRule { .. })
        ));
    }

    #[test]
    fn method2_complement_symmetry() {
        let words = ["0", "1", "00", "01", "10", "11"];
        for p in ["00", "01", "10", "11"] {
            for n in words.iter().filter(|w| w.len() == 2) {
                let orig = bridge(BridgingMethod::Method2, &bits(p), &bits(n), 1).unwrap();
                let comp = bridge(
                    BridgingMethod::Method2,
                    &bits(p).iter().map(|b| !b).collect::<Vec<_>>(),
                    &bits(n).iter().map(|b| !b).collect::<Vec<_>>(),
                    1,
                )
                .unwrap();
                assert_eq!(comp[0], orig[0].complement(), "{p}|{n}");
            }
        }
    }

    #[test]
    fn assemble_examples() {
        let p = params(6, 1);
        let s = assemble(&[cw("100011"), cw("000001")], p, BridgingMethod::Method1).unwrap();
        assert_eq!(s.to_text(), "100011z000001");
        let s = assemble(&[cw("000001"), cw("110001")], p, BridgingMethod::Method2).unwrap();
        assert_eq!(s.to_text(), "0000011110001");
        assert!(s.validate().is_empty());
        assert!(assemble(&[cw("10001")], p, BridgingMethod::Method1).is_err());
        assert!(assemble(&[cw("010000")], p, BridgingMethod::Method1).is_err());
    }

    #[test]
    fn parse_examples() {
        let s = text("100011z000001", 6, 1, BridgingMethod::Method1);
        assert_eq!(s.parse().unwrap(), vec![cw("100011"), cw("000001")]);
        let single = text("100011", 6, 1, BridgingMethod::Method1);
        assert_eq!(single.parse().unwrap(), vec![cw("100011")]);
        assert!(text("100011z00000", 6, 1, BridgingMethod::Method1).parse().is_err());
        assert!(text("1000z1z000001", 6, 1, BridgingMethod::Method1).parse().is_err());
        assert!(text("", 6, 1, BridgingMethod::Method1).parse().unwrap().is_empty());
    }

    #[test]
    fn validate_examples() {
        let v = text("0001011", 7, 1, BridgingMethod::Method1).validate();
        assert_eq!(v.len(), 2);
        assert_eq!(v[0], Violation { position: 2, pattern: "010".into() });
        assert!(text("0z0", 3, 1, BridgingMethod::Method1).validate().is_empty());
        assert!(text("1z0z1", 5, 1, BridgingMethod::Method1).validate().is_empty());
    }

    #[test]
    fn transition_gap_examples() {
        let worst = text("100000z000001", 6, 1, BridgingMethod::Method1);
        assert_eq!(worst.max_transition_gap(), 11);
        let alt = text("0110011001100", 13, 1, BridgingMethod::Method1);
        assert_eq!(alt.max_transition_gap(), 2);
        assert_eq!(text("0z1", 3, 1, BridgingMethod::Method1).max_transition_gap(), 2);
        assert_eq!(text("", 3, 1, BridgingMethod::Method1).max_transition_gap(), 0);
    }

    #[test]
    fn disparity_samples() {
        let single = text("000001", 6, 1, BridgingMethod::Method1);
        assert_eq!(single.disparity_trace().unwrap(), vec![-4]);
        let two = text("000001z111110", 6, 1, BridgingMethod::Method1);
        assert_eq!(two.disparity_trace().unwrap(), vec![-4, 0]);
    }

    #[test]
    fn binary_format_layout() {
        let s = text("01z", 3, 1, BridgingMethod::Method1);
        assert_eq!(s.to_bytes(), vec![0b00_01_10_11]);
        let back = SymbolStream::from_bytes(&s.to_bytes(), s.params, s.method).unwrap();
        assert_eq!(back, s);
        assert!(SymbolStream::from_bytes(&[0b11_00_00_00], s.params, s.method).is_err());
        assert!(SymbolStream::from_bytes(&[0b00_11_00_00], s.params, s.method).is_err());
        assert!(SymbolStream::from_bytes(&[0b00_11_11_11, 0], s.params, s.method).is_err());
    }

    fn symbol() -> impl Strategy<Value = LineSymbol> {
        prop_oneof![Just(LineSymbol::Lo), Just(LineSymbol::Hi), Just(LineSymbol::Z)]
    }

    proptest! {
        #[test]
        fn text_and_binary_round_trip(symbols in prop::collection::vec(symbol(), 0..64)) {
            let s = SymbolStream { symbols, params: params(4, 1), method: BridgingMethod::Method1 };
            prop_assert_eq!(&SymbolStream::from_text(&s.to_text(), s.params, s.method).unwrap(), &s);
            prop_assert_eq!(&SymbolStream::from_bytes(&s.to_bytes(), s.params, s.method).unwrap(), &s);
        }
    }
}
