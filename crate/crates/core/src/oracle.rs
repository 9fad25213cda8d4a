//! Brute-force ground truth.
//!
//! [`enumerate`] lists every length-`m` binary string that contains none of
//! the patterns `0 1^y 0`, `1 0^y 1` (`1 <= y <= x`), found by a direct
//! substring scan over all `2^m` candidates. It uses nothing from the
//! cardinality recursion or the codec, so [`certify_codec`] can hold those
//! against it.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;

use crate::balanced::bloco_index_of;
use crate::cardinality::CardinalityTable;
use crate::codec::{codeword_of, index_of};
use crate::codeword::Codeword;
use crate::error::{LocoError, Result};

pub const DEFAULT_CAP: usize = 24;

/// The forbidden patterns for `x`, as byte strings of `0`/`1`.
pub fn forbidden_patterns(x: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::with_capacity(2 * x);
    for y in 1..=x {
        for (outer, inner) in [(0u8, 1u8), (1, 0)] {
            let mut p = vec![outer];
            p.extend(std::iter::repeat_n(inner, y));
            p.push(outer);
            out.push(p);
        }
    }
    out
}

fn contains_any(word: &[u8], patterns: &[Vec<u8>]) -> bool {
    patterns
        .iter()
        .any(|p| p.len() <= word.len() && word.windows(p.len()).any(|w| w == p.as_slice()))
}

fn word_of(value: u64, m: usize) -> Vec<u8> {
    (0..m).rev().map(|k| ((value >> k) & 1) as u8).collect()
}

// candidates per parallel block
const BLOCK_BITS: usize = 12;

fn scan(m: usize, x: usize, cap: usize) -> Result<Vec<Vec<Vec<u8>>>> {
    if m > cap {
        return Err(LocoError::CapExceeded { m, cap });
    }
    let patterns = forbidden_patterns(x);
    let total = 1u64 << m;
    let block = 1u64 << BLOCK_BITS.min(m);
    let blocks = total / block;
    // blocks are ascending prefix ranges; collecting in block order keeps
    // the output sorted regardless of scheduling
    Ok((0..blocks)
        .into_par_iter()
        .map(|b| {
            (b * block..(b + 1) * block)
                .map(|v| word_of(v, m))
                .filter(|w| !contains_any(w, &patterns))
                .collect::<Vec<_>>()
        })
        .collect())
}

/// All constrained words of length `m`, ascending lexicographic order.
pub fn enumerate(m: usize, x: usize) -> Result<Vec<Codeword>> {
    enumerate_capped(m, x, DEFAULT_CAP)
}

pub fn enumerate_capped(m: usize, x: usize, cap: usize) -> Result<Vec<Codeword>> {
    Ok(scan(m, x, cap)?
        .into_iter()
        .flatten()
        .map(|w| Codeword::from_bits(w.into_iter().map(|b| b == 1).collect()))
        .collect())
}

/// Number of constrained words of length `m`.
pub fn count(m: usize, x: usize) -> Result<u64> {
    Ok(scan(m, x, DEFAULT_CAP)?.iter().map(|b| b.len() as u64).sum())
}

/// Prefix group (1..=5) of a constrained word of length >= 2:
/// `00`, `01`, a run of `2..=x+1` ones followed by a zero, `10`, and
/// everything else starting `11`.
pub fn classify_group(word: &Codeword, x: usize) -> usize {
    let b = word.bits();
    match (b[0], b[1]) {
        (false, false) => 1,
        (false, true) => 2,
        (true, false) => 4,
        (true, true) => {
            let ones = b.iter().take_while(|&&v| v).count();
            if ones <= x + 1 && ones < b.len() {
                3
            } else {
                5
            }
        }
    }
}

/// Outcome of [`certify_codec`]. Failures are data, not errors.
#[derive(Debug, Clone, Default)]
pub struct CertificationReport {
    pub m: usize,
    pub x: usize,
    pub indices_checked: usize,
    pub failures: Vec<String>,
}

impl CertificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn fail(&mut self, msg: String) {
        // keep reports readable when something is badly wrong
        if self.failures.len() < 32 {
            self.failures.push(msg);
        }
    }
}

/// Checks the codec, cardinalities, groups and shifts of `C(m, x)` against
/// exhaustive enumeration.
pub fn certify_codec(m: usize, x: usize) -> Result<CertificationReport> {
    if m < 2 {
        return Err(LocoError::InvalidParams { m, x, reason: "certification needs m >= 2" });
    }
    let book = enumerate(m, x)?;
    let table = CardinalityTable::build(m, x)?;
    let mut report = CertificationReport { m, x, ..Default::default() };

    let n = book.len();
    if BigUint::from(n) != *table.cardinality() {
        report.fail(format!("N({m},{x}) = {} but oracle counts {n}", table.cardinality()));
    }

    let mut prev_index: Option<BigUint> = None;
    for (g, word) in book.iter().enumerate() {
        let gb = BigUint::from(g);
        match codeword_of(&gb, &table) {
            Ok(c) if &c == word => {}
            Ok(c) => report.fail(format!("codeword_of({g}) = {c}, oracle has {word}")),
            Err(e) => report.fail(format!("codeword_of({g}) failed: {e}")),
        }
        match index_of(word, &table) {
            Ok(i) => {
                if i != gb {
                    report.fail(format!("index_of({word}) = {i}, expected {g}"));
                }
                if prev_index.as_ref().is_some_and(|p| *p >= i) {
                    report.fail(format!("index order broken at {word}"));
                }
                prev_index = Some(i);
            }
            Err(e) => report.fail(format!("index_of({word}) failed: {e}")),
        }
        let mirror = &book[n - 1 - g];
        if *mirror != word.complement() {
            report.fail(format!("entry {} = {mirror} is not the complement of entry {g} = {word}", n - 1 - g));
        }
        let expected_b = BigUint::from(g.min(n - 1 - g));
        match bloco_index_of(word, &table) {
            Ok(b) if b == expected_b => {}
            Ok(b) => report.fail(format!("balanced index of {word} = {b}, expected {expected_b}")),
            Err(e) => report.fail(format!("balanced index of {word} failed: {e}")),
        }
        report.indices_checked += 1;
    }

    let mut counts = [0usize; 5];
    for word in &book {
        counts[classify_group(word, x) - 1] += 1;
    }
    let groups = table.group_cardinalities(m)?;
    for (l, (got, want)) in counts.iter().zip(groups.as_array()).enumerate() {
        if BigUint::from(*got) != *want {
            report.fail(format!("group {} has {got} codewords, formula gives {want}", l + 1));
        }
    }

    if m >= 3 {
        check_shifts(&book, &table, &mut report)?;
    }
    Ok(report)
}

/// Shift of each group between `C(m, x)` and the codebook of its `m - 1`
/// (groups 1-3) or `m - 1 - x` (groups 4-5) right-most bits. Groups 4-5 are
/// skipped when `m - 1 - x < 1`, where no shorter codebook exists.
fn check_shifts(book: &[Codeword], table: &CardinalityTable, report: &mut CertificationReport) -> Result<()> {
    let (m, x) = (table.m(), table.x());
    let shifts = table.index_shifts(m)?;
    let short = m - 1;
    let index_map = |len: usize| -> Result<HashMap<Codeword, usize>> {
        Ok(enumerate(len, x)?.into_iter().enumerate().map(|(g, w)| (w, g)).collect())
    };
    let shorter = index_map(short)?;
    let shortest = if short > x { Some(index_map(short - x)?) } else { None };

    for (g, word) in book.iter().enumerate() {
        let group = classify_group(word, x);
        let (map, keep) = match group {
            1..=3 => (&shorter, short),
            _ => match &shortest {
                Some(s) => (s, short - x),
                None => continue,
            },
        };
        let tail = Codeword::from_bits(word.bits()[m - keep..].to_vec());
        let Some(&g_tail) = map.get(&tail) else {
            report.fail(format!("tail {tail} of {word} is not in the length-{keep} codebook"));
            continue;
        };
        let observed = BigInt::from(g) - BigInt::from(g_tail);
        if observed != *shifts.get(group) {
            report.fail(format!(
                "group {group} shift for {word}: observed {observed}, formula {}",
                shifts.get(group)
            ));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words(list: &[Codeword]) -> Vec<String> {
        list.iter().map(|c| c.to_string()).collect()
    }

    #[test]
    fn pattern_set() {
        let p = forbidden_patterns(2);
        assert_eq!(p, vec![vec![0, 1, 0], vec![1, 0, 1], vec![0, 1, 1, 0], vec![1, 0, 0, 1]]);
    }

    #[test]
    fn length_one_and_two() {
        assert_eq!(words(&enumerate(1, 1).unwrap()), ["0", "1"]);
        assert_eq!(words(&enumerate(2, 4).unwrap()), ["00", "01", "10", "11"]);
    }

    #[test]
    fn length_three_x1() {
        assert_eq!(
            words(&enumerate(3, 1).unwrap()),
            ["000", "001", "011", "100", "110", "111"]
        );
    }

    #[test]
    fn cap_enforced() {
        assert!(matches!(enumerate_capped(9, 1, 8), Err(LocoError::CapExceeded { .. })));
        assert!(enumerate(25, 1).is_err());
    }

    #[test]
    fn groups_by_prefix() {
        let g = |s: &str, x| classify_group(&s.parse().unwrap(), x);
        assert_eq!(g("000111", 1), 1);
        assert_eq!(g("011001", 1), 2);
        assert_eq!(g("110001", 1), 3);
        assert_eq!(g("100011", 1), 4);
        assert_eq!(g("111001", 1), 5);
        assert_eq!(g("11", 3), 5);
        assert_eq!(g("110", 2), 3);
    }

    #[test]
    fn certify_small_codes() {
        let r = certify_codec(6, 1).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        assert_eq!(r.indices_checked, 26);
        for x in 1..=5 {
            let r = certify_codec(2, x).unwrap();
            assert!(r.passed(), "{:?}", r.failures);
            assert_eq!(r.indices_checked, 4);
        }
    }
}
