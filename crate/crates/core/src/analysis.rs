//! Rates, adder sizes, capacity and system-level rate arithmetic.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;

use crate::balanced::cb_message_length;
use crate::cardinality::CardinalityTable;
use crate::codec::message_length;
use crate::error::{LocoError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    /// Self-clocked code, all-zeros and all-ones removed.
    Cloco,
    /// Self-clocked balanced code.
    Cbloco,
}

impl Variant {
    pub fn as_str(self) -> &'static str {
        match self {
            Variant::Cloco => "cloco",
            Variant::Cbloco => "cbloco",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "cloco" | "c-loco" => Ok(Variant::Cloco),
            "cbloco" | "cb-loco" => Ok(Variant::Cbloco),
            other => Err(format!("unknown variant {other:?} (expected cloco or cbloco)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RateReport {
    pub m: usize,
    pub x: usize,
    pub variant: Variant,
    pub message_length: usize,
    /// `message_length / (m + x)`, in lowest terms.
    pub rate: Ratio<u64>,
    /// Width of the encoder/decoder adders; equals the message length.
    pub adder_size: usize,
}

impl RateReport {
    fn new(table: &CardinalityTable, variant: Variant, message_length: usize) -> Self {
        let (m, x) = (table.m(), table.x());
        Self {
            m,
            x,
            variant,
            message_length,
            rate: Ratio::new(message_length as u64, (m + x) as u64),
            adder_size: message_length,
        }
    }

    pub fn rate_f64(&self) -> f64 {
        *self.rate.numer() as f64 / *self.rate.denom() as f64
    }

    /// Rate rounded half-up to four decimals, e.g. `"0.6842"`.
    pub fn rate_decimal(&self) -> String {
        decimal_4dp(&self.rate)
    }

    /// `m,x,variant,message_length,rate,adder_size`
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.m,
            self.x,
            self.variant,
            self.message_length,
            self.rate_decimal(),
            self.adder_size
        )
    }
}

pub const CSV_HEADER: &str = "m,x,variant,message_length,rate,adder_size";

/// Exact half-up rounding of a nonnegative ratio to four decimals.
pub fn decimal_4dp(r: &Ratio<u64>) -> String {
    let (n, d) = (*r.numer() as u128, *r.denom() as u128);
    let scaled = (n * 20_000 + d) / (2 * d);
    format!("{}.{:04}", scaled / 10_000, scaled % 10_000)
}

pub fn rate_cloco(table: &CardinalityTable) -> Result<RateReport> {
    Ok(RateReport::new(table, Variant::Cloco, message_length(table)?))
}

pub fn rate_cbloco(table: &CardinalityTable) -> Result<RateReport> {
    Ok(RateReport::new(table, Variant::Cbloco, cb_message_length(table)?))
}

pub fn rate(table: &CardinalityTable, variant: Variant) -> Result<RateReport> {
    match variant {
        Variant::Cloco => rate_cloco(table),
        Variant::Cbloco => rate_cbloco(table),
    }
}

/// One report per `(m, x, variant)` entry, in order.
pub fn rate_table(entries: &[(usize, usize, Variant)]) -> Result<Vec<RateReport>> {
    entries
        .iter()
        .map(|&(m, x, variant)| rate(&CardinalityTable::build(m, x)?, variant))
        .collect()
}

/// Column-aligned plain-text rendering of [`rate_table`] output.
pub fn format_aligned(reports: &[RateReport]) -> String {
    let mut out = format!(
        "{:>6} {:>3} {:>7} {:>9} {:>7} {:>10}\n",
        "m", "x", "variant", "msg_bits", "rate", "adder_bits"
    );
    for r in reports {
        out.push_str(&format!(
            "{:>6} {:>3} {:>7} {:>9} {:>7} {:>10}\n",
            r.m,
            r.x,
            r.variant,
            r.message_length,
            r.rate_decimal(),
            r.adder_size
        ));
    }
    out
}

/// Largest real root of `λ^{x+1} - λ^x - 1`, refined by bisection on
/// `[1, 2]` until `|f(λ)| < tolerance`.
pub fn growth_root(x: usize, tolerance: f64) -> f64 {
    assert!(x >= 1 && tolerance > 0.0);
    let f = |l: f64| l.powi(x as i32 + 1) - l.powi(x as i32) - 1.0;
    // f(1) = -1 < 0 and f(2) = 2^x - 1 > 0
    let (mut lo, mut hi) = (1.0f64, 2.0f64);
    loop {
        let mid = 0.5 * (lo + hi);
        let v = f(mid);
        if v.abs() < tolerance || hi - lo <= f64::EPSILON * mid {
            return mid;
        }
        if v < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
}

/// Capacity of the constraint in bits per symbol, `log2` of [`growth_root`].
pub fn capacity(x: usize, tolerance: f64) -> f64 {
    growth_root(x, tolerance).log2()
}

#[derive(Debug, Clone, PartialEq)]
pub struct OverallRate {
    /// Overall length `w + (n - w + δ) / r`, rounded to the nearest integer.
    pub n_ov: u64,
    /// Unrounded overall length.
    pub n_ov_exact: f64,
    /// `n_ov - n_ov_exact`.
    pub rounding: f64,
    /// `w / n_ov_exact`.
    pub rate_exact: f64,
    /// `R r / (R r + 1 - R)` with `R = w / n`.
    pub rate_approx: f64,
}

/// Overall rate when only the `n - w` parity bits of a length-`n` block,
/// plus `delta` padding zeros, pass through a constrained code of rate `r_loco`.
pub fn overall_rate(w: u64, n: u64, delta: u64, r_loco: f64) -> Result<OverallRate> {
    if w == 0 || w > n {
        return Err(LocoError::InvalidRateArgs(format!("need 0 < w <= n, got w={w}, n={n}")));
    }
    if !(r_loco > 0.0 && r_loco <= 1.0) {
        return Err(LocoError::InvalidRateArgs(format!("need 0 < r_loco <= 1, got {r_loco}")));
    }
    let n_ov_exact = w as f64 + (n - w + delta) as f64 / r_loco;
    let n_ov = n_ov_exact.round() as u64;
    let r_code = w as f64 / n as f64;
    Ok(OverallRate {
        n_ov,
        n_ov_exact,
        rounding: n_ov as f64 - n_ov_exact,
        rate_exact: w as f64 / n_ov_exact,
        rate_approx: r_code * r_loco / (r_code * r_loco + 1.0 - r_code),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cloco(m: usize, x: usize) -> RateReport {
        rate_cloco(&CardinalityTable::build(m, x).unwrap()).unwrap()
    }

    fn cbloco(m: usize, x: usize) -> RateReport {
        rate_cbloco(&CardinalityTable::build(m, x).unwrap()).unwrap()
    }

    #[test]
    fn small_code_rates() {
        let r = cloco(6, 1);
        assert_eq!(r.rate, Ratio::new(4, 7));
        assert_eq!(r.rate_decimal(), "0.5714");
        let b = cbloco(6, 1);
        assert_eq!(b.rate, Ratio::new(3, 7));
        assert_eq!(b.rate_decimal(), "0.4286");
    }

    #[test]
    fn csv_row_layout() {
        assert_eq!(cloco(18, 1).csv_row(), "18,1,cloco,13,0.6842,13");
        assert_eq!(cbloco(24, 2).csv_row(), "24,2,cbloco,13,0.5000,13");
    }

    #[test]
    fn rounding_is_half_up() {
        assert_eq!(decimal_4dp(&Ratio::new(1, 8)), "0.1250");
        assert_eq!(decimal_4dp(&Ratio::new(1, 16)), "0.0625");
        assert_eq!(decimal_4dp(&Ratio::new(1, 32)), "0.0313");
        assert_eq!(decimal_4dp(&Ratio::new(2, 3)), "0.6667");
        assert_eq!(decimal_4dp(&Ratio::new(1, 1)), "1.0000");
    }

    #[test]
    fn underfull_codes_error() {
        let t = CardinalityTable::build(1, 1).unwrap();
        assert!(rate_cloco(&t).is_err());
        let t = CardinalityTable::build(2, 1).unwrap();
        assert!(rate_cloco(&t).is_ok());
        assert!(rate_cbloco(&t).is_err());
    }

    #[test]
    fn golden_ratio_root() {
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        assert!((phi * phi - phi - 1.0).abs() < 1e-12);
        assert!((growth_root(1, 1e-13) - phi).abs() < 1e-12);
    }

    #[test]
    fn overall_rate_degenerate_and_errors() {
        let r = overall_rate(3, 4, 0, 1.0).unwrap();
        assert_eq!(r.n_ov, 4);
        assert_eq!(r.rate_exact, 0.75);
        assert!((r.rate_approx - 0.75).abs() < 1e-12);
        assert!(overall_rate(0, 4, 0, 0.5).is_err());
        assert!(overall_rate(5, 4, 0, 0.5).is_err());
        assert!(overall_rate(3, 4, 0, 0.0).is_err());
        assert!(overall_rate(3, 4, 0, 1.5).is_err());
    }

    #[test]
    fn approximation_tends_to_code_rate() {
        let r = overall_rate(999_999, 1_000_000, 0, 0.6842).unwrap();
        assert!((r.rate_approx - 0.999999).abs() < 1e-5);
    }

    proptest! {
        #[test]
        fn rate_gap_is_one_symbol(m in 3usize..400, x in 1usize..9) {
            let t = CardinalityTable::build(m, x).unwrap();
            prop_assume!(rate_cbloco(&t).is_ok());
            let gap = rate_cloco(&t).unwrap().rate - rate_cbloco(&t).unwrap().rate;
            prop_assert_eq!(gap, Ratio::new(1, (m + x) as u64));
        }

        #[test]
        fn rate_below_capacity(m in 2usize..400, x in 1usize..6) {
            prop_assert!(cloco(m, x).rate_f64() < capacity(x, 1e-12));
        }
    }
}
