//! Command-line front end.
//!
//! Exit status is 0 on success, 1 for usage errors and 2 for data errors
//! (constraint violations, malformed streams or messages). Diagnostics go to
//! stderr.
//!
//! Message files are either text (`0`/`1`, whitespace ignored) or, with
//! `--packed`, raw bytes read most significant bit first. The final partial
//! block is zero-padded on the right. The pad length travels with the stream:
//! a `#pad=<k>` line after the symbol line in text form, one trailing byte
//! in binary form.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::analysis::{self, capacity, format_aligned, Variant, CSV_HEADER};
use crate::balanced::{cb_message_length, orient, DisparityState};
use crate::cardinality::{CardinalityTable, CodeParams};
use crate::codec::{check_codeword, decode_with_length, encode_with_length, message_length};
use crate::codeword::Codeword;
use crate::error::{LocoError, Result};
use crate::oracle;
use crate::stream::{assemble, bridge, BridgingMethod, SymbolStream, Violation};

/// Everything needed to turn message bits into a stream and back.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PipelineConfig {
    pub params: CodeParams,
    pub variant: Variant,
    pub method: BridgingMethod,
}

/// A symbol stream plus the number of zero bits appended to the message.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EncodedMessage {
    pub stream: SymbolStream,
    pub pad: usize,
}

/// Block length used by `variant` on `table`.
pub fn block_length(table: &CardinalityTable, variant: Variant) -> Result<usize> {
    match variant {
        Variant::Cloco => message_length(table),
        Variant::Cbloco => cb_message_length(table),
    }
}

/// Splits `bits` into blocks, zero-pads the last one, encodes and bridges.
pub fn encode_message(bits: &[bool], config: &PipelineConfig) -> Result<EncodedMessage> {
    let table = CardinalityTable::new(config.params);
    let s = block_length(&table, config.variant)?;
    let pad = (s - bits.len() % s) % s;
    let mut padded = bits.to_vec();
    padded.resize(bits.len() + pad, false);

    let plain = padded
        .par_chunks(s)
        .map(|block| encode_with_length(block, s, &table))
        .collect::<Result<Vec<Codeword>>>()?;
    let codewords = match config.variant {
        Variant::Cloco => plain,
        Variant::Cbloco => {
            let (m, x) = (config.params.m(), config.params.x());
            let mut state = DisparityState::new();
            let mut out: Vec<Codeword> = Vec::with_capacity(plain.len());
            for c0 in plain {
                let chosen = orient(c0, &mut state);
                // bit bridges sit on the line too, so the next choice must see them
                if let (Some(prev), BridgingMethod::Method2) = (out.last(), config.method) {
                    let tail = &prev.bits()[m.saturating_sub(x + 1)..];
                    let head = &chosen.bits()[..(x + 1).min(m)];
                    let levels = bridge(config.method, tail, head, x)?.iter().map(|s| s.level()).sum();
                    state.record_levels(levels);
                }
                out.push(chosen);
            }
            out
        }
    };
    let stream = assemble(&codewords, config.params, config.method)?;
    Ok(EncodedMessage { stream, pad })
}

/// Inverse of [`encode_message`]. The stream is checked against the
/// constraint first; the first violation is reported as an error.
pub fn decode_message(encoded: &EncodedMessage, variant: Variant) -> Result<Vec<bool>> {
    let stream = &encoded.stream;
    if let Some(v) = stream.validate().first() {
        return Err(LocoError::ConstraintViolation {
            codeword: "stream".into(),
            pattern: v.pattern.clone(),
            offset: v.position,
        });
    }
    let table = CardinalityTable::new(stream.params);
    let s = block_length(&table, variant)?;
    let balanced = variant == Variant::Cbloco;
    let codewords = stream.parse()?;
    let blocks = codewords
        .par_iter()
        .map(|c| {
            check_codeword(c, &table)?;
            Ok(decode_with_length(c, s, &table, balanced)?.bits().to_vec())
        })
        .collect::<Result<Vec<Vec<bool>>>>()?;
    let mut bits: Vec<bool> = blocks.concat();
    if encoded.pad > bits.len() || (encoded.pad >= s && !bits.is_empty()) {
        return Err(LocoError::MalformedStream(format!(
            "pad of {} bits does not fit {} decoded bits with {s}-bit blocks",
            encoded.pad,
            bits.len()
        )));
    }
    if bits[bits.len() - encoded.pad..].iter().any(|&b| b) {
        return Err(LocoError::MalformedStream("nonzero padding bits".into()));
    }
    bits.truncate(bits.len() - encoded.pad);
    Ok(bits)
}

/// Message bits from a text file of `0`/`1` characters; whitespace is skipped.
pub fn bits_from_text(text: &str) -> Result<Vec<bool>> {
    text.chars()
        .enumerate()
        .filter(|(_, c)| !c.is_whitespace())
        .map(|(k, c)| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            _ => Err(LocoError::MalformedStream(format!(
                "message character {c:?} at offset {k} is not 0 or 1"
            ))),
        })
        .collect()
}

/// Bits of `bytes`, most significant first.
pub fn bits_from_bytes(bytes: &[u8]) -> Vec<bool> {
    bytes
        .iter()
        .flat_map(|&b| (0..8).rev().map(move |k| (b >> k) & 1 == 1))
        .collect()
}

/// Inverse of [`bits_from_bytes`]; the bit count must be a multiple of 8.
pub fn bytes_from_bits(bits: &[bool]) -> Result<Vec<u8>> {
    if !bits.len().is_multiple_of(8) {
        return Err(LocoError::MalformedStream(format!(
            "{} decoded bits do not form whole bytes",
            bits.len()
        )));
    }
    Ok(bits
        .chunks(8)
        .map(|c| c.iter().fold(0u8, |acc, &b| (acc << 1) | b as u8))
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StreamFormat {
    Text,
    Bin,
}

/// Serialized stream: text is the symbol line plus a `#pad=k` line; binary
/// is the packed symbols plus one pad byte.
pub fn write_stream(encoded: &EncodedMessage, format: StreamFormat) -> Result<Vec<u8>> {
    match format {
        StreamFormat::Text => Ok(format!("{}\n#pad={}\n", encoded.stream.to_text(), encoded.pad).into_bytes()),
        StreamFormat::Bin => {
            let pad = u8::try_from(encoded.pad)
                .map_err(|_| LocoError::MalformedStream(format!("pad {} does not fit one byte", encoded.pad)))?;
            let mut out = encoded.stream.to_bytes();
            out.push(pad);
            Ok(out)
        }
    }
}

/// Inverse of [`write_stream`]. A text stream without a pad line has pad 0.
pub fn read_stream(
    bytes: &[u8],
    format: StreamFormat,
    params: CodeParams,
    method: BridgingMethod,
) -> Result<EncodedMessage> {
    match format {
        StreamFormat::Text => {
            let text = std::str::from_utf8(bytes)
                .map_err(|_| LocoError::MalformedStream("stream text is not UTF-8".into()))?;
            let mut symbols = String::new();
            let mut pad = 0;
            for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
                if let Some(v) = line.strip_prefix("#pad=") {
                    pad = v
                        .parse()
                        .map_err(|_| LocoError::MalformedStream(format!("bad pad line {line:?}")))?;
                } else {
                    symbols.push_str(line);
                }
            }
            let stream = SymbolStream::from_text(&symbols, params, method)?;
            Ok(EncodedMessage { stream, pad })
        }
        StreamFormat::Bin => {
            let (&pad, body) = bytes
                .split_last()
                .ok_or_else(|| LocoError::MalformedStream("empty binary stream has no pad byte".into()))?;
            let stream = SymbolStream::from_bytes(body, params, method)?;
            Ok(EncodedMessage { stream, pad: pad as usize })
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "loco", version, about = "LOCO constrained codes: encode, decode, enumerate, analyse")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Encode a message file into a symbol stream.
    Encode(CodingArgs),
    /// Decode a symbol stream back into the message.
    Decode(CodingArgs),
    /// Print the brute-force codebook with indices and groups.
    Enumerate {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        x: usize,
    },
    /// Rate and adder-size table for lists or ranges of m and x.
    Rates {
        /// e.g. `18`, `6,8,10` or `6..20`
        #[arg(long)]
        m: String,
        #[arg(long, default_value = "1")]
        x: String,
        #[arg(long, value_enum, default_value_t = RateVariant::Cloco)]
        variant: RateVariant,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
        /// Append one capacity row per x.
        #[arg(long)]
        capacity: bool,
    },
    /// Report violations, transition gap and disparity of a stream file.
    Audit(StreamArgs),
    /// Check codec and cardinalities against exhaustive enumeration.
    Certify {
        #[arg(long)]
        m: String,
        #[arg(long, default_value = "1")]
        x: String,
    },
}

#[derive(Debug, Args)]
struct StreamArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    x: usize,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
    bridging: u8,
    #[arg(long, value_enum, default_value_t = StreamFormat::Text)]
    format: StreamFormat,
    /// Input file; stdin when absent.
    input: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct CodingArgs {
    #[command(flatten)]
    stream: StreamArgs,
    #[arg(long, value_enum, default_value_t = CodeVariant::Cloco)]
    variant: CodeVariant,
    /// Message is raw bytes instead of 0/1 text.
    #[arg(long)]
    packed: bool,
    /// Output file; stdout when absent.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CodeVariant {
    Cloco,
    Cbloco,
}

impl From<CodeVariant> for Variant {
    fn from(v: CodeVariant) -> Self {
        match v {
            CodeVariant::Cloco => Variant::Cloco,
            CodeVariant::Cbloco => Variant::Cbloco,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RateVariant {
    Cloco,
    Cbloco,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
    Table,
}

enum Failure {
    Usage(String),
    Data(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Data(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Data(m) => m,
        }
    }
}

impl From<LocoError> for Failure {
    fn from(e: LocoError) -> Self {
        match e {
            LocoError::InvalidParams { .. }
            | LocoError::Underfull { .. }
            | LocoError::UnsupportedBridging { .. }
            | LocoError::CapExceeded { .. }
            | LocoError::OutOfTableRange { .. }
            | LocoError::InvalidRateArgs(_) => Failure::Usage(e.to_string()),
            _ => Failure::Data(e.to_string()),
        }
    }
}

type CliResult = std::result::Result<(), Failure>;

/// Runs the CLI on `args` (program name first) and returns the exit status.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                1
            } else {
                let _ = write!(stdout, "{text}");
                0
            };
        }
    };
    let outcome = match cli.command {
        Command::Encode(a) => encode(&a, stdin, stdout),
        Command::Decode(a) => decode(&a, stdin, stdout, stderr),
        Command::Enumerate { m, x } => enumerate(m, x, stdout),
        Command::Rates { m, x, variant, format, capacity } => rates(&m, &x, variant, format, capacity, stdout),
        Command::Audit(a) => audit(&a, stdin, stdout),
        Command::Certify { m, x } => certify(&m, &x, stdout),
    };
    match outcome {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(stderr, "loco: {}", f.message());
            f.code()
        }
    }
}

fn io_failure(context: &str, e: std::io::Error) -> Failure {
    Failure::Usage(format!("{context}: {e}"))
}

fn read_input(path: &Option<PathBuf>, stdin: &mut dyn Read) -> std::result::Result<Vec<u8>, Failure> {
    match path {
        Some(p) => fs::read(p).map_err(|e| io_failure(&format!("cannot read {}", p.display()), e)),
        None => {
            let mut buf = Vec::new();
            stdin.read_to_end(&mut buf).map_err(|e| io_failure("cannot read stdin", e))?;
            Ok(buf)
        }
    }
}

fn write_output(path: &Option<PathBuf>, bytes: &[u8], stdout: &mut dyn Write) -> CliResult {
    match path {
        Some(p) => fs::write(p, bytes).map_err(|e| io_failure(&format!("cannot write {}", p.display()), e)),
        None => stdout.write_all(bytes).map_err(|e| io_failure("cannot write stdout", e)),
    }
}

fn out(stdout: &mut dyn Write, text: &str) -> CliResult {
    stdout.write_all(text.as_bytes()).map_err(|e| io_failure("cannot write stdout", e))
}

fn pipeline_config(a: &CodingArgs) -> std::result::Result<PipelineConfig, Failure> {
    let params = CodeParams::new(a.stream.m, a.stream.x)?;
    let variant = Variant::from(a.variant);
    let method = stream_method(&a.stream)?;
    let s = block_length(&CardinalityTable::new(params), variant)?;
    if a.stream.format == StreamFormat::Bin && s > 256 {
        return Err(Failure::Usage(format!(
            "binary format stores the pad in one byte, which needs a block length of at most 256 (got {s})"
        )));
    }
    Ok(PipelineConfig { params, variant, method })
}

fn stream_method(a: &StreamArgs) -> std::result::Result<BridgingMethod, Failure> {
    let method = BridgingMethod::from_number(a.bridging).expect("range checked by clap");
    if method == BridgingMethod::Method2 && a.x != 1 {
        return Err(LocoError::UnsupportedBridging { x: a.x }.into());
    }
    Ok(method)
}

fn encode(a: &CodingArgs, stdin: &mut dyn Read, stdout: &mut dyn Write) -> CliResult {
    let config = pipeline_config(a)?;
    let raw = read_input(&a.stream.input, stdin)?;
    let bits = if a.packed {
        bits_from_bytes(&raw)
    } else {
        let text = std::str::from_utf8(&raw).map_err(|_| Failure::Data("message text is not UTF-8".into()))?;
        bits_from_text(text)?
    };
    let encoded = encode_message(&bits, &config)?;
    write_output(&a.output, &write_stream(&encoded, a.stream.format)?, stdout)
}

fn violation_report(violations: &[Violation]) -> String {
    let mut msg = format!("{} constraint violation(s):", violations.len());
    for v in violations.iter().take(20) {
        msg.push_str(&format!("\n  {v}"));
    }
    if violations.len() > 20 {
        msg.push_str(&format!("\n  ... {} more", violations.len() - 20));
    }
    msg
}

fn decode(a: &CodingArgs, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CliResult {
    let config = pipeline_config(a)?;
    let raw = read_input(&a.stream.input, stdin)?;
    let encoded = read_stream(&raw, a.stream.format, config.params, config.method)?;
    let violations = encoded.stream.validate();
    if !violations.is_empty() {
        let _ = writeln!(stderr, "{}", violation_report(&violations));
        return Err(Failure::Data("stream rejected".into()));
    }
    let bits = decode_message(&encoded, config.variant)?;
    let bytes = if a.packed {
        bytes_from_bits(&bits)?
    } else {
        let mut text: String = bits.iter().map(|&b| if b { '1' } else { '0' }).collect();
        text.push('\n');
        text.into_bytes()
    };
    write_output(&a.output, &bytes, stdout)
}

fn enumerate(m: usize, x: usize, stdout: &mut dyn Write) -> CliResult {
    CodeParams::new(m, x)?;
    let book = oracle::enumerate(m, x)?;
    let mut text = format!("# C({m},{x})\n{:>8}  {:<w$}  group\n", "index", "codeword", w = m.max(8));
    for (g, word) in book.iter().enumerate() {
        let group = if m >= 2 { oracle::classify_group(word, x).to_string() } else { "-".into() };
        text.push_str(&format!("{g:>8}  {:<w$}  {group}\n", word.to_string(), w = m.max(8)));
    }
    text.push_str(&format!("N({m},{x}) = {}\n", book.len()));
    out(stdout, &text)
}

/// `18`, `6,8,10`, `6..20` or `6..=20` (ranges are inclusive).
fn parse_list(arg: &str, name: &str) -> std::result::Result<Vec<usize>, Failure> {
    let bad = || Failure::Usage(format!("cannot parse --{name} value {arg:?}"));
    let mut values = Vec::new();
    for part in arg.split(',').map(str::trim) {
        if let Some((lo, hi)) = part.split_once("..") {
            let hi = hi.strip_prefix('=').unwrap_or(hi);
            let lo: usize = lo.trim().parse().map_err(|_| bad())?;
            let hi: usize = hi.trim().parse().map_err(|_| bad())?;
            let range: RangeInclusive<usize> = lo..=hi;
            if range.is_empty() {
                return Err(bad());
            }
            values.extend(range);
        } else {
            values.push(part.parse().map_err(|_| bad())?);
        }
    }
    Ok(values)
}

fn rates(
    m: &str,
    x: &str,
    variant: RateVariant,
    format: TableFormat,
    with_capacity: bool,
    stdout: &mut dyn Write,
) -> CliResult {
    let ms = parse_list(m, "m")?;
    let xs = parse_list(x, "x")?;
    let variants: &[Variant] = match variant {
        RateVariant::Cloco => &[Variant::Cloco],
        RateVariant::Cbloco => &[Variant::Cbloco],
        RateVariant::Both => &[Variant::Cloco, Variant::Cbloco],
    };
    let mut entries = Vec::new();
    for &xv in &xs {
        for &mv in &ms {
            CodeParams::new(mv, xv)?;
            entries.extend(variants.iter().map(|&v| (mv, xv, v)));
        }
    }
    let reports = analysis::rate_table(&entries)?;
    let mut text = match format {
        TableFormat::Csv => {
            let mut t = format!("{CSV_HEADER}\n");
            for r in &reports {
                t.push_str(&r.csv_row());
                t.push('\n');
            }
            t
        }
        TableFormat::Table => format_aligned(&reports),
    };
    if with_capacity {
        for &xv in &xs {
            if xv == 0 {
                continue;
            }
            let c = capacity(xv, 1e-12);
            match format {
                TableFormat::Csv => text.push_str(&format!("-,{xv},capacity,-,{c:.4},-\n")),
                TableFormat::Table => text.push_str(&format!("capacity x={xv}: {c:.4}\n")),
            }
        }
    }
    out(stdout, &text)
}

fn audit(a: &StreamArgs, stdin: &mut dyn Read, stdout: &mut dyn Write) -> CliResult {
    let params = CodeParams::new(a.m, a.x)?;
    let method = stream_method(a)?;
    let raw = read_input(&a.input, stdin)?;
    let encoded = read_stream(&raw, a.format, params, method)?;
    let stream = &encoded.stream;
    let violations = stream.validate();
    let gap = stream.max_transition_gap();
    let bound = 2 * (a.m - 1) + a.x;
    let trace = stream.disparity_trace()?;
    let mut text = format!("symbols: {}\nframes: {}\n", stream.len(), trace.len());
    if violations.is_empty() {
        text.push_str("violations: none\n");
    } else {
        text.push_str(&format!("violations: {}\n", violations.len()));
        for v in &violations {
            text.push_str(&format!("  {v}\n"));
        }
    }
    text.push_str(&format!(
        "max transition gap: {gap} (bound {bound}, {})\n",
        if gap <= bound { "ok" } else { "exceeded" }
    ));
    match (trace.iter().min(), trace.iter().max()) {
        (Some(lo), Some(hi)) => text.push_str(&format!("running disparity: min {lo}, max {hi}\n")),
        _ => text.push_str("running disparity: no frames\n"),
    }
    out(stdout, &text)?;
    if !violations.is_empty() || gap > bound {
        return Err(Failure::Data("stream failed audit".into()));
    }
    Ok(())
}

fn certify(m: &str, x: &str, stdout: &mut dyn Write) -> CliResult {
    let ms = parse_list(m, "m")?;
    let xs = parse_list(x, "x")?;
    let mut failed = 0;
    for &xv in &xs {
        for &mv in &ms {
            CodeParams::new(mv, xv)?;
            if mv < 2 {
                out(stdout, &format!("m={mv} x={xv}: skipped (needs m >= 2)\n"))?;
                continue;
            }
            let report = oracle::certify_codec(mv, xv)?;
            if report.passed() {
                out(stdout, &format!("m={mv} x={xv}: PASS ({} codewords)\n", report.indices_checked))?;
            } else {
                failed += 1;
                out(stdout, &format!("m={mv} x={xv}: FAIL\n"))?;
                for f in &report.failures {
                    out(stdout, &format!("  {f}\n"))?;
                }
            }
        }
    }
    if failed > 0 {
        return Err(Failure::Data(format!("{failed} code(s) failed certification")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str], input: &[u8]) -> (i32, String, String) {
        let mut stdin = input;
        let (mut o, mut e) = (Vec::new(), Vec::new());
        let argv = std::iter::once("loco").chain(args.iter().copied());
        let code = run(argv, &mut stdin, &mut o, &mut e);
        (code, String::from_utf8_lossy(&o).into_owned(), String::from_utf8_lossy(&e).into_owned())
    }

    #[test]
    fn encode_single_block() {
        let (code, out, _) = run_str(&["encode", "--m", "6", "--x", "1", "--variant", "cloco"], b"1110");
        assert_eq!(code, 0);
        assert_eq!(out, "100011\n#pad=0\n");
    }

    #[test]
    fn decode_inverts_encode() {
        let (_, stream, _) = run_str(&["encode", "--m", "6", "--x", "1"], b"111000001");
        assert!(stream.ends_with("#pad=3\n"));
        let (code, out, _) = run_str(&["decode", "--m", "6", "--x", "1"], stream.as_bytes());
        assert_eq!((code, out.as_str()), (0, "111000001\n"));
    }

    #[test]
    fn decode_rejects_violations() {
        let (code, _, err) = run_str(&["decode", "--m", "6", "--x", "1"], b"010011\n#pad=0\n");
        assert_eq!(code, 2);
        assert!(err.contains("010"), "{err}");
    }

    #[test]
    fn rates_row() {
        let (code, out, _) = run_str(&["rates", "--m", "18", "--x", "1", "--variant", "cloco"], b"");
        assert_eq!(code, 0);
        assert!(out.lines().any(|l| l == "18,1,cloco,13,0.6842,13"), "{out}");
    }

    #[test]
    fn usage_errors_exit_1() {
        assert_eq!(run_str(&["encode", "--m", "6"], b"").0, 1);
        assert_eq!(run_str(&["bogus"], b"").0, 1);
        assert_eq!(run_str(&["encode", "--m", "6", "--x", "2", "--bridging", "2"], b"").0, 1);
        assert_eq!(run_str(&["encode", "--m", "6", "--x", "1", "--bridging", "3"], b"").0, 1);
        assert_eq!(run_str(&["rates", "--m", "9..3"], b"").0, 1);
        assert_eq!(run_str(&["--help"], b"").0, 0);
    }

    #[test]
    fn bad_message_text_is_data_error() {
        assert_eq!(run_str(&["encode", "--m", "6", "--x", "1"], b"10a1").0, 2);
    }

    #[test]
    fn list_parsing() {
        assert_eq!(parse_list("3..5,9", "m").ok(), Some(vec![3, 4, 5, 9]));
        assert_eq!(parse_list("3..=4", "m").ok(), Some(vec![3, 4]));
        assert!(parse_list("a", "m").is_err());
    }

    #[test]
    fn packed_bits_round_trip() {
        let bytes = [0x00, 0xff, 0xa5, 0x3c];
        assert_eq!(bytes_from_bits(&bits_from_bytes(&bytes)).ok(), Some(bytes.to_vec()));
        assert!(bytes_from_bits(&[true; 7]).is_err());
    }
}
