//! Lexicographically-ordered constrained (LOCO) codes for self-clocked
//! signalling.
//!
//! Codewords of length `m` avoid every pattern `0 1^y 0` and `1 0^y 1` with
//! `1 <= y <= x`, so each interior run is longer than `x`. Codewords are
//! ranked and unranked by arithmetic on a table of codebook cardinalities,
//! and consecutive codewords are joined by short bridges that keep the
//! constraint across boundaries.

pub mod analysis;
pub mod balanced;
pub mod cardinality;
pub mod cli;
pub mod codec;
pub mod codeword;
pub mod error;
pub mod oracle;
pub mod stream;

pub use analysis::{capacity, overall_rate, rate, rate_table, OverallRate, RateReport, Variant};
pub use balanced::{
    balanced_pair, bloco_index_of, cb_decode_block, cb_encode_block, cb_message_length, disparity,
    select_codeword, BalancedPair, CbDecoder, CbEncoder, DisparityState,
};
pub use cardinality::{CardinalityTable, CodeParams, GroupCardinalities, IndexShifts};
pub use codec::{codeword_of, decode_block, encode_block, index_of, message_length, ClocoCodec, MessageBlock};
pub use codeword::Codeword;
pub use error::{LocoError, Result};
pub use stream::{assemble, bridge, BridgingMethod, LineSymbol, SymbolStream};
