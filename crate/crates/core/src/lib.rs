//! Avoidance of unary patterns with involution.
//!
//! A unary pattern with involution is a word over `{x, g(x)}`. A word over a
//! finite alphabet contains a morphic (antimorphic) instance of the pattern
//! when some factor is obtained by substituting a nonempty `y` for `x` and
//! `g(y)` for `g(x)`, where `g` is a morphic (antimorphic) involution of the
//! alphabet. This crate provides:
//!
//! - [`words`]: the Thue-Morse word and binary words built from it,
//! - [`involution`]: enumeration and application of involutions,
//! - [`pattern`]: patterns, their symmetries and the avoidance-index table,
//! - [`detector`]: instance and overlap detection in finite words,
//! - [`search`]: exhaustive unavoidability search,
//! - [`verify`]: the full battery of checks behind the index table.

pub mod detector;
pub mod error;
mod hash;
pub mod involution;
pub mod pattern;
pub mod search;
pub mod verify;
pub mod words;

pub use detector::{avoids, expand, find_instance, find_overlap, Detector, Occurrence, Overlap};
pub use error::{Error, Result};
pub use involution::{enumerate_involutions, Alphabet, Involution, InvolutionKind};
pub use pattern::{classify_index, AvoidanceIndex, Pattern, Symbol};
pub use search::{
    longest_avoiding, prove_unavoidable, prove_unavoidable_with, LongestAvoider, Outcome, SearchOptions, Verdict,
};
pub use verify::{run_verify_lemmas, CheckRecord, CheckStatus, VerificationReport, VerifyConfig};
pub use words::{format_word, parse_word, prefix, tm_bit, Letter, WordKind, WordStream};
