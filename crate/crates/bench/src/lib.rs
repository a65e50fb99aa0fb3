//! Shared inputs for the criterion benches.

use invavoid_core::{prefix, Letter, WordKind};

/// Prefix lengths used by the scan benches.
pub const SCAN_LENGTHS: [usize; 3] = [1_000, 4_000, 10_000];

pub fn word(kind: &WordKind, len: usize) -> Vec<Letter> {
    prefix(kind, len)
}

/// `(0001)^ω`.
pub fn periodic_0001() -> WordKind {
    WordKind::Periodic(vec![0, 0, 0, 1])
}
