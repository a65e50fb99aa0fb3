//! Exhaustive depth-first search for words avoiding a pattern.
//!
//! Words are grown one letter at a time and a branch is cut as soon as its
//! newest suffix completes an instance. Since every ancestor avoided the
//! pattern, only occurrences ending at the last letter need checking. A
//! finite exhausted tree certifies that the pattern is unavoidable over the
//! alphabet.

use std::fmt;

use serde::Serialize;

use crate::detector::Detector;
use crate::involution::{Alphabet, InvolutionKind};
use crate::pattern::Pattern;
use crate::words::Letter;

/// Default depth cap for searches.
pub const DEFAULT_MAX_LEN: usize = 200;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    /// Every word longer than `longest_avoider_len` contains an instance.
    Unavoidable { longest_avoider_len: usize },
    /// An avoiding word of the full requested length.
    AvoiderFound { witness: Vec<Letter> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub outcome: Outcome,
    /// Avoiding words visited, the empty word included.
    pub nodes_explored: u64,
    /// Avoiding words with no avoiding one-letter extension.
    pub leaf_count: u64,
    /// Lexicographically least avoider of maximal length.
    pub longest_example: Vec<Letter>,
}

impl Verdict {
    pub fn is_unavoidable(&self) -> bool {
        matches!(self.outcome, Outcome::Unavoidable { .. })
    }

    pub fn longest(&self) -> LongestAvoider {
        match &self.outcome {
            Outcome::Unavoidable { longest_avoider_len } => LongestAvoider::Exactly(*longest_avoider_len),
            Outcome::AvoiderFound { witness } => LongestAvoider::AtLeast(witness.len()),
        }
    }
}

/// Length of the longest avoider, or a lower bound when the search hit its
/// depth cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LongestAvoider {
    Exactly(usize),
    AtLeast(usize),
}

impl fmt::Display for LongestAvoider {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LongestAvoider::Exactly(n) => write!(f, "{n}"),
            LongestAvoider::AtLeast(n) => write!(f, ">={n}"),
        }
    }
}

impl Serialize for LongestAvoider {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            LongestAvoider::Exactly(n) => serializer.serialize_u64(*n as u64),
            LongestAvoider::AtLeast(_) => serializer.collect_str(self),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Only visit words where letter `j > 0` first appears after letter
    /// `j - 1`. Avoidance is invariant under renaming letters, so this
    /// loses nothing.
    pub canonical_labels: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            canonical_labels: true,
        }
    }
}

pub fn prove_unavoidable(pattern: &Pattern, alphabet: Alphabet, kind: InvolutionKind, max_len: usize) -> Verdict {
    prove_unavoidable_with(pattern, alphabet, kind, max_len, SearchOptions::default())
}

pub fn prove_unavoidable_with(
    pattern: &Pattern,
    alphabet: Alphabet,
    kind: InvolutionKind,
    max_len: usize,
    options: SearchOptions,
) -> Verdict {
    let detector = Detector::new(pattern, alphabet, kind);
    let k = alphabet.size();

    let mut verdict = Verdict {
        outcome: Outcome::Unavoidable { longest_avoider_len: 0 },
        nodes_explored: 1,
        leaf_count: 0,
        longest_example: Vec::new(),
    };
    if max_len == 0 {
        verdict.outcome = Outcome::AvoiderFound { witness: Vec::new() };
        return verdict;
    }

    let mut word: Vec<Letter> = Vec::with_capacity(max_len);
    // Per depth: next letter to try, letters introduced so far, and whether
    // some extension avoided the pattern.
    let mut next: Vec<usize> = vec![0];
    let mut introduced: Vec<usize> = vec![0];
    let mut extended: Vec<bool> = vec![false];

    loop {
        let depth = word.len();
        let limit = if options.canonical_labels {
            (introduced[depth] + 1).min(k)
        } else {
            k
        };
        let letter = next[depth];
        if letter < limit {
            next[depth] += 1;
            word.push(letter as Letter);
            if detector.suffix_instance(&word).is_some() {
                word.pop();
                continue;
            }
            extended[depth] = true;
            verdict.nodes_explored += 1;
            if word.len() > verdict.longest_example.len() {
                verdict.longest_example = word.clone();
            }
            if word.len() == max_len {
                verdict.outcome = Outcome::AvoiderFound { witness: word };
                return verdict;
            }
            next.push(0);
            introduced.push(introduced[depth].max(letter + 1));
            extended.push(false);
        } else {
            if !extended[depth] {
                verdict.leaf_count += 1;
            }
            if depth == 0 {
                break;
            }
            word.pop();
            next.pop();
            introduced.pop();
            extended.pop();
        }
    }
    verdict.outcome = Outcome::Unavoidable {
        longest_avoider_len: verdict.longest_example.len(),
    };
    verdict
}

pub fn longest_avoiding(pattern: &Pattern, alphabet: Alphabet, kind: InvolutionKind, max_len: usize) -> LongestAvoider {
    prove_unavoidable(pattern, alphabet, kind, max_len).longest()
}
