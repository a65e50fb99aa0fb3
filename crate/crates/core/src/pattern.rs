//! Unary patterns with involution: words over the two symbols `x` and `g(x)`.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::involution::InvolutionKind;

/// A pattern symbol. `X < GX` in every ordering used by this crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    X,
    GX,
}

impl Symbol {
    pub fn swapped(self) -> Symbol {
        match self {
            Symbol::X => Symbol::GX,
            Symbol::GX => Symbol::X,
        }
    }
}

/// A nonempty word over `{x, g(x)}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pattern(Vec<Symbol>);

impl Pattern {
    pub fn new(symbols: Vec<Symbol>) -> Result<Self> {
        if symbols.is_empty() {
            Err(Error::EmptyPattern)
        } else {
            Ok(Pattern(symbols))
        }
    }

    /// Parses `x` (either case) as `x`, and `G` or `g(x)` as `g(x)`.
    /// Whitespace between tokens is ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let chars: Vec<char> = text.chars().collect();
        let mut symbols = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            match chars[i] {
                c if c.is_whitespace() => i += 1,
                'x' | 'X' => {
                    symbols.push(Symbol::X);
                    i += 1;
                }
                'g' | 'G' => {
                    let long_form = chars.len() >= i + 4
                        && chars[i + 1] == '('
                        && matches!(chars[i + 2], 'x' | 'X')
                        && chars[i + 3] == ')';
                    symbols.push(Symbol::GX);
                    i += if long_form { 4 } else { 1 };
                }
                c => {
                    return Err(Error::UnrecognizedToken {
                        position: i,
                        found: c.to_string(),
                    })
                }
            }
        }
        Pattern::new(symbols)
    }

    /// Every pattern of the given length, in lexicographic order.
    pub fn all_of_length(len: usize) -> Vec<Pattern> {
        assert!((1..32).contains(&len));
        (0u32..1 << len)
            .map(|bits| {
                Pattern(
                    (0..len)
                        .map(|i| {
                            if bits >> (len - 1 - i) & 1 == 1 {
                                Symbol::GX
                            } else {
                                Symbol::X
                            }
                        })
                        .collect(),
                )
            })
            .collect()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; patterns are nonempty.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn count_x(&self) -> usize {
        self.0.iter().filter(|&&s| s == Symbol::X).count()
    }

    pub fn count_gx(&self) -> usize {
        self.len() - self.count_x()
    }

    /// True when both `x` and `g(x)` occur.
    pub fn is_mixed(&self) -> bool {
        self.count_x() > 0 && self.count_gx() > 0
    }

    /// Exchanges `x` and `g(x)`.
    pub fn swap_symbols(&self) -> Pattern {
        Pattern(self.0.iter().map(|s| s.swapped()).collect())
    }

    pub fn reverse(&self) -> Pattern {
        Pattern(self.0.iter().rev().copied().collect())
    }

    /// Least member of the orbit under swapping and reversal.
    pub fn canonical(&self) -> Pattern {
        let reversed = self.reverse();
        [
            self.swap_symbols(),
            reversed.swap_symbols(),
            reversed,
            self.clone(),
        ]
        .into_iter()
        .min()
        .unwrap()
    }

    /// True when `needle` occurs as a contiguous run of symbols.
    pub fn contains(&self, needle: &Pattern) -> bool {
        self.0.windows(needle.len()).any(|w| w == needle.symbols())
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|s| match s {
            Symbol::X => f.write_str("x"),
            Symbol::GX => f.write_str("g(x)"),
        })
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Pattern::parse(s)
    }
}

impl Serialize for Pattern {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Size of the least alphabet over which the pattern is avoidable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AvoidanceIndex {
    Finite(u32),
    Infinite,
}

impl fmt::Display for AvoidanceIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AvoidanceIndex::Finite(n) => write!(f, "{n}"),
            AvoidanceIndex::Infinite => f.write_str("inf"),
        }
    }
}

/// Integer for finite indices, the string `"inf"` otherwise.
impl Serialize for AvoidanceIndex {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            AvoidanceIndex::Finite(n) => serializer.serialize_u32(*n),
            AvoidanceIndex::Infinite => serializer.serialize_str("inf"),
        }
    }
}

/// Avoidance index of a unary pattern with involution.
///
/// Patterns using a single symbol are powers `x^n` and get the classical
/// values: `x` is unavoidable, squares need three letters, higher powers two.
/// Mixed patterns of length 2 are unavoidable, those of length 3 need three
/// letters and every longer one is avoidable over two. Morphic and
/// antimorphic indices coincide.
pub fn classify_index(pattern: &Pattern, _kind: InvolutionKind) -> AvoidanceIndex {
    let len = pattern.len();
    if !pattern.is_mixed() {
        return match len {
            1 => AvoidanceIndex::Infinite,
            2 => AvoidanceIndex::Finite(3),
            _ => AvoidanceIndex::Finite(2),
        };
    }
    match len {
        2 => AvoidanceIndex::Infinite,
        3 => AvoidanceIndex::Finite(3),
        _ => AvoidanceIndex::Finite(2),
    }
}
