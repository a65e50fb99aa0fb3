//! Detection of morphic and antimorphic instances of a pattern, and of
//! overlaps.
//!
//! A factor of length `|p|·m` starting at `start` is an instance of `p` when
//! its `|p|` consecutive blocks of length `m` read `y` at every `x` and `g(y)`
//! at every `g(x)`, for some nonempty `y` and some involution `g` of the
//! declared alphabet. Since `g` is self-inverse, `y` can always be read back
//! from the first block.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hash::WordHasher;
use crate::involution::{enumerate_involutions, Alphabet, Involution, InvolutionKind};
use crate::pattern::{Pattern, Symbol};
use crate::words::Letter;

/// Witness that `word[start .. start + |pattern|·block_len]` is an instance
/// of `pattern` under `involution`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Occurrence {
    pub start: usize,
    pub block_len: usize,
    pub involution: Involution,
    pub pattern: Pattern,
}

impl Occurrence {
    pub fn len(&self) -> usize {
        self.pattern.len() * self.block_len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn end(&self) -> usize {
        self.start + self.len()
    }

    pub fn factor<'w>(&self, word: &'w [Letter]) -> &'w [Letter] {
        &word[self.start..self.end()]
    }

    /// The word substituted for `x`.
    pub fn substituted(&self, word: &[Letter]) -> Vec<Letter> {
        let first = &word[self.start..self.start + self.block_len];
        match self.pattern.symbols()[0] {
            Symbol::X => first.to_vec(),
            Symbol::GX => {
                let mut y = Vec::with_capacity(first.len());
                self.involution.apply_into(first, &mut y);
                y
            }
        }
    }
}

/// A factor `a·z·a·z·a` (single letter `a`, possibly empty `z`) of length
/// `2·period + 1` starting at `start`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Overlap {
    pub start: usize,
    pub period: usize,
}

/// Substitutes `y` for `x` and `g(y)` for `g(x)`.
pub fn expand(pattern: &Pattern, y: &[Letter], involution: &Involution) -> Result<Vec<Letter>> {
    if y.is_empty() {
        return Err(Error::EmptyWord);
    }
    involution.alphabet().check(y)?;
    let mut image = Vec::with_capacity(y.len());
    involution.apply_into(y, &mut image);
    let mut out = Vec::with_capacity(pattern.len() * y.len());
    for symbol in pattern.symbols() {
        match symbol {
            Symbol::X => out.extend_from_slice(y),
            Symbol::GX => out.extend_from_slice(&image),
        }
    }
    Ok(out)
}

/// Scanner for instances of one pattern, over one alphabet, for one kind of
/// involution.
#[derive(Debug, Clone)]
pub struct Detector {
    pattern: Pattern,
    alphabet: Alphabet,
    involutions: Vec<Involution>,
    /// Block indices (excluding 0) holding the same symbol as block 0.
    same: Vec<usize>,
    /// Block indices holding the other symbol.
    other: Vec<usize>,
}

impl Detector {
    pub fn new(pattern: &Pattern, alphabet: Alphabet, kind: InvolutionKind) -> Self {
        let lead = pattern.symbols()[0];
        let (same, other) = (1..pattern.len()).partition(|&i| pattern.symbols()[i] == lead);
        Detector {
            pattern: pattern.clone(),
            alphabet,
            involutions: enumerate_involutions(alphabet, kind),
            same,
            other,
        }
    }

    pub fn pattern(&self) -> &Pattern {
        &self.pattern
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn kind(&self) -> InvolutionKind {
        self.involutions[0].kind()
    }

    pub fn involutions(&self) -> &[Involution] {
        &self.involutions
    }

    fn occurrence(&self, start: usize, block_len: usize, involution: usize) -> Occurrence {
        Occurrence {
            start,
            block_len,
            involution: self.involutions[involution].clone(),
            pattern: self.pattern.clone(),
        }
    }

    /// Least occurrence in `(start, block_len, involution order)` order.
    pub fn find_instance(&self, word: &[Letter]) -> Result<Option<Occurrence>> {
        self.alphabet.check(word)?;
        let n = word.len();
        let p = self.pattern.len();
        if n < p {
            return Ok(None);
        }
        let hasher = WordHasher::new(word, self.alphabet.size());
        for start in 0..=n - p {
            for m in 1..=(n - start) / p {
                let first = hasher.factor(start, m);
                if !self
                    .same
                    .iter()
                    .all(|&i| hasher.factor(start + i * m, m) == first)
                {
                    continue;
                }
                for (index, g) in self.involutions.iter().enumerate() {
                    if !self.other.is_empty() {
                        let image = hasher.image(g, start, m);
                        if !self
                            .other
                            .iter()
                            .all(|&i| hasher.factor(start + i * m, m) == image)
                        {
                            continue;
                        }
                    }
                    // Hash equality is only a filter; confirm letter by letter.
                    if self.same_blocks_match(word, start, m) && self.other_blocks_match(word, start, m, g) {
                        return Ok(Some(self.occurrence(start, m, index)));
                    }
                }
            }
        }
        Ok(None)
    }

    pub fn avoids(&self, word: &[Letter]) -> Result<bool> {
        Ok(self.find_instance(word)?.is_none())
    }

    /// An occurrence ending exactly at the end of `word`, trying block
    /// lengths in increasing order. Letters are assumed to be in range.
    ///
    /// Used for incremental checks: if every proper prefix of `word` avoids
    /// the pattern, `word` avoids it iff this returns `None`.
    pub fn suffix_instance(&self, word: &[Letter]) -> Option<Occurrence> {
        let n = word.len();
        let p = self.pattern.len();
        for m in 1..=n / p {
            let start = n - p * m;
            if !self.same_blocks_match(word, start, m) {
                continue;
            }
            if let Some(index) = self
                .involutions
                .iter()
                .position(|g| self.other_blocks_match(word, start, m, g))
            {
                return Some(self.occurrence(start, m, index));
            }
        }
        None
    }

    fn same_blocks_match(&self, word: &[Letter], start: usize, m: usize) -> bool {
        let first = &word[start..start + m];
        self.same
            .iter()
            .all(|&i| &word[start + i * m..start + (i + 1) * m] == first)
    }

    fn other_blocks_match(&self, word: &[Letter], start: usize, m: usize, g: &Involution) -> bool {
        let first = &word[start..start + m];
        self.other.iter().all(|&i| {
            let block = &word[start + i * m..start + (i + 1) * m];
            match g.kind() {
                InvolutionKind::Morphic => block.iter().zip(first).all(|(&b, &a)| b == g.image(a)),
                InvolutionKind::Antimorphic => {
                    block.iter().zip(first.iter().rev()).all(|(&b, &a)| b == g.image(a))
                }
            }
        })
    }
}

/// Least occurrence of a `kind` instance of `pattern` in `word`, with
/// involutions ranging over the whole of `alphabet`.
pub fn find_instance(
    word: &[Letter],
    alphabet: Alphabet,
    pattern: &Pattern,
    kind: InvolutionKind,
) -> Result<Option<Occurrence>> {
    Detector::new(pattern, alphabet, kind).find_instance(word)
}

pub fn avoids(word: &[Letter], alphabet: Alphabet, pattern: &Pattern, kind: InvolutionKind) -> Result<bool> {
    Ok(find_instance(word, alphabet, pattern, kind)?.is_none())
}

/// Least `(start, period)` overlap in `word`.
pub fn find_overlap(word: &[Letter]) -> Option<Overlap> {
    let n = word.len();
    let mut best: Option<Overlap> = None;
    // For a fixed period q, an overlap starts at s iff word[i] == word[i + q]
    // for the q + 1 positions i = s..=s + q.
    for period in 1..=n.saturating_sub(1) / 2 {
        let limit = match best {
            // Later periods can only win with a strictly smaller start.
            Some(b) => (b.start + period).min(n - period),
            None => n - period,
        };
        let mut run = 0;
        for i in 0..limit {
            if word[i] == word[i + period] {
                run += 1;
                if run == period + 1 {
                    let start = i - period;
                    if best.is_none_or(|b| start < b.start) {
                        best = Some(Overlap { start, period });
                    }
                    break;
                }
            } else {
                run = 0;
            }
        }
        if best.is_some_and(|b| b.start == 0) {
            break;
        }
    }
    best
}
