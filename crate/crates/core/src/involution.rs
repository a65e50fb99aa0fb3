//! Morphic and antimorphic involutions of `{0, .., k-1}*`.
//!
//! An involution is a self-inverse letter permutation. Applied morphically it
//! maps a word letter by letter; applied antimorphically it maps letter by
//! letter and then reverses the result. Over two letters the antimorphic ones
//! are exactly reversal and reverse complement.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::words::Letter;

/// Largest supported alphabet; letters are stored as `u8`.
pub const MAX_ALPHABET: usize = 256;

/// The alphabet `{0, .., size-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Alphabet(usize);

impl Alphabet {
    pub const BINARY: Alphabet = Alphabet(2);

    pub fn new(size: usize) -> Result<Self> {
        if (1..=MAX_ALPHABET).contains(&size) {
            Ok(Alphabet(size))
        } else {
            Err(Error::InvalidAlphabet {
                got: size,
                max: MAX_ALPHABET,
            })
        }
    }

    pub fn size(self) -> usize {
        self.0
    }

    /// Checks that every letter of `word` belongs to the alphabet.
    pub fn check(self, word: &[Letter]) -> Result<()> {
        match word.iter().position(|&a| a as usize >= self.0) {
            None => Ok(()),
            Some(position) => Err(Error::LetterOutOfRange {
                letter: word[position].into(),
                position,
                size: self.0,
            }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum InvolutionKind {
    #[serde(rename = "m")]
    Morphic,
    #[serde(rename = "a")]
    Antimorphic,
}

impl InvolutionKind {
    pub const BOTH: [InvolutionKind; 2] = [InvolutionKind::Morphic, InvolutionKind::Antimorphic];

    /// One-letter code used on the command line and in reports.
    pub fn code(self) -> &'static str {
        match self {
            InvolutionKind::Morphic => "m",
            InvolutionKind::Antimorphic => "a",
        }
    }
}

impl fmt::Display for InvolutionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for InvolutionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "m" | "morphic" => Ok(InvolutionKind::Morphic),
            "a" | "antimorphic" => Ok(InvolutionKind::Antimorphic),
            _ => Err(Error::InvalidInvolution {
                text: s.to_string(),
                reason: "kind must be m or a".into(),
            }),
        }
    }
}

/// A self-inverse permutation of an alphabet together with the way it acts
/// on words.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Involution {
    mapping: Vec<Letter>,
    kind: InvolutionKind,
}

impl Involution {
    /// Builds an involution from its permutation table, checking that the
    /// table is a bijection that is its own inverse.
    pub fn new(mapping: Vec<Letter>, kind: InvolutionKind) -> Result<Self> {
        let invalid = |reason: &str| Error::InvalidInvolution {
            text: format!("{mapping:?}"),
            reason: reason.into(),
        };
        Alphabet::new(mapping.len())?;
        if mapping.iter().any(|&a| a as usize >= mapping.len()) {
            return Err(invalid("image outside the alphabet"));
        }
        if mapping
            .iter()
            .enumerate()
            .any(|(a, &b)| mapping[b as usize] as usize != a)
        {
            return Err(invalid("not self-inverse"));
        }
        Ok(Involution { mapping, kind })
    }

    pub fn identity(alphabet: Alphabet, kind: InvolutionKind) -> Self {
        Involution {
            mapping: (0..alphabet.size()).map(|a| a as Letter).collect(),
            kind,
        }
    }

    pub fn mapping(&self) -> &[Letter] {
        &self.mapping
    }

    pub fn kind(&self) -> InvolutionKind {
        self.kind
    }

    pub fn alphabet(&self) -> Alphabet {
        Alphabet(self.mapping.len())
    }

    pub fn is_identity(&self) -> bool {
        self.mapping.iter().enumerate().all(|(a, &b)| a == b as usize)
    }

    /// Image of a single letter under the underlying permutation.
    #[inline]
    pub fn image(&self, letter: Letter) -> Letter {
        self.mapping[letter as usize]
    }

    /// Image of `word`; antimorphic involutions also reverse it.
    pub fn apply(&self, word: &[Letter]) -> Result<Vec<Letter>> {
        self.alphabet().check(word)?;
        let mut out = Vec::with_capacity(word.len());
        self.apply_into(word, &mut out);
        Ok(out)
    }

    /// Appends the image of `word` to `out`. Letters must be in range.
    pub(crate) fn apply_into(&self, word: &[Letter], out: &mut Vec<Letter>) {
        match self.kind {
            InvolutionKind::Morphic => out.extend(word.iter().map(|&a| self.image(a))),
            InvolutionKind::Antimorphic => out.extend(word.iter().rev().map(|&a| self.image(a))),
        }
    }

    /// The conjugate `σ ∘ g ∘ σ⁻¹` for a letter permutation `σ`, i.e. the
    /// involution that plays the role of `self` after renaming each letter
    /// `a` to `sigma[a]`.
    pub fn relabeled(&self, sigma: &[Letter]) -> Involution {
        assert_eq!(sigma.len(), self.mapping.len(), "relabeling must cover the alphabet");
        let mut mapping = vec![0; self.mapping.len()];
        for (a, &b) in self.mapping.iter().enumerate() {
            mapping[sigma[a] as usize] = sigma[b as usize];
        }
        Involution {
            mapping,
            kind: self.kind,
        }
    }

    /// Parses the cycle notation produced by `Display`: `id`, `(01)`,
    /// `(01)(23)`, or `(0,11)` for large alphabets, optionally followed by
    /// `/m` or `/a`. Without a suffix the given `kind` is used.
    pub fn parse(text: &str, alphabet: Alphabet, kind: InvolutionKind) -> Result<Self> {
        let invalid = |reason: String| Error::InvalidInvolution {
            text: text.to_string(),
            reason,
        };
        let trimmed = text.trim();
        let (body, kind) = match trimmed.rsplit_once('/') {
            Some((body, suffix)) => (body, suffix.parse()?),
            None => (trimmed, kind),
        };
        let mut mapping: Vec<Letter> = (0..alphabet.size()).map(|a| a as Letter).collect();
        if body == "id" {
            return Ok(Involution { mapping, kind });
        }
        let mut rest = body;
        if rest.is_empty() {
            return Err(invalid("empty".into()));
        }
        while !rest.is_empty() {
            let inner = rest
                .strip_prefix('(')
                .and_then(|r| r.split_once(')'))
                .ok_or_else(|| invalid("expected a cycle like (01)".into()))?;
            let (cycle, tail) = inner;
            rest = tail;
            let letters: Vec<usize> = if cycle.contains(',') {
                cycle
                    .split(',')
                    .map(|t| t.trim().parse::<usize>().map_err(|_| invalid(format!("bad letter {t:?}"))))
                    .collect::<Result<_>>()?
            } else {
                cycle
                    .chars()
                    .map(|c| {
                        c.to_digit(10)
                            .map(|d| d as usize)
                            .ok_or_else(|| invalid(format!("bad letter {c:?}")))
                    })
                    .collect::<Result<_>>()?
            };
            match letters[..] {
                [a] if a < alphabet.size() => {}
                [a, b] if a < alphabet.size() && b < alphabet.size() && a != b => {
                    if mapping[a] as usize != a || mapping[b] as usize != b {
                        return Err(invalid(format!("letter repeated in ({a}{b})")));
                    }
                    mapping[a] = b as Letter;
                    mapping[b] = a as Letter;
                }
                _ => return Err(invalid(format!("({cycle}) is not a transposition of the alphabet"))),
            }
        }
        Ok(Involution { mapping, kind })
    }
}

impl fmt::Display for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            f.write_str("id")?;
        } else {
            let wide = self.mapping.len() > 10;
            for (a, &b) in self.mapping.iter().enumerate() {
                if a < b as usize {
                    if wide {
                        write!(f, "({a},{b})")?;
                    } else {
                        write!(f, "({a}{b})")?;
                    }
                }
            }
        }
        write!(f, "/{}", self.kind)
    }
}

/// Every involution of the alphabet, identity included, in lexicographic
/// order of the permutation tables.
pub fn enumerate_involutions(alphabet: Alphabet, kind: InvolutionKind) -> Vec<Involution> {
    fn extend(
        mapping: &mut [Option<Letter>],
        position: usize,
        kind: InvolutionKind,
        out: &mut Vec<Involution>,
    ) {
        let Some(first_free) = (position..mapping.len()).find(|&i| mapping[i].is_none()) else {
            out.push(Involution {
                mapping: mapping.iter().map(|a| a.unwrap()).collect(),
                kind,
            });
            return;
        };
        // Candidates for the image of `first_free`, smallest first: itself,
        // then every larger free letter.
        for partner in first_free..mapping.len() {
            if mapping[partner].is_some() {
                continue;
            }
            mapping[first_free] = Some(partner as Letter);
            mapping[partner] = Some(first_free as Letter);
            extend(mapping, first_free + 1, kind, out);
            mapping[partner] = None;
            mapping[first_free] = None;
        }
    }

    let mut out = Vec::new();
    let mut mapping = vec![None; alphabet.size()];
    extend(&mut mapping, 0, kind, &mut out);
    out
}
