//! Prefixes of the Thue-Morse word `t` and of the binary words built from it.
//!
//! Every derived word is a concatenation of blocks, block `j` being chosen
//! by the Thue-Morse letter `t_j`:
//!
//! | kind | block `j`                |
//! |------|--------------------------|
//! | `w`  | `0 0 1^(t_j + 2)`        |
//! | `v`  | `0 1^(2 t_j + 1)`        |
//! | `u`  | `0 1^(t_j + 2)`          |
//!
//! plus the purely periodic words `base^ω`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A letter of a finite alphabet `{0, .., k-1}`.
pub type Letter = u8;

/// The `i`-th letter of the Thue-Morse word: the parity of the number of
/// one bits in `i`.
#[inline]
pub fn tm_bit(i: u64) -> Letter {
    (i.count_ones() & 1) as Letter
}

/// Thue-Morse prefix of length `n` obtained by iterating `0 -> 01, 1 -> 10`
/// from `0`. Slower than [`tm_bit`]; kept as an independent generator.
pub fn thue_morse_by_morphism(n: usize) -> Vec<Letter> {
    let mut word = vec![0];
    while word.len() < n {
        word = word.iter().flat_map(|&a| [a, 1 - a]).collect();
    }
    word.truncate(n);
    word
}

/// One of the infinite words this crate can generate.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum WordKind {
    ThueMorse,
    W,
    V,
    U,
    /// `base^ω` for a nonempty binary `base`.
    Periodic(Vec<Letter>),
}

impl WordKind {
    pub fn periodic(base: &[Letter]) -> Result<Self> {
        if base.is_empty() {
            return Err(Error::InvalidWordKind("periodic:".into()));
        }
        if let Some((position, &letter)) = base.iter().enumerate().find(|(_, &a)| a > 1) {
            return Err(Error::LetterOutOfRange {
                letter: letter.into(),
                position,
                size: 2,
            });
        }
        Ok(WordKind::Periodic(base.to_vec()))
    }
}

impl fmt::Display for WordKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordKind::ThueMorse => f.write_str("tm"),
            WordKind::W => f.write_str("w"),
            WordKind::V => f.write_str("v"),
            WordKind::U => f.write_str("u"),
            WordKind::Periodic(base) => {
                f.write_str("periodic:")?;
                base.iter().try_for_each(|a| write!(f, "{a}"))
            }
        }
    }
}

impl FromStr for WordKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "tm" | "t" => Ok(WordKind::ThueMorse),
            "w" => Ok(WordKind::W),
            "v" => Ok(WordKind::V),
            "u" => Ok(WordKind::U),
            other => {
                let base = other
                    .strip_prefix("periodic:")
                    .ok_or_else(|| Error::InvalidWordKind(s.to_string()))?;
                let base = base
                    .chars()
                    .map(|c| match c {
                        '0' => Ok(0),
                        '1' => Ok(1),
                        _ => Err(Error::InvalidWordKind(s.to_string())),
                    })
                    .collect::<Result<Vec<_>>>()?;
                WordKind::periodic(&base)
            }
        }
    }
}

/// A lazily grown prefix of one of the words of [`WordKind`].
///
/// Letters are produced one whole block at a time; a longer request extends
/// the memoized letters, so earlier prefixes are never rewritten.
#[derive(Debug, Clone)]
pub struct WordStream {
    kind: WordKind,
    letters: Vec<Letter>,
    next_block: u64,
}

impl WordStream {
    pub fn new(kind: WordKind) -> Self {
        WordStream {
            kind,
            letters: Vec::new(),
            next_block: 0,
        }
    }

    pub fn kind(&self) -> &WordKind {
        &self.kind
    }

    /// The first `n` letters of the word.
    pub fn prefix(&mut self, n: usize) -> &[Letter] {
        while self.letters.len() < n {
            self.push_block();
        }
        &self.letters[..n]
    }

    fn push_block(&mut self) {
        let t = tm_bit(self.next_block) as usize;
        self.next_block += 1;
        let ones = |letters: &mut Vec<Letter>, count: usize| {
            letters.extend(std::iter::repeat_n(1, count));
        };
        match &self.kind {
            WordKind::ThueMorse => self.letters.push(t as Letter),
            WordKind::W => {
                self.letters.extend([0, 0]);
                ones(&mut self.letters, t + 2);
            }
            WordKind::V => {
                self.letters.push(0);
                ones(&mut self.letters, 2 * t + 1);
            }
            WordKind::U => {
                self.letters.push(0);
                ones(&mut self.letters, t + 2);
            }
            WordKind::Periodic(base) => self.letters.extend_from_slice(base),
        }
    }
}

/// Length-`n` prefix of the word of the given kind.
pub fn prefix(kind: &WordKind, n: usize) -> Vec<Letter> {
    WordStream::new(kind.clone()).prefix(n).to_vec()
}

/// Parses a word written as digits (`"0120"`) or, for alphabets larger than
/// ten letters, as comma-separated integers (`"0,11,3"`). Whitespace is
/// ignored. Every letter must be below `alphabet_size`.
pub fn parse_word(text: &str, alphabet_size: usize) -> Result<Vec<Letter>> {
    let text: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let letters: Vec<u32> = if text.contains(',') {
        text.split(',')
            .enumerate()
            .map(|(position, token)| {
                token.parse::<u32>().map_err(|_| Error::InvalidWord {
                    position,
                    reason: format!("{token:?} is not a letter"),
                })
            })
            .collect::<Result<_>>()?
    } else {
        text.chars()
            .enumerate()
            .map(|(position, c)| {
                c.to_digit(10).ok_or_else(|| Error::InvalidWord {
                    position,
                    reason: format!("{c:?} is not a digit"),
                })
            })
            .collect::<Result<_>>()?
    };
    letters
        .into_iter()
        .enumerate()
        .map(|(position, letter)| {
            if (letter as usize) < alphabet_size {
                Ok(letter as Letter)
            } else {
                Err(Error::LetterOutOfRange {
                    letter,
                    position,
                    size: alphabet_size,
                })
            }
        })
        .collect()
}

/// Inverse of [`parse_word`]: plain digits for alphabets of at most ten
/// letters, comma-separated otherwise.
pub fn format_word(word: &[Letter], alphabet_size: usize) -> String {
    if alphabet_size <= 10 {
        word.iter().map(|&a| char::from(b'0' + a)).collect()
    } else {
        word.iter()
            .map(|a| a.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn text(word: &[Letter]) -> String {
        format_word(word, 2)
    }

    fn contains_factor(word: &[Letter], factor: &[Letter]) -> bool {
        word.windows(factor.len()).any(|w| w == factor)
    }

    #[test]
    fn tm_first_letters() {
        assert_eq!(tm_bit(0), 0);
        let first: Vec<_> = (0..8).map(tm_bit).collect();
        assert_eq!(first, [0, 1, 1, 0, 1, 0, 0, 1]);
        assert_eq!(tm_bit(10), tm_bit(5));
        assert_eq!(tm_bit(10), 0);
        assert_eq!(tm_bit(11), 1);
    }

    #[test]
    fn tm_bit_matches_morphism_iteration() {
        let iterated = thue_morse_by_morphism(1 << 12);
        for (i, &a) in iterated.iter().enumerate() {
            assert_eq!(tm_bit(i as u64), a, "index {i}");
        }
    }

    #[test]
    fn tm_recurrences() {
        for i in 0..(1u64 << 14) {
            assert_eq!(tm_bit(2 * i), tm_bit(i));
            assert_eq!(tm_bit(2 * i + 1), 1 - tm_bit(i));
        }
    }

    #[test]
    fn derived_word_prefixes() {
        assert_eq!(text(&prefix(&WordKind::W, 18)), "001100111001110011");
        assert_eq!(text(&prefix(&WordKind::V, 12)), "010111011101");
        assert_eq!(text(&prefix(&WordKind::U, 13)), "0110111011101");
        let periodic = WordKind::periodic(&[0, 0, 0, 1]).unwrap();
        assert_eq!(text(&prefix(&periodic, 9)), "000100010");
        assert_eq!(text(&prefix(&WordKind::ThueMorse, 8)), "01101001");
        assert!(prefix(&WordKind::W, 0).is_empty());
    }

    #[test]
    fn forbidden_factors() {
        let n = 20_000;
        let w = prefix(&WordKind::W, n);
        for f in [&[0, 0, 0][..], &[1, 1, 1, 1], &[0, 1, 0], &[1, 0, 1]] {
            assert!(!contains_factor(&w, f), "w contains {f:?}");
        }
        let v = prefix(&WordKind::V, n);
        for f in [&[0, 0][..], &[1, 1, 1, 1], &[0, 1, 1, 0]] {
            assert!(!contains_factor(&v, f), "v contains {f:?}");
        }
        let u = prefix(&WordKind::U, n);
        for f in [&[0, 0][..], &[1, 1, 1, 1], &[0, 1, 0]] {
            assert!(!contains_factor(&u, f), "u contains {f:?}");
        }
    }

    #[test]
    fn stream_is_prefix_consistent() {
        for kind in [WordKind::ThueMorse, WordKind::W, WordKind::V, WordKind::U] {
            let mut stream = WordStream::new(kind.clone());
            let short = stream.prefix(37).to_vec();
            let long = stream.prefix(1000).to_vec();
            assert_eq!(&long[..37], &short[..]);
            assert_eq!(long, prefix(&kind, 1000));
            assert!(long.iter().all(|&a| a <= 1));
        }
    }

    #[test]
    fn kind_names() {
        for name in ["tm", "w", "v", "u", "periodic:0001"] {
            let kind: WordKind = name.parse().unwrap();
            assert_eq!(kind.to_string(), name);
        }
        assert!("periodic:".parse::<WordKind>().is_err());
        assert!("periodic:012".parse::<WordKind>().is_err());
        assert!("x".parse::<WordKind>().is_err());
    }

    #[test]
    fn word_text() {
        assert_eq!(parse_word("0 1 2", 3).unwrap(), [0, 1, 2]);
        assert_eq!(parse_word("0,11,3", 12).unwrap(), [0, 11, 3]);
        assert_eq!(format_word(&[0, 11, 3], 12), "0,11,3");
        assert!(matches!(
            parse_word("012", 2),
            Err(Error::LetterOutOfRange { position: 2, .. })
        ));
        assert!(matches!(
            parse_word("0a", 2),
            Err(Error::InvalidWord { position: 1, .. })
        ));
        assert!(parse_word("", 2).unwrap().is_empty());
    }
}
