//! Polynomial prefix hashes modulo the Mersenne prime 2^61 - 1.
//!
//! Besides the hash of the word itself, one indicator hash is kept per letter
//! (forward and reversed). The hash of `π(w)[l..r]` for any letter map `π` is
//! then `Σ_a (π(a) + 1) · ind_a(l, r)`, so images under every involution can
//! be compared in `O(k)` without materializing them.

use crate::involution::{Involution, InvolutionKind};
use crate::words::Letter;

const MOD: u64 = (1 << 61) - 1;
const BASE: u64 = 0x1f3a_94c7_2d6b_e581 % MOD;

#[inline]
fn mul(a: u64, b: u64) -> u64 {
    let t = a as u128 * b as u128;
    let t = ((t >> 61) as u64) + ((t as u64) & MOD);
    if t >= MOD {
        t - MOD
    } else {
        t
    }
}

#[inline]
fn add(a: u64, b: u64) -> u64 {
    let t = a + b;
    if t >= MOD {
        t - MOD
    } else {
        t
    }
}

fn prefix_hashes(values: impl Iterator<Item = u64>, len: usize) -> Vec<u64> {
    let mut h = Vec::with_capacity(len + 1);
    h.push(0);
    for v in values {
        let last = *h.last().unwrap();
        h.push(add(mul(last, BASE), v));
    }
    h
}

pub(crate) struct WordHasher {
    len: usize,
    pow: Vec<u64>,
    plain: Vec<u64>,
    /// `(letter, forward indicator, reversed indicator)` for letters present.
    letters: Vec<(Letter, Vec<u64>, Vec<u64>)>,
}

impl WordHasher {
    pub(crate) fn new(word: &[Letter], alphabet_size: usize) -> Self {
        let n = word.len();
        let mut pow = Vec::with_capacity(n + 1);
        pow.push(1);
        for i in 0..n {
            pow.push(mul(pow[i], BASE));
        }
        let plain = prefix_hashes(word.iter().map(|&a| a as u64 + 1), n);
        let mut present = vec![false; alphabet_size];
        for &a in word {
            present[a as usize] = true;
        }
        let letters = (0..alphabet_size)
            .filter(|&a| present[a])
            .map(|a| {
                let a = a as Letter;
                let fwd = prefix_hashes(word.iter().map(|&b| (b == a) as u64), n);
                let rev = prefix_hashes(word.iter().rev().map(|&b| (b == a) as u64), n);
                (a, fwd, rev)
            })
            .collect();
        WordHasher {
            len: n,
            pow,
            plain,
            letters,
        }
    }

    #[inline]
    fn range(&self, h: &[u64], start: usize, len: usize) -> u64 {
        let sub = mul(h[start], self.pow[len]);
        add(h[start + len], MOD - sub)
    }

    /// Hash of `word[start..start + len]`.
    #[inline]
    pub(crate) fn factor(&self, start: usize, len: usize) -> u64 {
        self.range(&self.plain, start, len)
    }

    /// Hash of the image of `word[start..start + len]` under `g`.
    pub(crate) fn image(&self, g: &Involution, start: usize, len: usize) -> u64 {
        let mut total = 0;
        match g.kind() {
            InvolutionKind::Morphic => {
                for (a, fwd, _) in &self.letters {
                    let weight = g.image(*a) as u64 + 1;
                    total = add(total, mul(weight, self.range(fwd, start, len)));
                }
            }
            InvolutionKind::Antimorphic => {
                let rev_start = self.len - start - len;
                for (a, _, rev) in &self.letters {
                    let weight = g.image(*a) as u64 + 1;
                    total = add(total, mul(weight, self.range(rev, rev_start, len)));
                }
            }
        }
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::involution::{enumerate_involutions, Alphabet};

    #[test]
    fn image_hash_matches_materialized_image() {
        let word: Vec<Letter> = (0..97u32).map(|i| ((i * i + 3 * i) % 3) as Letter).collect();
        let hasher = WordHasher::new(&word, 3);
        for kind in InvolutionKind::BOTH {
            for g in enumerate_involutions(Alphabet::new(3).unwrap(), kind) {
                for (start, len) in [(0, 1), (5, 17), (40, 57), (96, 1), (0, 97)] {
                    let image = g.apply(&word[start..start + len]).unwrap();
                    let direct = WordHasher::new(&image, 3).factor(0, len);
                    assert_eq!(hasher.image(&g, start, len), direct, "{g} {start} {len}");
                }
            }
        }
    }
}
