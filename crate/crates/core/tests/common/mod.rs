//! Deliberately naive reference implementations used as test oracles. Nothing
//! here calls into the detector or the search.

#![allow(dead_code)]

use invavoid_core::{InvolutionKind, Letter, Pattern, Symbol};

/// Every self-inverse permutation of `0..k`, sorted lexicographically, by
/// filtering all `k!` permutations.
pub fn brute_involutions(k: usize) -> Vec<Vec<Letter>> {
    fn perms(items: &[Letter]) -> Vec<Vec<Letter>> {
        if items.is_empty() {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for i in 0..items.len() {
            let mut rest = items.to_vec();
            let head = rest.remove(i);
            for mut tail in perms(&rest) {
                tail.insert(0, head);
                out.push(tail);
            }
        }
        out
    }
    let letters: Vec<Letter> = (0..k as Letter).collect();
    let mut out: Vec<_> = perms(&letters)
        .into_iter()
        .filter(|p| (0..k).all(|a| p[p[a] as usize] as usize == a))
        .collect();
    out.sort();
    out
}

fn image(map: &[Letter], y: &[Letter], kind: InvolutionKind) -> Vec<Letter> {
    let mut z: Vec<Letter> = y.iter().map(|&a| map[a as usize]).collect();
    if kind == InvolutionKind::Antimorphic {
        z.reverse();
    }
    z
}

/// Least `(start, m, involution table)` such that the factor equals the
/// pattern expanded from the first block.
pub fn naive_find(
    word: &[Letter],
    k: usize,
    pattern: &Pattern,
    kind: InvolutionKind,
) -> Option<(usize, usize, Vec<Letter>)> {
    let n = word.len();
    let p = pattern.len();
    let invs = brute_involutions(k);
    for start in 0..n {
        for m in 1..=n {
            if start + p * m > n {
                break;
            }
            for map in &invs {
                let block = &word[start..start + m];
                let y = match pattern.symbols()[0] {
                    Symbol::X => block.to_vec(),
                    Symbol::GX => image(map, block, kind),
                };
                let gy = image(map, &y, kind);
                let mut expanded = Vec::new();
                for s in pattern.symbols() {
                    match s {
                        Symbol::X => expanded.extend_from_slice(&y),
                        Symbol::GX => expanded.extend_from_slice(&gy),
                    }
                }
                if expanded == word[start..start + p * m] {
                    return Some((start, m, map.clone()));
                }
            }
        }
    }
    None
}

/// Length of the longest word over `k` letters with no instance, found level
/// by level over all words (no relabeling shortcut). `None` if some word of
/// length `cap` avoids.
pub fn bfs_longest_avoider(pattern: &Pattern, k: usize, kind: InvolutionKind, cap: usize) -> Option<usize> {
    let mut level: Vec<Vec<Letter>> = vec![vec![]];
    for len in 0..cap {
        let next: Vec<Vec<Letter>> = level
            .iter()
            .flat_map(|w| {
                (0..k as Letter).map(move |a| {
                    let mut e = w.clone();
                    e.push(a);
                    e
                })
            })
            .filter(|e| naive_find(e, k, pattern, kind).is_none())
            .collect();
        if next.is_empty() {
            return Some(len);
        }
        level = next;
    }
    None
}
