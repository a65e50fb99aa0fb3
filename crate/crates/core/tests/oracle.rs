mod common;

use common::{bfs_longest_avoider, brute_involutions, naive_find};
use invavoid_core::{
    enumerate_involutions, find_instance, prove_unavoidable, Alphabet, InvolutionKind, Outcome, Pattern,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn enumeration_matches_brute_force() {
    for k in 1..=6 {
        let tables: Vec<_> = enumerate_involutions(Alphabet::new(k).unwrap(), InvolutionKind::Morphic)
            .iter()
            .map(|g| g.mapping().to_vec())
            .collect();
        assert_eq!(tables, brute_involutions(k));
    }
}

#[test]
fn detector_matches_naive_on_short_words() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..300 {
        let k = rng.gen_range(1..=3);
        let n = rng.gen_range(0..=60);
        let word: Vec<u8> = (0..n).map(|_| rng.gen_range(0..k) as u8).collect();
        for len in 1..=4 {
            for p in Pattern::all_of_length(len) {
                for kind in InvolutionKind::BOTH {
                    let fast = find_instance(&word, Alphabet::new(k).unwrap(), &p, kind)
                        .unwrap()
                        .map(|o| (o.start, o.block_len, o.involution.mapping().to_vec()));
                    assert_eq!(fast, naive_find(&word, k, &p, kind), "{word:?} {p} {kind}");
                }
            }
        }
    }
}

#[test]
fn length_three_longest_avoiders_match_bfs() {
    // Frozen from the breadth-first oracle.
    let expected = [
        ("xxg(x)", 6),
        ("xg(x)x", 5),
        ("g(x)xx", 6),
        ("g(x)g(x)x", 6),
        ("xg(x)g(x)", 6),
        ("g(x)xg(x)", 5),
    ];
    for (text, longest) in expected {
        let p = Pattern::parse(text).unwrap();
        for kind in InvolutionKind::BOTH {
            assert_eq!(bfs_longest_avoider(&p, 2, kind, 40), Some(longest), "{text} {kind}");
            let verdict = prove_unavoidable(&p, Alphabet::BINARY, kind, 64);
            assert_eq!(
                verdict.outcome,
                Outcome::Unavoidable {
                    longest_avoider_len: longest
                },
                "{text} {kind}"
            );
            assert_eq!(verdict.longest_example.len(), longest);
            assert!(naive_find(&verdict.longest_example, 2, &p, kind).is_none());
        }
    }
}

#[test]
fn small_unavoidable_patterns_match_bfs() {
    for text in ["xg(x)", "g(x)x", "x", "xx"] {
        let p = Pattern::parse(text).unwrap();
        for kind in InvolutionKind::BOTH {
            for k in 1..=if text == "xx" { 2 } else { 4 } {
                let expected = bfs_longest_avoider(&p, k, kind, 20).unwrap();
                let verdict = prove_unavoidable(&p, Alphabet::new(k).unwrap(), kind, 20);
                assert_eq!(
                    verdict.outcome,
                    Outcome::Unavoidable {
                        longest_avoider_len: expected
                    },
                    "{text} {kind} k={k}"
                );
            }
        }
    }
    assert_eq!(
        bfs_longest_avoider(&Pattern::parse("xxg(x)").unwrap(), 2, InvolutionKind::Morphic, 40),
        Some(6)
    );
}
