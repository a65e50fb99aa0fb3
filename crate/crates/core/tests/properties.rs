mod common;

use invavoid_core::{
    avoids, enumerate_involutions, expand, find_instance, Alphabet, Involution, InvolutionKind, Letter, Pattern,
};
use proptest::prelude::*;

fn kind() -> impl Strategy<Value = InvolutionKind> {
    prop_oneof![Just(InvolutionKind::Morphic), Just(InvolutionKind::Antimorphic)]
}

fn pattern(max_len: usize) -> impl Strategy<Value = Pattern> {
    (1..=max_len).prop_flat_map(|len| proptest::sample::select(Pattern::all_of_length(len)))
}

fn word_over(k: usize, max_len: usize) -> impl Strategy<Value = Vec<Letter>> {
    proptest::collection::vec(0..k as Letter, 0..=max_len)
}

fn permutation(k: usize) -> impl Strategy<Value = Vec<Letter>> {
    Just((0..k as Letter).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn hits_reexpand_to_the_factor(
        (k, word) in (1usize..=3).prop_flat_map(|k| (Just(k), word_over(k, 80))),
        p in pattern(4),
        kind in kind(),
    ) {
        if let Some(occ) = find_instance(&word, Alphabet::new(k).unwrap(), &p, kind).unwrap() {
            prop_assert!(occ.block_len >= 1);
            let y = occ.substituted(&word);
            prop_assert_eq!(expand(&p, &y, &occ.involution).unwrap(), occ.factor(&word).to_vec());
        }
    }

    #[test]
    fn avoidance_is_inherited_by_factors(
        (k, word) in (1usize..=3).prop_flat_map(|k| (Just(k), word_over(k, 60))),
        p in pattern(4),
        kind in kind(),
        cut in (0usize..=60, 0usize..=60),
    ) {
        let alphabet = Alphabet::new(k).unwrap();
        if avoids(&word, alphabet, &p, kind).unwrap() {
            let (a, b) = (cut.0.min(word.len()), cut.1.min(word.len()));
            let (lo, hi) = (a.min(b), a.max(b));
            prop_assert!(avoids(&word[lo..hi], alphabet, &p, kind).unwrap());
        }
    }

    #[test]
    fn relabeling_letters_preserves_avoidance(
        (k, word, sigma) in (1usize..=3).prop_flat_map(|k| (Just(k), word_over(k, 60), permutation(k))),
        p in pattern(4),
        kind in kind(),
    ) {
        let alphabet = Alphabet::new(k).unwrap();
        let renamed: Vec<Letter> = word.iter().map(|&a| sigma[a as usize]).collect();
        let before = find_instance(&word, alphabet, &p, kind).unwrap();
        let after = find_instance(&renamed, alphabet, &p, kind).unwrap();
        prop_assert_eq!(before.is_some(), after.is_some());
        if let Some(occ) = before {
            // The conjugated involution witnesses the renamed factor.
            let g = occ.involution.relabeled(&sigma);
            let y: Vec<Letter> = occ.substituted(&word).iter().map(|&a| sigma[a as usize]).collect();
            prop_assert_eq!(expand(&p, &y, &g).unwrap(), renamed[occ.start..occ.end()].to_vec());
        }
    }

    #[test]
    fn planted_instances_are_found(
        k in 1usize..=3,
        p in pattern(4),
        kind in kind(),
        seed in any::<(usize, Vec<u8>, Vec<u8>, Vec<u8>)>(),
    ) {
        let (pick, y, left, right) = seed;
        let clamp = |v: &[u8], max: usize| -> Vec<Letter> {
            v.iter().take(max).map(|&a| a % k as u8).collect()
        };
        let mut y = clamp(&y, 6);
        if y.is_empty() {
            y.push(0);
        }
        let invs = enumerate_involutions(Alphabet::new(k).unwrap(), kind);
        let g: &Involution = &invs[pick % invs.len()];
        let mut word = clamp(&left, 20);
        let at = word.len();
        word.extend(expand(&p, &y, g).unwrap());
        word.extend(clamp(&right, 20));
        let occ = find_instance(&word, Alphabet::new(k).unwrap(), &p, kind).unwrap();
        prop_assert!(occ.is_some());
        prop_assert!(occ.unwrap().start <= at);
    }
}
