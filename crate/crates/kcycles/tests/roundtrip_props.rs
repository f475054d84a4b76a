//! Property tests for the structural invariants: the insertion map is
//! a bijection with exact round trips, and cycle-notation text round
//! trips through parsing.

use proptest::prelude::*;

use kcycles::bijection;
use kcycles::{LetterAlphabet, Permutation};

fn permutation(max_n: u32) -> impl Strategy<Value = Permutation> {
    (0..=max_n).prop_flat_map(|n| {
        Just((1..=n).collect::<Vec<u32>>())
            .prop_shuffle()
            .prop_map(|word| Permutation::from_one_line(&word).unwrap())
    })
}

proptest! {
    #[test]
    fn insert_then_extract_is_the_identity(
        p in permutation(7),
        x_seed in any::<u32>(),
        k in 2u64..=5,
    ) {
        let n = p.len() as u32 + 1;
        let x = x_seed % n + 1;
        let image = bijection::insert(&p, x, k).unwrap();
        prop_assert!(image.is_canonical());
        prop_assert_eq!(image.len(), n as usize);
        if n as u64 % k != 0 {
            prop_assert_eq!(
                image.count_k_cycles(k as usize),
                p.count_k_cycles(k as usize)
            );
        }
        let (back, y) = bijection::extract(&image, k).unwrap();
        prop_assert_eq!(back, p);
        prop_assert_eq!(y, x);
    }

    #[test]
    fn extract_then_insert_is_the_identity(p in permutation(7), k in 2u64..=5) {
        prop_assume!(!p.is_empty());
        let (residual, x) = bijection::extract(&p, k).unwrap();
        let image = bijection::insert(&residual, x, k).unwrap();
        prop_assert_eq!(image, p.canonicalize());
    }

    #[test]
    fn cycle_text_round_trips(p in permutation(8), decimal in any::<bool>()) {
        let alphabet = if decimal {
            LetterAlphabet::Decimal
        } else {
            LetterAlphabet::Base36
        };
        let text = p.format_cycles(alphabet).unwrap();
        let back = Permutation::parse_cycles(&text, alphabet).unwrap();
        prop_assert_eq!(back, p.canonicalize());
    }

    #[test]
    fn canonicalize_is_idempotent_and_preserves_the_mapping(
        p in permutation(8),
        rotations in any::<u64>(),
    ) {
        // Scramble the stored representation without changing the
        // underlying bijection.
        let mut cycles: Vec<Vec<u32>> = p.cycles().to_vec();
        cycles.reverse();
        for (i, cycle) in cycles.iter_mut().enumerate() {
            let shift = (rotations as usize + i) % cycle.len();
            cycle.rotate_left(shift);
        }
        let scrambled = Permutation::from_cycles(cycles).unwrap();
        let canonical = scrambled.canonicalize();
        prop_assert_eq!(&canonical, &p);
        prop_assert_eq!(&canonical.canonicalize(), &canonical);
        for letter in scrambled.support() {
            prop_assert_eq!(
                scrambled.letter_at(letter).unwrap(),
                canonical.letter_at(letter).unwrap()
            );
        }
    }
}
