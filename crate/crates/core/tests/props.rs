//! Property tests over randomly drawn elements and words.

mod common;

use common::{random_afsa, shift_image, SplitMix64};
use proptest::prelude::*;
use rwp_core::algebra::{bicyclic, free_inverse};
use rwp_core::{Afsa, FreeInverseTriple, PartialInjection};

fn fi_word() -> impl Strategy<Value = String> {
    prop::collection::vec(prop::bool::ANY, 1..60)
        .prop_map(|bits| bits.iter().map(|&b| if b { 'x' } else { 'X' }).collect())
}

fn bc_word() -> impl Strategy<Value = String> {
    prop::collection::vec(prop::bool::ANY, 0..30)
        .prop_map(|bits| bits.iter().map(|&b| if b { 'b' } else { 'c' }).collect())
}

fn triple() -> impl Strategy<Value = FreeInverseTriple> {
    (0i64..=20, 0i64..=20, any::<u64>())
        .prop_filter("walk must be nonempty", |(l, n, _)| l + n > 0)
        .prop_map(|(l, n, pick)| {
            let end = -l + (pick % (l + n + 1) as u64) as i64;
            FreeInverseTriple::new(-l, n, end).expect("constructed within bounds")
        })
}

fn injection() -> impl Strategy<Value = PartialInjection> {
    (1usize..=6, any::<u64>()).prop_map(|(ground, seed)| {
        let mut rng = SplitMix64::new(seed);
        let mut sources: Vec<usize> = (1..=ground).collect();
        let mut targets: Vec<usize> = (1..=ground).collect();
        let mut pairs = Vec::new();
        let arrows = rng.below(ground + 1);
        for _ in 0..arrows {
            let s = sources.swap_remove(rng.below(sources.len()));
            let t = targets.swap_remove(rng.below(targets.len()));
            pairs.push((s, t));
        }
        PartialInjection::from_pairs(ground, &pairs).expect("distinct sources and targets")
    })
}

proptest! {
    #[test]
    fn triple_eval_agrees_with_walk_oracle(w in fi_word()) {
        prop_assert_eq!(free_inverse::eval(&w).unwrap(), free_inverse::eval_walk(&w).unwrap());
    }

    #[test]
    fn triple_multiplication_is_associative(a in triple(), b in triple(), c in triple()) {
        prop_assert_eq!((a * b) * c, a * (b * c));
    }

    #[test]
    fn triple_inverse_laws(a in triple()) {
        let b = a.inverse();
        prop_assert_eq!(a * b * a, a);
        prop_assert_eq!(b * a * b, b);
        prop_assert_eq!(b.inverse(), a);
    }

    #[test]
    fn bicyclic_eval_agrees_with_rewrite_oracle(w in bc_word()) {
        prop_assert_eq!(bicyclic::eval(&w).unwrap(), bicyclic::eval_rewrite(&w).unwrap());
    }

    #[test]
    fn shift_images_separate_words_exactly_like_the_bicyclic_monoid(
        w1 in bc_word(),
        w2 in bc_word(),
    ) {
        let same_element = bicyclic::eval_rewrite(&w1).unwrap() == bicyclic::eval_rewrite(&w2).unwrap();
        let same_shift = shift_image(&w1).unwrap() == shift_image(&w2).unwrap();
        prop_assert_eq!(same_element, same_shift);
    }

    #[test]
    fn injection_composition_is_associative(f in injection(), g in injection(), h in injection()) {
        // put all three on a common ground set
        let ground = f.ground_size().max(g.ground_size()).max(h.ground_size());
        let pad = |p: &PartialInjection| p.disjoint_union(&PartialInjection::empty(ground - p.ground_size()));
        let (f, g, h) = (pad(&f), pad(&g), pad(&h));
        let left = f.compose(&g).unwrap().compose(&h).unwrap();
        let right = f.compose(&g.compose(&h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn injection_inverse_laws(f in injection()) {
        let inv = f.inverse();
        prop_assert_eq!(f.compose(&inv).unwrap().compose(&f).unwrap(), f.clone());
        prop_assert_eq!(inv.compose(&f).unwrap().compose(&inv).unwrap(), inv.clone());
        prop_assert_eq!(inv.inverse(), f);
    }

    #[test]
    fn automaton_text_round_trips(seed in any::<u64>()) {
        let mut rng = SplitMix64::new(seed);
        let afsa = random_afsa(&mut rng, 4, &['x', 'X']);
        prop_assert_eq!(Afsa::parse(&afsa.to_text()).unwrap(), afsa);
    }
}

/// Exhaustive version of the shift-image separation property: on every word
/// over {b, c} of length at most 8, shift images coincide exactly when the
/// bicyclic normal forms do.
#[test]
fn shift_image_kernel_matches_bicyclic_kernel_up_to_length_8() {
    let words = common::words_up_to(&['b', 'c'], 8);
    let values: Vec<_> = words
        .iter()
        .map(|w| {
            (
                bicyclic::eval_rewrite(w).unwrap(),
                shift_image(w).expect("words over b, c"),
            )
        })
        .collect();
    for (ea, sa) in &values {
        for (eb, sb) in &values {
            assert_eq!(ea == eb, sa == sb);
        }
    }
}
