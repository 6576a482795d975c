use proptest::prelude::*;

use subchord::embed::{find_embedding, is_realizable};
use subchord::invariant::{averaged, lambda};
use subchord::pattern::{count_named, graph_counts};
use subchord::GaussWord;

/// A random double-occurrence word on `1..=n`.
fn word(max_n: usize) -> impl Strategy<Value = GaussWord> {
    (0..=max_n)
        .prop_flat_map(|n| Just((1..=n as u32).flat_map(|l| [l, l]).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|letters| GaussWord::new(letters).unwrap())
}

proptest! {
    #[test]
    fn canonical_form_is_a_class_invariant(w in word(7), k in 0usize..14, shift in 1u32..5) {
        let c = w.canonical_form();
        prop_assert_eq!(c.canonical_form(), c.clone());
        prop_assert_eq!(w.rotated(k % w.len().max(1)).canonical_form(), c.clone());
        prop_assert_eq!(w.reversed().canonical_form(), c.clone());
        prop_assert_eq!(w.relabeled(|l| l * 3 + shift).canonical_form(), c);
    }

    #[test]
    fn counts_do_not_depend_on_presentation(w in word(7), k in 0usize..14) {
        let c = count_named(&w);
        prop_assert_eq!(count_named(&w.rotated(k % w.len().max(1))), c);
        prop_assert_eq!(count_named(&w.reversed()), c);
        prop_assert_eq!(count_named(&w.canonical_form()), c);
        let g = graph_counts(&w);
        prop_assert_eq!((g.cross, g.triple, g.h, g.iii), (c.cross, c.triple, c.h, c.iii));
    }

    #[test]
    fn realizable_words_have_even_interlacement_degrees(w in word(6)) {
        if is_realizable(&w).unwrap() {
            prop_assert!(w.interlacement().all_degrees_even());
            let c = count_named(&w);
            prop_assert_eq!(c.cross % 2, c.triple % 2);
            prop_assert!(lambda(&w).is_ok());
        }
    }

    #[test]
    fn connected_sums_add_counts(a in word(4), b in word(4)) {
        let (Some(_), Some(_)) = (find_embedding(&a).unwrap(), find_embedding(&b).unwrap()) else {
            return Ok(());
        };
        let s = a.connected_sum(&b);
        prop_assert!(is_realizable(&s).unwrap());
        let (ca, cb, cs) = (count_named(&a), count_named(&b), count_named(&s));
        prop_assert_eq!(cs.cross, ca.cross + cb.cross);
        prop_assert_eq!(cs.triple, ca.triple + cb.triple);
        prop_assert_eq!(cs.h, ca.h + cb.h);
        prop_assert_eq!(lambda(&s).unwrap(), lambda(&a).unwrap() + lambda(&b).unwrap());
        prop_assert_eq!(averaged(&s).unwrap(), averaged(&a).unwrap() + averaged(&b).unwrap());
    }
}
