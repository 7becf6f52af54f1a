use cmfdb::cm_fdb::{nc_multiply, nc_normal_form, Letter, NCElement};
use cmfdb::combinatorics::{
    brute_force_interleavings, binomial, enumerate_compositions, shuffle_words, splits_into,
    Composition,
};
use cmfdb::rational::{ratio, Rational};
use cmfdb::series::{
    apply_component_word, apply_component_word_via_b, compose, gamma_from_phi, invert,
    phi_from_gamma, Diffeo,
};
use cmfdb::shuffle::{word_shuffle_multiply, Word, WordElement};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(p, q)| ratio(p, q))
}

fn diffeo(order: usize) -> impl Strategy<Value = Diffeo> {
    prop::collection::vec(rational(), order).prop_map(|v| Diffeo::new(v).unwrap())
}

fn word(max_len: usize) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(1u32..=3, 0..=max_len)
}

fn composition(max_len: usize) -> impl Strategy<Value = Composition> {
    prop::collection::vec(1u32..=3, 1..=max_len).prop_map(|v| Composition::new(v).unwrap())
}

fn letter() -> impl Strategy<Value = Letter> {
    prop_oneof![
        (1u32..=3).prop_map(Letter::Delta),
        Just(Letter::X),
        Just(Letter::Y),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn composition_is_associative(f in diffeo(5), g in diffeo(5), h in diffeo(5)) {
        let left = compose(&compose(&f, &g).unwrap(), &h).unwrap();
        let right = compose(&f, &compose(&g, &h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn inverse_is_two_sided(f in diffeo(6)) {
        let id = Diffeo::identity(6);
        let fi = invert(&f);
        prop_assert_eq!(compose(&f, &fi).unwrap(), id.clone());
        prop_assert_eq!(compose(&fi, &f).unwrap(), id);
    }

    #[test]
    fn gamma_coordinates_round_trip(f in diffeo(6)) {
        prop_assert_eq!(phi_from_gamma(&gamma_from_phi(&f)).unwrap(), f);
    }

    #[test]
    fn component_words_two_ways(f in diffeo(6), parts in prop::collection::vec(1u32..=3, 1..=3), k in 1u32..=3) {
        let w = Composition::new(parts).unwrap();
        prop_assume!(w.weight() <= 6);
        prop_assert_eq!(
            apply_component_word(&f, &w, k).unwrap(),
            apply_component_word_via_b(&f, &w, k).unwrap()
        );
    }

    #[test]
    fn shuffle_is_commutative_and_associative(u in word(3), v in word(3), w in word(2)) {
        let e = |x: &Vec<u32>| WordElement::word(Word::new(x.clone()));
        prop_assert_eq!(word_shuffle_multiply(&e(&u), &e(&v)), word_shuffle_multiply(&e(&v), &e(&u)));
        let l = word_shuffle_multiply(&word_shuffle_multiply(&e(&u), &e(&v)), &e(&w));
        let r = word_shuffle_multiply(&e(&u), &word_shuffle_multiply(&e(&v), &e(&w)));
        prop_assert_eq!(l, r);
    }

    #[test]
    fn shuffle_counts_match_enumeration(a in composition(3), b in composition(3)) {
        let counted = shuffle_words(a.parts(), b.parts());
        let total: u64 = counted.values().sum();
        prop_assert_eq!(total, binomial((a.length() + b.length()) as i64, a.length() as i64));
        let mut brute = std::collections::BTreeMap::new();
        for w in brute_force_interleavings(&[a.clone(), b.clone()]) {
            *brute.entry(w).or_insert(0u64) += 1;
        }
        prop_assert_eq!(counted, brute);
    }

    #[test]
    fn split_counts(c in composition(6)) {
        for t in 1..=c.length() {
            let n = splits_into(&c, t).len() as u64;
            prop_assert_eq!(n, binomial(c.length() as i64 - 1, t as i64 - 1));
        }
    }

    #[test]
    fn pbw_product_is_associative(a in prop::collection::vec(letter(), 0..3),
                                  b in prop::collection::vec(letter(), 0..3),
                                  c in prop::collection::vec(letter(), 0..3)) {
        let (x, y, z) = (nc_normal_form(&a), nc_normal_form(&b), nc_normal_form(&c));
        prop_assert_eq!(nc_multiply(&nc_multiply(&x, &y), &z), nc_multiply(&x, &nc_multiply(&y, &z)));
    }

    #[test]
    fn pbw_closed_forms_match_rewriting(w in prop::collection::vec(letter(), 0..6)) {
        let mut acc = NCElement::one();
        for &l in &w {
            acc = nc_multiply(&acc, &NCElement::letter(l));
        }
        prop_assert_eq!(acc, nc_normal_form(&w));
    }
}

#[test]
fn composition_counts() {
    for n in 1..=12u32 {
        assert_eq!(enumerate_compositions(n).unwrap().len(), 1usize << (n - 1));
    }
}
