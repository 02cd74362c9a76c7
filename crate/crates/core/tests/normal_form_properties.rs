use hurwitz_core::dual::{check_periodic_congruence, delta_word, dual_nf};
use hurwitz_core::garside::{equal, normal_form};
use hurwitz_core::{BraidWord, DualNf, GarsideNf, Letter};
use proptest::prelude::*;

mod common;
use common::rewrite;

fn word(degree: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec((1..degree, any::<bool>()), 0..=max_len).prop_map(move |ls| {
        BraidWord::new(degree, ls.into_iter().map(|(i, p)| Letter::new(i, p))).unwrap()
    })
}

fn any_word() -> impl Strategy<Value = BraidWord> {
    (2usize..=6).prop_flat_map(|m| word(m, 30))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn normal_form_ignores_artin_rewrites(
        w in any_word(),
        picks in prop::collection::vec((0usize..64, 0usize..32, any::<bool>()), 1..6),
    ) {
        let v = rewrite(&w, &picks);
        prop_assert_eq!(normal_form(&w), normal_form(&v));
    }

    #[test]
    fn word_times_inverse_is_trivial(w in any_word()) {
        let nf = normal_form(&w);
        prop_assert!(nf.mul(&nf.inverse()).is_identity());
        prop_assert!(normal_form(&w.compose(&w.inverse()).unwrap()).is_identity());
    }

    #[test]
    fn full_twist_is_central(w in any_word()) {
        let d2 = GarsideNf::delta_power(w.degree(), 2);
        let nf = normal_form(&w);
        prop_assert_eq!(d2.mul(&nf), nf.mul(&d2));
    }

    #[test]
    fn normal_form_is_canonical(w in any_word()) {
        let nf = normal_form(&w);
        prop_assert!(nf.is_normal());
        prop_assert_eq!(nf.exponent_sum(), w.exponent_sum());
        prop_assert_eq!(normal_form(&nf.to_word()), nf.clone());
        prop_assert_eq!(GarsideNf::parse(&nf.to_string(), w.degree()).unwrap(), nf);
    }

    #[test]
    fn parse_format_round_trip(w in any_word()) {
        prop_assert_eq!(BraidWord::parse(&w.to_string(), w.degree()).unwrap(), w);
    }

    #[test]
    fn dual_equality_matches_garside(a in word(3, 14), b in word(3, 14)) {
        let same_dual = dual_nf(&a).unwrap() == dual_nf(&b).unwrap();
        prop_assert_eq!(same_dual, equal(&a, &b).unwrap());
        // also on words that are equal by construction
        let c = a.compose(&b).unwrap();
        let d = c.compose(&b.inverse()).unwrap().compose(&b).unwrap();
        prop_assert_eq!(dual_nf(&c).unwrap(), dual_nf(&d).unwrap());
    }

    #[test]
    fn dual_form_round_trips(w in word(3, 20)) {
        let nf = dual_nf(&w).unwrap();
        prop_assert!(nf.is_admissible());
        prop_assert!(equal(&nf.to_word(), &w).unwrap());
        prop_assert_eq!(nf.exponent_sum(), w.exponent_sum());
        prop_assert_eq!(DualNf::parse(&nf.to_string()).unwrap(), nf);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn periodic_conjugates_satisfy_depth_congruence(
        k in prop_oneof![-6i64..=-1, 1i64..=6],
        c in word(3, 8).prop_filter("nontrivial", |c| !c.is_empty()),
    ) {
        let x = delta_word(k).conjugate(&c).unwrap();
        prop_assert!(check_periodic_congruence(&x).unwrap(), "{}", x);
    }
}

#[test]
fn congruence_sample_has_nonzero_depth() {
    let x = delta_word(1).conjugate(&BraidWord::parse("s2", 3).unwrap()).unwrap();
    let nf = dual_nf(&x).unwrap();
    assert!(nf.depth() > 0);
    assert!(check_periodic_congruence(&x).unwrap());
}
