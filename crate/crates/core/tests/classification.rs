use std::collections::{BTreeSet, VecDeque};

use hurwitz_core::garside::{normal_form, super_summit_set};
use hurwitz_core::nielsen_thurston::classify;
use hurwitz_core::{BraidWord, GarsideNf, Letter, NtType, SimpleBraid};
use proptest::prelude::*;

fn word(degree: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec((1..degree, any::<bool>()), 0..=max_len).prop_map(move |ls| {
        BraidWord::new(degree, ls.into_iter().map(|(i, p)| Letter::new(i, p))).unwrap()
    })
}

type Mat = [[i64; 2]; 2];

fn mat_mul(a: Mat, b: Mat) -> Mat {
    let mut c = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    c
}

/// Image of a 3-braid in SL(2, Z).
fn sl2(w: &BraidWord) -> Mat {
    w.letters().iter().fold([[1, 0], [0, 1]], |acc, l| {
        let g = match (l.index(), l.is_positive()) {
            (1, true) => [[1, 1], [0, 1]],
            (1, false) => [[1, -1], [0, 1]],
            (2, true) => [[1, 0], [-1, 1]],
            _ => [[1, 0], [1, 1]],
        };
        mat_mul(acc, g)
    })
}

/// Type from the trace: elliptic or central is periodic, parabolic is
/// reducible, hyperbolic is pseudo-Anosov.
fn trace_type(w: &BraidWord) -> NtType {
    let m = sl2(w);
    let t = (m[0][0] + m[1][1]).abs();
    let central = m[0][1] == 0 && m[1][0] == 0;
    match t {
        0 | 1 => NtType::Periodic,
        2 if central => NtType::Periodic,
        2 => NtType::Reducible,
        _ => NtType::PseudoAnosov,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn three_braid_type_matches_trace(w in word(3, 16)) {
        prop_assert_eq!(classify(&w).unwrap(), trace_type(&w), "{}", w);
    }

    #[test]
    fn type_is_conjugation_invariant(w in word(4, 8), c in word(4, 6)) {
        let x = w.conjugate(&c).unwrap();
        prop_assert_eq!(classify(&w).unwrap(), classify(&x).unwrap(), "{} vs {}", w, x);
    }
}

#[test]
fn trace_oracle_samples() {
    let p = |s: &str| BraidWord::parse(s, 3).unwrap();
    assert_eq!(trace_type(&p("s1 s2")), NtType::Periodic);
    assert_eq!(trace_type(&p("s1^2")), NtType::Reducible);
    assert_eq!(trace_type(&p("s1 s2^-1")), NtType::PseudoAnosov);
    // trace of s1^k s2 is 2 - k
    for k in -4i64..=6 {
        let m = sl2(&p("s1").pow(k).compose(&p("s2")).unwrap());
        assert_eq!(m[0][0] + m[1][1], 2 - k);
    }
}

/// All conjugates reachable by simple elements without leaving the given
/// infimum and supremum.
fn brute_force_summit(start: &GarsideNf) -> BTreeSet<String> {
    let (inf, sup) = (start.inf(), start.sup());
    let simples = SimpleBraid::all_nontrivial(start.degree());
    let mut seen = BTreeSet::from([start.to_string()]);
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(x) = queue.pop_front() {
        for s in &simples {
            let y = x.conjugate(&GarsideNf::from_simple(s.clone()));
            if y.inf() == inf && y.sup() == sup && seen.insert(y.to_string()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn summit_set_matches_brute_force(w in (3usize..=4).prop_flat_map(|m| word(m, 7))) {
        let sss = super_summit_set(&w, 50_000).unwrap();
        let nf = normal_form(&w);
        for m in &sss.members {
            prop_assert_eq!(nf.conjugate(&m.conjugator), m.element.clone());
            prop_assert_eq!((m.element.inf(), m.element.sup()), (sss.inf, sss.sup));
        }
        let ours: BTreeSet<String> = sss.members.iter().map(|m| m.element.to_string()).collect();
        prop_assert_eq!(ours.len(), sss.len());
        prop_assert_eq!(ours, brute_force_summit(&sss.members[0].element));
        // summit values bound every conjugate reached by one simple element
        for s in SimpleBraid::all_nontrivial(w.degree()) {
            let y = nf.conjugate(&GarsideNf::from_simple(s));
            prop_assert!(y.inf() <= sss.inf && y.sup() >= sss.sup);
        }
    }
}
