use parkhopf::chars::{self, SignedParkingFunction};
use parkhopf::combinat::{ndpfs, parking_functions, BinaryTree, Composition, Ndpf};
use parkhopf::exact::Var;
use parkhopf::hopf::{cqsym, Cqsym};
use parkhopf::lagrange::{bijection, iota};
use parkhopf::QPoly;
use proptest::prelude::*;

fn ndpf() -> impl Strategy<Value = Ndpf> {
    (0usize..=8).prop_flat_map(|n| {
        let all = ndpfs(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn composition() -> impl Strategy<Value = Composition> {
    prop::collection::vec(1u32..=4, 1..=6).prop_map(|p| Composition::new(p).expect("positive parts"))
}

/// A small integer combination of NDPF keys of size 1..=3.
fn element() -> impl Strategy<Value = Cqsym<i64>> {
    let keys: Vec<Ndpf> = (1..=3).flat_map(ndpfs).collect();
    prop::collection::vec((0..keys.len(), -3i64..=3), 1..=3)
        .prop_map(move |terms| terms.into_iter().map(|(i, c)| (keys[i].clone(), c)).collect())
}

fn poly() -> impl Strategy<Value = QPoly> {
    prop::collection::vec(-5i64..=5, 0..=4).prop_map(|c| {
        let c: Vec<_> = c.into_iter().map(|x| parkhopf::Rational::from_integer(x.into())).collect();
        QPoly::univariate(Var::Q, &c)
    })
}

proptest! {
    #[test]
    fn iota_is_an_involution(pi in ndpf()) {
        prop_assert_eq!(iota(&iota(&pi).unwrap()).unwrap(), pi);
    }

    #[test]
    fn iota_conjugates_the_packed_evaluation(pi in ndpf()) {
        let image = Composition::new(iota(&pi).unwrap().packed_evaluation());
        let conj = Composition::new(pi.packed_evaluation()).and_then(|c| c.conjugate());
        prop_assert_eq!(image.ok(), conj.ok());
    }

    #[test]
    fn tree_bijection_round_trips(pi in ndpf()) {
        let t = bijection::ndpf_to_tree(&pi).unwrap();
        prop_assert_eq!(t.size(), pi.len());
        prop_assert_eq!(bijection::tree_to_ndpf(&t), pi);
    }

    #[test]
    fn tree_display_parses_back(pi in ndpf()) {
        let t = bijection::ndpf_to_tree(&pi).unwrap();
        prop_assert_eq!(t.to_string().parse::<BinaryTree>().unwrap(), t);
    }

    #[test]
    fn conjugation_is_an_involution(c in composition()) {
        prop_assert_eq!(c.conjugate().unwrap().conjugate().unwrap(), c);
    }

    #[test]
    fn composition_display_parses_back(c in composition()) {
        prop_assert_eq!(c.to_string().parse::<Composition>().unwrap(), c);
    }

    #[test]
    fn schroder_encoding_round_trips(n in 0usize..=5, pick in any::<prop::sample::Index>()) {
        let paths = chars::schroder_paths(n);
        let p = &paths[pick.index(paths.len())];
        prop_assert_eq!(&chars::schroder_decode(&chars::schroder_encode(p)).unwrap(), p);
    }

    #[test]
    fn signed_words_display_parses_back(n in 1usize..=4, pick in any::<prop::sample::Index>()) {
        let words = chars::signed_parking_functions(n);
        let w = &words[pick.index(words.len())];
        prop_assert_eq!(&w.to_string().parse::<SignedParkingFunction>().unwrap(), w);
    }

    #[test]
    fn parking_functions_park(n in 1usize..=5, pick in any::<prop::sample::Index>()) {
        let all = parking_functions(n);
        let mut w: Vec<u32> = all[pick.index(all.len())].letters().iter().map(|&x| x).collect();
        w.sort_unstable();
        prop_assert!(w.iter().enumerate().all(|(i, &x)| x as usize <= i + 1));
    }

    #[test]
    fn duplicial_relations(a in element(), b in element(), c in element()) {
        let p = |x: &Cqsym<i64>, y: &Cqsym<i64>| cqsym::prec(x, y).unwrap();
        let s = cqsym::succ;
        prop_assert_eq!(p(&p(&a, &b), &c), p(&a, &p(&b, &c)));
        prop_assert_eq!(p(&s(&a, &b), &c), s(&a, &p(&b, &c)));
        prop_assert_eq!(s(&s(&a, &b), &c), s(&a, &s(&b, &c)));
    }

    #[test]
    fn polynomial_ring_laws(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&(&p + &q) * &r, &(&p * &r) + &(&q * &r));
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        let sum = &p + &q;
        prop_assert_eq!(sum.substitute(Var::Q, &r), &p.substitute(Var::Q, &r) + &q.substitute(Var::Q, &r));
    }
}
