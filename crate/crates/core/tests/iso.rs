mod common;

use common::*;
use proptest::prelude::*;
use toralg::autgroup::generator;
use toralg::iso::{
    aut_isomorphic, brute_force_witness, gl2_conjugate, is_isomorphic, is_witness, reverse_witness,
    AutIsoVerdict, ConjugacyVerdict,
};
use toralg::matrix::GlMatrix;
use toralg::quad::{parse, QuadraticIrrational};
use toralg::BigInt;

type Q = QuadraticIrrational<BigInt>;

fn in_field(d: i64) -> impl Strategy<Value = Q> {
    (-6i64..=6, 1i64..=3, 1i64..=4).prop_filter_map("positive", move |(u, v, w)| {
        QuadraticIrrational::new(u.into(), v.into(), w.into(), d.into())
            .ok()
            .filter(|q| q.is_positive())
    })
}

fn triple() -> impl Strategy<Value = (Q, Q, Q)> {
    prop::sample::select(vec![2i64, 3, 5, 6, 7, 13])
        .prop_flat_map(|d| (in_field(d), in_field(d), in_field(d)))
}

/// `|u|, v, w <= 6`, squarefree `D <= 30`; both values in the same field.
fn wide_pair() -> impl Strategy<Value = (Q, Q)> {
    let squarefree: Vec<i64> = (2..=30)
        .filter(|d| (2..=5).all(|p| d % (p * p) != 0))
        .collect();
    let value = |d: i64| {
        (-6i64..=6, 1i64..=6, 1i64..=6).prop_filter_map("positive", move |(u, v, w)| {
            QuadraticIrrational::new(u.into(), v.into(), w.into(), d.into())
                .ok()
                .filter(|q| q.is_positive())
        })
    };
    prop::sample::select(squarefree).prop_flat_map(move |d| (value(d), value(d)))
}

fn unimodular(b: i64) -> impl Strategy<Value = GlMatrix<BigInt>> {
    (-b..=b, -b..=b, -b..=b, -b..=b).prop_filter_map("unimodular", |(a, b, c, d)| {
        GlMatrix::new(a.into(), b.into(), c.into(), d.into()).ok()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn isomorphism_is_an_equivalence((a, b, c) in triple()) {
        prop_assert!(is_isomorphic(&a, &a).is_some());
        let ab = is_isomorphic(&a, &b);
        prop_assert_eq!(ab.is_some(), is_isomorphic(&b, &a).is_some());
        if ab.is_some() && is_isomorphic(&b, &c).is_some() {
            prop_assert!(is_isomorphic(&a, &c).is_some());
        }
        if let Some(w) = ab {
            prop_assert!(w.verified && is_witness(&w.matrix, &a, &b));
            prop_assert!(is_witness(&reverse_witness(&w.matrix, &a), &b, &a));
        }
    }

    #[test]
    fn brute_force_agrees_with_the_decision((a, b) in wide_pair()) {
        let (ta, tb) = (tuple(&a.convert().unwrap()), tuple(&b.convert().unwrap()));
        let found = iso_witnesses(ta, tb, 30, true);
        let decided = is_isomorphic(&a, &b);
        if !found.is_empty() {
            prop_assert!(decided.is_some(), "{} ~ {} via {:?}", a, b, found[0]);
        }
        if let Some(w) = decided {
            let e = w.matrix.convert::<i128>().map(|m| entries(&m));
            prop_assert!(e.is_some_and(|e| is_iso_witness(e, ta, tb)));
        }
        if let Some(w) = brute_force_witness(&a, &b, &BigInt::from(10)) {
            prop_assert!(is_witness(&w, &a, &b));
        }
    }

    #[test]
    fn conjugates_are_found(a in unimodular(4), c in unimodular(2)) {
        let b = c.inverse().mul(&a).mul(&c);
        match gl2_conjugate(&a, &b, 20) {
            ConjugacyVerdict::Yes(x) => {
                prop_assert_eq!(x.inverse().mul(&a).mul(&x), b);
                prop_assert!(x.max_abs() <= c.max_abs());
            }
            other => prop_assert!(false, "{:?}", other),
        }
    }

    #[test]
    fn conjugacy_verdicts_are_sound(a in unimodular(3), b in unimodular(3)) {
        match gl2_conjugate(&a, &b, 10) {
            ConjugacyVerdict::Yes(x) => prop_assert_eq!(x.inverse().mul(&a).mul(&x), b),
            ConjugacyVerdict::No(_) => prop_assert!(a.trace() != b.trace() || a.det() != b.det()),
            ConjugacyVerdict::Unknown { .. } => {
                prop_assert!(a.trace() == b.trace() && a.det() == b.det())
            }
        }
    }

    #[test]
    fn isomorphic_algebras_have_isomorphic_groups((a, b, _) in triple()) {
        if is_isomorphic(&a, &b).is_some() {
            let verdict = aut_isomorphic(&a, &b, 60).unwrap();
            prop_assert!(!matches!(verdict, AutIsoVerdict::No { .. }), "{:?}", verdict);
            if let AutIsoVerdict::Yes { conjugator, inverted } = verdict {
                let (ga, gb) = (generator(&a).unwrap(), generator(&b).unwrap());
                let target = if inverted { gb.inverse() } else { gb };
                prop_assert_eq!(conjugator.inverse().mul(&ga).mul(&conjugator), target);
            }
        }
    }
}

#[test]
fn different_fields_are_never_isomorphic() {
    let (a, b): (Q, Q) = (parse("sqrt(2)").unwrap(), parse("sqrt(3)").unwrap());
    assert!(is_isomorphic(&a, &b).is_none());
}

#[test]
fn witness_against_independent_check() {
    let a: QuadraticIrrational<i128> = parse("(1+sqrt(5))/2").unwrap();
    let b: QuadraticIrrational<i128> = parse("(5+sqrt(5))/10").unwrap();
    let w = is_isomorphic(&a, &b).expect("same tail");
    assert!(is_iso_witness(entries(&w.matrix), tuple(&a), tuple(&b)));
}
