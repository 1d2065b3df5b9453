mod common;

use common::*;
use num_rational::Ratio;
use proptest::prelude::*;
use toralg::autgroup::{
    conjugation_formula, eigen_check, generator, is_automorphism_matrix, power_of, psi_action,
    synthesize, AutElement, TorusPoint,
};
use toralg::matrix::GlMatrix;
use toralg::quad::QuadraticIrrational;
use toralg::BigInt;

fn alpha() -> impl Strategy<Value = QuadraticIrrational<BigInt>> {
    (-12i64..=12, 1i64..=6, 1i64..=8, 2i64..40)
        .prop_filter("nonsquare", |t| !is_square(t.3 as i128))
        .prop_filter_map("positive", |(u, v, w, d)| {
            QuadraticIrrational::new(u.into(), v.into(), w.into(), d.into())
                .ok()
                .filter(|q| q.is_positive())
        })
}

fn point() -> impl Strategy<Value = TorusPoint<i128>> {
    (0i128..64, 1i128..=64, 0i128..64, 1i128..=64)
        .prop_map(|(a, b, c, d)| TorusPoint::new(Ratio::new(a % b, b), Ratio::new(c % d, d)))
}

fn golden() -> GlMatrix<i128> {
    GlMatrix::new(0, 1, 1, 1).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn generator_is_a_sound_automorphism(q in alpha()) {
        let g = synthesize(&q).unwrap();
        let a0 = &g.matrix;
        prop_assert!(is_automorphism_matrix(a0, &q));
        prop_assert!(!a0.is_identity());
        let lambda = eigen_check(a0, &q).unwrap();
        let x = q.to_f64();
        let expected = a0.m1().to_string().parse::<f64>().unwrap()
            + a0.n1().to_string().parse::<f64>().unwrap() * x;
        prop_assert!(lambda.to_f64() > 1.0);
        prop_assert!((lambda.to_f64() - expected).abs() < 1e-6 * expected.abs().max(1.0));
        // independent check when the entries are small enough for i128
        if let (Some(a), Some(qi)) = (a0.convert::<i128>(), q.convert::<i128>()) {
            let e = entries(&a);
            if e.iter().all(|v| v.abs() < 1 << 40) {
                prop_assert!(is_iso_witness(e, tuple(&qi), tuple(&qi)));
            }
        }
    }

    #[test]
    fn powers_stay_in_the_group(q in alpha(), k in -5i64..=5) {
        let a0 = generator(&q).unwrap();
        let ak = a0.pow(k);
        prop_assert!(is_automorphism_matrix(&ak, &q));
        prop_assert_eq!(power_of(&ak, &a0, &q), Some(k));
        prop_assert!(!is_automorphism_matrix(&ak.neg(), &q));
    }

    #[test]
    fn nothing_small_escapes_the_generator(q in alpha()) {
        let a0 = generator(&q).unwrap();
        let qi = q.convert::<i128>().unwrap();
        let t = tuple(&qi);
        for m in iso_witnesses(t, t, 12, false) {
            let big = GlMatrix::new(m[0].into(), m[1].into(), m[2].into(), m[3].into()).unwrap();
            prop_assert!(power_of(&big, &a0, &q).is_some(), "{:?} is not a power of {}", m, a0);
        }
    }

    #[test]
    fn semidirect_law(c in point(), d in point(), e in point(), m in -4i64..=4, n in -4i64..=4, k in -4i64..=4) {
        let a0 = golden();
        let x = AutElement::new(c.clone(), m, a0.clone());
        let y = AutElement::new(d.clone(), n, a0.clone());
        let z = AutElement::new(e, k, a0.clone());
        let xy = x.multiply(&y).unwrap();
        prop_assert_eq!(xy.point(), &c.add(&psi_action(&a0.pow(m), &d)));
        prop_assert_eq!(xy.power(), m + n);
        prop_assert_eq!(xy.multiply(&z).unwrap(), x.multiply(&y.multiply(&z).unwrap()).unwrap());
        let id = AutElement::identity(a0.clone());
        prop_assert_eq!(x.multiply(&id).unwrap(), x.clone());
        prop_assert!(x.multiply(&x.inverse()).unwrap().is_identity());
    }

    #[test]
    fn conjugation_is_a_homomorphism(c in point(), d in point(), k in -4i64..=4) {
        let a0 = GlMatrix::new(2i128, 1, 5, 2).unwrap();
        let sum = conjugation_formula(&a0, k, &c.add(&d));
        prop_assert_eq!(sum, conjugation_formula(&a0, k, &c).add(&conjugation_formula(&a0, k, &d)));
        let there = conjugation_formula(&a0, k, &c);
        prop_assert_eq!(conjugation_formula(&a0, -k, &there), c);
    }
}

#[test]
fn mixing_generators_is_rejected() {
    let a = AutElement::<i128>::identity(golden());
    let b = AutElement::identity(GlMatrix::new(2, 1, 5, 2).unwrap());
    assert!(a.multiply(&b).is_err());
}
