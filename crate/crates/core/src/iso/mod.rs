//! Isometric isomorphism of the algebras `A_alpha`, and isomorphism of their
//! automorphism groups.
//!
//! `A_alpha` and `A_beta` are isometrically isomorphic iff some `A` in
//! GL(2, Z) satisfies `m1 + beta*n1 > 0` and `m2 + beta*n2 = alpha*(m1 + beta*n1)`,
//! which says that the Möbius map `[[n2, m2], [n1, m1]]` sends `beta` to
//! `alpha`. For quadratic irrationals that is decided by comparing the
//! periodic tails of the two continued fractions.

mod conjecture;
mod conjugacy;

pub use conjecture::{
    conjecture_scan, conjecture_scan_with, ConjectureEntry, ConjectureOutcome, ConjectureReport,
};
pub use conjugacy::{
    aut_isomorphic, aut_isomorphic_generators, gl2_conjugate, AutIsoVerdict, ConjugacyVerdict,
    Mismatch, DEFAULT_BOUND,
};

use crate::matrix::GlMatrix;
use crate::quad::{
    continued_fraction, sign_linear, ContinuedFraction, QuadraticIrrational, Sign, Surd,
};
use crate::scalar::{int, IntScalar};

/// A matrix realizing `A_alpha ~ A_beta`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoWitness<T: IntScalar> {
    pub matrix: GlMatrix<T>,
    /// The exact check passed. Only `false` if the continued-fraction
    /// construction and the fallback search both failed to verify.
    pub verified: bool,
}

/// Exact check of the isomorphism condition for `a` from `alpha` to `beta`.
pub fn is_witness<T: IntScalar>(
    a: &GlMatrix<T>,
    alpha: &QuadraticIrrational<T>,
    beta: &QuadraticIrrational<T>,
) -> bool {
    if alpha.radicand() != beta.radicand() || sign_linear(a.m1(), a.n1(), beta) != Sign::Positive {
        return false;
    }
    let b = beta.as_surd();
    let d = b.d().clone();
    let lhs = Surd::from_int(a.m2().clone(), d.clone()).add(&b.scale(a.n2()));
    let base = Surd::from_int(a.m1().clone(), d).add(&b.scale(a.n1()));
    lhs == alpha.as_surd().mul(&base)
}

/// Flip the sign of `a` if needed so that `m1 + beta*n1 > 0`.
pub fn sign_normalize<T: IntScalar>(a: GlMatrix<T>, beta: &QuadraticIrrational<T>) -> GlMatrix<T> {
    if sign_linear(a.m1(), a.n1(), beta) == Sign::Negative {
        a.neg()
    } else {
        a
    }
}

/// Witness for the reverse direction `A_beta ~ A_alpha`.
pub fn reverse_witness<T: IntScalar>(
    a: &GlMatrix<T>,
    alpha: &QuadraticIrrational<T>,
) -> GlMatrix<T> {
    sign_normalize(a.inverse(), alpha)
}

/// Decide `A_alpha ~ A_beta`; `Some` carries the witness.
pub fn is_isomorphic<T: IntScalar>(
    alpha: &QuadraticIrrational<T>,
    beta: &QuadraticIrrational<T>,
) -> Option<IsoWitness<T>> {
    if alpha.radicand() != beta.radicand() {
        return None;
    }
    // alpha = beta + k for an integer k: shift the character index
    let diff = alpha.as_surd().sub(beta.as_surd());
    if diff.is_integer() {
        let shift =
            GlMatrix::new(T::one(), T::zero(), diff.a().clone(), T::one()).expect("unipotent");
        debug_assert!(is_witness(&shift, alpha, beta));
        return Some(IsoWitness {
            matrix: shift,
            verified: true,
        });
    }
    let ca = continued_fraction(alpha);
    let cb = continued_fraction(beta);
    let shift = rotation(&ca.period, &cb.period)?;
    let candidate = cf_witness(&ca, &cb, shift, beta);
    if is_witness(&candidate, alpha, beta) {
        return Some(IsoWitness {
            matrix: candidate,
            verified: true,
        });
    }
    let bound: T = int(FALLBACK_BOUND);
    match brute_force_witness(alpha, beta, &bound) {
        Some(matrix) => Some(IsoWitness {
            matrix,
            verified: true,
        }),
        None => Some(IsoWitness {
            matrix: candidate,
            verified: false,
        }),
    }
}

const FALLBACK_BOUND: i64 = 200;

/// `r` with `b[(r + k) % len] == a[k]` for all `k`.
fn rotation<T: PartialEq>(a: &[T], b: &[T]) -> Option<usize> {
    if a.len() != b.len() {
        return None;
    }
    let len = a.len();
    (0..len).find(|&r| (0..len).all(|k| b[(r + k) % len] == a[k]))
}

/// `P_alpha(i) * P_beta(j)^-1` maps `beta` to `alpha` when the complete
/// quotients at `i` and `j` coincide. A few aligned index pairs are tried and
/// the one with the smallest entries kept.
fn cf_witness<T: IntScalar>(
    ca: &ContinuedFraction<T>,
    cb: &ContinuedFraction<T>,
    shift: usize,
    beta: &QuadraticIrrational<T>,
) -> GlMatrix<T> {
    let len = ca.period.len();
    let mut best: Option<GlMatrix<T>> = None;
    for ta in 0..2 {
        for tb in 0..2 {
            let i = ca.preperiod.len() + ta * len;
            let j = cb.preperiod.len() + shift + tb * len;
            let m = ca.prefix_matrix(i).mul(&cb.prefix_matrix(j).inverse());
            // Möbius [[n2, m2], [n1, m1]] back to the row layout of A
            let a = GlMatrix::new(
                m.n2().clone(),
                m.m2().clone(),
                m.n1().clone(),
                m.m1().clone(),
            )
            .expect("product of unimodular matrices");
            let a = sign_normalize(a, beta);
            if best.as_ref().is_none_or(|b| a.max_abs() < b.max_abs()) {
                best = Some(a);
            }
        }
    }
    best.expect("at least one alignment")
}

/// Search all `(m1, n1)` with `|m1|, |n1| <= bound`; `(m2, n2)` are then
/// forced by `m2 + beta*n2 = alpha*(m1 + beta*n1)`. Returns the first
/// witness whose entries all lie within the bound.
pub fn brute_force_witness<T: IntScalar>(
    alpha: &QuadraticIrrational<T>,
    beta: &QuadraticIrrational<T>,
    bound: &T,
) -> Option<GlMatrix<T>> {
    if alpha.radicand() != beta.radicand() {
        return None;
    }
    let b = beta.as_surd();
    let d = b.d().clone();
    let mut m1 = -bound.clone();
    while m1 <= *bound {
        let mut n1 = -bound.clone();
        while n1 <= *bound {
            if sign_linear(&m1, &n1, beta) == Sign::Positive {
                let base = Surd::from_int(m1.clone(), d.clone()).add(&b.scale(&n1));
                let ((m2, m2_den), (n2, n2_den)) = alpha.as_surd().mul(&base).coordinates(b);
                if m2_den.is_one() && n2_den.is_one() && m2.abs() <= *bound && n2.abs() <= *bound {
                    if let Ok(a) = GlMatrix::new(m1.clone(), n1.clone(), m2, n2) {
                        return Some(a);
                    }
                }
            }
            n1 = n1 + T::one();
        }
        m1 = m1 + T::one();
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::parse;

    fn q(s: &str) -> QuadraticIrrational<i64> {
        parse(s).unwrap()
    }

    #[test]
    fn isomorphism_examples() {
        let r5 = q("sqrt(5)");
        let w = is_isomorphic(&r5, &r5).unwrap();
        assert!(w.verified && w.matrix.is_identity());
        let w = is_isomorphic(&r5, &q("2+sqrt(5)")).unwrap();
        assert_eq!(w.matrix.to_string(), "[[1,0],[-2,1]]");
        assert!(w.verified);
        assert!(is_isomorphic(&r5, &q("(1+sqrt(5))/2")).is_none());
        assert!(is_isomorphic(&r5, &q("sqrt(7)")).is_none());
    }

    #[test]
    fn reverse_direction() {
        let (a, b) = (q("(1+sqrt(7))/3"), q("3+sqrt(7)"));
        let w = is_isomorphic(&a, &b).unwrap();
        let back = reverse_witness(&w.matrix, &a);
        assert!(is_witness(&back, &b, &a));
    }

    #[test]
    fn brute_force_agrees_on_small_case() {
        let (a, b) = (q("sqrt(5)"), q("2+sqrt(5)"));
        let m = brute_force_witness(&a, &b, &3).unwrap();
        assert!(is_witness(&m, &a, &b));
        assert!(brute_force_witness(&a, &q("(1+sqrt(5))/2"), &10).is_none());
    }

    #[test]
    fn rotation_matches_cyclic_shift() {
        assert_eq!(rotation(&[1, 1, 4], &[4, 1, 1]), Some(1));
        assert_eq!(rotation(&[1, 2], &[1, 3]), None);
    }
}
