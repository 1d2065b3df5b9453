//! Automorphisms of `A_alpha` coming from GL(2, Z), the cyclic generator of
//! that group, and the semidirect product `T^2 x|_psi Z` they form with the
//! torus rotations.

mod generator;
mod torus;

use thiserror::Error;

pub use crate::matrix::GlMatrix;
pub use generator::{generator, synthesize, synthesize_with, Generator, GeneratorRoute};
pub use torus::{
    conjugation_formula, conjugation_formula_check, psi_action, AutElement, TorusPoint,
};

use crate::quad::{eval_quadratic, sign_linear, QuadraticIrrational, Sign, Surd};
use crate::scalar::IntScalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutError {
    #[error("matrix {matrix} does not induce an automorphism of A_{alpha}")]
    NotAutomorphism { matrix: String, alpha: String },
    #[error("group elements built over different generators {0} and {1}")]
    ContextMismatch(String, String),
    #[error(transparent)]
    Pell(#[from] crate::pell::PellError),
    #[error("internal error: {0}")]
    Internal(String),
}

/// Whether composing with the monomial map of `a` is an automorphism of
/// `A_alpha`: `m1 + alpha*n1 > 0` and `n1*alpha^2 + (m1 - n2)*alpha - m2 = 0`.
pub fn is_automorphism_matrix<T: IntScalar>(
    a: &GlMatrix<T>,
    alpha: &QuadraticIrrational<T>,
) -> bool {
    sign_linear(a.m1(), a.n1(), alpha) == Sign::Positive && eval_quadratic(a, alpha) == Sign::Zero
}

/// The positive eigenvalue `m1 + alpha*n1` belonging to the eigenvector
/// `[1, alpha]`, after checking `A [1, alpha]^T = lambda [1, alpha]^T` exactly.
pub fn eigen_check<T: IntScalar>(
    a: &GlMatrix<T>,
    alpha: &QuadraticIrrational<T>,
) -> Result<Surd<T>, AutError> {
    if !is_automorphism_matrix(a, alpha) {
        return Err(AutError::NotAutomorphism {
            matrix: a.to_string(),
            alpha: alpha.to_string(),
        });
    }
    let x = alpha.as_surd();
    let d = x.d().clone();
    let lambda = Surd::from_int(a.m1().clone(), d.clone()).add(&x.scale(a.n1()));
    let second = Surd::from_int(a.m2().clone(), d).add(&x.scale(a.n2()));
    if second != lambda.mul(x) {
        return Err(AutError::Internal(format!(
            "[1, alpha] is not an eigenvector of {a} for alpha = {alpha}"
        )));
    }
    Ok(lambda)
}

/// `n` with `a = a0^n`, where both are automorphism matrices of `alpha`.
///
/// `|n|` is read off the dominant eigenvalues in floating point (computed
/// from trace and determinant, which avoids the cancellation in
/// `m1 + alpha*n1` for negative powers), the sign comes from comparing the
/// exact eigenvalues with 1, and the result is confirmed by exact matrix
/// powers, so a `Some` is always exact.
pub fn power_of<T: IntScalar>(
    a: &GlMatrix<T>,
    a0: &GlMatrix<T>,
    alpha: &QuadraticIrrational<T>,
) -> Option<i64> {
    let lambda = eigen_check(a, alpha).ok()?;
    let lambda0 = eigen_check(a0, alpha).ok()?;
    if a0.is_identity() || a.is_identity() {
        return a.is_identity().then_some(0);
    }
    let log_dominant = |m: &GlMatrix<T>| {
        let t = m.trace().to_f64()?.abs();
        let det = m.det().to_f64()?;
        Some(((t + (t * t - 4.0 * det).max(0.0).sqrt()) / 2.0).ln())
    };
    let ratio = log_dominant(a)? / log_dominant(a0)?;
    if !ratio.is_finite() {
        return None;
    }
    let one = Surd::from_int(T::one(), alpha.radicand().clone());
    let above = |l: &Surd<T>| l.sub(&one).sign() == Sign::Positive;
    let sign = if above(&lambda) == above(&lambda0) {
        1
    } else {
        -1
    };
    let guess = ratio.round() as i64;
    [guess, guess - 1, guess + 1]
        .into_iter()
        .map(|n| sign * n)
        .find(|&n| a0.pow(n) == *a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::parse;

    fn m(a: i64, b: i64, c: i64, d: i64) -> GlMatrix<i64> {
        GlMatrix::new(a, b, c, d).unwrap()
    }

    #[test]
    fn automorphism_predicate() {
        let r5 = parse::<i64>("sqrt(5)").unwrap();
        assert!(is_automorphism_matrix(&m(2, 1, 5, 2), &r5));
        assert!(is_automorphism_matrix(&GlMatrix::identity(), &r5));
        assert!(!is_automorphism_matrix(&m(0, 1, 1, 1), &r5));
        // eigenvector right, eigenvalue negative
        assert!(!is_automorphism_matrix(&m(-2, -1, -5, -2), &r5));
    }

    #[test]
    fn eigenvalues() {
        let r5 = parse::<i64>("sqrt(5)").unwrap();
        assert_eq!(
            eigen_check(&m(2, 1, 5, 2), &r5).unwrap().to_string(),
            "2+sqrt(5)"
        );
        assert_eq!(
            eigen_check(&GlMatrix::identity(), &r5).unwrap().to_string(),
            "1"
        );
        let phi = parse::<i64>("(1+sqrt(5))/2").unwrap();
        assert_eq!(
            eigen_check(&m(0, 1, 1, 1), &phi).unwrap(),
            phi.as_surd().clone()
        );
        assert!(matches!(
            eigen_check(&m(0, 1, 1, 1), &r5),
            Err(AutError::NotAutomorphism { .. })
        ));
    }

    #[test]
    fn powers_of_generator() {
        let r5 = parse::<i64>("sqrt(5)").unwrap();
        let a0 = m(2, 1, 5, 2);
        assert_eq!(power_of(&a0.pow(3), &a0, &r5), Some(3));
        assert_eq!(power_of(&a0.pow(-2), &a0, &r5), Some(-2));
        assert_eq!(power_of(&GlMatrix::identity(), &a0, &r5), Some(0));
        // the square root of a0 is not a power of a0
        assert_eq!(power_of(&a0, &a0.pow(2), &r5), None);
    }
}
