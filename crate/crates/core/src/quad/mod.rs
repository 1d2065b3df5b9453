//! Exact positive quadratic irrationals: normal form, parsing, radical
//! decomposition, sign decisions and continued fractions.

mod cf;
mod parse;
mod radical;
mod surd;

use std::fmt;

use num_traits::Signed;
use thiserror::Error;

use crate::matrix::GlMatrix;
use crate::scalar::{gcd3, square_split, IntScalar};

pub use cf::{continued_fraction, ContinuedFraction, SurdState};
pub use parse::{parse, parse_expression, ParsedValue};
pub use radical::{to_radical_form, RadicalForm};
pub use surd::{sign_of, Surd};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuadError {
    #[error("syntax error at offset {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("value {0} is rational")]
    Rational(String),
    #[error("value {0} is not positive")]
    NonPositive(String),
    #[error("negative radicand {0}")]
    NegativeRadicand(String),
    #[error("division by zero")]
    ZeroDivision,
    #[error("value involves more than one square root class and is not a quadratic irrational")]
    NotQuadratic,
    #[error("integer literal {0} does not fit the scalar type")]
    Overflow(String),
}

/// Exact three-way sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of<T: Signed>(x: &T) -> Sign {
        if x.is_positive() {
            Sign::Positive
        } else if x.is_negative() {
            Sign::Negative
        } else {
            Sign::Zero
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }
}

impl std::ops::Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

/// An irrational element `(u + v*sqrt(D)) / w` of a real quadratic field.
///
/// Canonical: `D` squarefree and at least 2, `w >= 1`, `v != 0` and
/// `gcd(u, v, w) = 1`, so equal values have identical fields. Values built
/// by [`normalize`] or [`parse`] are additionally positive; the general
/// constructor [`QuadraticIrrational::new`] allows either sign because
/// intermediate complete quotients and conjugates are needed internally.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QuadraticIrrational<T>(Surd<T>);

impl<T: IntScalar> QuadraticIrrational<T> {
    /// Normal form of `(u + v*sqrt(radicand)) / w`, of any sign.
    pub fn new(u: T, v: T, w: T, radicand: T) -> Result<Self, QuadError> {
        if w.is_zero() {
            return Err(QuadError::ZeroDivision);
        }
        if radicand.is_negative() {
            return Err(QuadError::NegativeRadicand(radicand.to_string()));
        }
        if radicand.is_zero() || v.is_zero() {
            return Err(QuadError::Rational(fraction_text(&u, &w)));
        }
        let (outside, inside) = square_split(&radicand);
        let v = v * &outside;
        if inside.is_one() {
            return Err(QuadError::Rational(fraction_text(&(u + v), &w)));
        }
        Ok(QuadraticIrrational(Surd::new(u, v, w, inside)))
    }

    /// Wrap a field element, rejecting rationals.
    pub fn from_surd(s: Surd<T>) -> Result<Self, QuadError> {
        if s.is_rational() {
            Err(QuadError::Rational(s.to_string()))
        } else {
            Ok(QuadraticIrrational(s))
        }
    }

    pub fn u(&self) -> &T {
        self.0.a()
    }
    pub fn v(&self) -> &T {
        self.0.b()
    }
    pub fn w(&self) -> &T {
        self.0.c()
    }
    /// The squarefree radicand `D`.
    pub fn radicand(&self) -> &T {
        self.0.d()
    }

    pub fn as_surd(&self) -> &Surd<T> {
        &self.0
    }

    pub fn into_surd(self) -> Surd<T> {
        self.0
    }

    pub fn sign(&self) -> Sign {
        self.0.sign()
    }

    pub fn is_positive(&self) -> bool {
        self.sign() == Sign::Positive
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }

    /// Change the integer scalar, `None` on overflow.
    pub fn convert<S: IntScalar>(&self) -> Option<QuadraticIrrational<S>> {
        use crate::scalar::convert;
        Some(QuadraticIrrational(Surd::new(
            convert(self.u())?,
            convert(self.v())?,
            convert(self.w())?,
            convert(self.radicand())?,
        )))
    }
}

fn fraction_text<T: IntScalar>(num: &T, den: &T) -> String {
    let g = num.gcd(den);
    let (mut n, mut d) = (num.clone() / &g, den.clone() / &g);
    if d.is_negative() {
        n = -n;
        d = -d;
    }
    if d.is_one() {
        n.to_string()
    } else {
        format!("{n}/{d}")
    }
}

impl<T: IntScalar> fmt::Display for QuadraticIrrational<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Canonical positive quadratic irrational from raw components.
///
/// Square factors of the radicand move into `v`, the denominator is made
/// positive and the common content is divided out. Rational and nonpositive
/// values are rejected.
pub fn normalize<T: IntScalar>(
    u: T,
    v: T,
    w: T,
    radicand: T,
) -> Result<QuadraticIrrational<T>, QuadError> {
    let q = QuadraticIrrational::new(u, v, w, radicand)?;
    if !q.is_positive() {
        return Err(QuadError::NonPositive(q.to_string()));
    }
    Ok(q)
}

/// Exact sign of `m + n*alpha`, using integer comparisons only.
pub fn sign_linear<T: IntScalar>(m: &T, n: &T, alpha: &QuadraticIrrational<T>) -> Sign {
    // w > 0, so sign(m + n (u + v sqrt D)/w) = sign((m w + n u) + n v sqrt D)
    let a = m.clone() * alpha.w() + n.clone() * alpha.u();
    let b = n.clone() * alpha.v();
    sign_of(&a, &b, alpha.radicand())
}

/// Sign of `n1*alpha^2 + (m1 - n2)*alpha - m2` for `A = [[m1, n1], [m2, n2]]`.
///
/// Zero exactly when `[1, alpha]` is an eigenvector of `A`.
pub fn eval_quadratic<T: IntScalar>(a: &GlMatrix<T>, alpha: &QuadraticIrrational<T>) -> Sign {
    let x = alpha.as_surd();
    let d = x.d().clone();
    let value = x
        .mul(x)
        .scale(a.n1())
        .add(&x.scale(&(a.m1().clone() - a.n2())))
        .sub(&Surd::from_int(a.m2().clone(), d));
    value.sign()
}

/// `gcd(u, v, w) == 1` check exposed for property tests.
pub fn is_reduced<T: IntScalar>(q: &QuadraticIrrational<T>) -> bool {
    gcd3(q.u(), q.v(), q.w()).is_one() && q.w().is_positive() && !q.v().is_zero()
}
