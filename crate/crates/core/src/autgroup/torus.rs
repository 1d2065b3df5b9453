//! Exact torus points and the semidirect product law.
//!
//! Torus points are stored as rational angles: `(t1, t2)` stands for
//! `(exp(2 pi i t1), exp(2 pi i t2))`, so the group law is exact.

use std::fmt;

use num_rational::Ratio;
use num_traits::Zero;

use super::AutError;
use crate::matrix::GlMatrix;
use crate::scalar::IntScalar;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TorusPoint<T: IntScalar> {
    t1: Ratio<T>,
    t2: Ratio<T>,
}

fn frac<T: IntScalar>(x: Ratio<T>) -> Ratio<T> {
    let f = x.floor();
    x - f
}

impl<T: IntScalar> TorusPoint<T> {
    /// Angles are reduced into `[0, 1)`.
    pub fn new(t1: Ratio<T>, t2: Ratio<T>) -> Self {
        TorusPoint {
            t1: frac(t1),
            t2: frac(t2),
        }
    }

    pub fn identity() -> Self {
        TorusPoint {
            t1: Ratio::zero(),
            t2: Ratio::zero(),
        }
    }

    pub fn t1(&self) -> &Ratio<T> {
        &self.t1
    }
    pub fn t2(&self) -> &Ratio<T> {
        &self.t2
    }

    pub fn is_identity(&self) -> bool {
        self.t1.is_zero() && self.t2.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        TorusPoint::new(self.t1.clone() + &other.t1, self.t2.clone() + &other.t2)
    }

    pub fn neg(&self) -> Self {
        TorusPoint::new(-self.t1.clone(), -self.t2.clone())
    }
}

impl<T: IntScalar> fmt::Display for TorusPoint<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.t1, self.t2)
    }
}

/// `psi_A(c1, c2) = (c1^a c2^b, c1^c c2^d)`, i.e. `A` acting on angles.
pub fn psi_action<T: IntScalar>(a: &GlMatrix<T>, c: &TorusPoint<T>) -> TorusPoint<T> {
    let r = |x: &T| Ratio::from_integer(x.clone());
    TorusPoint::new(
        r(a.m1()) * &c.t1 + r(a.n1()) * &c.t2,
        r(a.m2()) * &c.t1 + r(a.n2()) * &c.t2,
    )
}

/// Element `(c, k)` of `T^2 x|_psi Z` for a fixed generator `A0`, with
/// `(c, m)(d, n) = (c + psi^m(d), m + n)`.
///
/// Realized by composition operators, `(c, k)` is the automorphism
/// `pi(c) pi(A0)^(-k)`: composition operators multiply in the reverse
/// order of the maps they compose, which flips the sign of the exponent.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AutElement<T: IntScalar> {
    point: TorusPoint<T>,
    power: i64,
    generator: GlMatrix<T>,
}

impl<T: IntScalar> AutElement<T> {
    pub fn new(point: TorusPoint<T>, power: i64, generator: GlMatrix<T>) -> Self {
        AutElement {
            point,
            power,
            generator,
        }
    }

    pub fn identity(generator: GlMatrix<T>) -> Self {
        AutElement::new(TorusPoint::identity(), 0, generator)
    }

    pub fn point(&self) -> &TorusPoint<T> {
        &self.point
    }
    pub fn power(&self) -> i64 {
        self.power
    }
    pub fn generator(&self) -> &GlMatrix<T> {
        &self.generator
    }

    pub fn is_identity(&self) -> bool {
        self.power == 0 && self.point.is_identity()
    }

    pub fn multiply(&self, other: &Self) -> Result<Self, AutError> {
        if self.generator != other.generator {
            return Err(AutError::ContextMismatch(
                self.generator.to_string(),
                other.generator.to_string(),
            ));
        }
        let twisted = psi_action(&self.generator.pow(self.power), &other.point);
        Ok(AutElement::new(
            self.point.add(&twisted),
            self.power + other.power,
            self.generator.clone(),
        ))
    }

    /// `(c, m)^-1 = (-psi^(-m)(c), -m)`.
    pub fn inverse(&self) -> Self {
        let back = psi_action(&self.generator.pow(-self.power), &self.point);
        AutElement::new(back.neg(), -self.power, self.generator.clone())
    }
}

/// Closed form for `pi(A0)^k pi(c) pi(A0)^-k = pi(c')`: with
/// `A0^k = [[a, b], [c, d]]` and `D = det(A0^k)`,
/// `c' = (c1^(d/D) c2^(-b/D), c1^(-c/D) c2^(a/D))`.
pub fn conjugation_formula<T: IntScalar>(
    a0: &GlMatrix<T>,
    k: i64,
    c: &TorusPoint<T>,
) -> TorusPoint<T> {
    let ak = a0.pow(k);
    let det = Ratio::from_integer(ak.det());
    let r = |x: &T| Ratio::from_integer(x.clone()) / &det;
    TorusPoint::new(
        r(ak.n2()) * &c.t1 - r(ak.n1()) * &c.t2,
        -r(ak.m2()) * &c.t1 + r(ak.m1()) * &c.t2,
    )
}

/// Evaluate [`conjugation_formula`] and confirm it against the group law:
/// the operator `pi(A0)^k` is the element `x^-k` with `x = ((0, 0), 1)`, so
/// the conjugate is `x^-k (c, 0) x^k`.
pub fn conjugation_formula_check<T: IntScalar>(
    a0: &GlMatrix<T>,
    k: i64,
    c: &TorusPoint<T>,
) -> Result<TorusPoint<T>, AutError> {
    let closed = conjugation_formula(a0, k, c);
    let x_neg = AutElement::new(TorusPoint::identity(), -k, a0.clone());
    let x_pos = AutElement::new(TorusPoint::identity(), k, a0.clone());
    let middle = AutElement::new(c.clone(), 0, a0.clone());
    let conj = x_neg.multiply(&middle)?.multiply(&x_pos)?;
    if conj.power != 0 || conj.point != closed {
        return Err(AutError::Internal(format!(
            "conjugation mismatch for k = {k}, c = {c}: formula {closed}, group law {}",
            conj.point
        )));
    }
    Ok(closed)
}
