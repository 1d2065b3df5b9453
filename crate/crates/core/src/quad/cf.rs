//! Periodic continued fractions of quadratic irrationals.
//!
//! Complete quotients are tracked as integer triples `(P, Q, d)` standing for
//! `(P + sqrt(d)) / Q`, with `Q | d - P^2` maintained so every step stays
//! integral. The expansion stops at the first repeated triple, which makes
//! both the preperiod and the period minimal.

use std::collections::HashMap;

use super::{QuadError, QuadraticIrrational, Surd};
use crate::matrix::GlMatrix;
use crate::scalar::IntScalar;

/// Complete quotient `(p + sqrt(d)) / q`; `d` positive and nonsquare.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SurdState<T> {
    pub p: T,
    pub q: T,
    pub d: T,
}

impl<T: IntScalar> SurdState<T> {
    /// Scale so that `q | d - p^2`.
    pub fn new(p: T, q: T, d: T) -> Self {
        assert!(!q.is_zero());
        let diff = d.clone() - p.clone() * &p;
        if (diff % &q).is_zero() {
            SurdState { p, q, d }
        } else {
            let aq = q.abs();
            SurdState {
                p: p * &aq,
                d: d * &aq * &aq,
                q: q * &aq,
            }
        }
    }

    pub fn from_quadratic(alpha: &QuadraticIrrational<T>) -> Self {
        let d = alpha.v().clone() * alpha.v() * alpha.radicand();
        if alpha.v().is_positive() {
            SurdState::new(alpha.u().clone(), alpha.w().clone(), d)
        } else {
            // (u - sqrt(d))/w = (-u + sqrt(d)) / (-w)
            SurdState::new(-alpha.u().clone(), -alpha.w().clone(), d)
        }
    }

    /// `sqrt(n)` for a positive nonsquare `n`.
    pub fn sqrt(n: T) -> Self {
        SurdState::new(T::zero(), T::one(), n)
    }

    pub fn floor(&self) -> T {
        let r = self.d.sqrt();
        if self.q.is_positive() {
            (self.p.clone() + r).div_floor(&self.q)
        } else {
            (self.p.clone() + r + T::one()).div_floor(&self.q)
        }
    }

    /// Partial quotient and the next complete quotient.
    pub fn step(&self) -> (T, SurdState<T>) {
        let a = self.floor();
        let p = a.clone() * &self.q - &self.p;
        let q = (self.d.clone() - p.clone() * &p) / &self.q;
        (
            a,
            SurdState {
                p,
                q,
                d: self.d.clone(),
            },
        )
    }

    pub fn expand(&self) -> ContinuedFraction<T> {
        let mut seen: HashMap<(T, T), usize> = HashMap::new();
        let mut terms = Vec::new();
        let mut state = self.clone();
        loop {
            if let Some(&start) = seen.get(&(state.p.clone(), state.q.clone())) {
                let period = terms.split_off(start);
                return ContinuedFraction {
                    preperiod: terms,
                    period,
                    radicand: self.d.clone(),
                };
            }
            seen.insert((state.p.clone(), state.q.clone()), terms.len());
            let (a, next) = state.step();
            terms.push(a);
            state = next;
        }
    }
}

/// `preperiod` followed by `period` repeated forever.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ContinuedFraction<T> {
    pub preperiod: Vec<T>,
    pub period: Vec<T>,
    /// `d` of the complete quotients `(P + sqrt(d)) / Q`; not squarefree in
    /// general, but small, unlike the discriminant rebuilt from the period.
    pub radicand: T,
}

/// Expansion of a quadratic irrational.
pub fn continued_fraction<T: IntScalar>(alpha: &QuadraticIrrational<T>) -> ContinuedFraction<T> {
    SurdState::from_quadratic(alpha).expand()
}

impl<T: IntScalar> ContinuedFraction<T> {
    /// The `i`-th partial quotient.
    pub fn term(&self, i: usize) -> &T {
        if i < self.preperiod.len() {
            &self.preperiod[i]
        } else {
            &self.period[(i - self.preperiod.len()) % self.period.len()]
        }
    }

    /// Product of `[[a_i, 1], [1, 0]]` over the first `len` terms, i.e.
    /// `[[p_{len-1}, p_{len-2}], [q_{len-1}, q_{len-2}]]`. The number equals
    /// this matrix applied (as a Möbius map) to its `len`-th complete quotient.
    pub fn prefix_matrix(&self, len: usize) -> GlMatrix<T> {
        let mut m = GlMatrix::identity();
        for i in 0..len {
            m = m.mul(&partial_quotient_matrix(self.term(i).clone()));
        }
        m
    }

    /// Convergents `p_k / q_k` for `k < count`.
    pub fn convergents(&self, count: usize) -> Vec<(T, T)> {
        let (mut p0, mut p1) = (T::zero(), T::one()); // p_{-2}, p_{-1}
        let (mut q0, mut q1) = (T::one(), T::zero());
        let mut out = Vec::with_capacity(count);
        for i in 0..count {
            let a = self.term(i);
            let p = a.clone() * &p1 + &p0;
            let q = a.clone() * &q1 + &q0;
            p0 = std::mem::replace(&mut p1, p.clone());
            q0 = std::mem::replace(&mut q1, q.clone());
            out.push((p, q));
        }
        out
    }

    /// The purely periodic tail `[period; period; ...]` as an exact value.
    pub fn tail_value(&self) -> Result<QuadraticIrrational<T>, QuadError> {
        let m = mobius_product(&self.period);
        let (p, pp, q, qq) = (m.m1(), m.n1(), m.m2(), m.n2());
        // x = (p x + pp) / (q x + qq)  =>  q x^2 + (qq - p) x - pp = 0, x > 1
        let b = p.clone() - qq;
        let disc = b.clone() * &b + T::from_i64(4).expect("4") * q * pp;
        // disc / d is a rational square, so sqrt(disc) = (r / d) sqrt(d) with
        // r = sqrt(disc d); this avoids factoring the large discriminant
        let d = &self.radicand;
        let r = (disc * d).sqrt();
        let two_q = q.clone() + q;
        QuadraticIrrational::new(b * d, r, two_q * d, d.clone())
    }

    /// Value of the whole expansion, folding the preperiod onto the tail.
    pub fn value(&self) -> Result<QuadraticIrrational<T>, QuadError> {
        let tail = self.tail_value()?;
        let m = mobius_product(&self.preperiod);
        apply_mobius(&m, tail.as_surd())
            .ok_or(QuadError::ZeroDivision)
            .and_then(QuadraticIrrational::from_surd)
    }
}

pub(crate) fn partial_quotient_matrix<T: IntScalar>(a: T) -> GlMatrix<T> {
    GlMatrix::new(a, T::one(), T::one(), T::zero()).expect("determinant -1")
}

fn mobius_product<T: IntScalar>(terms: &[T]) -> GlMatrix<T> {
    terms.iter().fold(GlMatrix::identity(), |m, a| {
        m.mul(&partial_quotient_matrix(a.clone()))
    })
}

/// `x -> (m1 x + n1) / (m2 x + n2)`.
pub(crate) fn apply_mobius<T: IntScalar>(m: &GlMatrix<T>, x: &Surd<T>) -> Option<Surd<T>> {
    x.mobius(m.m1(), m.n1(), m.m2(), m.n2())
}
