//! Bounded GL(2, Z) conjugacy and automorphism-group isomorphism.
//!
//! `Aut(A_alpha)` and `Aut(A_beta)` are isomorphic iff the generators satisfy
//! `B = C^-1 A C` or `B^-1 = C^-1 A C` for some `C` in GL(2, Z). The search
//! here is bounded, so besides yes and no it can answer "unknown".

use std::cmp::Reverse;
use std::fmt;

use crate::autgroup::{generator, AutError};
use crate::matrix::GlMatrix;
use crate::quad::QuadraticIrrational;
use crate::scalar::{int, IntScalar};

pub const DEFAULT_BOUND: u64 = 100;

/// An invariant that similar matrices share but these two do not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Mismatch {
    Determinant(String, String),
    Trace(String, String),
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mismatch::Determinant(a, b) => write!(f, "determinant {a} vs {b}"),
            Mismatch::Trace(a, b) => write!(f, "trace {a} vs {b}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConjugacyVerdict<T: IntScalar> {
    /// `C^-1 A C = B`, checked by multiplication.
    Yes(GlMatrix<T>),
    No(Mismatch),
    /// No conjugator with entries up to `bound` in absolute value.
    Unknown {
        bound: u64,
    },
}

impl<T: IntScalar> ConjugacyVerdict<T> {
    pub fn is_yes(&self) -> bool {
        matches!(self, ConjugacyVerdict::Yes(_))
    }
    pub fn is_no(&self) -> bool {
        matches!(self, ConjugacyVerdict::No(_))
    }
}

fn invariant_mismatch<T: IntScalar>(a: &GlMatrix<T>, b: &GlMatrix<T>) -> Option<Mismatch> {
    if a.det() != b.det() {
        return Some(Mismatch::Determinant(
            a.det().to_string(),
            b.det().to_string(),
        ));
    }
    if a.trace() != b.trace() {
        return Some(Mismatch::Trace(
            a.trace().to_string(),
            b.trace().to_string(),
        ));
    }
    None
}

/// Integer solutions `(z, t)` with `|z|, |t| <= bound` of the rows
/// `cz*z + ct*t = r`.
fn solve_pair<T: IntScalar>(rows: &[(T, T, T); 4], bound: &T, out: &mut Vec<(T, T)>) {
    let satisfies = |z: &T, t: &T| {
        rows.iter()
            .all(|(cz, ct, r)| cz.clone() * z + ct.clone() * t == *r)
    };
    let in_range = |v: &T| v.abs() <= *bound;
    // a nonsingular pair of rows pins the solution down
    for i in 0..4 {
        for j in i + 1..4 {
            let (a, b, e) = &rows[i];
            let (c, d, f) = &rows[j];
            let det = a.clone() * d - b.clone() * c;
            if det.is_zero() {
                continue;
            }
            let zn = e.clone() * d - b.clone() * f;
            let tn = a.clone() * f - e.clone() * c;
            if !(zn.clone() % &det).is_zero() || !(tn.clone() % &det).is_zero() {
                return;
            }
            let (z, t) = (zn / &det, tn / &det);
            if in_range(&z) && in_range(&t) && satisfies(&z, &t) {
                out.push((z, t));
            }
            return;
        }
    }
    // rank at most one: enumerate the free variable
    let mut z = -bound.clone();
    while z <= *bound {
        match rows.iter().find(|(_, ct, _)| !ct.is_zero()) {
            Some((cz, ct, r)) => {
                let num = r.clone() - cz.clone() * &z;
                if (num.clone() % ct).is_zero() {
                    let t = num / ct;
                    if in_range(&t) && satisfies(&z, &t) {
                        out.push((z.clone(), t));
                    }
                }
            }
            None => {
                let mut t = -bound.clone();
                while t <= *bound {
                    if satisfies(&z, &t) {
                        out.push((z.clone(), t.clone()));
                    }
                    t = t + T::one();
                }
            }
        }
        z = z + T::one();
    }
}

/// Look for `C` with `C^-1 A C = B` and `|entries| <= bound`.
///
/// The first column `(x, y)` of `C` is enumerated in growing shells
/// `max(|x|, |y|) = 1, 2, ...`; `AC = CB` is linear in the second column, which
/// is solved for directly. Within the first shell that has any conjugator,
/// the one with the smallest entries is returned.
pub fn gl2_conjugate<T: IntScalar>(
    a: &GlMatrix<T>,
    b: &GlMatrix<T>,
    bound: u64,
) -> ConjugacyVerdict<T> {
    if let Some(m) = invariant_mismatch(a, b) {
        return ConjugacyVerdict::No(m);
    }
    let bound_t: T = int(bound as i64);
    let (a1, b1, c1, d1) = (a.m1(), a.n1(), a.m2(), a.n2());
    let (a2, b2, c2, d2) = (b.m1(), b.n1(), b.m2(), b.n2());
    let mut pairs = Vec::new();
    for shell in 1..=bound as i64 {
        let mut found: Vec<GlMatrix<T>> = Vec::new();
        for (xi, yi) in shell_points(shell) {
            let (x, y): (T, T) = (int(xi), int(yi));
            // C = [[x, z], [y, t]]; AC = CB row by row
            let rows = [
                (
                    c2.clone(),
                    T::zero(),
                    (a1.clone() - a2) * &x + b1.clone() * &y,
                ),
                (a1.clone() - d2, b1.clone(), b2.clone() * &x),
                (
                    T::zero(),
                    c2.clone(),
                    c1.clone() * &x + (d1.clone() - a2) * &y,
                ),
                (c1.clone(), d1.clone() - d2, b2.clone() * &y),
            ];
            pairs.clear();
            solve_pair(&rows, &bound_t, &mut pairs);
            for (z, t) in pairs.drain(..) {
                if let Ok(c) = GlMatrix::new(x.clone(), z, y.clone(), t) {
                    found.push(c);
                }
            }
        }
        if let Some(c) = found.into_iter().min_by_key(preference) {
            debug_assert!(c.inverse().mul(a).mul(&c) == *b);
            return ConjugacyVerdict::Yes(c);
        }
    }
    ConjugacyVerdict::Unknown { bound }
}

fn shell_points(s: i64) -> impl Iterator<Item = (i64, i64)> {
    (-s..=s).flat_map(move |x| {
        (-s..=s)
            .filter(move |y| x.abs() == s || y.abs() == s)
            .map(move |y| (x, y))
    })
}

/// Small entries first, then few negative entries, then larger entries
/// first so `diag(1, -1)` beats `diag(-1, 1)`.
fn preference<T: IntScalar>(c: &GlMatrix<T>) -> (T, T, usize, Reverse<[T; 4]>) {
    let e = c.entries();
    let sum = e.iter().fold(T::zero(), |acc, v| acc + v.abs());
    let neg = e.iter().filter(|v| v.is_negative()).count();
    (c.max_abs(), sum, neg, Reverse(e.map(|v| v.clone())))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AutIsoVerdict<T: IntScalar> {
    /// `C^-1 A C` equals `B`, or `B^-1` when `inverted`.
    Yes {
        conjugator: GlMatrix<T>,
        inverted: bool,
    },
    No {
        direct: Mismatch,
        inverse: Mismatch,
    },
    Unknown {
        bound: u64,
    },
}

/// Compare the automorphism groups of `A_alpha` and `A_beta` through their
/// generators.
pub fn aut_isomorphic<T: IntScalar>(
    alpha: &QuadraticIrrational<T>,
    beta: &QuadraticIrrational<T>,
    bound: u64,
) -> Result<AutIsoVerdict<T>, AutError> {
    let a = generator(alpha)?;
    let b = generator(beta)?;
    aut_isomorphic_generators(&a, &b, bound)
}

/// [`aut_isomorphic`] for generators already at hand.
pub fn aut_isomorphic_generators<T: IntScalar>(
    a: &GlMatrix<T>,
    b: &GlMatrix<T>,
    bound: u64,
) -> Result<AutIsoVerdict<T>, AutError> {
    let direct = gl2_conjugate(a, b, bound);
    if let ConjugacyVerdict::Yes(c) = direct {
        return Ok(AutIsoVerdict::Yes {
            conjugator: c,
            inverted: false,
        });
    }
    let inverse = gl2_conjugate(a, &b.inverse(), bound);
    Ok(match (direct, inverse) {
        (_, ConjugacyVerdict::Yes(c)) => AutIsoVerdict::Yes {
            conjugator: c,
            inverted: true,
        },
        (ConjugacyVerdict::No(d), ConjugacyVerdict::No(i)) => AutIsoVerdict::No {
            direct: d,
            inverse: i,
        },
        _ => AutIsoVerdict::Unknown { bound },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::parse;

    fn m(a: i64, b: i64, c: i64, d: i64) -> GlMatrix<i64> {
        GlMatrix::new(a, b, c, d).unwrap()
    }

    #[test]
    fn conjugacy_examples() {
        assert_eq!(
            gl2_conjugate(&m(2, 1, 5, 2), &m(0, 1, 1, 1), 100),
            ConjugacyVerdict::No(Mismatch::Trace("4".into(), "1".into()))
        );
        let a = m(8, 3, 21, 8);
        assert_eq!(
            gl2_conjugate(&a, &a, 100),
            ConjugacyVerdict::Yes(GlMatrix::identity())
        );
        assert_eq!(
            gl2_conjugate(&m(0, 1, 1, 1), &m(1, 1, 1, 0), 100),
            ConjugacyVerdict::Yes(m(0, 1, 1, 0))
        );
        assert_eq!(
            gl2_conjugate(&a, &a.inverse(), 100),
            ConjugacyVerdict::Yes(m(1, 0, 0, -1))
        );
    }

    #[test]
    fn degenerate_systems_enumerate() {
        let i = GlMatrix::<i64>::identity();
        assert_eq!(gl2_conjugate(&i, &i, 3), ConjugacyVerdict::Yes(i.clone()));
        // a parabolic pair: [[1,1],[0,1]] and [[1,-1],[0,1]] via diag(1,-1)
        assert!(gl2_conjugate(&m(1, 1, 0, 1), &m(1, -1, 0, 1), 5).is_yes());
        // same invariants, different classes
        assert_eq!(
            gl2_conjugate(&m(1, 2, 0, 1), &m(1, 1, 0, 1), 20),
            ConjugacyVerdict::Unknown { bound: 20 }
        );
    }

    #[test]
    fn aut_iso_examples() {
        let q = |s: &str| parse::<i64>(s).unwrap();
        let r5 = q("sqrt(5)");
        assert!(matches!(
            aut_isomorphic(&r5, &r5, 100).unwrap(),
            AutIsoVerdict::Yes { .. }
        ));
        assert!(matches!(
            aut_isomorphic(&r5, &q("(1+sqrt(5))/2"), 100).unwrap(),
            AutIsoVerdict::No { .. }
        ));
        assert!(matches!(
            aut_isomorphic(&r5, &q("2+sqrt(5)"), 100).unwrap(),
            AutIsoVerdict::Yes { .. }
        ));
    }
}
