//! The two radical shapes every positive quadratic irrational takes:
//! `sqrt(p/q)` or `r/s + k*sqrt(p/q)`.

use super::{QuadError, QuadraticIrrational};
use crate::scalar::IntScalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RadicalForm<T> {
    /// `sqrt(p/q)`, `gcd(p, q) = 1`.
    Sqrt { p: T, q: T },
    /// `r/s + k*sqrt(p/q)` with `gcd(r, s) = 1`, `r != 0`, `k = +-1`,
    /// `gcd(p, q) = 1`.
    Affine { r: T, s: T, k: i8, p: T, q: T },
}

fn lowest<T: IntScalar>(num: T, den: T) -> (T, T) {
    let g = num.gcd(&den);
    (num / &g, den / &g)
}

/// Decompose `alpha > 0`. The coefficient `v` and denominator `w` move under
/// the radical: `p/q = v^2 D / w^2`.
pub fn to_radical_form<T: IntScalar>(alpha: &QuadraticIrrational<T>) -> RadicalForm<T> {
    let (u, v, w, d) = (alpha.u(), alpha.v(), alpha.w(), alpha.radicand());
    let (p, q) = lowest(v.clone() * v * d, w.clone() * w);
    if u.is_zero() {
        debug_assert!(v.is_positive(), "positive pure radical");
        RadicalForm::Sqrt { p, q }
    } else {
        let (r, s) = lowest(u.clone(), w.clone());
        let k = if v.is_positive() { 1 } else { -1 };
        RadicalForm::Affine { r, s, k, p, q }
    }
}

impl<T: IntScalar> RadicalForm<T> {
    /// Rebuild the canonical value.
    pub fn to_quadratic(&self) -> Result<QuadraticIrrational<T>, QuadError> {
        match self {
            // sqrt(p/q) = sqrt(p q) / q
            RadicalForm::Sqrt { p, q } => {
                QuadraticIrrational::new(T::zero(), T::one(), q.clone(), p.clone() * q)
            }
            // r/s + k sqrt(p q)/q = (r q + k s sqrt(p q)) / (s q)
            RadicalForm::Affine { r, s, k, p, q } => {
                let ks = if *k > 0 { s.clone() } else { -s.clone() };
                QuadraticIrrational::new(r.clone() * q, ks, s.clone() * q, p.clone() * q)
            }
        }
    }

    /// `(p, q)` of the radical part.
    pub fn radical(&self) -> (&T, &T) {
        match self {
            RadicalForm::Sqrt { p, q } | RadicalForm::Affine { p, q, .. } => (p, q),
        }
    }

    pub fn is_even_denominator(&self) -> bool {
        match self {
            RadicalForm::Sqrt { .. } => false,
            RadicalForm::Affine { s, .. } => s.is_even(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::parse;

    #[test]
    fn decomposition_examples() {
        let f = to_radical_form(&parse::<i64>("sqrt(5)").unwrap());
        assert_eq!(f, RadicalForm::Sqrt { p: 5, q: 1 });
        let f = to_radical_form(&parse::<i64>("(1+sqrt(7))/3").unwrap());
        assert_eq!(
            f,
            RadicalForm::Affine {
                r: 1,
                s: 3,
                k: 1,
                p: 7,
                q: 9
            }
        );
        let f = to_radical_form(&parse::<i64>("(1+sqrt(5))/2").unwrap());
        assert_eq!(
            f,
            RadicalForm::Affine {
                r: 1,
                s: 2,
                k: 1,
                p: 5,
                q: 4
            }
        );
        let f = to_radical_form(&parse::<i64>("(6-2*sqrt(5))/4").unwrap());
        assert_eq!(
            f,
            RadicalForm::Affine {
                r: 3,
                s: 2,
                k: -1,
                p: 5,
                q: 4
            }
        );
    }

    #[test]
    fn round_trips() {
        for s in [
            "sqrt(5)",
            "(1+sqrt(7))/3",
            "(3*sqrt(2))/4",
            "5-2*sqrt(6)",
            "(-1+sqrt(13))/6",
        ] {
            let q = parse::<i64>(s).unwrap();
            assert_eq!(to_radical_form(&q).to_quadratic().unwrap(), q, "{s}");
        }
    }
}
