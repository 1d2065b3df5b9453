//! Scalar traits shared by the exact and floating-point parts of the crate.
//!
//! Exact code is written against [`IntScalar`], which `BigInt`, `i64` and
//! `i128` all satisfy. The crate root fixes `BigInt` for the public aliases;
//! the machine-word instantiations exist for hot brute-force loops where the
//! magnitudes are known to be small. Those follow Rust's overflow rules, so
//! only trust them where every intermediate fits: the Pell solver and the
//! continued-fraction witness search outgrow `i128` on modest inputs.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::{Integer, Roots};
use num_traits::{Float, FromPrimitive, NumRef, Signed, ToPrimitive};

/// Integer type usable for exact quadratic-field arithmetic.
pub trait IntScalar:
    Integer
    + Signed
    + Roots
    + NumRef
    + Clone
    + Hash
    + Debug
    + Display
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
}

impl<T> IntScalar for T where
    T: Integer
        + Signed
        + Roots
        + NumRef
        + Clone
        + Hash
        + Debug
        + Display
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}

/// Floating type used for Fourier coefficients: f32 or f64.
pub trait FloatScalar: Float + FromPrimitive + Debug + Display + Send + Sync + 'static {}
impl FloatScalar for f32 {}
impl FloatScalar for f64 {}

/// Lift a small machine integer into `T`.
#[inline]
pub fn int<T: IntScalar>(v: i64) -> T {
    T::from_i64(v).expect("small integer literal fits every IntScalar")
}

/// `Some(r)` when `n = r^2` with `r >= 0`.
pub fn exact_sqrt<T: IntScalar>(n: &T) -> Option<T> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if r.clone() * &r == *n {
        Some(r)
    } else {
        None
    }
}

pub fn is_square<T: IntScalar>(n: &T) -> bool {
    exact_sqrt(n).is_some()
}

/// Split a positive integer as `k^2 * d` with `d` squarefree; returns `(k, d)`.
///
/// Trial division; meant for radicands that come from user input or small
/// corpora, not for factoring large numbers.
pub fn square_split<T: IntScalar>(n: &T) -> (T, T) {
    assert!(n.is_positive(), "square_split needs a positive integer");
    let mut rest = n.clone();
    let mut outside = T::one();
    let mut inside = T::one();
    let mut f: T = int(2);
    while f.clone() * &f <= rest {
        let mut e = 0u32;
        while (rest.clone() % &f).is_zero() {
            rest = rest / &f;
            e += 1;
        }
        for _ in 0..e / 2 {
            outside = outside * &f;
        }
        if e % 2 == 1 {
            inside = inside * &f;
        }
        f = f + T::one();
    }
    // whatever is left is a prime (or one)
    inside = inside * &rest;
    (outside, inside)
}

pub fn gcd3<T: IntScalar>(a: &T, b: &T, c: &T) -> T {
    a.gcd(b).gcd(c)
}

/// Convert between integer scalars, failing when the value does not fit.
pub fn convert<S: IntScalar, T: IntScalar>(v: &S) -> Option<T> {
    if let Some(x) = v.to_i128() {
        return T::from_i128(x);
    }
    // beyond i128: route through the decimal rendering
    T::from_str_radix(&v.to_string(), 10).ok()
}
