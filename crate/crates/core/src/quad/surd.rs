//! Elements of a fixed real quadratic field `Q(sqrt(d))`.

use std::fmt;

use super::Sign;
use crate::scalar::{gcd3, IntScalar};

/// `(a + b*sqrt(d)) / c` with `d` squarefree and at least 2.
///
/// Kept reduced: `c > 0` and `gcd(a, b, c) = 1`. Rational values (`b = 0`)
/// are allowed, which is what separates this from
/// [`QuadraticIrrational`](super::QuadraticIrrational). Mixing elements of
/// different fields is a logic error and panics.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Surd<T> {
    a: T,
    b: T,
    c: T,
    d: T,
}

/// Exact sign of `a + b*sqrt(d)` for `d` a positive nonsquare.
pub fn sign_of<T: IntScalar>(a: &T, b: &T, d: &T) -> Sign {
    let sa = Sign::of(a);
    let sb = Sign::of(b);
    match (sa, sb) {
        (Sign::Zero, s) | (s, Sign::Zero) => s,
        (x, y) if x == y => x,
        _ => {
            // opposite signs: the larger magnitude wins; never equal since d is nonsquare
            let lhs = a.clone() * a;
            let rhs = b.clone() * b * d;
            if lhs > rhs {
                sa
            } else {
                sb
            }
        }
    }
}

impl<T: IntScalar> Surd<T> {
    /// Build and reduce. `d` must already be squarefree and at least 2.
    pub fn new(a: T, b: T, c: T, d: T) -> Self {
        assert!(!c.is_zero(), "zero denominator in quadratic field element");
        let mut s = Surd { a, b, c, d };
        s.reduce();
        s
    }

    pub fn from_int(n: T, d: T) -> Self {
        Surd::new(n, T::zero(), T::one(), d)
    }

    pub fn from_ratio(num: T, den: T, d: T) -> Self {
        Surd::new(num, T::zero(), den, d)
    }

    /// `sqrt(d)` itself.
    pub fn root(d: T) -> Self {
        Surd::new(T::zero(), T::one(), T::one(), d)
    }

    fn reduce(&mut self) {
        if self.c.is_negative() {
            self.a = -self.a.clone();
            self.b = -self.b.clone();
            self.c = -self.c.clone();
        }
        let g = gcd3(&self.a, &self.b, &self.c);
        if !g.is_one() && !g.is_zero() {
            self.a = self.a.clone() / &g;
            self.b = self.b.clone() / &g;
            self.c = self.c.clone() / &g;
        }
    }

    pub fn rational_part(&self) -> (&T, &T) {
        (&self.a, &self.c)
    }

    pub fn a(&self) -> &T {
        &self.a
    }
    pub fn b(&self) -> &T {
        &self.b
    }
    pub fn c(&self) -> &T {
        &self.c
    }
    pub fn d(&self) -> &T {
        &self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.b.is_zero() && self.c.is_one()
    }

    pub fn sign(&self) -> Sign {
        sign_of(&self.a, &self.b, &self.d)
    }

    fn same_field(&self, other: &Self) {
        assert!(
            self.d == other.d,
            "mixing Q(sqrt({})) with Q(sqrt({}))",
            self.d,
            other.d
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.same_field(other);
        Surd::new(
            self.a.clone() * &other.c + other.a.clone() * &self.c,
            self.b.clone() * &other.c + other.b.clone() * &self.c,
            self.c.clone() * &other.c,
            self.d.clone(),
        )
    }

    pub fn neg(&self) -> Self {
        Surd {
            a: -self.a.clone(),
            b: -self.b.clone(),
            c: self.c.clone(),
            d: self.d.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.same_field(other);
        let a = self.a.clone() * &other.a + self.b.clone() * &other.b * &self.d;
        let b = self.a.clone() * &other.b + self.b.clone() * &other.a;
        Surd::new(a, b, self.c.clone() * &other.c, self.d.clone())
    }

    pub fn scale(&self, k: &T) -> Self {
        Surd::new(
            self.a.clone() * k,
            self.b.clone() * k,
            self.c.clone(),
            self.d.clone(),
        )
    }

    /// Galois conjugate `(a - b*sqrt(d)) / c`.
    pub fn conjugate(&self) -> Self {
        Surd {
            a: self.a.clone(),
            b: -self.b.clone(),
            c: self.c.clone(),
            d: self.d.clone(),
        }
    }

    /// Field norm as a reduced fraction `(num, den)`, `den > 0`.
    pub fn norm(&self) -> (T, T) {
        let num = self.a.clone() * &self.a - self.b.clone() * &self.b * &self.d;
        let den = self.c.clone() * &self.c;
        let g = num.gcd(&den);
        (num / &g, den / &g)
    }

    /// `None` on division by zero.
    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        self.same_field(other);
        if other.is_zero() {
            return None;
        }
        // x / y = x * conj(y) / N(y), with N(y) = (a^2 - b^2 d) / c^2
        let conj = other.conjugate();
        let top = self.mul(&conj);
        let n_num = other.a.clone() * &other.a - other.b.clone() * &other.b * &other.d;
        let n_den = other.c.clone() * &other.c;
        // top / (n_num / n_den) = top * n_den / n_num
        Some(Surd::new(
            top.a * &n_den,
            top.b * &n_den,
            top.c * &n_num,
            top.d,
        ))
    }

    /// Möbius action `(p*x + q) / (r*x + s)`; `None` at a pole.
    pub fn mobius(&self, p: &T, q: &T, r: &T, s: &T) -> Option<Self> {
        let d = self.d.clone();
        let num = self.scale(p).add(&Surd::from_int(q.clone(), d.clone()));
        let den = self.scale(r).add(&Surd::from_int(s.clone(), d));
        num.checked_div(&den)
    }

    /// Floor of the value, exactly.
    pub fn floor(&self) -> T {
        floor_general(&self.a, &self.b, &self.c, &self.d)
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        let c = self.c.to_f64().unwrap_or(f64::NAN);
        let d = self.d.to_f64().unwrap_or(f64::NAN);
        (a + b * d.sqrt()) / c
    }

    /// Express `self` in the basis `{1, beta}` as `m + n*beta` with rational
    /// coordinates; returns `((m_num, m_den), (n_num, n_den))`. `beta` must be
    /// irrational and in the same field.
    pub fn coordinates(&self, beta: &Self) -> ((T, T), (T, T)) {
        self.same_field(beta);
        assert!(!beta.is_rational(), "basis element must be irrational");
        // self = (a + b r)/c, beta = (u + v r)/w, r = sqrt(d)
        // n = (b/c) / (v/w) = b w / (c v); m = a/c - n u / w = (a v - b u) / (c v)
        let n_num = self.b.clone() * &beta.c;
        let n_den = self.c.clone() * &beta.b;
        let m_num = self.a.clone() * &beta.b - self.b.clone() * &beta.a;
        let m_den = self.c.clone() * &beta.b;
        (reduce_frac(m_num, m_den), reduce_frac(n_num, n_den))
    }
}

fn reduce_frac<T: IntScalar>(num: T, den: T) -> (T, T) {
    let g = num.gcd(&den);
    let (mut n, mut d) = (num / &g, den / &g);
    if d.is_negative() {
        n = -n;
        d = -d;
    }
    (n, d)
}

impl<T: IntScalar> fmt::Display for Surd<T> {
    /// Canonical grammar rendering: `u+v*sqrt(D)` wrapped as `(...)/w` when
    /// `w > 1`; rationals render as `a` or `a/c`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return if self.c.is_one() {
                write!(f, "{}", self.a)
            } else {
                write!(f, "{}/{}", self.a, self.c)
            };
        }
        let radical = if self.b.is_one() {
            format!("sqrt({})", self.d)
        } else if self.b == -T::one() {
            if self.a.is_zero() {
                format!("-1*sqrt({})", self.d)
            } else {
                format!("-sqrt({})", self.d)
            }
        } else {
            format!("{}*sqrt({})", self.b, self.d)
        };
        let body = if self.a.is_zero() {
            radical
        } else if self.b.is_positive() {
            format!("{}+{}", self.a, radical)
        } else {
            format!("{}{}", self.a, radical)
        };
        if self.c.is_one() {
            write!(f, "{body}")
        } else {
            write!(f, "({body})/{}", self.c)
        }
    }
}

/// Floor of `(a + b*sqrt(d))/c` where `d` need not be squarefree (only nonsquare).
pub(crate) fn floor_general<T: IntScalar>(a: &T, b: &T, c: &T, d: &T) -> T {
    debug_assert!(c.is_positive());
    let m = b.clone() * b * d;
    let r = m.sqrt();
    let exact = r.clone() * &r == m;
    let top = if b.is_negative() {
        // -sqrt(m) lies strictly inside (-(r+1), -r) unless m is a square
        if exact {
            a.clone() - &r
        } else {
            a.clone() - &r - T::one()
        }
    } else {
        a.clone() + &r
    };
    top.div_floor(c)
}
