//! Trigonometric polynomials on `T^2` as a finite model of `A_alpha`.
//!
//! A polynomial is a finite map `(m, n) -> coefficient` of the characters
//! `z^m w^n`. Coefficients are floating complex numbers, but every decision
//! about supports (membership, annihilation under substitution) is made on the
//! integer indices with exact arithmetic.

mod io;

use std::collections::BTreeMap;
use std::ops::{Add, Mul};

use num_complex::Complex;
use num_traits::{One, Zero};
use thiserror::Error;

pub use io::{read_json, read_text, write_json, write_text};

use crate::autgroup::TorusPoint;
use crate::matrix::GlMatrix;
use crate::quad::{sign_linear, QuadraticIrrational, Sign};
use crate::scalar::{FloatScalar, IntScalar};

/// Coefficients with modulus below this are dropped.
pub const PRUNE_THRESHOLD: f64 = 1e-15;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FourierError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("index overflow: {0}")]
    Overflow(String),
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct TrigPoly<F: FloatScalar> {
    coeffs: BTreeMap<(i64, i64), Complex<F>>,
}

fn negligible<F: FloatScalar>(z: &Complex<F>) -> bool {
    z.norm() < F::from_f64(PRUNE_THRESHOLD).expect("threshold")
}

impl<F: FloatScalar> TrigPoly<F> {
    pub fn zero() -> Self {
        TrigPoly {
            coeffs: BTreeMap::new(),
        }
    }

    /// `z^m w^n`.
    pub fn character(m: i64, n: i64) -> Self {
        Self::from_terms([((m, n), Complex::one())])
    }

    pub fn constant(c: Complex<F>) -> Self {
        Self::from_terms([((0, 0), c)])
    }

    /// Sum of terms; repeated indices accumulate.
    pub fn from_terms(terms: impl IntoIterator<Item = ((i64, i64), Complex<F>)>) -> Self {
        let mut p = Self::zero();
        for (k, c) in terms {
            p.add_term(k, c);
        }
        p
    }

    fn add_term(&mut self, k: (i64, i64), c: Complex<F>) {
        let entry = self.coeffs.entry(k).or_insert_with(Complex::zero);
        *entry = *entry + c;
        if negligible(entry) {
            self.coeffs.remove(&k);
        }
    }

    pub fn coeff(&self, m: i64, n: i64) -> Complex<F> {
        self.coeffs
            .get(&(m, n))
            .copied()
            .unwrap_or_else(Complex::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs.keys().copied()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((i64, i64), Complex<F>)> + '_ {
        self.coeffs.iter().map(|(k, c)| (*k, *c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Same as [`TrigPoly::is_zero`]: no stored coefficients.
    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn scale(&self, s: Complex<F>) -> Self {
        Self::from_terms(self.terms().map(|(k, c)| (k, c * s)))
    }

    /// Largest `|c|` difference over the union of supports.
    pub fn distance(&self, other: &Self) -> F {
        self.support()
            .chain(other.support())
            .map(|(m, n)| (self.coeff(m, n) - other.coeff(m, n)).norm())
            .fold(F::zero(), F::max)
    }
}

impl<F: FloatScalar> Add for &TrigPoly<F> {
    type Output = TrigPoly<F>;
    fn add(self, rhs: Self) -> TrigPoly<F> {
        let mut out = self.clone();
        for (k, c) in rhs.terms() {
            out.add_term(k, c);
        }
        out
    }
}

/// Pointwise product: convolution of the coefficient maps.
impl<F: FloatScalar> Mul for &TrigPoly<F> {
    type Output = TrigPoly<F>;
    fn mul(self, rhs: Self) -> TrigPoly<F> {
        let mut out = TrigPoly::zero();
        for ((m1, n1), a) in self.terms() {
            for ((m2, n2), b) in rhs.terms() {
                out.add_term((m1 + m2, n1 + n2), a * b);
            }
        }
        out
    }
}

/// A pair of unimodular constants `(c1, c2)` acting on characters by
/// `z^m w^n -> c1^m c2^n z^m w^n`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Phase<F: FloatScalar> {
    pub c1: Complex<F>,
    pub c2: Complex<F>,
}

impl<F: FloatScalar> Phase<F> {
    pub fn new(c1: Complex<F>, c2: Complex<F>) -> Self {
        Phase { c1, c2 }
    }

    pub fn identity() -> Self {
        Phase::new(Complex::one(), Complex::one())
    }

    /// `(exp(2 pi i t1), exp(2 pi i t2))`.
    pub fn from_angles(t1: f64, t2: f64) -> Self {
        Phase::new(unit(t1), unit(t2))
    }

    pub fn from_torus<T: IntScalar>(c: &TorusPoint<T>) -> Self {
        let angle = |r: &num_rational::Ratio<T>| {
            r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
        };
        Phase::from_angles(angle(c.t1()), angle(c.t2()))
    }

    fn factor(&self, m: i64, n: i64) -> Result<Complex<F>, FourierError> {
        Ok(power(self.c1, m)? * power(self.c2, n)?)
    }
}

/// `exp(2 pi i t)`, exact at quarter turns.
fn unit<F: FloatScalar>(t: f64) -> Complex<F> {
    let quarters = 4.0 * (t - t.floor());
    let f = |x: f64| F::from_f64(x).expect("finite");
    if quarters == quarters.round() {
        return match quarters as i64 % 4 {
            0 => Complex::new(f(1.0), f(0.0)),
            1 => Complex::new(f(0.0), f(1.0)),
            2 => Complex::new(f(-1.0), f(0.0)),
            _ => Complex::new(f(0.0), f(-1.0)),
        };
    }
    let theta = 2.0 * std::f64::consts::PI * t;
    Complex::new(f(theta.cos()), f(theta.sin()))
}

fn power<F: FloatScalar>(c: Complex<F>, k: i64) -> Result<Complex<F>, FourierError> {
    let k = i32::try_from(k).map_err(|_| FourierError::Overflow(format!("exponent {k}")))?;
    Ok(c.powi(k))
}

/// `f` lies in `A_alpha` iff `m + alpha*n >= 0` on its whole support.
pub fn in_algebra<F: FloatScalar, T: IntScalar>(
    f: &TrigPoly<F>,
    alpha: &QuadraticIrrational<T>,
) -> bool {
    f.support().all(|(m, n)| {
        let (m, n) = (T::from_i64(m).expect("i64"), T::from_i64(n).expect("i64"));
        sign_linear(&m, &n, alpha) != Sign::Negative
    })
}

fn entry_i64<T: IntScalar>(x: &T) -> Result<i64, FourierError> {
    x.to_i64()
        .ok_or_else(|| FourierError::Overflow(format!("matrix entry {x}")))
}

/// Composition with `(z, w) -> (c1 z^m1 w^n1, c2 z^m2 w^n2)`: the character
/// `(m, n)` goes to `(m*m1 + n*m2, m*n1 + n*n2)` and its coefficient picks up
/// `c1^m c2^n`.
pub fn apply_map<F: FloatScalar, T: IntScalar>(
    f: &TrigPoly<F>,
    a: &GlMatrix<T>,
    c: &Phase<F>,
) -> Result<TrigPoly<F>, FourierError> {
    let [m1, n1, m2, n2] = a.entries().map(entry_i64);
    let (m1, n1, m2, n2) = (m1?, n1?, m2?, n2?);
    let overflow = || FourierError::Overflow("image index".into());
    let mut out = TrigPoly::zero();
    for ((m, n), coeff) in f.terms() {
        let i = m
            .checked_mul(m1)
            .and_then(|x| x.checked_add(n.checked_mul(m2)?))
            .ok_or_else(overflow)?;
        let j = m
            .checked_mul(n1)
            .and_then(|x| x.checked_add(n.checked_mul(n2)?))
            .ok_or_else(overflow)?;
        out.add_term((i, j), coeff * c.factor(m, n)?);
    }
    Ok(out)
}

/// `f(a z, b w)`: the coefficient at `(m, n)` is multiplied by `a^m b^n`.
pub fn rotation<F: FloatScalar>(
    f: &TrigPoly<F>,
    c: &Phase<F>,
) -> Result<TrigPoly<F>, FourierError> {
    let mut out = TrigPoly::zero();
    for ((m, n), coeff) in f.terms() {
        out.add_term((m, n), coeff * c.factor(m, n)?);
    }
    Ok(out)
}

/// Convolution with the Fejér kernels `K_n (x) K_m`.
pub fn cesaro<F: FloatScalar>(f: &TrigPoly<F>, n: u64, m: u64) -> TrigPoly<F> {
    let weight = |j: i64, deg: u64| {
        let w = 1.0 - j.unsigned_abs() as f64 / (deg as f64 + 1.0);
        F::from_f64(w.max(0.0)).expect("finite")
    };
    TrigPoly::from_terms(
        f.terms()
            .map(|((j, k), c)| ((j, k), c * (weight(j, n) * weight(k, m)))),
    )
}

/// `F(zeta) = f(zeta^q, zeta^p)` as a one-variable exponent map.
#[derive(Clone, Debug, PartialEq)]
pub struct Substitution<F: FloatScalar> {
    pub coeffs: BTreeMap<i64, Complex<F>>,
    /// No two support points share the exponent `m q + n p`.
    pub injective: bool,
}

pub fn substitute<F: FloatScalar>(f: &TrigPoly<F>, p: i64, q: i64) -> Substitution<F> {
    let mut coeffs: BTreeMap<i64, Complex<F>> = BTreeMap::new();
    let mut seen = std::collections::BTreeSet::new();
    let mut injective = true;
    for ((m, n), c) in f.terms() {
        let e = m * q + n * p;
        injective &= seen.insert(e);
        let slot = coeffs.entry(e).or_insert_with(Complex::zero);
        *slot = *slot + c;
    }
    coeffs.retain(|_, c| !negligible(c));
    Substitution { coeffs, injective }
}

/// `(mu_k(f), mu(f))`: the mean of `f(zeta^q, zeta^p)` over the circle, i.e.
/// the sum of coefficients on the line `m q + n p = 0`, and the mean of `f`
/// over the torus, i.e. the constant coefficient.
pub fn measure_pair<F: FloatScalar>(f: &TrigPoly<F>, p: i64, q: i64) -> (Complex<F>, Complex<F>) {
    let mu_k = f
        .terms()
        .filter(|((m, n), _)| m * q + n * p == 0)
        .fold(Complex::zero(), |acc, (_, c)| acc + c);
    (mu_k, f.coeff(0, 0))
}

/// Any `p/q` in lowest terms with `q` at least this value gives
/// `mu_k(f) = mu(f)`: `m q + n p = 0` with `(m, n) != 0` forces `q | n`.
pub fn measure_threshold<F: FloatScalar>(f: &TrigPoly<F>) -> u64 {
    f.support()
        .map(|(_, n)| n.unsigned_abs())
        .max()
        .unwrap_or(0)
        + 1
}
