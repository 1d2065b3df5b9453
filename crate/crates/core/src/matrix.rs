//! Integer 2x2 matrices of determinant +-1.

use std::fmt;

use thiserror::Error;

use crate::scalar::{convert, IntScalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("matrix [[{m1},{n1}],[{m2},{n2}]] has determinant {det}, expected +1 or -1")]
pub struct NotUnimodular {
    pub m1: String,
    pub n1: String,
    pub m2: String,
    pub n2: String,
    pub det: String,
}

/// `[[m1, n1], [m2, n2]]` in GL(2, Z).
///
/// Entry names follow the row layout used throughout the crate: the first
/// row `(m1, n1)` acts on the character index `m`, the second on `n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GlMatrix<T> {
    m1: T,
    n1: T,
    m2: T,
    n2: T,
}

impl<T: IntScalar> GlMatrix<T> {
    pub fn new(m1: T, n1: T, m2: T, n2: T) -> Result<Self, NotUnimodular> {
        let det = m1.clone() * &n2 - n1.clone() * &m2;
        if det.abs().is_one() {
            Ok(GlMatrix { m1, n1, m2, n2 })
        } else {
            Err(NotUnimodular {
                m1: m1.to_string(),
                n1: n1.to_string(),
                m2: m2.to_string(),
                n2: n2.to_string(),
                det: det.to_string(),
            })
        }
    }

    /// Product or inverse of unimodular matrices; skips the determinant check.
    fn raw(m1: T, n1: T, m2: T, n2: T) -> Self {
        debug_assert!((m1.clone() * &n2 - n1.clone() * &m2).abs().is_one());
        GlMatrix { m1, n1, m2, n2 }
    }

    pub fn identity() -> Self {
        GlMatrix::raw(T::one(), T::zero(), T::zero(), T::one())
    }

    pub fn m1(&self) -> &T {
        &self.m1
    }
    pub fn n1(&self) -> &T {
        &self.n1
    }
    pub fn m2(&self) -> &T {
        &self.m2
    }
    pub fn n2(&self) -> &T {
        &self.n2
    }

    /// Entries row-major.
    pub fn entries(&self) -> [&T; 4] {
        [&self.m1, &self.n1, &self.m2, &self.n2]
    }

    pub fn det(&self) -> T {
        self.m1.clone() * &self.n2 - self.n1.clone() * &self.m2
    }

    pub fn trace(&self) -> T {
        self.m1.clone() + &self.n2
    }

    pub fn is_identity(&self) -> bool {
        self.m1.is_one() && self.n1.is_zero() && self.m2.is_zero() && self.n2.is_one()
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        GlMatrix::raw(
            self.m1.clone() * &rhs.m1 + self.n1.clone() * &rhs.m2,
            self.m1.clone() * &rhs.n1 + self.n1.clone() * &rhs.n2,
            self.m2.clone() * &rhs.m1 + self.n2.clone() * &rhs.m2,
            self.m2.clone() * &rhs.n1 + self.n2.clone() * &rhs.n2,
        )
    }

    /// Exact inverse, `det * [[n2, -n1], [-m2, m1]]`.
    pub fn inverse(&self) -> Self {
        let det = self.det();
        GlMatrix::raw(
            self.n2.clone() * &det,
            -(self.n1.clone() * &det),
            -(self.m2.clone() * &det),
            self.m1.clone() * &det,
        )
    }

    pub fn neg(&self) -> Self {
        GlMatrix::raw(
            -self.m1.clone(),
            -self.n1.clone(),
            -self.m2.clone(),
            -self.n2.clone(),
        )
    }

    pub fn transpose(&self) -> Self {
        GlMatrix::raw(
            self.m1.clone(),
            self.m2.clone(),
            self.n1.clone(),
            self.n2.clone(),
        )
    }

    /// Integer power; negative exponents use the inverse.
    pub fn pow(&self, k: i64) -> Self {
        let mut base = if k < 0 { self.inverse() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = GlMatrix::identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> T {
        self.entries()
            .into_iter()
            .map(|x| x.abs())
            .max()
            .expect("four entries")
    }

    /// `None` unless the entries and the determinant products all fit in `S`.
    pub fn convert<S: IntScalar>(&self) -> Option<GlMatrix<S>> {
        convert::<T, S>(&(self.m1.clone() * &self.n2))?;
        convert::<T, S>(&(self.n1.clone() * &self.m2))?;
        Some(GlMatrix::raw(
            convert(&self.m1)?,
            convert(&self.n1)?,
            convert(&self.m2)?,
            convert(&self.n2)?,
        ))
    }
}

impl<T: IntScalar> fmt::Display for GlMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.m1, self.n1, self.m2, self.n2)
    }
}

/// Parse `[[a,b],[c,d]]` or `a,b,c,d` (whitespace ignored).
pub fn parse_matrix<T: IntScalar>(text: &str) -> Result<GlMatrix<T>, String> {
    let cleaned: String = text
        .chars()
        .filter(|c| !c.is_whitespace() && *c != '[' && *c != ']')
        .collect();
    let parts: Vec<&str> = cleaned.split(',').collect();
    if parts.len() != 4 {
        return Err(format!(
            "expected four matrix entries, found {}",
            parts.len()
        ));
    }
    let mut vals = Vec::with_capacity(4);
    for p in parts {
        let v = T::from_str_radix(p, 10).map_err(|_| format!("bad matrix entry `{p}`"))?;
        vals.push(v);
    }
    let [m1, n1, m2, n2]: [T; 4] = vals.try_into().map_err(|_| "four entries".to_string())?;
    GlMatrix::new(m1, n1, m2, n2).map_err(|e| e.to_string())
}
