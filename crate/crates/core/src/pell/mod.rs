//! Pell-type equations `x^2 - n y^2 = c` for `c` in `{1, -1, 4, -4}`.
//!
//! Fundamental solutions come from the convergents of `sqrt(n)`. A primitive
//! solution of `|x^2 - n y^2| < sqrt(n)` is always a convergent, and a
//! non-primitive solution of the `+-4` equations is twice a solution of the
//! `+-1` equation, so scanning two periods of convergents is complete once
//! `n > 16`. Smaller `n` with right-hand side `+-4` are additionally scanned
//! directly up to a bound derived from the `+1` solution.

mod cache;

use std::fmt;

use thiserror::Error;

use crate::quad::SurdState;
use crate::scalar::{exact_sqrt, int, is_square, IntScalar};

pub use cache::PellCache;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PellError {
    #[error("n = {0} must be a nonsquare integer >= 2")]
    Domain(String),
    #[error("x^2 - {n}*y^2 = {rhs} has no integer solutions")]
    Unsolvable { n: String, rhs: i8 },
    #[error("internal error: {0}")]
    Internal(String),
}

/// Right-hand side of the equation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rhs {
    One,
    MinusOne,
    Four,
    MinusFour,
}

impl Rhs {
    pub const ALL: [Rhs; 4] = [Rhs::One, Rhs::MinusOne, Rhs::Four, Rhs::MinusFour];

    pub fn value(self) -> i8 {
        match self {
            Rhs::One => 1,
            Rhs::MinusOne => -1,
            Rhs::Four => 4,
            Rhs::MinusFour => -4,
        }
    }

    pub fn from_value(v: i64) -> Option<Rhs> {
        match v {
            1 => Some(Rhs::One),
            -1 => Some(Rhs::MinusOne),
            4 => Some(Rhs::Four),
            -4 => Some(Rhs::MinusFour),
            _ => None,
        }
    }

    pub fn is_negative(self) -> bool {
        matches!(self, Rhs::MinusOne | Rhs::MinusFour)
    }

    /// The equation whose fundamental solution squares to this one's.
    fn negative_partner(self) -> Rhs {
        match self {
            Rhs::One | Rhs::MinusOne => Rhs::MinusOne,
            Rhs::Four | Rhs::MinusFour => Rhs::MinusFour,
        }
    }
}

impl fmt::Display for Rhs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

/// A nonnegative solution of `x^2 - n y^2 = rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PellSolution<T> {
    x: T,
    y: T,
    n: T,
    rhs: Rhs,
}

impl<T: IntScalar> PellSolution<T> {
    /// Checked constructor: rejects pairs that do not satisfy the identity.
    pub fn new(x: T, y: T, n: T, rhs: Rhs) -> Option<Self> {
        if x.is_negative() || y.is_negative() || !satisfies(&x, &y, &n, rhs) {
            return None;
        }
        Some(PellSolution { x, y, n, rhs })
    }

    pub fn x(&self) -> &T {
        &self.x
    }
    pub fn y(&self) -> &T {
        &self.y
    }
    pub fn n(&self) -> &T {
        &self.n
    }
    pub fn rhs(&self) -> Rhs {
        self.rhs
    }
}

fn satisfies<T: IntScalar>(x: &T, y: &T, n: &T, rhs: Rhs) -> bool {
    x.clone() * x - n.clone() * y * y == int(rhs.value() as i64)
}

fn check_n<T: IntScalar>(n: &T) -> Result<(), PellError> {
    if *n < int(2) || is_square(n) {
        Err(PellError::Domain(n.to_string()))
    } else {
        Ok(())
    }
}

/// Odd primes `p = 3 (mod 4)` below this bound are tried as a quick
/// obstruction before the period-parity test.
const PREFILTER_PRIMES_BELOW: i64 = 1000;

/// True iff `x^2 - n y^2 = -1` has an integer solution.
///
/// A divisor `4` or an odd prime divisor `p = 3 (mod 4)` rules a solution
/// out; the decision itself is the parity of the period of `sqrt(n)`.
pub fn negative_solvable<T: IntScalar>(n: &T) -> Result<bool, PellError> {
    check_n(n)?;
    if (n.clone() % int::<T>(4)).is_zero() {
        return Ok(false);
    }
    let mut p = 3i64;
    while p < PREFILTER_PRIMES_BELOW {
        let pt: T = int(p);
        if pt.clone() * &pt > *n {
            break;
        }
        if is_small_prime(p) && (n.clone() % &pt).is_zero() && p % 4 == 3 {
            return Ok(false);
        }
        p += 2;
    }
    let period = SurdState::sqrt(n.clone()).expand().period.len();
    Ok(period % 2 == 1)
}

fn is_small_prime(p: i64) -> bool {
    p >= 2 && (2..).take_while(|f| f * f <= p).all(|f| p % f != 0)
}

/// Fundamental solution, or `None` when the equation has no solution.
///
/// For `rhs = 1` (resp. `4`) with a solvable negative partner, the result is
/// derived from the negative fundamental solution `(x', y')` as
/// `(x'^2 + n y'^2, 2 x' y')` (resp. `((x'^2 + n y'^2)/2, x' y')`).
pub fn fundamental<T: IntScalar>(n: &T, rhs: Rhs) -> Result<Option<PellSolution<T>>, PellError> {
    check_n(n)?;
    match rhs {
        Rhs::One | Rhs::Four => {
            let partner = rhs.negative_partner();
            if let Some(neg) = search_fundamental(n, partner)? {
                let (x1, y1) = (neg.x, neg.y);
                let big_x = x1.clone() * &x1 + n.clone() * &y1 * &y1;
                let cross = x1 * &y1;
                let (x, y) = if rhs == Rhs::One {
                    (big_x, cross.clone() + &cross)
                } else {
                    if !big_x.is_even() {
                        return Err(PellError::Internal(format!(
                            "odd x'^2 + n y'^2 for n = {n} in the +-4 relation"
                        )));
                    }
                    (big_x / int::<T>(2), cross)
                };
                return PellSolution::new(x, y, n.clone(), rhs)
                    .map(Some)
                    .ok_or_else(|| {
                        PellError::Internal(format!(
                            "derived solution for n = {n} fails the identity"
                        ))
                    });
            }
            search_fundamental(n, rhs)
        }
        Rhs::MinusOne | Rhs::MinusFour => search_fundamental(n, rhs),
    }
}

/// Direct search for the fundamental solution, without the squaring
/// relations used by [`fundamental`].
pub fn search_fundamental<T: IntScalar>(
    n: &T,
    rhs: Rhs,
) -> Result<Option<PellSolution<T>>, PellError> {
    check_n(n)?;
    if rhs == Rhs::MinusOne && !negative_solvable(n)? {
        return Ok(None);
    }
    let cf = SurdState::sqrt(n.clone()).expand();
    let count = 2 * cf.period.len() + 2;
    let c: T = int(rhs.value() as i64);
    let quarter: Option<T> = match rhs {
        Rhs::Four => Some(T::one()),
        Rhs::MinusFour => Some(-T::one()),
        _ => None,
    };
    let mut direct: Option<(T, T)> = None;
    let mut doubled: Option<(T, T)> = None;
    for (p, q) in cf.convergents(count) {
        let norm = p.clone() * &p - n.clone() * &q * &q;
        if direct.is_none() && norm == c {
            direct = Some((p.clone(), q.clone()));
        }
        if doubled.is_none() && quarter.as_ref() == Some(&norm) {
            let two: T = int(2);
            doubled = Some((p * &two, q * two));
        }
        if direct.is_some() && (doubled.is_some() || quarter.is_none()) {
            break;
        }
    }
    let mut best = match (direct, doubled) {
        (Some(a), Some(b)) => Some(if a.0 <= b.0 { a } else { b }),
        (a, b) => a.or(b),
    };
    if matches!(rhs, Rhs::Four | Rhs::MinusFour) && *n <= int(16) {
        if let Some(found) = small_scan(n, rhs)? {
            best = match best {
                Some(b) if b.0 <= found.0 => Some(b),
                _ => Some(found),
            };
        }
    }
    match best {
        None => Ok(None),
        Some((x, y)) => PellSolution::new(x, y, n.clone(), rhs)
            .map(Some)
            .ok_or_else(|| {
                PellError::Internal(format!("candidate for n = {n} fails the identity"))
            }),
    }
}

/// Scan `y = 1, 2, ...` up to twice the `+1` fundamental `y`; the `+-4`
/// fundamental unit never exceeds `x1 + y1 sqrt(n)`.
fn small_scan<T: IntScalar>(n: &T, rhs: Rhs) -> Result<Option<(T, T)>, PellError> {
    let one = search_fundamental(n, Rhs::One)?
        .ok_or_else(|| PellError::Internal(format!("x^2 - {n} y^2 = 1 unsolved")))?;
    let bound = one.y.clone() + &one.y;
    let c: T = int(rhs.value() as i64);
    let mut y = T::one();
    while y <= bound {
        let t = n.clone() * &y * &y + &c;
        if let Some(x) = exact_sqrt(&t) {
            if !x.is_zero() {
                return Ok(Some((x, y)));
            }
        }
        y = y + T::one();
    }
    Ok(None)
}

/// The `k`-th positive solution (`k = 1` is the fundamental one), generated
/// by the standard recurrences for each right-hand side.
pub fn enumerate<T: IntScalar>(n: &T, rhs: Rhs, k: usize) -> Result<PellSolution<T>, PellError> {
    if k == 0 {
        return Err(PellError::Internal("solution index starts at 1".into()));
    }
    let first = fundamental(n, rhs)?.ok_or_else(|| PellError::Unsolvable {
        n: n.to_string(),
        rhs: rhs.value(),
    })?;
    let (x1, y1) = (first.x.clone(), first.y.clone());
    let two: T = int(2);
    // multiplier (a, b): next = (a x + n b y, a y + b x) / div
    let (a, b, div): (T, T, T) = match rhs {
        Rhs::One => (x1.clone(), y1.clone(), T::one()),
        Rhs::Four => (x1.clone(), y1.clone(), two.clone()),
        Rhs::MinusOne => (
            x1.clone() * &x1 + n.clone() * &y1 * &y1,
            two.clone() * &x1 * &y1,
            T::one(),
        ),
        Rhs::MinusFour => (
            x1.clone() * &x1 + n.clone() * &y1 * &y1,
            two.clone() * &x1 * &y1,
            int(4),
        ),
    };
    let (mut x, mut y) = (x1, y1);
    for _ in 1..k {
        let nx = a.clone() * &x + n.clone() * &b * &y;
        let ny = a.clone() * &y + b.clone() * &x;
        if !(nx.clone() % &div).is_zero() || !(ny.clone() % &div).is_zero() {
            return Err(PellError::Internal(format!(
                "non-integral recurrence step for n = {n}, rhs = {rhs}"
            )));
        }
        x = nx / &div;
        y = ny / &div;
        if !satisfies(&x, &y, n, rhs) {
            return Err(PellError::Internal(format!(
                "recurrence left the solution set for n = {n}, rhs = {rhs}"
            )));
        }
    }
    Ok(PellSolution {
        x,
        y,
        n: n.clone(),
        rhs,
    })
}

/// Source of fundamental solutions; lets callers put a cache in front of
/// the solver.
pub trait FundamentalSource<T: IntScalar> {
    fn fundamental(&self, n: &T, rhs: Rhs) -> Result<Option<PellSolution<T>>, PellError>;
}

/// Computes every solution from scratch.
#[derive(Debug, Default, Clone, Copy)]
pub struct Direct;

impl<T: IntScalar> FundamentalSource<T> for Direct {
    fn fundamental(&self, n: &T, rhs: Rhs) -> Result<Option<PellSolution<T>>, PellError> {
        fundamental(n, rhs)
    }
}
