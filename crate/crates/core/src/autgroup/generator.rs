//! The generator `A0` of the automorphism matrices of `A_alpha`.
//!
//! Every positive quadratic irrational is `sqrt(p/q)` or `r/s + k sqrt(p/q)`,
//! and in each shape the entries of `A0` are read off the fundamental
//! solution of a Pell-type equation `x^2 - N y^2 = c`, `c` in `{+-1, +-4}`.
//! The `-1`/`-4` equation is used whenever it is solvable, giving a generator
//! of determinant `-1`; otherwise `A0` lies in SL(2, Z).

use super::{is_automorphism_matrix, AutError};
use crate::matrix::GlMatrix;
use crate::pell::{Direct, FundamentalSource, PellSolution, Rhs};
use crate::quad::{to_radical_form, QuadraticIrrational, RadicalForm};
use crate::scalar::{int, IntScalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GeneratorRoute {
    /// `alpha = sqrt(p/q)`, `N = p q`.
    PureRadical,
    /// `alpha = r/s + k sqrt(p/q)` with `s` odd, or `s` even and the
    /// denominators clear without halving.
    Shifted,
    /// `s` even and the entries are half-integers of a `+-4` solution.
    ShiftedHalf,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator<T: IntScalar> {
    pub matrix: GlMatrix<T>,
    pub pell: PellSolution<T>,
    pub route: GeneratorRoute,
    pub form: RadicalForm<T>,
}

impl<T: IntScalar> Generator<T> {
    pub fn det(&self) -> T {
        self.matrix.det()
    }
}

/// Generator matrix alone.
pub fn generator<T: IntScalar>(alpha: &QuadraticIrrational<T>) -> Result<GlMatrix<T>, AutError> {
    synthesize(alpha).map(|g| g.matrix)
}

pub fn synthesize<T: IntScalar>(alpha: &QuadraticIrrational<T>) -> Result<Generator<T>, AutError> {
    synthesize_with(alpha, &Direct)
}

fn exact_div<T: IntScalar>(a: T, b: &T, what: &str) -> Result<T, AutError> {
    let (q, r) = a.div_rem(b);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(AutError::Internal(format!("{what} is not integral")))
    }
}

/// Pell solution for `x^2 - n y^2 = neg`, or for `pos` when `neg` has none.
fn solve<T: IntScalar, S: FundamentalSource<T> + ?Sized>(
    source: &S,
    n: &T,
    neg: Rhs,
    pos: Rhs,
) -> Result<PellSolution<T>, AutError> {
    if let Some(sol) = source.fundamental(n, neg)? {
        return Ok(sol);
    }
    source
        .fundamental(n, pos)?
        .ok_or_else(|| AutError::Internal(format!("x^2 - {n} y^2 = {pos} has no solution")))
}

/// [`synthesize`] with Pell solutions drawn from `source` (e.g. a cache).
pub fn synthesize_with<T: IntScalar, S: FundamentalSource<T> + ?Sized>(
    alpha: &QuadraticIrrational<T>,
    source: &S,
) -> Result<Generator<T>, AutError> {
    let form = to_radical_form(alpha);
    let (matrix, pell, route) = match &form {
        RadicalForm::Sqrt { p, q } => {
            let n = p.clone() * q;
            let sol = solve(source, &n, Rhs::MinusOne, Rhs::One)?;
            let (x, y) = (sol.x().clone(), sol.y().clone());
            let m = raw(x.clone(), q.clone() * &y, p.clone() * &y, x)?;
            (m, sol, GeneratorRoute::PureRadical)
        }
        RadicalForm::Affine { r, s, k, p, q } => {
            let two: T = int(2);
            let gap = p.clone() * s * s - q.clone() * r * r;
            let qs = q.clone() * s;
            let mut d1 = gap.gcd(&qs);
            let mut half = false;
            if s.is_even() {
                let wide = gap.gcd(&(qs.clone() * &two));
                if !(qs.clone() % &wide).is_zero() {
                    d1 = wide;
                    half = true;
                }
            }
            let s4 = s.clone() * s * s * s;
            let scale = if half { int::<T>(4) } else { T::one() };
            let n = exact_div(scale * p * q * &s4, &(d1.clone() * &d1), "N")?;
            let (neg, pos) = if half {
                (Rhs::MinusFour, Rhs::Four)
            } else {
                (Rhs::MinusOne, Rhs::One)
            };
            let sol = solve(source, &n, neg, pos)?;
            let (x, y) = (sol.x().clone(), sol.y().clone());
            // negative solutions carry the sign of the radical
            let l = if sol.rhs().is_negative() && *k < 0 {
                -y
            } else {
                y
            };
            // twice the diagonal shift, so both routes share one formula
            let e2 = exact_div(two.clone() * q * r * s, &d1, "2qrs/d1")?;
            let f = exact_div(q.clone() * s * s, &d1, "qs^2/d1")?;
            let g = exact_div(gap, &d1, "(ps^2 - qr^2)/d1")?;
            let big_x = if half { x } else { x * &two };
            let a11 = exact_div(big_x.clone() - e2.clone() * &l, &two, "upper-left entry")?;
            let a22 = exact_div(big_x + e2 * &l, &two, "lower-right entry")?;
            let m = raw(a11, f * &l, g * &l, a22)?;
            let route = if half {
                GeneratorRoute::ShiftedHalf
            } else {
                GeneratorRoute::Shifted
            };
            (m, sol, route)
        }
    };
    if !is_automorphism_matrix(&matrix, alpha) {
        return Err(AutError::Internal(format!(
            "synthesized {matrix} is not an automorphism matrix of {alpha}"
        )));
    }
    Ok(Generator {
        matrix,
        pell,
        route,
        form,
    })
}

fn raw<T: IntScalar>(m1: T, n1: T, m2: T, n2: T) -> Result<GlMatrix<T>, AutError> {
    GlMatrix::new(m1, n1, m2, n2).map_err(|e| AutError::Internal(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::parse;

    fn gen(s: &str) -> (String, GeneratorRoute) {
        let g = synthesize(&parse::<i64>(s).unwrap()).unwrap();
        (g.matrix.to_string(), g.route)
    }

    #[test]
    fn worked_examples() {
        use GeneratorRoute::*;
        assert_eq!(gen("sqrt(5)"), ("[[2,1],[5,2]]".into(), PureRadical));
        assert_eq!(gen("sqrt(7)"), ("[[8,3],[21,8]]".into(), PureRadical));
        assert_eq!(gen("(1+sqrt(7))/3"), ("[[5,9],[6,11]]".into(), Shifted));
        assert_eq!(gen("(1+sqrt(5))/2"), ("[[0,1],[1,1]]".into(), ShiftedHalf));
        assert_eq!(gen("2+sqrt(5)"), ("[[0,1],[1,4]]".into(), Shifted));
    }

    #[test]
    fn negative_radical_sign() {
        // 3 - sqrt(5) > 0 still has generator of determinant -1
        let a = parse::<i64>("3-sqrt(5)").unwrap();
        let g = synthesize(&a).unwrap();
        assert_eq!(g.det(), -1);
        assert!(is_automorphism_matrix(&g.matrix, &a));
    }

    #[test]
    fn pure_radical_over_denominator() {
        let a = parse::<i64>("(sqrt(2))/3").unwrap();
        let g = synthesize(&a).unwrap();
        assert_eq!(g.pell.n(), &18);
        assert!(is_automorphism_matrix(&g.matrix, &a));
    }
}
