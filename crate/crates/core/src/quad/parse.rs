//! Recursive-descent parser for quadratic-irrational expressions.
//!
//! ```text
//! expr     := term (sign term)*
//! term     := ['-'] ( '(' expr ')' ['/' integer]
//!                   | 'sqrt(' rational ')'
//!                   | rational ['*' 'sqrt(' rational ')'] )
//! rational := ['-'] integer ['/' positive-integer]
//! sign     := '+' | '-'
//! ```
//!
//! This accepts a small superset of the documented two-term grammar (longer
//! sums and a unary minus before `sqrt`/parentheses). Whitespace is ignored.

use std::collections::BTreeMap;

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use super::{QuadError, QuadraticIrrational};
use crate::scalar::{square_split, IntScalar};

/// Exact value of an expression: a rational plus rational multiples of
/// square roots of distinct squarefree integers.
#[derive(Debug, Clone, PartialEq)]
pub struct ParsedValue<T: IntScalar> {
    pub rational: Ratio<T>,
    pub radicals: BTreeMap<T, Ratio<T>>,
}

impl<T: IntScalar> ParsedValue<T> {
    fn rational(r: Ratio<T>) -> Self {
        ParsedValue {
            rational: r,
            radicals: BTreeMap::new(),
        }
    }

    fn add(mut self, other: Self) -> Self {
        self.rational = self.rational + other.rational;
        for (d, c) in other.radicals {
            let e = self.radicals.entry(d).or_insert_with(Ratio::zero);
            *e = e.clone() + c;
        }
        self.radicals.retain(|_, c| !c.is_zero());
        self
    }

    fn scale(mut self, k: &Ratio<T>) -> Self {
        self.rational = self.rational * k;
        for c in self.radicals.values_mut() {
            *c = c.clone() * k;
        }
        self.radicals.retain(|_, c| !c.is_zero());
        self
    }

    /// Floating approximation; only used for reporting values that are not
    /// quadratic irrationals.
    pub fn approx(&self) -> f64 {
        let r = |x: &Ratio<T>| {
            x.numer().to_f64().unwrap_or(f64::NAN) / x.denom().to_f64().unwrap_or(f64::NAN)
        };
        let mut total = r(&self.rational);
        for (d, c) in &self.radicals {
            total += r(c) * d.to_f64().unwrap_or(f64::NAN).sqrt();
        }
        total
    }

    /// The value as a quadratic irrational of either sign.
    pub fn to_quadratic(&self) -> Result<QuadraticIrrational<T>, QuadError> {
        match self.radicals.len() {
            0 => Err(QuadError::Rational(ratio_text(&self.rational))),
            1 => {
                let (d, b) = self.radicals.iter().next().expect("one radical");
                let (rn, rd) = (self.rational.numer(), self.rational.denom());
                let (bn, bd) = (b.numer(), b.denom());
                QuadraticIrrational::new(
                    rn.clone() * bd,
                    bn.clone() * rd,
                    rd.clone() * bd,
                    d.clone(),
                )
            }
            _ => Err(QuadError::NotQuadratic),
        }
    }
}

fn ratio_text<T: IntScalar>(r: &Ratio<T>) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse an expression and return its exact value, whatever it is.
pub fn parse_expression<T: IntScalar>(text: &str) -> Result<ParsedValue<T>, QuadError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    p.skip_ws();
    if p.at_end() {
        return Err(p.error("empty expression"));
    }
    let v = p.expr()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(v)
}

/// Parse a positive quadratic irrational into canonical form.
pub fn parse<T: IntScalar>(text: &str) -> Result<QuadraticIrrational<T>, QuadError> {
    let q = parse_expression::<T>(text)?.to_quadratic()?;
    if !q.is_positive() {
        return Err(QuadError::NonPositive(q.to_string()));
    }
    Ok(q)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn error(&self, message: &str) -> QuadError {
        QuadError::Syntax {
            pos: self.pos,
            message: message.to_string(),
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), QuadError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected `{}`", c as char)))
        }
    }

    fn starts_with_sqrt(&mut self) -> bool {
        self.skip_ws();
        self.src[self.pos..].starts_with(b"sqrt")
    }

    fn expr<T: IntScalar>(&mut self) -> Result<ParsedValue<T>, QuadError> {
        let mut acc = self.term()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.add(t.scale(&-Ratio::one()));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term<T: IntScalar>(&mut self) -> Result<ParsedValue<T>, QuadError> {
        self.skip_ws();
        // a leading minus binds to the integer when a digit follows
        if self.peek() == Some(b'-') {
            let save = self.pos;
            self.pos += 1;
            self.skip_ws();
            if !matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                let t = self.term()?;
                return Ok(t.scale(&-Ratio::one()));
            }
            self.pos = save;
        }
        if self.eat(b'(') {
            let inner = self.expr()?;
            self.expect(b')')?;
            if self.eat(b'/') {
                self.skip_ws();
                let den: T = self.integer()?;
                if den.is_zero() {
                    return Err(QuadError::ZeroDivision);
                }
                return Ok(inner.scale(&Ratio::new(T::one(), den)));
            }
            return Ok(inner);
        }
        if self.starts_with_sqrt() {
            return self.sqrt();
        }
        let coeff = self.rational()?;
        if self.eat(b'*') {
            if !self.starts_with_sqrt() {
                return Err(self.error("expected `sqrt(` after `*`"));
            }
            let root = self.sqrt::<T>()?;
            return Ok(root.scale(&coeff));
        }
        Ok(ParsedValue::rational(coeff))
    }

    fn sqrt<T: IntScalar>(&mut self) -> Result<ParsedValue<T>, QuadError> {
        self.skip_ws();
        debug_assert!(self.src[self.pos..].starts_with(b"sqrt"));
        self.pos += 4;
        self.expect(b'(')?;
        let r: Ratio<T> = self.rational()?;
        self.expect(b')')?;
        if r.is_negative() {
            return Err(QuadError::NegativeRadicand(ratio_text(&r)));
        }
        if r.is_zero() {
            return Ok(ParsedValue::rational(Ratio::zero()));
        }
        // sqrt(p/q) = sqrt(p q) / q = (k / q) sqrt(D) with p q = k^2 D
        let (p, q) = (r.numer().clone(), r.denom().clone());
        let (k, d) = square_split(&(p * &q));
        let coeff = Ratio::new(k, q);
        if d.is_one() {
            Ok(ParsedValue::rational(coeff))
        } else {
            let mut radicals = BTreeMap::new();
            radicals.insert(d, coeff);
            Ok(ParsedValue {
                rational: Ratio::zero(),
                radicals,
            })
        }
    }

    fn rational<T: IntScalar>(&mut self) -> Result<Ratio<T>, QuadError> {
        self.skip_ws();
        let negative = if self.peek() == Some(b'-') {
            self.pos += 1;
            self.skip_ws();
            true
        } else {
            false
        };
        let num: T = self.integer()?;
        let num = if negative { -num } else { num };
        let save = self.pos;
        if self.eat(b'/') {
            self.skip_ws();
            if !matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                self.pos = save;
                return Err(self.error("expected positive integer denominator"));
            }
            let den: T = self.integer()?;
            if den.is_zero() {
                return Err(QuadError::ZeroDivision);
            }
            return Ok(Ratio::new(num, den));
        }
        Ok(Ratio::from_integer(num))
    }

    fn integer<T: IntScalar>(&mut self) -> Result<T, QuadError> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        T::from_str_radix(digits, 10).map_err(|_| QuadError::Overflow(digits.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fields(q: &QuadraticIrrational<i64>) -> (i64, i64, i64, i64) {
        (*q.u(), *q.v(), *q.w(), *q.radicand())
    }

    #[test]
    fn parses_examples() {
        assert_eq!(fields(&parse("sqrt(5)").unwrap()), (0, 1, 1, 5));
        assert_eq!(fields(&parse("(1+sqrt(7))/3").unwrap()), (1, 1, 3, 7));
        assert_eq!(
            parse::<i64>("sqrt(9/4)"),
            Err(QuadError::Rational("3/2".into()))
        );
    }

    #[test]
    fn parses_coefficients_and_fractions() {
        assert_eq!(fields(&parse("3/2*sqrt(5)").unwrap()), (0, 3, 2, 5));
        assert_eq!(fields(&parse("sqrt(20)").unwrap()), (0, 2, 1, 5));
        assert_eq!(fields(&parse("sqrt(5/4)").unwrap()), (0, 1, 2, 5));
        assert_eq!(fields(&parse(" 2 + sqrt( 5 ) ").unwrap()), (2, 1, 1, 5));
        assert_eq!(fields(&parse("3-sqrt(5)").unwrap()), (3, -1, 1, 5));
        assert_eq!(fields(&parse("((1+sqrt(5))/2)").unwrap()), (1, 1, 2, 5));
        assert_eq!(fields(&parse("(2+2*sqrt(5))/2").unwrap()), (1, 1, 1, 5));
        assert_eq!(fields(&parse("-1+sqrt(5)").unwrap()), (-1, 1, 1, 5));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            parse::<i64>("sqrt(5"),
            Err(QuadError::Syntax { .. })
        ));
        assert!(matches!(parse::<i64>(""), Err(QuadError::Syntax { .. })));
        assert!(matches!(
            parse::<i64>("2 sqrt(5)"),
            Err(QuadError::Syntax { pos: 2, .. })
        ));
        assert!(matches!(
            parse::<i64>("-sqrt(5)"),
            Err(QuadError::NonPositive(_))
        ));
        assert!(matches!(
            parse::<i64>("sqrt(-5)"),
            Err(QuadError::NegativeRadicand(_))
        ));
        assert_eq!(
            parse::<i64>("sqrt(2)+sqrt(3)"),
            Err(QuadError::NotQuadratic)
        );
        assert_eq!(parse::<i64>("(1+sqrt(5))/0"), Err(QuadError::ZeroDivision));
        assert!(matches!(
            parse::<i64>("sqrt(99999999999999999999999)"),
            Err(QuadError::Overflow(_))
        ));
        assert!(matches!(
            parse::<i64>("sqrt(8)-2*sqrt(2)"),
            Err(QuadError::Rational(_))
        ));
    }

    #[test]
    fn render_round_trip() {
        for s in [
            "sqrt(5)",
            "(1+sqrt(5))/2",
            "5-2*sqrt(5)",
            "(3*sqrt(7))/2",
            "(-1+sqrt(13))/3",
        ] {
            let q: QuadraticIrrational<i64> = parse(s).unwrap();
            assert_eq!(q.to_string(), s);
            assert_eq!(parse::<i64>(&q.to_string()).unwrap(), q);
        }
    }
}
