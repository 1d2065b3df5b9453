//! Polynomial files: text lines `m n re im`, or a JSON array of
//! `{"m": .., "n": .., "re": .., "im": ..}` objects.

use std::fmt::Write;

use num_complex::Complex;
use serde_json::{json, Value};

use super::{FourierError, TrigPoly};
use crate::scalar::FloatScalar;

/// Blank lines and `#` comments are skipped.
pub fn read_text<F: FloatScalar>(text: &str) -> Result<TrigPoly<F>, FourierError> {
    let mut terms = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| FourierError::Parse {
            line: i + 1,
            message,
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 4 {
            return Err(err(format!(
                "expected `m n re im`, found {} fields",
                fields.len()
            )));
        }
        let idx = |s: &str| {
            s.parse::<i64>()
                .map_err(|e| err(format!("index `{s}`: {e}")))
        };
        let num = |s: &str| {
            s.parse::<f64>()
                .ok()
                .filter(|x| x.is_finite())
                .and_then(F::from_f64)
                .ok_or_else(|| err(format!("coefficient `{s}` is not a finite number")))
        };
        terms.push((
            (idx(fields[0])?, idx(fields[1])?),
            Complex::new(num(fields[2])?, num(fields[3])?),
        ));
    }
    Ok(TrigPoly::from_terms(terms))
}

pub fn write_text<F: FloatScalar>(f: &TrigPoly<F>) -> String {
    let mut out = String::new();
    for ((m, n), c) in f.terms() {
        writeln!(out, "{m} {n} {} {}", c.re, c.im).expect("write to String");
    }
    out
}

pub fn read_json<F: FloatScalar>(text: &str) -> Result<TrigPoly<F>, FourierError> {
    let err = |message: String| FourierError::Parse { line: 0, message };
    let value: Value = serde_json::from_str(text).map_err(|e| FourierError::Parse {
        line: e.line(),
        message: e.to_string(),
    })?;
    let items = value
        .as_array()
        .ok_or_else(|| err("expected a JSON array of terms".into()))?;
    let mut terms = Vec::with_capacity(items.len());
    for (i, item) in items.iter().enumerate() {
        let field = |k: &str| {
            item.get(k)
                .ok_or_else(|| err(format!("term {i}: missing `{k}`")))
        };
        let idx = |k: &str| {
            field(k)?
                .as_i64()
                .ok_or_else(|| err(format!("term {i}: `{k}` is not an integer")))
        };
        let num = |k: &str| {
            field(k)?
                .as_f64()
                .and_then(F::from_f64)
                .ok_or_else(|| err(format!("term {i}: `{k}` is not a number")))
        };
        terms.push(((idx("m")?, idx("n")?), Complex::new(num("re")?, num("im")?)));
    }
    Ok(TrigPoly::from_terms(terms))
}

pub fn write_json<F: FloatScalar>(f: &TrigPoly<F>) -> Value {
    Value::Array(
        f.terms()
            .map(|((m, n), c)| json!({"m": m, "n": n, "re": c.re.to_f64(), "im": c.im.to_f64()}))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let src = "# f\n1 0 1 0\n-2 1 0.5 -0.25\n\n1 0 1 0\n";
        let f: TrigPoly<f64> = read_text(src).unwrap();
        assert_eq!(f.coeff(1, 0), Complex::new(2.0, 0.0));
        assert_eq!(read_text::<f64>(&write_text(&f)).unwrap(), f);
    }

    #[test]
    fn json_round_trip() {
        let f: TrigPoly<f64> = read_text("3 -1 1.5 2\n0 0 -1 0\n").unwrap();
        let text = write_json(&f).to_string();
        assert_eq!(read_json::<f64>(&text).unwrap(), f);
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(
            read_text::<f64>("1 0 1 0\n1 x 1 0\n"),
            Err(FourierError::Parse {
                line: 2,
                message: "index `x`: invalid digit found in string".into()
            })
        );
        assert!(matches!(
            read_text::<f64>("1 0 1\n"),
            Err(FourierError::Parse { line: 1, .. })
        ));
        assert!(read_json::<f64>("[{\"m\":1,\"n\":0,\"re\":1}]").is_err());
    }
}
