//! Reports are ordered JSON objects; text mode renders the same fields as
//! `key: value` lines, so both outputs carry identical information.

use std::fmt::Display;

use serde_json::{Map, Number, Value};

use crate::matrix::GlMatrix;
use crate::scalar::IntScalar;

pub const SCHEMA: u64 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Output {
    #[default]
    Text,
    Json,
}

/// An exact integer as a JSON number, however large.
pub fn int_value<T: Display>(x: &T) -> Value {
    let s = x.to_string();
    match s.parse::<Number>() {
        Ok(n) => Value::Number(n),
        Err(_) => Value::String(s),
    }
}

pub fn matrix_value<T: IntScalar>(a: &GlMatrix<T>) -> Value {
    Value::Array(vec![
        Value::Array(vec![int_value(a.m1()), int_value(a.n1())]),
        Value::Array(vec![int_value(a.m2()), int_value(a.n2())]),
    ])
}

/// Top-level report with the schema version first.
pub fn report() -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("schema".into(), Value::from(SCHEMA));
    m
}

/// A list of results: `[]` when empty in JSON mode.
pub fn render_results(items: &[Value], output: Output) -> String {
    match output {
        Output::Json => Value::Array(items.to_vec()).to_string(),
        Output::Text => items
            .iter()
            .map(|v| format!("{}\n", text_value(v)))
            .collect(),
    }
}

pub fn render(report: &Map<String, Value>, output: Output) -> String {
    match output {
        Output::Json => format!("{}\n", Value::Object(report.clone())),
        Output::Text => report
            .iter()
            .filter(|(k, _)| k.as_str() != "schema")
            .map(|(k, v)| format!("{k}: {}\n", text_value(v)))
            .collect(),
    }
}

/// Compact single-line rendering; strings lose their quotes.
fn text_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => format!(
            "[{}]",
            items.iter().map(text_value).collect::<Vec<_>>().join(",")
        ),
        Value::Object(m) => m
            .iter()
            .map(|(k, v)| format!("{k}={}", text_value(v)))
            .collect::<Vec<_>>()
            .join(" "),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn big_integers_stay_exact() {
        let big = num_bigint::BigInt::parse_bytes(b"123456789012345678901234567890", 10).unwrap();
        assert_eq!(
            int_value(&big).to_string(),
            "123456789012345678901234567890"
        );
    }

    #[test]
    fn empty_results() {
        assert_eq!(render_results(&[], Output::Json), "[]");
        assert_eq!(render_results(&[], Output::Text), "");
    }

    #[test]
    fn field_order_is_insertion_order() {
        let mut r = report();
        r.insert("z".into(), Value::from(1));
        r.insert(
            "a".into(),
            matrix_value(&GlMatrix::new(2i64, 1, 5, 2).unwrap()),
        );
        assert_eq!(
            render(&r, Output::Json),
            "{\"schema\":1,\"z\":1,\"a\":[[2,1],[5,2]]}\n"
        );
        assert_eq!(render(&r, Output::Text), "z: 1\na: [[2,1],[5,2]]\n");
    }
}
