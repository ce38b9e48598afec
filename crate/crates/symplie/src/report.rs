//! Deterministic structured reports.
//!
//! A [`Report`] echoes the command, digests the input, and carries named
//! findings plus machine-readable witnesses for failed checks. Maps are
//! `BTreeMap`s and rationals serialize as strings, so identical inputs give
//! byte-identical JSON.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

use crate::exactlin::{format_rational, Matrix, Rational, Subspace};

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub input_digest: String,
    pub findings: BTreeMap<String, Value>,
    pub witnesses: BTreeMap<String, Value>,
}

impl Report {
    pub fn new(command: impl Into<String>, input_digest: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            input_digest: input_digest.into(),
            findings: BTreeMap::new(),
            witnesses: BTreeMap::new(),
        }
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.findings.insert(key.to_string(), value.into());
    }

    pub fn witness(&mut self, key: &str, value: impl Into<Value>) {
        self.witnesses.insert(key.to_string(), value.into());
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report is serializable");
        s.push('\n');
        s
    }
}

pub fn rational_value(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

pub fn vector_value(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rational_value).collect())
}

pub fn matrix_value(m: &Matrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|r| vector_value(m.row(r)))
            .collect(),
    )
}

pub fn subspace_value(s: &Subspace) -> Value {
    let mut map = serde_json::Map::new();
    map.insert("ambient_dim".into(), s.ambient_dim().into());
    map.insert("dim".into(), s.dim().into());
    map.insert("basis".into(), matrix_value(s.basis()));
    Value::Object(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::rat;

    #[test]
    fn report_serialization_is_sorted_and_stable() {
        let mut r = Report::new("check x.json", "sha256:abc");
        r.set("zeta", true);
        r.set("alpha", 3);
        r.witness("w", vector_value(&[rat(1, 2), rat(-3, 1)]));
        let one = r.to_json();
        let two = r.to_json();
        assert_eq!(one, two);
        let alpha = one.find("\"alpha\"").unwrap();
        let zeta = one.find("\"zeta\"").unwrap();
        assert!(alpha < zeta, "findings must serialize in sorted order");
        assert!(one.contains("\"1/2\""));
    }
}
