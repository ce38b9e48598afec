//! The JSON algebra file format.
//!
//! A file describes a Lie algebra by dimension and a sparse bracket list,
//! optionally with basis names and a dense `omega` grid; all scalars are
//! rational strings (`"p"` or `"p/q"`). Indices are 0-based. Example:
//!
//! ```json
//! {
//!   "dim": 4,
//!   "brackets": [ { "lhs": 0, "rhs": 1, "out": [ { "k": 2, "c": "1" } ] } ],
//!   "omega": [
//!     ["0", "0", "1", "0"],
//!     ["0", "0", "0", "1"],
//!     ["-1", "0", "0", "0"],
//!     ["0", "-1", "0", "0"]
//!   ]
//! }
//! ```

use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactlin::{format_rational, parse_rational, Matrix, Rational};
use crate::liealg::{BracketSpec, LieAlgebra, LieError};
use crate::symplectic::{SymplecticError, SymplecticStructure};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpecFile {
    pub dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    #[serde(default)]
    pub basis: Option<Vec<String>>,
    pub brackets: Vec<BracketEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    #[serde(default)]
    pub omega: Option<Vec<Vec<String>>>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub lhs: usize,
    pub rhs: usize,
    pub out: Vec<OutTerm>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct OutTerm {
    pub k: usize,
    pub c: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecFileError {
    #[error("cannot read {path}: {detail}")]
    Io { path: String, detail: String },
    #[error("invalid JSON: {detail}")]
    Json { detail: String },
    #[error("invalid value at {location}: {detail}")]
    Field { location: String, detail: String },
    #[error("bracket table rejected: {0}")]
    Lie(#[from] LieError),
    #[error("omega rejected: {0}")]
    Symplectic(#[from] SymplecticError),
}

/// A validated file: a bare Lie algebra, or a symplectic structure when the
/// file carries an `omega` grid.
#[derive(Debug, Clone)]
pub enum ParsedAlgebra {
    Algebra(LieAlgebra),
    Symplectic(SymplecticStructure),
}

impl ParsedAlgebra {
    pub fn algebra(&self) -> &LieAlgebra {
        match self {
            ParsedAlgebra::Algebra(a) => a,
            ParsedAlgebra::Symplectic(s) => s.algebra(),
        }
    }

    pub fn symplectic(&self) -> Option<&SymplecticStructure> {
        match self {
            ParsedAlgebra::Algebra(_) => None,
            ParsedAlgebra::Symplectic(s) => Some(s),
        }
    }
}

impl AlgebraSpecFile {
    pub fn from_json(text: &str) -> Result<Self, SpecFileError> {
        serde_json::from_str(text).map_err(|e| SpecFileError::Json {
            detail: e.to_string(),
        })
    }

    /// Deterministic pretty serialization (fixed field order, then newline).
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    /// Validates the file into a Lie algebra or symplectic structure; every
    /// failure carries either a field location or a structural witness.
    pub fn parse(&self) -> Result<ParsedAlgebra, SpecFileError> {
        let mut brackets: Vec<BracketSpec> = Vec::with_capacity(self.brackets.len());
        for (row, entry) in self.brackets.iter().enumerate() {
            let mut out = Vec::with_capacity(entry.out.len());
            for (col, term) in entry.out.iter().enumerate() {
                let c = parse_rational(&term.c).map_err(|e| SpecFileError::Field {
                    location: format!("brackets[{row}].out[{col}].c"),
                    detail: e.to_string(),
                })?;
                out.push((term.k, c));
            }
            brackets.push((entry.lhs, entry.rhs, out));
        }
        let algebra = match &self.basis {
            Some(names) => {
                if names.len() != self.dim {
                    return Err(SpecFileError::Field {
                        location: "basis".into(),
                        detail: format!("expected {} names, found {}", self.dim, names.len()),
                    });
                }
                LieAlgebra::with_names(self.dim, &brackets, names.clone())?
            }
            None => LieAlgebra::new(self.dim, &brackets)?,
        };
        let Some(grid) = &self.omega else {
            return Ok(ParsedAlgebra::Algebra(algebra));
        };
        if grid.len() != self.dim {
            return Err(SpecFileError::Field {
                location: "omega".into(),
                detail: format!("expected {} rows, found {}", self.dim, grid.len()),
            });
        }
        let mut omega = Matrix::zeros(self.dim, self.dim);
        for (i, row) in grid.iter().enumerate() {
            if row.len() != self.dim {
                return Err(SpecFileError::Field {
                    location: format!("omega[{i}]"),
                    detail: format!("expected {} entries, found {}", self.dim, row.len()),
                });
            }
            for (j, cell) in row.iter().enumerate() {
                omega[(i, j)] = parse_rational(cell).map_err(|e| SpecFileError::Field {
                    location: format!("omega[{i}][{j}]"),
                    detail: e.to_string(),
                })?;
            }
        }
        Ok(ParsedAlgebra::Symplectic(SymplecticStructure::new(
            algebra, omega,
        )?))
    }

    /// Round-trip constructor from validated structures (used by the catalog
    /// and by report emission).
    pub fn from_parts(algebra: &LieAlgebra, omega: Option<&Matrix>) -> Self {
        let n = algebra.dim();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let out: Vec<OutTerm> = algebra
                    .bracket_basis(i, j)
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
                    .map(|(k, c)| OutTerm {
                        k,
                        c: format_rational(c),
                    })
                    .collect();
                if !out.is_empty() {
                    brackets.push(BracketEntry { lhs: i, rhs: j, out });
                }
            }
        }
        AlgebraSpecFile {
            dim: n,
            basis: algebra.names().map(|names| names.to_vec()),
            brackets,
            omega: omega.map(|m| {
                (0..n)
                    .map(|i| (0..n).map(|j| format_rational(&m[(i, j)])).collect())
                    .collect()
            }),
        }
    }
}

/// Reads and validates an algebra file from disk.
pub fn parse_spec_path(path: &Path) -> Result<ParsedAlgebra, SpecFileError> {
    let text = std::fs::read_to_string(path).map_err(|e| SpecFileError::Io {
        path: path.display().to_string(),
        detail: e.to_string(),
    })?;
    AlgebraSpecFile::from_json(&text)?.parse()
}

/// Convenience used by tests and the momentum command: parse a dense list of
/// rational strings.
pub fn parse_rational_list(items: &[String]) -> Result<Vec<Rational>, SpecFileError> {
    items
        .iter()
        .enumerate()
        .map(|(i, s)| {
            parse_rational(s).map_err(|e| SpecFileError::Field {
                location: format!("[{i}]"),
                detail: e.to_string(),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::rat_int;

    fn heis4_file() -> AlgebraSpecFile {
        AlgebraSpecFile::from_json(
            r#"{
                "dim": 4,
                "brackets": [ { "lhs": 0, "rhs": 1, "out": [ { "k": 2, "c": "1" } ] } ],
                "omega": [
                    ["0", "0", "1", "0"],
                    ["0", "0", "0", "1"],
                    ["-1", "0", "0", "0"],
                    ["0", "-1", "0", "0"]
                ]
            }"#,
        )
        .unwrap()
    }

    #[test]
    fn parse_heis4_round_trip() {
        let parsed = heis4_file().parse().unwrap();
        let s = parsed.symplectic().expect("omega present");
        assert_eq!(s.dim(), 4);
        assert_eq!(s.omega()[(0, 2)], rat_int(1));

        let regenerated = AlgebraSpecFile::from_parts(s.algebra(), Some(s.omega()));
        assert_eq!(regenerated, heis4_file());
        let json = regenerated.to_json();
        assert_eq!(AlgebraSpecFile::from_json(&json).unwrap(), regenerated);
    }

    #[test]
    fn file_without_omega_is_bare_algebra() {
        let file = AlgebraSpecFile::from_json(
            r#"{ "dim": 2, "brackets": [ { "lhs": 0, "rhs": 1, "out": [ { "k": 0, "c": "1" } ] } ] }"#,
        )
        .unwrap();
        let parsed = file.parse().unwrap();
        assert!(parsed.symplectic().is_none());
        assert_eq!(parsed.algebra().dim(), 2);
    }

    #[test]
    fn invalid_rational_is_a_positioned_error() {
        let file = AlgebraSpecFile::from_json(
            r#"{ "dim": 2, "brackets": [ { "lhs": 0, "rhs": 1, "out": [ { "k": 0, "c": "1/0" } ] } ] }"#,
        )
        .unwrap();
        match file.parse().unwrap_err() {
            SpecFileError::Field { location, .. } => {
                assert_eq!(location, "brackets[0].out[0].c")
            }
            other => panic!("expected field error, got {other:?}"),
        }
    }

    #[test]
    fn structural_failures_carry_witnesses() {
        // omega that is not closed on the Heisenberg-type algebra
        let mut file = heis4_file();
        file.omega = Some(vec![
            vec!["0".into(), "1".into(), "0".into(), "0".into()],
            vec!["-1".into(), "0".into(), "0".into(), "0".into()],
            vec!["0".into(), "0".into(), "0".into(), "1".into()],
            vec!["0".into(), "0".into(), "-1".into(), "0".into()],
        ]);
        assert!(matches!(
            file.parse().unwrap_err(),
            SpecFileError::Symplectic(SymplecticError::NotClosed { .. })
        ));
    }

    #[test]
    fn unknown_fields_rejected() {
        assert!(AlgebraSpecFile::from_json(r#"{ "dim": 1, "brackets": [], "extra": 1 }"#).is_err());
    }
}
