//! Built-in example catalog.
//!
//! - `abelian2`, `abelian4`, `abelian6`, `abelian8`: abelian algebras with
//!   the standard symplectic form pairing `(e_2i, e_2i+1)`;
//! - `heis4`: the 4-dimensional Heisenberg-type algebra `[e0, e1] = e2`
//!   with `omega = e0* ^ e2* + e1* ^ e3*`;
//! - `aff1`, `aff2`, `aff3`: aff(R^n) with the exact form `delta alpha` for
//!   the regular datum (g the last dual vector, N the single-block shift).

use crate::affn::{build_aff, regular_functional};
use crate::exactlin::{rat_int, Matrix};
use crate::io::AlgebraSpecFile;
use crate::liealg::LieAlgebra;
use crate::symplectic::SymplecticStructure;

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub file: AlgebraSpecFile,
}

pub const NAMES: [&str; 8] = [
    "abelian2", "abelian4", "abelian6", "abelian8", "aff1", "aff2", "aff3", "heis4",
];

/// All built-in entries, in the order of [`NAMES`].
pub fn all() -> Vec<CatalogEntry> {
    NAMES.iter().map(|n| entry(n).unwrap()).collect()
}

/// Emits one entry by name.
pub fn entry(name: &str) -> Option<CatalogEntry> {
    let (description, file): (&'static str, AlgebraSpecFile) = match name {
        "abelian2" => ("abelian R^2, standard omega", abelian_file(1)),
        "abelian4" => ("abelian R^4, standard omega", abelian_file(2)),
        "abelian6" => ("abelian R^6, standard omega", abelian_file(3)),
        "abelian8" => ("abelian R^8, standard omega", abelian_file(4)),
        "aff1" => ("aff(R^1) with the exact regular form", aff_file(1)),
        "aff2" => ("aff(R^2) with the exact regular form", aff_file(2)),
        "aff3" => ("aff(R^3) with the exact regular form", aff_file(3)),
        "heis4" => (
            "Heisenberg-type algebra [e0,e1]=e2, omega = e0*^e2* + e1*^e3*",
            heis4_file(),
        ),
        _ => return None,
    };
    Some(CatalogEntry {
        name: NAMES.iter().find(|n| **n == name)?,
        description,
        file,
    })
}

/// Parses an entry straight into a symplectic structure (every built-in
/// carries omega).
pub fn symplectic(name: &str) -> Option<SymplecticStructure> {
    let parsed = entry(name)?.file.parse().expect("catalog entries validate");
    parsed.symplectic().cloned()
}

fn abelian_file(n: usize) -> AlgebraSpecFile {
    let mut omega = Matrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        omega[(2 * i, 2 * i + 1)] = rat_int(1);
        omega[(2 * i + 1, 2 * i)] = rat_int(-1);
    }
    AlgebraSpecFile::from_parts(&LieAlgebra::abelian(2 * n), Some(&omega))
}

fn heis4_file() -> AlgebraSpecFile {
    let algebra = LieAlgebra::new(4, &[(0, 1, vec![(2, rat_int(1))])]).unwrap();
    let mut omega = Matrix::zeros(4, 4);
    omega[(0, 2)] = rat_int(1);
    omega[(2, 0)] = rat_int(-1);
    omega[(1, 3)] = rat_int(1);
    omega[(3, 1)] = rat_int(-1);
    AlgebraSpecFile::from_parts(&algebra, Some(&omega))
}

fn aff_file(n: usize) -> AlgebraSpecFile {
    let algebra = build_aff(n);
    let omega = regular_functional(n).delta();
    AlgebraSpecFile::from_parts(&algebra, Some(&omega))
}
