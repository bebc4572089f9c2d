//! Discrete exterior calculus on finite abstract simplicial complexes.
//!
//! Simplices are strictly increasing vertex tuples; that order fixes the
//! orientation. Cochains are real vectors indexed by the canonical
//! (lexicographic) order of the simplices of one degree. The Hodge star is a
//! diagonal positive metric per degree and the codifferential is the metric
//! adjoint of the coboundary.

mod complex;
mod hodge;
mod operators;

pub use complex::{parse_complex, SimplicialComplex, Simplex};
pub use hodge::{harmonic_basis, hodge_decompose, HodgeDecomposition};
pub use operators::{
    betti_numbers, boundary_matrix, coboundary_matrix, down_laplacian, euler_characteristic,
    hodge_laplacian, up_laplacian, weighted_coboundary, Cochain, HodgeMetric,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ExcalcError {
    #[error("malformed simplex {simplex:?}: {reason}")]
    MalformedSimplex { simplex: Vec<usize>, reason: String },
    #[error("complex has no simplices")]
    EmptyComplex,
    #[error("degree {degree} out of range {min}..={max}")]
    Degree { degree: usize, min: usize, max: usize },
    #[error("metric error: {0}")]
    Metric(String),
    #[error("cochain of degree {degree} has {got} values, expected {expected}")]
    CochainLength {
        degree: usize,
        got: usize,
        expected: usize,
    },
    #[error("Euler characteristic mismatch: simplex counts give {from_counts}, Betti numbers give {from_betti}")]
    Consistency { from_counts: i64, from_betti: i64 },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
