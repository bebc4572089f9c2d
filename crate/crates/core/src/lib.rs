//! Computational toolkit for topological field theory at desk scale.
//!
//! The crate is split by subject:
//!
//! - [`excalc`]: simplicial complexes, (co)boundary operators, Hodge Laplacians,
//!   Hodge decomposition, Betti numbers.
//! - [`cspartition`]: regularized Laplacian determinants and the Abelian
//!   Chern–Simons partition function built from them.
//! - [`knot`]: planar diagrams, Kauffman bracket, Jones polynomial, skein checks.
//! - [`anyon`]: fusion tables of chiral CFTs, Bratteli counting, SU(2)_k data,
//!   Ising conformal blocks and their monodromy.
//! - [`latgauge`]: SU(2) lattice gauge fields, holonomies and Wilson loops.
//! - [`qmcore`]: finite-dimensional evolution, Dyson series, free propagators.
//!
//! Everything is a pure function of its inputs; randomness only enters through
//! explicit seeds.

pub mod anyon;
pub mod cspartition;
pub mod excalc;
pub mod knot;
pub mod latgauge;
pub mod linalg;
pub mod qmcore;
pub mod serial;

pub use anyon::{FusionTable, Su2kData};
pub use cspartition::{CsPartitionResult, DeterminantReport};
pub use excalc::{Cochain, HodgeDecomposition, HodgeMetric, SimplicialComplex};
pub use knot::{KnotDiagram, LaurentPolynomial, LevelEvaluation};
pub use latgauge::{LatticeGaugeField, LatticePath, Su2Matrix};
pub use qmcore::{HermitianOperator, PerturbationProblem, QuantumState};

pub use nalgebra::{DMatrix, DVector};
pub use num_rational::Rational64;

/// Complex scalar used throughout.
pub type C64 = nalgebra::Complex<f64>;
