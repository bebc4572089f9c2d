//! Finite-dimensional quantum mechanics (ħ = 1): evolution in the Schrödinger
//! and Heisenberg pictures, the Dyson series of time-dependent perturbation
//! theory, and the free-particle propagator.

mod dyson;
mod operators;
mod propagator;

pub use dyson::{dyson_amplitude, rabi_probability, transition_probability, PerturbationProblem, MIN_GRID_POINTS};
pub use operators::{
    anticommutator, commutator, evolve_schrodinger, heisenberg_evolve, pauli, HermitianOperator, QuantumState,
};
pub use propagator::{
    free_propagator, free_propagator_dist2, path_integral_propagator, path_integral_reference, PathIntegralConfig,
    SpatialGrid, TimeAxis,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum QmError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("bad operator: {0}")]
    Operator(String),
    #[error("bad state: {0}")]
    State(String),
    #[error("order must be 1 or 2, got {0}")]
    Order(u8),
    #[error("insufficient resolution: {0}")]
    Resolution(String),
    #[error("singular: {0}")]
    Singular(String),
    #[error("{0}")]
    Domain(String),
}
