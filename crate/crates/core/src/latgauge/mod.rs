//! SU(2) lattice gauge fields on periodic hypercubic lattices.

mod lattice;
mod su2;

pub use lattice::{random_gauge_function, LatticeGaugeField, LatticePath, Step};
pub use su2::Su2Matrix;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LatticeError {
    #[error("bad lattice size: {0}")]
    Size(String),
    #[error("bad path: {0}")]
    Path(String),
    #[error("path from {start:?} ends at {end:?}, not a loop")]
    NotClosed { start: Vec<usize>, end: Vec<usize> },
    #[error("{0}")]
    Domain(String),
}
