//! Fusion data for chiral CFTs, SU(2)_k braiding data and conformal blocks.

mod blocks;
mod su2k;
mod table;

pub use blocks::{ising_four_point_blocks, ising_monodromy, ising_monodromy_on, vertex_correlator, MonodromyContour};
pub use su2k::{braid_eigenvalue_ratio_check, braid_skein_check, braid_skein_residual, su2k, Su2kData};
pub use table::{chiral_boson_lattice, load_cft, BratteliDiagram, FusionTable, IDENTITY, KNOWN_CFTS};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AnyonError {
    #[error("unknown CFT {0:?}; known: ising, z3_parafermion, chiral_boson_rational")]
    UnknownCft(String),
    #[error("unknown field label {0:?}")]
    UnknownLabel(String),
    #[error("channel {a} x {b} -> {c} is forbidden")]
    ForbiddenChannel { a: String, b: String, c: String },
    #[error("invalid fusion table: {0}")]
    InvalidTable(String),
    #[error("out of domain: {0}")]
    Domain(String),
    #[error("singular configuration: {0}")]
    Singular(String),
    #[error("{0} is a branch point")]
    BranchPoint(String),
    #[error("continuation failed: {0}")]
    Continuation(String),
    #[error("path count overflowed at level {0}")]
    Overflow(usize),
}
