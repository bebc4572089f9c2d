//! Knot and link invariants from planar diagrams.
//!
//! Diagrams use PD codes: each crossing lists four arc labels
//! counterclockwise, starting from the incoming under-strand. A crossing is
//! positive when the over-strand runs from the fourth slot to the second.
//! The Jones polynomial is computed from the Kauffman bracket and the writhe
//! and returned in half-units of `t` (exponent `n` means `t^(n/2)`).

mod diagram;
mod invariants;
mod laurent;

pub use diagram::{parse_pd, KnotDiagram, MAX_CROSSINGS};
pub use invariants::{
    evaluate_at_level, jones, kauffman_bracket, level_q, loop_value, unnormalized_jones, verify_jones_skein, writhe,
    LevelEvaluation,
};
pub use laurent::LaurentPolynomial;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KnotError {
    #[error("empty diagram (no crossings and no loops)")]
    EmptyDiagram,
    #[error("malformed diagram: {0}")]
    MalformedDiagram(String),
    #[error("parse error in {token:?}: {message}")]
    Parse { token: String, message: String },
    #[error("diagram has {0} crossings; the state sum is capped at {MAX_CROSSINGS}")]
    TooManyCrossings(usize),
    #[error("diagram has no consistent orientation")]
    Orientation,
    #[error("level must be >= 1, got {0}")]
    Level(i64),
    #[error("bad braid word: {0}")]
    Braid(String),
}
