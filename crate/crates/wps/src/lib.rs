//! Classification toolkit for quasismooth del Pezzo hypersurfaces in
//! weighted projective 3-space.
//!
//! A hypersurface of degree `d` in `P(a0, a1, a2, a3)` is described by the
//! quintuple `(a0, a1, a2, a3; d)`. Its Fano index is `I = a0+a1+a2+a3 - d`,
//! and the surface is del Pezzo exactly when `I > 0`. This crate decides, for
//! the generic member of such a family:
//!
//! - well-formedness and quasismoothness ([`criteria`]),
//! - membership in the known classification lists: the special types
//!   (degenerate / Yau / Yu / Boyer), the one- and two-parameter series, and
//!   the sporadic cases ([`classify`]),
//! - reproduction of those lists by direct enumeration ([`enumerate`]),
//! - the Bishop and Lichnerowicz Kaehler-Einstein obstructions, exactly
//!   ([`obstructions`]),
//! - the quotient singularities, log canonical threshold data, and the
//!   intersection numbers of one distinguished family ([`invariants`]).
//!
//! All arithmetic is exact: unbounded integers and rationals, no floating
//! point in any numeric path.

mod arith;
pub mod classify;
pub mod criteria;
pub mod enumerate;
pub mod golden;
pub mod invariants;
pub mod obstructions;
pub mod record;
pub mod series;
pub mod weights;

pub use record::ClassifiedRecord;
pub use weights::{Rational, WeightSystem};

use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Error)]
pub enum WpsError {
    /// Malformed input: nonpositive weight or degree, unparsable argument.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// Structurally valid input outside an operation's domain
    /// (e.g. a non-Fano weight system passed to a del Pezzo invariant).
    #[error("domain error: {0}")]
    Domain(String),
    /// A classification data file could not be read or parsed.
    #[error("classification data: {0}")]
    Data(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, WpsError>;
