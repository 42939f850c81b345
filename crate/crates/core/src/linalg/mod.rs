//! Exact sparse integer linear algebra.
//!
//! Everything here is over `Z` with arbitrary-precision entries: coefficient
//! growth during elimination is the classic failure mode of fixed-width Smith
//! normal form, so no fixed-width arithmetic is permitted anywhere in this
//! module. No floating point, no rationals.

mod abelian;
mod chain;
mod dense;
mod snf;
mod sparse;

pub use abelian::AbelianGroupStructure;
pub use chain::{homology_of_pair, ChainError};
pub use dense::DenseIntMatrix;
pub use snf::{smith_normal_form, SnfResult};
pub use sparse::{CoordParseError, SparseIntMatrix};
