//! Exact verification of operator identities on Lie algebras and Jordan
//! triple systems.
//!
//! Products are stored as sparse structure constants over the rationals.
//! Every identity is multilinear (or polarised to be), so it is decided by
//! evaluating it on all tuples of basis vectors; a failure comes back as the
//! lexicographically smallest failing tuple with its residual.

pub mod catalog;
pub mod check;
pub mod error;
pub mod identities;
pub mod jordan;
pub mod lie;
pub mod operator;
pub mod rrho;
pub mod sample;
pub mod scalar;
pub mod structure;
pub mod vector;

pub use check::{CheckReport, Witness};
pub use error::Error;
pub use identities::JtsVariant;
pub use operator::{Operator, Polynomial};
pub use scalar::Scalar;
pub use structure::{BilinearStructure, TrilinearStructure};
pub use vector::Vector;
