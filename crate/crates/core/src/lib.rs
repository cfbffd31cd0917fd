//! Exact computation in the Schur basis of symmetric functions.
//!
//! The crate covers Littlewood-Richardson coefficients and skew expansions
//! ([`lr`]), sparse Schur-basis arithmetic ([`schur`]), the part-dealing
//! ("tilde") operation on pairs and tuples of partitions and skew shapes
//! ([`tilde`]), Jacobi-Trudi and Plücker expansions ([`jacobi_trudi`]), the
//! posets of pairs ordered by Schur-positivity ([`poset`]) and exhaustive
//! verification sweeps over all of the above ([`verify`]).

pub mod config;
pub mod error;
pub mod jacobi_trudi;
pub mod lr;
pub mod partition;
pub mod poset;
pub mod schur;
pub mod tilde;
pub mod verify;

pub use error::{Error, Result};
pub use partition::{IntSequence, Partition, SkewShape};
pub use schur::SchurVector;
