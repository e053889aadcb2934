//! Indecomposable permutations enumerated by inversion count under
//! classical pattern restrictions.

pub mod bijections;
pub mod counts;
pub mod error;
pub mod harness;
pub mod objects;
pub mod oracle;
pub mod perm;
pub mod report;
pub mod series;

pub use error::{Error, Result};
pub use perm::{PatternSet, Permutation, SubdiagonalSequence};
