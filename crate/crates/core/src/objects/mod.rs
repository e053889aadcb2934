//! The counted families: partitions, fountains of coins (plain and even),
//! parallelogram polyominoes and compositions, each with an exhaustive
//! generator.

mod composition;
mod fountain;
mod partition;
mod polyomino;

pub use composition::{compositions_of, Composition};
pub use fountain::{even_fountains_of_size, fountains_with_coins, EvenFountain, Fountain};
pub use partition::{partitions_of, Partition, PartitionMode};
pub use polyomino::{polyominoes_with_cells, ParallelogramPolyomino};

use crate::error::{Error, Result};

/// Size caps for the exhaustive generators. Requests above a cap fail
/// instead of being truncated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub fountain_coins: usize,
    pub even_fountain_size: usize,
    pub polyomino_cells: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            fountain_coins: 16,
            even_fountain_size: 10,
            polyomino_cells: 14,
        }
    }
}

pub(crate) fn check(what: &'static str, requested: usize, bound: usize) -> Result<()> {
    if requested > bound {
        Err(Error::Limit {
            what,
            requested,
            bound,
        })
    } else {
        Ok(())
    }
}
