//! Exact combinatorics of real osculating-flag Schubert problems.

pub mod conic_monodromy;
pub mod cylgrowth;
pub mod decgd;
pub mod figures;
pub mod moduli_cover;
pub mod partitions;
pub mod tableaux;
pub mod verify;

pub use partitions::{lr_coefficient, syt_count, BoxFrame, Partition, PartitionError};
