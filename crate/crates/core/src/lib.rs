//! Exact combinatorics for the spt-function.
//!
//! The crate covers ordinary partitions and their geometric statistics,
//! rank statistics, marked partitions and S-partitions, doubly marked
//! partitions with their spt-crank, the bijections between these families,
//! and truncated q-series used to check the generating-function identities
//! coefficient by coefficient. All arithmetic is exact.

pub mod bijection;
pub mod doubly_marked;
pub mod error;
pub mod partition;
pub mod qseries;
pub mod rank;
pub mod spt;

pub use bijection::{
    crank_classes, delta, in_w, lambda_inv, sigma, tau, ClassMember, CrankClassReport, OrbitTrace,
};
pub use doubly_marked::{
    classify, enumerate_dmp, enumerate_u, phi, psi, v_membership, Classification,
    ColumnMarkedPartition, DoublyMarkedPartition, PartitionPair,
};
pub use error::{Error, Result};
pub use partition::{enumerate_partitions, Partition, SmallestPart};
pub use qseries::TruncatedSeries;
pub use rank::{partition_count, RankTable};
pub use spt::{MarkedPartition, NetCrankTable, SPartition};
