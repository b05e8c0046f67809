//! Exact computations with multi-modulus regular and class-regular partitions.

pub mod chartable;
pub mod cyclotomic;
pub mod error;
pub mod glaisher;
pub mod partition;
pub mod poly;
pub mod ratfunc;
pub mod scalar;
pub mod series;
pub mod stats;
pub mod symfunc;
pub mod verify;

pub use error::{Error, Result};
