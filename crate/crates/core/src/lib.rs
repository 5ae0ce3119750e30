//! Exact invariants of plane quartics and binary octics, and the potential
//! reduction type of a smooth plane quartic over ℚ at a prime.

pub mod batch;
pub mod classifier;
pub mod error;
pub mod fixtures;
pub mod forms;
pub mod invariants;
pub mod rational;
pub mod toggle;
pub mod valuations;

pub use error::{Error, Result};
