//! Exact toric cohomology, cone arithmetic and Riemann-Roch bookkeeping for
//! checking Bott vanishing on Fano 3-folds.

pub mod chow;
pub mod class;
pub mod cohomology;
pub mod data;
pub mod error;
pub mod fan;
pub mod lattice;
pub mod verify;

pub use error::{Error, Result};
