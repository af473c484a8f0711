//! Exact computations for the Gaudin model of type G2.

pub mod error;
pub mod bethe;
pub mod cli;
pub mod diffop;
pub mod exact;
pub mod json;
pub mod repn;
pub mod rootdata;
pub mod sgrass;
pub mod strat;
pub mod verify;

pub use error::{Error, Result};
