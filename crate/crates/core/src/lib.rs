pub mod decider;
pub mod error;
pub mod exact;
pub mod linkalg;
pub(crate) mod report;
pub mod selfcheck;
pub mod symlaurent;
pub mod torsion;

pub use error::{Error, Result};
