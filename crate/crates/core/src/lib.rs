pub mod error;
pub mod fixtures;
pub mod gf2;
pub mod scheme;

pub use error::{Error, Result, Violation};
pub mod bicolor;
pub mod homology;
pub mod rcc;
pub mod moves;
pub mod cli;
