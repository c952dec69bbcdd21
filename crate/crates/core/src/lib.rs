//! Token graphs, combined voltage graphs and their covers, and the symmetry
//! machinery used to check which token graphs arise as cyclic covers.

pub mod algebra;
pub mod cli;
pub mod cover;
pub mod error;
pub mod graph;
pub mod report;
pub mod symmetry;
pub mod token;

pub use error::{Error, Result};
