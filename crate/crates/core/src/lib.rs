pub mod charts;
pub mod cli;
pub mod diophantine;
pub mod error;
pub mod fgab;
pub mod ringspec;
pub mod separation;
pub mod sheaves;

pub use error::{Error, Result};
