pub mod cli;
pub mod consensus;
pub mod detect;
pub mod error;
pub mod experiments;
pub mod graph;
pub mod models;
mod optimize;
pub mod quantizer;

pub use error::{Error, Result};
