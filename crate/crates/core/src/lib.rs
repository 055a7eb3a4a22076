pub mod axioms;
pub mod cli;
pub mod drw;
pub mod error;
pub mod forms;
pub mod json;
pub mod linalg;
pub mod ring;
pub mod sample;
pub mod witt;

pub use error::{Error, Result};
