//! Exact computer algebra for finite-dimensional Lie superalgebras.

pub mod enveloping;
pub mod error;
pub mod families;
pub mod format;
pub mod io;
pub mod linalg;
pub mod reps;
pub mod roots;
pub mod structure;
pub mod supercomm;
pub mod superalgebra;
pub mod verify;

pub use error::{Error, Result};
