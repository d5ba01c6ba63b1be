pub mod analysis;
pub mod arith;
pub mod cli;
pub mod error;
pub mod germ;
pub mod hermite;
pub mod pade;
pub mod potential;
pub mod quad;
pub mod roots;

pub use error::{Error, Result};
