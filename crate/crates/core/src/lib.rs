pub mod cli;
pub mod error;
pub mod parameters;
pub mod primes;
pub mod scanner;
pub mod smoothing;
pub mod torus_lab;
mod serde_util;
pub mod zeta_kernels;

pub use error::{Error, Result};
