//! Exact localization engine for the circle-fixed components of hyper-Quot
//! schemes over the projective line.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod error;
pub mod locus;
pub mod mirror;
pub mod push;
pub mod rng;
pub mod tableau;

pub use error::{Error, Result};

/// Engine version, folded into cache keys and report provenance.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
