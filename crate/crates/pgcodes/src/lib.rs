//! Constant-dimension subspace codes built from lifted MRD codes, generators
//! of hyperbolic quadric pencils and spread structures, together with an
//! independent verification engine.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod algebra;
pub mod geometry;
pub mod rankcodes;
pub mod constructions;
pub mod verify;
pub mod error;

pub use error::{Error, Result};
