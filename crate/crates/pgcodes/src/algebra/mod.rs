//! Finite fields, matrices over them, and Singer cycles.

pub mod bits;
pub mod conway;
pub mod field;
pub mod matrix;
pub mod singer;

pub use field::{prime_power, Embedding, Field, FieldElement};
pub use matrix::{Matrix, Rref};
pub use singer::SingerFrame;
