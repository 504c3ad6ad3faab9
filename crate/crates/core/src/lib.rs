//! Gelfond-Bernstein bases of Müntz spaces `span(1, t^{r₁}, …, t^{rₙ})` and the
//! curve toolkit built on them.
//!
//! Exact routes run in arbitrary precision rationals for integer exponents;
//! float routes accept any real exponents. The crate is `no_std` and needs
//! only `alloc`.
#![no_std]

extern crate alloc;

pub mod blossom;
pub mod curves;
pub mod dimelev;
pub mod divided_diff;
pub mod error;
mod fmath;
pub mod gelfond_basis;
pub mod linalg;
pub mod partitions;
pub mod points;
pub mod poly;
pub mod scalar;
pub mod schur;

pub use error::{Error, Result};
