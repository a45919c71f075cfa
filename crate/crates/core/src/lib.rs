//! Exact operator algebra for finite-difference and differential spectral
//! problems with polynomial eigenfunctions.
//!
//! The crate realizes the Heisenberg pair `[a, b] = 1` both as `(d/dx, x)`
//! and as a pair of finite-difference operators, builds the sl2 generators
//! on top of it, and solves the resulting exactly-solvable and
//! quasi-exactly-solvable spectral problems over exact rational arithmetic.
//! Every identity is checked exactly; no floating point enters the core.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod exactpoly;
pub mod families;
pub mod opalg;
pub mod qes;
pub mod sl2;
pub mod solvable;

mod error;

pub use error::Error;

pub type Result<T> = core::result::Result<T, Error>;
