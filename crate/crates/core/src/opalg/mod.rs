//! Normal forms and exact calculus for finite-difference (shift) operators
//! and differential operators on polynomial space, a representation-
//! independent expression tree in the abstract generators a, b, and exact
//! matrices of operators in a polynomial basis.

mod diff;
mod expr;
mod matrix;
mod shift;

pub use diff::DiffOp;
pub use expr::{realize, HeisenbergRep, OpExpr, Operator};
pub use matrix::{matrix_in_basis, MatrixQ};
pub use shift::ShiftOp;
