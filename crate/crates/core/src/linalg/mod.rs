//! Dense exact linear algebra over a [`Field`](crate::Field).
//!
//! Vectors are plain `Vec<E>` in coordinates. Subspaces are stored by their
//! reduced row-echelon basis, so equal subspaces compare equal.

mod closure;
mod matrix;
mod subspace;

pub use closure::{ideal_closure, mult_closure};
pub use matrix::{kernel, mat_mul, mat_vec, rank, rref, solve, Matrix, Rref};
pub use subspace::{quotient_space, Quotient, Subspace};
