#![no_std]

//! Exact algebra for relative quadratic forms.
//!
//! A map `q: M -> N` between `S`-modules is *`S/R`-quadratic* when
//! `q(s m) = s^2 q(m)` for every `s` in `S` but its polarisation
//! `q(x + y) - q(x) - q(y)` is only required to be bilinear over a subring `R`.
//! This crate computes, for finite-dimensional `S` over an exact field, the
//! universal algebra `Q = (S (x)_R S) (x)_Delta S` that classifies such maps,
//! its augmentation kernel `W`, the Kaehler differentials of `S/R`, and the
//! explicit presentations of `Q` at and away from the prime 2. It also builds
//! and checks concrete quadratic maps (derivation forms, higher-derivative
//! forms in characteristic 2, exotic forms from functionals on `W`) and counts
//! quadratic maps over finite rings.
//!
//! Everything is exact: prime fields, arbitrary-precision rationals, simple
//! algebraic extensions, multivariate polynomials and rational functions.
//! The crate only needs `alloc`.

extern crate alloc;

pub mod algebra;
pub mod census;
pub mod error;
pub mod exact;
pub mod kaehler;
pub mod linalg;
pub mod quad;
pub mod ring;

pub use error::{Error, Result};
pub use ring::{Degree, Field, FiniteRing, Ring};
