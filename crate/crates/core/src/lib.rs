//! Time-frequency phase-space toolkit: Gabor, Wigner, and diamond products,
//! the transforms that induce them, weighted mixed norms, and three
//! phase-space evolutions of the cubic nonlinear Schrödinger equation with a
//! split-step reference solver.
//!
//! Everything lives on centered periodic grids; integrals are one-period
//! rectangle sums and convolutions are circular, so the product identities,
//! orthogonality relations, and conservation laws certified in the test suite
//! hold to roundoff rather than truncation error.

pub mod error;
mod fft;
pub mod grid;
pub mod metrics;
pub mod ops;
pub mod sampling;
pub mod transforms;

pub use error::{Error, Result};
pub use grid::{Grid, PhaseField, Signal};
