//! Biorthogonal entanglement of non-Hermitian free-fermion chains.
//!
//! The crate is `no_std` (with `alloc`). Everything here is a pure function of
//! its inputs; IO, configuration and parallel sweeps live in the `nhent` crate.
//!
//! Layout follows the computation pipeline:
//! [`numerics`] (dense complex linear algebra) → [`band`] (Bloch Hamiltonian,
//! exceptional points) → [`state`] (momentum grids, biorthogonal filling,
//! correlation matrices) → [`entanglement`] (spectra, entropy, diagnostics) →
//! [`scaling`] (central-charge fits, towers, sweeps, classification).
//! [`spin`] holds the spin-chain analogues.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod band;
pub mod entanglement;
pub mod error;
pub mod numerics;
pub mod scaling;
pub mod spin;
pub mod state;

pub use error::{Error, Result};
pub use num_complex::Complex64 as C64;

/// Convenience constructor for a complex number.
#[inline]
pub const fn c64(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}
