//! Exact spectroscopy for a few particles in a one-dimensional harmonic trap
//! with zero-range interactions.
//!
//! Every level is classified by the symmetry group `S_N × Z₂ × U(1)`:
//! permutations of identical particles, parity inversion, and the separable
//! center-of-mass oscillator. This crate computes, in exact integer
//! arithmetic,
//!
//! - partitions, Young diagrams and `S_N` irrep dimensions ([`partition`]),
//! - character tables of `S_N` and `S_N × Z₂` and Kostka numbers ([`character`]),
//! - the non-interacting shell and grand-angular-momentum reductions ([`oscillator`]),
//! - multi-component Bose/Fermi branching and spin decompositions ([`branching`]),
//! - the hard-core sector ("snippet") representation and its projected bases ([`snippet`]),
//! - per-irrep spectra and the adiabatic map between the two limits ([`mapping`]),
//! - brute-force explicit representations used as cross-checks ([`oracle`]).
//!
//! The crate is `no_std` and only needs `alloc`.
//!
//! ```
//! use symtrap_core::oscillator::lambda_reduction;
//! use symtrap_core::partition::Partition;
//!
//! let red = lambda_reduction(4, 2).unwrap();
//! assert_eq!(red.counts(), &[0, 1, 1, 0, 0]);
//! assert_eq!(red.get(&"2^2".parse::<Partition>().unwrap()), 1);
//! ```

#![no_std]

extern crate alloc;

pub mod branching;
pub mod character;
pub mod error;
pub mod mapping;
pub mod numeric;
pub mod oracle;
pub mod oscillator;
pub mod parity;
pub mod partition;
pub mod perm;
pub mod snippet;

pub use error::{Error, Result};
pub use parity::Parity;
pub use partition::{CycleType, Partition};

/// Largest particle number accepted by group-theoretic operations.
pub const MAX_PARTICLES: usize = 12;

/// Largest particle number for which full `S_N × Z₂` character tables and
/// sector characters are generated.
pub const MAX_TABLE_PARTICLES: usize = 8;
