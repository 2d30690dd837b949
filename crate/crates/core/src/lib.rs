//! Von Neumann entropy of the field in mixed-state Jaynes-Cummings dynamics.
//!
//! When either the atom or the field starts in a statistical mixture, the
//! reduced field state is `Σ_k |ψ_k⟩⟨ψ_k|` over a handful of unnormalized
//! components. Their Gram matrix is the density matrix of a "virtual atom"
//! purifying the field, so its small spectrum yields the field entropy.
//!
//! - [`fock`]: truncated Fock vectors, coherent states, phase operators
//! - [`dynamics`]: analytic evolution of the field components
//! - [`virtual_atom`]: Gram matrix, spectrum, entropies, purity
//! - [`oracle`]: dense joint density-matrix reference path
//! - [`sweep`], [`config`]: time sweeps, CSV output and CLI configuration

pub mod config;
pub mod dynamics;
pub mod error;
pub mod fock;
pub mod linalg;
pub mod oracle;
pub mod sweep;
pub mod virtual_atom;

pub use error::{Error, Result};
