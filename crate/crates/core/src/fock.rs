//! Truncated Fock-space vectors.
//!
//! A [`FockVector`] holds complex amplitudes over photon numbers `0..dim`.
//! Vectors are deliberately allowed to be unnormalized: the field components
//! produced by the Jaynes-Cummings evolution each carry only part of the total
//! probability.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Default bound on probability mass that may be lost to truncation.
pub const DEFAULT_TAIL_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct FockVector {
    amplitudes: Vec<Complex64>,
}

impl FockVector {
    pub fn zeros(dim: usize) -> Self {
        assert!(dim >= 1, "Fock dimension must be at least 1");
        Self {
            amplitudes: vec![Complex64::new(0.0, 0.0); dim],
        }
    }

    /// Number state `|n⟩` in a space of dimension `dim`.
    pub fn basis(n: usize, dim: usize) -> Self {
        assert!(n < dim, "photon number {n} outside dimension {dim}");
        let mut v = Self::zeros(dim);
        v.amplitudes[n] = Complex64::new(1.0, 0.0);
        v
    }

    pub fn from_amplitudes(amplitudes: Vec<Complex64>) -> Result<Self> {
        if amplitudes.is_empty() {
            return Err(Error::DimensionMismatch { left: 0, right: 1 });
        }
        if amplitudes.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFinite("Fock amplitudes"));
        }
        Ok(Self { amplitudes })
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|c| c.norm_sqr()).sum()
    }

    /// `⟨self|other⟩`, conjugate-linear in `self`.
    pub fn inner(&self, other: &FockVector) -> Result<Complex64> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    pub fn scale(&self, factor: Complex64) -> FockVector {
        FockVector {
            amplitudes: self.amplitudes.iter().map(|c| c * factor).collect(),
        }
    }

    /// Applies an operator diagonal in the number basis, `f(n̂)`.
    pub fn apply_diag<F>(&self, f: F) -> FockVector
    where
        F: Fn(usize) -> f64,
    {
        FockVector {
            amplitudes: self
                .amplitudes
                .iter()
                .enumerate()
                .map(|(n, c)| c * f(n))
                .collect(),
        }
    }

    /// London phase operator `V̂`: `|n⟩ → |n−1⟩`, annihilating the vacuum.
    pub fn lower(&self) -> FockVector {
        let dim = self.dim();
        let mut out = FockVector::zeros(dim);
        out.amplitudes[..dim - 1].copy_from_slice(&self.amplitudes[1..]);
        out
    }

    /// `V̂†`: `|n⟩ → |n+1⟩`. The top amplitude leaves the truncated space, so
    /// it must carry no more than `tail_tolerance` probability.
    pub fn raise(&self, tail_tolerance: f64) -> Result<FockVector> {
        let dim = self.dim();
        let lost = self.amplitudes[dim - 1].norm_sqr();
        if lost > tail_tolerance {
            return Err(Error::TailMass {
                mass: lost,
                tolerance: tail_tolerance,
                dim,
            });
        }
        let mut out = FockVector::zeros(dim);
        out.amplitudes[1..].copy_from_slice(&self.amplitudes[..dim - 1]);
        Ok(out)
    }
}

/// Coherent state `|α⟩` truncated to `dim` photon numbers, with the default
/// tail tolerance.
pub fn coherent_state(alpha: Complex64, dim: usize) -> Result<FockVector> {
    coherent_state_with_tolerance(alpha, dim, DEFAULT_TAIL_TOLERANCE)
}

pub fn coherent_state_with_tolerance(
    alpha: Complex64,
    dim: usize,
    tail_tolerance: f64,
) -> Result<FockVector> {
    if !alpha.is_finite() {
        return Err(Error::NonFinite("coherent amplitude"));
    }
    let mut v = FockVector::zeros(dim);
    // c_{n+1} = c_n α / √(n+1); no factorials, so no overflow at large n.
    let mut c = Complex64::new((-0.5 * alpha.norm_sqr()).exp(), 0.0);
    for (n, slot) in v.amplitudes.iter_mut().enumerate() {
        *slot = c;
        c = c * alpha / ((n + 1) as f64).sqrt();
    }
    let tail = 1.0 - v.norm_sqr();
    if tail > tail_tolerance {
        return Err(Error::TailMass {
            mass: tail,
            tolerance: tail_tolerance,
            dim,
        });
    }
    Ok(v)
}

/// Truncation dimension wide enough for the given coherent amplitudes:
/// `ceil(m + 10√m + 20)` with `m` the largest mean photon number.
pub fn auto_dim(amplitudes: &[Complex64]) -> usize {
    let m = amplitudes
        .iter()
        .map(|a| a.norm_sqr())
        .fold(0.0_f64, f64::max);
    (m + 10.0 * m.sqrt() + 20.0).ceil() as usize
}
