//! Field entropy through a virtual atom.
//!
//! The reduced field state of the mixed Jaynes-Cummings evolution is
//! `ρ_F = Σ_k |ψ_k⟩⟨ψ_k|` over `n` unnormalized components. Attaching an
//! orthonormal `n`-level "virtual atom" state `|A_k⟩` to every component gives
//! the pure state `Σ_k |ψ_k⟩|A_k⟩`, whose atom-side reduced density matrix is
//! the Gram matrix `P_ij = ⟨ψ_i|ψ_j⟩` (up to transposition). A pure joint state
//! has equal subsystem entropies, so the spectrum of the small `n × n` Gram
//! matrix gives the field entropy without ever diagonalizing `ρ_F`.
//!
//! Nothing here assumes `n = 4`; any component count works.

use num_complex::Complex64;

use crate::dynamics::{AtomRow, ComponentSet};
use crate::error::{Error, Result};
use crate::linalg::{self, CMatrix};

/// Allowed `|Tr P − 1|` before a Gram matrix is rejected.
pub const TRACE_TOLERANCE: f64 = 1e-8;
/// Max `|P_ij − conj(P_ji)|` accepted for an externally supplied matrix.
pub const HERMITIAN_TOLERANCE: f64 = 1e-10;
/// Eigenvalues in `[−CLAMP_THRESHOLD, 0)` are roundoff and clamped to zero.
pub const CLAMP_THRESHOLD: f64 = 1e-8;
/// Below this, `λ ln λ` is taken as exactly zero.
const ZERO_LOG_CUTOFF: f64 = 1e-300;

/// Density matrix of the virtual atom.
#[derive(Debug, Clone, PartialEq)]
pub struct GramMatrix {
    entries: CMatrix,
    asymmetry: f64,
}

impl GramMatrix {
    /// Validates and symmetrizes an arbitrary matrix.
    pub fn from_matrix(m: CMatrix) -> Result<Self> {
        let asymmetry = m.hermitian_asymmetry();
        if asymmetry > HERMITIAN_TOLERANCE {
            return Err(Error::NonHermitian { asymmetry });
        }
        let entries = m.hermitian_part();
        let trace = entries.trace().re;
        if (trace - 1.0).abs() > TRACE_TOLERANCE {
            return Err(Error::Normalization {
                trace,
                tolerance: TRACE_TOLERANCE,
            });
        }
        Ok(Self { entries, asymmetry })
    }

    pub fn entries(&self) -> &CMatrix {
        &self.entries
    }

    pub fn size(&self) -> usize {
        self.entries.size()
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.entries[(i, j)]
    }

    /// Asymmetry removed by symmetrization.
    pub fn asymmetry(&self) -> f64 {
        self.asymmetry
    }
}

/// Eigenvalues after clamping and renormalization.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumResult {
    /// Descending, each in `[0, 1]`, summing to one.
    pub eigenvalues: Vec<f64>,
    /// Total negative mass removed by clamping.
    pub clamp_delta: f64,
    /// Sum of the raw eigenvalues before any correction.
    pub raw_sum: f64,
}

impl SpectrumResult {
    /// Clamps roundoff negatives to zero and renormalizes. Anything more
    /// negative than [`CLAMP_THRESHOLD`] is an error.
    pub fn from_raw(mut raw: Vec<f64>) -> Result<Self> {
        raw.sort_by(|x, y| y.total_cmp(x));
        let raw_sum: f64 = raw.iter().sum();
        let mut clamp_delta = 0.0;
        for value in raw.iter_mut() {
            if *value < -CLAMP_THRESHOLD {
                return Err(Error::NegativeEigenvalue { value: *value });
            }
            if *value < 0.0 {
                clamp_delta -= *value;
                *value = 0.0;
            }
        }
        let total: f64 = raw.iter().sum();
        if total > 0.0 {
            for value in raw.iter_mut() {
                *value = (*value / total).min(1.0);
            }
        }
        Ok(Self {
            eigenvalues: raw,
            clamp_delta,
            raw_sum,
        })
    }
}

/// Reduced state of the real two-level atom, rows `[excited, ground]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AtomicState {
    pub rho: [[Complex64; 2]; 2],
}

impl AtomicState {
    pub fn trace(&self) -> f64 {
        self.rho[0][0].re + self.rho[1][1].re
    }

    pub fn max_abs_diff(&self, other: &AtomicState) -> f64 {
        let mut worst = 0.0_f64;
        for i in 0..2 {
            for j in 0..2 {
                worst = worst.max((self.rho[i][j] - other.rho[i][j]).norm());
            }
        }
        worst
    }
}

/// `P_ij = ⟨ψ_i|ψ_j⟩` over all components.
pub fn gram_matrix(cs: &ComponentSet) -> Result<GramMatrix> {
    let n = cs.components.len();
    let mut m = CMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            m[(i, j)] = cs.components[i].inner(&cs.components[j])?;
        }
    }
    GramMatrix::from_matrix(m)
}

/// All `n` eigenvalues of the Gram matrix, descending, via the in-house
/// Jacobi solver.
pub fn hermitian_eigenvalues(p: &GramMatrix) -> Result<SpectrumResult> {
    SpectrumResult::from_raw(linalg::hermitian_eigenvalues(p.entries())?)
}

/// `−Σ λ ln λ` in nats with `0 ln 0 = 0`.
pub fn shannon_entropy(probabilities: &[f64]) -> f64 {
    probabilities
        .iter()
        .filter(|&&p| p >= ZERO_LOG_CUTOFF)
        .map(|&p| -p * p.ln())
        .sum::<f64>()
        .max(0.0)
}

pub fn entropy_from_spectrum(s: &SpectrumResult) -> f64 {
    shannon_entropy(&s.eigenvalues)
}

/// `ξ = 1 − Tr P² = 1 − Σ_ij |P_ij|²`.
pub fn purity(p: &GramMatrix) -> f64 {
    1.0 - p.entries().frobenius_sqr()
}

/// Reduced state of the real atom assembled from Gram entries: element
/// `(a, b)` sums `⟨ψ_{b_j}|ψ_{a_j}⟩` over mixture branches `j`.
pub fn atomic_state(cs: &ComponentSet) -> Result<AtomicState> {
    let p = gram_matrix(cs)?;
    atomic_state_from_gram(&p, cs)
}

pub fn atomic_state_from_gram(p: &GramMatrix, cs: &ComponentSet) -> Result<AtomicState> {
    let rows = [AtomRow::Excited, AtomRow::Ground];
    let mut rho = [[Complex64::new(0.0, 0.0); 2]; 2];
    for a in rows {
        for b in rows {
            let ra = &cs.row_map[a as usize];
            let rb = &cs.row_map[b as usize];
            rho[a as usize][b as usize] = ra.iter().zip(rb).map(|(&ka, &kb)| p.get(kb, ka)).sum();
        }
    }
    let state = AtomicState { rho };
    let trace = state.trace();
    if (trace - 1.0).abs() > TRACE_TOLERANCE {
        return Err(Error::Normalization {
            trace,
            tolerance: TRACE_TOLERANCE,
        });
    }
    Ok(state)
}

/// `λ± = ½ ± ½ √((ρ_ee − ρ_gg)² + 4|ρ_ge|²)`.
pub fn atomic_eigenvalues(a: &AtomicState) -> (f64, f64) {
    let diff = a.rho[0][0].re - a.rho[1][1].re;
    let radius = (diff * diff + 4.0 * a.rho[1][0].norm_sqr()).sqrt().min(1.0);
    (0.5 + 0.5 * radius, 0.5 - 0.5 * radius)
}

pub fn atomic_entropy(a: &AtomicState) -> f64 {
    let (plus, minus) = atomic_eigenvalues(a);
    shannon_entropy(&[plus, minus])
}
