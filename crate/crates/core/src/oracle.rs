//! Brute-force reference path on the full truncated atom ⊗ field space.
//!
//! The joint basis is atom-major: index `row · dim + n` with row 0 = excited
//! and row 1 = ground. Evolution diagonalizes the dense Hamiltonian (no use of
//! its excitation-manifold block structure), and all spectra come from
//! nalgebra's Householder/QR Hermitian solver rather than the in-house Jacobi
//! code used by [`crate::virtual_atom`].

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::dynamics::{AtomRow, ComponentSet, Scenario, ScenarioSpec};
use crate::error::{Error, Result};
use crate::virtual_atom::{shannon_entropy, AtomicState, SpectrumResult};

/// Tolerance on the slack of either Araki-Lieb inequality.
pub const ARAKI_LIEB_SLACK: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    entries: DMatrix<Complex64>,
}

impl DensityMatrix {
    pub fn from_matrix(entries: DMatrix<Complex64>) -> Self {
        assert!(entries.is_square());
        Self { entries }
    }

    /// `Σ_k w_k |v_k⟩⟨v_k|`
    pub fn from_mixture(states: &[(f64, DVector<Complex64>)]) -> Self {
        let d = states[0].1.len();
        let mut entries = DMatrix::zeros(d, d);
        for (w, v) in states {
            entries += v * v.adjoint() * Complex64::new(*w, 0.0);
        }
        Self { entries }
    }

    pub fn entries(&self) -> &DMatrix<Complex64> {
        &self.entries
    }

    pub fn size(&self) -> usize {
        self.entries.nrows()
    }

    pub fn trace(&self) -> f64 {
        self.entries.trace().re
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.entries[(i, j)]
    }

    /// Eigenvalues with roundoff negatives clamped, descending.
    pub fn spectrum(&self) -> Result<SpectrumResult> {
        let hermitian = (&self.entries + self.entries.adjoint()) * Complex64::new(0.5, 0.0);
        let values = hermitian.symmetric_eigenvalues();
        SpectrumResult::from_raw(values.iter().copied().collect())
    }
}

/// Interaction Hamiltonian `a†σ₋ + aσ₊` on the truncated joint space.
#[derive(Debug, Clone, PartialEq)]
pub struct JointHamiltonian {
    dim: usize,
    entries: DMatrix<f64>,
}

impl JointHamiltonian {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &DMatrix<f64> {
        &self.entries
    }
}

/// Couples `|e,n⟩ ↔ |g,n+1⟩` with strength `√(n+1)`. The coupling of the top
/// state `|e,dim−1⟩` would leave the basis and is dropped.
pub fn build_hamiltonian(dim: usize) -> JointHamiltonian {
    assert!(dim >= 1);
    let mut h = DMatrix::zeros(2 * dim, 2 * dim);
    for n in 0..dim - 1 {
        let e = joint_index(AtomRow::Excited, n, dim);
        let g = joint_index(AtomRow::Ground, n + 1, dim);
        let coupling = ((n + 1) as f64).sqrt();
        h[(e, g)] = coupling;
        h[(g, e)] = coupling;
    }
    JointHamiltonian { dim, entries: h }
}

pub fn joint_index(row: AtomRow, n: usize, dim: usize) -> usize {
    row as usize * dim + n
}

/// Eigendecomposition of `H`, computed once and reused for every time point.
#[derive(Debug, Clone)]
pub struct Propagator {
    energies: DVector<f64>,
    eigenvectors: DMatrix<Complex64>,
}

impl Propagator {
    pub fn new(h: &JointHamiltonian) -> Self {
        let eig = h.entries.clone().symmetric_eigen();
        Self {
            energies: eig.eigenvalues,
            eigenvectors: eig.eigenvectors.map(|x| Complex64::new(x, 0.0)),
        }
    }

    pub fn energies(&self) -> &DVector<f64> {
        &self.energies
    }

    /// `U(t) = V e^{−iEt} V†`
    pub fn unitary(&self, t: f64) -> DMatrix<Complex64> {
        let phases = self.energies.map(|e| Complex64::from_polar(1.0, -e * t));
        let mut scaled = self.eigenvectors.clone();
        for (mut column, phase) in scaled.column_iter_mut().zip(phases.iter()) {
            column *= *phase;
        }
        scaled * self.eigenvectors.adjoint()
    }
}

fn coherent_column(
    spec: &ScenarioSpec,
    amplitude: Complex64,
    row: AtomRow,
) -> Result<DVector<Complex64>> {
    let field = spec.coherent(amplitude)?;
    let mut v = DVector::zeros(2 * spec.dim);
    for (n, c) in field.amplitudes().iter().enumerate() {
        v[joint_index(row, n, spec.dim)] = *c;
    }
    Ok(v)
}

/// Initial joint state as a convex combination of product projectors.
pub fn build_initial_density(spec: &ScenarioSpec) -> Result<DensityMatrix> {
    let w = spec.weight;
    let states = match spec.scenario {
        Scenario::FieldMixture => vec![
            (w, coherent_column(spec, spec.alpha, AtomRow::Excited)?),
            (1.0 - w, coherent_column(spec, spec.beta, AtomRow::Excited)?),
        ],
        Scenario::AtomMixture => vec![
            (w, coherent_column(spec, spec.alpha, AtomRow::Excited)?),
            (1.0 - w, coherent_column(spec, spec.alpha, AtomRow::Ground)?),
        ],
    };
    Ok(DensityMatrix::from_mixture(&states))
}

/// `U ρ₀ U†`
pub fn evolve_density(
    rho0: &DensityMatrix,
    propagator: &Propagator,
    t: f64,
) -> Result<DensityMatrix> {
    let d = propagator.energies.len();
    if rho0.size() != d {
        return Err(Error::DimensionMismatch {
            left: rho0.size(),
            right: d,
        });
    }
    let u = propagator.unitary(t);
    Ok(DensityMatrix::from_matrix(&u * &rho0.entries * u.adjoint()))
}

/// Reduced field state, `dim × dim`.
pub fn partial_trace_atom(rho: &DensityMatrix) -> DensityMatrix {
    let dim = rho.size() / 2;
    let entries = DMatrix::from_fn(dim, dim, |m, n| rho.get(m, n) + rho.get(dim + m, dim + n));
    DensityMatrix::from_matrix(entries)
}

/// Reduced atomic state, rows `[excited, ground]`.
pub fn partial_trace_field(rho: &DensityMatrix) -> AtomicState {
    let dim = rho.size() / 2;
    let mut out = [[Complex64::new(0.0, 0.0); 2]; 2];
    for (a, row) in out.iter_mut().enumerate() {
        for (b, slot) in row.iter_mut().enumerate() {
            *slot = (0..dim).map(|n| rho.get(a * dim + n, b * dim + n)).sum();
        }
    }
    AtomicState { rho: out }
}

/// `−Tr ρ ln ρ` over the full spectrum.
pub fn vn_entropy(rho: &DensityMatrix) -> Result<f64> {
    Ok(shannon_entropy(&rho.spectrum()?.eigenvalues))
}

pub fn atomic_vn_entropy(a: &AtomicState) -> Result<f64> {
    let m = DMatrix::from_fn(2, 2, |i, j| a.rho[i][j]);
    vn_entropy(&DensityMatrix::from_matrix(m))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArakiLiebReport {
    /// `S_AB − |S_A − S_F|`
    pub lower_margin: f64,
    /// `S_A + S_F − S_AB`
    pub upper_margin: f64,
    pub pass: bool,
}

pub fn check_araki_lieb(s_atom: f64, s_field: f64, s_joint: f64) -> ArakiLiebReport {
    let lower_margin = s_joint - (s_atom - s_field).abs();
    let upper_margin = s_atom + s_field - s_joint;
    ArakiLiebReport {
        lower_margin,
        upper_margin,
        pass: lower_margin >= -ARAKI_LIEB_SLACK && upper_margin >= -ARAKI_LIEB_SLACK,
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchmidtReport {
    /// Largest entrywise `|Σ_k ψ_k ψ_k† − ρ_F|`.
    pub max_deviation: f64,
}

/// Compares `Σ_k |ψ_k⟩⟨ψ_k|` against a field density matrix.
pub fn check_schmidt_invariant(
    cs: &ComponentSet,
    rho_field: &DensityMatrix,
) -> Result<SchmidtReport> {
    let dim = cs.dim();
    if rho_field.size() != dim {
        return Err(Error::DimensionMismatch {
            left: dim,
            right: rho_field.size(),
        });
    }
    let states: Vec<(f64, DVector<Complex64>)> = cs
        .components
        .iter()
        .map(|psi| (1.0, DVector::from_column_slice(psi.amplitudes())))
        .collect();
    let built = DensityMatrix::from_mixture(&states);
    let max_deviation = (built.entries() - rho_field.entries())
        .iter()
        .map(|z| z.norm())
        .fold(0.0, f64::max);
    Ok(SchmidtReport { max_deviation })
}
