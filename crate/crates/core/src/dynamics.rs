//! Analytic Jaynes-Cummings evolution of the unnormalized field components.
//!
//! Both supported initial conditions are a mixture of two product states, so
//! the evolved joint state is a mixture of two entangled pure states
//! `|Φ_j⟩ = |ψ_exc,j⟩|e⟩ + |ψ_gnd,j⟩|g⟩`. The four field vectors are returned
//! in block order: components 0 and 1 sit on the excited row, 2 and 3 on the
//! ground row, and branch `j` pairs `excited[j]` with `ground[j]`.
//!
//! Time is the dimensionless `λt`; the coupling is fixed to 1.

use num_complex::Complex64;

use crate::error::Result;
use crate::fock::{auto_dim, coherent_state_with_tolerance, FockVector, DEFAULT_TAIL_TOLERANCE};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scenario {
    /// Field in `C|α⟩⟨α| + (1−C)|β⟩⟨β|`, atom excited.
    FieldMixture,
    /// Atom in `C|e⟩⟨e| + (1−C)|g⟩⟨g|`, field in `|α⟩`.
    AtomMixture,
}

impl Scenario {
    pub fn name(self) -> &'static str {
        match self {
            Scenario::FieldMixture => "field-mixture",
            Scenario::AtomMixture => "atom-mixture",
        }
    }
}

/// Initial state plus truncation parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioSpec {
    pub scenario: Scenario,
    pub alpha: Complex64,
    /// Second coherent amplitude; unused by [`Scenario::AtomMixture`].
    pub beta: Complex64,
    /// Mixing weight in `[0, 1]`.
    pub weight: f64,
    pub dim: usize,
    pub tail_tolerance: f64,
}

impl ScenarioSpec {
    pub fn field_mixture(alpha: Complex64, beta: Complex64, weight: f64, dim: usize) -> Self {
        Self {
            scenario: Scenario::FieldMixture,
            alpha,
            beta,
            weight,
            dim,
            tail_tolerance: DEFAULT_TAIL_TOLERANCE,
        }
    }

    pub fn atom_mixture(alpha: Complex64, weight: f64, dim: usize) -> Self {
        Self {
            scenario: Scenario::AtomMixture,
            alpha,
            beta: Complex64::new(0.0, 0.0),
            weight,
            dim,
            tail_tolerance: DEFAULT_TAIL_TOLERANCE,
        }
    }

    /// Truncation chosen from the amplitudes actually used by the scenario.
    pub fn auto_dim(&self) -> usize {
        match self.scenario {
            Scenario::FieldMixture => auto_dim(&[self.alpha, self.beta]),
            Scenario::AtomMixture => auto_dim(&[self.alpha]),
        }
    }

    pub(crate) fn coherent(&self, amplitude: Complex64) -> Result<FockVector> {
        coherent_state_with_tolerance(amplitude, self.dim, self.tail_tolerance)
    }
}

/// Atomic basis rows, in joint-basis order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AtomRow {
    Excited = 0,
    Ground = 1,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComponentSet {
    pub components: Vec<FockVector>,
    /// Component indices per atomic row, `[excited, ground]`; position within
    /// each list identifies the mixture branch.
    pub row_map: [Vec<usize>; 2],
    pub time: f64,
    pub scenario: Scenario,
}

impl ComponentSet {
    pub fn dim(&self) -> usize {
        self.components[0].dim()
    }

    /// `Σ_k ⟨ψ_k|ψ_k⟩`, one up to truncation.
    pub fn total_norm(&self) -> f64 {
        self.components.iter().map(FockVector::norm_sqr).sum()
    }

    /// `⟨ψ_i|ψ_i⟩` summed over the components of one atomic row.
    pub fn row_population(&self, row: AtomRow) -> f64 {
        self.row_map[row as usize]
            .iter()
            .map(|&k| self.components[k].norm_sqr())
            .sum()
    }
}

fn block_row_map() -> [Vec<usize>; 2] {
    [vec![0, 1], vec![2, 3]]
}

fn minus_i() -> Complex64 {
    Complex64::new(0.0, -1.0)
}

/// `cos(t√(n+1))`
fn cos_excited(t: f64) -> impl Fn(usize) -> f64 {
    move |n| (t * ((n + 1) as f64).sqrt()).cos()
}

/// `sin(t√(n+1))`
fn sin_excited(t: f64) -> impl Fn(usize) -> f64 {
    move |n| (t * ((n + 1) as f64).sqrt()).sin()
}

/// `cos(t√n)`
fn cos_ground(t: f64) -> impl Fn(usize) -> f64 {
    move |n| (t * (n as f64).sqrt()).cos()
}

/// `sin(t√n)`
fn sin_ground(t: f64) -> impl Fn(usize) -> f64 {
    move |n| (t * (n as f64).sqrt()).sin()
}

/// Field components for an excited atom and a two-state coherent mixture.
pub fn evolve_field_mixture(spec: &ScenarioSpec, t: f64) -> Result<ComponentSet> {
    let a = spec.coherent(spec.alpha)?;
    let b = spec.coherent(spec.beta)?;
    let wa = Complex64::new(spec.weight.sqrt(), 0.0);
    let wb = Complex64::new((1.0 - spec.weight).sqrt(), 0.0);
    let tol = spec.tail_tolerance;

    let psi1 = a.apply_diag(cos_excited(t)).scale(wa);
    let psi2 = b.apply_diag(cos_excited(t)).scale(wb);
    let psi3 = a
        .apply_diag(sin_excited(t))
        .raise(tol)?
        .scale(minus_i() * wa);
    let psi4 = b
        .apply_diag(sin_excited(t))
        .raise(tol)?
        .scale(minus_i() * wb);

    Ok(ComponentSet {
        components: vec![psi1, psi2, psi3, psi4],
        row_map: block_row_map(),
        time: t,
        scenario: Scenario::FieldMixture,
    })
}

/// Field components for a coherent field and an excited/ground atomic mixture.
pub fn evolve_atom_mixture(spec: &ScenarioSpec, t: f64) -> Result<ComponentSet> {
    let a = spec.coherent(spec.alpha)?;
    let we = Complex64::new(spec.weight.sqrt(), 0.0);
    let wg = Complex64::new((1.0 - spec.weight).sqrt(), 0.0);
    let tol = spec.tail_tolerance;

    let psi1 = a.apply_diag(cos_excited(t)).scale(we);
    let psi2 = a.apply_diag(sin_ground(t)).lower().scale(minus_i() * wg);
    let psi3 = a
        .apply_diag(sin_excited(t))
        .raise(tol)?
        .scale(minus_i() * we);
    let psi4 = a.apply_diag(cos_ground(t)).scale(wg);

    Ok(ComponentSet {
        components: vec![psi1, psi2, psi3, psi4],
        row_map: block_row_map(),
        time: t,
        scenario: Scenario::AtomMixture,
    })
}

/// Dispatches on the scenario tag.
pub fn evolve(spec: &ScenarioSpec, t: f64) -> Result<ComponentSet> {
    match spec.scenario {
        Scenario::FieldMixture => evolve_field_mixture(spec, t),
        Scenario::AtomMixture => evolve_atom_mixture(spec, t),
    }
}

/// `⟨σ_z⟩`: excited minus ground population.
pub fn atomic_inversion(cs: &ComponentSet) -> f64 {
    cs.row_population(AtomRow::Excited) - cs.row_population(AtomRow::Ground)
}
