use std::f64::consts::PI;

use jc_entropy::dynamics::{atomic_inversion, evolve, ScenarioSpec};
use jc_entropy::fock::{
    coherent_state, coherent_state_with_tolerance, FockVector, DEFAULT_TAIL_TOLERANCE,
};
use jc_entropy::linalg::CMatrix;
use jc_entropy::virtual_atom::{
    atomic_eigenvalues, atomic_state, entropy_from_spectrum, gram_matrix, hermitian_eigenvalues,
    purity, GramMatrix,
};
use num_complex::Complex64;
use proptest::prelude::*;

fn complex_in(radius: f64) -> impl Strategy<Value = Complex64> {
    (0.0..radius, 0.0..2.0 * PI).prop_map(|(r, phi)| Complex64::from_polar(r, phi))
}

fn fock_vector(dim: usize) -> impl Strategy<Value = FockVector> {
    prop::collection::vec((-1.0..1.0f64, -1.0..1.0f64), dim).prop_map(|v| {
        FockVector::from_amplitudes(
            v.into_iter()
                .map(|(re, im)| Complex64::new(re, im))
                .collect(),
        )
        .unwrap()
    })
}

/// Vector whose top amplitude is exactly zero.
fn fock_vector_clear_top(dim: usize) -> impl Strategy<Value = FockVector> {
    fock_vector(dim).prop_map(move |v| {
        let mut amps = v.amplitudes().to_vec();
        amps[dim - 1] = Complex64::new(0.0, 0.0);
        FockVector::from_amplitudes(amps).unwrap()
    })
}

/// Random Hermitian positive-semidefinite unit-trace matrix `A A† / Tr`.
fn density(n: usize) -> impl Strategy<Value = CMatrix> {
    prop::collection::vec((-1.0..1.0f64, -1.0..1.0f64), n * n).prop_map(move |raw| {
        let a = CMatrix::from_fn(n, |i, j| Complex64::new(raw[i * n + j].0, raw[i * n + j].1));
        let mut m = CMatrix::from_fn(n, |i, j| (0..n).map(|k| a[(i, k)] * a[(j, k)].conj()).sum());
        let tr = m.trace().re;
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] /= tr;
            }
        }
        m
    })
}

fn scenario() -> impl Strategy<Value = ScenarioSpec> {
    (
        complex_in(3.0),
        complex_in(3.0),
        0.0..=1.0f64,
        any::<bool>(),
    )
        .prop_map(|(a, b, w, field)| {
            let mut spec = if field {
                ScenarioSpec::field_mixture(a, b, w, 0)
            } else {
                ScenarioSpec::atom_mixture(a, w, 0)
            };
            spec.dim = spec.auto_dim();
            spec
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn inner_product_is_conjugate_symmetric(a in fock_vector(12), b in fock_vector(12)) {
        let ab = a.inner(&b).unwrap();
        let ba = b.inner(&a).unwrap();
        prop_assert!((ab - ba.conj()).norm() < 1e-14);
    }

    #[test]
    fn coherent_norm_within_tail_tolerance(alpha in complex_in(6.0)) {
        let dim = jc_entropy::fock::auto_dim(&[alpha]);
        let n = coherent_state(alpha, dim).unwrap().norm_sqr();
        prop_assert!((1.0 - DEFAULT_TAIL_TOLERANCE..=1.0 + 1e-14).contains(&n));
    }

    #[test]
    fn coherent_overlap_modulus(alpha in complex_in(5.0), beta in complex_in(5.0)) {
        let a = coherent_state_with_tolerance(alpha, 64, 1e-9).unwrap();
        let b = coherent_state_with_tolerance(beta, 64, 1e-9).unwrap();
        let expected = (-(alpha - beta).norm_sqr() / 2.0).exp();
        prop_assert!((a.inner(&b).unwrap().norm() - expected).abs() < 1e-10);
    }

    #[test]
    fn lower_undoes_raise(v in fock_vector_clear_top(10)) {
        let back = v.raise(DEFAULT_TAIL_TOLERANCE).unwrap().lower();
        prop_assert_eq!(back, v);
    }

    #[test]
    fn raise_after_lower_drops_vacuum(v in fock_vector(10)) {
        let mut expected = v.amplitudes().to_vec();
        expected[0] = Complex64::new(0.0, 0.0);
        let out = v.lower().raise(DEFAULT_TAIL_TOLERANCE).unwrap();
        prop_assert_eq!(out.amplitudes(), &expected[..]);
    }

    #[test]
    fn gram_spectrum_invariants(m in density(4)) {
        let trace = m.trace().re;
        let p = GramMatrix::from_matrix(m).unwrap();
        let s = hermitian_eigenvalues(&p).unwrap();
        prop_assert!((s.raw_sum - trace).abs() < 1e-10);
        let sum_sq: f64 = s.eigenvalues.iter().map(|l| l * l).sum();
        prop_assert!((purity(&p) - (1.0 - sum_sq)).abs() < 1e-10);
        let h = entropy_from_spectrum(&s);
        prop_assert!(h >= 0.0 && h <= 4.0_f64.ln() + 1e-12);
        prop_assert!(s.eigenvalues.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn evolution_conserves_norm(spec in scenario(), t in 0.0..30.0f64) {
        let cs = evolve(&spec, t).unwrap();
        prop_assert!((cs.total_norm() - 1.0).abs() < 1e-10);
        let w = atomic_inversion(&cs);
        prop_assert!((-1.0 - 1e-12..=1.0 + 1e-12).contains(&w));
    }

    #[test]
    fn atomic_eigenvalues_match_trace_determinant(spec in scenario(), t in 0.0..30.0f64) {
        let a = atomic_state(&evolve(&spec, t).unwrap()).unwrap();
        let (plus, minus) = atomic_eigenvalues(&a);
        let tr = a.rho[0][0].re + a.rho[1][1].re;
        let det = (a.rho[0][0] * a.rho[1][1] - a.rho[0][1] * a.rho[1][0]).re;
        let disc = (tr * tr - 4.0 * det).max(0.0).sqrt();
        prop_assert!((plus - (tr + disc) / 2.0).abs() < 1e-12);
        prop_assert!((minus - (tr - disc) / 2.0).abs() < 1e-12);
        prop_assert!((plus + minus - 1.0).abs() < 1e-15);
    }

    #[test]
    fn zero_entropy_iff_zero_purity(spec in scenario(), t in 0.0..30.0f64) {
        let p = gram_matrix(&evolve(&spec, t).unwrap()).unwrap();
        let s = entropy_from_spectrum(&hermitian_eigenvalues(&p).unwrap());
        prop_assert_eq!(s < 1e-6, purity(&p) < 1e-6);
    }
}

#[test]
fn uniform_spectrum_reaches_ln_n() {
    for n in 1..=6 {
        let p = GramMatrix::from_matrix(CMatrix::from_diag(&vec![1.0 / n as f64; n])).unwrap();
        let s = entropy_from_spectrum(&hermitian_eigenvalues(&p).unwrap());
        assert!((s - (n as f64).ln()).abs() < 1e-14);
    }
}
