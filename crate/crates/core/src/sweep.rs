//! Time sweeps over `λt` and their CSV serialization.

use std::io::Write;
use std::path::Path;

use rayon::prelude::*;

use crate::config::SweepConfig;
use crate::dynamics::{atomic_inversion, evolve, ScenarioSpec};
use crate::error::Result;
use crate::oracle::{
    self, build_hamiltonian, build_initial_density, ArakiLiebReport, DensityMatrix, Propagator,
};
use crate::virtual_atom::{
    atomic_entropy, atomic_state_from_gram, entropy_from_spectrum, gram_matrix,
    hermitian_eigenvalues, purity,
};

#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeriesRecord {
    pub t: f64,
    pub s_field: f64,
    pub s_atom: f64,
    pub xi_field: f64,
    pub inversion: f64,
    /// Gram-matrix eigenvalues, descending.
    pub lambdas: Vec<f64>,
    pub oracle: Option<OracleRecord>,
}

/// Dense-path cross-check at one time point.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleRecord {
    pub s_joint: f64,
    pub s_field: f64,
    pub s_atom: f64,
    pub araki_lieb: ArakiLiebReport,
    /// `|S_F(virtual atom) − S_F(oracle)|`
    pub s_field_delta: f64,
    /// Largest gap between Gram eigenvalues and the leading oracle field
    /// eigenvalues.
    pub eigenvalue_delta: f64,
    /// Largest oracle field eigenvalue beyond the Gram rank.
    pub residual_eigenvalue: f64,
    /// Entrywise `|Σ_k ψ_k ψ_k† − Tr_A ρ|`.
    pub schmidt_deviation: f64,
    /// Largest entrywise gap between the two atomic reduced states.
    pub atomic_state_delta: f64,
}

/// Shared, immutable oracle inputs for one scenario.
struct OracleContext {
    rho0: DensityMatrix,
    propagator: Propagator,
}

/// Virtual-atom observables at a single time.
pub fn evaluate_point(spec: &ScenarioSpec, t: f64) -> Result<TimeSeriesRecord> {
    let cs = evolve(spec, t)?;
    let gram = gram_matrix(&cs)?;
    let spectrum = hermitian_eigenvalues(&gram)?;
    let atom = atomic_state_from_gram(&gram, &cs)?;
    Ok(TimeSeriesRecord {
        t,
        s_field: entropy_from_spectrum(&spectrum),
        s_atom: atomic_entropy(&atom),
        xi_field: purity(&gram),
        inversion: atomic_inversion(&cs),
        lambdas: spectrum.eigenvalues,
        oracle: None,
    })
}

fn oracle_point(
    spec: &ScenarioSpec,
    ctx: &OracleContext,
    record: &TimeSeriesRecord,
) -> Result<OracleRecord> {
    let rho = oracle::evolve_density(&ctx.rho0, &ctx.propagator, record.t)?;
    let s_joint = oracle::vn_entropy(&rho)?;
    let rho_field = oracle::partial_trace_atom(&rho);
    let field_spectrum = rho_field.spectrum()?.eigenvalues;
    let s_field = crate::virtual_atom::shannon_entropy(&field_spectrum);
    let rho_atom = oracle::partial_trace_field(&rho);
    let s_atom = oracle::atomic_vn_entropy(&rho_atom)?;

    let n = record.lambdas.len();
    let eigenvalue_delta = record
        .lambdas
        .iter()
        .zip(&field_spectrum)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    let residual_eigenvalue = field_spectrum.iter().skip(n).copied().fold(0.0, f64::max);

    let cs = evolve(spec, record.t)?;
    let schmidt_deviation = oracle::check_schmidt_invariant(&cs, &rho_field)?.max_deviation;
    let atomic_state_delta = crate::virtual_atom::atomic_state(&cs)?.max_abs_diff(&rho_atom);

    Ok(OracleRecord {
        s_joint,
        s_field,
        s_atom,
        araki_lieb: oracle::check_araki_lieb(s_atom, s_field, s_joint),
        s_field_delta: (record.s_field - s_field).abs(),
        eigenvalue_delta,
        residual_eigenvalue,
        schmidt_deviation,
        atomic_state_delta,
    })
}

/// Evaluates every grid point `0..=steps`, in parallel, returned in time order.
pub fn run_sweep(cfg: &SweepConfig) -> Result<Vec<TimeSeriesRecord>> {
    let spec = cfg.scenario_spec();
    let ctx = if cfg.oracle {
        Some(OracleContext {
            rho0: build_initial_density(&spec)?,
            propagator: Propagator::new(&build_hamiltonian(spec.dim)),
        })
    } else {
        None
    };

    (0..=cfg.steps)
        .into_par_iter()
        .map(|i| {
            let mut record = evaluate_point(&spec, cfg.time(i))?;
            if let Some(ctx) = &ctx {
                record.oracle = Some(oracle_point(&spec, ctx, &record)?);
            }
            Ok(record)
        })
        .collect()
}

fn header(levels: usize, oracle: bool) -> String {
    let mut cols: Vec<String> = ["t", "S_F", "S_A", "xi_F", "inversion"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    cols.extend((1..=levels).map(|k| format!("lambda_{k}")));
    if oracle {
        cols.extend(
            [
                "S_AB",
                "al_lower_margin",
                "al_upper_margin",
                "oracle_S_F_delta",
            ]
            .iter()
            .map(|s| s.to_string()),
        );
    }
    cols.join(",")
}

fn fmt(x: f64) -> String {
    format!("{x:.15e}")
}

/// Writes a header row and one row per record. `levels` sizes the
/// `lambda_k` columns.
pub fn write_csv<W: Write>(
    mut out: W,
    records: &[TimeSeriesRecord],
    levels: usize,
    oracle: bool,
) -> Result<()> {
    writeln!(out, "{}", header(levels, oracle))?;
    for r in records {
        let mut row = vec![
            fmt(r.t),
            fmt(r.s_field),
            fmt(r.s_atom),
            fmt(r.xi_field),
            fmt(r.inversion),
        ];
        row.extend((0..levels).map(|k| fmt(r.lambdas.get(k).copied().unwrap_or(0.0))));
        if oracle {
            // Columns stay aligned even if a record lacks oracle data.
            let o = r.oracle.as_ref();
            row.extend(
                [
                    o.map(|o| o.s_joint),
                    o.map(|o| o.araki_lieb.lower_margin),
                    o.map(|o| o.araki_lieb.upper_margin),
                    o.map(|o| o.s_field_delta),
                ]
                .into_iter()
                .map(|x| x.map(fmt).unwrap_or_default()),
            );
        }
        writeln!(out, "{}", row.join(","))?;
    }
    out.flush()?;
    Ok(())
}

pub fn write_csv_path(
    path: &Path,
    records: &[TimeSeriesRecord],
    levels: usize,
    oracle: bool,
) -> Result<()> {
    let file = std::fs::File::create(path)?;
    write_csv(std::io::BufWriter::new(file), records, levels, oracle)
}

#[cfg(test)]
mod tests {
    use std::f64::consts::LN_2;

    use num_complex::Complex64;

    use super::*;
    use crate::dynamics::Scenario;

    fn small(cfg: SweepConfig) -> SweepConfig {
        SweepConfig {
            t_max: 4.0,
            steps: 8,
            ..cfg
        }
    }

    #[test]
    fn field_mixture_initial_record() {
        let r = evaluate_point(&SweepConfig::default().scenario_spec(), 0.0).unwrap();
        assert!((r.s_field - LN_2).abs() < 1e-6);
        assert!((r.xi_field - 0.5).abs() < 1e-6);
        assert!(r.s_atom.abs() < 1e-12);
        assert_eq!(r.lambdas.len(), 4);
    }

    #[test]
    fn atom_mixture_initial_record() {
        let cfg = SweepConfig {
            scenario: Scenario::AtomMixture,
            ..SweepConfig::default()
        };
        let r = evaluate_point(&cfg.scenario_spec(), 0.0).unwrap();
        assert!(r.s_field.abs() < 1e-10);
        assert!((r.s_atom - LN_2).abs() < 1e-10);
    }

    #[test]
    fn empty_csv_is_header_only() {
        let mut buf = Vec::new();
        write_csv(&mut buf, &[], 4, false).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "t,S_F,S_A,xi_F,inversion,lambda_1,lambda_2,lambda_3,lambda_4\n"
        );
        let mut buf = Vec::new();
        write_csv(&mut buf, &[], 4, true).unwrap();
        assert!(String::from_utf8(buf)
            .unwrap()
            .ends_with(",lambda_4,S_AB,al_lower_margin,al_upper_margin,oracle_S_F_delta\n"));
    }

    #[test]
    fn csv_has_twelve_significant_digits() {
        let records = run_sweep(&small(SweepConfig::default())).unwrap();
        let mut buf = Vec::new();
        write_csv(&mut buf, &records, 4, false).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 10);
        let first: Vec<f64> = lines[1].split(',').map(|x| x.parse().unwrap()).collect();
        assert!((first[1] - records[0].s_field).abs() <= 1e-15 * records[0].s_field);
        for field in lines[2].split(',') {
            let mantissa = field.split('e').next().unwrap().trim_start_matches('-');
            assert!(mantissa.chars().filter(char::is_ascii_digit).count() >= 12);
        }
    }

    #[test]
    fn oracle_records_are_consistent() {
        let cfg = small(SweepConfig {
            alpha: Complex64::new(2.0, 0.0),
            beta: Complex64::new(-2.0, 0.0),
            dim: 40,
            oracle: true,
            ..SweepConfig::default()
        });
        for r in run_sweep(&cfg).unwrap() {
            let o = r.oracle.unwrap();
            assert!(o.araki_lieb.pass);
            assert!(o.s_field_delta < 1e-8);
            assert!(o.atomic_state_delta < 1e-10);
            assert!(o.residual_eigenvalue < 1e-8);
        }
    }

    #[test]
    fn doubling_steps_keeps_shared_points() {
        let coarse = small(SweepConfig::default());
        let fine = SweepConfig {
            steps: 2 * coarse.steps,
            ..coarse.clone()
        };
        let a = run_sweep(&coarse).unwrap();
        let b = run_sweep(&fine).unwrap();
        for (i, r) in a.iter().enumerate() {
            assert_eq!(r, &b[2 * i]);
        }
    }

    #[test]
    fn truncation_error_is_numerical() {
        let cfg = small(SweepConfig {
            dim: 20,
            ..SweepConfig::default()
        });
        let err = run_sweep(&cfg).unwrap_err();
        assert!(matches!(err, crate::Error::TailMass { .. }));
        assert_eq!(err.exit_code(), 3);
        assert!(err.to_string().contains("raise the Fock dimension"));
    }
}
