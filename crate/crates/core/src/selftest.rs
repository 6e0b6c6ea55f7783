//! Built-in invariant suites, run by `albert selftest`.

use serde::Serialize;

use crate::diagonalize::{diagonalize, Tolerances, DRIFT_TOL};
use crate::error::Result;
use crate::generators::{
    check_f4_membership, g2_map_to_e1, DeltaA, Generator, RotO3, SpThree,
};
use crate::jordan::{freudenthal_cross, pair_cross, to_pair};
use crate::octonion::{Algebra, Octonion};
use crate::random::Sampler;
use crate::split::{counterexample_x0, diagonalizability_obstruction, Verdict};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteResult {
    pub name: &'static str,
    pub passed: bool,
    pub max_deviation: f64,
    pub tolerance: f64,
    pub samples: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SelftestReport {
    pub passed: bool,
    pub suites: Vec<SuiteResult>,
}

fn suite(name: &'static str, dev: Result<f64>, tolerance: f64, samples: usize) -> SuiteResult {
    let max_deviation = dev.unwrap_or(f64::INFINITY);
    SuiteResult {
        name,
        passed: max_deviation <= tolerance,
        max_deviation,
        tolerance,
        samples,
    }
}

fn octonion_laws(samples: usize, seed: u64) -> Result<f64> {
    let mut dev = 0.0_f64;
    for alg in [Algebra::Compact, Algebra::Split] {
        let mut rng = Sampler::new(seed);
        let basis = (0..8).map(|i| Octonion::basis(i, alg));
        let pairs: Vec<(Octonion, Octonion, Octonion)> = basis
            .clone()
            .flat_map(|x| basis.clone().map(move |y| (x, y, x)))
            .chain((0..samples).map(|_| (rng.octonion(alg), rng.octonion(alg), rng.octonion(alg))))
            .collect();
        for (x, y, z) in pairs {
            dev = dev.max((x * (x * y)).max_abs_diff(&((x * x) * y)));
            dev = dev.max(((y * x) * x).max_abs_diff(&(y * (x * x))));
            dev = dev.max((x * y).conj().max_abs_diff(&(y.conj() * x.conj())));
            dev = dev.max(((x * y) * (z * x)).max_abs_diff(&(x * ((y * z) * x))));
            if alg == Algebra::Compact {
                let lhs = (x * y).norm2();
                dev = dev.max((lhs - x.norm2() * y.norm2()).abs() / lhs.max(1.0));
            }
        }
    }
    Ok(dev)
}

fn pair_correspondence(samples: usize, seed: u64) -> Result<f64> {
    let mut rng = Sampler::new(seed);
    let mut dev = 0.0_f64;
    for _ in 0..samples {
        let x = rng.jordan(Algebra::Compact);
        let y = rng.jordan(Algebra::Compact);
        let lhs = pair_cross(&to_pair(&x)?, &to_pair(&y)?);
        let rhs = to_pair(&freudenthal_cross(&x, &y)?)?;
        dev = dev.max(lhs.max_abs_diff(&rhs));
    }
    Ok(dev)
}

fn generator_membership(trials: usize, seed: u64) -> Result<f64> {
    let mut rng = Sampler::new(seed);
    let gens: Vec<Generator> = vec![
        DeltaA::new(rng.unit_octonion(Algebra::Compact))?.into(),
        RotO3::new(rng.orthogonal3())?.into(),
        SpThree::new(rng.symplectic3())?.into(),
        g2_map_to_e1(&rng.imaginary_unit())?.into(),
    ];
    let mut dev = 0.0_f64;
    for (i, g) in gens.iter().enumerate() {
        dev = dev.max(check_f4_membership(g, trials, seed + i as u64)?.max_deviation());
    }
    Ok(dev)
}

fn g2_transitivity(samples: usize, seed: u64) -> Result<f64> {
    let mut rng = Sampler::new(seed);
    let e1 = Octonion::basis(1, Algebra::Compact);
    let mut dev = 0.0_f64;
    for _ in 0..samples {
        let u = rng.imaginary_unit();
        let g = g2_map_to_e1(&u)?;
        dev = dev.max(g.map(&u).max_abs_diff(&e1));
        dev = dev.max(g.automorphism_deviation());
    }
    Ok(dev)
}

/// Largest off-diagonal residual and largest relative invariant drift.
fn diagonalization(samples: usize, seed: u64) -> Result<(f64, f64)> {
    let mut rng = Sampler::new(seed);
    let tol = Tolerances::default();
    let (mut residual, mut drift) = (0.0_f64, 0.0_f64);
    for _ in 0..samples {
        let t = diagonalize(&rng.jordan(Algebra::Compact), &tol)?;
        residual = residual.max(t.off_diag_residual);
        drift = drift.max(t.relative_drift().max());
    }
    Ok((residual, drift))
}

fn split_certificate() -> Result<f64> {
    let v = diagonalizability_obstruction(&counterexample_x0())?;
    let ok = v.verdict == Verdict::Obstructed;
    Ok(if ok { (v.inner_square + 2.0).abs() } else { f64::INFINITY })
}

pub fn run(seed: u64) -> SelftestReport {
    let diag = diagonalization(100, seed);
    let suites = vec![
        suite("octonion_laws", octonion_laws(1000, seed), 1e-11, 1064),
        suite("pair_correspondence", pair_correspondence(200, seed), 1e-10, 200),
        suite("f4_membership", generator_membership(25, seed), 1e-9, 100),
        suite("g2_transitivity", g2_transitivity(100, seed), 1e-9, 100),
        suite(
            "diagonalization_residual",
            diag.clone().map(|d| d.0),
            Tolerances::default().residual_tol,
            100,
        ),
        suite("diagonalization_drift", diag.map(|d| d.1), DRIFT_TOL, 100),
        suite("split_certificate", split_certificate(), 0.0, 1),
    ];
    SelftestReport {
        passed: suites.iter().all(|s| s.passed),
        suites,
    }
}
