//! Constructive diagonalization of compact elements by explicit generators.
//!
//! The pipeline runs five steps, each producing one generator:
//!
//! 1. `δ_a` with `a = x1/|x1|` makes `x1` real;
//! 2. a rotation `diag(1, T')` in O(3) clears the real `x1`;
//! 3. `δ_a` with `a = x2/|x2|` makes `x2` real (applied to the output of step 2);
//! 4. a G2 automorphism moves the imaginary part of `x3` onto `e1`, so the
//!    element now has complex entries;
//! 5. complex Jacobi sweeps build a unitary `A` in Sp(3) that diagonalizes it.
//!
//! Steps with nothing to do emit the identity of their family. A final
//! permutation sorts the diagonal in descending order when needed.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generators::{
    g2_map_to_e1, DeltaA, GTwoAuto, Generator, GeneratorRecord, GeneratorSequence, RotO3, SpThree,
};
use crate::jordan::{to_pair, Invariants, JordanElement};
use crate::octonion::Algebra;
use crate::quaternion::{qmat_adjoint, qmat_identity, qmat_mul, QuatMatrix, Quaternion};

/// Largest relative drift of any invariant accepted for a transcript.
pub const DRIFT_TOL: f64 = 1e-8;

/// Slack allowed when replaying a transcript, per unit of input scale.
pub const REPLAY_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub zero_tol: f64,
    pub residual_tol: f64,
    pub jacobi_tol: f64,
    pub max_sweeps: usize,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            zero_tol: 1e-10,
            residual_tol: 1e-9,
            jacobi_tol: 1e-12,
            max_sweeps: 30,
        }
    }
}

impl Tolerances {
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("zero_tol", self.zero_tol),
            ("residual_tol", self.residual_tol),
            ("jacobi_tol", self.jacobi_tol),
        ] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::InvalidTolerance(format!("{name} must be positive, got {v}")));
            }
        }
        if self.max_sweeps == 0 {
            return Err(Error::InvalidTolerance("max_sweeps must be at least 1".into()));
        }
        Ok(())
    }

    /// Multiply every threshold by `scale` (no-op below 1).
    pub fn scaled(&self, scale: f64) -> Self {
        let s = scale.max(1.0);
        Self {
            zero_tol: self.zero_tol * s,
            residual_tol: self.residual_tol * s,
            jacobi_tol: self.jacobi_tol * s,
            max_sweeps: self.max_sweeps,
        }
    }
}

/// Absolute differences between the invariants of the input and of the
/// reported diagonal.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InvariantDrift {
    pub trace: f64,
    pub inner: f64,
    pub sigma: f64,
    pub det: f64,
}

impl InvariantDrift {
    pub fn between(before: &Invariants, after: &Invariants) -> Self {
        Self {
            trace: (before.trace - after.trace).abs(),
            inner: (before.inner_square - after.inner_square).abs(),
            sigma: (before.sigma - after.sigma).abs(),
            det: (before.det - after.det).abs(),
        }
    }

    /// Each drift divided by `max(1, |value before|)`.
    pub fn relative_to(&self, before: &Invariants) -> Self {
        let r = |d: f64, v: f64| d / v.abs().max(1.0);
        Self {
            trace: r(self.trace, before.trace),
            inner: r(self.inner, before.inner_square),
            sigma: r(self.sigma, before.sigma),
            det: r(self.det, before.det),
        }
    }

    pub fn max(&self) -> f64 {
        self.trace.max(self.inner).max(self.sigma).max(self.det)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DiagonalizationTranscript {
    pub input: JordanElement,
    pub steps: GeneratorSequence,
    pub diagonal: [f64; 3],
    pub off_diag_residual: f64,
    pub invariant_drift: InvariantDrift,
}

impl DiagonalizationTranscript {
    /// Drift relative to the input's invariants.
    pub fn relative_drift(&self) -> InvariantDrift {
        self.invariant_drift.relative_to(&Invariants::of(&self.input))
    }

    pub fn to_record(&self) -> TranscriptRecord {
        TranscriptRecord {
            input: self.input,
            steps: self.steps.iter().map(GeneratorRecord::from).collect(),
            diagonal: self.diagonal,
            off_diag_residual: self.off_diag_residual,
            invariant_drift: self.invariant_drift,
        }
    }
}

impl Serialize for DiagonalizationTranscript {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_record().serialize(s)
    }
}

/// Transcript wire form. Generators are kept unvalidated so that a
/// verifier can report which one is broken.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TranscriptRecord {
    pub input: JordanElement,
    pub steps: Vec<GeneratorRecord>,
    pub diagonal: [f64; 3],
    pub off_diag_residual: f64,
    pub invariant_drift: InvariantDrift,
}

impl TryFrom<TranscriptRecord> for DiagonalizationTranscript {
    type Error = Error;
    fn try_from(r: TranscriptRecord) -> Result<Self> {
        let steps = r
            .steps
            .into_iter()
            .map(Generator::try_from)
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            input: r.input,
            steps: GeneratorSequence(steps),
            diagonal: r.diagonal,
            off_diag_residual: r.off_diag_residual,
            invariant_drift: r.invariant_drift,
        })
    }
}

impl<'de> Deserialize<'de> for DiagonalizationTranscript {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let record = TranscriptRecord::deserialize(d)?;
        Self::try_from(record).map_err(serde::de::Error::custom)
    }
}

fn require_compact(x: &JordanElement) -> Result<()> {
    if x.algebra() != Algebra::Compact {
        return Err(Error::SplitUnsupported);
    }
    Ok(())
}

/// Step (i): make `x1` real with `δ_a`, `a = x1/|x1|`.
pub fn step_make_x1_real(x: &JordanElement, tol: &Tolerances) -> Result<(Generator, JordanElement)> {
    require_compact(x)?;
    let x1 = x.x1();
    let n = x1.euclidean_norm();
    if n <= tol.zero_tol {
        return Ok((DeltaA::identity(Algebra::Compact).into(), *x));
    }
    let g = DeltaA::new(x1.scale(1.0 / n))?;
    let y = g.apply(x)?;
    Ok((g.into(), y))
}

/// Step (ii): clear the real `x1` with the Jacobi rotation of the lower
/// 2×2 block `[[xi2, r1], [r1, xi3]]`, angle `½ atan2(2 r1, xi2 − xi3)`.
pub fn step_clear_x1(x: &JordanElement, tol: &Tolerances) -> Result<(Generator, JordanElement)> {
    require_compact(x)?;
    let x1 = x.x1();
    let imag = x1.im().euclidean_norm();
    if imag > tol.zero_tol {
        return Err(Error::X1NotReal { imag });
    }
    let r1 = x1.re();
    if r1 == 0.0 {
        return Ok((RotO3::identity().into(), *x));
    }
    let [_, xi2, xi3] = x.diag();
    let theta = 0.5 * (2.0 * r1).atan2(xi2 - xi3);
    let (s, c) = theta.sin_cos();
    let g = RotO3::new([[1.0, 0.0, 0.0], [0.0, c, s], [0.0, -s, c]])?;
    let y = g.apply(x)?;
    Ok((g.into(), y))
}

/// Step (iii): make `x2` real with `δ_a`, `a = x2/|x2|`; `x1` stays zero.
pub fn step_make_x2_real(x: &JordanElement, tol: &Tolerances) -> Result<(Generator, JordanElement)> {
    require_compact(x)?;
    let x1n = x.x1().euclidean_norm();
    if x1n > tol.zero_tol {
        return Err(Error::NotComplex {
            reason: format!("x1 must vanish before step (iii), |x1| = {x1n:e}"),
        });
    }
    let x2 = x.x2();
    let n = x2.euclidean_norm();
    if n <= tol.zero_tol {
        return Ok((DeltaA::identity(Algebra::Compact).into(), *x));
    }
    let g = DeltaA::new(x2.scale(1.0 / n))?;
    let y = g.apply(x)?;
    Ok((g.into(), y))
}

/// Step (iv): rotate the imaginary part of `x3` onto `e1` with a G2 element.
pub fn step_x3_to_complex(x: &JordanElement, tol: &Tolerances) -> Result<(Generator, JordanElement)> {
    require_compact(x)?;
    let u = x.x3().im();
    let n = u.euclidean_norm();
    if n <= tol.zero_tol {
        return Ok((GTwoAuto::identity().into(), *x));
    }
    let g = g2_map_to_e1(&u.scale(1.0 / n))?;
    let y = g.apply(x)?;
    Ok((g.into(), y))
}

/// Step (v): diagonalize an element of `J(3,C)` with cyclic complex Jacobi
/// sweeps; the accumulated unitary is returned as an Sp(3) generator.
pub fn step_unitary_diag(x: &JordanElement, tol: &Tolerances) -> Result<(Generator, JordanElement)> {
    require_compact(x)?;
    for (i, o) in x.off().iter().enumerate() {
        if !o.is_complex(tol.zero_tol) {
            return Err(Error::NotComplex {
                reason: format!("x{} has components outside span{{1, e1}}", i + 1),
            });
        }
    }
    let pair = to_pair(x)?;
    let mut h = pair.m_matrix();
    for row in h.iter_mut() {
        for q in row.iter_mut() {
            *q = Quaternion::complex(q.w, q.x);
        }
    }
    let mut acc = qmat_identity();
    let mut converged = false;
    for _ in 0..tol.max_sweeps {
        if max_off(&h) <= tol.jacobi_tol {
            converged = true;
            break;
        }
        for (p, q) in [(0, 1), (0, 2), (1, 2)] {
            if let Some(rot) = jacobi_rotation(&h, p, q) {
                h = qmat_mul(&qmat_mul(&rot, &h), &qmat_adjoint(&rot));
                acc = qmat_mul(&rot, &acc);
            }
        }
    }
    let off = max_off(&h);
    if !converged && off > tol.jacobi_tol {
        return Err(Error::NoConvergence {
            sweeps: tol.max_sweeps,
            off,
        });
    }
    if acc == qmat_identity() {
        return Ok((SpThree::identity().into(), *x));
    }
    let g = SpThree::new(acc)?;
    let y = g.apply(x)?;
    let residual = y.max_off_diagonal();
    if residual > tol.residual_tol {
        return Err(Error::NoConvergence {
            sweeps: tol.max_sweeps,
            off: residual,
        });
    }
    Ok((g.into(), y))
}

fn max_off(h: &QuatMatrix) -> f64 {
    [h[0][1], h[0][2], h[1][2]]
        .iter()
        .map(|q| q.norm())
        .fold(0.0, f64::max)
}

/// Unitary acting on rows `p, q` that zeroes `h[p][q]`: a phase making the
/// entry real followed by the real Jacobi rotation.
fn jacobi_rotation(h: &QuatMatrix, p: usize, q: usize) -> Option<QuatMatrix> {
    let hpq = h[p][q];
    let r = hpq.norm();
    if r == 0.0 {
        return None;
    }
    let phase = hpq.scale(1.0 / r);
    let theta = 0.5 * (2.0 * r).atan2(h[p][p].w - h[q][q].w);
    let (s, c) = theta.sin_cos();
    let mut g = qmat_identity();
    g[p][p] = Quaternion::real(c);
    g[p][q] = phase.scale(s);
    g[q][p] = Quaternion::real(-s);
    g[q][q] = phase.scale(c);
    Some(g)
}

/// Full pipeline plus the element after each generator.
pub fn diagonalize_with_stages(
    x: &JordanElement,
    tol: &Tolerances,
) -> Result<(DiagonalizationTranscript, Vec<JordanElement>)> {
    require_compact(x)?;
    tol.validate()?;
    let t = tol.scaled(x.frobenius_norm());

    let mut steps = GeneratorSequence::new();
    let mut stages = Vec::with_capacity(6);
    let mut cur = *x;
    type Step = fn(&JordanElement, &Tolerances) -> Result<(Generator, JordanElement)>;
    let pipeline: [Step; 5] = [
        step_make_x1_real,
        step_clear_x1,
        step_make_x2_real,
        step_x3_to_complex,
        step_unitary_diag,
    ];
    for step in pipeline {
        let (g, next) = step(&cur, &t)?;
        steps.push(g);
        stages.push(next);
        cur = next;
    }

    let d = cur.diag();
    let mut perm = [0usize, 1, 2];
    perm.sort_by(|&a, &b| d[b].total_cmp(&d[a]));
    if perm != [0, 1, 2] {
        let g = RotO3::permutation(perm)?;
        cur = g.apply(&cur)?;
        steps.push(g);
        stages.push(cur);
    }

    let off_diag_residual = cur.max_off_diagonal();
    if off_diag_residual > t.residual_tol {
        return Err(Error::NoConvergence {
            sweeps: t.max_sweeps,
            off: off_diag_residual,
        });
    }
    let diagonal = cur.diag();
    let before = Invariants::of(x);
    let after = Invariants::of(&JordanElement::diagonal(diagonal, Algebra::Compact));
    let transcript = DiagonalizationTranscript {
        input: *x,
        steps,
        diagonal,
        off_diag_residual,
        invariant_drift: InvariantDrift::between(&before, &after),
    };
    Ok((transcript, stages))
}

pub fn diagonalize(x: &JordanElement, tol: &Tolerances) -> Result<DiagonalizationTranscript> {
    diagonalize_with_stages(x, tol).map(|(t, _)| t)
}

/// Outcome of replaying a transcript.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub ok: bool,
    pub invalid_generators: Vec<String>,
    pub replay_residual: f64,
    pub diagonal_mismatch: f64,
    pub relative_drift: InvariantDrift,
}

/// Replay a transcript record: every generator must pass its membership
/// checks, the replayed element must match the stated diagonal and
/// residual, and the relative invariant drift must stay within [`DRIFT_TOL`].
pub fn verify_transcript(record: &TranscriptRecord) -> VerifyReport {
    let mut invalid = Vec::new();
    let mut gens = Vec::new();
    for (i, r) in record.steps.iter().enumerate() {
        match Generator::try_from(r.clone()) {
            Ok(g) => gens.push(g),
            Err(e) => invalid.push(format!("step {i}: {e}")),
        }
    }
    let before = Invariants::of(&record.input);
    let after = Invariants::of(&JordanElement::diagonal(record.diagonal, record.input.algebra()));
    let relative_drift = InvariantDrift::between(&before, &after).relative_to(&before);
    let mut report = VerifyReport {
        ok: false,
        invalid_generators: invalid,
        replay_residual: f64::INFINITY,
        diagonal_mismatch: f64::INFINITY,
        relative_drift,
    };
    if !report.invalid_generators.is_empty() {
        return report;
    }
    let replayed = match crate::generators::apply_sequence(gens.iter(), &record.input) {
        Ok(y) => y,
        Err(e) => {
            report.invalid_generators.push(format!("replay: {e}"));
            return report;
        }
    };
    report.replay_residual = replayed.max_off_diagonal();
    report.diagonal_mismatch = replayed
        .diag()
        .iter()
        .zip(record.diagonal.iter())
        .fold(0.0_f64, |m, (a, b)| m.max((a - b).abs()));
    let bound = record.off_diag_residual + REPLAY_SLACK * record.input.frobenius_norm().max(1.0);
    report.ok = report.replay_residual <= bound
        && report.diagonal_mismatch <= bound
        && relative_drift.max() <= DRIFT_TOL;
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::octonion::Octonion;
    use crate::random::Sampler;

    const C: Algebra = Algebra::Compact;

    fn e(i: usize) -> Octonion {
        Octonion::basis(i, C)
    }

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    #[test]
    fn step_one_cases() {
        let x = JordanElement::unit(C);
        let (g, y) = step_make_x1_real(&x, &tol()).unwrap();
        assert!(g.is_identity());
        assert_eq!(y, x);

        let x = JordanElement::zero(C).with_off(0, e(4).scale(3.0));
        let (_, y) = step_make_x1_real(&x, &tol()).unwrap();
        assert_eq!(y.x1(), Octonion::real(3.0, C));

        let x = JordanElement::zero(C).with_off(0, Octonion::real(5.0, C));
        let (g, y) = step_make_x1_real(&x, &tol()).unwrap();
        assert!(g.is_identity());
        assert_eq!(y, x);
    }

    #[test]
    fn step_two_cases() {
        let x = JordanElement::diagonal([0.0, 2.0, 3.0], C);
        let (g, y) = step_clear_x1(&x, &tol()).unwrap();
        assert!(g.is_identity());
        assert_eq!(y, x);

        let x = JordanElement::zero(C).with_off(0, Octonion::one(C));
        let (_, y) = step_clear_x1(&x, &tol()).unwrap();
        assert!((y.diag()[1] - 1.0).abs() < 1e-15);
        assert!((y.diag()[2] + 1.0).abs() < 1e-15);
        assert!(y.x1().euclidean_norm() < 1e-15);

        let x = JordanElement::zero(C).with_off(0, e(3));
        assert!(matches!(step_clear_x1(&x, &tol()), Err(Error::X1NotReal { .. })));
    }

    #[test]
    fn step_three_cases() {
        let x = JordanElement::zero(C).with_off(1, e(7).scale(2.0));
        let (_, y) = step_make_x2_real(&x, &tol()).unwrap();
        assert_eq!(y.x2(), Octonion::real(2.0, C));
        assert_eq!(y.x1(), Octonion::zero(C));

        let x = JordanElement::zero(C).with_off(1, Octonion::real(-4.0, C));
        let (g, y) = step_make_x2_real(&x, &tol()).unwrap();
        match g {
            Generator::DeltaA(d) => assert_eq!(d.a(), Octonion::real(-1.0, C)),
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(y.x2(), Octonion::real(4.0, C));

        let x = JordanElement::unit(C);
        assert!(step_make_x2_real(&x, &tol()).unwrap().0.is_identity());
    }

    #[test]
    fn step_four_cases() {
        let x = JordanElement::zero(C).with_off(2, Octonion::real(2.0, C));
        assert!(step_x3_to_complex(&x, &tol()).unwrap().0.is_identity());

        let x = JordanElement::zero(C).with_off(2, e(1));
        let (_, y) = step_x3_to_complex(&x, &tol()).unwrap();
        assert!(y.x3().is_complex(1e-12));

        let x = JordanElement::zero(C)
            .with_off(1, Octonion::real(0.5, C))
            .with_off(2, Octonion::one(C) + e(5));
        let (_, y) = step_x3_to_complex(&x, &tol()).unwrap();
        assert!(y.x3().max_abs_diff(&(Octonion::one(C) + e(1))) < 1e-9);
        assert_eq!(y.x2(), Octonion::real(0.5, C));
    }

    #[test]
    fn step_five_real_symmetric() {
        let one = Octonion::one(C);
        let x = JordanElement::new([0.0; 3], [one, one, one]).unwrap();
        let (_, y) = step_unitary_diag(&x, &tol()).unwrap();
        let mut d = y.diag();
        d.sort_by(f64::total_cmp);
        assert!((d[0] + 1.0).abs() < 1e-9);
        assert!((d[1] + 1.0).abs() < 1e-9);
        assert!((d[2] - 2.0).abs() < 1e-9);
    }

    #[test]
    fn step_five_complex_block() {
        let x = JordanElement::zero(C).with_off(2, e(1));
        let (_, y) = step_unitary_diag(&x, &tol()).unwrap();
        let mut d = y.diag();
        d.sort_by(f64::total_cmp);
        assert!((d[0] + 1.0).abs() < 1e-9 && d[1].abs() < 1e-9 && (d[2] - 1.0).abs() < 1e-9);
        assert!(y.max_off_diagonal() < 1e-12);
    }

    #[test]
    fn step_five_rejects_noncomplex() {
        let x = JordanElement::zero(C).with_off(2, e(2));
        assert!(matches!(step_unitary_diag(&x, &tol()), Err(Error::NotComplex { .. })));
    }

    #[test]
    fn step_five_reports_exhausted_sweeps() {
        let one = Octonion::one(C);
        let x = JordanElement::new([0.0, 0.3, 0.7], [one, one, one]).unwrap();
        let t = Tolerances {
            max_sweeps: 1,
            ..tol()
        };
        assert!(matches!(step_unitary_diag(&x, &t), Err(Error::NoConvergence { .. })));
    }

    #[test]
    fn unit_needs_no_work() {
        let t = diagonalize(&JordanElement::unit(C), &tol()).unwrap();
        assert_eq!(t.diagonal, [1.0; 3]);
        assert_eq!(t.steps.len(), 5);
        assert!(t.steps.iter().all(Generator::is_identity));
    }

    #[test]
    fn diagonal_input_is_only_sorted() {
        let t = diagonalize(&JordanElement::diagonal([3.0, 1.0, 2.0], C), &tol()).unwrap();
        assert_eq!(t.diagonal, [3.0, 2.0, 1.0]);
        let non_identity: Vec<_> = t.steps.iter().filter(|g| !g.is_identity()).collect();
        assert_eq!(non_identity.len(), 1);
        assert_eq!(non_identity[0].kind(), "rot_o3");
    }

    #[test]
    fn split_input_rejected() {
        assert_eq!(
            diagonalize(&JordanElement::unit(Algebra::Split), &tol()),
            Err(Error::SplitUnsupported)
        );
    }

    #[test]
    fn bad_tolerances_rejected() {
        let t = Tolerances {
            zero_tol: -1.0,
            ..tol()
        };
        assert!(matches!(
            diagonalize(&JordanElement::unit(C), &t),
            Err(Error::InvalidTolerance(_))
        ));
    }

    #[test]
    fn random_element_transcript_verifies() {
        let x = Sampler::new(42).jordan(C);
        let t = diagonalize(&x, &tol()).unwrap();
        assert!(t.off_diag_residual <= 1e-9);
        assert!(t.relative_drift().max() <= 1e-8);
        let record = t.to_record();
        assert!(verify_transcript(&record).ok);

        let mut tampered = record.clone();
        tampered.diagonal[1] += 1e-3;
        assert!(!verify_transcript(&tampered).ok);

        let mut injected = record;
        injected.steps[1] = GeneratorRecord::RotO3 {
            payload: [1.0, 0.0, 0.0, 0.0, 1.0, 0.1, 0.0, 0.0, 1.0],
        };
        let report = verify_transcript(&injected);
        assert!(!report.ok);
        assert_eq!(report.invalid_generators.len(), 1);
    }

    #[test]
    fn transcript_json_shape() {
        let t = diagonalize(&Sampler::new(1).jordan(C), &tol()).unwrap();
        let v = serde_json::to_value(&t).unwrap();
        let keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
        assert_eq!(
            keys,
            ["diagonal", "input", "invariant_drift", "off_diag_residual", "steps"]
        );
        let back: DiagonalizationTranscript = serde_json::from_value(v).unwrap();
        assert_eq!(back, t);
    }
}
