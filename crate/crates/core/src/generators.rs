//! Explicit elements of F4 acting on [`JordanElement`].
//!
//! Four families are available:
//!
//! * [`DeltaA`]: conjugation by `D_a = diag(a, conj(a), 1)` for a unit octonion `a`,
//!   acting entrywise as `x1 -> conj(a) x1`, `x2 -> x2 conj(a)`, `x3 -> a x3 a`.
//! * [`RotO3`]: `X -> T X T^-1` for a real orthogonal `T`.
//! * [`SpThree`]: `M + a -> A M A* + a A*` on the pair model, for `A*A = E`.
//! * [`GTwoAuto`]: an octonion automorphism applied to every off-diagonal entry.
//!
//! Every generator is validated once at construction and is immutable after.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::jordan::{
    freudenthal_cross, from_pair, inner_product, jordan_product, to_pair, JordanElement,
};
use crate::octonion::{Algebra, Octonion};
use crate::quaternion::{
    qmat_adjoint, qmat_identity, qmat_mul, symplectic_deviation, QuatMatrix, Quaternion,
};
use crate::random::Sampler;

/// Tolerance for the membership invariants checked at construction.
pub const GENERATOR_TOL: f64 = 1e-10;

/// Tolerance on the unit and imaginary preconditions of [`g2_map_to_e1`].
pub const G2_INPUT_TOL: f64 = 1e-9;

/// Minimum orthogonal component a frame candidate must keep.
const FRAME_CANDIDATE_MIN: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeltaA {
    a: Octonion,
}

impl DeltaA {
    pub fn new(a: Octonion) -> Result<Self> {
        let n = a.norm2();
        if !((n - 1.0).abs() <= GENERATOR_TOL) {
            return Err(Error::NotUnit { norm2: n });
        }
        Ok(Self { a })
    }

    pub fn identity(algebra: Algebra) -> Self {
        Self {
            a: Octonion::one(algebra),
        }
    }

    pub fn a(&self) -> Octonion {
        self.a
    }

    pub fn apply(&self, x: &JordanElement) -> Result<JordanElement> {
        if x.algebra() != self.a.algebra {
            return Err(Error::MismatchedAlgebra {
                left: self.a.algebra,
                right: x.algebra(),
            });
        }
        let a = self.a;
        let ab = a.conj();
        let [x1, x2, x3] = x.off();
        JordanElement::new(x.diag(), [ab * x1, x2 * ab, (a * x3) * a])
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotO3 {
    t: [[f64; 3]; 3],
}

impl RotO3 {
    pub fn new(t: [[f64; 3]; 3]) -> Result<Self> {
        let deviation = orthogonality_deviation(&t);
        if !(deviation <= GENERATOR_TOL) {
            return Err(Error::NotOrthogonal { deviation });
        }
        Ok(Self { t })
    }

    pub fn identity() -> Self {
        Self {
            t: [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]],
        }
    }

    /// Rows of `T` are the unit vectors `e_perm[i]`, so `(T X T^-1)_ij = X_{perm[i] perm[j]}`.
    pub fn permutation(perm: [usize; 3]) -> Result<Self> {
        let mut t = [[0.0; 3]; 3];
        for (i, &p) in perm.iter().enumerate() {
            if p >= 3 {
                return Err(Error::NotOrthogonal { deviation: 1.0 });
            }
            t[i][p] = 1.0;
        }
        Self::new(t)
    }

    pub fn matrix(&self) -> [[f64; 3]; 3] {
        self.t
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn apply(&self, x: &JordanElement) -> Result<JordanElement> {
        let m = x.expand();
        let t = &self.t;
        let alg = x.algebra();
        let mut out = [[Octonion::zero(alg); 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    for l in 0..3 {
                        let w = t[i][k] * t[j][l];
                        if w != 0.0 {
                            out[i][j] += m[k][l].scale(w);
                        }
                    }
                }
            }
        }
        let tol = GENERATOR_TOL * x.frobenius_norm().max(1.0);
        JordanElement::from_matrix(&out, tol)
    }
}

fn orthogonality_deviation(t: &[[f64; 3]; 3]) -> f64 {
    let mut dev = 0.0_f64;
    for i in 0..3 {
        for j in 0..3 {
            let d: f64 = (0..3).map(|k| t[k][i] * t[k][j]).sum();
            let expect = if i == j { 1.0 } else { 0.0 };
            dev = dev.max((d - expect).abs());
        }
    }
    if t.iter().flatten().any(|v| !v.is_finite()) {
        return f64::INFINITY;
    }
    dev
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpThree {
    a: QuatMatrix,
}

impl SpThree {
    pub fn new(a: QuatMatrix) -> Result<Self> {
        let deviation = symplectic_deviation(&a);
        if !(deviation <= GENERATOR_TOL) {
            return Err(Error::NotSymplectic { deviation });
        }
        Ok(Self { a })
    }

    pub fn identity() -> Self {
        Self { a: qmat_identity() }
    }

    pub fn matrix(&self) -> QuatMatrix {
        self.a
    }

    pub fn apply(&self, x: &JordanElement) -> Result<JordanElement> {
        let p = to_pair(x)?;
        let adj = qmat_adjoint(&self.a);
        let m = qmat_mul(&qmat_mul(&self.a, &p.m_matrix()), &adj);
        let mut row = [Quaternion::ZERO; 3];
        for (j, r) in row.iter_mut().enumerate() {
            for i in 0..3 {
                *r += p.a[i] * adj[i][j];
            }
        }
        Ok(from_pair(&crate::jordan::PairElement::from_parts(&m, row)))
    }
}

/// An automorphism of the compact octonions: identity on the reals and the
/// orthogonal matrix `L` on the imaginary coefficients `c1..c7`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GTwoAuto {
    l: [[f64; 7]; 7],
}

impl GTwoAuto {
    pub fn new(l: [[f64; 7]; 7]) -> Result<Self> {
        let candidate = Self { l };
        let deviation = candidate.orthogonality_deviation();
        if !(deviation <= GENERATOR_TOL) {
            return Err(Error::NotOrthogonal { deviation });
        }
        let deviation = candidate.automorphism_deviation();
        if !(deviation <= GENERATOR_TOL) {
            return Err(Error::NotAutomorphism { deviation });
        }
        Ok(candidate)
    }

    pub fn identity() -> Self {
        let mut l = [[0.0; 7]; 7];
        for (i, row) in l.iter_mut().enumerate() {
            row[i] = 1.0;
        }
        Self { l }
    }

    pub fn matrix(&self) -> [[f64; 7]; 7] {
        self.l
    }

    pub fn map(&self, x: &Octonion) -> Octonion {
        let mut c = [0.0; 8];
        c[0] = x.c[0];
        for i in 0..7 {
            c[i + 1] = (0..7).map(|j| self.l[i][j] * x.c[j + 1]).sum();
        }
        Octonion::new(c, x.algebra)
    }

    fn orthogonality_deviation(&self) -> f64 {
        let mut dev = 0.0_f64;
        for i in 0..7 {
            for j in 0..7 {
                let d: f64 = (0..7).map(|k| self.l[k][i] * self.l[k][j]).sum();
                let expect = if i == j { 1.0 } else { 0.0 };
                dev = dev.max((d - expect).abs());
            }
        }
        if self.l.iter().flatten().any(|v| !v.is_finite()) {
            return f64::INFINITY;
        }
        dev
    }

    /// Largest coefficient deviation of `α(e_i e_j)` from `α(e_i) α(e_j)` over
    /// the 49 imaginary basis pairs.
    pub fn automorphism_deviation(&self) -> f64 {
        let alg = Algebra::Compact;
        let mut dev = 0.0_f64;
        for i in 1..8 {
            for j in 1..8 {
                let (ei, ej) = (Octonion::basis(i, alg), Octonion::basis(j, alg));
                let lhs = self.map(&(ei * ej));
                let rhs = self.map(&ei) * self.map(&ej);
                dev = dev.max(lhs.max_abs_diff(&rhs));
            }
        }
        dev
    }

    pub fn apply(&self, x: &JordanElement) -> Result<JordanElement> {
        if x.algebra() != Algebra::Compact {
            return Err(Error::SplitUnsupported);
        }
        JordanElement::new(x.diag(), x.off().map(|o| self.map(&o)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Generator {
    DeltaA(DeltaA),
    RotO3(RotO3),
    SpThree(SpThree),
    GTwoAuto(GTwoAuto),
}

impl Generator {
    pub fn apply(&self, x: &JordanElement) -> Result<JordanElement> {
        match self {
            Generator::DeltaA(g) => g.apply(x),
            Generator::RotO3(g) => g.apply(x),
            Generator::SpThree(g) => g.apply(x),
            Generator::GTwoAuto(g) => g.apply(x),
        }
    }

    /// The algebra the generator is tied to, if any.
    pub fn algebra(&self) -> Option<Algebra> {
        match self {
            Generator::DeltaA(g) => Some(g.a.algebra),
            Generator::RotO3(_) => None,
            Generator::SpThree(_) | Generator::GTwoAuto(_) => Some(Algebra::Compact),
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            Generator::DeltaA(g) => g.a == Octonion::one(g.a.algebra),
            Generator::RotO3(g) => g.is_identity(),
            Generator::SpThree(g) => *g == SpThree::identity(),
            Generator::GTwoAuto(g) => *g == GTwoAuto::identity(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Generator::DeltaA(_) => "delta_a",
            Generator::RotO3(_) => "rot_o3",
            Generator::SpThree(_) => "sp3",
            Generator::GTwoAuto(_) => "g2",
        }
    }
}

impl From<DeltaA> for Generator {
    fn from(g: DeltaA) -> Self {
        Generator::DeltaA(g)
    }
}

impl From<RotO3> for Generator {
    fn from(g: RotO3) -> Self {
        Generator::RotO3(g)
    }
}

impl From<SpThree> for Generator {
    fn from(g: SpThree) -> Self {
        Generator::SpThree(g)
    }
}

impl From<GTwoAuto> for Generator {
    fn from(g: GTwoAuto) -> Self {
        Generator::GTwoAuto(g)
    }
}

/// Wire form of a generator. Parsing a record never validates it; use
/// `Generator::try_from` for that.
///
/// Payloads are row-major: `rot_o3` holds 9 reals, `sp3` holds 36 reals
/// (nine quaternions `[w, x, y, z]`), `g2` holds the 49 entries of `L`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", deny_unknown_fields)]
pub enum GeneratorRecord {
    #[serde(rename = "delta_a")]
    DeltaA { algebra: Algebra, payload: [f64; 8] },
    #[serde(rename = "rot_o3")]
    RotO3 { payload: [f64; 9] },
    #[serde(rename = "sp3")]
    SpThree { payload: Vec<f64> },
    #[serde(rename = "g2")]
    GTwoAuto { payload: Vec<f64> },
}

impl From<&Generator> for GeneratorRecord {
    fn from(g: &Generator) -> Self {
        match g {
            Generator::DeltaA(d) => GeneratorRecord::DeltaA {
                algebra: d.a.algebra,
                payload: d.a.c,
            },
            Generator::RotO3(r) => {
                let mut payload = [0.0; 9];
                for (i, v) in r.t.iter().flatten().enumerate() {
                    payload[i] = *v;
                }
                GeneratorRecord::RotO3 { payload }
            }
            Generator::SpThree(s) => GeneratorRecord::SpThree {
                payload: s.a.iter().flatten().flat_map(|q| q.to_array()).collect(),
            },
            Generator::GTwoAuto(g) => GeneratorRecord::GTwoAuto {
                payload: g.l.iter().flatten().copied().collect(),
            },
        }
    }
}

impl TryFrom<GeneratorRecord> for Generator {
    type Error = Error;
    fn try_from(r: GeneratorRecord) -> Result<Self> {
        match r {
            GeneratorRecord::DeltaA { algebra, payload } => {
                Ok(DeltaA::new(Octonion::new(payload, algebra))?.into())
            }
            GeneratorRecord::RotO3 { payload } => {
                let t = std::array::from_fn(|i| std::array::from_fn(|j| payload[3 * i + j]));
                Ok(RotO3::new(t)?.into())
            }
            GeneratorRecord::SpThree { payload } => {
                if payload.len() != 36 {
                    return Err(Error::Malformed(format!(
                        "sp3 payload needs 36 reals, got {}",
                        payload.len()
                    )));
                }
                let a = std::array::from_fn(|i| {
                    std::array::from_fn(|j| {
                        let k = 4 * (3 * i + j);
                        Quaternion::new(payload[k], payload[k + 1], payload[k + 2], payload[k + 3])
                    })
                });
                Ok(SpThree::new(a)?.into())
            }
            GeneratorRecord::GTwoAuto { payload } => {
                if payload.len() != 49 {
                    return Err(Error::Malformed(format!(
                        "g2 payload needs 49 reals, got {}",
                        payload.len()
                    )));
                }
                let l = std::array::from_fn(|i| std::array::from_fn(|j| payload[7 * i + j]));
                Ok(GTwoAuto::new(l)?.into())
            }
        }
    }
}

impl Serialize for Generator {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GeneratorRecord::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Generator {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let record = GeneratorRecord::deserialize(d)?;
        Generator::try_from(record).map_err(serde::de::Error::custom)
    }
}

/// Generators applied left to right.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GeneratorSequence(pub Vec<Generator>);

impl GeneratorSequence {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, g: impl Into<Generator>) {
        self.0.push(g.into());
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Generator> {
        self.0.iter()
    }

    pub fn apply(&self, x: &JordanElement) -> Result<JordanElement> {
        apply_sequence(self.0.iter(), x)
    }
}

pub fn apply_sequence<'a>(
    gens: impl IntoIterator<Item = &'a Generator>,
    x: &JordanElement,
) -> Result<JordanElement> {
    gens.into_iter().try_fold(*x, |acc, g| g.apply(&acc))
}

fn imag_vec(x: &Octonion) -> [f64; 7] {
    std::array::from_fn(|i| x.c[i + 1])
}

fn dot7(a: &[f64; 7], b: &[f64; 7]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// First basis vector `e1..e7` whose component orthogonal to `against` is
/// longer than `FRAME_CANDIDATE_MIN`, normalized.
fn complete_frame(against: &[[f64; 7]]) -> [f64; 7] {
    for k in 0..7 {
        let mut v = [0.0; 7];
        v[k] = 1.0;
        // two Gram–Schmidt passes keep the result orthogonal to rounding level
        for _ in 0..2 {
            for b in against {
                let d = dot7(&v, b);
                for i in 0..7 {
                    v[i] -= d * b[i];
                }
            }
        }
        let n = dot7(&v, &v).sqrt();
        if n > FRAME_CANDIDATE_MIN {
            return v.map(|c| c / n);
        }
    }
    // at most three constraints in seven dimensions leave a complement of
    // dimension four, so some basis vector projects with length >= sqrt(4/7)
    unreachable!("orthogonal complement of at most three vectors is nonempty")
}

/// Build an automorphism `α` of the compact octonions with `α(u) = e1`.
///
/// Choose a unit imaginary `v ⟂ u` and a unit imaginary `w ⟂ u, v, uv`.
/// The frame `(u, v, uv, w, uw, vw, (uv)w)` is orthonormal and is the image
/// of `(e1, e2, e3, e4, e5, e6, e7)` under an automorphism; `α` is the
/// inverse of that map, i.e. `L` has the frame vectors as rows.
pub fn g2_map_to_e1(u: &Octonion) -> Result<GTwoAuto> {
    if u.algebra != Algebra::Compact {
        return Err(Error::SplitUnsupported);
    }
    if !(u.re().abs() <= G2_INPUT_TOL) {
        return Err(Error::NotImaginary { real: u.re() });
    }
    let n = u.norm2();
    if !((n - 1.0).abs() <= G2_INPUT_TOL) {
        return Err(Error::NotUnit { norm2: n });
    }
    let alg = Algebra::Compact;
    let from_vec = |v: [f64; 7]| {
        let mut c = [0.0; 8];
        c[1..].copy_from_slice(&v);
        Octonion::new(c, alg)
    };

    let uo = u.im();
    let uv7 = imag_vec(&uo);
    let v7 = complete_frame(&[uv7]);
    let vo = from_vec(v7);
    let uvo = uo * vo;
    let w7 = complete_frame(&[uv7, v7, imag_vec(&uvo)]);
    let wo = from_vec(w7);
    let frame = [uo, vo, uvo, wo, uo * wo, vo * wo, uvo * wo];
    let l = frame.map(|f| imag_vec(&f));
    GTwoAuto::new(l)
}

/// Largest deviations observed by [`check_f4_membership`].
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct MembershipReport {
    pub trials: usize,
    pub jordan_deviation: f64,
    pub cross_deviation: f64,
    pub inner_deviation: f64,
}

impl MembershipReport {
    pub fn max_deviation(&self) -> f64 {
        self.jordan_deviation
            .max(self.cross_deviation)
            .max(self.inner_deviation)
    }
}

/// Sample random pairs and measure how far `g` is from preserving `∘`, `×`
/// and the inner product. Elements are drawn from the generator's own
/// algebra (compact for rotations).
pub fn check_f4_membership(g: &Generator, trials: usize, seed: u64) -> Result<MembershipReport> {
    check_f4_membership_in(g, g.algebra().unwrap_or(Algebra::Compact), trials, seed)
}

pub fn check_f4_membership_in(
    g: &Generator,
    algebra: Algebra,
    trials: usize,
    seed: u64,
) -> Result<MembershipReport> {
    let mut rng = Sampler::new(seed);
    let mut report = MembershipReport {
        trials,
        ..Default::default()
    };
    for _ in 0..trials {
        let x = rng.jordan(algebra);
        let y = rng.jordan(algebra);
        let (gx, gy) = (g.apply(&x)?, g.apply(&y)?);
        let j = g.apply(&jordan_product(&x, &y)?)?;
        report.jordan_deviation = report
            .jordan_deviation
            .max(j.max_abs_diff(&jordan_product(&gx, &gy)?));
        let c = g.apply(&freudenthal_cross(&x, &y)?)?;
        report.cross_deviation = report
            .cross_deviation
            .max(c.max_abs_diff(&freudenthal_cross(&gx, &gy)?));
        let d = (inner_product(&gx, &gy)? - inner_product(&x, &y)?).abs();
        report.inner_deviation = report.inner_deviation.max(d);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    const C: Algebra = Algebra::Compact;

    fn e(i: usize) -> Octonion {
        Octonion::basis(i, C)
    }

    #[test]
    fn delta_a_makes_entry_real() {
        let x = JordanElement::zero(C).with_off(0, e(2));
        let y = DeltaA::new(e(2)).unwrap().apply(&x).unwrap();
        assert_eq!(y.x1(), Octonion::one(C));
    }

    #[test]
    fn identities_act_trivially() {
        let x = Sampler::new(5).jordan(C);
        assert_eq!(RotO3::identity().apply(&x).unwrap(), x);
        assert!(SpThree::identity().apply(&x).unwrap().max_abs_diff(&x) < 1e-15);
        assert_eq!(GTwoAuto::identity().apply(&x).unwrap(), x);
        assert_eq!(DeltaA::identity(C).apply(&x).unwrap(), x);
    }

    #[test]
    fn every_family_fixes_unit() {
        let mut rng = Sampler::new(9);
        let u = JordanElement::unit(C);
        let gens: Vec<Generator> = vec![
            DeltaA::new(rng.unit_octonion(C)).unwrap().into(),
            RotO3::new(rng.orthogonal3()).unwrap().into(),
            SpThree::new(rng.symplectic3()).unwrap().into(),
            g2_map_to_e1(&rng.imaginary_unit()).unwrap().into(),
        ];
        for g in &gens {
            assert!(g.apply(&u).unwrap().max_abs_diff(&u) < 1e-12, "{}", g.kind());
        }
    }

    #[test]
    fn sequence_is_left_fold() {
        let mut rng = Sampler::new(11);
        let x = rng.jordan(C);
        let g1: Generator = RotO3::new(rng.orthogonal3()).unwrap().into();
        let g2: Generator = DeltaA::new(rng.unit_octonion(C)).unwrap().into();
        let empty = GeneratorSequence::new();
        assert_eq!(empty.apply(&x).unwrap(), x);
        let single = GeneratorSequence(vec![g1]);
        assert_eq!(single.apply(&x).unwrap(), g1.apply(&x).unwrap());
        let both = GeneratorSequence(vec![g1, g2]);
        assert_eq!(
            both.apply(&x).unwrap(),
            g2.apply(&g1.apply(&x).unwrap()).unwrap()
        );
    }

    #[test]
    fn construction_rejects_bad_inputs() {
        assert!(matches!(
            DeltaA::new(Octonion::real(2.0, C)),
            Err(Error::NotUnit { .. })
        ));
        let mut t = RotO3::identity().matrix();
        t[0][1] = 0.1;
        assert!(matches!(RotO3::new(t), Err(Error::NotOrthogonal { .. })));
        let mut a = qmat_identity();
        a[2][2] = Quaternion::real(1.1);
        assert!(matches!(SpThree::new(a), Err(Error::NotSymplectic { .. })));
        // a sign flip on e1 alone is orthogonal but not an automorphism
        let mut l = GTwoAuto::identity().matrix();
        l[0][0] = -1.0;
        assert!(matches!(
            GTwoAuto::new(l),
            Err(Error::NotAutomorphism { .. })
        ));
    }

    #[test]
    fn g2_fixes_e1_when_already_there() {
        let g = g2_map_to_e1(&e(1)).unwrap();
        assert!(g.map(&e(1)).max_abs_diff(&e(1)) < 1e-15);
    }

    #[test]
    fn g2_sends_e4_to_e1() {
        let g = g2_map_to_e1(&e(4)).unwrap();
        assert!(g.map(&e(4)).max_abs_diff(&e(1)) < 1e-12);
        let sq = g.map(&(e(4) * e(4)));
        assert!(sq.max_abs_diff(&(g.map(&e(4)) * g.map(&e(4)))) < 1e-12);
        assert!(sq.max_abs_diff(&Octonion::real(-1.0, C)) < 1e-12);
    }

    #[test]
    fn g2_diagonal_direction() {
        let u = (e(2) + e(6)).scale(std::f64::consts::FRAC_1_SQRT_2);
        let g = g2_map_to_e1(&u).unwrap();
        assert!(g.map(&u).max_abs_diff(&e(1)) < 1e-9);
        assert!(g.automorphism_deviation() < 1e-10);
    }

    #[test]
    fn g2_rejects_bad_inputs() {
        assert!(matches!(
            g2_map_to_e1(&(e(1) + Octonion::one(C))),
            Err(Error::NotImaginary { .. })
        ));
        assert!(matches!(
            g2_map_to_e1(&e(1).scale(2.0)),
            Err(Error::NotUnit { .. })
        ));
    }

    #[test]
    fn membership_of_identity_is_exact() {
        let r = check_f4_membership(&RotO3::identity().into(), 10, 1).unwrap();
        assert_eq!(r.max_deviation(), 0.0);
    }

    #[test]
    fn record_roundtrip_and_validation() {
        let mut rng = Sampler::new(2);
        let g: Generator = SpThree::new(rng.symplectic3()).unwrap().into();
        let json = serde_json::to_string(&g).unwrap();
        assert!(json.starts_with(r#"{"kind":"sp3","payload":["#));
        let back: Generator = serde_json::from_str(&json).unwrap();
        assert_eq!(back, g);
        let bad = r#"{"kind":"rot_o3","payload":[1,0,0,0,1,0,0,0,2]}"#;
        let rec: GeneratorRecord = serde_json::from_str(bad).unwrap();
        assert!(matches!(
            Generator::try_from(rec),
            Err(Error::NotOrthogonal { .. })
        ));
        assert!(serde_json::from_str::<Generator>(bad).is_err());
        let extra = r#"{"kind":"rot_o3","payload":[1,0,0,0,1,0,0,0,1],"x":0}"#;
        assert!(serde_json::from_str::<GeneratorRecord>(extra).is_err());
    }
}
