//! The exceptional Jordan algebra of 3×3 Hermitian octonion matrices.
//!
//! An element is stored through its six independent entries
//!
//! ```text
//!     | xi1      x3       conj(x2) |
//! X = | conj(x3) xi2      x1       |
//!     | x2       conj(x1) xi3      |
//! ```
//!
//! so Hermiticity holds by construction. The full matrix only appears
//! transiently inside [`jordan_product`].

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::octonion::{Algebra, Octonion};
use crate::quaternion::{QuatMatrix, Quaternion};

/// Hermiticity check after symmetrization, relative to the operands' scale.
pub const HERMITICITY_TOL: f64 = 1e-11;

pub type OctMatrix = [[Octonion; 3]; 3];

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "JordanRecord", into = "JordanRecord")]
pub struct JordanElement {
    algebra: Algebra,
    diag: [f64; 3],
    off: [Octonion; 3],
}

/// Wire form: `{"algebra", "diag", "x1", "x2", "x3"}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JordanRecord {
    algebra: Algebra,
    diag: [f64; 3],
    x1: [f64; 8],
    x2: [f64; 8],
    x3: [f64; 8],
}

impl TryFrom<JordanRecord> for JordanElement {
    type Error = Error;
    fn try_from(r: JordanRecord) -> Result<Self> {
        let all = r.diag.iter().chain(&r.x1).chain(&r.x2).chain(&r.x3);
        if all.into_iter().any(|v| !v.is_finite()) {
            return Err(Error::Malformed("non-finite entry".into()));
        }
        Ok(Self::from_coeffs(r.algebra, r.diag, [r.x1, r.x2, r.x3]))
    }
}

impl From<JordanElement> for JordanRecord {
    fn from(x: JordanElement) -> Self {
        JordanRecord {
            algebra: x.algebra,
            diag: x.diag,
            x1: x.off[0].c,
            x2: x.off[1].c,
            x3: x.off[2].c,
        }
    }
}

impl JordanElement {
    /// Build from diagonal `[xi1, xi2, xi3]` and off-diagonals `[x1, x2, x3]`.
    pub fn new(diag: [f64; 3], off: [Octonion; 3]) -> Result<Self> {
        let algebra = off[0].algebra;
        for o in &off[1..] {
            if o.algebra != algebra {
                return Err(Error::MismatchedAlgebra {
                    left: algebra,
                    right: o.algebra,
                });
            }
        }
        Ok(Self { algebra, diag, off })
    }

    pub fn from_coeffs(algebra: Algebra, diag: [f64; 3], off: [[f64; 8]; 3]) -> Self {
        Self {
            algebra,
            diag,
            off: off.map(|c| Octonion::new(c, algebra)),
        }
    }

    pub fn zero(algebra: Algebra) -> Self {
        Self::diagonal([0.0; 3], algebra)
    }

    /// The unit element `E`.
    pub fn unit(algebra: Algebra) -> Self {
        Self::diagonal([1.0; 3], algebra)
    }

    pub fn diagonal(diag: [f64; 3], algebra: Algebra) -> Self {
        Self {
            algebra,
            diag,
            off: [Octonion::zero(algebra); 3],
        }
    }

    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    pub fn diag(&self) -> [f64; 3] {
        self.diag
    }

    /// Off-diagonal entries `[x1, x2, x3]`.
    pub fn off(&self) -> [Octonion; 3] {
        self.off
    }

    pub fn x1(&self) -> Octonion {
        self.off[0]
    }

    pub fn x2(&self) -> Octonion {
        self.off[1]
    }

    pub fn x3(&self) -> Octonion {
        self.off[2]
    }

    pub fn with_diag(mut self, diag: [f64; 3]) -> Self {
        self.diag = diag;
        self
    }

    /// Replace off-diagonal entry `i` (0-based: 0 is `x1`).
    pub fn with_off(mut self, i: usize, x: Octonion) -> Self {
        assert_eq!(x.algebra, self.algebra);
        self.off[i] = x;
        self
    }

    pub fn trace(&self) -> f64 {
        self.diag.iter().sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a - b)
    }

    pub fn scale(&self, s: f64) -> Self {
        Self {
            algebra: self.algebra,
            diag: self.diag.map(|d| d * s),
            off: self.off.map(|o| o.scale(s)),
        }
    }

    fn zip(&self, other: &Self, f: impl Fn(f64, f64) -> f64) -> Self {
        debug_assert_eq!(self.algebra, other.algebra);
        let mut out = *self;
        for i in 0..3 {
            out.diag[i] = f(self.diag[i], other.diag[i]);
            for k in 0..8 {
                out.off[i].c[k] = f(self.off[i].c[k], other.off[i].c[k]);
            }
        }
        out
    }

    /// Euclidean norm of all coefficients of the full 3×3 matrix.
    pub fn frobenius_norm(&self) -> f64 {
        let d: f64 = self.diag.iter().map(|v| v * v).sum();
        let o: f64 = self.off.iter().map(|x| x.euclidean_norm2()).sum();
        (d + 2.0 * o).sqrt()
    }

    /// Largest Euclidean coefficient norm among the off-diagonal entries.
    pub fn max_off_diagonal(&self) -> f64 {
        self.off
            .iter()
            .map(|x| x.euclidean_norm())
            .fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let d = self
            .diag
            .iter()
            .zip(other.diag.iter())
            .fold(0.0_f64, |m, (a, b)| m.max((a - b).abs()));
        self.off
            .iter()
            .zip(other.off.iter())
            .fold(d, |m, (a, b)| m.max(a.max_abs_diff(b)))
    }

    /// The full Hermitian matrix.
    pub fn expand(&self) -> OctMatrix {
        let alg = self.algebra;
        let [x1, x2, x3] = self.off;
        let r = |v: f64| Octonion::real(v, alg);
        [
            [r(self.diag[0]), x3, x2.conj()],
            [x3.conj(), r(self.diag[1]), x1],
            [x2, x1.conj(), r(self.diag[2])],
        ]
    }

    /// Repack a matrix that must be Hermitian with real diagonal up to `tol`.
    pub fn from_matrix(m: &OctMatrix, tol: f64) -> Result<Self> {
        let mut deviation = 0.0_f64;
        for i in 0..3 {
            deviation = deviation.max(m[i][i].im().euclidean_norm());
            for j in 0..3 {
                deviation = deviation.max(m[i][j].max_abs_diff(&m[j][i].conj()));
            }
        }
        if !(deviation <= tol) {
            return Err(Error::HermiticityViolation { deviation });
        }
        Ok(Self {
            algebra: m[0][0].algebra,
            diag: [m[0][0].re(), m[1][1].re(), m[2][2].re()],
            off: [m[1][2], m[2][0], m[0][1]],
        })
    }

    fn check_same_algebra(&self, other: &Self) -> Result<()> {
        if self.algebra != other.algebra {
            return Err(Error::MismatchedAlgebra {
                left: self.algebra,
                right: other.algebra,
            });
        }
        Ok(())
    }
}

fn oct_matmul(a: &OctMatrix, b: &OctMatrix) -> OctMatrix {
    let alg = a[0][0].algebra;
    let mut out = [[Octonion::zero(alg); 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    out
}

/// `X ∘ Y = (XY + YX) / 2` computed on full matrices.
pub fn jordan_product(x: &JordanElement, y: &JordanElement) -> Result<JordanElement> {
    x.check_same_algebra(y)?;
    let (mx, my) = (x.expand(), y.expand());
    let xy = oct_matmul(&mx, &my);
    let yx = oct_matmul(&my, &mx);
    let mut sym = xy;
    for i in 0..3 {
        for j in 0..3 {
            sym[i][j] = (xy[i][j] + yx[i][j]).scale(0.5);
        }
    }
    let scale = (x.frobenius_norm() * y.frobenius_norm()).max(1.0);
    JordanElement::from_matrix(&sym, HERMITICITY_TOL * scale)
}

/// `(X, Y) = sum xi_i eta_i + 2 sum Re(x_i conj(y_i))`, equal to `tr(X ∘ Y)`.
pub fn inner_product(x: &JordanElement, y: &JordanElement) -> Result<f64> {
    x.check_same_algebra(y)?;
    let d: f64 = x.diag.iter().zip(y.diag.iter()).map(|(a, b)| a * b).sum();
    let o: f64 = x.off.iter().zip(y.off.iter()).map(|(a, b)| a.inner(b)).sum();
    Ok(d + 2.0 * o)
}

/// The inner product through its definition `tr(X ∘ Y)`.
pub fn inner_product_by_trace(x: &JordanElement, y: &JordanElement) -> Result<f64> {
    Ok(jordan_product(x, y)?.trace())
}

/// Freudenthal product
/// `X × Y = ½(2 X∘Y − tr(X) Y − tr(Y) X + (tr X tr Y − (X, Y)) E)`.
pub fn freudenthal_cross(x: &JordanElement, y: &JordanElement) -> Result<JordanElement> {
    let xy = jordan_product(x, y)?;
    let (tx, ty) = (x.trace(), y.trace());
    let coef = tx * ty - inner_product(x, y)?;
    let e = JordanElement::unit(x.algebra);
    Ok(xy
        .scale(2.0)
        .sub(&y.scale(tx))
        .sub(&x.scale(ty))
        .add(&e.scale(coef))
        .scale(0.5))
}

/// Quadratic invariant `tr(X × X)`.
pub fn sigma(x: &JordanElement) -> f64 {
    freudenthal_cross(x, x)
        .expect("same element has a single algebra")
        .trace()
}

/// Cubic invariant `(X × X, X) / 3`.
pub fn det(x: &JordanElement) -> f64 {
    let xx = freudenthal_cross(x, x).expect("same element has a single algebra");
    inner_product(&xx, x).expect("same element has a single algebra") / 3.0
}

/// The four scalars preserved by every automorphism.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Invariants {
    pub trace: f64,
    pub inner_square: f64,
    pub sigma: f64,
    pub det: f64,
}

impl Invariants {
    pub fn of(x: &JordanElement) -> Self {
        Self {
            trace: x.trace(),
            inner_square: inner_product(x, x).expect("same element has a single algebra"),
            sigma: sigma(x),
            det: det(x),
        }
    }

    pub fn as_array(&self) -> [f64; 4] {
        [self.trace, self.inner_square, self.sigma, self.det]
    }
}

/// An element of `J(3,H) ⊕ H^3`: a quaternion-Hermitian matrix `M`
/// (diagonal and entries `m1, m2, m3` in the same layout as
/// [`JordanElement`]) together with a row `a = (a1, a2, a3)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairElement {
    pub diag: [f64; 3],
    pub m: [Quaternion; 3],
    pub a: [Quaternion; 3],
}

impl PairElement {
    pub fn m_matrix(&self) -> QuatMatrix {
        let [m1, m2, m3] = self.m;
        let r = Quaternion::real;
        [
            [r(self.diag[0]), m3, m2.conj()],
            [m3.conj(), r(self.diag[1]), m1],
            [m2, m1.conj(), r(self.diag[2])],
        ]
    }

    /// Repack `M` from a matrix assumed Hermitian; the upper/lower halves are averaged.
    pub fn from_parts(m: &QuatMatrix, a: [Quaternion; 3]) -> Self {
        let avg = |p: Quaternion, q: Quaternion| (p + q.conj()).scale(0.5);
        Self {
            diag: [m[0][0].w, m[1][1].w, m[2][2].w],
            m: [avg(m[1][2], m[2][1]), avg(m[2][0], m[0][2]), avg(m[0][1], m[1][0])],
            a,
        }
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut d = 0.0_f64;
        for i in 0..3 {
            d = d.max((self.diag[i] - other.diag[i]).abs());
            d = d.max(self.m[i].max_abs_diff(other.m[i]));
            d = d.max(self.a[i].max_abs_diff(other.a[i]));
        }
        d
    }
}

/// Split every entry `x_i = m_i + a_i e4`.
pub fn to_pair(x: &JordanElement) -> Result<PairElement> {
    if x.algebra != Algebra::Compact {
        return Err(Error::SplitUnsupported);
    }
    let halves = x.off.map(|o| o.halves());
    Ok(PairElement {
        diag: x.diag,
        m: halves.map(|h| h.0),
        a: halves.map(|h| h.1),
    })
}

pub fn from_pair(p: &PairElement) -> JordanElement {
    let alg = Algebra::Compact;
    JordanElement {
        algebra: alg,
        diag: p.diag,
        off: [0, 1, 2].map(|i| Octonion::from_halves(p.m[i], p.a[i], alg)),
    }
}

fn qmat_add(a: &QuatMatrix, b: &QuatMatrix, sb: f64) -> QuatMatrix {
    let mut out = *a;
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] += b[i][j].scale(sb);
        }
    }
    out
}

fn qmat_scale(a: &QuatMatrix, s: f64) -> QuatMatrix {
    a.map(|row| row.map(|q| q.scale(s)))
}

fn qmat_trace(a: &QuatMatrix) -> f64 {
    a[0][0].w + a[1][1].w + a[2][2].w
}

/// Freudenthal product on quaternion-Hermitian matrices (same formula as over octonions).
fn quat_cross(m: &QuatMatrix, n: &QuatMatrix) -> QuatMatrix {
    use crate::quaternion::{qmat_identity, qmat_mul};
    let mn = qmat_mul(m, n);
    let nm = qmat_mul(n, m);
    let circ = qmat_scale(&qmat_add(&mn, &nm, 1.0), 0.5);
    let (tm, tn) = (qmat_trace(m), qmat_trace(n));
    let inner = qmat_trace(&circ);
    let mut out = qmat_scale(&circ, 2.0);
    out = qmat_add(&out, n, -tm);
    out = qmat_add(&out, m, -tn);
    out = qmat_add(&out, &qmat_identity(), tm * tn - inner);
    qmat_scale(&out, 0.5)
}

/// `(M + a) × (N + b) = (M × N − ½(a*b + b*a)) − ½(aN + bM)`,
/// where `a*b` is the outer product `conj(a_i) b_j` and `aN` is a row
/// vector times a matrix.
pub fn pair_cross(p: &PairElement, q: &PairElement) -> PairElement {
    let (m, n) = (p.m_matrix(), q.m_matrix());
    let (a, b) = (p.a, q.a);
    let mut out = quat_cross(&m, &n);
    for i in 0..3 {
        for j in 0..3 {
            let outer = a[i].conj() * b[j] + b[i].conj() * a[j];
            out[i][j] += outer.scale(-0.5);
        }
    }
    let mut row = [Quaternion::ZERO; 3];
    for (j, r) in row.iter_mut().enumerate() {
        for i in 0..3 {
            *r += a[i] * n[i][j] + b[i] * m[i][j];
        }
        *r = r.scale(-0.5);
    }
    PairElement::from_parts(&out, row)
}
