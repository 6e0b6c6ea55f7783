//! Octonions built by Cayley–Dickson doubling of the quaternions.
//!
//! An octonion is a pair of quaternions `x = a + b e4` and the product is
//!
//! ```text
//! (a + b e4)(c + d e4) = (ac + mu conj(d) b) + (d a + b conj(c)) e4
//! ```
//!
//! with `mu = -1` for the compact (division) algebra and `mu = +1` for the
//! split algebra. The basis is `{1, e1, e2, e3, e4, e5, e6, e7}` where
//! `e1, e2, e3` are the quaternion units and `e{4+k} = e_k e4`, so the
//! coefficient array is the quaternion `a` followed by the quaternion `b`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quaternion::Quaternion;

/// Default absolute threshold below which a norm counts as zero.
pub const DEFAULT_ZERO_TOL: f64 = 1e-10;

/// Which real form of the octonions an element lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algebra {
    /// Division algebra, `e4^2 = -1`.
    #[default]
    Compact,
    /// Split algebra, `e4'^2 = +1`.
    Split,
}

impl Algebra {
    /// The doubling sign, equal to `e4 * e4`.
    pub const fn mu(self) -> f64 {
        match self {
            Algebra::Compact => -1.0,
            Algebra::Split => 1.0,
        }
    }

    pub const fn as_str(self) -> &'static str {
        match self {
            Algebra::Compact => "compact",
            Algebra::Split => "split",
        }
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Octonion {
    pub algebra: Algebra,
    #[serde(rename = "coeffs")]
    pub c: [f64; 8],
}

impl Octonion {
    pub const fn new(c: [f64; 8], algebra: Algebra) -> Self {
        Self { algebra, c }
    }

    pub const fn zero(algebra: Algebra) -> Self {
        Self::new([0.0; 8], algebra)
    }

    pub const fn real(r: f64, algebra: Algebra) -> Self {
        Self::new([r, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0], algebra)
    }

    pub const fn one(algebra: Algebra) -> Self {
        Self::real(1.0, algebra)
    }

    /// The basis element `e_i` (`i = 0` is the unit).
    pub fn basis(i: usize, algebra: Algebra) -> Self {
        let mut c = [0.0; 8];
        c[i] = 1.0;
        Self::new(c, algebra)
    }

    /// Build `a + b e4`.
    pub fn from_halves(a: Quaternion, b: Quaternion, algebra: Algebra) -> Self {
        Self::new([a.w, a.x, a.y, a.z, b.w, b.x, b.y, b.z], algebra)
    }

    /// Split into `(a, b)` with `self = a + b e4`.
    pub fn halves(&self) -> (Quaternion, Quaternion) {
        let c = &self.c;
        (
            Quaternion::new(c[0], c[1], c[2], c[3]),
            Quaternion::new(c[4], c[5], c[6], c[7]),
        )
    }

    pub fn re(&self) -> f64 {
        self.c[0]
    }

    pub fn im(&self) -> Self {
        let mut c = self.c;
        c[0] = 0.0;
        Self::new(c, self.algebra)
    }

    pub fn conj(&self) -> Self {
        let mut c = self.c;
        for v in &mut c[1..] {
            *v = -*v;
        }
        Self::new(c, self.algebra)
    }

    /// The quadratic form `Re(x conj(x))`. Indefinite for the split algebra.
    pub fn norm2(&self) -> f64 {
        let (a, b) = self.halves();
        a.norm2() - self.algebra.mu() * b.norm2()
    }

    /// Sum of squared coefficients, whatever the algebra.
    pub fn euclidean_norm2(&self) -> f64 {
        self.c.iter().map(|v| v * v).sum()
    }

    pub fn euclidean_norm(&self) -> f64 {
        self.euclidean_norm2().sqrt()
    }

    /// Symmetric bilinear form associated with [`Octonion::norm2`], `Re(x conj(y))`.
    pub fn inner(&self, other: &Self) -> f64 {
        let mu = self.algebra.mu();
        let mut s = 0.0;
        for i in 0..4 {
            s += self.c[i] * other.c[i];
        }
        for i in 4..8 {
            s -= mu * self.c[i] * other.c[i];
        }
        s
    }

    pub fn scale(&self, s: f64) -> Self {
        let mut c = self.c;
        for v in &mut c {
            *v *= s;
        }
        Self::new(c, self.algebra)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.algebra != other.algebra {
            return Err(Error::MismatchedAlgebra {
                left: self.algebra,
                right: other.algebra,
            });
        }
        Ok(self.mul_raw(other))
    }

    fn mul_raw(&self, other: &Self) -> Self {
        let mu = self.algebra.mu();
        let (a, b) = self.halves();
        let (c, d) = other.halves();
        let first = a * c + (d.conj() * b).scale(mu);
        let second = d * a + b * c.conj();
        Self::from_halves(first, second, self.algebra)
    }

    pub fn inverse(&self) -> Result<Self> {
        self.inverse_with_tol(DEFAULT_ZERO_TOL)
    }

    pub fn inverse_with_tol(&self, zero_tol: f64) -> Result<Self> {
        let n = self.norm2();
        if n.abs() < zero_tol {
            return Err(Error::NullElement { norm2: n });
        }
        Ok(self.conj().scale(1.0 / n))
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.c
            .iter()
            .zip(other.c.iter())
            .fold(0.0_f64, |m, (a, b)| m.max((a - b).abs()))
    }

    pub fn is_real(&self, tol: f64) -> bool {
        self.im().euclidean_norm() <= tol
    }

    /// Whether the element lies in `span{1, e1}`, the complex numbers.
    pub fn is_complex(&self, tol: f64) -> bool {
        self.c[2..].iter().map(|v| v * v).sum::<f64>().sqrt() <= tol
    }
}

impl Add for Octonion {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        debug_assert_eq!(self.algebra, o.algebra);
        let mut c = self.c;
        for (v, w) in c.iter_mut().zip(o.c) {
            *v += w;
        }
        Self::new(c, self.algebra)
    }
}

impl AddAssign for Octonion {
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}

impl Sub for Octonion {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Neg for Octonion {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(-1.0)
    }
}

/// Panics when the operands come from different algebras; use
/// [`Octonion::checked_mul`] for a fallible product.
impl Mul for Octonion {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        assert_eq!(
            self.algebra, o.algebra,
            "octonion product across algebras"
        );
        self.mul_raw(&o)
    }
}

impl Mul<f64> for Octonion {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        self.scale(s)
    }
}

impl fmt::Display for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.c[0])?;
        for (i, v) in self.c.iter().enumerate().skip(1) {
            write!(f, " + {v}e{i}")?;
        }
        Ok(())
    }
}

/// Product of two basis elements, `e_i e_j = sign * e_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BasisProduct {
    pub sign: i8,
    pub index: usize,
}

/// The 8×8 basis multiplication table derived from the doubling formula.
pub fn basis_table(algebra: Algebra) -> [[BasisProduct; 8]; 8] {
    let mut table = [[BasisProduct { sign: 0, index: 0 }; 8]; 8];
    for (i, row) in table.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            let p = Octonion::basis(i, algebra) * Octonion::basis(j, algebra);
            let (index, value) = p
                .c
                .iter()
                .enumerate()
                .find(|(_, v)| **v != 0.0)
                .map(|(k, v)| (k, *v))
                .expect("basis product is never zero");
            *cell = BasisProduct {
                sign: value.signum() as i8,
                index,
            };
        }
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;

    const C: Algebra = Algebra::Compact;
    const S: Algebra = Algebra::Split;

    fn e(i: usize, alg: Algebra) -> Octonion {
        Octonion::basis(i, alg)
    }

    #[test]
    fn e4_squares_to_mu() {
        assert_eq!(e(4, C) * e(4, C), Octonion::real(-1.0, C));
        assert_eq!(e(4, S) * e(4, S), Octonion::real(1.0, S));
    }

    #[test]
    fn upper_basis_is_quaternion_times_e4() {
        for alg in [C, S] {
            for k in 1..4 {
                assert_eq!(e(k, alg) * e(4, alg), e(4 + k, alg));
            }
        }
    }

    #[test]
    fn alternativity_instance() {
        let lhs = e(2, C) * (e(2, C) * e(5, C));
        let rhs = (e(2, C) * e(2, C)) * e(5, C);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn non_associativity_witness() {
        // (e1 e4) e2 = e5 e2 = -e7 while e1 (e4 e2) = e1 (-e6) = e7.
        let left = (e(1, C) * e(4, C)) * e(2, C);
        let right = e(1, C) * (e(4, C) * e(2, C));
        assert_eq!(left, -e(7, C));
        assert_eq!(right, e(7, C));
    }

    #[test]
    fn conj_re_im() {
        let x = Octonion::one(C) + e(4, C);
        assert_eq!(x.conj(), Octonion::one(C) - e(4, C));
        assert_eq!(Octonion::real(3.0, C).im(), Octonion::zero(C));
        let y = Octonion::new([1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0], C);
        assert_eq!(Octonion::real(y.re(), C) + y.im(), y);
    }

    #[test]
    fn norm_of_e4() {
        assert_eq!(e(4, C).norm2(), 1.0);
        assert_eq!(e(4, S).norm2(), -1.0);
        // agrees with Re(x conj x) from the table
        assert_eq!((e(4, C) * e(4, C).conj()).re(), 1.0);
        assert_eq!((e(4, S) * e(4, S).conj()).re(), -1.0);
    }

    #[test]
    fn inverses() {
        assert_eq!(e(1, C).inverse().unwrap(), -e(1, C));
        assert_eq!(
            Octonion::real(2.0, C).inverse().unwrap(),
            Octonion::real(0.5, C)
        );
        let null = Octonion::one(S) + e(4, S);
        assert_eq!((null * null.conj()).re(), 0.0);
        assert!(matches!(null.inverse(), Err(Error::NullElement { .. })));
        assert!(matches!(
            Octonion::zero(C).inverse(),
            Err(Error::NullElement { .. })
        ));
    }

    #[test]
    fn mismatched_algebras_rejected() {
        assert!(matches!(
            e(1, C).checked_mul(&e(1, S)),
            Err(Error::MismatchedAlgebra { .. })
        ));
    }

    #[test]
    fn table_matches_product() {
        let t = basis_table(C);
        assert_eq!(t[4][4], BasisProduct { sign: -1, index: 0 });
        assert_eq!(t[1][2], BasisProduct { sign: 1, index: 3 });
        assert_eq!(basis_table(S)[4][4], BasisProduct { sign: 1, index: 0 });
    }

    #[test]
    fn serde_shape() {
        let x = e(3, S);
        let json = serde_json::to_string(&x).unwrap();
        assert_eq!(
            json,
            r#"{"algebra":"split","coeffs":[0.0,0.0,0.0,1.0,0.0,0.0,0.0,0.0]}"#
        );
        let back: Octonion = serde_json::from_str(&json).unwrap();
        assert_eq!(back, x);
    }
}
