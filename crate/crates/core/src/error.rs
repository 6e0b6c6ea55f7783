use thiserror::Error;

use crate::octonion::Algebra;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("operands belong to different algebras ({left} vs {right})")]
    MismatchedAlgebra { left: Algebra, right: Algebra },

    #[error("element has vanishing norm ({norm2:e}) and is not invertible")]
    NullElement { norm2: f64 },

    #[error("symmetrized product is not Hermitian (deviation {deviation:e})")]
    HermiticityViolation { deviation: f64 },

    #[error("operation is only defined over the compact octonions; use the split-case tools")]
    SplitUnsupported,

    #[error("operation is only defined over the split octonions")]
    CompactUnsupported,

    #[error("expected a unit-norm octonion, got norm {norm2}")]
    NotUnit { norm2: f64 },

    #[error("expected a purely imaginary octonion, real part is {real}")]
    NotImaginary { real: f64 },

    #[error("matrix is not orthogonal (deviation {deviation:e})")]
    NotOrthogonal { deviation: f64 },

    #[error("quaternion matrix is not symplectic, A*A != E (deviation {deviation:e})")]
    NotSymplectic { deviation: f64 },

    #[error("linear map is not an octonion automorphism (deviation {deviation:e})")]
    NotAutomorphism { deviation: f64 },

    #[error("x1 entry is not real (imaginary norm {imag:e})")]
    X1NotReal { imag: f64 },

    #[error("element is not in J(3,C): {reason}")]
    NotComplex { reason: String },

    #[error("Jacobi sweeps did not converge after {sweeps} sweeps (off-diagonal {off:e})")]
    NoConvergence { sweeps: usize, off: f64 },

    #[error("invalid tolerance configuration: {0}")]
    InvalidTolerance(String),

    #[error("malformed payload: {0}")]
    Malformed(String),
}
