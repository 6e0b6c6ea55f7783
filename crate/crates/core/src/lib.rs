//! Octonions, the exceptional Jordan algebra `J(3,O)` and its diagonalization
//! by explicit elements of the compact group F4.
//!
//! * [`octonion`] and [`quaternion`]: Cayley–Dickson arithmetic for the
//!   compact and split octonions.
//! * [`jordan`]: Hermitian 3×3 octonion matrices with the Jordan, inner and
//!   Freudenthal products, the cubic invariants and the `J(3,H) ⊕ H^3` pair model.
//! * [`generators`]: the four generator families of F4 and a constructive
//!   G2 element moving any imaginary unit onto `e1`.
//! * [`diagonalize`]: the five-step pipeline with a replayable transcript.
//! * [`split`]: the split algebra counterexample and its obstruction certificate.
//!
//! ```
//! use albert::diagonalize::{diagonalize, Tolerances};
//! use albert::octonion::Algebra;
//! use albert::random::Sampler;
//!
//! let x = Sampler::new(42).jordan(Algebra::Compact);
//! let transcript = diagonalize(&x, &Tolerances::default()).unwrap();
//! assert!(transcript.off_diag_residual <= 1e-9);
//! ```

pub mod commands;
pub mod diagonalize;
pub mod error;
pub mod generators;
pub mod jordan;
pub mod octonion;
pub mod quaternion;
pub mod random;
pub mod selftest;
pub mod split;

pub use error::{Error, Result};
