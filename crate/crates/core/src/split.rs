//! The split algebra and the inner-product obstruction to diagonalization.
//!
//! Every automorphism of the split Jordan algebra preserves `(X, X)`. A
//! diagonal element has `(X, X) = xi1² + xi2² + xi3² >= 0`, so any split
//! element with `(X, X) < 0` has no diagonal form in its orbit. A
//! nonnegative value decides nothing.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::jordan::{inner_product, JordanElement};
use crate::octonion::{Algebra, Octonion};

/// Values of `(X, X)` above `-CERTIFICATE_TOL` are never reported as obstructed.
pub const CERTIFICATE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Obstructed,
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ObstructionVerdict {
    pub inner_square: f64,
    pub verdict: Verdict,
}

/// Zero diagonal with `x1 = e4'`, i.e. entries `e4'` at (2,3) and `-e4'` at (3,2).
pub fn counterexample_x0() -> JordanElement {
    JordanElement::zero(Algebra::Split).with_off(0, Octonion::basis(4, Algebra::Split))
}

pub fn diagonalizability_obstruction(x: &JordanElement) -> Result<ObstructionVerdict> {
    if x.algebra() != Algebra::Split {
        return Err(Error::CompactUnsupported);
    }
    let inner_square = inner_product(x, x)?;
    let verdict = if inner_square < -CERTIFICATE_TOL {
        Verdict::Obstructed
    } else {
        Verdict::Inconclusive
    };
    Ok(ObstructionVerdict {
        inner_square,
        verdict,
    })
}
