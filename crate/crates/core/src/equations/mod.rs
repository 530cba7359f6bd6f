//! Parametric equations y² = f(x) for each locus, and exact checks of their invariance.

mod expand;
mod family;
mod verify;

use thiserror::Error;

pub use expand::{expand, Expanded, EXPAND_CAP};
pub use family::{build_family, generic_fiber_poly, specialize, specialize_ints, CurveFamily, FixedFactor, ParamFactor};
pub use verify::{form_multiplier, verify_family, verify_specialization_direct, VerifyReport};

use crate::classify::ClassifyError;
use crate::moebius::MoebiusError;
use crate::polyalg::PolyError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EquationError {
    #[error("expected {expected} parameter values, got {got}")]
    ParameterCount { expected: usize, got: usize },
    #[error("specialization is not squarefree")]
    Degenerate,
    #[error("no squarefree specialization found in {attempts} attempts")]
    NoGoodSpecialization { attempts: usize },
    #[error("trial {trial}: f is not invariant under generator {generator}")]
    NotInvariant { trial: usize, generator: String },
    #[error("expansion exceeds {cap} monomials")]
    TooLarge { cap: usize },
    #[error("internal error: {0}")]
    Internal(String),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    Moebius(#[from] MoebiusError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}
