//! Finite subgroups of PGL₂ over cyclotomic fields, their fixed fields and quotient maps.

mod cover;
mod elt;
mod fixed;
mod group;

use thiserror::Error;

use crate::exactnum::ExactError;
use crate::polyalg::PolyError;

pub use cover::{branch_points, cover_data, fiber_poly, lemma2_map, quotient_map, CoverData, Fiber, ProjPoint};
pub use elt::MoebiusElt;
pub use fixed::{fixed_field_generator, is_moebius_equivalent, verify_invariant};
pub use group::{standard_embedding, MoebiusGroup, ReducedGroup, FIXED_CAP, PARAMETRIC_CAP};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoebiusError {
    #[error("singular matrix")]
    Singular,
    #[error("unknown reduced group '{0}' (expected Z, D, A4, S4 or A5)")]
    UnknownGroup(String),
    #[error("the cyclic and dihedral families need a parameter n")]
    MissingParameter,
    #[error("parameter n = {0} is out of range (n ≥ 2)")]
    InvalidParameter(u32),
    #[error("group closure exceeded {cap} elements; bad generator set")]
    ClosureCap { cap: usize },
    #[error("generated group has order {got}, expected {expected}")]
    WrongOrder { expected: usize, got: usize },
    #[error("map degree must be at least 2")]
    DegreeTooSmall,
    #[error("fiber over {point} has non-uniform multiplicities {profile:?}")]
    NonUniformFiber { point: String, profile: Vec<(usize, usize)> },
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}
