//! Concrete finite groups: permutation groups, coset enumeration, the classification
//! families, and isomorphism/embedding search.

mod families;
mod iso;
mod perm;
mod present;

use thiserror::Error;

pub use families::{construct, presentation, printed_presentation, Family};
pub use iso::{find_monomorphism, find_monomorphism_budget, is_isomorphic, is_isomorphic_budget, Search, DEFAULT_BUDGET};
pub use perm::{FiniteGroup, Fingerprint, Perm, ELEMENT_CAP};
pub use present::{coset_enumerate, Letter, Presentation, COSET_CAP};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("presentation may be infinite or cap too small (more than {cap} cosets)")]
    CosetCap { cap: usize },
    #[error("group closure exceeded {cap} elements")]
    ElementCap { cap: usize },
    #[error("not a permutation: {0:?}")]
    NotAPermutation(Vec<u32>),
    #[error("generators act on different numbers of points")]
    DegreeMismatch,
    #[error("unknown group family '{0}'")]
    UnknownFamily(String),
    #[error("family {0} needs a parameter n")]
    MissingParameter(Family),
    #[error("invalid parameter n = {n} for family {family}")]
    InvalidParameter { family: Family, n: u32 },
    #[error("family {0} has no presentation")]
    NoPresentation(Family),
    #[error("{} has order {got}, expected {expected}", family.display(*n))]
    UnexpectedOrder { family: Family, n: Option<u32>, expected: usize, got: usize },
    #[error("cannot parse relator: {0}")]
    Parse(String),
    #[error("internal error: {0}")]
    Internal(String),
}
