//! Enumeration of automorphism-group loci of hyperelliptic curves of a given genus.

mod count;
mod render;
mod rows;
mod table;

use thiserror::Error;

pub use count::{count_formulas, divisor_count, even_divisor_count, CountReport};
pub use render::markdown_table;
pub use rows::{
    admissible_delta, derived_signature, enumerate_loci, enumerate_loci_with, rh_verify, root_row, row_for, signature,
    LocusRow, Options, Signature, SignatureClass,
};
pub use table::{case, cases, dimension, reduced_branching, Branch, CaseSpec, Constraint, DeltaFormula, Ex, GroupParam};

use crate::grouptheory::GroupError;

/// Why a (case, n, g) triple does not give a locus.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Inadmissible {
    #[error("delta = {0} is not an integer")]
    DeltaNotIntegral(String),
    #[error("delta = {0} is negative")]
    DeltaNegative(String),
    #[error("constraint {0} fails")]
    Constraint(&'static str),
    #[error("n must be even for this case")]
    Parity,
    #[error("n must be at least 2")]
    SmallN,
    #[error("this case takes no parameter n")]
    UnexpectedN,
    #[error("this case needs a parameter n")]
    MissingN,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("genus must be at least 2, got {0}")]
    Genus(u32),
    #[error("no case {0}; cases are numbered 1 to 31")]
    UnknownCase(u32),
    #[error("case {case}, n = {n:?}, g = {g}: {reason}")]
    Inadmissible { case: u32, n: Option<u32>, g: u32, reason: Inadmissible },
    #[error("Riemann-Hurwitz fails for case {case} at g = {g}: {lhs} != {rhs}")]
    RiemannHurwitz { case: u32, g: u32, lhs: i64, rhs: i64 },
    #[error("signature mismatch for case {case}: printed {printed}, derived {derived}")]
    SignatureMismatch { case: u32, printed: String, derived: String },
    #[error("isomorphism test between {0} and {1} ran out of budget")]
    Undetermined(String, String),
    #[error(transparent)]
    Group(#[from] GroupError),
}
