//! Univariate polynomials and rational functions over cyclotomic fields.

mod modular;
mod poly;
mod ratmap;
mod resultant;
mod roots;
mod squarefree;

use thiserror::Error;

use crate::exactnum::ExactError;

pub use poly::Poly;
pub use ratmap::{power_decompose, RationalMap};
pub use resultant::{discriminant, discriminant_in_t, discriminant_in_t_exact, discriminant_in_t_modular, resultant};
pub use roots::{numeric_roots, roots_in_field};
pub use squarefree::{is_squarefree, squarefree_decomposition, squarefree_part, SquarefreeDecomposition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("root not in working field (approximately {})", approx.join(", "))]
    RootNotInField { approx: Vec<String> },
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
}
