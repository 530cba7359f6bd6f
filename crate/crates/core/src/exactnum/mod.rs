//! Exact rational and cyclotomic-field arithmetic.

mod approx;
mod cyclo;
mod field;
mod linalg;
mod render;

use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

pub use approx::{ComplexApprox, MAX_DIGITS};
pub use cyclo::CycNum;
pub use linalg::kernel;
pub use field::{canonical_conductor, cyclotomic_polynomial, euler_phi, field, lcm, CycField};
pub use render::{render_rat, Term};

/// Arbitrary-precision rational numbers, always in lowest terms.
pub type Rat = BigRational;

/// Conductor used for every constant attached to the fixed reduced groups.
pub const WORKING_CONDUCTOR: u32 = 60;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot embed conductor {from} into conductor {to}")]
    BadEmbedding { from: u32, to: u32 },
    #[error("requested {requested} digits, cap is {cap}")]
    PrecisionCap { requested: u32, cap: u32 },
    #[error("parse error: {0}")]
    Parse(String),
}

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(num.into(), den.into())
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// Solves Σ x_j·columns[j] = rhs exactly over Q; None if inconsistent.
pub(crate) fn solve_rational(columns: &[Vec<Rat>], rhs: &[Rat]) -> Option<Vec<Rat>> {
    let rows = rhs.len();
    let cols = columns.len();
    let mut m: Vec<Vec<Rat>> = (0..rows)
        .map(|r| {
            let mut row: Vec<Rat> = columns.iter().map(|c| c[r].clone()).collect();
            row.push(rhs[r].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for v in m[r].iter_mut() {
            *v *= &inv;
        }
        let pivot = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row[c..=cols].iter_mut().zip(&pivot[c..=cols]) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if m[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut x = vec![Rat::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = m[i][cols].clone();
    }
    Some(x)
}

impl std::str::FromStr for CycNum {
    type Err = ExactError;

    /// Parses the constant grammar, e.g. `-1/2 + 1/2*sqrt5` or `3*z7^2`.
    fn from_str(s: &str) -> Result<CycNum, ExactError> {
        crate::text::parse_constant(s).map_err(ExactError::Parse)
    }
}
