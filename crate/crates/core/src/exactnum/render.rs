//! Text rendering of constants: integers, `a/b`, `I`, `sqrt3`, `sqrt5`, and `z<m>^<k>`.

use std::fmt;
use std::sync::OnceLock;

use num_traits::{One, Signed, Zero};

use super::{solve_rational, CycNum, Rat};

/// One signed summand of a rendered constant; `atom` is None for the rational part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub negative: bool,
    pub coeff: Rat,
    pub atom: Option<String>,
}

impl Term {
    /// The term without its sign, e.g. `3/2*sqrt5` or `I`.
    pub fn abs_text(&self) -> String {
        match &self.atom {
            None => render_rat(&self.coeff),
            Some(a) if self.coeff.is_one() => a.clone(),
            Some(a) => format!("{}*{}", render_rat(&self.coeff), a),
        }
    }
}

pub fn render_rat(q: &Rat) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Basis of Q(i, √3, √5) inside Q(ζ_60) with the names used in text output.
fn named_basis() -> &'static [(Option<&'static str>, CycNum)] {
    static BASIS: OnceLock<Vec<(Option<&'static str>, CycNum)>> = OnceLock::new();
    BASIS.get_or_init(|| {
        let i = CycNum::i();
        let s3 = CycNum::sqrt3();
        let s5 = CycNum::sqrt5();
        let s15 = &s3 * &s5;
        vec![
            (None, CycNum::one()),
            (Some("I"), i.clone()),
            (Some("sqrt3"), s3.clone()),
            (Some("I*sqrt3"), &i * &s3),
            (Some("sqrt5"), s5.clone()),
            (Some("I*sqrt5"), &i * &s5),
            (Some("sqrt3*sqrt5"), s15.clone()),
            (Some("I*sqrt3*sqrt5"), &i * &s15),
        ]
        .into_iter()
        .map(|(n, v)| (n, v.embed(60).expect("basis lives in conductor 60")))
        .collect()
    })
}

impl CycNum {
    /// Signed summands in canonical order; the zero element yields a single `0` term.
    pub fn terms(&self) -> Vec<Term> {
        let min = self.minimal();
        let mut out = Vec::new();
        if let Some(q) = min.as_rat() {
            out.push(Term { negative: q.is_negative(), coeff: q.abs(), atom: None });
            return out;
        }
        let m = min.conductor();
        if 60 % m == 0 {
            let target = min.embed(60).expect("divides 60");
            let columns: Vec<Vec<Rat>> = named_basis().iter().map(|(_, b)| b.coeffs().to_vec()).collect();
            if let Some(sol) = solve_rational(&columns, target.coeffs()) {
                for ((name, _), c) in named_basis().iter().zip(sol) {
                    if !c.is_zero() {
                        out.push(Term { negative: c.is_negative(), coeff: c.abs(), atom: name.map(str::to_string) });
                    }
                }
                return out;
            }
        }
        for (k, c) in min.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let atom = match k {
                0 => None,
                1 => Some(format!("z{m}")),
                _ => Some(format!("z{m}^{k}")),
            };
            out.push(Term { negative: c.is_negative(), coeff: c.abs(), atom });
        }
        out
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        for (idx, t) in terms.iter().enumerate() {
            match (idx, t.negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            write!(f, "{}", t.abs_text())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_named_constants() {
        assert_eq!(CycNum::from_frac(-3, 2).to_string(), "-3/2");
        assert_eq!(CycNum::zero().to_string(), "0");
        assert_eq!(CycNum::i().to_string(), "I");
        let v = CycNum::from_int(6) * CycNum::i() * CycNum::sqrt3();
        assert_eq!(v.to_string(), "6*I*sqrt3");
        assert_eq!(CycNum::omega().to_string(), "-1/2 + 1/2*sqrt5");
        assert_eq!((CycNum::one() - CycNum::i()).to_string(), "1 - I");
    }

    #[test]
    fn renders_general_roots_of_unity() {
        assert_eq!(CycNum::zeta(5, 1).to_string(), "z5");
        assert_eq!(CycNum::zeta(7, 3).to_string(), "z7^3");
        assert_eq!(CycNum::zeta(3, 1).to_string(), "-1/2 + 1/2*I*sqrt3");
    }
}
