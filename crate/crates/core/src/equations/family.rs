use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::EquationError;
use crate::classify::{case, Branch, LocusRow};
use crate::exactnum::{CycNum, Rat};
use crate::moebius::{fiber_poly, quotient_map, ReducedGroup};
use crate::polyalg::{is_squarefree, Poly};

/// base + Σ l_j · slope_j, linear in the family parameters l_1, l_2, ….
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamFactor {
    pub base: Poly,
    /// (parameter index, coefficient polynomial), 0-based indices.
    pub slopes: Vec<(usize, Poly)>,
}

impl ParamFactor {
    pub fn constant(p: Poly) -> ParamFactor {
        ParamFactor { base: p, slopes: vec![] }
    }

    pub fn degree(&self) -> usize {
        self.slopes.iter().map(|(_, p)| p.deg()).fold(self.base.deg(), usize::max)
    }

    pub fn specialize(&self, values: &[CycNum]) -> Poly {
        let mut acc = self.base.clone();
        for (j, p) in &self.slopes {
            acc = &acc + &p.scale(&values[*j]);
        }
        acc
    }

    /// Moves every parameter index by `offset`.
    pub fn shifted(&self, offset: usize) -> ParamFactor {
        ParamFactor { base: self.base.clone(), slopes: self.slopes.iter().map(|(j, p)| (j + offset, p.clone())).collect() }
    }

    /// Text form in x with parameters named l1, l2, ….
    pub fn render(&self) -> String {
        let mut out = String::new();
        for k in (0..=self.degree()).rev() {
            let mut parts: Vec<(bool, String)> = Vec::new();
            let c = self.base.coeff(k);
            if !c.is_zero() {
                parts.extend(c.terms().into_iter().map(|t| (t.negative, t.abs_text())));
            }
            for (j, p) in &self.slopes {
                let c = p.coeff(k);
                if c.is_zero() {
                    continue;
                }
                for t in c.terms() {
                    let body = t.abs_text();
                    let text = if body == "1" { format!("l{}", j + 1) } else { format!("{body}*l{}", j + 1) };
                    parts.push((t.negative, text));
                }
            }
            if parts.is_empty() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            };
            let (negative, body) = if parts.len() == 1 {
                parts.pop().unwrap()
            } else {
                let mut inner = String::new();
                for (i, (neg, text)) in parts.iter().enumerate() {
                    match (i, neg) {
                        (0, true) => inner.push('-'),
                        (0, false) => {}
                        (_, true) => inner.push_str(" - "),
                        (_, false) => inner.push_str(" + "),
                    }
                    inner.push_str(text);
                }
                (false, format!("({inner})"))
            };
            let text = match (body.as_str(), mono.is_empty()) {
                (_, true) => body,
                ("1", false) => mono,
                (_, false) => format!("{body}*{mono}"),
            };
            match (out.is_empty(), negative) {
                (true, true) => out.push('-'),
                (true, false) => {}
                (false, true) => out.push_str(" - "),
                (false, false) => out.push_str(" + "),
            }
            out.push_str(&text);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// The squarefree polynomial of a branch fiber made of Weierstrass points. As a binary
/// form it has degree `form_degree`, one more than `poly` when the fiber contains ∞.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedFactor {
    pub branch: Branch,
    pub poly: Poly,
    pub form_degree: usize,
}

impl FixedFactor {
    pub fn contains_infinity(&self) -> bool {
        self.form_degree > self.poly.deg()
    }
}

/// f = Π fixed · Π moving, with `params` free parameters.
#[derive(Clone, Debug)]
pub struct CurveFamily {
    pub row: LocusRow,
    pub fixed: Vec<FixedFactor>,
    pub moving: Vec<ParamFactor>,
    /// Degree of each moving factor as a binary form.
    pub moving_form_degree: usize,
    pub params: usize,
}

impl CurveFamily {
    pub fn contains_infinity(&self) -> bool {
        self.fixed.iter().any(FixedFactor::contains_infinity)
    }

    pub fn degree(&self) -> usize {
        self.fixed.iter().map(|f| f.poly.deg()).sum::<usize>() + self.moving.iter().map(ParamFactor::degree).sum::<usize>()
    }

    /// `y^2 = …` with fixed factors first, each factor in parentheses.
    pub fn render(&self) -> String {
        let mut factors: Vec<String> = Vec::new();
        for f in &self.fixed {
            if !f.poly.is_constant() {
                factors.push(f.poly.render("x"));
            }
        }
        factors.extend(self.moving.iter().map(ParamFactor::render));
        format!("y^2 = {}", join_factors(&factors))
    }

    /// For cyclic reduced groups: the form with one factor x^n − l_i per moving fiber,
    /// before the scaling x ↦ cx is used to normalise the constant term.
    pub fn render_roots_form(&self) -> Option<String> {
        if self.row.reduced != ReducedGroup::Cyclic || self.row.is_root() {
            return None;
        }
        let n = self.row.reduced_n? as usize;
        let mut factors: Vec<String> = Vec::new();
        for f in &self.fixed {
            if !f.poly.is_constant() {
                factors.push(f.poly.render("x"));
            }
        }
        for i in 1..=self.params + 1 {
            factors.push(if n == 1 { format!("x - l{i}") } else { format!("x^{n} - l{i}") });
        }
        Some(format!("y^2 = {}", join_factors(&factors)))
    }
}

fn join_factors(factors: &[String]) -> String {
    match factors {
        [] => "1".to_string(),
        [one] => one.clone(),
        many => many.iter().map(|f| if f.contains(' ') { format!("({f})") } else { f.clone() }).collect::<Vec<_>>().join("*"),
    }
}

fn rational_denominator(p: &Poly) -> Option<BigInt> {
    let mut den = BigInt::one();
    for c in p.coeffs() {
        let q: &Rat = c.as_rat()?;
        den = den.lcm(q.denom());
    }
    Some(den)
}

/// The moving fiber nf − λ·df of the quotient map, scaled to integer coefficients
/// when the map is rational. λ is parameter 0.
pub fn generic_fiber_poly(reduced: ReducedGroup, n: Option<u32>) -> Result<ParamFactor, EquationError> {
    let m = quotient_map(reduced, n)?;
    let (nf, df) = (m.nf().clone(), m.df().clone());
    let scale = match (rational_denominator(&nf), rational_denominator(&df)) {
        (Some(a), Some(b)) => CycNum::from_bigint(a.lcm(&b)),
        _ => CycNum::one(),
    };
    Ok(ParamFactor { base: nf.scale(&scale), slopes: vec![(0, df.scale(&-scale))] })
}

/// x^{nt} + l_1 x^{n(t−1)} + … + l_{t−1} x^n + 1 with t − 1 parameters.
fn normalized_cyclic_factor(n: usize, t: usize) -> ParamFactor {
    let base = Poly::from_terms(&[(n * t, 1), (0, 1)]);
    let slopes = (1..t).map(|j| (j - 1, Poly::from_terms(&[(n * (t - j), 1)]))).collect();
    ParamFactor { base, slopes }
}

/// The family of curves y² = f(x) on a locus.
///
/// Fibers of the reduced cover listed as Weierstrass for the case become fixed factors.
/// Each remaining parameter is a moving fiber nf − l_i·df. For cyclic reduced groups the
/// δ + 1 moving fibers x^n − λ_i are multiplied out and scaled to a monic polynomial in
/// x^n with constant term 1. The Z₂ locus is x(x − 1)(x^{2g−1} + l_1 x^{2g−2} + … + l_{2g−1}).
pub fn build_family(row: &LocusRow) -> Result<CurveFamily, EquationError> {
    let g = row.genus as usize;
    let mut fixed = Vec::new();
    let moving: Vec<ParamFactor>;
    let moving_form_degree;
    if row.is_root() {
        fixed.push(FixedFactor { branch: Branch::Zero, poly: Poly::x(), form_degree: 1 });
        fixed.push(FixedFactor { branch: Branch::One, poly: Poly::from_ints(&[-1, 1]), form_degree: 1 });
        fixed.push(FixedFactor { branch: Branch::Infinity, poly: Poly::one(), form_degree: 1 });
        let d = 2 * g - 1;
        let base = Poly::from_terms(&[(d, 1)]);
        let slopes = (1..=d).map(|j| (j - 1, Poly::from_terms(&[(d - j, 1)]))).collect();
        moving = vec![ParamFactor { base, slopes }];
        moving_form_degree = d;
    } else {
        let spec = case(row.case).ok_or_else(|| EquationError::Internal(format!("no case {}", row.case)))?;
        let map = quotient_map(row.reduced, row.reduced_n)?;
        for b in &spec.doubled {
            let fiber = fiber_poly(&map, &b.point())?;
            let form_degree = fiber.poly.deg() + usize::from(fiber.contains_infinity);
            fixed.push(FixedFactor { branch: *b, poly: fiber.poly, form_degree });
        }
        if row.reduced == ReducedGroup::Cyclic {
            let n = row.reduced_n.unwrap_or(1) as usize;
            let t = row.delta + 1;
            moving = vec![normalized_cyclic_factor(n, t)];
            moving_form_degree = n * t;
        } else {
            let template = generic_fiber_poly(row.reduced, row.reduced_n)?;
            moving_form_degree = row.reduced.order(row.reduced_n.unwrap_or(1));
            moving = (0..row.delta).map(|j| template.shifted(j)).collect();
        }
    }
    let fam = CurveFamily { row: row.clone(), fixed, moving, moving_form_degree, params: row.delta };
    let total = fam.degree() + usize::from(fam.contains_infinity());
    if total != 2 * g + 2 {
        return Err(EquationError::Internal(format!(
            "case {}: degree {} with infinity {} does not match genus {}",
            row.case,
            fam.degree(),
            fam.contains_infinity(),
            g
        )));
    }
    Ok(fam)
}

/// f for the given parameter values; fails unless f is squarefree of the family's degree.
pub fn specialize(fam: &CurveFamily, values: &[CycNum]) -> Result<Poly, EquationError> {
    if values.len() != fam.params {
        return Err(EquationError::ParameterCount { expected: fam.params, got: values.len() });
    }
    let mut f = Poly::one();
    for p in &fam.fixed {
        f = &f * &p.poly;
    }
    for m in &fam.moving {
        f = &f * &m.specialize(values);
    }
    if f.deg() != fam.degree() || !is_squarefree(&f) {
        return Err(EquationError::Degenerate);
    }
    Ok(f)
}

pub fn specialize_ints(fam: &CurveFamily, values: &[i64]) -> Result<Poly, EquationError> {
    let values: Vec<CycNum> = values.iter().map(|&v| CycNum::from_int(v)).collect();
    specialize(fam, &values)
}
