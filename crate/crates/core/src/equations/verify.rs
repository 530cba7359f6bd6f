use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{specialize, CurveFamily, EquationError};
use crate::exactnum::CycNum;
use crate::moebius::{standard_embedding, MoebiusElt};
use crate::polyalg::Poly;

/// Parameter values are drawn uniformly from this range.
const PARAM_RANGE: std::ops::RangeInclusive<i64> = -1000..=1000;
const MAX_REDRAWS: usize = 50;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub trials: usize,
    pub generators: usize,
    /// Draws rejected as non-squarefree.
    pub redraws: usize,
}

/// c with form = c·p, if it exists and p is nonzero.
pub fn form_multiplier(form: &Poly, p: &Poly) -> Option<CycNum> {
    if p.is_zero() || form.degree() != p.degree() {
        return None;
    }
    let c = form.lc().checked_div(&p.lc()).ok()?;
    (p.scale(&c) == *form).then_some(c)
}

/// Direct check that f(A(x))·(cx + d)^{2g+2} is a constant multiple of f(x) for each A.
pub fn verify_specialization_direct(fam: &CurveFamily, f: &Poly, gens: &[MoebiusElt]) -> bool {
    let n = 2 * fam.row.genus as usize + 2;
    gens.iter().all(|a| form_multiplier(&f.moebius_form(n, a.entries()), f).is_some())
}

fn generators(fam: &CurveFamily) -> Result<Vec<MoebiusElt>, EquationError> {
    if fam.row.is_root() {
        return Ok(vec![]);
    }
    Ok(standard_embedding(fam.row.reduced, fam.row.reduced_n)?.generators().to_vec())
}

struct Transforms {
    fixed: Vec<Poly>,
    // For each moving factor: transformed base and slopes.
    moving: Vec<(Poly, Vec<Poly>)>,
}

/// Checks invariance of random integer specializations under the reduced group's generators.
///
/// The binary form of f is the product of the forms of its factors, and each factor is
/// affine-linear in the parameters, so f(A(x))·(cx + d)^{2g+2} is assembled from transforms
/// of the fixed factors and of each moving factor's base and slopes, computed once per
/// generator. Every factor's transform must be a multiple of that factor's specialization.
pub fn verify_family(fam: &CurveFamily, trials: usize, seed: u64) -> Result<VerifyReport, EquationError> {
    let gens = generators(fam)?;
    let d = fam.moving_form_degree;
    let transforms: Vec<Transforms> = gens
        .iter()
        .map(|a| {
            let m = a.entries();
            let fixed = fam.fixed.iter().map(|f| f.poly.moebius_form(f.form_degree, m)).collect();
            let mut moving: Vec<(Poly, Vec<Poly>)> = Vec::new();
            for (i, mf) in fam.moving.iter().enumerate() {
                let reuse = fam.moving[..i].iter().position(|o| o.base == mf.base && same_slopes(o, mf));
                match reuse {
                    Some(k) => moving.push(moving[k].clone()),
                    None => moving.push((
                        mf.base.moebius_form(d, m),
                        mf.slopes.iter().map(|(_, p)| p.moebius_form(d, m)).collect(),
                    )),
                }
            }
            Transforms { fixed, moving }
        })
        .collect();
    for (t, a) in transforms.iter().zip(&gens) {
        for (f, tf) in fam.fixed.iter().zip(&t.fixed) {
            if form_multiplier(tf, &f.poly).is_none() {
                return Err(EquationError::NotInvariant { trial: 0, generator: a.to_string() });
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut redraws = 0;
    for trial in 0..trials {
        let mut attempts = 0;
        let values = loop {
            let values: Vec<CycNum> = (0..fam.params).map(|_| CycNum::from_int(rng.gen_range(PARAM_RANGE))).collect();
            match specialize(fam, &values) {
                Ok(_) => break values,
                Err(EquationError::Degenerate) if attempts < MAX_REDRAWS => {
                    attempts += 1;
                    redraws += 1;
                }
                Err(EquationError::Degenerate) => return Err(EquationError::NoGoodSpecialization { attempts }),
                Err(e) => return Err(e),
            }
        };
        for (t, a) in transforms.iter().zip(&gens) {
            for (mf, (tb, ts)) in fam.moving.iter().zip(&t.moving) {
                let mut form = tb.clone();
                for ((j, _), tp) in mf.slopes.iter().zip(ts) {
                    form = &form + &tp.scale(&values[*j]);
                }
                if form_multiplier(&form, &mf.specialize(&values)).is_none() {
                    return Err(EquationError::NotInvariant { trial, generator: a.to_string() });
                }
            }
        }
    }
    Ok(VerifyReport { trials, generators: gens.len(), redraws })
}

fn same_slopes(a: &super::ParamFactor, b: &super::ParamFactor) -> bool {
    a.slopes.len() == b.slopes.len() && a.slopes.iter().zip(&b.slopes).all(|((_, p), (_, q))| p == q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{row_for, Options};
    use crate::equations::{build_family, specialize_ints};

    fn family(case: u32, n: Option<u32>, g: u32) -> CurveFamily {
        build_family(&row_for(case, n, g, &Options::default()).unwrap()).unwrap()
    }

    #[test]
    fn factorwise_agrees_with_direct() {
        for (case, n, g, vals) in [(7, Some(2), 3, vec![5]), (11, None, 7, vec![-3]), (20, None, 5, vec![]), (1, Some(3), 5, vec![2, 9, 4])] {
            let fam = family(case, n, g);
            verify_family(&fam, 3, 7).unwrap();
            let f = specialize_ints(&fam, &vals).unwrap();
            let gens = generators(&fam).unwrap();
            assert!(verify_specialization_direct(&fam, &f, &gens), "case {case}");
        }
    }

    #[test]
    fn wrong_factor_is_caught() {
        let mut fam = family(6, Some(3), 6);
        fam.fixed[0].poly = Poly::from_ints(&[1, 1]);
        assert!(matches!(verify_family(&fam, 1, 0), Err(EquationError::NotInvariant { .. })));
    }
}
