//! Fixed fields of Möbius groups and equivalence of rational maps under post-composition.

use super::{MoebiusElt, MoebiusError, MoebiusGroup};
use crate::exactnum::{kernel, CycNum};
use crate::polyalg::{Poly, RationalMap};

/// First non-constant elementary symmetric function of the images A(x), A ∈ H.
///
/// Π_A (T − A(x)) = Π_A (L_A·T − N_A) / Π_A L_A with A(x) = N_A/L_A, so the coefficient of
/// T^(|H|−k) is c_k/c_0 where c_k are the top coefficients of Π (L_A·T − N_A). Only the
/// first K of them are tracked; K grows until a non-constant ratio appears.
pub fn fixed_field_generator(h: &MoebiusGroup) -> Result<RationalMap, MoebiusError> {
    let order = h.order();
    let mut depth = 2usize.min(order);
    loop {
        let coeffs = top_coefficients(h, depth);
        for (k, ck) in coeffs.iter().enumerate().skip(1) {
            let sign = if k % 2 == 1 { -CycNum::one() } else { CycNum::one() };
            let ek = RationalMap::new(ck.scale(&sign), coeffs[0].clone())?;
            if ek.degree() > 0 {
                if ek.degree() != order {
                    return Err(MoebiusError::Internal(format!(
                        "symmetric function e_{k} has degree {} instead of {order}",
                        ek.degree()
                    )));
                }
                return Ok(ek);
            }
        }
        if depth == order {
            return Err(MoebiusError::Internal("all symmetric functions are constant".into()));
        }
        depth = (2 * depth).min(order);
    }
}

/// c_0..c_depth of Π_A (L_A·T − N_A), counted from the top power of T.
fn top_coefficients(h: &MoebiusGroup, depth: usize) -> Vec<Poly> {
    let mut c = vec![Poly::one()];
    c.resize(depth + 1, Poly::zero());
    for a in h.elements() {
        let [ea, eb, ec, ed] = a.entries();
        let num = Poly::new(vec![eb.clone(), ea.clone()]);
        let den = Poly::new(vec![ed.clone(), ec.clone()]);
        for k in (0..=depth).rev() {
            let mut next = &c[k] * &den;
            if k > 0 {
                next = &next - &(&c[k - 1] * &num);
            }
            c[k] = next;
        }
    }
    c
}

/// True iff m(A(x)) = m(x) for every A in H; checking the generators suffices.
pub fn verify_invariant(m: &RationalMap, h: &MoebiusGroup) -> bool {
    let d = m.degree();
    h.generators().iter().all(|a| {
        let e = a.entries();
        let nf_a = m.nf().moebius_form(d, e);
        let df_a = m.df().moebius_form(d, e);
        &nf_a * m.df() == &df_a * m.nf()
    })
}

/// Some M with M ∘ m1 = m2, found from the kernel of the linear system
/// a·nf1·df2 + b·df1·df2 − c·nf1·nf2 − d·df1·nf2 = 0.
pub fn is_moebius_equivalent(m1: &RationalMap, m2: &RationalMap) -> Option<MoebiusElt> {
    if m1.degree() != m2.degree() {
        return None;
    }
    let cols = [
        m1.nf() * m2.df(),
        m1.df() * m2.df(),
        -(m1.nf() * m2.nf()),
        -(m1.df() * m2.nf()),
    ];
    let len = cols.iter().map(|p| p.coeffs().len()).max().unwrap_or(0);
    let rows: Vec<Vec<CycNum>> = (0..len).map(|k| cols.iter().map(|p| p.coeff(k)).collect()).collect();
    kernel(rows, 4).into_iter().find_map(|v| {
        let [a, b, c, d] = [&v[0], &v[1], &v[2], &v[3]];
        MoebiusElt::new(a.clone(), b.clone(), c.clone(), d.clone()).ok()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moebius::{lemma2_map, standard_embedding, ReducedGroup};

    #[test]
    fn cyclic_generator_is_power() {
        let h = standard_embedding(ReducedGroup::Cyclic, Some(4)).unwrap();
        let m = fixed_field_generator(&h).unwrap();
        assert!(is_moebius_equivalent(&m, &RationalMap::power(4)).is_some());
        assert!(verify_invariant(&m, &h));
    }

    #[test]
    fn inversion_relates_power_and_reciprocal() {
        let m1 = RationalMap::power(3);
        let m2 = RationalMap::new(Poly::one(), Poly::from_terms(&[(3, 1)])).unwrap();
        let a = is_moebius_equivalent(&m1, &m2).unwrap();
        assert_eq!(a, MoebiusElt::from_ints(0, 1, 1, 0).unwrap());
        assert!(is_moebius_equivalent(&RationalMap::power(2), &RationalMap::power(3)).is_none());
    }

    #[test]
    fn odd_function_is_not_invariant() {
        let z2 = standard_embedding(ReducedGroup::Cyclic, Some(2)).unwrap();
        assert!(!verify_invariant(&RationalMap::power(1), &z2));
    }

    #[test]
    fn a4_generator_matches_lemma() {
        let h = standard_embedding(ReducedGroup::A4, None).unwrap();
        let m = fixed_field_generator(&h).unwrap();
        assert_eq!(m.degree(), 12);
        assert!(verify_invariant(&m, &h));
        assert!(is_moebius_equivalent(&m, &lemma2_map(ReducedGroup::A4, None).unwrap()).is_some());
    }
}
