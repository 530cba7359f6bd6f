//! Squarefree decomposition (Yun's algorithm).

use super::{modular, Poly};

/// Monic factors with multiplicities: input = c · Π factor^mult, factors pairwise coprime and squarefree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeDecomposition {
    pub parts: Vec<(usize, Poly)>,
}

impl SquarefreeDecomposition {
    /// Product of the distinct monic factors.
    pub fn squarefree_part(&self) -> Poly {
        self.parts.iter().map(|(_, p)| p.clone()).product()
    }

    /// (multiplicity, degree) pairs, highest multiplicity first.
    pub fn profile(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self.parts.iter().map(|(m, p)| (*m, p.deg())).collect();
        out.sort_by(|a, b| b.cmp(a));
        out
    }

    /// The common multiplicity when every root has the same one.
    pub fn uniform_multiplicity(&self) -> Option<usize> {
        match self.parts.as_slice() {
            [(m, _)] => Some(*m),
            _ => None,
        }
    }

    /// Π factor^mult (monic).
    pub fn reconstruct(&self) -> Poly {
        self.parts.iter().map(|(m, p)| p.pow(*m as u32)).product()
    }
}

pub fn squarefree_decomposition(f: &Poly) -> SquarefreeDecomposition {
    let mut parts = Vec::new();
    if f.is_constant() {
        return SquarefreeDecomposition { parts };
    }
    let f = f.monic();
    let fp = f.derivative();
    let a0 = f.gcd(&fp);
    let mut b = f.exact_div(&a0).expect("gcd divides");
    let mut c = fp.exact_div(&a0).expect("gcd divides");
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while !b.is_constant() {
        let a = b.gcd(&d);
        if !a.is_constant() {
            parts.push((i, a.clone()));
        }
        b = b.exact_div(&a).expect("gcd divides");
        c = d.exact_div(&a).expect("gcd divides");
        d = &c - &b.derivative();
        i += 1;
    }
    SquarefreeDecomposition { parts }
}

/// True iff f is nonzero and has no repeated root. A rational f is first reduced modulo
/// a few large primes: a nonzero discriminant there proves squarefreeness over Q.
pub fn is_squarefree(f: &Poly) -> bool {
    if f.is_zero() {
        return false;
    }
    if f.is_constant() {
        return true;
    }
    if let Some((_, ints)) = f.to_integer_poly() {
        let d = ints.len() - 1;
        for p in modular::primes().take(3) {
            let a: Vec<u64> = ints.iter().map(|c| modular::reduce(c, p)).collect();
            if a[d] == 0 {
                continue;
            }
            let da: Vec<u64> = (1..=d).map(|k| modular::mul_mod(k as u64, a[k], p)).collect();
            if modular::resultant(&a, &da, p) != 0 {
                return true;
            }
        }
    }
    f.gcd(&f.derivative()).is_constant()
}

/// The monic squarefree part of f.
pub fn squarefree_part(f: &Poly) -> Poly {
    squarefree_decomposition(f).squarefree_part()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squarefree_predicate() {
        assert!(is_squarefree(&Poly::from_ints(&[-1, 0, 0, 1])));
        assert!(!is_squarefree(&Poly::from_ints(&[1, -2, 1])));
        assert!(!is_squarefree(&Poly::zero()));
        let i = crate::exactnum::CycNum::i();
        let twisted = Poly::new(vec![i.clone() * i.clone(), i.clone() * crate::exactnum::CycNum::from_int(2), Poly::one().coeff(0)]);
        assert!(!is_squarefree(&twisted));
    }

    #[test]
    fn profile_of_small_product() {
        let f = &Poly::from_ints(&[-1, 1]).pow(2) * &Poly::from_ints(&[1, 1]);
        let sq = squarefree_decomposition(&f);
        assert_eq!(sq.profile(), vec![(2, 1), (1, 1)]);
        assert_eq!(sq.reconstruct(), f);
        assert_eq!(sq.squarefree_part(), Poly::from_ints(&[-1, 0, 1]));
    }

    #[test]
    fn cube_of_quartic() {
        let q = Poly::from_terms(&[(4, 1), (2, 3), (0, 1)]);
        let f = q.pow(3).scale(&crate::exactnum::CycNum::from_int(-5));
        let sq = squarefree_decomposition(&f);
        assert_eq!(sq.profile(), vec![(3, 4)]);
        assert_eq!(sq.uniform_multiplicity(), Some(3));
    }
}
