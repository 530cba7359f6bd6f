//! Rational functions nf/df in lowest terms with monic denominator.

use std::fmt;

use super::{Poly, PolyError};
use crate::exactnum::CycNum;

#[derive(Clone, PartialEq, Eq)]
pub struct RationalMap {
    nf: Poly,
    df: Poly,
}

impl RationalMap {
    /// Reduces nf/df to lowest terms and makes the denominator monic.
    pub fn new(nf: Poly, df: Poly) -> Result<RationalMap, PolyError> {
        if df.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let g = nf.gcd(&df);
        let (mut nf, mut df) = if g.is_constant() {
            (nf, df)
        } else {
            (nf.exact_div(&g).expect("gcd divides"), df.exact_div(&g).expect("gcd divides"))
        };
        let inv = df.lc().inv()?;
        nf = nf.scale(&inv);
        df = df.scale(&inv);
        Ok(RationalMap { nf, df })
    }

    pub fn polynomial(p: Poly) -> RationalMap {
        RationalMap { nf: p, df: Poly::one() }
    }

    /// x^n.
    pub fn power(n: usize) -> RationalMap {
        RationalMap::polynomial(Poly::monomial(CycNum::one(), n))
    }

    pub fn nf(&self) -> &Poly {
        &self.nf
    }

    pub fn df(&self) -> &Poly {
        &self.df
    }

    /// max(deg nf, deg df).
    pub fn degree(&self) -> usize {
        self.nf.deg().max(self.df.deg())
    }

    /// Value at x, or None at a pole.
    pub fn eval(&self, x: &CycNum) -> Option<CycNum> {
        let d = self.df.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(self.nf.eval(x) / d)
    }

    /// z ↦ (a·z + b)/(c·z + d) applied after this map.
    pub fn post_compose(&self, m: [&CycNum; 4]) -> Result<RationalMap, PolyError> {
        let num = &self.nf.scale(m[0]) + &self.df.scale(m[1]);
        let den = &self.nf.scale(m[2]) + &self.df.scale(m[3]);
        RationalMap::new(num, den)
    }

    /// This map evaluated at (a·x + b)/(c·x + d).
    pub fn pre_compose(&self, m: [&CycNum; 4]) -> Result<RationalMap, PolyError> {
        let n = self.degree();
        RationalMap::new(self.nf.moebius_form(n, m), self.df.moebius_form(n, m))
    }

    /// g(x^s) for a map g.
    pub fn inflate(&self, s: usize) -> RationalMap {
        RationalMap { nf: self.nf.inflate(s), df: self.df.inflate(s) }
    }

    pub fn is_rational(&self) -> bool {
        self.nf.is_rational() && self.df.is_rational()
    }

    pub fn conductor(&self) -> u32 {
        crate::exactnum::lcm(self.nf.conductor(), self.df.conductor())
    }

    /// Renders as `(nf)/(df)`, or just nf for polynomials.
    pub fn render(&self, var: &str) -> String {
        if self.df.is_one_poly() {
            self.nf.render(var)
        } else {
            format!("({})/({})", self.nf.render(var), self.df.render(var))
        }
    }
}

impl Poly {
    pub(crate) fn is_one_poly(&self) -> bool {
        self.degree() == Some(0) && self.lc().is_one()
    }
}

impl fmt::Display for RationalMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("x"))
    }
}

impl fmt::Debug for RationalMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalMap({})", self)
    }
}

/// Largest s with m = g(x^s); returns (s, g) with the reconstruction verified.
pub fn power_decompose(m: &RationalMap) -> (usize, RationalMap) {
    let s = m
        .nf
        .support()
        .into_iter()
        .chain(m.df.support())
        .fold(0usize, num_integer::gcd);
    if s <= 1 {
        return (1, m.clone());
    }
    let g = RationalMap { nf: m.nf.deflate(s), df: m.df.deflate(s) };
    if g.inflate(s) == *m {
        (s, g)
    } else {
        (1, m.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_cancels_and_makes_monic() {
        let nf = Poly::from_ints(&[-2, 0, 2]);
        let df = Poly::from_ints(&[-3, 3]);
        let m = RationalMap::new(nf, df).unwrap();
        assert_eq!(m.nf(), &Poly::from_ints(&[2, 2]).scale(&CycNum::from_frac(1, 3)));
        assert_eq!(m.df(), &Poly::one());
        assert!(RationalMap::new(Poly::one(), Poly::zero()).is_err());
    }

    #[test]
    fn power_decompositions() {
        let (s, g) = power_decompose(&RationalMap::power(7));
        assert_eq!((s, g), (7, RationalMap::power(1)));
        let m = RationalMap::polynomial(Poly::from_ints(&[0, 1, 0, 1]));
        assert_eq!(power_decompose(&m).0, 1);
        let dn = RationalMap::new(Poly::from_terms(&[(6, 1), (0, 1)]), Poly::from_terms(&[(3, 1)])).unwrap();
        let (s, g) = power_decompose(&dn);
        assert_eq!(s, 3);
        assert_eq!(g.inflate(3), dn);
    }

    #[test]
    fn pre_compose_with_inversion() {
        let m = RationalMap::power(3);
        let (zero, one) = (CycNum::zero(), CycNum::one());
        let inv = m.pre_compose([&zero, &one, &one, &zero]).unwrap();
        assert_eq!(inv, RationalMap::new(Poly::one(), Poly::from_terms(&[(3, 1)])).unwrap());
    }
}
