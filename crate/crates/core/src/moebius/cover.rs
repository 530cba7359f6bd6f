//! Branch points and fibers of the quotient maps P¹ → P¹/Γ.

use std::fmt;

use super::{MoebiusError, ReducedGroup};
use crate::exactnum::CycNum;
use crate::polyalg::{discriminant_in_t, roots_in_field, squarefree_decomposition, Poly, RationalMap};

/// A point of the projective line over the cyclotomic field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProjPoint {
    Finite(CycNum),
    Infinity,
}

impl ProjPoint {
    pub fn finite(&self) -> Option<&CycNum> {
        match self {
            ProjPoint::Finite(c) => Some(c),
            ProjPoint::Infinity => None,
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, ProjPoint::Infinity)
    }

    /// Sort key: finite points by numeric value (real part, then imaginary), ∞ last.
    fn sort_key(&self) -> (u8, f64, f64) {
        match self {
            ProjPoint::Infinity => (1, 0.0, 0.0),
            ProjPoint::Finite(c) => {
                let z = c.approx(20).map(|a| a.to_complex64()).unwrap_or_default();
                (0, z.re, z.im)
            }
        }
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjPoint::Finite(c) => write!(f, "{c}"),
            ProjPoint::Infinity => f.write_str("infinity"),
        }
    }
}

/// The fiber over one point: squarefree polynomial of its finite points, the common
/// ramification index, and whether x = ∞ belongs to the fiber.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fiber {
    pub poly: Poly,
    pub index: usize,
    pub contains_infinity: bool,
}

impl Fiber {
    /// Number of distinct points in the fiber.
    pub fn size(&self) -> usize {
        self.poly.deg() + usize::from(self.contains_infinity)
    }
}

/// Quotient map together with its branch points and fibers.
#[derive(Clone, Debug)]
pub struct CoverData {
    pub group: ReducedGroup,
    pub n: Option<u32>,
    pub map: RationalMap,
    pub branch_points: Vec<ProjPoint>,
    pub fibers: Vec<Fiber>,
}

impl CoverData {
    /// Branching data as (ramification index, fiber size) per branch point.
    pub fn branching(&self) -> Vec<(usize, usize)> {
        self.fibers.iter().map(|f| (f.index, f.size())).collect()
    }

    pub fn fiber_over(&self, q: &ProjPoint) -> Option<&Fiber> {
        self.branch_points.iter().position(|p| p == q).map(|i| &self.fibers[i])
    }
}

/// Branch points of m: recognized roots of D(t), plus ∞ when the fiber over ∞ ramifies.
pub fn branch_points(m: &RationalMap, within: u32) -> Result<Vec<ProjPoint>, MoebiusError> {
    if m.degree() < 2 {
        return Err(MoebiusError::DegreeTooSmall);
    }
    let d = discriminant_in_t(m);
    let mut points: Vec<ProjPoint> = roots_in_field(&d, within)?.into_iter().map(ProjPoint::Finite).collect();
    if infinity_ramifies(m) {
        points.push(ProjPoint::Infinity);
    }
    points.sort_by(|a, b| a.sort_key().partial_cmp(&b.sort_key()).unwrap_or(std::cmp::Ordering::Equal));
    Ok(points)
}

/// Over t = ∞ the fiber is df as a form of degree deg(m): ramified iff it has a repeated root.
fn infinity_ramifies(m: &RationalMap) -> bool {
    let drop = m.degree() - m.df().deg();
    drop >= 2 || !m.df().gcd(&m.df().derivative()).is_constant()
}

/// Fiber of m over q with its uniform multiplicity.
pub fn fiber_poly(m: &RationalMap, q: &ProjPoint) -> Result<Fiber, MoebiusError> {
    let d = m.degree();
    let p = match q {
        ProjPoint::Finite(c) => m.nf() - &m.df().scale(c),
        ProjPoint::Infinity => m.df().clone(),
    };
    let at_infinity = d - p.deg();
    let sq = squarefree_decomposition(&p);
    let mut mults: Vec<usize> = sq.parts.iter().map(|(k, _)| *k).collect();
    if at_infinity > 0 {
        mults.push(at_infinity);
    }
    mults.dedup();
    match mults.as_slice() {
        [index] => Ok(Fiber { poly: sq.squarefree_part(), index: *index, contains_infinity: at_infinity > 0 }),
        _ => Err(MoebiusError::NonUniformFiber { point: q.to_string(), profile: sq.profile() }),
    }
}

/// The normalized generators of the fixed fields, as listed for the five families.
pub fn lemma2_map(name: ReducedGroup, n: Option<u32>) -> Result<RationalMap, MoebiusError> {
    let p = |terms: &[(usize, i64)]| Poly::from_terms(terms);
    let map = match name {
        ReducedGroup::Cyclic => {
            let n = n.ok_or(MoebiusError::MissingParameter)? as usize;
            RationalMap::power(n)
        }
        ReducedGroup::Dihedral => {
            let n = n.ok_or(MoebiusError::MissingParameter)? as usize;
            RationalMap::new(p(&[(2 * n, 1), (0, 1)]), p(&[(n, 1)]))?
        }
        ReducedGroup::A4 => {
            let num = p(&[(12, 1), (8, -33), (4, -33), (0, 1)]);
            let den = &p(&[(2, 1)]) * &p(&[(4, 1), (0, -1)]).pow(2);
            RationalMap::new(num, den)?
        }
        ReducedGroup::S4 => {
            let num = p(&[(8, 1), (4, 14), (0, 1)]).pow(3);
            let den = p(&[(5, 1), (1, -1)]).pow(4).scale(&CycNum::from_int(108));
            RationalMap::new(num, den)?
        }
        ReducedGroup::A5 => {
            let num = p(&[(20, -1), (15, 228), (10, -494), (5, -228), (0, -1)]).pow(3);
            let den = p(&[(11, 1), (6, 11), (1, -1)]).pow(5).scale(&CycNum::from_int(1728));
            RationalMap::new(num, den)?
        }
    };
    Ok(map)
}

/// The quotient map used for covers and equations. It is the Lemma-2 map, except for A5
/// where the factor 1728 is cleared so that the branch points are 0, 1728 and ∞.
pub fn quotient_map(name: ReducedGroup, n: Option<u32>) -> Result<RationalMap, MoebiusError> {
    let map = lemma2_map(name, n)?;
    if name == ReducedGroup::A5 {
        return Ok(map.post_compose([&CycNum::from_int(1728), &CycNum::zero(), &CycNum::zero(), &CycNum::one()])?);
    }
    Ok(map)
}

/// Quotient map, branch points, and fibers, validated against genus-0 Riemann–Hurwitz.
pub fn cover_data(name: ReducedGroup, n: Option<u32>) -> Result<CoverData, MoebiusError> {
    let map = quotient_map(name, n)?;
    let branch = branch_points(&map, name.working_conductor(n))?;
    let fibers = branch.iter().map(|q| fiber_poly(&map, q)).collect::<Result<Vec<_>, _>>()?;
    let degree = map.degree();
    let total: usize = fibers.iter().map(|f| f.size() * (f.index - 1)).sum();
    if total != 2 * degree - 2 {
        return Err(MoebiusError::Internal(format!(
            "Riemann–Hurwitz fails for {}: 2·{degree} − 2 ≠ {total}",
            name.display(n)
        )));
    }
    for f in &fibers {
        if f.index * f.size() != degree {
            return Err(MoebiusError::Internal(format!("fiber of size {} and index {} in degree {degree}", f.size(), f.index)));
        }
    }
    Ok(CoverData { group: name, n, map, branch_points: branch, fibers })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn finite(c: CycNum) -> ProjPoint {
        ProjPoint::Finite(c)
    }

    #[test]
    fn cyclic_branch_points() {
        let pts = branch_points(&RationalMap::power(5), 60).unwrap();
        assert_eq!(pts, vec![finite(CycNum::zero()), ProjPoint::Infinity]);
        let f = fiber_poly(&RationalMap::power(5), &finite(CycNum::zero())).unwrap();
        assert_eq!(f, Fiber { poly: Poly::x(), index: 5, contains_infinity: false });
    }

    #[test]
    fn a4_fibers() {
        let c = cover_data(ReducedGroup::A4, None).unwrap();
        let six_i_sqrt3 = CycNum::from_int(6) * CycNum::i() * CycNum::sqrt3();
        assert_eq!(c.branch_points.len(), 3);
        assert!(c.branch_points.contains(&finite(six_i_sqrt3.clone())));
        assert!(c.branch_points.contains(&finite(-&six_i_sqrt3)));
        let f = c.fiber_over(&finite(six_i_sqrt3)).unwrap();
        let quartic: Poly = "x^4 - 2*I*sqrt3*x^2 + 1".parse().unwrap();
        assert_eq!(f.poly, quartic);
        assert_eq!(f.index, 3);
        let inf = c.fiber_over(&ProjPoint::Infinity).unwrap();
        assert_eq!((inf.index, inf.size(), inf.contains_infinity), (2, 6, true));
    }

    #[test]
    fn s4_fiber_at_infinity() {
        let c = cover_data(ReducedGroup::S4, None).unwrap();
        assert_eq!(c.branch_points, vec![finite(CycNum::zero()), finite(CycNum::one()), ProjPoint::Infinity]);
        let inf = c.fiber_over(&ProjPoint::Infinity).unwrap();
        assert_eq!(inf.poly, Poly::from_terms(&[(5, 1), (1, -1)]));
        assert_eq!((inf.index, inf.size()), (4, 6));
    }

    #[test]
    fn a5_cover() {
        let c = cover_data(ReducedGroup::A5, None).unwrap();
        let pts = vec![finite(CycNum::zero()), finite(CycNum::from_int(1728)), ProjPoint::Infinity];
        assert_eq!(c.branch_points, pts);
        let f = c.fiber_over(&finite(CycNum::from_int(1728))).unwrap();
        let psi = Poly::from_terms(&[(30, 1), (25, 522), (20, -10005), (10, -10005), (5, -522), (0, 1)]);
        assert_eq!((f.poly.clone(), f.index), (psi, 2));
        assert_eq!(c.branching(), vec![(3, 20), (2, 30), (5, 12)]);
    }

    #[test]
    fn dihedral_branching() {
        for n in 2..=12 {
            let c = cover_data(ReducedGroup::Dihedral, Some(n)).unwrap();
            let pts = vec![finite(CycNum::from_int(-2)), finite(CycNum::from_int(2)), ProjPoint::Infinity];
            assert_eq!(c.branch_points, pts, "n = {n}");
            let n = n as usize;
            assert_eq!(c.branching(), vec![(2, n), (2, n), (n, 2)]);
        }
    }

    #[test]
    fn non_uniform_fiber_is_an_error() {
        let m = RationalMap::polynomial(Poly::from_ints(&[0, 0, 1, 1]));
        assert!(fiber_poly(&m, &finite(CycNum::zero())).is_err());
    }
}
