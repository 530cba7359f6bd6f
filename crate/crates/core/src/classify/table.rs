//! The 31 rows of the classification table as data.

use num_traits::One;


use crate::exactnum::{rat, Rat};
use crate::grouptheory::Family;
use crate::moebius::{ProjPoint, ReducedGroup};
use crate::exactnum::CycNum;

/// Quantities in a signature entry that depend on the parameter n.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ex {
    N,
    TwoN,
    K(usize),
}

impl Ex {
    pub fn eval(self, n: usize) -> usize {
        match self {
            Ex::N => n,
            Ex::TwoN => 2 * n,
            Ex::K(k) => k,
        }
    }
}

/// Branch points of the reduced covers, by their coordinate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Branch {
    Zero,
    One,
    Two,
    MinusTwo,
    /// 6i√3
    PlusA4,
    /// −6i√3
    MinusA4,
    J1728,
    Infinity,
}

impl Branch {
    pub fn point(self) -> ProjPoint {
        let six_i_sqrt3 = || CycNum::from_int(6) * CycNum::i() * CycNum::sqrt3();
        match self {
            Branch::Zero => ProjPoint::Finite(CycNum::zero()),
            Branch::One => ProjPoint::Finite(CycNum::one()),
            Branch::Two => ProjPoint::Finite(CycNum::from_int(2)),
            Branch::MinusTwo => ProjPoint::Finite(CycNum::from_int(-2)),
            Branch::PlusA4 => ProjPoint::Finite(six_i_sqrt3()),
            Branch::MinusA4 => ProjPoint::Finite(-six_i_sqrt3()),
            Branch::J1728 => ProjPoint::Finite(CycNum::from_int(1728)),
            Branch::Infinity => ProjPoint::Infinity,
        }
    }
}

/// (branch point, ramification index, fiber size) of the reduced cover P¹ → P¹/Γ.
pub fn reduced_branching(reduced: ReducedGroup, n: usize) -> Vec<(Branch, usize, usize)> {
    use Branch::*;
    match reduced {
        ReducedGroup::Cyclic => vec![(Zero, n, 1), (Infinity, n, 1)],
        ReducedGroup::Dihedral => vec![(MinusTwo, 2, n), (Two, 2, n), (Infinity, n, 2)],
        ReducedGroup::A4 => vec![(MinusA4, 3, 4), (PlusA4, 3, 4), (Infinity, 2, 6)],
        ReducedGroup::S4 => vec![(Zero, 3, 8), (One, 2, 12), (Infinity, 4, 6)],
        ReducedGroup::A5 => vec![(Zero, 3, 20), (J1728, 2, 30), (Infinity, 5, 12)],
    }
}

/// δ = (a·g + b)/(d or n) + offset.
#[derive(Clone, Copy, Debug)]
pub struct DeltaFormula {
    pub a: i64,
    pub b: i64,
    pub over_n: bool,
    pub d: i64,
    /// Offset as a fraction p/q.
    pub offset: (i64, i64),
}

impl DeltaFormula {
    pub fn eval(&self, g: u32, n: Option<u32>) -> Option<Rat> {
        let den = if self.over_n { i64::from(n?) } else { self.d };
        Some(rat(self.a * i64::from(g) + self.b, den) + rat(self.offset.0, self.offset.1))
    }

    /// Text form, e.g. `(2g+2)/n - 1`.
    pub fn render(&self) -> String {
        let num = match (self.a, self.b) {
            (1, 0) => "g".to_string(),
            (a, 0) => format!("{a}g"),
            (1, b) if b > 0 => format!("(g+{b})"),
            (1, b) => format!("(g-{})", -b),
            (a, b) if b > 0 => format!("({a}g+{b})"),
            (a, b) => format!("({a}g-{})", -b),
        };
        let den = if self.over_n { "n".to_string() } else { self.d.to_string() };
        match self.offset {
            (0, _) => format!("{num}/{den}"),
            (p, 1) if p < 0 => format!("{num}/{den} - {}", -p),
            (p, q) if p < 0 => format!("{num}/{den} - {}/{q}", -p),
            (p, q) => format!("{num}/{den} + {p}/{q}"),
        }
    }
}

/// Extra admissibility conditions printed next to some rows.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Constraint {
    None,
    NLessGPlus1,
    NLessG,
    GNot2,
    DeltaNonZero,
}

impl Constraint {
    pub fn describe(self) -> &'static str {
        match self {
            Constraint::None => "",
            Constraint::NLessGPlus1 => "n < g+1",
            Constraint::NLessG => "n < g",
            Constraint::GNot2 => "g != 2",
            Constraint::DeltaNonZero => "delta != 0",
        }
    }
}

/// How the full group's parameter depends on n.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupParam {
    Fixed,
    N,
    TwoN,
}

#[derive(Clone, Debug)]
pub struct CaseSpec {
    pub id: u32,
    pub reduced: ReducedGroup,
    pub family: Family,
    pub param: GroupParam,
    pub delta: DeltaFormula,
    pub prefix: Vec<(Ex, Ex)>,
    pub tail: (Ex, Ex),
    pub constraint: Constraint,
    /// Subject to the rule that n is even.
    pub even_n: bool,
    /// Branch points whose fibers consist of Weierstrass points.
    pub doubled: Vec<Branch>,
}

impl CaseSpec {
    pub fn group_param(&self, n: Option<u32>) -> Option<u32> {
        match self.param {
            GroupParam::Fixed => None,
            GroupParam::N => n,
            GroupParam::TwoN => n.map(|n| 2 * n),
        }
    }

    pub fn group_order(&self, n: Option<u32>) -> usize {
        2 * self.reduced.order(n.unwrap_or(1))
    }
}

fn df(a: i64, b: i64, over_n: bool, d: i64, offset: (i64, i64)) -> DeltaFormula {
    DeltaFormula { a, b, over_n, d, offset }
}

/// The classification table, rows 1 to 31.
pub fn cases() -> Vec<CaseSpec> {
    use Branch::*;
    use Ex::{TwoN, K, N};
    use Family as F;
    use ReducedGroup as R;
    let none = Constraint::None;
    let z_tail = (K(2), N);
    let d_tail = (K(2), TwoN);
    let row = |id, reduced, family, param, delta, prefix: &[(Ex, Ex)], tail, constraint, even_n, doubled: &[Branch]| CaseSpec {
        id,
        reduced,
        family,
        param,
        delta,
        prefix: prefix.to_vec(),
        tail,
        constraint,
        even_n,
        doubled: doubled.to_vec(),
    };
    let fixed = GroupParam::Fixed;
    let a4 = |b| df(1, b, false, 6, (0, 1));
    let s4 = |b| df(1, b, false, 12, (0, 1));
    let a5 = |b| df(1, b, false, 30, (0, 1));
    let a4t = (K(2), K(12));
    let s4t = (K(2), K(24));
    let a5t = (K(2), K(60));
    vec![
        row(1, R::Cyclic, F::Z2xZ, GroupParam::N, df(2, 2, true, 0, (-1, 1)), &[(N, K(2)), (N, K(2))], z_tail, Constraint::NLessGPlus1, false, &[]),
        row(2, R::Cyclic, F::Cyclic, GroupParam::TwoN, df(2, 1, true, 0, (-1, 1)), &[(N, K(2)), (TwoN, K(1))], z_tail, none, false, &[Infinity]),
        row(3, R::Cyclic, F::Cyclic, GroupParam::TwoN, df(2, 0, true, 0, (-1, 1)), &[(TwoN, K(1)), (TwoN, K(1))], z_tail, Constraint::NLessG, false, &[Zero, Infinity]),
        row(4, R::Dihedral, F::Z2xD, GroupParam::N, df(1, 1, true, 0, (0, 1)), &[(N, K(4))], d_tail, none, false, &[]),
        row(5, R::Dihedral, F::V, GroupParam::N, df(1, 1, true, 0, (-1, 2)), &[(N, K(4)), (K(4), N)], d_tail, none, true, &[Two]),
        row(6, R::Dihedral, F::Dihedral, GroupParam::TwoN, df(1, 0, true, 0, (0, 1)), &[(TwoN, K(2))], d_tail, none, false, &[Infinity]),
        row(7, R::Dihedral, F::H, GroupParam::N, df(1, 1, true, 0, (-1, 1)), &[(K(4), N), (K(4), N), (N, K(4))], d_tail, Constraint::NLessGPlus1, true, &[Two, MinusTwo]),
        row(8, R::Dihedral, F::U, GroupParam::N, df(1, 0, true, 0, (-1, 2)), &[(K(4), N), (TwoN, K(2))], d_tail, Constraint::GNot2, true, &[Two, Infinity]),
        row(9, R::Dihedral, F::G, GroupParam::N, df(1, 0, true, 0, (-1, 1)), &[(K(4), N), (K(4), N), (TwoN, K(2))], d_tail, Constraint::NLessG, true, &[Two, MinusTwo, Infinity]),
        row(10, R::A4, F::Z2xA4, fixed, a4(1), &[(K(3), K(8)), (K(3), K(8))], a4t, none, false, &[]),
        row(11, R::A4, F::Z2xA4, fixed, a4(-1), &[(K(3), K(8)), (K(6), K(4))], a4t, none, false, &[MinusA4]),
        row(12, R::A4, F::Z2xA4, fixed, a4(-3), &[(K(6), K(4)), (K(6), K(4))], a4t, Constraint::DeltaNonZero, false, &[MinusA4, PlusA4]),
        row(13, R::A4, F::SL23, fixed, a4(-2), &[(K(4), K(6)), (K(3), K(8)), (K(3), K(8))], a4t, Constraint::DeltaNonZero, false, &[Infinity]),
        row(14, R::A4, F::SL23, fixed, a4(-4), &[(K(4), K(6)), (K(3), K(8)), (K(6), K(4))], a4t, none, false, &[Infinity, MinusA4]),
        row(15, R::A4, F::SL23, fixed, a4(-6), &[(K(4), K(6)), (K(6), K(4)), (K(6), K(4))], a4t, Constraint::DeltaNonZero, false, &[Infinity, MinusA4, PlusA4]),
        row(16, R::S4, F::Z2xS4, fixed, s4(1), &[(K(3), K(16)), (K(4), K(12))], s4t, none, false, &[]),
        row(17, R::S4, F::Z2xS4, fixed, s4(-3), &[(K(6), K(8)), (K(4), K(12))], s4t, none, false, &[Zero]),
        row(18, R::S4, F::GL23, fixed, s4(-2), &[(K(3), K(16)), (K(8), K(6))], s4t, none, false, &[Infinity]),
        row(19, R::S4, F::GL23, fixed, s4(-6), &[(K(6), K(8)), (K(8), K(6))], s4t, none, false, &[Zero, Infinity]),
        row(20, R::S4, F::W2, fixed, s4(-5), &[(K(4), K(12)), (K(4), K(12)), (K(3), K(16))], s4t, none, false, &[One]),
        row(21, R::S4, F::W2, fixed, s4(-9), &[(K(4), K(12)), (K(4), K(12)), (K(6), K(8))], s4t, none, false, &[One, Zero]),
        row(22, R::S4, F::W3, fixed, s4(-8), &[(K(4), K(12)), (K(3), K(16)), (K(8), K(6))], s4t, none, false, &[One, Infinity]),
        row(23, R::S4, F::W3, fixed, s4(-12), &[(K(4), K(12)), (K(6), K(8)), (K(8), K(6))], s4t, none, false, &[One, Zero, Infinity]),
        row(24, R::A5, F::Z2xA5, fixed, a5(1), &[(K(3), K(40)), (K(5), K(24))], a5t, none, false, &[]),
        row(25, R::A5, F::Z2xA5, fixed, a5(-5), &[(K(3), K(40)), (K(10), K(12))], a5t, none, false, &[Infinity]),
        row(26, R::A5, F::Z2xA5, fixed, a5(-15), &[(K(6), K(20)), (K(10), K(12))], a5t, none, false, &[Zero, Infinity]),
        row(27, R::A5, F::Z2xA5, fixed, a5(-9), &[(K(6), K(20)), (K(5), K(24))], a5t, none, false, &[Zero]),
        row(28, R::A5, F::SL25, fixed, a5(-14), &[(K(4), K(30)), (K(3), K(40)), (K(5), K(24))], a5t, none, false, &[J1728]),
        row(29, R::A5, F::SL25, fixed, a5(-20), &[(K(4), K(30)), (K(3), K(40)), (K(10), K(12))], a5t, none, false, &[J1728, Infinity]),
        row(30, R::A5, F::SL25, fixed, a5(-24), &[(K(4), K(30)), (K(6), K(20)), (K(5), K(24))], a5t, none, false, &[J1728, Zero]),
        row(31, R::A5, F::SL25, fixed, a5(-30), &[(K(4), K(30)), (K(6), K(20)), (K(10), K(12))], a5t, none, false, &[J1728, Zero, Infinity]),
    ]
}

/// Looks up one row by id.
pub fn case(id: u32) -> Option<CaseSpec> {
    cases().into_iter().find(|c| c.id == id)
}

/// δ as an exact rational, or None when n is required but missing.
pub fn dimension(id: u32, n: Option<u32>, g: u32) -> Option<Rat> {
    case(id)?.delta.eval(g, n)
}

pub(crate) fn as_nonnegative_int(q: &Rat) -> Option<usize> {
    if !q.denom().is_one() {
        return None;
    }
    let v: i64 = q.numer().try_into().ok()?;
    usize::try_from(v).ok()
}
