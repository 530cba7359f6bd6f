//! Projectively normalized 2×2 matrices acting by x ↦ (ax + b)/(cx + d).

use std::fmt;

use super::MoebiusError;
use crate::exactnum::{CycNum, Rat};
use crate::polyalg::{PolyError, RationalMap};

#[derive(Clone, PartialEq, Eq)]
pub struct MoebiusElt {
    a: CycNum,
    b: CycNum,
    c: CycNum,
    d: CycNum,
}

impl MoebiusElt {
    /// Normalizes so that the first nonzero entry (row-major) is 1.
    pub fn new(a: CycNum, b: CycNum, c: CycNum, d: CycNum) -> Result<MoebiusElt, MoebiusError> {
        if (&a * &d - &b * &c).is_zero() {
            return Err(MoebiusError::Singular);
        }
        let lead = [&a, &b, &c, &d]
            .into_iter()
            .find(|v| !v.is_zero())
            .expect("nonsingular matrix has a nonzero entry")
            .inv()
            .expect("nonzero");
        Ok(MoebiusElt { a: &a * &lead, b: &b * &lead, c: &c * &lead, d: &d * &lead })
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Result<MoebiusElt, MoebiusError> {
        MoebiusElt::new(a.into(), b.into(), c.into(), d.into())
    }

    pub fn identity() -> MoebiusElt {
        MoebiusElt::from_ints(1, 0, 0, 1).expect("identity is nonsingular")
    }

    pub fn entries(&self) -> [&CycNum; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn is_identity(&self) -> bool {
        *self == MoebiusElt::identity()
    }

    /// self ∘ other, i.e. apply `other` first.
    pub fn compose(&self, other: &MoebiusElt) -> MoebiusElt {
        MoebiusElt::new(
            &self.a * &other.a + &self.b * &other.c,
            &self.a * &other.b + &self.b * &other.d,
            &self.c * &other.a + &self.d * &other.c,
            &self.c * &other.b + &self.d * &other.d,
        )
        .expect("product of nonsingular matrices")
    }

    pub fn inverse(&self) -> MoebiusElt {
        MoebiusElt::new(self.d.clone(), -&self.b, -&self.c, self.a.clone()).expect("nonsingular")
    }

    /// Smallest k ≥ 1 with self^k = identity, searching up to `cap`.
    pub fn order(&self, cap: usize) -> Option<usize> {
        let mut acc = self.clone();
        for k in 1..=cap {
            if acc.is_identity() {
                return Some(k);
            }
            acc = acc.compose(self);
        }
        None
    }

    /// Image of a point; None means ∞.
    pub fn apply(&self, x: &CycNum) -> Option<CycNum> {
        let den = &self.c * x + &self.d;
        if den.is_zero() {
            return None;
        }
        Some((&self.a * x + &self.b) / den)
    }

    /// m(A(x)) as a rational map.
    pub fn pull_back(&self, m: &RationalMap) -> Result<RationalMap, PolyError> {
        m.pre_compose(self.entries())
    }

    /// A hashable key: the rational coordinates of all entries in Q(ζ_conductor).
    pub(crate) fn key(&self, conductor: u32) -> Vec<Rat> {
        self.entries()
            .iter()
            .flat_map(|e| e.embed(conductor).expect("entry conductor divides group conductor").coeffs().to_vec())
            .collect()
    }

    pub fn conductor(&self) -> u32 {
        self.entries().iter().fold(1, |acc, e| crate::exactnum::lcm(acc, e.conductor()))
    }
}

impl fmt::Display for MoebiusElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}; {}, {}]", self.a, self.b, self.c, self.d)
    }
}

impl fmt::Debug for MoebiusElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MoebiusElt{}", self)
    }
}
