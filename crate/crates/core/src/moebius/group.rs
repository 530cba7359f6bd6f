//! The five families of finite subgroups of PGL₂ and their standard generators.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{MoebiusElt, MoebiusError};
use crate::exactnum::{lcm, CycNum, WORKING_CONDUCTOR};

/// Reduced automorphism group labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ReducedGroup {
    Cyclic,
    Dihedral,
    A4,
    S4,
    A5,
}

impl ReducedGroup {
    pub fn is_parametric(self) -> bool {
        matches!(self, ReducedGroup::Cyclic | ReducedGroup::Dihedral)
    }

    /// |Γ| for the given parameter.
    pub fn order(self, n: u32) -> usize {
        match self {
            ReducedGroup::Cyclic => n as usize,
            ReducedGroup::Dihedral => 2 * n as usize,
            ReducedGroup::A4 => 12,
            ReducedGroup::S4 => 24,
            ReducedGroup::A5 => 60,
        }
    }

    /// Short label used in text output: `Z`, `D`, `A4`, `S4`, `A5`.
    pub fn label(self) -> &'static str {
        match self {
            ReducedGroup::Cyclic => "Z",
            ReducedGroup::Dihedral => "D",
            ReducedGroup::A4 => "A4",
            ReducedGroup::S4 => "S4",
            ReducedGroup::A5 => "A5",
        }
    }

    /// Label with the parameter, e.g. `Z_5`, `D_3`, `A4`.
    pub fn display(self, n: Option<u32>) -> String {
        match (self.is_parametric(), n) {
            (true, Some(n)) => format!("{}_{}", self.label(), n),
            _ => self.label().to_string(),
        }
    }

    /// Conductor in which roots and constants of this group's objects are sought.
    pub fn working_conductor(self, n: Option<u32>) -> u32 {
        match (self.is_parametric(), n) {
            (true, Some(n)) => lcm(WORKING_CONDUCTOR, n),
            _ => WORKING_CONDUCTOR,
        }
    }
}

impl fmt::Display for ReducedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for ReducedGroup {
    type Err = MoebiusError;

    fn from_str(s: &str) -> Result<ReducedGroup, MoebiusError> {
        match s {
            "Z" | "Zn" | "Z_n" | "C" => Ok(ReducedGroup::Cyclic),
            "D" | "Dn" | "D_n" => Ok(ReducedGroup::Dihedral),
            "A4" => Ok(ReducedGroup::A4),
            "S4" => Ok(ReducedGroup::S4),
            "A5" => Ok(ReducedGroup::A5),
            other => Err(MoebiusError::UnknownGroup(other.to_string())),
        }
    }
}

/// A finite group of Möbius transformations with its generators.
#[derive(Clone, Debug)]
pub struct MoebiusGroup {
    name: ReducedGroup,
    n: Option<u32>,
    generators: Vec<MoebiusElt>,
    elements: Vec<MoebiusElt>,
}

impl MoebiusGroup {
    pub fn name(&self) -> ReducedGroup {
        self.name
    }

    pub fn n(&self) -> Option<u32> {
        self.n
    }

    pub fn generators(&self) -> &[MoebiusElt] {
        &self.generators
    }

    pub fn elements(&self) -> &[MoebiusElt] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Multiset of element orders as sorted (order, count) pairs.
    pub fn order_statistics(&self) -> Vec<(usize, usize)> {
        let mut counts = std::collections::BTreeMap::new();
        for e in &self.elements {
            let k = e.order(self.order()).expect("finite group element");
            *counts.entry(k).or_insert(0) += 1;
        }
        counts.into_iter().collect()
    }

    /// Closes the generators under composition, failing beyond `cap` elements.
    pub fn generate(
        name: ReducedGroup,
        n: Option<u32>,
        generators: Vec<MoebiusElt>,
        cap: usize,
    ) -> Result<MoebiusGroup, MoebiusError> {
        let conductor = generators.iter().fold(1, |acc, g| lcm(acc, g.conductor()));
        let id = MoebiusElt::identity();
        let mut seen = HashSet::new();
        seen.insert(id.key(conductor));
        let mut elements = vec![id.clone()];
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in &generators {
                let y = x.compose(g);
                if seen.insert(y.key(conductor)) {
                    if elements.len() >= cap {
                        return Err(MoebiusError::ClosureCap { cap });
                    }
                    elements.push(y.clone());
                    queue.push_back(y);
                }
            }
        }
        Ok(MoebiusGroup { name, n, generators, elements })
    }
}

/// Closure caps for parametric and fixed groups.
pub const PARAMETRIC_CAP: usize = 200;
pub const FIXED_CAP: usize = 60;

/// The standard embedding of Γ in PGL₂ from its listed generators.
///
/// Z_n: x ↦ ζ_n x. D_n: adds x ↦ 1/x. A4: x ↦ −x, x ↦ (x + i)/(x − i).
/// S4: x ↦ ix, x ↦ (x + i)/(x − i). A5: the two ω, ε matrices.
pub fn standard_embedding(name: ReducedGroup, n: Option<u32>) -> Result<MoebiusGroup, MoebiusError> {
    let one = CycNum::one;
    let zero = CycNum::zero;
    let (gens, cap, n) = match name {
        ReducedGroup::Cyclic | ReducedGroup::Dihedral => {
            let n = n.ok_or(MoebiusError::MissingParameter)?;
            if n < 2 {
                return Err(MoebiusError::InvalidParameter(n));
            }
            let mut gens = vec![MoebiusElt::new(CycNum::zeta(n, 1), zero(), zero(), one())?];
            if name == ReducedGroup::Dihedral {
                gens.push(MoebiusElt::new(zero(), one(), one(), zero())?);
            }
            (gens, PARAMETRIC_CAP, Some(n))
        }
        ReducedGroup::A4 => {
            let i = CycNum::i();
            let gens = vec![
                MoebiusElt::new(-one(), zero(), zero(), one())?,
                MoebiusElt::new(one(), i.clone(), one(), -i)?,
            ];
            (gens, FIXED_CAP, None)
        }
        ReducedGroup::S4 => {
            let i = CycNum::i();
            let gens = vec![
                MoebiusElt::new(i.clone(), zero(), zero(), one())?,
                MoebiusElt::new(one(), i.clone(), one(), -i)?,
            ];
            (gens, FIXED_CAP, None)
        }
        ReducedGroup::A5 => {
            let w = CycNum::omega();
            let e4 = CycNum::zeta(5, 4);
            let gens = vec![
                MoebiusElt::new(w.clone(), one(), one(), -&w)?,
                MoebiusElt::new(w.clone(), e4.clone(), one(), -(&e4 * &w))?,
            ];
            (gens, FIXED_CAP, None)
        }
    };
    let group = MoebiusGroup::generate(name, n, gens, cap)?;
    let expected = name.order(n.unwrap_or(0));
    if group.order() != expected {
        return Err(MoebiusError::WrongOrder { expected, got: group.order() });
    }
    Ok(group)
}
