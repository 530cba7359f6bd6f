//! Closed formulas for the number of loci per reduced group, next to the enumerated counts.

use serde::Serialize;

use super::{enumerate_loci, ClassifyError};
use crate::moebius::ReducedGroup;

pub fn divisor_count(n: u64) -> u64 {
    (1..=n).filter(|d| n.is_multiple_of(*d)).count() as u64
}

pub fn even_divisor_count(n: u64) -> u64 {
    (1..=n).filter(|d| d % 2 == 0 && n.is_multiple_of(*d)).count() as u64
}

/// Formula values beside the enumerated row counts, for each reduced group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountReport {
    pub genus: u32,
    pub n1_formula: u64,
    pub n2_formula: u64,
    /// 1 for g > 6; no formula is claimed below that.
    pub n3_formula: Option<u64>,
    pub enumerated: Vec<(String, usize)>,
}

impl CountReport {
    pub fn enumerated_for(&self, reduced: ReducedGroup) -> usize {
        self.enumerated.iter().find(|(l, _)| l == reduced.label()).map_or(0, |(_, c)| *c)
    }
}

/// Evaluates the counting formulas and counts the enumerated rows per reduced group.
/// The Z₂ root row counts towards the cyclic family.
pub fn count_formulas(g: u32) -> Result<CountReport, ClassifyError> {
    let rows = enumerate_loci(g)?;
    let gg = u64::from(g);
    let n1 = divisor_count(gg + 1) + divisor_count(2 * gg + 1) + divisor_count(2 * gg) - 1;
    let n2 = 3 * even_divisor_count(gg + 1) + 2 * even_divisor_count(gg) + divisor_count(gg) - 2;
    let n3 = (g > 6).then_some(1);
    let groups = [ReducedGroup::Cyclic, ReducedGroup::Dihedral, ReducedGroup::A4, ReducedGroup::S4, ReducedGroup::A5];
    let enumerated = groups
        .iter()
        .map(|&r| (r.label().to_string(), rows.iter().filter(|row| row.reduced == r).count()))
        .collect();
    Ok(CountReport { genus: g, n1_formula: n1, n2_formula: n2, n3_formula: n3, enumerated })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisors() {
        assert_eq!(divisor_count(12), 6);
        assert_eq!(even_divisor_count(12), 4);
        assert_eq!(even_divisor_count(9), 0);
    }
}
