use std::collections::BTreeMap;

use super::{CurveFamily, EquationError};
use crate::polyalg::Poly;

/// Largest number of parameter monomials an expansion may produce.
pub const EXPAND_CAP: usize = 4096;

/// f as a polynomial in the parameters with coefficients in Q(ζ)[x].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expanded {
    pub params: usize,
    /// Exponent vector of l_1 … l_δ ↦ coefficient polynomial in x.
    pub terms: BTreeMap<Vec<u32>, Poly>,
}

impl Expanded {
    /// `y^2 = (…) + (…)*l1 + …`, monomials in increasing total degree.
    pub fn render(&self) -> String {
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().collect();
        keys.sort_by_key(|k| (k.iter().sum::<u32>(), std::cmp::Reverse((*k).clone())));
        let parts: Vec<String> = keys
            .into_iter()
            .map(|k| {
                let coeff = self.terms[k].render("x");
                let mono: Vec<String> = k
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| if e == 1 { format!("l{}", i + 1) } else { format!("l{}^{e}", i + 1) })
                    .collect();
                match (mono.is_empty(), coeff.as_str()) {
                    (true, _) => format!("({coeff})"),
                    (false, "1") => mono.join("*"),
                    (false, _) => format!("({coeff})*{}", mono.join("*")),
                }
            })
            .collect();
        format!("y^2 = {}", if parts.is_empty() { "0".to_string() } else { parts.join(" + ") })
    }
}

/// Multiplies out all factors of the family, failing past `cap` monomials.
pub fn expand(fam: &CurveFamily, cap: usize) -> Result<Expanded, EquationError> {
    let zero = vec![0u32; fam.params];
    let mut acc: BTreeMap<Vec<u32>, Poly> = BTreeMap::new();
    let fixed: Poly = fam.fixed.iter().map(|f| f.poly.clone()).product();
    acc.insert(zero.clone(), fixed);
    for m in &fam.moving {
        let mut linear: Vec<(Vec<u32>, &Poly)> = vec![(zero.clone(), &m.base)];
        for (j, p) in &m.slopes {
            let mut e = zero.clone();
            e[*j] = 1;
            linear.push((e, p));
        }
        let mut next: BTreeMap<Vec<u32>, Poly> = BTreeMap::new();
        for (ka, pa) in &acc {
            for (kb, pb) in &linear {
                let key: Vec<u32> = ka.iter().zip(kb).map(|(a, b)| a + b).collect();
                let prod = pa * *pb;
                let slot = next.entry(key).or_insert_with(Poly::zero);
                *slot = &*slot + &prod;
            }
        }
        next.retain(|_, p| !p.is_zero());
        if next.len() > cap {
            return Err(EquationError::TooLarge { cap });
        }
        acc = next;
    }
    Ok(Expanded { params: fam.params, terms: acc })
}
