//! The groups of the classification: constructions and naming.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::present::coset_enumerate_as;
use super::{FiniteGroup, GroupError, Perm, Presentation, COSET_CAP, ELEMENT_CAP};

/// Group families. Parameter conventions: `Cyclic(n)` has order n, `Dihedral(n)` order 2n,
/// `Z2xZ(n)` order 2n, `Z2xD(n)` and `V`, `H`, `G`, `U` order 4n.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    Cyclic,
    Z2xZ,
    Dihedral,
    Z2xD,
    V,
    H,
    G,
    U,
    Z2xA4,
    SL23,
    Z2xS4,
    GL23,
    W2,
    W3,
    Z2xA5,
    SL25,
    /// Reference constructions, not automorphism groups themselves.
    Quaternion,
    SemiDihedral,
    Alternating,
    Symmetric,
    Presented,
}

impl Family {
    pub const CLASSIFICATION: [Family; 16] = [
        Family::Cyclic,
        Family::Z2xZ,
        Family::Dihedral,
        Family::Z2xD,
        Family::V,
        Family::H,
        Family::G,
        Family::U,
        Family::Z2xA4,
        Family::SL23,
        Family::Z2xS4,
        Family::GL23,
        Family::W2,
        Family::W3,
        Family::Z2xA5,
        Family::SL25,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Cyclic => "Z",
            Family::Z2xZ => "Z2xZ",
            Family::Dihedral => "D",
            Family::Z2xD => "Z2xD",
            Family::V => "V",
            Family::H => "H",
            Family::G => "G",
            Family::U => "U",
            Family::Z2xA4 => "Z2xA4",
            Family::SL23 => "SL2(3)",
            Family::Z2xS4 => "Z2xS4",
            Family::GL23 => "GL2(3)",
            Family::W2 => "W2",
            Family::W3 => "W3",
            Family::Z2xA5 => "Z2xA5",
            Family::SL25 => "SL2(5)",
            Family::Quaternion => "Q",
            Family::SemiDihedral => "SD",
            Family::Alternating => "A",
            Family::Symmetric => "S",
            Family::Presented => "FP",
        }
    }

    pub fn is_parametric(self) -> bool {
        matches!(
            self,
            Family::Cyclic
                | Family::Z2xZ
                | Family::Dihedral
                | Family::Z2xD
                | Family::V
                | Family::H
                | Family::G
                | Family::U
                | Family::Quaternion
                | Family::SemiDihedral
                | Family::Alternating
                | Family::Symmetric
        )
    }

    /// Expected order, when the family fixes it.
    pub fn expected_order(self, n: Option<u32>) -> Option<usize> {
        let n = n.map(|n| n as usize);
        match self {
            Family::Cyclic | Family::Quaternion | Family::SemiDihedral => n,
            Family::Z2xZ | Family::Dihedral => n.map(|n| 2 * n),
            Family::Z2xD | Family::V | Family::H | Family::G | Family::U => n.map(|n| 4 * n),
            Family::Z2xA4 | Family::SL23 => Some(24),
            Family::Z2xS4 | Family::GL23 | Family::W2 | Family::W3 => Some(48),
            Family::Z2xA5 | Family::SL25 => Some(120),
            Family::Alternating => n.map(|n| (1..=n).product::<usize>() / 2),
            Family::Symmetric => n.map(|n| (1..=n).product()),
            Family::Presented => None,
        }
    }

    /// Human-readable name with the order shown for dihedral factors, e.g. `D[ord=8]`.
    pub fn display(self, n: Option<u32>) -> String {
        let Some(n) = n.filter(|_| self.is_parametric()) else {
            return self.name().to_string();
        };
        match self {
            Family::Cyclic => format!("Z{n}"),
            Family::Z2xZ => format!("Z2xZ{n}"),
            Family::Dihedral => format!("D[ord={}]", 2 * n),
            Family::Z2xD => format!("Z2xD[ord={}]", 2 * n),
            Family::Quaternion => format!("Q{n}"),
            Family::SemiDihedral => format!("SD{n}"),
            _ => format!("{}{n}", self.name()),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Family, GroupError> {
        let key: String = s.chars().filter(|c| !c.is_whitespace() && *c != '_').collect::<String>().to_ascii_uppercase();
        let all = Family::CLASSIFICATION.iter().chain(&[Family::Quaternion, Family::SemiDihedral, Family::Alternating, Family::Symmetric]);
        for &f in all {
            if f.name().to_ascii_uppercase() == key {
                return Ok(f);
            }
        }
        match key.as_str() {
            "C" | "CYCLIC" => Ok(Family::Cyclic),
            "Z2XC" => Ok(Family::Z2xZ),
            "DIHEDRAL" => Ok(Family::Dihedral),
            "SL23" => Ok(Family::SL23),
            "GL23" => Ok(Family::GL23),
            "SL25" => Ok(Family::SL25),
            _ => Err(GroupError::UnknownFamily(s.to_string())),
        }
    }
}

/// The presentations of the four order-4n extensions of D_n and of W₂, W₃.
///
/// U_n uses y^(2n) and W₃ uses x⁴: with the printed y^n and x², the relators collapse
/// U_n to D_n and W₃ to S₄.
pub fn presentation(family: Family, n: Option<u32>) -> Result<Presentation, GroupError> {
    let need = || n.ok_or(GroupError::MissingParameter(family));
    let rels: Vec<String> = match family {
        Family::V => {
            let n = need()?;
            vec!["x^4".into(), format!("y^{n}"), "(x*y)^2".into(), "(x^-1*y)^2".into()]
        }
        Family::H => {
            let n = need()?;
            vec!["x^4".into(), "y^2*x^2".into(), format!("(x*y)^{n}")]
        }
        Family::G => {
            let n = need()?;
            vec![format!("x^2*y^{n}"), format!("y^{}", 2 * n), "x^-1*y*x*y".into()]
        }
        Family::U => {
            let n = need()?;
            vec!["x^2".into(), format!("y^{}", 2 * n), format!("x*y*x*y^{}", n + 1)]
        }
        Family::W2 => vec!["x^4".into(), "y^3".into(), "y*x^2*y^-1*x^2".into(), "(x*y)^4".into()],
        Family::W3 => vec!["x^4".into(), "y^3".into(), "x^2*(x*y)^4".into(), "(x*y)^8".into()],
        _ => return Err(GroupError::NoPresentation(family)),
    };
    let refs: Vec<&str> = rels.iter().map(String::as_str).collect();
    Presentation::parse("xy", &refs)
}

/// The presentations exactly as printed, including the U_n and W₃ relators that collapse.
pub fn printed_presentation(family: Family, n: Option<u32>) -> Result<Presentation, GroupError> {
    match family {
        Family::U => {
            let n = n.ok_or(GroupError::MissingParameter(family))?;
            Presentation::parse("xy", &["x^2", &format!("y^{n}"), &format!("x*y*x*y^{}", n + 1)])
        }
        Family::W3 => Presentation::parse("xy", &["x^2", "y^3", "x^2*(x*y)^4", "(x*y)^8"]),
        _ => presentation(family, n),
    }
}

fn cycle(n: usize) -> Perm {
    Perm::from_fn(n, |i| (i + 1) % n).expect("cycle")
}

fn reflection(n: usize) -> Perm {
    Perm::from_fn(n, |i| (n - i) % n).expect("reflection")
}

fn with_z2(family: Family, n: Option<u32>, base: &FiniteGroup) -> Result<FiniteGroup, GroupError> {
    let deg = base.generator_perms().first().map_or(1, Perm::degree);
    let mut gens = vec![cycle(2).direct_sum(&Perm::identity(deg))];
    gens.extend(base.generator_perms().iter().map(|g| Perm::identity(2).direct_sum(g)));
    FiniteGroup::from_generators(family, n, gens, ELEMENT_CAP)
}

/// 2×2 matrices over F_p acting on the nonzero vectors of F_p², indexed as a·p + b − 1.
fn matrix_group(family: Family, n: Option<u32>, p: usize, mats: &[[usize; 4]]) -> Result<FiniteGroup, GroupError> {
    let gens = mats
        .iter()
        .map(|m| {
            Perm::from_fn(p * p - 1, |v| {
                let (a, b) = ((v + 1) / p, (v + 1) % p);
                let (c, d) = ((m[0] * a + m[1] * b) % p, (m[2] * a + m[3] * b) % p);
                c * p + d - 1
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    FiniteGroup::from_generators(family, n, gens, ELEMENT_CAP)
}

fn check_param(family: Family, n: Option<u32>, min: u32) -> Result<u32, GroupError> {
    let n = n.ok_or(GroupError::MissingParameter(family))?;
    if n < min {
        return Err(GroupError::InvalidParameter { family, n });
    }
    Ok(n)
}

/// Builds a concrete group of the given family.
pub fn construct(family: Family, n: Option<u32>) -> Result<FiniteGroup, GroupError> {
    let group = match family {
        Family::Cyclic => {
            let n = check_param(family, n, 1)? as usize;
            FiniteGroup::from_generators(family, Some(n as u32), vec![cycle(n)], ELEMENT_CAP)?
        }
        Family::Z2xZ => {
            let base = construct(Family::Cyclic, n)?;
            with_z2(family, n, &base)?
        }
        Family::Dihedral => {
            let m = check_param(family, n, 1)? as usize;
            // D_1 and D_2 are realized on 4 points so that they act faithfully.
            let gens = match m {
                1 => vec![Perm::new(vec![1, 0])?],
                2 => vec![Perm::new(vec![1, 0, 3, 2])?, Perm::new(vec![2, 3, 0, 1])?],
                _ => vec![cycle(m), reflection(m)],
            };
            FiniteGroup::from_generators(family, n, gens, ELEMENT_CAP)?
        }
        Family::Z2xD => {
            let base = construct(Family::Dihedral, n)?;
            with_z2(family, n, &base)?
        }
        Family::V | Family::H | Family::G | Family::U | Family::W2 | Family::W3 => {
            if family.is_parametric() {
                check_param(family, n, 2)?;
            }
            let n = if family.is_parametric() { n } else { None };
            coset_enumerate_as(&presentation(family, n)?, COSET_CAP, family, n)?
        }
        Family::Alternating | Family::Symmetric => {
            let k = check_param(family, n, 3)? as usize;
            let gens = if family == Family::Symmetric {
                vec![cycle(k), Perm::from_fn(k, |i| [1, 0].get(i).copied().unwrap_or(i))?]
            } else {
                // 3-cycles (0 1 i) generate A_k.
                (2..k).map(|i| Perm::from_fn(k, |j| if j == 0 { 1 } else if j == 1 { i } else if j == i { 0 } else { j })).collect::<Result<_, _>>()?
            };
            FiniteGroup::from_generators(family, n, gens, ELEMENT_CAP)?
        }
        Family::Z2xA4 => with_z2(family, None, &construct(Family::Alternating, Some(4))?)?,
        Family::Z2xS4 => with_z2(family, None, &construct(Family::Symmetric, Some(4))?)?,
        Family::Z2xA5 => with_z2(family, None, &construct(Family::Alternating, Some(5))?)?,
        Family::SL23 => matrix_group(family, None, 3, &[[1, 1, 0, 1], [1, 0, 1, 1]])?,
        Family::GL23 => matrix_group(family, None, 3, &[[1, 1, 0, 1], [1, 0, 1, 1], [2, 0, 0, 1]])?,
        Family::SL25 => matrix_group(family, None, 5, &[[1, 1, 0, 1], [1, 0, 1, 1]])?,
        Family::Quaternion => {
            // Q_{4m} in SL₂(F_p): diag(ζ, ζ⁻¹) with ζ of order 2m, and [0, −1; 1, 0].
            let order = check_param(family, n, 8)? as usize;
            if !order.is_multiple_of(4) {
                return Err(GroupError::InvalidParameter { family, n: order as u32 });
            }
            let two_m = order / 2;
            let p = (2..).map(|k| k * two_m + 1).find(|&p| is_prime(p)).expect("Dirichlet");
            let zeta = primitive_root_of_order(p, two_m);
            let zinv = pow_mod(zeta, two_m - 1, p);
            matrix_group(family, n, p, &[[zeta, 0, 0, zinv], [0, p - 1, 1, 0]])?
        }
        Family::SemiDihedral => {
            // Affine maps i ↦ i + 1 and i ↦ (m/2 − 1)·i on Z_m, m = order/2 a power of 2.
            let order = check_param(family, n, 16)? as usize;
            if !order.is_power_of_two() {
                return Err(GroupError::InvalidParameter { family, n: order as u32 });
            }
            let m = order / 2;
            let gens = vec![cycle(m), Perm::from_fn(m, |i| (i * (m / 2 - 1)) % m)?];
            FiniteGroup::from_generators(family, n, gens, ELEMENT_CAP)?
        }
        Family::Presented => return Err(GroupError::NoPresentation(family)),
    };
    if let Some(expected) = family.expected_order(n) {
        if group.order() != expected {
            return Err(GroupError::UnexpectedOrder { family, n, expected, got: group.order() });
        }
    }
    Ok(group)
}

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn pow_mod(mut b: usize, mut e: usize, p: usize) -> usize {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn primitive_root_of_order(p: usize, k: usize) -> usize {
    (2..p)
        .map(|g| pow_mod(g, (p - 1) / k, p))
        .find(|&z| (1..k).all(|j| pow_mod(z, j, p) != 1))
        .expect("k divides p − 1")
}
