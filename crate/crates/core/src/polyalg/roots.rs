//! Exact recognition of polynomial roots inside a cyclotomic field.
//!
//! Numeric roots (Aberth iteration) only propose candidates; every accepted root
//! is confirmed by exact division.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::squarefree::squarefree_part;
use super::{Poly, PolyError};
use crate::exactnum::{CycNum, Rat};

/// Distinct roots of p, all of which must lie in Q(ζ_within).
pub fn roots_in_field(p: &Poly, within: u32) -> Result<Vec<CycNum>, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let s = squarefree_part(p);
    if s.is_constant() {
        return Ok(Vec::new());
    }
    if s.is_rational() {
        return rational_poly_roots(&s, within);
    }
    // Galois norm: a rational polynomial vanishing at every root of s
    let m = s.conductor();
    let mut norm = s.clone();
    for k in 2..m {
        if k.gcd(&m) == 1 {
            norm = &norm * &s.galois(k as i64);
        }
    }
    let candidates = rational_poly_roots(&squarefree_part(&norm), u32::MAX)?;
    let mut roots = Vec::new();
    for r in candidates {
        if s.eval(&r).is_zero() {
            if within != u32::MAX && !within.is_multiple_of(r.minimal().conductor()) {
                return Err(not_in_field(&s));
            }
            roots.push(r);
        }
    }
    if roots.len() != s.deg() {
        return Err(not_in_field(&s));
    }
    Ok(roots)
}

fn not_in_field(s: &Poly) -> PolyError {
    let approx = numeric_roots(s)
        .iter()
        .map(|z| format!("{:.12} + {:.12}*I", z.re, z.im))
        .collect();
    PolyError::RootNotInField { approx }
}

/// Roots of a squarefree rational polynomial from its linear and quadratic rational factors.
fn rational_poly_roots(s: &Poly, within: u32) -> Result<Vec<CycNum>, PolyError> {
    let mut rest = s.monic();
    let mut roots = Vec::new();
    let (_, ints) = rest.to_integer_poly().expect("rational polynomial");
    let lead = ints.last().expect("nonconstant").abs();
    let denominators = small_divisors(&lead);

    for z in numeric_roots(&rest) {
        if z.im.abs() > 1e-7 * (1.0 + z.norm()) {
            continue;
        }
        for q in &denominators {
            let cand = rational_near(z.re, q);
            let Some(cand) = cand else { continue };
            let c = CycNum::from_rat(cand);
            if rest.eval(&c).is_zero() {
                rest = rest.exact_div(&Poly::new(vec![-&c, CycNum::one()])).expect("root divides");
                roots.push(c);
                break;
            }
        }
    }

    while !rest.is_constant() {
        let zs = numeric_roots(&rest);
        let mut found = None;
        'pairs: for i in 0..zs.len() {
            for j in i + 1..zs.len() {
                let sum = zs[i] + zs[j];
                let prod = zs[i] * zs[j];
                let scale = 1.0 + prod.norm();
                if sum.im.abs() > 1e-6 * scale || prod.im.abs() > 1e-6 * scale {
                    continue;
                }
                let (Some(a), Some(b)) = (continued_fraction(sum.re), continued_fraction(prod.re)) else {
                    continue;
                };
                let quad = Poly::new(vec![CycNum::from_rat(b.clone()), CycNum::from_rat(-a.clone()), CycNum::one()]);
                if let Some(q) = rest.exact_div(&quad) {
                    found = Some((a, b, q));
                    break 'pairs;
                }
            }
        }
        let Some((a, b, quotient)) = found else {
            return Err(not_in_field(&rest));
        };
        // roots of x² − a x + b
        let disc = &a * &a - Rat::from_integer(BigInt::from(4)) * &b;
        let root = CycNum::sqrt_rat(&disc);
        if within != u32::MAX && !within.is_multiple_of(root.conductor()) {
            return Err(not_in_field(&rest));
        }
        let half = Rat::new(BigInt::one(), BigInt::from(2));
        let a = CycNum::from_rat(a);
        roots.push((&a + &root).scale(&half));
        roots.push((&a - &root).scale(&half));
        rest = quotient;
    }
    Ok(roots)
}

fn small_divisors(n: &BigInt) -> Vec<BigInt> {
    let Some(v) = n.to_u64().filter(|&v| v < 1_000_000_000_000) else {
        return vec![BigInt::one()];
    };
    let mut out = Vec::new();
    let mut k = 1u64;
    while k * k <= v {
        if v % k == 0 {
            out.push(BigInt::from(k));
            if k * k != v {
                out.push(BigInt::from(v / k));
            }
        }
        k += 1;
    }
    out.sort();
    out
}

fn rational_near(x: f64, q: &BigInt) -> Option<Rat> {
    let qf = q.to_f64()?;
    let p = (x * qf).round();
    if !p.is_finite() {
        return None;
    }
    Some(Rat::new(BigInt::from(p as i128), q.clone()))
}

/// Best rational approximation with a modest denominator, when one is close.
fn continued_fraction(x: f64) -> Option<Rat> {
    if !x.is_finite() {
        return None;
    }
    let (mut h0, mut h1) = (BigInt::zero(), BigInt::one());
    let (mut k0, mut k1) = (BigInt::one(), BigInt::zero());
    let mut y = x;
    for _ in 0..40 {
        let a = y.floor();
        let ai = BigInt::from(a as i128);
        let h2 = &ai * &h1 + &h0;
        let k2 = &ai * &k1 + &k0;
        (h0, h1) = (h1, h2);
        (k0, k1) = (k1, k2);
        let approx = h1.to_f64()? / k1.to_f64()?;
        if (approx - x).abs() <= 1e-9 * (1.0 + x.abs()) {
            return Some(Rat::new(h1, k1));
        }
        let frac = y - a;
        if frac.abs() < 1e-15 {
            break;
        }
        y = 1.0 / frac;
    }
    None
}

/// Numeric roots of p by Aberth–Ehrlich iteration in double precision.
pub fn numeric_roots(p: &Poly) -> Vec<Complex64> {
    let coeffs = complex_coeffs(p);
    let n = coeffs.len().saturating_sub(1);
    if n == 0 {
        return Vec::new();
    }
    let lead = coeffs[n];
    let monic: Vec<Complex64> = coeffs.iter().map(|c| c / lead).collect();
    let radius = 1.0 + monic[..n].iter().map(|c| c.norm()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius * 0.5, 0.4 + 2.0 * std::f64::consts::PI * k as f64 / n as f64))
        .collect();
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let (v, dv) = horner(&monic, z[i]);
            if v.norm() == 0.0 {
                continue;
            }
            let ratio = v / dv;
            let repulse: Complex64 = (0..n).filter(|&j| j != i).map(|j| Complex64::new(1.0, 0.0) / (z[i] - z[j])).sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulse);
            z[i] -= step;
            moved = moved.max(step.norm() / (1.0 + z[i].norm()));
        }
        if moved < 1e-15 {
            break;
        }
    }
    z
}

fn horner(c: &[Complex64], x: Complex64) -> (Complex64, Complex64) {
    let mut v = Complex64::new(0.0, 0.0);
    let mut dv = Complex64::new(0.0, 0.0);
    for a in c.iter().rev() {
        dv = dv * x + v;
        v = v * x + a;
    }
    (v, dv)
}

fn complex_coeffs(p: &Poly) -> Vec<Complex64> {
    // normalize by the largest rational coordinate to stay inside f64 range
    let big = p
        .coeffs()
        .iter()
        .flat_map(|c| c.coeffs().iter())
        .map(|q| q.abs())
        .fold(Rat::zero(), |a, b| if b > a { b } else { a });
    let big = if big.is_zero() { Rat::one() } else { big };
    p.coeffs()
        .iter()
        .map(|c| {
            let scaled = c.scale(&big.recip());
            scaled.approx(17).map(|a| a.to_complex64()).unwrap_or_default()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted_strings(v: &[CycNum]) -> Vec<String> {
        let mut s: Vec<String> = v.iter().map(|c| c.to_string()).collect();
        s.sort();
        s
    }

    #[test]
    fn rational_roots_with_multiplicity() {
        let p = &Poly::from_ints(&[-1728, 1]).pow(3) * &Poly::from_ints(&[0, 3, -2]);
        let roots = roots_in_field(&p, 60).unwrap();
        assert_eq!(sorted_strings(&roots), vec!["0", "1728", "3/2"]);
    }

    #[test]
    fn imaginary_quadratic_roots() {
        let p = Poly::from_ints(&[108, 0, 1]);
        let roots = roots_in_field(&p, 60).unwrap();
        assert_eq!(sorted_strings(&roots), vec!["-6*I*sqrt3", "6*I*sqrt3"]);
    }

    #[test]
    fn cyclotomic_coefficients() {
        // (x − i)(x − 2)
        let p = &Poly::new(vec![-CycNum::i(), CycNum::one()]) * &Poly::from_ints(&[-2, 1]);
        let roots = roots_in_field(&p, 60).unwrap();
        assert_eq!(sorted_strings(&roots), vec!["2", "I"]);
    }

    #[test]
    fn irreducible_cubic_is_reported() {
        let p = Poly::from_ints(&[-2, 0, 0, 1]);
        assert!(matches!(roots_in_field(&p, 60), Err(PolyError::RootNotInField { .. })));
    }

    #[test]
    fn conductor_limit_is_enforced() {
        // √7 needs conductor 28
        let p = Poly::from_ints(&[-7, 0, 1]);
        assert!(roots_in_field(&p, 60).is_err());
        assert_eq!(roots_in_field(&p, 28).unwrap().len(), 2);
    }
}
