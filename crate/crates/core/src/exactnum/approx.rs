//! Fixed-point complex approximations of cyclotomic numbers.

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::{CycNum, ExactError};

/// Largest number of decimal digits `CycNum::approx` will produce.
pub const MAX_DIGITS: u32 = 60;

const GUARD: u32 = 8;

/// A complex number stored as (re + i·im) / 10^scale with integer re, im.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexApprox {
    re: BigInt,
    im: BigInt,
    scale: u32,
    digits: u32,
}

impl ComplexApprox {
    /// Number of correct decimal digits promised after the point.
    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn to_complex64(&self) -> Complex64 {
        Complex64::new(fixed_to_f64(&self.re, self.scale), fixed_to_f64(&self.im, self.scale))
    }

    /// Product, kept at the smaller of the two precisions.
    pub fn mul(&self, other: &ComplexApprox) -> ComplexApprox {
        let scale = self.scale.min(other.scale);
        let (a, b) = (rescale(&self.re, self.scale, scale), rescale(&self.im, self.scale, scale));
        let (c, d) = (rescale(&other.re, other.scale, scale), rescale(&other.im, other.scale, scale));
        let unit = pow10(scale);
        ComplexApprox {
            re: round_div(&(&a * &c - &b * &d), &unit),
            im: round_div(&(&a * &d + &b * &c), &unit),
            scale,
            digits: self.digits.min(other.digits),
        }
    }

    /// True when |self − other| < 10^(−k), judged on both coordinates with the stored precision.
    pub fn close_to(&self, other: &ComplexApprox, k: i32) -> bool {
        let scale = self.scale.min(other.scale);
        let dre = rescale(&self.re, self.scale, scale) - rescale(&other.re, other.scale, scale);
        let dim = rescale(&self.im, self.scale, scale) - rescale(&other.im, other.scale, scale);
        // |d|² < 10^(−2k), in units of 10^(−2·scale)
        let mag2 = &dre * &dre + &dim * &dim;
        let exp = 2 * scale as i64 - 2 * k as i64;
        if exp < 0 {
            return mag2.is_zero();
        }
        mag2 < pow10(exp as u32)
    }

    fn fmt_part(v: &BigInt, scale: u32, digits: u32) -> String {
        let r = rescale(v, scale, digits);
        let neg = r.is_negative();
        let s = r.abs().to_string();
        let s = if s.len() <= digits as usize {
            format!("{}{}", "0".repeat(digits as usize + 1 - s.len()), s)
        } else {
            s
        };
        let (int, frac) = s.split_at(s.len() - digits as usize);
        let sign = if neg { "-" } else { "" };
        if digits == 0 {
            format!("{sign}{int}")
        } else {
            format!("{sign}{int}.{frac}")
        }
    }
}

impl fmt::Display for ComplexApprox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let re = ComplexApprox::fmt_part(&self.re, self.scale, self.digits);
        let im = ComplexApprox::fmt_part(&self.im, self.scale, self.digits);
        match im.strip_prefix('-') {
            Some(abs) => write!(f, "{re} - {abs}*I"),
            None => write!(f, "{re} + {im}*I"),
        }
    }
}

impl CycNum {
    /// Decimal approximation with |approx − self| < 10^(−digits), using ζ_m = exp(2πi/m).
    pub fn approx(&self, digits: u32) -> Result<ComplexApprox, ExactError> {
        if digits > MAX_DIGITS {
            return Err(ExactError::PrecisionCap { requested: digits, cap: MAX_DIGITS });
        }
        let scale = digits + GUARD;
        let m = self.conductor();
        let (den, ints) = self.integer_coords();
        // enough extra digits to absorb the integer coefficient sizes
        let extra = ints.iter().map(|c| c.to_string().len() as u32).max().unwrap_or(1) + 2;
        let work = scale + extra + (m as f64).log10().ceil() as u32;
        let unit = pow10(work);
        let pi = pi_fixed(work + 5) / BigInt::from(100_000);
        let (mut re, mut im) = (BigInt::zero(), BigInt::zero());
        for (j, c) in ints.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if j == 0 {
                re += c * &unit;
                continue;
            }
            // angle 2πj/m folded into [−π, π]
            let num = 2 * j as i64;
            let folded = if num > m as i64 { num - 2 * m as i64 } else { num };
            let theta = round_div(&(&pi * BigInt::from(folded)), &BigInt::from(m));
            let (cos, sin) = cos_sin_fixed(&theta, work);
            re += c * cos;
            im += c * sin;
        }
        let shrink = pow10(work - scale) * &den;
        Ok(ComplexApprox {
            re: round_div(&re, &shrink),
            im: round_div(&im, &shrink),
            scale,
            digits,
        })
    }
}

fn pow10(k: u32) -> BigInt {
    BigInt::from(10).pow(k)
}

fn round_div(a: &BigInt, b: &BigInt) -> BigInt {
    let two = BigInt::from(2);
    let (q, r) = a.div_mod_floor(b);
    if &r * &two >= b.abs() {
        q + 1
    } else {
        q
    }
}

fn rescale(v: &BigInt, from: u32, to: u32) -> BigInt {
    if from >= to {
        round_div(v, &pow10(from - to))
    } else {
        v * pow10(to - from)
    }
}

fn fixed_to_f64(v: &BigInt, scale: u32) -> f64 {
    // keep 20 significant digits before converting
    let digits = v.abs().to_string().len() as u32;
    if digits > 20 {
        let drop = digits - 20;
        let shifted = round_div(v, &pow10(drop));
        shifted.to_f64().unwrap_or(f64::NAN) * 10f64.powi(drop as i32 - scale as i32)
    } else {
        v.to_f64().unwrap_or(f64::NAN) / 10f64.powi(scale as i32)
    }
}

/// atan(1/x) scaled by 10^prec.
fn atan_inv(x: u64, prec: u32) -> BigInt {
    let unit = pow10(prec);
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let mut power = &unit / &x;
    let mut sum = power.clone();
    let mut k = 1u64;
    loop {
        power = &power / &x2;
        if power.is_zero() {
            break;
        }
        let term = &power / BigInt::from(2 * k + 1);
        if k % 2 == 1 {
            sum -= term;
        } else {
            sum += term;
        }
        k += 1;
    }
    sum
}

/// π scaled by 10^prec (Machin's formula).
fn pi_fixed(prec: u32) -> BigInt {
    let p = prec + 5;
    let v = atan_inv(5, p) * 16 - atan_inv(239, p) * 4;
    round_div(&v, &pow10(5))
}

/// cos θ and sin θ for |θ| ≤ π, all scaled by 10^prec.
fn cos_sin_fixed(theta: &BigInt, prec: u32) -> (BigInt, BigInt) {
    let unit = pow10(prec);
    let mut cos = unit.clone();
    let mut sin = BigInt::zero();
    let mut term = unit.clone();
    let mut k = 1u64;
    loop {
        term = round_div(&(&term * theta), &(&unit * BigInt::from(k)));
        if term.is_zero() {
            break;
        }
        match k % 4 {
            1 => sin += &term,
            2 => cos -= &term,
            3 => sin -= &term,
            _ => cos += &term,
        }
        k += 1;
    }
    (cos, sin)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_digits() {
        assert_eq!(pi_fixed(30).to_string(), "3141592653589793238462643383280");
    }

    #[test]
    fn i_is_unit_imaginary() {
        let a = CycNum::i().approx(30).unwrap();
        assert_eq!(a.to_string(), format!("0.{} + 1.{}*I", "0".repeat(30), "0".repeat(30)));
    }

    #[test]
    fn omega_and_six_i_sqrt3() {
        let w = CycNum::omega().approx(30).unwrap().to_string();
        assert!(w.starts_with("0.61803398874989484820458683436"), "{w}");
        let v = (CycNum::from_int(6) * CycNum::i() * CycNum::sqrt3()).approx(20).unwrap().to_string();
        assert!(v.starts_with("0.00000000000000000000 + 10.39230484541326"), "{v}");
    }

    #[test]
    fn precision_cap_enforced() {
        assert!(CycNum::one().approx(61).is_err());
    }
}
