//! Resultants and discriminants, including the discriminant in t of nf − t·df.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::modular::{self, Crt};
use super::{Poly, RationalMap};
use crate::exactnum::{CycNum, Rat};

/// Res(a, b) = lc(a)^deg b · Π_{a(α)=0} b(α), by the Euclidean recurrence.
pub fn resultant(a: &Poly, b: &Poly) -> CycNum {
    if a.is_zero() || b.is_zero() {
        return CycNum::zero();
    }
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut acc = CycNum::one();
    loop {
        let (da, db) = (a.deg(), b.deg());
        if db == 0 {
            return acc * b.lc().pow(da as u64);
        }
        let r = a.rem(&b).expect("nonzero divisor");
        if r.is_zero() {
            return CycNum::zero();
        }
        let dr = r.deg();
        if (da * db) % 2 == 1 {
            acc = -acc;
        }
        acc = acc * b.lc().pow((da - dr) as u64);
        a = b;
        b = r;
    }
}

/// disc(p) = (−1)^(d(d−1)/2) Res(p, p')/lc(p).
pub fn discriminant(p: &Poly) -> CycNum {
    let d = p.deg();
    if d < 1 {
        return CycNum::zero();
    }
    let r = resultant(p, &p.derivative()) / p.lc();
    if (d * (d - 1) / 2) % 2 == 1 {
        -r
    } else {
        r
    }
}

/// D(t) = disc_d(nf − t·df) with d = deg(m); the finite branch points are its roots.
///
/// Rational maps use a multimodular evaluation/interpolation; others fall back to the exact route.
pub fn discriminant_in_t(m: &RationalMap) -> Poly {
    if m.is_rational() {
        discriminant_in_t_modular(m)
    } else {
        discriminant_in_t_exact(m)
    }
}

/// Sample points t = 0, 1, 2, … avoiding the value where nf − t·df drops degree.
fn sample_points(count: usize, bad: impl Fn(i64) -> bool) -> Vec<i64> {
    (0i64..).filter(|&t| !bad(t)).take(count).collect()
}

/// Exact evaluation at 2d − 1 points of the field and Newton interpolation.
pub fn discriminant_in_t_exact(m: &RationalMap) -> Poly {
    let d = m.degree();
    let (nf, df) = (m.nf(), m.df());
    let lead = |t: i64| &nf.coeff(d) - &(&df.coeff(d) * &CycNum::from_int(t));
    let ts = sample_points(2 * d - 1, |t| lead(t).is_zero());
    let values: Vec<CycNum> = ts
        .iter()
        .map(|&t| discriminant(&(nf - &df.scale(&CycNum::from_int(t)))))
        .collect();
    let xs: Vec<CycNum> = ts.iter().map(|&t| CycNum::from_int(t)).collect();
    newton_interpolate(&xs, &values)
}

fn newton_interpolate(xs: &[CycNum], ys: &[CycNum]) -> Poly {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &dd[i] - &dd[i - 1];
            let den = &xs[i] - &xs[i - level];
            dd[i] = num / den;
        }
    }
    let mut acc = Poly::zero();
    for i in (0..n).rev() {
        let lin = Poly::new(vec![-&xs[i], CycNum::one()]);
        acc = &(&acc * &lin) + &Poly::constant(dd[i].clone());
    }
    acc
}

/// Multimodular route for rational maps: D is computed for the integer-scaled pair
/// (L·nf, L·df) modulo enough 62-bit primes to cover a Hadamard–Mignotte bound.
pub fn discriminant_in_t_modular(m: &RationalMap) -> Poly {
    let d = m.degree();
    let (nf_scale, nf_ints) = m.nf().to_integer_poly().expect("rational numerator");
    let (df_scale, df_ints) = m.df().to_integer_poly().expect("rational denominator");
    // common integer scaling: L·nf = a·N, L·df = b·M with integer a, b
    let lcm_den = num_integer::lcm(nf_scale.numer().clone(), df_scale.numer().clone());
    let a = (Rat::from_integer(lcm_den.clone()) / &nf_scale).to_integer();
    let b = (Rat::from_integer(lcm_den.clone()) / &df_scale).to_integer();
    let pad = |v: Vec<BigInt>, c: &BigInt| {
        let mut v: Vec<BigInt> = v.into_iter().map(|x| x * c).collect();
        v.resize(d + 1, BigInt::zero());
        v
    };
    let big_n = pad(nf_ints, &a);
    let big_m = pad(df_ints, &b);

    // Hadamard bound on the Sylvester matrix at |t| = 1, widened by Mignotte for the division by lc
    let row: Vec<BigInt> = big_n.iter().zip(&big_m).map(|(x, y)| x.abs() + y.abs()).collect();
    let drow: Vec<BigInt> = row.iter().enumerate().skip(1).map(|(k, c)| c * BigInt::from(k)).collect();
    let log_h = (d as f64 - 1.0) * modular::log2_norm(&row) + d as f64 * modular::log2_norm(&drow);
    let bits_needed = log_h + (2 * d) as f64 + (2.0 * d as f64).log2() + 16.0;

    let len = 2 * d - 1;
    let mut crt = Crt::new(len);
    let sign_negative = (d * (d - 1) / 2) % 2 == 1;
    for p in modular::primes() {
        if crt.modulus_bits() as f64 > bits_needed {
            break;
        }
        let np: Vec<u64> = big_n.iter().map(|c| modular::reduce(c, p)).collect();
        let mp: Vec<u64> = big_m.iter().map(|c| modular::reduce(c, p)).collect();
        if np[d] == 0 && mp[d] == 0 {
            continue;
        }
        let mut xs = Vec::with_capacity(len);
        let mut ys = Vec::with_capacity(len);
        let mut t = 0u64;
        while xs.len() < len {
            let r: Vec<u64> = np
                .iter()
                .zip(&mp)
                .map(|(&x, &y)| modular::sub_mod(x, modular::mul_mod(t, y, p), p))
                .collect();
            let lc = r[d];
            if lc != 0 {
                let dr: Vec<u64> = (1..=d).map(|k| modular::mul_mod(k as u64 % p, r[k], p)).collect();
                let res = modular::resultant(&r, &dr, p);
                let mut v = modular::mul_mod(res, modular::inv_mod(lc, p), p);
                if sign_negative {
                    v = modular::sub_mod(0, v, p);
                }
                xs.push(t);
                ys.push(v);
            }
            t += 1;
        }
        crt.add(&modular::interpolate(&xs, &ys, p), p);
    }
    // D for (L·nf, L·df) equals L^(2d−2)·D for (nf, df)
    let ints = crt.symmetric();
    let l = Rat::from_integer(lcm_den);
    let unscale = l.pow(-(2 * d as i32 - 2));
    Poly::new(ints.into_iter().map(|c| CycNum::from_rat(Rat::from_integer(c) * &unscale)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::RationalMap;

    #[test]
    fn small_resultants() {
        let a = Poly::from_ints(&[-1, 1]);
        let b = Poly::from_ints(&[1, 1]);
        assert_eq!(resultant(&a, &b), CycNum::from_int(2));
        let a = Poly::from_ints(&[1, 0, 1]);
        let b = Poly::from_ints(&[-1, 0, 1]);
        assert_eq!(resultant(&a, &b), CycNum::from_int(4));
    }

    #[test]
    fn discriminant_of_quadratic() {
        // b² − 4ac for x² + 3x + 1
        assert_eq!(discriminant(&Poly::from_ints(&[1, 3, 1])), CycNum::from_int(5));
    }

    #[test]
    fn x_squared_has_linear_discriminant() {
        let d = discriminant_in_t(&RationalMap::power(2));
        assert_eq!(d.deg(), 1);
        assert!(d.coeff(0).is_zero());
        assert!(!d.coeff(1).is_zero());
    }

    #[test]
    fn modular_and_exact_routes_agree() {
        let maps = [
            RationalMap::power(4),
            RationalMap::new(Poly::from_terms(&[(6, 1), (0, 1)]), Poly::from_terms(&[(3, 1)])).unwrap(),
            RationalMap::new(Poly::from_terms(&[(3, 2), (1, -1), (0, 5)]), Poly::from_ints(&[3, 0, 7])).unwrap(),
        ];
        for m in maps {
            assert_eq!(discriminant_in_t_modular(&m), discriminant_in_t_exact(&m), "{m}");
        }
    }
}
