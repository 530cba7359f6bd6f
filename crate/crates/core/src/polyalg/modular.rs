//! Word-sized prime-field arithmetic for the multimodular discriminant.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

pub fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

pub fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let (mut d, mut s) = (n - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Descending sequence of primes just below 2^62.
pub fn primes() -> impl Iterator<Item = u64> {
    let mut cand = (1u64 << 62) - 1;
    std::iter::from_fn(move || {
        while !is_prime(cand) {
            cand -= 2;
        }
        let p = cand;
        cand -= 2;
        Some(p)
    })
}

pub fn reduce(c: &BigInt, p: u64) -> u64 {
    c.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits")
}

fn trim(v: &mut Vec<u64>) {
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
    if v.len() == 1 && v[0] == 0 {
        v.clear();
    }
}

/// a mod b over F_p; b must be nonzero with invertible leading coefficient.
fn rem(mut a: Vec<u64>, b: &[u64], p: u64) -> Vec<u64> {
    let db = b.len() - 1;
    let inv = inv_mod(b[db], p);
    while a.len() > db {
        let top = a.len() - 1;
        let c = mul_mod(a[top], inv, p);
        if c != 0 {
            let shift = top - db;
            for j in 0..=db {
                a[shift + j] = sub_mod(a[shift + j], mul_mod(c, b[j], p), p);
            }
        }
        a.pop();
    }
    trim(&mut a);
    a
}

/// Resultant over F_p of polynomials with nonzero leading coefficients.
pub fn resultant(a: &[u64], b: &[u64], p: u64) -> u64 {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    trim(&mut a);
    trim(&mut b);
    if a.is_empty() || b.is_empty() {
        return 0;
    }
    let mut acc = 1u64;
    loop {
        let (da, db) = (a.len() - 1, b.len() - 1);
        if db == 0 {
            return mul_mod(acc, pow_mod(b[0], da as u64, p), p);
        }
        let r = rem(a.clone(), &b, p);
        if r.is_empty() {
            return 0;
        }
        let dr = r.len() - 1;
        if (da * db) % 2 == 1 {
            acc = sub_mod(0, acc, p);
        }
        acc = mul_mod(acc, pow_mod(b[db], (da - dr) as u64, p), p);
        a = b;
        b = r;
    }
}

/// Coefficients (lowest first) of the polynomial through (xs[i], ys[i]).
pub fn interpolate(xs: &[u64], ys: &[u64], p: u64) -> Vec<u64> {
    let n = xs.len();
    // Newton divided differences
    let mut dd = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = sub_mod(dd[i], dd[i - 1], p);
            let den = sub_mod(xs[i], xs[i - level], p);
            dd[i] = mul_mod(num, inv_mod(den, p), p);
        }
    }
    let mut coeffs = vec![0u64; n];
    for i in (0..n).rev() {
        // coeffs = coeffs·(x − xs[i]) + dd[i]
        let mut next = vec![0u64; n];
        for k in 0..n {
            if coeffs[k] == 0 {
                continue;
            }
            if k + 1 < n {
                next[k + 1] = add_mod(next[k + 1], coeffs[k], p);
            }
            next[k] = sub_mod(next[k], mul_mod(coeffs[k], xs[i], p), p);
        }
        next[0] = add_mod(next[0], dd[i], p);
        coeffs = next;
    }
    coeffs
}

/// Incremental Chinese remaindering of integer vectors with symmetric lifting.
pub struct Crt {
    modulus: BigInt,
    values: Vec<BigInt>,
}

impl Crt {
    pub fn new(len: usize) -> Crt {
        Crt { modulus: BigInt::from(1), values: vec![BigInt::zero(); len] }
    }

    pub fn modulus_bits(&self) -> u64 {
        self.modulus.bits()
    }

    pub fn add(&mut self, residues: &[u64], p: u64) {
        let bp = BigInt::from(p);
        let m_mod_p = reduce(&self.modulus, p);
        let m_inv = inv_mod(m_mod_p, p);
        for (v, &r) in self.values.iter_mut().zip(residues) {
            let cur = reduce(v, p);
            let t = mul_mod(sub_mod(r, cur, p), m_inv, p);
            *v += &self.modulus * BigInt::from(t);
        }
        self.modulus *= bp;
    }

    /// Values lifted to (−M/2, M/2].
    pub fn symmetric(&self) -> Vec<BigInt> {
        let half = &self.modulus / 2;
        self.values
            .iter()
            .map(|v| {
                let v = v.mod_floor(&self.modulus);
                if v > half {
                    v - &self.modulus
                } else {
                    v
                }
            })
            .collect()
    }
}

/// log2 of the Euclidean norm of an integer vector (0 for the zero vector).
pub fn log2_norm(v: &[BigInt]) -> f64 {
    let max_bits = v.iter().map(|c| c.bits()).max().unwrap_or(0);
    if max_bits == 0 {
        return 0.0;
    }
    let shift = max_bits.saturating_sub(60);
    let sum: f64 = v
        .iter()
        .map(|c| {
            let s = (c.abs() >> shift).to_f64().unwrap_or(0.0);
            s * s
        })
        .sum();
    0.5 * sum.log2() + shift as f64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_are_prime() {
        let ps: Vec<u64> = primes().take(3).collect();
        assert!(ps.iter().all(|&p| is_prime(p) && p < (1 << 62)));
        assert!(ps[0] > ps[1] && ps[1] > ps[2]);
        assert!(!is_prime(561));
        assert!(is_prime(1_000_000_007));
    }

    #[test]
    fn small_resultants() {
        let p = 1_000_000_007;
        // Res(x − 1, x + 1) = 2
        assert_eq!(resultant(&[p - 1, 1], &[1, 1], p), 2);
        // Res(x² + 1, x² − 1) = 4
        assert_eq!(resultant(&[1, 0, 1], &[p - 1, 0, 1], p), 4);
    }

    #[test]
    fn interpolation_recovers_cubic() {
        let p = 1_000_000_007;
        let f = |x: u64| (x * x * x + 2 * x + 5) % p;
        let xs = [0, 1, 2, 3];
        let ys: Vec<u64> = xs.iter().map(|&x| f(x)).collect();
        assert_eq!(interpolate(&xs, &ys, p), vec![5, 2, 0, 1]);
    }

    #[test]
    fn crt_lifts_negative_values() {
        let mut crt = Crt::new(2);
        for p in primes().take(2) {
            crt.add(&[reduce(&BigInt::from(-12345), p), reduce(&BigInt::from(7), p)], p);
        }
        assert_eq!(crt.symmetric(), vec![BigInt::from(-12345), BigInt::from(7)]);
    }
}
