//! Elements of cyclotomic fields with exact rational coordinates.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::field::{canonical_conductor, field, lcm, CycField};
use super::{solve_rational, ExactError, Rat};

/// An element of Q(ζ_m), stored as its residue modulo Φ_m in the power basis.
#[derive(Clone)]
pub struct CycNum {
    field: Arc<CycField>,
    coeffs: Vec<Rat>,
}

impl CycNum {
    fn from_parts(field: Arc<CycField>, coeffs: Vec<Rat>) -> CycNum {
        debug_assert_eq!(coeffs.len(), field.degree());
        CycNum { field, coeffs }
    }

    /// Builds an element of Q(ζ_m) from power-basis coordinates (missing entries are zero).
    pub fn from_coeffs(m: u32, coeffs: &[Rat]) -> CycNum {
        let mut out = CycNum::zero_in(&field(m));
        for (j, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                out += &(&CycNum::zeta(m, j as i64) * c);
            }
        }
        out
    }

    fn zero_in(f: &Arc<CycField>) -> CycNum {
        CycNum::from_parts(Arc::clone(f), vec![Rat::zero(); f.degree()])
    }

    pub fn zero() -> CycNum {
        CycNum::from_rat(Rat::zero())
    }

    pub fn one() -> CycNum {
        CycNum::from_rat(Rat::one())
    }

    pub fn from_rat(q: Rat) -> CycNum {
        CycNum::from_parts(field(1), vec![q])
    }

    pub fn from_int(n: i64) -> CycNum {
        CycNum::from_rat(Rat::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> CycNum {
        CycNum::from_rat(Rat::from_integer(n))
    }

    pub fn from_frac(num: i64, den: i64) -> CycNum {
        CycNum::from_rat(Rat::new(BigInt::from(num), BigInt::from(den)))
    }

    /// ζ_m^k with ζ_m = exp(2πi/m).
    pub fn zeta(m: u32, k: i64) -> CycNum {
        assert!(m > 0, "conductor must be positive");
        let k = k.rem_euclid(m as i64) as u64;
        if m % 4 == 2 {
            // ζ_{2h} = -ζ_h^{(h+1)/2} for odd h
            let h = m / 2;
            let base = -CycNum::zeta(h, (h as i64 + 1) / 2);
            return base.pow(k);
        }
        let f = field(m);
        let coeffs = f.power(k).iter().map(|c| Rat::from_integer(c.clone())).collect();
        CycNum::from_parts(f, coeffs)
    }

    /// i = ζ_4.
    pub fn i() -> CycNum {
        CycNum::zeta(4, 1)
    }

    /// √3 = -i(ζ_3 - ζ_3²).
    pub fn sqrt3() -> CycNum {
        -(CycNum::i() * (CycNum::zeta(3, 1) - CycNum::zeta(3, 2)))
    }

    /// √5 = 1 + 2(ζ_5 + ζ_5⁴).
    pub fn sqrt5() -> CycNum {
        CycNum::one() + CycNum::from_int(2) * (CycNum::zeta(5, 1) + CycNum::zeta(5, 4))
    }

    /// ω = (-1 + √5)/2, a root of x² + x - 1.
    pub fn omega() -> CycNum {
        CycNum::zeta(5, 1) + CycNum::zeta(5, 4)
    }

    /// The canonical conductor of the field this value is stored in.
    pub fn conductor(&self) -> u32 {
        self.field.conductor()
    }

    /// Power-basis coordinates modulo Φ_m.
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.is_rational() && self.coeffs[0].is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn as_rat(&self) -> Option<&Rat> {
        self.is_rational().then(|| &self.coeffs[0])
    }

    /// Same element written in Q(ζ_target). Fails unless the conductor divides the target.
    pub fn embed(&self, target: u32) -> Result<CycNum, ExactError> {
        let target = canonical_conductor(target);
        let m = self.conductor();
        if !target.is_multiple_of(m) {
            return Err(ExactError::BadEmbedding { from: m, to: target });
        }
        if target == m {
            return Ok(self.clone());
        }
        let f = field(target);
        if self.is_rational() {
            let mut coeffs = vec![Rat::zero(); f.degree()];
            coeffs[0] = self.coeffs[0].clone();
            return Ok(CycNum::from_parts(f, coeffs));
        }
        let step = (target / m) as u64;
        let mut out = vec![Rat::zero(); f.degree()];
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            add_scaled(&mut out, f.power(j as u64 * step), c);
        }
        Ok(CycNum::from_parts(f, out))
    }

    /// Rewrites this value in the subfield Q(ζ_m) when it lies there.
    pub fn restrict(&self, m: u32) -> Option<CycNum> {
        let m = canonical_conductor(m);
        let big = self.conductor();
        if m == big {
            return Some(self.clone());
        }
        if !big.is_multiple_of(m) {
            // go through the common field
            let l = lcm(big, m);
            return self.embed(l).ok()?.restrict(m);
        }
        if self.is_rational() {
            return CycNum::from_rat(self.coeffs[0].clone()).embed(m).ok();
        }
        let sub = field(m);
        let step = (big / m) as u64;
        let columns: Vec<Vec<Rat>> = (0..sub.degree() as u64)
            .map(|j| self.field.power(j * step).iter().map(|c| Rat::from_integer(c.clone())).collect())
            .collect();
        let sol = solve_rational(&columns, &self.coeffs)?;
        Some(CycNum::from_parts(sub, sol))
    }

    /// The same element in the smallest cyclotomic field containing it.
    pub fn minimal(&self) -> CycNum {
        if self.is_rational() {
            return CycNum::from_rat(self.coeffs[0].clone());
        }
        let big = self.conductor();
        for d in divisors(big) {
            if d == big || canonical_conductor(d) != d {
                continue;
            }
            if self.fixed_by_subgroup(d) {
                if let Some(r) = self.restrict(d) {
                    return r;
                }
            }
        }
        self.clone()
    }

    /// True when σ_k fixes self for every unit k ≡ 1 (mod d).
    fn fixed_by_subgroup(&self, d: u32) -> bool {
        let m = self.conductor();
        (1..m)
            .filter(|&k| k % d == 1 % d && k.gcd(&m) == 1)
            .all(|k| self.galois(k as i64) == *self)
    }

    /// Applies σ_k : ζ_m ↦ ζ_m^k. Requires gcd(k, m) = 1.
    pub fn galois(&self, k: i64) -> CycNum {
        let m = self.conductor();
        let k = k.rem_euclid(m as i64) as u64;
        assert_eq!(k.gcd(&(m as u64)), 1, "σ_k needs k coprime to the conductor");
        if self.is_rational() || k == 1 {
            return self.clone();
        }
        let mut out = vec![Rat::zero(); self.field.degree()];
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                add_scaled(&mut out, self.field.power(j as u64 * k), c);
            }
        }
        CycNum::from_parts(Arc::clone(&self.field), out)
    }

    /// Complex conjugation, i.e. σ_{-1}.
    pub fn conj(&self) -> CycNum {
        self.galois(-1)
    }

    /// Product of all Galois conjugates; a rational number.
    pub fn norm(&self) -> Rat {
        let m = self.conductor();
        let mut acc = self.clone();
        for k in 2..m {
            if k.gcd(&m) == 1 {
                acc = &acc * &self.galois(k as i64);
            }
        }
        debug_assert!(acc.is_rational());
        acc.coeffs[0].clone()
    }

    pub fn inv(&self) -> Result<CycNum, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        if let Some(q) = self.as_rat() {
            return Ok(CycNum::from_rat(q.recip()));
        }
        let a = trim(self.coeffs.clone());
        let modulus: Vec<Rat> = self.field.modulus().iter().map(|c| Rat::from_integer(c.clone())).collect();
        let (g, s) = ext_gcd(&a, &modulus);
        // g is a nonzero constant because Φ_m is irreducible
        debug_assert_eq!(g.len(), 1);
        let scale = g[0].recip();
        let mut coeffs = vec![Rat::zero(); self.field.degree()];
        for (j, c) in s.into_iter().enumerate() {
            coeffs[j] = c * &scale;
        }
        Ok(CycNum::from_parts(Arc::clone(&self.field), coeffs))
    }

    pub fn checked_div(&self, other: &CycNum) -> Result<CycNum, ExactError> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, mut e: u64) -> CycNum {
        let mut base = self.clone();
        let mut acc = CycNum::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn pow_i(&self, e: i64) -> Result<CycNum, ExactError> {
        if e >= 0 {
            Ok(self.pow(e as u64))
        } else {
            Ok(self.inv()?.pow(e.unsigned_abs()))
        }
    }

    pub fn scale(&self, q: &Rat) -> CycNum {
        if q.is_zero() {
            return CycNum::zero();
        }
        CycNum::from_parts(Arc::clone(&self.field), self.coeffs.iter().map(|c| c * q).collect())
    }

    /// Positive square root of a rational (√-q = i√q), if the needed conductor divides `within`.
    pub fn sqrt_rat_within(q: &Rat, within: u32) -> Option<CycNum> {
        let r = CycNum::sqrt_rat(q);
        if within.is_multiple_of(r.conductor()) {
            Some(r)
        } else {
            None
        }
    }

    /// Square root of a rational number via Gauss sums; always exists in some Q(ζ_m).
    pub fn sqrt_rat(q: &Rat) -> CycNum {
        if q.is_zero() {
            return CycNum::zero();
        }
        let negative = q.is_negative();
        // q = num/den = (num·den)/den²
        let prod = q.numer().abs() * q.denom();
        let (square, free) = split_square(&prod);
        let mut root = CycNum::from_rat(Rat::new(square, q.denom().clone()));
        for p in small_prime_factors(&free) {
            root = &root * &sqrt_prime(p);
        }
        if negative {
            root = &root * &CycNum::i();
        }
        root
    }

    /// Common-denominator integer coordinates: (den, integer coefficients).
    pub fn integer_coords(&self) -> (BigInt, Vec<BigInt>) {
        let den = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints = self.coeffs.iter().map(|c| (c * Rat::from_integer(den.clone())).to_integer()).collect();
        (den, ints)
    }

    fn same_field(a: &CycNum, b: &CycNum) -> (CycNum, CycNum) {
        let l = lcm(a.conductor(), b.conductor());
        (a.embed(l).expect("lcm embedding"), b.embed(l).expect("lcm embedding"))
    }
}

fn add_scaled(out: &mut [Rat], v: &[BigInt], c: &Rat) {
    for (o, x) in out.iter_mut().zip(v) {
        if x.is_zero() {
            continue;
        }
        if x.is_one() {
            *o += c;
        } else if *x == -BigInt::one() {
            *o -= c;
        } else {
            *o += c * Rat::from_integer(x.clone());
        }
    }
}

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// Writes n = s²·f with f squarefree; returns (s, f). Trial division, fine for the sizes used here.
fn split_square(n: &BigInt) -> (BigInt, BigInt) {
    let mut rest = n.clone();
    let mut square = BigInt::one();
    let mut free = BigInt::one();
    let mut p = BigInt::from(2);
    while &p * &p <= rest {
        let mut e = 0u32;
        while (&rest % &p).is_zero() {
            rest /= &p;
            e += 1;
        }
        if e > 0 {
            square *= p.pow(e / 2);
            if e % 2 == 1 {
                free *= &p;
            }
        }
        p += 1;
    }
    free *= rest;
    (square, free)
}

fn small_prime_factors(n: &BigInt) -> Vec<u32> {
    let mut out = Vec::new();
    let mut rest = n.clone();
    let mut p = 2u32;
    while rest > BigInt::one() {
        let bp = BigInt::from(p);
        if &bp * &bp > rest {
            out.push(rest.to_u32().expect("square-free part too large for Gauss sums"));
            break;
        }
        if (&rest % &bp).is_zero() {
            out.push(p);
            rest /= &bp;
        }
        p += 1;
    }
    out
}

/// √p for a prime p, as a positive real element of Q(ζ_8) or Q(ζ_4p).
fn sqrt_prime(p: u32) -> CycNum {
    if p == 2 {
        return CycNum::zeta(8, 1) + CycNum::zeta(8, 7);
    }
    // Gauss sum Σ (k/p) ζ_p^k equals √p or i√p
    let mut g = CycNum::zero();
    for k in 1..p {
        let z = CycNum::zeta(p, k as i64);
        if legendre(k, p) == 1 {
            g += &z;
        } else {
            g -= &z;
        }
    }
    if p % 4 == 1 {
        g
    } else {
        -(g * CycNum::i())
    }
}

fn legendre(a: u32, p: u32) -> i32 {
    let e = (p - 1) / 2;
    let mut acc = 1u64;
    let mut base = (a % p) as u64;
    let mut k = e;
    while k > 0 {
        if k & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        k >>= 1;
    }
    if acc == 1 {
        1
    } else {
        -1
    }
}

fn trim(mut v: Vec<Rat>) -> Vec<Rat> {
    while v.len() > 1 && v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn qdivrem(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let db = b.len() - 1;
    let lead_inv = b[db].recip();
    let mut rem = a.to_vec();
    if a.len() < b.len() {
        return (vec![Rat::zero()], rem);
    }
    let dq = a.len() - b.len();
    let mut q = vec![Rat::zero(); dq + 1];
    for k in (0..=dq).rev() {
        let c = &rem[k + db] * &lead_inv;
        if c.is_zero() {
            continue;
        }
        for j in 0..=db {
            let t = &c * &b[j];
            rem[k + j] -= t;
        }
        q[k] = c;
    }
    (trim(q), trim(rem))
}

fn qmul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn qsub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let n = a.len().max(b.len());
    let mut out = vec![Rat::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(out)
}

fn is_zero_poly(a: &[Rat]) -> bool {
    a.iter().all(Zero::is_zero)
}

/// Extended Euclid over Q[x]: returns (g, s) with s·a ≡ g (mod b).
fn ext_gcd(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let (mut r0, mut r1) = (b.to_vec(), a.to_vec());
    let (mut s0, mut s1) = (vec![Rat::zero()], vec![Rat::one()]);
    while !is_zero_poly(&r1) {
        let (q, r) = qdivrem(&r0, &r1);
        let s2 = qsub(&s0, &qmul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    (r0, s0)
}

impl PartialEq for CycNum {
    fn eq(&self, other: &CycNum) -> bool {
        if self.conductor() == other.conductor() {
            return self.coeffs == other.coeffs;
        }
        if self.is_rational() && other.is_rational() {
            return self.coeffs[0] == other.coeffs[0];
        }
        if self.is_rational() != other.is_rational() {
            return false;
        }
        let (a, b) = CycNum::same_field(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycNum {}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycNum({})", self)
    }
}

impl Default for CycNum {
    fn default() -> Self {
        CycNum::zero()
    }
}

impl From<i64> for CycNum {
    fn from(n: i64) -> Self {
        CycNum::from_int(n)
    }
}

impl From<Rat> for CycNum {
    fn from(q: Rat) -> Self {
        CycNum::from_rat(q)
    }
}

fn add_impl(a: &CycNum, b: &CycNum, negate_b: bool) -> CycNum {
    if a.conductor() == b.conductor() {
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(x, y)| if negate_b { x - y } else { x + y })
            .collect();
        return CycNum::from_parts(Arc::clone(&a.field), coeffs);
    }
    if b.is_rational() {
        let mut out = a.clone();
        if negate_b {
            out.coeffs[0] -= &b.coeffs[0];
        } else {
            out.coeffs[0] += &b.coeffs[0];
        }
        return out;
    }
    if a.is_rational() {
        let mut out = if negate_b { -b } else { b.clone() };
        out.coeffs[0] += &a.coeffs[0];
        return out;
    }
    let (x, y) = CycNum::same_field(a, b);
    add_impl(&x, &y, negate_b)
}

fn mul_impl(a: &CycNum, b: &CycNum) -> CycNum {
    if b.is_rational() {
        return a.scale(&b.coeffs[0]);
    }
    if a.is_rational() {
        return b.scale(&a.coeffs[0]);
    }
    if a.conductor() != b.conductor() {
        let (x, y) = CycNum::same_field(a, b);
        return mul_impl(&x, &y);
    }
    let f = &a.field;
    let n = f.degree();
    let mut acc = vec![Rat::zero(); 2 * n - 1];
    for (i, x) in a.coeffs.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.coeffs.iter().enumerate() {
            if !y.is_zero() {
                acc[i + j] += x * y;
            }
        }
    }
    let mut out: Vec<Rat> = acc.drain(..n).collect();
    for (k, c) in acc.iter().enumerate() {
        if !c.is_zero() {
            add_scaled(&mut out, f.power((k + n) as u64), c);
        }
    }
    CycNum::from_parts(Arc::clone(f), out)
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum::from_parts(Arc::clone(&self.field), self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(mut self) -> CycNum {
        for c in self.coeffs.iter_mut() {
            *c = -&*c;
        }
        self
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&CycNum> for &CycNum {
            type Output = CycNum;
            fn $method(self, rhs: &CycNum) -> CycNum {
                $body(self, rhs)
            }
        }
        impl $trait<CycNum> for CycNum {
            type Output = CycNum;
            fn $method(self, rhs: CycNum) -> CycNum {
                $body(&self, &rhs)
            }
        }
        impl $trait<&CycNum> for CycNum {
            type Output = CycNum;
            fn $method(self, rhs: &CycNum) -> CycNum {
                $body(&self, rhs)
            }
        }
        impl $trait<CycNum> for &CycNum {
            type Output = CycNum;
            fn $method(self, rhs: CycNum) -> CycNum {
                $body(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| add_impl(a, b, false));
forward_binop!(Sub, sub, |a, b| add_impl(a, b, true));
forward_binop!(Mul, mul, mul_impl);
forward_binop!(Div, div, |a: &CycNum, b: &CycNum| a
    .checked_div(b)
    .expect("division by zero in cyclotomic field"));

impl Mul<&Rat> for &CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &Rat) -> CycNum {
        self.scale(rhs)
    }
}

impl AddAssign<&CycNum> for CycNum {
    fn add_assign(&mut self, rhs: &CycNum) {
        if self.conductor() == rhs.conductor() {
            for (x, y) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                *x += y;
            }
        } else {
            *self = add_impl(self, rhs, false);
        }
    }
}

impl SubAssign<&CycNum> for CycNum {
    fn sub_assign(&mut self, rhs: &CycNum) {
        if self.conductor() == rhs.conductor() {
            for (x, y) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                *x -= y;
            }
        } else {
            *self = add_impl(self, rhs, true);
        }
    }
}

impl MulAssign<&CycNum> for CycNum {
    fn mul_assign(&mut self, rhs: &CycNum) {
        *self = mul_impl(self, rhs);
    }
}

impl Zero for CycNum {
    fn zero() -> Self {
        CycNum::zero()
    }
    fn is_zero(&self) -> bool {
        CycNum::is_zero(self)
    }
}

impl One for CycNum {
    fn one() -> Self {
        CycNum::one()
    }
}

impl std::iter::Sum for CycNum {
    fn sum<I: Iterator<Item = CycNum>>(iter: I) -> CycNum {
        iter.fold(CycNum::zero(), |acc, x| acc + x)
    }
}

impl std::iter::Product for CycNum {
    fn product<I: Iterator<Item = CycNum>>(iter: I) -> CycNum {
        iter.fold(CycNum::one(), |acc, x| acc * x)
    }
}
