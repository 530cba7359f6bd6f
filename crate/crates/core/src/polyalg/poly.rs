//! Dense univariate polynomials with cyclotomic coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::PolyError;
use crate::exactnum::{lcm, CycNum, Rat};

/// Coefficients lowest degree first; the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<CycNum>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<CycNum>) -> Poly {
        while coeffs.last().is_some_and(CycNum::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(CycNum::one())
    }

    pub fn x() -> Poly {
        Poly::monomial(CycNum::one(), 1)
    }

    pub fn constant(c: CycNum) -> Poly {
        Poly::new(vec![c])
    }

    pub fn monomial(c: CycNum, k: usize) -> Poly {
        let mut coeffs = vec![CycNum::zero(); k];
        coeffs.push(c);
        Poly::new(coeffs)
    }

    /// Integer coefficients, lowest degree first.
    pub fn from_ints(v: &[i64]) -> Poly {
        Poly::new(v.iter().map(|&c| CycNum::from_int(c)).collect())
    }

    /// Builds Σ c·x^k from (k, c) pairs.
    pub fn from_terms(terms: &[(usize, i64)]) -> Poly {
        let deg = terms.iter().map(|t| t.0).max().unwrap_or(0);
        let mut coeffs = vec![CycNum::zero(); deg + 1];
        for &(k, c) in terms {
            coeffs[k] += &CycNum::from_int(c);
        }
        Poly::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0; for bookkeeping where that is harmless.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[CycNum] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> CycNum {
        self.coeffs.get(k).cloned().unwrap_or_else(CycNum::zero)
    }

    /// Leading coefficient (zero for the zero polynomial).
    pub fn lc(&self) -> CycNum {
        self.coeffs.last().cloned().unwrap_or_else(CycNum::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_monic(&self) -> bool {
        self.lc().is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().all(CycNum::is_rational)
    }

    /// lcm of the coefficient conductors.
    pub fn conductor(&self) -> u32 {
        self.coeffs.iter().fold(1, |acc, c| lcm(acc, c.conductor()))
    }

    /// Smallest exponent carrying a nonzero coefficient.
    pub fn low_degree(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0)
    }

    /// Exponents with nonzero coefficients.
    pub fn support(&self) -> Vec<usize> {
        (0..self.coeffs.len()).filter(|&k| !self.coeffs[k].is_zero()).collect()
    }

    pub fn scale(&self, c: &CycNum) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let inv = self.lc().inv().expect("nonzero leading coefficient");
        self.scale(&inv)
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &CycNum::from_int(k as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &CycNum) -> CycNum {
        let mut acc = CycNum::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
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

    /// self(inner(x)).
    pub fn compose(&self, inner: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Poly::constant(c.clone());
        }
        acc
    }

    /// self(x^s).
    pub fn inflate(&self, s: usize) -> Poly {
        let mut coeffs = vec![CycNum::zero(); self.deg() * s + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[k * s] = c.clone();
        }
        Poly::new(coeffs)
    }

    /// Inverse of `inflate`: keeps every s-th coefficient (caller checks the others vanish).
    pub fn deflate(&self, s: usize) -> Poly {
        Poly::new(self.coeffs.iter().step_by(s).cloned().collect())
    }

    /// Σ c_k (ax+b)^k (cx+d)^(n−k): the degree-n form evaluated at a Möbius substitution.
    pub fn moebius_form(&self, n: usize, m: [&CycNum; 4]) -> Poly {
        assert!(self.deg() <= n || self.is_zero(), "form degree below polynomial degree");
        let num = Poly::new(vec![m[1].clone(), m[0].clone()]);
        let den = Poly::new(vec![m[3].clone(), m[2].clone()]);
        let mut den_pows = vec![Poly::one()];
        for _ in 0..n {
            let next = den_pows.last().unwrap() * &den;
            den_pows.push(next);
        }
        let mut acc = Poly::zero();
        for k in (0..=n).rev() {
            acc = &acc * &num;
            let c = self.coeff(k);
            if !c.is_zero() {
                acc = &acc + &den_pows[n - k].scale(&c);
            }
        }
        acc
    }

    pub fn divrem(&self, b: &Poly) -> Result<(Poly, Poly), PolyError> {
        if b.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let db = b.deg();
        if self.is_zero() || self.deg() < db {
            return Ok((Poly::zero(), self.clone()));
        }
        let lead_inv = b.lc().inv().expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        let dq = self.deg() - db;
        let mut q = vec![CycNum::zero(); dq + 1];
        for k in (0..=dq).rev() {
            let c = &rem[k + db] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for j in 0..db {
                let t = &c * &b.coeffs[j];
                rem[k + j] -= &t;
            }
            rem[k + db] = CycNum::zero();
            q[k] = c;
        }
        rem.truncate(db);
        Ok((Poly::new(q), Poly::new(rem)))
    }

    /// Quotient when b divides self exactly.
    pub fn exact_div(&self, b: &Poly) -> Option<Poly> {
        let (q, r) = self.divrem(b).ok()?;
        r.is_zero().then_some(q)
    }

    pub fn rem(&self, b: &Poly) -> Result<Poly, PolyError> {
        Ok(self.divrem(b)?.1)
    }

    /// Monic gcd (zero only when both inputs are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = std::mem::replace(&mut b, r.monic());
        }
        a.monic()
    }

    pub fn galois(&self, k: i64) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c.galois(k)).collect())
    }

    /// Clears denominators and content: (scale, primitive integer coefficients) with self = ints/scale.
    /// Only meaningful for rational polynomials.
    pub fn to_integer_poly(&self) -> Option<(Rat, Vec<BigInt>)> {
        let rats: Option<Vec<&Rat>> = self.coeffs.iter().map(CycNum::as_rat).collect();
        let rats = rats?;
        let den = rats.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let ints: Vec<BigInt> = rats.iter().map(|q| (*q * Rat::from_integer(den.clone())).to_integer()).collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if content.is_zero() {
            return Some((Rat::one(), ints));
        }
        let ints = ints.into_iter().map(|c| c / &content).collect();
        Some((Rat::new(den, content), ints))
    }

    pub fn from_bigints(v: &[BigInt]) -> Poly {
        Poly::new(v.iter().map(|c| CycNum::from_bigint(c.clone())).collect())
    }

    /// Renders as `c*x^k + …` in descending degree with the given variable name.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let terms = c.terms();
            let (negative, body) = if terms.len() == 1 {
                (terms[0].negative, terms[0].abs_text())
            } else {
                (false, format!("({})", c))
            };
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            let text = match (body.as_str(), mono.is_empty()) {
                (_, true) => body.clone(),
                ("1", false) => mono.clone(),
                (_, false) => format!("{body}*{mono}"),
            };
            match (out.is_empty(), negative) {
                (true, true) => out.push('-'),
                (true, false) => {}
                (false, true) => out.push_str(" - "),
                (false, false) => out.push_str(" + "),
            }
            out.push_str(&text);
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("x"))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self)
    }
}

impl std::str::FromStr for Poly {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Poly, PolyError> {
        crate::text::parse_poly(s, "x").map_err(PolyError::Parse)
    }
}

fn add_polys(a: &Poly, b: &Poly, negate: bool) -> Poly {
    let n = a.coeffs.len().max(b.coeffs.len());
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let x = a.coeffs.get(k);
        let y = b.coeffs.get(k);
        out.push(match (x, y, negate) {
            (Some(x), Some(y), false) => x + y,
            (Some(x), Some(y), true) => x - y,
            (Some(x), None, _) => x.clone(),
            (None, Some(y), false) => y.clone(),
            (None, Some(y), true) => -y,
            (None, None, _) => CycNum::zero(),
        });
    }
    Poly::new(out)
}

fn mul_polys(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() || b.is_zero() {
        return Poly::zero();
    }
    let mut out = vec![CycNum::zero(); a.coeffs.len() + b.coeffs.len() - 1];
    for (i, x) in a.coeffs.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.coeffs.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += &(x * y);
            }
        }
    }
    Poly::new(out)
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        add_polys(self, rhs, false)
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        add_polys(self, rhs, true)
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        mul_polys(self, rhs)
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        add_polys(&self, &rhs, false)
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        add_polys(&self, &rhs, true)
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        mul_polys(&self, &rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl std::iter::Product for Poly {
    fn product<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::one(), |acc, p| &acc * &p)
    }
}
