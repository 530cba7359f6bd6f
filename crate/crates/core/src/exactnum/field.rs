//! Cyclotomic field contexts: the modulus Φ_m and a table of reduced powers of ζ_m.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Q(ζ_m) for a canonical conductor m (never ≡ 2 mod 4).
#[derive(Debug)]
pub struct CycField {
    conductor: u32,
    degree: usize,
    /// Φ_m, lowest degree first, monic.
    modulus: Vec<BigInt>,
    /// `powers[e]` is ζ_m^e written in the power basis, for 0 ≤ e < m.
    powers: Vec<Vec<BigInt>>,
}

impl CycField {
    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// φ(m), the dimension over Q.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> &[BigInt] {
        &self.modulus
    }

    /// ζ_m^e in the power basis (e taken mod m).
    pub fn power(&self, e: u64) -> &[BigInt] {
        &self.powers[(e % self.conductor as u64) as usize]
    }

    fn build(m: u32) -> CycField {
        let modulus = cyclotomic_polynomial(m);
        let degree = modulus.len() - 1;
        let mut powers = Vec::with_capacity(m as usize);
        let mut cur = vec![BigInt::zero(); degree];
        cur[0] = BigInt::one();
        for _ in 0..m {
            powers.push(cur.clone());
            // multiply by x and reduce with the monic modulus
            let top = cur[degree - 1].clone();
            for j in (1..degree).rev() {
                cur[j] = cur[j - 1].clone();
            }
            cur[0] = BigInt::zero();
            if !top.is_zero() {
                for j in 0..degree {
                    cur[j] -= &top * &modulus[j];
                }
            }
        }
        CycField {
            conductor: m,
            degree,
            modulus,
            powers,
        }
    }
}

/// Q(ζ_{2k}) = Q(ζ_k) for odd k; fields are keyed by the smaller conductor.
pub fn canonical_conductor(m: u32) -> u32 {
    assert!(m > 0, "conductor must be positive");
    if m % 4 == 2 {
        m / 2
    } else {
        m
    }
}

static FIELDS: OnceLock<Mutex<HashMap<u32, Arc<CycField>>>> = OnceLock::new();

/// Shared context for Q(ζ_m). Contexts are memoized and immutable.
pub fn field(m: u32) -> Arc<CycField> {
    let m = canonical_conductor(m);
    let cache = FIELDS.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(f) = cache.lock().expect("field cache poisoned").get(&m) {
        return Arc::clone(f);
    }
    let built = Arc::new(CycField::build(m));
    let mut guard = cache.lock().expect("field cache poisoned");
    Arc::clone(guard.entry(m).or_insert(built))
}

/// Φ_m with integer coefficients, lowest degree first.
pub fn cyclotomic_polynomial(m: u32) -> Vec<BigInt> {
    // x^m - 1 divided by Φ_d for every proper divisor d
    let mut num = vec![BigInt::zero(); m as usize + 1];
    num[0] = -BigInt::one();
    num[m as usize] = BigInt::one();
    for d in 1..m {
        if m.is_multiple_of(d) {
            num = exact_monic_div(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

fn exact_monic_div(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let mut rem = a.to_vec();
    let dq = a.len() - 1 - db;
    let mut q = vec![BigInt::zero(); dq + 1];
    for k in (0..=dq).rev() {
        let c = rem[k + db].clone();
        if c.is_zero() {
            continue;
        }
        for j in 0..=db {
            rem[k + j] -= &c * &b[j];
        }
        q[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    q
}

pub fn lcm(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

pub fn euler_phi(mut n: u32) -> u32 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}
