//! Kronecker symbols and class numbers of imaginary quadratic orders.
//!
//! Class numbers are counted from reduced primitive positive-definite binary
//! quadratic forms; nothing is looked up from tables.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{domain, Result};
use crate::util::{gcd, isqrt};

/// Exact rational number.
pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: impl Into<BigInt>) -> Rat {
    Rat::from_integer(n.into())
}

/// A negative discriminant `d ≡ 0, 1 (mod 4)`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct Discriminant(i64);

impl Discriminant {
    pub fn new(d: i64) -> Result<Self> {
        if d >= 0 {
            return Err(domain(format!("discriminant {d} is not negative")));
        }
        if !matches!(d.rem_euclid(4), 0 | 1) {
            return Err(domain(format!("discriminant {d} is not 0 or 1 mod 4")));
        }
        Ok(Discriminant(d))
    }

    pub fn get(self) -> i64 {
        self.0
    }
}

/// Jacobi symbol `(a/m)` for odd positive `m`.
fn jacobi(a: i64, m: u64) -> i8 {
    debug_assert!(m % 2 == 1);
    let mut a = a.rem_euclid(m as i64) as u64;
    let mut m = m;
    let mut result = 1i8;
    while a != 0 {
        while a.is_multiple_of(2) {
            a /= 2;
            if matches!(m % 8, 3 | 5) {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut m);
        if a % 4 == 3 && m % 4 == 3 {
            result = -result;
        }
        a %= m;
    }
    if m == 1 {
        result
    } else {
        0
    }
}

/// The Kronecker symbol `(delta / n)` for `n ≥ 1`.
///
/// Legendre symbol at odd primes, completely multiplicative in `n`, and at
/// `n = 2`: `0` for even `delta`, `+1` for `delta ≡ ±1 (mod 8)`, `-1` for
/// `delta ≡ ±3 (mod 8)`.
pub fn kronecker(delta: i64, n: u64) -> Result<i8> {
    if n == 0 {
        return Err(domain("Kronecker symbol needs n >= 1"));
    }
    let twos = n.trailing_zeros();
    let odd = n >> twos;
    let two_part = if twos == 0 {
        1
    } else if delta % 2 == 0 {
        0
    } else {
        let chi2 = if matches!(delta.rem_euclid(8), 1 | 7) { 1 } else { -1 };
        if twos.is_multiple_of(2) {
            1
        } else {
            chi2
        }
    };
    Ok(two_part * jacobi(delta, odd))
}

fn class_cache() -> &'static RwLock<HashMap<i64, u64>> {
    static CACHE: OnceLock<RwLock<HashMap<i64, u64>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Counts reduced primitive forms `(a, b, c)` of discriminant `d`:
/// `|b| ≤ a ≤ c`, `gcd(a, b, c) = 1`, and `b ≥ 0` whenever `|b| = a` or
/// `a = c`.
pub(crate) fn count_reduced_forms(d: i64) -> u64 {
    let n = d.unsigned_abs();
    let bmax = isqrt(n / 3) as i64;
    let mut count = 0;
    for b in -bmax..=bmax {
        if (b - d).rem_euclid(2) != 0 {
            continue;
        }
        let ac = (b * b - d) / 4;
        let mut a = b.abs().max(1);
        while a * a <= ac {
            if ac % a == 0 {
                let c = ac / a;
                let boundary = b.abs() == a || a == c;
                if !(boundary && b < 0)
                    && gcd(gcd(a as u64, b.unsigned_abs()), c as u64) == 1
                {
                    count += 1;
                }
            }
            a += 1;
        }
    }
    count
}

/// Class number `h(d)` of the order of discriminant `d`.
pub fn class_number(d: Discriminant) -> u64 {
    let key = d.get();
    if let Some(&h) = class_cache().read().unwrap().get(&key) {
        return h;
    }
    let h = count_reduced_forms(key);
    class_cache().write().unwrap().insert(key, h);
    h
}

/// `h(d)` weighted by `1/3` at `d = -3` and `1/2` at `d = -4`.
pub fn h_w(d: Discriminant) -> Rat {
    let h = class_number(d) as i64;
    match d.get() {
        -3 => rat(h, 3),
        -4 => rat(h, 2),
        _ => rat(h, 1),
    }
}

/// The Hurwitz-Kronecker class number: `Σ h_w(Δ/f²)` over `f ≥ 1` with
/// `f² | Δ` and `Δ/f² ≡ 0, 1 (mod 4)`. Zero when no such `f` exists.
pub fn hurwitz_hw(delta: i64) -> Result<Rat> {
    if delta >= 0 {
        return Err(domain(format!("Hurwitz class number needs Δ < 0, got {delta}")));
    }
    let n = delta.unsigned_abs();
    let mut total = rat(0, 1);
    let mut f = 1u64;
    while f * f <= n {
        if n.is_multiple_of(f * f) {
            let d = delta / (f * f) as i64;
            if let Ok(disc) = Discriminant::new(d) {
                total += h_w(disc);
            }
        }
        f += 1;
    }
    Ok(total)
}
