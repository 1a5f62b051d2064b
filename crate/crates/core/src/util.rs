//! Small integer helpers shared across modules.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{domain, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Splits an odd prime power `q` into `(p, v)` with `q = p^v`.
pub fn odd_prime_power(q: u64) -> Result<(u64, u32)> {
    if q < 3 || q.is_multiple_of(2) {
        return Err(domain(format!("{q} is not an odd prime power")));
    }
    let mut p = 3;
    while p * p <= q && !q.is_multiple_of(p) {
        p += 2;
    }
    if !q.is_multiple_of(p) {
        p = q;
    }
    let mut m = q;
    let mut v = 0;
    while m.is_multiple_of(p) {
        m /= p;
        v += 1;
    }
    if m != 1 {
        return Err(domain(format!("{q} is not an odd prime power")));
    }
    Ok((p, v))
}

/// All odd prime powers in `[3, max]`.
pub fn odd_prime_powers_upto(max: u64) -> Vec<u64> {
    (3..=max).filter(|&q| odd_prime_power(q).is_ok()).collect()
}

pub fn odd_primes_upto(max: u64) -> Vec<u64> {
    (3..=max).filter(|&p| is_prime(p)).collect()
}

/// Floor of the square root.
pub fn isqrt(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let mut x = (n as f64).sqrt() as u64;
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

pub fn sigma1(n: u64) -> u64 {
    (1..=n).filter(|d| n.is_multiple_of(*d)).sum()
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `n! / (a! b! (n-a-b)!)`, zero when `a + b > n`.
pub fn trinomial(n: u64, a: u64, b: u64) -> BigInt {
    if a + b > n {
        return BigInt::zero();
    }
    binomial(n, a) * binomial(n - a, b)
}

/// Distinct prime divisors in increasing order.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_power_split() {
        assert_eq!(odd_prime_power(27).unwrap(), (3, 3));
        assert_eq!(odd_prime_power(25).unwrap(), (5, 2));
        assert_eq!(odd_prime_power(199).unwrap(), (199, 1));
        assert!(odd_prime_power(15).is_err());
        assert!(odd_prime_power(8).is_err());
        assert!(odd_prime_power(1).is_err());
    }

    #[test]
    fn small_helpers() {
        assert_eq!(isqrt(99), 9);
        assert_eq!(isqrt(100), 10);
        assert_eq!(sigma1(9), 13);
        assert_eq!(binomial(8, 4), BigInt::from(70));
        assert_eq!(trinomial(5, 2, 1), BigInt::from(30));
        assert_eq!(prime_divisors(12), vec![2, 3]);
        assert_eq!(odd_prime_powers_upto(11), vec![3, 5, 7, 9, 11]);
    }
}
