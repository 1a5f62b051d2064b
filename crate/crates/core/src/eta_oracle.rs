//! Eta-quotient `q`-expansions, used as an independent check on trace
//! formulas for one-dimensional spaces of cusp forms.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{consistency, domain, Result};

/// Truncated power series `Σ c_n q^n`, indexed by absolute exponent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries {
    pub coeffs: Vec<BigInt>,
}

impl QSeries {
    /// Coefficient of `q^n`, zero past the stored precision.
    pub fn coeff(&self, n: usize) -> BigInt {
        self.coeffs.get(n).cloned().unwrap_or_default()
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    fn mul_trunc(&self, other: &QSeries) -> QSeries {
        let n = self.coeffs.len().min(other.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n - i) {
                out[i + j] += a * b;
            }
        }
        QSeries { coeffs: out }
    }

    /// Inverse of a series with constant term 1.
    fn inverse(&self) -> QSeries {
        let n = self.coeffs.len();
        debug_assert!(self.coeffs[0].is_one());
        let mut out = vec![BigInt::zero(); n];
        out[0] = BigInt::one();
        for m in 1..n {
            let mut acc = BigInt::zero();
            for i in 1..=m {
                acc -= &self.coeffs[i] * &out[m - i];
            }
            out[m] = acc;
        }
        QSeries { coeffs: out }
    }
}

/// `Π_{n ≥ 1} (1 - q^{sn})` to `len` coefficients, from the pentagonal
/// number theorem.
fn euler_product(scale: usize, len: usize) -> QSeries {
    let mut coeffs = vec![BigInt::zero(); len];
    for k in 0i64.. {
        let mut any = false;
        for g in [k * (3 * k - 1) / 2, k * (3 * k + 1) / 2] {
            let e = g as usize * scale;
            if e < len {
                any = true;
                if k > 0 || g == 0 {
                    coeffs[e] = if k % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                }
            }
        }
        if !any {
            break;
        }
    }
    QSeries { coeffs }
}

/// `Π η(s z)^e` over `(s, e)` pairs, as a series in `q` through exponent
/// `precision - 1`. The total `Σ s e` must be a multiple of 24.
pub fn eta_product(factors: &[(usize, i32)], precision: usize) -> Result<QSeries> {
    let weight: i64 = factors.iter().map(|&(s, e)| s as i64 * e as i64).sum();
    if factors.iter().any(|&(s, _)| s == 0) {
        return Err(domain("eta scale factors must be positive"));
    }
    if weight.rem_euclid(24) != 0 {
        return Err(domain(format!("Σ s·e = {weight} is not a multiple of 24")));
    }
    let shift = weight / 24;
    if shift < 0 {
        return Err(domain("eta quotient with a pole at infinity"));
    }
    let shift = shift as usize;
    if shift >= precision {
        return Ok(QSeries { coeffs: vec![BigInt::zero(); precision] });
    }
    let len = precision - shift;
    let mut acc = QSeries { coeffs: vec![BigInt::zero(); len] };
    acc.coeffs[0] = BigInt::one();
    for &(s, e) in factors {
        let mut base = euler_product(s, len);
        if e < 0 {
            base = base.inverse();
        }
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul_trunc(&base);
        }
    }
    let mut coeffs = vec![BigInt::zero(); shift];
    coeffs.extend(acc.coeffs);
    Ok(QSeries { coeffs })
}

/// `a(p^v)` of a normalized Hecke eigenform of weight `k` with `p` prime to
/// the level, from `a(p)` and `a(p^{j+1}) = a(p) a(p^j) - p^{k-1} a(p^{j-1})`.
pub fn eigen_coeff_prime_power(series: &QSeries, k: u32, p: u64, v: u32) -> Result<BigInt> {
    if series.coeff(1) != BigInt::one() {
        return Err(domain("series is not a normalized eigenform"));
    }
    if p as usize >= series.precision() {
        return Err(domain(format!("series precision too small for a({p})")));
    }
    let ap = series.coeff(p as usize);
    let pk = BigInt::from(p).pow(k - 1);
    let (mut prev, mut cur) = (BigInt::one(), ap.clone());
    if v == 0 {
        return Ok(prev);
    }
    for _ in 1..v {
        let next = &ap * &cur - &pk * &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    let index = (p as u128).checked_pow(v).unwrap_or(u128::MAX);
    if index < series.precision() as u128 && series.coeff(index as usize) != cur {
        return Err(consistency(format!(
            "Hecke recursion gives a({p}^{v}) = {cur}, expansion has {}",
            series.coeff(index as usize)
        )));
    }
    Ok(cur)
}

/// `Δ = η(z)^24`, weight 12, level 1.
pub fn delta(precision: usize) -> QSeries {
    eta_product(&[(1, 24)], precision).expect("valid eta quotient")
}

/// `η(2z)^12`, weight 6, level 4.
pub fn eta12_2z(precision: usize) -> QSeries {
    eta_product(&[(2, 12)], precision).expect("valid eta quotient")
}

/// `η(z)^8 η(2z)^8`, weight 8, level 2.
pub fn eta8_eta8_2z(precision: usize) -> QSeries {
    eta_product(&[(1, 8), (2, 8)], precision).expect("valid eta quotient")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &QSeries, range: std::ops::Range<usize>) -> Vec<i64> {
        range.map(|n| i64::try_from(s.coeff(n)).unwrap()).collect()
    }

    #[test]
    fn known_expansions() {
        assert_eq!(ints(&delta(6), 0..6), vec![0, 1, -24, 252, -1472, 4830]);
        assert_eq!(ints(&eta12_2z(8), 0..8), vec![0, 1, 0, -12, 0, 54, 0, -88]);
        assert_eq!(ints(&eta8_eta8_2z(4), 0..4), vec![0, 1, -8, 12]);
    }

    #[test]
    fn hecke_recurrence_matches_direct_coefficient() {
        let d = delta(30);
        assert_eq!(eigen_coeff_prime_power(&d, 12, 3, 2).unwrap(), BigInt::from(-113643));
        assert_eq!(eigen_coeff_prime_power(&d, 12, 3, 2).unwrap(), d.coeff(9));
        assert_eq!(eigen_coeff_prime_power(&d, 12, 5, 2).unwrap(), d.coeff(25));
        assert_eq!(eigen_coeff_prime_power(&d, 12, 3, 3).unwrap(), d.coeff(27));
        let f = eta12_2z(30);
        assert_eq!(eigen_coeff_prime_power(&f, 6, 5, 2).unwrap(), f.coeff(25));
        assert_eq!(eigen_coeff_prime_power(&f, 6, 3, 3).unwrap(), f.coeff(27));
    }

    #[test]
    fn coprime_multiplicativity() {
        for f in [delta(60), eta12_2z(60), eta8_eta8_2z(60)] {
            for m in 1..60usize {
                for n in 1..60usize {
                    if m * n < 60 && num_integer::gcd(m, n) == 1 {
                        assert_eq!(f.coeff(m * n), f.coeff(m) * f.coeff(n), "m={m} n={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn negative_powers_invert() {
        let num = eta_product(&[(1, 24), (2, -24)], 20);
        assert!(num.is_err());
        let q = eta_product(&[(2, 24), (1, -24)], 12).unwrap();
        let back = q.mul_trunc(&delta(12));
        assert_eq!(back, eta_product(&[(2, 24)], 12).unwrap());
    }

    #[test]
    fn rejects_bad_quotients() {
        assert!(eta_product(&[(1, 1)], 10).is_err());
        assert!(eta_product(&[(0, 24)], 10).is_err());
        assert!(eigen_coeff_prime_power(&delta(4), 12, 5, 1).is_err());
        assert_eq!(eigen_coeff_prime_power(&delta(4), 12, 3, 0).unwrap(), BigInt::one());
        assert_eq!(eigen_coeff_prime_power(&eta12_2z(8), 6, 5, 1).unwrap(), BigInt::from(54));
    }
}
