//! Eichler-Selberg traces of `T_q` on `S_k(Γ₀(N))` for `N ∈ {1, 2, 4}` and
//! odd prime powers `q`, written with Hurwitz class numbers, plus the
//! closed-form weighted moments of traces of Frobenius built from them.

use std::collections::BTreeMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::curve_census::Flavor;
use crate::error::{consistency, domain, Result};
use crate::isogeny_counts::n_a;
use crate::quadratic_forms::{h_w, hurwitz_hw, rat, rat_int, Discriminant, Rat};
use crate::util::{binomial, isqrt, odd_prime_power, sigma1};

/// `P_k(t, q) = (α^{k-1} - ᾱ^{k-1}) / (α - ᾱ)` where `α, ᾱ` are the roots of
/// `X² - tX + q`, via `u_0 = 0, u_1 = 1, u_m = t u_{m-1} - q u_{m-2}`.
pub fn gegenbauer(k: u32, t: i64, q: i64) -> BigInt {
    if k == 0 {
        // u_{-1} = -1/q is not integral; no caller needs it.
        panic!("gegenbauer kernel needs k >= 1");
    }
    let (t, q) = (BigInt::from(t), BigInt::from(q));
    let mut prev = BigInt::zero();
    let mut cur = BigInt::one();
    for _ in 1..k - 1 {
        let next = &t * &cur - &q * &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    if k == 1 {
        prev
    } else {
        cur
    }
}

fn check_weight(k: u32) -> Result<()> {
    if k < 2 || !k.is_multiple_of(2) {
        return Err(domain(format!("weight {k} must be even and at least 2")));
    }
    Ok(())
}

/// `Σ_{0 ≤ i ≤ v} min(p^i, p^{v-i})^{k-1}`.
pub fn min_power_sum(q: u64, k: u32) -> Result<BigInt> {
    let (p, v) = odd_prime_power(q)?;
    let p = BigInt::from(p);
    Ok((0..=v)
        .map(|i| p.pow(i.min(v - i)).pow(k - 1))
        .sum())
}

/// Common terms: `q^{k/2-1}` when `v` is even, and `σ₁(q)` when `k = 2`.
fn central_power(q: u64, k: u32) -> Result<Rat> {
    let (_, v) = odd_prime_power(q)?;
    Ok(if v % 2 == 0 {
        rat_int(BigInt::from(isqrt(q)).pow(k - 2))
    } else {
        rat(0, 1)
    })
}

fn sigma_term(q: u64, k: u32) -> Rat {
    if k == 2 {
        rat_int(sigma1(q))
    } else {
        rat(0, 1)
    }
}

fn into_integer(value: Rat, what: &str) -> Result<BigInt> {
    if value.is_integer() {
        Ok(value.to_integer())
    } else {
        Err(consistency(format!("{what} evaluated to non-integer {value}")))
    }
}

/// `Σ_{t ≡ q+1 (4), t² < 4q} P_k(t, q) H_w((t² - 4q)/4)`.
fn level4_class_sum(k: u32, q: u64) -> Result<Rat> {
    let qi = q as i64;
    let bound = isqrt(4 * q - 1) as i64;
    let mut acc = rat(0, 1);
    for t in -bound..=bound {
        if (t - qi - 1).rem_euclid(4) != 0 {
            continue;
        }
        acc += rat_int(gegenbauer(k, t, qi)) * hurwitz_hw((t * t - 4 * qi) / 4)?;
    }
    Ok(acc)
}

/// Trace of `T_q` on `S_k(Γ₀(4))`.
pub fn trace_level4(k: u32, q: u64) -> Result<BigInt> {
    check_weight(k)?;
    let value = rat(k as i64 - 1, 2) * central_power(q, k)?
        - rat(3, 1) * level4_class_sum(k, q)?
        - rat(3, 2) * rat_int(min_power_sum(q, k)?)
        + sigma_term(q, k);
    into_integer(value, &format!("trace on S_{k}(Γ0(4)) of T_{q}"))
}

/// Trace of `T_q` on `S_k(Γ₀(2))`.
pub fn trace_level2(k: u32, q: u64) -> Result<BigInt> {
    check_weight(k)?;
    let qi = q as i64;
    let bound = isqrt(4 * q - 1) as i64;
    let mut odd_m_sum = rat(0, 1);
    for t in (-bound..=bound).filter(|t| t % 2 == 0) {
        let delta = t * t - 4 * qi;
        let n = delta.unsigned_abs();
        let mut inner = rat(0, 1);
        let mut m = 1u64;
        while m * m <= n {
            if n.is_multiple_of(m * m) {
                if let Ok(d) = Discriminant::new(delta / (m * m) as i64) {
                    inner += h_w(d);
                }
            }
            m += 2;
        }
        odd_m_sum += rat_int(gegenbauer(k, t, qi)) * inner;
    }
    let value = rat(k as i64 - 1, 4) * central_power(q, k)?
        - rat(1, 2) * odd_m_sum
        - rat(3, 2) * level4_class_sum(k, q)?
        - rat_int(min_power_sum(q, k)?)
        + sigma_term(q, k);
    into_integer(value, &format!("trace on S_{k}(Γ0(2)) of T_{q}"))
}

/// Hurwitz class number `H(n)` with `H(0) = -1/12`.
fn hurwitz_h(n: u64) -> Result<Rat> {
    if n == 0 {
        Ok(rat(-1, 12))
    } else {
        hurwitz_hw(-(n as i64))
    }
}

/// Trace of `T_q` on `S_k(SL₂(Z))`.
pub fn trace_level1(k: u32, q: u64) -> Result<BigInt> {
    check_weight(k)?;
    let qi = q as i64;
    let bound = isqrt(4 * q) as i64;
    let mut class_sum = rat(0, 1);
    for t in -bound..=bound {
        class_sum += rat_int(gegenbauer(k, t, qi)) * hurwitz_h((4 * qi - t * t) as u64)?;
    }
    let value = rat(-1, 2) * class_sum - rat(1, 2) * rat_int(min_power_sum(q, k)?)
        + sigma_term(q, k);
    into_integer(value, &format!("trace on S_{k}(SL2(Z)) of T_{q}"))
}

/// Memoized traces keyed by `(N, k, q)`.
#[derive(Debug, Default)]
pub struct TraceTable {
    entries: RwLock<BTreeMap<(u32, u32, u64), BigInt>>,
}

impl TraceTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Process-wide table.
    pub fn global() -> &'static TraceTable {
        static TABLE: OnceLock<TraceTable> = OnceLock::new();
        TABLE.get_or_init(TraceTable::new)
    }

    pub fn trace(&self, level: u32, k: u32, q: u64) -> Result<BigInt> {
        let key = (level, k, q);
        if let Some(v) = self.entries.read().unwrap().get(&key) {
            return Ok(v.clone());
        }
        let v = match level {
            1 => trace_level1(k, q)?,
            2 => trace_level2(k, q)?,
            4 => trace_level4(k, q)?,
            other => return Err(domain(format!("level {other} is not one of 1, 2, 4"))),
        };
        self.entries.write().unwrap().insert(key, v.clone());
        Ok(v)
    }

    pub fn len(&self) -> usize {
        self.entries.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// CSV with columns `N,k,q,trace`, sorted by key.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["N", "k", "q", "trace"]).expect("in-memory write");
        for ((n, k, q), v) in self.entries.read().unwrap().iter() {
            w.write_record([n.to_string(), k.to_string(), q.to_string(), v.to_string()])
                .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("ascii")
    }
}

/// Argument of `ρ`, `τ`, `φ`: an odd prime power, or one of the two
/// sentinels standing for `q/p²` when `q = p` or `q = p²`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum HeckeArg {
    InversePrime,
    One,
    PrimePower(u64),
}

impl HeckeArg {
    /// `q / p²` with the sentinel convention.
    pub fn reduced(q: u64) -> Result<Self> {
        let (p, v) = odd_prime_power(q)?;
        Ok(match v {
            1 => HeckeArg::InversePrime,
            2 => HeckeArg::One,
            _ => HeckeArg::PrimePower(q / (p * p)),
        })
    }
}

/// `i^{k-2}` for even `k`.
fn i_power(k: u32) -> i64 {
    if (k - 2).is_multiple_of(4) {
        1
    } else {
        -1
    }
}

fn central_term(q: u64, k: u32) -> Result<Rat> {
    Ok(rat(k as i64 - 1, 12) * central_power(q, k)?)
}

pub fn rho(arg: HeckeArg, k: u32) -> Result<Rat> {
    check_weight(k)?;
    match arg {
        HeckeArg::InversePrime => Ok(rat(0, 1)),
        // (ω^{k-1} - ω̄^{k-1})/(ω - ω̄) is P_k(-1, 1), since ω + ω̄ = -1, ωω̄ = 1.
        HeckeArg::One => Ok(rat(i_power(k), 4) + rat(1, 3) * rat_int(gegenbauer(k, -1, 1))),
        HeckeArg::PrimePower(q) => Ok(-rat_int(TraceTable::global().trace(1, k, q)?)
            + central_term(q, k)?
            - rat(1, 2) * rat_int(min_power_sum(q, k)?)
            + sigma_term(q, k)),
    }
}

pub fn tau_fn(arg: HeckeArg, k: u32) -> Result<Rat> {
    check_weight(k)?;
    match arg {
        HeckeArg::InversePrime => Ok(rat(0, 1)),
        HeckeArg::One => Ok(rat(i_power(k), 4)),
        HeckeArg::PrimePower(q) => {
            let table = TraceTable::global();
            Ok(central_term(q, k)?
                + rat(1, 3) * rat_int(table.trace(4, k, q)?)
                - rat_int(table.trace(2, k, q)?)
                - rat(1, 2) * rat_int(min_power_sum(q, k)?)
                + rat(2, 3) * sigma_term(q, k))
        }
    }
}

pub fn phi(arg: HeckeArg, k: u32) -> Result<Rat> {
    check_weight(k)?;
    match arg {
        HeckeArg::InversePrime | HeckeArg::One => Ok(rat(0, 1)),
        HeckeArg::PrimePower(q) => Ok(rat(-1, 6)
            * rat_int(TraceTable::global().trace(4, k, q)?)
            + central_term(q, k)?
            - rat(1, 4) * rat_int(min_power_sum(q, k)?)
            + rat(1, 6) * sigma_term(q, k)),
    }
}

/// `a_{R,j} = C(2R, j) - C(2R, j-1)`.
pub fn a_coeff(r: u32, j: u32) -> Result<BigInt> {
    if j > r {
        return Err(domain(format!("a_(R,j) needs 0 <= j <= R, got R={r}, j={j}")));
    }
    let prev = if j == 0 {
        BigInt::zero()
    } else {
        binomial(2 * r as u64, j as u64 - 1)
    };
    Ok(binomial(2 * r as u64, j as u64) - prev)
}

/// Weighted `2R`-th moment of the trace of Frobenius in closed form.
pub fn moment_formula(q: u64, r: u32, flavor: Flavor) -> Result<Rat> {
    let (p, v) = odd_prime_power(q)?;
    let f = match flavor {
        Flavor::All => rho,
        Flavor::TwoTorsion => tau_fn,
        Flavor::FullTwoTorsion => phi,
    };
    let reduced = HeckeArg::reduced(q)?;
    let mut acc = rat(0, 1);
    for j in 0..=r {
        let k = 2 * r - 2 * j + 2;
        let inner = f(HeckeArg::PrimePower(q), k)?
            - rat_int(BigInt::from(p).pow(k - 1)) * f(reduced, k)?;
        acc += rat_int(a_coeff(r, j)? * BigInt::from(q).pow(j)) * inner;
    }
    if v % 2 == 0 {
        acc += rat(p as i64 - 1, 12) * rat_int(BigInt::from(4 * q).pow(r));
    }
    Ok(acc)
}

/// Contribution of curves whose endomorphism ring is an imaginary quadratic
/// order: `½ Σ_{t even, p∤t, t² < 4q} P_k H_w(t² - 4q) + P_k(0, q) N_A(0)`.
pub fn omega_prime(q: u64, k: u32) -> Result<Rat> {
    check_weight(k)?;
    let (p, _) = odd_prime_power(q)?;
    let qi = q as i64;
    let bound = isqrt(4 * q - 1) as i64;
    let mut acc = rat(0, 1);
    for t in (-bound..=bound).filter(|t| t % 2 == 0 && t % p as i64 != 0) {
        acc += rat_int(gegenbauer(k, t, qi)) * hurwitz_hw(t * t - 4 * qi)?;
    }
    Ok(rat(1, 2) * acc + rat_int(gegenbauer(k, 0, qi)) * n_a(q, 0)?)
}

/// `½ Σ_{t even, t² < 4q} P_k(t, q) H_w(t² - 4q)`.
pub fn even_trace_class_sum(q: u64, k: u32) -> Result<Rat> {
    let qi = q as i64;
    let bound = isqrt(4 * q - 1) as i64;
    let mut acc = rat(0, 1);
    for t in (-bound..=bound).filter(|t| t % 2 == 0) {
        acc += rat_int(gegenbauer(k, t, qi)) * hurwitz_hw(t * t - 4 * qi)?;
    }
    Ok(rat(1, 2) * acc)
}

/// `p^{k-1}` times the reduced-argument value, for the `q/p²` shift.
pub fn shifted(q: u64, k: u32, f: fn(HeckeArg, u32) -> Result<Rat>) -> Result<Rat> {
    let (p, _) = odd_prime_power(q)?;
    Ok(rat_int(BigInt::from(p).pow(k - 1)) * f(HeckeArg::reduced(q)?, k)?)
}

/// Used by tests: `true` iff `n` divides the numerator of `x`.
#[allow(dead_code)]
pub(crate) fn divides(n: &BigInt, x: &BigInt) -> bool {
    x.is_multiple_of(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::util::odd_prime_powers_upto;

    #[test]
    fn gegenbauer_values() {
        for (t, q) in [(0i64, 3i64), (2, 3), (5, 7), (-4, 9)] {
            assert_eq!(gegenbauer(2, t, q), BigInt::one());
            assert_eq!(gegenbauer(4, t, q), BigInt::from(t * t - q));
        }
        assert_eq!(gegenbauer(6, 0, 3), BigInt::from(9));
        assert_eq!(gegenbauer(8, 2, 3), BigInt::from(13));
    }

    #[test]
    fn min_power_sum_examples() {
        assert_eq!(min_power_sum(7, 6).unwrap(), BigInt::from(2));
        assert_eq!(min_power_sum(9, 4).unwrap(), BigInt::from(29));
        assert_eq!(min_power_sum(27, 2).unwrap(), BigInt::from(8));
    }

    #[test]
    fn small_trace_examples() {
        assert_eq!(trace_level4(6, 3).unwrap(), BigInt::from(-12));
        assert_eq!(trace_level2(8, 3).unwrap(), BigInt::from(12));
        assert_eq!(trace_level1(12, 5).unwrap(), BigInt::from(4830));
        assert!(trace_level4(5, 3).is_err());
        assert!(TraceTable::new().trace(3, 2, 3).is_err());
    }

    #[test]
    fn rho_tau_phi_specials() {
        assert_eq!(rho(HeckeArg::InversePrime, 6).unwrap(), rat(0, 1));
        assert_eq!(rho(HeckeArg::One, 2).unwrap(), rat(7, 12));
        assert_eq!(tau_fn(HeckeArg::InversePrime, 4).unwrap(), rat(0, 1));
        assert_eq!(tau_fn(HeckeArg::One, 4).unwrap(), rat(-1, 4));
        assert_eq!(phi(HeckeArg::One, 8).unwrap(), rat(0, 1));
        assert_eq!(phi(HeckeArg::InversePrime, 8).unwrap(), rat(0, 1));
        for p in [5u64, 7, 11] {
            let tau = trace_level1(12, p).unwrap();
            assert_eq!(rho(HeckeArg::PrimePower(p), 12).unwrap(), -rat_int(tau) - rat(1, 1));
        }
    }

    #[test]
    fn rho_one_matches_class_sum_at_q_one() {
        // ½ Σ_{t² < 4} P_k(t, 1) H_w(t² - 4) with H_w(-4) = 1/2, H_w(-3) = 1/3.
        for k in (2..=16).step_by(2) {
            let sum = rat_int(gegenbauer(k, 0, 1)) * rat(1, 2)
                + rat_int(gegenbauer(k, 1, 1) + gegenbauer(k, -1, 1)) * rat(1, 3);
            assert_eq!(rho(HeckeArg::One, k).unwrap(), rat(1, 2) * sum, "k={k}");
        }
    }

    #[test]
    fn a_coeff_examples() {
        for r in 0..8 {
            assert_eq!(a_coeff(r, 0).unwrap(), BigInt::one());
            let catalan = binomial(2 * r as u64, r as u64) / (r + 1);
            assert_eq!(a_coeff(r, r).unwrap(), catalan);
        }
        assert_eq!(a_coeff(3, 3).unwrap(), BigInt::from(5));
        assert_eq!(a_coeff(2, 1).unwrap(), BigInt::from(3));
        assert!(a_coeff(2, 3).is_err());
    }

    #[test]
    fn power_to_kernel_identity() {
        for q in 3..=49i64 {
            if odd_prime_power(q as u64).is_err() {
                continue;
            }
            let bound = isqrt(4 * q as u64) as i64;
            for t in -bound..=bound {
                for r in 0..=6u32 {
                    let rhs: BigInt = (0..=r)
                        .map(|j| {
                            a_coeff(r, j).unwrap()
                                * BigInt::from(q).pow(j)
                                * gegenbauer(2 * r - 2 * j + 2, t, q)
                        })
                        .sum();
                    assert_eq!(BigInt::from(t).pow(2 * r), rhs);
                }
            }
        }
    }

    #[test]
    fn even_trace_sum_is_tau() {
        for q in [3u64, 5, 7, 9, 11, 13, 25, 27] {
            for k in (2..=12).step_by(2) {
                assert_eq!(
                    even_trace_class_sum(q, k).unwrap(),
                    tau_fn(HeckeArg::PrimePower(q), k).unwrap(),
                    "q={q} k={k}"
                );
            }
        }
    }

    #[test]
    fn ordinary_contribution_identity() {
        for q in [9u64, 25, 27, 81] {
            for k in (2..=12).step_by(2) {
                let rhs = tau_fn(HeckeArg::PrimePower(q), k).unwrap() - shifted(q, k, tau_fn).unwrap();
                assert_eq!(omega_prime(q, k).unwrap(), rhs, "q={q} k={k}");
            }
        }
    }

    #[test]
    fn oldform_doubling_at_level_four() {
        for p in crate::util::odd_primes_upto(100) {
            assert_eq!(trace_level4(8, p).unwrap(), BigInt::from(2) * trace_level2(8, p).unwrap());
        }
    }

    #[test]
    fn trace_table_memoizes_and_dumps() {
        let table = TraceTable::new();
        assert!(table.is_empty());
        for q in odd_prime_powers_upto(9) {
            table.trace(4, 6, q).unwrap();
        }
        table.trace(4, 6, 3).unwrap();
        assert_eq!(table.len(), 4);
        let csv = table.to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("N,k,q,trace"));
        assert_eq!(lines.next(), Some("4,6,3,-12"));
    }

    #[test]
    fn prime_moments_small() {
        for p in [3u64, 5, 7, 11, 13] {
            let pi = p as i64;
            assert_eq!(moment_formula(p, 0, Flavor::All).unwrap(), rat(pi, 1));
            assert_eq!(moment_formula(p, 1, Flavor::All).unwrap(), rat(pi * pi - 1, 1));
            assert_eq!(moment_formula(p, 0, Flavor::TwoTorsion).unwrap(), rat(2 * pi - 1, 3));
            assert_eq!(moment_formula(p, 0, Flavor::FullTwoTorsion).unwrap(), rat(pi - 2, 6));
        }
    }
}
