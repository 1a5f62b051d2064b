//! Closed-form QR enumerator of `C_{1,4}` from point counts of genus-one
//! curves `w² = f₄(x, y)`, its classical puncture, and truncated duals
//! compared against the explicit dual-enumerator formulas.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::enumerators::{dual_coeff_truncated, QREnum};
use crate::error::{consistency, domain, Result};
use crate::hecke_traces::TraceTable;
use crate::isogeny_counts::{n_a, n_a_2x2};
use crate::quadratic_forms::{rat, rat_int, Rat};
use crate::rs_codes::puncture_qr;
use crate::util::{is_prime, isqrt, odd_prime_power};

fn check_q(q: u64) -> Result<()> {
    odd_prime_power(q)?;
    if q < 5 {
        return Err(domain(format!("C_(1,4) needs q >= 5, got {q}")));
    }
    Ok(())
}

/// `(q-1)² q (q+1)`, the number of quartics per weighted isomorphism class.
fn orbit_factor(q: u64) -> BigInt {
    let q = BigInt::from(q);
    (&q - 1u32).pow(2) * &q * (&q + 1u32)
}

/// Contribution of quartics with a repeated root (including `f₄ = 0`).
pub fn qr_c14_singular(q: u64) -> Result<QREnum> {
    check_q(q)?;
    let n = q as usize + 1;
    let h = (q as usize - 1) / 2;
    let qb = BigInt::from(q);
    let (qm1, qp1) = (&qb - 1u32, &qb + 1u32);
    let cubic = &qm1 * &qb * &qp1;
    let quartic = &cubic * &qm1;
    let mut e = QREnum::new(n, q);
    let mut both = |j: usize, k: usize, c: &BigInt| -> Result<()> {
        e.add_term(j, k, c.clone())?;
        e.add_term(k, j, c.clone())
    };
    both(q as usize, 0, &(&qm1 * &qp1 / 2u32))?;
    both(q as usize - 1, 0, &(&cubic / 4u32))?;
    both(h, h - 1, &(&quartic / 4u32))?;
    both(h + 1, h, &(&quartic / 4u32))?;
    both(n, 0, &(qm1.pow(2) * &qb / 4u32))?;
    e.add_term(0, 0, BigInt::from(1))?;
    e.add_term(h, h, cubic)?;
    Ok(e)
}

/// Adds `weight · X^{n-j-k} Y^j Z^k` given exponents that may be negative;
/// negative exponents are allowed only with zero weight.
fn add_signed(acc: &mut BTreeMap<(usize, usize), Rat>, j: i64, k: i64, weight: Rat) -> Result<()> {
    if weight.is_zero() {
        return Ok(());
    }
    if j < 0 || k < 0 {
        return Err(consistency(format!("nonzero weight {weight} on Y^{j} Z^{k}")));
    }
    *acc.entry((j as usize, k as usize)).or_insert_with(|| rat(0, 1)) += weight;
    Ok(())
}

/// Contribution of squarefree quartics, assembled from `N_A(t)` and
/// `N_{A,2×2}(t)`.
pub fn qr_c14_smooth(q: u64) -> Result<QREnum> {
    check_q(q)?;
    let qi = q as i64;
    let bound = isqrt(4 * q) as i64;
    let mut acc: BTreeMap<(usize, usize), Rat> = BTreeMap::new();
    for t in -bound..=bound {
        let na = n_a(q, t)?;
        if t % 2 != 0 {
            add_signed(&mut acc, (qi - t) / 2, (qi + t) / 2, na)?;
            continue;
        }
        let full = n_a_2x2(q, t)?;
        let partial = &na - &full;
        add_signed(&mut acc, (qi - 1 - t) / 2, (qi - 1 + t) / 2, &partial * rat(1, 2))?;
        add_signed(&mut acc, (qi + 1 - t) / 2, (qi + 1 + t) / 2, &partial * rat(1, 2))?;
        add_signed(&mut acc, (qi - 3 - t) / 2, (qi - 3 + t) / 2, &full * rat(1, 4))?;
        add_signed(&mut acc, (qi + 1 - t) / 2, (qi + 1 + t) / 2, &full * rat(3, 4))?;
    }
    let scale = rat_int(orbit_factor(q));
    let mut e = QREnum::new(q as usize + 1, q);
    for ((j, k), w) in acc {
        let c = w * &scale;
        if !c.is_integer() || c.is_negative() {
            return Err(consistency(format!("smooth coefficient of Y^{j} Z^{k} is {c}")));
        }
        e.add_term(j, k, c.to_integer())?;
    }
    Ok(e)
}

/// `QR_{C_{1,4}}` over `F_q`.
pub fn qr_c14(q: u64) -> Result<QREnum> {
    qr_c14_singular(q)?.sum(&qr_c14_smooth(q)?)
}

/// `QR_{C'_{1,4}}` of the classical code of length `q`.
pub fn qr_classical_c14(q: u64) -> Result<QREnum> {
    puncture_qr(&qr_c14(q)?)
}

/// `c · Π factors(q)` over the denominator, plus `tr_coeff · tr` inside
/// the first factor's bracket when present.
struct ExampleTerm {
    j: usize,
    k: usize,
    denom: i64,
    factors: &'static [&'static [i64]],
    tr_coeff: i64,
}

fn eval_desc(coeffs: &[i64], q: &BigInt) -> BigInt {
    coeffs.iter().fold(BigInt::zero(), |acc, &c| acc * q + c)
}

// Dual of projective C_{1,4}, q ≡ 1 (mod 4); the bracket multiplies (q-1)²q(q+1).
const DUAL_1MOD4: &[ExampleTerm] = &[
    ExampleTerm { j: 6, k: 0, denom: 23040, factors: &[&[1, -6, 53], &[1, -3]], tr_coeff: 0 },
    ExampleTerm { j: 4, k: 2, denom: 1536, factors: &[&[1, -1], &[1, -3], &[1, -5]], tr_coeff: 0 },
    ExampleTerm { j: 7, k: 0, denom: 645120, factors: &[&[1, -20, 120, -860, 6154, -13005]], tr_coeff: -35 },
    ExampleTerm { j: 6, k: 1, denom: 92160, factors: &[&[1, -20, 160, -660, 1274, -765]], tr_coeff: 5 },
    ExampleTerm { j: 5, k: 2, denom: 30720, factors: &[&[1, -20, 160, -660, 1274, -765]], tr_coeff: 5 },
    ExampleTerm { j: 4, k: 3, denom: 18432, factors: &[&[1, -20, 152, -508, 714, -333]], tr_coeff: -3 },
];

// Dual of projective C_{1,4}, q ≡ 3 (mod 4), q >= 7.
const DUAL_3MOD4: &[ExampleTerm] = &[
    ExampleTerm { j: 5, k: 1, denom: 3840, factors: &[&[1, 1], &[1, -3], &[1, -7]], tr_coeff: 0 },
    ExampleTerm { j: 3, k: 3, denom: 1152, factors: &[&[1, -6, 17], &[1, -3]], tr_coeff: 0 },
    ExampleTerm { j: 7, k: 0, denom: 645120, factors: &[&[1, -20, 120, -20, -566, -405]], tr_coeff: -35 },
    ExampleTerm { j: 6, k: 1, denom: 92160, factors: &[&[1, -20, 160, -540, 314, 1035]], tr_coeff: 5 },
    ExampleTerm { j: 5, k: 2, denom: 30720, factors: &[&[1, -20, 160, -540, 314, 1035]], tr_coeff: 5 },
    ExampleTerm { j: 4, k: 3, denom: 18432, factors: &[&[1, -20, 152, -628, 1674, -2133]], tr_coeff: -3 },
];

/// The explicit closed form for the `(j, k)` dual coefficient, `j + k <= 7`,
/// prime `q >= 7`; other monomials are zero.
pub fn example_prediction(q: u64, j: usize, k: usize) -> Result<BigInt> {
    if !is_prime(q) || q < 7 {
        return Err(domain(format!("explicit dual formulas need a prime q >= 7, got {q}")));
    }
    if j + k > 7 {
        return Err(domain("explicit dual formulas stop at j + k = 7"));
    }
    if j + k == 0 {
        return Ok(BigInt::from(1));
    }
    let table = if q % 4 == 1 { DUAL_1MOD4 } else { DUAL_3MOD4 };
    let (a, b) = (j.max(k), j.min(k));
    let Some(term) = table.iter().find(|t| (t.j, t.k) == (a, b)) else {
        return Ok(BigInt::zero());
    };
    let qb = BigInt::from(q);
    let tr = if term.tr_coeff != 0 { TraceTable::global().trace(4, 6, q)? } else { BigInt::zero() };
    let mut bracket = eval_desc(term.factors[0], &qb) + tr * term.tr_coeff;
    for f in &term.factors[1..] {
        bracket *= eval_desc(f, &qb);
    }
    let value = rat_int(orbit_factor(q) * bracket) / rat_int(BigInt::from(term.denom));
    if !value.is_integer() {
        return Err(consistency(format!("explicit formula for Y^{j} Z^{k} at q = {q} gives {value}")));
    }
    Ok(value.to_integer())
}

/// The explicit `X^{q-7} Y^7` coefficient of the classical dual, prime `q`.
pub fn classical_example_prediction(q: u64) -> Result<BigInt> {
    if !is_prime(q) || q < 7 || (q % 4 == 1 && q < 11) {
        return Err(domain(format!(
            "the classical X^(q-7) Y^7 formula needs a prime q >= 7 (>= 11 when q = 1 mod 4), got {q}"
        )));
    }
    let qb = BigInt::from(q);
    let common = (&qb - 6u32) * &qb * (&qb - 1u32).pow(2);
    let main = if q % 4 == 1 {
        &common * eval_desc(&[1, -20, 120, -860, 6154, -13005], &qb)
    } else {
        &common * (&qb + 1u32) * eval_desc(&[1, -21, 141, -161, -405], &qb)
    };
    let tr = TraceTable::global().trace(4, 6, q)?;
    let value = rat_int(main) / rat_int(BigInt::from(645120)) - rat_int(common * tr) / rat_int(BigInt::from(18432));
    if !value.is_integer() {
        return Err(consistency(format!("classical formula at q = {q} gives {value}")));
    }
    Ok(value.to_integer())
}

/// One compared coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonomialCheck {
    pub monomial: String,
    #[serde(serialize_with = "as_decimal")]
    pub computed: BigInt,
    #[serde(serialize_with = "as_decimal_opt")]
    pub predicted: Option<BigInt>,
    #[serde(rename = "match")]
    pub matched: bool,
}

fn as_decimal<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn as_decimal_opt<S: serde::Serializer>(v: &Option<BigInt>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.serialize_str(&v.to_string()),
        None => s.serialize_none(),
    }
}

fn monomial(n: usize, j: usize, k: usize) -> String {
    format!("X^{} Y^{j} Z^{k}", n - j - k)
}

/// Truncated dual coefficients with the comparisons that apply.
#[derive(Clone, Debug)]
pub struct DualReport {
    pub q: u64,
    pub n: usize,
    pub coefficients: BTreeMap<(usize, usize), BigInt>,
    pub checks: Vec<MonomialCheck>,
}

impl DualReport {
    pub fn all_match(&self) -> bool {
        self.checks.iter().all(|c| c.matched)
    }

    /// The first mismatching monomial, if any.
    pub fn first_mismatch(&self) -> Option<&MonomialCheck> {
        self.checks.iter().find(|c| !c.matched)
    }

    pub fn checks_json(&self) -> String {
        serde_json::to_string(&self.checks).expect("serializable")
    }

    /// Coefficients as `{"n", "q", "terms": [...]}` in enumerator JSON order.
    pub fn coefficients_json(&self) -> String {
        let mut e = QREnum::new(self.n, self.q);
        for (&(j, k), c) in &self.coefficients {
            e.add_term(j, k, c.clone()).expect("in range");
        }
        e.to_json()
    }
}

/// Dual coefficients of `QR_{C_{1,4}}` (that is, of `C_{1,q-5}`) with
/// `j + k <= max_codim`; for prime `q >= 7` each coefficient with
/// `j + k <= 7` is compared with the explicit closed form.
pub fn dual_qr(q: u64, max_codim: usize) -> Result<DualReport> {
    check_q(q)?;
    let e = qr_c14(q)?;
    let coefficients = dual_coeff_truncated(&e, &BigInt::from(q).pow(5), max_codim)?;
    let mut checks = Vec::new();
    if is_prime(q) && q >= 7 {
        for (&(j, k), c) in coefficients.iter().filter(|((j, k), _)| j + k <= 7) {
            let predicted = example_prediction(q, j, k)?;
            checks.push(MonomialCheck {
                monomial: monomial(e.n(), j, k),
                computed: c.clone(),
                matched: *c == predicted,
                predicted: Some(predicted),
            });
        }
    }
    Ok(DualReport { q, n: e.n(), coefficients, checks })
}

/// Truncated dual of the classical `C'_{1,4}`, i.e. coefficients of the
/// classical code of dimension `q - 5`.
pub fn dual_classical(q: u64, max_codim: usize) -> Result<DualReport> {
    check_q(q)?;
    let e = qr_classical_c14(q)?;
    let coefficients = dual_coeff_truncated(&e, &BigInt::from(q).pow(5), max_codim)?;
    Ok(DualReport { q, n: e.n(), coefficients, checks: Vec::new() })
}

/// Compares the `X^{q-7} Y^7` coefficient of the classical dual against its
/// explicit closed form.
pub fn dual_classical_coeff_check(q: u64) -> Result<MonomialCheck> {
    let predicted = classical_example_prediction(q)?;
    let report = dual_classical(q, 7)?;
    let computed = report.coefficients[&(7, 0)].clone();
    Ok(MonomialCheck {
        monomial: monomial(report.n, 7, 0),
        matched: computed == predicted,
        computed,
        predicted: Some(predicted),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerators::{mds_hamming, specialize_to_hamming};
    use crate::finite_field::FieldCtx;
    use crate::rs_codes::{brute_qr, build_code, DEFAULT_BUDGET};
    use std::sync::Arc;

    #[test]
    fn singular_part_terms() {
        for q in [5u64, 7, 9, 11] {
            let s = qr_c14_singular(q).unwrap();
            let n = q as usize + 1;
            assert_eq!(s.get(0, 0), BigInt::from(1));
            assert_eq!(s.get(q as usize, 0), BigInt::from((q - 1) * (q + 1) / 2));
            assert_eq!(s.get(n, 0), BigInt::from((q - 1) * (q - 1) * q / 4));
            assert!(s.is_yz_symmetric());
        }
        assert!(qr_c14_singular(3).is_err());
    }

    #[test]
    fn closed_form_matches_brute_force() {
        for (p, v) in [(5u64, 1u32), (7, 1), (3, 2)] {
            let ctx = Arc::new(FieldCtx::new(p, v).unwrap());
            let q = ctx.q();
            let brute = brute_qr(&build_code(ctx, 4, true).unwrap(), DEFAULT_BUDGET).unwrap();
            let formula = qr_c14(q).unwrap();
            assert_eq!(formula, brute, "q = {q}");
            assert_eq!(specialize_to_hamming(&formula), mds_hamming(q as usize + 1, 5, q).unwrap());
        }
    }

    #[test]
    fn smooth_part_fibers_by_point_count() {
        for q in [5u64, 7, 9, 11, 13] {
            let s = qr_c14_smooth(q).unwrap();
            let mut fibers: BTreeMap<i64, BigInt> = BTreeMap::new();
            for (&(j, k), c) in s.terms() {
                let points = (q as usize + 1 - j - k) + 2 * j;
                *fibers.entry(q as i64 + 1 - points as i64).or_default() += c;
            }
            let bound = isqrt(4 * q) as i64;
            for t in -bound..=bound {
                let expected = n_a(q, t).unwrap() * rat_int(orbit_factor(q));
                let got = fibers.remove(&t).unwrap_or_default();
                assert_eq!(rat_int(got), expected, "q = {q}, t = {t}");
            }
            assert!(fibers.is_empty());
        }
    }

    #[test]
    fn totals_and_symmetry() {
        for q in [5u64, 7, 9, 11, 13, 25, 27] {
            let e = qr_c14(q).unwrap();
            assert_eq!(e.total(), BigInt::from(q).pow(5));
            assert!(e.is_yz_symmetric());
            assert_eq!(qr_classical_c14(q).unwrap().total(), BigInt::from(q).pow(5));
        }
    }

    #[test]
    fn example_coefficients() {
        assert_eq!(example_prediction(13, 6, 0).unwrap(), BigInt::from(1638));
        assert_eq!(example_prediction(7, 3, 3).unwrap(), BigInt::from(168));
        assert_eq!(example_prediction(7, 5, 1).unwrap(), BigInt::zero());
        let r = dual_qr(13, 7).unwrap();
        assert_eq!(r.coefficients[&(6, 0)], BigInt::from(1638));
        assert!(r.all_match(), "{:?}", r.first_mismatch());
        let r = dual_qr(7, 7).unwrap();
        assert_eq!(r.coefficients[&(3, 3)], BigInt::from(168));
        assert_eq!(r.coefficients[&(0, 0)], BigInt::from(1));
        assert!(r.all_match(), "{:?}", r.first_mismatch());
        assert!(dual_qr(9, 7).unwrap().checks.is_empty());
    }

    #[test]
    fn classical_example() {
        for q in [7u64, 13] {
            let c = dual_classical_coeff_check(q).unwrap();
            assert!(c.matched, "{c:?}");
        }
        assert!(dual_classical_coeff_check(9).is_err());
        assert!(dual_classical_coeff_check(5).is_err());
    }

    #[test]
    fn report_json() {
        let r = dual_qr(7, 6).unwrap();
        let json = r.checks_json();
        assert!(json.starts_with(r#"[{"monomial":"X^8 Y^0 Z^0","computed":"1","predicted":"1","match":true}"#));
        assert!(r.coefficients_json().starts_with(r#"{"n":8,"q":7,"terms":[{"i":8,"j":0,"k":0,"A":"1"}"#));
    }
}
