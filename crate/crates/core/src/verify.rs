//! Named verification checks comparing closed forms with independent
//! oracles, grouped into suites for the CLI.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::curve_census::{
    empirical_moment, j_special_census, quartic_census, weierstrass_census, Flavor, TraceCensus,
    TwoTorsion,
};
use crate::enumerators::{macwilliams_qr, mds_hamming, specialize_to_hamming};
use crate::error::{domain, Error, Result};
use crate::eta_oracle::{delta, eigen_coeff_prime_power, eta12_2z, eta8_eta8_2z, QSeries};
use crate::finite_field::{Elem, FieldCtx};
use crate::hecke_traces::{a_coeff, gegenbauer, moment_formula, TraceTable};
use crate::isogeny_counts::{n_a, n_a_2x2};
use crate::qr_pipeline::{dual_classical_coeff_check, dual_qr, qr_c14};
use crate::quadratic_forms::{h_w, hurwitz_hw, kronecker, rat, rat_int, Discriminant, Rat};
use crate::rs_codes::{brute_qr, build_code, puncture_qr};
use crate::util::{isqrt, odd_prime_power, odd_prime_powers_upto, odd_primes_upto, prime_divisors};

/// Outcome of one named check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// First failure, or a short summary on success.
    pub detail: String,
}

impl Check {
    fn from_result(name: impl Into<String>, r: Result<String>) -> Self {
        match r {
            Ok(detail) => Check { name: name.into(), passed: true, detail },
            Err(e) => Check { name: name.into(), passed: false, detail: e.to_string() },
        }
    }
}

fn mismatch(what: String) -> Error {
    Error::Consistency(what)
}

fn expect_eq<T: PartialEq + std::fmt::Display>(got: &T, want: &T, ctx: impl FnOnce() -> String) -> Result<()> {
    if got == want {
        Ok(())
    } else {
        Err(mismatch(format!("{}: got {got}, expected {want}", ctx())))
    }
}

fn field_of(q: u64) -> Result<Arc<FieldCtx>> {
    let (p, v) = odd_prime_power(q)?;
    Ok(Arc::new(FieldCtx::new(p, v)?))
}

// ---- class numbers -------------------------------------------------------

/// `h_w(f² d) = h_w(d) f Π_{ℓ | f} (1 - (d/ℓ)/ℓ)`.
pub fn conductor_identity(discs: &[i64], fmax: i64) -> Check {
    Check::from_result(format!("conductor identity, f <= {fmax}"), (|| {
        for &d in discs {
            for f in 1..=fmax {
                let lhs = h_w(Discriminant::new(f * f * d)?);
                let mut rhs = h_w(Discriminant::new(d)?) * rat(f, 1);
                for l in prime_divisors(f as u64) {
                    rhs *= rat(l as i64 - kronecker(d, l)? as i64, l as i64);
                }
                expect_eq(&lhs, &rhs, || format!("h_w({}) with d = {d}, f = {f}", f * f * d))?;
            }
        }
        Ok(format!("{} discriminants", discs.len()))
    })())
}

pub fn hurwitz_spot_values() -> Check {
    Check::from_result("H_w spot values", (|| {
        for (d, n, den) in [(-3, 1, 3), (-4, 1, 2), (-16, 3, 2), (-12, 4, 3)] {
            expect_eq(&hurwitz_hw(d)?, &rat(n, den), || format!("H_w({d})"))?;
        }
        Ok("4 values".into())
    })())
}

// ---- traces --------------------------------------------------------------

/// Traces vanish where the cusp space is zero.
pub fn dimension_zero_traces(qmax: u64) -> Check {
    Check::from_result(format!("zero cusp spaces, q <= {qmax}"), (|| {
        let table = TraceTable::global();
        let mut n = 0;
        for q in odd_prime_powers_upto(qmax) {
            for (level, weights) in [(1u32, &[4u32, 6, 8, 10, 14][..]), (2, &[2, 4, 6]), (4, &[2, 4])] {
                for &k in weights {
                    let t = table.trace(level, k, q)?;
                    expect_eq(&t, &BigInt::zero(), || format!("trace on S_{k}(Γ0({level})) of T_{q}"))?;
                    n += 1;
                }
            }
        }
        Ok(format!("{n} traces"))
    })())
}

/// Traces on one-dimensional spaces equal eigenform coefficients.
pub fn eta_traces(qmax: u64) -> Check {
    Check::from_result(format!("eta-product eigenvalues, q <= {qmax}"), (|| {
        let prec = qmax as usize + 1;
        let forms: [(&str, QSeries, u32, u32, bool); 3] = [
            ("Δ", delta(prec), 1, 12, false),
            ("η¹²(2z)", eta12_2z(prec), 4, 6, false),
            ("η⁸(z)η⁸(2z)", eta8_eta8_2z(prec), 2, 8, true),
        ];
        let table = TraceTable::global();
        let mut n = 0;
        for q in odd_prime_powers_upto(qmax) {
            let (p, v) = odd_prime_power(q)?;
            for (name, series, level, k, primes_only) in &forms {
                if *primes_only && v > 1 {
                    continue;
                }
                let want = eigen_coeff_prime_power(series, *k, p, v)?;
                expect_eq(&table.trace(*level, *k, q)?, &want, || format!("trace vs {name} at q = {q}"))?;
                if *level == 2 {
                    let doubled = &want * 2;
                    expect_eq(&table.trace(4, 8, q)?, &doubled, || format!("level-4 weight-8 trace at q = {q}"))?;
                }
                n += 1;
            }
        }
        Ok(format!("{n} traces"))
    })())
}

// ---- moments -------------------------------------------------------------

fn poly(p: &BigInt, coeffs: &[i64]) -> BigInt {
    coeffs.iter().fold(BigInt::zero(), |acc, &c| acc * p + c)
}

/// The explicit prime-field moments for all three flavors.
pub fn explicit_prime_moments(primes: &[u64]) -> Check {
    Check::from_result(format!("explicit prime moments, {} primes", primes.len()), (|| {
        let pmax = primes.iter().copied().max().unwrap_or(3) as usize;
        let tau = delta(pmax + 1);
        let a = eta12_2z(pmax + 1);
        for &p in primes {
            let pb = BigInt::from(p);
            let birch: [&[i64]; 6] = [
                &[1, 0],
                &[1, 0, -1],
                &[2, 0, -3, -1],
                &[5, 0, -9, -5, -1],
                &[14, 0, -28, -20, -7, -1],
                &[42, 0, -90, -75, -35, -9, -1],
            ];
            for (r, c) in birch.iter().enumerate() {
                let mut want = poly(&pb, c);
                if r == 5 {
                    want -= tau.coeff(p as usize);
                }
                expect_eq(&moment_formula(p, r as u32, Flavor::All)?, &rat_int(want), || {
                    format!("S*_{r}({p})")
                })?;
            }
            let pr = rat_int(pb.clone());
            let ap = rat_int(a.coeff(p as usize));
            let two: [Rat; 3] = [
                (rat(2, 1) * &pr - rat(1, 1)) / rat(3, 1),
                &pr * (rat(2, 1) * &pr - rat(1, 1)) / rat(3, 1) - rat(1, 1),
                rat(4, 3) * pr.pow(3) - rat(2, 3) * pr.pow(2) - rat(3, 1) * &pr - rat(1, 1)
                    + &ap / rat(3, 1),
            ];
            let full: [Rat; 3] = [
                &pr / rat(6, 1) - rat(1, 3),
                pr.pow(2) / rat(6, 1) - &pr / rat(3, 1) - rat(1, 2),
                pr.pow(3) / rat(3, 1) - rat(2, 3) * pr.pow(2) - rat(3, 2) * &pr - rat(1, 2)
                    - &ap / rat(6, 1),
            ];
            for r in 0..3 {
                expect_eq(&moment_formula(p, r as u32, Flavor::TwoTorsion)?, &two[r], || {
                    format!("S*_(2,{r})({p})")
                })?;
                expect_eq(&moment_formula(p, r as u32, Flavor::FullTwoTorsion)?, &full[r], || {
                    format!("S*_(2x2,{r})({p})")
                })?;
            }
        }
        Ok("all explicit values".into())
    })())
}

/// Closed-form moments against a quartic census.
pub fn census_moments(qs: &[u64], r_all: u32, r_tors: u32) -> Check {
    Check::from_result(format!("census moments, q in {qs:?}"), (|| {
        for &q in qs {
            let census = quartic_census(&*field_of(q)?);
            for (flavor, rmax) in [
                (Flavor::All, r_all),
                (Flavor::TwoTorsion, r_tors),
                (Flavor::FullTwoTorsion, r_tors),
            ] {
                for r in 0..=rmax {
                    expect_eq(&moment_formula(q, r, flavor)?, &empirical_moment(&census, r, flavor), || {
                        format!("{flavor:?} moment R = {r} at q = {q}")
                    })?;
                }
            }
        }
        Ok(format!("{} fields", qs.len()))
    })())
}

// ---- isogeny counts ------------------------------------------------------

/// `N_A`, `N_{A,2×2}` against the quartic census, and against the
/// Weierstrass census when `p >= 5`.
pub fn isogeny_counts_vs_census(qs: &[u64]) -> Check {
    Check::from_result(format!("isogeny counts, q in {qs:?}"), (|| {
        for &q in qs {
            let ctx = field_of(q)?;
            let mut sources: Vec<(&str, Box<dyn TraceCensus>)> =
                vec![("quartic", Box::new(quartic_census(&ctx)))];
            if ctx.p() >= 5 {
                sources.push(("Weierstrass", Box::new(weierstrass_census(&ctx)?)));
            }
            for (name, census) in &sources {
                let counts = census.weighted_counts();
                let bound = isqrt(4 * q) as i64;
                for t in -bound..=bound {
                    let (all, full) = counts.get(&t).cloned().unwrap_or((rat(0, 1), rat(0, 1)));
                    expect_eq(&n_a(q, t)?, &all, || format!("N_A({t}) at q = {q} ({name})"))?;
                    expect_eq(&n_a_2x2(q, t)?, &full, || format!("N_A,2x2({t}) at q = {q} ({name})"))?;
                }
                if counts.keys().any(|t| t * t > 4 * q as i64) {
                    return Err(mismatch(format!("{name} census at q = {q} has |t| > 2√q")));
                }
            }
        }
        Ok(format!("{} fields", qs.len()))
    })())
}

/// Class counts, supersingularity and 2-torsion shapes for `j ∈ {0, 1728}`.
///
/// In the supersingular `j = 0` case with `(-3/q) = 1` the shapes asserted
/// are the ones forced by group order: trivial for `t = ±√q` (odd order)
/// and full for `t = ±2√q`.
pub fn j_special_classes(qs: &[u64]) -> Check {
    Check::from_result(format!("j = 0, 1728 classes, q in {qs:?}"), (|| {
        for &q in qs {
            let ctx = field_of(q)?;
            let (p, v) = odd_prime_power(q)?;
            let c = j_special_census(&ctx)?;
            let sq = if v % 2 == 0 { isqrt(q) as i64 } else { 0 };
            let ctx_msg = |what: &str| format!("{what} at q = {q}");
            let k3 = kronecker(-3, q)?;
            let k4 = kronecker(-4, q)?;
            expect_eq(&c.j0.class_count(), &(if k3 == 1 { 6 } else { 2 }), || ctx_msg("j = 0 class count"))?;
            expect_eq(&c.j1728.class_count(), &(if k4 == 1 { 4 } else { 2 }), || ctx_msg("j = 1728 class count"))?;
            if k3 == 1 {
                expect_eq(&c.j0.supersingular(p), &(p % 3 == 2), || ctx_msg("j = 0 supersingularity"))?;
                if p % 3 == 2 {
                    let mut got: Vec<(i64, TwoTorsion)> =
                        c.j0.classes.iter().map(|k| (k.trace, k.two_torsion)).collect();
                    got.sort();
                    let mut want = vec![
                        (-2 * sq, TwoTorsion::Z2xZ2),
                        (-sq, TwoTorsion::Trivial),
                        (-sq, TwoTorsion::Trivial),
                        (sq, TwoTorsion::Trivial),
                        (sq, TwoTorsion::Trivial),
                        (2 * sq, TwoTorsion::Z2xZ2),
                    ];
                    want.sort();
                    if got != want {
                        return Err(mismatch(format!("j = 0 supersingular classes at q = {q}: {got:?}")));
                    }
                }
            }
            if k4 == 1 {
                expect_eq(&c.j1728.supersingular(p), &(p % 4 == 3), || ctx_msg("j = 1728 supersingularity"))?;
                if p % 4 == 3 {
                    let mut got: Vec<(i64, TwoTorsion)> =
                        c.j1728.classes.iter().map(|k| (k.trace, k.two_torsion)).collect();
                    got.sort();
                    let mut want = vec![
                        (-2 * sq, TwoTorsion::Z2xZ2),
                        (0, TwoTorsion::Z2),
                        (0, TwoTorsion::Z2),
                        (2 * sq, TwoTorsion::Z2xZ2),
                    ];
                    want.sort();
                    if got != want {
                        return Err(mismatch(format!("j = 1728 supersingular classes at q = {q}: {got:?}")));
                    }
                }
            }
            for class in c.j0.classes.iter().chain(&c.j1728.classes) {
                let order = q as i64 + 1 - class.trace;
                let odd = order % 2 != 0;
                if odd != (class.two_torsion == TwoTorsion::Trivial) {
                    return Err(mismatch(format!("class {class:?} at q = {q}: order {order}")));
                }
            }
        }
        Ok(format!("{} fields", qs.len()))
    })())
}

// ---- codes ---------------------------------------------------------------

/// Closed-form `QR_{C_{1,4}}` against brute force, Hamming and total.
pub fn c14_vs_brute(qs: &[u64], budget: u128) -> Check {
    Check::from_result(format!("C_(1,4) closed form, q in {qs:?}"), (|| {
        for &q in qs {
            let formula = qr_c14(q)?;
            let brute = brute_qr(&build_code(field_of(q)?, 4, true)?, budget)?;
            if formula != brute {
                return Err(mismatch(format!("closed form and brute force differ at q = {q}")));
            }
            let n = q as usize + 1;
            expect_eq(&format!("{:?}", specialize_to_hamming(&formula)), &format!("{:?}", mds_hamming(n, 5, q)?), || {
                format!("Hamming specialization at q = {q}")
            })?;
            expect_eq(&formula.total(), &BigInt::from(q).pow(5), || format!("total at q = {q}"))?;
        }
        Ok(format!("{} fields", qs.len()))
    })())
}

/// Transform of the closed form against a brute-force dual, and the
/// double transform.
pub fn duals_vs_brute(qs: &[u64], budget: u128) -> Check {
    Check::from_result(format!("projective duals, q in {qs:?}"), (|| {
        for &q in qs {
            let e = qr_c14(q)?;
            let size = BigInt::from(q).pow(5);
            let dual = macwilliams_qr(&e, &size)?;
            let brute = brute_qr(&build_code(field_of(q)?, q as usize - 5, true)?, budget)?;
            if dual != brute {
                return Err(mismatch(format!("transform and brute-force dual differ at q = {q}")));
            }
            let back = macwilliams_qr(&dual, &BigInt::from(q).pow(q as u32 - 4))?;
            if back != e {
                return Err(mismatch(format!("double transform is not the identity at q = {q}")));
            }
        }
        Ok(format!("{} fields", qs.len()))
    })())
}

/// Puncturing and the classical dual against brute force.
pub fn puncture_vs_brute(qs: &[u64], budget: u128) -> Check {
    Check::from_result(format!("puncturing and classical duals, q in {qs:?}"), (|| {
        for &q in qs {
            let ctx = field_of(q)?;
            let brute4 = brute_qr(&build_code(ctx.clone(), 4, true)?, budget)?;
            let classical = brute_qr(&build_code(ctx.clone(), 4, false)?, budget)?;
            if puncture_qr(&brute4)? != classical {
                return Err(mismatch(format!("punctured enumerator differs at q = {q}")));
            }
            if puncture_qr(&qr_c14(q)?)? != classical {
                return Err(mismatch(format!("punctured closed form differs at q = {q}")));
            }
            // The classical dual of dimension q - 5 has order q - 6.
            let dual_code = build_code(ctx, q as usize - 6, false)?;
            let dual = macwilliams_qr(&classical, &BigInt::from(q).pow(5))?;
            if dual != brute_qr(&dual_code, budget)? {
                return Err(mismatch(format!("classical dual differs at q = {q}")));
            }
        }
        Ok(format!("{} fields", qs.len()))
    })())
}

/// Explicit dual-enumerator coefficients for prime `q`.
pub fn dual_examples(primes: &[u64]) -> Check {
    Check::from_result(format!("explicit dual coefficients, q in {primes:?}"), (|| {
        for &q in primes {
            let r = dual_qr(q, 7)?;
            if r.checks.is_empty() {
                return Err(domain(format!("no explicit formula applies at q = {q}")));
            }
            if let Some(m) = r.first_mismatch() {
                return Err(mismatch(format!(
                    "q = {q}, {}: computed {}, expected {}",
                    m.monomial,
                    m.computed,
                    m.predicted.as_ref().map(ToString::to_string).unwrap_or_default()
                )));
            }
        }
        Ok(format!("{} primes", primes.len()))
    })())
}

pub fn classical_examples(primes: &[u64]) -> Check {
    Check::from_result(format!("explicit classical coefficient, q in {primes:?}"), (|| {
        for &q in primes {
            let m = dual_classical_coeff_check(q)?;
            if !m.matched {
                return Err(mismatch(format!(
                    "q = {q}, {}: computed {}, expected {}",
                    m.monomial,
                    m.computed,
                    m.predicted.unwrap_or_default()
                )));
            }
        }
        Ok(format!("{} primes", primes.len()))
    })())
}

/// Sixth moment of the family `y² = x(x² + ax + b)`.
pub fn legendre_sixth_moment(primes: &[u64]) -> Check {
    Check::from_result(format!("sixth moment of y² = x(x² + ax + b), p in {primes:?}"), (|| {
        for &p in primes {
            let pb = BigInt::from(p);
            let tr = TraceTable::global().trace(4, 8, p)?;
            let main = rat_int((&pb - 1u32) * (&pb + 1u32) * poly(&pb, &[5, -10, -8, -2]));
            let want = main - rat(1, 2) * rat_int((&pb - 1u32) * tr);
            let got = rat_int(crate::curve_census::legendre_family_sum(p, 3)?);
            expect_eq(&got, &want, || format!("S'_3({p})"))?;
        }
        Ok(format!("{} primes", primes.len()))
    })())
}

// ---- properties ----------------------------------------------------------

/// Field axioms exhaustively over the listed fields.
pub fn field_axioms(qs: &[u64]) -> Check {
    Check::from_result(format!("field axioms, q in {qs:?}"), (|| {
        for &q in qs {
            let f = field_of(q)?;
            let els: Vec<_> = f.enumerate_elements().collect();
            for &a in &els {
                if a != Elem::ZERO && f.mul(a, f.inv(a).expect("unit")) != Elem::ONE {
                    return Err(mismatch(format!("inverse fails for {a} in F_{q}")));
                }
                for &b in &els {
                    if f.add(a, b) != f.add(b, a) || f.mul(a, b) != f.mul(b, a) {
                        return Err(mismatch(format!("commutativity fails in F_{q}")));
                    }
                    for &c in &els {
                        if f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c))
                            || f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c))
                            || f.add(f.add(a, b), c) != f.add(a, f.add(b, c))
                        {
                            return Err(mismatch(format!("associativity or distributivity fails in F_{q}")));
                        }
                    }
                }
            }
        }
        Ok(format!("{} fields", qs.len()))
    })())
}

pub fn quad_char_multiplicative(qs: &[u64]) -> Check {
    Check::from_result(format!("quadratic character, q in {qs:?}"), (|| {
        for &q in qs {
            let f = field_of(q)?;
            for a in f.enumerate_elements() {
                for b in f.enumerate_elements() {
                    if f.chi(f.mul(a, b)) != f.chi(a) * f.chi(b) {
                        return Err(mismatch(format!("χ(ab) ≠ χ(a)χ(b) in F_{q}")));
                    }
                }
            }
            let squares = f.enumerate_elements().filter(|&a| f.chi(a) == 1).count() as u64;
            expect_eq(&squares, &((q - 1) / 2), || format!("nonzero squares in F_{q}"))?;
        }
        Ok(format!("{} fields", qs.len()))
    })())
}

/// Root-count parity and the 2-torsion splits of the quartic census.
pub fn quartic_parity(qs: &[u64]) -> Check {
    Check::from_result(format!("quartic census parity, q in {qs:?}"), (|| {
        for &q in qs {
            let census = quartic_census(&*field_of(q)?);
            for (&t, b) in &census.buckets {
                let odd_points = (q as i64 + 1 - t) % 2 != 0;
                let odd_roots = b.by_roots[1] + b.by_roots[3];
                let even_roots = b.by_roots[0] + b.by_roots[2] + b.by_roots[4];
                if b.by_roots[3] != 0 || (odd_points && even_roots != 0) || (!odd_points && odd_roots != 0) {
                    return Err(mismatch(format!("parity fails at q = {q}, t = {t}: {b:?}")));
                }
                if !odd_points {
                    // Z/2 classes split M/2, M/2; full classes 3M/4, 0, M/4.
                    let full = 4 * b.by_roots[4];
                    let partial = b.total - full;
                    if b.by_roots[2] * 2 != partial || b.by_roots[0] != partial / 2 + 3 * b.by_roots[4] {
                        return Err(mismatch(format!("2-torsion split fails at q = {q}, t = {t}: {b:?}")));
                    }
                }
            }
        }
        Ok(format!("{} fields", qs.len()))
    })())
}

pub fn yz_symmetry(qs: &[u64]) -> Check {
    Check::from_result(format!("Y/Z symmetry, q in {qs:?}"), (|| {
        for &q in qs {
            let e = qr_c14(q)?;
            if !e.is_yz_symmetric() {
                return Err(mismatch(format!("C_(1,4) enumerator asymmetric at q = {q}")));
            }
            let d = macwilliams_qr(&e, &BigInt::from(q).pow(5))?;
            if !d.is_yz_symmetric() {
                return Err(mismatch(format!("dual enumerator asymmetric at q = {q}")));
            }
        }
        Ok(format!("{} fields", qs.len()))
    })())
}

/// `t^{2R} = Σ_j a_{R,j} q^j P_{2R-2j+2}(t, q)` for `t² <= 4q`.
pub fn power_kernel_identity(qmax: u64, rmax: u32) -> Check {
    Check::from_result(format!("power-to-kernel identity, q <= {qmax}, R <= {rmax}"), (|| {
        let mut n = 0;
        for q in odd_prime_powers_upto(qmax) {
            let bound = isqrt(4 * q) as i64;
            for t in -bound..=bound {
                for r in 0..=rmax {
                    let mut rhs = BigInt::zero();
                    for j in 0..=r {
                        rhs += a_coeff(r, j)? * BigInt::from(q).pow(j) * gegenbauer(2 * r - 2 * j + 2, t, q as i64);
                    }
                    expect_eq(&BigInt::from(t).pow(2 * r), &rhs, || format!("t = {t}, q = {q}, R = {r}"))?;
                    n += 1;
                }
            }
        }
        Ok(format!("{n} cases"))
    })())
}

// ---- suites --------------------------------------------------------------

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Suite {
    ClassNumbers,
    Traces,
    Moments,
    C14,
    Duals,
    Examples,
    All,
}

impl std::str::FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "classnumbers" => Suite::ClassNumbers,
            "traces" => Suite::Traces,
            "moments" => Suite::Moments,
            "c14" => Suite::C14,
            "duals" => Suite::Duals,
            "examples" => Suite::Examples,
            "all" => Suite::All,
            other => return Err(domain(format!("unknown suite {other:?}"))),
        })
    }
}

fn within(qs: &[u64], qmax: u64) -> Vec<u64> {
    qs.iter().copied().filter(|&q| q <= qmax).collect()
}

/// Runs a suite; `qmax` caps every field size the suite touches.
pub fn run_suite(suite: Suite, qmax: Option<u64>, budget: u128) -> Vec<Check> {
    let cap = |default: u64| qmax.unwrap_or(default);
    let mut out = Vec::new();
    let all = suite == Suite::All;
    if all || suite == Suite::ClassNumbers {
        out.push(conductor_identity(&[-3, -4, -7, -8, -11, -15, -20], 12));
        out.push(hurwitz_spot_values());
    }
    if all || suite == Suite::Traces {
        out.push(dimension_zero_traces(cap(200)));
        out.push(eta_traces(cap(200)));
        out.push(power_kernel_identity(cap(49), 6));
    }
    if all || suite == Suite::Moments {
        out.push(explicit_prime_moments(&odd_primes_upto(cap(47))));
        out.push(census_moments(&within(&[3, 5, 7, 9, 11, 13], cap(13)), 5, 3));
        out.push(isogeny_counts_vs_census(&within(&[3, 5, 7, 9, 11, 13], cap(13))));
        out.push(j_special_classes(&within(&[5, 7, 11, 13], cap(13))));
    }
    if all || suite == Suite::C14 {
        out.push(c14_vs_brute(&within(&[5, 7, 9, 11, 13], cap(13)), budget));
        out.push(yz_symmetry(&within(&[5, 7, 9, 11, 13], cap(13))));
    }
    if all || suite == Suite::Duals {
        out.push(duals_vs_brute(&within(&[7, 9, 11], cap(11)), budget));
        out.push(puncture_vs_brute(&within(&[7, 9], cap(9)), budget));
    }
    if all || suite == Suite::Examples {
        out.push(dual_examples(&within(&[7, 11, 13, 17, 19, 23, 29], cap(29))));
        out.push(classical_examples(&within(&[7, 11, 13, 17, 19], cap(19))));
        out.push(legendre_sixth_moment(&within(&[3, 5, 7, 11, 13, 17, 19], cap(19))));
    }
    out
}

/// Pass/fail table, one check per line.
pub fn format_table(checks: &[Check]) -> String {
    let width = checks.iter().map(|c| c.name.chars().count()).max().unwrap_or(0);
    let mut s = String::new();
    for c in checks {
        let pad = width - c.name.chars().count();
        s.push_str(&format!(
            "{}{}  {}  {}\n",
            c.name,
            " ".repeat(pad),
            if c.passed { "PASS" } else { "FAIL" },
            c.detail
        ));
    }
    s
}
