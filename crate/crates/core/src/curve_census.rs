//! Brute-force censuses of genus-one curves over `F_q`.
//!
//! The quartic census walks every binary quartic `f4(x, y)` and records the
//! point count of `w² = f4(x, y)` together with the number of rational roots;
//! the Weierstrass census walks every short model `y² = x³ + ax + b`. Both are
//! integer-only and are partitioned over leading coefficients with an
//! associative bucket-wise merge, so results do not depend on scheduling.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::finite_field::{Elem, FieldCtx};
use crate::quadratic_forms::{rat, rat_int, Rat};
use crate::util::gcd;

/// Which curves a moment ranges over.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    /// All curves.
    All,
    /// Curves with a nontrivial rational 2-torsion point (even trace).
    TwoTorsion,
    /// Curves with full rational 2-torsion.
    FullTwoTorsion,
}

impl std::str::FromStr for Flavor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Flavor::All),
            "2tors" | "two_torsion" => Ok(Flavor::TwoTorsion),
            "full2tors" | "full_two_torsion" => Ok(Flavor::FullTwoTorsion),
            other => Err(domain(format!("unknown flavor {other:?}"))),
        }
    }
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub struct QuarticBucket {
    pub total: u64,
    /// Split by number of distinct rational roots on `P¹`, `0..=4`.
    pub by_roots: [u64; 5],
}

/// Smooth binary quartics bucketed by trace `t = q + 1 - #points`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuarticCensus {
    pub q: u64,
    pub buckets: BTreeMap<i64, QuarticBucket>,
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub struct WeierstrassBucket {
    /// Number of `(a, b)` with nonzero discriminant and this trace.
    pub models: u64,
    /// Split by number of rational roots of `x³ + ax + b`, `0..=3`.
    pub by_roots: [u64; 4],
}

impl WeierstrassBucket {
    /// Models whose cubic splits completely.
    pub fn full2tors(&self) -> u64 {
        self.by_roots[3]
    }
}

/// Short Weierstrass models bucketed by trace (requires `p ≥ 5`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeierstrassCensus {
    pub q: u64,
    pub buckets: BTreeMap<i64, WeierstrassBucket>,
}

/// A census from which weighted class counts can be read off.
pub trait TraceCensus {
    fn field_size(&self) -> u64;

    /// `t ↦ (N_A(t), N_{A,2x2}(t))` as recovered from raw counts.
    fn weighted_counts(&self) -> BTreeMap<i64, (Rat, Rat)>;
}

fn pgl_factor(q: u64) -> u64 {
    (q - 1) * (q - 1) * q * (q + 1)
}

impl TraceCensus for QuarticCensus {
    fn field_size(&self) -> u64 {
        self.q
    }

    fn weighted_counts(&self) -> BTreeMap<i64, (Rat, Rat)> {
        let denom = rat_int(pgl_factor(self.q));
        self.buckets
            .iter()
            .map(|(&t, b)| {
                let all = rat_int(b.total) / &denom;
                let full = rat_int(4 * b.by_roots[4]) / &denom;
                (t, (all, full))
            })
            .collect()
    }
}

impl TraceCensus for WeierstrassCensus {
    fn field_size(&self) -> u64 {
        self.q
    }

    fn weighted_counts(&self) -> BTreeMap<i64, (Rat, Rat)> {
        let denom = rat_int(self.q - 1);
        self.buckets
            .iter()
            .map(|(&t, b)| {
                (
                    t,
                    (rat_int(b.models) / &denom, rat_int(b.full2tors()) / &denom),
                )
            })
            .collect()
    }
}

/// `Σ_t t^{2R} · w(t)` with `w` the weighted count selected by `flavor`.
pub fn empirical_moment<C: TraceCensus + ?Sized>(census: &C, r: u32, flavor: Flavor) -> Rat {
    let mut acc = rat(0, 1);
    for (t, (all, full)) in census.weighted_counts() {
        let weight = match flavor {
            Flavor::All => all,
            Flavor::TwoTorsion if t % 2 == 0 => all,
            Flavor::TwoTorsion => continue,
            Flavor::FullTwoTorsion => full,
        };
        acc += weight * rat_int(BigInt::from(t).pow(2 * r));
    }
    acc
}

#[inline]
fn eval_affine(ctx: &FieldCtx, f: &[Elem; 5], a: Elem) -> Elem {
    // f(1, a) = c4 + c3 a + c2 a² + c1 a³ + c0 a⁴
    let mut acc = f[4];
    for &c in f[..4].iter().rev() {
        acc = ctx.add(ctx.mul(acc, a), c);
    }
    acc
}

/// Point count of `w² = f4(x, y)` and the number of distinct rational roots
/// of `f4` on `P¹`, evaluated at `(1, a)` for `a ∈ F_q` and at `(0, 1)`.
///
/// `f4 = [c4, c3, c2, c1, c0]` are the coefficients of
/// `x⁴, x³y, x²y², xy³, y⁴`.
pub fn quartic_point_count(ctx: &FieldCtx, f4: &[Elem; 5]) -> Result<(u64, u64)> {
    if f4.iter().all(|c| c.is_zero()) {
        return Err(domain("quartic is identically zero"));
    }
    Ok(point_count_unchecked(ctx, f4))
}

#[inline]
fn point_count_unchecked(ctx: &FieldCtx, f4: &[Elem; 5]) -> (u64, u64) {
    let mut roots = 0;
    let mut squares = 0;
    let mut tally = |val: Elem| match ctx.chi(val) {
        0 => roots += 1,
        1 => squares += 1,
        _ => {}
    };
    for a in ctx.enumerate_elements() {
        tally(eval_affine(ctx, f4, a));
    }
    tally(f4[4]);
    (roots + 2 * squares, roots)
}

/// Strips trailing zeros so the last entry is the leading coefficient.
fn trim(poly: &mut Vec<Elem>) {
    while poly.last().is_some_and(|c| c.is_zero()) {
        poly.pop();
    }
}

/// Monic-free polynomial gcd over `F_q`, low degree first; `gcd(g, 0) = g`.
fn poly_gcd(ctx: &FieldCtx, mut a: Vec<Elem>, mut b: Vec<Elem>) -> Vec<Elem> {
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        // a mod b
        let lead_inv = ctx.inv(*b.last().unwrap()).expect("trimmed");
        while a.len() >= b.len() {
            let factor = ctx.mul(*a.last().unwrap(), lead_inv);
            let shift = a.len() - b.len();
            for (i, &c) in b.iter().enumerate() {
                a[shift + i] = ctx.sub(a[shift + i], ctx.mul(factor, c));
            }
            trim(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a
}

/// True iff the binary quartic has four distinct roots over the closure.
///
/// With `g(x) = f4(x, 1)`: squarefree iff `gcd(g, g')` is a nonzero constant
/// and not both `c4` and `c3` vanish (that would be a repeated root at
/// `(1 : 0)`).
pub fn is_smooth_quartic(ctx: &FieldCtx, f4: &[Elem; 5]) -> bool {
    let [c4, c3, c2, c1, c0] = *f4;
    if c4.is_zero() && c3.is_zero() {
        return false;
    }
    let g = vec![c0, c1, c2, c3, c4];
    let deriv = vec![
        c1,
        ctx.mul(ctx.from_int(2), c2),
        ctx.mul(ctx.from_int(3), c3),
        ctx.mul(ctx.from_int(4), c4),
    ];
    poly_gcd(ctx, g, deriv).len() == 1
}

fn trace_index(q: u64, t: i64) -> usize {
    (t + q as i64 + 1) as usize
}

/// Census of all smooth binary quartics over `F_q`.
pub fn quartic_census(ctx: &FieldCtx) -> QuarticCensus {
    let q = ctx.q();
    let width = 2 * q as usize + 3;
    let leads: Vec<(Elem, Elem)> = ctx
        .enumerate_elements()
        .flat_map(|c4| ctx.enumerate_elements().map(move |c3| (c4, c3)))
        .collect();
    let merged = leads
        .par_iter()
        .map(|&(c4, c3)| {
            let mut local = vec![QuarticBucket::default(); width];
            if c4.is_zero() && c3.is_zero() {
                return local;
            }
            for c2 in ctx.enumerate_elements() {
                for c1 in ctx.enumerate_elements() {
                    for c0 in ctx.enumerate_elements() {
                        let f = [c4, c3, c2, c1, c0];
                        if !is_smooth_quartic(ctx, &f) {
                            continue;
                        }
                        let (points, roots) = point_count_unchecked(ctx, &f);
                        let t = q as i64 + 1 - points as i64;
                        let b = &mut local[trace_index(q, t)];
                        b.total += 1;
                        b.by_roots[roots as usize] += 1;
                    }
                }
            }
            local
        })
        .reduce(
            || vec![QuarticBucket::default(); width],
            |mut acc, part| {
                for (a, b) in acc.iter_mut().zip(part) {
                    a.total += b.total;
                    for k in 0..5 {
                        a.by_roots[k] += b.by_roots[k];
                    }
                }
                acc
            },
        );
    let buckets = merged
        .into_iter()
        .enumerate()
        .filter(|(_, b)| b.total > 0)
        .map(|(i, b)| (i as i64 - q as i64 - 1, b))
        .collect();
    QuarticCensus { q, buckets }
}

/// Census of all short Weierstrass models `y² = x³ + ax + b` over `F_q`.
pub fn weierstrass_census(ctx: &FieldCtx) -> Result<WeierstrassCensus> {
    if ctx.p() < 5 {
        return Err(Error::Unsupported(
            "short Weierstrass models need p >= 5; use the quartic census".into(),
        ));
    }
    let q = ctx.q();
    let width = 2 * q as usize + 3;
    let cubes: Vec<Elem> = ctx.enumerate_elements().map(|x| ctx.pow(x, 3)).collect();
    let four = ctx.from_int(4);
    let twenty_seven = ctx.from_int(27);
    let merged = ctx
        .enumerate_elements()
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&a| {
            let mut local = vec![WeierstrassBucket::default(); width];
            let a_part = ctx.mul(four, ctx.pow(a, 3));
            for b in ctx.enumerate_elements() {
                let disc = ctx.add(a_part, ctx.mul(twenty_seven, ctx.mul(b, b)));
                if disc.is_zero() {
                    continue;
                }
                let mut chi_sum = 0i64;
                let mut roots = 0;
                for x in ctx.enumerate_elements() {
                    let val = ctx.add(ctx.add(cubes[x.index()], ctx.mul(a, x)), b);
                    match ctx.chi(val) {
                        0 => roots += 1,
                        c => chi_sum += c as i64,
                    }
                }
                let bucket = &mut local[trace_index(q, -chi_sum)];
                bucket.models += 1;
                bucket.by_roots[roots] += 1;
            }
            local
        })
        .reduce(
            || vec![WeierstrassBucket::default(); width],
            |mut acc, part| {
                for (x, y) in acc.iter_mut().zip(part) {
                    x.models += y.models;
                    for k in 0..4 {
                        x.by_roots[k] += y.by_roots[k];
                    }
                }
                acc
            },
        );
    let buckets = merged
        .into_iter()
        .enumerate()
        .filter(|(_, b)| b.models > 0)
        .map(|(i, b)| (i as i64 - q as i64 - 1, b))
        .collect();
    Ok(WeierstrassCensus { q, buckets })
}

/// `Σ' (#E_{a,b}(F_p) - (p + 1))^{2R}` over the curves
/// `y²z = x(x² + axz + bz²)`, i.e. over `b ≠ 0`, `a² ≠ 4b`.
pub fn legendre_family_sum(p: u64, r: u32) -> Result<BigInt> {
    let ctx = FieldCtx::new(p, 1)?;
    let four = ctx.from_int(4);
    let mut total = BigInt::from(0);
    for a in ctx.enumerate_elements() {
        for b in ctx.enumerate_elements() {
            if b.is_zero() || ctx.mul(a, a) == ctx.mul(four, b) {
                continue;
            }
            let s: i64 = ctx
                .enumerate_elements()
                .map(|x| {
                    let quad = ctx.add(ctx.mul(ctx.add(x, a), x), b);
                    ctx.chi(ctx.mul(x, quad)) as i64
                })
                .sum();
            total += BigInt::from(s).pow(2 * r);
        }
    }
    Ok(total)
}

/// Rational 2-torsion structure of an elliptic curve.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum TwoTorsion {
    Trivial,
    Z2,
    Z2xZ2,
}

impl TwoTorsion {
    fn from_roots(roots: usize) -> Self {
        match roots {
            0 => TwoTorsion::Trivial,
            1 => TwoTorsion::Z2,
            _ => TwoTorsion::Z2xZ2,
        }
    }
}

/// One `F_q`-isomorphism class found by orbit enumeration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsoClass {
    pub trace: i64,
    /// Number of models in the orbit.
    pub models: u64,
    /// `|Aut_{F_q}(E)| = (q - 1) / models`.
    pub aut: u64,
    pub two_torsion: TwoTorsion,
}

/// Isomorphism classes with a fixed `j`-invariant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JClasses {
    pub classes: Vec<IsoClass>,
}

impl JClasses {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn traces(&self) -> BTreeSet<i64> {
        self.classes.iter().map(|c| c.trace).collect()
    }

    /// Classes with the given trace.
    pub fn with_trace(&self, t: i64) -> Vec<&IsoClass> {
        self.classes.iter().filter(|c| c.trace == t).collect()
    }

    pub fn supersingular(&self, p: u64) -> bool {
        self.classes.iter().all(|c| c.trace % p as i64 == 0)
    }
}

/// Classes with `j = 0` (`y² = x³ + b`) and `j = 1728` (`y² = x³ + ax`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JSpecialCensus {
    pub q: u64,
    pub j0: JClasses,
    pub j1728: JClasses,
}

fn orbit_classes<F>(ctx: &FieldCtx, exponent: u64, curve: F) -> JClasses
where
    F: Fn(Elem, Elem) -> Elem,
{
    let q = ctx.q();
    let mut seen = vec![false; q as usize];
    let units: Vec<Elem> = ctx.enumerate_elements().skip(1).collect();
    let scalars: BTreeSet<Elem> = units.iter().map(|&u| ctx.pow(u, exponent)).collect();
    let mut classes = Vec::new();
    for &c in &units {
        if seen[c.index()] {
            continue;
        }
        let mut size = 0;
        for &s in &scalars {
            let m = ctx.mul(s, c);
            if !seen[m.index()] {
                seen[m.index()] = true;
                size += 1;
            }
        }
        let mut chi_sum = 0i64;
        let mut roots = 0;
        for x in ctx.enumerate_elements() {
            match ctx.chi(curve(c, x)) {
                0 => roots += 1,
                v => chi_sum += v as i64,
            }
        }
        classes.push(IsoClass {
            trace: -chi_sum,
            models: size,
            aut: (q - 1) / size,
            two_torsion: TwoTorsion::from_roots(roots),
        });
    }
    classes.sort_by_key(|c| (c.trace, c.two_torsion));
    debug_assert_eq!(classes.len() as u64, gcd(exponent, q - 1));
    JClasses { classes }
}

/// Orbit census of the `j = 0` and `j = 1728` families (requires `p ≥ 5`).
pub fn j_special_census(ctx: &FieldCtx) -> Result<JSpecialCensus> {
    if ctx.p() < 5 {
        return Err(Error::Unsupported(
            "j = 0 and j = 1728 coincide in characteristic 3".into(),
        ));
    }
    let j0 = orbit_classes(ctx, 6, |b, x| ctx.add(ctx.pow(x, 3), b));
    let j1728 = orbit_classes(ctx, 4, |a, x| ctx.add(ctx.pow(x, 3), ctx.mul(a, x)));
    Ok(JSpecialCensus { q: ctx.q(), j0, j1728 })
}

#[derive(Serialize)]
struct BucketJson {
    t: i64,
    total: String,
    by_roots: Vec<String>,
}

#[derive(Serialize)]
struct CensusJson {
    q: u64,
    kind: &'static str,
    buckets: Vec<BucketJson>,
}

impl QuarticCensus {
    /// Dump as `{"q", "kind": "quartic", "buckets": [...]}` with counts as
    /// decimal strings.
    pub fn to_json(&self) -> String {
        let buckets = self
            .buckets
            .iter()
            .map(|(&t, b)| BucketJson {
                t,
                total: b.total.to_string(),
                by_roots: b.by_roots.iter().map(u64::to_string).collect(),
            })
            .collect();
        serde_json::to_string(&CensusJson { q: self.q, kind: "quartic", buckets })
            .expect("serializable")
    }
}

impl WeierstrassCensus {
    /// Same layout as [`QuarticCensus::to_json`]; `total` is the model count
    /// and `by_roots` splits by rational roots of the cubic.
    pub fn to_json(&self) -> String {
        let buckets = self
            .buckets
            .iter()
            .map(|(&t, b)| BucketJson {
                t,
                total: b.models.to_string(),
                by_roots: b.by_roots.iter().map(u64::to_string).collect(),
            })
            .collect();
        serde_json::to_string(&CensusJson { q: self.q, kind: "weierstrass", buckets })
            .expect("serializable")
    }
}
