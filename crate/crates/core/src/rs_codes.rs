//! Projective and classical Reed-Solomon codes over `F_q`, exhaustive
//! enumeration of their QR weight enumerators, and the puncturing relation.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::enumerators::QREnum;
use crate::error::{consistency, domain, Error, Result};
use crate::finite_field::{Elem, FieldCtx};

/// Default cap on the number of codewords `brute_qr` will visit.
pub const DEFAULT_BUDGET: u128 = 100_000_000;

/// `DEFAULT_BUDGET` unless `QRWE_BUDGET` holds a positive integer.
pub fn budget_from_env() -> u128 {
    std::env::var("QRWE_BUDGET")
        .ok()
        .and_then(|s| s.trim().parse::<u128>().ok())
        .filter(|&b| b > 0)
        .unwrap_or(DEFAULT_BUDGET)
}

/// The image of degree-`h` binary forms evaluated at `(1, a)` for
/// `a ∈ F_q` in index order, followed by `(0, 1)` when projective.
#[derive(Clone, Debug)]
pub struct CodeSpec {
    ctx: Arc<FieldCtx>,
    h: usize,
    projective: bool,
    points: Vec<(Elem, Elem)>,
    rows: Vec<Vec<Elem>>,
}

impl CodeSpec {
    pub fn field(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn q(&self) -> u64 {
        self.ctx.q()
    }

    pub fn h(&self) -> usize {
        self.h
    }

    pub fn is_projective(&self) -> bool {
        self.projective
    }

    pub fn length(&self) -> usize {
        self.points.len()
    }

    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    pub fn points(&self) -> &[(Elem, Elem)] {
        &self.points
    }

    /// Row `a` evaluates `x^a y^{h-a}`.
    pub fn rows(&self) -> &[Vec<Elem>] {
        &self.rows
    }

    /// `q^dim`.
    pub fn size(&self) -> BigInt {
        BigInt::from(self.q()).pow(self.dimension() as u32)
    }

    /// True iff every row of `self` is orthogonal to every row of `other`.
    pub fn is_orthogonal_to(&self, other: &CodeSpec) -> bool {
        if self.length() != other.length() || self.q() != other.q() {
            return false;
        }
        let f = &self.ctx;
        self.rows.iter().all(|r| {
            other.rows.iter().all(|s| {
                r.iter().zip(s).fold(Elem::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(a, b))).is_zero()
            })
        })
    }
}

fn rank(ctx: &FieldCtx, rows: &[Vec<Elem>]) -> usize {
    let mut m: Vec<Vec<Elem>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, piv);
        let inv = ctx.inv(m[r][c]).expect("nonzero pivot");
        let pivot = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = ctx.mul(row[c], inv);
                for (x, &y) in row[c..].iter_mut().zip(&pivot[c..]) {
                    *x = ctx.sub(*x, ctx.mul(f, y));
                }
            }
        }
        r += 1;
    }
    r
}

/// Builds `C_{1,h}` (projective, length `q+1`) or `C'_{1,h}` (classical,
/// length `q`), checking that the generator matrix has rank `h + 1`.
pub fn build_code(ctx: Arc<FieldCtx>, h: usize, projective: bool) -> Result<CodeSpec> {
    let q = ctx.q() as usize;
    if h > q {
        return Err(domain(format!("form degree {h} exceeds q = {q}")));
    }
    let mut points: Vec<(Elem, Elem)> = ctx.enumerate_elements().map(|a| (Elem::ONE, a)).collect();
    if projective {
        points.push((Elem::ZERO, Elem::ONE));
    }
    let rows: Vec<Vec<Elem>> = (0..=h)
        .map(|a| {
            points
                .iter()
                .map(|&(x, y)| ctx.mul(ctx.pow(x, a as u64), ctx.pow(y, (h - a) as u64)))
                .collect()
        })
        .collect();
    let r = rank(&ctx, &rows);
    if r != h + 1 {
        return Err(domain(format!("generator matrix for h = {h} has rank {r}, expected {}", h + 1)));
    }
    Ok(CodeSpec { ctx, h, projective, points, rows })
}

/// Visits every codeword and tallies zero / square / non-square coordinates.
///
/// Codewords are `F_p`-combinations of `β^l g_r` for the power basis `β^l`
/// of `F_q` over `F_p`. A mixed-radix counter steps through the digits;
/// each digit that changes adds its row once (a wrap from `p-1` to `0`
/// adds the `p`-th copy, which is zero). The two top digits partition the
/// work across threads.
pub fn brute_qr(code: &CodeSpec, budget: u128) -> Result<QREnum> {
    let ctx = &*code.ctx;
    let (p, v) = (ctx.p() as usize, ctx.v() as usize);
    let n = code.length();
    let required = (ctx.q() as u128)
        .checked_pow(code.dimension() as u32)
        .unwrap_or(u128::MAX);
    if required > budget {
        return Err(Error::Budget { required, budget });
    }
    let mut basis: Vec<Vec<Elem>> = Vec::with_capacity(code.dimension() * v);
    for row in &code.rows {
        for l in 0..v {
            let beta = ctx.elem((p as u64).pow(l as u32))?;
            basis.push(row.iter().map(|&x| ctx.mul(beta, x)).collect());
        }
    }
    let digits = basis.len();
    let top = digits.min(2);
    let low = digits - top;
    let chi: Vec<u8> = ctx
        .enumerate_elements()
        .map(|x| match ctx.chi(x) {
            0 => 0,
            1 => 1,
            _ => 2,
        })
        .collect();
    let side = n + 1;
    let prefixes: Vec<usize> = (0..p.pow(top as u32)).collect();
    let counts = prefixes
        .par_iter()
        .map(|&prefix| {
            let mut word = vec![Elem::ZERO; n];
            let mut m = prefix;
            for d in 0..top {
                let row = &basis[low + d];
                for _ in 0..m % p {
                    for (w, &r) in word.iter_mut().zip(row) {
                        *w = ctx.add(*w, r);
                    }
                }
                m /= p;
            }
            let mut local = vec![0u64; side * side];
            let mut counter = vec![0usize; low];
            loop {
                let (mut j, mut k) = (0usize, 0usize);
                for w in &word {
                    match chi[w.index()] {
                        1 => j += 1,
                        2 => k += 1,
                        _ => {}
                    }
                }
                local[j * side + k] += 1;
                let mut d = 0;
                loop {
                    if d == low {
                        return local;
                    }
                    for (w, &r) in word.iter_mut().zip(&basis[d]) {
                        *w = ctx.add(*w, r);
                    }
                    counter[d] += 1;
                    if counter[d] < p {
                        break;
                    }
                    counter[d] = 0;
                    d += 1;
                }
            }
        })
        .reduce(
            || vec![0u64; side * side],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(&b) {
                    *x += y;
                }
                a
            },
        );
    let mut out = QREnum::new(n, ctx.q());
    for j in 0..=n {
        for k in 0..=n - j {
            out.add_term(j, k, BigInt::from(counts[j * side + k]))?;
        }
    }
    Ok(out)
}

/// Enumerator of the projective code punctured at one coordinate:
/// `A'_{q-j-k,j,k} = ((q+1-j-k) A_{q+1-j-k,j,k} + (j+1) A_{q-j-k,j+1,k}
/// + (k+1) A_{q-j-k,j,k+1}) / (q+1)`.
pub fn puncture_qr(e: &QREnum) -> Result<QREnum> {
    let q = e.q();
    let n = e.n();
    if n as u64 != q + 1 {
        return Err(domain(format!("puncturing expects length q + 1 = {}, got {n}", q + 1)));
    }
    let denom = BigInt::from(q + 1);
    let mut out = QREnum::new(n - 1, q);
    for j in 0..n {
        for k in 0..n - j {
            let num = e.get(j, k) * (n - j - k) + e.get(j + 1, k) * (j + 1) + e.get(j, k + 1) * (k + 1);
            let (quot, rem) = num.div_rem(&denom);
            if !rem.is_zero() || quot.is_negative() {
                return Err(consistency(format!(
                    "punctured coefficient of Y^{j} Z^{k} is {num}/{denom}; input is not point-transitive"
                )));
            }
            out.add_term(j, k, quot)?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerators::{macwilliams_qr, mds_hamming, specialize_to_hamming};

    fn field(p: u64, v: u32) -> Arc<FieldCtx> {
        Arc::new(FieldCtx::new(p, v).unwrap())
    }

    #[test]
    fn shapes_and_duality() {
        let f7 = field(7, 1);
        let c = build_code(f7.clone(), 4, true).unwrap();
        assert_eq!((c.length(), c.dimension()), (8, 5));
        let d = build_code(f7.clone(), 2, true).unwrap();
        assert!(c.is_orthogonal_to(&d));
        assert!(!c.is_orthogonal_to(&build_code(f7.clone(), 3, true).unwrap()));
        let f9 = field(3, 2);
        let cl = build_code(f9.clone(), 4, false).unwrap();
        assert_eq!((cl.length(), cl.dimension()), (9, 5));
        assert!(cl.is_orthogonal_to(&build_code(f9.clone(), 3, false).unwrap()));
        assert!(build_code(f7.clone(), 8, true).is_err());
        assert!(build_code(f7, 7, false).is_err());
    }

    #[test]
    fn brute_force_small() {
        let f5 = field(5, 1);
        let c = build_code(f5, 4, true).unwrap();
        let e = brute_qr(&c, DEFAULT_BUDGET).unwrap();
        assert_eq!(e.total(), BigInt::from(3125));
        assert!(e.is_yz_symmetric());
        assert_eq!(specialize_to_hamming(&e), mds_hamming(6, 5, 5).unwrap());
        let f9 = field(3, 2);
        let c = build_code(f9, 2, true).unwrap();
        let e = brute_qr(&c, DEFAULT_BUDGET).unwrap();
        assert_eq!(specialize_to_hamming(&e), mds_hamming(10, 3, 9).unwrap());
    }

    #[test]
    fn budget_guard() {
        let c = build_code(field(7, 1), 4, true).unwrap();
        match brute_qr(&c, 1000) {
            Err(Error::Budget { required, budget }) => assert_eq!((required, budget), (16807, 1000)),
            other => panic!("expected budget refusal, got {other:?}"),
        }
    }

    #[test]
    fn dual_and_puncture_at_seven() {
        let f7 = field(7, 1);
        let c = build_code(f7.clone(), 4, true).unwrap();
        let e = brute_qr(&c, DEFAULT_BUDGET).unwrap();
        let dual = brute_qr(&build_code(f7.clone(), 2, true).unwrap(), DEFAULT_BUDGET).unwrap();
        assert_eq!(macwilliams_qr(&e, &c.size()).unwrap(), dual);
        let punct = puncture_qr(&e).unwrap();
        let classical = brute_qr(&build_code(f7, 4, false).unwrap(), DEFAULT_BUDGET).unwrap();
        assert_eq!(punct, classical);
        assert_eq!(punct.total(), BigInt::from(7).pow(5));
        assert_eq!(punct.get(0, 0), BigInt::from(1));
    }

    #[test]
    fn puncture_rejects_non_transitive() {
        let mut e = QREnum::zero_code(6, 5);
        e.add_term(1, 0, BigInt::from(1)).unwrap();
        assert!(puncture_qr(&e).is_err());
        assert!(puncture_qr(&QREnum::zero_code(5, 5)).is_err());
    }
}
