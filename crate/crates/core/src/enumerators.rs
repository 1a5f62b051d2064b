//! Trivariate quadratic-residue weight enumerators, the Hamming/MDS
//! enumerators, and both MacWilliams transforms.
//!
//! A codeword of length `n` contributes `X^i Y^j Z^k` where `i` counts zero
//! coordinates, `j` nonzero squares and `k` non-squares. Enumerators are
//! stored sparsely by `(j, k)`; the `X` degree is `n - j - k`.

use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{consistency, domain, Error, Result};
use crate::util::{binomial, odd_prime_power, trinomial};

/// Homogeneous enumerator `Σ A_{n-j-k,j,k} X^{n-j-k} Y^j Z^k` over `F_q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QREnum {
    n: usize,
    q: u64,
    terms: BTreeMap<(usize, usize), BigInt>,
}

#[derive(Serialize)]
struct JsonTerm {
    i: usize,
    j: usize,
    k: usize,
    #[serde(rename = "A")]
    a: String,
}

#[derive(Serialize)]
struct JsonEnum {
    n: usize,
    q: u64,
    terms: Vec<JsonTerm>,
}

impl QREnum {
    /// The zero polynomial of degree `n` over `F_q`.
    pub fn new(n: usize, q: u64) -> Self {
        Self { n, q, terms: BTreeMap::new() }
    }

    /// Enumerator of the zero code, `X^n`.
    pub fn zero_code(n: usize, q: u64) -> Self {
        let mut e = Self::new(n, q);
        e.add_term(0, 0, BigInt::one()).expect("in range");
        e
    }

    /// Enumerator of all of `F_q^n`.
    pub fn full_space(n: usize, q: u64) -> Self {
        let half = BigInt::from((q - 1) / 2);
        let mut e = Self::new(n, q);
        for j in 0..=n {
            for k in 0..=n - j {
                let c = trinomial(n as u64, j as u64, k as u64) * half.pow((j + k) as u32);
                e.add_term(j, k, c).expect("in range");
            }
        }
        e
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// `A_{n-j-k,j,k}`, zero when absent or out of range.
    pub fn get(&self, j: usize, k: usize) -> BigInt {
        self.terms.get(&(j, k)).cloned().unwrap_or_default()
    }

    /// Adds `c` to the coefficient of `X^{n-j-k} Y^j Z^k`; zero results are
    /// dropped so equality is structural.
    pub fn add_term(&mut self, j: usize, k: usize, c: BigInt) -> Result<()> {
        if j + k > self.n {
            return Err(domain(format!("monomial Y^{j} Z^{k} exceeds degree {}", self.n)));
        }
        if c.is_zero() {
            return Ok(());
        }
        let entry = self.terms.entry((j, k)).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(j, k));
        }
        Ok(())
    }

    /// Nonzero terms as `((j, k), A)`.
    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize), &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `E(1, 1, 1)`.
    pub fn total(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn is_yz_symmetric(&self) -> bool {
        self.terms.iter().all(|(&(j, k), c)| self.get(k, j) == *c)
    }

    /// JSON with terms sorted by `(j + k, j)`; coefficients as decimal strings.
    pub fn to_json(&self) -> String {
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by_key(|&(j, k)| (j + k, j));
        let doc = JsonEnum {
            n: self.n,
            q: self.q,
            terms: keys
                .into_iter()
                .map(|(j, k)| JsonTerm { i: self.n - j - k, j, k, a: self.terms[&(j, k)].to_string() })
                .collect(),
        };
        serde_json::to_string(&doc).expect("serializable")
    }

    /// CSV with header `i,j,k,A` in the JSON order.
    pub fn to_csv(&self) -> String {
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by_key(|&(j, k)| (j + k, j));
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["i", "j", "k", "A"]).expect("in-memory write");
        for (j, k) in keys {
            w.write_record([
                (self.n - j - k).to_string(),
                j.to_string(),
                k.to_string(),
                self.terms[&(j, k)].to_string(),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("ascii")
    }

    /// Coefficientwise sum of two enumerators of the same shape.
    pub fn sum(&self, other: &QREnum) -> Result<QREnum> {
        if (self.n, self.q) != (other.n, other.q) {
            return Err(domain("enumerators differ in length or field"));
        }
        let mut out = self.clone();
        for (&(j, k), c) in other.terms() {
            out.add_term(j, k, c.clone())?;
        }
        Ok(out)
    }
}

/// `a + b s` in `Z[s]` with `s² = square`, where `square = ±q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadRingElem {
    pub a: BigInt,
    pub b: BigInt,
    square: i64,
}

impl QuadRingElem {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, square: i64) -> Self {
        Self { a: a.into(), b: b.into(), square }
    }

    /// The ring containing `ε_q √q`: `s² = q` for `q ≡ 1 (4)`, `s² = -q` otherwise.
    pub fn square_for(q: u64) -> i64 {
        if q % 4 == 1 {
            q as i64
        } else {
            -(q as i64)
        }
    }

    pub fn zero(square: i64) -> Self {
        Self::new(0, 0, square)
    }

    pub fn one(square: i64) -> Self {
        Self::new(1, 0, square)
    }

    pub fn square(&self) -> i64 {
        self.square
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.a.clone(), -&self.b, self.square)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.square);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    fn scale(&self, c: &BigInt) -> Self {
        Self::new(&self.a * c, &self.b * c, self.square)
    }
}

impl Add for &QuadRingElem {
    type Output = QuadRingElem;
    fn add(self, o: &QuadRingElem) -> QuadRingElem {
        debug_assert_eq!(self.square, o.square);
        QuadRingElem::new(&self.a + &o.a, &self.b + &o.b, self.square)
    }
}

impl AddAssign<&QuadRingElem> for QuadRingElem {
    fn add_assign(&mut self, o: &QuadRingElem) {
        debug_assert_eq!(self.square, o.square);
        self.a += &o.a;
        self.b += &o.b;
    }
}

impl Sub for &QuadRingElem {
    type Output = QuadRingElem;
    fn sub(self, o: &QuadRingElem) -> QuadRingElem {
        debug_assert_eq!(self.square, o.square);
        QuadRingElem::new(&self.a - &o.a, &self.b - &o.b, self.square)
    }
}

impl Neg for &QuadRingElem {
    type Output = QuadRingElem;
    fn neg(self) -> QuadRingElem {
        QuadRingElem::new(-&self.a, -&self.b, self.square)
    }
}

impl Mul for &QuadRingElem {
    type Output = QuadRingElem;
    fn mul(self, o: &QuadRingElem) -> QuadRingElem {
        debug_assert_eq!(self.square, o.square);
        QuadRingElem::new(
            &self.a * &o.a + &self.b * &o.b * self.square,
            &self.a * &o.b + &self.b * &o.a,
            self.square,
        )
    }
}

/// Weight distribution `A_0..A_n` of an `[n, dim]` MDS code over `F_q`.
pub fn mds_hamming(n: usize, dim: usize, q: u64) -> Result<Vec<BigInt>> {
    if dim < 1 || dim > n || n as u64 > q + 1 {
        return Err(domain(format!("need 1 <= dim <= n <= q + 1, got n={n}, dim={dim}, q={q}")));
    }
    let d = n - dim + 1;
    let qb = BigInt::from(q);
    let mut out = vec![BigInt::zero(); n + 1];
    out[0] = BigInt::one();
    for (i, slot) in out.iter_mut().enumerate().skip(d) {
        let mut s = BigInt::zero();
        for j in 0..=i - d {
            let term = binomial(i as u64 - 1, j as u64) * qb.pow((i - d - j) as u32);
            if j % 2 == 0 {
                s += term;
            } else {
                s -= term;
            }
        }
        *slot = binomial(n as u64, i as u64) * (q - 1) * s;
    }
    let total: BigInt = out.iter().sum();
    if total != qb.pow(dim as u32) {
        return Err(consistency(format!("MDS distribution sums to {total}, not q^{dim}")));
    }
    Ok(out)
}

/// `W_{C⊥}(X, Y) = W_C(X + (q-1)Y, X - Y) / |C|`.
pub fn macwilliams_hamming(w: &[BigInt], q: u64, size_c: &BigInt) -> Result<Vec<BigInt>> {
    if w.is_empty() {
        return Err(domain("empty weight distribution"));
    }
    let n = w.len() - 1;
    let qm1 = BigInt::from(q - 1);
    let mut out = vec![BigInt::zero(); n + 1];
    for (i, a) in w.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        // (X + (q-1)Y)^{n-i} (X - Y)^i
        for u in 0..=n - i {
            let left = binomial((n - i) as u64, u as u64) * qm1.pow(u as u32);
            for v in 0..=i {
                let mut c = &left * binomial(i as u64, v as u64) * a;
                if v % 2 == 1 {
                    c = -c;
                }
                out[u + v] += c;
            }
        }
    }
    for (i, c) in out.iter_mut().enumerate() {
        let (quot, rem) = c.div_rem(size_c);
        if !rem.is_zero() || quot.is_negative() {
            return Err(consistency(format!("dual weight A_{i} = {c}/{size_c} is not a nonnegative integer")));
        }
        *c = quot;
    }
    Ok(out)
}

/// Dense homogeneous polynomial in `X, Y, Z`, indexed by `(j, k)`.
struct HomPoly {
    deg: usize,
    coeffs: Vec<QuadRingElem>,
}

impl HomPoly {
    fn idx(&self, j: usize, k: usize) -> usize {
        j * (self.deg + 1) + k
    }

    fn constant(square: i64) -> Self {
        Self { deg: 0, coeffs: vec![QuadRingElem::one(square)] }
    }

    fn mul(&self, o: &HomPoly, square: i64) -> HomPoly {
        let deg = self.deg + o.deg;
        let mut out = HomPoly { deg, coeffs: vec![QuadRingElem::zero(square); (deg + 1) * (deg + 1)] };
        for j1 in 0..=self.deg {
            for k1 in 0..=self.deg - j1 {
                let a = &self.coeffs[self.idx(j1, k1)];
                if a.is_zero() {
                    continue;
                }
                for j2 in 0..=o.deg {
                    for k2 in 0..=o.deg - j2 {
                        let b = &o.coeffs[o.idx(j2, k2)];
                        if b.is_zero() {
                            continue;
                        }
                        let at = out.idx(j1 + j2, k1 + k2);
                        out.coeffs[at] += &(a * b);
                    }
                }
            }
        }
        out
    }

    /// Powers `L^0 .. L^max` of the linear form `x X + y Y + z Z`.
    fn linear_powers(x: &QuadRingElem, y: &QuadRingElem, z: &QuadRingElem, max: usize) -> Vec<HomPoly> {
        let square = x.square();
        let lin = HomPoly {
            deg: 1,
            coeffs: vec![x.clone(), z.clone(), y.clone(), QuadRingElem::zero(square)],
        };
        let mut out = vec![HomPoly::constant(square)];
        for e in 1..=max {
            let next = out[e - 1].mul(&lin, square);
            out.push(next);
        }
        out
    }
}

/// The three substituted linear forms, scaled by 2:
/// `2X' = 2X + (q-1)(Y+Z)`, `2Y' = 2X + (s-1)Y - (s+1)Z`, `2Z' = 2X - (s+1)Y + (s-1)Z`.
fn substitution(q: u64) -> [[QuadRingElem; 3]; 3] {
    let sq = QuadRingElem::square_for(q);
    let two = QuadRingElem::new(2, 0, sq);
    let qm1 = QuadRingElem::new(q as i64 - 1, 0, sq);
    let beta = QuadRingElem::new(-1, 1, sq);
    let gamma = QuadRingElem::new(-1, -1, sq);
    [
        [two.clone(), qm1.clone(), qm1],
        [two.clone(), beta.clone(), gamma.clone()],
        [two, gamma, beta],
    ]
}

fn check_transform_input(e: &QREnum, size_c: &BigInt) -> Result<()> {
    odd_prime_power(e.q)?;
    if !size_c.is_positive() {
        return Err(domain("code size must be positive"));
    }
    if !e.is_yz_symmetric() {
        return Err(Error::Unsupported(
            "QR MacWilliams transform needs a Y/Z-symmetric enumerator".into(),
        ));
    }
    Ok(())
}

/// Divides the accumulated `2^n |C|`-scaled coefficient, checking that the
/// `s` part vanishes and the quotient is a nonnegative integer.
fn finish_coeff(n: usize, j: usize, k: usize, c: &QuadRingElem, denom: &BigInt) -> Result<BigInt> {
    if !c.b.is_zero() {
        return Err(consistency(format!("coefficient of Y^{j} Z^{k} has nonzero s-part {}", c.b)));
    }
    let (quot, rem) = c.a.div_rem(denom);
    if !rem.is_zero() || quot.is_negative() {
        return Err(consistency(format!(
            "coefficient of X^{} Y^{j} Z^{k} is {}/{denom}, not a nonnegative integer",
            n - j - k,
            c.a
        )));
    }
    Ok(quot)
}

/// `QR_{C⊥}(X, Y, Z) = QR_C(X', Y', Z') / |C|`.
pub fn macwilliams_qr(e: &QREnum, size_c: &BigInt) -> Result<QREnum> {
    check_transform_input(e, size_c)?;
    let n = e.n;
    let sq = QuadRingElem::square_for(e.q);
    let [l1, l2, l3] = substitution(e.q);
    let p1 = HomPoly::linear_powers(&l1[0], &l1[1], &l1[2], n);
    let p2 = HomPoly::linear_powers(&l2[0], &l2[1], &l2[2], n);
    let p3 = HomPoly::linear_powers(&l3[0], &l3[1], &l3[2], n);
    let sources: Vec<_> = e.terms().map(|(&jk, c)| (jk, c.clone())).collect();
    let zero = || vec![QuadRingElem::zero(sq); (n + 1) * (n + 1)];
    let acc = sources
        .par_iter()
        .map(|&((j, k), ref c)| {
            let prod = p1[n - j - k].mul(&p2[j], sq).mul(&p3[k], sq);
            let mut out = zero();
            for (slot, v) in out.iter_mut().zip(prod.coeffs.iter()) {
                *slot = v.scale(c);
            }
            out
        })
        .reduce(zero, |mut a, b| {
            for (x, y) in a.iter_mut().zip(b.iter()) {
                *x += y;
            }
            a
        });
    let denom = BigInt::from(2).pow(n as u32) * size_c;
    let mut out = QREnum::new(n, e.q);
    for j in 0..=n {
        for k in 0..=n - j {
            let c = finish_coeff(n, j, k, &acc[j * (n + 1) + k], &denom)?;
            out.add_term(j, k, c)?;
        }
    }
    Ok(out)
}

/// Dual coefficients with `j + k <= max_codim`, by expanding each source
/// monomial's three factors as trinomials and summing over the ways to
/// split the target `Y` and `Z` degrees among them. Every `(j, k)` in range
/// is present, zeros included.
pub fn dual_coeff_truncated(
    e: &QREnum,
    size_c: &BigInt,
    max_codim: usize,
) -> Result<BTreeMap<(usize, usize), BigInt>> {
    check_transform_input(e, size_c)?;
    let n = e.n;
    if max_codim > n {
        return Err(domain(format!("max codimension {max_codim} exceeds length {n}")));
    }
    let sq = QuadRingElem::square_for(e.q);
    let [l1, l2, _] = substitution(e.q);
    let pows = |x: &QuadRingElem| (0..=max_codim).map(|i| x.pow(i as u32)).collect::<Vec<_>>();
    let (qm1_p, beta_p, gamma_p) = (pows(&l1[1]), pows(&l2[1]), pows(&l2[2]));
    let two = BigInt::from(2);
    let targets: Vec<(usize, usize)> =
        (0..=max_codim).flat_map(|jj| (0..=max_codim - jj).map(move |kk| (jj, kk))).collect();
    let sources: Vec<_> = e.terms().map(|(&jk, c)| (jk, c.clone())).collect();
    let denom = BigInt::from(2).pow(n as u32) * size_c;
    targets
        .par_iter()
        .map(|&(jj, kk)| {
            let mut acc = QuadRingElem::zero(sq);
            for &((j, k), ref c) in &sources {
                let i = n - j - k;
                // Y, Z degrees drawn from X'^i, Y'^j, Z'^k respectively.
                for y1 in 0..=jj.min(i) {
                    for z1 in 0..=kk.min(i - y1) {
                        let f1 = trinomial(i as u64, y1 as u64, z1 as u64)
                            * two.pow((i - y1 - z1) as u32);
                        let f1 = qm1_p[y1 + z1].scale(&f1);
                        for y2 in 0..=(jj - y1).min(j) {
                            let y3 = jj - y1 - y2;
                            if y3 > k {
                                continue;
                            }
                            for z2 in 0..=(kk - z1).min(j - y2) {
                                let z3 = kk - z1 - z2;
                                if z3 > k - y3 {
                                    continue;
                                }
                                let f2 = trinomial(j as u64, y2 as u64, z2 as u64)
                                    * two.pow((j - y2 - z2) as u32);
                                let f3 = trinomial(k as u64, y3 as u64, z3 as u64)
                                    * two.pow((k - y3 - z3) as u32);
                                // Z' contributes γ per Y and β per Z.
                                let ring = &(&beta_p[y2 + z3] * &gamma_p[z2 + y3]) * &f1;
                                acc += &ring.scale(&(f2 * f3 * c));
                            }
                        }
                    }
                }
            }
            Ok(((jj, kk), finish_coeff(n, jj, kk, &acc, &denom)?))
        })
        .collect()
}

/// Hamming weight distribution `A_w = Σ_{j+k=w} A_{n-w,j,k}` (set `Z = Y`).
pub fn specialize_to_hamming(e: &QREnum) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); e.n + 1];
    for (&(j, k), c) in e.terms() {
        out[j + k] += c;
    }
    out
}
