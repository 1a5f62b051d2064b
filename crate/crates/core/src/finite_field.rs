//! Arithmetic in `F_q`, `q = p^v` with `p` odd.
//!
//! Elements are coefficient vectors over `Z/p` in the power basis of a fixed
//! monic irreducible modulus, packed into a single index
//! `c_0 + c_1 p + ... + c_{v-1} p^{v-1}`. Index order is the enumeration
//! order: `0` comes first and prime-subfield elements `0..p` are the
//! integers mod `p`.

use std::fmt;

use crate::error::{domain, Error, Result};
use crate::util::{is_prime, prime_divisors};

/// Fields up to this size get precomputed addition and multiplication tables.
const TABLE_LIMIT: u32 = 128;

/// An element of a [`FieldCtx`], identified by its packed index.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Elem(pub(crate) u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// A realized finite field of odd characteristic.
///
/// Immutable after construction; share it freely between threads.
#[derive(Clone)]
pub struct FieldCtx {
    p: u32,
    v: u32,
    q: u32,
    /// Monic modulus, low degree first, length `v + 1`.
    modulus: Vec<u32>,
    add_table: Option<Vec<u32>>,
    mul_table: Option<Vec<u32>>,
    neg: Vec<u32>,
    inv: Vec<u32>,
    chi: Vec<i8>,
    generator: Elem,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldCtx")
            .field("p", &self.p)
            .field("v", &self.v)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl FieldCtx {
    /// Builds `F_{p^v}` using the lexicographically smallest monic
    /// irreducible polynomial of degree `v` (the polynomial `x` when `v = 1`).
    pub fn new(p: u64, v: u32) -> Result<Self> {
        check_params(p, v)?;
        let p32 = p as u32;
        let modulus = if v == 1 {
            vec![0, 1]
        } else {
            smallest_irreducible(p32, v)
        };
        Self::build(p32, v, modulus)
    }

    /// Builds `F_{p^v}` from an explicit monic modulus given low degree first.
    pub fn with_modulus(p: u64, v: u32, modulus: &[u64]) -> Result<Self> {
        check_params(p, v)?;
        let p32 = p as u32;
        if modulus.len() != v as usize + 1 || modulus[v as usize] != 1 {
            return Err(domain("modulus must be monic of degree v"));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(domain("modulus coefficients must be reduced mod p"));
        }
        let modulus: Vec<u32> = modulus.iter().map(|&c| c as u32).collect();
        if v > 1 && !is_irreducible(p32, &modulus) {
            return Err(domain("modulus is reducible over F_p"));
        }
        Self::build(p32, v, modulus)
    }

    fn build(p: u32, v: u32, modulus: Vec<u32>) -> Result<Self> {
        let q = p
            .checked_pow(v)
            .filter(|&q| q <= 1 << 24)
            .ok_or_else(|| domain(format!("field {p}^{v} too large")))?;
        let mut ctx = FieldCtx {
            p,
            v,
            q,
            modulus,
            add_table: None,
            mul_table: None,
            neg: Vec::new(),
            inv: Vec::new(),
            chi: Vec::new(),
            generator: Elem::ONE,
        };
        if v > 1 && q <= TABLE_LIMIT {
            let n = q as usize;
            let mut add = vec![0u32; n * n];
            let mut mul = vec![0u32; n * n];
            for a in 0..q {
                for b in 0..q {
                    add[(a * q + b) as usize] = ctx.add_slow(a, b);
                    mul[(a * q + b) as usize] = ctx.mul_slow(a, b);
                }
            }
            ctx.add_table = Some(add);
            ctx.mul_table = Some(mul);
        }
        ctx.neg = (0..q).map(|a| ctx.neg_slow(a)).collect();

        let mut chi = vec![-1i8; q as usize];
        chi[0] = 0;
        for a in 1..q {
            let s = ctx.mul(Elem(a), Elem(a));
            chi[s.index()] = 1;
        }
        ctx.chi = chi;

        ctx.generator = ctx.find_generator()?;
        let mut inv = vec![0u32; q as usize];
        let mut x = Elem::ONE;
        let mut powers = Vec::with_capacity(q as usize - 1);
        for _ in 0..q - 1 {
            powers.push(x);
            x = ctx.mul(x, ctx.generator);
        }
        for (i, &g) in powers.iter().enumerate() {
            let j = (q as usize - 1 - i) % (q as usize - 1);
            inv[g.index()] = powers[j].0;
        }
        ctx.inv = inv;
        Ok(ctx)
    }

    pub fn p(&self) -> u64 {
        self.p as u64
    }

    pub fn v(&self) -> u32 {
        self.v
    }

    pub fn q(&self) -> u64 {
        self.q as u64
    }

    pub fn size(&self) -> usize {
        self.q as usize
    }

    /// Modulus coefficients, low degree first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// A cached element of multiplicative order `q - 1`.
    pub fn generator(&self) -> Elem {
        self.generator
    }

    /// The image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> Elem {
        Elem(n.rem_euclid(self.p as i64) as u32)
    }

    /// Element with the given coefficient vector (power basis, low first).
    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<Elem> {
        if coeffs.len() > self.v as usize {
            return Err(domain("too many coefficients"));
        }
        let mut idx = 0u32;
        for &c in coeffs.iter().rev() {
            idx = idx * self.p + (c % self.p as u64) as u32;
        }
        Ok(Elem(idx))
    }

    pub fn coeffs(&self, x: Elem) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.v as usize);
        let mut m = x.0;
        for _ in 0..self.v {
            out.push(m % self.p);
            m /= self.p;
        }
        out
    }

    /// Checked conversion from a raw index.
    pub fn elem(&self, index: u64) -> Result<Elem> {
        if index < self.q as u64 {
            Ok(Elem(index as u32))
        } else {
            Err(domain(format!("{index} is not an element of F_{}", self.q)))
        }
    }

    /// All `q` elements, zero first, in index order.
    pub fn enumerate_elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.q).map(Elem)
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.v == 1 {
            let s = a.0 + b.0;
            return Elem(if s >= self.p { s - self.p } else { s });
        }
        match &self.add_table {
            Some(t) => Elem(t[(a.0 * self.q + b.0) as usize]),
            None => Elem(self.add_slow(a.0, b.0)),
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        Elem(self.neg[a.index()])
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if self.v == 1 {
            return Elem(((a.0 as u64 * b.0 as u64) % self.p as u64) as u32);
        }
        match &self.mul_table {
            Some(t) => Elem(t[(a.0 * self.q + b.0) as usize]),
            None => Elem(self.mul_slow(a.0, b.0)),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: Elem) -> Option<Elem> {
        if a.is_zero() {
            None
        } else {
            Some(Elem(self.inv[a.index()]))
        }
    }

    pub fn pow(&self, a: Elem, mut e: u64) -> Elem {
        let mut base = a;
        let mut acc = Elem::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: Elem) -> Option<u64> {
        if a.is_zero() {
            return None;
        }
        let mut x = a;
        let mut k = 1;
        while x != Elem::ONE {
            x = self.mul(x, a);
            k += 1;
        }
        Some(k)
    }

    /// The quadratic character: `0`, `+1` on nonzero squares, `-1` otherwise.
    ///
    /// Evaluated as `x^((q-1)/2)` in the prime subfield and checked against
    /// the precomputed table of squares.
    pub fn quad_char(&self, x: Elem) -> Result<i8> {
        if x.0 >= self.q {
            return Err(domain(format!("{x} is not reduced in F_{}", self.q)));
        }
        let e = self.pow(x, (self.q as u64 - 1) / 2);
        let val = match e.0 {
            0 => 0,
            1 => 1,
            m if m == self.p - 1 => -1,
            m => {
                return Err(Error::Consistency(format!(
                    "Euler criterion produced non-subfield value {m}"
                )))
            }
        };
        if val != self.chi[x.index()] {
            return Err(Error::Consistency(format!(
                "quadratic character of {x} disagrees with square table"
            )));
        }
        Ok(val)
    }

    /// Table lookup of the quadratic character, for hot loops.
    #[inline]
    pub fn chi(&self, x: Elem) -> i8 {
        self.chi[x.index()]
    }

    pub fn is_square(&self, x: Elem) -> bool {
        self.chi[x.index()] >= 0
    }

    fn add_slow(&self, a: u32, b: u32) -> u32 {
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.v {
            let d = (a % self.p + b % self.p) % self.p;
            out += d * place;
            place *= self.p;
            a /= self.p;
            b /= self.p;
        }
        out
    }

    fn neg_slow(&self, a: u32) -> u32 {
        let mut a = a;
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.v {
            let d = (self.p - a % self.p) % self.p;
            out += d * place;
            place *= self.p;
            a /= self.p;
        }
        out
    }

    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        let p = self.p as u64;
        let v = self.v as usize;
        let ca = self.coeffs(Elem(a));
        let cb = self.coeffs(Elem(b));
        let mut prod = vec![0u64; 2 * v - 1];
        for (i, &x) in ca.iter().enumerate() {
            for (j, &y) in cb.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        for d in (v..prod.len()).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            for (i, &m) in self.modulus[..v].iter().enumerate() {
                let idx = d - v + i;
                prod[idx] = (prod[idx] + c * (p - m as u64)) % p;
            }
        }
        let mut idx = 0u64;
        for &c in prod[..v].iter().rev() {
            idx = idx * p + c;
        }
        idx as u32
    }

    fn find_generator(&self) -> Result<Elem> {
        let n = self.q as u64 - 1;
        let factors = prime_divisors(n);
        for g in 1..self.q {
            let g = Elem(g);
            if factors.iter().all(|&r| self.pow(g, n / r) != Elem::ONE) {
                return Ok(g);
            }
        }
        Err(Error::Consistency("no multiplicative generator found".into()))
    }
}

fn check_params(p: u64, v: u32) -> Result<()> {
    if p.is_multiple_of(2) {
        return Err(domain(format!("characteristic {p} is even")));
    }
    if !is_prime(p) {
        return Err(domain(format!("characteristic {p} is not prime")));
    }
    if v < 1 {
        return Err(domain("extension degree v must be at least 1"));
    }
    Ok(())
}

/// Remainder of `a` modulo the monic `b` over `F_p`; both low degree first.
fn poly_rem(p: u32, a: &[u32], b: &[u32]) -> Vec<u32> {
    let p = p as u64;
    let mut r: Vec<u64> = a.iter().map(|&c| c as u64).collect();
    let db = b.len() - 1;
    while r.len() > db {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        if lead != 0 {
            for (i, &c) in b.iter().enumerate() {
                r[shift + i] = (r[shift + i] + (p - lead) * c as u64) % p;
            }
        }
        r.pop();
    }
    r.into_iter().map(|c| c as u32).collect()
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
fn is_irreducible(p: u32, f: &[u32]) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for m in 0..count {
            let mut g = Vec::with_capacity(d + 1);
            let mut x = m;
            for _ in 0..d {
                g.push((x % p as u64) as u32);
                x /= p as u64;
            }
            g.push(1);
            if poly_rem(p, f, &g).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn smallest_irreducible(p: u32, v: u32) -> Vec<u32> {
    let count = (p as u64).pow(v);
    for m in 0..count {
        let mut f = Vec::with_capacity(v as usize + 1);
        let mut x = m;
        for _ in 0..v {
            f.push((x % p as u64) as u32);
            x /= p as u64;
        }
        f.push(1);
        if is_irreducible(p, &f) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}
