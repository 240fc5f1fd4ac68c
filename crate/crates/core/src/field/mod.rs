//! Exact arithmetic in GF(p^k).
//!
//! Elements are packed into a single `u64` as `sum c_i p^i`, where `c_i` are the
//! coordinates in the power basis of the defining modulus. Prime fields use the
//! residue directly. Small extension fields (order up to 2^16) get log/antilog
//! tables at construction.

pub mod linalg;
pub mod poly;

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest admissible characteristic.
pub const MAX_CHARACTERISTIC: u64 = 1 << 31;

const TABLE_LIMIT: u64 = 1 << 16;

/// An element of a finite field, packed as base-`p` digits of its power-basis
/// coordinates. Only meaningful together with the [`Field`] it came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FieldElement(pub(crate) u64);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);

    /// Packed index of the element (`0..q`).
    pub fn index(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

#[derive(Debug)]
struct Tables {
    log: Vec<u32>,
    exp: Vec<u32>,
}

#[derive(Debug)]
struct Inner {
    p: u64,
    k: usize,
    q: u64,
    modulus: Vec<u64>,
    tables: Option<Tables>,
}

/// The finite field GF(p^k) given by a monic irreducible modulus over GF(p).
#[derive(Clone)]
pub struct Field {
    inner: Arc<Inner>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k() == 1 {
            write!(f, "GF({})", self.p())
        } else {
            write!(f, "GF({}^{}; {:?})", self.p(), self.k(), self.inner.modulus)
        }
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.p() == other.p() && self.inner.modulus == other.inner.modulus)
    }
}

impl Eq for Field {}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors of `n`, ascending.
pub(crate) fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
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

pub(crate) fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Field {
    /// The prime field GF(p).
    pub fn prime(p: u64) -> Result<Field> {
        Field::new(p, 1, None)
    }

    /// GF(p^k). When `modulus` is `None` the lexicographically smallest monic
    /// irreducible polynomial of degree `k` is used (coefficients compared from
    /// the leading end, constant term least significant).
    pub fn new(p: u64, k: usize, modulus: Option<Vec<u64>>) -> Result<Field> {
        if p >= MAX_CHARACTERISTIC {
            return Err(Error::FieldTooLarge { p, k });
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k == 0 {
            return Err(Error::ReducibleModulus(0));
        }
        let mut q: u64 = 1;
        for _ in 0..k {
            q = q
                .checked_mul(p)
                .filter(|&v| v < (1u64 << 63))
                .ok_or(Error::FieldTooLarge { p, k })?;
        }
        let base = Field::raw(p, 1, vec![0, 1]);
        let modulus = match modulus {
            Some(m) => {
                if m.len() != k + 1 || m[k] != 1 || m.iter().any(|&c| c >= p) {
                    return Err(Error::ReducibleModulus(k));
                }
                let poly: Vec<FieldElement> = m.iter().map(|&c| FieldElement(c)).collect();
                if !poly::is_irreducible(&base, &poly) {
                    return Err(Error::ReducibleModulus(k));
                }
                m
            }
            None if k == 1 => vec![0, 1],
            None => smallest_irreducible(&base, k),
        };
        let mut field = Field::raw(p, k, modulus);
        if k > 1 && q <= TABLE_LIMIT {
            let tables = field.build_tables();
            Arc::get_mut(&mut field.inner)
                .expect("freshly built field is uniquely owned")
                .tables = Some(tables);
        }
        Ok(field)
    }

    fn raw(p: u64, k: usize, modulus: Vec<u64>) -> Field {
        let q = p.pow(k as u32);
        Field { inner: Arc::new(Inner { p, k, q, modulus, tables: None }) }
    }

    fn build_tables(&self) -> Tables {
        let q = self.q();
        let g = (1..q)
            .map(FieldElement)
            .find(|&g| self.is_generator_slow(g))
            .expect("multiplicative group of a finite field is cyclic");
        let mut log = vec![0u32; q as usize];
        let mut exp = vec![0u32; 2 * (q as usize - 1)];
        let mut x = self.one();
        for i in 0..(q - 1) as usize {
            exp[i] = x.0 as u32;
            exp[i + q as usize - 1] = x.0 as u32;
            log[x.0 as usize] = i as u32;
            x = self.mul_poly(x, g);
        }
        Tables { log, exp }
    }

    fn is_generator_slow(&self, g: FieldElement) -> bool {
        let n = self.q() - 1;
        prime_divisors(n).iter().all(|&r| {
            let mut acc = self.one();
            let mut base = g;
            let mut e = n / r;
            while e > 0 {
                if e & 1 == 1 {
                    acc = self.mul_poly(acc, base);
                }
                base = self.mul_poly(base, base);
                e >>= 1;
            }
            acc != self.one()
        })
    }

    pub fn p(&self) -> u64 {
        self.inner.p
    }

    pub fn k(&self) -> usize {
        self.inner.k
    }

    /// Field order `p^k`.
    pub fn q(&self) -> u64 {
        self.inner.q
    }

    /// Monic modulus, low-degree coefficient first.
    pub fn modulus(&self) -> &[u64] {
        &self.inner.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    /// Image of an integer under `Z -> GF(p)`.
    pub fn from_int(&self, v: i64) -> FieldElement {
        FieldElement(v.rem_euclid(self.p() as i64) as u64)
    }

    /// Element with the given power-basis coordinates (reduced mod p).
    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<FieldElement> {
        if coeffs.len() > self.k() {
            return Err(Error::FieldMismatch);
        }
        let mut v = 0u64;
        for &c in coeffs.iter().rev() {
            v = v * self.p() + c % self.p();
        }
        Ok(FieldElement(v))
    }

    /// Element from its packed index; fails when out of range.
    pub fn element(&self, index: u64) -> Result<FieldElement> {
        if index < self.q() {
            Ok(FieldElement(index))
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn coeffs(&self, a: FieldElement) -> Vec<u64> {
        let p = self.p();
        let mut v = a.0;
        (0..self.k())
            .map(|_| {
                let c = v % p;
                v /= p;
                c
            })
            .collect()
    }

    pub fn contains(&self, a: FieldElement) -> bool {
        a.0 < self.q()
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let p = self.p();
        if self.k() == 1 {
            let s = a.0 + b.0;
            return FieldElement(if s >= p { s - p } else { s });
        }
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0u64;
        let mut place = 1u64;
        for _ in 0..self.k() {
            let s = (x % p + y % p) % p;
            out += s * place;
            x /= p;
            y /= p;
            place = place.wrapping_mul(p);
        }
        FieldElement(out)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let p = self.p();
        if self.k() == 1 {
            return FieldElement(if a.0 == 0 { 0 } else { p - a.0 });
        }
        let mut x = a.0;
        let mut out = 0u64;
        let mut place = 1u64;
        for _ in 0..self.k() {
            let c = x % p;
            out += ((p - c) % p) * place;
            x /= p;
            place = place.wrapping_mul(p);
        }
        FieldElement(out)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.k() == 1 {
            return FieldElement(a.0 * b.0 % self.p());
        }
        if a.0 == 0 || b.0 == 0 {
            return FieldElement(0);
        }
        if let Some(t) = &self.inner.tables {
            let i = t.log[a.0 as usize] as usize + t.log[b.0 as usize] as usize;
            return FieldElement(t.exp[i] as u64);
        }
        self.mul_poly(a, b)
    }

    fn mul_poly(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let p = self.p();
        let k = self.k();
        if k == 1 {
            return FieldElement(a.0 * b.0 % p);
        }
        let x = self.coeffs(a);
        let y = self.coeffs(b);
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                prod[i + j] = (prod[i + j] + xi * yj) % p;
            }
        }
        let m = &self.inner.modulus;
        for d in (k..prod.len()).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            for (t, &mt) in m.iter().enumerate().take(k) {
                let idx = d - k + t;
                prod[idx] = (prod[idx] + (p - c) * mt % p) % p;
            }
        }
        let mut v = 0u64;
        for &c in prod[..k].iter().rev() {
            v = v * p + c;
        }
        FieldElement(v)
    }

    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut acc = self.one();
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(t) = &self.inner.tables {
            let l = t.log[a.0 as usize] as u64;
            let q1 = self.q() - 1;
            return Ok(FieldElement(t.exp[((q1 - l) % q1) as usize] as u64));
        }
        if self.k() == 1 {
            // extended Euclid on residues
            let p = self.p() as i64;
            let (mut r0, mut r1) = (p, a.0 as i64);
            let (mut s0, mut s1) = (0i64, 1i64);
            while r1 != 0 {
                let qt = r0 / r1;
                (r0, r1) = (r1, r0 - qt * r1);
                (s0, s1) = (s1, s0 - qt * s1);
            }
            return Ok(FieldElement(s0.rem_euclid(p) as u64));
        }
        Ok(self.pow(a, self.q() - 2))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Checked binary operation: both operands are validated against this field.
    pub fn arith(&self, a: FieldElement, b: FieldElement, op: ArithOp) -> Result<FieldElement> {
        if !self.contains(a) || !self.contains(b) {
            return Err(Error::FieldMismatch);
        }
        Ok(match op {
            ArithOp::Add => self.add(a, b),
            ArithOp::Sub => self.sub(a, b),
            ArithOp::Mul => self.mul(a, b),
            ArithOp::Div => self.div(a, b)?,
        })
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: FieldElement) -> Result<u64> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut n = self.q() - 1;
        for r in prime_divisors(self.q() - 1) {
            while n % r == 0 && self.pow(a, n / r) == self.one() {
                n /= r;
            }
        }
        Ok(n)
    }

    /// Smallest generator of the multiplicative group, by packed index.
    pub fn primitive_element(&self) -> FieldElement {
        let n = self.q() - 1;
        let divs = prime_divisors(n);
        (1..self.q())
            .map(FieldElement)
            .find(|&g| divs.iter().all(|&r| self.pow(g, n / r) != self.one()))
            .expect("multiplicative group of a finite field is cyclic")
    }

    /// An element of multiplicative order exactly `m`: the smallest generator
    /// raised to `(q-1)/m`.
    pub fn root_of_unity(&self, m: u64) -> Result<FieldElement> {
        let n = self.q() - 1;
        if m == 0 || n % m != 0 {
            return Err(Error::NoSuchRoot { m, order: self.q() });
        }
        Ok(self.pow(self.primitive_element(), n / m))
    }

    /// Discrete logarithm of `a` to base `zeta`, where `zeta` has order `m`.
    /// Returns `None` if `a` is not a power of `zeta`.
    pub fn discrete_log(&self, zeta: FieldElement, m: u64, a: FieldElement) -> Option<u64> {
        if a.is_zero() {
            return None;
        }
        // baby-step giant-step
        let s = (m as f64).sqrt().ceil() as u64 + 1;
        let mut baby = std::collections::HashMap::with_capacity(s as usize);
        let mut x = self.one();
        for j in 0..s {
            baby.entry(x).or_insert(j);
            x = self.mul(x, zeta);
        }
        let giant = self.inv(self.pow(zeta, s)).ok()?;
        let mut y = a;
        for i in 0..=s {
            if let Some(&j) = baby.get(&y) {
                let e = (i * s + j) % m;
                if self.pow(zeta, e) == a {
                    return Some(e);
                }
            }
            y = self.mul(y, giant);
        }
        None
    }

    /// Frobenius `a -> a^p`.
    pub fn frobenius(&self, a: FieldElement) -> FieldElement {
        self.pow(a, self.p())
    }

    /// All elements in packed-index order. Intended for small fields.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q()).map(FieldElement)
    }
}

/// Binary operations for [`Field::arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

fn smallest_irreducible(base: &Field, k: usize) -> Vec<u64> {
    let p = base.p();
    let count = p.pow(k as u32);
    for idx in 0..count {
        let mut coeffs = Vec::with_capacity(k + 1);
        let mut v = idx;
        for _ in 0..k {
            coeffs.push(v % p);
            v /= p;
        }
        coeffs.push(1);
        if coeffs[0] == 0 {
            continue;
        }
        let poly: Vec<FieldElement> = coeffs.iter().map(|&c| FieldElement(c)).collect();
        if poly::is_irreducible(base, &poly) {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}
