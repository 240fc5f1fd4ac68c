//! Dense univariate polynomials over a [`Field`], low-degree coefficient first.
//!
//! Factorization follows the classical squarefree / distinct-degree /
//! equal-degree pipeline.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Field, FieldElement};

pub type Poly = Vec<FieldElement>;

pub fn trim(mut a: Poly) -> Poly {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

/// Degree, with `None` for the zero polynomial.
pub fn degree(a: &[FieldElement]) -> Option<usize> {
    a.iter().rposition(|c| !c.is_zero())
}

pub fn is_one(f: &Field, a: &[FieldElement]) -> bool {
    degree(a) == Some(0) && a[0] == f.one()
}

pub fn x(f: &Field) -> Poly {
    vec![f.zero(), f.one()]
}

pub fn add(f: &Field, a: &[FieldElement], b: &[FieldElement]) -> Poly {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or_default();
            let y = b.get(i).copied().unwrap_or_default();
            f.add(x, y)
        })
        .collect();
    trim(out)
}

pub fn sub(f: &Field, a: &[FieldElement], b: &[FieldElement]) -> Poly {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or_default();
            let y = b.get(i).copied().unwrap_or_default();
            f.sub(x, y)
        })
        .collect();
    trim(out)
}

pub fn mul(f: &Field, a: &[FieldElement], b: &[FieldElement]) -> Poly {
    let (Some(da), Some(db)) = (degree(a), degree(b)) else {
        return Vec::new();
    };
    let mut out = vec![f.zero(); da + db + 1];
    for (i, &x) in a[..=da].iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, &y) in b[..=db].iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    trim(out)
}

pub fn scale(f: &Field, a: &[FieldElement], c: FieldElement) -> Poly {
    trim(a.iter().map(|&x| f.mul(x, c)).collect())
}

/// Quotient and remainder. Panics on division by the zero polynomial.
pub fn divrem(f: &Field, a: &[FieldElement], b: &[FieldElement]) -> (Poly, Poly) {
    let db = degree(b).expect("polynomial division by zero");
    let mut r = trim(a.to_vec());
    let lead_inv = f.inv(b[db]).expect("nonzero leading coefficient");
    let Some(da) = degree(&r) else {
        return (Vec::new(), Vec::new());
    };
    if da < db {
        return (Vec::new(), r);
    }
    let mut qt = vec![f.zero(); da - db + 1];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = f.mul(r[dr], lead_inv);
        qt[dr - db] = c;
        for (i, &bi) in b[..=db].iter().enumerate() {
            let idx = dr - db + i;
            r[idx] = f.sub(r[idx], f.mul(c, bi));
        }
        r = trim(r);
    }
    (trim(qt), r)
}

pub fn rem(f: &Field, a: &[FieldElement], b: &[FieldElement]) -> Poly {
    divrem(f, a, b).1
}

pub fn monic(f: &Field, a: &[FieldElement]) -> Poly {
    match degree(a) {
        None => Vec::new(),
        Some(d) => {
            let inv = f.inv(a[d]).expect("nonzero leading coefficient");
            scale(f, &a[..=d], inv)
        }
    }
}

/// Monic greatest common divisor.
pub fn gcd(f: &Field, a: &[FieldElement], b: &[FieldElement]) -> Poly {
    let mut r0 = trim(a.to_vec());
    let mut r1 = trim(b.to_vec());
    while degree(&r1).is_some() {
        let r = rem(f, &r0, &r1);
        r0 = r1;
        r1 = r;
    }
    monic(f, &r0)
}

/// Extended gcd: returns `(g, s, t)` with `s a + t b = g`, `g` monic.
pub fn xgcd(f: &Field, a: &[FieldElement], b: &[FieldElement]) -> (Poly, Poly, Poly) {
    let (mut r0, mut r1) = (trim(a.to_vec()), trim(b.to_vec()));
    let (mut s0, mut s1) = (vec![f.one()], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![f.one()]);
    while degree(&r1).is_some() {
        let (qt, r) = divrem(f, &r0, &r1);
        let s = sub(f, &s0, &mul(f, &qt, &s1));
        let t = sub(f, &t0, &mul(f, &qt, &t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
        t0 = t1;
        t1 = t;
    }
    match degree(&r0) {
        None => (Vec::new(), s0, t0),
        Some(d) => {
            let inv = f.inv(r0[d]).expect("nonzero");
            (scale(f, &r0, inv), scale(f, &s0, inv), scale(f, &t0, inv))
        }
    }
}

pub fn derivative(f: &Field, a: &[FieldElement]) -> Poly {
    if a.len() <= 1 {
        return Vec::new();
    }
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| f.mul(c, f.from_int(i as i64)))
            .collect(),
    )
}

pub fn eval(f: &Field, a: &[FieldElement], x: FieldElement) -> FieldElement {
    a.iter().rev().fold(f.zero(), |acc, &c| f.add(f.mul(acc, x), c))
}

/// `base^e mod m`.
pub fn powmod(f: &Field, base: &[FieldElement], mut e: u64, m: &[FieldElement]) -> Poly {
    let mut acc = rem(f, &[f.one()], m);
    let mut b = rem(f, base, m);
    while e > 0 {
        if e & 1 == 1 {
            acc = rem(f, &mul(f, &acc, &b), m);
        }
        b = rem(f, &mul(f, &b, &b), m);
        e >>= 1;
    }
    acc
}

/// `a^(q^i) mod m`, via `i` successive q-th powers.
fn frobenius_power(f: &Field, a: &[FieldElement], i: usize, m: &[FieldElement]) -> Poly {
    let mut h = rem(f, a, m);
    for _ in 0..i {
        h = powmod(f, &h, f.q(), m);
    }
    h
}

/// Rabin irreducibility test for a monic polynomial.
pub fn is_irreducible(f: &Field, a: &[FieldElement]) -> bool {
    let Some(n) = degree(a) else {
        return false;
    };
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let xp = x(f);
    if degree(&sub(f, &frobenius_power(f, &xp, n, a), &xp)).is_some() {
        return false;
    }
    for r in super::prime_divisors(n as u64) {
        let h = frobenius_power(f, &xp, n / r as usize, a);
        let g = gcd(f, a, &sub(f, &h, &xp));
        if !is_one(f, &g) {
            return false;
        }
    }
    true
}

/// Polynomial whose coefficients are the p-th roots of those of `a`, assuming
/// `a` only has exponents divisible by p.
fn pth_root(f: &Field, a: &[FieldElement]) -> Poly {
    let p = f.p() as usize;
    let root_exp = f.q() / f.p();
    trim(a.iter().step_by(p).map(|&c| f.pow(c, root_exp)).collect())
}

/// Squarefree factorization of a monic polynomial: `(factor, multiplicity)`.
pub fn squarefree(f: &Field, a: &[FieldElement]) -> Vec<(Poly, usize)> {
    let a = monic(f, a);
    if degree(&a).unwrap_or(0) == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let da = derivative(f, &a);
    if degree(&da).is_none() {
        for (g, m) in squarefree(f, &pth_root(f, &a)) {
            out.push((g, m * f.p() as usize));
        }
        return out;
    }
    let mut c = gcd(f, &a, &da);
    let mut w = divrem(f, &a, &c).0;
    let mut i = 1;
    while !is_one(f, &w) {
        let y = gcd(f, &w, &c);
        let z = divrem(f, &w, &y).0;
        if !is_one(f, &z) {
            out.push((z, i));
        }
        i += 1;
        w = y;
        c = divrem(f, &c, &w).0;
    }
    if !is_one(f, &c) {
        for (g, m) in squarefree(f, &pth_root(f, &c)) {
            out.push((g, m * f.p() as usize));
        }
    }
    out
}

/// Distinct-degree factorization of a monic squarefree polynomial.
pub fn distinct_degree(f: &Field, a: &[FieldElement]) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    let mut rest = monic(f, a);
    let xp = x(f);
    let mut h = rem(f, &xp, &rest);
    let mut i = 1;
    while degree(&rest).unwrap_or(0) >= 2 * i {
        h = powmod(f, &h, f.q(), &rest);
        let g = gcd(f, &rest, &sub(f, &h, &xp));
        if !is_one(f, &g) {
            rest = divrem(f, &rest, &g).0;
            h = rem(f, &h, &rest);
            out.push((g, i));
        }
        i += 1;
    }
    if let Some(d) = degree(&rest) {
        if d > 0 {
            out.push((rest, d));
        }
    }
    out
}

/// Splits a monic squarefree product of irreducibles of degree `d`.
pub fn equal_degree(f: &Field, a: &[FieldElement], d: usize, rng: &mut ChaCha8Rng) -> Vec<Poly> {
    let n = degree(a).unwrap_or(0);
    if n == 0 {
        return Vec::new();
    }
    if n == d {
        return vec![monic(f, a)];
    }
    loop {
        let r: Poly = trim((0..n).map(|_| super::FieldElement(rng.gen_range(0..f.q()))).collect());
        if degree(&r).unwrap_or(0) == 0 {
            continue;
        }
        let candidate = if f.p() == 2 {
            // absolute trace of r in GF(q^d)[x]/(a), summed over 2-powers
            let s = f.k() * d;
            let mut t = rem(f, &r, a);
            let mut acc = t.clone();
            for _ in 1..s {
                t = rem(f, &mul(f, &t, &t), a);
                acc = add(f, &acc, &t);
            }
            acc
        } else {
            // r^((q^d - 1)/2) = (r^(1 + q + ... + q^(d-1)))^((q-1)/2)
            let mut norm = rem(f, &r, a);
            let mut t = norm.clone();
            for _ in 1..d {
                t = powmod(f, &t, f.q(), a);
                norm = rem(f, &mul(f, &norm, &t), a);
            }
            let h = powmod(f, &norm, (f.q() - 1) / 2, a);
            sub(f, &h, &[f.one()])
        };
        let g = gcd(f, a, &candidate);
        let dg = degree(&g).unwrap_or(0);
        if dg > 0 && dg < n {
            let other = divrem(f, a, &g).0;
            let mut out = equal_degree(f, &g, d, rng);
            out.extend(equal_degree(f, &monic(f, &other), d, rng));
            return out;
        }
    }
}

/// Complete factorization into monic irreducibles with multiplicities, sorted by
/// (degree, coefficients).
pub fn factor(f: &Field, a: &[FieldElement]) -> Vec<(Poly, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_f00d);
    let mut out = Vec::new();
    for (sf, mult) in squarefree(f, a) {
        for (block, d) in distinct_degree(f, &sf) {
            for g in equal_degree(f, &block, d, &mut rng) {
                out.push((g, mult));
            }
        }
    }
    out.sort_by(|(g, _), (h, _)| {
        (g.len(), g.iter().rev().collect::<Vec<_>>()).cmp(&(h.len(), h.iter().rev().collect::<Vec<_>>()))
    });
    out
}

/// Roots with multiplicity and the non-linear remainder of a polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootReport {
    /// `(root, multiplicity)` sorted by packed index.
    pub roots: Vec<(FieldElement, usize)>,
    /// Degree of the product of all irreducible factors of degree >= 2.
    pub residual_degree: usize,
    /// Degrees of those irreducible factors, with repetition, ascending.
    pub residual_factor_degrees: Vec<usize>,
}

/// Extracts all roots in the field and reports what does not split.
pub fn roots(f: &Field, a: &[FieldElement]) -> RootReport {
    let mut roots = Vec::new();
    let mut residual = Vec::new();
    for (g, m) in factor(f, a) {
        let d = degree(&g).unwrap_or(0);
        if d == 1 {
            roots.push((f.neg(g[0]), m));
        } else {
            residual.extend(std::iter::repeat_n(d, m));
        }
    }
    roots.sort();
    residual.sort();
    RootReport { roots, residual_degree: residual.iter().sum(), residual_factor_degrees: residual }
}
