//! Two-cocycles with values in `F*`, coboundary equivalence, and the second
//! cohomology of small groups with roots-of-unity coefficients.
//!
//! Classification works in exponent coordinates: a cocycle with values in the
//! cyclic group `μ_m` is an integer table mod `m`, and the cocycle identity is
//! linear. Classes are taken as they appear inside `H²(H, F̄*)`, so two
//! `μ_m`-valued cocycles are identified when they differ by the coboundary of a
//! function with values in any root of unity, not only in `μ_m`.

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::group::FiniteGroup;
use crate::smith::{self, Quotient};

/// Largest group order accepted by [`h2_group`].
pub const MAX_H2_ORDER: usize = 12;

/// A normalized 2-cocycle `σ: H × H → F*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle {
    field: Field,
    group: FiniteGroup,
    values: Vec<FieldElement>,
}

impl Cocycle {
    /// Validates a value table and normalizes it so that `σ(e, h) = σ(h, e) = 1`.
    ///
    /// The cocycle identity forces `σ(e, h) = σ(h, e) = σ(e, e)` for every `h`,
    /// so dividing all values by `σ(e, e)` (the coboundary of a constant
    /// function) normalizes in one step without changing the class.
    pub fn check(field: &Field, group: &FiniteGroup, values: &[Vec<FieldElement>]) -> Result<Cocycle> {
        let n = group.order();
        if values.len() != n || values.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension(format!("cocycle table must be {n}×{n}")));
        }
        for (g, row) in values.iter().enumerate() {
            for (h, &v) in row.iter().enumerate() {
                if !field.contains(v) {
                    return Err(Error::FieldMismatch);
                }
                if v.is_zero() {
                    return Err(Error::ZeroValue(g, h));
                }
            }
        }
        let s = |a: usize, b: usize| values[a][b];
        for x in 0..n {
            for y in 0..n {
                let xy = group.mul(x, y);
                for z in 0..n {
                    let lhs = field.mul(s(x, y), s(xy, z));
                    let rhs = field.mul(s(y, z), s(x, group.mul(y, z)));
                    if lhs != rhs {
                        return Err(Error::CocycleViolation(x, y, z));
                    }
                }
            }
        }
        let e = group.identity();
        let c = field.inv(s(e, e))?;
        let values = values.iter().flatten().map(|&v| field.mul(v, c)).collect();
        Ok(Cocycle { field: field.clone(), group: group.clone(), values })
    }

    pub fn trivial(field: &Field, group: &FiniteGroup) -> Cocycle {
        let n = group.order();
        Cocycle { field: field.clone(), group: group.clone(), values: vec![field.one(); n * n] }
    }

    /// Lifts an exponent table into `F*` through a root of unity of order
    /// `gcd(m, q - 1)`. Fails with `NoSuchRoot` when some exponent needs a root
    /// of unity the field lacks.
    pub fn from_exponents(field: &Field, group: &FiniteGroup, exps: &ExponentCocycle) -> Result<Cocycle> {
        let n = group.order();
        if exps.table.len() != n * n {
            return Err(Error::Dimension(format!("exponent table must be {n}×{n}")));
        }
        let m = exps.m;
        let g = crate::field::gcd_u64(m, field.q() - 1);
        let step = m / g;
        if exps.table.iter().any(|&x| x % step != 0) {
            return Err(Error::NoSuchRoot { m, order: field.q() });
        }
        let zeta = field.root_of_unity(g)?;
        let rows: Vec<Vec<FieldElement>> =
            exps.table.chunks(n).map(|r| r.iter().map(|&x| field.pow(zeta, x / step)).collect()).collect();
        Cocycle::check(field, group, &rows)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn value(&self, g: usize, h: usize) -> FieldElement {
        self.values[g * self.group.order() + h]
    }

    pub fn rows(&self) -> Vec<Vec<FieldElement>> {
        self.values.chunks(self.group.order()).map(|r| r.to_vec()).collect()
    }

    pub fn is_identically_one(&self) -> bool {
        self.values.iter().all(|&v| v == self.field.one())
    }

    /// Exponents with respect to `root_of_unity(m)`.
    pub fn to_exponents(&self, m: u64) -> Result<ExponentCocycle> {
        let f = &self.field;
        let zeta = f.root_of_unity(m)?;
        let table = self
            .values
            .iter()
            .map(|&v| f.discrete_log(zeta, m, v).ok_or(Error::ValueOutsideMu { m }))
            .collect::<Result<Vec<u64>>>()?;
        Ok(ExponentCocycle { m, order: self.group.order(), table })
    }

    /// `(x, y) ↦ σ(map[x], map[y])`, for an injective homomorphism `map` from
    /// `target` into this cocycle's group.
    pub fn pullback(&self, target: &FiniteGroup, map: &[usize]) -> Result<Cocycle> {
        let n = target.order();
        if map.len() != n {
            return Err(Error::Dimension("pullback map has the wrong length".into()));
        }
        let rows: Vec<Vec<FieldElement>> =
            (0..n).map(|x| (0..n).map(|y| self.value(map[x], map[y])).collect()).collect();
        Cocycle::check(&self.field, target, &rows)
    }

    /// Pointwise product, a representative of the product class.
    pub fn product(&self, other: &Cocycle) -> Result<Cocycle> {
        if self.group != other.group || self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let values = self.values.iter().zip(&other.values).map(|(&a, &b)| self.field.mul(a, b)).collect();
        Ok(Cocycle { field: self.field.clone(), group: self.group.clone(), values })
    }

    /// The cocycle `σ · ∂δ`, `∂δ(x, y) = δ(xy) δ(x)^{-1} δ(y)^{-1}`, normalized.
    pub fn twist_by(&self, delta: &[FieldElement]) -> Result<Cocycle> {
        let f = &self.field;
        let g = &self.group;
        let n = g.order();
        let mut rows = vec![vec![f.zero(); n]; n];
        for x in 0..n {
            for y in 0..n {
                let d = f.div(delta[g.mul(x, y)], f.mul(delta[x], delta[y]))?;
                rows[x][y] = f.mul(self.value(x, y), d);
            }
        }
        Cocycle::check(f, g, &rows)
    }
}

/// A cocycle with values in `Z/m`, stored row-major as an `|H|×|H|` table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExponentCocycle {
    pub m: u64,
    order: usize,
    table: Vec<u64>,
}

impl ExponentCocycle {
    pub fn new(group: &FiniteGroup, m: u64, rows: &[Vec<u64>]) -> Result<ExponentCocycle> {
        let n = group.order();
        if m == 0 {
            return Err(Error::Parse("exponent modulus must be positive".into()));
        }
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension(format!("exponent table must be {n}×{n}")));
        }
        let table: Vec<u64> = rows.iter().flatten().map(|&x| x % m).collect();
        let c = ExponentCocycle { m, order: n, table };
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = (c.get(x, y) + c.get(group.mul(x, y), z)) % m;
                    let rhs = (c.get(y, z) + c.get(x, group.mul(y, z))) % m;
                    if lhs != rhs {
                        return Err(Error::CocycleViolation(x, y, z));
                    }
                }
            }
        }
        Ok(c)
    }

    pub fn zero(group: &FiniteGroup, m: u64) -> ExponentCocycle {
        let n = group.order();
        ExponentCocycle { m, order: n, table: vec![0; n * n] }
    }

    pub fn get(&self, g: usize, h: usize) -> u64 {
        self.table[g * self.order + h]
    }

    pub fn rows(&self) -> Vec<Vec<u64>> {
        self.table.chunks(self.order).map(|r| r.to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().all(|&x| x == 0)
    }
}

/// A function `δ: H → F*` with `t = s · ∂δ`, searched among `μ_m`-valued
/// functions by solving the exponent system over `Z/m`.
pub fn coboundary_equivalent(s: &Cocycle, t: &Cocycle, m: u64) -> Result<Option<Vec<FieldElement>>> {
    if s.group != t.group || s.field != t.field {
        return Err(Error::FieldMismatch);
    }
    let f = &s.field;
    let g = &s.group;
    let n = g.order();
    let se = s.to_exponents(m)?;
    let te = t.to_exponents(m)?;
    // t - s = d(xy) - d(x) - d(y)
    let mut rows = Vec::with_capacity(n * n);
    let mut rhs = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let mut r = vec![0u64; n];
            r[g.mul(x, y)] = (r[g.mul(x, y)] + 1) % m;
            r[x] = (r[x] + m - 1) % m;
            r[y] = (r[y] + m - 1) % m;
            rows.push(r);
            rhs.push((te.get(x, y) + m - se.get(x, y)) % m);
        }
    }
    let Some(d) = smith::solve_mod(&rows, n, &rhs, m) else {
        return Ok(None);
    };
    let zeta = f.root_of_unity(m)?;
    Ok(Some(d.iter().map(|&e| f.pow(zeta, e)).collect()))
}

/// `H²(H, μ_m)` modulo the classes that die in `H²(H, F̄*)`.
#[derive(Clone, Debug)]
pub struct CohomologyGroup {
    pub m: u64,
    /// `d_1 | d_2 | …`, each greater than one.
    pub invariant_factors: Vec<u64>,
    /// One exponent cocycle per invariant factor, generating that factor.
    pub representatives: Vec<ExponentCocycle>,
    group: FiniteGroup,
    // Z² = ⊕ Z/o_i with generators cocycle_gens; coordinates via q_inv
    cocycle_gens: Vec<Vec<u64>>,
    cocycle_orders: Vec<u64>,
    cocycle_rows: Vec<usize>,
    q_inv: Vec<Vec<u64>>,
    quotient: Quotient,
}

impl CohomologyGroup {
    pub fn order(&self) -> u64 {
        self.invariant_factors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    /// Coordinates of a cocycle's class with respect to `representatives`.
    pub fn class_of(&self, c: &ExponentCocycle) -> Result<Vec<u64>> {
        if c.m != self.m || c.order != self.group.order() {
            return Err(Error::Dimension("cocycle does not match this cohomology group".into()));
        }
        let normalized = normalize_exponents(&self.group, c);
        let x = restrict(&self.group, &normalized);
        let y = smith::mat_vec(&self.q_inv, &x, self.m);
        let t: Vec<u64> = self
            .cocycle_rows
            .iter()
            .zip(&self.cocycle_orders)
            .map(|(&i, &o)| y[i] / (self.m / o))
            .collect();
        Ok(self.quotient.coordinates(&t))
    }

    pub fn is_trivial_class(&self, c: &ExponentCocycle) -> Result<bool> {
        Ok(self.class_of(c)?.iter().all(|&x| x == 0))
    }

    /// One representative per class, enumerated in mixed-radix order of the
    /// class coordinates (the trivial class first).
    pub fn all_classes(&self) -> Vec<ExponentCocycle> {
        let total = self.order() as usize;
        let mut out = Vec::with_capacity(total);
        let mut coords = vec![0u64; self.invariant_factors.len()];
        for _ in 0..total {
            let mut acc = ExponentCocycle::zero(&self.group, self.m);
            for (c, rep) in coords.iter().zip(&self.representatives) {
                for (a, &r) in acc.table.iter_mut().zip(&rep.table) {
                    *a = ((*a as u128 + *c as u128 * r as u128) % self.m as u128) as u64;
                }
            }
            out.push(acc);
            for (c, &d) in coords.iter_mut().zip(&self.invariant_factors) {
                *c += 1;
                if *c < d {
                    break;
                }
                *c = 0;
            }
        }
        out
    }

    fn expand(&self, t: &[u64]) -> ExponentCocycle {
        let n = self.group.order();
        let k = n.saturating_sub(1);
        let mut x = vec![0u128; k * k];
        for (ti, gen) in t.iter().zip(&self.cocycle_gens) {
            for (a, &g) in x.iter_mut().zip(gen) {
                *a += *ti as u128 * g as u128;
            }
        }
        let m = self.m;
        let vals: Vec<u64> = x.iter().map(|&v| (v % m as u128) as u64).collect();
        extend(&self.group, m, &vals)
    }
}

fn nonidentity(g: &FiniteGroup) -> Vec<usize> {
    g.elements().filter(|&x| x != g.identity()).collect()
}

/// Variable index of `(x, y)` for non-identity `x, y`.
fn var_index(g: &FiniteGroup, x: usize, y: usize) -> Option<usize> {
    let e = g.identity();
    if x == e || y == e {
        return None;
    }
    let pos = |a: usize| if a < e { a } else { a - 1 };
    Some(pos(x) * (g.order() - 1) + pos(y))
}

fn restrict(g: &FiniteGroup, c: &ExponentCocycle) -> Vec<u64> {
    let k = g.order() - 1;
    let mut out = vec![0; k * k];
    for x in g.elements() {
        for y in g.elements() {
            if let Some(i) = var_index(g, x, y) {
                out[i] = c.get(x, y);
            }
        }
    }
    out
}

fn extend(g: &FiniteGroup, m: u64, vals: &[u64]) -> ExponentCocycle {
    let n = g.order();
    let mut table = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            if let Some(i) = var_index(g, x, y) {
                table[x * n + y] = vals[i];
            }
        }
    }
    ExponentCocycle { m, order: n, table }
}

fn normalize_exponents(g: &FiniteGroup, c: &ExponentCocycle) -> ExponentCocycle {
    let e = g.identity();
    let shift = c.get(e, e);
    let table = c.table.iter().map(|&x| (x + c.m - shift) % c.m).collect();
    ExponentCocycle { m: c.m, order: c.order, table }
}

/// Computes the classes of `μ_m`-valued cocycles on `h` as they sit inside
/// `H²(h, F̄*)`, with invariant factors and generating representatives.
pub fn h2_group(h: &FiniteGroup, m: u64) -> Result<CohomologyGroup> {
    let n = h.order();
    if n > MAX_H2_ORDER {
        return Err(Error::GroupTooLarge(n));
    }
    if m == 0 {
        return Err(Error::Parse("coefficient modulus must be positive".into()));
    }
    let k = n - 1;
    let nonid = nonidentity(h);
    let nvars = k * k;

    // cocycle identity on non-identity triples
    let mut eqs: Vec<Vec<u64>> = Vec::new();
    for &x in &nonid {
        for &y in &nonid {
            for &z in &nonid {
                let mut r = vec![0u64; nvars];
                let mut add = |a: usize, b: usize, sign: bool| {
                    if let Some(i) = var_index(h, a, b) {
                        r[i] = if sign { (r[i] + 1) % m } else { (r[i] + m - 1) % m };
                    }
                };
                add(x, y, true);
                add(h.mul(x, y), z, true);
                add(y, z, false);
                add(x, h.mul(y, z), false);
                if r.iter().any(|&v| v != 0) {
                    eqs.push(r);
                }
            }
        }
    }
    let z2 = smith::diagonalize(&eqs, nvars, m, Vec::new());
    let cocycle_rows: Vec<usize> = (0..nvars).filter(|&i| z2.diag[i] > 1).collect();
    let cocycle_orders: Vec<u64> = cocycle_rows.iter().map(|&i| z2.diag[i]).collect();
    let cocycle_gens: Vec<Vec<u64>> = z2
        .kernel()
        .into_iter()
        .map(|(v, _)| v)
        .collect();

    // functions whose coboundary lands in the identified subgroup
    let expo = h.exponent() as u64;
    let mut deltas: Vec<Vec<i64>> = Vec::new();
    for &t in &nonid {
        let mut d = vec![0i64; n];
        d[t] = expo as i64;
        deltas.push(d);
    }
    let mut hom_eqs: Vec<Vec<u64>> = Vec::new();
    for &x in &nonid {
        for &y in &nonid {
            let mut r = vec![0u64; n];
            r[x] = (r[x] + 1) % expo;
            r[y] = (r[y] + 1) % expo;
            r[h.mul(x, y)] = (r[h.mul(x, y)] + expo - 1) % expo;
            r[h.identity()] = 0;
            if r.iter().any(|&v| v != 0) {
                hom_eqs.push(r);
            }
        }
    }
    if expo > 1 {
        for (c, _) in smith::kernel_mod(&hom_eqs, n, expo) {
            let mut d: Vec<i64> = c.iter().map(|&v| v as i64).collect();
            d[h.identity()] = 0;
            deltas.push(d);
        }
    }
    let relations: Vec<Vec<u64>> = deltas
        .iter()
        .map(|d| {
            let mut vals = vec![0u64; nvars];
            for &x in &nonid {
                for &y in &nonid {
                    let i = var_index(h, x, y).expect("non-identity pair");
                    let raw = d[x] + d[y] - d[h.mul(x, y)];
                    debug_assert_eq!(raw.rem_euclid(expo as i64), 0);
                    vals[i] = (raw / expo as i64).rem_euclid(m as i64) as u64;
                }
            }
            let y = smith::mat_vec(&z2.q_inv, &vals, m);
            cocycle_rows
                .iter()
                .zip(&cocycle_orders)
                .map(|(&i, &o)| {
                    let scale = m / o;
                    debug_assert_eq!(y[i] % scale, 0, "coboundary lies in the cocycle module");
                    y[i] / scale
                })
                .collect()
        })
        .collect();
    let quotient = Quotient::new(&cocycle_orders, &relations, m);
    let mut out = CohomologyGroup {
        m,
        invariant_factors: quotient.factors.clone(),
        representatives: Vec::new(),
        group: h.clone(),
        cocycle_gens,
        cocycle_orders,
        cocycle_rows,
        q_inv: z2.q_inv.clone(),
        quotient,
    };
    out.representatives = out.quotient.generators.clone().iter().map(|t| out.expand(t)).collect();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2() -> FiniteGroup {
        FiniteGroup::cyclic(2)
    }

    fn table(f: &Field, rows: &[&[i64]]) -> Vec<Vec<FieldElement>> {
        rows.iter().map(|r| r.iter().map(|&v| f.from_int(v)).collect()).collect()
    }

    #[test]
    fn check_examples() {
        let f = Field::prime(5).unwrap();
        let g = z2();
        assert!(Cocycle::check(&f, &g, &table(&f, &[&[1, 1], &[1, 1]])).unwrap().is_identically_one());
        let c = Cocycle::check(&f, &g, &table(&f, &[&[1, 1], &[1, 2]])).unwrap();
        assert_eq!(c.value(1, 1), f.from_int(2));
        // σ(e, g) ≠ σ(e, e) is never a cocycle
        assert_eq!(
            Cocycle::check(&f, &g, &table(&f, &[&[1, 2], &[1, 1]])).unwrap_err(),
            Error::CocycleViolation(0, 0, 1)
        );
        assert_eq!(Cocycle::check(&f, &g, &table(&f, &[&[1, 0], &[1, 1]])).unwrap_err(), Error::ZeroValue(0, 1));
    }

    #[test]
    fn normalization_divides_out_a_constant() {
        let f = Field::prime(5).unwrap();
        let g = z2();
        let c = Cocycle::check(&f, &g, &table(&f, &[&[2, 2], &[2, 2]])).unwrap();
        assert!(c.is_identically_one());
        let c = Cocycle::check(&f, &g, &table(&f, &[&[3, 3], &[3, 1]])).unwrap();
        assert_eq!(c.value(0, 1), f.one());
        assert_eq!(c.value(1, 1), f.div(f.one(), f.from_int(3)).unwrap());
    }

    #[test]
    fn coboundary_examples() {
        let f = Field::prime(5).unwrap();
        let g = z2();
        let s = Cocycle::trivial(&f, &g);
        let t = Cocycle::check(&f, &g, &table(&f, &[&[1, 1], &[1, 4]])).unwrap();
        let d = coboundary_equivalent(&s, &t, 4).unwrap().unwrap();
        assert_eq!(s.twist_by(&d).unwrap(), t);
        assert!(d[1] == f.from_int(2) || d[1] == f.from_int(3));
        let same = coboundary_equivalent(&s, &s, 4).unwrap().unwrap();
        assert!(same.iter().all(|&v| v == f.one()));

        let k4 = FiniteGroup::named("K4").unwrap();
        // anticommuting: σ(a, b) = 1, σ(b, a) = -1 with a = (1,0) at index 2, b = (0,1) at 1
        let e = ExponentCocycle::new(&k4, 2, &anticommuting(&k4)).unwrap();
        let nontrivial = Cocycle::from_exponents(&f, &k4, &e).unwrap();
        let triv = Cocycle::trivial(&f, &k4);
        assert_eq!(coboundary_equivalent(&triv, &nontrivial, 2).unwrap(), None);
    }

    /// Exponents of the cocycle `σ((a1,b1),(a2,b2)) = (-1)^{b1 a2}` on K4.
    fn anticommuting(k4: &FiniteGroup) -> Vec<Vec<u64>> {
        let n = k4.order();
        (0..n).map(|x| (0..n).map(|y| ((x % 2) * (y / 2)) as u64).collect()).collect()
    }

    #[test]
    fn values_outside_mu() {
        let f = Field::prime(5).unwrap();
        let g = z2();
        let t = Cocycle::check(&f, &g, &table(&f, &[&[1, 1], &[1, 2]])).unwrap();
        let s = Cocycle::trivial(&f, &g);
        assert_eq!(coboundary_equivalent(&s, &t, 2).unwrap_err(), Error::ValueOutsideMu { m: 2 });
    }

    #[test]
    fn small_h2_groups() {
        assert!(h2_group(&FiniteGroup::cyclic(1), 3).unwrap().is_trivial());
        for n in 1..=6 {
            assert!(h2_group(&FiniteGroup::cyclic(n), n as u64).unwrap().is_trivial(), "Z{n}");
        }
        let k4 = FiniteGroup::named("K4").unwrap();
        let h = h2_group(&k4, 2).unwrap();
        assert_eq!(h.invariant_factors, vec![2]);
        let anti = ExponentCocycle::new(&k4, 2, &anticommuting(&k4)).unwrap();
        assert!(!h.is_trivial_class(&anti).unwrap());
        assert!(h.is_trivial_class(&ExponentCocycle::zero(&k4, 2)).unwrap());
        assert_eq!(h.all_classes().len(), 2);
        assert_eq!(h2_group(&FiniteGroup::named("Z2^3").unwrap(), 2).unwrap().invariant_factors, vec![2, 2, 2]);
        assert_eq!(h2_group(&FiniteGroup::named("D4").unwrap(), 8).unwrap().invariant_factors, vec![2]);
        assert!(h2_group(&FiniteGroup::quaternion(), 8).unwrap().is_trivial());
        assert_eq!(h2_group(&FiniteGroup::named("Z3xZ3").unwrap(), 3).unwrap().invariant_factors, vec![3]);
        assert!(h2_group(&FiniteGroup::named("S3").unwrap(), 6).unwrap().is_trivial());
        assert_eq!(h2_group(&FiniteGroup::named("Z2xZ4").unwrap(), 4).unwrap().invariant_factors, vec![2]);
        assert_eq!(h2_group(&FiniteGroup::cyclic(13), 2).unwrap_err(), Error::GroupTooLarge(13));
    }

    #[test]
    fn representatives_are_cocycles() {
        for name in ["K4", "Z2^3", "D4", "Z2xZ4", "Z3xZ3", "Z2xZ6"] {
            let g = FiniteGroup::named(name).unwrap();
            let m = g.exponent() as u64;
            let h = h2_group(&g, m).unwrap();
            for (i, rep) in h.representatives.iter().enumerate() {
                let again = ExponentCocycle::new(&g, m, &rep.rows()).unwrap();
                let mut expect = vec![0; h.invariant_factors.len()];
                expect[i] = 1;
                assert_eq!(h.class_of(&again).unwrap(), expect, "{name}");
            }
        }
    }

    #[test]
    fn lifting_uses_available_roots() {
        let f = Field::prime(5).unwrap();
        let z3 = FiniteGroup::cyclic(3);
        let zero = ExponentCocycle::zero(&z3, 3);
        assert!(Cocycle::from_exponents(&f, &z3, &zero).unwrap().is_identically_one());
        let carry: Vec<Vec<u64>> = (0..3).map(|x| (0..3).map(|y| u64::from(x + y >= 3)).collect()).collect();
        let c = ExponentCocycle::new(&z3, 3, &carry).unwrap();
        assert_eq!(Cocycle::from_exponents(&f, &z3, &c).unwrap_err(), Error::NoSuchRoot { m: 3, order: 5 });
    }
}
