//! Structural decision procedures: units, graded simplicity, graded division,
//! radical, Wedderburn splitting, corners, centralizers and the center.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{Embedding, GradedAlgebra, GradedSubspace};
use crate::error::{Error, Result};
use crate::field::linalg::{axpy, is_zero_vec, solve_vec, vec_add, vec_scale, vec_sub, zero_vec, Matrix, Subspace, Vector};
use crate::field::poly::{self, Poly};
use crate::field::{Field, FieldElement};
use crate::group::subgroup_closure;
use crate::meataxe::{self, Module};

const MAX_RANDOM_TRIES: usize = 1000;

/// Left multiplications, right multiplications and degree projections: their
/// invariant subspaces are exactly the graded two-sided ideals.
pub fn ideal_operators(r: &GradedAlgebra) -> Vec<Matrix> {
    let mut ops = Vec::with_capacity(2 * r.dim() + r.group().order());
    for i in 0..r.dim() {
        let b = r.basis_vector(i);
        ops.push(r.left_mul_matrix(&b));
        ops.push(r.right_mul_matrix(&b));
    }
    ops.extend(projections(r));
    ops
}

/// Operators whose invariant subspaces are the graded right ideals.
pub fn right_ideal_operators(r: &GradedAlgebra) -> Vec<Matrix> {
    let mut ops: Vec<Matrix> = (0..r.dim()).map(|i| r.right_mul_matrix(&r.basis_vector(i))).collect();
    ops.extend(projections(r));
    ops
}

fn projections(r: &GradedAlgebra) -> Vec<Matrix> {
    let support = r.support();
    if support.len() > 1 {
        support.iter().map(|&g| r.projection(g)).collect()
    } else {
        Vec::new()
    }
}

fn has_zero_product(r: &GradedAlgebra) -> bool {
    (0..r.dim()).all(|i| (0..r.dim()).all(|j| r.basis_product(i, j).is_empty()))
}

/// Result of [`is_graded_simple`].
#[derive(Clone, Debug)]
pub struct GradedSimplicity {
    pub simple: bool,
    /// A proper graded ideal when `simple` is false. For a one-dimensional
    /// algebra with zero product this is the zero ideal.
    pub witness: Option<GradedSubspace>,
}

/// Whether `R^2 != 0` and `R` has no proper nonzero graded ideal.
pub fn is_graded_simple(r: &GradedAlgebra, seed: u64) -> Result<GradedSimplicity> {
    let f = r.field();
    let n = r.dim();
    if n == 0 {
        return Ok(GradedSimplicity { simple: false, witness: None });
    }
    if has_zero_product(r) {
        let space = if n > 1 { Subspace::span(f, n, [r.basis_vector(0)]) } else { Subspace::zero(n) };
        return Ok(GradedSimplicity { simple: false, witness: Some(GradedSubspace::new(r, space)?) });
    }
    let ops = ideal_operators(r);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match meataxe::analyse(f, &ops, n, &mut rng)? {
        Module::Irreducible => Ok(GradedSimplicity { simple: true, witness: None }),
        Module::Reducible(found) => {
            // prefer the ideal of the lowest basis vector that is proper
            let space = (0..n)
                .map(|i| crate::field::linalg::spin(f, &ops, &[r.basis_vector(i)], n))
                .find(|s| !s.is_full())
                .unwrap_or(found);
            let witness = GradedSubspace::new(r, space)
                .map_err(|_| Error::Internal("invariant subspace is not graded".into()))?;
            Ok(GradedSimplicity { simple: false, witness: Some(witness) })
        }
    }
}

/// The identity element of `R`, or `NoUnit`.
///
/// Graded simple inputs go through the constructive route: a minimal graded
/// right ideal yields a homogeneous idempotent, which is enlarged by
/// `t = a + f - fa` until its right annihilator vanishes. Other inputs are
/// handled by solving `u b = b u = b` directly.
pub fn find_unit(r: &GradedAlgebra, seed: u64) -> Result<Vector> {
    if r.dim() == 0 {
        return Ok(Vec::new());
    }
    if is_graded_simple(r, seed)?.simple {
        constructive_unit(r, seed)
    } else {
        solve_unit(r)
    }
}

/// Solves the linear system for a two-sided identity.
pub fn solve_unit(r: &GradedAlgebra) -> Result<Vector> {
    let f = r.field();
    let n = r.dim();
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut rows = Vec::with_capacity(2 * n * n);
    let mut rhs = Vec::with_capacity(2 * n * n);
    for i in 0..n {
        let b = r.basis_vector(i);
        for m in [r.right_mul_matrix(&b), r.left_mul_matrix(&b)] {
            rows.extend(m.to_rows());
            rhs.extend(b.iter().copied());
        }
    }
    let u = solve_vec(f, &Matrix::from_rows(&rows), &rhs).ok_or(Error::NoUnit)?;
    if r.is_unit(&u) {
        Ok(u)
    } else {
        Err(Error::Internal("solved unit is not homogeneous of degree e".into()))
    }
}

fn constructive_unit(r: &GradedAlgebra, seed: u64) -> Result<Vector> {
    let f = r.field();
    let n = r.dim();
    let e = r.group().identity();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x756e_6974);
    let ops = right_ideal_operators(r);

    let first = meataxe::minimal_submodule(f, &ops, &Subspace::full(f, n), &mut rng)?;
    let mut a = idempotent_generator(r, &first)?;
    let mut ann = right_annihilator(r, &a);
    while !ann.is_zero() {
        let j = meataxe::minimal_submodule(f, &ops, &ann, &mut rng)?;
        let g = idempotent_generator(r, &j)?;
        let t = vec_sub(f, &vec_add(f, &a, &g), &r.multiply(&g, &a));
        if r.multiply(&t, &t) != t || r.homogeneous_degree(&t) != Some(e) {
            return Err(Error::Internal("enlarged idempotent is not a homogeneous idempotent".into()));
        }
        let next = right_annihilator(r, &t);
        if next.dim() >= ann.dim() {
            return Err(Error::Internal("right annihilator did not shrink".into()));
        }
        a = t;
        ann = next;
    }
    // a is now a left identity; the left annihilator {y : ya = 0} is a
    // two-sided graded ideal killed by R on the right, so it must vanish
    let left = Subspace::span(f, n, r.right_mul_matrix(&a).nullspace(f));
    if !left.is_zero() {
        return Err(Error::Internal("left identity has a nonzero left annihilator".into()));
    }
    if !r.is_unit(&a) {
        return Err(Error::Internal("constructed element is not a two-sided unit".into()));
    }
    Ok(a)
}

fn right_annihilator(r: &GradedAlgebra, a: &[FieldElement]) -> Subspace {
    let f = r.field();
    Subspace::span(f, r.dim(), r.left_mul_matrix(a).nullspace(f))
}

/// For a minimal graded right ideal `I`, the degree-`e` idempotent `a` with
/// `I = aR`.
fn idempotent_generator(r: &GradedAlgebra, ideal: &Subspace) -> Result<Vector> {
    let f = r.field();
    let e = r.group().identity();
    let basis = ideal.basis();
    let x = basis
        .iter()
        .find(|x| basis.iter().any(|y| !is_zero_vec(&r.multiply(x, y))))
        .ok_or_else(|| Error::Internal("minimal graded right ideal squares to zero".into()))?;
    let identity_part: Vec<&Vector> = basis.iter().filter(|v| r.homogeneous_degree(v) == Some(e)).collect();
    let cols: Vec<Vector> = identity_part.iter().map(|v| r.multiply(x, v)).collect();
    let c = solve_vec(f, &Matrix::from_columns(r.dim(), &cols), x)
        .ok_or_else(|| Error::Internal("no right identity for x inside the ideal".into()))?;
    let mut a = zero_vec(r.dim());
    for (ci, v) in c.iter().zip(&identity_part) {
        axpy(f, &mut a, *ci, v);
    }
    if is_zero_vec(&a) || r.multiply(&a, &a) != a {
        return Err(Error::Internal("ideal generator is not an idempotent".into()));
    }
    Ok(a)
}

/// Result of [`is_graded_division`].
#[derive(Clone, Debug)]
pub struct GradedDivision {
    pub division: bool,
    /// `(degree, inverse of the spanning basis vector of that component)` for
    /// every degree in the support, when `division` holds.
    pub inverses: Vec<(usize, Vector)>,
}

/// Unital, every nonzero component one-dimensional, and every spanning vector
/// invertible.
pub fn is_graded_division(r: &GradedAlgebra, seed: u64) -> Result<GradedDivision> {
    let f = r.field();
    let no = GradedDivision { division: false, inverses: Vec::new() };
    let unit = match find_unit(r, seed) {
        Ok(u) => u,
        Err(Error::NoUnit) => return Ok(no),
        Err(e) => return Err(e),
    };
    if r.dim() == 0 {
        return Ok(no);
    }
    let support = r.support();
    let mut inverses = Vec::with_capacity(support.len());
    for &g in &support {
        let comp = r.component(g);
        if comp.len() != 1 {
            return Ok(no);
        }
        let b = r.basis_vector(comp[0]);
        let mut rows = r.left_mul_matrix(&b).to_rows();
        rows.extend(r.right_mul_matrix(&b).to_rows());
        let rhs: Vec<FieldElement> = unit.iter().chain(unit.iter()).copied().collect();
        match solve_vec(f, &Matrix::from_rows(&rows), &rhs) {
            Some(inv) => inverses.push((g, inv)),
            None => return Ok(no),
        }
    }
    let closure = subgroup_closure(r.group(), &support);
    if closure.members() != support.as_slice() {
        return Err(Error::Internal("support of a graded division algebra is not a subgroup".into()));
    }
    Ok(GradedDivision { division: true, inverses })
}

fn check_characteristic(r: &GradedAlgebra) -> Result<()> {
    let p = r.field().p();
    if p <= r.dim() as u64 {
        return Err(Error::FieldCharTooSmall { p, dim: r.dim() });
    }
    Ok(())
}

/// The Jacobson radical as the kernel of the trace form `(x, y) ↦ tr(L_xy)`.
/// Requires `p > dim R`.
pub fn jacobson_radical(r: &GradedAlgebra) -> Result<Subspace> {
    check_characteristic(r)?;
    let f = r.field();
    let n = r.dim();
    let traces: Vec<FieldElement> = (0..n)
        .map(|k| {
            let m = r.left_mul_matrix(&r.basis_vector(k));
            (0..n).fold(f.zero(), |acc, i| f.add(acc, m[(i, i)]))
        })
        .collect();
    let mut gram = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let mut t = f.zero();
            for &(k, c) in r.basis_product(i, j) {
                t = f.add(t, f.mul(c, traces[k]));
            }
            gram[(i, j)] = t;
        }
    }
    let rad = Subspace::span(f, n, gram.nullspace(f));
    for v in rad.basis() {
        for i in 0..n {
            let b = r.basis_vector(i);
            if !rad.contains(f, &r.multiply(&b, v)) || !rad.contains(f, &r.multiply(v, &b)) {
                return Err(Error::Internal("trace-form kernel is not an ideal".into()));
            }
        }
    }
    if !is_nilpotent(r, &rad) {
        return Err(Error::Internal("trace-form kernel is not nilpotent".into()));
    }
    Ok(rad)
}

/// Whether some power of the subspace `s` (under the product of `r`) is zero.
pub fn is_nilpotent(r: &GradedAlgebra, s: &Subspace) -> bool {
    let f = r.field();
    let mut power = s.clone();
    while !power.is_zero() {
        let next = Subspace::span(
            f,
            r.dim(),
            power.basis().iter().flat_map(|x| s.basis().iter().map(move |y| r.multiply(x, y))),
        );
        if next.dim() >= power.dim() {
            return false;
        }
        power = next;
    }
    true
}

/// One simple summand `M_n(F)` of a split semisimple algebra.
#[derive(Clone, Debug)]
pub struct SimpleSummand {
    /// Central primitive idempotent.
    pub idempotent: Vector,
    pub size: usize,
    /// `units[a][b]` is the matrix unit `E_ab`.
    pub units: Vec<Vec<Vector>>,
}

/// Splits a semisimple algebra into matrix algebras over `F`.
///
/// Fails with `NotSemisimple` when the radical is nonzero and with `NotSplit`
/// when the center is not a product of copies of `F`.
pub fn wedderburn_decompose(a: &GradedAlgebra, seed: u64) -> Result<Vec<SimpleSummand>> {
    let rad = jacobson_radical(a)?;
    if !rad.is_zero() {
        return Err(Error::NotSemisimple(rad.dim()));
    }
    if a.dim() == 0 {
        return Ok(Vec::new());
    }
    let f = a.field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x7765_6464);
    let unit = solve_unit(a)?;
    let center = center_space(a);

    let mut blocks = Vec::new();
    let mut pending = vec![unit];
    let mut nonsplit: Vec<usize> = Vec::new();
    while let Some(eps) = pending.pop() {
        let local = Subspace::span(f, a.dim(), center.basis().iter().map(|z| a.multiply(&eps, z)));
        let d = local.dim();
        if d == 1 {
            blocks.push(eps);
            continue;
        }
        let mut outcome = None;
        for w in candidates(f, local.basis(), &mut rng) {
            let mu = min_poly(a, &w, &eps)?;
            let parts = primary_parts(f, &mu);
            if parts.len() > 1 {
                outcome = Some(Some(crt_idempotents(a, &mu, &parts, &w, &eps)));
                break;
            }
            if poly::degree(&mu) == Some(d) {
                // eps Z is a field of degree d over F
                outcome = Some(None);
                break;
            }
        }
        match outcome {
            Some(Some(parts)) => pending.extend(parts.into_iter().rev()),
            Some(None) => {
                nonsplit.push(d);
                blocks.push(eps);
            }
            None => return Err(Error::Internal("center did not split".into())),
        }
    }
    if let Some(&degree) = nonsplit.first() {
        let suggested_extension = nonsplit.iter().fold(1, |l, &d| lcm(l, d));
        return Err(Error::NotSplit { degree, suggested_extension });
    }
    blocks.iter().map(|eps| simple_summand(a, eps, &mut rng)).collect()
}

fn lcm(a: usize, b: usize) -> usize {
    a / crate::field::gcd_u64(a as u64, b as u64) as usize * b
}

/// Basis vectors first, then seeded random combinations.
fn candidates<'a>(f: &'a Field, basis: &'a [Vector], rng: &'a mut ChaCha8Rng) -> impl Iterator<Item = Vector> + 'a {
    let fixed = basis.iter().cloned();
    let random = (0..MAX_RANDOM_TRIES).map(move |_| {
        let mut v = zero_vec(basis[0].len());
        for b in basis {
            let c = f.element(rng.gen_range(0..f.q())).expect("index below q");
            axpy(f, &mut v, c, b);
        }
        v
    });
    fixed.chain(random)
}

/// Minimal polynomial of `w` in the unital algebra `eps A eps` (monic, low
/// degree first).
pub fn min_poly(a: &GradedAlgebra, w: &[FieldElement], eps: &[FieldElement]) -> Result<Poly> {
    let f = a.field();
    let mut tracker = Dependency::new(f);
    let mut power = eps.to_vec();
    loop {
        if let Some(combo) = tracker.insert(&power) {
            let mut mu: Poly = combo.iter().map(|&c| f.neg(c)).collect();
            mu.push(f.one());
            return Ok(mu);
        }
        if tracker.len() > a.dim() {
            return Err(Error::Internal("minimal polynomial degree exceeds the dimension".into()));
        }
        power = a.multiply(&power, w);
    }
}

/// Incremental elimination that expresses a dependent vector in terms of the
/// previously inserted ones.
struct Dependency<'f> {
    f: &'f Field,
    // (reduced vector with pivot value 1, pivot, combination of inputs)
    rows: Vec<(Vector, usize, Vector)>,
    count: usize,
}

impl<'f> Dependency<'f> {
    fn new(f: &'f Field) -> Self {
        Dependency { f, rows: Vec::new(), count: 0 }
    }

    fn len(&self) -> usize {
        self.count
    }

    /// `Some(c)` with `v = Σ c_i input_i` when dependent; otherwise records
    /// `v` and returns `None`.
    fn insert(&mut self, v: &[FieldElement]) -> Option<Vector> {
        let f = self.f;
        let k = self.count;
        let mut red = v.to_vec();
        let mut combo = zero_vec(k + 1);
        combo[k] = f.one();
        let mut expr = zero_vec(k);
        for (row, p, c) in &self.rows {
            let x = red[*p];
            if !x.is_zero() {
                axpy(f, &mut red, f.neg(x), row);
                for (i, ci) in c.iter().enumerate() {
                    combo[i] = f.sub(combo[i], f.mul(x, *ci));
                    expr[i] = f.add(expr[i], f.mul(x, *ci));
                }
            }
        }
        match red.iter().position(|c| !c.is_zero()) {
            None => Some(expr),
            Some(p) => {
                let inv = f.inv(red[p]).expect("nonzero pivot");
                self.rows.push((vec_scale(f, &red, inv), p, vec_scale(f, &combo, inv)));
                for (_, _, c) in self.rows.iter_mut() {
                    c.resize(k + 1, f.zero());
                }
                self.count += 1;
                None
            }
        }
    }
}

/// Pairwise coprime prime-power factors of `mu`.
fn primary_parts(f: &Field, mu: &[FieldElement]) -> Vec<Poly> {
    poly::factor(f, mu)
        .into_iter()
        .map(|(g, m)| (1..m).fold(g.clone(), |acc, _| poly::mul(f, &acc, &g)))
        .collect()
}

fn eval_in_algebra(a: &GradedAlgebra, p: &[FieldElement], w: &[FieldElement], eps: &[FieldElement]) -> Vector {
    let f = a.field();
    let mut acc = zero_vec(a.dim());
    for &c in p.iter().rev() {
        acc = a.multiply(&acc, w);
        axpy(f, &mut acc, c, eps);
    }
    acc
}

/// Idempotents `e_i(w)` with `e_i ≡ 1 mod part_i` and `≡ 0` modulo the
/// other parts.
fn crt_idempotents(a: &GradedAlgebra, mu: &[FieldElement], parts: &[Poly], w: &[FieldElement], eps: &[FieldElement]) -> Vec<Vector> {
    let f = a.field();
    parts
        .iter()
        .map(|part| {
            let (cofactor, r) = poly::divrem(f, mu, part);
            debug_assert!(poly::degree(&r).is_none());
            let (_, s, _) = poly::xgcd(f, &cofactor, part);
            let e = poly::rem(f, &poly::mul(f, &cofactor, &s), mu);
            eval_in_algebra(a, &e, w, eps)
        })
        .collect()
}

fn simple_summand(a: &GradedAlgebra, eps: &[FieldElement], rng: &mut ChaCha8Rng) -> Result<SimpleSummand> {
    let f = a.field();
    let dim = a.dim();
    let block = Subspace::span(f, dim, (0..dim).map(|i| a.multiply(eps, &a.basis_vector(i))));
    let n = (1..=block.dim()).find(|k| k * k >= block.dim()).unwrap_or(0);
    if n * n != block.dim() {
        return Err(Error::Internal(format!("simple block of dimension {} is not a square", block.dim())));
    }
    let d = primitive_idempotent(a, eps, rng)?;
    let complement = vec_sub(f, eps, &d);

    // u_1 = d, then a basis of (eps - d) A d; v_b from d A, dual under the pairing into F d
    let mut left = vec![d.clone()];
    left.extend(
        Subspace::span(f, dim, (0..dim).map(|i| a.multiply(&a.multiply(&complement, &a.basis_vector(i)), &d)))
            .basis()
            .iter()
            .cloned(),
    );
    let right_space = Subspace::span(f, dim, (0..dim).map(|i| a.multiply(&d, &a.basis_vector(i))));
    if left.len() != n || right_space.dim() != n {
        return Err(Error::Internal("primitive idempotent has the wrong rank".into()));
    }
    let pivot = d.iter().position(|c| !c.is_zero()).expect("nonzero idempotent");
    let dinv = f.inv(d[pivot])?;
    // pairing[k][a] = scalar s with w_k u_a = s d
    let mut pairing = Matrix::zeros(n, n);
    for (k, w) in right_space.basis().iter().enumerate() {
        for (al, u) in left.iter().enumerate() {
            let p = a.multiply(w, u);
            let s = f.mul(p[pivot], dinv);
            if vec_scale(f, &d, s) != p {
                return Err(Error::Internal("corner of a primitive idempotent is not one-dimensional".into()));
            }
            pairing[(k, al)] = s;
        }
    }
    let inv = pairing.inverse(f).ok_or_else(|| Error::Internal("degenerate idempotent pairing".into()))?;
    // v_b = Σ_k c_k w_k with Σ_k c_k pairing[k][a] = δ_ab, i.e. c = row b of pairing^{-1}
    let dual: Vec<Vector> = (0..n)
        .map(|b| {
            let mut v = zero_vec(dim);
            for (k, w) in right_space.basis().iter().enumerate() {
                axpy(f, &mut v, inv[(b, k)], w);
            }
            v
        })
        .collect();
    let units: Vec<Vec<Vector>> = left.iter().map(|u| dual.iter().map(|v| a.multiply(u, v)).collect()).collect();
    check_matrix_units(a, &units, eps)?;
    Ok(SimpleSummand { idempotent: eps.to_vec(), size: n, units })
}

/// `E_ab E_cd = δ_bc E_ad` and `Σ E_aa = eps`.
pub fn check_matrix_units(a: &GradedAlgebra, units: &[Vec<Vector>], eps: &[FieldElement]) -> Result<()> {
    let f = a.field();
    let n = units.len();
    let mut sum = zero_vec(a.dim());
    for i in 0..n {
        sum = vec_add(f, &sum, &units[i][i]);
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let p = a.multiply(&units[i][j], &units[k][l]);
                    let ok = if j == k { p == units[i][l] } else { is_zero_vec(&p) };
                    if !ok {
                        return Err(Error::Internal(format!("matrix units fail at ({i},{j})({k},{l})")));
                    }
                }
            }
        }
    }
    if sum != eps {
        return Err(Error::Internal("diagonal matrix units do not sum to the block unit".into()));
    }
    Ok(())
}

/// A primitive idempotent below `eps` in a split simple block.
fn primitive_idempotent(a: &GradedAlgebra, eps: &[FieldElement], rng: &mut ChaCha8Rng) -> Result<Vector> {
    let f = a.field();
    let dim = a.dim();
    let mut eta = eps.to_vec();
    loop {
        let corner = Subspace::span(
            f,
            dim,
            (0..dim).map(|i| a.multiply(&a.multiply(&eta, &a.basis_vector(i)), &eta)),
        );
        if corner.dim() <= 1 {
            return Ok(eta);
        }
        let mut next = None;
        for w in candidates(f, corner.basis(), rng) {
            let mu = min_poly(a, &w, &eta)?;
            let parts = primary_parts(f, &mu);
            if parts.len() > 1 {
                next = Some(crt_idempotents(a, &mu, &parts[..1], &w, &eta).remove(0));
                break;
            }
        }
        eta = next.ok_or_else(|| Error::Internal("no splitting element found in a simple block".into()))?;
    }
}

/// Subspace of elements commuting with every vector in `s`.
pub fn centralizer_space(r: &GradedAlgebra, s: &[Vector]) -> Subspace {
    let f = r.field();
    let n = r.dim();
    if s.is_empty() {
        return Subspace::full(f, n);
    }
    let mut rows = Vec::with_capacity(n * s.len());
    for v in s {
        let diff = r.right_mul_matrix(v).add(f, &r.left_mul_matrix(v).scale(f, f.neg(f.one())));
        rows.extend(diff.to_rows());
    }
    Subspace::span(f, n, Matrix::from_rows(&rows).nullspace(f))
}

pub fn center_space(r: &GradedAlgebra) -> Subspace {
    let basis: Vec<Vector> = (0..r.dim()).map(|i| r.basis_vector(i)).collect();
    centralizer_space(r, &basis)
}

/// The centralizer of `s` as an algebra. It is graded when its echelon basis
/// is homogeneous (always the case when `s` lies in the identity component);
/// otherwise it carries the trivial grading.
pub fn centralizer(r: &GradedAlgebra, s: &[Vector]) -> Result<(GradedAlgebra, Embedding)> {
    let space = centralizer_space(r, s);
    sub_with_unit(r, &space)
}

pub fn center(r: &GradedAlgebra) -> Result<(GradedAlgebra, Embedding)> {
    sub_with_unit(r, &center_space(r))
}

fn sub_with_unit(r: &GradedAlgebra, space: &Subspace) -> Result<(GradedAlgebra, Embedding)> {
    let f = r.field();
    let basis = space.basis().to_vec();
    let (sub, emb) = if GradedSubspace::new(r, space.clone()).is_ok() {
        r.subalgebra(&basis)?
    } else {
        r.ungraded_subalgebra(&basis)?
    };
    let unit = r.unit().and_then(|u| emb.from_parent(f, u));
    Ok((sub.with_unit(unit)?, emb))
}

/// The corner `tRt` of a homogeneous idempotent `t`, on an echelon basis,
/// with unit `t`.
pub fn corner(r: &GradedAlgebra, t: &[FieldElement]) -> Result<(GradedAlgebra, Embedding)> {
    let f = r.field();
    let n = r.dim();
    if t.len() != n {
        return Err(Error::Dimension("idempotent length does not match the algebra".into()));
    }
    if r.multiply(t, t) != t {
        return Err(Error::NotIdempotent);
    }
    if !is_zero_vec(t) && r.homogeneous_degree(t) != Some(r.group().identity()) {
        return Err(Error::NotHomogeneous);
    }
    let space = Subspace::span(f, n, (0..n).map(|i| r.multiply(&r.multiply(t, &r.basis_vector(i)), t)));
    let (sub, emb) = r.subalgebra(space.basis())?;
    let unit = emb.from_parent(f, t).ok_or_else(|| Error::Internal("idempotent outside its corner".into()))?;
    Ok((sub.with_unit(Some(unit))?, emb))
}

/// Simplicity as an ungraded algebra: zero radical, a single Wedderburn block
/// and a one-dimensional center.
pub fn is_simple_ungraded(r: &GradedAlgebra, seed: u64) -> Result<bool> {
    let rad = jacobson_radical(r)?;
    if !rad.is_zero() || r.dim() == 0 {
        return Ok(false);
    }
    let summands = wedderburn_decompose(r, seed)?;
    Ok(summands.len() == 1 && center_space(r).dim() == 1)
}

/// The identity component as an algebra in its own right.
pub fn identity_component(r: &GradedAlgebra) -> Result<(GradedAlgebra, Embedding)> {
    let basis: Vec<Vector> = r.component(r.group().identity()).iter().map(|&i| r.basis_vector(i)).collect();
    let (sub, emb) = r.subalgebra(&basis)?;
    let unit = r.unit().and_then(|u| emb.from_parent(r.field(), u));
    Ok((sub.with_unit(unit)?, emb))
}

/// Analysis outcome that did not produce a value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Caveat {
    FieldCharTooSmall { p: u64, dim: usize },
    NotSplit { degree: usize, suggested_extension: usize },
    IdentityComponentNotSemisimple { radical_dim: usize },
}

/// Everything the `analyze` command reports.
#[derive(Clone, Debug)]
pub struct AnalysisReport {
    pub dim: usize,
    pub support: Vec<usize>,
    pub unit: Option<Vector>,
    pub graded_simple: bool,
    pub witness: Option<GradedSubspace>,
    pub graded_division: bool,
    pub radical_dim: Option<usize>,
    pub radical_graded: Option<bool>,
    /// Matrix sizes of the simple blocks of the identity component.
    pub identity_summands: Option<Vec<usize>>,
    pub center_dim: usize,
    pub simple: Option<bool>,
    pub caveats: Vec<Caveat>,
}

fn note(caveats: &mut Vec<Caveat>, e: Error) -> Result<()> {
    let c = match e {
        Error::FieldCharTooSmall { p, dim } => Caveat::FieldCharTooSmall { p, dim },
        Error::NotSplit { degree, suggested_extension } => Caveat::NotSplit { degree, suggested_extension },
        Error::NotSemisimple(radical_dim) => Caveat::IdentityComponentNotSemisimple { radical_dim },
        other => return Err(other),
    };
    if !caveats.contains(&c) {
        caveats.push(c);
    }
    Ok(())
}

pub fn analyze(r: &GradedAlgebra, seed: u64) -> Result<AnalysisReport> {
    let mut caveats = Vec::new();

    let gs = is_graded_simple(r, seed)?;
    let unit = match find_unit(r, seed) {
        Ok(u) => Some(u),
        Err(Error::NoUnit) => None,
        Err(e) => return Err(e),
    };
    let graded_division = is_graded_division(r, seed)?.division;
    let (radical_dim, radical_graded) = match jacobson_radical(r) {
        Ok(rad) => (Some(rad.dim()), Some(GradedSubspace::new(r, rad.clone()).is_ok())),
        Err(e) => {
            note(&mut caveats, e)?;
            (None, None)
        }
    };
    let (re, _) = identity_component(r)?;
    let identity_summands = match wedderburn_decompose(&re, seed) {
        Ok(s) => Some(s.iter().map(|b| b.size).collect()),
        Err(e) => {
            note(&mut caveats, e)?;
            None
        }
    };
    let simple = match is_simple_ungraded(r, seed) {
        Ok(b) => Some(b),
        Err(e) => {
            note(&mut caveats, e)?;
            None
        }
    };
    Ok(AnalysisReport {
        dim: r.dim(),
        support: r.support(),
        unit,
        graded_simple: gs.simple,
        witness: gs.witness,
        graded_division,
        radical_dim,
        radical_graded,
        identity_summands,
        center_dim: center_space(r).dim(),
        simple,
        caveats,
    })
}
