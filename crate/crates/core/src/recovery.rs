//! Recovery of `(k, tuple, H, σ)` and an explicit graded isomorphism
//! `R ≅ M_k(F^σ[H])` from an arbitrary graded simple algebra, plus
//! verification and comparison of such decompositions.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{GradedAlgebra, GradedSubspace};
use crate::analysis::{
    centralizer_space, check_matrix_units, find_unit, identity_component, is_graded_simple, jacobson_radical,
    wedderburn_decompose,
};
use crate::cohomology::{coboundary_equivalent, Cocycle};
use crate::constructors::model_algebra;
use crate::error::{Error, Result};
use crate::field::linalg::{axpy, is_zero_vec, vec_add, vec_scale, zero_vec, Matrix, Subspace, Vector};
use crate::field::{Field, FieldElement};
use crate::group::{subgroup_closure, FiniteGroup, Subgroup};

const MAX_CONNECTOR_ATTEMPTS: usize = 1000;

/// A certificate `R ≅ M_k(F^σ[H])` with `deg(E_ij ⊗ x_h) = a_i^{-1} h a_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedDecomposition {
    pub k: usize,
    /// `(a_1, …, a_k)` with `a_1 = e`.
    pub tuple: Vec<usize>,
    pub subgroup: Subgroup,
    /// Cocycle on `subgroup.as_group(G)`.
    pub sigma: Cocycle,
    /// Takes coordinates in `R` to coordinates in the model basis.
    pub iso: Matrix,
}

impl GradedDecomposition {
    pub fn model(&self, field: &Field, group: &FiniteGroup) -> Result<GradedAlgebra> {
        model_algebra(field, group, &self.tuple, &self.subgroup, &self.sigma)
    }
}

fn internal(msg: &str) -> Error {
    Error::Internal(msg.to_string())
}

/// Simple block of the identity component, lifted into `R`.
struct Block {
    unit: Vector,
    size: usize,
    units: Vec<Vec<Vector>>,
}

/// Runs the constructive proof of the structure theorem on `r`.
pub fn decompose(r: &GradedAlgebra, seed: u64) -> Result<GradedDecomposition> {
    let f = r.field();
    let g = r.group();
    let n = r.dim();
    let e = g.identity();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x6465_636f);

    let rad = jacobson_radical(r)?;
    if !is_graded_simple(r, seed)?.simple {
        return Err(Error::NotGradedSimple);
    }
    if !rad.is_zero() {
        return Err(internal("graded simple algebra has a nonzero radical"));
    }
    let unit = find_unit(r, seed)?;

    // 1. the identity component splits into matrix blocks
    let (re, emb) = identity_component(r)?;
    let summands = wedderburn_decompose(&re, seed).map_err(|err| match err {
        Error::NotSemisimple(_) => internal("identity component of a graded simple algebra is not semisimple"),
        other => other,
    })?;
    let blocks: Vec<Block> = summands
        .iter()
        .map(|s| Block {
            unit: emb.to_parent(f, &s.idempotent),
            size: s.size,
            units: s.units.iter().map(|row| row.iter().map(|u| emb.to_parent(f, u)).collect()).collect(),
        })
        .collect();
    let m = blocks.len();
    let total = blocks.iter().fold(zero_vec(n), |acc, b| vec_add(f, &acc, &b.unit));
    if total != unit {
        return Err(internal("block units do not sum to the unit"));
    }

    // 2. corners and centralizers
    let centralizers: Vec<Subspace> = blocks.iter().map(|b| block_centralizer(r, b)).collect::<Result<_>>()?;

    // 3-4. connectors between consecutive minimal idempotents, then the star
    // y_1i, y_i1 they generate
    let d: Vec<&Vector> = blocks.iter().map(|b| &b.units[0][0]).collect();
    let mut y_first = vec![d[0].clone()];
    let mut y_back = vec![d[0].clone()];
    for i in 0..m.saturating_sub(1) {
        let (x, x_back) = connect(r, d[i], d[i + 1], &mut rng)?;
        y_first.push(r.multiply(&y_first[i], &x));
        y_back.push(r.multiply(&x_back, &y_back[i]));
    }
    let mut degs = Vec::with_capacity(m);
    for i in 0..m {
        if r.multiply(&y_first[i], &y_back[i]) != *d[0] || r.multiply(&y_back[i], &y_first[i]) != *d[i] {
            return Err(internal("connector products are not the minimal idempotents"));
        }
        degs.push(r.homogeneous_degree(&y_first[i]).ok_or_else(|| internal("connector is not homogeneous"))?);
    }

    // homogeneous basis x_h of C^(1), with x_e the block unit
    let c1 = &centralizers[0];
    let mut support: Vec<usize> = c1.basis().iter().map(|v| r.homogeneous_degree(v).expect("graded")).collect();
    support.sort_unstable();
    let subgroup = Subgroup::from_members(g, &support).map_err(|_| internal("support of the first centralizer is not a subgroup"))?;
    let xs: Vec<Vector> = subgroup
        .members()
        .iter()
        .map(|&h| {
            if h == e {
                blocks[0].unit.clone()
            } else {
                c1.basis().iter().find(|v| r.homogeneous_degree(v) == Some(h)).expect("support").clone()
            }
        })
        .collect();
    let x_of = |h: usize| &xs[subgroup.position(h).expect("member")];
    let inverse_in_c1 = |h: usize| -> Result<Vector> {
        let back = x_of(g.inv(h));
        let p = r.multiply(x_of(h), back);
        let lambda = scalar_multiple(f, &p, &blocks[0].unit).ok_or_else(|| internal("first centralizer is not a graded division algebra"))?;
        Ok(vec_scale(f, back, f.inv(lambda)?))
    };

    // move each g_i to the smallest element of its coset H g_i
    for i in 1..m {
        let h = subgroup.members().iter().copied().min_by_key(|&h| g.mul(h, degs[i])).expect("nonempty");
        if h != e {
            y_first[i] = r.multiply(x_of(h), &y_first[i]);
            y_back[i] = r.multiply(&y_back[i], &inverse_in_c1(h)?);
            degs[i] = g.mul(h, degs[i]);
        }
    }
    let mut order: Vec<usize> = (1..m).collect();
    order.sort_by_key(|&i| degs[i]);
    order.insert(0, 0);

    let y = |i: usize, j: usize| -> Vector {
        if i == 0 {
            y_first[j].clone()
        } else {
            r.multiply(&y_back[i], &y_first[j])
        }
    };
    let web: Vec<Vec<Vector>> = (0..m).map(|i| (0..m).map(|j| y(i, j)).collect()).collect();
    check_matrix_units_sparse(r, &web)?;

    // 5. φ_i(x) = Σ_α E^i_α1 y_i1 x y_1i E^i_1α
    let phi = |i: usize, x: &[FieldElement]| -> Vector {
        let core = r.multiply(&r.multiply(&web[i][0], x), &web[0][i]);
        let b = &blocks[i];
        (0..b.size).fold(zero_vec(n), |acc, a| {
            vec_add(f, &acc, &r.multiply(&r.multiply(&b.units[a][0], &core), &b.units[0][a]))
        })
    };
    let images: Vec<Vec<Vector>> = (0..m).map(|i| xs.iter().map(|x| phi(i, x)).collect()).collect();
    for i in 0..m {
        for (t, &h) in subgroup.members().iter().enumerate() {
            let img = &images[i][t];
            if !centralizers[i].contains(f, img) {
                return Err(internal("transported centralizer map leaves the centralizer"));
            }
            if r.multiply(&xs[t], &web[0][i]) != r.multiply(&web[0][i], img) {
                return Err(internal("transported centralizer map does not intertwine with its connector"));
            }
            if r.homogeneous_degree(img) != Some(g.mul(g.inv(degs[i]), g.mul(h, degs[i]))) {
                return Err(internal("transported centralizer map shifts degrees by the wrong conjugation"));
            }
            for j in 0..m {
                if r.multiply(img, &web[i][j]) != r.multiply(&web[i][j], &images[j][t]) {
                    return Err(internal("transported centralizer maps disagree across a connector"));
                }
            }
        }
    }

    // 6. σ from C^(1), the tuple, and the basis of the model inside R
    let hg = subgroup.as_group(g);
    let hn = subgroup.order();
    let mut rows = vec![vec![f.one(); hn]; hn];
    for a in 0..hn {
        for b in 0..hn {
            let p = r.multiply(&xs[a], &xs[b]);
            rows[a][b] = scalar_multiple(f, &p, &xs[hg.mul(a, b)]).ok_or_else(|| internal("product of homogeneous centralizer basis elements is not a multiple of a basis element"))?;
        }
    }
    let sigma = Cocycle::check(f, &hg, &rows)?;

    let mut tuple = Vec::new();
    let mut offsets = Vec::new();
    for &i in &order {
        offsets.push(tuple.len());
        tuple.extend(std::iter::repeat_n(degs[i], blocks[i].size));
    }
    let k = tuple.len();
    if k * k * hn != n {
        return Err(internal("dimension law k^2 |H| = dim R fails"));
    }
    let mut cols = vec![Vec::new(); n];
    for (pi, &i) in order.iter().enumerate() {
        for (pj, &j) in order.iter().enumerate() {
            for a in 0..blocks[i].size {
                for b in 0..blocks[j].size {
                    let mu = offsets[pi] + a;
                    let nu = offsets[pj] + b;
                    for t in 0..hn {
                        let left = r.multiply(&blocks[i].units[a][0], &images[i][t]);
                        let w = r.multiply(&r.multiply(&left, &web[i][j]), &blocks[j].units[0][b]);
                        cols[(mu * k + nu) * hn + t] = w;
                    }
                }
            }
        }
    }
    let iso = Matrix::from_columns(n, &cols)
        .inverse(f)
        .ok_or_else(|| internal("model basis images are linearly dependent"))?;
    let dec = GradedDecomposition { k, tuple, subgroup, sigma, iso };
    match decomposition_verify(r, &dec) {
        Ok(()) => Ok(dec),
        Err(failure) => Err(Error::Internal(format!("decomposition fails verification: {failure}"))),
    }
}

/// `C^(i)`: elements of `e_i R e_i` commuting with the block's matrix units.
/// Checked to be a graded division algebra with one-dimensional components.
fn block_centralizer(r: &GradedAlgebra, b: &Block) -> Result<Subspace> {
    let f = r.field();
    let n = r.dim();
    let g = r.group();
    let corner = Subspace::span(f, n, (0..n).map(|i| r.multiply(&r.multiply(&b.unit, &r.basis_vector(i)), &b.unit)));
    let units: Vec<Vector> = b.units.iter().flatten().cloned().collect();
    let c = corner.intersect(f, &centralizer_space(r, &units));
    if c.dim() * b.size * b.size != corner.dim() {
        return Err(internal("corner is not the tensor product of its matrix block and centralizer"));
    }
    GradedSubspace::new(r, c.clone()).map_err(|_| internal("centralizer is not graded"))?;
    let degrees: Vec<usize> = c.basis().iter().map(|v| r.homogeneous_degree(v).expect("graded")).collect();
    let mut sorted = degrees.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != degrees.len() || !sorted.contains(&g.identity()) {
        return Err(internal("centralizer components are not one-dimensional"));
    }
    if subgroup_closure(g, &sorted).members() != sorted.as_slice() {
        return Err(internal("centralizer support is not a subgroup"));
    }
    for v in c.basis() {
        let h = r.homogeneous_degree(v).expect("graded");
        let w = c.basis().iter().find(|w| r.homogeneous_degree(w) == Some(g.inv(h))).expect("closed");
        if scalar_multiple(f, &r.multiply(v, w), &b.unit).is_none_or(|s| s.is_zero()) {
            return Err(internal("centralizer has a non-invertible homogeneous element"));
        }
    }
    Ok(c)
}

/// `λ` with `v = λ w`, for nonzero `w`.
fn scalar_multiple(f: &Field, v: &[FieldElement], w: &[FieldElement]) -> Option<FieldElement> {
    let p = w.iter().position(|c| !c.is_zero())?;
    let lambda = f.div(v[p], w[p]).ok()?;
    (vec_scale(f, w, lambda) == v).then_some(lambda)
}

/// Homogeneous `x ∈ d_a R d_b`, `x' ∈ d_b R d_a` with `x x' = d_a` and
/// `x' x = d_b`.
fn connect(r: &GradedAlgebra, da: &[FieldElement], db: &[FieldElement], rng: &mut ChaCha8Rng) -> Result<(Vector, Vector)> {
    let f = r.field();
    let g = r.group();
    let n = r.dim();
    let sandwich = |x: &[FieldElement], z: &[FieldElement]| {
        Subspace::span(f, n, (0..n).map(|i| r.multiply(&r.multiply(x, &r.basis_vector(i)), z)))
    };
    let there = sandwich(da, db);
    let back = sandwich(db, da);
    if there.is_zero() || back.is_zero() {
        return Err(internal("d_i R d_j vanishes for a pair of minimal idempotents"));
    }
    let degree_of = |v: &Vector| r.homogeneous_degree(v).expect("graded");
    let try_pair = |x: &Vector, xb: &Vector| -> Option<(Vector, Vector)> {
        let lambda = scalar_multiple(f, &r.multiply(x, xb), da).filter(|l| !l.is_zero())?;
        let xb = vec_scale(f, xb, f.inv(lambda).ok()?);
        (r.multiply(&xb, x) == db).then(|| (x.clone(), xb))
    };
    for x in there.basis() {
        let want = g.inv(degree_of(x));
        for xb in back.basis().iter().filter(|v| degree_of(v) == want) {
            if let Some(pair) = try_pair(x, xb) {
                return Ok(pair);
            }
        }
    }
    let random_in = |s: &Subspace, deg: usize, rng: &mut ChaCha8Rng| {
        let mut v = zero_vec(n);
        for b in s.basis().iter().filter(|b| degree_of(b) == deg) {
            let c = f.element(rng.gen_range(0..f.q())).expect("index below q");
            axpy(f, &mut v, c, b);
        }
        v
    };
    for _ in 0..MAX_CONNECTOR_ATTEMPTS {
        let pick = &there.basis()[rng.gen_range(0..there.dim())];
        let deg = degree_of(pick);
        let x = random_in(&there, deg, rng);
        let xb = random_in(&back, g.inv(deg), rng);
        if is_zero_vec(&x) || is_zero_vec(&xb) {
            continue;
        }
        if let Some(pair) = try_pair(&x, &xb) {
            return Ok(pair);
        }
    }
    Err(internal("no connector pair found"))
}

fn check_matrix_units_sparse(r: &GradedAlgebra, web: &[Vec<Vector>]) -> Result<()> {
    let f = r.field();
    let diag = (0..web.len()).fold(zero_vec(r.dim()), |acc, i| vec_add(f, &acc, &web[i][i]));
    check_matrix_units(r, web, &diag)
}

/// Why a decomposition was rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VerifyFailure {
    Shape(String),
    Model(Error),
    SingularIso,
    /// The image of this basis vector is not homogeneous of the same degree.
    Degree(usize),
    /// Products of these basis vectors are not preserved.
    Product(usize, usize),
}

impl fmt::Display for VerifyFailure {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyFailure::Shape(s) => write!(out, "shape mismatch: {s}"),
            VerifyFailure::Model(e) => write!(out, "model cannot be built: {e}"),
            VerifyFailure::SingularIso => write!(out, "iso is not invertible"),
            VerifyFailure::Degree(i) => write!(out, "degree is not preserved on basis vector {i}"),
            VerifyFailure::Product(i, j) => write!(out, "product of basis vectors ({i}, {j}) is not preserved"),
        }
    }
}

/// Rebuilds the model and checks that `iso` is an invertible, degree
/// preserving algebra homomorphism from `r` onto it.
pub fn decomposition_verify(r: &GradedAlgebra, d: &GradedDecomposition) -> std::result::Result<(), VerifyFailure> {
    let f = r.field();
    let n = r.dim();
    let hn = d.subgroup.order();
    if d.tuple.len() != d.k || d.k * d.k * hn != n {
        return Err(VerifyFailure::Shape(format!("k = {}, |H| = {}, dim R = {}", d.k, hn, n)));
    }
    if d.iso.rows() != n || d.iso.cols() != n {
        return Err(VerifyFailure::Shape("iso is not dim R square".into()));
    }
    let model = d.model(f, r.group()).map_err(VerifyFailure::Model)?;
    if d.iso.rank(f) != n {
        return Err(VerifyFailure::SingularIso);
    }
    let images: Vec<Vector> = (0..n).map(|i| d.iso.column(i)).collect();
    for (i, img) in images.iter().enumerate() {
        if model.homogeneous_degree(img) != Some(r.degree(i)) {
            return Err(VerifyFailure::Degree(i));
        }
    }
    for i in 0..n {
        for j in 0..n {
            let mut lhs = zero_vec(n);
            for &(k, c) in r.basis_product(i, j) {
                axpy(f, &mut lhs, c, &images[k]);
            }
            if model.multiply(&images[i], &images[j]) != lhs {
                return Err(VerifyFailure::Product(i, j));
            }
        }
    }
    Ok(())
}

/// Whether two decompositions over the same `G` describe isomorphic graded
/// algebras: equal `k`, a `c ∈ G` with `H_2 = c H_1 c^{-1}` carrying the
/// multiset of cosets `H_1 a_μ` onto `H_2 a'_μ` after left translation by
/// `c`, and cocycles cohomologous within `μ_m` after transport.
pub fn decomposition_equivalent(
    d1: &GradedDecomposition,
    d2: &GradedDecomposition,
    group: &FiniteGroup,
    m: u64,
) -> Result<bool> {
    if d1.k != d2.k || d1.subgroup.order() != d2.subgroup.order() {
        return Ok(false);
    }
    let h2 = &d2.subgroup;
    let h2g = h2.as_group(group);
    let coset = |a: usize| -> Vec<usize> {
        let mut c: Vec<usize> = h2.members().iter().map(|&h| group.mul(h, a)).collect();
        c.sort_unstable();
        c
    };
    let mut target: Vec<Vec<usize>> = d2.tuple.iter().map(|&a| coset(a)).collect();
    target.sort();
    for c in group.elements() {
        let ci = group.inv(c);
        // H_2 = c H_1 c^{-1}, i.e. H_1 = c^{-1} H_2 c
        let pre: Vec<Option<usize>> =
            h2.members().iter().map(|&h| d1.subgroup.position(group.mul(ci, group.mul(h, c)))).collect();
        if pre.iter().any(Option::is_none) {
            continue;
        }
        let mut moved: Vec<Vec<usize>> = d1.tuple.iter().map(|&a| coset(group.mul(c, a))).collect();
        moved.sort();
        if moved != target {
            continue;
        }
        let map: Vec<usize> = pre.into_iter().map(Option::unwrap).collect();
        let transported = d1.sigma.pullback(&h2g, &map)?;
        if coboundary_equivalent(&transported, &d2.sigma, m)?.is_some() {
            return Ok(true);
        }
    }
    Ok(false)
}
