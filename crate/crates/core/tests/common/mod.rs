//! Shared fixtures and independent oracles. The oracles only read structure
//! constants and do their own arithmetic mod p, so they share no code path
//! with the library's decision procedures.
#![allow(dead_code)]

use gradedalg::algebra::GradedAlgebra;
use gradedalg::analysis::{centralizer_space, identity_component, wedderburn_decompose};
use gradedalg::cohomology::{h2_group, Cocycle, ExponentCocycle};
use gradedalg::constructors::{direct_sum, elementary_grading, model_algebra, scramble, twisted_group_algebra};
use gradedalg::field::linalg::{Matrix, Subspace, Vector};
use gradedalg::group::all_subgroups;
use gradedalg::{Field, FieldElement, FiniteGroup, Subgroup};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub struct Entry {
    pub name: String,
    pub alg: GradedAlgebra,
}

fn entry(name: &str, alg: GradedAlgebra) -> Entry {
    Entry { name: name.to_string(), alg }
}

pub fn group(name: &str) -> FiniteGroup {
    FiniteGroup::named(name).unwrap()
}

pub fn field(p: u64) -> Field {
    Field::prime(p).unwrap()
}

pub fn fe(f: &Field, v: &[i64]) -> Vector {
    v.iter().map(|&x| f.from_int(x)).collect()
}

pub fn group_algebra(f: &Field, g: &FiniteGroup) -> GradedAlgebra {
    twisted_group_algebra(&Cocycle::trivial(f, g))
}

/// `r_a r_b = (-1)^{a_1 b_2} r_{a+b}` on `Z_2 × Z_2`.
pub fn anticommuting_k4(f: &Field) -> GradedAlgebra {
    let k4 = group("K4");
    let rows: Vec<Vec<u64>> = (0..4).map(|x| (0..4).map(|y| (x % 2) * (y / 2)).collect()).collect();
    let exps = ExponentCocycle::new(&k4, 2, &rows).unwrap();
    twisted_group_algebra(&Cocycle::from_exponents(f, &k4, &exps).unwrap())
}

/// `r_g^2 = 2` over GF(5): the field with 25 elements, graded by `Z_2`.
pub fn gf25_like() -> GradedAlgebra {
    let f = field(5);
    let rows = vec![fe(&f, &[1, 1]), fe(&f, &[1, 2])];
    twisted_group_algebra(&Cocycle::check(&f, &group("Z2"), &rows).unwrap())
}

pub fn trivially_graded(f: &Field, degrees: usize, structure: &[(usize, usize, usize, i64)], unit: Option<&[i64]>) -> GradedAlgebra {
    let s: Vec<(usize, usize, usize, FieldElement)> = structure.iter().map(|&(i, j, k, c)| (i, j, k, f.from_int(c))).collect();
    GradedAlgebra::new(f, &group("Z1"), vec![0; degrees], &s, unit.map(|u| fe(f, u))).unwrap()
}

pub fn matrices(f: &Field, g: &FiniteGroup, tuple: &[usize]) -> GradedAlgebra {
    elementary_grading(f, g, tuple).unwrap()
}

pub fn model(p: u64, g: &str, tuple: &[usize], h: &[usize], class: usize) -> GradedAlgebra {
    let f = field(p);
    let g = group(g);
    let h = Subgroup::from_members(&g, h).unwrap();
    let hg = h.as_group(&g);
    let m = gcd(h.order() as u64, p - 1);
    let classes = h2_group(&hg, m).unwrap().all_classes();
    let sigma = Cocycle::from_exponents(&f, &hg, &classes[class]).unwrap();
    model_algebra(&f, &g, tuple, &h, &sigma).unwrap()
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Unital and non-unital algebras of dimension at most 16, graded simple and
/// not, split and not.
pub fn corpus() -> Vec<Entry> {
    let f5 = field(5);
    let f7 = field(7);
    let f11 = field(11);
    let z1 = group("Z1");
    let z2 = group("Z2");
    let s3 = group("S3");
    let one = matrices(&f5, &z1, &[0]);
    let m2_trivial = matrices(&f7, &z1, &[0, 0]);
    let mut out = vec![
        entry("F[Z2] over GF(5)", group_algebra(&f5, &z2)),
        entry("M2 graded by (e,g) over GF(5)", matrices(&f5, &z2, &[0, 1])),
        entry("anticommuting F[K4] over GF(5)", anticommuting_k4(&f5)),
        entry("F[K4] over GF(5)", group_algebra(&f5, &group("K4"))),
        entry("F+F trivially graded over GF(5)", direct_sum(&one, &one).unwrap()),
        entry("GF(25) graded by Z2", gf25_like()),
        entry("F[Z3] over GF(7)", group_algebra(&f7, &group("Z3"))),
        entry("M3 graded by (0,1,1) over GF(11)", matrices(&f11, &group("Z3"), &[0, 1, 1])),
        entry("M3 graded by (0,0,1) over GF(11)", matrices(&f11, &group("Z3"), &[0, 0, 1])),
        entry("M2(F[Z2]) over GF(11)", model(11, "Z2", &[0, 0], &[0, 1], 0)),
        entry("F[S3] over GF(7)", group_algebra(&f7, &s3)),
        entry("M2 graded by (e,(12)) over S3", matrices(&f5, &s3, &[0, 1])),
        entry("M2(F[Z2]) over S3, tuple (0,2)", model(13, "S3", &[0, 2], &[0, 1], 0)),
        entry("M2(F[Z2]) over Z4, tuple (0,1)", model(11, "Z4", &[0, 1], &[0, 2], 0)),
        entry("F[Z3] inside Z6 over GF(7)", model(7, "Z6", &[0], &[0, 2, 4], 0)),
        entry("M2 graded by (0,3) over Z6", model(7, "Z6", &[0, 3], &[0], 0)),
        entry("F[Q8] over GF(11)", group_algebra(&f11, &group("Q8"))),
        entry("anticommuting K4 model over GF(13)", model(13, "K4", &[0], &[0, 1, 2, 3], 1)),
        entry("F[Z2]+F[Z2] over GF(5)", direct_sum(&group_algebra(&f5, &z2), &group_algebra(&f5, &z2)).unwrap()),
        entry("M2+F trivially graded over GF(7)", direct_sum(&m2_trivial, &matrices(&f7, &z1, &[0])).unwrap()),
        entry(
            "upper triangular 2x2 over GF(5)",
            // e11, e12, e22
            trivially_graded(&f5, 3, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 2, 1, 1), (2, 2, 2, 1)], Some(&[1, 0, 1])),
        ),
        entry("F[Z2] with grading forgotten over GF(5)", group_algebra(&f5, &z2).forget_grading()),
    ];
    let scrambled: Vec<Entry> = [1usize, 2, 9, 12, 13, 17]
        .iter()
        .map(|&i| {
            let (alg, _) = scramble(&out[i].alg, 11 + i as u64).unwrap();
            Entry { name: format!("{}, scrambled", out[i].name), alg }
        })
        .collect();
    out.extend(scrambled);
    out.extend(nonunital());
    out
}

/// Algebras without a unit.
pub fn nonunital() -> Vec<Entry> {
    let f5 = field(5);
    vec![
        entry("one-dimensional zero product", GradedAlgebra::new(&f5, &group("Z2"), vec![0], &[], None).unwrap()),
        entry("two-dimensional zero product", GradedAlgebra::new(&f5, &group("Z2"), vec![0, 1], &[], None).unwrap()),
        // b0 is a left identity only
        entry("left identity with a radical", trivially_graded(&f5, 2, &[(0, 0, 0, 1), (0, 1, 1, 1)], None)),
        // F ⊕ N with N² = 0
        entry("field plus a null line", trivially_graded(&f5, 2, &[(0, 0, 0, 1)], None)),
    ]
}

/// Arithmetic mod a prime on raw integer coordinates.
#[derive(Clone)]
pub struct Echelon {
    p: u64,
    rows: Vec<(usize, Vec<u64>)>,
}

impl Echelon {
    pub fn new(p: u64) -> Echelon {
        Echelon { p, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn inv(&self, a: u64) -> u64 {
        let (mut r, mut base, mut e) = (1u64, a % self.p, self.p - 2);
        while e > 0 {
            if e & 1 == 1 {
                r = r * base % self.p;
            }
            base = base * base % self.p;
            e >>= 1;
        }
        r
    }

    pub fn reduce(&self, v: &[u64]) -> Vec<u64> {
        let p = self.p;
        let mut v = v.to_vec();
        for (piv, row) in &self.rows {
            let c = v[*piv];
            if c != 0 {
                for (x, &y) in v.iter_mut().zip(row) {
                    *x = (*x + (p - c) * y) % p;
                }
            }
        }
        v
    }

    /// Rows whose pivot lies at or after `start`, with the first `start`
    /// coordinates dropped.
    pub fn tail_rows(&self, start: usize) -> Vec<Vec<u64>> {
        self.rows.iter().filter(|(piv, _)| *piv >= start).map(|(_, row)| row[start..].to_vec()).collect()
    }

    /// Adds `v` to the span; true when the dimension grew.
    pub fn insert(&mut self, v: &[u64]) -> bool {
        let mut v = self.reduce(v);
        let Some(piv) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let s = self.inv(v[piv]);
        v.iter_mut().for_each(|x| *x = *x * s % self.p);
        let p = self.p;
        for (_, row) in self.rows.iter_mut() {
            let c = row[piv];
            if c != 0 {
                for (x, &y) in row.iter_mut().zip(&v) {
                    *x = (*x + (p - c) * y) % p;
                }
            }
        }
        self.rows.push((piv, v));
        true
    }
}

/// Structure constants as plain integers.
pub struct Table {
    pub p: u64,
    pub n: usize,
    pub degrees: Vec<usize>,
    products: Vec<Vec<(usize, u64)>>,
}

impl Table {
    /// Only prime fields, where element indices are the residues.
    pub fn of(r: &GradedAlgebra) -> Table {
        assert_eq!(r.field().k(), 1);
        let n = r.dim();
        let mut products = vec![Vec::new(); n * n];
        for (i, j, k, c) in r.structure() {
            products[i * n + j].push((k, c.index()));
        }
        Table { p: r.field().p(), n, degrees: r.degrees().to_vec(), products }
    }

    pub fn mul(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        let mut out = vec![0; self.n];
        for (i, &a) in x.iter().enumerate().filter(|(_, a)| **a != 0) {
            for (j, &b) in y.iter().enumerate().filter(|(_, b)| **b != 0) {
                for &(k, c) in &self.products[i * self.n + j] {
                    out[k] = (out[k] + a * b % self.p * c) % self.p;
                }
            }
        }
        out
    }

    pub fn is_null(&self) -> bool {
        self.products.iter().all(Vec::is_empty)
    }

    fn basis(&self, i: usize) -> Vec<u64> {
        let mut v = vec![0; self.n];
        v[i] = 1;
        v
    }

    /// Coefficient vectors, over the basis elements `comp`, of a basis of
    /// the central elements they span.
    pub fn central_in(&self, comp: &[usize]) -> Vec<Vec<u64>> {
        let p = self.p;
        // row i is ([b_i, b_0], ..., [b_i, b_{n-1}] | e_i); the kernel shows up
        // as the rows whose commutator part reduces to zero
        let width = self.n * self.n;
        let mut span = Echelon::new(p);
        for (i, &b) in comp.iter().enumerate() {
            let x = self.basis(b);
            let mut row = Vec::with_capacity(width + comp.len());
            for j in 0..self.n {
                let y = self.basis(j);
                let (xy, yx) = (self.mul(&x, &y), self.mul(&y, &x));
                row.extend(xy.iter().zip(&yx).map(|(a, b)| (a + p - b) % p));
            }
            row.extend((0..comp.len()).map(|k| u64::from(k == i)));
            span.insert(&row);
        }
        span.tail_rows(width)
    }

    /// Dimension of the two-sided ideal generated by `x`.
    pub fn ideal_dim(&self, x: &[u64]) -> usize {
        let mut span = Echelon::new(self.p);
        let mut queue = vec![x.to_vec()];
        while let Some(v) = queue.pop() {
            if !span.insert(&v) {
                continue;
            }
            for i in 0..self.n {
                let b = self.basis(i);
                queue.push(self.mul(&b, &v));
                queue.push(self.mul(&v, &b));
            }
        }
        span.dim()
    }
}

/// Graded simplicity by ideal closure: `R² ≠ 0` and every tested nonzero
/// homogeneous element generates `R`. Components with at most 400 lines are
/// enumerated exhaustively; larger ones get their basis plus 50 random
/// elements.
pub fn oracle_graded_simple(r: &GradedAlgebra, seed: u64) -> bool {
    let t = Table::of(r);
    if t.n == 0 || t.is_null() {
        return false;
    }
    let p = t.p;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for g in r.support() {
        let comp: Vec<usize> = (0..t.n).filter(|&i| t.degrees[i] == g).collect();
        let d = comp.len() as u32;
        let mut candidates: Vec<Vec<u64>> = Vec::new();
        if p.checked_pow(d).is_some_and(|q| (q - 1) / (p - 1) <= 400) {
            // projective points: first nonzero coordinate is 1
            for code in 0..p.pow(d) {
                let coeffs: Vec<u64> = (0..d).map(|i| code / p.pow(i) % p).collect();
                if coeffs.iter().find(|&&c| c != 0) == Some(&1) {
                    candidates.push(coeffs);
                }
            }
        } else {
            candidates.extend((0..d as usize).map(|i| (0..d as usize).map(|j| u64::from(i == j)).collect()));
            for _ in 0..50 {
                candidates.push((0..d).map(|_| rng.gen_range(0..p)).collect());
            }
            // random elements rarely see a proper ideal cut out by the centre;
            // for central c with coordinates (a_j) in a split centre, either c
            // or c(c - a_1) is a nonzero zero divisor unless c is scalar
            for c in t.central_in(&comp) {
                let mut x = vec![0; t.n];
                for (&i, &a) in comp.iter().zip(&c) {
                    x[i] = a;
                }
                let sq = t.mul(&x, &x);
                for lambda in 1..p {
                    candidates.push(comp.iter().map(|&i| (sq[i] + (p - lambda) * x[i]) % p).collect());
                }
                candidates.push(c);
            }
        }
        for c in candidates.iter().filter(|c| c.iter().any(|&x| x != 0)) {
            let mut x = vec![0; t.n];
            for (&i, &a) in comp.iter().zip(c) {
                x[i] = a;
            }
            if t.ideal_dim(&x) != t.n {
                return false;
            }
        }
    }
    true
}

/// Every normalized exponent 2-cocycle of `g` with values in `Z/m`, as a
/// row-major table. Small cases enumerate all normalized tables; cyclic
/// groups enumerate the row of a generator, which determines the rest.
pub fn all_cocycles(g: &FiniteGroup, m: u64) -> Vec<Vec<u64>> {
    let n = g.order();
    let e = g.identity();
    let satisfies = |t: &[u64]| {
        (0..n).all(|x| {
            (0..n).all(|y| {
                (0..n).all(|z| {
                    (t[x * n + y] + t[g.mul(x, y) * n + z]) % m == (t[y * n + z] + t[x * n + g.mul(y, z)]) % m
                })
            })
        })
    };
    let free: Vec<(usize, usize)> = (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).filter(|&(x, y)| x != e && y != e).collect();
    let mut out = Vec::new();
    if (m as f64).powi(free.len() as i32) <= (1u64 << 20) as f64 {
        let total = m.pow(free.len() as u32);
        for code in 0..total {
            let mut t = vec![0; n * n];
            for (i, &(x, y)) in free.iter().enumerate() {
                t[x * n + y] = code / m.pow(i as u32) % m;
            }
            if satisfies(&t) {
                out.push(t);
            }
        }
        return out;
    }
    let gen = (0..n).find(|&x| g.element_order(x) == n).expect("brute force needs a small or cyclic group");
    let others: Vec<usize> = (0..n).filter(|&y| y != e).collect();
    for code in 0..m.pow(others.len() as u32) {
        let mut t = vec![0; n * n];
        for (i, &y) in others.iter().enumerate() {
            t[gen * n + y] = code / m.pow(i as u32) % m;
        }
        // c(gy, z) = c(y, z) + c(g, yz) - c(g, y), walking y = g^i
        let mut y = gen;
        for _ in 1..n - 1 {
            let gy = g.mul(gen, y);
            for z in 0..n {
                t[gy * n + z] = (t[y * n + z] + t[gen * n + g.mul(y, z)] + m - t[gen * n + y]) % m;
            }
            y = gy;
        }
        if satisfies(&t) {
            out.push(t);
        }
    }
    out
}

pub fn is_symmetric(g: &FiniteGroup, t: &[u64]) -> bool {
    let n = g.order();
    (0..n).all(|x| (0..n).all(|y| t[x * n + y] == t[y * n + x]))
}

pub fn rows(t: &[u64], n: usize) -> Vec<Vec<u64>> {
    t.chunks(n).map(<[u64]>::to_vec).collect()
}

/// Split semisimple instance: `B = ⊕ M_{n_j}(F)` with a scrambled basis and two
/// orthogonal idempotents of prescribed block ranks.
pub struct SplitInstance {
    pub alg: GradedAlgebra,
    pub z1: Vector,
    pub z2: Vector,
    /// `Σ_j rank(z1_j) rank(z2_j)` from the construction.
    pub expected: usize,
}

fn random_invertible(f: &Field, n: usize, rng: &mut ChaCha8Rng) -> Matrix {
    loop {
        let rows: Vec<Vector> = (0..n).map(|_| (0..n).map(|_| f.element(rng.gen_range(0..f.q())).unwrap()).collect()).collect();
        let m = Matrix::from_rows(&rows);
        if m.rank(f) == n {
            return m;
        }
    }
}

pub fn split_instance(p: u64, sizes: &[usize], seed: u64) -> SplitInstance {
    let f = field(p);
    let z1g = group("Z1");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let blocks: Vec<GradedAlgebra> = sizes.iter().map(|&n| matrices(&f, &z1g, &vec![0; n])).collect();
    let b = blocks[1..].iter().fold(blocks[0].clone(), |acc, x| direct_sum(&acc, x).unwrap());
    let dim = b.dim();
    let mut z1 = vec![f.zero(); dim];
    let mut z2 = vec![f.zero(); dim];
    let mut expected = 0;
    let mut offset = 0;
    for &n in sizes {
        let q = random_invertible(&f, n, &mut rng);
        let qi = q.inverse(&f).unwrap();
        // each diagonal slot goes to z1, z2 or neither
        let slots: Vec<u8> = (0..n).map(|_| rng.gen_range(0..3)).collect();
        let r1 = slots.iter().filter(|&&s| s == 1).count();
        let r2 = slots.iter().filter(|&&s| s == 2).count();
        expected += r1 * r2;
        for (which, target) in [(1u8, &mut z1), (2u8, &mut z2)] {
            let mut d = Matrix::zeros(n, n);
            for (i, &s) in slots.iter().enumerate() {
                if s == which {
                    d[(i, i)] = f.one();
                }
            }
            let conj = q.mul(&f, &d).mul(&f, &qi);
            for a in 0..n {
                for c in 0..n {
                    target[offset + a * n + c] = conj[(a, c)];
                }
            }
        }
        offset += n * n;
    }
    let (alg, change) = scramble(&b, seed).unwrap();
    SplitInstance { z1: change.mul_vec(&f, &z1), z2: change.mul_vec(&f, &z2), alg, expected }
}

pub fn span_of(r: &GradedAlgebra, vs: impl IntoIterator<Item = Vector>) -> Subspace {
    Subspace::span(r.field(), r.dim(), vs)
}

/// `dim x R y`.
pub fn sandwich(r: &GradedAlgebra, x: &[FieldElement], y: &[FieldElement]) -> Subspace {
    span_of(r, (0..r.dim()).map(|i| r.multiply(&r.multiply(x, &r.basis_vector(i)), y)))
}

/// Ranks of the components of `z` in each simple block, read off the
/// matrix units: `rank z_j = dim z B E^j_11`.
pub fn block_ranks(r: &GradedAlgebra, z: &[FieldElement], seed: u64) -> Vec<usize> {
    let blocks = wedderburn_decompose(r, seed).unwrap();
    blocks.iter().map(|b| sandwich(r, z, &b.units[0][0]).dim()).collect()
}

/// Two-summand instance: a scrambled model whose identity component has two
/// simple summands.
pub struct TwoSummandInstance {
    pub alg: GradedAlgebra,
    pub description: String,
}

pub const MODEL_GROUPS: [&str; 6] = ["Z2", "Z3", "Z4", "K4", "Z6", "S3"];
pub const MODEL_PRIMES: [u64; 12] = [11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53];

/// Picks a proper subgroup, a second right coset, multiplicities and a
/// prime from the raw choices; `None` when no admissible prime exists.
pub fn two_summand_instance(choice: [usize; 6], seed: u64) -> Option<TwoSummandInstance> {
    let name = MODEL_GROUPS[choice[0] % MODEL_GROUPS.len()];
    let g = group(name);
    let proper: Vec<Subgroup> = all_subgroups(&g).into_iter().filter(|h| h.order() < g.order()).collect();
    let h = proper[choice[1] % proper.len()].clone();
    let outside: Vec<usize> = g.elements().filter(|&x| !h.contains(x)).collect();
    let a2 = outside[choice[2] % outside.len()];
    let (n1, n2) = (1 + choice[3] % 2, 1 + choice[4] % 2);
    let dim = (n1 + n2).pow(2) * h.order();
    let p = *MODEL_PRIMES.iter().find(|&&p| p as usize > dim && h.order() as u64 % p != 0)?;
    let f = field(p);
    let hg = h.as_group(&g);
    let classes = h2_group(&hg, gcd(h.order() as u64, p - 1)).unwrap().all_classes();
    let class = choice[5] % classes.len();
    let sigma = Cocycle::from_exponents(&f, &hg, &classes[class]).unwrap();
    let mut tuple = vec![g.identity(); n1];
    tuple.extend(std::iter::repeat(a2).take(n2));
    let m = model_algebra(&f, &g, &tuple, &h, &sigma).unwrap();
    let (alg, _) = scramble(&m, seed).unwrap();
    let description = format!("{name} H={:?} tuple={tuple:?} class={class} p={p} seed={seed}", h.members());
    Some(TwoSummandInstance { alg, description })
}

/// Checks both dimension identities; `Err` names the failing one.
pub fn check_two_summands(r: &GradedAlgebra, seed: u64) -> Result<(), String> {
    let f = r.field();
    let (re, emb) = identity_component(r).map_err(|e| e.to_string())?;
    let blocks = wedderburn_decompose(&re, seed).map_err(|e| e.to_string())?;
    if blocks.len() != 2 {
        return Err(format!("identity component has {} summands", blocks.len()));
    }
    let lift = |v: &Vector| emb.to_parent(f, v);
    let mut cs = Vec::new();
    let mut ds = Vec::new();
    for b in &blocks {
        let unit = lift(&b.idempotent);
        let a_basis: Vec<Vector> = b.units.iter().flatten().map(lift).collect();
        let corner = sandwich(r, &unit, &unit);
        cs.push(corner.intersect(f, &centralizer_space(r, &a_basis)));
        ds.push(lift(&b.units[0][0]));
    }
    let m = sandwich(r, &ds[0], &ds[1]);
    if m.is_zero() {
        return Err("d1 R d2 vanishes".into());
    }
    if cs[0].dim() != m.dim() || cs[1].dim() != m.dim() {
        return Err(format!("dim C1 = {}, dim C2 = {}, dim M = {}", cs[0].dim(), cs[1].dim(), m.dim()));
    }
    for i in 0..r.dim() {
        let x = r.multiply(&r.multiply(&ds[0], &r.basis_vector(i)), &ds[1]);
        if x.iter().all(|c| c.is_zero()) {
            continue;
        }
        let left = span_of(r, cs[0].basis().iter().map(|c| r.multiply(c, &x)));
        let right = span_of(r, cs[1].basis().iter().map(|c| r.multiply(&x, c)));
        if left != m || right != m {
            return Err(format!("C1 x or x C2 is not M for x = d1 b_{i} d2"));
        }
    }
    Ok(())
}

/// The sandwich dimension against both the construction and
/// the block ranks read from a Wedderburn decomposition.
pub fn check_split(inst: &SplitInstance, seed: u64) -> Result<(), String> {
    let direct = sandwich(&inst.alg, &inst.z1, &inst.z2).dim();
    let r1 = block_ranks(&inst.alg, &inst.z1, seed);
    let r2 = block_ranks(&inst.alg, &inst.z2, seed);
    let from_ranks: usize = r1.iter().zip(&r2).map(|(a, b)| a * b).sum();
    if direct == from_ranks && direct == inst.expected {
        Ok(())
    } else {
        Err(format!("dim z1 B z2 = {direct}, rank sum = {from_ranks}, constructed = {}", inst.expected))
    }
}

/// A scrambled model together with the data it was built from.
pub struct RandomModel {
    pub alg: GradedAlgebra,
    pub group: FiniteGroup,
    pub tuple: Vec<usize>,
    pub subgroup: Subgroup,
    pub sigma: Cocycle,
    pub description: String,
}

/// Any subgroup (the whole group included), `k ≤ 3`, and the smallest
/// admissible prime from [`MODEL_PRIMES`].
pub fn random_model(choice: [usize; 6], seed: u64) -> Option<RandomModel> {
    let name = MODEL_GROUPS[choice[0] % MODEL_GROUPS.len()];
    let g = group(name);
    let subgroups = all_subgroups(&g);
    let h = subgroups[choice[1] % subgroups.len()].clone();
    let k = 1 + choice[2] % 3;
    let mut code = choice[3];
    let tuple: Vec<usize> = (0..k)
        .map(|i| {
            if i == 0 {
                return g.identity();
            }
            let x = code % g.order();
            code /= g.order();
            x
        })
        .collect();
    let dim = k * k * h.order();
    let p = *MODEL_PRIMES.iter().find(|&&p| p as usize > dim && h.order() as u64 % p != 0)?;
    let f = field(p);
    let hg = h.as_group(&g);
    let classes = h2_group(&hg, gcd(h.order() as u64, p - 1)).unwrap().all_classes();
    let class = choice[4] % classes.len();
    let sigma = Cocycle::from_exponents(&f, &hg, &classes[class]).unwrap();
    let m = model_algebra(&f, &g, &tuple, &h, &sigma).unwrap();
    let (alg, _) = scramble(&m, seed).unwrap();
    let description = format!("{name} H={:?} tuple={tuple:?} class={class} p={p} seed={seed}", h.members());
    Some(RandomModel { alg, group: g, tuple, subgroup: h, sigma, description })
}

impl std::fmt::Debug for RandomModel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.description)
    }
}
