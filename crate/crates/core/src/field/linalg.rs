//! Dense exact linear algebra over a finite field.
//!
//! Row reduction picks the lowest-index nonzero row as pivot, so every result
//! (echelon forms, kernel bases, particular solutions) is deterministic.

use std::ops::{Index, IndexMut};

use super::poly::{self, Poly};
use super::{Field, FieldElement};
use crate::error::{Error, Result};

pub type Vector = Vec<FieldElement>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl Index<(usize, usize)> for Matrix {
    type Output = FieldElement;
    fn index(&self, (r, c): (usize, usize)) -> &FieldElement {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut FieldElement {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, data: vec![FieldElement::ZERO; rows * cols] }
    }

    pub fn identity(f: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = f.one();
        }
        m
    }

    pub fn from_rows(rows: &[Vector]) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |v| v.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend_from_slice(row);
        }
        Matrix { rows: r, cols: c, data }
    }

    /// Matrix whose columns are the given vectors, all of length `len`.
    pub fn from_columns(len: usize, cols: &[Vector]) -> Matrix {
        let mut m = Matrix::zeros(len, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), len, "column length mismatch");
            for (i, &v) in col.iter().enumerate() {
                m[(i, j)] = v;
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[FieldElement] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self[(r, c)]).collect()
    }

    pub fn to_rows(&self) -> Vec<Vector> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)];
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn mul(&self, f: &Field, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for t in 0..self.cols {
                let a = self[(i, t)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other[(t, j)];
                    if !b.is_zero() {
                        out[(i, j)] = f.add(out[(i, j)], f.mul(a, b));
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, f: &Field, v: &[FieldElement]) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(f.zero(), |acc, (&a, &b)| if a.is_zero() || b.is_zero() { acc } else { f.add(acc, f.mul(a, b)) })
            })
            .collect()
    }

    pub fn add(&self, f: &Field, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, f: &Field, c: FieldElement) -> Matrix {
        let data = self.data.iter().map(|&a| f.mul(a, c)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self, f: &Field) -> Vec<usize> {
        self.rref_limited(f, self.cols)
    }

    /// RREF where pivots are only sought among the first `limit` columns.
    fn rref_limited(&mut self, f: &Field, limit: usize) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..limit {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(pr, r);
            let inv = f.inv(self[(r, c)]).expect("pivot is nonzero");
            for j in c..self.cols {
                self[(r, j)] = f.mul(self[(r, j)], inv);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self[(i, c)];
                if factor.is_zero() {
                    continue;
                }
                for j in c..self.cols {
                    let v = self[(r, j)];
                    if !v.is_zero() {
                        self[(i, j)] = f.sub(self[(i, j)], f.mul(factor, v));
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self, f: &Field) -> usize {
        self.clone().rref(f).len()
    }

    pub fn inverse(&self, f: &Field) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)];
            }
            aug[(i, n + i)] = f.one();
        }
        let pivots = aug.rref_limited(f, n);
        if pivots.len() < n {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = aug[(i, n + j)];
            }
        }
        Some(inv)
    }

    /// Kernel basis: one vector per free column, with a 1 in that column and
    /// zeros in the other free columns.
    pub fn nullspace(&self, f: &Field) -> Vec<Vector> {
        let mut m = self.clone();
        let pivots = m.rref(f);
        kernel_from_rref(f, &m, &pivots, self.cols)
    }

    /// Characteristic polynomial `det(xI - A)` via Hessenberg reduction.
    pub fn charpoly(&self, f: &Field) -> Poly {
        assert_eq!(self.rows, self.cols, "charpoly of a non-square matrix");
        let n = self.rows;
        let mut h = self.clone();
        for j in 0..n.saturating_sub(2) {
            let Some(i) = (j + 1..n).find(|&i| !h[(i, j)].is_zero()) else {
                continue;
            };
            if i != j + 1 {
                h.swap_rows(i, j + 1);
                for r in 0..n {
                    h.data.swap(r * n + i, r * n + j + 1);
                }
            }
            let inv = f.inv(h[(j + 1, j)]).expect("nonzero pivot");
            for i in j + 2..n {
                let u = f.mul(h[(i, j)], inv);
                if u.is_zero() {
                    continue;
                }
                // row_i -= u row_{j+1}; col_{j+1} += u col_i
                for c in 0..n {
                    let v = h[(j + 1, c)];
                    h[(i, c)] = f.sub(h[(i, c)], f.mul(u, v));
                }
                for r in 0..n {
                    let v = h[(r, i)];
                    h[(r, j + 1)] = f.add(h[(r, j + 1)], f.mul(u, v));
                }
            }
        }
        let mut polys: Vec<Poly> = vec![vec![f.one()]];
        for m in 1..=n {
            let lin = vec![f.neg(h[(m - 1, m - 1)]), f.one()];
            let mut pm = poly::mul(f, &lin, &polys[m - 1]);
            let mut t = f.one();
            for i in 1..m {
                t = f.mul(t, h[(m - i, m - i - 1)]);
                let c = f.mul(t, h[(m - i - 1, m - 1)]);
                if !c.is_zero() {
                    pm = poly::sub(f, &pm, &poly::scale(f, &polys[m - i - 1], c));
                }
            }
            polys.push(pm);
        }
        polys.pop().expect("n + 1 polynomials")
    }

    /// Evaluates a polynomial at this square matrix.
    pub fn eval_poly(&self, f: &Field, p: &[FieldElement]) -> Matrix {
        let n = self.rows;
        let mut acc = Matrix::zeros(n, n);
        for &c in p.iter().rev() {
            acc = acc.mul(f, self);
            for i in 0..n {
                acc[(i, i)] = f.add(acc[(i, i)], c);
            }
        }
        acc
    }
}

fn kernel_from_rref(f: &Field, m: &Matrix, pivots: &[usize], ncols: usize) -> Vec<Vector> {
    let mut is_pivot = vec![None; ncols];
    for (r, &c) in pivots.iter().enumerate() {
        is_pivot[c] = Some(r);
    }
    (0..ncols)
        .filter(|&c| is_pivot[c].is_none())
        .map(|free| {
            let mut v = vec![f.zero(); ncols];
            v[free] = f.one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(m[(r, free)]);
            }
            v
        })
        .collect()
}

/// Result of [`linear_solve`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    /// One particular solution per right-hand-side column (free variables set
    /// to zero), or `None` when the system is inconsistent.
    pub particular: Option<Matrix>,
    pub kernel: Vec<Vector>,
}

/// Solves `matrix * X = rhs` exactly.
pub fn linear_solve(f: &Field, matrix: &Matrix, rhs: &Matrix) -> Result<Solution> {
    if matrix.rows != rhs.rows {
        return Err(Error::Dimension(format!(
            "matrix has {} rows but right-hand side has {}",
            matrix.rows, rhs.rows
        )));
    }
    let n = matrix.cols;
    let k = rhs.cols;
    let mut aug = Matrix::zeros(matrix.rows, n + k);
    for i in 0..matrix.rows {
        for j in 0..n {
            aug[(i, j)] = matrix[(i, j)];
        }
        for j in 0..k {
            aug[(i, n + j)] = rhs[(i, j)];
        }
    }
    let pivots = aug.rref_limited(f, n);
    let rank = pivots.len();
    let consistent = (rank..aug.rows).all(|r| (n..n + k).all(|j| aug[(r, j)].is_zero()));
    let particular = consistent.then(|| {
        let mut x = Matrix::zeros(n, k);
        for (r, &c) in pivots.iter().enumerate() {
            for j in 0..k {
                x[(c, j)] = aug[(r, n + j)];
            }
        }
        x
    });
    let kernel = kernel_from_rref(f, &aug, &pivots, n);
    Ok(Solution { particular, kernel })
}

/// Solves `matrix * x = b` for a single vector, returning some solution.
pub fn solve_vec(f: &Field, matrix: &Matrix, b: &[FieldElement]) -> Option<Vector> {
    let rhs = Matrix::from_columns(b.len(), &[b.to_vec()]);
    linear_solve(f, matrix, &rhs).ok()?.particular.map(|x| x.column(0))
}

// ---------------------------------------------------------------------------
// vector helpers

pub fn zero_vec(n: usize) -> Vector {
    vec![FieldElement::ZERO; n]
}

pub fn unit_vec(f: &Field, n: usize, i: usize) -> Vector {
    let mut v = zero_vec(n);
    v[i] = f.one();
    v
}

pub fn is_zero_vec(v: &[FieldElement]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn vec_add(f: &Field, a: &[FieldElement], b: &[FieldElement]) -> Vector {
    a.iter().zip(b).map(|(&x, &y)| f.add(x, y)).collect()
}

pub fn vec_sub(f: &Field, a: &[FieldElement], b: &[FieldElement]) -> Vector {
    a.iter().zip(b).map(|(&x, &y)| f.sub(x, y)).collect()
}

pub fn vec_scale(f: &Field, a: &[FieldElement], c: FieldElement) -> Vector {
    a.iter().map(|&x| f.mul(x, c)).collect()
}

/// `acc += c * v`.
pub fn axpy(f: &Field, acc: &mut [FieldElement], c: FieldElement, v: &[FieldElement]) {
    if c.is_zero() {
        return;
    }
    for (a, &x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a = f.add(*a, f.mul(c, x));
        }
    }
}

pub fn dot(f: &Field, a: &[FieldElement], b: &[FieldElement]) -> FieldElement {
    a.iter().zip(b).fold(f.zero(), |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
}

// ---------------------------------------------------------------------------
// subspaces

/// A subspace of `F^n` kept in reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Subspace {
        Subspace { ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(f: &Field, ambient: usize) -> Subspace {
        Subspace {
            ambient,
            rows: (0..ambient).map(|i| unit_vec(f, ambient, i)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span<I, V>(f: &Field, ambient: usize, vectors: I) -> Subspace
    where
        I: IntoIterator<Item = V>,
        V: AsRef<[FieldElement]>,
    {
        let mut s = Subspace::zero(ambient);
        for v in vectors {
            s.insert(f, v.as_ref());
        }
        s
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    /// Echelon basis, sorted by pivot column.
    pub fn basis(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residual of `v` after eliminating against the basis.
    pub fn reduce(&self, f: &Field, v: &[FieldElement]) -> Vector {
        let mut w = v.to_vec();
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = w[pc];
            if !c.is_zero() {
                axpy(f, &mut w, f.neg(c), row);
            }
        }
        w
    }

    pub fn contains(&self, f: &Field, v: &[FieldElement]) -> bool {
        is_zero_vec(&self.reduce(f, v))
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coords(&self, f: &Field, v: &[FieldElement]) -> Option<Vector> {
        let c: Vector = self.pivots.iter().map(|&p| v[p]).collect();
        let mut recon = zero_vec(self.ambient);
        for (row, &ci) in self.rows.iter().zip(&c) {
            axpy(f, &mut recon, ci, row);
        }
        (recon == v).then_some(c)
    }

    /// Inserts `v`; returns whether the dimension grew.
    pub fn insert(&mut self, f: &Field, v: &[FieldElement]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length does not match ambient space");
        let mut w = self.reduce(f, v);
        let Some(pc) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = f.inv(w[pc]).expect("nonzero");
        w = vec_scale(f, &w, inv);
        for row in self.rows.iter_mut() {
            let c = row[pc];
            if !c.is_zero() {
                axpy(f, row, f.neg(c), &w);
            }
        }
        let pos = self.pivots.partition_point(|&p| p < pc);
        self.pivots.insert(pos, pc);
        self.rows.insert(pos, w);
        true
    }

    pub fn sum(&self, f: &Field, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for v in &other.rows {
            s.insert(f, v);
        }
        s
    }

    pub fn contains_subspace(&self, f: &Field, other: &Subspace) -> bool {
        other.rows.iter().all(|v| self.contains(f, v))
    }

    pub fn intersect(&self, f: &Field, other: &Subspace) -> Subspace {
        // solve sum a_i u_i = sum b_j w_j
        let n = self.ambient;
        let mut cols = self.rows.clone();
        cols.extend(other.rows.iter().map(|w| vec_scale(f, w, f.neg(f.one()))));
        if cols.is_empty() {
            return Subspace::zero(n);
        }
        let m = Matrix::from_columns(n, &cols);
        let ker = m.nullspace(f);
        Subspace::span(
            f,
            n,
            ker.iter().map(|k| {
                let mut v = zero_vec(n);
                for (i, row) in self.rows.iter().enumerate() {
                    axpy(f, &mut v, k[i], row);
                }
                v
            }),
        )
    }

    /// Orthogonal complement with respect to the standard bilinear form.
    pub fn annihilator(&self, f: &Field) -> Subspace {
        if self.rows.is_empty() {
            return Subspace::full(f, self.ambient);
        }
        let m = Matrix::from_rows(&self.rows);
        Subspace::span(f, self.ambient, m.nullspace(f))
    }
}

/// Smallest subspace containing `seeds` and stable under every matrix in
/// `ops`.
pub fn spin(f: &Field, ops: &[Matrix], seeds: &[Vector], ambient: usize) -> Subspace {
    let mut s = Subspace::zero(ambient);
    let mut queue: Vec<Vector> = Vec::new();
    for v in seeds {
        if s.insert(f, v) {
            queue.push(v.clone());
        }
    }
    while let Some(v) = queue.pop() {
        if s.is_full() {
            break;
        }
        for op in ops {
            let w = op.mul_vec(f, &v);
            if s.insert(f, &w) {
                queue.push(w);
            }
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn fe(f: &Field, v: &[i64]) -> Vector {
        v.iter().map(|&x| f.from_int(x)).collect()
    }

    #[test]
    fn solve_examples() {
        let f = Field::prime(5).unwrap();
        let a = Matrix::from_rows(&[fe(&f, &[1, 2]), fe(&f, &[2, 4])]);
        let b = Matrix::from_columns(2, &[fe(&f, &[1, 2])]);
        let s = linear_solve(&f, &a, &b).unwrap();
        assert_eq!(s.particular.unwrap().column(0), fe(&f, &[1, 0]));
        assert_eq!(s.kernel, vec![fe(&f, &[3, 1])]);

        let id = Matrix::identity(&f, 3);
        let rhs = Matrix::from_columns(3, &[fe(&f, &[4, 0, 2])]);
        let s = linear_solve(&f, &id, &rhs).unwrap();
        assert_eq!(s.particular.unwrap().column(0), fe(&f, &[4, 0, 2]));
        assert!(s.kernel.is_empty());

        let z = Matrix::zeros(2, 3);
        let s = linear_solve(&f, &z, &Matrix::zeros(2, 1)).unwrap();
        assert_eq!(s.particular.unwrap().column(0), fe(&f, &[0, 0, 0]));
        assert_eq!(s.kernel.len(), 3);

        let s = linear_solve(&f, &a, &Matrix::from_columns(2, &[fe(&f, &[1, 0])])).unwrap();
        assert!(s.particular.is_none());
    }

    #[test]
    fn random_solutions_verify() {
        let f = Field::prime(7).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let r = rng.gen_range(1..6);
            let c = rng.gen_range(1..6);
            let rows: Vec<Vector> =
                (0..r).map(|_| (0..c).map(|_| f.from_int(rng.gen_range(0..3))).collect()).collect();
            let a = Matrix::from_rows(&rows);
            let x: Vector = (0..c).map(|_| f.from_int(rng.gen_range(0..7))).collect();
            let b = a.mul_vec(&f, &x);
            let s = linear_solve(&f, &a, &Matrix::from_columns(r, &[b.clone()])).unwrap();
            let p = s.particular.expect("consistent by construction").column(0);
            assert_eq!(a.mul_vec(&f, &p), b);
            for k in &s.kernel {
                assert!(is_zero_vec(&a.mul_vec(&f, k)));
            }
            assert_eq!(s.kernel.len() + a.rank(&f), c);
        }
    }

    #[test]
    fn charpoly_matches_cayley_hamilton() {
        let f = Field::prime(11).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for n in 1..7 {
            let rows: Vec<Vector> =
                (0..n).map(|_| (0..n).map(|_| f.from_int(rng.gen_range(0..11))).collect()).collect();
            let a = Matrix::from_rows(&rows);
            let cp = a.charpoly(&f);
            assert_eq!(cp.len(), n + 1);
            assert!(a.eval_poly(&f, &cp).is_zero());
        }
    }

    #[test]
    fn subspace_ops() {
        let f = Field::prime(5).unwrap();
        let a = Subspace::span(&f, 3, [fe(&f, &[1, 1, 0]), fe(&f, &[0, 1, 1])]);
        let b = Subspace::span(&f, 3, [fe(&f, &[1, 0, 0]), fe(&f, &[0, 0, 1])]);
        let i = a.intersect(&f, &b);
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&f, &fe(&f, &[1, 0, 4])));
        assert_eq!(a.sum(&f, &b).dim(), 3);
        let c = a.coords(&f, &fe(&f, &[2, 3, 1])).unwrap();
        assert_eq!(c.len(), 2);
        assert!(a.coords(&f, &fe(&f, &[1, 0, 0])).is_none());
        assert_eq!(a.annihilator(&f).dim(), 1);
    }

    #[test]
    fn inverse_roundtrip() {
        let f = Field::new(3, 2, None).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            let rows: Vec<Vector> =
                (0..4).map(|_| (0..4).map(|_| FieldElement(rng.gen_range(0..9))).collect()).collect();
            let a = Matrix::from_rows(&rows);
            if let Some(inv) = a.inverse(&f) {
                assert_eq!(a.mul(&f, &inv), Matrix::identity(&f, 4));
            } else {
                assert!(a.rank(&f) < 4);
            }
        }
    }
}
