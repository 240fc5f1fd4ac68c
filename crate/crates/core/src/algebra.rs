//! Graded algebras given by a homogeneous basis and sparse structure constants.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::linalg::{self, axpy, is_zero_vec, zero_vec, Matrix, Subspace, Vector};
use crate::field::{Field, FieldElement};
use crate::group::FiniteGroup;

/// `b_i · b_j = Σ c · b_k`, one entry per nonzero coefficient.
pub type StructureConstant = (usize, usize, usize, FieldElement);

/// A finite-dimensional associative algebra with a homogeneous basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedAlgebra {
    field: Field,
    group: FiniteGroup,
    degrees: Vec<usize>,
    /// `products[i * dim + j]` holds the sparse expansion of `b_i b_j`.
    products: Vec<Vec<(usize, FieldElement)>>,
    unit: Option<Vector>,
    components: Vec<Vec<usize>>,
}

impl GradedAlgebra {
    /// Validates raw data. Repeated `(i, j, k)` entries are summed.
    pub fn new(
        field: &Field,
        group: &FiniteGroup,
        degrees: Vec<usize>,
        structure: &[StructureConstant],
        unit: Option<Vector>,
    ) -> Result<GradedAlgebra> {
        let n = degrees.len();
        if let Some(&d) = degrees.iter().find(|&&d| d >= group.order()) {
            return Err(Error::Dimension(format!("degree {d} is not an element of the group")));
        }
        let mut table: BTreeMap<(usize, usize, usize), FieldElement> = BTreeMap::new();
        for &(i, j, k, c) in structure {
            if i >= n || j >= n || k >= n {
                return Err(Error::Dimension(format!("structure constant ({i}, {j}, {k}) exceeds dimension {n}")));
            }
            if !field.contains(c) {
                return Err(Error::FieldMismatch);
            }
            let e = table.entry((i, j, k)).or_insert(field.zero());
            *e = field.add(*e, c);
        }
        let mut products = vec![Vec::new(); n * n];
        for (&(i, j, k), &c) in &table {
            if c.is_zero() {
                continue;
            }
            if degrees[k] != group.mul(degrees[i], degrees[j]) {
                return Err(Error::GradingViolation(i, j, k));
            }
            products[i * n + j].push((k, c));
        }
        if let Some(u) = &unit {
            if u.len() != n || u.iter().any(|&x| !field.contains(x)) {
                return Err(Error::BadUnit);
            }
        }
        let alg = GradedAlgebra::assemble(field, group, degrees, products, None);
        alg.check_associative()?;
        match unit {
            Some(u) if alg.is_unit(&u) => Ok(GradedAlgebra { unit: Some(u), ..alg }),
            Some(_) => Err(Error::BadUnit),
            None => Ok(alg),
        }
    }

    /// Builds an algebra from a product table known to be graded and
    /// associative (images of valid algebras, constructions with proofs).
    pub(crate) fn assemble(
        field: &Field,
        group: &FiniteGroup,
        degrees: Vec<usize>,
        products: Vec<Vec<(usize, FieldElement)>>,
        unit: Option<Vector>,
    ) -> GradedAlgebra {
        let mut components = vec![Vec::new(); group.order()];
        for (i, &d) in degrees.iter().enumerate() {
            components[d].push(i);
        }
        GradedAlgebra { field: field.clone(), group: group.clone(), degrees, products, unit, components }
    }

    /// Same constructor as [`GradedAlgebra::assemble`] but from dense product
    /// vectors `b_i b_j`, indexed `i * dim + j`.
    pub(crate) fn from_dense_products(
        field: &Field,
        group: &FiniteGroup,
        degrees: Vec<usize>,
        dense: &[Vector],
        unit: Option<Vector>,
    ) -> GradedAlgebra {
        let products = dense
            .iter()
            .map(|v| v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, &c)| (k, c)).collect())
            .collect();
        GradedAlgebra::assemble(field, group, degrees, products, unit)
    }

    fn check_associative(&self) -> Result<()> {
        let n = self.dim();
        let f = &self.field;
        let mut lhs = zero_vec(n);
        let mut rhs = zero_vec(n);
        for i in 0..n {
            for j in 0..n {
                let ij = self.basis_product(i, j);
                for k in 0..n {
                    lhs.iter_mut().for_each(|x| *x = FieldElement::ZERO);
                    rhs.iter_mut().for_each(|x| *x = FieldElement::ZERO);
                    for &(t, c) in ij {
                        for &(s, d) in self.basis_product(t, k) {
                            lhs[s] = f.add(lhs[s], f.mul(c, d));
                        }
                    }
                    for &(t, c) in self.basis_product(j, k) {
                        for &(s, d) in self.basis_product(i, t) {
                            rhs[s] = f.add(rhs[s], f.mul(c, d));
                        }
                    }
                    if lhs != rhs {
                        return Err(Error::AlgebraNotAssociative(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn degree(&self, i: usize) -> usize {
        self.degrees[i]
    }

    pub fn unit(&self) -> Option<&Vector> {
        self.unit.as_ref()
    }

    pub fn with_unit(mut self, unit: Option<Vector>) -> Result<GradedAlgebra> {
        if let Some(u) = &unit {
            if !self.is_unit(u) {
                return Err(Error::BadUnit);
            }
        }
        self.unit = unit;
        Ok(self)
    }

    /// Sparse expansion of `b_i b_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, FieldElement)] {
        &self.products[i * self.dim() + j]
    }

    /// All structure constants, sorted by `(i, j, k)`.
    pub fn structure(&self) -> Vec<StructureConstant> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let mut entries: Vec<(usize, FieldElement)> = self.basis_product(i, j).to_vec();
                entries.sort_by_key(|e| e.0);
                out.extend(entries.into_iter().map(|(k, c)| (i, j, k, c)));
            }
        }
        out
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        linalg::unit_vec(&self.field, self.dim(), i)
    }

    pub fn multiply(&self, x: &[FieldElement], y: &[FieldElement]) -> Vector {
        let n = self.dim();
        let f = &self.field;
        let mut out = zero_vec(n);
        for (i, &xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = f.mul(xi, yj);
                for &(k, s) in self.basis_product(i, j) {
                    out[k] = f.add(out[k], f.mul(c, s));
                }
            }
        }
        out
    }

    /// Basis indices of the component of degree `g`.
    pub fn component(&self, g: usize) -> &[usize] {
        &self.components[g]
    }

    /// Degrees with a nonzero component, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.group.order()).filter(|&g| !self.components[g].is_empty()).collect()
    }

    pub fn component_dim(&self, g: usize) -> usize {
        self.components[g].len()
    }

    /// The degree of a nonzero homogeneous vector; `None` for zero or mixed
    /// vectors.
    pub fn homogeneous_degree(&self, x: &[FieldElement]) -> Option<usize> {
        let mut deg = None;
        for (i, v) in x.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            match deg {
                None => deg = Some(self.degrees[i]),
                Some(d) if d != self.degrees[i] => return None,
                _ => {}
            }
        }
        deg
    }

    /// Splits `x` into its nonzero homogeneous components, by ascending degree.
    pub fn homogeneous_components(&self, x: &[FieldElement]) -> Vec<HomogeneousVector> {
        self.support()
            .into_iter()
            .filter_map(|g| {
                let mut coords = zero_vec(self.dim());
                for &i in self.component(g) {
                    coords[i] = x[i];
                }
                (!is_zero_vec(&coords)).then_some(HomogeneousVector { degree: g, coords })
            })
            .collect()
    }

    /// Whether `u` is a two-sided identity of degree `e`.
    pub fn is_unit(&self, u: &[FieldElement]) -> bool {
        if u.len() != self.dim() {
            return false;
        }
        if self.dim() == 0 {
            return true;
        }
        if self.homogeneous_degree(u) != Some(self.group.identity()) {
            return false;
        }
        (0..self.dim()).all(|i| {
            let b = self.basis_vector(i);
            self.multiply(u, &b) == b && self.multiply(&b, u) == b
        })
    }

    /// Matrix of `x ↦ a x` (columns are images of basis vectors).
    pub fn left_mul_matrix(&self, a: &[FieldElement]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.multiply(a, &self.basis_vector(j))).collect();
        Matrix::from_columns(n, &cols)
    }

    /// Matrix of `x ↦ x a`.
    pub fn right_mul_matrix(&self, a: &[FieldElement]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.multiply(&self.basis_vector(j), a)).collect();
        Matrix::from_columns(n, &cols)
    }

    /// Projection onto the degree-`g` component.
    pub fn projection(&self, g: usize) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for &i in self.component(g) {
            m[(i, i)] = self.field.one();
        }
        m
    }

    /// Smallest two-sided ideal containing the given homogeneous vectors.
    pub fn graded_ideal_generated(&self, gens: &[HomogeneousVector]) -> Result<GradedSubspace> {
        for g in gens {
            g.check(self)?;
        }
        let n = self.dim();
        let f = &self.field;
        let mut space = Subspace::zero(n);
        let mut queue: Vec<Vector> = Vec::new();
        for g in gens {
            if space.insert(f, &g.coords) {
                queue.push(g.coords.clone());
            }
        }
        while let Some(v) = queue.pop() {
            if space.is_full() {
                break;
            }
            for i in 0..n {
                let b = self.basis_vector(i);
                for w in [self.multiply(&b, &v), self.multiply(&v, &b)] {
                    if space.insert(f, &w) {
                        queue.push(w);
                    }
                }
            }
        }
        Ok(GradedSubspace { space })
    }

    /// Applies a degree-preserving change of basis. `blocks[g]` lists the new
    /// degree-`g` basis vectors as columns in old coordinates. Returns the new
    /// algebra and the matrix taking old coordinates to new ones.
    pub fn homogeneous_change_of_basis(&self, blocks: &BTreeMap<usize, Matrix>) -> Result<(GradedAlgebra, Matrix)> {
        let n = self.dim();
        let f = &self.field;
        let mut t = Matrix::zeros(n, n);
        for g in self.support() {
            let idx = self.component(g);
            let b = blocks.get(&g).ok_or(Error::SingularBlock(g))?;
            if b.rows() != idx.len() || b.cols() != idx.len() {
                return Err(Error::Dimension(format!("block for degree {g} must be {0}×{0}", idx.len())));
            }
            for (r, &ir) in idx.iter().enumerate() {
                for (c, &ic) in idx.iter().enumerate() {
                    t[(ir, ic)] = b[(r, c)];
                }
            }
        }
        for &g in blocks.keys() {
            if g >= self.group.order() || self.component(g).is_empty() {
                return Err(Error::Dimension(format!("no component of degree {g} to transform")));
            }
        }
        let t_inv = match t.inverse(f) {
            Some(inv) => inv,
            None => {
                let g = self
                    .support()
                    .into_iter()
                    .find(|g| blocks[g].inverse(f).is_none())
                    .expect("a singular block exists");
                return Err(Error::SingularBlock(g));
            }
        };
        let cols: Vec<Vector> = (0..n).map(|j| t.column(j)).collect();
        let mut dense = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                dense.push(t_inv.mul_vec(f, &self.multiply(&cols[i], &cols[j])));
            }
        }
        let unit = self.unit.as_ref().map(|u| t_inv.mul_vec(f, u));
        let alg = GradedAlgebra::from_dense_products(f, &self.group, self.degrees.clone(), &dense, unit);
        Ok((alg, t_inv))
    }

    /// The same algebra with the trivial grading by the trivial group.
    pub fn forget_grading(&self) -> GradedAlgebra {
        let trivial = FiniteGroup::cyclic(1);
        GradedAlgebra::assemble(&self.field, &trivial, vec![0; self.dim()], self.products.clone(), self.unit.clone())
    }

    /// The same structure constants regraded by `degrees` over `group`
    /// (validated).
    pub fn regrade(&self, group: &FiniteGroup, degrees: Vec<usize>) -> Result<GradedAlgebra> {
        if degrees.len() != self.dim() {
            return Err(Error::Dimension("degree list has the wrong length".into()));
        }
        GradedAlgebra::new(&self.field, group, degrees, &self.structure(), self.unit.clone())
    }

    /// The subalgebra spanned by `basis` (linearly independent, closed under
    /// multiplication), rewritten on that basis. Every basis vector must be
    /// homogeneous; its degree is kept.
    pub fn subalgebra(&self, basis: &[Vector]) -> Result<(GradedAlgebra, Embedding)> {
        let f = &self.field;
        let n = self.dim();
        let mut degrees = Vec::with_capacity(basis.len());
        for v in basis {
            let d = self.homogeneous_degree(v).ok_or(Error::NotHomogeneous)?;
            degrees.push(d);
        }
        let emb = Embedding::new(f, n, basis.to_vec())?;
        let mut dense = Vec::with_capacity(basis.len() * basis.len());
        for a in basis {
            for b in basis {
                let p = self.multiply(a, b);
                let c = emb
                    .from_parent(f, &p)
                    .ok_or_else(|| Error::Internal("subspace is not closed under multiplication".into()))?;
                dense.push(c);
            }
        }
        let sub = GradedAlgebra::from_dense_products(f, &self.group, degrees, &dense, None);
        Ok((sub, emb))
    }

    /// Ungraded subalgebra on an arbitrary basis (trivial grading).
    pub fn ungraded_subalgebra(&self, basis: &[Vector]) -> Result<(GradedAlgebra, Embedding)> {
        let f = &self.field;
        let n = self.dim();
        let emb = Embedding::new(f, n, basis.to_vec())?;
        let mut dense = Vec::with_capacity(basis.len() * basis.len());
        for a in basis {
            for b in basis {
                let p = self.multiply(a, b);
                dense.push(
                    emb.from_parent(f, &p)
                        .ok_or_else(|| Error::Internal("subspace is not closed under multiplication".into()))?,
                );
            }
        }
        let trivial = FiniteGroup::cyclic(1);
        let sub = GradedAlgebra::from_dense_products(f, &trivial, vec![0; basis.len()], &dense, None);
        Ok((sub, emb))
    }
}

/// Inclusion of a subspace given by a basis, with coordinate recovery.
#[derive(Clone, Debug)]
pub struct Embedding {
    basis: Vec<Vector>,
    // solve against an echelon copy: coords in echelon basis, then convert
    echelon: Subspace,
    to_basis: Matrix,
}

impl Embedding {
    pub fn new(f: &Field, ambient: usize, basis: Vec<Vector>) -> Result<Embedding> {
        let echelon = Subspace::span(f, ambient, &basis);
        if echelon.dim() != basis.len() {
            return Err(Error::Internal("embedding basis is linearly dependent".into()));
        }
        // columns: echelon coordinates of each basis vector
        let k = basis.len();
        let cols: Vec<Vector> = basis.iter().map(|v| echelon.coords(f, v).expect("in span")).collect();
        let m = Matrix::from_columns(k, &cols);
        let to_basis = m.inverse(f).expect("independent vectors");
        Ok(Embedding { basis, echelon, to_basis })
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn to_parent(&self, f: &Field, x: &[FieldElement]) -> Vector {
        let mut out = zero_vec(self.echelon.ambient());
        for (c, b) in x.iter().zip(&self.basis) {
            axpy(f, &mut out, *c, b);
        }
        out
    }

    pub fn from_parent(&self, f: &Field, v: &[FieldElement]) -> Option<Vector> {
        let c = self.echelon.coords(f, v)?;
        Some(self.to_basis.mul_vec(f, &c))
    }

    pub fn subspace(&self) -> &Subspace {
        &self.echelon
    }
}

/// A vector lying in a single homogeneous component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneousVector {
    pub degree: usize,
    pub coords: Vector,
}

impl HomogeneousVector {
    pub fn new(alg: &GradedAlgebra, degree: usize, coords: Vector) -> Result<HomogeneousVector> {
        let h = HomogeneousVector { degree, coords };
        h.check(alg)?;
        Ok(h)
    }

    /// Infers the degree; fails for zero or mixed vectors.
    pub fn from_coords(alg: &GradedAlgebra, coords: Vector) -> Result<HomogeneousVector> {
        let degree = alg.homogeneous_degree(&coords).ok_or(Error::NotHomogeneous)?;
        Ok(HomogeneousVector { degree, coords })
    }

    fn check(&self, alg: &GradedAlgebra) -> Result<()> {
        if self.coords.len() != alg.dim() {
            return Err(Error::Dimension("vector length does not match the algebra".into()));
        }
        if self.coords.iter().enumerate().any(|(i, c)| !c.is_zero() && alg.degree(i) != self.degree) {
            return Err(Error::NotHomogeneous);
        }
        Ok(())
    }
}

/// A graded subspace, kept as an echelon basis of homogeneous vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSubspace {
    space: Subspace,
}

impl GradedSubspace {
    /// Checks that the echelon basis of `space` is homogeneous.
    pub fn new(alg: &GradedAlgebra, space: Subspace) -> Result<GradedSubspace> {
        if space.basis().iter().any(|v| alg.homogeneous_degree(v).is_none()) {
            return Err(Error::NotHomogeneous);
        }
        Ok(GradedSubspace { space })
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn subspace(&self) -> &Subspace {
        &self.space
    }

    pub fn basis(&self, alg: &GradedAlgebra) -> Vec<HomogeneousVector> {
        self.space
            .basis()
            .iter()
            .map(|v| HomogeneousVector { degree: alg.homogeneous_degree(v).expect("homogeneous basis"), coords: v.clone() })
            .collect()
    }

    pub fn contains(&self, f: &Field, v: &[FieldElement]) -> bool {
        self.space.contains(f, v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m2(f: &Field, g: &FiniteGroup, degrees: Vec<usize>) -> Result<GradedAlgebra> {
        // basis E11, E12, E21, E22 at 2r + c
        let mut s = Vec::new();
        for i in 0..2 {
            for j in 0..2 {
                for l in 0..2 {
                    s.push((2 * i + j, 2 * j + l, 2 * i + l, f.one()));
                }
            }
        }
        let unit = vec![f.one(), f.zero(), f.zero(), f.one()];
        GradedAlgebra::new(f, g, degrees, &s, Some(unit))
    }

    #[test]
    fn validation_examples() {
        let f = Field::prime(5).unwrap();
        let z2 = FiniteGroup::cyclic(2);
        let one = GradedAlgebra::new(&f, &z2, vec![0], &[(0, 0, 0, f.one())], Some(vec![f.one()])).unwrap();
        assert_eq!(one.dim(), 1);
        assert!(m2(&f, &z2, vec![0, 1, 1, 0]).is_ok());
        assert_eq!(m2(&f, &z2, vec![0, 0, 1, 0]).unwrap_err(), Error::GradingViolation(1, 2, 0));
        let bad_unit = GradedAlgebra::new(&f, &z2, vec![0], &[(0, 0, 0, f.one())], Some(vec![f.from_int(2)]));
        assert_eq!(bad_unit.unwrap_err(), Error::BadUnit);
        // b0 b0 = b1, b1 b0 = b0 is not associative: (b0 b0) b0 = b0 but b0 (b0 b0) = b0 b1 = 0
        let na = GradedAlgebra::new(&f, &z2, vec![0, 0], &[(0, 0, 1, f.one()), (1, 0, 0, f.one())], None);
        assert!(matches!(na, Err(Error::AlgebraNotAssociative(..))));
    }

    #[test]
    fn group_algebra_products() {
        let f = Field::prime(5).unwrap();
        let z2 = FiniteGroup::cyclic(2);
        let s = [(0, 0, 0, f.one()), (0, 1, 1, f.one()), (1, 0, 1, f.one()), (1, 1, 0, f.one())];
        let a = GradedAlgebra::new(&f, &z2, vec![0, 1], &s, Some(vec![f.one(), f.zero()])).unwrap();
        let x = vec![f.one(), f.one()];
        assert_eq!(a.multiply(&x, &x), vec![f.from_int(2), f.from_int(2)]);
        assert_eq!(a.multiply(a.unit().unwrap(), &x), x);
        let comps = a.homogeneous_components(&x);
        assert_eq!(comps.iter().map(|c| c.degree).collect::<Vec<_>>(), vec![0, 1]);
        assert_eq!(a.support(), vec![0, 1]);
        let whole = a.graded_ideal_generated(&[HomogeneousVector::new(&a, 1, vec![f.zero(), f.one()]).unwrap()]).unwrap();
        assert_eq!(whole.dim(), 2);
        assert_eq!(HomogeneousVector::from_coords(&a, x).unwrap_err(), Error::NotHomogeneous);
        let unit_gen = HomogeneousVector::new(&a, 0, vec![f.one(), f.zero()]).unwrap();
        assert_eq!(a.graded_ideal_generated(&[unit_gen]).unwrap().dim(), 2);
    }

    #[test]
    fn change_of_basis() {
        let f = Field::prime(5).unwrap();
        let z2 = FiniteGroup::cyclic(2);
        let s = [(0, 0, 0, f.one()), (0, 1, 1, f.one()), (1, 0, 1, f.one()), (1, 1, 0, f.from_int(2))];
        let a = GradedAlgebra::new(&f, &z2, vec![0, 1], &s, Some(vec![f.one(), f.zero()])).unwrap();
        let mut blocks = BTreeMap::new();
        blocks.insert(0, Matrix::identity(&f, 1));
        blocks.insert(1, Matrix::from_rows(&[vec![f.from_int(3)]]));
        let (b, t) = a.homogeneous_change_of_basis(&blocks).unwrap();
        // (3 r_g)^2 = 9·2 r_e = 3 r_e
        assert_eq!(b.basis_product(1, 1), &[(0, f.from_int(3))]);
        assert_eq!(t[(1, 1)], f.from_int(2));
        let mut back = BTreeMap::new();
        back.insert(0, Matrix::identity(&f, 1));
        back.insert(1, Matrix::from_rows(&[vec![f.from_int(2)]]));
        let (c, _) = b.homogeneous_change_of_basis(&back).unwrap();
        assert_eq!(c.structure(), a.structure());
        let mut singular = BTreeMap::new();
        singular.insert(0, Matrix::identity(&f, 1));
        singular.insert(1, Matrix::zeros(1, 1));
        assert_eq!(a.homogeneous_change_of_basis(&singular).unwrap_err(), Error::SingularBlock(1));
    }

    #[test]
    fn radical_style_subalgebra() {
        let f = Field::prime(5).unwrap();
        let z2 = FiniteGroup::cyclic(2);
        let a = m2(&f, &z2, vec![0, 1, 1, 0]).unwrap();
        let diag = vec![a.basis_vector(0), a.basis_vector(3)];
        let (sub, emb) = a.subalgebra(&diag).unwrap();
        assert_eq!(sub.dim(), 2);
        assert_eq!(emb.to_parent(&f, &[f.one(), f.one()]), a.unit().unwrap().clone());
        assert!(a.subalgebra(&[a.basis_vector(1), a.basis_vector(2)]).is_err());
    }
}
