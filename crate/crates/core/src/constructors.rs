//! Builders for the standard graded algebras: elementary gradings on matrix
//! algebras, twisted group algebras, tensor and induced gradings, the
//! canonical model `M_k(F^σ[H])`, and randomized homogeneous rebasing.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::GradedAlgebra;
use crate::cohomology::Cocycle;
use crate::error::{Error, Result};
use crate::field::linalg::{zero_vec, Matrix, Vector};
use crate::field::{Field, FieldElement};
use crate::group::{FiniteGroup, Subgroup};

fn check_tuple(g: &FiniteGroup, tuple: &[usize]) -> Result<()> {
    if tuple.is_empty() {
        return Err(Error::Dimension("tuple must be nonempty".into()));
    }
    if let Some(&x) = tuple.iter().find(|&&x| x >= g.order()) {
        return Err(Error::Dimension(format!("tuple entry {x} is not a group element")));
    }
    Ok(())
}

/// Left-translates a tuple so that its first entry is the identity.
pub fn canonical_tuple(g: &FiniteGroup, tuple: &[usize]) -> Vec<usize> {
    let shift = g.inv(tuple[0]);
    tuple.iter().map(|&x| g.mul(shift, x)).collect()
}

/// `M_n(F)` on the matrix units `E_ij` (index `i·n + j`) with
/// `deg E_ij = g_i^{-1} g_j`.
pub fn elementary_grading(field: &Field, g: &FiniteGroup, tuple: &[usize]) -> Result<GradedAlgebra> {
    check_tuple(g, tuple)?;
    let scalars = GradedAlgebra::assemble(field, g, vec![g.identity()], vec![vec![(0, field.one())]], Some(vec![field.one()]));
    induced_tensor(&canonical_tuple(g, tuple), &scalars)
}

/// `F^σ[H]` with basis `r_h` in the order of `H`'s elements and `deg r_h = h`.
pub fn twisted_group_algebra(sigma: &Cocycle) -> GradedAlgebra {
    let h = sigma.group();
    let degrees: Vec<usize> = h.elements().collect();
    twisted_with_degrees(sigma, h, degrees)
}

fn twisted_with_degrees(sigma: &Cocycle, grading: &FiniteGroup, degrees: Vec<usize>) -> GradedAlgebra {
    let h = sigma.group();
    let f = sigma.field();
    let n = h.order();
    let products = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .map(|(x, y)| vec![(h.mul(x, y), sigma.value(x, y))])
        .collect();
    let mut unit = zero_vec(n);
    unit[h.identity()] = f.one();
    GradedAlgebra::assemble(f, grading, degrees, products, Some(unit))
}

/// `M_n(B)` with `deg E_ij ⊗ b = g_i^{-1} deg(b) g_j`; basis `E_ij ⊗ b_t` at
/// index `(i·n + j)·dim B + t`. `B` must be unital.
pub fn induced_tensor(tuple: &[usize], b: &GradedAlgebra) -> Result<GradedAlgebra> {
    let g = b.group();
    check_tuple(g, tuple)?;
    let f = b.field();
    let bu = b.unit().ok_or(Error::NoUnit)?;
    let n = tuple.len();
    let d = b.dim();
    let dim = n * n * d;
    let idx = |i: usize, j: usize, t: usize| (i * n + j) * d + t;
    let mut degrees = vec![0; dim];
    for i in 0..n {
        for j in 0..n {
            for t in 0..d {
                degrees[idx(i, j, t)] = g.mul(g.mul(g.inv(tuple[i]), b.degree(t)), tuple[j]);
            }
        }
    }
    let mut products = vec![Vec::new(); dim * dim];
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                for s in 0..d {
                    for t in 0..d {
                        let entry = b
                            .basis_product(s, t)
                            .iter()
                            .map(|&(u, c)| (idx(i, l, u), c))
                            .collect::<Vec<(usize, FieldElement)>>();
                        products[idx(i, j, s) * dim + idx(j, l, t)] = entry;
                    }
                }
            }
        }
    }
    let mut unit = zero_vec(dim);
    for i in 0..n {
        for t in 0..d {
            unit[idx(i, i, t)] = bu[t];
        }
    }
    Ok(GradedAlgebra::assemble(f, g, degrees, products, Some(unit)))
}

/// `A ⊗ B` graded by `deg(a ⊗ b) = deg a · deg b`; basis `a_s ⊗ b_t` at
/// `s·dim B + t`. Every degree in `Supp A` must commute with every degree in
/// `Supp B`.
pub fn tensor_commuting(a: &GradedAlgebra, b: &GradedAlgebra) -> Result<GradedAlgebra> {
    let g = a.group();
    if g != b.group() || a.field() != b.field() {
        return Err(Error::FieldMismatch);
    }
    for x in a.support() {
        for y in b.support() {
            if !g.commute(x, y) {
                return Err(Error::NonCommutingSupports(x, y));
            }
        }
    }
    let f = a.field();
    let (da, db) = (a.dim(), b.dim());
    let dim = da * db;
    let degrees = (0..dim).map(|i| g.mul(a.degree(i / db), b.degree(i % db))).collect();
    let mut products = vec![Vec::new(); dim * dim];
    for s in 0..da {
        for t in 0..db {
            for s2 in 0..da {
                for t2 in 0..db {
                    let mut out = Vec::new();
                    for &(u, c) in a.basis_product(s, s2) {
                        for &(v, e) in b.basis_product(t, t2) {
                            out.push((u * db + v, f.mul(c, e)));
                        }
                    }
                    products[(s * db + t) * dim + s2 * db + t2] = out;
                }
            }
        }
    }
    let unit = match (a.unit(), b.unit()) {
        (Some(ua), Some(ub)) => {
            Some((0..dim).map(|i| f.mul(ua[i / db], ub[i % db])).collect())
        }
        _ => None,
    };
    Ok(GradedAlgebra::assemble(f, g, degrees, products, unit))
}

/// `A ⊕ B`, both graded by the same group.
pub fn direct_sum(a: &GradedAlgebra, b: &GradedAlgebra) -> Result<GradedAlgebra> {
    if a.group() != b.group() || a.field() != b.field() {
        return Err(Error::FieldMismatch);
    }
    let (da, db) = (a.dim(), b.dim());
    let dim = da + db;
    let mut degrees = a.degrees().to_vec();
    degrees.extend_from_slice(b.degrees());
    let mut products = vec![Vec::new(); dim * dim];
    for i in 0..da {
        for j in 0..da {
            products[i * dim + j] = a.basis_product(i, j).to_vec();
        }
    }
    for i in 0..db {
        for j in 0..db {
            products[(da + i) * dim + da + j] = b.basis_product(i, j).iter().map(|&(k, c)| (da + k, c)).collect();
        }
    }
    let unit = match (a.unit(), b.unit()) {
        (Some(ua), Some(ub)) => Some(ua.iter().chain(ub).copied().collect()),
        _ => None,
    };
    Ok(GradedAlgebra::assemble(a.field(), a.group(), degrees, products, unit))
}

/// The model `M_k(F^σ[H])` over `G`: basis `E_ij ⊗ x_h` in `(i, j, h)`
/// lexicographic order (h by ascending index in `G`), with
/// `deg(E_ij ⊗ x_h) = a_i^{-1} h a_j`. `sigma` lives on `h.as_group(g)`.
pub fn model_algebra(
    field: &Field,
    g: &FiniteGroup,
    tuple: &[usize],
    h: &Subgroup,
    sigma: &Cocycle,
) -> Result<GradedAlgebra> {
    check_tuple(g, tuple)?;
    if sigma.field() != field {
        return Err(Error::FieldMismatch);
    }
    let hg = h.as_group(g);
    if sigma.group().table() != hg.table() || sigma.group().identity() != hg.identity() {
        return Err(Error::Dimension("cocycle is not defined on the given subgroup".into()));
    }
    let b = twisted_with_degrees(sigma, g, h.members().to_vec());
    induced_tensor(tuple, &b)
}

/// A deterministic pseudorandom homogeneous change of basis. Returns the new
/// algebra and the matrix taking old coordinates to new ones.
pub fn scramble(r: &GradedAlgebra, seed: u64) -> Result<(GradedAlgebra, Matrix)> {
    let f = r.field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut blocks = BTreeMap::new();
    for g in r.support() {
        let d = r.component_dim(g);
        let block = loop {
            let rows: Vec<Vector> = (0..d)
                .map(|_| (0..d).map(|_| random_element(f, &mut rng)).collect())
                .collect();
            let m = Matrix::from_rows(&rows);
            if m.rank(f) == d {
                break m;
            }
        };
        blocks.insert(g, block);
    }
    r.homogeneous_change_of_basis(&blocks)
}

pub(crate) fn random_element(f: &Field, rng: &mut ChaCha8Rng) -> FieldElement {
    f.element(rng.gen_range(0..f.q())).expect("in range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::{h2_group, ExponentCocycle};
    use crate::group::all_subgroups;

    fn census(a: &GradedAlgebra) -> Vec<usize> {
        (0..a.group().order()).map(|g| a.component_dim(g)).collect()
    }

    fn revalidate(a: &GradedAlgebra) {
        GradedAlgebra::new(a.field(), a.group(), a.degrees().to_vec(), &a.structure(), a.unit().cloned())
            .expect("constructor output validates");
    }

    #[test]
    fn elementary_examples() {
        let f = Field::prime(5).unwrap();
        let z2 = FiniteGroup::cyclic(2);
        let triv = elementary_grading(&f, &z2, &[0, 0]).unwrap();
        assert_eq!(triv.support(), vec![0]);
        let eg = elementary_grading(&f, &z2, &[0, 1]).unwrap();
        assert_eq!(census(&eg), vec![2, 2]);
        revalidate(&eg);
        let s3 = FiniteGroup::symmetric(3);
        let t = [1, 3, 4];
        let shifted: Vec<usize> = t.iter().map(|&x| s3.mul(5, x)).collect();
        assert_eq!(elementary_grading(&f, &s3, &t).unwrap(), elementary_grading(&f, &s3, &shifted).unwrap());
    }

    #[test]
    fn twisted_examples() {
        let f = Field::prime(5).unwrap();
        let z2 = FiniteGroup::cyclic(2);
        let plain = twisted_group_algebra(&Cocycle::trivial(&f, &z2));
        assert_eq!(plain.basis_product(1, 1), &[(0, f.one())]);
        let rows = vec![vec![f.one(), f.one()], vec![f.one(), f.from_int(2)]];
        let t = twisted_group_algebra(&Cocycle::check(&f, &z2, &rows).unwrap());
        assert_eq!(t.basis_product(1, 1), &[(0, f.from_int(2))]);
        revalidate(&t);
    }

    #[test]
    fn induced_examples() {
        let f = Field::prime(5).unwrap();
        let z2 = FiniteGroup::cyclic(2);
        let group_alg = twisted_group_algebra(&Cocycle::trivial(&f, &z2));
        let c = induced_tensor(&[0, 1], &group_alg).unwrap();
        assert_eq!(c.support(), vec![0, 1]);
        assert_eq!(c.component_dim(0), 4);
        revalidate(&c);
        assert_eq!(induced_tensor(&[0], &group_alg).unwrap(), group_alg);
        let no_unit = GradedAlgebra::new(&f, &z2, vec![0], &[], None).unwrap();
        assert_eq!(induced_tensor(&[0, 1], &no_unit).unwrap_err(), Error::NoUnit);
    }

    #[test]
    fn tensor_examples() {
        let f = Field::prime(5).unwrap();
        let z2 = FiniteGroup::cyclic(2);
        let a = twisted_group_algebra(&Cocycle::trivial(&f, &z2));
        let c = tensor_commuting(&a, &a).unwrap();
        assert_eq!(c.dim(), 4);
        assert_eq!(c.component_dim(0), 2);
        revalidate(&c);
        let scal = elementary_grading(&f, &z2, &[0]).unwrap();
        assert_eq!(tensor_commuting(&a, &scal).unwrap().support(), a.support());

        let s3 = FiniteGroup::symmetric(3);
        let subs = all_subgroups(&s3);
        let twos: Vec<&Subgroup> = subs.iter().filter(|h| h.order() == 2).collect();
        let mk = |h: &Subgroup| {
            let sigma = Cocycle::trivial(&f, &h.as_group(&s3));
            model_algebra(&f, &s3, &[0], h, &sigma).unwrap()
        };
        let err = tensor_commuting(&mk(twos[0]), &mk(twos[1])).unwrap_err();
        assert!(matches!(err, Error::NonCommutingSupports(..)));
    }

    #[test]
    fn model_examples() {
        let f = Field::prime(7).unwrap();
        let z2 = FiniteGroup::cyclic(2);
        let triv = Subgroup::trivial(&z2);
        let sig1 = Cocycle::trivial(&f, &triv.as_group(&z2));
        let ground = model_algebra(&f, &z2, &[0], &triv, &sig1).unwrap();
        assert_eq!(ground.dim(), 1);
        assert_eq!(model_algebra(&f, &z2, &[0, 1], &triv, &sig1).unwrap(), elementary_grading(&f, &z2, &[0, 1]).unwrap());
        let whole = Subgroup::whole(&z2);
        let sig = Cocycle::trivial(&f, &whole.as_group(&z2));
        let m = model_algebra(&f, &z2, &[0, 0], &whole, &sig).unwrap();
        assert_eq!(m.dim(), 8);
        assert_eq!(m.support(), vec![0, 1]);
        assert_eq!(m.component_dim(0), 4);
        revalidate(&m);
    }

    #[test]
    fn model_on_nonabelian_groups_validates() {
        let f = Field::prime(13).unwrap();
        let s3 = FiniteGroup::symmetric(3);
        for h in all_subgroups(&s3) {
            let sigma = Cocycle::trivial(&f, &h.as_group(&s3));
            let m = model_algebra(&f, &s3, &[0, 3, 4], &h, &sigma).unwrap();
            assert_eq!(m.dim(), 9 * h.order());
            revalidate(&m);
        }
        let k4 = FiniteGroup::named("K4").unwrap();
        let whole = Subgroup::whole(&k4);
        let cls = h2_group(&k4, 2).unwrap();
        let rep: &ExponentCocycle = &cls.representatives[0];
        let sigma = Cocycle::from_exponents(&f, &whole.as_group(&k4), rep).unwrap();
        revalidate(&model_algebra(&f, &k4, &[0, 1], &whole, &sigma).unwrap());
    }

    #[test]
    fn scramble_is_deterministic_and_isomorphic() {
        let f = Field::prime(5).unwrap();
        let z2 = FiniteGroup::cyclic(2);
        let r = elementary_grading(&f, &z2, &[0, 1]).unwrap();
        let (a, t) = scramble(&r, 7).unwrap();
        let (b, _) = scramble(&r, 7).unwrap();
        assert_eq!(a, b);
        revalidate(&a);
        // t maps old coordinates to new ones and intertwines products
        for i in 0..4 {
            for j in 0..4 {
                let x = r.basis_vector(i);
                let y = r.basis_vector(j);
                let lhs = t.mul_vec(&f, &r.multiply(&x, &y));
                let rhs = a.multiply(&t.mul_vec(&f, &x), &t.mul_vec(&f, &y));
                assert_eq!(lhs, rhs);
            }
        }
    }
}
