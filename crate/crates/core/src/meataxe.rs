//! Irreducibility of a module presented by generating operators, after Holt and
//! Rees: a random element of the operator algebra, the null space of an
//! irreducible factor of its characteristic polynomial, spin-up, and a
//! transposed check that certifies irreducibility.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::linalg::{axpy, spin, zero_vec, Matrix, Subspace, Vector};
use crate::field::{poly, Field};

const MAX_ATTEMPTS: usize = 1000;
const MAX_WORDS: usize = 64;

/// Outcome of an irreducibility test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Module {
    Irreducible,
    /// A proper nonzero invariant subspace.
    Reducible(Subspace),
}

/// Decides whether `F^n` is irreducible under the algebra generated by `ops`.
///
/// The zero module and one-dimensional modules count as irreducible.
pub fn analyse(f: &Field, ops: &[Matrix], n: usize, rng: &mut ChaCha8Rng) -> Result<Module> {
    if n <= 1 {
        return Ok(Module::Irreducible);
    }
    let transposed: Vec<Matrix> = ops.iter().map(Matrix::transpose).collect();
    let mut words: Vec<Matrix> = ops.to_vec();
    let cap = MAX_WORDS.max(ops.len() + 16);
    for _ in 0..MAX_ATTEMPTS {
        if !ops.is_empty() {
            let w = words[rng.gen_range(0..words.len())].mul(f, &ops[rng.gen_range(0..ops.len())]);
            if words.len() < cap {
                words.push(w);
            } else {
                let slot = rng.gen_range(ops.len()..cap);
                words[slot] = w;
            }
        }
        let mut theta = Matrix::zeros(n, n);
        for w in &words {
            if rng.gen_bool(0.5) {
                let c = f.element(rng.gen_range(0..f.q())).expect("index below q");
                theta = theta.add(f, &w.scale(f, c));
            }
        }
        for (factor, _) in poly::factor(f, &theta.charpoly(f)) {
            let d = poly::degree(&factor).unwrap_or(0);
            let m = theta.eval_poly(f, &factor);
            let kernel = m.nullspace(f);
            let sub = spin(f, ops, &kernel[..1], n);
            if !sub.is_full() {
                return Ok(Module::Reducible(sub));
            }
            if kernel.len() == d {
                let dual = m.transpose().nullspace(f);
                let sub = spin(f, &transposed, &dual[..1], n);
                if !sub.is_full() {
                    return Ok(Module::Reducible(sub.annihilator(f)));
                }
                return Ok(Module::Irreducible);
            }
        }
    }
    Err(Error::Internal("irreducibility test did not converge".into()))
}

/// Matrices of `ops` restricted to an invariant subspace, in the coordinates
/// of its echelon basis.
pub fn restrict(f: &Field, ops: &[Matrix], space: &Subspace) -> Result<Vec<Matrix>> {
    let k = space.dim();
    ops.iter()
        .map(|op| {
            let cols = space
                .basis()
                .iter()
                .map(|b| {
                    space
                        .coords(f, &op.mul_vec(f, b))
                        .ok_or_else(|| Error::Internal("subspace is not invariant".into()))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Matrix::from_columns(k, &cols))
        })
        .collect()
}

/// An irreducible invariant subspace contained in the invariant subspace
/// `space`, found by repeated descent.
pub fn minimal_submodule(f: &Field, ops: &[Matrix], space: &Subspace, rng: &mut ChaCha8Rng) -> Result<Subspace> {
    let mut current = space.clone();
    loop {
        let local = restrict(f, ops, &current)?;
        match analyse(f, &local, current.dim(), rng)? {
            Module::Irreducible => return Ok(current),
            Module::Reducible(sub) => {
                let lifted: Vec<Vector> = sub
                    .basis()
                    .iter()
                    .map(|c| {
                        let mut v = zero_vec(current.ambient());
                        for (x, b) in c.iter().zip(current.basis()) {
                            axpy(f, &mut v, *x, b);
                        }
                        v
                    })
                    .collect();
                current = Subspace::span(f, current.ambient(), &lifted);
            }
        }
    }
}
