//! Bol algebras induced by Lie algebras: `a·b = [a,b]`, `(a,b,c) = [[a,b],c]`.

use crate::algebra::BolAlgebra;
use crate::error::{Error, Result};
use crate::linalg::scalar::{add_vectors, axpy, is_zero_vector, zero_vector};
use crate::linalg::Vector;
use crate::tensor::{Tensor3, Tensor4};

fn bracket(c: &Tensor3, x: &[crate::linalg::Scalar], y: &[crate::linalg::Scalar]) -> Vector {
    let n = c.dim();
    let mut out = zero_vector(n);
    for (j, xj) in x.iter().enumerate() {
        for (k, yk) in y.iter().enumerate() {
            axpy(&mut out, &(xj * yk), c.slice(j, k));
        }
    }
    out
}

/// First basis triple `(j, k, l)` in lexicographic order on which the Jacobi
/// identity fails.
pub fn jacobi_failure(brackets: &Tensor3) -> Option<[usize; 3]> {
    let n = brackets.dim();
    let unit = |i| crate::linalg::scalar::unit_vector(n, i);
    for j in 0..n {
        for k in 0..n {
            let jk = brackets.slice(j, k).to_vec();
            for l in 0..n {
                let kl = brackets.slice(k, l).to_vec();
                let lj = brackets.slice(l, j).to_vec();
                let sum = add_vectors(
                    &add_vectors(&bracket(brackets, &jk, &unit(l)), &bracket(brackets, &kl, &unit(j))),
                    &bracket(brackets, &lj, &unit(k)),
                );
                if !is_zero_vector(&sum) {
                    return Some([j, k, l]);
                }
            }
        }
    }
    None
}

/// The Bol algebra of a Lie algebra with structure constants
/// `[e_j, e_k] = Σ_i C^i_jk e_i`.
pub fn from_lie_algebra(brackets: &Tensor3) -> Result<BolAlgebra> {
    let n = brackets.dim();
    if let Some((j, k)) = brackets.first_asymmetry() {
        return Err(Error::Malformed(format!(
            "bracket is not antisymmetric at (e{}, e{})",
            j + 1,
            k + 1
        )));
    }
    if let Some(witness) = jacobi_failure(brackets) {
        return Err(Error::InvalidFixture { witness });
    }
    let mut ternary = Tensor4::zeros(n);
    for j in 0..n {
        for k in 0..n {
            let jk = brackets.slice(j, k);
            for l in 0..n {
                let v = bracket(brackets, jk, &crate::linalg::scalar::unit_vector(n, l));
                ternary.set_slice(j, k, l, &v);
            }
        }
    }
    BolAlgebra::from_tensors(brackets.clone(), ternary)
}
