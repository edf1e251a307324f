//! Bol algebras given by structure constants.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{check_len, Error, Result};
use crate::linalg::scalar::{axpy, zero_vector};
use crate::linalg::{Matrix, Scalar, Vector};
use crate::tensor::{Tensor3, Tensor4};

/// Metadata key recording the zero-fill convention for unlisted constants.
pub const META_ZERO_FILL: &str = "zero-fill";

/// A finite-dimensional algebra with an antisymmetric binary product
/// `e_j · e_k = Σ_i T^i_jk e_i` and a ternary operation
/// `(e_j, e_k, e_l) = Σ_i A^i_jkl e_i`.
///
/// Construction only enforces shapes and antisymmetry of the binary product;
/// whether the Bol identities hold is a question for [`crate::check_axioms`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BolAlgebra {
    dim: usize,
    binary: Tensor3,
    ternary: Tensor4,
    label: String,
    metadata: BTreeMap<String, String>,
}

/// Which argument of the ternary operation is left free in [`BolAlgebra::slot_map`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Slot {
    First,
    Second,
    Third,
}

/// A linear map `Q^source -> Q^target` in the standard bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap {
    source_dim: usize,
    target_dim: usize,
    matrix: Matrix,
}

impl LinearMap {
    pub fn new(matrix: Matrix) -> Self {
        Self { source_dim: matrix.cols(), target_dim: matrix.rows(), matrix }
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vector> {
        self.matrix.mul_vec(v)
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }
}

impl BolAlgebra {
    /// Builds an algebra from full tensors, rejecting shape mismatches and a
    /// binary product that is not antisymmetric.
    pub fn from_tensors(binary: Tensor3, ternary: Tensor4) -> Result<Self> {
        let dim = binary.dim();
        if ternary.dim() != dim {
            return Err(Error::Malformed(format!(
                "binary tensor has dimension {dim} but ternary tensor has dimension {}",
                ternary.dim()
            )));
        }
        if let Some((j, k)) = binary.first_asymmetry() {
            return Err(Error::Malformed(format!(
                "binary product is not antisymmetric at (e{}, e{})",
                j + 1,
                k + 1
            )));
        }
        Ok(Self {
            dim,
            binary,
            ternary,
            label: String::new(),
            metadata: BTreeMap::new(),
        })
    }

    /// The algebra with both operations identically zero.
    pub fn zero(dim: usize) -> Self {
        Self::from_tensors(Tensor3::zeros(dim), Tensor4::zeros(dim)).expect("zero tensors are valid")
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn with_meta(mut self, key: impl Into<String>, value: impl Into<String>) -> Self {
        self.metadata.insert(key.into(), value.into());
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn metadata(&self) -> &BTreeMap<String, String> {
        &self.metadata
    }

    pub fn meta(&self, key: &str) -> Option<&str> {
        self.metadata.get(key).map(String::as_str)
    }

    pub fn binary(&self) -> &Tensor3 {
        &self.binary
    }

    pub fn ternary(&self) -> &Tensor4 {
        &self.ternary
    }

    /// Equality of the structure constants, ignoring label and metadata.
    pub fn same_structure(&self, other: &BolAlgebra) -> bool {
        self.binary == other.binary && self.ternary == other.ternary
    }

    pub fn basis_product(&self, j: usize, k: usize) -> &[Scalar] {
        self.binary.slice(j, k)
    }

    pub fn basis_triple(&self, j: usize, k: usize, l: usize) -> &[Scalar] {
        self.ternary.slice(j, k, l)
    }

    /// `x · y`.
    pub fn bilinear_product(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vector> {
        check_len(self.dim, x.len())?;
        check_len(self.dim, y.len())?;
        Ok(self.mul(x, y))
    }

    /// `(x, y, z)`.
    pub fn trilinear_product(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Result<Vector> {
        check_len(self.dim, x.len())?;
        check_len(self.dim, y.len())?;
        check_len(self.dim, z.len())?;
        Ok(self.tri(x, y, z))
    }

    pub(crate) fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut out = zero_vector(self.dim);
        for (j, xj) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (k, yk) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                axpy(&mut out, &(xj * yk), self.binary.slice(j, k));
            }
        }
        out
    }

    pub(crate) fn tri(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vector {
        let mut out = zero_vector(self.dim);
        for (j, xj) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (k, yk) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let xy = xj * yk;
                for (l, zl) in z.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    axpy(&mut out, &(&xy * zl), self.ternary.slice(j, k, l));
                }
            }
        }
        out
    }

    /// Matrix of `v ↦ a · v`.
    pub fn left_multiplication(&self, a: &[Scalar]) -> Result<Matrix> {
        check_len(self.dim, a.len())?;
        let columns: Vec<Vector> = (0..self.dim)
            .map(|l| self.mul(a, &crate::linalg::scalar::unit_vector(self.dim, l)))
            .collect();
        Matrix::from_columns(&columns, self.dim)
    }

    /// Matrix of the ternary operation with the two basis vectors `e_a`, `e_b`
    /// filling the other slots in order, e.g. `Slot::Second` gives `v ↦ (e_a, v, e_b)`.
    pub fn slot_map(&self, slot: Slot, a: usize, b: usize) -> Matrix {
        let n = self.dim;
        Matrix::from_fn(n, n, |i, v| {
            let (j, k, l) = match slot {
                Slot::First => (v, a, b),
                Slot::Second => (a, v, b),
                Slot::Third => (a, b, v),
            };
            self.ternary.get(i, j, k, l).clone()
        })
    }

    /// The map `c ↦ (a, b, c)`.
    pub fn inner_derivation(&self, a: &[Scalar], b: &[Scalar]) -> Result<LinearMap> {
        check_len(self.dim, a.len())?;
        check_len(self.dim, b.len())?;
        let columns: Vec<Vector> = (0..self.dim)
            .map(|l| self.tri(a, b, &crate::linalg::scalar::unit_vector(self.dim, l)))
            .collect();
        Ok(LinearMap::new(Matrix::from_columns(&columns, self.dim)?))
    }

    /// Block-diagonal sum: `self` on the first coordinates, `other` on the
    /// rest, every mixed product zero.
    pub fn direct_sum(&self, other: &BolAlgebra) -> BolAlgebra {
        let (n1, n) = (self.dim, self.dim + other.dim);
        let mut binary = Tensor3::zeros(n);
        let mut ternary = Tensor4::zeros(n);
        for (src, shift) in [(self, 0), (other, n1)] {
            let m = src.dim;
            for j in 0..m {
                for k in 0..m {
                    for i in 0..m {
                        binary.set(i + shift, j + shift, k + shift, src.binary.get(i, j, k).clone());
                    }
                    for l in 0..m {
                        for i in 0..m {
                            ternary.set(
                                i + shift,
                                j + shift,
                                k + shift,
                                l + shift,
                                src.ternary.get(i, j, k, l).clone(),
                            );
                        }
                    }
                }
            }
        }
        let label = match (self.label.is_empty(), other.label.is_empty()) {
            (false, false) => format!("{} ⊕ {}", self.label, other.label),
            _ => String::new(),
        };
        BolAlgebra::from_tensors(binary, ternary)
            .expect("block sum of antisymmetric products is antisymmetric")
            .with_label(label)
    }

    /// The same algebra in the basis `f_a = Σ_i P[i][a] e_i` (columns of `p`).
    pub fn change_basis(&self, p: &Matrix) -> Result<BolAlgebra> {
        let n = self.dim;
        if p.rows() != n || p.cols() != n {
            return Err(Error::DimensionMismatch { expected: n, found: p.rows().max(p.cols()) });
        }
        let p_inv = p
            .inverse()
            .ok_or_else(|| Error::Malformed("change-of-basis matrix is singular".into()))?;
        let new_basis: Vec<Vector> = (0..n).map(|a| p.column(a)).collect();
        let mut binary = Tensor3::zeros(n);
        let mut ternary = Tensor4::zeros(n);
        for a in 0..n {
            for b in 0..n {
                let prod = self.mul(&new_basis[a], &new_basis[b]);
                binary.set_slice(a, b, &p_inv.mul_vec(&prod)?);
                for c in 0..n {
                    let t = self.tri(&new_basis[a], &new_basis[b], &new_basis[c]);
                    ternary.set_slice(a, b, c, &p_inv.mul_vec(&t)?);
                }
            }
        }
        Ok(BolAlgebra::from_tensors(binary, ternary)?.with_label(self.label.clone()))
    }
}

/// Incremental construction from sparse records, completing the binary
/// product by antisymmetry. Indices are 0-based.
#[derive(Debug, Clone)]
pub struct AlgebraBuilder {
    dim: usize,
    binary: Tensor3,
    ternary: Tensor4,
    binary_set: Vec<bool>,
    ternary_set: Vec<bool>,
    label: String,
    metadata: BTreeMap<String, String>,
}

impl AlgebraBuilder {
    pub fn new(dim: usize) -> Self {
        Self {
            dim,
            binary: Tensor3::zeros(dim),
            ternary: Tensor4::zeros(dim),
            binary_set: vec![false; dim * dim],
            ternary_set: vec![false; dim * dim * dim],
            label: String::new(),
            metadata: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn check_index(&self, idx: usize) -> Result<()> {
        if idx < self.dim {
            Ok(())
        } else {
            Err(Error::Malformed(format!("index {} out of range 1..={}", idx + 1, self.dim)))
        }
    }

    fn dense(&self, terms: &[(usize, Scalar)]) -> Result<Vector> {
        let mut v = zero_vector(self.dim);
        for (i, q) in terms {
            self.check_index(*i)?;
            v[*i] += q;
        }
        Ok(v)
    }

    /// Sets `e_j · e_k = Σ q e_i` and `e_k · e_j` to its negative.
    pub fn product(&mut self, j: usize, k: usize, terms: &[(usize, Scalar)]) -> Result<&mut Self> {
        self.check_index(j)?;
        self.check_index(k)?;
        let v = self.dense(terms)?;
        if j == k {
            if v.iter().any(|x| !x.is_zero()) {
                return Err(Error::Malformed(format!(
                    "e{0}·e{0} must vanish (antisymmetry)",
                    j + 1
                )));
            }
            return Ok(self);
        }
        if self.binary_set[j * self.dim + k] {
            return Err(Error::Malformed(format!("duplicate product e{}·e{}", j + 1, k + 1)));
        }
        let negated: Vector = v.iter().map(|x| -x).collect();
        if self.binary_set[k * self.dim + j] && self.binary.slice(k, j) != negated.as_slice() {
            return Err(Error::Malformed(format!(
                "e{}·e{} conflicts with e{}·e{} (antisymmetry)",
                j + 1,
                k + 1,
                k + 1,
                j + 1
            )));
        }
        self.binary.set_slice(j, k, &v);
        self.binary.set_slice(k, j, &negated);
        self.binary_set[j * self.dim + k] = true;
        Ok(self)
    }

    /// Sets `(e_j, e_k, e_l) = Σ q e_i`.
    pub fn triple(&mut self, j: usize, k: usize, l: usize, terms: &[(usize, Scalar)]) -> Result<&mut Self> {
        self.check_index(j)?;
        self.check_index(k)?;
        self.check_index(l)?;
        let slot = (j * self.dim + k) * self.dim + l;
        if self.ternary_set[slot] {
            return Err(Error::Malformed(format!(
                "duplicate triple (e{}, e{}, e{})",
                j + 1,
                k + 1,
                l + 1
            )));
        }
        let v = self.dense(terms)?;
        self.ternary.set_slice(j, k, l, &v);
        self.ternary_set[slot] = true;
        Ok(self)
    }

    pub fn label(&mut self, label: impl Into<String>) -> &mut Self {
        self.label = label.into();
        self
    }

    pub fn meta(&mut self, key: impl Into<String>, value: impl Into<String>) -> &mut Self {
        self.metadata.insert(key.into(), value.into());
        self
    }

    pub fn build(&self) -> Result<BolAlgebra> {
        let mut algebra = BolAlgebra::from_tensors(self.binary.clone(), self.ternary.clone())?
            .with_label(self.label.clone());
        algebra.metadata = self.metadata.clone();
        Ok(algebra)
    }
}
