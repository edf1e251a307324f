use std::fmt;

use num_traits::Zero;

use super::matrix::{rref_in_place, Matrix};
use super::scalar::{axpy, format_vector, unit_vector, Scalar, Vector};
use crate::error::{check_len, Error, Result};

/// A linear subspace of `Q^n`, stored by its reduced row-echelon basis.
///
/// Because the basis is canonical, two `Subspace` values describe the same
/// set of vectors exactly when they compare equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    /// Canonical span of `vectors` inside `Q^ambient_dim`.
    pub fn canonicalize(vectors: &[Vector], ambient_dim: usize) -> Result<Self> {
        for v in vectors {
            check_len(ambient_dim, v.len())
                .map_err(|_| Error::Malformed(format!("vector of length {} in ambient dimension {ambient_dim}", v.len())))?;
        }
        Ok(Self::from_rows_unchecked(vectors.to_vec(), ambient_dim))
    }

    pub(crate) fn from_rows_unchecked(mut rows: Vec<Vector>, ambient_dim: usize) -> Self {
        rows.retain(|r| r.iter().any(|x| !x.is_zero()));
        let pivots = rref_in_place(&mut rows, ambient_dim);
        rows.truncate(pivots.len());
        let basis = Matrix::from_rows(rows, ambient_dim).expect("rows have ambient length");
        Self { ambient_dim, basis, pivots }
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Matrix::zeros(0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Matrix::identity(ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Span of the standard basis vectors with the given 0-based indices.
    pub fn coordinate(indices: &[usize], ambient_dim: usize) -> Result<Self> {
        let mut vectors = Vec::with_capacity(indices.len());
        for &i in indices {
            if i >= ambient_dim {
                return Err(Error::Malformed(format!("coordinate index {i} out of range for ambient dimension {ambient_dim}")));
            }
            vectors.push(unit_vector(ambient_dim, i));
        }
        Self::canonicalize(&vectors, ambient_dim)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    /// The canonical basis, one vector per row.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns that are not pivots; the span of the matching unit vectors is
    /// a complement of `self`.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ambient_dim).filter(|c| !self.pivots.contains(c)).collect()
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        check_len(self.ambient_dim, other.ambient_dim)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut rows = self.basis_vectors();
        rows.extend(other.basis_vectors());
        Ok(Self::from_rows_unchecked(rows, self.ambient_dim))
    }

    /// Orthogonal complement under the standard dot product.
    pub fn annihilator(&self) -> Subspace {
        Self::from_rows_unchecked(self.basis.kernel(), self.ambient_dim)
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Ok(self.annihilator().sum(&other.annihilator())?.annihilator())
    }

    /// Remainder of `v` after clearing every pivot coordinate with basis rows.
    /// Zero exactly when `v` lies in the subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Result<Vector> {
        check_len(self.ambient_dim, v.len())?;
        let mut out = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            let c = -out[p].clone();
            axpy(&mut out, &c, self.basis.row(r));
        }
        Ok(out)
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        Ok(self.reduce(v)?.iter().all(Zero::is_zero))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        for r in 0..other.dim() {
            if !self.contains(other.basis.row(r))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Coefficients of `v` in the canonical basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &[Scalar]) -> Result<Option<Vector>> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }

    /// Inverse of [`Subspace::coordinates`].
    pub fn combine(&self, coefficients: &[Scalar]) -> Result<Vector> {
        check_len(self.dim(), coefficients.len())?;
        let mut out = vec![Scalar::zero(); self.ambient_dim];
        for (r, c) in coefficients.iter().enumerate() {
            axpy(&mut out, c, self.basis.row(r));
        }
        Ok(out)
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "{{0}}");
        }
        let parts: Vec<String> = (0..self.dim()).map(|r| format_vector(self.basis.row(r))).collect();
        write!(f, "span{{{}}}", parts.join(", "))
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(n={}, {})", self.ambient_dim, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::int;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| int(x)).collect()
    }

    fn span(vs: &[&[i64]], n: usize) -> Subspace {
        Subspace::canonicalize(&vs.iter().map(|x| v(x)).collect::<Vec<_>>(), n).unwrap()
    }

    #[test]
    fn canonicalize_examples() {
        let s = span(&[&[1, 1, 0], &[0, 1, 0]], 3);
        assert_eq!(s.basis_vectors(), vec![v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let empty = Subspace::canonicalize(&[], 3).unwrap();
        assert_eq!(empty.dim(), 0);
        assert_eq!(empty, Subspace::zero(3));
        assert_eq!(span(&[&[2, 2, 0]], 3).basis_vectors(), vec![v(&[1, 1, 0])]);
    }

    #[test]
    fn canonicalize_rejects_bad_length() {
        assert!(matches!(
            Subspace::canonicalize(&[v(&[1, 0])], 3),
            Err(Error::Malformed(_))
        ));
    }

    #[test]
    fn sum_examples() {
        let e1 = span(&[&[1, 0, 0]], 3);
        let e2 = span(&[&[0, 1, 0]], 3);
        assert_eq!(e1.sum(&e2).unwrap(), span(&[&[1, 0, 0], &[0, 1, 0]], 3));
        assert_eq!(e1.sum(&e1).unwrap(), e1);
        let vv = span(&[&[1, 1, 0], &[0, 1, 0]], 3);
        let e3 = span(&[&[0, 0, 1]], 3);
        assert!(vv.sum(&e3).unwrap().is_full());
        assert!(e1.sum(&Subspace::zero(2)).is_err());
    }

    #[test]
    fn intersect_examples() {
        let a = span(&[&[1, 0, 0], &[0, 1, 0]], 3);
        let b = span(&[&[0, 1, 0], &[0, 0, 1]], 3);
        assert_eq!(a.intersect(&b).unwrap(), span(&[&[0, 1, 0]], 3));
        assert_eq!(a.intersect(&a).unwrap(), a);
        let vv = span(&[&[1, 1, 0], &[0, 1, 0]], 3);
        let e3 = span(&[&[0, 0, 1]], 3);
        assert!(vv.intersect(&e3).unwrap().is_zero());
        assert!(a.intersect(&Subspace::zero(4)).is_err());
    }

    #[test]
    fn contains_examples() {
        let a = span(&[&[1, 0, 0], &[0, 1, 0]], 3);
        assert!(a.contains(&v(&[1, 1, 0])).unwrap());
        assert!(Subspace::zero(3).contains(&v(&[0, 0, 0])).unwrap());
        let vv = span(&[&[1, 1, 0], &[0, 1, 0]], 3);
        assert!(!vv.contains(&v(&[0, 0, 1])).unwrap());
        assert!(a.contains(&v(&[1, 0])).is_err());
    }

    #[test]
    fn coordinates_roundtrip() {
        let s = span(&[&[1, 2, 0], &[0, 1, 1]], 3);
        let w = v(&[2, 3, -1]);
        let c = s.coordinates(&w).unwrap().unwrap();
        assert_eq!(s.combine(&c).unwrap(), w);
        assert!(s.coordinates(&v(&[0, 0, 1])).unwrap().is_none());
    }

    #[test]
    fn display() {
        assert_eq!(span(&[&[1, 1, 0], &[0, 1, 0]], 3).to_string(), "span{e1, e2}");
        assert_eq!(Subspace::zero(2).to_string(), "{0}");
    }
}
