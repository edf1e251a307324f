//! Rational eigenvalues of small matrices.
//!
//! The characteristic polynomial is computed exactly (Faddeev-LeVerrier,
//! valid over any field of characteristic zero) and its rational roots are
//! found with the rational root theorem.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::Matrix;
use super::scalar::Scalar;
use super::subspace::Subspace;
use crate::error::{Error, Result};

/// Largest matrix size accepted by [`rational_eigenlines`].
pub const MAX_EIGEN_DIM: usize = 4;

/// Rational part of a spectrum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalSpectrum {
    /// Distinct rational eigenvalues in increasing order, with full eigenspaces.
    pub lines: Vec<(Scalar, Subspace)>,
    /// Number of roots of the characteristic polynomial (with multiplicity,
    /// over the complex numbers) that are not rational.
    pub irrational_count: usize,
}

/// Coefficients of `det(t I - M)`, lowest degree first; the last entry is 1.
pub fn characteristic_polynomial(m: &Matrix) -> Result<Vec<Scalar>> {
    if !m.is_square() {
        return Err(Error::Malformed(format!("{}x{} matrix is not square", m.rows(), m.cols())));
    }
    let n = m.rows();
    let mut coeffs = vec![Scalar::zero(); n + 1];
    coeffs[n] = Scalar::one();
    let mut acc = Matrix::zeros(n, n);
    for k in 1..=n {
        // acc_k = M acc_{k-1} + c_{n-k+1} I
        let prev = m.mul(&acc)?;
        acc = prev.shift_diagonal(&-coeffs[n - k + 1].clone());
        let product = m.mul(&acc)?;
        let trace = (0..n).fold(Scalar::zero(), |t, i| t + product.get(i, i));
        coeffs[n - k] = -trace / Scalar::from_integer(BigInt::from(k));
    }
    Ok(coeffs)
}

/// Distinct rational roots of a nonzero polynomial (coefficients lowest
/// degree first) with their multiplicities, in increasing order.
pub fn rational_roots(coeffs: &[Scalar]) -> Vec<(Scalar, usize)> {
    let mut poly = integer_primitive(coeffs);
    while poly.last().is_some_and(Zero::is_zero) {
        poly.pop();
    }
    if poly.len() <= 1 {
        return Vec::new();
    }
    let mut roots = Vec::new();
    let zero_mult = poly.iter().take_while(|c| c.is_zero()).count();
    if zero_mult > 0 {
        roots.push((Scalar::zero(), zero_mult));
        poly.drain(..zero_mult);
    }
    if poly.len() > 1 {
        let lead = poly.last().expect("nonempty").abs();
        let constant = poly[0].abs();
        let numerators = divisors(&constant);
        let denominators = divisors(&lead);
        let mut candidates: Vec<Scalar> = Vec::new();
        for p in &numerators {
            for q in &denominators {
                let r = Scalar::new(p.clone(), q.clone());
                candidates.push(r.clone());
                candidates.push(-r);
            }
        }
        candidates.sort();
        candidates.dedup();
        let mut current: Vec<Scalar> = poly.iter().map(|c| Scalar::from_integer(c.clone())).collect();
        for r in candidates {
            let mut mult = 0;
            while current.len() > 1 {
                let (quotient, remainder) = synthetic_division(&current, &r);
                if !remainder.is_zero() {
                    break;
                }
                current = quotient;
                mult += 1;
            }
            if mult > 0 {
                roots.push((r, mult));
            }
        }
    }
    roots.sort_by(|a, b| a.0.cmp(&b.0));
    roots
}

/// Rational eigenvalues of a square matrix of size at most [`MAX_EIGEN_DIM`]
/// together with their eigenspaces.
pub fn rational_eigenlines(m: &Matrix) -> Result<RationalSpectrum> {
    if !m.is_square() {
        return Err(Error::Malformed(format!("{}x{} matrix is not square", m.rows(), m.cols())));
    }
    let n = m.rows();
    if n > MAX_EIGEN_DIM {
        return Err(Error::UnsupportedSize { size: n, limit: MAX_EIGEN_DIM });
    }
    let charpoly = characteristic_polynomial(m)?;
    let roots = rational_roots(&charpoly);
    let rational_mult: usize = roots.iter().map(|(_, k)| k).sum();
    let lines = roots
        .into_iter()
        .map(|(value, _)| {
            let kernel = m.shift_diagonal(&value).kernel();
            (value, Subspace::from_rows_unchecked(kernel, n))
        })
        .collect();
    Ok(RationalSpectrum {
        lines,
        irrational_count: n - rational_mult,
    })
}

/// Divides by `(t - r)`; returns quotient and remainder.
fn synthetic_division(coeffs: &[Scalar], r: &Scalar) -> (Vec<Scalar>, Scalar) {
    let n = coeffs.len();
    let mut quotient = vec![Scalar::zero(); n - 1];
    let mut carry = Scalar::zero();
    for i in (0..n).rev() {
        let value = &coeffs[i] + &carry * r;
        if i == 0 {
            return (quotient, value);
        }
        quotient[i - 1] = value.clone();
        carry = value;
    }
    unreachable!("loop returns at i == 0")
}

/// Scales rational coefficients to coprime integers.
fn integer_primitive(coeffs: &[Scalar]) -> Vec<BigInt> {
    let lcm = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() || content.is_one() {
        ints
    } else {
        ints.into_iter().map(|c| c / &content).collect()
    }
}

/// Positive divisors of a positive integer, by trial division.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            let other = n / &d;
            if other != d {
                large.push(other);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::{frac, int, Vector};

    fn m(rows: &[&[i64]]) -> Matrix {
        let cols = rows.len();
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect(), cols)
            .unwrap()
    }

    #[test]
    fn identity_has_full_eigenspace() {
        let s = rational_eigenlines(&Matrix::identity(3)).unwrap();
        assert_eq!(s.lines, vec![(int(1), Subspace::full(3))]);
        assert_eq!(s.irrational_count, 0);
    }

    #[test]
    fn diagonal_matrix() {
        let s = rational_eigenlines(&m(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 2]])).unwrap();
        assert_eq!(s.lines.len(), 2);
        assert_eq!(s.lines[0], (int(1), Subspace::coordinate(&[0], 3).unwrap()));
        assert_eq!(s.lines[1], (int(2), Subspace::coordinate(&[1, 2], 3).unwrap()));
    }

    #[test]
    fn companion_of_t2_minus_2_has_no_rational_roots() {
        // t^2 - 2: companion [[0, 2], [1, 0]]
        let s = rational_eigenlines(&m(&[&[0, 2], &[1, 0]])).unwrap();
        assert!(s.lines.is_empty());
        assert_eq!(s.irrational_count, 2);
    }

    #[test]
    fn size_cap() {
        assert!(matches!(
            rational_eigenlines(&Matrix::identity(5)),
            Err(Error::UnsupportedSize { size: 5, limit: 4 })
        ));
        assert!(rational_eigenlines(&Matrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn charpoly_matches_determinant_expansion() {
        // [[2, 1], [1, 3]] -> t^2 - 5t + 5
        let p = characteristic_polynomial(&m(&[&[2, 1], &[1, 3]])).unwrap();
        assert_eq!(p, vec![int(5), int(-5), int(1)]);
    }

    #[test]
    fn roots_with_fractions_and_multiplicity() {
        // (t - 1/2)^2 (t + 3) t = t^4 + 2t^3 - 11/4 t^2 + 3/4 t
        let p: Vector = vec![int(0), frac(3, 4), frac(-11, 4), int(2), int(1)];
        assert_eq!(
            rational_roots(&p),
            vec![(int(-3), 1), (int(0), 1), (frac(1, 2), 2)]
        );
    }

    #[test]
    fn eigenvectors_satisfy_definition() {
        let a = m(&[&[2, 0, 0, 1], &[0, 3, 0, 0], &[0, 0, 2, 0], &[0, 0, 0, 2]]);
        let s = rational_eigenlines(&a).unwrap();
        for (value, space) in &s.lines {
            for w in space.basis_vectors() {
                let aw = a.mul_vec(&w).unwrap();
                let lw: Vector = w.iter().map(|x| x * value).collect();
                assert_eq!(aw, lw);
            }
        }
        assert_eq!(s.lines[0].1.dim(), 2);
    }
}
