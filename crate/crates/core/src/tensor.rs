//! Dense structure-constant tensors.
//!
//! Both tensors keep the output (upper) index innermost so that the image of
//! a tuple of basis vectors is a contiguous slice.

use num_traits::Zero;

use crate::linalg::Scalar;

/// `T^i_jk` for `i, j, k < n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tensor3 {
    n: usize,
    data: Vec<Scalar>,
}

impl Tensor3 {
    pub fn zeros(n: usize) -> Self {
        Self { n, data: vec![Scalar::zero(); n * n * n] }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    fn offset(&self, j: usize, k: usize) -> usize {
        (j * self.n + k) * self.n
    }

    /// `T^i_jk`.
    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.data[self.offset(j, k) + i]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, value: Scalar) {
        let o = self.offset(j, k);
        self.data[o + i] = value;
    }

    /// The vector `Σ_i T^i_jk e_i`.
    pub fn slice(&self, j: usize, k: usize) -> &[Scalar] {
        let o = self.offset(j, k);
        &self.data[o..o + self.n]
    }

    pub fn set_slice(&mut self, j: usize, k: usize, values: &[Scalar]) {
        let o = self.offset(j, k);
        self.data[o..o + self.n].clone_from_slice(values);
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// First `(j, k)` in lexicographic order with `T_jk + T_kj != 0`.
    pub fn first_asymmetry(&self) -> Option<(usize, usize)> {
        for j in 0..self.n {
            for k in j..self.n {
                let bad = (0..self.n).any(|i| !(self.get(i, j, k) + self.get(i, k, j)).is_zero());
                if bad {
                    return Some((j, k));
                }
            }
        }
        None
    }
}

/// `A^i_jkl` for `i, j, k, l < n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tensor4 {
    n: usize,
    data: Vec<Scalar>,
}

impl Tensor4 {
    pub fn zeros(n: usize) -> Self {
        Self { n, data: vec![Scalar::zero(); n * n * n * n] }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    fn offset(&self, j: usize, k: usize, l: usize) -> usize {
        ((j * self.n + k) * self.n + l) * self.n
    }

    /// `A^i_jkl`.
    pub fn get(&self, i: usize, j: usize, k: usize, l: usize) -> &Scalar {
        &self.data[self.offset(j, k, l) + i]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, l: usize, value: Scalar) {
        let o = self.offset(j, k, l);
        self.data[o + i] = value;
    }

    pub fn slice(&self, j: usize, k: usize, l: usize) -> &[Scalar] {
        let o = self.offset(j, k, l);
        &self.data[o..o + self.n]
    }

    pub fn set_slice(&mut self, j: usize, k: usize, l: usize, values: &[Scalar]) {
        let o = self.offset(j, k, l);
        self.data[o..o + self.n].clone_from_slice(values);
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// First `(j, k, l)` with `A_jkl + A_kjl != 0`.
    pub fn first_asymmetry_in_first_pair(&self) -> Option<(usize, usize, usize)> {
        for j in 0..self.n {
            for k in j..self.n {
                for l in 0..self.n {
                    let bad = (0..self.n)
                        .any(|i| !(self.get(i, j, k, l) + self.get(i, k, j, l)).is_zero());
                    if bad {
                        return Some((j, k, l));
                    }
                }
            }
        }
        None
    }
}
