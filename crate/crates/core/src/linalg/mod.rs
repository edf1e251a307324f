//! Exact linear algebra over the rationals.

pub mod eigen;
pub mod matrix;
pub mod scalar;
pub mod subspace;

pub use eigen::{characteristic_polynomial, rational_eigenlines, rational_roots, RationalSpectrum};
pub use matrix::Matrix;
pub use scalar::{format_scalar, parse_scalar, Scalar, Vector};
pub use subspace::Subspace;
