//! Bol algebras from the torsion of a flat affine connection at a point.
//!
//! Given the torsion `T^i_jk` and its covariant derivative `∇_l T^i_jk` at the
//! base point, the operations are
//!
//! ```text
//! (ξ·η)^i    = T^i_jk ξ^j η^k
//! (ξ,η,τ)^i  = (∇_l T^i_jk + T^s_jk T^i_sl) ξ^j η^k τ^l
//! ```
//!
//! with the derivative index contracted against the third argument. The
//! vector fields of the connection satisfy `[X_i, X_k] = -T^j_ik X_j`; that
//! sign only matters for the commutator and is not used here.
//!
//! Flatness (`R = 0`) cannot be seen from pointwise data and is left to the
//! caller.

use num_traits::Zero;

use crate::algebra::BolAlgebra;
use crate::axioms::{check_axioms, AxiomReport};
use crate::error::{Error, Result};
use crate::linalg::Scalar;
use crate::tensor::{Tensor3, Tensor4};

/// Torsion `T^i_jk` and its derivative `DT^i_jkl = ∇_l T^i_jk` at a point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionData {
    torsion: Tensor3,
    derivative: Tensor4,
}

impl TorsionData {
    /// Validates shapes and antisymmetry of both tensors in `(j, k)`.
    pub fn new(torsion: Tensor3, derivative: Tensor4) -> Result<Self> {
        let data = Self::unchecked(torsion, derivative)?;
        if let Some((j, k, l)) = data.derivative.first_asymmetry_in_first_pair() {
            return Err(Error::Malformed(format!(
                "torsion derivative is not antisymmetric in its lower pair at (e{}, e{}; e{})",
                j + 1,
                k + 1,
                l + 1
            )));
        }
        Ok(data)
    }

    fn unchecked(torsion: Tensor3, derivative: Tensor4) -> Result<Self> {
        if torsion.dim() != derivative.dim() {
            return Err(Error::Malformed(format!(
                "torsion has dimension {} but its derivative has dimension {}",
                torsion.dim(),
                derivative.dim()
            )));
        }
        if let Some((j, k)) = torsion.first_asymmetry() {
            return Err(Error::Malformed(format!(
                "torsion is not antisymmetric at (e{}, e{})",
                j + 1,
                k + 1
            )));
        }
        Ok(Self { torsion, derivative })
    }

    pub fn zero(n: usize) -> Self {
        Self { torsion: Tensor3::zeros(n), derivative: Tensor4::zeros(n) }
    }

    pub fn dim(&self) -> usize {
        self.torsion.dim()
    }

    pub fn torsion(&self) -> &Tensor3 {
        &self.torsion
    }

    pub fn derivative(&self) -> &Tensor4 {
        &self.derivative
    }

    /// Always true for data built with [`TorsionData::new`]; data recovered by
    /// [`torsion_of`] may violate it when the ternary operation of the source
    /// algebra is not antisymmetric in its first two arguments.
    pub fn derivative_is_antisymmetric(&self) -> bool {
        self.derivative.first_asymmetry_in_first_pair().is_none()
    }
}

/// `Σ_s T^s_jk T^i_sl`.
fn torsion_square(t: &Tensor3) -> Tensor4 {
    let n = t.dim();
    let mut out = Tensor4::zeros(n);
    for j in 0..n {
        for k in 0..n {
            let jk = t.slice(j, k);
            if jk.iter().all(Zero::is_zero) {
                continue;
            }
            for l in 0..n {
                let mut v = vec![Scalar::zero(); n];
                for (s, c) in jk.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    for (i, x) in t.slice(s, l).iter().enumerate() {
                        v[i] += c * x;
                    }
                }
                out.set_slice(j, k, l, &v);
            }
        }
    }
    out
}

fn combine(a: &Tensor4, b: &Tensor4, sign: i64) -> Tensor4 {
    let n = a.dim();
    let mut out = Tensor4::zeros(n);
    for j in 0..n {
        for k in 0..n {
            for l in 0..n {
                let v: Vec<Scalar> = a
                    .slice(j, k, l)
                    .iter()
                    .zip(b.slice(j, k, l))
                    .map(|(x, y)| if sign > 0 { x + y } else { x - y })
                    .collect();
                out.set_slice(j, k, l, &v);
            }
        }
    }
    out
}

/// The candidate algebra built from `data`, with its axiom report. Failing
/// axioms do not cause an error.
pub fn from_torsion(data: &TorsionData) -> (BolAlgebra, AxiomReport) {
    let ternary = combine(&data.derivative, &torsion_square(&data.torsion), 1);
    let algebra = BolAlgebra::from_tensors(data.torsion.clone(), ternary)
        .expect("torsion data has antisymmetric torsion");
    let report = check_axioms(&algebra);
    (algebra, report)
}

/// Inverse of [`from_torsion`]: `T` is the binary tensor and `DT` the ternary
/// tensor minus `T^s_jk T^i_sl`.
pub fn torsion_of(v: &BolAlgebra) -> TorsionData {
    let derivative = combine(v.ternary(), &torsion_square(v.binary()), -1);
    TorsionData::unchecked(v.binary().clone(), derivative).expect("binary product is antisymmetric")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::Identity;
    use crate::linalg::scalar::int;
    use crate::AlgebraBuilder;

    fn type_i_torsion() -> Tensor3 {
        let mut b = AlgebraBuilder::new(3);
        b.product(0, 2, &[(0, int(1)), (1, int(1))]).unwrap();
        b.product(1, 2, &[(1, int(1))]).unwrap();
        b.build().unwrap().binary().clone()
    }

    #[test]
    fn zero_data_gives_zero_algebra() {
        let (alg, report) = from_torsion(&TorsionData::zero(3));
        assert!(alg.same_structure(&BolAlgebra::zero(3)));
        assert!(report.all_pass());
        assert_eq!(torsion_of(&BolAlgebra::zero(2)), TorsionData::zero(2));
    }

    #[test]
    fn type_i_torsion_square() {
        let data = TorsionData::new(type_i_torsion(), Tensor4::zeros(3)).unwrap();
        let (alg, _) = from_torsion(&data);
        assert_eq!(alg.binary(), &type_i_torsion());
        assert_eq!(alg.basis_triple(0, 2, 2), &[int(1), int(2), int(0)]);
    }

    #[test]
    fn type_i_recovered_derivative() {
        let mut b = AlgebraBuilder::new(3);
        b.product(0, 2, &[(0, int(1)), (1, int(1))]).unwrap();
        b.product(1, 2, &[(1, int(1))]).unwrap();
        let alg = b.build().unwrap();
        let data = torsion_of(&alg);
        assert_eq!(data.derivative().slice(0, 2, 2), &[int(-1), int(-2), int(0)]);
        assert!(from_torsion(&data).0.same_structure(&alg));
    }

    #[test]
    fn pure_derivative_becomes_ternary() {
        let mut u = Tensor4::zeros(3);
        u.set(0, 0, 1, 2, int(1));
        u.set(0, 1, 0, 2, int(-1));
        let data = TorsionData::new(Tensor3::zeros(3), u.clone()).unwrap();
        let (alg, report) = from_torsion(&data);
        assert!(alg.binary().is_zero());
        assert_eq!(alg.ternary(), &u);
        assert!(!report.verdict(Identity::B2).passed());
    }

    #[test]
    fn rejects_asymmetric_input() {
        let mut t = Tensor3::zeros(2);
        t.set(0, 0, 1, int(1));
        assert!(matches!(TorsionData::new(t, Tensor4::zeros(2)), Err(Error::Malformed(_))));
        let mut u = Tensor4::zeros(2);
        u.set(0, 0, 1, 1, int(1));
        assert!(matches!(TorsionData::new(Tensor3::zeros(2), u), Err(Error::Malformed(_))));
        assert!(TorsionData::new(Tensor3::zeros(2), Tensor4::zeros(3)).is_err());
    }
}
