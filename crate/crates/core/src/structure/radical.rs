use crate::algebra::BolAlgebra;
use crate::error::{Error, Result};
use crate::ideals::SeriesReport;
use crate::linalg::Subspace;

use super::lattice::enumerate_ideals;

/// The weak radical together with the evidence it was built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadicalCertificate {
    pub radical: Subspace,
    /// Nonzero weakly solvable ideals from the lattice whose sum is the radical.
    pub summands: Vec<Subspace>,
    /// Weak derived series of the radical itself.
    pub series: SeriesReport,
    /// The radical search on `V/RV` found no nonzero weakly solvable ideal.
    pub quotient_semisimple: bool,
    pub quotient_dim: usize,
    /// Inherited from the ideal lattice: every ideal was considered.
    pub exhaustive: bool,
}

/// Sum of all weakly solvable ideals found by [`enumerate_ideals`], verified
/// to be a weakly solvable ideal itself.
pub fn weak_radical(v: &BolAlgebra) -> Result<RadicalCertificate> {
    let lattice = enumerate_ideals(v)?;
    let mut summands = Vec::new();
    let mut radical = Subspace::zero(v.dim());
    for ideal in &lattice.ideals {
        if !ideal.is_zero() && v.weak_derived_series(ideal)?.weakly_solvable {
            radical = radical.sum(ideal)?;
            summands.push(ideal.clone());
        }
    }

    if let Some(condition) = v.ideal_violation(&radical)? {
        return Err(Error::StructuralAnomaly(format!(
            "sum {radical} of weakly solvable ideals {} is not an ideal ({condition} fails)",
            list(&summands)
        )));
    }
    let series = v.weak_derived_series(&radical)?;
    if !series.weakly_solvable {
        return Err(Error::StructuralAnomaly(format!(
            "sum {radical} of weakly solvable ideals {} is not weakly solvable (series stabilizes at {})",
            list(&summands),
            series.terminal()
        )));
    }

    let (quotient, _) = v.quotient(&radical)?;
    let quotient_semisimple = if radical.is_zero() {
        true
    } else {
        match weak_radical(&quotient) {
            Ok(cert) => cert.radical.is_zero(),
            Err(Error::StructuralAnomaly(_)) => false,
            Err(e) => return Err(e),
        }
    };

    Ok(RadicalCertificate {
        radical,
        summands,
        series,
        quotient_semisimple,
        quotient_dim: quotient.dim(),
        exhaustive: lattice.complete,
    })
}

/// `RV = 0`.
pub fn is_semisimple(v: &BolAlgebra) -> Result<bool> {
    Ok(weak_radical(v)?.radical.is_zero())
}

fn list(spaces: &[Subspace]) -> String {
    let parts: Vec<String> = spaces.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn type_i_radical_is_everything() {
        let cert = weak_radical(&catalog::type_i()).unwrap();
        assert!(cert.radical.is_full());
        assert!(cert.quotient_semisimple);
        assert_eq!(cert.quotient_dim, 0);
        assert!(cert.exhaustive);
        assert_eq!(cert.series.solvable_at(), Some(1));
        for s in &cert.summands {
            assert!(cert.radical.contains_subspace(s).unwrap());
        }
        assert!(!is_semisimple(&catalog::type_i()).unwrap());
    }

    #[test]
    fn sl2_is_semisimple() {
        let cert = weak_radical(&catalog::sl2_bol()).unwrap();
        assert!(cert.radical.is_zero());
        assert!(is_semisimple(&catalog::sl2_bol()).unwrap());
    }

    #[test]
    fn zero_algebra_is_not_semisimple() {
        assert!(!is_semisimple(&BolAlgebra::zero(1)).unwrap());
        assert!(weak_radical(&BolAlgebra::zero(2)).unwrap().radical.is_full());
    }

    #[test]
    fn direct_sum_radical_is_solvable_block() {
        let v = catalog::sl2_bol().direct_sum(&catalog::type_i());
        let cert = weak_radical(&v).unwrap();
        assert_eq!(cert.radical, Subspace::coordinate(&[3, 4, 5], 6).unwrap());
        assert!(cert.quotient_semisimple);
        assert!(!cert.exhaustive);
        assert_eq!(cert.quotient_dim, 3);
    }
}
