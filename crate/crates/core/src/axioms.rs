//! The Bol algebra identities and an exhaustive basis-tuple checker.
//!
//! Every identity is multilinear, so it holds for all vectors as soon as it
//! holds on all tuples of basis vectors.

use std::fmt;

use num_traits::Zero;

use crate::algebra::BolAlgebra;
use crate::error::{check_len, Error, Result};
use crate::linalg::scalar::{add_vectors, format_vector, is_zero_vector, sub_vectors, unit_vector};
use crate::linalg::{Scalar, Vector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Identity {
    /// `ξ·ξ = 0`
    B1,
    /// `(ξ,η,ζ) + (η,ζ,ξ) + (ζ,ξ,η) = 0`
    B2,
    /// `(ξ,η,ζ)χ − (ξ,η,χ)ζ + (ζ,χ,ξη) − (ξ,η,ζχ) + ξη·ζχ = 0`
    B3,
    /// `(ξ,η,(ζ,χ,ω)) = ((ξ,η,ζ),χ,ω) + (ζ,(ξ,η,χ),ω) + (ζ,χ,(ξ,η,ω))`
    B4,
}

impl Identity {
    pub const ALL: [Identity; 4] = [Identity::B1, Identity::B2, Identity::B3, Identity::B4];

    /// Number of vector arguments of the identity as written.
    pub fn arity(self) -> usize {
        match self {
            Identity::B1 => 1,
            Identity::B2 => 3,
            Identity::B3 => 4,
            Identity::B4 => 5,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Identity::B1 => "B1",
            Identity::B2 => "B2",
            Identity::B3 => "B3",
            Identity::B4 => "B4",
        }
    }

    pub fn formula(self) -> &'static str {
        match self {
            Identity::B1 => "x·x = 0",
            Identity::B2 => "(x,y,z) + (y,z,x) + (z,x,y) = 0",
            Identity::B3 => "(x,y,z)·w - (x,y,w)·z + (z,w,x·y) - (x,y,z·w) + (x·y)·(z·w) = 0",
            Identity::B4 => "(x,y,(z,w,u)) = ((x,y,z),w,u) + (z,(x,y,w),u) + (z,w,(x,y,u))",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A basis tuple on which an identity does not vanish.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomFailure {
    /// 0-based basis indices; B1 uses the polarized pair `(j, k)`.
    pub indices: Vec<usize>,
    pub residual: Vector,
}

impl AxiomFailure {
    pub fn one_based(&self) -> Vec<usize> {
        self.indices.iter().map(|i| i + 1).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityVerdict {
    pub identity: Identity,
    pub failure: Option<AxiomFailure>,
}

impl IdentityVerdict {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub verdicts: Vec<IdentityVerdict>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.verdicts.iter().all(IdentityVerdict::passed)
    }

    pub fn verdict(&self, identity: Identity) -> &IdentityVerdict {
        self.verdicts
            .iter()
            .find(|v| v.identity == identity)
            .expect("report covers every identity")
    }

    pub fn failures(&self) -> impl Iterator<Item = (Identity, &AxiomFailure)> {
        self.verdicts
            .iter()
            .filter_map(|v| v.failure.as_ref().map(|f| (v.identity, f)))
    }

    /// One-line summary such as `passes B1-B4` or `fails B2, B3`.
    pub fn summary(&self) -> String {
        let failed: Vec<&str> = self.failures().map(|(id, _)| id.name()).collect();
        if failed.is_empty() {
            "passes B1-B4".to_string()
        } else {
            format!("fails {}", failed.join(", "))
        }
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.verdicts {
            match &v.failure {
                None => writeln!(f, "{}  pass  {}", v.identity, v.identity.formula())?,
                Some(fail) => {
                    let tuple: Vec<String> = fail.one_based().iter().map(|i| i.to_string()).collect();
                    writeln!(
                        f,
                        "{}  FAIL  {}  at basis tuple ({}), residual {}",
                        v.identity,
                        v.identity.formula(),
                        tuple.join(", "),
                        format_vector(&fail.residual)
                    )?
                }
            }
        }
        Ok(())
    }
}

/// Value of the left-hand side of `identity` (moved to the form `... = 0`)
/// on arbitrary vectors. `args` must hold `identity.arity()` vectors.
pub fn identity_residual(algebra: &BolAlgebra, identity: Identity, args: &[Vector]) -> Result<Vector> {
    if args.len() != identity.arity() {
        return Err(Error::Malformed(format!(
            "{} takes {} arguments, got {}",
            identity,
            identity.arity(),
            args.len()
        )));
    }
    for a in args {
        check_len(algebra.dim(), a.len())?;
    }
    Ok(residual(algebra, identity, args))
}

fn residual(v: &BolAlgebra, identity: Identity, a: &[Vector]) -> Vector {
    let mul = |x: &[Scalar], y: &[Scalar]| v.mul(x, y);
    let tri = |x: &[Scalar], y: &[Scalar], z: &[Scalar]| v.tri(x, y, z);
    match identity {
        Identity::B1 => mul(&a[0], &a[0]),
        Identity::B2 => {
            let s = add_vectors(&tri(&a[0], &a[1], &a[2]), &tri(&a[1], &a[2], &a[0]));
            add_vectors(&s, &tri(&a[2], &a[0], &a[1]))
        }
        Identity::B3 => {
            let (x, y, z, w) = (&a[0], &a[1], &a[2], &a[3]);
            let xy = mul(x, y);
            let zw = mul(z, w);
            let t1 = mul(&tri(x, y, z), w);
            let t2 = mul(&tri(x, y, w), z);
            let t3 = tri(z, w, &xy);
            let t4 = tri(x, y, &zw);
            let t5 = mul(&xy, &zw);
            let s = add_vectors(&sub_vectors(&t1, &t2), &t3);
            add_vectors(&sub_vectors(&s, &t4), &t5)
        }
        Identity::B4 => {
            let (x, y, z, w, u) = (&a[0], &a[1], &a[2], &a[3], &a[4]);
            let lhs = tri(x, y, &tri(z, w, u));
            let r1 = tri(&tri(x, y, z), w, u);
            let r2 = tri(z, &tri(x, y, w), u);
            let r3 = tri(z, w, &tri(x, y, u));
            sub_vectors(&sub_vectors(&sub_vectors(&lhs, &r1), &r2), &r3)
        }
    }
}

/// Checks every identity on all basis tuples, reporting the lexicographically
/// first failing tuple of each.
pub fn check_axioms(algebra: &BolAlgebra) -> AxiomReport {
    let verdicts = Identity::ALL
        .iter()
        .map(|&identity| IdentityVerdict {
            identity,
            failure: first_failure(algebra, identity),
        })
        .collect();
    AxiomReport { verdicts }
}

fn first_failure(v: &BolAlgebra, identity: Identity) -> Option<AxiomFailure> {
    let n = v.dim();
    if identity == Identity::B1 {
        // Antisymmetry of the tensor, the polarized form of x·x = 0.
        for j in 0..n {
            for k in j..n {
                let r = add_vectors(v.basis_product(j, k), v.basis_product(k, j));
                if !is_zero_vector(&r) {
                    return Some(AxiomFailure { indices: vec![j, k], residual: r });
                }
            }
        }
        return None;
    }
    let arity = identity.arity();
    if n == 0 {
        return None;
    }
    let basis: Vec<Vector> = (0..n).map(|i| unit_vector(n, i)).collect();
    let mut idx = vec![0usize; arity];
    loop {
        let args: Vec<Vector> = idx.iter().map(|&i| basis[i].clone()).collect();
        let r = residual(v, identity, &args);
        if r.iter().any(|x| !x.is_zero()) {
            return Some(AxiomFailure { indices: idx, residual: r });
        }
        // Odometer increment, last index fastest.
        let mut pos = arity;
        loop {
            if pos == 0 {
                return None;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < n {
                break;
            }
            idx[pos] = 0;
        }
    }
}
