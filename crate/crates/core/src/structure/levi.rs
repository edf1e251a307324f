//! Splittings `V = S ⊕ R` with `S` a subalgebra complementing an ideal `R`.
//!
//! Every complement of `R` is the graph of a linear map `φ` from the
//! coordinate complement `C` (the span of the unit vectors at the non-pivot
//! columns of `R`) into `R`. The complement search tries `φ = 0` first, then
//! solves the closure equations for `φ` exactly when `dim C <= 2`, and
//! otherwise scans a small rational grid.

use std::fmt;

use num_traits::Zero;

use crate::algebra::{BolAlgebra, LinearMap};
use crate::axioms::check_axioms;
use crate::error::{Error, Result};
use crate::linalg::scalar::{frac, int, unit_vector};
use crate::linalg::{Matrix, Scalar, Subspace, Vector};

use super::poly::{solve, Poly, Solution};
use super::radical::weak_radical;

/// Numerators of the grid values for `φ` entries.
pub const GRID_NUMERATORS: [i64; 5] = [-2, -1, 0, 1, 2];
/// Denominators applied to [`GRID_NUMERATORS`].
pub const GRID_DENOMINATORS: [i64; 2] = [1, 2];
/// Maximum number of grid candidates examined.
pub const GRID_CANDIDATE_LIMIT: usize = 50_000;
/// Largest coordinate complement handled by the exact solver.
pub const SYMBOLIC_MAX_CODIM: usize = 2;
const SOLVER_NODE_BUDGET: usize = 20_000;

/// Outcome of the four splitting checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LeviChecks {
    pub subalgebra: bool,
    pub trivial_intersection: bool,
    pub full_sum: bool,
    /// The projection `S -> V/R` is bijective and carries the structure
    /// constants of `S` onto those of `V/R`.
    pub preserves_operations: bool,
}

impl LeviChecks {
    pub fn all(&self) -> bool {
        self.subalgebra && self.trivial_intersection && self.full_sum && self.preserves_operations
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LeviMethod {
    /// `S` was given by the caller.
    Supplied,
    CoordinateComplement,
    Symbolic,
    Grid,
}

impl fmt::Display for LeviMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LeviMethod::Supplied => "supplied",
            LeviMethod::CoordinateComplement => "coordinate complement",
            LeviMethod::Symbolic => "exact closure equations",
            LeviMethod::Grid => "grid search",
        })
    }
}

/// Bounds used by the grid fallback, recorded for reproducibility.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridBounds {
    pub numerators: Vec<i64>,
    pub denominators: Vec<i64>,
    pub candidate_limit: usize,
}

impl Default for GridBounds {
    fn default() -> Self {
        Self {
            numerators: GRID_NUMERATORS.to_vec(),
            denominators: GRID_DENOMINATORS.to_vec(),
            candidate_limit: GRID_CANDIDATE_LIMIT,
        }
    }
}

impl GridBounds {
    /// Distinct grid values, zero first and then by magnitude.
    pub fn values(&self) -> Vec<Scalar> {
        let mut values: Vec<Scalar> = Vec::new();
        for &d in &self.denominators {
            for &n in &self.numerators {
                let q = frac(n, d);
                if !values.contains(&q) {
                    values.push(q);
                }
            }
        }
        values.sort_by(|a, b| {
            let (aa, ba) = (if a < &Scalar::zero() { -a } else { a.clone() }, if b < &Scalar::zero() { -b } else { b.clone() });
            aa.cmp(&ba).then(b.cmp(a))
        });
        values
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeviResult {
    pub radical: Subspace,
    pub complement: Subspace,
    pub found: bool,
    pub checks: LeviChecks,
    /// Coordinates of `S` (canonical basis) to coordinates of `V/R`, when bijective.
    pub isomorphism: Option<LinearMap>,
    pub method: LeviMethod,
    pub grid: GridBounds,
    pub diagnosis: Option<String>,
}

impl LeviResult {
    /// `(dim V, dim RV, dim S)` for the dimension identity.
    pub fn dimension_identity(&self) -> (usize, usize, usize) {
        (self.radical.ambient_dim(), self.radical.dim(), self.complement.dim())
    }
}

/// Runs the splitting checks for a candidate subalgebra `s` against the ideal `r`.
pub fn verify_levi(v: &BolAlgebra, s: &Subspace, r: &Subspace) -> Result<LeviResult> {
    v.require_ideal(r)?;
    let subalgebra = v.is_subalgebra(s)?;
    let trivial_intersection = s.intersect(r)?.is_zero();
    let full_sum = s.sum(r)?.is_full();
    let (isomorphism, preserves_operations) = transport_check(v, s, r)?;
    if subalgebra && trivial_intersection && full_sum {
        assert!(
            preserves_operations,
            "projection of the complement {s} onto V/{r} must be an isomorphism"
        );
    }
    let checks = LeviChecks { subalgebra, trivial_intersection, full_sum, preserves_operations };
    Ok(LeviResult {
        radical: r.clone(),
        complement: s.clone(),
        found: checks.all(),
        checks,
        isomorphism,
        method: LeviMethod::Supplied,
        grid: GridBounds::default(),
        diagnosis: None,
    })
}

/// Compares the structure constants of `s` (in its canonical basis) with
/// those of `V/R` through the projection.
fn transport_check(v: &BolAlgebra, s: &Subspace, r: &Subspace) -> Result<(Option<LinearMap>, bool)> {
    let (quotient, projection) = v.quotient(r)?;
    let basis = s.basis_vectors();
    let images: Vec<Vector> = basis
        .iter()
        .map(|b| projection.apply(b))
        .collect::<Result<_>>()?;
    let psi = Matrix::from_columns(&images, quotient.dim())?;
    if basis.len() != quotient.dim() || psi.rank() != basis.len() {
        return Ok((None, false));
    }
    let psi_map = LinearMap::new(psi);
    let transported = |w: &Vector| -> Result<Option<Vector>> {
        match s.coordinates(w)? {
            Some(c) => Ok(Some(psi_map.apply(&c)?)),
            None => Ok(None),
        }
    };
    for (a, x) in basis.iter().enumerate() {
        for (b, y) in basis.iter().enumerate() {
            match transported(&v.mul(x, y))? {
                Some(img) if img == quotient.mul(&images[a], &images[b]) => {}
                _ => return Ok((Some(psi_map), false)),
            }
            for (c, z) in basis.iter().enumerate() {
                match transported(&v.tri(x, y, z))? {
                    Some(img) if img == quotient.tri(&images[a], &images[b], &images[c]) => {}
                    _ => return Ok((Some(psi_map), false)),
                }
            }
        }
    }
    Ok((Some(psi_map), true))
}

/// Searches for a subalgebra complementing the weak radical.
pub fn levi_complement(v: &BolAlgebra) -> Result<LeviResult> {
    let report = check_axioms(v);
    if !report.all_pass() {
        return Err(Error::InvalidAlgebra(format!(
            "{}; a splitting presupposes a Bol algebra",
            report.summary()
        )));
    }
    let radical = weak_radical(v)?.radical;
    complement_of(v, &radical)
}

/// Complement search against a given ideal `r`.
pub fn complement_of(v: &BolAlgebra, r: &Subspace) -> Result<LeviResult> {
    v.require_ideal(r)?;
    let n = v.dim();
    let free = r.free_columns();
    let grid = GridBounds::default();

    let coordinate = Subspace::coordinate(&free, n)?;
    let mut first = verify_levi(v, &coordinate, r)?;
    if first.found {
        first.method = LeviMethod::CoordinateComplement;
        return Ok(first);
    }

    let rho = r.basis_vectors();
    let nvars = free.len() * rho.len();
    let graph = |point: &[Scalar]| -> Subspace {
        let rows: Vec<Vector> = free
            .iter()
            .enumerate()
            .map(|(a, &c)| {
                let mut s = unit_vector(n, c);
                for (t, r_t) in rho.iter().enumerate() {
                    crate::linalg::scalar::axpy(&mut s, &point[a * rho.len() + t], r_t);
                }
                s
            })
            .collect();
        Subspace::from_rows_unchecked(rows, n)
    };

    let not_found = |diagnosis: String, method: LeviMethod| LeviResult {
        method,
        diagnosis: Some(diagnosis),
        grid: grid.clone(),
        ..first.clone()
    };

    if free.len() <= SYMBOLIC_MAX_CODIM {
        let equations = closure_equations(v, r, &free);
        match solve(&equations, nvars, &grid.values(), SOLVER_NODE_BUDGET) {
            Solution::Found(point) => {
                let s = graph(&point);
                let mut result = verify_levi(v, &s, r)?;
                result.method = LeviMethod::Symbolic;
                if !result.found {
                    result.diagnosis = Some("solver point failed verification".into());
                }
                return Ok(result);
            }
            Solution::Infeasible => {
                return Ok(not_found(
                    "closure equations have no rational solution: no subalgebra complements the radical".into(),
                    LeviMethod::Symbolic,
                ))
            }
            Solution::Unknown => {
                return Ok(not_found(
                    "no solution found; nonlinear branches were explored on the grid only".into(),
                    LeviMethod::Symbolic,
                ))
            }
        }
    }

    let values = grid.values();
    let mut index = vec![0usize; nvars];
    for _ in 0..grid.candidate_limit {
        let point: Vec<Scalar> = index.iter().map(|&i| values[i].clone()).collect();
        let s = graph(&point);
        if v.is_subalgebra(&s)? {
            let mut result = verify_levi(v, &s, r)?;
            if result.found {
                result.method = LeviMethod::Grid;
                result.grid = grid.clone();
                return Ok(result);
            }
        }
        if !advance(&mut index, values.len()) {
            return Ok(not_found("grid exhausted without a complementary subalgebra".into(), LeviMethod::Grid));
        }
    }
    Ok(not_found(
        format!("grid candidate limit {} reached without a complementary subalgebra", grid.candidate_limit),
        LeviMethod::Grid,
    ))
}

fn advance(index: &mut [usize], base: usize) -> bool {
    for slot in index.iter_mut().rev() {
        *slot += 1;
        if *slot < base {
            return true;
        }
        *slot = 0;
    }
    false
}

/// Membership conditions for the products of the graph basis
/// `s_a = e_{c_a} + Σ_t x_{a,t} ρ_t` to lie in the graph.
///
/// A vector `w` splits as `Σ_a α_a e_{c_a} + Σ_t β_t ρ_t` with
/// `β_t = w[pivot_t]`; it lies in the graph iff `β_t = Σ_a α_a x_{a,t}`.
fn closure_equations(v: &BolAlgebra, r: &Subspace, free: &[usize]) -> Vec<Poly> {
    let n = v.dim();
    let rho = r.basis_vectors();
    let pivots = r.pivots();
    let (k, m) = (free.len(), rho.len());
    let nvars = k * m;
    let x = |a: usize, t: usize| Poly::var(nvars, a * m + t);

    let generators: Vec<Vec<Poly>> = (0..k)
        .map(|a| {
            (0..n)
                .map(|i| {
                    let mut p = Poly::constant(nvars, if i == free[a] { int(1) } else { Scalar::zero() });
                    for (t, r_t) in rho.iter().enumerate() {
                        if !r_t[i].is_zero() {
                            p = p.add(&x(a, t).scale(&r_t[i]));
                        }
                    }
                    p
                })
                .collect()
        })
        .collect();

    let mut products = Vec::new();
    for a in 0..k {
        for b in (a + 1)..k {
            products.push(poly_mul(v, &generators[a], &generators[b]));
        }
        for b in 0..k {
            for c in 0..k {
                products.push(poly_tri(v, &generators[a], &generators[b], &generators[c]));
            }
        }
    }

    let mut equations = Vec::new();
    for w in &products {
        // α_a = w[c_a] - Σ_t β_t ρ_t[c_a]
        let beta: Vec<&Poly> = pivots.iter().map(|&p| &w[p]).collect();
        let alpha: Vec<Poly> = free
            .iter()
            .map(|&c| {
                let mut acc = w[c].clone();
                for (t, r_t) in rho.iter().enumerate() {
                    if !r_t[c].is_zero() {
                        acc = acc.sub(&beta[t].scale(&r_t[c]));
                    }
                }
                acc
            })
            .collect();
        for t in 0..m {
            let mut eq = beta[t].clone();
            for (a, alpha_a) in alpha.iter().enumerate() {
                eq = eq.sub(&alpha_a.mul(&x(a, t)));
            }
            if !eq.is_zero() {
                equations.push(eq);
            }
        }
    }
    equations
}

fn poly_mul(v: &BolAlgebra, x: &[Poly], y: &[Poly]) -> Vec<Poly> {
    let n = v.dim();
    let nvars = x.first().map_or(0, Poly::nvars);
    let mut out = vec![Poly::zero(nvars); n];
    for j in 0..n {
        if x[j].is_zero() {
            continue;
        }
        for k in 0..n {
            if y[k].is_zero() {
                continue;
            }
            let coeff = x[j].mul(&y[k]);
            for (i, t) in v.basis_product(j, k).iter().enumerate() {
                if !t.is_zero() {
                    out[i] = out[i].add(&coeff.scale(t));
                }
            }
        }
    }
    out
}

fn poly_tri(v: &BolAlgebra, x: &[Poly], y: &[Poly], z: &[Poly]) -> Vec<Poly> {
    let n = v.dim();
    let nvars = x.first().map_or(0, Poly::nvars);
    let mut out = vec![Poly::zero(nvars); n];
    for j in 0..n {
        if x[j].is_zero() {
            continue;
        }
        for k in 0..n {
            if y[k].is_zero() {
                continue;
            }
            let xy = x[j].mul(&y[k]);
            for l in 0..n {
                if z[l].is_zero() {
                    continue;
                }
                let slice = v.basis_triple(j, k, l);
                if slice.iter().all(Zero::is_zero) {
                    continue;
                }
                let coeff = xy.mul(&z[l]);
                for (i, t) in slice.iter().enumerate() {
                    if !t.is_zero() {
                        out[i] = out[i].add(&coeff.scale(t));
                    }
                }
            }
        }
    }
    out
}


#[cfg(test)]
mod behaviour {
    use super::*;
    use crate::catalog;

    #[test]
    fn degenerate_split_of_type_i() {
        let v = catalog::type_i();
        let r = verify_levi(&v, &Subspace::zero(3), &Subspace::full(3)).unwrap();
        assert!(r.found);
        let found = levi_complement(&v).unwrap();
        assert!(found.found);
        assert!(found.complement.is_zero());
        assert_eq!(found.dimension_identity(), (3, 3, 0));
    }

    #[test]
    fn published_split_of_type_i() {
        let v = catalog::type_i();
        let s = Subspace::coordinate(&[2], 3).unwrap();
        let r = v.subspace_product(&Subspace::full(3), &Subspace::full(3)).unwrap();
        let result = verify_levi(&v, &s, &r).unwrap();
        assert!(result.checks.subalgebra && result.checks.trivial_intersection && result.checks.full_sum);
        assert!(result.found);
    }

    #[test]
    fn non_ideal_is_a_precondition_error() {
        let v = catalog::type_i();
        let s = Subspace::coordinate(&[0], 3).unwrap();
        let r = Subspace::coordinate(&[2], 3).unwrap();
        assert!(matches!(verify_levi(&v, &s, &r), Err(Error::Precondition(_))));
    }

    #[test]
    fn direct_sum_splits_at_sl2_block() {
        let v = catalog::sl2_bol().direct_sum(&catalog::type_i());
        let result = levi_complement(&v).unwrap();
        assert!(result.found);
        assert_eq!(result.method, LeviMethod::CoordinateComplement);
        assert_eq!(result.complement, Subspace::coordinate(&[0, 1, 2], 6).unwrap());
        assert_eq!(result.dimension_identity(), (6, 3, 3));
    }

    #[test]
    fn type_iv_is_refused() {
        let v = catalog::type_iv(&int(0), &int(0));
        assert!(matches!(levi_complement(&v), Err(Error::InvalidAlgebra(_))));
    }

    #[test]
    fn tilted_complement_found_on_grid() {
        // sl2 ⊕ zero line, written in a basis where the sl2 block is not a
        // coordinate subspace.
        let v = catalog::sl2_bol().direct_sum(&BolAlgebra::zero(1));
        let p = Matrix::from_rows(
            vec![
                vec![int(1), int(0), int(0), int(0)],
                vec![int(0), int(1), int(0), int(0)],
                vec![int(0), int(0), int(1), int(0)],
                vec![int(1), int(1), int(1), int(1)],
            ],
            4,
        )
        .unwrap();
        let w = v.change_basis(&p).unwrap();
        let result = levi_complement(&w).unwrap();
        assert!(result.found, "{:?}", result.diagnosis);
        assert_eq!(result.radical.dim(), 1);
        assert_eq!(result.complement.dim(), 3);
        assert_eq!(result.method, LeviMethod::Grid);
    }

    #[test]
    fn codimension_two_uses_closure_equations() {
        let v = catalog::get_plain("nonabelian2-bol").unwrap().algebra.direct_sum(&BolAlgebra::zero(1));
        let p = Matrix::from_rows(
            vec![
                vec![int(1), int(0), int(0)],
                vec![int(0), int(1), int(0)],
                vec![int(1), int(1), int(1)],
            ],
            3,
        )
        .unwrap();
        let w = v.change_basis(&p).unwrap();
        let line = p.inverse().unwrap().mul_vec(&unit_vector(3, 2)).unwrap();
        let r = Subspace::canonicalize(&[line], 3).unwrap();
        assert!(w.is_ideal(&r).unwrap());
        let result = complement_of(&w, &r).unwrap();
        assert!(result.found);
        assert_eq!(result.method, LeviMethod::Symbolic);
        assert!(w.is_subalgebra(&result.complement).unwrap());
        assert_eq!(result.dimension_identity(), (3, 1, 2));
    }
}
