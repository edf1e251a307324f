//! Enumeration of ideals.
//!
//! Ideals are exactly the subspaces invariant under the operator family
//! `{ L_{e_a} } ∪ { (·,e_a,e_b), (e_a,·,e_b), (e_a,e_b,·) }`. In dimension at
//! most three every proper nonzero ideal is a line or a hyperplane, so:
//!
//! * lines are common rational eigenvectors; refining the eigenspaces of each
//!   operator yields blocks on which every operator acts as a scalar, and every
//!   line inside a block is an ideal;
//! * a hyperplane `W` is invariant under `M` iff `W⊥` is invariant under `Mᵀ`,
//!   so hyperplane ideals are annihilators of common eigenlines of the
//!   transposed family.
//!
//! Blocks of dimension two or more describe infinitely many ideals. They are
//! kept as [`IdealFamily`] values, and the explicit list receives enough
//! members that the sum of the weakly solvable ideals is the same as over the
//! whole family (see [`solvable_core`]).

use std::fmt;

use crate::algebra::{BolAlgebra, Slot};
use crate::error::Result;
use crate::linalg::scalar::unit_vector;
use crate::linalg::{rational_eigenlines, Matrix, Subspace};

/// Largest dimension for which enumeration is certified complete.
pub const COMPLETE_ENUMERATION_MAX_DIM: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumerationMode {
    /// Exhaustive eigen-analysis; only available up to
    /// [`COMPLETE_ENUMERATION_MAX_DIM`].
    Complete,
    /// Ideal closures of characteristic subspaces.
    Heuristic,
}

/// An infinite family of ideals collapsed into one description.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdealFamily {
    /// Every line inside `block` is an ideal.
    Lines { block: Subspace },
    /// Every hyperplane `u⊥` with `u` a nonzero vector of `dual_block` is an ideal.
    Hyperplanes { dual_block: Subspace },
}

impl IdealFamily {
    pub fn contains(&self, s: &Subspace) -> bool {
        match self {
            IdealFamily::Lines { block } => {
                s.dim() == 1 && block.contains_subspace(s).unwrap_or(false)
            }
            IdealFamily::Hyperplanes { dual_block } => {
                s.dim() + 1 == s.ambient_dim()
                    && dual_block.contains_subspace(&s.annihilator()).unwrap_or(false)
            }
        }
    }
}

impl fmt::Display for IdealFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealFamily::Lines { block } => write!(f, "every line in {block} is an ideal"),
            IdealFamily::Hyperplanes { dual_block } => {
                write!(f, "every hyperplane orthogonal to a vector of {dual_block} is an ideal")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealLattice {
    pub dim: usize,
    /// Distinct ideals sorted by dimension, then canonical basis.
    pub ideals: Vec<Subspace>,
    pub families: Vec<IdealFamily>,
    /// True when every ideal of the algebra is listed or lies in a family.
    pub complete: bool,
    pub notes: Vec<String>,
}

impl IdealLattice {
    /// Listed explicitly or a member of one of the families.
    pub fn contains_ideal(&self, s: &Subspace) -> bool {
        self.ideals.contains(s) || self.families.iter().any(|f| f.contains(s))
    }
}

/// Operators whose common invariant subspaces are the ideals.
pub fn ideal_operators(v: &BolAlgebra) -> Vec<Matrix> {
    let n = v.dim();
    let mut ops = Vec::new();
    for a in 0..n {
        ops.push(v.left_multiplication(&unit_vector(n, a)).expect("basis vector has ambient length"));
    }
    for slot in [Slot::First, Slot::Second, Slot::Third] {
        for a in 0..n {
            for b in 0..n {
                ops.push(v.slot_map(slot, a, b));
            }
        }
    }
    ops.retain(|m| !m.is_zero());
    let mut unique: Vec<Matrix> = Vec::with_capacity(ops.len());
    for m in ops {
        if !unique.contains(&m) {
            unique.push(m);
        }
    }
    unique
}

/// Maximal subspaces on which every operator acts as a scalar. Any common
/// eigenvector lies in exactly one block.
pub fn common_eigen_blocks(ops: &[Matrix], n: usize) -> Result<Vec<Subspace>> {
    let mut blocks = vec![Subspace::full(n)];
    for m in ops {
        let spectrum = rational_eigenlines(m)?;
        let mut refined = Vec::new();
        for block in &blocks {
            for (_, eigenspace) in &spectrum.lines {
                let part = block.intersect(eigenspace)?;
                if !part.is_zero() {
                    refined.push(part);
                }
            }
        }
        blocks = refined;
        if blocks.is_empty() {
            break;
        }
    }
    Ok(blocks)
}

/// The lines of a scalar block `B` that are weakly solvable ideals sweep out
/// the subspace `{ v ∈ B : (e_a, b, v) = 0 for all a and all b ∈ B }`.
///
/// On `B` each map `(e_a, ·, e_k)` is a scalar `ν_ak`, hence
/// `(e_a, v, v) = ν_a(v) v` with `ν_a` linear; a line is weakly solvable iff
/// `ν_a(v) = 0` for all `a`, and `(e_a, b, v) = ν_a(v) b` turns this into the
/// linear condition above. The resulting subspace `K` satisfies `(V,K,K) = 0`.
pub fn solvable_core(v: &BolAlgebra, block: &Subspace) -> Subspace {
    let n = v.dim();
    let mut rows = Vec::new();
    for a in 0..n {
        let ea = unit_vector(n, a);
        for b in block.basis_vectors() {
            // Matrix of x ↦ (e_a, b, x); its rows constrain x.
            let columns: Vec<_> = (0..n).map(|l| v.tri(&ea, &b, &unit_vector(n, l))).collect();
            let m = Matrix::from_columns(&columns, n).expect("ambient length");
            rows.extend(m.row_vectors());
        }
    }
    let constraints = Subspace::from_rows_unchecked(rows, n);
    block
        .intersect(&constraints.annihilator())
        .expect("same ambient")
}

fn sort_key(s: &Subspace) -> (usize, Vec<Vec<crate::linalg::Scalar>>) {
    (s.dim(), s.basis_vectors())
}

fn lines_of(block: &Subspace) -> Vec<Subspace> {
    block
        .basis_vectors()
        .into_iter()
        .map(|b| Subspace::from_rows_unchecked(vec![b], block.ambient_dim()))
        .collect()
}

/// Enumerates ideals, exhaustively when `dim V <= 3` and heuristically above.
pub fn enumerate_ideals(v: &BolAlgebra) -> Result<IdealLattice> {
    if v.dim() <= COMPLETE_ENUMERATION_MAX_DIM {
        enumerate_complete(v)
    } else {
        enumerate_heuristic(v)
    }
}

/// Same as [`enumerate_ideals`] with an explicit mode; complete mode falls
/// back to heuristic mode above [`COMPLETE_ENUMERATION_MAX_DIM`].
pub fn enumerate_ideals_with(v: &BolAlgebra, mode: EnumerationMode) -> Result<IdealLattice> {
    match mode {
        EnumerationMode::Complete => enumerate_ideals(v),
        EnumerationMode::Heuristic => enumerate_heuristic(v),
    }
}

fn finish(v: &BolAlgebra, mut ideals: Vec<Subspace>, families: Vec<IdealFamily>, complete: bool, mut notes: Vec<String>) -> Result<IdealLattice> {
    let n = v.dim();
    ideals.push(Subspace::zero(n));
    ideals.push(Subspace::full(n));
    ideals.sort_by_key(sort_key);
    ideals.dedup();
    for i in &ideals {
        debug_assert!(v.is_ideal(i)?, "enumerated subspace {i} is not an ideal");
    }
    notes.extend(families.iter().map(ToString::to_string));
    Ok(IdealLattice { dim: n, ideals, families, complete, notes })
}

fn enumerate_complete(v: &BolAlgebra) -> Result<IdealLattice> {
    let n = v.dim();
    let ops = ideal_operators(v);
    let mut ideals = Vec::new();
    let mut families = Vec::new();
    let mut notes = Vec::new();

    if n >= 2 {
        for block in common_eigen_blocks(&ops, n)? {
            if block.dim() == 1 {
                ideals.push(block);
                continue;
            }
            let core = solvable_core(v, &block);
            if !core.is_zero() && core != block {
                notes.push(format!("weakly solvable lines of block {block} span {core}"));
            }
            ideals.push(core);
            ideals.extend(lines_of(&block));
            ideals.push(block.clone());
            families.push(IdealFamily::Lines { block });
        }
    }
    if n == 3 {
        let transposed: Vec<Matrix> = ops.iter().map(Matrix::transpose).collect();
        for dual in common_eigen_blocks(&transposed, n)? {
            if dual.dim() == 1 {
                ideals.push(dual.annihilator());
                continue;
            }
            // All hyperplanes in the family contain U = dual⊥, and the
            // operators act as zero on V/U; either all of them are weakly
            // solvable or none is, so a few representatives suffice.
            ideals.push(dual.annihilator());
            ideals.extend(lines_of(&dual).iter().map(Subspace::annihilator));
            families.push(IdealFamily::Hyperplanes { dual_block: dual });
        }
    }
    ideals.retain(|s| !s.is_zero());
    finish(v, ideals, families, true, std::mem::take(&mut notes))
}

fn enumerate_heuristic(v: &BolAlgebra) -> Result<IdealLattice> {
    let n = v.dim();
    let full = Subspace::full(n);
    let mut seeds: Vec<Subspace> = (0..n)
        .map(|i| Subspace::from_rows_unchecked(vec![unit_vector(n, i)], n))
        .collect();
    seeds.push(v.subspace_product(&full, &full)?);
    seeds.push(v.trilinear_span(&full, &full, &full)?);
    seeds.push(v.weak_derived_series(&full)?.terminal().clone());
    let mut ideals = Vec::new();
    for s in &seeds {
        ideals.push(v.ideal_closure(s)?);
    }
    let notes = vec![format!(
        "heuristic enumeration (dimension {n} > {COMPLETE_ENUMERATION_MAX_DIM}): ideal closures of basis lines, V·V, (V,V,V) and the terminal weak derived term"
    )];
    finish(v, ideals, Vec::new(), false, notes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::linalg::scalar::int;

    fn span(vs: &[&[i64]]) -> Subspace {
        let rows: Vec<Vec<_>> = vs.iter().map(|v| v.iter().map(|&x| int(x)).collect()).collect();
        Subspace::canonicalize(&rows, vs[0].len()).unwrap()
    }

    #[test]
    fn type_i_lattice() {
        let lattice = enumerate_ideals(&catalog::type_i()).unwrap();
        assert!(lattice.complete);
        assert_eq!(
            lattice.ideals,
            vec![
                Subspace::zero(3),
                span(&[&[0, 1, 0]]),
                span(&[&[1, 0, 0], &[0, 1, 0]]),
                Subspace::full(3),
            ]
        );
        assert!(lattice.families.is_empty());
    }

    #[test]
    fn zero_algebra_is_reported_as_blocks() {
        let lattice = enumerate_ideals(&BolAlgebra::zero(2)).unwrap();
        assert!(lattice.complete);
        assert_eq!(lattice.families, vec![IdealFamily::Lines { block: Subspace::full(2) }]);
        assert!(lattice.contains_ideal(&span(&[&[3, -7]])));
        assert!(!lattice.notes.is_empty());
    }

    #[test]
    fn sl2_is_simple() {
        let lattice = enumerate_ideals(&catalog::sl2_bol()).unwrap();
        assert!(lattice.complete);
        assert_eq!(lattice.ideals, vec![Subspace::zero(3), Subspace::full(3)]);
    }

    #[test]
    fn heuristic_mode_above_three() {
        let v = catalog::sl2_bol().direct_sum(&catalog::type_i());
        let lattice = enumerate_ideals(&v).unwrap();
        assert!(!lattice.complete);
        let type_i_block = Subspace::coordinate(&[3, 4, 5], 6).unwrap();
        assert!(lattice.ideals.contains(&type_i_block));
        for i in &lattice.ideals {
            assert!(v.is_ideal(i).unwrap());
        }
        let forced = enumerate_ideals_with(&catalog::type_i(), EnumerationMode::Heuristic).unwrap();
        assert!(!forced.complete);
    }

    #[test]
    fn hyperplane_family_in_zero_algebra() {
        let lattice = enumerate_ideals(&BolAlgebra::zero(3)).unwrap();
        assert!(lattice.contains_ideal(&span(&[&[1, 1, 0], &[0, 0, 1]])));
        assert!(lattice.contains_ideal(&span(&[&[1, 2, 3]])));
    }
}
