//! Subalgebras, ideals, quotients and the weak derived series.
//!
//! A subspace `I` is an ideal when `V·I ⊆ I` and each of `(I,V,V)`,
//! `(V,I,V)`, `(V,V,I)` lies in `I`. This is exactly what makes both
//! operations well defined on `V/I`.

use std::fmt;

use crate::algebra::{BolAlgebra, LinearMap};
use crate::error::{check_len, Error, Result};
use crate::linalg::{Matrix, Subspace, Vector};
use crate::tensor::{Tensor3, Tensor4};

/// One of the four inclusions defining an ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealCondition {
    Product,
    FirstSlot,
    SecondSlot,
    ThirdSlot,
}

impl fmt::Display for IdealCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IdealCondition::Product => "V·I ⊆ I",
            IdealCondition::FirstSlot => "(I,V,V) ⊆ I",
            IdealCondition::SecondSlot => "(V,I,V) ⊆ I",
            IdealCondition::ThirdSlot => "(V,V,I) ⊆ I",
        })
    }
}

/// The weak derived series `I^(1) = (V,I,I)`, `I^(k) = (V, I^(k-1), I^(k-1))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesReport {
    pub start: Subspace,
    /// `I^(1), ..., I^(s+1)` where `s` is the stabilization index, so the
    /// last two terms (counting `I^(0) = I`) coincide.
    pub chain: Vec<Subspace>,
    /// Smallest `s >= 0` with `I^(s) = I^(s+1)`.
    pub stabilization_index: usize,
    pub weakly_solvable: bool,
}

impl SeriesReport {
    /// Smallest `k >= 1` with `I^(k) = 0`, if any.
    pub fn solvable_at(&self) -> Option<usize> {
        self.chain.iter().position(Subspace::is_zero).map(|p| p + 1)
    }

    pub fn terminal(&self) -> &Subspace {
        self.chain.last().expect("chain has at least one term")
    }

    pub fn dimensions(&self) -> Vec<usize> {
        self.chain.iter().map(Subspace::dim).collect()
    }
}

impl BolAlgebra {
    fn check_subspace(&self, s: &Subspace) -> Result<()> {
        check_len(self.dim(), s.ambient_dim())
    }

    /// Span of `a·b` over basis vectors `a` of `A` and `b` of `B`.
    pub fn subspace_product(&self, a: &Subspace, b: &Subspace) -> Result<Subspace> {
        self.check_subspace(a)?;
        self.check_subspace(b)?;
        Ok(self.product_span(a, b))
    }

    fn product_span(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let (av, bv) = (a.basis_vectors(), b.basis_vectors());
        let mut out = Vec::with_capacity(av.len() * bv.len());
        for x in &av {
            for y in &bv {
                out.push(self.mul(x, y));
            }
        }
        Subspace::from_rows_unchecked(out, self.dim())
    }

    /// Span of `(a, b, c)` over basis vectors of `A`, `B`, `C`.
    pub fn trilinear_span(&self, a: &Subspace, b: &Subspace, c: &Subspace) -> Result<Subspace> {
        self.check_subspace(a)?;
        self.check_subspace(b)?;
        self.check_subspace(c)?;
        Ok(self.triple_span(a, b, c))
    }

    fn triple_span(&self, a: &Subspace, b: &Subspace, c: &Subspace) -> Subspace {
        let (av, bv, cv) = (a.basis_vectors(), b.basis_vectors(), c.basis_vectors());
        let mut out = Vec::new();
        for x in &av {
            for y in &bv {
                for z in &cv {
                    out.push(self.tri(x, y, z));
                }
            }
        }
        Subspace::from_rows_unchecked(out, self.dim())
    }

    fn full(&self) -> Subspace {
        Subspace::full(self.dim())
    }

    /// Closed under both operations.
    pub fn is_subalgebra(&self, s: &Subspace) -> Result<bool> {
        self.check_subspace(s)?;
        Ok(s.contains_subspace(&self.product_span(s, s))?
            && s.contains_subspace(&self.triple_span(s, s, s))?)
    }

    /// First of the four ideal inclusions that fails, in the order
    /// product, first, second, third slot.
    pub fn ideal_violation(&self, i: &Subspace) -> Result<Option<IdealCondition>> {
        self.check_subspace(i)?;
        let v = self.full();
        let checks = [
            (IdealCondition::Product, self.product_span(&v, i)),
            (IdealCondition::FirstSlot, self.triple_span(i, &v, &v)),
            (IdealCondition::SecondSlot, self.triple_span(&v, i, &v)),
            (IdealCondition::ThirdSlot, self.triple_span(&v, &v, i)),
        ];
        for (condition, image) in checks {
            if !i.contains_subspace(&image)? {
                return Ok(Some(condition));
            }
        }
        Ok(None)
    }

    pub fn is_ideal(&self, i: &Subspace) -> Result<bool> {
        Ok(self.ideal_violation(i)?.is_none())
    }

    pub(crate) fn require_ideal(&self, i: &Subspace) -> Result<()> {
        match self.ideal_violation(i)? {
            None => Ok(()),
            Some(condition) => Err(Error::Precondition(format!("{i} is not an ideal: {condition} fails"))),
        }
    }

    /// Smallest ideal containing `s`.
    pub fn ideal_closure(&self, s: &Subspace) -> Result<Subspace> {
        self.check_subspace(s)?;
        let v = self.full();
        let mut current = s.clone();
        loop {
            let next = current
                .sum(&self.product_span(&v, &current))?
                .sum(&self.triple_span(&current, &v, &v))?
                .sum(&self.triple_span(&v, &current, &v))?
                .sum(&self.triple_span(&v, &v, &current))?;
            if next == current {
                return Ok(current);
            }
            current = next;
        }
    }

    /// `V/I` on the coordinates complementary to the pivot columns of `I`,
    /// together with the canonical projection `V -> V/I`.
    pub fn quotient(&self, ideal: &Subspace) -> Result<(BolAlgebra, LinearMap)> {
        self.require_ideal(ideal)?;
        let n = self.dim();
        let free = ideal.free_columns();
        let m = free.len();
        let project = |v: &[crate::linalg::Scalar]| -> Vector {
            let r = ideal.reduce(v).expect("ambient checked");
            free.iter().map(|&c| r[c].clone()).collect()
        };
        let projection = Matrix::from_fn(m, n, |a, j| {
            let r = ideal
                .reduce(&crate::linalg::scalar::unit_vector(n, j))
                .expect("ambient checked");
            r[free[a]].clone()
        });
        let mut binary = Tensor3::zeros(m);
        let mut ternary = Tensor4::zeros(m);
        for (a, &ca) in free.iter().enumerate() {
            for (b, &cb) in free.iter().enumerate() {
                binary.set_slice(a, b, &project(self.basis_product(ca, cb)));
                for (c, &cc) in free.iter().enumerate() {
                    ternary.set_slice(a, b, c, &project(self.basis_triple(ca, cb, cc)));
                }
            }
        }
        let label = if self.label().is_empty() {
            String::new()
        } else {
            format!("{} / {}", self.label(), ideal)
        };
        let q = BolAlgebra::from_tensors(binary, ternary)?.with_label(label);
        Ok((q, LinearMap::new(projection)))
    }

    /// The weak derived series of an ideal.
    pub fn weak_derived_series(&self, ideal: &Subspace) -> Result<SeriesReport> {
        self.require_ideal(ideal)?;
        let v = self.full();
        let mut chain = Vec::new();
        let mut previous = ideal.clone();
        let mut index = 0;
        loop {
            let next = self.triple_span(&v, &previous, &previous);
            let done = next == previous;
            chain.push(next.clone());
            if done {
                break;
            }
            previous = next;
            index += 1;
        }
        let weakly_solvable = chain.last().is_some_and(Subspace::is_zero);
        Ok(SeriesReport {
            start: ideal.clone(),
            chain,
            stabilization_index: index,
            weakly_solvable,
        })
    }
}
