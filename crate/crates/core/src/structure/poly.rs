//! Small multivariate polynomials over the rationals and an exact
//! elimination solver for the closure equations of the complement search.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};

use crate::linalg::{rational_roots, Scalar};

/// Polynomial in `nvars` variables, keyed by exponent vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Poly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Scalar>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[index] = 1;
        let mut p = Self::zero(nvars);
        p.terms.insert(exps, Scalar::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, exps: Vec<u32>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e[var]).max().unwrap_or(0)
    }

    pub fn variables(&self) -> BTreeSet<usize> {
        let mut vars = BTreeSet::new();
        for e in self.terms.keys() {
            for (i, &d) in e.iter().enumerate() {
                if d > 0 {
                    vars.insert(i);
                }
            }
        }
        vars
    }

    /// Nonzero constant polynomial.
    fn is_nonzero_constant(&self) -> bool {
        !self.is_zero() && self.total_degree() == 0
    }

    /// Splits `self = coeff * x_var + rest` when `x_var` occurs with degree
    /// exactly one.
    fn split_linear(&self, var: usize) -> Option<(Poly, Poly)> {
        if self.degree_in(var) != 1 {
            return None;
        }
        let mut coeff = Poly::zero(self.nvars);
        let mut rest = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[var] == 1 {
                let mut reduced = e.clone();
                reduced[var] = 0;
                coeff.add_term(reduced, c.clone());
            } else {
                rest.add_term(e.clone(), c.clone());
            }
        }
        Some((coeff, rest))
    }

    /// Replaces `x_var` by `value`.
    pub fn substitute(&self, var: usize, value: &Poly) -> Poly {
        let mut powers: Vec<Poly> = vec![Poly::constant(self.nvars, Scalar::one())];
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            let d = e[var] as usize;
            while powers.len() <= d {
                let next = powers.last().expect("nonempty").mul(value);
                powers.push(next);
            }
            let mut base_exps = e.clone();
            base_exps[var] = 0;
            let mut base = Poly::zero(self.nvars);
            base.add_term(base_exps, c.clone());
            out = out.add(&base.mul(&powers[d]));
        }
        out
    }

    pub fn evaluate(&self, point: &[Scalar]) -> Scalar {
        let mut total = Scalar::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &d) in point.iter().zip(e) {
                for _ in 0..d {
                    term *= x;
                }
            }
            total += term;
        }
        total
    }

    /// Coefficients (lowest degree first) when only `x_var` occurs.
    fn univariate(&self, var: usize) -> Vec<Scalar> {
        let mut coeffs = vec![Scalar::zero(); self.degree_in(var) as usize + 1];
        for (e, c) in &self.terms {
            coeffs[e[var] as usize] += c;
        }
        coeffs
    }
}

/// Result of [`solve`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Solution {
    /// A rational point satisfying every equation.
    Found(Vec<Scalar>),
    /// No rational solution exists.
    Infeasible,
    /// No solution was found, but some branch was explored only on the grid
    /// or the node budget ran out.
    Unknown,
}

/// Search for a rational common zero of `equations` by successive
/// elimination: variables occurring linearly with a constant coefficient are
/// solved for and substituted; univariate equations branch on their rational
/// roots; anything else branches over `grid` (which makes the outcome
/// inexact). Free variables left at the end are set to zero.
pub(crate) fn solve(equations: &[Poly], nvars: usize, grid: &[Scalar], node_budget: usize) -> Solution {
    let mut budget = node_budget;
    let bindings: Vec<Option<Poly>> = vec![None; nvars];
    let mut exact = true;
    match search(equations.to_vec(), bindings, nvars, grid, &mut budget, &mut exact) {
        Some(point) => Solution::Found(point),
        None if exact => Solution::Infeasible,
        None => Solution::Unknown,
    }
}

fn bind(
    equations: &[Poly],
    bindings: &[Option<Poly>],
    var: usize,
    value: &Poly,
) -> (Vec<Poly>, Vec<Option<Poly>>) {
    let eqs = equations.iter().map(|e| e.substitute(var, value)).collect();
    let mut b: Vec<Option<Poly>> = bindings
        .iter()
        .map(|x| x.as_ref().map(|p| p.substitute(var, value)))
        .collect();
    b[var] = Some(value.clone());
    (eqs, b)
}

fn search(
    equations: Vec<Poly>,
    bindings: Vec<Option<Poly>>,
    nvars: usize,
    grid: &[Scalar],
    budget: &mut usize,
    exact: &mut bool,
) -> Option<Vec<Scalar>> {
    if *budget == 0 {
        *exact = false;
        return None;
    }
    *budget -= 1;

    let mut eqs: Vec<Poly> = equations.into_iter().filter(|e| !e.is_zero()).collect();
    if eqs.iter().any(Poly::is_nonzero_constant) {
        return None;
    }
    eqs.sort_by_key(|e| (e.total_degree(), e.terms.len()));
    eqs.dedup();

    if eqs.is_empty() {
        let zeros = vec![Scalar::zero(); nvars];
        let point = (0..nvars)
            .map(|i| match &bindings[i] {
                Some(p) => p.evaluate(&zeros),
                None => Scalar::zero(),
            })
            .collect();
        return Some(point);
    }

    // A variable occurring linearly with a constant coefficient.
    for eq in &eqs {
        for var in eq.variables() {
            if let Some((coeff, rest)) = eq.split_linear(var) {
                if coeff.is_nonzero_constant() {
                    let c = coeff.evaluate(&vec![Scalar::zero(); nvars]);
                    let value = rest.scale(&(-c.recip()));
                    let (next_eqs, next_bindings) = bind(&eqs, &bindings, var, &value);
                    return search(next_eqs, next_bindings, nvars, grid, budget, exact);
                }
            }
        }
    }

    // A univariate equation: branch on its rational roots.
    if let Some((eq, var)) = eqs.iter().find_map(|e| {
        let vars = e.variables();
        (vars.len() == 1).then(|| (e, *vars.iter().next().expect("one variable")))
    }) {
        for (root, _) in rational_roots(&eq.univariate(var)) {
            let value = Poly::constant(nvars, root);
            let (next_eqs, next_bindings) = bind(&eqs, &bindings, var, &value);
            if let Some(p) = search(next_eqs, next_bindings, nvars, grid, budget, exact) {
                return Some(p);
            }
        }
        return None;
    }

    // Genuinely nonlinear: try grid values for the smallest variable.
    *exact = false;
    let var = eqs
        .iter()
        .flat_map(|e| e.variables())
        .min()
        .expect("nonconstant equation has a variable");
    for g in grid {
        let value = Poly::constant(nvars, g.clone());
        let (next_eqs, next_bindings) = bind(&eqs, &bindings, var, &value);
        if let Some(p) = search(next_eqs, next_bindings, nvars, grid, budget, exact) {
            return Some(p);
        }
    }
    None
}
