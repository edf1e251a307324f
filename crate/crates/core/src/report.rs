//! Structure reports in text and JSON form.

use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::algebra::{BolAlgebra, LinearMap};
use crate::axioms::{check_axioms, AxiomReport};
use crate::catalog::{self, CatalogEntry};
use crate::error::Result;
use crate::ideals::SeriesReport;
use crate::linalg::scalar::{format_scalar, format_vector};
use crate::linalg::{Scalar, Subspace};
use crate::structure::{complement_of, enumerate_ideals, weak_radical, IdealLattice, LeviResult, RadicalCertificate};

/// Which sections to compute. With none selected, all are.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ReportOptions {
    pub radical: bool,
    pub series: bool,
    pub levi: bool,
    pub paper_compare: bool,
    /// Run structure computations even when the axioms fail.
    pub force: bool,
}

impl ReportOptions {
    pub fn all() -> Self {
        Self { radical: true, series: true, levi: true, paper_compare: true, force: false }
    }

    fn effective(self) -> Self {
        if self.radical || self.series || self.levi || self.paper_compare {
            self
        } else {
            Self { force: self.force, ..Self::all() }
        }
    }
}

/// One row of the comparison with published values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComparisonRow {
    pub quantity: &'static str,
    pub computed: Option<Subspace>,
    pub claimed: Option<Subspace>,
}

impl ComparisonRow {
    /// `None` when either side is missing.
    pub fn agrees(&self) -> Option<bool> {
        Some(self.computed.as_ref()? == self.claimed.as_ref()?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    /// `None` when the algebra carries no catalog reference.
    pub entry: Option<CatalogEntry>,
    pub rows: Vec<ComparisonRow>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub label: String,
    pub dim: usize,
    pub axioms: AxiomReport,
    pub product_space: Subspace,
    pub triple_space: Subspace,
    pub series: Option<SeriesReport>,
    pub lattice: Option<IdealLattice>,
    pub radical: Option<RadicalCertificate>,
    pub levi: Option<LeviResult>,
    pub comparison: Option<Comparison>,
    pub warnings: Vec<String>,
}

/// Computes the selected sections. A structural anomaly in the radical
/// search is returned as an error.
pub fn build_report(v: &BolAlgebra, options: ReportOptions) -> Result<Report> {
    let options = options.effective();
    let axioms = check_axioms(v);
    let full = Subspace::full(v.dim());
    let product_space = v.subspace_product(&full, &full)?;
    let triple_space = v.trilinear_span(&full, &full, &full)?;
    let mut warnings = Vec::new();

    let structure_allowed = axioms.all_pass() || options.force;
    if !axioms.all_pass() {
        if options.force {
            warnings.push(format!(
                "{}; structure computations forced although they presuppose a Bol algebra",
                axioms.summary()
            ));
        } else {
            warnings.push(format!(
                "{}; series, radical and splitting skipped (use --force to compute them anyway)",
                axioms.summary()
            ));
        }
    }

    let series = if options.series && structure_allowed { Some(v.weak_derived_series(&full)?) } else { None };
    let need_radical = options.radical || options.levi || options.paper_compare;
    let (lattice, radical) = if need_radical && structure_allowed {
        (Some(enumerate_ideals(v)?), Some(weak_radical(v)?))
    } else {
        (None, None)
    };
    let levi = match &radical {
        Some(cert) if options.levi || options.paper_compare => Some(complement_of(v, &cert.radical)?),
        _ => None,
    };

    let comparison = options.paper_compare.then(|| {
        let entry = catalog::origin(v);
        let claims = entry.as_ref().and_then(|e| e.claims.clone()).unwrap_or_default();
        let found_complement = levi.as_ref().filter(|l| l.found).map(|l| l.complement.clone());
        Comparison {
            rows: vec![
                ComparisonRow {
                    quantity: "V·V",
                    computed: Some(product_space.clone()),
                    claimed: claims.product_space,
                },
                ComparisonRow {
                    quantity: "RV",
                    computed: radical.as_ref().map(|r| r.radical.clone()),
                    claimed: claims.radical,
                },
                ComparisonRow { quantity: "SMV", computed: found_complement, claimed: claims.complement },
            ],
            entry,
        }
    });

    Ok(Report {
        label: v.label().to_string(),
        dim: v.dim(),
        axioms,
        product_space,
        triple_space,
        series,
        lattice: if options.radical { lattice } else { None },
        radical: if options.radical { radical } else { None },
        levi: if options.levi { levi } else { None },
        comparison,
        warnings,
    })
}

/// Canonical basis followed by `= V` for the whole space.
pub fn describe(s: &Subspace) -> String {
    if s.is_full() && !s.is_zero() {
        format!("{s} = V")
    } else {
        s.to_string()
    }
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let title = if self.label.is_empty() { "algebra".to_string() } else { self.label.clone() };
        writeln!(f, "{title} (dim {})", self.dim)?;
        for w in &self.warnings {
            writeln!(f, "warning: {w}")?;
        }

        writeln!(f, "\nAxioms: {}", self.axioms.summary())?;
        for line in self.axioms.to_string().lines() {
            writeln!(f, "  {line}")?;
        }

        writeln!(f, "\nProducts")?;
        writeln!(f, "  V·V     = {}  (dim {})", describe(&self.product_space), self.product_space.dim())?;
        writeln!(f, "  (V,V,V) = {}  (dim {})", describe(&self.triple_space), self.triple_space.dim())?;

        if let Some(series) = &self.series {
            writeln!(f, "\nWeak derived series of V")?;
            write_series(f, series, "  ")?;
        }

        if let (Some(lattice), Some(cert)) = (&self.lattice, &self.radical) {
            writeln!(f, "\nIdeals ({})", if lattice.complete { "complete enumeration" } else { "heuristic enumeration, may be incomplete" })?;
            for ideal in &lattice.ideals {
                writeln!(f, "  {}", describe(ideal))?;
            }
            for note in &lattice.notes {
                writeln!(f, "  note: {note}")?;
            }
            writeln!(f, "\nWeak radical")?;
            writeln!(f, "  RV = {}  (dim {})", describe(&cert.radical), cert.radical.dim())?;
            let summands: Vec<String> = cert.summands.iter().map(ToString::to_string).collect();
            writeln!(f, "  sum of weakly solvable ideals: {}", if summands.is_empty() { "none".into() } else { summands.join(", ") })?;
            writeln!(f, "  series of RV:")?;
            write_series(f, &cert.series, "    ")?;
            writeln!(f, "  V/RV has dim {}; radical search on V/RV finds {}", cert.quotient_dim, if cert.quotient_semisimple { "zero (semisimple)" } else { "a nonzero radical" })?;
            writeln!(f, "  exhaustive: {}", if cert.exhaustive { "yes" } else { "no" })?;
            writeln!(f, "  semisimple: {}", if cert.radical.is_zero() { "yes" } else { "no" })?;
        }

        if let Some(levi) = &self.levi {
            writeln!(f, "\nSplitting V = S ⊕ RV")?;
            write_levi(f, levi)?;
        }

        if let Some(cmp) = &self.comparison {
            write_comparison(f, cmp)?;
        }
        Ok(())
    }
}

fn write_series(f: &mut fmt::Formatter<'_>, s: &SeriesReport, indent: &str) -> fmt::Result {
    writeln!(f, "{indent}k  dim  I^(k)")?;
    writeln!(f, "{indent}0  {:<3}  {}", s.start.dim(), describe(&s.start))?;
    for (k, term) in s.chain.iter().enumerate() {
        writeln!(f, "{indent}{:<2} {:<3}  {}", k + 1, term.dim(), describe(term))?;
    }
    match s.solvable_at() {
        Some(k) => writeln!(f, "{indent}weakly solvable: I^({k}) = 0"),
        None => writeln!(
            f,
            "{indent}not weakly solvable: stabilizes at I^({}) = {}",
            s.stabilization_index,
            describe(s.terminal())
        ),
    }
}

fn write_matrix(f: &mut fmt::Formatter<'_>, m: &LinearMap, indent: &str) -> fmt::Result {
    for r in 0..m.matrix().rows() {
        let row: Vec<String> = m.matrix().row(r).iter().map(format_scalar).collect();
        writeln!(f, "{indent}[{}]", row.join(", "))?;
    }
    Ok(())
}

fn write_levi(f: &mut fmt::Formatter<'_>, levi: &LeviResult) -> fmt::Result {
    writeln!(f, "  RV = {}", describe(&levi.radical))?;
    if levi.found {
        writeln!(f, "  S  = {}  (found by {})", describe(&levi.complement), levi.method)?;
    } else {
        writeln!(f, "  no complementary subalgebra found ({})", levi.method)?;
        writeln!(f, "  last candidate: {}", describe(&levi.complement))?;
    }
    let c = levi.checks;
    writeln!(f, "  {}  S is a subalgebra", mark(c.subalgebra))?;
    writeln!(f, "  {}  S ∩ RV = {{0}}", mark(c.trivial_intersection))?;
    writeln!(f, "  {}  S + RV = V", mark(c.full_sum))?;
    writeln!(f, "  {}  projection S -> V/RV preserves both operations", mark(c.preserves_operations))?;
    if levi.found {
        let (n, r, s) = levi.dimension_identity();
        writeln!(f, "  dim V = dim RV + dim S: {n} = {r} + {s}")?;
        if let Some(iso) = &levi.isomorphism {
            if iso.matrix().rows() > 0 {
                writeln!(f, "  S -> V/RV in canonical coordinates:")?;
                write_matrix(f, iso, "    ")?;
            }
        }
    }
    if let Some(d) = &levi.diagnosis {
        writeln!(f, "  diagnosis: {d}")?;
    }
    if levi.method == crate::structure::LeviMethod::Grid || !levi.found {
        let values: Vec<String> = levi.grid.values().iter().map(format_scalar).collect();
        writeln!(f, "  grid values [{}], candidate limit {}", values.join(", "), levi.grid.candidate_limit)?;
    }
    Ok(())
}

fn write_comparison(f: &mut fmt::Formatter<'_>, cmp: &Comparison) -> fmt::Result {
    writeln!(f, "\nComparison with published values")?;
    let Some(entry) = &cmp.entry else {
        return writeln!(f, "  no published values: the algebra does not name a catalog entry (`meta catalog <id>`)");
    };
    writeln!(f, "  catalog entry: {}", entry.id)?;
    let cell = |s: &Option<Subspace>| s.as_ref().map_or_else(|| "not computed".to_string(), describe);
    let rows: Vec<(String, String, String, &str)> = cmp
        .rows
        .iter()
        .map(|r| {
            let status = match r.agrees() {
                Some(true) => "agree",
                Some(false) => "DISCREPANCY",
                None => "-",
            };
            let claimed = r.claimed.as_ref().map_or_else(|| "no claim".to_string(), describe);
            (r.quantity.to_string(), cell(&r.computed), claimed, status)
        })
        .collect();
    let w1 = rows.iter().map(|r| r.1.chars().count()).max().unwrap_or(0).max("computed".len());
    let w2 = rows.iter().map(|r| r.2.chars().count()).max().unwrap_or(0).max("published".len());
    writeln!(f, "  {:<8} {:<w1$}  {:<w2$}  status", "", "computed", "published")?;
    for (q, c, p, s) in &rows {
        writeln!(f, "  {q:<8} {}  {}  {s}", pad(c, w1), pad(p, w2))?;
    }
    if let Some(claims) = &entry.claims {
        if !claims.quoted.is_empty() {
            writeln!(f, "  published:")?;
            for q in &claims.quoted {
                writeln!(f, "    {q}")?;
            }
        }
        if let Some(h) = claims.homogeneous {
            writeln!(f, "  homogeneous (recorded, not checked): {}", if h { "yes" } else { "no" })?;
        }
        for n in &claims.notes {
            writeln!(f, "  note: {n}")?;
        }
    }
    if let Some(c) = &entry.constraint {
        writeln!(f, "  parameter constraint (recorded, not enforced): {c}")?;
    }
    Ok(())
}

fn pad(s: &str, width: usize) -> String {
    let n = s.chars().count();
    format!("{s}{}", " ".repeat(width.saturating_sub(n)))
}

// JSON view. Field order is fixed by the struct definitions, so output is
// byte-identical for identical input.

#[derive(Serialize)]
struct JsonSubspace {
    dim: usize,
    basis: Vec<Vec<String>>,
    text: String,
}

fn js(s: &Subspace) -> JsonSubspace {
    JsonSubspace {
        dim: s.dim(),
        basis: s.basis_vectors().iter().map(|v| strings(v)).collect(),
        text: s.to_string(),
    }
}

fn strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(format_scalar).collect()
}

#[derive(Serialize)]
struct JsonIdentity {
    name: &'static str,
    formula: &'static str,
    pass: bool,
    tuple: Option<Vec<usize>>,
    residual: Option<Vec<String>>,
    residual_text: Option<String>,
}

#[derive(Serialize)]
struct JsonAxioms {
    all_pass: bool,
    summary: String,
    identities: Vec<JsonIdentity>,
}

#[derive(Serialize)]
struct JsonProducts {
    product_space: JsonSubspace,
    triple_space: JsonSubspace,
}

#[derive(Serialize)]
struct JsonSeries {
    start: JsonSubspace,
    chain: Vec<JsonSubspace>,
    dimensions: Vec<usize>,
    stabilization_index: usize,
    weakly_solvable: bool,
    solvable_at: Option<usize>,
}

fn json_series(s: &SeriesReport) -> JsonSeries {
    JsonSeries {
        start: js(&s.start),
        chain: s.chain.iter().map(js).collect(),
        dimensions: s.dimensions(),
        stabilization_index: s.stabilization_index,
        weakly_solvable: s.weakly_solvable,
        solvable_at: s.solvable_at(),
    }
}

#[derive(Serialize)]
struct JsonLattice {
    complete: bool,
    ideals: Vec<JsonSubspace>,
    families: Vec<String>,
    notes: Vec<String>,
}

#[derive(Serialize)]
struct JsonRadical {
    radical: JsonSubspace,
    summands: Vec<JsonSubspace>,
    series: JsonSeries,
    quotient_dim: usize,
    quotient_semisimple: bool,
    exhaustive: bool,
    semisimple: bool,
    lattice: Option<JsonLattice>,
}

#[derive(Serialize)]
struct JsonChecks {
    subalgebra: bool,
    trivial_intersection: bool,
    full_sum: bool,
    preserves_operations: bool,
}

#[derive(Serialize)]
struct JsonDimensions {
    dim_v: usize,
    dim_radical: usize,
    dim_complement: usize,
}

#[derive(Serialize)]
struct JsonGrid {
    values: Vec<String>,
    candidate_limit: usize,
}

#[derive(Serialize)]
struct JsonLevi {
    found: bool,
    method: String,
    radical: JsonSubspace,
    complement: JsonSubspace,
    checks: JsonChecks,
    dimension_identity: JsonDimensions,
    isomorphism: Option<Vec<Vec<String>>>,
    grid: JsonGrid,
    diagnosis: Option<String>,
}

#[derive(Serialize)]
struct JsonRow {
    quantity: &'static str,
    computed: Option<JsonSubspace>,
    claimed: Option<JsonSubspace>,
    agrees: Option<bool>,
}

#[derive(Serialize)]
struct JsonClaims {
    entry: Option<String>,
    params: Vec<(String, String)>,
    rows: Vec<JsonRow>,
    homogeneous: Option<bool>,
    quoted: Vec<String>,
    notes: Vec<String>,
    constraint: Option<String>,
}

#[derive(Serialize)]
struct JsonReport {
    dim: usize,
    axioms: JsonAxioms,
    products: JsonProducts,
    series: Option<JsonSeries>,
    radical: Option<JsonRadical>,
    levi: Option<JsonLevi>,
    paper_claims: Option<JsonClaims>,
}

impl Report {
    /// Pretty-printed JSON with top-level fields `dim`, `axioms`, `products`,
    /// `series`, `radical`, `levi`, `paper_claims`; sections not computed are
    /// `null`. Rationals are `"p/q"` strings.
    pub fn to_json(&self) -> String {
        let axioms = JsonAxioms {
            all_pass: self.axioms.all_pass(),
            summary: self.axioms.summary(),
            identities: self
                .axioms
                .verdicts
                .iter()
                .map(|v| JsonIdentity {
                    name: v.identity.name(),
                    formula: v.identity.formula(),
                    pass: v.passed(),
                    tuple: v.failure.as_ref().map(|f| f.one_based()),
                    residual: v.failure.as_ref().map(|f| strings(&f.residual)),
                    residual_text: v.failure.as_ref().map(|f| format_vector(&f.residual)),
                })
                .collect(),
        };
        let radical = self.radical.as_ref().map(|c| JsonRadical {
            radical: js(&c.radical),
            summands: c.summands.iter().map(js).collect(),
            series: json_series(&c.series),
            quotient_dim: c.quotient_dim,
            quotient_semisimple: c.quotient_semisimple,
            exhaustive: c.exhaustive,
            semisimple: c.radical.is_zero(),
            lattice: self.lattice.as_ref().map(|l| JsonLattice {
                complete: l.complete,
                ideals: l.ideals.iter().map(js).collect(),
                families: l.families.iter().map(ToString::to_string).collect(),
                notes: l.notes.clone(),
            }),
        });
        let levi = self.levi.as_ref().map(|l| {
            let (dim_v, dim_radical, dim_complement) = l.dimension_identity();
            JsonLevi {
                found: l.found,
                method: l.method.to_string(),
                radical: js(&l.radical),
                complement: js(&l.complement),
                checks: JsonChecks {
                    subalgebra: l.checks.subalgebra,
                    trivial_intersection: l.checks.trivial_intersection,
                    full_sum: l.checks.full_sum,
                    preserves_operations: l.checks.preserves_operations,
                },
                dimension_identity: JsonDimensions { dim_v, dim_radical, dim_complement },
                isomorphism: l
                    .isomorphism
                    .as_ref()
                    .map(|m| m.matrix().row_vectors().iter().map(|r| strings(r)).collect()),
                grid: JsonGrid {
                    values: l.grid.values().iter().map(format_scalar).collect(),
                    candidate_limit: l.grid.candidate_limit,
                },
                diagnosis: l.diagnosis.clone(),
            }
        });
        let paper_claims = self.comparison.as_ref().map(|c| {
            let claims = c.entry.as_ref().and_then(|e| e.claims.clone()).unwrap_or_default();
            JsonClaims {
                entry: c.entry.as_ref().map(|e| e.id.clone()),
                params: c
                    .entry
                    .as_ref()
                    .map(|e| e.params.iter().map(|(k, v)| (k.clone(), format_scalar(v))).collect())
                    .unwrap_or_default(),
                rows: c
                    .rows
                    .iter()
                    .map(|r| JsonRow {
                        quantity: r.quantity,
                        computed: r.computed.as_ref().map(js),
                        claimed: r.claimed.as_ref().map(js),
                        agrees: r.agrees(),
                    })
                    .collect(),
                homogeneous: claims.homogeneous,
                quoted: claims.quoted,
                notes: claims.notes,
                constraint: c.entry.as_ref().and_then(|e| e.constraint.clone()),
            }
        });
        let doc = JsonReport {
            dim: self.dim,
            axioms,
            products: JsonProducts { product_space: js(&self.product_space), triple_space: js(&self.triple_space) },
            series: self.series.as_ref().map(json_series),
            radical,
            levi,
            paper_claims,
        };
        let mut out = serde_json::to_string_pretty(&doc).expect("report serializes");
        out.push('\n');
        out
    }
}

/// Text rendering of an axiom report for `check`.
pub fn render_check(v: &BolAlgebra, report: &AxiomReport) -> String {
    let mut out = String::new();
    let title = if v.label().is_empty() { "algebra" } else { v.label() };
    let _ = writeln!(out, "{title} (dim {}): {}", v.dim(), report.summary());
    let _ = write!(out, "{report}");
    out
}
