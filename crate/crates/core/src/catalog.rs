//! Built-in algebras.
//!
//! Entries with published multiplication tables list only some products; all
//! others are taken to be zero and each entry says so in its provenance. The
//! structure values claimed in the literature are kept next to the entries as
//! data, so reports can print them beside the recomputed ones.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, ToPrimitive, Zero};

use crate::algebra::{AlgebraBuilder, BolAlgebra, META_ZERO_FILL};
use crate::axioms::check_axioms;
use crate::error::{Error, Result};
use crate::lie::from_lie_algebra;
use crate::linalg::scalar::{format_scalar, int, parse_scalar};
use crate::linalg::{Scalar, Subspace};
use crate::tensor::Tensor3;

/// Metadata key holding the catalog id of an exported entry.
pub const META_CATALOG: &str = "catalog";
/// Prefix of metadata keys holding parameter values, e.g. `param.x`.
pub const META_PARAM_PREFIX: &str = "param.";
/// Metadata key for the homogeneity flag. Never computed, only recorded.
pub const META_HOMOGENEOUS: &str = "homogeneous";

/// Largest dimension accepted for the `zero-n` family.
pub const ZERO_FAMILY_MAX_DIM: usize = 8;

const ZERO_FILL_NOTE: &str = "products not listed in the published table are taken to be zero";

/// Structure values claimed in the literature for an entry, stored verbatim
/// and never used in place of computed values.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PaperClaims {
    pub product_space: Option<Subspace>,
    pub radical: Option<Subspace>,
    pub complement: Option<Subspace>,
    pub homogeneous: Option<bool>,
    pub notes: Vec<String>,
    /// The claims as printed, one formula per line.
    pub quoted: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub id: String,
    pub algebra: BolAlgebra,
    pub params: BTreeMap<String, Scalar>,
    pub claims: Option<PaperClaims>,
    pub provenance: String,
    /// A constraint on the parameters that is recorded but not enforced.
    pub constraint: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntrySummary {
    pub id: &'static str,
    /// `None` for families whose dimension is a parameter.
    pub dim: Option<usize>,
    pub params: &'static [&'static str],
    pub axioms: String,
    pub description: &'static str,
}

impl fmt::Display for EntrySummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dim = self.dim.map_or_else(|| "n".to_string(), |d| d.to_string());
        let params = if self.params.is_empty() {
            String::new()
        } else {
            format!(" [{}]", self.params.join(", "))
        };
        write!(f, "{:<16} dim {:<2} {:<40} {}{}", self.id, dim, self.axioms, self.description, params)
    }
}

struct EntryDef {
    id: &'static str,
    dim: Option<usize>,
    params: &'static [&'static str],
    /// Parameters used to evaluate the axiom status shown by [`list`].
    sample: &'static [(&'static str, i64)],
    description: &'static str,
    build: fn(&BTreeMap<String, Scalar>) -> Result<CatalogEntry>,
}

const ENTRIES: &[EntryDef] = &[
    EntryDef {
        id: "heisenberg-bol",
        dim: Some(3),
        params: &[],
        sample: &[],
        description: "Heisenberg Lie algebra as a Bol algebra",
        build: heisenberg,
    },
    EntryDef {
        id: "nonabelian2-bol",
        dim: Some(2),
        params: &[],
        sample: &[],
        description: "2-dimensional nonabelian Lie algebra as a Bol algebra",
        build: nonabelian2,
    },
    EntryDef {
        id: "sl2-bol",
        dim: Some(3),
        params: &[],
        sample: &[],
        description: "sl(2) as a Bol algebra",
        build: sl2_entry,
    },
    EntryDef {
        id: "sl2-plus-type-i",
        dim: Some(6),
        params: &[],
        sample: &[],
        description: "direct sum of sl2-bol and type-i",
        build: sl2_plus_type_i,
    },
    EntryDef {
        id: "type-i",
        dim: Some(3),
        params: &[],
        sample: &[],
        description: "type I of the 3-dimensional classification",
        build: type_i_entry,
    },
    EntryDef {
        id: "type-iv",
        dim: Some(3),
        params: &["x", "p"],
        sample: &[("x", 0), ("p", 0)],
        description: "type IV of the 3-dimensional classification",
        build: type_iv_entry,
    },
    EntryDef {
        id: "zero-n",
        dim: None,
        params: &["n"],
        sample: &[("n", 1)],
        description: "zero algebra of dimension n",
        build: zero_entry,
    },
];

/// Ids of all entries, alphabetically.
pub fn ids() -> Vec<&'static str> {
    ENTRIES.iter().map(|s| s.id).collect()
}

/// Parameter names an entry requires.
pub fn required_params(id: &str) -> Result<&'static [&'static str]> {
    find(id).map(|s| s.params)
}

fn find(id: &str) -> Result<&'static EntryDef> {
    ENTRIES
        .iter()
        .find(|s| s.id == id)
        .ok_or_else(|| Error::UnknownEntry(id.to_string()))
}

/// Instantiates an entry. Every parameter the entry declares must be given
/// and no others.
pub fn get(id: &str, params: &BTreeMap<String, Scalar>) -> Result<CatalogEntry> {
    let spec = find(id)?;
    for name in params.keys() {
        if !spec.params.contains(&name.as_str()) {
            return Err(Error::Parameter {
                name: name.clone(),
                message: format!("`{id}` takes no such parameter"),
            });
        }
    }
    for &name in spec.params {
        if !params.contains_key(name) {
            return Err(Error::Parameter { name: name.to_string(), message: format!("required by `{id}`") });
        }
    }
    (spec.build)(params)
}

/// [`get`] for entries without parameters.
pub fn get_plain(id: &str) -> Result<CatalogEntry> {
    get(id, &BTreeMap::new())
}

/// The instantiation [`list`] uses for an entry's axiom summary.
pub fn sample_params(id: &str) -> Result<BTreeMap<String, Scalar>> {
    Ok(find(id)?.sample.iter().map(|&(k, v)| (k.to_string(), int(v))).collect())
}

/// One-line description of an entry.
pub fn description(id: &str) -> Result<&'static str> {
    find(id).map(|s| s.description)
}

/// Parses `key=value` assignments with exact rational values.
pub fn parse_params<S: AsRef<str>>(assignments: &[S]) -> Result<BTreeMap<String, Scalar>> {
    let mut out = BTreeMap::new();
    for a in assignments {
        let a = a.as_ref();
        let (name, value) = a.split_once('=').ok_or_else(|| Error::Parameter {
            name: a.to_string(),
            message: "expected name=value".into(),
        })?;
        let name = name.trim().to_string();
        let value = parse_scalar(value).ok_or_else(|| Error::Parameter {
            name: name.clone(),
            message: format!("`{}` is not an exact rational (use p or p/q)", value.trim()),
        })?;
        if out.insert(name.clone(), value).is_some() {
            return Err(Error::Parameter { name, message: "given twice".into() });
        }
    }
    Ok(out)
}

/// Summaries of all entries in id order. Families are evaluated at a fixed
/// sample instantiation.
pub fn list() -> Vec<EntrySummary> {
    ENTRIES
        .iter()
        .map(|s| {
            let params = sample_params(s.id).expect("listed id");
            let entry = (s.build)(&params).expect("sample parameters are valid");
            let axioms = axiom_status(&entry.algebra);
            EntrySummary { id: s.id, dim: s.dim, params: s.params, axioms, description: s.description }
        })
        .collect()
}

/// `passes B1-B4`, or the first failing identity followed by the others,
/// e.g. `fails B2 under zero-fill (also B3, B4)` for a zero-filled table.
pub fn axiom_status(algebra: &BolAlgebra) -> String {
    let report = check_axioms(algebra);
    let failed: Vec<&str> = report.failures().map(|(id, _)| id.name()).collect();
    let Some((first, rest)) = failed.split_first() else {
        return report.summary();
    };
    let mut s = format!("fails {first}");
    if algebra.meta(META_ZERO_FILL).is_some() {
        s.push_str(" under zero-fill");
    }
    if !rest.is_empty() {
        s.push_str(&format!(" (also {})", rest.join(", ")));
    }
    s
}

fn tag(algebra: BolAlgebra, id: &str, params: &BTreeMap<String, Scalar>) -> BolAlgebra {
    let mut algebra = algebra.with_meta(META_CATALOG, id);
    for (k, v) in params {
        algebra = algebra.with_meta(format!("{META_PARAM_PREFIX}{k}"), format_scalar(v));
    }
    algebra
}

fn entry(id: &str, algebra: BolAlgebra, params: &BTreeMap<String, Scalar>, provenance: &str) -> CatalogEntry {
    CatalogEntry {
        id: id.to_string(),
        algebra: tag(algebra, id, params),
        params: params.clone(),
        claims: None,
        provenance: provenance.to_string(),
        constraint: None,
    }
}

fn span(vectors: &[&[i64]]) -> Subspace {
    let n = vectors[0].len();
    let rows: Vec<Vec<Scalar>> = vectors.iter().map(|v| v.iter().map(|&x| int(x)).collect()).collect();
    Subspace::canonicalize(&rows, n).expect("vectors share a length")
}

/// `e1·e3 = e1 + e2`, `e2·e3 = e2`, ternary operation zero.
pub fn type_i() -> BolAlgebra {
    let mut b = AlgebraBuilder::new(3);
    b.product(0, 2, &[(0, int(1)), (1, int(1))]).expect("valid record");
    b.product(1, 2, &[(1, int(1))]).expect("valid record");
    b.label("type I").meta(META_ZERO_FILL, ZERO_FILL_NOTE);
    b.build().expect("antisymmetric")
}

/// `e1·e3 = x e1 + p e2 + e3`, `(e1,e2,e3) = e1`, `(e1,e3,e3) = e1`.
pub fn type_iv(x: &Scalar, p: &Scalar) -> BolAlgebra {
    let mut b = AlgebraBuilder::new(3);
    b.product(0, 2, &[(0, x.clone()), (1, p.clone()), (2, int(1))]).expect("valid record");
    b.triple(0, 1, 2, &[(0, int(1))]).expect("valid record");
    b.triple(0, 2, 2, &[(0, int(1))]).expect("valid record");
    b.label(format!("type IV (x = {}, p = {})", format_scalar(x), format_scalar(p)))
        .meta(META_ZERO_FILL, ZERO_FILL_NOTE)
        .meta(META_HOMOGENEOUS, "false");
    b.build().expect("antisymmetric")
}

/// `(j, k, terms)`: `[e_j, e_k] = Σ q e_i` over `(i, q)` in `terms`.
type Bracket<'a> = (usize, usize, &'a [(usize, i64)]);

fn lie(n: usize, brackets: &[Bracket]) -> Tensor3 {
    let mut c = Tensor3::zeros(n);
    for &(j, k, terms) in brackets {
        for &(i, q) in terms {
            c.set(i, j, k, int(q));
            c.set(i, k, j, int(-q));
        }
    }
    c
}

/// Basis `(e, f, h)` with `[e,f] = h`, `[h,e] = 2e`, `[h,f] = -2f`.
pub fn sl2_brackets() -> Tensor3 {
    lie(3, &[(0, 1, &[(2, 1)]), (2, 0, &[(0, 2)]), (2, 1, &[(1, -2)])])
}

/// `[e1,e2] = e3`.
pub fn heisenberg_brackets() -> Tensor3 {
    lie(3, &[(0, 1, &[(2, 1)])])
}

/// `[e1,e2] = e1`.
pub fn nonabelian2_brackets() -> Tensor3 {
    lie(2, &[(0, 1, &[(0, 1)])])
}

pub fn sl2_bol() -> BolAlgebra {
    from_lie_algebra(&sl2_brackets()).expect("sl2 satisfies Jacobi").with_label("sl2")
}

fn lie_entry(id: &str, brackets: Tensor3, label: &str, provenance: &str) -> Result<CatalogEntry> {
    let algebra = from_lie_algebra(&brackets)?.with_label(label);
    Ok(entry(id, algebra, &BTreeMap::new(), provenance))
}

fn heisenberg(_: &BTreeMap<String, Scalar>) -> Result<CatalogEntry> {
    lie_entry(
        "heisenberg-bol",
        heisenberg_brackets(),
        "heisenberg",
        "Lie algebra [e1,e2] = e3 with a·b = [a,b], (a,b,c) = [[a,b],c]",
    )
}

fn nonabelian2(_: &BTreeMap<String, Scalar>) -> Result<CatalogEntry> {
    lie_entry(
        "nonabelian2-bol",
        nonabelian2_brackets(),
        "nonabelian 2-dim",
        "Lie algebra [e1,e2] = e1 with a·b = [a,b], (a,b,c) = [[a,b],c]",
    )
}

fn sl2_entry(_: &BTreeMap<String, Scalar>) -> Result<CatalogEntry> {
    lie_entry(
        "sl2-bol",
        sl2_brackets(),
        "sl2",
        "sl(2) in the basis (e, f, h) with a·b = [a,b], (a,b,c) = [[a,b],c]",
    )
}

fn sl2_plus_type_i(_: &BTreeMap<String, Scalar>) -> Result<CatalogEntry> {
    let algebra = sl2_bol().direct_sum(&type_i()).with_meta(META_ZERO_FILL, ZERO_FILL_NOTE);
    Ok(entry(
        "sl2-plus-type-i",
        algebra,
        &BTreeMap::new(),
        "sl2-bol on e1..e3 and type-i on e4..e6, mixed products zero",
    ))
}

fn type_i_entry(params: &BTreeMap<String, Scalar>) -> Result<CatalogEntry> {
    let mut e = entry(
        "type-i",
        type_i(),
        params,
        "type I of the classification of 3-dimensional Bol algebras; ternary operation zero; \
         products not listed are zero",
    );
    let vv = span(&[&[1, 1, 0], &[0, 1, 0]]);
    e.claims = Some(PaperClaims {
        product_space: Some(vv.clone()),
        radical: Some(vv),
        complement: Some(span(&[&[0, 0, 1]])),
        homogeneous: None,
        notes: Vec::new(),
        quoted: vec![
            "V·V = <e1+e2, e2>".into(),
            "SMV = V/<e1+e2, e2> = <e3>".into(),
            "V = <e1+e2, e2> ⊕ <e3>".into(),
        ],
    });
    Ok(e)
}

fn rational_param(params: &BTreeMap<String, Scalar>, name: &str) -> Scalar {
    params.get(name).cloned().unwrap_or_else(Scalar::zero)
}

fn type_iv_entry(params: &BTreeMap<String, Scalar>) -> Result<CatalogEntry> {
    let (x, p) = (rational_param(params, "x"), rational_param(params, "p"));
    let mut e = entry(
        "type-iv",
        type_iv(&x, &p),
        params,
        "type IV of the classification of 3-dimensional Bol algebras; products not listed \
         (e1·e2, e2·e3 and all other triples) are zero, and the cyclic identity failure is a \
         property of this zero-filled table",
    );
    e.constraint = Some("∀ p, x ≥ 0".into());
    e.claims = Some(PaperClaims {
        product_space: Some(Subspace::full(3)),
        radical: Some(Subspace::full(3)),
        complement: Some(span(&[&[0, 1, 0], &[0, 0, 1]])),
        homogeneous: Some(false),
        notes: vec![
            "This Bol algebra is not homogeneous".into(),
            "RV ∩ SMV ≠ 0, Levi-Malcev theorem can not be applied".into(),
            "the claimed RV = V and SMV = <e2,e3> are dimensionally inconsistent: V/RV would be zero".into(),
        ],
        quoted: vec![
            "V·V = <e1, e2, e3> = RV".into(),
            "SMV = V/<e1, e2, e3> = <e2, e3>".into(),
            "RV ∩ SMV = <e1, e2, e3> ∩ <e2, e3> ≠ 0".into(),
        ],
    });
    Ok(e)
}

fn zero_entry(params: &BTreeMap<String, Scalar>) -> Result<CatalogEntry> {
    let n = &params["n"];
    let bad = |message: String| Error::Parameter { name: "n".into(), message };
    if !n.is_integer() || !n.is_positive() {
        return Err(bad(format!("must be a positive integer, got {}", format_scalar(n))));
    }
    let dim = n
        .to_integer()
        .to_usize()
        .filter(|d| (1..=ZERO_FAMILY_MAX_DIM).contains(d))
        .ok_or_else(|| bad(format!("must be at most {ZERO_FAMILY_MAX_DIM}")))?;
    let algebra = BolAlgebra::zero(dim).with_label(format!("zero algebra of dimension {dim}"));
    Ok(entry("zero-n", algebra, params, "both operations identically zero"))
}

/// Reads a parameter back from exported metadata.
pub fn params_from_meta(algebra: &BolAlgebra) -> BTreeMap<String, Scalar> {
    algebra
        .metadata()
        .iter()
        .filter_map(|(k, v)| {
            let name = k.strip_prefix(META_PARAM_PREFIX)?;
            Some((name.to_string(), parse_scalar(v)?))
        })
        .collect()
}

/// The catalog entry an algebra was exported from, if its metadata names one.
pub fn origin(algebra: &BolAlgebra) -> Option<CatalogEntry> {
    let id = algebra.meta(META_CATALOG)?;
    get(id, &params_from_meta(algebra)).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::Identity;
    use crate::linalg::scalar::frac;

    fn params(pairs: &[(&str, Scalar)]) -> BTreeMap<String, Scalar> {
        pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
    }

    #[test]
    fn list_is_alphabetical_and_stable() {
        let ids: Vec<_> = list().iter().map(|s| s.id).collect();
        let mut sorted = ids.clone();
        sorted.sort();
        assert_eq!(ids, sorted);
        for required in ["type-i", "type-iv", "sl2-bol", "sl2-plus-type-i", "zero-n"] {
            assert!(ids.contains(&required));
        }
        assert_eq!(list(), list());
    }

    #[test]
    fn type_iv_summary_mentions_zero_fill() {
        let s = list().into_iter().find(|s| s.id == "type-iv").unwrap();
        assert_eq!(s.axioms, "fails B2 under zero-fill (also B3, B4)");
    }

    #[test]
    fn type_i_products() {
        let e = get_plain("type-i").unwrap();
        assert!(check_axioms(&e.algebra).all_pass());
        let full = Subspace::full(3);
        assert_eq!(e.algebra.subspace_product(&full, &full).unwrap(), span(&[&[1, 1, 0], &[0, 1, 0]]));
    }

    #[test]
    fn type_iv_instantiation() {
        let e = get("type-iv", &params(&[("x", int(0)), ("p", int(0))])).unwrap();
        assert_eq!(e.algebra.basis_product(0, 2), &[int(0), int(0), int(1)]);
        assert_eq!(e.constraint.as_deref(), Some("∀ p, x ≥ 0"));
        let e = get("type-iv", &params(&[("x", frac(-3, 2)), ("p", int(5))])).unwrap();
        let b2 = check_axioms(&e.algebra).verdict(Identity::B2).failure.clone().unwrap();
        assert_eq!(b2.one_based(), vec![1, 2, 3]);
    }

    #[test]
    fn parameter_errors() {
        assert!(matches!(get_plain("type-iv"), Err(Error::Parameter { .. })));
        assert!(matches!(get("type-i", &params(&[("x", int(1))])), Err(Error::Parameter { .. })));
        assert!(matches!(get_plain("nope"), Err(Error::UnknownEntry(_))));
        assert!(matches!(get("zero-n", &params(&[("n", frac(1, 2))])), Err(Error::Parameter { .. })));
        assert!(matches!(get("zero-n", &params(&[("n", int(0))])), Err(Error::Parameter { .. })));
        assert!(matches!(parse_params(&["x=sqrt2"]), Err(Error::Parameter { .. })));
        assert!(matches!(parse_params(&["x"]), Err(Error::Parameter { .. })));
        assert_eq!(parse_params(&["x=1/2", "p=-3"]).unwrap()["x"], frac(1, 2));
    }

    #[test]
    fn sl2_matches_lie_constructor() {
        let e = get_plain("sl2-bol").unwrap();
        assert!(e.algebra.same_structure(&from_lie_algebra(&sl2_brackets()).unwrap()));
    }

    #[test]
    fn origin_recovers_parameters() {
        let e = get("type-iv", &params(&[("x", frac(1, 3)), ("p", int(2))])).unwrap();
        assert_eq!(origin(&e.algebra).unwrap(), e);
    }
}
