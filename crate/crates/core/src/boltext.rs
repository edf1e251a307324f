//! The `boltext` file format.
//!
//! ```text
//! boltext 1
//! dim 3
//! # type I
//! meta label type I
//! bin 1 3 -> 1:1, 2:1
//! bin 2 3 -> 2:1
//! tri 1 2 3 -> 1:1
//! ```
//!
//! Indices are 1-based. `bin j k -> i:q, ...` sets `e_j·e_k = Σ q e_i` and
//! the mirrored product to its negative; giving the mirror as well is
//! allowed only if it is exactly the negative. `tri j k l -> ...` sets
//! `(e_j,e_k,e_l)`. Entries not listed are zero. `meta key value` attaches
//! metadata, with the key `label` setting the label. Lines starting with `#`
//! are comments.
//!
//! Torsion files use `tor j k -> ...` for `T^i_jk` and `dtor j k l -> ...`
//! for `∇_l T^i_jk`, both completed by antisymmetry in `(j, k)`.
//!
//! [`serialize`] writes the canonical form: metadata sorted by key, then
//! records sorted by indices, coefficients in lowest terms, zero products
//! omitted.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::Zero;

use crate::algebra::{AlgebraBuilder, BolAlgebra};
use crate::error::{Error, Result};
use crate::geometry::TorsionData;
use crate::linalg::scalar::{format_scalar, parse_scalar};
use crate::linalg::Scalar;
use crate::tensor::{Tensor3, Tensor4};

pub const HEADER: &str = "boltext 1";
const LABEL_KEY: &str = "label";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tag {
    Bin,
    Tri,
    Tor,
    Dtor,
}

impl Tag {
    fn arity(self) -> usize {
        match self {
            Tag::Bin | Tag::Tor => 2,
            Tag::Tri | Tag::Dtor => 3,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Tag::Bin => "bin",
            Tag::Tri => "tri",
            Tag::Tor => "tor",
            Tag::Dtor => "dtor",
        }
    }

    fn is_torsion(self) -> bool {
        matches!(self, Tag::Tor | Tag::Dtor)
    }
}

struct Record {
    line: usize,
    tag: Tag,
    indices: Vec<usize>,
    terms: Vec<(usize, Scalar)>,
}

struct Document {
    dim: usize,
    label: String,
    metadata: BTreeMap<String, String>,
    records: Vec<Record>,
}

/// A parsed torsion file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionFile {
    pub data: TorsionData,
    pub label: String,
    pub metadata: BTreeMap<String, String>,
}

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn parse_index(token: &str, dim: usize, line: usize) -> Result<usize> {
    let i: usize = token
        .parse()
        .map_err(|_| err(line, format!("expected a basis index, found `{token}`")))?;
    if i == 0 || i > dim {
        return Err(err(line, format!("index {i} out of range 1..={dim}")));
    }
    Ok(i - 1)
}

fn parse_record(tag: Tag, rest: &str, dim: usize, line: usize) -> Result<Record> {
    let (lhs, rhs) = rest
        .split_once("->")
        .ok_or_else(|| err(line, format!("`{}` record needs `->`", tag.name())))?;
    let tokens: Vec<&str> = lhs.split_whitespace().collect();
    if tokens.len() != tag.arity() {
        return Err(err(
            line,
            format!("`{}` takes {} indices, found {}", tag.name(), tag.arity(), tokens.len()),
        ));
    }
    let indices = tokens
        .iter()
        .map(|t| parse_index(t, dim, line))
        .collect::<Result<Vec<_>>>()?;

    let mut terms: Vec<(usize, Scalar)> = Vec::new();
    for part in rhs.split(',') {
        let part = part.trim();
        if part.is_empty() {
            return Err(err(line, "empty coefficient term"));
        }
        let (i, q) = part
            .split_once(':')
            .ok_or_else(|| err(line, format!("expected `index:coefficient`, found `{part}`")))?;
        let i = parse_index(i.trim(), dim, line)?;
        let q = parse_scalar(q).ok_or_else(|| {
            err(line, format!("malformed rational `{}` (use p or p/q)", q.trim()))
        })?;
        if terms.iter().any(|(seen, _)| *seen == i) {
            return Err(err(line, format!("coefficient of e{} given twice", i + 1)));
        }
        terms.push((i, q));
    }
    Ok(Record { line, tag, indices, terms })
}

fn parse_document(text: &str) -> Result<Document> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(n, l)| (n + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    match lines.next() {
        Some((_, HEADER)) => {}
        Some((n, other)) => return Err(err(n, format!("expected header `{HEADER}`, found `{other}`"))),
        None => return Err(err(1, format!("empty document; expected header `{HEADER}`"))),
    }
    let dim = match lines.next() {
        Some((n, l)) => {
            let d = l
                .strip_prefix("dim")
                .filter(|r| r.starts_with(char::is_whitespace))
                .ok_or_else(|| err(n, format!("expected `dim <n>`, found `{l}`")))?;
            d.trim()
                .parse::<usize>()
                .map_err(|_| err(n, format!("malformed dimension `{}`", d.trim())))?
        }
        None => return Err(err(text.lines().count() + 1, "missing `dim <n>` line")),
    };

    let mut doc = Document { dim, label: String::new(), metadata: BTreeMap::new(), records: Vec::new() };
    let mut label_seen = false;
    for (n, l) in lines {
        let (keyword, rest) = l.split_once(char::is_whitespace).unwrap_or((l, ""));
        let tag = match keyword {
            "bin" => Tag::Bin,
            "tri" => Tag::Tri,
            "tor" => Tag::Tor,
            "dtor" => Tag::Dtor,
            "meta" => {
                let rest = rest.trim();
                let (key, value) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
                if key.is_empty() {
                    return Err(err(n, "`meta` needs a key"));
                }
                let value = value.trim().to_string();
                if key == LABEL_KEY {
                    if std::mem::replace(&mut label_seen, true) {
                        return Err(err(n, "duplicate `meta label`"));
                    }
                    doc.label = value;
                } else if doc.metadata.insert(key.to_string(), value).is_some() {
                    return Err(err(n, format!("duplicate `meta {key}`")));
                }
                continue;
            }
            "dim" => return Err(err(n, "`dim` given twice")),
            other => return Err(err(n, format!("unknown record `{other}`"))),
        };
        doc.records.push(parse_record(tag, rest, dim, n)?);
    }
    Ok(doc)
}

/// Parses an algebra file.
pub fn parse(text: &str) -> Result<BolAlgebra> {
    let doc = parse_document(text)?;
    let mut builder = AlgebraBuilder::new(doc.dim);
    for r in &doc.records {
        let result = match r.tag {
            Tag::Bin => builder.product(r.indices[0], r.indices[1], &r.terms).map(|_| ()),
            Tag::Tri => builder.triple(r.indices[0], r.indices[1], r.indices[2], &r.terms).map(|_| ()),
            Tag::Tor | Tag::Dtor => {
                return Err(err(
                    r.line,
                    format!("`{}` record in an algebra file (torsion files are read separately)", r.tag.name()),
                ))
            }
        };
        result.map_err(|e| match e {
            Error::Malformed(m) => err(r.line, m),
            other => other,
        })?;
    }
    builder.label(doc.label);
    for (k, v) in doc.metadata {
        builder.meta(k, v);
    }
    builder.build()
}

/// Parses a torsion file.
pub fn parse_torsion(text: &str) -> Result<TorsionFile> {
    let doc = parse_document(text)?;
    let n = doc.dim;
    let mut torsion = Tensor3::zeros(n);
    let mut derivative = Tensor4::zeros(n);
    let mut set: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for r in &doc.records {
        if !r.tag.is_torsion() {
            return Err(err(r.line, format!("`{}` record in a torsion file", r.tag.name())));
        }
        let (j, k) = (r.indices[0], r.indices[1]);
        let l = r.indices.get(2).copied();
        let mut v = vec![Scalar::zero(); n];
        for (i, q) in &r.terms {
            v[*i] = q.clone();
        }
        if j == k {
            if v.iter().any(|x| !x.is_zero()) {
                return Err(err(r.line, format!("indices {0} {0} must give zero (antisymmetry)", j + 1)));
            }
            continue;
        }
        let key: Vec<usize> = std::iter::once(r.tag as usize).chain(r.indices.iter().copied()).collect();
        let mut mirror = key.clone();
        mirror.swap(1, 2);
        if set.contains_key(&key) {
            return Err(err(r.line, format!("duplicate `{}` record", r.tag.name())));
        }
        let negated: Vec<Scalar> = v.iter().map(|x| -x).collect();
        let current_mirror = match l {
            None => torsion.slice(k, j).to_vec(),
            Some(l) => derivative.slice(k, j, l).to_vec(),
        };
        if set.contains_key(&mirror) && current_mirror != negated {
            return Err(err(
                r.line,
                format!("`{}` record conflicts with its mirror on line {} (antisymmetry)", r.tag.name(), set[&mirror]),
            ));
        }
        match l {
            None => {
                torsion.set_slice(j, k, &v);
                torsion.set_slice(k, j, &negated);
            }
            Some(l) => {
                derivative.set_slice(j, k, l, &v);
                derivative.set_slice(k, j, l, &negated);
            }
        }
        set.insert(key, r.line);
    }
    let data = TorsionData::new(torsion, derivative)?;
    Ok(TorsionFile { data, label: doc.label, metadata: doc.metadata })
}

fn terms(values: &[Scalar]) -> Option<String> {
    let parts: Vec<String> = values
        .iter()
        .enumerate()
        .filter(|(_, q)| !q.is_zero())
        .map(|(i, q)| format!("{}:{}", i + 1, format_scalar(q)))
        .collect();
    (!parts.is_empty()).then(|| parts.join(", "))
}

fn one_line(s: &str) -> String {
    s.replace(['\r', '\n'], " ").trim().to_string()
}

fn write_header(out: &mut String, dim: usize, label: &str, metadata: &BTreeMap<String, String>) {
    let _ = writeln!(out, "{HEADER}");
    let _ = writeln!(out, "dim {dim}");
    if !label.is_empty() {
        let _ = writeln!(out, "meta {LABEL_KEY} {}", one_line(label));
    }
    for (k, v) in metadata {
        if k != LABEL_KEY && !k.is_empty() && !k.contains(char::is_whitespace) {
            let _ = writeln!(out, "meta {k} {}", one_line(v));
        }
    }
}

/// Canonical text of an algebra. Metadata keys containing whitespace and the
/// reserved key `label` are dropped; values are flattened to one line.
pub fn serialize(v: &BolAlgebra) -> String {
    let n = v.dim();
    let mut out = String::new();
    write_header(&mut out, n, v.label(), v.metadata());
    for j in 0..n {
        for k in (j + 1)..n {
            if let Some(t) = terms(v.basis_product(j, k)) {
                let _ = writeln!(out, "bin {} {} -> {t}", j + 1, k + 1);
            }
        }
    }
    for j in 0..n {
        for k in 0..n {
            for l in 0..n {
                if let Some(t) = terms(v.basis_triple(j, k, l)) {
                    let _ = writeln!(out, "tri {} {} {} -> {t}", j + 1, k + 1, l + 1);
                }
            }
        }
    }
    out
}

/// Canonical text of torsion data. Data whose derivative is not
/// antisymmetric in its lower pair has no torsion-file form.
pub fn serialize_torsion(data: &TorsionData, label: &str, metadata: &BTreeMap<String, String>) -> Result<String> {
    if !data.derivative_is_antisymmetric() {
        return Err(Error::Malformed(
            "torsion derivative is not antisymmetric in its lower pair and cannot be written as `dtor` records".into(),
        ));
    }
    let n = data.dim();
    let mut out = String::new();
    write_header(&mut out, n, label, metadata);
    for j in 0..n {
        for k in (j + 1)..n {
            if let Some(t) = terms(data.torsion().slice(j, k)) {
                let _ = writeln!(out, "tor {} {} -> {t}", j + 1, k + 1);
            }
        }
    }
    for j in 0..n {
        for k in (j + 1)..n {
            for l in 0..n {
                if let Some(t) = terms(data.derivative().slice(j, k, l)) {
                    let _ = writeln!(out, "dtor {} {} {} -> {t}", j + 1, k + 1, l + 1);
                }
            }
        }
    }
    Ok(out)
}
