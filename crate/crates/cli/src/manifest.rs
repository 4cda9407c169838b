//! The JSON manifest format (`hopf-cyclic-manifest/v1`).
//!
//! A manifest fixes one ground field and lists named objects. Sparse tensors
//! are arrays of entries `[row indices…, column indices…, "scalar"]`; scalars
//! are strings so that exact values survive the round trip.

use std::collections::HashSet;
use std::path::Path;
use std::sync::Arc;

use hopfcyc_core::exactla::sparse::decode_mixed;
use hopfcyc_core::exactla::{tensor, Field, FieldKind, Irreducibility, Scalar, SparseMatrix, SparseVec, TensorMap};
use hopfcyc_core::hopf::HopfData;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

pub const MANIFEST_SCHEMA: &str = "hopf-cyclic-manifest/v1";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LoadError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("unsupported schema {0:?}, expected {MANIFEST_SCHEMA:?}")]
    Schema(String),
    #[error("{location}: cannot parse scalar {input:?} at position {position}: {message}")]
    Scalar { location: String, input: String, position: usize, message: String },
    #[error("field: {0}")]
    Field(String),
    #[error("{location}: unknown {kind} {name:?}")]
    DanglingReference { location: String, kind: &'static str, name: String },
    #[error("{location}: duplicate name {name:?}")]
    DuplicateName { location: String, name: String },
    #[error("{location}: {message}")]
    Dimension { location: String, message: String },
}

impl LoadError {
    pub fn kind(&self) -> &'static str {
        match self {
            LoadError::Io { .. } => "io",
            LoadError::Parse { .. } | LoadError::Schema(_) => "parse",
            LoadError::Scalar { .. } => "scalar",
            LoadError::Field(_) => "field",
            LoadError::DanglingReference { .. } => "dangling_reference",
            LoadError::DuplicateName { .. } => "duplicate_name",
            LoadError::Dimension { .. } => "dimension",
        }
    }
}

/// One sparse entry: indices followed by a scalar string.
pub type EntryDoc = Vec<Value>;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FieldDoc {
    Rationals,
    Extension {
        /// Coefficients, lowest degree first.
        modulus: Vec<String>,
        generator: String,
        #[serde(default)]
        unchecked: bool,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NamedEntriesDoc {
    pub name: String,
    pub entries: Vec<EntryDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HopfDoc {
    pub name: String,
    pub basis: Vec<String>,
    pub mult: Vec<EntryDoc>,
    pub unit: Vec<EntryDoc>,
    pub comult: Vec<EntryDoc>,
    pub counit: Vec<EntryDoc>,
    pub antipode: Vec<EntryDoc>,
    /// Candidate characters for `pair-search`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub characters: Vec<NamedEntriesDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PairDoc {
    pub name: String,
    pub algebra: String,
    pub delta: Vec<EntryDoc>,
    pub sigma: Vec<EntryDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RMatrixDoc {
    pub name: String,
    pub algebra: String,
    pub entries: Vec<EntryDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModuleAlgebraDoc {
    pub name: String,
    pub algebra: String,
    pub basis: Vec<String>,
    /// `[c, a, b, "s"]`: `e_a e_b` has coefficient `s` on `e_c`.
    pub mult: Vec<EntryDoc>,
    pub unit: Vec<EntryDoc>,
    /// `[c, h, a, "s"]`: `h(e_a)` has coefficient `s` on `e_c`.
    pub action: Vec<EntryDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceDoc {
    pub name: String,
    pub module_algebra: String,
    /// The modular pair the trace is meant for.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pair: Option<String>,
    pub entries: Vec<EntryDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ManifestDoc {
    pub schema: String,
    pub field: FieldDoc,
    #[serde(default)]
    pub hopf_algebras: Vec<HopfDoc>,
    #[serde(default)]
    pub pairs: Vec<PairDoc>,
    #[serde(default)]
    pub r_matrices: Vec<RMatrixDoc>,
    #[serde(default)]
    pub module_algebras: Vec<ModuleAlgebraDoc>,
    #[serde(default)]
    pub traces: Vec<TraceDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraEntry {
    pub name: String,
    pub data: HopfData,
    pub characters: Vec<(String, TensorMap)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairEntry {
    pub name: String,
    pub algebra: String,
    pub delta: TensorMap,
    pub sigma: TensorMap,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RMatrixEntry {
    pub name: String,
    pub algebra: String,
    pub r: TensorMap,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleEntry {
    pub name: String,
    pub algebra: String,
    pub basis_labels: Vec<String>,
    pub mult: SparseMatrix,
    pub unit: SparseVec,
    pub action: SparseMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceEntry {
    pub name: String,
    pub module_algebra: String,
    pub pair: Option<String>,
    pub tau: SparseVec,
}

/// A parsed and cross-referenced manifest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Manifest {
    pub field: Arc<Field>,
    pub algebras: Vec<AlgebraEntry>,
    pub pairs: Vec<PairEntry>,
    pub r_matrices: Vec<RMatrixEntry>,
    pub module_algebras: Vec<ModuleEntry>,
    pub traces: Vec<TraceEntry>,
}

impl Manifest {
    pub fn new(field: Arc<Field>) -> Self {
        Manifest {
            field,
            algebras: Vec::new(),
            pairs: Vec::new(),
            r_matrices: Vec::new(),
            module_algebras: Vec::new(),
            traces: Vec::new(),
        }
    }

    pub fn algebra(&self, name: &str) -> Option<&AlgebraEntry> {
        self.algebras.iter().find(|a| a.name == name)
    }

    pub fn module_algebra(&self, name: &str) -> Option<&ModuleEntry> {
        self.module_algebras.iter().find(|a| a.name == name)
    }

    pub fn pairs_of<'a>(&'a self, algebra: &'a str) -> impl Iterator<Item = &'a PairEntry> + 'a {
        self.pairs.iter().filter(move |p| p.algebra == algebra)
    }

    pub fn pair<'a>(&'a self, algebra: &'a str, name: &str) -> Option<&'a PairEntry> {
        self.pairs_of(algebra).find(|p| p.name == name)
    }

    pub fn r_matrix(&self, algebra: &str, name: &str) -> Option<&RMatrixEntry> {
        self.r_matrices.iter().find(|r| r.algebra == algebra && r.name == name)
    }

    pub fn trace(&self, module_algebra: &str, name: &str) -> Option<&TraceEntry> {
        self.traces.iter().find(|t| t.module_algebra == module_algebra && t.name == name)
    }

    /// Whether any object carries this name.
    pub fn has_object(&self, name: &str) -> bool {
        self.algebra(name).is_some() || self.module_algebra(name).is_some()
    }
}

pub fn load_path(path: &Path) -> Result<Manifest, LoadError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| LoadError::Io { path: path.display().to_string(), message: e.to_string() })?;
    load_str(&text)
}

pub fn load_str(text: &str) -> Result<Manifest, LoadError> {
    let doc: ManifestDoc = serde_json::from_str(text)
        .map_err(|e| LoadError::Parse { line: e.line(), column: e.column(), message: e.to_string() })?;
    resolve(&doc)
}

fn parse_field(doc: &FieldDoc) -> Result<Arc<Field>, LoadError> {
    match doc {
        FieldDoc::Rationals => Ok(Field::rationals()),
        FieldDoc::Extension { modulus, generator, unchecked } => {
            let q = Field::rationals();
            let mut coeffs = Vec::with_capacity(modulus.len());
            for (k, c) in modulus.iter().enumerate() {
                let s = q.parse_scalar(c).map_err(|e| LoadError::Scalar {
                    location: format!("field.modulus[{k}]"),
                    input: e.input,
                    position: e.position,
                    message: e.message,
                })?;
                coeffs.push(s.as_rational().expect("rational scalar"));
            }
            let f = if *unchecked {
                Field::extension_unchecked(coeffs, generator)
            } else {
                Field::extension(coeffs, generator)
            };
            f.map_err(|e| LoadError::Field(e.to_string()))
        }
    }
}

struct Parser {
    field: Arc<Field>,
}

impl Parser {
    fn scalar(&self, location: &str, s: &str) -> Result<Scalar, LoadError> {
        self.field.parse_scalar(s).map_err(|e| LoadError::Scalar {
            location: location.to_string(),
            input: e.input,
            position: e.position,
            message: e.message,
        })
    }

    /// Entries whose index positions range over `dims`.
    fn entries(&self, location: &str, entries: &[EntryDoc], dims: &[usize]) -> Result<Vec<(Vec<usize>, Scalar)>, LoadError> {
        let mut out = Vec::with_capacity(entries.len());
        for (k, e) in entries.iter().enumerate() {
            let loc = format!("{location}[{k}]");
            if e.len() != dims.len() + 1 {
                return Err(LoadError::Dimension {
                    location: loc,
                    message: format!("entry has {} components, expected {} indices and a scalar", e.len(), dims.len()),
                });
            }
            let mut idx = Vec::with_capacity(dims.len());
            for (j, (v, &d)) in e.iter().zip(dims).enumerate() {
                let i = v.as_u64().ok_or_else(|| LoadError::Dimension {
                    location: loc.clone(),
                    message: format!("component {j} is not a nonnegative integer index"),
                })? as usize;
                if i >= d {
                    return Err(LoadError::Dimension {
                        location: loc.clone(),
                        message: format!("index {i} at component {j} is out of range for dimension {d}"),
                    });
                }
                idx.push(i);
            }
            let s = match e.last() {
                Some(Value::String(s)) => self.scalar(&loc, s)?,
                _ => {
                    return Err(LoadError::Dimension {
                        location: loc,
                        message: "last component must be a scalar string".into(),
                    })
                }
            };
            out.push((idx, s));
        }
        Ok(out)
    }

    fn tensor(
        &self,
        location: &str,
        entries: &[EntryDoc],
        d: usize,
        domain: usize,
        codomain: usize,
    ) -> Result<TensorMap, LoadError> {
        let parsed = self.entries(location, entries, &vec![d; domain + codomain])?;
        let items = parsed.into_iter().map(|(idx, s)| {
            let (row, col) = idx.split_at(codomain);
            (row.to_vec(), col.to_vec(), s)
        });
        TensorMap::from_entries(self.field.clone(), d, domain, codomain, items).map_err(|e| {
            LoadError::Dimension { location: location.to_string(), message: e.to_string() }
        })
    }

    fn matrix(&self, location: &str, entries: &[EntryDoc], rows: usize, col_dims: &[usize]) -> Result<SparseMatrix, LoadError> {
        let mut dims = vec![rows];
        dims.extend_from_slice(col_dims);
        let parsed = self.entries(location, entries, &dims)?;
        let cols: usize = col_dims.iter().product();
        let triplets = parsed.into_iter().map(|(idx, s)| {
            let col = idx[1..].iter().zip(col_dims).fold(0, |acc, (i, d)| acc * d + i);
            (idx[0], col, s)
        });
        SparseMatrix::from_triplets(rows, cols, triplets)
            .map_err(|e| LoadError::Dimension { location: location.to_string(), message: e.to_string() })
    }
}

fn check_unique(section: &str, names: impl Iterator<Item = String>) -> Result<(), LoadError> {
    let mut seen = HashSet::new();
    for n in names {
        if !seen.insert(n.clone()) {
            return Err(LoadError::DuplicateName { location: section.to_string(), name: n });
        }
    }
    Ok(())
}

pub fn resolve(doc: &ManifestDoc) -> Result<Manifest, LoadError> {
    if doc.schema != MANIFEST_SCHEMA {
        return Err(LoadError::Schema(doc.schema.clone()));
    }
    let field = parse_field(&doc.field)?;
    let p = Parser { field: field.clone() };
    let mut m = Manifest::new(field.clone());

    check_unique(
        "objects",
        doc.hopf_algebras.iter().map(|h| h.name.clone()).chain(doc.module_algebras.iter().map(|a| a.name.clone())),
    )?;
    for h in &doc.hopf_algebras {
        let d = h.basis.len();
        let loc = |t: &str| format!("hopf_algebras.{}.{t}", h.name);
        let data = HopfData {
            field: field.clone(),
            dim: d,
            basis_labels: h.basis.clone(),
            mult: p.tensor(&loc("mult"), &h.mult, d, 2, 1)?,
            unit: p.tensor(&loc("unit"), &h.unit, d, 0, 1)?,
            comult: p.tensor(&loc("comult"), &h.comult, d, 1, 2)?,
            counit: p.tensor(&loc("counit"), &h.counit, d, 1, 0)?,
            antipode: p.tensor(&loc("antipode"), &h.antipode, d, 1, 1)?,
        };
        check_unique(&loc("characters"), h.characters.iter().map(|c| c.name.clone()))?;
        let characters = h
            .characters
            .iter()
            .map(|c| Ok((c.name.clone(), p.tensor(&loc(&format!("characters.{}", c.name)), &c.entries, d, 1, 0)?)))
            .collect::<Result<_, LoadError>>()?;
        m.algebras.push(AlgebraEntry { name: h.name.clone(), data, characters });
    }

    let algebra_dim = |m: &Manifest, location: String, name: &str| -> Result<usize, LoadError> {
        m.algebra(name).map(|a| a.data.dim).ok_or(LoadError::DanglingReference {
            location,
            kind: "hopf algebra",
            name: name.to_string(),
        })
    };

    check_unique("pairs", doc.pairs.iter().map(|x| format!("{}/{}", x.algebra, x.name)))?;
    for x in &doc.pairs {
        let loc = format!("pairs.{}", x.name);
        let d = algebra_dim(&m, loc.clone(), &x.algebra)?;
        let delta = p.tensor(&format!("{loc}.delta"), &x.delta, d, 1, 0)?;
        let sigma = p.tensor(&format!("{loc}.sigma"), &x.sigma, d, 0, 1)?;
        m.pairs.push(PairEntry { name: x.name.clone(), algebra: x.algebra.clone(), delta, sigma });
    }

    check_unique("r_matrices", doc.r_matrices.iter().map(|x| format!("{}/{}", x.algebra, x.name)))?;
    for x in &doc.r_matrices {
        let loc = format!("r_matrices.{}", x.name);
        let d = algebra_dim(&m, loc.clone(), &x.algebra)?;
        let r = p.tensor(&format!("{loc}.entries"), &x.entries, d, 0, 2)?;
        m.r_matrices.push(RMatrixEntry { name: x.name.clone(), algebra: x.algebra.clone(), r });
    }

    for x in &doc.module_algebras {
        let loc = |t: &str| format!("module_algebras.{}.{t}", x.name);
        let d = algebra_dim(&m, loc("algebra"), &x.algebra)?;
        let n = x.basis.len();
        let mult = p.matrix(&loc("mult"), &x.mult, n, &[n, n])?;
        let unit: SparseVec = p.matrix(&loc("unit"), &x.unit, n, &[])?.column(0).to_vec();
        let action = p.matrix(&loc("action"), &x.action, n, &[d, n])?;
        m.module_algebras.push(ModuleEntry {
            name: x.name.clone(),
            algebra: x.algebra.clone(),
            basis_labels: x.basis.clone(),
            mult,
            unit,
            action,
        });
    }

    check_unique("traces", doc.traces.iter().map(|x| format!("{}/{}", x.module_algebra, x.name)))?;
    for x in &doc.traces {
        let loc = format!("traces.{}", x.name);
        let (n, algebra) = m
            .module_algebra(&x.module_algebra)
            .map(|a| (a.basis_labels.len(), a.algebra.clone()))
            .ok_or(LoadError::DanglingReference {
                location: loc.clone(),
                kind: "module algebra",
                name: x.module_algebra.clone(),
            })?;
        let tau = p.matrix(&format!("{loc}.entries"), &x.entries, n, &[])?.column(0).to_vec();
        if let Some(pair) = &x.pair {
            if m.pair(&algebra, pair).is_none() {
                return Err(LoadError::DanglingReference { location: loc, kind: "pair", name: pair.clone() });
            }
        }
        m.traces.push(TraceEntry {
            name: x.name.clone(),
            module_algebra: x.module_algebra.clone(),
            pair: x.pair.clone(),
            tau,
        });
    }
    Ok(m)
}

fn field_doc(field: &Field) -> FieldDoc {
    match field.kind() {
        FieldKind::Rationals => FieldDoc::Rationals,
        FieldKind::Extension => FieldDoc::Extension {
            modulus: field.modulus().iter().map(|c| c.to_string()).collect(),
            generator: field.generator().to_string(),
            unchecked: field.irreducibility() == Irreducibility::Unchecked,
        },
    }
}

fn entry(field: &Field, idx: impl IntoIterator<Item = usize>, s: &Scalar) -> EntryDoc {
    let mut e: EntryDoc = idx.into_iter().map(Value::from).collect();
    e.push(Value::String(field.format_scalar(s)));
    e
}

pub fn tensor_entries(t: &TensorMap) -> Vec<EntryDoc> {
    let d = t.base_dim();
    t.matrix()
        .triplets()
        .map(|(r, c, s)| {
            let mut idx = tensor::decode(d, t.codomain_arity(), r);
            idx.extend(tensor::decode(d, t.domain_arity(), c));
            entry(t.field(), idx, s)
        })
        .collect()
}

fn matrix_entries(field: &Field, m: &SparseMatrix, col_dims: &[usize]) -> Vec<EntryDoc> {
    let mut digits = vec![0; col_dims.len()];
    m.triplets()
        .map(|(r, c, s)| {
            decode_mixed(col_dims, c, &mut digits);
            entry(field, std::iter::once(r).chain(digits.iter().copied()), s)
        })
        .collect()
}

fn vec_entries(field: &Field, v: &[(usize, Scalar)]) -> Vec<EntryDoc> {
    v.iter().map(|(i, s)| entry(field, [*i], s)).collect()
}

pub fn hopf_doc(name: &str, data: &HopfData, characters: &[(String, TensorMap)]) -> HopfDoc {
    HopfDoc {
        name: name.to_string(),
        basis: data.basis_labels.clone(),
        mult: tensor_entries(&data.mult),
        unit: tensor_entries(&data.unit),
        comult: tensor_entries(&data.comult),
        counit: tensor_entries(&data.counit),
        antipode: tensor_entries(&data.antipode),
        characters: characters
            .iter()
            .map(|(n, c)| NamedEntriesDoc { name: n.clone(), entries: tensor_entries(c) })
            .collect(),
    }
}

pub fn export(m: &Manifest) -> ManifestDoc {
    let f = &m.field;
    let dim_of = |name: &str| m.algebra(name).map_or(0, |a| a.data.dim);
    ManifestDoc {
        schema: MANIFEST_SCHEMA.to_string(),
        field: field_doc(f),
        hopf_algebras: m.algebras.iter().map(|a| hopf_doc(&a.name, &a.data, &a.characters)).collect(),
        pairs: m
            .pairs
            .iter()
            .map(|p| PairDoc {
                name: p.name.clone(),
                algebra: p.algebra.clone(),
                delta: tensor_entries(&p.delta),
                sigma: tensor_entries(&p.sigma),
            })
            .collect(),
        r_matrices: m
            .r_matrices
            .iter()
            .map(|r| RMatrixDoc { name: r.name.clone(), algebra: r.algebra.clone(), entries: tensor_entries(&r.r) })
            .collect(),
        module_algebras: m
            .module_algebras
            .iter()
            .map(|a| {
                let n = a.basis_labels.len();
                ModuleAlgebraDoc {
                    name: a.name.clone(),
                    algebra: a.algebra.clone(),
                    basis: a.basis_labels.clone(),
                    mult: matrix_entries(f, &a.mult, &[n, n]),
                    unit: vec_entries(f, &a.unit),
                    action: matrix_entries(f, &a.action, &[dim_of(&a.algebra), n]),
                }
            })
            .collect(),
        traces: m
            .traces
            .iter()
            .map(|t| TraceDoc {
                name: t.name.clone(),
                module_algebra: t.module_algebra.clone(),
                pair: t.pair.clone(),
                entries: vec_entries(f, &t.tau),
            })
            .collect(),
    }
}

/// Pretty JSON with arrays of scalars kept on one line, so each sparse
/// entry is one line of the file.
pub fn to_json_text(v: &Value) -> String {
    fn inline(v: &Value) -> bool {
        !matches!(v, Value::Array(_) | Value::Object(_))
    }
    fn go(v: &Value, indent: usize, out: &mut String) {
        let pad = "  ".repeat(indent + 1);
        match v {
            Value::Array(items) if items.iter().all(inline) => {
                out.push_str(&serde_json::to_string(v).expect("serializable"));
            }
            Value::Array(items) if items.is_empty() => out.push_str("[]"),
            Value::Array(items) => {
                out.push_str("[\n");
                for (k, item) in items.iter().enumerate() {
                    out.push_str(&pad);
                    go(item, indent + 1, out);
                    out.push_str(if k + 1 < items.len() { ",\n" } else { "\n" });
                }
                out.push_str(&"  ".repeat(indent));
                out.push(']');
            }
            Value::Object(map) if map.is_empty() => out.push_str("{}"),
            Value::Object(map) => {
                out.push_str("{\n");
                for (k, (key, item)) in map.iter().enumerate() {
                    out.push_str(&pad);
                    out.push_str(&serde_json::to_string(key).expect("string"));
                    out.push_str(": ");
                    go(item, indent + 1, out);
                    out.push_str(if k + 1 < map.len() { ",\n" } else { "\n" });
                }
                out.push_str(&"  ".repeat(indent));
                out.push('}');
            }
            _ => out.push_str(&serde_json::to_string(v).expect("serializable")),
        }
    }
    let mut out = String::new();
    go(v, 0, &mut out);
    out.push('\n');
    out
}

pub fn export_text(m: &Manifest) -> String {
    to_json_text(&serde_json::to_value(export(m)).expect("serializable"))
}
