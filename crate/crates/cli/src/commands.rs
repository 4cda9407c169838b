//! Command dispatch: each command maps onto library operations and yields a
//! report document plus an exit code.

use std::path::PathBuf;
use std::time::Instant;

use hopfcyc_core::charmap::{
    sigma_trace_space, validate_action, verify_characteristic_map_with, CharmapError, CyclicConvention,
    ModuleAlgebra, TraceCandidate,
};
use hopfcyc_core::cyclic::{verify_cocyclic, CocyclicModule, CyclicError};
use hopfcyc_core::exactla::{Field, Scalar, TensorMap};
use hopfcyc_core::hopf::{
    check_quasitriangular, check_twisted_antipode_properties, double_cover, drinfeld_element, dual, is_character,
    is_group_like, is_modular_pair_in_involution, transport_pair, validate_hopf, HopfAlgebra, HopfError,
    ModularPair,
};
use hopfcyc_core::report::{Check, Report, Witness};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::builtin;
use crate::manifest::{self, AlgebraEntry, LoadError, Manifest, ModuleEntry, PairEntry};

pub const REPORT_SCHEMA: &str = "hopf-cyclic-report/v1";

pub const EXIT_PASS: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Validate,
    PairCheck,
    PairSearch,
    CyclicVerify,
    Cohomology,
    Dual,
    Drinfeld,
    DoubleCover,
    TraceSpace,
    CharmapVerify,
    ExportCatalog,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Validate => "validate",
            Command::PairCheck => "pair-check",
            Command::PairSearch => "pair-search",
            Command::CyclicVerify => "cyclic-verify",
            Command::Cohomology => "cohomology",
            Command::Dual => "dual",
            Command::Drinfeld => "drinfeld",
            Command::DoubleCover => "double-cover",
            Command::TraceSpace => "trace-space",
            Command::CharmapVerify => "charmap-verify",
            Command::ExportCatalog => "export-catalog",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Options {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub object: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pair: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<String>,
    pub max_level: usize,
    pub max_degree: usize,
    pub max_space: usize,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub unchecked: bool,
    pub convention: CyclicConvention,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub manifest: Option<PathBuf>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub out: Option<PathBuf>,
    #[serde(skip)]
    pub timings: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            object: None,
            pair: None,
            r: None,
            trace: None,
            max_level: 3,
            max_degree: 3,
            max_space: hopfcyc_core::cyclic::DEFAULT_MAX_SPACE,
            unchecked: false,
            convention: CyclicConvention::Rotation,
            manifest: None,
            out: None,
            timings: true,
        }
    }
}

#[derive(Debug)]
enum CliError {
    Load(LoadError),
    Input(String),
    ResourceCap(String),
    /// A precondition check failed; its report is the command's result.
    Failed(Report),
}

impl From<LoadError> for CliError {
    fn from(e: LoadError) -> Self {
        CliError::Load(e)
    }
}

impl From<HopfError> for CliError {
    fn from(e: HopfError) -> Self {
        match e {
            HopfError::AxiomsFailed(r) => CliError::Failed(prefixed("axioms.", r)),
            HopfError::NotCharacter(r) => CliError::Failed(prefixed("delta.", r)),
            HopfError::NotGroupLike(r) => CliError::Failed(prefixed("sigma.", r)),
            HopfError::NotQuasitriangular(r) => CliError::Failed(prefixed("r.", r)),
            HopfError::DoubleCover(r) => CliError::Failed(r),
            HopfError::NotInvertible { what } => {
                CliError::Failed(single(Check::fail(format!("{what}_invertible"), None)))
            }
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<CyclicError> for CliError {
    fn from(e: CyclicError) -> Self {
        match e {
            CyclicError::LevelCap { .. } => CliError::ResourceCap(e.to_string()),
            CyclicError::NotInInvolution(r) => {
                let mut rep = single(Check::fail("pair.in_involution", None));
                rep.extend_prefixed("pair.", r);
                CliError::Failed(rep)
            }
            CyclicError::BicomplexIdentity { identity, level } => CliError::Failed(single(Check::fail(
                "bicomplex_identities",
                Some(Witness::Note(format!("{identity} fails at level {level}"))),
            ))),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<CharmapError> for CliError {
    fn from(e: CharmapError) -> Self {
        match e {
            CharmapError::Cyclic(c) => c.into(),
            CharmapError::Hopf(h) => h.into(),
            CharmapError::InvalidTrace(r) => CliError::Failed(prefixed("trace.", r)),
            other => CliError::Input(other.to_string()),
        }
    }
}

fn prefixed(prefix: &str, r: Report) -> Report {
    let mut out = Report::new();
    out.extend_prefixed(prefix, r);
    out
}

fn single(c: Check) -> Report {
    let mut r = Report::new();
    r.push(c);
    r
}

struct Output {
    report: Report,
    data: Map<String, Value>,
}

impl Output {
    fn new() -> Self {
        Output { report: Report::new(), data: Map::new() }
    }

    fn set(&mut self, key: &str, v: impl Serialize) {
        self.data.insert(key.to_string(), serde_json::to_value(v).expect("serializable"));
    }
}

/// The manifests an invocation can see.
pub struct Sources {
    pub manifests: Vec<Manifest>,
}

impl Sources {
    pub fn builtin() -> Self {
        Sources { manifests: builtin::all().into_iter().map(|(_, m)| m).collect() }
    }

    pub fn from_options(opts: &Options) -> Result<Self, LoadError> {
        match &opts.manifest {
            Some(p) => Ok(Sources { manifests: vec![manifest::load_path(p)?] }),
            None => Ok(Self::builtin()),
        }
    }
}

struct Ctx<'a> {
    opts: &'a Options,
    sources: &'a Sources,
}

enum Object<'a> {
    Algebra(&'a Manifest, &'a AlgebraEntry),
    Module(&'a Manifest, &'a ModuleEntry),
}

impl<'a> Ctx<'a> {
    fn object_name(&self) -> Result<&'a str, CliError> {
        self.opts.object.as_deref().ok_or_else(|| CliError::Input("--object is required".into()))
    }

    fn object(&self) -> Result<Object<'a>, CliError> {
        let name = self.object_name()?;
        for m in &self.sources.manifests {
            if let Some(a) = m.algebra(name) {
                return Ok(Object::Algebra(m, a));
            }
            if let Some(a) = m.module_algebra(name) {
                return Ok(Object::Module(m, a));
            }
        }
        Err(CliError::Input(format!("unknown object {name:?}")))
    }

    fn algebra(&self) -> Result<(&'a Manifest, &'a AlgebraEntry), CliError> {
        match self.object()? {
            Object::Algebra(m, a) => Ok((m, a)),
            Object::Module(..) => Err(CliError::Input(format!("{} is a module algebra, not a Hopf algebra", self.object_name()?))),
        }
    }

    fn module(&self) -> Result<(&'a Manifest, &'a ModuleEntry), CliError> {
        match self.object()? {
            Object::Module(m, a) => Ok((m, a)),
            Object::Algebra(..) => Err(CliError::Input(format!("{} is a Hopf algebra, not a module algebra", self.object_name()?))),
        }
    }

    fn pair_entry(&self, m: &'a Manifest, algebra: &'a str) -> Result<&'a PairEntry, CliError> {
        self.pair_entry_or(m, algebra, None)
    }

    /// `--pair`, else `fallback`, else the first pair of `algebra`.
    fn pair_entry_or(&self, m: &'a Manifest, algebra: &'a str, fallback: Option<&'a str>) -> Result<&'a PairEntry, CliError> {
        match self.opts.pair.as_deref().or(fallback) {
            Some(name) => m
                .pair(algebra, name)
                .ok_or_else(|| CliError::Input(format!("unknown pair {name:?} for {algebra}"))),
            None => m
                .pairs_of(algebra)
                .next()
                .ok_or_else(|| CliError::Input(format!("{algebra} has no pairs; pass --pair"))),
        }
    }
}

fn hopf_of(entry: &AlgebraEntry) -> Result<HopfAlgebra, CliError> {
    Ok(HopfAlgebra::new(entry.data.clone())?)
}

fn pair_of(h: &HopfAlgebra, p: &PairEntry) -> Result<ModularPair, CliError> {
    Ok(ModularPair::new(h, p.delta.clone(), p.sigma.clone())?)
}

fn module_of(m: &Manifest, entry: &ModuleEntry) -> Result<ModuleAlgebra, CliError> {
    let a = m.algebra(&entry.algebra).ok_or_else(|| CliError::Input(format!("unknown algebra {}", entry.algebra)))?;
    let h = hopf_of(a)?;
    Ok(ModuleAlgebra::new(h, entry.basis_labels.clone(), entry.mult.clone(), entry.unit.clone(), entry.action.clone())?)
}

/// Informational flags as the list of names that hold, so every boolean
/// in a report is a check result.
fn properties<'a>(flags: &[(&'a str, bool)]) -> Vec<&'a str> {
    flags.iter().filter(|(_, v)| *v).map(|(k, _)| *k).collect()
}

fn element_json(field: &Field, labels: &[String], coords: &[(usize, Scalar)]) -> Value {
    let mut map = Map::new();
    for (i, s) in coords {
        map.insert(labels[*i].clone(), Value::String(field.format_scalar(s)));
    }
    Value::Object(map)
}

fn vector_json(h: &HopfAlgebra, v: &TensorMap) -> Value {
    element_json(&h.field, &h.basis_labels, v.coords())
}

fn covector_json(h: &HopfAlgebra, v: &TensorMap) -> Value {
    let coords: Vec<(usize, Scalar)> = v.matrix().triplets().map(|(_, c, s)| (c, s.clone())).collect();
    element_json(&h.field, &h.basis_labels, &coords)
}

fn validate(ctx: &Ctx) -> Result<Output, CliError> {
    let mut out = Output::new();
    match ctx.object()? {
        Object::Algebra(m, a) => {
            out.set("dim", a.data.dim);
            out.set("field", m.field.to_string());
            let axioms = validate_hopf(&a.data)?;
            let ok = axioms.all_passed();
            out.report.extend_prefixed("axioms.", axioms);
            if !ok {
                return Ok(out);
            }
            let h = hopf_of(a)?;
            let s2 = h.antipode.compose(&h.antipode).map_err(|e| CliError::Input(e.to_string()))?;
            out.set(
                "properties",
                properties(&[
                    ("commutative", h.is_commutative()),
                    ("cocommutative", h.is_cocommutative()),
                    ("antipode_involutive", s2 == h.id(1)),
                ]),
            );
            let mut candidates: Vec<(String, TensorMap)> = vec![("eps".into(), h.counit.clone())];
            candidates.extend(a.characters.iter().cloned());
            candidates.extend(m.pairs_of(&a.name).map(|p| (format!("pair:{}", p.name), p.delta.clone())));
            for (name, delta) in candidates {
                let ch = is_character(&h, &delta)?;
                if !ch.all_passed() {
                    out.report.extend_prefixed(&format!("character.{name}."), ch);
                    continue;
                }
                out.report.extend_prefixed(&format!("twisted.{name}."), check_twisted_antipode_properties(&h, &delta)?);
            }
        }
        Object::Module(m, entry) => {
            let ma = module_of(m, entry)?;
            out.set("dim", ma.dim);
            out.set("algebra", &entry.algebra);
            out.report.extend_prefixed("action.", validate_action(&ma));
        }
    }
    Ok(out)
}

fn pair_check(ctx: &Ctx) -> Result<Output, CliError> {
    let (m, a) = ctx.algebra()?;
    let h = hopf_of(a)?;
    let entry = ctx.pair_entry(m, &a.name)?;
    let pair = pair_of(&h, entry)?;
    let mut out = Output::new();
    out.set("pair", &entry.name);
    out.set("delta", covector_json(&h, &pair.delta));
    out.set("sigma", vector_json(&h, &pair.sigma));
    out.set("properties", properties(&[("normalized", pair.normalized), ("in_involution", pair.in_involution)]));
    out.report = is_modular_pair_in_involution(&h, &pair);
    Ok(out)
}

fn pair_search(ctx: &Ctx) -> Result<Output, CliError> {
    let (m, a) = ctx.algebra()?;
    let h = hopf_of(a)?;
    let mut group_likes = Vec::new();
    for i in 0..h.dim {
        if is_group_like(&h, &h.basis_vector(i))?.all_passed() {
            group_likes.push(i);
        }
    }
    let mut characters: Vec<(String, TensorMap)> = vec![("eps".into(), h.counit.clone())];
    let declared = a.characters.iter().cloned().chain(m.pairs_of(&a.name).map(|p| (format!("pair:{}", p.name), p.delta.clone())));
    for (name, c) in declared {
        if characters.iter().all(|(_, d)| *d != c) && is_character(&h, &c)?.all_passed() {
            characters.push((name, c));
        }
    }
    let mut found = Vec::new();
    for &s in &group_likes {
        for (name, delta) in &characters {
            let Ok(pair) = ModularPair::new(&h, delta.clone(), h.basis_vector(s)) else { continue };
            if is_modular_pair_in_involution(&h, &pair).all_passed() {
                found.push(json!({ "sigma": h.basis_labels[s], "delta": name }));
            }
        }
    }
    let mut out = Output::new();
    out.set("group_likes", group_likes.iter().map(|&i| h.basis_labels[i].clone()).collect::<Vec<_>>());
    out.set("characters", characters.iter().map(|(n, _)| n.clone()).collect::<Vec<_>>());
    out.set("candidates", group_likes.len() * characters.len());
    out.report.push(Check::from_bool("pairs_found", !found.is_empty()));
    out.set("pairs", found);
    Ok(out)
}

fn cocyclic_module(ctx: &Ctx) -> Result<(CocyclicModule, String), CliError> {
    let (m, a) = ctx.algebra()?;
    let h = hopf_of(a)?;
    let entry = ctx.pair_entry(m, &a.name)?;
    let pair = pair_of(&h, entry)?;
    let module = if ctx.opts.unchecked {
        CocyclicModule::new_unchecked(h, pair)
    } else {
        CocyclicModule::new(h, pair)?
    };
    Ok((module.with_max_space(ctx.opts.max_space), entry.name.clone()))
}

fn cyclic_verify(ctx: &Ctx) -> Result<Output, CliError> {
    let (module, pair) = cocyclic_module(ctx)?;
    let n = ctx.opts.max_level;
    let mut out = Output::new();
    out.set("pair", pair);
    out.set("properties", properties(&[("in_involution", module.pair().in_involution)]));
    out.set("level_dims", (0..=n).map(|k| module.level_dim(k)).collect::<Vec<_>>());
    out.report = verify_cocyclic(&module, n)?;
    Ok(out)
}

fn cohomology(ctx: &Ctx) -> Result<Output, CliError> {
    let (module, pair) = cocyclic_module(ctx)?;
    let table = module.cohomology_dims(ctx.opts.max_degree)?;
    let mut out = Output::new();
    out.set("pair", pair);
    out.set("hochschild", table.hochschild());
    out.set("cyclic", table.cyclic());
    out.set("table", &table.rows);
    out.report.push(Check::pass("bicomplex_identities"));
    Ok(out)
}

fn dual_cmd(ctx: &Ctx) -> Result<Output, CliError> {
    let (m, a) = ctx.algebra()?;
    let h = hopf_of(a)?;
    let dh = dual(&h)?;
    let mut out = Output::new();
    out.report.extend_prefixed("dual.", validate_hopf(&dh)?);
    for entry in m.pairs_of(&a.name) {
        let pair = pair_of(&h, entry)?;
        let dp = transport_pair(&h, &pair)?;
        out.report.extend_prefixed(&format!("pair.{}.", entry.name), dp.report);
    }
    let doc = manifest::hopf_doc(&format!("{}*", a.name), dh.data(), &[]);
    out.set("dual", doc);
    Ok(out)
}

fn r_matrix<'a>(ctx: &Ctx<'a>, m: &'a Manifest, algebra: &str) -> Result<(&'a str, &'a TensorMap), CliError> {
    let found = match &ctx.opts.r {
        Some(name) => m.r_matrix(algebra, name),
        None => m.r_matrices.iter().find(|r| r.algebra == algebra),
    };
    found
        .map(|r| (r.name.as_str(), &r.r))
        .ok_or_else(|| CliError::Input(format!("no R-matrix {:?} for {algebra}", ctx.opts.r.as_deref().unwrap_or(""))))
}

fn drinfeld(ctx: &Ctx) -> Result<Output, CliError> {
    let (m, a) = ctx.algebra()?;
    let h = hopf_of(a)?;
    let (name, r) = r_matrix(ctx, m, &a.name)?;
    let mut out = Output::new();
    out.set("r", name);
    let qt = check_quasitriangular(&h, r)?;
    let ok = qt.report.all_passed();
    out.report.extend_prefixed("r.", qt.report);
    if !ok {
        return Ok(out);
    }
    let d = drinfeld_element(&h, r)?;
    out.set("u", vector_json(&h, &d.u));
    if let Some(ui) = &d.u_inverse {
        out.set("u_inverse", vector_json(&h, ui));
    }
    out.report.extend_prefixed("u.", d.report);
    Ok(out)
}

fn double_cover_cmd(ctx: &Ctx) -> Result<Output, CliError> {
    let (m, a) = ctx.algebra()?;
    let h = hopf_of(a)?;
    let (name, r) = r_matrix(ctx, m, &a.name)?;
    let dc = double_cover(&h, r)?;
    let mut out = Output::new();
    out.set("r", name);
    out.set("dim", dc.hopf.dim);
    out.set("basis", &dc.hopf.basis_labels);
    out.set("sigma", vector_json(&dc.hopf, &dc.sigma));
    out.set("theta", vector_json(&dc.hopf, &dc.theta));
    out.report = dc.report;
    Ok(out)
}

fn trace_space(ctx: &Ctx) -> Result<Output, CliError> {
    let (m, entry) = ctx.module()?;
    let ma = module_of(m, entry)?;
    let declared = m.traces.iter().filter(|t| t.module_algebra == entry.name).find_map(|t| t.pair.as_deref());
    let pe = ctx.pair_entry_or(m, &entry.algebra, declared)?;
    let pair = pair_of(&ma.hopf, pe)?;
    let mut out = Output::new();
    out.set("pair", &pe.name);
    out.report.extend_prefixed("action.", validate_action(&ma));
    let basis = sigma_trace_space(&ma, &pair);
    for (i, tau) in basis.iter().enumerate() {
        let cand = TraceCandidate::evaluate(&ma, &pair, tau.clone())?;
        for c in cand.checks() {
            out.report.push(Check { name: format!("basis[{i}].{}", c.name), ..c });
        }
    }
    out.set("dimension", basis.len());
    out.set(
        "basis",
        basis.iter().map(|t| element_json(ma.field(), &ma.basis_labels, t)).collect::<Vec<_>>(),
    );
    Ok(out)
}

fn charmap_verify(ctx: &Ctx) -> Result<Output, CliError> {
    let (m, entry) = ctx.module()?;
    let ma = module_of(m, entry)?;
    let trace = match &ctx.opts.trace {
        Some(name) => m.trace(&entry.name, name),
        None => m.traces.iter().find(|t| t.module_algebra == entry.name),
    }
    .ok_or_else(|| CliError::Input(format!("no trace {:?} for {}", ctx.opts.trace.as_deref().unwrap_or(""), entry.name)))?;
    let pe = ctx.pair_entry_or(m, &entry.algebra, trace.pair.as_deref())?;
    let pair = pair_of(&ma.hopf, pe)?;
    let mut out = Output::new();
    out.set("pair", &pe.name);
    out.set("trace", &trace.name);
    out.set("convention", ctx.opts.convention);
    out.report = verify_characteristic_map_with(&ma, &pair, &trace.tau, ctx.opts.max_level, ctx.opts.convention)?;
    Ok(out)
}

fn export_catalog(ctx: &Ctx) -> Result<Output, CliError> {
    let dir = ctx.opts.out.clone().unwrap_or_else(|| PathBuf::from("catalog"));
    std::fs::create_dir_all(&dir).map_err(|e| CliError::Input(format!("{}: {e}", dir.display())))?;
    let mut files = Vec::new();
    for (stem, m) in builtin::all() {
        let path = dir.join(format!("{stem}.json"));
        std::fs::write(&path, manifest::export_text(&m)).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        files.push(path.display().to_string());
    }
    let mut out = Output::new();
    for f in &files {
        out.report.push(Check::pass(format!("write[{f}]")));
    }
    out.set("files", files);
    Ok(out)
}

/// The result of one invocation.
pub struct Outcome {
    pub document: Value,
    pub exit_code: i32,
    pub summary: String,
}

pub fn run(command: Command, opts: &Options) -> Outcome {
    let start = Instant::now();
    let result = match Sources::from_options(opts) {
        Err(e) => Err(CliError::Load(e)),
        Ok(sources) if command == Command::ExportCatalog => export_catalog(&Ctx { opts, sources: &sources }),
        Ok(sources) => {
            let ctx = Ctx { opts, sources: &sources };
            match command {
                Command::Validate => validate(&ctx),
                Command::PairCheck => pair_check(&ctx),
                Command::PairSearch => pair_search(&ctx),
                Command::CyclicVerify => cyclic_verify(&ctx),
                Command::Cohomology => cohomology(&ctx),
                Command::Dual => dual_cmd(&ctx),
                Command::Drinfeld => drinfeld(&ctx),
                Command::DoubleCover => double_cover_cmd(&ctx),
                Command::TraceSpace => trace_space(&ctx),
                Command::CharmapVerify => charmap_verify(&ctx),
                Command::ExportCatalog => unreachable!(),
            }
        }
    };
    let elapsed = start.elapsed();

    let mut doc = Map::new();
    doc.insert("schema".into(), json!(REPORT_SCHEMA));
    doc.insert("command".into(), json!(command.name()));
    doc.insert("args".into(), serde_json::to_value(opts).expect("serializable"));
    let (report, data, error, exit_code) = match result {
        Ok(o) => {
            let code = if o.report.all_passed() { EXIT_PASS } else { EXIT_CHECK_FAILED };
            (o.report, o.data, None, code)
        }
        Err(CliError::Failed(r)) => (r, Map::new(), None, EXIT_CHECK_FAILED),
        Err(CliError::Load(e)) => {
            (Report::new(), Map::new(), Some(json!({ "kind": e.kind(), "message": e.to_string() })), EXIT_INPUT)
        }
        Err(CliError::Input(msg)) => (Report::new(), Map::new(), Some(json!({ "kind": "input", "message": msg })), EXIT_INPUT),
        Err(CliError::ResourceCap(msg)) => {
            (Report::new(), Map::new(), Some(json!({ "kind": "resource_cap", "message": msg })), EXIT_RESOURCE)
        }
    };
    doc.insert("passed".into(), json!(exit_code == EXIT_PASS));
    doc.insert("exit_code".into(), json!(exit_code));
    doc.insert("checks".into(), serde_json::to_value(&report.checks).expect("serializable"));
    doc.insert("data".into(), Value::Object(data));
    if let Some(e) = &error {
        doc.insert("error".into(), e.clone());
    }
    if opts.timings {
        doc.insert("timings_ms".into(), json!({ "total": elapsed.as_secs_f64() * 1e3 }));
    }

    let target = opts.object.as_deref().map(|o| format!(" {o}")).unwrap_or_default();
    let mut summary = match &error {
        Some(e) => format!("{}{target}: error ({}): {}", command.name(), e["kind"].as_str().unwrap_or(""), e["message"].as_str().unwrap_or("")),
        None => {
            let passed = report.checks.iter().filter(|c| c.passed).count();
            format!("{}{target}: {passed}/{} checks passed", command.name(), report.len())
        }
    };
    if opts.timings {
        summary.push_str(&format!(" in {:.1} ms", elapsed.as_secs_f64() * 1e3));
    }
    for c in report.failures().take(5) {
        summary.push_str(&format!("\n  FAIL {}", c.name));
        match &c.witness {
            Some(Witness::Basis(idx)) => summary.push_str(&format!(" at {idx:?}")),
            Some(Witness::Note(n)) => summary.push_str(&format!(" ({n})")),
            None => {}
        }
    }
    Outcome { document: Value::Object(doc), exit_code, summary }
}
