//! Command implementations for the `lie-ncg` binary. Each command returns
//! an [`Outcome`] instead of printing, so that it can be driven from tests.

pub mod error;
pub mod export;

use std::fmt::Write as _;
use std::path::Path;

use serde::Serialize;
use serde_json::json;

use lie_ncg_core::graphlab::graph_isomorphic;
use lie_ncg_core::verifier::{
    algebras_isomorphic, tensor_index, AlgebraFacts, AlgebraSummary, ConjectureTable, DegreeShapes, Scope,
    TheoremReport, Verifier, STATEMENTS,
};
use lie_ncg_core::{AlgebraSpec, Error, LieAlgebra, Limits, NcGraph, PropertyReport};

pub use error::{CliError, CliResult};
pub use export::{import_json, ExportFormat, GraphDocument};

/// Environment variable overriding the `q^n` element cap.
pub const CAP_VAR: &str = "LIE_NCG_CAP";

pub const EXIT_OK: i32 = 0;
/// A statement failed verification.
pub const EXIT_FAILED: i32 = 1;
/// The command itself could not run.
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn from_result(r: CliResult<Outcome>) -> Self {
        r.unwrap_or_else(|e| Outcome {
            code: EXIT_ERROR,
            stdout: String::new(),
            stderr: format!("{}\n", e.to_json()),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

/// Default limits, with the element cap taken from [`CAP_VAR`] when set.
pub fn limits_from_env() -> CliResult<Limits> {
    let limits = Limits::default();
    match std::env::var(CAP_VAR) {
        Ok(v) => v
            .trim()
            .parse::<u64>()
            .map(|cap| limits.with_element_cap(cap))
            .map_err(|_| CliError::InvalidArgument(format!("{CAP_VAR} must be a non-negative integer, got {v:?}"))),
        Err(_) => Ok(limits),
    }
}

fn pretty(v: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

pub fn read_spec(path: &Path) -> CliResult<AlgebraSpec> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    serde_json::from_str(&text).map_err(|e| CliError::parse(path.display().to_string(), &e))
}

pub fn load_algebra(path: &Path) -> CliResult<LieAlgebra> {
    Ok(LieAlgebra::from_spec(&read_spec(path)?)?)
}

fn algebra_name(path: &Path) -> String {
    path.file_stem().map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned())
}

/// Parses and type-checks a spec file.
pub fn cmd_validate(path: &Path) -> Outcome {
    Outcome::from_result((|| {
        let alg = load_algebra(path)?;
        let body = json!({
            "valid": true,
            "q": alg.field().order(),
            "dim": alg.dim(),
            "order": alg.order(),
            "abelian": alg.is_abelian(),
        });
        Ok(Outcome::ok(format!("{body}\n")))
    })())
}

#[derive(Debug, Clone, Serialize)]
pub struct Analysis {
    pub name: String,
    pub report: PropertyReport,
    pub algebra: AlgebraSummary,
}

pub fn analyze(path: &Path, limits: &Limits) -> CliResult<Analysis> {
    let facts = AlgebraFacts::compute(algebra_name(path), load_algebra(path)?, limits)?;
    Ok(Analysis {
        name: facts.name.clone(),
        algebra: facts.summary(),
        report: facts.report,
    })
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "unknown".into(), T::to_string)
}

fn analysis_text(a: &Analysis) -> String {
    let (r, s) = (&a.report, &a.algebra);
    let mut out = String::new();
    let _ = writeln!(out, "algebra: {} (q = {}, dim = {})", a.name, s.q, s.dim);
    let _ = writeln!(out, "order: {}", s.order);
    let _ = writeln!(out, "center order: {} (dim {})", s.center_order, s.center_dim);
    let _ = writeln!(out, "derived dim: {}", s.derived_dim);
    let _ = writeln!(out, "nilpotent: {}", s.nilpotent);
    let hist: Vec<String> = s.centralizer_histogram.iter().map(|(c, k)| format!("{c}: {k}")).collect();
    let _ = writeln!(out, "centralizer sizes: {}", hist.join(", "));
    let _ = writeln!(out, "vertices: {}", r.vertex_count);
    let _ = writeln!(out, "edges: {}", r.edge_count);
    let _ = writeln!(out, "degrees: min {}, max {}", r.min_degree, r.max_degree);
    let _ = writeln!(out, "connected: {}", r.is_connected);
    let _ = writeln!(out, "diameter: {}", r.diameter);
    let _ = writeln!(out, "girth: {}", r.girth);
    let _ = writeln!(out, "regular: {}", r.is_regular);
    let _ = writeln!(out, "eulerian: {}", r.is_eulerian);
    let _ = writeln!(out, "hamiltonian: {}", opt(&r.is_hamiltonian));
    let _ = writeln!(out, "complete: {}", r.is_complete);
    let _ = writeln!(out, "complete bipartite: {}", r.is_complete_bipartite);
    let _ = writeln!(out, "planar: {}", r.is_planar);
    let _ = writeln!(out, "outerplanar: {}", r.is_outerplanar);
    let _ = writeln!(out, "domination number: {}", opt(&r.domination_number));
    out
}

pub fn cmd_analyze(path: &Path, format: Format, limits: &Limits) -> Outcome {
    Outcome::from_result(analyze(path, limits).map(|a| {
        Outcome::ok(match format {
            Format::Json => pretty(&a),
            Format::Text => analysis_text(&a),
        })
    }))
}

pub fn export(path: &Path, format: ExportFormat, limits: &Limits) -> CliResult<String> {
    let g = NcGraph::build(&load_algebra(path)?, limits)?;
    Ok(export::render(&g, format))
}

/// Renders the graph; writes it to `output` if given, else to stdout.
pub fn cmd_export(path: &Path, format: ExportFormat, output: Option<&Path>, limits: &Limits) -> Outcome {
    Outcome::from_result((|| {
        let text = export(path, format, limits)?;
        match output {
            Some(out) => {
                std::fs::write(out, text).map_err(|e| CliError::io(out, e))?;
                Ok(Outcome::ok(String::new()))
            }
            None => Ok(Outcome::ok(text)),
        }
    })())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScopeKind {
    Catalog,
    Enumerate,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyArgs {
    pub scope: ScopeKind,
    pub max_dim: usize,
    pub fields: Vec<u32>,
    pub dedupe: bool,
    /// A statement id, or `"all"`.
    pub statement: String,
}

pub fn verify(args: &VerifyArgs, limits: &Limits) -> CliResult<Vec<TheoremReport>> {
    let ids: Vec<&str> = if args.statement == "all" {
        STATEMENTS.iter().map(|s| s.id).collect()
    } else {
        lie_ncg_core::verifier::statement(&args.statement)?;
        vec![args.statement.as_str()]
    };
    let scope = match args.scope {
        ScopeKind::Catalog => Scope::catalog(),
        ScopeKind::Enumerate => {
            let mut s = Scope::enumeration(args.max_dim, &args.fields);
            if let Some(e) = s.enumerate.as_mut() {
                e.dedupe = args.dedupe;
            }
            s
        }
    };
    let verifier = Verifier::new(scope, *limits)?;
    if ids.len() == STATEMENTS.len() {
        return Ok(verifier.check_all()?);
    }
    Ok(ids.iter().map(|id| verifier.check(id)).collect::<Result<_, Error>>()?)
}

fn report_line(r: &TheoremReport) -> String {
    let mut line = format!(
        "{} {}: {} instances, {} vacuous, {} failures [{}]",
        if r.passed() { "PASS" } else { "FAIL" },
        r.statement_id,
        r.instances_checked,
        r.vacuous_count,
        r.failures.len(),
        r.quote
    );
    for f in r.failures.iter().take(5) {
        let _ = write!(line, "\n    {}: {}", f.algebra, f.detail);
    }
    if r.failures.len() > 5 {
        let _ = write!(line, "\n    ... {} more", r.failures.len() - 5);
    }
    for n in &r.notes {
        let _ = write!(line, "\n    note: {n}");
    }
    line.push('\n');
    line
}

/// Emits one report per statement (JSON lines in JSON mode). Exit 0 iff
/// all pass.
pub fn cmd_verify(args: &VerifyArgs, format: Format, limits: &Limits) -> Outcome {
    Outcome::from_result(verify(args, limits).map(|reports| {
        let mut out = String::new();
        for r in &reports {
            match format {
                Format::Json => {
                    out.push_str(&serde_json::to_string(r).expect("reports serialize"));
                    out.push('\n');
                }
                Format::Text => out.push_str(&report_line(r)),
            }
        }
        let failed = reports.iter().filter(|r| !r.passed()).count();
        if format == Format::Text {
            let _ = writeln!(out, "{} of {} statements passed", reports.len() - failed, reports.len());
        }
        Outcome {
            code: if failed == 0 { EXIT_OK } else { EXIT_FAILED },
            stdout: out,
            stderr: String::new(),
        }
    }))
}

#[derive(Debug, Clone, Serialize)]
pub struct SideFacts {
    pub name: String,
    pub q: u32,
    pub dim: usize,
    pub order: u64,
    pub center_order: u64,
    pub nilpotent: bool,
    pub vertex_count: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Comparison {
    pub isomorphic: bool,
    /// `witness[i]` is the vertex of the second graph matched to vertex `i`
    /// of the first.
    pub witness: Option<Vec<usize>>,
    /// The witness as label pairs.
    pub witness_labels: Option<Vec<[String; 2]>>,
    pub algebras: [SideFacts; 2],
    /// `None` when the change-of-basis scan is out of reach or the algebras
    /// differ in field or dimension.
    pub algebras_isomorphic: Option<bool>,
    /// Pairwise statements whose hypotheses hold for this pair.
    pub hypotheses_firing: Vec<String>,
}

pub fn compare(a: &Path, b: &Path, limits: &Limits) -> CliResult<Comparison> {
    let fa = AlgebraFacts::compute(algebra_name(a), load_algebra(a)?, limits)?;
    let fb = AlgebraFacts::compute(algebra_name(b), load_algebra(b)?, limits)?;
    let witness = graph_isomorphic(fa.graph.graph(), fb.graph.graph(), limits)?;
    let witness_labels = witness.as_ref().map(|phi| {
        phi.iter()
            .enumerate()
            .map(|(u, &v)| [fa.graph.labels()[u].clone(), fb.graph.labels()[v].clone()])
            .collect()
    });
    let mut hypotheses_firing: Vec<String> = Vec::new();
    if witness.is_some() {
        hypotheses_firing.extend(DegreeShapes::of_graph(fa.graph.graph()).firing().into_iter().map(String::from));
        if fa.q == 2 && fb.q == 2 {
            hypotheses_firing.push("Prop4.6".into());
        }
    }
    let algebras_isomorphic = if fa.q == fb.q && fa.dim == fb.dim {
        match algebras_isomorphic(&fa.algebra, &fb.algebra) {
            Ok(iso) => Some(iso),
            Err(Error::CapExceeded { .. }) => None,
            Err(e) => return Err(e.into()),
        }
    } else {
        Some(false)
    };
    let side = |f: &AlgebraFacts| SideFacts {
        name: f.name.clone(),
        q: f.q,
        dim: f.dim,
        order: f.order,
        center_order: f.center_order,
        nilpotent: f.nilpotent,
        vertex_count: f.report.vertex_count,
    };
    Ok(Comparison {
        isomorphic: witness.is_some(),
        algebras: [side(&fa), side(&fb)],
        witness,
        witness_labels,
        algebras_isomorphic,
        hypotheses_firing,
    })
}

fn comparison_text(c: &Comparison) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graphs isomorphic: {}", c.isomorphic);
    if let Some(pairs) = &c.witness_labels {
        let shown: Vec<String> = pairs.iter().map(|[a, b]| format!("{a} -> {b}")).collect();
        let _ = writeln!(out, "witness: {}", shown.join(", "));
    }
    for (i, s) in c.algebras.iter().enumerate() {
        let _ = writeln!(
            out,
            "L{}: {} (q = {}, dim = {}), |L| = {}, |Z| = {}, nilpotent {}, {} vertices",
            i + 1,
            s.name,
            s.q,
            s.dim,
            s.order,
            s.center_order,
            s.nilpotent,
            s.vertex_count
        );
    }
    let _ = writeln!(out, "algebras isomorphic: {}", opt(&c.algebras_isomorphic));
    let firing = if c.hypotheses_firing.is_empty() {
        "none".to_string()
    } else {
        c.hypotheses_firing.join(", ")
    };
    let _ = writeln!(out, "hypotheses firing: {firing}");
    out
}

pub fn cmd_compare(a: &Path, b: &Path, format: Format, limits: &Limits) -> Outcome {
    Outcome::from_result(compare(a, b, limits).map(|c| {
        Outcome::ok(match format {
            Format::Json => pretty(&c),
            Format::Text => comparison_text(&c),
        })
    }))
}

#[derive(Debug, Clone, Serialize)]
pub struct EnumeratedEntry {
    pub name: String,
    pub tensor: u64,
    pub q: u32,
    pub dim: usize,
    pub center_dim: usize,
    pub derived_dim: usize,
    pub nilpotent: bool,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub certificate: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Enumeration {
    pub algebras: Vec<EnumeratedEntry>,
    pub conjecture: ConjectureTable,
}

/// Non-abelian algebras of dimension at most `max_dim` over each field,
/// with the pair table for all of them together.
pub fn enumerate(max_dim: usize, fields: &[u32], dedupe: bool, limits: &Limits) -> CliResult<Enumeration> {
    let mut scope = Scope::enumeration(max_dim, fields);
    if let Some(e) = scope.enumerate.as_mut() {
        e.dedupe = dedupe;
    }
    let verifier = Verifier::new(scope, *limits)?;
    let algebras = verifier
        .facts()
        .iter()
        .map(|f| EnumeratedEntry {
            name: f.name.clone(),
            tensor: tensor_index(&f.algebra),
            q: f.q,
            dim: f.dim,
            center_dim: f.center_dim,
            derived_dim: f.derived_dim,
            nilpotent: f.nilpotent,
            vertex_count: f.report.vertex_count,
            edge_count: f.report.edge_count,
            certificate: f.certificate.as_ref().map(|c| c.to_string()),
        })
        .collect();
    Ok(Enumeration {
        algebras,
        conjecture: verifier.explore_conjecture()?,
    })
}

fn enumeration_text(e: &Enumeration) -> String {
    let mut out = String::new();
    for a in &e.algebras {
        let _ = writeln!(
            out,
            "{}: dim Z = {}, dim L^2 = {}, nilpotent {}, {} vertices, {} edges",
            a.name, a.center_dim, a.derived_dim, a.nilpotent, a.vertex_count, a.edge_count
        );
    }
    let c = &e.conjecture;
    let _ = writeln!(out, "{} algebras, {} pairs", c.algebras, c.pairs);
    let _ = writeln!(out, "isomorphic graphs, equal orders: {}", c.iso_equal_order);
    let _ = writeln!(out, "isomorphic graphs, unequal orders: {}", c.iso_unequal_order);
    let _ = writeln!(out, "non-isomorphic graphs, equal orders: {}", c.noniso_equal_order);
    let _ = writeln!(out, "non-isomorphic graphs, unequal orders: {}", c.noniso_unequal_order);
    out
}

pub fn cmd_enumerate(n: usize, fields: &[u32], dedupe: bool, format: Format, limits: &Limits) -> Outcome {
    Outcome::from_result(enumerate(n, fields, dedupe, limits).map(|e| {
        Outcome::ok(match format {
            Format::Json => pretty(&e),
            Format::Text => enumeration_text(&e),
        })
    }))
}

/// JSON object for an error raised before a command runs.
pub fn error_outcome(err: CliError) -> Outcome {
    Outcome::from_result(Err(err))
}
