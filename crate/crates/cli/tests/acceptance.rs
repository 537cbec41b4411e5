//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use lie_ncg::{cmd_export, cmd_verify, ExportFormat, Format, ScopeKind, VerifyArgs};
use lie_ncg_core::graphlab::{
    canonical_certificate, domination_number, graph_isomorphic, hamiltonian_cycle, is_hamiltonian, is_outerplanar,
    is_planar, satisfies_dirac, Certificate,
};
use lie_ncg_core::verifier::{
    builtin_catalog, catalog_entry, check_figures, check_statement, reference_graph, AlgebraFacts, Scope,
    TheoremReport, Verifier,
};
use lie_ncg_core::{AlgebraSpec, Element, Graph, LieAlgebra, Limits, NcGraph};
use lie_ncg_oracles::algebra::{center_scan, centralizer_scan};
use lie_ncg_oracles::graphs as graph_oracle;
use lie_ncg_oracles::kuratowski::has_kuratowski_subdivision;

/// Wall-clock budget for criterion 1, facts computation included.
const UNIVERSAL_SUITE_BUDGET: Duration = Duration::from_secs(60);
/// Largest `q^n` for the element-scan comparison of criterion 7.
const SCAN_ORDER_CAP: u64 = 512;
/// Largest graph order for the Kuratowski comparison of criterion 7.
const KURATOWSKI_ORDER_CAP: usize = 10;
/// Random graphs per order in the planarity test set.
const RANDOM_GRAPHS_PER_ORDER: usize = 300;
const SEED: u64 = 0x5eed;
/// Failures printed per criterion.
const SHOWN_FAILURES: usize = 8;

#[derive(Default)]
struct Outcome {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Outcome {
    fn require(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(what.into());
        }
    }

    fn report(&mut self, r: &TheoremReport) {
        for f in &r.failures {
            self.failures.push(format!("{}: {}: {}", r.statement_id, f.algebra, f.detail));
        }
        if r.instances_checked == 0 {
            self.failures.push(format!("{}: no instances checked", r.statement_id));
        }
        if !r.passed() && r.failures.is_empty() && r.instances_checked > 0 {
            self.failures.push(format!("{}: status {:?}", r.statement_id, r.status));
        }
    }

    fn note(&mut self, n: impl Into<String>) {
        self.notes.push(n.into());
    }
}

type Check = fn(&Ctx) -> Outcome;

struct Ctx {
    limits: Limits,
    verifier: Verifier,
    build_time: Duration,
}

fn facts_of(name: &str, limits: &Limits) -> AlgebraFacts {
    AlgebraFacts::compute(name, catalog_entry(name).unwrap().algebra().unwrap(), limits).unwrap()
}

fn edges(g: &Graph) -> Vec<(usize, usize)> {
    g.edges().collect()
}

fn witness_ok(g1: &Graph, g2: &Graph, phi: &[usize]) -> bool {
    let n = g1.order();
    n == g2.order() && (0..n).all(|u| (0..n).all(|v| g1.has_edge(u, v) == g2.has_edge(phi[u], phi[v])))
}

fn universal_suite(ctx: &Ctx) -> Outcome {
    let mut o = Outcome::default();
    let start = Instant::now();
    let ids = ["Lem2.2", "Prop2.4", "Prop2.5", "Prop2.6", "Lem2.10", "Prop2.12", "Prop2.13", "Prop2.15"];
    for id in ids {
        o.report(&ctx.verifier.check(id).unwrap());
    }
    let facts = ctx.verifier.facts();
    o.require(facts.len() == 1570, format!("scope holds {} algebras, expected 1570", facts.len()));
    let elapsed = ctx.build_time + start.elapsed();
    o.require(elapsed < UNIVERSAL_SUITE_BUDGET, format!("took {elapsed:?}, budget {UNIVERSAL_SUITE_BUDGET:?}"));
    o.note(format!("{} non-abelian algebras, {} statements, {:.2?}", facts.len(), ids.len(), elapsed));
    o
}

fn domination_statements(ctx: &Ctx) -> Outcome {
    let mut o = Outcome::default();
    for id in ["Thm2.8", "Thm2.18", "Prop2.16"] {
        let r = ctx.verifier.check(id).unwrap();
        o.report(&r);
        if id == "Thm2.8" {
            o.note(format!("{} complete graphs", r.instances_checked - r.vacuous_count));
        }
    }
    let ex = facts_of("aff1-squared-f2", &ctx.limits);
    let g = ex.graph.graph();
    o.require(g.order() == 15, format!("aff1-squared-f2 graph has {} vertices", g.order()));
    let gamma = domination_number(g, &ctx.limits).unwrap();
    let brute = graph_oracle::domination_number(g.order(), &edges(g));
    o.require(gamma == brute, format!("gamma {gamma}, subset search {brute}"));
    o.require(gamma >= 2, format!("gamma = {gamma}"));
    o.note(format!("aff1-squared-f2: 15 vertices, exact gamma = {gamma}"));
    o
}

fn regularity(ctx: &Ctx) -> Outcome {
    let mut o = Outcome::default();
    let r = ctx.verifier.check("Prop2.14").unwrap();
    o.report(&r);
    o.require(r.instances_checked > r.vacuous_count, "no algebra with dim L^2 = 1");
    for (name, degree) in [("heisenberg-f2", 4), ("heisenberg-f3", 18)] {
        let f = facts_of(name, &ctx.limits);
        let degs = f.graph.graph().degrees();
        o.require(degs.iter().all(|&d| d == degree), format!("{name} degrees {:?}", f.report.degree_sequence));
    }
    o.note(format!("{} algebras with dim L^2 = 1", r.instances_checked - r.vacuous_count));
    o
}

fn figures(ctx: &Ctx) -> Outcome {
    let mut o = Outcome::default();
    let lemma = check_statement("Lem3.1", Scope::enumeration(3, &[2]), &ctx.limits).unwrap();
    o.report(&lemma);
    o.require(
        lemma.instances_checked == lemma.vacuous_count,
        format!("{} algebras with dim L^2 = 1 and Z = 0", lemma.instances_checked - lemma.vacuous_count),
    );
    let fig = check_figures(&ctx.limits).unwrap();
    o.report(&fig);
    for id in ["Prop3.2", "Prop3.3", "Prop3.4", "Thm3.5"] {
        o.report(&ctx.verifier.check(id).unwrap());
    }
    let (f3, f5) = (reference_graph("F3").unwrap().graph(), reference_graph("F5").unwrap().graph());
    let phi = graph_isomorphic(&f3, &f5, &ctx.limits).unwrap();
    o.require(phi.as_deref().is_some_and(|p| witness_ok(&f3, &f5, p)), "F3 and F5 are not isomorphic");
    o.notes.extend(fig.notes.iter().cloned());
    o
}

fn octahedron() -> Graph {
    let mut g = Graph::complete(6);
    for i in 0..3 {
        g.remove_edge(i, i + 3);
    }
    g
}

fn planarity(ctx: &Ctx) -> Outcome {
    let mut o = Outcome::default();
    for id in ["Thm3.7", "Thm3.8"] {
        o.report(&ctx.verifier.check(id).unwrap());
    }
    let k3: Certificate = canonical_certificate(&Graph::complete(3), &ctx.limits).unwrap();
    let oct = canonical_certificate(&octahedron(), &ctx.limits).unwrap();
    let mut counted = 0;
    for f in ctx.verifier.facts().iter().filter(|f| [4, 8, 9].contains(&f.order)) {
        counted += 1;
        let cert = f.certificate.as_ref().unwrap();
        let g = f.graph.graph();
        o.require(is_planar(g) == (*cert == k3 || *cert == oct), format!("{}: planarity", f.name));
        o.require(is_outerplanar(g) == (*cert == k3), format!("{}: outerplanarity", f.name));
        o.require(is_planar(g) != has_kuratowski_subdivision(g.order(), &edges(g)), format!("{}: Kuratowski", f.name));
        if f.order == 9 {
            o.require(!is_planar(g), format!("{} is planar", f.name));
        }
    }
    let aff = facts_of("aff1-f3", &ctx.limits);
    let f6 = reference_graph("F6").unwrap();
    o.require(f6.is_labelled_subgraph_of(&aff.graph), "F6 is not a labelled subgraph of the |L| = 9 graph");
    let k33 = Graph::complete_bipartite(3, 3);
    let phi = graph_isomorphic(&f6.graph(), &k33, &ctx.limits).unwrap();
    o.require(phi.is_some(), "F6 is not K_{3,3}");
    o.note(format!("{counted} algebras with |L| in {{4, 8, 9}}"));
    o
}

fn iso_theorems(ctx: &Ctx) -> Outcome {
    let mut o = Outcome::default();
    o.report(&ctx.verifier.check("Ex4.7").unwrap());
    let (l1, l2) = (facts_of("heisenberg-f2", &ctx.limits), facts_of("aff1-plus-line-f2", &ctx.limits));
    let phi = graph_isomorphic(l1.graph.graph(), l2.graph.graph(), &ctx.limits).unwrap();
    o.require(
        phi.as_deref().is_some_and(|p| witness_ok(l1.graph.graph(), l2.graph.graph(), p)),
        "heisenberg-f2 ~ aff1-plus-line-f2 witness fails",
    );
    o.require(l1.nilpotent && !l2.nilpotent, "heisenberg-f2 and aff1-plus-line-f2 nilpotency");

    let f2: Vec<&AlgebraFacts> = ctx.verifier.facts().iter().filter(|f| f.q == 2).collect();
    let mut iso_pairs = 0;
    for (i, a) in f2.iter().enumerate() {
        for b in &f2[i + 1..] {
            if a.certificate == b.certificate {
                iso_pairs += 1;
                o.require(a.order == b.order, format!("Prop4.6: {} ~ {} with orders {} and {}", a.name, b.name, a.order, b.order));
            }
        }
    }
    o.report(&ctx.verifier.check("Prop4.6").unwrap());
    o.note(format!("{iso_pairs} F_2 pairs with isomorphic graphs"));
    for id in ["Thm4.3", "Thm4.4"] {
        let r = ctx.verifier.check(id).unwrap();
        o.note(format!("{id}: {} hypothesis pairs, {} failures", r.instances_checked - r.vacuous_count, r.failures.len()));
        o.report(&r);
    }
    o
}

fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

fn planarity_test_set(ctx: &Ctx) -> Vec<Graph> {
    let mut set = Vec::new();
    for n in 1..=6 {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        for mask in 0u32..1 << pairs.len() {
            let chosen: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
            set.push(Graph::from_edges(n, &chosen));
        }
    }
    let mut rng = StdRng::seed_from_u64(SEED);
    for n in 7..=KURATOWSKI_ORDER_CAP {
        for i in 0..RANDOM_GRAPHS_PER_ORDER {
            set.push(random_graph(&mut rng, n, 0.2 + 0.6 * i as f64 / RANDOM_GRAPHS_PER_ORDER as f64));
        }
    }
    set.extend(
        ctx.verifier
            .facts()
            .iter()
            .map(|f| f.graph.graph().clone())
            .filter(|g| g.order() <= KURATOWSKI_ORDER_CAP),
    );
    set
}

fn scan_algebras(ctx: &Ctx) -> Vec<(String, LieAlgebra)> {
    let mut out: Vec<(String, LieAlgebra)> =
        ctx.verifier.facts().iter().map(|f| (f.name.clone(), f.algebra.clone())).collect();
    let h5 = AlgebraSpec::new(3, &["a", "b", "c", "d", "z"])
        .bracket("a", "b", &[("z", 1)])
        .bracket("c", "d", &[("z", 1)]);
    let sl2_f7 = AlgebraSpec::new(7, &["h", "e", "f"])
        .bracket("h", "e", &[("e", 2)])
        .bracket("h", "f", &[("f", 5)])
        .bracket("e", "f", &[("h", 1)]);
    let aff_f8 = AlgebraSpec::new(8, &["x", "y", "w"]).bracket("x", "y", &[("x", 1)]);
    let names = ["x1", "y1", "z1", "x2", "y2", "z2", "x3", "y3", "z3"];
    let mut cross3 = AlgebraSpec::new(2, &names);
    for k in 0..3 {
        let (x, y, z) = (names[3 * k], names[3 * k + 1], names[3 * k + 2]);
        cross3 = cross3.bracket(x, y, &[(z, 1)]).bracket(y, z, &[(x, 1)]).bracket(x, z, &[(y, 1)]);
    }
    for (name, spec) in [("heisenberg5-f3", h5), ("sl2-f7", sl2_f7), ("aff1-plus-line-f8", aff_f8), ("cross3-f2", cross3)] {
        out.push((name.into(), LieAlgebra::from_spec(&spec).unwrap()));
    }
    out
}

fn oracles(ctx: &Ctx) -> Outcome {
    let mut o = Outcome::default();
    let set = planarity_test_set(ctx);
    for g in &set {
        if is_planar(g) == has_kuratowski_subdivision(g.order(), &edges(g)) {
            o.failures.push(format!("planarity disagrees on {g:?}"));
        }
    }
    o.note(format!("{} graphs checked for planarity", set.len()));

    for e in builtin_catalog() {
        let g = NcGraph::build(&e.algebra().unwrap(), &ctx.limits).unwrap();
        let exact = hamiltonian_cycle(g.graph(), &ctx.limits).unwrap().is_some();
        let shortcut = is_hamiltonian(g.graph(), &ctx.limits).unwrap();
        o.require(shortcut == exact, format!("{}: Hamiltonian shortcut {shortcut}, exact {exact}", e.name));
        o.require(!satisfies_dirac(g.graph()) || exact, format!("{}: Dirac holds but no cycle", e.name));
    }

    let mut scanned = 0;
    for (name, alg) in scan_algebras(ctx) {
        let size = alg.order();
        if size > SCAN_ORDER_CAP {
            continue;
        }
        scanned += 1;
        let (f, q, n) = (alg.field(), alg.field().order(), alg.dim());
        let elems: Vec<Element> = (0..size).map(|i| Element::from_index(i, q, n)).collect();
        let zero = |a: usize, b: usize| alg.bracket(&elems[a], &elems[b]).is_zero();
        let mut center: Vec<u64> = alg.center().vectors(f).into_iter().map(|v| Element::new(v).index(q)).collect();
        center.sort_unstable();
        let scan: Vec<u64> = center_scan(size as usize, zero).into_iter().map(|i| i as u64).collect();
        o.require(center == scan, format!("{name}: center"));
        for (x, el) in elems.iter().enumerate() {
            let mut lib: Vec<u64> =
                alg.centralizer(el).vectors(f).into_iter().map(|v| Element::new(v).index(q)).collect();
            lib.sort_unstable();
            let scan: Vec<u64> = centralizer_scan(size as usize, zero, x).into_iter().map(|i| i as u64).collect();
            o.require(lib == scan, format!("{name}: centralizer of element {x}"));
        }
    }
    o.note(format!("{scanned} algebras scanned element by element"));
    o
}

fn determinism(ctx: &Ctx) -> Outcome {
    let mut o = Outcome::default();
    let dir = tempfile::TempDir::new().unwrap();
    for e in builtin_catalog() {
        let spec = dir.path().join(format!("{}.json", e.name));
        std::fs::write(&spec, serde_json::to_string(&e.spec).unwrap()).unwrap();
        for format in [ExportFormat::Dot, ExportFormat::GraphMl, ExportFormat::Json] {
            let first = cmd_export(&spec, format, None, &ctx.limits);
            let second = cmd_export(&spec, format, None, &ctx.limits);
            o.require(first.code == 0 && first == second, format!("{}: {format:?} export differs", e.name));
            let (p1, p2) = (dir.path().join("a.out"), dir.path().join("b.out"));
            cmd_export(&spec, format, Some(&p1), &ctx.limits);
            cmd_export(&spec, format, Some(&p2), &ctx.limits);
            let same = std::fs::read(&p1).unwrap() == std::fs::read(&p2).unwrap();
            o.require(same, format!("{}: {format:?} export files differ", e.name));
        }
    }
    let runs = [
        (ScopeKind::Catalog, vec![2], "all"),
        (ScopeKind::Enumerate, vec![2], "all"),
        (ScopeKind::Enumerate, vec![2, 3], "Thm4.4"),
    ];
    for (scope, fields, statement) in runs {
        let args = VerifyArgs {
            scope,
            max_dim: 3,
            fields,
            dedupe: false,
            statement: statement.into(),
        };
        for format in [Format::Text, Format::Json] {
            let first = cmd_verify(&args, format, &ctx.limits);
            let second = cmd_verify(&args, format, &ctx.limits);
            o.require(first == second, format!("verify {args:?} ({format:?}) differs between runs"));
        }
    }
    o
}

fn main() -> ExitCode {
    let limits = Limits::default();
    let start = Instant::now();
    let verifier = Verifier::new(Scope::full(3, &[2, 3]), limits).expect("scope within caps");
    let ctx = Ctx {
        limits,
        verifier,
        build_time: start.elapsed(),
    };
    let criteria: [(&str, Check); 8] = [
        ("universal properties over catalog and n <= 3, q in {2, 3}", universal_suite),
        ("completeness and domination", domination_statements),
        ("regularity when dim L^2 = 1", regularity),
        ("three-dimensional algebras over F_2 and figures", figures),
        ("planarity and outerplanarity for |L| in {4, 8, 9}", planarity),
        ("pairs with isomorphic graphs", iso_theorems),
        ("agreement with brute-force oracles", oracles),
        ("deterministic export and verify output", determinism),
    ];
    let mut failed = 0;
    for (i, (title, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let o = run(&ctx);
        let status = if o.failures.is_empty() { "PASS" } else { "FAIL" };
        println!("criterion {}: {status}: {title} ({:.2?})", i + 1, t.elapsed());
        for n in &o.notes {
            println!("    {n}");
        }
        for f in o.failures.iter().take(SHOWN_FAILURES) {
            println!("    failure: {f}");
        }
        if o.failures.len() > SHOWN_FAILURES {
            println!("    ... {} more failures", o.failures.len() - SHOWN_FAILURES);
        }
        failed += usize::from(!o.failures.is_empty());
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
