use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;
use tempfile::TempDir;

use lie_ncg::{
    cmd_analyze, cmd_compare, cmd_export, cmd_validate, cmd_verify, export, import_json, ExportFormat, Format,
    ScopeKind, VerifyArgs, EXIT_ERROR, EXIT_OK,
};
use lie_ncg_core::graphlab::canonical_certificate;
use lie_ncg_core::verifier::catalog_entry;
use lie_ncg_core::{Limits, NcGraph};

struct Specs {
    dir: TempDir,
}

impl Specs {
    fn new() -> Self {
        Specs { dir: TempDir::new().unwrap() }
    }

    fn write(&self, name: &str, text: &str) -> PathBuf {
        let p = self.dir.path().join(name);
        std::fs::write(&p, text).unwrap();
        p
    }

    fn catalog(&self, name: &str) -> PathBuf {
        let spec = catalog_entry(name).unwrap().spec;
        self.write(&format!("{name}.json"), &serde_json::to_string_pretty(&spec).unwrap())
    }
}

fn json(text: &str) -> Value {
    serde_json::from_str(text).unwrap_or_else(|e| panic!("invalid JSON ({e}): {text}"))
}

fn limits() -> Limits {
    Limits::default()
}

fn enumerate_args(statement: &str) -> VerifyArgs {
    VerifyArgs {
        scope: ScopeKind::Enumerate,
        max_dim: 3,
        fields: vec![2],
        dedupe: false,
        statement: statement.into(),
    }
}

#[test]
fn validate() {
    let s = Specs::new();
    let ok = cmd_validate(&s.catalog("heisenberg-f2"));
    assert_eq!(ok.code, EXIT_OK);
    assert_eq!(json(&ok.stdout)["valid"], true);

    let selfb = s.write(
        "self.json",
        r#"{"q": 2, "dim": 2, "basis": ["x", "y"], "brackets": [{"left": "x", "right": "x", "value": {"y": 1}}]}"#,
    );
    let out = cmd_validate(&selfb);
    assert_eq!(out.code, EXIT_ERROR);
    assert_eq!(json(&out.stderr)["error"], "SelfBracketNonzero");

    let out = cmd_validate(&s.write("bad.json", r#"{"q": 2, "dim": "#));
    assert_eq!(json(&out.stderr)["error"], "ParseError");
    assert_ne!(out.code, EXIT_OK);

    let unknown = s.write("unknown.json", r#"{"q": 2, "dim": 1, "basis": ["x"], "extra": 1}"#);
    assert_eq!(json(&cmd_validate(&unknown).stderr)["error"], "ParseError");

    let jacobi = s.write(
        "jacobi.json",
        r#"{"q": 2, "dim": 3, "basis": ["x", "y", "z"], "brackets": [
            {"left": "x", "right": "y", "value": {"x": 1}},
            {"left": "y", "right": "z", "value": {"y": 1}},
            {"left": "x", "right": "z", "value": {"x": 1}}]}"#,
    );
    let err = json(&cmd_validate(&jacobi).stderr);
    assert_eq!(err["error"], "JacobiViolation");
    assert_eq!(err["triple"], serde_json::json!(["x", "y", "z"]));

    let missing = cmd_validate(Path::new("/definitely/not/here.json"));
    assert_eq!(json(&missing.stderr)["error"], "IOError");
}

#[test]
fn analyze() {
    let s = Specs::new();
    let a = json(&cmd_analyze(&s.catalog("aff1-f2"), Format::Json, &limits()).stdout);
    assert_eq!(a["report"]["vertex_count"], 3);
    assert_eq!(a["report"]["is_complete"], true);
    assert_eq!(a["report"]["domination_number"], 1);

    let h = json(&cmd_analyze(&s.catalog("heisenberg-f2"), Format::Json, &limits()).stdout);
    assert_eq!(h["report"]["vertex_count"], 6);
    assert_eq!(h["report"]["is_regular"], true);
    assert_eq!(h["report"]["min_degree"], 4);
    assert_eq!(h["report"]["is_planar"], true);
    assert_eq!(h["algebra"]["order"], 8);
    assert_eq!(h["algebra"]["center_order"], 2);
    assert_eq!(h["algebra"]["centralizer_histogram"]["4"], 6);

    let e = json(&cmd_analyze(&s.catalog("aff1-squared-f2"), Format::Json, &limits()).stdout);
    assert_eq!(e["report"]["vertex_count"], 15);
    assert!(e["report"]["domination_number"].as_u64().unwrap() >= 2);

    let text = cmd_analyze(&s.catalog("heisenberg-f2"), Format::Text, &limits()).stdout;
    assert!(text.contains("vertices: 6\n") && text.contains("planar: true\n"));

    let ab = s.write("ab.json", r#"{"q": 3, "dim": 2, "basis": ["x", "y"]}"#);
    assert_eq!(json(&cmd_analyze(&ab, Format::Json, &limits()).stderr)["error"], "AbelianAlgebra");
    let capped = cmd_analyze(&s.catalog("heisenberg-f3"), Format::Json, &limits().with_element_cap(26));
    assert_eq!(json(&capped.stderr)["error"], "CapExceeded");
}

#[test]
fn export_formats() {
    let s = Specs::new();
    let dot = cmd_export(&s.catalog("aff1-f2"), ExportFormat::Dot, None, &limits()).stdout;
    assert_eq!(dot.matches("[label=").count(), 3);
    assert_eq!(dot.matches(" -- ").count(), 3);
    assert!(dot.contains("label=\"x+y\""));

    let heis = s.catalog("heisenberg-f2");
    let dot = cmd_export(&heis, ExportFormat::Dot, None, &limits()).stdout;
    assert_eq!((dot.matches("[label=").count(), dot.matches(" -- ").count()), (6, 12));
    for line in dot.lines().filter(|l| l.contains(" -- ")) {
        let parts: Vec<usize> =
            line.trim().trim_end_matches(';').split(" -- ").map(|p| p.parse().unwrap()).collect();
        assert!(parts[0] < parts[1]);
    }
    let graphml = cmd_export(&heis, ExportFormat::GraphMl, None, &limits()).stdout;
    assert_eq!((graphml.matches("<node ").count(), graphml.matches("<edge ").count()), (6, 12));
    assert!(graphml.contains(">x+y+z</data>"));

    let doc = json(&cmd_export(&heis, ExportFormat::Json, None, &limits()).stdout);
    assert_eq!(doc["edges"].as_array().unwrap().len(), 12);

    let target = s.dir.path().join("out.dot");
    let out = cmd_export(&heis, ExportFormat::Dot, Some(&target), &limits());
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(std::fs::read_to_string(&target).unwrap(), dot);
}

#[test]
fn json_export_round_trips() {
    let s = Specs::new();
    for name in ["aff1-f3", "heisenberg-f3", "aff1-squared-f2", "sl2-f3"] {
        let spec = s.catalog(name);
        let text = export(&spec, ExportFormat::Json, &limits()).unwrap();
        let back = import_json(&text).unwrap();
        let original = NcGraph::build(&catalog_entry(name).unwrap().algebra().unwrap(), &limits()).unwrap();
        assert_eq!(back.labels(), original.labels());
        assert_eq!(
            canonical_certificate(back.graph(), &limits()).unwrap(),
            canonical_certificate(original.graph(), &limits()).unwrap()
        );
        assert_eq!(back.graph(), original.graph());
    }
    assert!(import_json(r#"{"vertex_count": 2, "labels": ["a", "b"], "edges": [[0, 2]]}"#).is_err());
    assert!(import_json(r#"{"vertex_count": 1, "labels": []}"#).is_err());
}

#[test]
fn verify() {
    let all_catalog = VerifyArgs {
        scope: ScopeKind::Catalog,
        max_dim: 3,
        fields: vec![2],
        dedupe: false,
        statement: "all".into(),
    };
    let out = cmd_verify(&all_catalog, Format::Json, &limits());
    assert_eq!(out.code, EXIT_OK, "{}", out.stdout);
    let lines: Vec<Value> = out.stdout.lines().map(json).collect();
    assert_eq!(lines.len(), lie_ncg_core::verifier::STATEMENTS.len());
    assert!(lines.iter().all(|r| r["status"] == "pass"));

    let lemma = cmd_verify(&enumerate_args("Lem3.1"), Format::Json, &limits());
    assert_eq!(lemma.code, EXIT_OK);
    let r = json(lemma.stdout.trim());
    assert_eq!(r["status"], "pass");
    assert_eq!(r["instances_checked"], r["vacuous_count"]);

    let bogus = cmd_verify(&enumerate_args("bogus"), Format::Json, &limits());
    assert_eq!(bogus.code, EXIT_ERROR);
    assert_eq!(json(&bogus.stderr)["error"], "UnknownStatement");

    let mut too_big = enumerate_args("all");
    too_big.max_dim = 4;
    assert_eq!(json(&cmd_verify(&too_big, Format::Json, &limits()).stderr)["error"], "CapExceeded");
}

#[test]
fn compare() {
    let s = Specs::new();
    let heis = s.catalog("heisenberg-f2");
    let out = cmd_compare(&heis, &s.catalog("aff1-plus-line-f2"), Format::Json, &limits());
    let c = json(&out.stdout);
    assert_eq!(c["isomorphic"], true);
    assert_eq!(c["algebras"][0]["nilpotent"], true);
    assert_eq!(c["algebras"][1]["nilpotent"], false);
    assert_eq!(c["algebras_isomorphic"], false);
    assert!(c["hypotheses_firing"].as_array().unwrap().contains(&"Prop4.6".into()));

    let c = json(&cmd_compare(&s.catalog("aff1-f2"), &heis, Format::Json, &limits()).stdout);
    assert_eq!(c["isomorphic"], false);
    assert_eq!(c["algebras"][0]["vertex_count"], 3);
    assert_eq!(c["algebras"][1]["vertex_count"], 6);
    assert_eq!(c["hypotheses_firing"], serde_json::json!([]));

    let c = json(&cmd_compare(&heis, &heis, Format::Json, &limits()).stdout);
    assert_eq!(c["isomorphic"], true);
    assert_eq!(c["witness"], serde_json::json!([0, 1, 2, 3, 4, 5]));
    assert_eq!(c["algebras_isomorphic"], true);
}

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_lie-ncg"))
}

#[test]
fn binary_exit_codes_and_cap_variable() {
    let s = Specs::new();
    let heis = s.catalog("heisenberg-f3");
    let ok = binary().args(["analyze", "--format", "json"]).arg(&heis).output().unwrap();
    assert!(ok.status.success());
    assert_eq!(json(std::str::from_utf8(&ok.stdout).unwrap())["report"]["vertex_count"], 24);

    let capped = binary().env("LIE_NCG_CAP", "20").args(["analyze"]).arg(&heis).output().unwrap();
    assert_eq!(capped.status.code(), Some(EXIT_ERROR));
    assert_eq!(json(std::str::from_utf8(&capped.stderr).unwrap())["error"], "CapExceeded");

    let garbage = binary().env("LIE_NCG_CAP", "lots").args(["validate"]).arg(&heis).output().unwrap();
    assert_eq!(json(std::str::from_utf8(&garbage.stderr).unwrap())["error"], "InvalidArgument");

    let verify = binary().args(["verify", "--scope", "enumerate", "--n", "3", "--q", "2", "--statement", "Lem3.1"]).output().unwrap();
    assert!(verify.status.success());
    assert!(std::str::from_utf8(&verify.stdout).unwrap().starts_with("PASS Lem3.1"));
}
