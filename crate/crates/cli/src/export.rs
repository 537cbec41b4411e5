//! Graph serializations. All three list vertices in index order and each
//! edge once as `(u, v)` with `u < v`, in increasing order.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use lie_ncg_core::{Graph, NcGraph};

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    GraphMl,
    Json,
}

/// The JSON export document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub vertex_count: usize,
    pub labels: Vec<String>,
    pub edges: Vec<[usize; 2]>,
}

pub fn render(g: &NcGraph, format: ExportFormat) -> String {
    match format {
        ExportFormat::Dot => to_dot(g),
        ExportFormat::GraphMl => to_graphml(g),
        ExportFormat::Json => to_json(g),
    }
}

fn quoted(s: &str) -> String {
    serde_json::to_string(s).expect("strings serialize")
}

pub fn to_dot(g: &NcGraph) -> String {
    let mut out = String::from("graph G {\n");
    for (v, label) in g.labels().iter().enumerate() {
        let _ = writeln!(out, "  {v} [label={}];", quoted(label));
    }
    for (u, v) in g.graph().edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

pub fn to_graphml(g: &NcGraph) -> String {
    let mut out = String::from(concat!(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n",
        "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n",
        "  <key id=\"label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n",
        "  <graph id=\"G\" edgedefault=\"undirected\">\n",
    ));
    for (v, label) in g.labels().iter().enumerate() {
        let _ = writeln!(out, "    <node id=\"n{v}\"><data key=\"label\">{}</data></node>", xml_escape(label));
    }
    for (i, (u, v)) in g.graph().edges().enumerate() {
        let _ = writeln!(out, "    <edge id=\"e{i}\" source=\"n{u}\" target=\"n{v}\"/>");
    }
    out.push_str("  </graph>\n</graphml>\n");
    out
}

pub fn to_json(g: &NcGraph) -> String {
    let doc = GraphDocument {
        vertex_count: g.order(),
        labels: g.labels().to_vec(),
        edges: g.graph().edges().map(|(u, v)| [u, v]).collect(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("document serializes");
    s.push('\n');
    s
}

/// Reads a JSON export back into a labelled graph.
pub fn import_json(text: &str) -> CliResult<NcGraph> {
    let doc: GraphDocument = serde_json::from_str(text).map_err(|e| CliError::parse("graph document", &e))?;
    let n = doc.vertex_count;
    if doc.labels.len() != n {
        return Err(CliError::InvalidArgument(format!("{} labels for {n} vertices", doc.labels.len())));
    }
    let mut g = Graph::empty(n);
    for [u, v] in doc.edges {
        if u >= n || v >= n || u == v {
            return Err(CliError::InvalidArgument(format!("bad edge ({u}, {v}) for {n} vertices")));
        }
        g.add_edge(u, v);
    }
    Ok(NcGraph::from_parts(g, doc.labels))
}
