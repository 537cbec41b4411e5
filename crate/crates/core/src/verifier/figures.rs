use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::graphlab::Graph;
use crate::ncg::NcGraph;

/// A graph transcribed from a drawing, with element-labelled vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReferenceGraph {
    pub figure_id: String,
    pub vertices: Vec<String>,
    pub edges: Vec<(String, String)>,
}

impl ReferenceGraph {
    pub fn graph(&self) -> Graph {
        let pos: HashMap<&str, usize> =
            self.vertices.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        let edges: Vec<(usize, usize)> =
            self.edges.iter().map(|(a, b)| (pos[a.as_str()], pos[b.as_str()])).collect();
        Graph::from_edges(self.vertices.len(), &edges)
    }

    pub fn nc_graph(&self) -> NcGraph {
        NcGraph::from_parts(self.graph(), self.vertices.clone())
    }

    /// Whether every labelled edge of `self` is an edge of `g` between the
    /// vertices carrying the same labels.
    pub fn is_labelled_subgraph_of(&self, g: &NcGraph) -> bool {
        self.edges.iter().all(|(a, b)| match (g.vertex_labelled(a), g.vertex_labelled(b)) {
            (Some(u), Some(v)) => g.graph().has_edge(u, v),
            _ => false,
        })
    }
}

const FIGURES_JSON: &str = include_str!("../../data/figures.json");

pub fn reference_graphs() -> Vec<ReferenceGraph> {
    serde_json::from_str(FIGURES_JSON).expect("shipped figures parse")
}

pub fn reference_graph(id: &str) -> Option<ReferenceGraph> {
    reference_graphs().into_iter().find(|r| r.figure_id == id)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transcriptions_are_simple_graphs() {
        for r in reference_graphs() {
            let g = r.graph();
            assert_eq!(g.edge_count(), r.edges.len(), "{} repeats an edge", r.figure_id);
            assert!(r.edges.iter().all(|(a, b)| a != b));
        }
        let f1 = reference_graph("F1").unwrap().graph();
        let mut d = f1.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(d, [6, 6, 6, 6, 4, 4, 4]);
    }
}
