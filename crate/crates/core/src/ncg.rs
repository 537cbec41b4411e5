//! The non-commuting graph of a Lie algebra.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graphlab::Graph;
use crate::liealg::{Element, LieAlgebra};
use crate::limits::Limits;

/// A graph whose vertices carry algebra elements. Vertex `i` is
/// `vertices[i]`; for generated graphs these are the non-central elements in
/// increasing index order.
#[derive(Debug, Clone)]
pub struct NcGraph {
    graph: Graph,
    vertices: Vec<Element>,
    labels: Vec<String>,
    source: Option<Arc<LieAlgebra>>,
}

impl NcGraph {
    /// Builds `G_L`: vertices `L \ Z(L)`, with `u ~ v` iff `[u, v] != 0`.
    pub fn build(alg: &LieAlgebra, limits: &Limits) -> Result<Self> {
        let center = alg.center();
        if center.dim() == alg.dim() {
            return Err(Error::AbelianAlgebra);
        }
        let field = alg.field();
        let vertices: Vec<Element> = alg
            .enumerate_elements(limits)?
            .filter(|x| !center.contains(field, x.coeffs()))
            .collect();
        let mut graph = Graph::empty(vertices.len());
        for (a, u) in vertices.iter().enumerate() {
            for (b, v) in vertices.iter().enumerate().skip(a + 1) {
                if alg.bracket_coeffs(u.coeffs(), v.coeffs()).iter().any(|c| !c.is_zero()) {
                    graph.add_edge(a, b);
                }
            }
        }
        let labels = vertices.iter().map(|x| alg.label(x)).collect();
        Ok(NcGraph {
            graph,
            vertices,
            labels,
            source: Some(Arc::new(alg.clone())),
        })
    }

    /// A hand-built graph with labels and no generating algebra.
    pub fn from_parts(graph: Graph, labels: Vec<String>) -> Self {
        assert_eq!(graph.order(), labels.len(), "one label per vertex");
        NcGraph {
            graph,
            vertices: Vec::new(),
            labels,
            source: None,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    /// Coefficient vectors of the vertices; empty for hand-built graphs.
    pub fn vertices(&self) -> &[Element] {
        &self.vertices
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn source(&self) -> Option<&LieAlgebra> {
        self.source.as_deref()
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.graph.degree(v)
    }

    pub fn vertex_of(&self, x: &Element) -> Option<usize> {
        self.vertices.iter().position(|v| v == x)
    }

    pub fn vertex_labelled(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::AlgebraSpec;

    fn build(spec: AlgebraSpec) -> NcGraph {
        NcGraph::build(&LieAlgebra::from_spec(&spec).unwrap(), &Limits::default()).unwrap()
    }

    #[test]
    fn aff1_over_f2_is_a_triangle() {
        let g = build(AlgebraSpec::new(2, &["x", "y"]).bracket("x", "y", &[("x", 1)]));
        assert_eq!(g.labels(), ["x", "y", "x+y"]);
        assert!(g.graph().is_complete() && g.order() == 3);
        assert_eq!(g.degree(0), Ok(2));
        assert!(g.source().is_some());
    }

    #[test]
    fn heisenberg_over_f2_is_an_octahedron() {
        let g = build(AlgebraSpec::new(2, &["x", "y", "z"]).bracket("x", "y", &[("z", 1)]));
        assert_eq!(g.labels(), ["x", "y", "x+y", "x+z", "y+z", "x+y+z"]);
        assert_eq!(g.graph().edge_count(), 12);
        let complement: Vec<_> = g.graph().complement().edges().collect();
        for (a, b) in complement {
            let (la, lb) = (&g.labels()[a], &g.labels()[b]);
            assert_eq!(format!("{la}+z"), *lb);
        }
        assert_eq!(g.degree(0), Ok(4));
        assert_eq!(g.degree(6), Err(Error::BadVertex { vertex: 6, order: 6 }));
    }

    #[test]
    fn aff1_over_f3_degrees() {
        let g = build(AlgebraSpec::new(3, &["x", "y"]).bracket("x", "y", &[("x", 1)]));
        assert_eq!(g.order(), 8);
        assert!(g.graph().degrees().iter().all(|&d| d == 6));
        assert_eq!(g.vertex_labelled("2x+y"), Some(4));
    }

    #[test]
    fn abelian_is_refused() {
        let alg = LieAlgebra::from_spec(&AlgebraSpec::new(2, &["x", "y"])).unwrap();
        assert_eq!(NcGraph::build(&alg, &Limits::default()).unwrap_err(), Error::AbelianAlgebra);
        let big = LieAlgebra::from_spec(
            &AlgebraSpec::new(2, &["a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l", "m"])
                .bracket("a", "b", &[("a", 1)]),
        )
        .unwrap();
        assert!(matches!(NcGraph::build(&big, &Limits::default()), Err(Error::CapExceeded { .. })));
    }
}
