use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graphlab::{canonical_certificate, Certificate, PropertyReport};
use crate::liealg::LieAlgebra;
use crate::limits::Limits;
use crate::ncg::NcGraph;

/// Everything the statement checks need to know about one algebra.
#[derive(Debug, Clone)]
pub struct AlgebraFacts {
    pub name: String,
    pub algebra: LieAlgebra,
    pub graph: NcGraph,
    pub report: PropertyReport,
    pub q: u32,
    pub dim: usize,
    pub order: u64,
    pub center_dim: usize,
    pub center_order: u64,
    pub derived_dim: usize,
    pub nilpotent: bool,
    /// `|C_L(v)|` for each vertex, in vertex order.
    pub centralizer_orders: Vec<u64>,
    /// `None` when the graph is above the isomorphism cap.
    pub certificate: Option<Certificate>,
}

/// Algebraic side of an analysis, for reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlgebraSummary {
    pub q: u32,
    pub dim: usize,
    pub order: u64,
    pub center_order: u64,
    pub center_dim: usize,
    pub derived_dim: usize,
    pub nilpotent: bool,
    /// Number of vertices with each centralizer size.
    pub centralizer_histogram: BTreeMap<u64, usize>,
}

impl AlgebraFacts {
    pub fn compute(name: impl Into<String>, algebra: LieAlgebra, limits: &Limits) -> Result<Self> {
        let graph = NcGraph::build(&algebra, limits)?;
        let report = PropertyReport::compute(graph.graph(), limits)?;
        let field = algebra.field();
        let center = algebra.center();
        let centralizer_orders = graph
            .vertices()
            .iter()
            .map(|v| algebra.centralizer(v).cardinality(field))
            .collect();
        let certificate = match canonical_certificate(graph.graph(), limits) {
            Ok(c) => Some(c),
            Err(Error::CapExceeded { .. }) => None,
            Err(e) => return Err(e),
        };
        Ok(AlgebraFacts {
            name: name.into(),
            q: field.order(),
            dim: algebra.dim(),
            order: algebra.order(),
            center_dim: center.dim(),
            center_order: center.cardinality(field),
            derived_dim: algebra.derived_subalgebra().dim(),
            nilpotent: algebra.is_nilpotent(),
            centralizer_orders,
            certificate,
            report,
            graph,
            algebra,
        })
    }

    /// `gamma = 1`, decided exactly by looking for a vertex adjacent to all
    /// others.
    pub fn has_dominating_vertex(&self) -> bool {
        self.report.max_degree + 1 == self.report.vertex_count
    }

    pub fn summary(&self) -> AlgebraSummary {
        let mut centralizer_histogram = BTreeMap::new();
        for &c in &self.centralizer_orders {
            *centralizer_histogram.entry(c).or_insert(0) += 1;
        }
        AlgebraSummary {
            q: self.q,
            dim: self.dim,
            order: self.order,
            center_order: self.center_order,
            center_dim: self.center_dim,
            derived_dim: self.derived_dim,
            nilpotent: self.nilpotent,
            centralizer_histogram,
        }
    }

    pub(crate) fn certificate(&self, limits: &Limits) -> Result<&Certificate> {
        self.certificate.as_ref().ok_or_else(|| {
            Error::cap(
                format!("isomorphism vertices for {}", self.name),
                self.report.vertex_count as u64,
                limits.isomorphism as u64,
            )
        })
    }
}
