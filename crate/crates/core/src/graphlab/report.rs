use serde::{Deserialize, Serialize};

use super::{connectivity, domination_number, girth, is_hamiltonian, is_outerplanar, is_planar};
use super::{Dist, Graph};
use crate::error::{Error, Result};
use crate::limits::Limits;

/// Invariants of one graph. Fields that need an exact search beyond the
/// configured limits are `None`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub degree_sequence: Vec<usize>,
    pub is_connected: bool,
    pub diameter: Dist,
    pub girth: Dist,
    pub is_regular: bool,
    pub is_eulerian: bool,
    pub is_hamiltonian: Option<bool>,
    pub is_complete: bool,
    pub is_complete_bipartite: bool,
    pub is_planar: bool,
    pub is_outerplanar: bool,
    pub domination_number: Option<usize>,
}

impl PropertyReport {
    pub fn compute(g: &Graph, limits: &Limits) -> Result<Self> {
        let conn = connectivity(g)?;
        let degrees = g.degrees();
        let is_hamiltonian = match is_hamiltonian(g, limits) {
            Ok(h) => Some(h),
            Err(Error::CapExceeded { .. }) => None,
            Err(e) => return Err(e),
        };
        let domination_number = match domination_number(g, limits) {
            Ok(d) => Some(d),
            Err(Error::CapExceeded { .. }) => None,
            Err(e) => return Err(e),
        };
        let mut degree_sequence = degrees.clone();
        degree_sequence.sort_unstable_by(|a, b| b.cmp(a));
        Ok(PropertyReport {
            vertex_count: g.order(),
            edge_count: g.edge_count(),
            min_degree: *degree_sequence.last().unwrap(),
            max_degree: degree_sequence[0],
            degree_sequence,
            is_connected: conn.is_connected,
            diameter: conn.diameter,
            girth: girth(g),
            is_regular: g.is_regular(),
            is_eulerian: g.is_eulerian(),
            is_hamiltonian,
            is_complete: g.is_complete(),
            is_complete_bipartite: g.is_complete_bipartite(),
            is_planar: is_planar(g),
            is_outerplanar: is_outerplanar(g),
            domination_number,
        })
    }
}
