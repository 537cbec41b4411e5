//! Graph invariants and decision procedures on simple undirected graphs.

mod domination;
mod hamilton;
mod iso;
mod planar;
mod report;

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub use domination::{domination_number, minimum_dominating_set};
pub use hamilton::{hamiltonian_cycle, is_hamiltonian, satisfies_dirac};
pub use iso::{canonical_certificate, canonical_labeling, graph_isomorphic, Certificate};
pub use planar::{is_outerplanar, is_planar};
pub use report::PropertyReport;

/// Simple undirected graph on vertices `0..n` with a bit-matrix adjacency,
/// one `u64` word per 64 vertices per row.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Graph {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    /// Panics on out-of-range endpoints; loops are ignored.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Graph::empty(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "edge ({u}, {v}) out of range");
        if u == v {
            return;
        }
        self.rows[u * self.words + v / 64] |= 1 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "edge ({u}, {v}) out of range");
        self.rows[u * self.words + v / 64] &= !(1 << (v % 64));
        self.rows[v * self.words + u / 64] &= !(1 << (u % 64));
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Adjacency row of `v` as packed words.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub fn words_per_row(&self) -> usize {
        self.words
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        if v >= self.n {
            return Err(Error::BadVertex {
                vertex: v,
                order: self.n,
            });
        }
        Ok(self.deg(v))
    }

    #[inline]
    pub(crate) fn deg(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.deg(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.degrees().iter().sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(wi, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            })
        })
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// The graph with vertex `i` renamed to `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Copy with one extra vertex adjacent to every existing vertex.
    pub fn with_apex(&self) -> Graph {
        let mut g = Graph::empty(self.n + 1);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for u in 0..self.n {
            g.add_edge(u, self.n);
        }
        g
    }

    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::empty(vertices.len());
        for (a, &u) in vertices.iter().enumerate() {
            for (b, &v) in vertices.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(a, b);
                }
            }
        }
        g
    }

    /// BFS distances from `src`; `None` for unreachable vertices.
    pub fn bfs(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for w in self.neighbors(u) {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_regular(&self) -> bool {
        let d = self.degrees();
        d.windows(2).all(|w| w[0] == w[1])
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.deg(v) + 1 == self.n)
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.bfs(0).iter().all(Option::is_some)
    }

    /// Connected with every degree even.
    pub fn is_eulerian(&self) -> bool {
        self.n > 0 && self.is_connected() && (0..self.n).all(|v| self.deg(v).is_multiple_of(2))
    }

    pub fn is_tree(&self) -> bool {
        self.n > 0 && self.is_connected() && self.edge_count() + 1 == self.n
    }

    /// `K_{1,m}` for some `m >= 1`.
    pub fn is_star(&self) -> bool {
        self.n >= 2 && self.is_tree() && (0..self.n).any(|v| self.deg(v) + 1 == self.n)
    }

    /// `K_{a,b}` with both parts nonempty.
    pub fn is_complete_bipartite(&self) -> bool {
        match self.bipartition() {
            Some(side) => {
                let a = side.iter().filter(|&&s| s).count();
                let b = self.n - a;
                a > 0 && b > 0 && self.is_connected() && self.edge_count() == a * b
            }
            None => false,
        }
    }

    /// Two-colouring by BFS, if the graph is bipartite.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for w in self.neighbors(u) {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(Option::unwrap).collect())
    }
}

/// A distance that may be infinite. Serialized as a number, or the string
/// `"inf"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Dist {
    Finite(usize),
    Infinite,
}

impl Dist {
    pub fn finite(self) -> Option<usize> {
        match self {
            Dist::Finite(d) => Some(d),
            Dist::Infinite => None,
        }
    }
}

impl fmt::Display for Dist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dist::Finite(d) => write!(f, "{d}"),
            Dist::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Dist {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Dist::Finite(d) => s.serialize_u64(*d as u64),
            Dist::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Dist {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            N(u64),
            S(String),
        }
        match Raw::deserialize(d)? {
            Raw::N(n) => Ok(Dist::Finite(n as usize)),
            Raw::S(s) if s == "inf" => Ok(Dist::Infinite),
            Raw::S(s) => Err(serde::de::Error::custom(format!("bad distance {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Connectivity {
    pub is_connected: bool,
    pub diameter: Dist,
}

/// Connectedness and diameter by BFS from every vertex.
pub fn connectivity(g: &Graph) -> Result<Connectivity> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut diameter = 0;
    for s in 0..g.order() {
        for d in g.bfs(s) {
            match d {
                Some(d) => diameter = diameter.max(d),
                None => {
                    return Ok(Connectivity {
                        is_connected: false,
                        diameter: Dist::Infinite,
                    })
                }
            }
        }
    }
    Ok(Connectivity {
        is_connected: true,
        diameter: Dist::Finite(diameter),
    })
}

/// Length of a shortest cycle. A BFS from each root records the shortest
/// closed walk through a non-tree edge; the minimum over all roots is the
/// girth.
pub fn girth(g: &Graph) -> Dist {
    let n = g.order();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        dist.fill(usize::MAX);
        parent.fill(usize::MAX);
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            if 2 * dist[u] + 1 >= best {
                break;
            }
            for w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        Dist::Infinite
    } else {
        Dist::Finite(best)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn octahedron() -> Graph {
        let mut g = Graph::complete(6);
        for i in 0..3 {
            g.remove_edge(2 * i, 2 * i + 1);
        }
        g
    }

    #[test]
    fn basic_structure() {
        let k3 = Graph::complete(3);
        assert_eq!(k3.edge_count(), 3);
        assert!(k3.is_complete() && k3.is_regular() && k3.is_eulerian());
        assert_eq!(k3.degree(0), Ok(2));
        assert_eq!(k3.degree(3), Err(Error::BadVertex { vertex: 3, order: 3 }));
        let e = Graph::from_edges(2, &[(0, 1)]);
        assert!(!e.is_eulerian());
        let oct = octahedron();
        assert_eq!(oct.edge_count(), 12);
        assert!(oct.is_regular() && oct.is_eulerian());
    }

    #[test]
    fn large_bitsets() {
        let g = Graph::cycle(130);
        assert_eq!(g.words_per_row(), 3);
        assert!(g.has_edge(129, 0) && g.has_edge(64, 65));
        assert_eq!(g.neighbors(64).collect::<Vec<_>>(), [63, 65]);
        assert_eq!(girth(&g), Dist::Finite(130));
    }

    #[test]
    fn connectivity_and_diameter() {
        assert_eq!(
            connectivity(&Graph::complete(3)).unwrap(),
            Connectivity { is_connected: true, diameter: Dist::Finite(1) }
        );
        assert_eq!(connectivity(&octahedron()).unwrap().diameter, Dist::Finite(2));
        let two = Graph::from_edges(4, &[(0, 1), (2, 3)]);
        assert_eq!(
            connectivity(&two).unwrap(),
            Connectivity { is_connected: false, diameter: Dist::Infinite }
        );
        assert_eq!(connectivity(&Graph::empty(0)), Err(Error::EmptyGraph));
    }

    #[test]
    fn girth_examples() {
        assert_eq!(girth(&Graph::complete(3)), Dist::Finite(3));
        assert_eq!(girth(&Graph::cycle(4)), Dist::Finite(4));
        assert_eq!(girth(&Graph::path(5)), Dist::Infinite);
        assert_eq!(girth(&Graph::complete_bipartite(3, 3)), Dist::Finite(4));
        // Petersen graph.
        let mut edges = vec![];
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        assert_eq!(girth(&Graph::from_edges(10, &edges)), Dist::Finite(5));
    }

    #[test]
    fn bipartite_shapes() {
        assert!(Graph::complete_bipartite(3, 3).is_complete_bipartite());
        assert!(Graph::complete_bipartite(1, 4).is_star());
        assert!(!Graph::complete(3).is_complete_bipartite());
        assert!(!Graph::cycle(6).is_complete_bipartite());
        assert!(Graph::cycle(4).is_complete_bipartite());
        assert!(!Graph::empty(1).is_complete_bipartite());
        assert!(Graph::path(4).is_tree() && !Graph::path(4).is_star());
    }

    #[test]
    fn dist_serde() {
        assert_eq!(serde_json::to_string(&Dist::Infinite).unwrap(), "\"inf\"");
        assert_eq!(serde_json::to_string(&Dist::Finite(2)).unwrap(), "2");
        for d in [Dist::Infinite, Dist::Finite(7)] {
            let s = serde_json::to_string(&d).unwrap();
            assert_eq!(serde_json::from_str::<Dist>(&s).unwrap(), d);
        }
    }
}
