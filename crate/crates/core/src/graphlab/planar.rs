//! Planarity by the left-right criterion (de Fraysseix, Rosenstiehl; in the
//! formulation of Brandes). Only the testing phase is implemented; no
//! embedding is produced.

use super::Graph;

/// Exact planarity test. Graphs with more than `3n - 6` edges are rejected
/// up front.
pub fn is_planar(g: &Graph) -> bool {
    let n = g.order();
    let m = g.edge_count();
    if n >= 3 && m > 3 * n - 6 {
        return false;
    }
    LrState::new(g).run()
}

/// Outerplanar iff adding one vertex adjacent to everything keeps the graph
/// planar.
pub fn is_outerplanar(g: &Graph) -> bool {
    is_planar(&g.with_apex())
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
struct Interval {
    low: Option<usize>,
    high: Option<usize>,
}

impl Interval {
    fn is_empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Debug, Clone, Copy, Default)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

/// Edges are numbered; once oriented by the DFS, edge `e` runs from
/// `source[e]` to `target[e]`.
struct LrState {
    n: usize,
    adj: Vec<Vec<(usize, usize)>>,
    source: Vec<usize>,
    target: Vec<usize>,
    oriented: Vec<bool>,
    height: Vec<Option<usize>>,
    parent_edge: Vec<Option<usize>>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting_depth: Vec<usize>,
    out_edges: Vec<Vec<usize>>,
    roots: Vec<usize>,
    lowpt_edge: Vec<usize>,
    reference: Vec<Option<usize>>,
    stack_bottom: Vec<usize>,
    stack: Vec<ConflictPair>,
}

impl LrState {
    fn new(g: &Graph) -> Self {
        let n = g.order();
        let mut adj = vec![Vec::new(); n];
        let mut m = 0;
        for (u, v) in g.edges() {
            adj[u].push((v, m));
            adj[v].push((u, m));
            m += 1;
        }
        LrState {
            n,
            adj,
            source: vec![0; m],
            target: vec![0; m],
            oriented: vec![false; m],
            height: vec![None; n],
            parent_edge: vec![None; n],
            lowpt: vec![0; m],
            lowpt2: vec![0; m],
            nesting_depth: vec![0; m],
            out_edges: vec![Vec::new(); n],
            roots: Vec::new(),
            lowpt_edge: vec![usize::MAX; m],
            reference: vec![None; m],
            stack_bottom: vec![0; m],
            stack: Vec::new(),
        }
    }

    fn run(mut self) -> bool {
        for v in 0..self.n {
            if self.height[v].is_none() {
                self.height[v] = Some(0);
                self.roots.push(v);
                self.orient(v);
            }
        }
        for v in 0..self.n {
            let mut out = std::mem::take(&mut self.out_edges[v]);
            out.sort_by_key(|&e| self.nesting_depth[e]);
            self.out_edges[v] = out;
        }
        let roots = std::mem::take(&mut self.roots);
        roots.into_iter().all(|r| self.test(r))
    }

    fn h(&self, v: usize) -> usize {
        self.height[v].expect("vertex visited by the orientation DFS")
    }

    fn orient(&mut self, v: usize) {
        let parent = self.parent_edge[v];
        for idx in 0..self.adj[v].len() {
            let (w, e) = self.adj[v][idx];
            if self.oriented[e] {
                continue;
            }
            self.oriented[e] = true;
            self.source[e] = v;
            self.target[e] = w;
            self.out_edges[v].push(e);
            let hv = self.h(v);
            self.lowpt[e] = hv;
            self.lowpt2[e] = hv;
            match self.height[w] {
                None => {
                    self.parent_edge[w] = Some(e);
                    self.height[w] = Some(hv + 1);
                    self.orient(w);
                }
                Some(hw) => self.lowpt[e] = hw,
            }
            self.nesting_depth[e] = 2 * self.lowpt[e] + usize::from(self.lowpt2[e] < hv);
            if let Some(pe) = parent {
                if self.lowpt[e] < self.lowpt[pe] {
                    self.lowpt2[pe] = self.lowpt[pe].min(self.lowpt2[e]);
                    self.lowpt[pe] = self.lowpt[e];
                } else if self.lowpt[e] > self.lowpt[pe] {
                    self.lowpt2[pe] = self.lowpt2[pe].min(self.lowpt[e]);
                } else {
                    self.lowpt2[pe] = self.lowpt2[pe].min(self.lowpt2[e]);
                }
            }
        }
    }

    fn test(&mut self, v: usize) -> bool {
        let parent = self.parent_edge[v];
        for i in 0..self.out_edges[v].len() {
            let ei = self.out_edges[v][i];
            let w = self.target[ei];
            self.stack_bottom[ei] = self.stack.len();
            if self.parent_edge[w] == Some(ei) {
                if !self.test(w) {
                    return false;
                }
            } else {
                self.lowpt_edge[ei] = ei;
                self.stack.push(ConflictPair {
                    left: Interval::default(),
                    right: Interval {
                        low: Some(ei),
                        high: Some(ei),
                    },
                });
            }
            if self.lowpt[ei] < self.h(v) {
                let e = parent.expect("a return edge below v implies v is not a root");
                if i == 0 {
                    self.lowpt_edge[e] = self.lowpt_edge[ei];
                } else if !self.add_constraints(ei, e) {
                    return false;
                }
            }
        }
        if let Some(e) = parent {
            self.remove_back_edges(e);
        }
        true
    }

    fn conflicting(&self, iv: &Interval, b: usize) -> bool {
        match iv.high {
            Some(h) => self.lowpt[h] > self.lowpt[b],
            None => false,
        }
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        match (p.left.low, p.right.low) {
            (None, Some(r)) => self.lowpt[r],
            (Some(l), None) => self.lowpt[l],
            (Some(l), Some(r)) => self.lowpt[l].min(self.lowpt[r]),
            (None, None) => usize::MAX,
        }
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        let mut p = ConflictPair::default();
        // Merge the return edges of ei into p.right.
        while let Some(mut q) = self.stack.pop() {
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            let qrl = q.right.low.expect("non-empty right interval");
            if self.lowpt[qrl] > self.lowpt[e] {
                if p.right.is_empty() {
                    p.right = q.right;
                } else {
                    let prl = p.right.low.unwrap();
                    self.reference[prl] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                self.reference[qrl] = Some(self.lowpt_edge[e]);
            }
            if self.stack.len() == self.stack_bottom[ei] {
                break;
            }
        }
        // Merge conflicting return edges of earlier siblings into p.left.
        while let Some(top) = self.stack.last() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().unwrap();
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            if let Some(prl) = p.right.low {
                self.reference[prl] = q.right.high;
            }
            if q.right.low.is_some() {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else if let Some(pll) = p.left.low {
                self.reference[pll] = q.left.high;
            }
            p.left.low = q.left.low;
        }
        if !(p.left.is_empty() && p.right.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: usize) {
        let u = self.source[e];
        let hu = self.h(u);
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != hu {
                break;
            }
            self.stack.pop();
        }
        if let Some(mut p) = self.stack.pop() {
            while let Some(h) = p.left.high {
                if self.target[h] != u {
                    break;
                }
                p.left.high = self.reference[h];
            }
            if p.left.high.is_none() {
                if let Some(l) = p.left.low {
                    self.reference[l] = p.right.low;
                    p.left.low = None;
                }
            }
            while let Some(h) = p.right.high {
                if self.target[h] != u {
                    break;
                }
                p.right.high = self.reference[h];
            }
            if p.right.high.is_none() {
                if let Some(r) = p.right.low {
                    self.reference[r] = p.left.low;
                    p.right.low = None;
                }
            }
            self.stack.push(p);
        }
        if self.lowpt[e] < hu {
            if let Some(top) = self.stack.last() {
                let (hl, hr) = (top.left.high, top.right.high);
                self.reference[e] = match (hl, hr) {
                    (Some(l), Some(r)) if self.lowpt[l] > self.lowpt[r] => Some(l),
                    (Some(l), None) => Some(l),
                    _ => hr,
                };
            }
        }
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
    fn classic_examples() {
        assert!(is_planar(&Graph::complete(4)));
        assert!(!is_planar(&Graph::complete(5)));
        assert!(!is_planar(&Graph::complete_bipartite(3, 3)));
        assert!(is_planar(&Graph::complete_bipartite(2, 5)));
        assert!(is_planar(&octahedron()));
        assert!(!is_planar(&Graph::complete(7)));
        assert!(is_planar(&Graph::empty(0)));
        assert!(is_planar(&Graph::path(300)));
    }

    #[test]
    fn petersen_is_not_planar() {
        let mut edges = vec![];
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        assert!(!is_planar(&Graph::from_edges(10, &edges)));
    }

    #[test]
    fn subdivided_k33_without_dense_subgraph() {
        let edges = [
            (1, 5), (1, 6), (1, 7), (2, 6), (2, 3), (3, 5), (3, 7), (4, 5), (4, 6), (4, 7),
        ];
        assert!(!is_planar(&Graph::from_edges(8, &edges)));
    }

    #[test]
    fn goldner_harary_is_planar() {
        let edges = [
            (1, 2), (1, 3), (1, 4), (1, 5), (1, 7), (1, 8), (1, 10), (1, 11), (2, 3), (2, 4),
            (2, 6), (2, 7), (2, 9), (2, 10), (2, 11), (3, 4), (4, 5), (4, 6), (4, 7), (5, 7),
            (6, 7), (7, 8), (7, 9), (7, 10), (8, 10), (9, 10), (10, 11),
        ];
        assert!(is_planar(&Graph::from_edges(12, &edges)));
    }

    #[test]
    fn disconnected_components() {
        let mut edges: Vec<_> = Graph::complete(5).edges().collect();
        edges.extend([(6, 7), (7, 8), (8, 6)]);
        assert!(!is_planar(&Graph::from_edges(9, &edges)));
        let two_triangles = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)];
        assert!(is_planar(&Graph::from_edges(6, &two_triangles)));
    }

    #[test]
    fn outerplanarity() {
        assert!(is_outerplanar(&Graph::complete(3)));
        assert!(!is_outerplanar(&Graph::complete(4)));
        assert!(!is_outerplanar(&Graph::complete_bipartite(2, 3)));
        assert!(is_outerplanar(&Graph::cycle(9)));
        assert!(!is_outerplanar(&octahedron()));
    }
}
