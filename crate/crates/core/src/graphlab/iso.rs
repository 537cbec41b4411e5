//! Graph isomorphism and canonical forms.
//!
//! Two independent procedures live here:
//!
//! - [`graph_isomorphic`] screens cheap invariants, then runs a backtracking
//!   search that individualizes one vertex in each graph and refines both
//!   colourings jointly until the partitions are discrete.
//! - [`canonical_certificate`] first collapses twin classes (vertices with
//!   equal open or equal closed neighbourhoods) into labelled nodes, then
//!   canonically labels the remaining graph by individualization-refinement
//!   with automorphism pruning, and finally expands the nodes back into a
//!   vertex order. The certificate is the adjacency matrix in that order.
//!
//! Non-commuting graphs are dominated by twins (`x` and `2x` always have the
//! same neighbourhood), so the collapse step keeps the search tiny.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use super::{girth, Graph};
use crate::error::{Error, Result};
use crate::limits::Limits;

/// Canonical form of a graph: equal certificates iff isomorphic graphs.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Certificate(Vec<u8>);

impl Certificate {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        Ok(())
    }
}

fn check_cap(g: &Graph, limits: &Limits) -> Result<()> {
    if g.order() > limits.isomorphism {
        return Err(Error::cap(
            "isomorphism vertices",
            g.order() as u64,
            limits.isomorphism as u64,
        ));
    }
    Ok(())
}

/// Replaces each colour by the rank of `(colour, sorted neighbour colours)`
/// across all graphs at once, until the number of classes stops growing.
fn refine(graphs: &[&Graph], colors: &mut [Vec<u32>]) {
    let mut classes = count_classes(colors);
    loop {
        let mut sigs: Vec<Vec<(u32, Vec<u32>)>> = Vec::with_capacity(graphs.len());
        for (g, c) in graphs.iter().zip(colors.iter()) {
            sigs.push(
                (0..g.order())
                    .map(|v| {
                        let mut nb: Vec<u32> = g.neighbors(v).map(|w| c[w]).collect();
                        nb.sort_unstable();
                        (c[v], nb)
                    })
                    .collect(),
            );
        }
        let mut all: Vec<&(u32, Vec<u32>)> = sigs.iter().flatten().collect();
        all.sort();
        all.dedup();
        let rank: HashMap<&(u32, Vec<u32>), u32> =
            all.iter().enumerate().map(|(i, s)| (*s, i as u32)).collect();
        for (c, s) in colors.iter_mut().zip(&sigs) {
            for (cv, sv) in c.iter_mut().zip(s) {
                *cv = rank[sv];
            }
        }
        let now = count_classes(colors);
        if now == classes {
            return;
        }
        classes = now;
    }
}

fn count_classes(colors: &[Vec<u32>]) -> usize {
    let mut all: Vec<u32> = colors.iter().flatten().copied().collect();
    all.sort_unstable();
    all.dedup();
    all.len()
}

/// Gives `v` its own colour just below the rest of its class, re-ranking.
fn individualize(colors: &mut [u32], v: usize) {
    let mut keys: Vec<(u32, bool)> = colors
        .iter()
        .enumerate()
        .map(|(u, &c)| (c, u != v))
        .collect();
    let mut sorted = keys.clone();
    sorted.sort_unstable();
    sorted.dedup();
    for (c, k) in colors.iter_mut().zip(keys.drain(..)) {
        *c = sorted.binary_search(&k).unwrap() as u32;
    }
}

fn histogram(colors: &[u32]) -> BTreeMap<u32, usize> {
    let mut h = BTreeMap::new();
    for &c in colors {
        *h.entry(c).or_insert(0) += 1;
    }
    h
}

/// Smallest non-singleton class, lowest colour on ties.
fn target_cell(colors: &[u32]) -> Option<u32> {
    histogram(colors)
        .into_iter()
        .filter(|&(_, size)| size > 1)
        .min_by_key(|&(c, size)| (size, c))
        .map(|(c, _)| c)
}

/// Decides isomorphism; on success returns `phi` with `phi[v]` the image in
/// `g2` of vertex `v` of `g1`. Every returned map is checked edge by edge.
/// Identical graphs get the identity.
pub fn graph_isomorphic(g1: &Graph, g2: &Graph, limits: &Limits) -> Result<Option<Vec<usize>>> {
    check_cap(g1, limits)?;
    check_cap(g2, limits)?;
    if g1 == g2 {
        return Ok(Some((0..g1.order()).collect()));
    }
    if g1.order() != g2.order() || g1.edge_count() != g2.edge_count() {
        return Ok(None);
    }
    let (mut d1, mut d2) = (g1.degrees(), g2.degrees());
    d1.sort_unstable();
    d2.sort_unstable();
    if d1 != d2 || girth(g1) != girth(g2) {
        return Ok(None);
    }
    let n = g1.order();
    let mut colors = vec![vec![0u32; n], vec![0u32; n]];
    refine(&[g1, g2], &mut colors);
    let [c1, c2]: [Vec<u32>; 2] = colors.try_into().unwrap();
    Ok(match_colors(g1, g2, c1, c2))
}

fn match_colors(g1: &Graph, g2: &Graph, c1: Vec<u32>, c2: Vec<u32>) -> Option<Vec<usize>> {
    if histogram(&c1) != histogram(&c2) {
        return None;
    }
    let Some(cell) = target_cell(&c1) else {
        let mut by_color = vec![0usize; g2.order()];
        for (w, &c) in c2.iter().enumerate() {
            by_color[c as usize] = w;
        }
        let phi: Vec<usize> = c1.iter().map(|&c| by_color[c as usize]).collect();
        let ok = (0..g1.order()).all(|u| {
            (u + 1..g1.order()).all(|v| g1.has_edge(u, v) == g2.has_edge(phi[u], phi[v]))
        });
        return ok.then_some(phi);
    };
    let v = c1.iter().position(|&c| c == cell).unwrap();
    for w in (0..g2.order()).filter(|&w| c2[w] == cell) {
        let mut colors = vec![c1.clone(), c2.clone()];
        individualize(&mut colors[0], v);
        individualize(&mut colors[1], w);
        refine(&[g1, g2], &mut colors);
        let [n1, n2]: [Vec<u32>; 2] = colors.try_into().unwrap();
        if let Some(phi) = match_colors(g1, g2, n1, n2) {
            return Some(phi);
        }
    }
    None
}

/// Canonical vertex order: `order[i]` is the vertex placed at position `i`.
/// Isomorphic graphs yield orders under which their adjacency matrices are
/// identical.
pub fn canonical_labeling(g: &Graph, limits: &Limits) -> Result<Vec<usize>> {
    check_cap(g, limits)?;
    let tree = TwinTree::build(g);
    let labels = &tree.nodes;
    let mut distinct: Vec<&str> = tree.top.iter().map(|&t| labels[t].label.as_str()).collect();
    distinct.sort_unstable();
    distinct.dedup();
    let init: Vec<u32> = tree
        .top
        .iter()
        .map(|&t| distinct.binary_search(&labels[t].label.as_str()).unwrap() as u32)
        .collect();
    let top_order = canonical_order_colored(&tree.quotient, init);
    let mut order = Vec::with_capacity(g.order());
    for i in top_order {
        tree.expand(tree.top[i], &mut order);
    }
    Ok(order)
}

pub fn canonical_certificate(g: &Graph, limits: &Limits) -> Result<Certificate> {
    let order = canonical_labeling(g, limits)?;
    let n = g.order();
    let mut bytes = (n as u32).to_le_bytes().to_vec();
    let mut acc = 0u8;
    let mut nbits = 0;
    for a in 0..n {
        for b in a + 1..n {
            acc = acc << 1 | u8::from(g.has_edge(order[a], order[b]));
            nbits += 1;
            if nbits == 8 {
                bytes.push(acc);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        bytes.push(acc << (8 - nbits));
    }
    Ok(Certificate(bytes))
}

struct TwinNode {
    label: String,
    vertex: Option<usize>,
    children: Vec<usize>,
}

/// Result of repeatedly merging twin classes. `top` lists the surviving
/// nodes, with `quotient` their adjacency.
struct TwinTree {
    nodes: Vec<TwinNode>,
    top: Vec<usize>,
    quotient: Graph,
}

impl TwinTree {
    fn build(g: &Graph) -> Self {
        let mut nodes: Vec<TwinNode> = (0..g.order())
            .map(|v| TwinNode {
                label: "v".into(),
                vertex: Some(v),
                children: Vec::new(),
            })
            .collect();
        let mut top: Vec<usize> = (0..g.order()).collect();
        let mut h = g.clone();
        loop {
            let m = h.order();
            // class[i] = (kind, first member) for members of a twin class.
            let mut class: Vec<Option<(char, usize)>> = vec![None; m];
            for (kind, closed) in [('O', false), ('C', true)] {
                let mut groups: HashMap<Vec<u64>, Vec<usize>> = HashMap::new();
                for i in 0..m {
                    let mut key = h.row(i).to_vec();
                    if closed {
                        key[i / 64] |= 1 << (i % 64);
                    }
                    groups.entry(key).or_default().push(i);
                }
                for members in groups.values().filter(|g| g.len() > 1) {
                    for &i in members {
                        debug_assert!(class[i].is_none(), "open and closed twin classes are disjoint");
                        class[i] = Some((kind, members[0]));
                    }
                }
            }
            if class.iter().all(Option::is_none) {
                break;
            }
            let mut new_top = Vec::new();
            let mut reps = Vec::new();
            for i in 0..m {
                match class[i] {
                    None => {
                        new_top.push(top[i]);
                        reps.push(i);
                    }
                    Some((kind, first)) if first == i => {
                        let children: Vec<usize> =
                            (0..m).filter(|&j| class[j] == Some((kind, i))).map(|j| top[j]).collect();
                        let mut child_labels: Vec<&str> =
                            children.iter().map(|&c| nodes[c].label.as_str()).collect();
                        child_labels.sort_unstable();
                        let label = format!("{kind}[{}]", child_labels.join(","));
                        nodes.push(TwinNode {
                            label,
                            vertex: None,
                            children,
                        });
                        new_top.push(nodes.len() - 1);
                        reps.push(i);
                    }
                    Some(_) => {}
                }
            }
            h = h.induced(&reps);
            top = new_top;
        }
        TwinTree {
            nodes,
            top,
            quotient: h,
        }
    }

    fn expand(&self, node: usize, out: &mut Vec<usize>) {
        let n = &self.nodes[node];
        if let Some(v) = n.vertex {
            out.push(v);
            return;
        }
        let mut kids = n.children.clone();
        kids.sort_by(|&a, &b| self.nodes[a].label.cmp(&self.nodes[b].label));
        for k in kids {
            self.expand(k, out);
        }
    }
}

/// Individualization-refinement canonical order of a vertex-coloured graph.
fn canonical_order_colored(g: &Graph, init: Vec<u32>) -> Vec<usize> {
    let mut colors = vec![init];
    refine(&[g], &mut colors);
    let mut search = CanonSearch {
        g,
        best: None,
        autos: Vec::new(),
    };
    search.visit(colors.pop().unwrap(), &mut Vec::new());
    let (_, lab) = search.best.unwrap();
    let mut order = vec![0; g.order()];
    for (v, &pos) in lab.iter().enumerate() {
        order[pos] = v;
    }
    order
}

struct CanonSearch<'a> {
    g: &'a Graph,
    /// Smallest leaf matrix so far, with its labelling `vertex -> position`.
    best: Option<(Vec<bool>, Vec<usize>)>,
    autos: Vec<Vec<usize>>,
}

impl CanonSearch<'_> {
    fn visit(&mut self, colors: Vec<u32>, prefix: &mut Vec<usize>) {
        let Some(cell) = target_cell(&colors) else {
            self.leaf(colors.iter().map(|&c| c as usize).collect());
            return;
        };
        let members: Vec<usize> = (0..colors.len()).filter(|&v| colors[v] == cell).collect();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &members {
            if !explored.is_empty() && self.in_explored_orbit(v, &explored, prefix) {
                continue;
            }
            explored.push(v);
            let mut next = colors.clone();
            individualize(&mut next, v);
            let mut wrapped = vec![next];
            refine(&[self.g], &mut wrapped);
            prefix.push(v);
            self.visit(wrapped.pop().unwrap(), prefix);
            prefix.pop();
        }
    }

    fn leaf(&mut self, lab: Vec<usize>) {
        let n = self.g.order();
        let mut order = vec![0; n];
        for (v, &p) in lab.iter().enumerate() {
            order[p] = v;
        }
        let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for a in 0..n {
            for b in a + 1..n {
                bits.push(self.g.has_edge(order[a], order[b]));
            }
        }
        match &self.best {
            None => self.best = Some((bits, lab)),
            Some((best_bits, best_lab)) => match bits.cmp(best_bits) {
                std::cmp::Ordering::Less => self.best = Some((bits, lab)),
                std::cmp::Ordering::Equal => {
                    let mut inv = vec![0; n];
                    for (v, &p) in best_lab.iter().enumerate() {
                        inv[p] = v;
                    }
                    let sigma: Vec<usize> = lab.iter().map(|&p| inv[p]).collect();
                    if sigma.iter().enumerate().any(|(i, &s)| i != s) {
                        self.autos.push(sigma);
                    }
                }
                std::cmp::Ordering::Greater => {}
            },
        }
    }

    /// Whether some known automorphism fixing `prefix` pointwise links `v`
    /// to an already explored sibling.
    fn in_explored_orbit(&self, v: usize, explored: &[usize], prefix: &[usize]) -> bool {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for sigma in self.autos.iter().filter(|s| prefix.iter().all(|&u| s[u] == u)) {
            for (a, &b) in sigma.iter().enumerate() {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent[ra] = rb;
                }
            }
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&w| find(&mut parent, w) == rv)
    }
}
