//! Graph oracles over `n` vertices and an edge list.

fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in edges {
        if u != v {
            adj[u][v] = true;
            adj[v][u] = true;
        }
    }
    adj
}

/// Smallest dominating set size, trying every subset in order of size.
pub fn domination_number(n: usize, edges: &[(usize, usize)]) -> usize {
    assert!(n <= 24, "brute force is exponential");
    let adj = adjacency(n, edges);
    let closed: Vec<u32> = (0..n)
        .map(|v| (0..n).filter(|&w| w == v || adj[v][w]).fold(0, |m, w| m | 1 << w))
        .collect();
    let full = if n == 0 { 0 } else { (1u32 << n) - 1 };
    (0..=n)
        .find(|&k| {
            (0u32..1 << n)
                .filter(|s| s.count_ones() as usize == k)
                .any(|s| (0..n).filter(|&v| s >> v & 1 == 1).fold(0, |m, v| m | closed[v]) == full)
        })
        .unwrap()
}

/// Hamiltonian cycle existence by dynamic programming over subsets
/// containing vertex 0.
pub fn is_hamiltonian(n: usize, edges: &[(usize, usize)]) -> bool {
    assert!(n <= 20, "brute force is exponential");
    if n < 3 {
        return false;
    }
    let adj = adjacency(n, edges);
    // reach[s][v]: a path from 0 visiting exactly s ends at v.
    let mut reach = vec![vec![false; n]; 1 << n];
    reach[1][0] = true;
    for s in 1usize..1 << n {
        if s & 1 == 0 {
            continue;
        }
        for v in 0..n {
            if !reach[s][v] {
                continue;
            }
            for w in 0..n {
                if s >> w & 1 == 0 && adj[v][w] {
                    reach[s | 1 << w][w] = true;
                }
            }
        }
    }
    (1..n).any(|v| reach[(1 << n) - 1][v] && adj[v][0])
}

/// All-pairs distances by Floyd-Warshall; `None` when unreachable.
pub fn distances(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<Option<usize>>> {
    let adj = adjacency(n, edges);
    let mut d: Vec<Vec<Option<usize>>> = (0..n)
        .map(|u| (0..n).map(|v| if u == v { Some(0) } else if adj[u][v] { Some(1) } else { None }).collect())
        .collect();
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

/// Shortest cycle length: for each edge `uv`, the shortest `u`-`v` path
/// avoiding that edge, plus one.
pub fn girth(n: usize, edges: &[(usize, usize)]) -> Option<usize> {
    let mut best = None;
    for (i, &(u, v)) in edges.iter().enumerate() {
        let rest: Vec<_> = edges.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &e)| e).collect();
        if let Some(d) = distances(n, &rest)[u][v] {
            let c = d + 1;
            if best.is_none_or(|b| c < b) {
                best = Some(c);
            }
        }
    }
    best
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Isomorphism by trying every bijection.
pub fn isomorphic(n1: usize, e1: &[(usize, usize)], n2: usize, e2: &[(usize, usize)]) -> bool {
    assert!(n1 <= 8, "brute force is factorial");
    if n1 != n2 || e1.len() != e2.len() {
        return false;
    }
    let (a, b) = (adjacency(n1, e1), adjacency(n2, e2));
    permutations(n1)
        .iter()
        .any(|p| (0..n1).all(|u| (0..n1).all(|v| a[u][v] == b[p[u]][p[v]])))
}
