//! Nonplanarity by direct search for a subdivision of `K_5` or `K_{3,3}`.

struct Search {
    adj: Vec<Vec<bool>>,
    used: Vec<bool>,
}

impl Search {
    /// Finds internally disjoint paths for `pairs[k..]`, with interiors
    /// avoiding every vertex already marked used.
    fn paths(&mut self, pairs: &[(usize, usize)], k: usize) -> bool {
        let Some(&(a, b)) = pairs.get(k) else {
            return true;
        };
        self.walk(a, b, pairs, k)
    }

    fn walk(&mut self, at: usize, target: usize, pairs: &[(usize, usize)], k: usize) -> bool {
        let n = self.adj.len();
        for w in 0..n {
            if !self.adj[at][w] {
                continue;
            }
            if w == target {
                // The direct edge is only usable once, which holds since each
                // pair of branch vertices is joined by exactly one path.
                if self.paths(pairs, k + 1) {
                    return true;
                }
            } else if !self.used[w] {
                self.used[w] = true;
                if self.walk(w, target, pairs, k) {
                    return true;
                }
                self.used[w] = false;
            }
        }
        false
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = combinations(n - 1, k);
    for mut c in combinations(n - 1, k - 1) {
        c.push(n - 1);
        out.push(c);
    }
    out
}

fn has_subdivision(adj: &[Vec<bool>], branch: &[usize], pairs: &[(usize, usize)]) -> bool {
    let n = adj.len();
    let mut used = vec![false; n];
    for &b in branch {
        used[b] = true;
    }
    let pairs: Vec<(usize, usize)> = pairs.iter().map(|&(i, j)| (branch[i], branch[j])).collect();
    Search { adj: adj.to_vec(), used }.paths(&pairs, 0)
}

/// Whether the graph contains a subdivision of `K_5` or `K_{3,3}`, which by
/// Kuratowski's theorem is equivalent to nonplanarity.
pub fn has_kuratowski_subdivision(n: usize, edges: &[(usize, usize)]) -> bool {
    assert!(n <= 12, "exhaustive search");
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in edges {
        if u != v {
            adj[u][v] = true;
            adj[v][u] = true;
        }
    }
    let deg = |v: usize| adj[v].iter().filter(|&&b| b).count();
    let k5_pairs: Vec<(usize, usize)> = (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect();
    for c in combinations(n, 5) {
        if c.iter().all(|&v| deg(v) >= 4) && has_subdivision(&adj, &c, &k5_pairs) {
            return true;
        }
    }
    let k33_pairs: Vec<(usize, usize)> = (0..3).flat_map(|i| (3..6).map(move |j| (i, j))).collect();
    for c in combinations(n, 6) {
        if !c.iter().all(|&v| deg(v) >= 3) {
            continue;
        }
        // Split the six branch vertices into two sides, the first side
        // containing c[0].
        for rest in combinations(5, 2) {
            let mut left = vec![c[0]];
            left.extend(rest.iter().map(|&i| c[i + 1]));
            let right: Vec<usize> = c.iter().copied().filter(|v| !left.contains(v)).collect();
            let branch: Vec<usize> = left.into_iter().chain(right).collect();
            if has_subdivision(&adj, &branch, &k33_pairs) {
                return true;
            }
        }
    }
    false
}
