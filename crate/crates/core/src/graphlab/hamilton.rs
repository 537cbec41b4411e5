use super::Graph;
use crate::error::{Error, Result};
use crate::limits::Limits;

/// Dirac's condition: `n >= 3` and every degree at least `n / 2`.
pub fn satisfies_dirac(g: &Graph) -> bool {
    let n = g.order();
    n >= 3 && (0..n).all(|v| 2 * g.deg(v) >= n)
}

/// Hamiltonicity, answered by Dirac's condition when it applies and by the
/// exact search otherwise.
pub fn is_hamiltonian(g: &Graph, limits: &Limits) -> Result<bool> {
    if satisfies_dirac(g) {
        return Ok(true);
    }
    Ok(hamiltonian_cycle(g, limits)?.is_some())
}

/// Exact backtracking search for a Hamiltonian cycle, returned as a vertex
/// sequence starting at 0. Limited to 64 vertices so that visited sets fit
/// in one word.
pub fn hamiltonian_cycle(g: &Graph, limits: &Limits) -> Result<Option<Vec<usize>>> {
    let n = g.order();
    let cap = limits.hamiltonian.min(64);
    if n > cap {
        return Err(Error::cap("Hamiltonian search vertices", n as u64, cap as u64));
    }
    if n < 3 || (0..n).any(|v| g.deg(v) < 2) || !g.is_connected() {
        return Ok(None);
    }
    let adj: Vec<u64> = (0..n).map(|v| g.row(v)[0]).collect();
    let mut search = Search {
        n,
        adj,
        full: if n == 64 { u64::MAX } else { (1u64 << n) - 1 },
        path: vec![0],
    };
    Ok(search.extend(1).then_some(search.path))
}

struct Search {
    n: usize,
    adj: Vec<u64>,
    full: u64,
    path: Vec<usize>,
}

impl Search {
    fn extend(&mut self, visited: u64) -> bool {
        let last = *self.path.last().unwrap();
        if self.path.len() == self.n {
            return self.adj[last] & 1 == 1;
        }
        let unvisited = self.full & !visited;
        // Every unvisited vertex still needs two usable neighbours: unvisited
        // ones, the current end, or the start.
        let ends = (1u64 << last) | 1;
        let mut rest = unvisited;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if (self.adj[v] & (unvisited | ends)).count_ones() < 2 {
                return false;
            }
        }
        // Try candidates with the fewest onward options first.
        let mut cands: Vec<(u32, usize)> = Vec::new();
        let mut c = self.adj[last] & unvisited;
        while c != 0 {
            let v = c.trailing_zeros() as usize;
            c &= c - 1;
            cands.push(((self.adj[v] & unvisited).count_ones(), v));
        }
        cands.sort_unstable();
        for (_, v) in cands {
            self.path.push(v);
            if self.extend(visited | 1 << v) {
                return true;
            }
            self.path.pop();
        }
        false
    }
}
