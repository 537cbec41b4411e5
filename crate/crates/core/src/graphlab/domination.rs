use super::Graph;
use crate::error::{Error, Result};
use crate::limits::Limits;

/// `gamma(G)`, the size of a smallest dominating set.
pub fn domination_number(g: &Graph, limits: &Limits) -> Result<usize> {
    Ok(minimum_dominating_set(g, limits)?.len())
}

/// A smallest dominating set, found by iterative deepening on the set size.
/// At each level the lowest undominated vertex `u` forces some member of
/// its closed neighbourhood `N[u]` into the set, so only those are branched
/// on. The first set found is the lexicographically earliest in branch
/// order, which makes the result deterministic.
pub fn minimum_dominating_set(g: &Graph, limits: &Limits) -> Result<Vec<usize>> {
    let n = g.order();
    let cap = limits.domination.min(64);
    if n > cap {
        return Err(Error::cap("domination search vertices", n as u64, cap as u64));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let closed: Vec<u64> = (0..n).map(|v| g.row(v)[0] | 1 << v).collect();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let max_cover = closed.iter().map(|c| c.count_ones()).max().unwrap();
    let mut chosen = Vec::new();
    for k in 1..=n {
        if branch(&closed, full, 0, k, max_cover, &mut chosen) {
            return Ok(chosen);
        }
    }
    unreachable!("the whole vertex set dominates")
}

fn branch(
    closed: &[u64],
    full: u64,
    covered: u64,
    budget: usize,
    max_cover: u32,
    chosen: &mut Vec<usize>,
) -> bool {
    let open = full & !covered;
    if open == 0 {
        return true;
    }
    if budget == 0 || open.count_ones() > budget as u32 * max_cover {
        return false;
    }
    let u = open.trailing_zeros() as usize;
    let mut cands = closed[u];
    while cands != 0 {
        let v = cands.trailing_zeros() as usize;
        cands &= cands - 1;
        chosen.push(v);
        if branch(closed, full, covered | closed[v], budget - 1, max_cover, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}
