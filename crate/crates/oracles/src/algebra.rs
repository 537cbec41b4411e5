//! Element-scan oracles for algebras given by closures over element indices
//! `0..size`, where index 0 is the zero element.

/// `{y : [x, y] = 0}`, by scanning every element.
pub fn centralizer_scan(size: usize, bracket_is_zero: impl Fn(usize, usize) -> bool, x: usize) -> Vec<usize> {
    (0..size).filter(|&y| bracket_is_zero(x, y)).collect()
}

/// `{x : [x, y] = 0 for all y}`, by scanning every pair.
pub fn center_scan(size: usize, bracket_is_zero: impl Fn(usize, usize) -> bool) -> Vec<usize> {
    (0..size).filter(|&x| (0..size).all(|y| bracket_is_zero(x, y))).collect()
}

/// Jacobi identity on every triple of elements.
pub fn jacobi_all_triples(
    size: usize,
    bracket: impl Fn(usize, usize) -> usize,
    add: impl Fn(usize, usize) -> usize,
) -> bool {
    for a in 0..size {
        for b in 0..size {
            let ab = bracket(a, b);
            for c in 0..size {
                let s = add(add(bracket(a, bracket(b, c)), bracket(c, ab)), bracket(b, bracket(c, a)));
                if s != 0 {
                    return false;
                }
            }
        }
    }
    true
}
