//! Exhaustive enumeration of structure tensors and their `GL(n, q)` orbits.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::{Field, FieldElem};
use crate::liealg::{default_basis_names, pair_count, pair_index, LieAlgebra, Matrix};

/// Largest raw tensor space `q^(n * C(n, 2))` that is scanned.
pub const TENSOR_CAP: u64 = 19_683;
/// Largest matrix space `q^(n^2)` scanned for invertible matrices.
pub const MATRIX_CAP: u64 = 65_536;

/// One enumerated algebra, named after its tensor index.
#[derive(Debug, Clone)]
pub struct EnumeratedAlgebra {
    pub tensor: u64,
    pub name: String,
    pub algebra: LieAlgebra,
}

fn tensor_space(q: u32, n: usize) -> Result<u64> {
    let digits = (n * pair_count(n)) as u32;
    let size = (q as u64).checked_pow(digits).filter(|&s| s <= TENSOR_CAP);
    size.ok_or_else(|| {
        Error::cap(
            format!("structure tensors for n = {n}, q = {q}"),
            (q as u64).saturating_pow(digits),
            TENSOR_CAP,
        )
    })
}

/// Digit `p * n + k` (little-endian, base `q`) is coordinate `k` of the
/// bracket of basis pair `p`.
pub fn tensor_index(alg: &LieAlgebra) -> u64 {
    let q = alg.field().order() as u64;
    alg.structure()
        .iter()
        .flatten()
        .rev()
        .fold(0, |acc, c| acc * q + c.code() as u64)
}

fn tensor_from_index(mut t: u64, q: u32, n: usize) -> Vec<Vec<FieldElem>> {
    let mut structure = vec![vec![FieldElem::ZERO; n]; pair_count(n)];
    for row in structure.iter_mut() {
        for c in row.iter_mut() {
            *c = FieldElem::from_code((t % q as u64) as u16);
            t /= q as u64;
        }
    }
    structure
}

fn enumerated(field: &Arc<Field>, n: usize, tensor: u64, algebra: LieAlgebra) -> EnumeratedAlgebra {
    EnumeratedAlgebra {
        tensor,
        name: format!("q{}-n{}-t{}", field.order(), n, tensor),
        algebra,
    }
}

/// All tensors satisfying the Jacobi identity, abelian one included, in
/// increasing tensor index.
pub fn jacobi_tensors(field: &Arc<Field>, n: usize) -> Result<Vec<EnumeratedAlgebra>> {
    let total = tensor_space(field.order(), n)?;
    let names = default_basis_names(n);
    Ok((0..total)
        .filter_map(|t| {
            let s = tensor_from_index(t, field.order(), n);
            LieAlgebra::new(field.clone(), names.clone(), s)
                .ok()
                .map(|alg| enumerated(field, n, t, alg))
        })
        .collect())
}

/// Enumerates `n`-dimensional algebras over `field`. Without `dedupe` every
/// Jacobi tensor is returned; with it, the smallest tensor of each
/// `GL(n, q)` orbit.
pub fn enumerate_algebras(field: &Arc<Field>, n: usize, dedupe: bool) -> Result<Vec<EnumeratedAlgebra>> {
    let all = jacobi_tensors(field, n)?;
    if !dedupe {
        return Ok(all);
    }
    let table = OrbitTable::build(field, n)?;
    Ok(all
        .into_iter()
        .filter(|e| table.reps.binary_search(&e.tensor).is_ok())
        .collect())
}

/// An invertible matrix with its inverse, both row-major `n x n`.
#[derive(Debug, Clone)]
pub struct GlElement {
    pub g: Matrix,
    pub inv: Matrix,
}

/// All of `GL(n, q)`, in increasing base-`q` order of the row-major entries.
pub fn general_linear(field: &Field, n: usize) -> Result<Vec<GlElement>> {
    let q = field.order() as u64;
    let total = q
        .checked_pow((n * n) as u32)
        .filter(|&s| s <= MATRIX_CAP)
        .ok_or_else(|| Error::cap(format!("matrices for GL({n}, {q})"), q.saturating_pow((n * n) as u32), MATRIX_CAP))?;
    let mut out = Vec::new();
    for idx in 0..total {
        let mut g = Matrix::zeros(n, n);
        let mut t = idx;
        for r in 0..n {
            for c in 0..n {
                g.set(r, c, FieldElem::from_code((t % q) as u16));
                t /= q;
            }
        }
        if let Some(inv) = invert(field, &g) {
            out.push(GlElement { g, inv });
        }
    }
    Ok(out)
}

fn invert(field: &Field, g: &Matrix) -> Option<Matrix> {
    let n = g.rows();
    let mut aug = Matrix::zeros(n, 2 * n);
    for r in 0..n {
        for c in 0..n {
            aug.set(r, c, g.get(r, c));
        }
        aug.set(r, n + r, FieldElem::ONE);
    }
    let pivots = aug.rref(field);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    let mut inv = Matrix::zeros(n, n);
    for r in 0..n {
        for c in 0..n {
            inv.set(r, c, aug.get(r, n + c));
        }
    }
    Some(inv)
}

/// Structure constants after the basis change `e'_a = sum_i g[i][a] e_i`:
/// `c'_ab = g^-1 [e'_a, e'_b]`.
pub fn transform(alg: &LieAlgebra, t: &GlElement) -> Vec<Vec<FieldElem>> {
    let n = alg.dim();
    let f = alg.field();
    let cols: Vec<Vec<FieldElem>> = (0..n).map(|a| (0..n).map(|i| t.g.get(i, a)).collect()).collect();
    let mut out = vec![Vec::new(); pair_count(n)];
    for a in 0..n {
        for b in a + 1..n {
            let w = alg.bracket_coeffs(&cols[a], &cols[b]);
            out[pair_index(n, a, b)] = t.inv.apply(f, &w);
        }
    }
    out
}

/// Whether two algebras over the same field are related by a change of
/// basis, found by scanning `GL(n, q)`.
pub fn algebras_isomorphic(a: &LieAlgebra, b: &LieAlgebra) -> Result<bool> {
    if a.field().order() != b.field().order() || a.dim() != b.dim() {
        return Ok(false);
    }
    if a.structure() == b.structure() {
        return Ok(true);
    }
    let same_invariants = a.center().dim() == b.center().dim()
        && a.derived_subalgebra().dim() == b.derived_subalgebra().dim()
        && a.is_nilpotent() == b.is_nilpotent();
    if !same_invariants {
        return Ok(false);
    }
    Ok(general_linear(a.field(), a.dim())?
        .iter()
        .any(|t| transform(a, t) == b.structure()))
}

/// Orbit decomposition of all Jacobi tensors of one `(n, q)`.
#[derive(Debug, Clone)]
pub struct OrbitTable {
    pub q: u32,
    pub n: usize,
    pub group_order: usize,
    /// Jacobi tensors in increasing order.
    pub tensors: Vec<u64>,
    /// Smallest tensor of each orbit, increasing.
    pub reps: Vec<u64>,
    pub orbit_sizes: Vec<u64>,
    class_of: HashMap<u64, usize>,
}

impl OrbitTable {
    pub fn build(field: &Arc<Field>, n: usize) -> Result<Self> {
        let all = jacobi_tensors(field, n)?;
        let group = general_linear(field, n)?;
        let q = field.order();
        let mut class_of = HashMap::new();
        let mut reps = Vec::new();
        let mut orbit_sizes = Vec::new();
        for e in &all {
            if class_of.contains_key(&e.tensor) {
                continue;
            }
            let class = reps.len();
            let mut size = 0;
            for t in &group {
                let image = transform(&e.algebra, t);
                let idx = image
                    .iter()
                    .flatten()
                    .rev()
                    .fold(0u64, |acc, c| acc * q as u64 + c.code() as u64);
                if class_of.insert(idx, class).is_none() {
                    size += 1;
                }
            }
            reps.push(e.tensor);
            orbit_sizes.push(size);
        }
        Ok(OrbitTable {
            q,
            n,
            group_order: group.len(),
            tensors: all.iter().map(|e| e.tensor).collect(),
            reps,
            orbit_sizes,
            class_of,
        })
    }

    pub fn class_count(&self) -> usize {
        self.reps.len()
    }

    /// Orbit number of a tensor, if it satisfies the Jacobi identity.
    pub fn class_of(&self, tensor: u64) -> Option<usize> {
        self.class_of.get(&tensor).copied()
    }
}
