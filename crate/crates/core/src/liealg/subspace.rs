use crate::gf::{Field, FieldElem};

/// Dense matrix over `F_q`, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<FieldElem>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![FieldElem::ZERO; rows * cols],
        }
    }

    pub fn from_rows(rows: &[Vec<FieldElem>], cols: usize) -> Self {
        let mut m = Matrix::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols);
            m.data[r * cols..(r + 1) * cols].copy_from_slice(row);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> FieldElem {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: FieldElem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[FieldElem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Reduces in place to reduced row echelon form; returns the pivot
    /// columns in order.
    pub fn rref(&mut self, field: &Field) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut lead_row = 0;
        for col in 0..self.cols {
            if lead_row == self.rows {
                break;
            }
            let Some(pivot) = (lead_row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(pivot, lead_row);
            let inv = field.inverse(self.get(lead_row, col)).expect("pivot is nonzero");
            for c in 0..self.cols {
                let v = field.mul(self.get(lead_row, c), inv);
                self.set(lead_row, c, v);
            }
            for r in 0..self.rows {
                if r == lead_row {
                    continue;
                }
                let factor = self.get(r, col);
                if factor.is_zero() {
                    continue;
                }
                for c in 0..self.cols {
                    let v = field.sub(self.get(r, c), field.mul(factor, self.get(lead_row, c)));
                    self.set(r, c, v);
                }
            }
            pivots.push(col);
            lead_row += 1;
        }
        pivots
    }

    pub fn rank(&self, field: &Field) -> usize {
        self.clone().rref(field).len()
    }

    /// Null space `{v : M v = 0}` as a canonical subspace of `F_q^cols`.
    pub fn kernel(&self, field: &Field) -> Subspace {
        let mut m = self.clone();
        let pivots = m.rref(field);
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![FieldElem::ZERO; self.cols];
            v[free] = FieldElem::ONE;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = field.neg(m.get(r, free));
            }
            basis.push(v);
        }
        Subspace::span(field, self.cols, &basis)
    }

    /// `M v`.
    pub fn apply(&self, field: &Field, v: &[FieldElem]) -> Vec<FieldElem> {
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(FieldElem::ZERO, |acc, (&a, &b)| field.add(acc, field.mul(a, b)))
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }
}

/// A subspace of `F_q^n`, stored as the nonzero rows of its reduced row
/// echelon basis. The representation is canonical, so `==` is subspace
/// equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    rows: Vec<Vec<FieldElem>>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            rows: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        let rows = (0..ambient_dim)
            .map(|i| {
                let mut v = vec![FieldElem::ZERO; ambient_dim];
                v[i] = FieldElem::ONE;
                v
            })
            .collect();
        Subspace { ambient_dim, rows }
    }

    pub fn span(field: &Field, ambient_dim: usize, vectors: &[Vec<FieldElem>]) -> Self {
        let mut m = Matrix::from_rows(vectors, ambient_dim);
        let rank = m.rref(field).len();
        let rows = (0..rank).map(|r| m.row(r).to_vec()).collect();
        Subspace { ambient_dim, rows }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<FieldElem>] {
        &self.rows
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// Number of vectors, `q^dim`.
    pub fn cardinality(&self, field: &Field) -> u64 {
        (field.order() as u64).pow(self.dim() as u32)
    }

    pub fn contains(&self, field: &Field, v: &[FieldElem]) -> bool {
        let mut rows = self.rows.clone();
        rows.push(v.to_vec());
        Subspace::span(field, self.ambient_dim, &rows).dim() == self.dim()
    }

    pub fn is_subspace_of(&self, field: &Field, other: &Subspace) -> bool {
        self.rows.iter().all(|r| other.contains(field, r))
    }

    /// All `q^dim` vectors of the subspace, in no particular order.
    pub fn vectors(&self, field: &Field) -> Vec<Vec<FieldElem>> {
        let mut out = vec![vec![FieldElem::ZERO; self.ambient_dim]];
        for row in &self.rows {
            let mut next = Vec::with_capacity(out.len() * field.order() as usize);
            for v in &out {
                for a in field.elements() {
                    next.push(
                        v.iter()
                            .zip(row)
                            .map(|(&x, &y)| field.add(x, field.mul(a, y)))
                            .collect(),
                    );
                }
            }
            out = next;
        }
        out
    }
}
