//! Lie algebras over `F_q` presented by structure constants.

mod spec;
mod subspace;

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::Arc;

pub use spec::{AlgebraSpec, BracketSpec};
pub use subspace::{Matrix, Subspace};

use crate::error::{Error, Result};
use crate::gf::{Field, FieldElem};
use crate::limits::Limits;

/// An element `x = sum a_i e_i` of an algebra, by coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element {
    coeffs: Vec<FieldElem>,
}

impl Element {
    pub fn new(coeffs: Vec<FieldElem>) -> Self {
        Element { coeffs }
    }

    pub fn zero(dim: usize) -> Self {
        Element::new(vec![FieldElem::ZERO; dim])
    }

    /// Basis vector `e_i`.
    pub fn basis(dim: usize, i: usize) -> Self {
        let mut e = Element::zero(dim);
        e.coeffs[i] = FieldElem::ONE;
        e
    }

    /// Inverse of [`Element::index`]: base-`q` digits, least significant
    /// first.
    pub fn from_index(mut index: u64, q: u32, dim: usize) -> Self {
        let q = q as u64;
        let coeffs = (0..dim)
            .map(|_| {
                let d = index % q;
                index /= q;
                FieldElem::from_code(d as u16)
            })
            .collect();
        Element { coeffs }
    }

    pub fn index(&self, q: u32) -> u64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0u64, |acc, c| acc * q as u64 + c.code() as u64)
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, field: &Field, other: &Element) -> Element {
        Element::new(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| field.add(a, b))
                .collect(),
        )
    }

    pub fn scale(&self, field: &Field, a: FieldElem) -> Element {
        Element::new(self.coeffs.iter().map(|&c| field.mul(a, c)).collect())
    }

    pub fn neg(&self, field: &Field) -> Element {
        Element::new(self.coeffs.iter().map(|&c| field.neg(c)).collect())
    }
}

/// Index of the unordered pair `i < j` in the packed structure tensor.
#[inline]
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// A finite-dimensional Lie algebra. Only the brackets `[e_i, e_j]` with
/// `i < j` are stored; antisymmetry and `[u, u] = 0` follow from the storage
/// shape. The Jacobi identity is checked on construction.
#[derive(Debug, Clone)]
pub struct LieAlgebra {
    field: Arc<Field>,
    basis_names: Vec<String>,
    structure: Vec<Vec<FieldElem>>,
}

impl PartialEq for LieAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.field.order() == other.field.order()
            && self.basis_names == other.basis_names
            && self.structure == other.structure
    }
}

impl Eq for LieAlgebra {}

/// Basis labels used for algebras that are not given by a spec.
pub fn default_basis_names(n: usize) -> Vec<String> {
    if n <= 3 {
        ["x", "y", "z"][..n].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=n).map(|i| format!("e{i}")).collect()
    }
}

impl LieAlgebra {
    /// Builds an algebra from packed structure constants:
    /// `structure[pair_index(n, i, j)]` holds the coordinates of `[e_i, e_j]`.
    pub fn new(
        field: Arc<Field>,
        basis_names: Vec<String>,
        structure: Vec<Vec<FieldElem>>,
    ) -> Result<Self> {
        let n = basis_names.len();
        if n == 0 {
            return Err(Error::InvalidSpec {
                reason: "dimension must be at least 1".into(),
            });
        }
        if structure.len() != pair_count(n) || structure.iter().any(|v| v.len() != n) {
            return Err(Error::InvalidSpec {
                reason: "structure tensor has the wrong shape".into(),
            });
        }
        let alg = LieAlgebra {
            field,
            basis_names,
            structure,
        };
        if let Some([i, j, k]) = alg.jacobi_violation() {
            return Err(Error::JacobiViolation {
                triple: [i, j, k].map(|t| alg.basis_names[t].clone()),
            });
        }
        Ok(alg)
    }

    pub fn abelian(field: Arc<Field>, n: usize) -> Self {
        LieAlgebra {
            field,
            basis_names: default_basis_names(n),
            structure: vec![vec![FieldElem::ZERO; n]; pair_count(n)],
        }
    }

    pub fn from_spec(spec: &AlgebraSpec) -> Result<Self> {
        let field = Arc::new(Field::new(spec.q)?);
        Self::from_spec_in(field, spec)
    }

    /// Like [`LieAlgebra::from_spec`], reusing an existing field whose order
    /// must equal `spec.q`.
    pub fn from_spec_in(field: Arc<Field>, spec: &AlgebraSpec) -> Result<Self> {
        assert_eq!(field.order(), spec.q);
        if spec.dim != spec.basis.len() {
            return Err(Error::InvalidSpec {
                reason: format!(
                    "dim is {} but {} basis names are given",
                    spec.dim,
                    spec.basis.len()
                ),
            });
        }
        let n = spec.dim;
        let mut position = HashMap::new();
        for (i, name) in spec.basis.iter().enumerate() {
            if position.insert(name.as_str(), i).is_some() {
                return Err(Error::DuplicateBasisName { name: name.clone() });
            }
        }
        let lookup = |name: &str| {
            position
                .get(name)
                .copied()
                .ok_or_else(|| Error::UnknownBasisName { name: name.into() })
        };
        let mut structure = vec![vec![FieldElem::ZERO; n]; pair_count(n)];
        let mut seen = vec![false; pair_count(n)];
        for b in &spec.brackets {
            let (l, r) = (lookup(&b.left)?, lookup(&b.right)?);
            let mut value = vec![FieldElem::ZERO; n];
            for (name, &code) in &b.value {
                let k = lookup(name)?;
                value[k] = field.elem(code).ok_or_else(|| Error::InvalidCoefficient {
                    name: name.clone(),
                    value: code,
                    q: spec.q,
                })?;
            }
            if l == r {
                if value.iter().any(|c| !c.is_zero()) {
                    return Err(Error::SelfBracketNonzero {
                        name: b.left.clone(),
                    });
                }
                continue;
            }
            let (i, j, value) = if l < r {
                (l, r, value)
            } else {
                (r, l, value.iter().map(|&c| field.neg(c)).collect())
            };
            let p = pair_index(n, i, j);
            if std::mem::replace(&mut seen[p], true) {
                return Err(Error::DuplicateBracket {
                    left: spec.basis[i].clone(),
                    right: spec.basis[j].clone(),
                });
            }
            structure[p] = value;
        }
        Self::new(field, spec.basis.clone(), structure)
    }

    /// The presentation of this algebra, listing nonzero basis brackets in
    /// pair order.
    pub fn to_spec(&self) -> AlgebraSpec {
        let n = self.dim();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let v = &self.structure[pair_index(n, i, j)];
                if v.iter().all(|c| c.is_zero()) {
                    continue;
                }
                brackets.push(BracketSpec {
                    left: self.basis_names[i].clone(),
                    right: self.basis_names[j].clone(),
                    value: v
                        .iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(k, c)| (self.basis_names[k].clone(), c.code() as u32))
                        .collect(),
                });
            }
        }
        AlgebraSpec {
            q: self.field.order(),
            dim: n,
            basis: self.basis_names.clone(),
            brackets,
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn field_arc(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.basis_names.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    /// Packed structure constants, one coordinate vector per pair `i < j`.
    pub fn structure(&self) -> &[Vec<FieldElem>] {
        &self.structure
    }

    /// `[e_i, e_j]` for any `i, j`, with antisymmetric completion.
    pub fn basis_bracket(&self, i: usize, j: usize) -> Element {
        let n = self.dim();
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => Element::zero(n),
            std::cmp::Ordering::Less => Element::new(self.structure[pair_index(n, i, j)].clone()),
            std::cmp::Ordering::Greater => {
                Element::new(self.structure[pair_index(n, j, i)].clone()).neg(&self.field)
            }
        }
    }

    /// `q^n`, saturating.
    pub fn order(&self) -> u64 {
        (self.field.order() as u64).saturating_pow(self.dim() as u32)
    }

    pub fn is_abelian(&self) -> bool {
        self.structure.iter().flatten().all(|c| c.is_zero())
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, u: &Element, v: &Element) -> Element {
        Element::new(self.bracket_coeffs(u.coeffs(), v.coeffs()))
    }

    pub(crate) fn bracket_coeffs(&self, u: &[FieldElem], v: &[FieldElem]) -> Vec<FieldElem> {
        let f = &*self.field;
        let n = self.dim();
        let mut out = vec![FieldElem::ZERO; n];
        for i in 0..n {
            for j in i + 1..n {
                let w = f.sub(f.mul(u[i], v[j]), f.mul(u[j], v[i]));
                if w.is_zero() {
                    continue;
                }
                for (o, &c) in out.iter_mut().zip(&self.structure[pair_index(n, i, j)]) {
                    *o = f.add(*o, f.mul(w, c));
                }
            }
        }
        out
    }

    /// First basis triple `i < j < k` violating the Jacobi identity, if any.
    /// Each triple of distinct indices suffices since the Jacobiator is
    /// trilinear and alternating.
    pub fn jacobi_violation(&self) -> Option<[usize; 3]> {
        let n = self.dim();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let [a, b, c] = [i, j, k].map(|t| Element::basis(n, t));
                    let s = self
                        .bracket(&a, &self.bracket(&b, &c))
                        .add(&self.field, &self.bracket(&c, &self.bracket(&a, &b)))
                        .add(&self.field, &self.bracket(&b, &self.bracket(&c, &a)));
                    if !s.is_zero() {
                        return Some([i, j, k]);
                    }
                }
            }
        }
        None
    }

    /// Matrix of `ad_x : y -> [x, y]`; column `j` is `[x, e_j]`.
    pub fn ad_matrix(&self, x: &Element) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            let col = self.bracket(x, &Element::basis(n, j));
            for (r, &c) in col.coeffs().iter().enumerate() {
                m.set(r, j, c);
            }
        }
        m
    }

    /// `C_L(x) = ker ad_x`.
    pub fn centralizer(&self, x: &Element) -> Subspace {
        self.ad_matrix(x).kernel(&self.field)
    }

    /// `Z(L)`: common kernel of `ad_{e_i}` over the basis.
    pub fn center(&self) -> Subspace {
        let n = self.dim();
        let mut stacked = Matrix::zeros(n * n, n);
        for i in 0..n {
            let ad = self.ad_matrix(&Element::basis(n, i));
            for r in 0..n {
                for c in 0..n {
                    stacked.set(i * n + r, c, ad.get(r, c));
                }
            }
        }
        stacked.kernel(&self.field)
    }

    /// `L^2 = [L, L]`, spanned by the basis brackets.
    pub fn derived_subalgebra(&self) -> Subspace {
        Subspace::span(&self.field, self.dim(), &self.structure)
    }

    /// `[L, S]` for a subspace `S`.
    pub fn bracket_with(&self, s: &Subspace) -> Subspace {
        let n = self.dim();
        let mut gens = Vec::new();
        for i in 0..n {
            let e = Element::basis(n, i);
            for w in s.basis() {
                gens.push(self.bracket_coeffs(e.coeffs(), w));
            }
        }
        Subspace::span(&self.field, n, &gens)
    }

    /// Terms of the lower central series `L, [L, L], [L, [L, L]], ...` up to
    /// and including the first repeated or zero term.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let mut series = vec![Subspace::full(self.dim())];
        loop {
            let next = self.bracket_with(series.last().unwrap());
            let done = next.is_zero() || next.dim() == series.last().unwrap().dim();
            series.push(next);
            if done {
                return series;
            }
        }
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().unwrap().is_zero()
    }

    /// All `q^n` elements in increasing index order.
    pub fn enumerate_elements(
        &self,
        limits: &Limits,
    ) -> Result<impl Iterator<Item = Element> + '_> {
        let total = self.order();
        if total > limits.elements {
            return Err(Error::cap("q^n elements", total, limits.elements));
        }
        let q = self.field.order();
        let n = self.dim();
        Ok((0..total).map(move |i| Element::from_index(i, q, n)))
    }

    /// Human-readable element expression such as `x+2y+z`: terms in basis
    /// order, unit coefficients elided, other coefficients written as their
    /// element code.
    pub fn label(&self, x: &Element) -> String {
        let mut out = String::new();
        for (c, name) in x.coeffs().iter().zip(&self.basis_names) {
            if c.is_zero() {
                continue;
            }
            if !out.is_empty() {
                out.push('+');
            }
            if *c != FieldElem::ONE {
                let _ = write!(out, "{}", c.code());
            }
            out.push_str(name);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn heisenberg(q: u32) -> LieAlgebra {
        LieAlgebra::from_spec(&AlgebraSpec::new(q, &["x", "y", "z"]).bracket("x", "y", &[("z", 1)]))
            .unwrap()
    }

    fn el(codes: &[u16]) -> Element {
        Element::new(codes.iter().map(|&c| FieldElem::from_code(c)).collect())
    }

    #[test]
    fn pair_index_is_dense() {
        for n in 1..6 {
            let mut seen = vec![];
            for i in 0..n {
                for j in i + 1..n {
                    seen.push(pair_index(n, i, j));
                }
            }
            assert_eq!(seen, (0..pair_count(n)).collect::<Vec<_>>());
        }
    }

    #[test]
    fn spec_validation() {
        let bad = AlgebraSpec::new(2, &["x", "y", "z"])
            .bracket("x", "y", &[("x", 1)])
            .bracket("y", "z", &[("y", 1)])
            .bracket("x", "z", &[("x", 1)]);
        assert!(matches!(
            LieAlgebra::from_spec(&bad),
            Err(Error::JacobiViolation { .. })
        ));
        let dup = AlgebraSpec::new(2, &["x", "y"])
            .bracket("x", "y", &[("x", 1)])
            .bracket("y", "x", &[("x", 1)]);
        assert!(matches!(
            LieAlgebra::from_spec(&dup),
            Err(Error::DuplicateBracket { .. })
        ));
        let unknown = AlgebraSpec::new(2, &["x", "y"]).bracket("x", "w", &[("x", 1)]);
        assert_eq!(
            LieAlgebra::from_spec(&unknown),
            Err(Error::UnknownBasisName { name: "w".into() })
        );
        let selfb = AlgebraSpec::new(2, &["x", "y"]).bracket("x", "x", &[("y", 1)]);
        assert_eq!(
            LieAlgebra::from_spec(&selfb),
            Err(Error::SelfBracketNonzero { name: "x".into() })
        );
        let coeff = AlgebraSpec::new(3, &["x", "y"]).bracket("x", "y", &[("x", 3)]);
        assert!(matches!(
            LieAlgebra::from_spec(&coeff),
            Err(Error::InvalidCoefficient { .. })
        ));
        let abelian = LieAlgebra::from_spec(&AlgebraSpec::new(2, &["x", "y"])).unwrap();
        assert!(abelian.is_abelian());
    }

    #[test]
    fn reversed_bracket_is_negated() {
        let a = LieAlgebra::from_spec(&AlgebraSpec::new(3, &["x", "y"]).bracket("y", "x", &[("x", 1)]))
            .unwrap();
        assert_eq!(a.basis_bracket(0, 1), el(&[2, 0]));
        assert_eq!(a.basis_bracket(1, 0), el(&[1, 0]));
    }

    #[test]
    fn heisenberg_facts() {
        let h = heisenberg(2);
        let (x, y, z) = (el(&[1, 0, 0]), el(&[0, 1, 0]), el(&[0, 0, 1]));
        assert_eq!(h.bracket(&x, &y), z);
        assert_eq!(h.label(&el(&[1, 1, 1])), "x+y+z");
        let c = h.centralizer(&x);
        assert_eq!(c.dim(), 2);
        let mut members: Vec<_> = c.vectors(h.field()).into_iter().map(|v| h.label(&Element::new(v))).collect();
        members.sort();
        assert_eq!(members, ["0", "x", "x+z", "z"]);
        assert_eq!(h.center(), Subspace::span(h.field(), 3, &[z.coeffs().to_vec()]));
        assert_eq!(h.derived_subalgebra().dim(), 1);
        assert_eq!(h.ad_matrix(&x).rank(h.field()), 1);
        assert!(h.ad_matrix(&Element::zero(3)).is_zero());
        assert!(h.is_nilpotent());
    }

    #[test]
    fn cross_product_algebra() {
        let c = LieAlgebra::from_spec(
            &AlgebraSpec::new(2, &["x", "y", "z"])
                .bracket("x", "y", &[("z", 1)])
                .bracket("y", "z", &[("x", 1)])
                .bracket("z", "x", &[("y", 1)]),
        )
        .unwrap();
        assert_eq!(c.bracket(&el(&[1, 1, 0]), &el(&[0, 1, 1])), el(&[1, 1, 1]));
        assert!(c.center().is_zero());
        assert_eq!(c.derived_subalgebra().dim(), 3);
        assert!(!c.is_nilpotent());
    }

    #[test]
    fn aff1_and_nilpotency() {
        let aff = LieAlgebra::from_spec(&AlgebraSpec::new(2, &["x", "y"]).bracket("x", "y", &[("x", 1)]))
            .unwrap();
        let cx = aff.centralizer(&el(&[1, 0]));
        assert_eq!(cx.cardinality(aff.field()), 2);
        assert!(cx.contains(aff.field(), &[FieldElem::ONE, FieldElem::ZERO]));
        let l2 = LieAlgebra::from_spec(
            &AlgebraSpec::new(2, &["x", "y", "z"]).bracket("x", "y", &[("x", 1)]),
        )
        .unwrap();
        assert!(!l2.is_nilpotent());
        let ab = LieAlgebra::abelian(Arc::new(Field::new(2).unwrap()), 2);
        assert!(ab.is_nilpotent());
        assert_eq!(ab.centralizer(&el(&[1, 1])), Subspace::full(2));
        assert_eq!(ab.center(), Subspace::full(2));
        assert!(ab.derived_subalgebra().is_zero());
    }

    #[test]
    fn element_enumeration() {
        let f2 = Arc::new(Field::new(2).unwrap());
        let f3 = Arc::new(Field::new(3).unwrap());
        let lim = Limits::default();
        let e: Vec<_> = LieAlgebra::abelian(f2.clone(), 2).enumerate_elements(&lim).unwrap().collect();
        assert_eq!(e.len(), 4);
        assert!(e.iter().enumerate().all(|(i, x)| x.index(2) == i as u64));
        assert_eq!(LieAlgebra::abelian(f2.clone(), 3).enumerate_elements(&lim).unwrap().count(), 8);
        assert_eq!(LieAlgebra::abelian(f3, 2).enumerate_elements(&lim).unwrap().count(), 9);
        assert!(matches!(
            LieAlgebra::abelian(f2, 13).enumerate_elements(&lim),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn to_spec_round_trip() {
        let h = heisenberg(3);
        assert_eq!(LieAlgebra::from_spec(&h.to_spec()).unwrap(), h);
    }
}
