//! Exact arithmetic in the finite field `F_q`.
//!
//! Prime fields are residues mod `p`. Extension fields `F_{p^k}` are
//! polynomials over `F_p` reduced modulo a fixed irreducible polynomial. An
//! element is stored as a single code in `[0, q)`: the residue itself for
//! `k = 1`, otherwise the base-`p` digits of the polynomial representative
//! (digit `i` is the coefficient of `x^i`). Code order is the canonical
//! element order used everywhere downstream.
//!
//! All four operations are precomputed into `q x q` tables at construction.

use std::fmt;

use crate::error::{Error, Result};

/// Default largest supported field order.
pub const DEFAULT_FIELD_CAP: u32 = 27;

/// Reduction polynomials for the extension fields, coefficients lowest
/// degree first, monic.
const REDUCTION_POLYNOMIALS: &[(u32, &[u32])] = &[
    (4, &[1, 1, 1]),        // x^2 + x + 1
    (8, &[1, 1, 0, 1]),     // x^3 + x + 1
    (9, &[2, 2, 1]),        // x^2 + 2x + 2
    (16, &[1, 1, 0, 0, 1]), // x^4 + x + 1
    (25, &[2, 4, 1]),       // x^2 + 4x + 2
    (27, &[1, 2, 0, 1]),    // x^3 + 2x + 1
];

/// An element of some [`Field`], identified by its code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldElem(u16);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);
    pub const ONE: FieldElem = FieldElem(1);

    /// Wraps a raw code. The caller is responsible for `code < q`.
    pub const fn from_code(code: u16) -> Self {
        FieldElem(code)
    }

    pub const fn code(self) -> u16 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Binary and unary field operations, as selectors for [`Field::arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    /// Negation of the first operand; the second is ignored.
    Neg,
}

#[derive(Clone, PartialEq, Eq)]
pub struct Field {
    q: u32,
    p: u32,
    k: u32,
    reduction: Vec<u32>,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("q", &self.q)
            .field("p", &self.p)
            .field("k", &self.k)
            .field("reduction", &self.reduction)
            .finish()
    }
}

impl Field {
    /// The field with `q` elements, for `q` up to [`DEFAULT_FIELD_CAP`].
    pub fn new(q: u32) -> Result<Self> {
        Self::with_cap(q, DEFAULT_FIELD_CAP)
    }

    pub fn with_cap(q: u32, cap: u32) -> Result<Self> {
        let (p, k) = prime_power(q).ok_or(Error::NotPrimePower { q })?;
        if q > cap || q > u16::MAX as u32 {
            return Err(Error::Unsupported { q, cap });
        }
        let reduction = if k == 1 {
            Vec::new()
        } else {
            REDUCTION_POLYNOMIALS
                .iter()
                .find(|(order, _)| *order == q)
                .map(|(_, poly)| poly.to_vec())
                .unwrap_or_else(|| first_irreducible(p, k))
        };
        Ok(Self::build(q, p, k, reduction))
    }

    fn build(q: u32, p: u32, k: u32, reduction: Vec<u32>) -> Self {
        let n = q as usize;
        let mut add = vec![0u16; n * n];
        let mut mul = vec![0u16; n * n];
        let digits: Vec<Vec<u32>> = (0..q).map(|c| to_digits(c, p, k)).collect();
        for a in 0..n {
            for b in 0..n {
                let sum: Vec<u32> = digits[a]
                    .iter()
                    .zip(&digits[b])
                    .map(|(x, y)| (x + y) % p)
                    .collect();
                add[a * n + b] = from_digits(&sum, p) as u16;
                let prod = if k == 1 {
                    ((a as u32 * b as u32) % p) as u16
                } else {
                    from_digits(&poly_mulmod(&digits[a], &digits[b], &reduction, p), p) as u16
                };
                mul[a * n + b] = prod;
            }
        }
        let mut neg = vec![0u16; n];
        let mut inv = vec![0u16; n];
        for a in 0..n {
            neg[a] = (0..n).find(|&b| add[a * n + b] == 0).unwrap() as u16;
            if a != 0 {
                inv[a] = (1..n).find(|&b| mul[a * n + b] == 1).unwrap() as u16;
            }
        }
        Field {
            q,
            p,
            k,
            reduction,
            add,
            mul,
            neg,
            inv,
        }
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    /// Coefficients of the reduction polynomial, lowest degree first. Empty
    /// for prime fields.
    pub fn reduction_polynomial(&self) -> &[u32] {
        &self.reduction
    }

    pub fn is_prime(&self) -> bool {
        self.k == 1
    }

    /// The element with the given code, if it is in range.
    pub fn elem(&self, code: u32) -> Option<FieldElem> {
        (code < self.q).then_some(FieldElem(code as u16))
    }

    /// All elements in code order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> {
        (0..self.q as u16).map(FieldElem)
    }

    #[inline]
    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        FieldElem(self.add[a.0 as usize * self.q as usize + b.0 as usize])
    }

    #[inline]
    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        FieldElem(self.mul[a.0 as usize * self.q as usize + b.0 as usize])
    }

    #[inline]
    pub fn neg(&self, a: FieldElem) -> FieldElem {
        FieldElem(self.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    pub fn inverse(&self, a: FieldElem) -> Result<FieldElem> {
        if a.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(FieldElem(self.inv[a.0 as usize]))
        }
    }

    pub fn arith(&self, op: ArithOp, a: FieldElem, b: FieldElem) -> FieldElem {
        match op {
            ArithOp::Add => self.add(a, b),
            ArithOp::Sub => self.sub(a, b),
            ArithOp::Mul => self.mul(a, b),
            ArithOp::Neg => self.neg(a),
        }
    }
}

/// Decomposes `q = p^k` with `p` prime and `k >= 1`.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

pub(crate) fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn to_digits(mut code: u32, p: u32, k: u32) -> Vec<u32> {
    (0..k)
        .map(|_| {
            let d = code % p;
            code /= p;
            d
        })
        .collect()
}

fn from_digits(digits: &[u32], p: u32) -> u32 {
    digits.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// `a * b mod modulus` over `F_p`; `modulus` is monic of degree `k` and the
/// result has exactly `k` coefficients.
fn poly_mulmod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let k = modulus.len() - 1;
    let mut prod = vec![0u32; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for deg in (k..prod.len()).rev() {
        let lead = prod[deg];
        if lead != 0 {
            for (i, &m) in modulus.iter().enumerate() {
                let idx = deg - k + i;
                prod[idx] = (prod[idx] + (p - lead) * m) % p;
            }
        }
    }
    prod.truncate(k);
    prod
}

fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    let inv_lead = (1..p).find(|x| (x * m[dm]) % p == 1).unwrap();
    while r.len() > dm {
        let lead = r[r.len() - 1] * inv_lead % p;
        let shift = r.len() - 1 - dm;
        for (i, &c) in m.iter().enumerate() {
            r[shift + i] = (r[shift + i] + (p - lead) * c % p) % p;
        }
        r.pop();
    }
    r
}

/// True when the monic polynomial has no monic factor of degree `1..=k/2`.
fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let k = poly.len() - 1;
    for d in 1..=k / 2 {
        for tail in 0..p.pow(d as u32) {
            let mut f = to_digits(tail, p, d as u32);
            f.push(1);
            if poly_rem(poly, &f, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Lexicographically first monic irreducible polynomial of degree `k`.
fn first_irreducible(p: u32, k: u32) -> Vec<u32> {
    (0..p.pow(k))
        .map(|tail| {
            let mut f = to_digits(tail, p, k);
            f.push(1);
            f
        })
        .find(|f| is_irreducible(f, p))
        .expect("irreducible polynomials exist in every degree")
}
