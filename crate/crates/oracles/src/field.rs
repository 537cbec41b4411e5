/// `(p, k)` with `q = p^k`, by trial division.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
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

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Coefficients low degree first, trailing zeros stripped.
fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

/// Remainder of `a` modulo the monic `m` over `F_p`.
pub fn poly_rem(p: u64, a: &[u64], m: &[u64]) -> Vec<u64> {
    let mut r: Vec<u64> = a.iter().map(|c| c % p).collect();
    let dm = m.len() - 1;
    assert_eq!(m[dm], 1, "modulus must be monic");
    while let Some(top) = trim(r.clone()).len().checked_sub(1) {
        if top < dm {
            break;
        }
        let c = r[top];
        for (i, &mi) in m.iter().enumerate() {
            let idx = top - dm + i;
            r[idx] = (r[idx] + p - c * mi % p) % p;
        }
        r = trim(r);
    }
    trim(r)
}

/// Schoolbook product of `a` and `b` reduced modulo `m`, over `F_p`.
pub fn poly_mulmod(p: u64, a: &[u64], b: &[u64], m: &[u64]) -> Vec<u64> {
    let mut prod = vec![0; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    poly_rem(p, &prod, m)
}

/// Irreducibility by trial division with every monic polynomial of degree
/// between 1 and `deg / 2`.
pub fn is_irreducible(p: u64, poly: &[u64]) -> bool {
    let poly = trim(poly.to_vec());
    let deg = poly.len() - 1;
    for d in 1..=deg / 2 {
        for code in 0..p.pow(d as u32) {
            let mut divisor: Vec<u64> = (0..d).map(|i| code / p.pow(i as u32) % p).collect();
            divisor.push(1);
            if poly_rem(p, &poly, &divisor).is_empty() {
                return false;
            }
        }
    }
    deg >= 1
}

/// Digits of `code` in base `p`, `k` of them, low first.
pub fn digits(code: u64, p: u64, k: usize) -> Vec<u64> {
    (0..k).map(|i| code / p.pow(i as u32) % p).collect()
}

pub fn undigits(d: &[u64], p: u64) -> u64 {
    d.iter().rev().fold(0, |acc, &x| acc * p + x)
}
