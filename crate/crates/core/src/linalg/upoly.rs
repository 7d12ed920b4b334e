//! Dense integer polynomials in one variable, ascending order. Only what the
//! binary-form gcd needs.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) fn trim(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn deg(p: &[BigInt]) -> usize {
    p.len() - 1
}

pub(crate) fn content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// Primitive part with positive leading coefficient.
pub(crate) fn primitive(p: &[BigInt]) -> Vec<BigInt> {
    let c = content(p);
    if c.is_zero() {
        return Vec::new();
    }
    let sign = if p.last().unwrap().is_negative() { -c } else { c };
    p.iter().map(|x| x / &sign).collect()
}

/// `lc(b)^(deg a - deg b + 1) · a mod b`.
fn prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = deg(b);
    let lb = &b[db];
    let mut r = a.to_vec();
    let mut steps = deg(a) + 1 - db;
    while !r.is_empty() && r.len() > db {
        let dr = deg(&r);
        let lr = r[dr].clone();
        for x in r.iter_mut() {
            *x *= lb;
        }
        for (j, bj) in b.iter().enumerate() {
            r[dr - db + j] -= &lr * bj;
        }
        r = trim(r);
        steps -= 1;
    }
    let scale = num_traits::pow(lb.clone(), steps);
    r.iter().map(|x| x * &scale).collect()
}

/// Gcd over ℤ[x] by the subresultant remainder sequence, returned primitive
/// with positive leading coefficient (content gcd is dropped: callers only
/// need the gcd up to a unit of ℚ). Empty input slices denote zero.
pub(crate) fn gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let a = trim(a.to_vec());
    let b = trim(b.to_vec());
    if a.is_empty() {
        return primitive(&b);
    }
    if b.is_empty() {
        return primitive(&a);
    }
    let (mut a, mut b) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    a = primitive(&a);
    b = primitive(&b);
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = deg(&a) - deg(&b);
        let r = prem(&a, &b);
        if r.is_empty() {
            break;
        }
        if r.len() == 1 {
            return vec![BigInt::one()];
        }
        let divisor = &g * num_traits::pow(h.clone(), delta);
        a = b;
        b = r.iter().map(|x| x / &divisor).collect();
        g = a[deg(&a)].clone();
        h = if delta == 0 {
            h
        } else {
            num_traits::pow(g.clone(), delta) / num_traits::pow(h.clone(), delta - 1)
        };
    }
    primitive(&b)
}
