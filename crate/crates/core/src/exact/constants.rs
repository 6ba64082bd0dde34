//! Exact values of ζ, η-type factors and Bernoulli numbers.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::atom::ConstantAtom;
use super::form::ClosedForm;
use super::Rational;
use crate::error::{domain, Result};

const BERNOULLI_CACHE: usize = 80;

fn bernoulli_table() -> &'static [Rational] {
    static TABLE: OnceLock<Vec<Rational>> = OnceLock::new();
    TABLE.get_or_init(|| {
        // Σ_{k=0}^{m} C(m+1,k) B_k = 0, with B_1 = −1/2.
        let mut b: Vec<Rational> = Vec::with_capacity(BERNOULLI_CACHE + 1);
        b.push(Rational::one());
        for m in 1..=BERNOULLI_CACHE {
            let mut acc = Rational::zero();
            let mut binom = BigInt::one();
            for (k, bk) in b.iter().enumerate() {
                acc += bk * Rational::from_integer(binom.clone());
                binom = binom * BigInt::from(m + 1 - k) / BigInt::from(k + 1);
            }
            // binom is now C(m+1, m)
            b.push(-acc / Rational::from_integer(binom));
        }
        b
    })
}

/// Bernoulli number B_n with B_1 = −1/2.
pub fn bernoulli(n: usize) -> Rational {
    let table = bernoulli_table();
    assert!(n < table.len(), "Bernoulli index {n} beyond cache");
    table[n].clone()
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// C(n, k) for k ≤ n.
pub fn binomial(n: usize, k: usize) -> BigInt {
    let mut b = BigInt::one();
    for i in 0..k {
        b = b * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    b
}

pub fn rational_pow2(e: i64) -> Rational {
    let two = BigInt::from(2);
    if e >= 0 {
        Rational::from_integer(num_traits::pow(two, e as usize))
    } else {
        Rational::new(BigInt::one(), num_traits::pow(two, (-e) as usize))
    }
}

/// ζ(n) for n ≥ 2; even arguments become rational multiples of π^n.
pub fn zeta_closed(n: u32) -> Result<ClosedForm> {
    if n < 2 {
        return Err(domain(format!("zeta_closed needs n >= 2, got {n}")));
    }
    if n % 2 == 1 {
        return Ok(ClosedForm::atom(ConstantAtom::ZetaOdd(n)));
    }
    // ζ(2k) = (−1)^{k+1} B_{2k} (2π)^{2k} / (2 (2k)!)
    let k = n / 2;
    let sign = if k % 2 == 1 { 1 } else { -1 };
    let c = bernoulli(n as usize) * rational_pow2(n as i64 - 1) / Rational::from_integer(factorial(n))
        * Rational::from_integer(BigInt::from(sign));
    Ok(ClosedForm::atom_pow(ConstantAtom::Pi, n).scale(&c))
}

/// ζ(s) at any integer s ≠ 1, using analytic continuation for s ≤ 0.
pub fn zeta_value(s: i64) -> Result<ClosedForm> {
    match s {
        1 => Err(domain("zeta has a pole at 1")),
        s if s >= 2 => zeta_closed(s as u32),
        0 => Ok(ClosedForm::frac(-1, 2)),
        s => {
            let n = (-s) as usize;
            Ok(ClosedForm::rational(
                -bernoulli(n + 1) / Rational::from_integer(BigInt::from(n as u64 + 1)),
            ))
        }
    }
}

/// (2^{1−s} − 1)·ζ(s) = −η(s), with the s = 1 limit −ln2.
pub fn eta_factor_closed(s: i64) -> ClosedForm {
    if s == 1 {
        return -ClosedForm::ln2();
    }
    let factor = rational_pow2(1 - s) - Rational::one();
    zeta_value(s).expect("s != 1").scale(&factor)
}
