use crate::error::{domain, Result};

/// B_{2j}/(2j)! for j = 1..12.
const BERNOULLI_OVER_FACT: [f64; 12] = [
    0.08333333333333333,
    -0.001388888888888889,
    3.306878306878307e-05,
    -8.267195767195768e-07,
    2.08767569878681e-08,
    -5.284190138687493e-10,
    1.3382536530684679e-11,
    -3.3896802963225827e-13,
    8.586062056277845e-15,
    -2.174868698558062e-16,
    5.5090028283602295e-18,
    -1.3954464685812522e-19,
];

/// Hurwitz ζ(s, a) = Σ_{k≥0} (k+a)^{−s} for real s > 1, a > 0.
pub fn hurwitz_zeta(s: f64, a: f64) -> Result<f64> {
    if !(s > 1.0) || !(a > 0.0) {
        return Err(domain(format!("hurwitz_zeta needs s > 1 and a > 0, got s={s}, a={a}")));
    }
    Ok(hurwitz_unchecked(s, a))
}

pub(crate) fn hurwitz_unchecked(s: f64, a: f64) -> f64 {
    let n = 12 + s.ceil() as usize;
    let mut sum = 0.0;
    for k in (0..n).rev() {
        sum += (k as f64 + a).powf(-s);
    }
    let x = n as f64 + a;
    let xs = x.powf(-s);
    sum += x * xs / (s - 1.0) + 0.5 * xs;
    // Σ B_{2j}/(2j)! · s(s+1)…(s+2j−2) · x^{−s−2j+1}
    let mut rising = s;
    let mut pw = xs / x;
    for (j, c) in BERNOULLI_OVER_FACT.iter().enumerate() {
        let term = c * rising * pw;
        sum += term;
        if term.abs() < 1e-18 * sum.abs() {
            break;
        }
        let m = 2.0 * j as f64;
        rising *= (s + m + 1.0) * (s + m + 2.0);
        pw /= x * x;
    }
    sum
}

/// Riemann ζ(s) for real s > 1.
pub fn zeta(s: f64) -> Result<f64> {
    hurwitz_zeta(s, 1.0)
}
