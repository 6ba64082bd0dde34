use super::quad::{integrate01_unchecked, EndpointClass};
use crate::error::{domain, Error, Result};

/// Σ_{k≥1} term(k) for an alternating series whose magnitudes eventually decrease.
///
/// Chebyshev acceleration of the remainder after a directly summed head; the
/// result is accepted once heads of different length give matching estimates.
pub fn sum_alternating<F>(term: F, tol: f64) -> Result<f64>
where
    F: Fn(u64) -> f64,
{
    if !(tol > 0.0) {
        return Err(domain("sum_alternating needs tol > 0"));
    }
    let base = ((1.0 / tol).log10() * 1.31).ceil().max(10.0) as u64 + 10;
    let e2 = accelerated(&term, 16, base + 8);
    let e3 = accelerated(&term, 64, base + 16);
    let err = (e3 - e2).abs();
    if !e3.is_finite() || err > tol {
        return Err(Error::Convergence {
            routine: "sum_alternating",
            partial: e3,
            error_estimate: err,
        });
    }
    Ok(e3)
}

fn accelerated<F: Fn(u64) -> f64>(term: &F, head: u64, n: u64) -> f64 {
    let mut direct = 0.0;
    for k in 1..=head {
        direct += term(k);
    }
    // Remainder Σ_{j≥0} (−1)^j a_j with a_j = (−1)^j term(head+1+j).
    let nf = n as f64;
    let mut d = (3.0 + 8f64.sqrt()).powf(nf);
    d = 0.5 * (d + 1.0 / d);
    let mut b = -1.0;
    let mut c = -d;
    let mut s = 0.0;
    for j in 0..n {
        c = b - c;
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        s += c * sign * term(head + 1 + j);
        let jf = j as f64;
        b *= (jf + nf) * (jf - nf) / ((jf + 0.5) * (jf + 1.0));
    }
    direct + s / d
}

/// Σ_{k≥start} term(k) for a positive series with term(k) = O(k^{−s}), s = `exponent_hint` ≥ 2.
///
/// `term` must accept real arguments: the tail beyond the cutoff is the
/// Euler-Maclaurin integral plus endpoint corrections.
pub fn sum_tail<F>(term: F, start: u64, exponent_hint: f64, tol: f64) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    if !(exponent_hint >= 2.0) {
        return Err(domain(format!(
            "sum_tail exponent hint {exponent_hint} < 2 risks divergence"
        )));
    }
    if !(tol > 0.0) {
        return Err(domain("sum_tail needs tol > 0"));
    }
    let mut cutoff = start.max(1000);
    let mut head = 0.0;
    let mut k = start;
    let mut previous: Option<f64> = None;
    for _ in 0..8 {
        while k < cutoff {
            head += term(k as f64);
            k += 1;
        }
        let estimate = head + em_tail(&term, cutoff as f64, tol)?;
        if let Some(prev) = previous {
            if (estimate - prev).abs() < tol / 4.0 {
                return Ok(estimate);
            }
        }
        previous = Some(estimate);
        cutoff *= 2;
    }
    Err(Error::Convergence {
        routine: "sum_tail",
        partial: previous.unwrap_or(f64::NAN),
        error_estimate: f64::NAN,
    })
}

/// Σ_{k≥K} f(k) ≈ ∫_K^∞ f + f(K)/2 − f'(K)/12.
fn em_tail<F: Fn(f64) -> f64>(f: &F, cutoff: f64, tol: f64) -> Result<f64> {
    let g = |u: f64, _: f64| {
        let x = cutoff / u;
        if x > 1e150 {
            0.0
        } else {
            f(x) * cutoff / (u * u)
        }
    };
    let integral = integrate01_unchecked(&g, EndpointClass::LogSingularAt0, tol / 8.0)?.value;
    let delta = cutoff * 1e-4;
    let derivative = (f(cutoff + delta) - f(cutoff - delta)) / (2.0 * delta);
    Ok(integral + 0.5 * f(cutoff) - derivative / 12.0)
}
