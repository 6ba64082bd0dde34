//! Tanh-sinh quadrature on (0,1).
//!
//! Integrands take `(x, 1 - x)` so that logarithms of the complement can be
//! formed without cancellation near x = 1.

use std::f64::consts::FRAC_PI_2;

use crate::error::{domain, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EndpointClass {
    Regular,
    LogSingularAt0,
    LogSingularAt1,
    LogSingularBoth,
}

impl EndpointClass {
    fn t_max(self) -> f64 {
        match self {
            EndpointClass::Regular => 4.0,
            _ => 6.1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    pub error_estimate: f64,
    pub evaluations: usize,
}

const MAX_LEVEL: u32 = 11;
const MIN_LEVEL: u32 = 3;
const MAX_SPLIT_DEPTH: u32 = 4;

/// ∫₀¹ f(x) dx. `f` receives `(x, 1 - x)`.
pub fn integrate01<F>(f: F, class: EndpointClass, tol: f64) -> Result<QuadratureResult>
where
    F: Fn(f64, f64) -> f64,
{
    if !(tol >= 1e-13) {
        return Err(domain(format!("integrate01 tolerance {tol:e} below 1e-13")));
    }
    integrate01_unchecked(&f, class, tol)
}

/// Same as [`integrate01`] for integrands that need no complement.
pub fn integrate01_plain<F>(f: F, class: EndpointClass, tol: f64) -> Result<QuadratureResult>
where
    F: Fn(f64) -> f64,
{
    integrate01(move |x, _| f(x), class, tol)
}

/// No tolerance floor; used internally where the target is relative to a small quantity.
pub(crate) fn integrate01_unchecked(
    f: &dyn Fn(f64, f64) -> f64,
    class: EndpointClass,
    tol: f64,
) -> Result<QuadratureResult> {
    match tanh_sinh(f, class, tol) {
        Ok(r) => Ok(r),
        Err(Error::Convergence { .. }) => subdivide(f, class, 0.0, 1.0, tol, 0),
        Err(e) => Err(e),
    }
}

fn subdivide(
    f: &dyn Fn(f64, f64) -> f64,
    class: EndpointClass,
    a: f64,
    b: f64,
    tol: f64,
    depth: u32,
) -> Result<QuadratureResult> {
    let mid = 0.5 * (a + b);
    let mut total = QuadratureResult {
        value: 0.0,
        error_estimate: 0.0,
        evaluations: 0,
    };
    for (lo, hi) in [(a, mid), (mid, b)] {
        let width = hi - lo;
        let one_minus_hi = 1.0 - hi;
        let g = move |y: f64, omy: f64| width * f(lo + width * y, one_minus_hi + width * omy);
        let r = match tanh_sinh(&g, class, tol / 2.0) {
            Ok(r) => r,
            Err(Error::Convergence {
                partial,
                error_estimate,
                ..
            }) => {
                if depth + 1 >= MAX_SPLIT_DEPTH {
                    return Err(Error::Convergence {
                        routine: "integrate01",
                        partial: total.value + partial,
                        error_estimate: total.error_estimate + error_estimate,
                    });
                }
                subdivide(f, class, lo, hi, tol / 2.0, depth + 1)?
            }
            Err(e) => return Err(e),
        };
        total.value += r.value;
        total.error_estimate += r.error_estimate;
        total.evaluations += r.evaluations;
    }
    Ok(total)
}

struct Node {
    x: f64,
    omx: f64,
    w: f64,
}

fn node(t: f64) -> Node {
    let u = FRAC_PI_2 * t.sinh();
    let e = (-2.0 * u).exp();
    let x = 1.0 / (1.0 + e);
    let omx = 1.0 / (1.0 + (2.0 * u).exp());
    // dx/dt = 2·x·(1−x)·(π/2)·cosh t
    let w = std::f64::consts::PI * t.cosh() * x * omx;
    Node { x, omx, w }
}

fn contribution(f: &dyn Fn(f64, f64) -> f64, t: f64) -> Result<f64> {
    let n = node(t);
    if n.w == 0.0 || n.x == 0.0 || n.omx == 0.0 {
        return Ok(0.0);
    }
    let v = f(n.x, n.omx);
    if v.is_finite() {
        Ok(v * n.w)
    } else if n.w < 1e-250 {
        Ok(0.0)
    } else {
        Err(domain(format!("integrand not finite at x = {:e}", n.x)))
    }
}

fn tanh_sinh(f: &dyn Fn(f64, f64) -> f64, class: EndpointClass, tol: f64) -> Result<QuadratureResult> {
    let t_max = class.t_max();
    let mut h = 1.0;
    let mut sum = contribution(f, 0.0)?;
    let mut evaluations = 1;
    let mut k = 1;
    while (k as f64) * h <= t_max {
        let t = k as f64 * h;
        sum += contribution(f, t)? + contribution(f, -t)?;
        evaluations += 2;
        k += 1;
    }
    let mut estimate = h * sum;
    let mut err = f64::INFINITY;
    for level in 1..=MAX_LEVEL {
        h *= 0.5;
        let mut k = 1;
        while (k as f64) * h <= t_max {
            let t = k as f64 * h;
            sum += contribution(f, t)? + contribution(f, -t)?;
            evaluations += 2;
            k += 2;
        }
        let next = h * sum;
        err = (next - estimate).abs();
        estimate = next;
        if level >= MIN_LEVEL && err <= tol.max(4.0 * f64::EPSILON * estimate.abs()) {
            return Ok(QuadratureResult {
                value: estimate,
                error_estimate: err,
                evaluations,
            });
        }
    }
    Err(Error::Convergence {
        routine: "integrate01",
        partial: estimate,
        error_estimate: err,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn constant() {
        let r = integrate01_plain(|_| 1.0, EndpointClass::Regular, 1e-12).unwrap();
        assert!((r.value - 1.0).abs() < 1e-14);
    }

    #[test]
    fn log_product() {
        let r = integrate01(|x, omx| x.ln() * omx.ln(), EndpointClass::LogSingularBoth, 1e-12).unwrap();
        assert!((r.value - (2.0 - PI * PI / 6.0)).abs() < 1e-13, "{}", r.value);
    }

    #[test]
    fn strong_log_power() {
        // ∫ ln^6 x dx = 720
        let r = integrate01_plain(|x| x.ln().powi(6), EndpointClass::LogSingularAt0, 1e-13).unwrap();
        assert!((r.value - 720.0).abs() < 1e-10, "{}", r.value);
    }

    #[test]
    fn rejects_tiny_tolerance() {
        assert!(integrate01_plain(|_| 1.0, EndpointClass::Regular, 1e-16).is_err());
    }
}
