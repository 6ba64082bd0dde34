//! Depth-2 multiple polylogarithm Σ_{k₂>k₁≥1} x_o^{k₂} x_i^{k₁} / (k₂^{m_o} k₁^{m_i}).
//!
//! The weight `m_outer` sits on the larger index k₂. The inner sum is a partial sum
//! P(N−1) in closed form (ψ, Hurwitz ζ or a finite tail), so the outer sum becomes a
//! single series that the accelerators in `numerics` can handle.

use crate::error::{domain, Result};
use crate::numerics::{harmonic, hurwitz_unchecked, psi_unchecked, sum_alternating, sum_tail};

use super::polylog::polylog_c;

const TOL: f64 = 1e-13;

fn sign(k: u64) -> f64 {
    if k.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

/// Σ_{j≥0} (−1)^j / (a+j)^m for real a > 0.
fn alt_hurwitz(m: u32, a: f64) -> f64 {
    if m == 1 {
        0.5 * (psi_unchecked(0.5 * (a + 1.0)) - psi_unchecked(0.5 * a))
    } else {
        let m = m as f64;
        2f64.powf(-m) * (hurwitz_unchecked(m, 0.5 * a) - hurwitz_unchecked(m, 0.5 * (a + 1.0)))
    }
}

fn li(p: u32, x: f64) -> f64 {
    polylog_c(p, x, 1.0 - x)
}

pub fn mpl2(m_outer: u32, m_inner: u32, x_outer: f64, x_inner: f64) -> Result<f64> {
    if m_outer == 0 || m_inner == 0 {
        return Err(domain("mpl2 weights must be >= 1"));
    }
    if !(x_outer.abs() <= 1.0) || !(x_inner.abs() <= 1.0) {
        return Err(domain(format!(
            "mpl2 arguments must lie in [-1, 1], got ({x_outer}, {x_inner})"
        )));
    }
    if m_outer == 1 && x_outer == 1.0 {
        return Err(domain("mpl2 diverges for m_outer = 1, x_outer = 1"));
    }
    if x_outer == 0.0 || x_inner == 0.0 {
        return Ok(0.0);
    }
    if x_outer.abs() < 1.0 {
        return Ok(geometric_outer(m_outer, m_inner, x_outer, x_inner));
    }
    let mo = m_outer as i32;
    if x_inner == 1.0 {
        // P(n) = H^{(m_i)}_n
        let partial = move |n: f64| {
            if m_inner == 1 {
                harmonic(n)
            } else if n < 0.5 {
                0.0
            } else {
                crate::numerics::zeta(m_inner as f64).expect("m >= 2") - hurwitz_unchecked(m_inner as f64, n + 1.0)
            }
        };
        return if x_outer == 1.0 {
            sum_tail(|x| partial(x - 1.0) / x.powi(mo), 1, m_outer as f64, TOL)
        } else {
            sum_alternating(|k| sign(k) * partial(k as f64 - 1.0) / (k as f64).powi(mo), TOL)
        };
    }
    if x_inner == -1.0 {
        // P(N−1) = Li_{m_i}(−1) + (−1)^{N−1} η_{m_i}(N)
        let l = li(m_inner, -1.0);
        let head = l * (li(m_outer, x_outer) - x_outer);
        let tail = if x_outer == 1.0 {
            sum_alternating(
                |k| {
                    if k < 2 {
                        0.0
                    } else {
                        sign(k - 1) * alt_hurwitz(m_inner, k as f64) / (k as f64).powi(mo)
                    }
                },
                TOL,
            )?
        } else {
            -sum_tail(
                |x| alt_hurwitz(m_inner, x) / x.powi(mo),
                2,
                (m_outer + m_inner) as f64,
                TOL,
            )?
        };
        return Ok(head + tail);
    }
    // |x_inner| < 1: P(N−1) = Li_{m_i}(x_i) − T(N−1), T(n) = Σ_{k>n} x_i^k/k^{m_i}.
    let l = li(m_inner, x_inner);
    let head = l * (li(m_outer, x_outer) - x_outer);
    let tails = inner_tails(m_inner, x_inner)?;
    let mut corr = 0.0;
    for (n, t) in tails.iter().enumerate().skip(1) {
        let big_n = (n + 1) as f64;
        corr += x_outer.powi(n as i32 + 1) / big_n.powi(mo) * t;
    }
    Ok(head - corr)
}

/// T(n) for n = 0..K where x^K is negligible, by backward accumulation.
fn inner_tails(m: u32, x: f64) -> Result<Vec<f64>> {
    let k_max = ((1e-20f64).ln() / x.abs().ln()).ceil() as usize + 2;
    if k_max > 50_000_000 {
        return Err(domain(format!("mpl2 inner argument {x} too close to +-1")));
    }
    let mut tails = vec![0.0; k_max + 1];
    for k in (1..=k_max).rev() {
        let term = x.powi(k as i32) / (k as f64).powi(m as i32);
        tails[k - 1] = tails[k] + term;
    }
    Ok(tails)
}

fn geometric_outer(mo: u32, mi: u32, xo: f64, xi: f64) -> f64 {
    let mut partial = 0.0;
    let mut acc = 0.0;
    let mut n = 1u64;
    loop {
        let nf = n as f64;
        // partial = P(n−1)
        let term = xo.powi(n as i32) / nf.powi(mo as i32) * partial;
        acc += term;
        partial += xi.powi(n as i32) / nf.powi(mi as i32);
        if n > 10 && xo.abs().powi(n as i32) * partial.abs().max(1.0) < 1e-18 {
            return acc;
        }
        n += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{integrate01, zeta, EndpointClass};

    #[test]
    fn zeta_2_1() {
        let z3 = zeta(3.0).unwrap();
        assert!((mpl2(2, 1, 1.0, 1.0).unwrap() - z3).abs() < 1e-12);
        assert_eq!(mpl2(3, 2, 0.0, 1.0).unwrap(), 0.0);
        assert!(mpl2(1, 2, 1.0, 1.0).is_err());
    }

    fn brute(mo: u32, mi: u32, xo: f64, xi: f64, n: usize) -> f64 {
        let mut p = 0.0;
        let mut s = 0.0;
        for k in 1..=n {
            let kf = k as f64;
            s += xo.powi(k as i32) / kf.powi(mo as i32) * p;
            p += xi.powi(k as i32) / kf.powi(mi as i32);
        }
        s
    }

    #[test]
    fn geometric_cases_match_brute_force() {
        for (mo, mi, xo, xi) in [
            (2, 3, 0.5, -1.0),
            (1, 2, -0.7, 0.3),
            (3, 1, 1.0, 0.5),
            (2, 2, -1.0, -0.4),
        ] {
            let v = mpl2(mo, mi, xo, xi).unwrap();
            let b = brute(mo, mi, xo, xi, 200_000);
            let bound = if xo.abs() == 1.0 { 1e-9 } else { 1e-13 };
            assert!((v - b).abs() < bound, "{mo} {mi} {xo} {xi}: {v} vs {b}");
        }
    }

    #[test]
    fn integral_identities() {
        let z = |s: u32| zeta(s as f64).unwrap();
        for p in [2u32, 3] {
            let a = integrate01(|t, om| li(p, t) / (1.0 + t) + 0.0 * om, EndpointClass::Regular, 1e-13)
                .unwrap()
                .value;
            assert!((a + mpl2(1, p, -1.0, -1.0).unwrap()).abs() < 1e-10);
            let b = integrate01(|t, _| li(p, -t) / (1.0 + t), EndpointClass::Regular, 1e-13)
                .unwrap()
                .value;
            assert!((b + mpl2(1, p, -1.0, 1.0).unwrap()).abs() < 1e-10);
            let c = integrate01(
                |t, om| (polylog_c(p, t, om) - z(p)) / om,
                EndpointClass::LogSingularAt1,
                1e-12,
            )
            .unwrap()
            .value;
            assert!((c + mpl2(p, 1, 1.0, 1.0).unwrap() + z(p + 1)).abs() < 1e-10);
            let d = integrate01(|t, om| (li(p, -t) - li(p, -1.0)) / om, EndpointClass::Regular, 1e-13)
                .unwrap()
                .value;
            let eta = (1.0 - 2f64.powi(-(p as i32))) * z(p + 1);
            assert!((d + mpl2(p, 1, -1.0, 1.0).unwrap() - eta).abs() < 1e-10);
        }
    }
}
