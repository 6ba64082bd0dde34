use std::sync::OnceLock;

use num_traits::ToPrimitive;

use crate::error::{domain, Result};
use crate::exact::zeta_value;
use crate::numerics::zeta;

const EXPANSION_TERMS: usize = 60;

/// ζ(s) as f64 for integer s ≠ 1, s ≤ 60 above and down to −EXPANSION_TERMS.
pub(crate) fn zeta_int(s: i64) -> f64 {
    static NONPOS: OnceLock<Vec<f64>> = OnceLock::new();
    if s >= 2 {
        return zeta(s as f64).expect("s >= 2");
    }
    assert!(s != 1, "zeta pole");
    let table = NONPOS.get_or_init(|| {
        (0..=EXPANSION_TERMS as i64 + 2)
            .map(|n| {
                zeta_value(-n)
                    .expect("non-positive")
                    .as_rational()
                    .expect("rational")
                    .to_f64()
                    .expect("finite")
            })
            .collect()
    });
    table[(-s) as usize]
}

/// Li_p(x) for integer p ≥ 1 and real x in [−1, 1] (x < 1 when p = 1).
pub fn polylog(p: u32, x: f64) -> Result<f64> {
    if p == 0 {
        return Err(domain("polylog order must be >= 1"));
    }
    if !(-1.0..=1.0).contains(&x) {
        return Err(domain(format!("polylog argument {x} outside [-1, 1]")));
    }
    if p == 1 && x == 1.0 {
        return Err(domain("Li_1(1) diverges"));
    }
    Ok(polylog_c(p, x, 1.0 - x))
}

/// Li_p(x) given the accurately formed complement `omx = 1 − x`.
pub(crate) fn polylog_c(p: u32, x: f64, omx: f64) -> f64 {
    if p == 1 {
        return if x > 0.5 { -omx.ln() } else { -(-x).ln_1p() };
    }
    if x.abs() <= 0.5 {
        return direct_series(p, x);
    }
    if x > 0.0 {
        return near_one(p, omx);
    }
    if x == -1.0 {
        return (2f64.powi(1 - p as i32) - 1.0) * zeta_int(p as i64);
    }
    // Li_p(x) = 2^{1−p}·Li_p(x²) − Li_p(−x)
    let y = -x;
    let omy = 1.0 + x;
    let omy2 = omy * (1.0 + y);
    2f64.powi(1 - p as i32) * polylog_c(p, y * y, omy2) - near_one(p, omy)
}

fn direct_series(p: u32, x: f64) -> f64 {
    let mut sum = 0.0;
    let mut pw = x;
    let mut k = 1u32;
    loop {
        let term = pw / (k as f64).powi(p as i32);
        sum += term;
        if term.abs() <= 1e-18 * sum.abs() || pw == 0.0 {
            return sum;
        }
        k += 1;
        pw *= x;
    }
}

/// Li_p(e^μ) = μ^{p−1}/(p−1)!·(H_{p−1} − ln(−μ)) + Σ_{k≠p−1} ζ(p−k) μ^k/k!, μ = ln(1 − d).
fn near_one(p: u32, d: f64) -> f64 {
    if d == 0.0 {
        return zeta_int(p as i64);
    }
    let mu = (-d).ln_1p();
    let mut sum = 0.0;
    let mut pw = 1.0; // μ^k/k!
    for k in 0..EXPANSION_TERMS {
        if k + 1 != p as usize {
            sum += zeta_int(p as i64 - k as i64) * pw;
        } else {
            let h: f64 = (1..p).map(|j| 1.0 / j as f64).sum();
            sum += pw * (h - (-mu).ln());
        }
        pw *= mu / (k + 1) as f64;
        if pw.abs() < 1e-40 {
            break;
        }
    }
    sum
}

/// Li_k(1/2) by direct series.
pub fn li_half(k: u32) -> f64 {
    direct_series(k, 0.5)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{LN_2, PI};

    #[test]
    fn basic_values() {
        assert!((polylog(1, 0.5).unwrap() - LN_2).abs() < 1e-15);
        assert!((polylog(2, -1.0).unwrap() + PI * PI / 12.0).abs() < 1e-15);
        assert!((polylog(2, 0.5).unwrap() - (PI * PI / 12.0 - LN_2 * LN_2 / 2.0)).abs() < 1e-15);
        assert!((polylog(2, 1.0).unwrap() - PI * PI / 6.0).abs() < 1e-15);
        assert!(polylog(1, 1.0).is_err());
        assert!(polylog(2, 1.5).is_err());
    }

    #[test]
    fn branches_agree() {
        // the log expansion and the direct series overlap near x = 1/2
        for p in 2..=8 {
            let a = direct_series(p, 0.55);
            let b = near_one(p, 0.45);
            assert!((a - b).abs() < 1e-14 * a.abs(), "p={p}: {a} vs {b}");
        }
        for p in 2..=6 {
            let x = -0.8;
            let direct: f64 = crate::numerics::sum_alternating(
                |k| 0.8f64.powi(k as i32) * if k % 2 == 0 { 1.0 } else { -1.0 } / (k as f64).powi(p as i32),
                1e-15,
            )
            .unwrap();
            assert!((polylog(p, x).unwrap() - direct).abs() < 1e-14);
        }
    }

    #[test]
    fn dilog_near_one() {
        // Li_2(1−d) = ζ(2) − ln(d)ln(1−d) − Li_2(d)
        let d: f64 = 1e-9;
        let expect = PI * PI / 6.0 - d.ln() * (-d).ln_1p() - direct_series(2, d);
        assert!((polylog_c(2, 1.0 - d, d) - expect).abs() < 1e-15);
    }
}
