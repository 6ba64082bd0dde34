use crate::error::{domain, Result};
use crate::numerics::{integrate01_unchecked, EndpointClass};

fn factorial_f64(n: u32) -> f64 {
    (1..=n).map(f64::from).product()
}

/// Nielsen S_{n,p}(z) = (−1)^{n+p−1}/((n−1)!p!)·∫₀¹ ln^{n−1}(x)·ln^p(1−zx)/x dx, by quadrature.
pub fn nielsen_num(n: u32, p: u32, z: f64) -> Result<f64> {
    if n == 0 || p == 0 {
        return Err(domain("nielsen_num needs n, p >= 1"));
    }
    if !(-1.0..=1.0).contains(&z) {
        return Err(domain(format!("nielsen_num argument {z} outside [-1, 1]")));
    }
    if z == 0.0 {
        return Ok(0.0);
    }
    let norm = factorial_f64(n - 1) * factorial_f64(p);
    let sign = if (n + p - 1).is_multiple_of(2) { 1.0 } else { -1.0 };
    let (nm1, pi) = ((n - 1) as i32, p as i32);
    let f = move |x: f64, omx: f64| {
        let inner = if z == 1.0 && x > 0.5 {
            omx.ln()
        } else {
            (-z * x).ln_1p()
        };
        x.ln().powi(nm1) * inner.powi(pi) / x
    };
    let class = if z == 1.0 {
        EndpointClass::LogSingularBoth
    } else {
        EndpointClass::LogSingularAt0
    };
    let r = integrate01_unchecked(&f, class, 2e-14 * norm)?;
    Ok(sign * r.value / norm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::polylog;
    use std::f64::consts::PI;

    #[test]
    fn reduces_to_polylog() {
        for n in 1..=5 {
            for z in [-1.0, 0.3, 1.0] {
                let v = nielsen_num(n, 1, z).unwrap();
                assert!((v - polylog(n + 1, z).unwrap()).abs() < 1e-12, "n={n} z={z}");
            }
        }
        assert!((nielsen_num(1, 1, 1.0).unwrap() - PI * PI / 6.0).abs() < 1e-13);
        assert!((nielsen_num(1, 1, -1.0).unwrap() + PI * PI / 12.0).abs() < 1e-13);
        // S_{1,2}(1) = ζ(3)
        assert!((nielsen_num(1, 2, 1.0).unwrap() - 1.202_056_903_159_594_2).abs() < 1e-12);
    }
}
