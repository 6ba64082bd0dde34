use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;

use super::BivariateSeries;
use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, zeta_closed, ClosedForm, ConstantAtom, Rational};

/// Largest weight handled without an explicit override.
pub const DEFAULT_MAX_WEIGHT: u32 = 10;

/// ln Γ(1+z) = −γz + Σ_{k≥2} (−1)^k ζ(k) z^k / k, composed with a series `z` with zero constant term.
fn ln_gamma_1p(z: &BivariateSeries) -> Result<BivariateSeries> {
    let (oa, ob) = z.orders();
    let max_k = oa + ob;
    let mut out = BivariateSeries::zero_capped(oa, ob, z.total_cap());
    let mut zk = z.clone();
    for k in 1..=max_k {
        let c = if k == 1 {
            -ClosedForm::atom(ConstantAtom::EulerGamma)
        } else {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            zeta_closed(k as u32)?.scale(&Rational::new(sign.into(), (k as i64).into()))
        };
        let mut term = zk.clone();
        for i in 0..=oa {
            for j in 0..=ob {
                term.set(i, j, &zk.coeff(i, j) * &c);
            }
        }
        out = out.add(&term)?;
        if k < max_k {
            zk = zk.mul(z)?;
        }
    }
    Ok(out)
}

/// Γ(1+α)Γ(1+β)/Γ(1+α+β) to the given orders, with an optional total-degree cap.
pub fn gamma_ratio_series(orders: (usize, usize), total_cap: Option<usize>) -> Result<BivariateSeries> {
    let (oa, ob) = orders;
    let a = BivariateSeries::zero_capped(oa, ob, total_cap).add(&BivariateSeries::alpha(oa, ob))?;
    let b = BivariateSeries::zero_capped(oa, ob, total_cap).add(&BivariateSeries::beta(oa, ob))?;
    let ab = a.add(&b)?;
    let log = ln_gamma_1p(&a)?.add(&ln_gamma_1p(&b)?)?.sub(&ln_gamma_1p(&ab)?)?;
    for (i, j) in [(1, 0), (0, 1)] {
        let c = log.coeff(i, j);
        if !c.is_zero() {
            return Err(Error::RouteMismatch {
                quantity: "linear term of the log-gamma ratio".into(),
                residual: c.to_string(),
            });
        }
    }
    log.exp()
}

fn shared_ratio(max_weight: u32) -> Result<Arc<BivariateSeries>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<BivariateSeries>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(s) = cache.lock().expect("cache lock").get(&max_weight) {
        return Ok(s.clone());
    }
    let w = max_weight as usize;
    let s = Arc::new(gamma_ratio_series((w, w), Some(w))?);
    cache.lock().expect("cache lock").insert(max_weight, s.clone());
    Ok(s)
}

fn check_weight(weight: u32, max_weight: u32) -> Result<()> {
    if weight > max_weight {
        return Err(Error::Capacity {
            weight: weight as usize,
            max: max_weight as usize,
        });
    }
    Ok(())
}

/// s_{n,p} = S_{n,p}(1) from the Γ-ratio expansion: (−1)^{n+p−1}·[α^p β^n] Γ(1+α)Γ(1+β)/Γ(1+α+β).
pub fn kolbig_snp(n: u32, p: u32) -> Result<ClosedForm> {
    kolbig_snp_with(n, p, DEFAULT_MAX_WEIGHT)
}

pub fn kolbig_snp_with(n: u32, p: u32, max_weight: u32) -> Result<ClosedForm> {
    if n == 0 || p == 0 {
        return Err(crate::error::domain("kolbig_snp needs n, p >= 1"));
    }
    check_weight(n + p, max_weight)?;
    let g = shared_ratio(max_weight)?;
    // The 1/β prefactor shifts the β index by one: [α^p β^{n−1}](G/β) = [α^p β^n]G.
    let c = g.coeff(p as usize, n as usize);
    Ok(if (n + p - 1).is_multiple_of(2) { c } else { -c })
}

/// i(n,m) = ∫₀¹ ln^n(x) ln^m(1−x) dx as n!·m!·[ν^n μ^m] B(1+ν, 1+μ).
pub fn beta_derivative_inm(n: u32, m: u32) -> Result<ClosedForm> {
    beta_derivative_inm_with(n, m, DEFAULT_MAX_WEIGHT)
}

pub fn beta_derivative_inm_with(n: u32, m: u32, max_weight: u32) -> Result<ClosedForm> {
    check_weight(n + m, max_weight)?;
    let g = shared_ratio(max_weight)?;
    let (n, m) = (n as usize, m as usize);
    // 1/(1+ν+μ) = Σ_t (−1)^t (ν+μ)^t; only the (n, m) coefficient is needed.
    let mut acc = ClosedForm::zero();
    for i in 0..=n {
        for j in 0..=m {
            let gc = g.coeff(i, j);
            if gc.is_zero() {
                continue;
            }
            let (a, b) = (n - i, m - j);
            let t = a + b;
            let binom = binomial(t, a);
            let sign = if t % 2 == 0 { 1 } else { -1 };
            acc += gc.scale(&Rational::from_integer(binom * BigInt::from(sign)));
        }
    }
    let scale = Rational::from_integer(factorial(n as u32) * factorial(m as u32));
    Ok(acc.scale(&scale))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::NumericContext;

    #[test]
    fn gamma_ratio_low_coefficients() {
        let g = gamma_ratio_series((3, 3), None).unwrap();
        assert_eq!(g.coeff(0, 0), ClosedForm::one());
        assert!(g.coeff(1, 0).is_zero());
        assert!(g.coeff(0, 1).is_zero());
        assert_eq!(g.coeff(1, 1), -zeta_closed(2).unwrap());
        assert!(g.coeff(3, 0).is_zero());
    }

    #[test]
    fn snp_values() {
        assert_eq!(kolbig_snp(1, 1).unwrap(), zeta_closed(2).unwrap());
        assert_eq!(kolbig_snp(2, 1).unwrap(), zeta_closed(3).unwrap());
        assert_eq!(kolbig_snp(3, 1).unwrap(), zeta_closed(4).unwrap());
        assert_eq!(kolbig_snp(1, 2).unwrap(), zeta_closed(3).unwrap());
        assert!(matches!(kolbig_snp(6, 5), Err(Error::Capacity { .. })));
    }

    #[test]
    fn snp_symmetric() {
        for w in 2..=8 {
            for n in 1..w {
                assert_eq!(
                    kolbig_snp(n, w - n).unwrap(),
                    kolbig_snp(w - n, n).unwrap(),
                    "({n},{})",
                    w - n
                );
            }
        }
    }

    #[test]
    fn snp_against_quadrature() {
        let ctx = NumericContext::shared();
        for w in 2..=6 {
            for n in 1..w {
                let p = w - n;
                let exact = ctx.eval(&kolbig_snp(n, p).unwrap()).unwrap();
                let num = crate::special::nielsen_num(n, p, 1.0).unwrap();
                assert!((exact - num).abs() < 1e-10, "({n},{p}): {exact} vs {num}");
            }
        }
    }

    #[test]
    fn inm_values() {
        assert_eq!(
            beta_derivative_inm(1, 1).unwrap(),
            ClosedForm::parse("2 - zeta2").unwrap()
        );
        assert_eq!(
            beta_derivative_inm(1, 2).unwrap(),
            ClosedForm::parse("-6 + pi^2/3 + 2*zeta3").unwrap()
        );
        for w in 2..=8 {
            for n in 1..w {
                assert_eq!(
                    beta_derivative_inm(n, w - n).unwrap(),
                    beta_derivative_inm(w - n, n).unwrap()
                );
            }
        }
    }
}
