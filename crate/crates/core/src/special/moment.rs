//! ∫₀¹ Li_p(±t) t^{k−1} dt by repeated integration by parts.

use num_traits::ToPrimitive;

use crate::exact::{eta_factor_closed, q, zeta_closed, ClosedForm, NumericContext, Rational};
use crate::numerics::psi;

/// ∫₀¹ Li_p(−t) t^{k−1} dt = c·[ψ(k+1) − ψ(k/2+1)] + Σ_{μ=2}^{p} (−1)^{p−μ}/k^{p+1−μ}·(2^{1−μ}−1)ζ(μ),
/// with c = (−1)^p/k^p.
#[derive(Debug, Clone, PartialEq)]
pub struct LiMoment {
    pub p: u32,
    pub k: u32,
    pub psi_coefficient: Rational,
    pub zeta_part: ClosedForm,
}

fn pow_k(k: u32, e: u32) -> Rational {
    Rational::from_integer(num_traits::pow(num_bigint::BigInt::from(k), e as usize))
}

fn signed(e: u32) -> Rational {
    if e.is_multiple_of(2) {
        q(1)
    } else {
        q(-1)
    }
}

pub fn li_moment(p: u32, k: u32) -> crate::Result<LiMoment> {
    if p == 0 || k == 0 {
        return Err(crate::error::domain("li_moment needs p >= 1 and k >= 1"));
    }
    let mut zeta_part = ClosedForm::zero();
    for mu in 2..=p {
        let c = signed(p - mu) / pow_k(k, p + 1 - mu);
        zeta_part += eta_factor_closed(mu as i64).scale(&c);
    }
    Ok(LiMoment {
        p,
        k,
        psi_coefficient: signed(p) / pow_k(k, p),
        zeta_part,
    })
}

impl LiMoment {
    /// ψ(k+1) − ψ(k/2+1) in closed form: H_{2m} − H_m for k = 2m, and
    /// H_k − 2Σ_{j=0}^{m} 1/(2j+1) + 2ln2 for k = 2m+1.
    pub fn psi_difference(&self) -> ClosedForm {
        let k = self.k as i64;
        let h = |n: i64| (1..=n).fold(q(0), |acc, j| acc + Rational::new(1.into(), j.into()));
        if k % 2 == 0 {
            ClosedForm::rational(h(k) - h(k / 2))
        } else {
            let m = (k - 1) / 2;
            let odd = (0..=m).fold(q(0), |acc, j| acc + Rational::new(1.into(), (2 * j + 1).into()));
            ClosedForm::rational(h(k) - odd * q(2)) + ClosedForm::ln2().scale_int(2)
        }
    }

    pub fn exact(&self) -> ClosedForm {
        self.psi_difference().scale(&self.psi_coefficient) + &self.zeta_part
    }

    /// Numeric value with ψ evaluated directly.
    pub fn value(&self, ctx: &NumericContext) -> crate::Result<f64> {
        let kf = self.k as f64;
        let d = psi(kf + 1.0)? - psi(kf / 2.0 + 1.0)?;
        Ok(self.psi_coefficient.to_f64().unwrap_or(f64::NAN) * d + ctx.eval(&self.zeta_part)?)
    }
}

/// ∫₀¹ Li_p(t) t^{k−1} dt = Σ_{μ=2}^{p} (−1)^{p−μ} ζ(μ)/k^{p+1−μ} + (−1)^{p+1} H_k/k^p, as f64 for real k.
pub(crate) fn li_moment_plus(p: u32, k: f64, zetas: &[f64]) -> f64 {
    let mut acc = 0.0;
    for mu in 2..=p {
        let s = if (p - mu).is_multiple_of(2) { 1.0 } else { -1.0 };
        acc += s * zetas[mu as usize] / k.powi((p + 1 - mu) as i32);
    }
    let s = if p % 2 == 1 { 1.0 } else { -1.0 };
    acc + s * crate::numerics::harmonic(k) / k.powi(p as i32)
}

/// ζ(0..=n) as f64, with index 0 and 1 unused.
pub(crate) fn zeta_table(n: u32) -> Vec<f64> {
    let ctx = NumericContext::shared();
    (0..=n)
        .map(|s| {
            if s < 2 {
                f64::NAN
            } else {
                ctx.eval(&zeta_closed(s).expect("s >= 2")).expect("zeta")
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{integrate01, EndpointClass};
    use crate::special::polylog::polylog_c;

    #[test]
    fn examples() {
        let m = li_moment(1, 1).unwrap();
        assert_eq!(m.exact(), ClosedForm::parse("1 - 2*ln2").unwrap());
        assert_eq!(li_moment(1, 2).unwrap().exact(), ClosedForm::frac(-1, 4));
        let ctx = NumericContext::shared();
        assert!((m.value(ctx).unwrap() - (1.0 - 2.0 * std::f64::consts::LN_2)).abs() < 1e-15);
    }

    #[test]
    fn against_quadrature() {
        let ctx = NumericContext::shared();
        let zetas = zeta_table(6);
        for p in 1..=4u32 {
            for k in 1..=6u32 {
                let minus = integrate01(
                    |t, _| polylog_c(p, -t, 1.0 + t) * t.powi(k as i32 - 1),
                    EndpointClass::Regular,
                    1e-13,
                )
                .unwrap()
                .value;
                let m = li_moment(p, k).unwrap();
                assert!((m.value(ctx).unwrap() - minus).abs() < 1e-11, "p={p} k={k}");
                assert!((ctx.eval(&m.exact()).unwrap() - minus).abs() < 1e-11);
                let plus = integrate01(
                    |t, om| polylog_c(p, t, om) * t.powi(k as i32 - 1),
                    EndpointClass::LogSingularAt1,
                    1e-13,
                )
                .unwrap()
                .value;
                assert!(
                    (li_moment_plus(p, k as f64, &zetas) - plus).abs() < 1e-11,
                    "plus p={p} k={k}"
                );
            }
        }
    }
}
