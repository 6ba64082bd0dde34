//! Truncated Stirling-number expansion of the alternating Euler sum S₋(p):
//!
//! ```text
//! S₋(p) = Σ_{k≥1} (−1)^{k+1}/(k·k!) · [d^k/dt^k Li_p(−t)]_{t=1}
//! [d^k/dt^k Li_p(−t)]_{t=1} = Σ_{j=1}^{k} S_k^{(j)} (2^{1+j−p} − 1) ζ(p−j)
//! ```
//!
//! The factor (2^{1+j−p} − 1)ζ(p−j) = Li_{p−j}(−1) is taken at its limit −ln2 when
//! p−j = 1 and by analytic continuation when p−j ≤ 0.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{domain, Result};
use crate::exact::{eta_factor_closed, factorial, q, ClosedForm, Rational};

/// Signed Stirling numbers of the first kind, rows 0..=cap.
#[derive(Debug, Clone)]
pub struct StirlingTable {
    values: Vec<Vec<BigInt>>,
}

impl StirlingTable {
    /// S_{k+1}^{(j)} = S_k^{(j−1)} − k·S_k^{(j)}
    pub fn new(cap: usize) -> Self {
        let mut values = vec![vec![BigInt::one()]];
        for k in 0..cap {
            let prev = &values[k];
            let mut row = vec![BigInt::zero(); k + 2];
            for j in 1..=k + 1 {
                let left = prev.get(j - 1).cloned().unwrap_or_default();
                let right = prev.get(j).cloned().unwrap_or_default();
                row[j] = left - BigInt::from(k) * right;
            }
            values.push(row);
        }
        Self { values }
    }

    pub fn cap(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, k: usize, j: usize) -> Option<&BigInt> {
        self.values.get(k).and_then(|row| row.get(j))
    }

    fn shared(k: usize) -> std::borrow::Cow<'static, StirlingTable> {
        static TABLE: OnceLock<StirlingTable> = OnceLock::new();
        let t = TABLE.get_or_init(|| StirlingTable::new(64));
        if k <= t.cap() {
            std::borrow::Cow::Borrowed(t)
        } else {
            std::borrow::Cow::Owned(StirlingTable::new(k))
        }
    }
}

pub fn stirling1(k: u32, j: u32) -> Result<BigInt> {
    if k < 1 || j < 1 || j > k {
        return Err(domain(format!("stirling1 needs 1 <= j <= k, got k={k}, j={j}")));
    }
    let t = StirlingTable::shared(k as usize);
    Ok(t.get(k as usize, j as usize).expect("within table").clone())
}

/// [d^k/dt^k Li_p(−t)] at t = 1.
pub fn polylog_derivative_at_minus1(p: u32, k: u32) -> Result<ClosedForm> {
    if p < 1 || k < 1 {
        return Err(domain("polylog_derivative_at_minus1 needs p, k >= 1"));
    }
    let mut out = ClosedForm::zero();
    for j in 1..=k {
        let s = Rational::from_integer(stirling1(k, j)?);
        out += eta_factor_closed(p as i64 - j as i64).scale(&s);
    }
    Ok(out)
}

/// S₋(p) truncated after kt terms.
pub fn s_minus_truncated(p: u32, kt: u32) -> Result<ClosedForm> {
    if p < 3 {
        return Err(domain(format!("s_minus_truncated needs p >= 3, got {p}")));
    }
    if kt < 1 {
        return Err(domain("s_minus_truncated needs kt >= 1"));
    }
    let mut out = ClosedForm::zero();
    for k in 1..=kt {
        let sign = if k % 2 == 1 { 1 } else { -1 };
        let c = q(sign) / (q(k as i64) * Rational::from_integer(factorial(k)));
        out += polylog_derivative_at_minus1(p, k)?.scale(&c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::NumericContext;
    use crate::special::polylog;

    #[test]
    fn stirling_values() {
        let s = |k, j| stirling1(k, j).unwrap();
        assert_eq!((s(3, 1), s(3, 2), s(3, 3)), (2.into(), (-3).into(), 1.into()));
        assert_eq!(s(1, 1), 1.into());
        assert_eq!(s(4, 2), 11.into());
        assert!(stirling1(3, 4).is_err());
        assert!(stirling1(3, 0).is_err());
        for k in 2..=20u32 {
            let total: BigInt = (1..=k).map(|j| s(k, j)).sum();
            assert!(total.is_zero());
            assert_eq!(s(k, k), BigInt::one());
        }
        assert_eq!(s(70, 70), BigInt::one());
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(
            polylog_derivative_at_minus1(5, 1).unwrap(),
            ClosedForm::parse("-7/720*pi^4").unwrap()
        );
        assert_eq!(
            polylog_derivative_at_minus1(3, 1).unwrap(),
            ClosedForm::parse("-pi^2/12").unwrap()
        );
        let ctx = NumericContext::shared();
        let f = |t: f64| polylog(5, -t).unwrap();
        let h = 1e-3;
        let d1 = (f(1.0) - f(1.0 - h)) / h;
        let d1c = (3.0 * f(1.0) - 4.0 * f(1.0 - h) + f(1.0 - 2.0 * h)) / (2.0 * h);
        let exact = ctx.eval(&polylog_derivative_at_minus1(5, 1).unwrap()).unwrap();
        assert!((d1c - exact).abs() < 1e-6, "{d1} {d1c} {exact}");
    }

    #[test]
    fn truncation_examples() {
        assert_eq!(
            s_minus_truncated(4, 1).unwrap(),
            ClosedForm::parse("-3/4*zeta3").unwrap()
        );
        let expect = ClosedForm::parse(
            "-24387227/1741824000 - 358039/11197440*pi^2 - 1968329/130636800*pi^4 + 2152309/3456000*zeta3 + 1874237/14515200*ln2",
        )
        .unwrap();
        assert_eq!(s_minus_truncated(5, 10).unwrap(), expect);
    }
}
