//! Euler sums S₊, S₋, the Jordan sums J₁ and J₂, the Milgram sum M and C.
//!
//! ```text
//! S₊(r) = Σ_{k≥1} [ψ(k+1)+γ]/k^r          S₋(r) = Σ_{k≥1} (−1)^k [ψ(k+1)+γ]/k^r
//! J₁(r) = ½ Σ_{k≥0} [ψ(k+½)−ψ(½)]/(2k+1)^r  J₂(r) = ½ Σ_{k≥1} [ψ(k+½)−ψ(½)]/(2k)^r
//! M(r)  = ½ Σ_{k≥0} [ψ(k+1)+γ]/(2k+1)^r     C(r)  = ½ Σ_{k≥1} [ψ(k+1)+γ]/(2k)^r
//! ```

use std::fmt;

use crate::error::{domain, Error, Result};
use crate::exact::{eta_factor_closed, q, qf, rational_pow2, zeta_closed, ClosedForm, Rational};
use crate::numerics::{harmonic, integrate01, psi, sum_alternating, sum_tail, EndpointClass};
use crate::series::{kolbig_snp_with, DEFAULT_MAX_WEIGHT};
use crate::special::sigma_tilde;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SumTag {
    SPlus,
    SMinus,
    Jordan1,
    Jordan2,
    Milgram,
    CSum,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Jordan {
    J1,
    J2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SumKind {
    pub tag: SumTag,
    pub order: u32,
}

impl SumKind {
    pub fn new(tag: SumTag, order: u32) -> Result<Self> {
        check_order(order)?;
        Ok(Self { tag, order })
    }
}

impl SumTag {
    pub fn name(self) -> &'static str {
        match self {
            SumTag::SPlus => "splus",
            SumTag::SMinus => "sminus",
            SumTag::Jordan1 => "j1",
            SumTag::Jordan2 => "j2",
            SumTag::Milgram => "milgram",
            SumTag::CSum => "c",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Some(match s {
            "splus" => SumTag::SPlus,
            "sminus" => SumTag::SMinus,
            "j1" => SumTag::Jordan1,
            "j2" => SumTag::Jordan2,
            "milgram" | "m" => SumTag::Milgram,
            "c" => SumTag::CSum,
            _ => return None,
        })
    }
}

impl fmt::Display for SumKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.tag.name(), self.order)
    }
}

fn check_order(r: u32) -> Result<()> {
    if r < 2 {
        return Err(domain(format!("sum order must be >= 2, got {r}")));
    }
    Ok(())
}

fn z(n: u32) -> ClosedForm {
    zeta_closed(n).expect("zeta argument >= 2")
}

/// 1 − 2^{−e}
fn one_minus_pow2(e: u32) -> Rational {
    q(1) - rational_pow2(-(e as i64))
}

/// s_{r−1,2}, lifting the weight cap when needed.
fn s_r2(r: u32) -> Result<ClosedForm> {
    kolbig_snp_with(r - 1, 2, DEFAULT_MAX_WEIGHT.max(r + 1))
}

fn assert_same(quantity: &str, a: &ClosedForm, b: &ClosedForm) -> Result<()> {
    if a != b {
        return Err(Error::RouteMismatch {
            quantity: quantity.to_string(),
            residual: (a - b).to_string(),
        });
    }
    Ok(())
}

/// S₊(r) = ½(r+2)ζ(r+1) − ½ Σ_{μ=1}^{r−2} ζ(μ+1)ζ(r−μ).
pub fn s_plus(r: u32) -> Result<ClosedForm> {
    check_order(r)?;
    let mut out = z(r + 1).scale(&qf(r as i64 + 2, 2));
    for mu in 1..=r.saturating_sub(2) {
        out -= (z(mu + 1) * z(r - mu)).scale(&qf(1, 2));
    }
    Ok(out)
}

/// C(r) = 2^{−r−1}S₊(r), checked against 2^{−r−1}[ζ(r+1) + s_{r−1,2}].
pub fn c_sum(r: u32) -> Result<ClosedForm> {
    check_order(r)?;
    let f = rational_pow2(-(r as i64) - 1);
    let a = s_plus(r)?.scale(&f);
    let b = (z(r + 1) + s_r2(r)?).scale(&f);
    assert_same("C(r)", &a, &b)?;
    Ok(a)
}

/// J₁(2n), J₂(2n) for even r = 2n.
pub fn jordan_even(which: Jordan, r: u32) -> Result<ClosedForm> {
    check_order(r)?;
    if r % 2 == 1 {
        return Err(domain(format!("jordan_even needs even r, got {r}; use jordan_nielsen")));
    }
    match which {
        Jordan::J1 => jordan_even_j1(r),
        Jordan::J2 => jordan_even_j2(r),
    }
}

fn jordan_even_j1(r: u32) -> Result<ClosedForm> {
    let n = r / 2;
    let mut out = z(r + 1).scale(&(-one_minus_pow2(r + 1) / q(2)));
    out += (ClosedForm::ln2() * z(r)).scale(&one_minus_pow2(r));
    let pre = rational_pow2(-(r as i64) - 1);
    for mu in 1..n {
        let c = (rational_pow2(2 * mu as i64) - q(1)) * &pre;
        out -= (z(2 * mu) * z(r + 1 - 2 * mu)).scale(&c);
    }
    Ok(out)
}

pub(crate) fn jordan_even_j2(r: u32) -> Result<ClosedForm> {
    check_order(r)?;
    if r % 2 == 1 {
        return Err(domain(format!("jordan_even needs even r, got {r}")));
    }
    let n = r / 2;
    let mut out = z(r + 1).scale(&(one_minus_pow2(r + 1) / q(2)));
    for mu in 1..n {
        let c = rational_pow2(-2 * mu as i64) - rational_pow2(-(r as i64) - 1);
        out -= (z(2 * mu) * z(r + 1 - 2 * mu)).scale(&c);
    }
    Ok(out)
}

/// M(r) in the simplified even/odd form, checked against the unsimplified display.
pub fn milgram(r: u32) -> Result<ClosedForm> {
    check_order(r)?;
    let general = milgram_general(r);
    let simple = milgram_simplified(r);
    assert_same("M(r)", &general, &simple)?;
    Ok(simple)
}

fn milgram_head(r: u32) -> ClosedForm {
    z(r + 1).scale(&(q(r as i64) / q(2) * one_minus_pow2(r + 1))) - (ClosedForm::ln2() * z(r)).scale(&one_minus_pow2(r))
}

fn milgram_general(r: u32) -> ClosedForm {
    let mut out = milgram_head(r);
    let pre = q(1) / q(2 * (r as i64 - 1));
    for mu in 0..r.saturating_sub(2) {
        let c = q(mu as i64 + 1)
            * (rational_pow2(mu as i64 + 2) - q(1))
            * (rational_pow2(-(mu as i64) - 1) - rational_pow2(-(r as i64)))
            * &pre;
        out -= (z(mu + 2) * z(r - 1 - mu)).scale(&c);
    }
    out
}

fn milgram_simplified(r: u32) -> ClosedForm {
    let mut out = milgram_head(r);
    // Pairing μ with r−3−μ: the summand is symmetric in (μ+2, r−1−μ) up to the (μ+1) weight.
    let last = if r.is_multiple_of(2) {
        (r as i64 - 4) / 2
    } else {
        (r as i64 - 5) / 2
    };
    for mu in 0..=last {
        let mu = mu as u32;
        let c = (rational_pow2(mu as i64 + 2) - q(1)) * (rational_pow2(-(mu as i64) - 1) - rational_pow2(-(r as i64)))
            / q(2);
        out -= (z(mu + 2) * z(r - 1 - mu)).scale(&c);
    }
    if r % 2 == 1 {
        let a = r.div_ceil(2);
        let t = z(a).scale(&one_minus_pow2(a));
        out -= (&t * &t).scale(&qf(1, 2));
    }
    out
}

/// J₁(r) = ½[s_{r−1,2} − σ̃_{r−1,2}] − M(r), J₂(r) = ½[(1−2^{−r})s_{r−1,2} + σ̃_{r−1,2}].
pub fn jordan_nielsen(which: Jordan, r: u32) -> Result<ClosedForm> {
    check_order(r)?;
    let s = s_r2(r)?;
    let sigma = sigma_tilde(r - 1, 2);
    let half = qf(1, 2);
    let out = match which {
        Jordan::J1 => (&s - &sigma).scale(&half) - milgram(r)?,
        Jordan::J2 => (s.scale(&one_minus_pow2(r)) + sigma).scale(&half),
    };
    if r.is_multiple_of(2) {
        assert_same("Jordan sum", &out, &jordan_even(which, r)?)?;
    }
    Ok(out)
}

/// J₁ or J₂ of any order: even-order display when available, Nielsen form otherwise.
pub fn jordan(which: Jordan, r: u32) -> Result<ClosedForm> {
    if r.is_multiple_of(2) {
        jordan_even(which, r)
    } else {
        jordan_nielsen(which, r)
    }
}

/// S₋(r) = (2^{−r}−1)ζ(r+1) + σ̃_{r−1,2}, checked against J₂ − J₁ + C − M − (1−2^{−r−1})ζ(r+1).
pub fn s_minus(r: u32) -> Result<ClosedForm> {
    check_order(r)?;
    let a = eta_factor_closed(r as i64 + 1) + sigma_tilde(r - 1, 2);
    let b = jordan_nielsen(Jordan::J2, r)? - jordan_nielsen(Jordan::J1, r)? + c_sum(r)?
        - milgram(r)?
        - z(r + 1).scale(&one_minus_pow2(r + 1));
    assert_same("S-(r)", &a, &b)?;
    Ok(a)
}

/// The sum as a closed form, dispatched by kind.
pub fn closed(kind: SumKind) -> Result<ClosedForm> {
    let r = kind.order;
    match kind.tag {
        SumTag::SPlus => s_plus(r),
        SumTag::SMinus => s_minus(r),
        SumTag::Jordan1 => jordan(Jordan::J1, r),
        SumTag::Jordan2 => jordan(Jordan::J2, r),
        SumTag::Milgram => milgram(r),
        SumTag::CSum => c_sum(r),
    }
}

const ORACLE_TOL: f64 = 1e-12;

/// Direct accelerated summation of the defining series.
pub fn sum_oracle(kind: SumKind) -> Result<f64> {
    check_order(kind.order)?;
    let r = kind.order as i32;
    let hint = r as f64;
    let psi_half = psi(0.5)?;
    // ψ(x+½) − ψ(½), with ψ taken at x ≥ ½ only
    let odd_h = |x: f64| crate::numerics::psi_unchecked(x + 0.5) - psi_half;
    match kind.tag {
        SumTag::SPlus => sum_tail(|k| harmonic(k) / k.powi(r), 1, hint, ORACLE_TOL),
        SumTag::SMinus => sum_alternating(
            |k| {
                let kf = k as f64;
                let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                sign * harmonic(kf) / kf.powi(r)
            },
            ORACLE_TOL,
        ),
        // k ≥ 0 shifted to x = k+1 ≥ 1
        SumTag::Jordan1 => sum_tail(|x| 0.5 * odd_h(x - 1.0) / (2.0 * x - 1.0).powi(r), 1, hint, ORACLE_TOL),
        SumTag::Jordan2 => sum_tail(|k| 0.5 * odd_h(k) / (2.0 * k).powi(r), 1, hint, ORACLE_TOL),
        SumTag::Milgram => sum_tail(
            |x| 0.5 * harmonic(x - 1.0) / (2.0 * x - 1.0).powi(r),
            1,
            hint,
            ORACLE_TOL,
        ),
        SumTag::CSum => sum_tail(|k| 0.5 * harmonic(k) / (2.0 * k).powi(r), 1, hint, ORACLE_TOL),
    }
}

/// ln(1−x) from both ends without cancellation.
fn ln_om(x: f64, om: f64) -> f64 {
    if x > 0.5 {
        om.ln()
    } else {
        (-x).ln_1p()
    }
}

fn ln_x(x: f64, om: f64) -> f64 {
    if x > 0.5 {
        (-om).ln_1p()
    } else {
        x.ln()
    }
}

/// J₁(2n+1), J₂(2n+1) = 1/(4(2n)!) ∫₀¹ ln^{2n}(x)·ln((1+x)/(1−x))·[1/(1−x) ∓ 1/(1+x)] dx,
/// minus for J₁ and plus for J₂.
pub fn jordan_odd_integral(which: Jordan, n: u32) -> Result<f64> {
    if n < 1 {
        return Err(domain("jordan_odd_integral needs n >= 1"));
    }
    let e = 2 * n as i32;
    let s = match which {
        Jordan::J1 => -1.0,
        Jordan::J2 => 1.0,
    };
    let f = move |x: f64, om: f64| {
        let l = x.ln_1p() - ln_om(x, om);
        ln_x(x, om).powi(e) * l * (1.0 / om + s / (1.0 + x))
    };
    let fact: f64 = (1..=e).map(f64::from).product();
    Ok(integrate01(f, EndpointClass::LogSingularBoth, 1e-13)?.value / (4.0 * fact))
}

/// The kernels of ∫₀¹ ln²(x)·ln(1±x)/(1±x) dx.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LogKernel {
    /// ln(1−x)/(1−x)
    MinusMinus,
    /// ln(1+x)/(1−x)
    PlusMinus,
    /// ln(1−x)/(1+x)
    MinusPlus,
    /// ln(1+x)/(1+x)
    PlusPlus,
}

impl LogKernel {
    pub const ALL: [LogKernel; 4] = [
        LogKernel::MinusMinus,
        LogKernel::PlusMinus,
        LogKernel::MinusPlus,
        LogKernel::PlusPlus,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LogKernel::MinusMinus => "ln(1-x)/(1-x)",
            LogKernel::PlusMinus => "ln(1+x)/(1-x)",
            LogKernel::MinusPlus => "ln(1-x)/(1+x)",
            LogKernel::PlusPlus => "ln(1+x)/(1+x)",
        }
    }
}

pub fn log_kernel_closed(kernel: LogKernel) -> ClosedForm {
    let src = match kernel {
        LogKernel::MinusMinus => "-pi^4/180",
        LogKernel::PlusMinus => "7/2*ln2*zeta3 - 19/720*pi^4",
        LogKernel::MinusPlus => "pi^4/90 + pi^2*ln2^2/6 - ln2^4/6 - 4*li4half",
        LogKernel::PlusPlus => "4*li4half - pi^4/24 - pi^2*ln2^2/6 + ln2^4/6 + 7/2*ln2*zeta3",
    };
    ClosedForm::parse(src).expect("kernel literal")
}

pub fn log_kernel_numeric(kernel: LogKernel) -> Result<f64> {
    let f = move |x: f64, om: f64| {
        let l2 = ln_x(x, om).powi(2);
        match kernel {
            LogKernel::MinusMinus => l2 * ln_om(x, om) / om,
            LogKernel::PlusMinus => l2 * x.ln_1p() / om,
            LogKernel::MinusPlus => l2 * ln_om(x, om) / (1.0 + x),
            LogKernel::PlusPlus => l2 * x.ln_1p() / (1.0 + x),
        }
    };
    Ok(integrate01(f, EndpointClass::LogSingularBoth, 1e-13)?.value)
}

/// J₂(r) written through C(r): ½[s_{r−1,2} + σ̃_{r−1,2}] − C(r) + 2^{−r−1}ζ(r+1).
pub fn jordan2_via_c(r: u32) -> Result<ClosedForm> {
    check_order(r)?;
    let s = s_r2(r)?;
    Ok((s + sigma_tilde(r - 1, 2)).scale(&qf(1, 2)) - c_sum(r)? + z(r + 1).scale(&rational_pow2(-(r as i64) - 1)))
}

/// C(r) = 2^{−r−1}[ζ(r+1) + s_{r−1,2}], without the cross-check in [`c_sum`].
pub fn c_sum_nielsen(r: u32) -> Result<ClosedForm> {
    check_order(r)?;
    Ok((z(r + 1) + s_r2(r)?).scale(&rational_pow2(-(r as i64) - 1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::NumericContext;

    fn cf(s: &str) -> ClosedForm {
        ClosedForm::parse(s).unwrap()
    }

    fn ev(x: &ClosedForm) -> f64 {
        NumericContext::shared().eval(x).unwrap()
    }

    #[test]
    fn s_plus_examples() {
        assert_eq!(s_plus(2).unwrap(), cf("2*zeta3"));
        assert_eq!(s_plus(3).unwrap(), cf("pi^4/72"));
        assert_eq!(s_plus(4).unwrap(), cf("3*zeta5 - pi^2*zeta3/6"));
        assert!(s_plus(1).is_err());
    }

    #[test]
    fn c_sum_examples() {
        assert_eq!(c_sum(2).unwrap(), cf("zeta3/4"));
        assert_eq!(c_sum(3).unwrap(), cf("pi^4/1152"));
        for r in 2..=7 {
            c_sum(r).unwrap();
        }
    }

    #[test]
    fn jordan_examples() {
        assert_eq!(jordan_even(Jordan::J1, 2).unwrap(), cf("-7/16*zeta3 + pi^2*ln2/8"));
        assert_eq!(jordan_even(Jordan::J2, 2).unwrap(), cf("7/16*zeta3"));
        assert!(jordan_even(Jordan::J1, 3).is_err());
        assert_eq!(
            jordan_nielsen(Jordan::J2, 3).unwrap(),
            cf("7/8*ln2*zeta3 - 53/5760*pi^4 - pi^2*ln2^2/24 + ln2^4/24 + li4half")
        );
        assert_eq!(
            jordan_nielsen(Jordan::J1, 3).unwrap(),
            cf("23/5760*pi^4 + pi^2*ln2^2/24 - ln2^4/24 - li4half")
        );
        for r in [2, 4, 6] {
            jordan_nielsen(Jordan::J1, r).unwrap();
        }
    }

    #[test]
    fn milgram_examples() {
        assert_eq!(milgram(2).unwrap(), cf("7/8*zeta3 - pi^2*ln2/8"));
        for r in 2..=9 {
            milgram(r).unwrap();
        }
    }

    #[test]
    fn s_minus_examples() {
        assert_eq!(s_minus(2).unwrap(), cf("-5/8*zeta3"));
        assert_eq!(
            s_minus(3).unwrap(),
            cf("7/4*ln2*zeta3 - 11/360*pi^4 - pi^2*ln2^2/12 + ln2^4/12 + 2*li4half")
        );
        let s5 = s_minus(5).unwrap();
        assert!(s5.atoms().contains(&crate::exact::ConstantAtom::SigmaTilde(4, 2)));
        for r in [2, 4, 6, 8] {
            assert!(!s_minus(r)
                .unwrap()
                .atoms()
                .iter()
                .any(|a| matches!(a, crate::exact::ConstantAtom::SigmaTilde(..))));
        }
    }

    #[test]
    fn closed_forms_match_oracles() {
        for r in 2..=6 {
            for tag in [
                SumTag::SPlus,
                SumTag::SMinus,
                SumTag::Jordan1,
                SumTag::Jordan2,
                SumTag::Milgram,
                SumTag::CSum,
            ] {
                let kind = SumKind::new(tag, r).unwrap();
                let exact = ev(&closed(kind).unwrap());
                let oracle = sum_oracle(kind).unwrap();
                assert!((exact - oracle).abs() < 1e-10, "{kind}: {exact} vs {oracle}");
            }
        }
    }

    #[test]
    fn decomposition_from_oracles() {
        for r in 2..=8 {
            let o = |tag| sum_oracle(SumKind { tag, order: r }).unwrap();
            let zr = crate::numerics::zeta(r as f64 + 1.0).unwrap();
            let rhs = o(SumTag::Jordan2) - o(SumTag::Jordan1) + o(SumTag::CSum)
                - o(SumTag::Milgram)
                - (1.0 - 2f64.powi(-(r as i32) - 1)) * zr;
            assert!((o(SumTag::SMinus) - rhs).abs() < 1e-10, "r={r}");
        }
    }

    #[test]
    fn log_kernel_integrals() {
        for which in [Jordan::J1, Jordan::J2] {
            let tag = if which == Jordan::J1 {
                SumTag::Jordan1
            } else {
                SumTag::Jordan2
            };
            for n in 1..=2 {
                let v = jordan_odd_integral(which, n).unwrap();
                let o = sum_oracle(SumKind { tag, order: 2 * n + 1 }).unwrap();
                assert!((v - o).abs() < 1e-9, "{which:?} {n}: {v} vs {o}");
            }
        }
        for k in LogKernel::ALL {
            let v = log_kernel_numeric(k).unwrap();
            assert!((ev(&log_kernel_closed(k)) - v).abs() < 1e-10, "{}", k.name());
        }
        for r in 2..=7 {
            assert_eq!(jordan2_via_c(r).unwrap(), jordan_nielsen(Jordan::J2, r).unwrap());
            assert_eq!(c_sum_nielsen(r).unwrap(), c_sum(r).unwrap());
        }
    }
}
