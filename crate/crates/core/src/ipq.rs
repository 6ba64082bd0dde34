//! The integrals
//!
//! ```text
//! I₊(p,q) = ∫₀¹ Li_p(t)  Li_q(t)  dt/t
//! I₋(p,q) = ∫₀¹ Li_p(−t) Li_q(−t) dt/t
//! I±(p,q) = ∫₀¹ Li_p(t)  Li_q(−t) dt/t
//! ```
//!
//! Integration by parts gives I(p,q) + I(p+1,q−1) = R(p+1,q) with the boundary
//! value R(p,q) = Li_p(a)·Li_q(b). Closed forms come from the Euler sums of order
//! p+q; two displays (Euler-sum and Nielsen) are computed and must agree exactly.

use std::fmt;

use crate::error::{domain, Error, Result};
use crate::euler_sums::{c_sum, jordan, milgram, s_minus, s_plus, Jordan};
use crate::exact::{eta_factor_closed, q, qf, rational_pow2, zeta_closed, ClosedForm, ConstantAtom, NumericContext};
use crate::numerics::{integrate01, sum_alternating, sum_tail, EndpointClass};
use crate::report::VerificationReport;
use crate::series::{kolbig_snp_with, DEFAULT_MAX_WEIGHT};
use crate::special::{li_moment, li_moment_plus, mpl2, polylog_c, sigma_tilde, zeta_table};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Plus,
    Minus,
    Mixed,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Plus, Family::Minus, Family::Mixed];

    /// Signs of the polylogarithm arguments at t = 1.
    fn slots(self) -> (i8, i8) {
        match self {
            Family::Plus => (1, 1),
            Family::Minus => (-1, -1),
            Family::Mixed => (1, -1),
        }
    }

    pub fn is_symmetric(self) -> bool {
        self != Family::Mixed
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Plus => "plus",
            Family::Minus => "minus",
            Family::Mixed => "mixed",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "plus" | "+" => Some(Family::Plus),
            "minus" | "-" => Some(Family::Minus),
            "mixed" | "pm" | "+-" => Some(Family::Mixed),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct IpqValue {
    pub family: Family,
    pub p: u32,
    pub q: u32,
    pub closed: Option<ClosedForm>,
    pub numeric: f64,
    pub residual_sigma_atoms: Vec<ConstantAtom>,
}

impl IpqValue {
    pub fn new(family: Family, p: u32, q: u32, closed: Option<ClosedForm>, numeric: f64) -> Self {
        let residual_sigma_atoms = closed
            .as_ref()
            .map(|c| {
                c.atoms()
                    .into_iter()
                    .filter(|a| matches!(a, ConstantAtom::SigmaTilde(..)))
                    .collect()
            })
            .unwrap_or_default();
        Self {
            family,
            p,
            q,
            closed,
            numeric,
            residual_sigma_atoms,
        }
    }

    /// Closed form (if any) evaluated in the shared context, numeric value from quadrature.
    pub fn compute(family: Family, p: u32, q: u32) -> Result<Self> {
        let closed = ipq_final(family, p, q)?;
        let numeric = ipq_numeric(family, p, q, 1e-12)?;
        Ok(Self::new(family, p, q, Some(closed), numeric))
    }
}

fn sgn(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Li_n(±1) as a closed form; `slot` names the argument in errors.
fn boundary(sign: i8, n: u32, slot: &str) -> Result<ClosedForm> {
    if sign > 0 {
        if n < 2 {
            return Err(domain(format!("R value diverges: {slot} slot has Li_{n}(1)")));
        }
        Ok(zeta_closed(n)?)
    } else {
        Ok(eta_factor_closed(n as i64))
    }
}

/// R(p,q) = Li_p(a)·Li_q(b).
pub fn r_value(family: Family, p: u32, q: u32) -> Result<ClosedForm> {
    let (a, b) = family.slots();
    Ok(boundary(a, p, "first")? * boundary(b, q, "second")?)
}

fn check_pq(p: u32, q: u32) -> Result<()> {
    if p < 1 || q < 1 {
        return Err(domain(format!("I(p,q) needs p, q >= 1, got ({p}, {q})")));
    }
    Ok(())
}

/// Quadrature of the defining integral. `q = 0` is accepted for the Minus and Mixed
/// families, where Li₀(−t) = −t/(1+t).
pub fn ipq_numeric(family: Family, p: u32, q: u32, tol: f64) -> Result<f64> {
    if p < 1 {
        return Err(domain("I(p,q) needs p >= 1"));
    }
    let (a, b) = family.slots();
    if q == 0 && b > 0 {
        return Err(domain(
            "Li_0(t) has a pole at t = 1; q = 0 needs a negative second slot",
        ));
    }
    let li = move |sign: i8, n: u32, t: f64, om: f64| {
        if sign > 0 {
            polylog_c(n, t, om)
        } else {
            polylog_c(n, -t, 1.0 + t)
        }
    };
    let class = if a > 0 || b > 0 {
        EndpointClass::LogSingularAt1
    } else {
        EndpointClass::Regular
    };
    let f = move |t: f64, om: f64| {
        if t == 0.0 {
            return 0.0;
        }
        let second = if q == 0 { -1.0 / (1.0 + t) } else { li(b, q, t, om) / t };
        li(a, p, t, om) * second
    };
    Ok(integrate01(f, class, tol)?.value)
}

/// Σ_{k=0}^{n−1} (−1)^k R(p+k+1, q−k)
fn r_alternating(family: Family, p: u32, q: u32, n: u32) -> Result<ClosedForm> {
    let mut out = ClosedForm::zero();
    for k in 0..n {
        out += r_value(family, p + k + 1, q - k)?.scale_int(sgn(k as i64));
    }
    Ok(out)
}

/// I(p+n, q−n) = (−1)^n [I(p,q) − Σ_{k=0}^{n−1} (−1)^k R(p+k+1, q−k)].
pub fn recurrence_shift(family: Family, p: u32, q: u32, n: u32, base: &IpqValue) -> Result<IpqValue> {
    if base.family != family || base.p != p || base.q != q {
        return Err(domain(format!(
            "base holds {}({},{}), expected {}({p},{q})",
            base.family, base.p, base.q, family
        )));
    }
    if n > q || (n == q && family == Family::Plus) {
        return Err(domain(format!(
            "shift by {n} leaves the domain: q - n = {}",
            q as i64 - n as i64
        )));
    }
    if n == 0 {
        return Ok(base.clone());
    }
    let rsum = r_alternating(family, p, q, n)?;
    let s = sgn(n as i64);
    let rnum = NumericContext::shared().eval(&rsum)?;
    let closed = base.closed.as_ref().map(|c| (c - &rsum).scale_int(s));
    Ok(IpqValue::new(
        family,
        p + n,
        q - n,
        closed,
        s as f64 * (base.numeric - rnum),
    ))
}

/// I(p, p+2n−1) = ½(−1)^{n+1} R(p+n,p+n) + Σ_{k=0}^{n−2} (−1)^k R(p+k+1, p+2n−1−k).
pub fn ipq_closed_odd(family: Family, p: u32, n: u32) -> Result<ClosedForm> {
    if !family.is_symmetric() {
        return Err(domain("ipq_closed_odd applies to the symmetric families only"));
    }
    if p < 1 || n < 1 {
        return Err(domain("ipq_closed_odd needs p, n >= 1"));
    }
    let mut out = r_value(family, p + n, p + n)?.scale(&qf(sgn(n as i64 + 1), 2));
    for k in 0..n.saturating_sub(1) {
        out += r_value(family, p + k + 1, p + 2 * n - 1 - k)?.scale_int(sgn(k as i64));
    }
    Ok(out)
}

/// The sign chain shared by both final displays:
/// Σ_{μ=2}^{p} (−1)^μ R(μ, r+1−μ), which the outer (−1)^p multiplies.
fn mu_sum(family: Family, p: u32, r: u32) -> Result<ClosedForm> {
    let mut out = ClosedForm::zero();
    for mu in 2..=p {
        out += r_value(family, mu, r + 1 - mu)?.scale_int(sgn(mu as i64));
    }
    Ok(out)
}

fn z(n: u32) -> ClosedForm {
    zeta_closed(n).expect("n >= 2")
}

/// 2[ln2(2^{−r}−1)ζ(r) + (1−2^{−r−1})ζ(r+1)], the extra prefix of the Minus family.
fn minus_prefix(r: u32) -> ClosedForm {
    let a = (ClosedForm::ln2() * z(r)).scale(&(rational_pow2(-(r as i64)) - q(1)));
    let b = z(r + 1).scale(&(q(1) - rational_pow2(-(r as i64) - 1)));
    (a + b).scale_int(2)
}

/// Final display in terms of S₊, S₋, C, J₁.
pub fn ipq_sum_form(family: Family, p: u32, q_: u32) -> Result<ClosedForm> {
    check_pq(p, q_)?;
    let r = p + q_;
    let sp = sgn(p as i64);
    let sigma = mu_sum(family, p, r)?;
    Ok(match family {
        Family::Plus => sigma.scale_int(sp) - s_plus(r)?.scale_int(sp),
        Family::Mixed => sigma.scale_int(sp) - s_minus(r)?.scale_int(sp),
        Family::Minus => {
            let tail = s_minus(r)? - c_sum(r)?.scale_int(2) + jordan(Jordan::J1, r)?.scale_int(2);
            (minus_prefix(r) + sigma + tail).scale_int(sp)
        }
    })
}

/// Final display in terms of the Nielsen values s_{r−1,2} and σ̃_{r−1,2}.
pub fn ipq_nielsen_form(family: Family, p: u32, q_: u32) -> Result<ClosedForm> {
    check_pq(p, q_)?;
    let r = p + q_;
    let sp = sgn(p as i64);
    let sigma = mu_sum(family, p, r)?;
    let s = kolbig_snp_with(r - 1, 2, DEFAULT_MAX_WEIGHT.max(r + 1))?;
    let inner = match family {
        Family::Plus => sigma - z(r + 1) - s,
        Family::Mixed => sigma - eta_factor_closed(r as i64 + 1) - sigma_tilde(r - 1, 2),
        Family::Minus => {
            minus_prefix(r) + sigma + s.scale(&(q(1) - rational_pow2(-(r as i64))))
                - z(r + 1)
                - milgram(r)?.scale_int(2)
        }
    };
    Ok(inner.scale_int(sp))
}

fn mismatch(what: String, a: &ClosedForm, b: &ClosedForm) -> Error {
    Error::RouteMismatch {
        quantity: what,
        residual: (a - b).to_string(),
    }
}

/// Closed form of I(p,q). Both final displays are computed and must agree; for the
/// symmetric families the odd/even reduction to ζ products or to the diagonal I(m,m)
/// must agree as well.
pub fn ipq_final(family: Family, p: u32, q_: u32) -> Result<ClosedForm> {
    let sums = ipq_sum_form(family, p, q_)?;
    let nielsen = ipq_nielsen_form(family, p, q_)?;
    if sums != nielsen {
        return Err(mismatch(format!("{family}({p},{q_}) final displays"), &sums, &nielsen));
    }
    if family.is_symmetric() && p != q_ {
        let reduced = ipq_reduced(family, p, q_)?;
        if reduced != sums {
            return Err(mismatch(format!("{family}({p},{q_}) reduction"), &sums, &reduced));
        }
    }
    Ok(sums)
}

/// Symmetric families: q−p odd gives a finite ζ sum, q−p even reduces to I(m,m).
fn ipq_reduced(family: Family, p: u32, q_: u32) -> Result<ClosedForm> {
    let (a, b) = (p.min(q_), p.max(q_));
    let d = b - a;
    if d % 2 == 1 {
        return ipq_closed_odd(family, a, d.div_ceil(2));
    }
    let n = d / 2;
    let mut out = ipq_sum_form(family, a + n, a + n)?.scale_int(sgn(n as i64));
    for k in 0..n {
        out += r_value(family, a + k + 1, a + 2 * n - k)?.scale_int(sgn(k as i64));
    }
    Ok(out)
}

const SERIES_TOL: f64 = 1e-12;

/// Expansion of the second polylogarithm and termwise moments of the first.
pub fn ipq_series(family: Family, p: u32, q_: u32) -> Result<f64> {
    check_pq(p, q_)?;
    let qi = q_ as i32;
    match family {
        Family::Plus => {
            let zetas = zeta_table(p.max(2));
            sum_tail(
                |k| li_moment_plus(p, k, &zetas) / k.powi(qi),
                1,
                q_ as f64 + 1.0,
                SERIES_TOL,
            )
        }
        Family::Mixed => {
            let zetas = zeta_table(p.max(2));
            sum_alternating(
                |k| {
                    let kf = k as f64;
                    sgn(k as i64) as f64 * li_moment_plus(p, kf, &zetas) / kf.powi(qi)
                },
                SERIES_TOL,
            )
        }
        Family::Minus => {
            let ctx = NumericContext::shared();
            let zeta_part = |k: u32| li_moment(p, k).and_then(|m| m.value(ctx));
            // Moments are cheap but not free; fail loudly rather than silently.
            let err = std::cell::Cell::new(None);
            let v = sum_alternating(
                |k| match zeta_part(k as u32) {
                    Ok(m) => sgn(k as i64) as f64 * m / (k as f64).powi(qi),
                    Err(e) => {
                        err.set(Some(e));
                        0.0
                    }
                },
                SERIES_TOL,
            );
            if let Some(e) = err.take() {
                return Err(e);
            }
            v
        }
    }
}

/// The four low-order integrals of order p, each by quadrature, by mpl2 and by the
/// I-integral it equals.
pub fn low_order_report(p: u32) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new();
    low_order_into(&mut rep, p)?;
    Ok(rep)
}

pub(crate) fn low_order_into(rep: &mut VerificationReport, p: u32) -> Result<()> {
    if !(2..=4).contains(&p) {
        return Err(domain(format!("low_order_report covers p = 2..4, got {p}")));
    }
    let ctx = NumericContext::shared();
    let tol = 1e-9;
    let quad = |f: &dyn Fn(f64, f64) -> f64, class| integrate01(f, class, 1e-12).map(|r| r.value);
    let zp = ctx.eval(&z(p))?;
    let zp1 = ctx.eval(&z(p + 1))?;
    let eta_p = ctx.eval(&eta_factor_closed(p as i64))?;
    let eta_p1 = (1.0 - 2f64.powi(-(p as i32))) * zp1;

    // ∫ Li_p(t)/(1+t) = −I±(p,0), with I±(p,0) = R±(p,1) − I±(p−1,1)
    let v = quad(&|t, om| polylog_c(p, t, om) / (1.0 + t), EndpointClass::Regular)?;
    let m = -mpl2(1, p, -1.0, -1.0)?;
    let i = -(r_value(Family::Mixed, p, 1)? - ipq_final(Family::Mixed, p - 1, 1)?);
    rep.value(
        &format!("low.{p}.a.mpl2"),
        "Li_p(t)/(1+t) vs depth-2 polylog",
        None,
        m,
        v,
        tol,
    );
    rep.closed(&format!("low.{p}.a.ipq"), "Li_p(t)/(1+t) vs -I+-(p,0)", &i, v, ctx, tol);
    let numeric_q0 = -ipq_numeric(Family::Mixed, p, 0, 1e-12)?;
    rep.value(
        &format!("low.{p}.a.q0"),
        "Li_0 extension quadrature",
        None,
        numeric_q0,
        v,
        tol,
    );

    // ∫ Li_p(−t)/(1+t) = −I₋(p,0)
    let v = quad(&|t, _| polylog_c(p, -t, 1.0 + t) / (1.0 + t), EndpointClass::Regular)?;
    let m = -mpl2(1, p, -1.0, 1.0)?;
    let i = -(r_value(Family::Minus, p, 1)? - ipq_final(Family::Minus, p - 1, 1)?);
    rep.value(
        &format!("low.{p}.b.mpl2"),
        "Li_p(-t)/(1+t) vs depth-2 polylog",
        None,
        m,
        v,
        tol,
    );
    rep.closed(&format!("low.{p}.b.ipq"), "Li_p(-t)/(1+t) vs -I-(p,0)", &i, v, ctx, tol);
    let numeric_q0 = -ipq_numeric(Family::Minus, p, 0, 1e-12)?;
    rep.value(
        &format!("low.{p}.b.q0"),
        "Li_0 extension quadrature",
        None,
        numeric_q0,
        v,
        tol,
    );

    // ∫ [Li_p(t) − ζ(p)]/(1−t) = −I₊(1,p−1)
    let v = quad(&|t, om| (polylog_c(p, t, om) - zp) / om, EndpointClass::LogSingularAt1)?;
    let m = -mpl2(p, 1, 1.0, 1.0)? - zp1;
    let i = -ipq_final(Family::Plus, 1, p - 1)?;
    rep.value(
        &format!("low.{p}.c.mpl2"),
        "[Li_p(t)-zeta(p)]/(1-t) vs depth-2 polylog",
        None,
        m,
        v,
        tol,
    );
    rep.closed(
        &format!("low.{p}.c.ipq"),
        "[Li_p(t)-zeta(p)]/(1-t) vs -I+(1,p-1)",
        &i,
        v,
        ctx,
        tol,
    );

    // ∫ [Li_p(−t) − Li_p(−1)]/(1−t) = −I±(1,p−1)
    let v = quad(
        &|t, om| (polylog_c(p, -t, 1.0 + t) - eta_p) / om,
        EndpointClass::Regular,
    )?;
    let m = -mpl2(p, 1, -1.0, 1.0)? + eta_p1;
    let i = -ipq_final(Family::Mixed, 1, p - 1)?;
    rep.value(
        &format!("low.{p}.d.mpl2"),
        "[Li_p(-t)-Li_p(-1)]/(1-t) vs depth-2 polylog",
        None,
        m,
        v,
        tol,
    );
    rep.closed(
        &format!("low.{p}.d.ipq"),
        "[Li_p(-t)-Li_p(-1)]/(1-t) vs -I+-(1,p-1)",
        &i,
        v,
        ctx,
        tol,
    );
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cf(s: &str) -> ClosedForm {
        ClosedForm::parse(s).unwrap()
    }

    fn ev(x: &ClosedForm) -> f64 {
        NumericContext::shared().eval(x).unwrap()
    }

    #[test]
    fn r_values() {
        assert_eq!(r_value(Family::Plus, 2, 3).unwrap(), cf("pi^2*zeta3/6"));
        assert_eq!(r_value(Family::Minus, 1, 1).unwrap(), cf("ln2^2"));
        assert_eq!(r_value(Family::Mixed, 2, 1).unwrap(), cf("-pi^2*ln2/6"));
        let e = r_value(Family::Mixed, 1, 2).unwrap_err();
        assert!(e.to_string().contains("first"));
        assert!(r_value(Family::Plus, 2, 1).unwrap_err().to_string().contains("second"));
    }

    #[test]
    fn numeric_examples() {
        let v = ipq_numeric(Family::Plus, 1, 2, 1e-12).unwrap();
        assert!((v - std::f64::consts::PI.powi(4) / 72.0).abs() < 1e-11);
        let v = ipq_numeric(Family::Minus, 1, 2, 1e-12).unwrap();
        assert!((v - std::f64::consts::PI.powi(4) / 288.0).abs() < 1e-11);
        let z3 = 1.202_056_903_159_594_2f64;
        assert!((ipq_numeric(Family::Plus, 2, 3, 1e-12).unwrap() - 0.5 * z3 * z3).abs() < 1e-11);
    }

    #[test]
    fn odd_closed_forms() {
        assert_eq!(ipq_closed_odd(Family::Plus, 2, 1).unwrap(), cf("zeta3^2/2"));
        assert_eq!(ipq_closed_odd(Family::Plus, 1, 2).unwrap(), cf("-zeta3^2/2 + pi^6/540"));
        assert_eq!(ipq_closed_odd(Family::Minus, 2, 1).unwrap(), cf("9/32*zeta3^2"));
        assert!(ipq_closed_odd(Family::Mixed, 2, 1).is_err());
    }

    #[test]
    fn shift_examples() {
        let base = IpqValue::new(
            Family::Plus,
            1,
            4,
            Some(ipq_closed_odd(Family::Plus, 1, 2).unwrap()),
            0.0,
        );
        let shifted = recurrence_shift(Family::Plus, 1, 4, 1, &base).unwrap();
        assert_eq!(shifted.closed.unwrap(), cf("zeta3^2/2"));
        assert_eq!(recurrence_shift(Family::Plus, 1, 4, 0, &base).unwrap(), base);
        assert!(recurrence_shift(Family::Plus, 1, 4, 4, &base).is_err());
    }

    #[test]
    fn final_low_cases() {
        assert_eq!(ipq_final(Family::Plus, 1, 2).unwrap(), cf("pi^4/72"));
        for (f, p, q) in [
            (Family::Mixed, 1, 2),
            (Family::Minus, 1, 1),
            (Family::Minus, 1, 2),
            (Family::Mixed, 2, 1),
        ] {
            let c = ipq_final(f, p, q).unwrap();
            let n = ipq_numeric(f, p, q, 1e-12).unwrap();
            assert!((ev(&c) - n).abs() < 1e-10, "{f}({p},{q})");
        }
    }

    #[test]
    fn grid_against_quadrature() {
        for f in Family::ALL {
            for p in 1..=4 {
                for q in 1..=4 {
                    let v = IpqValue::compute(f, p, q).unwrap();
                    let c = ev(v.closed.as_ref().unwrap());
                    assert!((c - v.numeric).abs() < 1e-9, "{f}({p},{q}): {c} vs {}", v.numeric);
                }
            }
        }
    }

    #[test]
    fn series_route() {
        for f in Family::ALL {
            for (p, q) in [(1, 2), (2, 2), (3, 1), (2, 3)] {
                let s = ipq_series(f, p, q).unwrap();
                let n = ipq_numeric(f, p, q, 1e-12).unwrap();
                assert!((s - n).abs() < 1e-9, "{f}({p},{q}): {s} vs {n}");
            }
        }
    }

    #[test]
    fn low_order() {
        for p in 2..=4 {
            let rep = low_order_report(p).unwrap();
            assert!(rep.all_passed(), "{}", rep.to_text());
        }
    }
}
