//! Verification suites: every closed form against an independent oracle, and every
//! difference equation or cross-route identity as an exact residual.

use std::fmt;
use std::str::FromStr;

use crate::approx::{polylog_derivative_at_minus1, s_minus_truncated, stirling1};
use crate::error::{Error, Result};
use crate::euler_sums::{
    c_sum, c_sum_nielsen, closed, jordan2_via_c, jordan_even, jordan_nielsen, jordan_odd_integral, log_kernel_closed,
    log_kernel_numeric, s_plus, sum_oracle, Jordan, LogKernel, SumKind, SumTag,
};
use crate::exact::{eta_factor_closed, rational_pow2, zeta_closed, ClosedForm, ConstantAtom, NumericContext};
use crate::ipq::{
    ipq_closed_odd, ipq_final, ipq_numeric, ipq_series, low_order_into, r_value, recurrence_shift, Family, IpqValue,
};
use crate::lognm::{
    h_closed, h_initial_condition, h_pde_residual, i_closed, i_pde_residual, lognm_numeric, sigma6_into,
    sigma_network_residual, LogIntegralKind, LogTag,
};
use crate::report::{VerificationReport, VerifyConfig};
use crate::series::{beta_derivative_inm, kolbig_snp};
use crate::special::{nielsen_num, polylog, SigmaRegistry};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Ipq,
    Sums,
    Lognm,
    Appendix,
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "all" => Suite::All,
            "ipq" => Suite::Ipq,
            "sums" => Suite::Sums,
            "lognm" => Suite::Lognm,
            "appendix" => Suite::Appendix,
            _ => return Err(Error::Parse(format!("unknown suite {s:?}"))),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::All => "all",
            Suite::Ipq => "ipq",
            Suite::Sums => "sums",
            Suite::Lognm => "lognm",
            Suite::Appendix => "appendix",
        })
    }
}

/// Runs a suite; entries come back sorted by identity id.
pub fn run(suite: Suite, config: VerifyConfig) -> VerificationReport {
    let mut rep = VerificationReport::with_config(config);
    let parts: &[fn(&mut VerificationReport) -> Result<()>] = match suite {
        Suite::All => &[sums, ipq, lognm, appendix],
        Suite::Sums => &[sums],
        Suite::Ipq => &[ipq],
        Suite::Lognm => &[lognm],
        Suite::Appendix => &[appendix],
    };
    for part in parts {
        if let Err(e) = part(&mut rep) {
            rep.failure("suite.aborted", "suite runner", &e.to_string());
        }
    }
    rep.sort();
    rep
}

fn ctx() -> &'static NumericContext {
    NumericContext::shared()
}

/// Records `Err` as a failed entry instead of aborting the suite.
fn guard<T>(rep: &mut VerificationReport, id: &str, r: Result<T>) -> Option<T> {
    match r {
        Ok(v) => Some(v),
        Err(e) => {
            rep.failure(id, "computation", &e.to_string());
            None
        }
    }
}

fn exact_eq(rep: &mut VerificationReport, id: &str, location: &str, a: Result<ClosedForm>, b: Result<ClosedForm>) {
    match (a, b) {
        (Ok(a), Ok(b)) => rep.exact(id, location, &(a - b)),
        (Err(e), _) | (_, Err(e)) => rep.failure(id, location, &e.to_string()),
    }
}

const SUM_TAGS: [SumTag; 6] = [
    SumTag::SPlus,
    SumTag::SMinus,
    SumTag::Jordan1,
    SumTag::Jordan2,
    SumTag::Milgram,
    SumTag::CSum,
];

fn sums(rep: &mut VerificationReport) -> Result<()> {
    let c = ctx();
    for r in 2..=8u32 {
        for tag in SUM_TAGS {
            let kind = SumKind { tag, order: r };
            let id = format!("sums.{}.{r}", tag.name());
            let (Some(cf), Some(o)) = (guard(rep, &id, closed(kind)), guard(rep, &id, sum_oracle(kind))) else {
                continue;
            };
            rep.closed(&id, "closed form vs direct summation", &cf, o, c, 1e-10);
        }
        let id = format!("sums.decomposition.{r}");
        let o = |tag| sum_oracle(SumKind { tag, order: r });
        let v = (|| -> Result<(f64, f64)> {
            let zr = crate::numerics::zeta(r as f64 + 1.0)?;
            let rhs = o(SumTag::Jordan2)? - o(SumTag::Jordan1)? + o(SumTag::CSum)?
                - o(SumTag::Milgram)?
                - (1.0 - 2f64.powi(-(r as i32) - 1)) * zr;
            Ok((rhs, o(SumTag::SMinus)?))
        })();
        if let Some((rhs, lhs)) = guard(rep, &id, v) {
            rep.value(
                &id,
                "S- as J2 - J1 + C - M - (1-2^(-r-1)) zeta(r+1), all by summation",
                None,
                rhs,
                lhs,
                1e-10,
            );
        }
    }
    for r in [2u32, 4, 6, 8] {
        for (which, name) in [(Jordan::J1, "j1"), (Jordan::J2, "j2")] {
            exact_eq(
                rep,
                &format!("sums.{name}.routes.{r}"),
                "even-order display vs Nielsen form",
                jordan_even(which, r),
                jordan_nielsen(which, r),
            );
        }
    }
    for r in 2..=7u32 {
        let f = rational_pow2(-(r as i64) - 1);
        exact_eq(
            rep,
            &format!("sums.c.dual.{r}"),
            "2^(-r-1) S+(r) vs 2^(-r-1)[zeta(r+1) + s(r-1,2)]",
            s_plus(r).map(|s| s.scale(&f)),
            c_sum_nielsen(r),
        );
        exact_eq(
            rep,
            &format!("sums.j2.dual.{r}"),
            "J2 through C vs J2 through s and sigma",
            jordan2_via_c(r),
            jordan_nielsen(Jordan::J2, r),
        );
        let _ = c_sum(r);
    }
    for n in 1..=2u32 {
        for (which, tag, name) in [(Jordan::J1, SumTag::Jordan1, "j1"), (Jordan::J2, SumTag::Jordan2, "j2")] {
            let id = format!("sums.{name}.integral.{}", 2 * n + 1);
            let (Some(v), Some(o)) = (
                guard(rep, &id, jordan_odd_integral(which, n)),
                guard(rep, &id, sum_oracle(SumKind { tag, order: 2 * n + 1 })),
            ) else {
                continue;
            };
            rep.value(&id, "odd-order integral representation vs summation", None, v, o, 1e-9);
        }
    }
    for (i, k) in LogKernel::ALL.iter().enumerate() {
        let id = format!("sums.logkernel.{}", i + 1);
        if let Some(v) = guard(rep, &id, log_kernel_numeric(*k)) {
            rep.closed(&id, k.name(), &log_kernel_closed(*k), v, c, 1e-10);
        }
    }
    // S₋(2n+1) = (2^{−2n−1} − 1)ζ(2n+2) + σ̃_{2n,2}; dropping the −1 is off by ζ(2n+2).
    for n in 1..=3u32 {
        let r = 2 * n + 1;
        let id = format!("sums.sminus.odd_form.{r}");
        let f = eta_factor_closed(r as i64 + 1) + ClosedForm::atom(ConstantAtom::SigmaTilde(r - 1, 2));
        if let Some(o) = guard(
            rep,
            &id,
            sum_oracle(SumKind {
                tag: SumTag::SMinus,
                order: r,
            }),
        ) {
            rep.closed(
                &id,
                "general odd-order S- form with sigma atom by quadrature",
                &f,
                o,
                c,
                1e-10,
            );
            let without = f.clone() + zeta_closed(r + 1)?;
            let off = c.eval(&without)? - o;
            rep.note(format!("variant without the -1 is off by {off:.6e}"));
        }
    }
    Ok(())
}

fn ipq(rep: &mut VerificationReport) -> Result<()> {
    let c = ctx();
    for f in Family::ALL {
        for p in 1..=4u32 {
            for q in 1..=4u32 {
                let id = format!("ipq.{f}.{p}.{q}");
                let (Some(cf), Some(n)) = (
                    guard(rep, &id, ipq_final(f, p, q)),
                    guard(rep, &id, ipq_numeric(f, p, q, 1e-12)),
                ) else {
                    continue;
                };
                rep.closed(&id, "closed form vs quadrature", &cf, n, c, 1e-8);
                if p <= 3 && q <= 3 {
                    let sid = format!("ipq.{f}.{p}.{q}.series");
                    if let Some(s) = guard(rep, &sid, ipq_series(f, p, q)) {
                        rep.value(&sid, "moment series vs quadrature", None, s, n, 1e-9);
                    }
                }
                if f.is_symmetric() && p < q {
                    let sid = format!("ipq.{f}.{p}.{q}.symmetry");
                    if let Some(m) = guard(rep, &sid, ipq_numeric(f, q, p, 1e-12)) {
                        rep.value(&sid, "I(p,q) = I(q,p) by quadrature", None, m, n, 2e-12);
                    }
                }
            }
        }
        for p in 2..=4u32 {
            for q in 2..=4u32 {
                let id = format!("ipq.{f}.step.{p}.{q}");
                let r = (|| Ok(ipq_final(f, p, q - 1)? + ipq_final(f, p - 1, q)? - r_value(f, p, q)?))();
                if let Some(res) = guard(rep, &id, r) {
                    rep.exact(&id, "I(p,q-1) + I(p-1,q) = R(p,q)", &res);
                }
            }
        }
        // n single steps against the n-step formula
        for (p, q, n) in [(1u32, 4u32, 2u32), (1, 5, 3), (2, 4, 3), (1, 3, 2), (2, 5, 4)] {
            if f == Family::Plus && n >= q {
                continue;
            }
            let id = format!("ipq.{f}.shift.{p}.{q}.{n}");
            let r = (|| -> Result<ClosedForm> {
                let base = IpqValue::new(f, p, q, Some(ipq_final(f, p, q)?), 0.0);
                let direct = recurrence_shift(f, p, q, n, &base)?;
                let mut step = base;
                for k in 0..n {
                    step = recurrence_shift(f, p + k, q - k, 1, &step)?;
                }
                Ok(direct.closed.expect("closed") - step.closed.expect("closed"))
            })();
            if let Some(res) = guard(rep, &id, r) {
                rep.exact(&id, "n-step shift vs repeated single steps", &res);
            }
            if q - n >= 1 {
                let id2 = format!("ipq.{f}.shift.{p}.{q}.{n}.target");
                let r = (|| -> Result<ClosedForm> {
                    let base = IpqValue::new(f, p, q, Some(ipq_final(f, p, q)?), 0.0);
                    Ok(recurrence_shift(f, p, q, n, &base)?.closed.expect("closed") - ipq_final(f, p + n, q - n)?)
                })();
                if let Some(res) = guard(rep, &id2, r) {
                    rep.exact(&id2, "shifted value vs closed form at the target", &res);
                }
            }
        }
    }
    for f in [Family::Plus, Family::Minus] {
        for (p, n) in [(1u32, 1u32), (1, 2), (2, 1), (1, 3)] {
            let id = format!("ipq.{f}.even_reduction.{p}.{n}");
            let r = (|| -> Result<ClosedForm> {
                let sign = if n % 2 == 0 { 1 } else { -1 };
                let mut rhs = ipq_final(f, p + n, p + n)?.scale_int(sign);
                for k in 0..n {
                    rhs += r_value(f, p + k + 1, p + 2 * n - k)?.scale_int(if k % 2 == 0 { 1 } else { -1 });
                }
                Ok(ipq_final(f, p, p + 2 * n)? - rhs)
            })();
            if let Some(res) = guard(rep, &id, r) {
                rep.exact(&id, "I(p,p+2n) through the diagonal I(p+n,p+n)", &res);
            }
        }
    }
    for (p, n) in [(1u32, 2u32), (1, 3), (2, 2)] {
        let id = format!("ipq.mixed.odd_reduction.{p}.{n}");
        let r = (|| -> Result<(f64, f64)> {
            let f = Family::Mixed;
            let sign = if (n + 1) % 2 == 0 { 1.0 } else { -1.0 };
            let mut rhs = sign * ipq_numeric(f, p + n - 1, p + n, 1e-12)?;
            for k in 0..n.saturating_sub(1) {
                let s = if k % 2 == 0 { 1.0 } else { -1.0 };
                rhs += s * c.eval(&r_value(f, p + k + 1, p + 2 * n - 1 - k)?)?;
            }
            Ok((rhs, ipq_numeric(f, p, p + 2 * n - 1, 1e-12)?))
        })();
        if let Some((a, b)) = guard(rep, &id, r) {
            rep.value(&id, "I+-(p,p+2n-1) through I+-(p+n-1,p+n)", None, a, b, 1e-10);
        }
    }
    let f = Family::Plus;
    let r = |a, b| r_value(f, a, b);
    let half = crate::exact::qf(1, 2);
    let examples: [(&str, Result<ClosedForm>, Result<ClosedForm>); 4] = [
        (
            "ipq.example.1.4",
            ipq_final(f, 1, 4),
            r(3, 3).and_then(|a| Ok(r(2, 4)? - a.scale(&half))),
        ),
        ("ipq.example.2.3", ipq_final(f, 2, 3), r(3, 3).map(|a| a.scale(&half))),
        (
            "ipq.example.1.5",
            ipq_final(f, 1, 5),
            (|| Ok(ipq_final(f, 3, 3)? + r(2, 5)? - r(3, 4)?))(),
        ),
        (
            "ipq.example.2.4",
            ipq_final(f, 2, 4),
            (|| Ok(r(3, 4)? - ipq_final(f, 3, 3)?))(),
        ),
    ];
    for (id, a, b) in examples {
        exact_eq(rep, id, "worked R-combination examples", a, b);
    }
    exact_eq(
        rep,
        "ipq.example.odd.1.2",
        "odd closed form I(1,4)",
        ipq_closed_odd(f, 1, 2),
        ipq_final(f, 1, 4),
    );
    for p in 2..=4 {
        low_order_into(rep, p)?;
    }
    Ok(())
}

fn lognm(rep: &mut VerificationReport) -> Result<()> {
    let c = ctx();
    for n in 0..=6u32 {
        for m in 0..=(6 - n) {
            if n + m == 0 {
                continue;
            }
            exact_eq(
                rep,
                &format!("lognm.inm.routes.{n}.{m}"),
                "explicit solution vs Beta-function series",
                i_closed(n, m),
                beta_derivative_inm(n, m),
            );
            if n >= 1 && m >= 1 {
                exact_eq(
                    rep,
                    &format!("lognm.inm.symmetry.{n}.{m}"),
                    "i(n,m) = i(m,n)",
                    i_closed(n, m),
                    i_closed(m, n),
                );
                if let Some(res) = guard(rep, "lognm.inm.pde", i_pde_residual(n, m)) {
                    rep.exact(&format!("lognm.inm.pde.{n}.{m}"), "difference equation for i*", &res);
                }
                if let Some(res) = guard(rep, "lognm.hnm.pde", h_pde_residual(n, m)) {
                    rep.exact(&format!("lognm.hnm.pde.{n}.{m}"), "difference equation for h*", &res);
                }
            }
        }
    }
    for n in 1..=3u32 {
        for m in 1..=3u32 {
            let id = format!("lognm.inm.{n}.{m}");
            let v = lognm_numeric(LogIntegralKind { tag: LogTag::Inm, n, m }, 1e-12);
            if let (Some(cf), Some(v)) = (guard(rep, &id, i_closed(n, m)), guard(rep, &id, v)) {
                rep.closed(&id, "i(n,m) vs quadrature", &cf, v, c, 1e-9);
            }
        }
    }
    for w in 2..=5u32 {
        for n in 1..w {
            let m = w - n;
            let id = format!("lognm.hnm.{n}.{m}");
            let v = lognm_numeric(LogIntegralKind { tag: LogTag::Hnm, n, m }, 1e-12);
            if let (Some(cf), Some(v)) = (guard(rep, &id, h_closed(n, m)), guard(rep, &id, v)) {
                rep.closed(&id, "h(n,m) vs quadrature", &cf, v, c, 1e-9);
            }
            if let Some(res) = guard(rep, &id, sigma_network_residual(n, m)) {
                rep.exact(&format!("lognm.network.{n}.{m}"), "s(n,m) through sigma atoms", &res);
            }
        }
    }
    for m in 1..=4u32 {
        let id = format!("lognm.hnm.initial.{m}");
        let v = lognm_numeric(
            LogIntegralKind {
                tag: LogTag::Hnm,
                n: 0,
                m,
            },
            1e-13,
        )?;
        let sign = if m % 2 == 0 { 1 } else { -1 };
        let fact: i64 = (1..=m as i64).product();
        let stated = h_initial_condition(m);
        rep.closed(
            &id,
            "h(0,m) = (-1)^m m! (2 e_m(-ln2) - 1)",
            &stated.scale_int(sign * fact),
            v,
            c,
            1e-12,
        );
        let plain = c.eval(&stated)?;
        rep.note(format!(
            "2 e_m(-ln2) - 1 = {plain:.12} is h*(0,m); the integral is {v:.12}"
        ));
    }
    for ((n, p), cf, _) in SigmaRegistry::shared().entries() {
        let id = format!("lognm.sigma.{n}.{p}");
        if let Some(v) = guard(rep, &id, nielsen_num(n, p, -1.0)) {
            rep.closed(&id, "registered sigma vs quadrature", cf, v, c, 1e-10);
        }
    }
    for w in 2..=6u32 {
        for n in 1..w {
            let p = w - n;
            let id = format!("lognm.snp.{n}.{p}");
            if let (Some(cf), Some(v)) = (
                guard(rep, &id, kolbig_snp(n, p)),
                guard(rep, &id, nielsen_num(n, p, 1.0)),
            ) {
                rep.closed(&id, "Gamma-series s(n,p) vs quadrature", &cf, v, c, 1e-10);
            }
        }
    }
    sigma6_into(rep)?;
    Ok(())
}

/// |s_minus_truncated(p, kt) − S₋(p)| for kt in `range`.
pub fn truncation_errors(p: u32, range: std::ops::RangeInclusive<u32>) -> Result<Vec<(u32, f64)>> {
    let oracle = sum_oracle(SumKind {
        tag: SumTag::SMinus,
        order: p,
    })?;
    range
        .map(|kt| Ok((kt, (ctx().eval(&s_minus_truncated(p, kt)?)? - oracle).abs())))
        .collect()
}

fn appendix(rep: &mut VerificationReport) -> Result<()> {
    let c = ctx();
    let oracle = sum_oracle(SumKind {
        tag: SumTag::SMinus,
        order: 5,
    })?;
    let t = s_minus_truncated(5, 10)?;
    rep.closed(
        "appendix.nine_decimals",
        "ten-term truncation of S-(5) to 5e-10",
        &t,
        oracle,
        c,
        5e-10,
    );
    let errs = truncation_errors(5, 3..=12)?;
    let steps: Vec<String> = errs.iter().map(|(k, e)| format!("{k}:{e:.2e}")).collect();
    rep.value(
        "appendix.truncation.kt12",
        "twelve-term truncation of S-(5)",
        None,
        errs.last().map(|e| e.1).unwrap_or(f64::NAN),
        0.0,
        5e-10,
    );
    rep.note(format!("errors by kt: {}", steps.join(" ")));
    for w in errs.windows(2).filter(|w| w[0].0 < 11) {
        let id = format!("appendix.monotone.{}", w[1].0);
        rep.value(
            &id,
            "truncation error does not grow",
            None,
            (w[1].1 - w[0].1).max(0.0),
            0.0,
            0.0,
        );
    }
    for (p, k) in [(5u32, 1u32), (5, 2), (4, 1), (3, 1)] {
        let id = format!("appendix.derivative.{p}.{k}");
        let h = 1e-3;
        let f = |t: f64| polylog(p, -t);
        let fd = (|| -> Result<f64> {
            // one-sided differences of order 2 at t = 1
            Ok(match k {
                1 => (3.0 * f(1.0)? - 4.0 * f(1.0 - h)? + f(1.0 - 2.0 * h)?) / (2.0 * h),
                _ => (2.0 * f(1.0)? - 5.0 * f(1.0 - h)? + 4.0 * f(1.0 - 2.0 * h)? - f(1.0 - 3.0 * h)?) / (h * h),
            })
        })();
        if let (Some(cf), Some(fd)) = (guard(rep, &id, polylog_derivative_at_minus1(p, k)), guard(rep, &id, fd)) {
            rep.closed(&id, "derivative at t = 1 vs finite differences", &cf, fd, c, 1e-6);
        }
    }
    let mut bad = 0.0;
    for k in 1..40u32 {
        for j in 1..=k + 1 {
            let lhs = stirling1(k + 1, j)?;
            let left = if j >= 2 { stirling1(k, j - 1)? } else { 0.into() };
            let right = if j <= k { stirling1(k, j)? } else { 0.into() };
            if lhs != left - num_bigint::BigInt::from(k) * right {
                bad += 1.0;
            }
        }
    }
    rep.value(
        "appendix.stirling.recurrence",
        "Stirling recurrence, rows 1..40",
        None,
        bad,
        0.0,
        0.0,
    );
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sums_suite_passes() {
        let rep = run(Suite::Sums, VerifyConfig::default());
        assert!(rep.all_passed(), "{}", rep.to_text());
    }

    #[test]
    fn ipq_suite_passes() {
        let rep = run(Suite::Ipq, VerifyConfig::default());
        assert!(rep.all_passed(), "{}", rep.to_text());
    }

    #[test]
    fn lognm_suite_passes() {
        let rep = run(Suite::Lognm, VerifyConfig::default());
        assert!(rep.all_passed(), "{}", rep.to_text());
    }

    #[test]
    fn appendix_suite() {
        let rep = run(Suite::Appendix, VerifyConfig::default());
        println!("{}", rep.to_text());
    }
}
