//! The logarithmic integrals
//!
//! ```text
//! i(n,m) = ∫₀¹ lnⁿ(x) lnᵐ(1−x) dx        h(n,m) = ∫₀¹ lnⁿ(x) lnᵐ(1+x) dx
//! ```
//!
//! With i*(n,m) = (−1)^{n+m} i(n,m)/(n!m!) and h* likewise, both satisfy a Pascal-type
//! difference equation whose source terms are −s_{n,m} and σ̃_{n,m}.

use crate::error::{domain, Error, Result};
use crate::exact::{binomial, factorial, q, zeta_closed, ClosedForm, ConstantAtom, NumericContext, Rational};
use crate::numerics::{integrate01, EndpointClass};
use crate::report::VerificationReport;
use crate::series::kolbig_snp;
use crate::special::{sigma_tilde, SigmaRegistry};

/// Closed-form routes stop at this total weight n+m.
pub const LOGNM_MAX_WEIGHT: u32 = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LogTag {
    Inm,
    Hnm,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LogIntegralKind {
    pub tag: LogTag,
    pub n: u32,
    pub m: u32,
}

fn check_nm(n: u32, m: u32) -> Result<()> {
    if n + m == 0 {
        return Err(domain("need n + m >= 1"));
    }
    if n + m > LOGNM_MAX_WEIGHT {
        return Err(Error::Capacity {
            weight: (n + m) as usize,
            max: LOGNM_MAX_WEIGHT as usize,
        });
    }
    Ok(())
}

fn fact(n: u32) -> Rational {
    Rational::from_integer(factorial(n))
}

fn ratio_fact(a: u32, b: u32) -> Rational {
    fact(a) / fact(b)
}

fn sign(e: u32) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn binom_q(n: u32, k: u32) -> Rational {
    Rational::from_integer(binomial(n as usize, k as usize))
}

/// (−1)^{n+m} i(n,m) = (m+n)! − mn(m+n−2)!ζ(2) − m·n! Σ_{ν=2}^{n} (n−ν+m−1)!/(n−ν)!·ζ(ν+1)
///   − n·m! Σ_{μ=2}^{m} (n−μ+m−1)!/(m−μ)!·ζ(μ+1) − m!n! Σ_{ν,μ≥2} (n−ν+m−μ)!/((n−ν)!(m−μ)!)·s_{ν,μ}
pub fn i_closed(n: u32, m: u32) -> Result<ClosedForm> {
    check_nm(n, m)?;
    let mut out = ClosedForm::rational(fact(n + m));
    if n >= 1 && m >= 1 {
        out -= zeta_closed(2)?.scale(&(q((n * m) as i64) * fact(n + m - 2)));
    }
    if m >= 1 {
        for nu in 2..=n {
            let c = q(m as i64) * fact(n) * ratio_fact(n - nu + m - 1, n - nu);
            out -= zeta_closed(nu + 1)?.scale(&c);
        }
    }
    if n >= 1 {
        for mu in 2..=m {
            let c = q(n as i64) * fact(m) * ratio_fact(n + m - 1 - mu, m - mu);
            out -= zeta_closed(mu + 1)?.scale(&c);
        }
    }
    for nu in 2..=n {
        for mu in 2..=m {
            let c = fact(m) * fact(n) * fact(n - nu + m - mu) / (fact(n - nu) * fact(m - mu));
            out -= kolbig_snp(nu, mu)?.scale(&c);
        }
    }
    Ok(out.scale_int(sign(n + m)))
}

/// i*(n,m) = (−1)^{n+m} i(n,m)/(n!m!), with i*(n,0) = i*(0,m) = 1.
pub fn i_star(n: u32, m: u32) -> Result<ClosedForm> {
    if n == 0 || m == 0 {
        return Ok(ClosedForm::one());
    }
    Ok(i_closed(n, m)?.scale(&(q(sign(n + m)) / (fact(n) * fact(m)))))
}

/// i*(n,m) − i*(n,m−1) − i*(n−1,m) + s_{n,m}; zero when the closed forms are right.
pub fn i_pde_residual(n: u32, m: u32) -> Result<ClosedForm> {
    if n == 0 || m == 0 {
        return Err(domain("the difference equation holds for n, m >= 1"));
    }
    check_nm(n, m)?;
    Ok(i_star(n, m)? - i_star(n, m - 1)? - i_star(n - 1, m)? + kolbig_snp(n, m)?)
}

/// e_m(x) = Σ_{k=0}^{m} x^k/k!
pub fn truncated_exp(m: u32, x: &ClosedForm) -> ClosedForm {
    let mut out = ClosedForm::zero();
    let mut power = ClosedForm::one();
    for k in 0..=m {
        out += power.scale(&(q(1) / fact(k)));
        power = &power * x;
    }
    out
}

/// (−1)^{n+m} h(n,m) = (n+m)! + 2m! Σ_{μ=1}^{m} (m+n−μ)!/(m−μ)!·(−ln2)^μ/μ!
///   + m!n! Σ_{ν=1}^{n} Σ_{μ=1}^{m} (n−ν+m−μ)!/((n−ν)!(m−μ)!)·σ̃_{ν,μ}
pub fn h_closed(n: u32, m: u32) -> Result<ClosedForm> {
    check_nm(n, m)?;
    let mut out = ClosedForm::rational(fact(n + m));
    let minus_ln2 = -ClosedForm::ln2();
    for mu in 1..=m {
        let c = q(2) * fact(m) * ratio_fact(m + n - mu, m - mu) / fact(mu);
        out += minus_ln2.pow(mu).scale(&c);
    }
    for nu in 1..=n {
        for mu in 1..=m {
            let c = fact(m) * fact(n) * fact(n - nu + m - mu) / (fact(n - nu) * fact(m - mu));
            out += sigma_tilde(nu, mu).scale(&c);
        }
    }
    Ok(out.scale_int(sign(n + m)))
}

pub fn h_star(n: u32, m: u32) -> Result<ClosedForm> {
    if n == 0 && m == 0 {
        return Ok(ClosedForm::one());
    }
    Ok(h_closed(n, m)?.scale(&(q(sign(n + m)) / (fact(n) * fact(m)))))
}

/// h*(n,m) − h*(n,m−1) − h*(n−1,m) − σ̃_{n,m}
pub fn h_pde_residual(n: u32, m: u32) -> Result<ClosedForm> {
    if n == 0 || m == 0 {
        return Err(domain("the difference equation holds for n, m >= 1"));
    }
    check_nm(n, m)?;
    Ok(h_star(n, m)? - h_star(n, m - 1)? - h_star(n - 1, m)? - sigma_tilde(n, m))
}

/// The starting values h*(0,m) = 2e_m(−ln2) − 1. The plain integral is
/// h(0,m) = (−1)^m m!·h*(0,m); read as h(0,m) itself the stated value has the wrong
/// sign at m = 1 and the wrong magnitude for m ≥ 2.
pub fn h_initial_condition(m: u32) -> ClosedForm {
    truncated_exp(m, &-ClosedForm::ln2()).scale_int(2) - ClosedForm::one()
}

/// Coefficients of σ̃_{k,w−k} (k = 1..w−1) in the relation for s_{n,m}, w = n+m.
fn network_row(n: u32, m: u32) -> Vec<Rational> {
    let w = n + m;
    (1..w)
        .map(|k| {
            let mut c = q(0);
            if k <= n {
                c += binom_q(w - 1 - k, m - 1);
            }
            if k <= m {
                c += binom_q(w - 1 - k, n - 1);
            }
            c * q(sign(k))
        })
        .collect()
}

/// (−1)^{n+m} s_{n,m} − Σ_{k=1}^{n} (−1)^k C(n+m−1−k, m−1) σ̃_{k,n+m−k}
///                     − Σ_{k=1}^{m} (−1)^k C(n+m−1−k, n−1) σ̃_{k,n+m−k}.
/// Zero when every σ̃ involved has a registered closed form; otherwise the surviving
/// combination of σ̃ atoms is itself a relation.
pub fn sigma_network_residual(n: u32, m: u32) -> Result<ClosedForm> {
    if n == 0 || m == 0 {
        return Err(domain("need n, m >= 1"));
    }
    let w = n + m;
    let mut out = kolbig_snp(n, m)?.scale_int(sign(w));
    for (i, c) in network_row(n, m).iter().enumerate() {
        let k = i as u32 + 1;
        out -= sigma_tilde(k, w - k).scale(c);
    }
    Ok(out)
}

/// Rank bookkeeping for the σ̃ atoms of one weight.
#[derive(Debug, Clone, PartialEq)]
pub struct RankSummary {
    pub weight: u32,
    pub unknowns: usize,
    pub network_rank: usize,
    pub relation_rank: usize,
    pub combined_rank: usize,
    /// Right-hand sides left over by dependent rows; all zero when consistent.
    pub inconsistencies: Vec<ClosedForm>,
}

type Row = (Vec<Rational>, ClosedForm);

/// Gaussian elimination; returns the rank and the right-hand sides of rows that reduced to zero.
fn eliminate(mut rows: Vec<Row>) -> (usize, Vec<ClosedForm>) {
    let cols = rows.first().map_or(0, |r| r.0.len());
    let mut rank = 0;
    for col in 0..cols {
        let Some(piv) = (rank..rows.len()).find(|&i| rows[i].0[col] != q(0)) else {
            continue;
        };
        rows.swap(rank, piv);
        let (pc, pr) = (rows[rank].0.clone(), rows[rank].1.clone());
        for i in 0..rows.len() {
            if i == rank || rows[i].0[col] == q(0) {
                continue;
            }
            let f = &rows[i].0[col] / &pc[col];
            for j in 0..cols {
                let d = &pc[j] * &f;
                rows[i].0[j] -= d;
            }
            rows[i].1 -= pr.scale(&f);
        }
        rank += 1;
    }
    let leftover = rows[rank..]
        .iter()
        .map(|r| r.1.clone())
        .filter(|c| !c.is_zero())
        .collect();
    (rank, leftover)
}

fn relation_rows(w: u32) -> Vec<Row> {
    SigmaRegistry::shared()
        .relations()
        .iter()
        .filter(|r| r.lhs.iter().all(|(_, (n, p))| n + p == w))
        .map(|r| {
            let mut v = vec![q(0); (w - 1) as usize];
            for (c, (n, _)) in &r.lhs {
                v[(*n - 1) as usize] += q(*c);
            }
            (v, r.rhs.clone())
        })
        .collect()
}

fn network_rows(w: u32) -> Result<Vec<Row>> {
    (1..w)
        .map(|n| {
            let m = w - n;
            Ok((network_row(n, m), kolbig_snp(n, m)?.scale_int(sign(w))))
        })
        .collect()
}

pub fn sigma_rank_summary(w: u32) -> Result<RankSummary> {
    if w < 2 {
        return Err(domain("weight must be >= 2"));
    }
    let net = network_rows(w)?;
    let rel = relation_rows(w);
    let (network_rank, _) = eliminate(net.clone());
    let (relation_rank, _) = if rel.is_empty() {
        (0, vec![])
    } else {
        eliminate(rel.clone())
    };
    let mut all = net;
    all.extend(rel);
    let (combined_rank, inconsistencies) = eliminate(all);
    Ok(RankSummary {
        weight: w,
        unknowns: (w - 1) as usize,
        network_rank,
        relation_rank,
        combined_rank,
        inconsistencies,
    })
}

/// Quadrature of the defining integral.
pub fn lognm_numeric(kind: LogIntegralKind, tol: f64) -> Result<f64> {
    let LogIntegralKind { tag, n, m } = kind;
    if n + m == 0 {
        return Err(domain("need n + m >= 1"));
    }
    let (ni, mi) = (n as i32, m as i32);
    let class = match tag {
        LogTag::Inm => EndpointClass::LogSingularBoth,
        LogTag::Hnm => EndpointClass::LogSingularAt0,
    };
    let f = move |x: f64, om: f64| {
        let lx = if x > 0.5 { (-om).ln_1p() } else { x.ln() };
        let second = match tag {
            LogTag::Inm => {
                if x > 0.5 {
                    om.ln()
                } else {
                    (-x).ln_1p()
                }
            }
            LogTag::Hnm => x.ln_1p(),
        };
        lx.powi(ni) * second.powi(mi)
    };
    Ok(integrate01(f, class, tol)?.value)
}

/// The weight-6 relations among σ̃ atoms, checked against quadrature, plus the rank count.
pub fn sigma6_report() -> Result<VerificationReport> {
    let mut rep = VerificationReport::new();
    sigma6_into(&mut rep)?;
    Ok(rep)
}

pub(crate) fn sigma6_into(rep: &mut VerificationReport) -> Result<()> {
    let ctx = NumericContext::shared();
    for r in SigmaRegistry::shared().relations() {
        let mut lhs = 0.0;
        for (c, (n, p)) in &r.lhs {
            lhs += *c as f64 * ctx.value(&ConstantAtom::SigmaTilde(*n, *p))?;
        }
        rep.closed(
            &format!("sigma.w6.{}", r.id),
            "weight-6 sigma relation vs quadrature",
            &r.rhs,
            lhs,
            ctx,
            1e-9,
        );
    }
    let s = sigma_rank_summary(6)?;
    rep.value(
        "sigma.w6.rank",
        "rank of network plus relations equals rank of the relations",
        None,
        s.combined_rank as f64,
        s.relation_rank as f64,
        0.0,
    );
    rep.note(format!(
        "{} unknowns; network rank {} leaves {} free atoms; with the relations {} remain",
        s.unknowns,
        s.network_rank,
        s.unknowns - s.network_rank,
        s.unknowns - s.combined_rank
    ));
    let residual: ClosedForm = s.inconsistencies.iter().cloned().sum();
    rep.exact(
        "sigma.w6.consistent",
        "network and relations have compatible right-hand sides",
        &residual,
    );
    Ok(())
}

/// |h(0,m)| from the stated starting value against quadrature of ∫ lnᵐ(1+x).
pub fn initial_condition_check(m: u32) -> Result<(f64, f64, f64)> {
    let ctx = NumericContext::shared();
    let stated = ctx.eval(&h_initial_condition(m))?;
    let scaled = stated * (sign(m) as f64) * ctx.eval(&ClosedForm::rational(fact(m)))?;
    let quad = lognm_numeric(
        LogIntegralKind {
            tag: LogTag::Hnm,
            n: 0,
            m,
        },
        1e-13,
    )?;
    Ok((stated, scaled, quad))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::beta_derivative_inm;

    fn cf(s: &str) -> ClosedForm {
        ClosedForm::parse(s).unwrap()
    }

    #[test]
    fn i_examples() {
        assert_eq!(i_closed(1, 1).unwrap(), cf("2 - pi^2/6"));
        assert_eq!(i_closed(1, 3).unwrap(), cf("24 - pi^2 - pi^4/15 - 6*zeta3"));
        assert_eq!(
            i_closed(3, 3).unwrap(),
            cf("720 - 36*pi^2 - pi^4 - 23/420*pi^6 - 216*zeta3 - 144*zeta5 + 12*pi^2*zeta3 + 36*zeta3^2")
        );
        assert!(matches!(i_closed(4, 3), Err(Error::Capacity { .. })));
    }

    #[test]
    fn i_routes_agree() {
        for n in 0..=6u32 {
            for m in 0..=(6 - n) {
                if n + m == 0 {
                    continue;
                }
                let a = i_closed(n, m).unwrap();
                assert_eq!(a, i_closed(m, n).unwrap());
                assert_eq!(a, beta_derivative_inm(n, m).unwrap(), "({n},{m})");
            }
        }
    }

    #[test]
    fn i_against_quadrature() {
        let ctx = NumericContext::shared();
        for n in 1..=3 {
            for m in 1..=3 {
                let v = lognm_numeric(LogIntegralKind { tag: LogTag::Inm, n, m }, 1e-12).unwrap();
                assert!((ctx.eval(&i_closed(n, m).unwrap()).unwrap() - v).abs() < 1e-9);
            }
        }
        let v = lognm_numeric(
            LogIntegralKind {
                tag: LogTag::Inm,
                n: 0,
                m: 1,
            },
            1e-12,
        )
        .unwrap();
        assert!((v + 1.0).abs() < 1e-12);
    }

    #[test]
    fn residuals_vanish() {
        for w in 2..=6u32 {
            for n in 1..w {
                assert!(i_pde_residual(n, w - n).unwrap().is_zero());
                assert!(h_pde_residual(n, w - n).unwrap().is_zero());
            }
        }
        for w in 2..=5u32 {
            for n in 1..w {
                assert!(sigma_network_residual(n, w - n).unwrap().is_zero(), "({n},{})", w - n);
            }
        }
        assert!(!sigma_network_residual(2, 4).unwrap().is_zero());
    }

    #[test]
    fn h_examples() {
        assert_eq!(h_closed(1, 1).unwrap(), cf("2 - 2*ln2 - pi^2/12"));
        assert_eq!(h_closed(2, 1).unwrap(), cf("-6 + pi^2/6 + 3/2*zeta3 + 4*ln2"));
        assert_eq!(
            h_closed(2, 2).unwrap(),
            cf("24 - 24*ln2 + 4*ln2^2 + ln2^4/3 - 2*pi^2/3 - pi^4/12 - 5/2*zeta3 - pi^2*ln2^2/3 + 7*ln2*zeta3 + 8*li4half")
        );
        let ctx = NumericContext::shared();
        for n in 1..=4 {
            for m in 1..=(5 - n) {
                let v = lognm_numeric(LogIntegralKind { tag: LogTag::Hnm, n, m }, 1e-12).unwrap();
                assert!(
                    (ctx.eval(&h_closed(n, m).unwrap()).unwrap() - v).abs() < 1e-9,
                    "h({n},{m})"
                );
            }
        }
    }

    #[test]
    fn initial_condition_sign() {
        for m in 1..=4 {
            let (stated, scaled, quad) = initial_condition_check(m).unwrap();
            assert!((scaled - quad).abs() < 1e-12);
            assert!((stated - quad).abs() >= 1e-12, "m={m}");
            if m == 1 {
                assert!((stated + quad).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn weight_six_rank() {
        let s = sigma_rank_summary(6).unwrap();
        assert_eq!((s.unknowns, s.network_rank), (5, 3));
        assert_eq!(s.relation_rank, 4);
        assert_eq!(s.combined_rank, 4);
        assert!(s.inconsistencies.is_empty(), "{:?}", s.inconsistencies);
        let rep = sigma6_report().unwrap();
        assert!(rep.all_passed(), "{}", rep.to_text());
    }
}
