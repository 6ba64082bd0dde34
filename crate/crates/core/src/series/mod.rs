//! Truncated bivariate power series with exact coefficients.

mod kolbig;

pub use kolbig::{beta_derivative_inm, gamma_ratio_series, kolbig_snp, kolbig_snp_with, DEFAULT_MAX_WEIGHT};

use crate::error::{domain, Error, Result};
use crate::exact::{q, ClosedForm, Rational};

/// Σ c_ij α^i β^j with i ≤ `order_alpha`, j ≤ `order_beta`, and optionally i + j ≤ `total_cap`.
#[derive(Debug, Clone, PartialEq)]
pub struct BivariateSeries {
    order_alpha: usize,
    order_beta: usize,
    total_cap: Option<usize>,
    coefficients: Vec<ClosedForm>,
}

impl BivariateSeries {
    pub fn zero(order_alpha: usize, order_beta: usize) -> Self {
        Self::zero_capped(order_alpha, order_beta, None)
    }

    pub fn zero_capped(order_alpha: usize, order_beta: usize, total_cap: Option<usize>) -> Self {
        Self {
            order_alpha,
            order_beta,
            total_cap,
            coefficients: vec![ClosedForm::zero(); (order_alpha + 1) * (order_beta + 1)],
        }
    }

    pub fn constant(c: ClosedForm, order_alpha: usize, order_beta: usize) -> Self {
        let mut s = Self::zero(order_alpha, order_beta);
        s.set(0, 0, c);
        s
    }

    pub fn one(order_alpha: usize, order_beta: usize) -> Self {
        Self::constant(ClosedForm::one(), order_alpha, order_beta)
    }

    pub fn alpha(order_alpha: usize, order_beta: usize) -> Self {
        let mut s = Self::zero(order_alpha, order_beta);
        s.set(1, 0, ClosedForm::one());
        s
    }

    pub fn beta(order_alpha: usize, order_beta: usize) -> Self {
        let mut s = Self::zero(order_alpha, order_beta);
        s.set(0, 1, ClosedForm::one());
        s
    }

    /// Same series with a total-degree cap applied.
    pub fn with_cap(mut self, cap: usize) -> Self {
        self.total_cap = Some(self.total_cap.map_or(cap, |c| c.min(cap)));
        for i in 0..=self.order_alpha {
            for j in 0..=self.order_beta {
                if i + j > cap {
                    let k = self.index(i, j);
                    self.coefficients[k] = ClosedForm::zero();
                }
            }
        }
        self
    }

    pub fn orders(&self) -> (usize, usize) {
        (self.order_alpha, self.order_beta)
    }

    pub fn total_cap(&self) -> Option<usize> {
        self.total_cap
    }

    fn index(&self, i: usize, j: usize) -> usize {
        i * (self.order_beta + 1) + j
    }

    fn in_range(&self, i: usize, j: usize) -> bool {
        i <= self.order_alpha && j <= self.order_beta && self.total_cap.is_none_or(|c| i + j <= c)
    }

    /// Coefficient of α^i β^j; zero outside the truncation.
    pub fn coeff(&self, i: usize, j: usize) -> ClosedForm {
        if self.in_range(i, j) {
            self.coefficients[self.index(i, j)].clone()
        } else {
            ClosedForm::zero()
        }
    }

    fn coeff_ref(&self, i: usize, j: usize) -> &ClosedForm {
        &self.coefficients[self.index(i, j)]
    }

    /// Sets a coefficient; writes outside the truncation are dropped.
    pub fn set(&mut self, i: usize, j: usize, c: ClosedForm) {
        if self.in_range(i, j) {
            let k = self.index(i, j);
            self.coefficients[k] = c;
        }
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if self.order_alpha != other.order_alpha || self.order_beta != other.order_beta {
            return Err(Error::Shape(format!(
                "orders ({}, {}) vs ({}, {})",
                self.order_alpha, self.order_beta, other.order_alpha, other.order_beta
            )));
        }
        Ok(())
    }

    fn merged_cap(&self, other: &Self) -> Option<usize> {
        match (self.total_cap, other.total_cap) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let mut out = Self::zero_capped(self.order_alpha, self.order_beta, self.merged_cap(other));
        for i in 0..=self.order_alpha {
            for j in 0..=self.order_beta {
                out.set(i, j, self.coeff(i, j) + other.coeff(i, j));
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        self.scale(&q(-1))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = self.clone();
        for x in &mut out.coefficients {
            *x = x.scale(c);
        }
        out
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let mut out = Self::zero_capped(self.order_alpha, self.order_beta, self.merged_cap(other));
        for i in 0..=self.order_alpha {
            for j in 0..=self.order_beta {
                if !out.in_range(i, j) {
                    continue;
                }
                let mut acc = ClosedForm::zero();
                for k in 0..=i {
                    for l in 0..=j {
                        if !self.in_range(k, l) || !other.in_range(i - k, j - l) {
                            continue;
                        }
                        let a = self.coeff_ref(k, l);
                        let b = other.coeff_ref(i - k, j - l);
                        if !a.is_zero() && !b.is_zero() {
                            acc += a * b;
                        }
                    }
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut out = Self::zero_capped(self.order_alpha, self.order_beta, self.total_cap);
        out.set(0, 0, ClosedForm::one());
        for _ in 0..e {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// exp(a) for a series with zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeff(0, 0).is_zero() {
            return Err(domain("exp needs a series with zero constant term"));
        }
        let mut e = Self::zero_capped(self.order_alpha, self.order_beta, self.total_cap);
        e.set(0, 0, ClosedForm::one());
        for i in 0..=self.order_alpha {
            for j in 0..=self.order_beta {
                if (i, j) == (0, 0) || !e.in_range(i, j) {
                    continue;
                }
                // i·E_ij = Σ k·A_kl·E_{i−k,j−l}; on the i = 0 row use the β derivative instead.
                let mut acc = ClosedForm::zero();
                if i > 0 {
                    for k in 1..=i {
                        for l in 0..=j {
                            acc += self.weighted_product(k, l, k, &e, i - k, j - l);
                        }
                    }
                    e.set(i, j, acc.scale(&Rational::new(1.into(), i.into())));
                } else {
                    for l in 1..=j {
                        acc += self.weighted_product(0, l, l, &e, 0, j - l);
                    }
                    e.set(0, j, acc.scale(&Rational::new(1.into(), j.into())));
                }
            }
        }
        Ok(e)
    }

    /// Formal logarithm of a series with constant term exactly 1.
    pub fn log(&self) -> Result<Self> {
        if self.coeff(0, 0) != ClosedForm::one() {
            return Err(domain("log needs a series with constant term 1"));
        }
        let mut lg = Self::zero_capped(self.order_alpha, self.order_beta, self.total_cap);
        for i in 0..=self.order_alpha {
            for j in 0..=self.order_beta {
                if (i, j) == (0, 0) || !lg.in_range(i, j) {
                    continue;
                }
                // i·B_ij = Σ k·L_kl·B_{i−k,j−l}, solved for L_ij (B_00 = 1).
                let (d, mut acc) = if i > 0 {
                    let mut acc = self.coeff(i, j).scale(&q(i as i64));
                    for k in 1..=i {
                        for l in 0..=j {
                            if (k, l) != (i, j) {
                                acc -= lg.weighted_product(k, l, k, self, i - k, j - l);
                            }
                        }
                    }
                    (i, acc)
                } else {
                    let mut acc = self.coeff(0, j).scale(&q(j as i64));
                    for l in 1..j {
                        acc -= lg.weighted_product(0, l, l, self, 0, j - l);
                    }
                    (j, acc)
                };
                acc = acc.scale(&Rational::new(1.into(), d.into()));
                lg.set(i, j, acc);
            }
        }
        Ok(lg)
    }

    fn weighted_product(&self, k: usize, l: usize, w: usize, other: &Self, i: usize, j: usize) -> ClosedForm {
        if !self.in_range(k, l) || !other.in_range(i, j) {
            return ClosedForm::zero();
        }
        let a = self.coeff_ref(k, l);
        let b = other.coeff_ref(i, j);
        if a.is_zero() || b.is_zero() {
            return ClosedForm::zero();
        }
        (a * b).scale(&q(w as i64))
    }
}

pub fn bps_mul(a: &BivariateSeries, b: &BivariateSeries) -> Result<BivariateSeries> {
    a.mul(b)
}

pub fn bps_exp(a: &BivariateSeries) -> Result<BivariateSeries> {
    a.exp()
}
