//! Exact arithmetic over ℚ-linear combinations of constant monomials.

mod atom;
mod constants;
mod context;
mod form;
mod json;
mod monomial;
mod parse;

pub use atom::ConstantAtom;
pub use constants::{bernoulli, binomial, eta_factor_closed, factorial, rational_pow2, zeta_closed, zeta_value};
pub use context::{NumericContext, Provenance};
pub use form::ClosedForm;
pub use monomial::ConstantMonomial;

pub type Rational = num_rational::BigRational;

/// Integer as a rational.
pub fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// num/den as a rational.
pub fn qf(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

pub fn cf_add(a: &ClosedForm, b: &ClosedForm) -> ClosedForm {
    a + b
}

pub fn cf_mul(a: &ClosedForm, b: &ClosedForm) -> ClosedForm {
    a * b
}

pub fn cf_eval(x: &ClosedForm, ctx: &NumericContext) -> crate::Result<f64> {
    ctx.eval(x)
}
