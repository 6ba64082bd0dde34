//! Numerical oracle: quadrature, accelerated sums, digamma and Hurwitz ζ.

mod psi;
mod quad;
mod sums;
mod zeta;

pub(crate) use psi::psi_unchecked;
pub use psi::{harmonic, psi, EULER_GAMMA};
pub(crate) use quad::integrate01_unchecked;
pub use quad::{integrate01, integrate01_plain, EndpointClass, QuadratureResult};
pub use sums::{sum_alternating, sum_tail};
pub(crate) use zeta::hurwitz_unchecked;
pub use zeta::{hurwitz_zeta, zeta};

/// Neumaier-compensated sum.
pub fn compensated_sum(values: impl IntoIterator<Item = f64>) -> f64 {
    let mut sum = 0.0f64;
    let mut c = 0.0f64;
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            c += (sum - t) + v;
        } else {
            c += (v - t) + sum;
        }
        sum = t;
    }
    sum + c
}
