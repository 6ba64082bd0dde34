//! Exact and numerical evaluation of logarithmic and polylogarithmic integrals
//! and the Euler sums they reduce to.

// `!(x > 0.0)` is how the numerics reject NaN together with out-of-range input.
#![allow(clippy::neg_cmp_op_on_partial_ord)]
#![allow(clippy::needless_range_loop)]

pub mod approx;
pub mod error;
pub mod euler_sums;
pub mod exact;
pub mod ipq;
pub mod lognm;
pub mod numerics;
pub mod report;
pub mod series;
pub mod special;
pub mod table;
pub mod verify;

pub use error::{Error, Result};
