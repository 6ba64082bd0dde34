//! Polylogarithms, Nielsen functions, depth-2 multiple polylogarithms and the σ̃ registry.

mod moment;
mod mpl2;
mod nielsen;
mod polylog;
mod sigma;

pub use moment::{li_moment, LiMoment};
pub(crate) use moment::{li_moment_plus, zeta_table};
pub use mpl2::mpl2;
pub use nielsen::nielsen_num;
pub(crate) use polylog::polylog_c;
#[allow(unused_imports)]
pub(crate) use polylog::zeta_int;
pub use polylog::{li_half, polylog};
pub use sigma::{resolve_sigma, sigma_tilde, SigmaRegistry, SigmaRelation, SigmaSource, SIGMA_1_5_PRINTED};
