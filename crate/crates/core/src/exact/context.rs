use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_traits::ToPrimitive;

use super::atom::ConstantAtom;
use super::form::ClosedForm;
use crate::error::{Error, Result};
use crate::numerics::{compensated_sum, zeta, EULER_GAMMA};
use crate::special::{li_half, nielsen_num};

/// How an atom value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Builtin,
    Series,
    Quadrature,
    User,
}

/// Numeric values for constant atoms.
#[derive(Debug, Clone, Default)]
pub struct NumericContext {
    values: BTreeMap<ConstantAtom, (f64, Provenance)>,
}

/// σ̃ atoms up to this weight are precomputed.
const SIGMA_PRECOMPUTE_WEIGHT: u32 = 11;

impl NumericContext {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn standard() -> Self {
        let mut ctx = Self::empty();
        ctx.insert(ConstantAtom::Pi, std::f64::consts::PI, Provenance::Builtin);
        ctx.insert(ConstantAtom::Ln2, std::f64::consts::LN_2, Provenance::Builtin);
        ctx.insert(ConstantAtom::EulerGamma, EULER_GAMMA, Provenance::Builtin);
        for n in (3..=31).step_by(2) {
            let atom = ConstantAtom::ZetaOdd(n);
            let v = compute(&atom).expect("zeta");
            ctx.insert(atom, v, Provenance::Series);
        }
        for k in 4..=16 {
            ctx.insert(ConstantAtom::LiHalf(k), li_half(k), Provenance::Series);
        }
        for w in 2..=SIGMA_PRECOMPUTE_WEIGHT {
            for n in 1..w {
                let atom = ConstantAtom::SigmaTilde(n, w - n);
                let v = compute(&atom).expect("sigma quadrature");
                ctx.insert(atom, v, Provenance::Quadrature);
            }
        }
        ctx
    }

    /// Process-wide standard context, built on first use.
    pub fn shared() -> &'static NumericContext {
        static CTX: OnceLock<NumericContext> = OnceLock::new();
        CTX.get_or_init(Self::standard)
    }

    fn insert(&mut self, atom: ConstantAtom, value: f64, provenance: Provenance) {
        self.values.insert(atom, (value, provenance));
    }

    pub fn with_value(mut self, atom: ConstantAtom, value: f64) -> Self {
        self.insert(atom, value, Provenance::User);
        self
    }

    pub fn provenance(&self, atom: &ConstantAtom) -> Option<Provenance> {
        self.values.get(atom).map(|(_, p)| *p)
    }

    pub fn atoms(&self) -> impl Iterator<Item = (&ConstantAtom, f64, Provenance)> {
        self.values.iter().map(|(a, (v, p))| (a, *v, *p))
    }

    /// Stored value, or a fresh computation for atoms of a known kind.
    pub fn value(&self, atom: &ConstantAtom) -> Result<f64> {
        match self.values.get(atom) {
            Some((v, _)) => Ok(*v),
            None => compute(atom),
        }
    }

    pub fn eval(&self, x: &ClosedForm) -> Result<f64> {
        let mut parts = Vec::with_capacity(x.len());
        for (m, c) in x.terms() {
            let mut v = c.to_f64().unwrap_or(f64::NAN);
            for (a, e) in m.factors() {
                v *= self.value(a)?.powi(*e as i32);
            }
            parts.push(v);
        }
        Ok(compensated_sum(parts))
    }
}

fn compute(atom: &ConstantAtom) -> Result<f64> {
    match atom {
        ConstantAtom::Pi => Ok(std::f64::consts::PI),
        ConstantAtom::Ln2 => Ok(std::f64::consts::LN_2),
        ConstantAtom::EulerGamma => Ok(EULER_GAMMA),
        ConstantAtom::ZetaOdd(n) => zeta(*n as f64),
        ConstantAtom::LiHalf(k) => Ok(li_half(*k)),
        ConstantAtom::SigmaTilde(n, p) => nielsen_num(*n, *p, -1.0),
        ConstantAtom::Opaque(_) => Err(Error::MissingAtom(atom.clone())),
    }
}
