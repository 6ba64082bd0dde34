//! Known closed forms of σ̃_{n,p} = S_{n,p}(−1).

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::euler_sums::jordan_even_j2;
use crate::exact::{eta_factor_closed, ClosedForm, ConstantAtom, NumericContext};
use crate::series::{kolbig_snp, DEFAULT_MAX_WEIGHT};

/// Where a registered closed form comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SigmaSource {
    /// Transcribed table entry.
    Table,
    /// σ̃_{n,1} = Li_{n+1}(−1).
    Polylog,
    /// σ̃_{r−1,2} from the even-order Jordan sum J₂(r).
    JordanEven,
}

/// Linear relation Σ c·σ̃ = rhs among atoms without individual closed forms.
#[derive(Debug, Clone)]
pub struct SigmaRelation {
    pub id: &'static str,
    pub lhs: Vec<(i64, (u32, u32))>,
    pub rhs: ClosedForm,
}

#[derive(Debug)]
pub struct SigmaRegistry {
    closed: BTreeMap<(u32, u32), (ClosedForm, SigmaSource)>,
    relations: Vec<SigmaRelation>,
}

/// Transcribed entries; σ̃_{1,5} carries 7/48 on ln³2·ζ(3).
const TABLE: &[((u32, u32), &str)] = &[
    ((1, 1), "-pi^2/12"),
    ((1, 2), "zeta3/8"),
    ((2, 1), "-3*zeta3/4"),
    ((1, 3), "-pi^4/90 - pi^2*ln2^2/24 + ln2^4/24 + 7/8*ln2*zeta3 + li4half"),
    (
        (2, 2),
        "-pi^4/48 - pi^2*ln2^2/12 + ln2^4/12 + 7/4*ln2*zeta3 + 2*li4half",
    ),
    ((3, 1), "-7*pi^4/720"),
    (
        (1, 4),
        "zeta5 - 7/16*ln2^2*zeta3 + pi^2*ln2^3/36 - ln2^5/30 - ln2*li4half - li5half",
    ),
    (
        (2, 3),
        "pi^2*zeta3/12 + 33/32*zeta5 - 7/8*ln2^2*zeta3 + pi^2*ln2^3/18 - ln2^5/15 - 2*ln2*li4half - 2*li5half",
    ),
    ((3, 2), "pi^2*zeta3/12 - 29/32*zeta5"),
    ((4, 1), "-15/16*zeta5"),
    (
        (1, 5),
        "-pi^6/945 - pi^2*ln2^4/96 + ln2^6/72 + 7/48*ln2^3*zeta3 + ln2^2*li4half/2 + ln2*li5half + li6half",
    ),
    ((5, 1), "-31*pi^6/30240"),
];

/// The printed σ̃_{1,5} coefficient of ln³2·ζ(3).
pub const SIGMA_1_5_PRINTED: &str =
    "-pi^6/945 - pi^2*ln2^4/96 + ln2^6/72 + 7/28*ln2^3*zeta3 + ln2^2*li4half/2 + ln2*li5half + li6half";

fn relations() -> Vec<SigmaRelation> {
    let p = |s: &str| ClosedForm::parse(s).expect("relation literal");
    vec![
        SigmaRelation {
            id: "sigma6.s15",
            lhs: vec![(1, (1, 5))],
            rhs: p(TABLE[10].1),
        },
        SigmaRelation {
            id: "sigma6.s24_s42",
            lhs: vec![(2, (2, 4)), (-1, (4, 2))],
            rhs: p("-53/15120*pi^6 - pi^2*ln2^4/24 + ln2^6/18 + 7/12*ln2^3*zeta3 - zeta3^2/2 + 2*ln2^2*li4half + 4*ln2*li5half + 4*li6half"),
        },
        SigmaRelation {
            id: "sigma6.s33_s42",
            lhs: vec![(2, (3, 3)), (-3, (4, 2))],
            rhs: p("pi^6/1512 - zeta3^2/2"),
        },
        SigmaRelation {
            id: "sigma6.s51",
            lhs: vec![(1, (5, 1))],
            rhs: p("-31*pi^6/30240"),
        },
    ]
}

impl SigmaRegistry {
    fn build() -> Self {
        let mut closed = BTreeMap::new();
        for (key, src) in TABLE {
            closed.insert(
                *key,
                (ClosedForm::parse(src).expect("table literal"), SigmaSource::Table),
            );
        }
        for n in 1..DEFAULT_MAX_WEIGHT {
            closed
                .entry((n, 1))
                .or_insert_with(|| (eta_factor_closed(n as i64 + 1), SigmaSource::Polylog));
        }
        // σ̃_{r−1,2} = 2·J₂(r) − (1 − 2^{−r})·s_{r−1,2} for even r.
        let mut r = 2;
        while r < DEFAULT_MAX_WEIGHT {
            closed
                .entry((r - 1, 2))
                .or_insert_with(|| (sigma_from_jordan(r).expect("jordan route"), SigmaSource::JordanEven));
            r += 2;
        }
        Self {
            closed,
            relations: relations(),
        }
    }

    pub fn shared() -> &'static SigmaRegistry {
        static REG: OnceLock<SigmaRegistry> = OnceLock::new();
        REG.get_or_init(Self::build)
    }

    pub fn get(&self, n: u32, p: u32) -> Option<&ClosedForm> {
        self.closed.get(&(n, p)).map(|(c, _)| c)
    }

    pub fn source(&self, n: u32, p: u32) -> Option<SigmaSource> {
        self.closed.get(&(n, p)).map(|(_, s)| *s)
    }

    pub fn entries(&self) -> impl Iterator<Item = ((u32, u32), &ClosedForm, SigmaSource)> {
        self.closed.iter().map(|(k, (c, s))| (*k, c, *s))
    }

    pub fn relations(&self) -> &[SigmaRelation] {
        &self.relations
    }

    /// Registry as JSON, keyed "sigma_n_p".
    pub fn to_json(&self) -> serde_json::Value {
        let map: serde_json::Map<String, serde_json::Value> = self
            .closed
            .iter()
            .map(|((n, p), (c, _))| (format!("sigma_{n}_{p}"), serde_json::to_value(c).expect("json")))
            .collect();
        serde_json::Value::Object(map)
    }

    /// Largest |closed − quadrature| over all entries.
    pub fn self_check(&self, ctx: &NumericContext) -> crate::Result<f64> {
        let mut worst = 0.0f64;
        for ((n, p), (c, _)) in &self.closed {
            let exact = ctx.eval(c)?;
            let num = ctx.value(&ConstantAtom::SigmaTilde(*n, *p))?;
            worst = worst.max((exact - num).abs());
        }
        Ok(worst)
    }
}

pub(crate) fn sigma_from_jordan(r: u32) -> crate::Result<ClosedForm> {
    let j2 = jordan_even_j2(r)?;
    let s = kolbig_snp(r - 1, 2)?;
    let factor = crate::exact::q(1) - crate::exact::rational_pow2(-(r as i64));
    Ok(j2.scale_int(2) - s.scale(&factor))
}

/// σ̃_{n,p}: the registered closed form, or the atom.
pub fn sigma_tilde(n: u32, p: u32) -> ClosedForm {
    match SigmaRegistry::shared().get(n, p) {
        Some(c) => c.clone(),
        None => ClosedForm::atom(ConstantAtom::SigmaTilde(n, p)),
    }
}

/// Replaces registered σ̃ atoms by their closed forms.
pub fn resolve_sigma(x: &ClosedForm) -> ClosedForm {
    let mut out = x.clone();
    for atom in x.atoms() {
        if let ConstantAtom::SigmaTilde(n, p) = atom {
            if let Some(c) = SigmaRegistry::shared().get(n, p) {
                out = out.substitute(&ConstantAtom::SigmaTilde(n, p), c);
            }
        }
    }
    out
}
