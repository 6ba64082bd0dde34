//! `{"terms":[{"monomial":[["atom",exp],…],"num":"…","den":"…"},…]}`

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::atom::ConstantAtom;
use super::form::ClosedForm;
use super::monomial::ConstantMonomial;
use super::Rational;
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
struct TermRepr {
    monomial: Vec<(String, u32)>,
    num: String,
    den: String,
}

#[derive(Serialize, Deserialize)]
struct FormRepr {
    terms: Vec<TermRepr>,
}

impl ClosedForm {
    fn to_repr(&self) -> FormRepr {
        FormRepr {
            terms: self
                .terms()
                .map(|(m, c)| TermRepr {
                    monomial: m.factors().iter().map(|(a, e)| (a.name(), *e)).collect(),
                    num: c.numer().to_string(),
                    den: c.denom().to_string(),
                })
                .collect(),
        }
    }

    fn from_repr(repr: FormRepr) -> Result<Self> {
        let mut out = ClosedForm::zero();
        for t in repr.terms {
            let mut factors = Vec::with_capacity(t.monomial.len());
            for (name, e) in t.monomial {
                let atom =
                    ConstantAtom::from_name(&name).ok_or_else(|| Error::Parse(format!("unknown atom {name:?}")))?;
                factors.push((atom, e));
            }
            let num: BigInt = t
                .num
                .parse()
                .map_err(|_| Error::Parse(format!("bad numerator {:?}", t.num)))?;
            let den: BigInt = t
                .den
                .parse()
                .map_err(|_| Error::Parse(format!("bad denominator {:?}", t.den)))?;
            if den == BigInt::from(0) {
                return Err(Error::Parse("zero denominator".into()));
            }
            out.add_term(Rational::new(num, den), ConstantMonomial::from_factors(factors));
        }
        Ok(out)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_repr()).expect("serializable")
    }

    pub fn from_json(src: &str) -> Result<Self> {
        let repr: FormRepr = serde_json::from_str(src).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_repr(repr)
    }
}

impl Serialize for ClosedForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_repr().serialize(s)
    }
}

impl<'de> Deserialize<'de> for ClosedForm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = FormRepr::deserialize(d)?;
        ClosedForm::from_repr(repr).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let f = ClosedForm::parse("24 - 4/3*pi^2 - 1/90*pi^4 - 8*zeta3 + 7/48*ln2^3*zeta3 - sigma_2_4").unwrap();
        let s = f.to_json();
        assert_eq!(ClosedForm::from_json(&s).unwrap(), f);
        assert!(s.starts_with("{\"terms\":[{\"monomial\":[],\"num\":\"24\",\"den\":\"1\"}"));
    }

    #[test]
    fn rejects_unknown_atom() {
        assert!(ClosedForm::from_json(r#"{"terms":[{"monomial":[["zeta2",1]],"num":"1","den":"1"}]}"#).is_err());
    }
}
