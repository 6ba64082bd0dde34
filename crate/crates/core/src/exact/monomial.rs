use std::fmt;

use super::atom::{superscript, ConstantAtom};

/// A product of atom powers, kept sorted by atom with strictly positive exponents.
/// The empty monomial is the rational unit.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConstantMonomial {
    factors: Vec<(ConstantAtom, u32)>,
}

impl ConstantMonomial {
    pub fn unit() -> Self {
        Self::default()
    }

    pub fn atom(atom: ConstantAtom) -> Self {
        Self::power(atom, 1)
    }

    pub fn power(atom: ConstantAtom, exponent: u32) -> Self {
        if exponent == 0 {
            return Self::unit();
        }
        Self {
            factors: vec![(atom, exponent)],
        }
    }

    /// Builds a monomial from arbitrary factors, merging repeats and dropping zero exponents.
    pub fn from_factors(factors: impl IntoIterator<Item = (ConstantAtom, u32)>) -> Self {
        factors
            .into_iter()
            .fold(Self::unit(), |acc, (a, e)| acc.mul(&Self::power(a, e)))
    }

    pub fn is_unit(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factors(&self) -> &[(ConstantAtom, u32)] {
        &self.factors
    }

    pub fn exponent_of(&self, atom: &ConstantAtom) -> u32 {
        self.factors.iter().find(|(a, _)| a == atom).map_or(0, |(_, e)| *e)
    }

    pub fn weight(&self) -> u32 {
        self.factors.iter().map(|(a, e)| a.weight() * e).sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut i, mut j) = (0, 0);
        while i < self.factors.len() && j < other.factors.len() {
            let (a, ea) = &self.factors[i];
            let (b, eb) = &other.factors[j];
            match a.cmp(b) {
                std::cmp::Ordering::Less => {
                    out.push((a.clone(), *ea));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((b.clone(), *eb));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a.clone(), ea + eb));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.factors[i..]);
        out.extend_from_slice(&other.factors[j..]);
        Self { factors: out }
    }

    /// Splits off every power of `atom`, returning (exponent, remainder).
    pub fn without(&self, atom: &ConstantAtom) -> (u32, Self) {
        let e = self.exponent_of(atom);
        let rest = self.factors.iter().filter(|(a, _)| a != atom).cloned().collect();
        (e, Self { factors: rest })
    }

    pub fn pretty(&self) -> String {
        self.factors
            .iter()
            .map(|(a, e)| {
                if *e == 1 {
                    a.pretty()
                } else {
                    format!("{}{}", a.pretty(), superscript(*e))
                }
            })
            .collect::<Vec<_>>()
            .join("·")
    }
}

impl fmt::Display for ConstantMonomial {
    /// Machine form, e.g. `pi^2*zeta3`; the unit prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(a, e)| {
                if *e == 1 {
                    a.name()
                } else {
                    format!("{}^{}", a.name(), e)
                }
            })
            .collect();
        f.write_str(&parts.join("*"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mul_merges_and_sorts() {
        let a = ConstantMonomial::from_factors([(ConstantAtom::ZetaOdd(3), 1), (ConstantAtom::Pi, 2)]);
        let b = ConstantMonomial::from_factors([(ConstantAtom::ZetaOdd(3), 1), (ConstantAtom::Ln2, 1)]);
        let c = a.mul(&b);
        assert_eq!(c.to_string(), "pi^2*ln2*zeta3^2");
        assert_eq!(c.weight(), 2 + 1 + 6);
    }

    #[test]
    fn zero_exponent_is_unit() {
        assert!(ConstantMonomial::power(ConstantAtom::Pi, 0).is_unit());
        assert_eq!(ConstantMonomial::unit().to_string(), "1");
    }
}
