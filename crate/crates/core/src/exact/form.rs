use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::atom::ConstantAtom;
use super::monomial::ConstantMonomial;
use super::Rational;

/// A finite ℚ-linear combination of constant monomials, in canonical form:
/// no zero coefficients, terms ordered by monomial.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct ClosedForm {
    terms: BTreeMap<ConstantMonomial, Rational>,
}

impl ClosedForm {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::rational(Rational::one())
    }

    pub fn rational(q: Rational) -> Self {
        Self::term(q, ConstantMonomial::unit())
    }

    pub fn int(n: i64) -> Self {
        Self::rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn frac(num: i64, den: i64) -> Self {
        Self::rational(Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn atom(atom: ConstantAtom) -> Self {
        Self::term(Rational::one(), ConstantMonomial::atom(atom))
    }

    pub fn atom_pow(atom: ConstantAtom, exponent: u32) -> Self {
        Self::term(Rational::one(), ConstantMonomial::power(atom, exponent))
    }

    pub fn term(coefficient: Rational, monomial: ConstantMonomial) -> Self {
        let mut terms = BTreeMap::new();
        if !coefficient.is_zero() {
            terms.insert(monomial, coefficient);
        }
        Self { terms }
    }

    pub fn pi() -> Self {
        Self::atom(ConstantAtom::Pi)
    }

    pub fn ln2() -> Self {
        Self::atom(ConstantAtom::Ln2)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ConstantMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, monomial: &ConstantMonomial) -> Rational {
        self.terms.get(monomial).cloned().unwrap_or_else(Rational::zero)
    }

    /// The rational value if the form has no transcendental part.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&ConstantMonomial::unit()).cloned(),
            _ => None,
        }
    }

    pub fn atoms(&self) -> BTreeSet<ConstantAtom> {
        self.terms
            .keys()
            .flat_map(|m| m.factors().iter().map(|(a, _)| a.clone()))
            .collect()
    }

    /// Largest monomial weight present (0 for rationals and the zero form).
    pub fn max_weight(&self) -> u32 {
        self.terms.keys().map(|m| m.weight()).max().unwrap_or(0)
    }

    /// True when every term has the same weight `w` (the zero form is homogeneous of any weight).
    pub fn is_homogeneous(&self, w: u32) -> bool {
        self.terms.keys().all(|m| m.weight() == w)
    }

    pub fn add_term(&mut self, coefficient: Rational, monomial: ConstantMonomial) {
        if coefficient.is_zero() {
            return;
        }
        match self.terms.entry(monomial) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coefficient);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coefficient;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * q)).collect(),
        }
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(&Rational::from_integer(BigInt::from(n)))
    }

    pub fn mul_monomial(&self, q: &Rational, monomial: &ConstantMonomial) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, c)| (m.mul(monomial), c * q)).collect(),
        }
    }

    pub fn pow(&self, exponent: u32) -> Self {
        let mut out = Self::one();
        let mut base = self.clone();
        let mut e = exponent;
        while e > 0 {
            if e & 1 == 1 {
                out = &out * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        out
    }

    /// Replaces every occurrence of `atom` by `value`.
    pub fn substitute(&self, atom: &ConstantAtom, value: &ClosedForm) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let (e, rest) = m.without(atom);
            if e == 0 {
                out.add_term(c.clone(), m.clone());
            } else {
                out += &value.pow(e).mul_monomial(c, &rest);
            }
        }
        out
    }

    /// Human-readable rendering with Unicode symbols.
    pub fn pretty(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if negative {
                    out.push('−');
                }
            } else {
                out.push_str(if negative { " − " } else { " + " });
            }
            if m.is_unit() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&m.pretty());
            } else if mag.denom().is_one() {
                out.push_str(&format!("{}·{}", mag.numer(), m.pretty()));
            } else if mag.numer().is_one() {
                out.push_str(&format!("{}/{}", m.pretty(), mag.denom()));
            } else {
                out.push_str(&format!("({})·{}", mag, m.pretty()));
            }
        }
        out
    }
}

impl fmt::Display for ClosedForm {
    /// Canonical machine text, re-readable by [`ClosedForm::parse`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            if m.is_unit() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl From<Rational> for ClosedForm {
    fn from(q: Rational) -> Self {
        Self::rational(q)
    }
}

impl From<ConstantAtom> for ClosedForm {
    fn from(a: ConstantAtom) -> Self {
        Self::atom(a)
    }
}

impl AddAssign<&ClosedForm> for ClosedForm {
    fn add_assign(&mut self, rhs: &ClosedForm) {
        for (m, c) in &rhs.terms {
            self.add_term(c.clone(), m.clone());
        }
    }
}

impl AddAssign for ClosedForm {
    fn add_assign(&mut self, rhs: ClosedForm) {
        *self += &rhs;
    }
}

impl SubAssign<&ClosedForm> for ClosedForm {
    fn sub_assign(&mut self, rhs: &ClosedForm) {
        for (m, c) in &rhs.terms {
            self.add_term(-c.clone(), m.clone());
        }
    }
}

impl SubAssign for ClosedForm {
    fn sub_assign(&mut self, rhs: ClosedForm) {
        *self -= &rhs;
    }
}

impl Neg for &ClosedForm {
    type Output = ClosedForm;
    fn neg(self) -> ClosedForm {
        ClosedForm {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Neg for ClosedForm {
    type Output = ClosedForm;
    fn neg(self) -> ClosedForm {
        -&self
    }
}

impl Add<&ClosedForm> for &ClosedForm {
    type Output = ClosedForm;
    fn add(self, rhs: &ClosedForm) -> ClosedForm {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&ClosedForm> for &ClosedForm {
    type Output = ClosedForm;
    fn sub(self, rhs: &ClosedForm) -> ClosedForm {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&ClosedForm> for &ClosedForm {
    type Output = ClosedForm;
    fn mul(self, rhs: &ClosedForm) -> ClosedForm {
        let mut out = ClosedForm::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ca * cb, ma.mul(mb));
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<ClosedForm> for ClosedForm {
            type Output = ClosedForm;
            fn $method(self, rhs: ClosedForm) -> ClosedForm {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&ClosedForm> for ClosedForm {
            type Output = ClosedForm;
            fn $method(self, rhs: &ClosedForm) -> ClosedForm {
                (&self).$method(rhs)
            }
        }
        impl $tr<ClosedForm> for &ClosedForm {
            type Output = ClosedForm;
            fn $method(self, rhs: ClosedForm) -> ClosedForm {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for ClosedForm {
    fn sum<I: Iterator<Item = ClosedForm>>(iter: I) -> Self {
        iter.fold(ClosedForm::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}
