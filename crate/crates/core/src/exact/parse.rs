//! Text syntax for closed forms.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/') unary)*
//! unary   := '-' unary | power
//! power   := primary ('^' integer)?
//! primary := integer | atom | '(' expr ')'
//! ```
//! Atoms: `pi`, `ln2`, `gamma`, `zetaN` (even N expands to a π power), `liNhalf`,
//! `sigma_N_P`, `{name}`. Division is only by nonzero rationals.

use num_bigint::BigInt;
use num_traits::Zero;

use super::atom::ConstantAtom;
use super::constants::zeta_closed;
use super::form::ClosedForm;
use super::Rational;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Op(char),
}

fn lex(src: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push(Tok::Int(s.parse().expect("digits")));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if c == '{' {
            let start = i;
            while i < chars.len() && chars[i] != '}' {
                i += 1;
            }
            if i == chars.len() {
                return Err(Error::Parse("unterminated '{'".into()));
            }
            i += 1;
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else if c == '−' {
            out.push(Tok::Op('-'));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character {c:?}")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<ClosedForm> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc += self.term()?;
            } else if self.eat('-') {
                acc -= self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<ClosedForm> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.eat('/') {
                let d = self.unary()?;
                let q = d
                    .as_rational()
                    .filter(|q| !q.is_zero())
                    .ok_or_else(|| Error::Parse(format!("division by non-rational or zero {d}")))?;
                acc = acc.scale(&(Rational::from_integer(1.into()) / q));
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<ClosedForm> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<ClosedForm> {
        let base = self.primary()?;
        if self.eat('^') {
            match self.toks.get(self.pos).cloned() {
                Some(Tok::Int(n)) => {
                    self.pos += 1;
                    let e: u32 = n.try_into().map_err(|_| Error::Parse("exponent too large".into()))?;
                    Ok(base.pow(e))
                }
                other => Err(Error::Parse(format!("expected integer exponent, found {other:?}"))),
            }
        } else {
            Ok(base)
        }
    }

    fn primary(&mut self) -> Result<ClosedForm> {
        let tok = self
            .toks
            .get(self.pos)
            .cloned()
            .ok_or_else(|| Error::Parse("unexpected end of input".into()))?;
        self.pos += 1;
        match tok {
            Tok::Int(n) => Ok(ClosedForm::rational(Rational::from_integer(n))),
            Tok::Op('(') => {
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Parse("missing ')'".into()));
                }
                Ok(inner)
            }
            Tok::Ident(name) => atom_from_ident(&name),
            Tok::Op(c) => Err(Error::Parse(format!("unexpected operator {c:?}"))),
        }
    }
}

fn atom_from_ident(name: &str) -> Result<ClosedForm> {
    if let Some(atom) = ConstantAtom::from_name(name) {
        return Ok(ClosedForm::atom(atom));
    }
    if let Some(n) = name.strip_prefix("zeta").and_then(|r| r.parse::<u32>().ok()) {
        if n >= 2 && n % 2 == 0 {
            return zeta_closed(n);
        }
    }
    Err(Error::Parse(format!("unknown atom {name:?}")))
}

impl ClosedForm {
    pub fn parse(src: &str) -> Result<Self> {
        let toks = lex(src)?;
        if toks.is_empty() {
            return Err(Error::Parse("empty expression".into()));
        }
        let mut p = Parser { toks, pos: 0 };
        let out = p.expr()?;
        if p.pos != p.toks.len() {
            return Err(Error::Parse(format!("trailing input at token {}", p.pos)));
        }
        Ok(out)
    }
}

impl std::str::FromStr for ClosedForm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_prints() {
        let f = ClosedForm::parse("(3/2 - 2*ln2/3)*pi^2*ln2^2 - 7/8*zeta3 + zeta4").unwrap();
        assert_eq!(f.to_string(), "3/2*pi^2*ln2^2 - 2/3*pi^2*ln2^3 + 1/90*pi^4 - 7/8*zeta3");
        assert_eq!(ClosedForm::parse(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(ClosedForm::parse("pi/ln2").is_err());
        assert!(ClosedForm::parse("1/0").is_err());
        assert!(ClosedForm::parse("zeta1").is_err());
        assert!(ClosedForm::parse("(pi").is_err());
        assert!(ClosedForm::parse("").is_err());
    }

    #[test]
    fn opaque_and_sigma() {
        let f = ClosedForm::parse("2*{c} - sigma_2_4").unwrap();
        assert_eq!(f.to_string(), "-sigma_2_4 + 2*{c}");
    }
}
