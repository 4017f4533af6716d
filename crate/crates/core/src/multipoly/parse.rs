//! Text form of polynomials.
//!
//! Grammar (whitespace-insensitive):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' digits)?
//! atom   := digits ('/' digits)? | name | '(' expr ')'
//! ```
//!
//! The printer emits terms in descending monomial order, so
//! `parse(print(p)) == p` and printing is canonical.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed};
use thiserror::Error;

use super::{Monomial, MultiPoly, Var};
use crate::exact::{format_rational, rational, Integer, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { position: self.pos, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<Integer, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected digits");
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("digit run parses"))
    }

    fn expr(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = self.unary()?;
        while self.eat(b'*') {
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<MultiPoly, ParseError> {
        if self.eat(b'-') {
            return Ok(-self.unary()?);
        }
        if self.eat(b'+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<MultiPoly, ParseError> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let at = self.pos;
            let e = self.digits()?;
            let e: u32 = match u32::try_from(&e) {
                Ok(e) if e <= u16::MAX as u32 => e,
                _ => return Err(ParseError { position: at, message: "exponent too large".into() }),
            };
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MultiPoly, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return self.error("expected ')'");
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.digits()?;
                let save = self.pos;
                if self.eat(b'/') {
                    if !matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                        self.pos = save;
                        return self.error("expected denominator digits after '/'");
                    }
                    let at = self.pos;
                    let den = self.digits()?;
                    let r = rational(num, den).map_err(|_| ParseError {
                        position: at,
                        message: "zero denominator".into(),
                    })?;
                    return Ok(MultiPoly::constant(r));
                }
                Ok(MultiPoly::constant(Rational::from_integer(num)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii name");
                match Var::from_name(name) {
                    Some(v) => Ok(MultiPoly::var(v)),
                    None => Err(ParseError {
                        position: start,
                        message: format!("unknown variable {name:?}"),
                    }),
                }
            }
            Some(c) => self.error(format!("unexpected character {:?}", c as char)),
            None => self.error("unexpected end of input"),
        }
    }
}

impl FromStr for MultiPoly {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parser = Parser { src: s.as_bytes(), pos: 0 };
        let p = parser.expr()?;
        if parser.peek().is_some() {
            return parser.error("trailing input");
        }
        Ok(p)
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (v, e) in m.vars() {
        if !first {
            f.write_str("*")?;
        }
        first = false;
        if e == 1 {
            write!(f, "{v}")?;
        } else {
            write!(f, "{v}^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                f.write_str(&format_rational(&a))?;
            } else {
                if !a.is_one() {
                    write!(f, "{}*", format_rational(&a))?;
                }
                write_monomial(f, m)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multipoly::poly;

    #[test]
    fn prints_canonically() {
        let p = poly("1 + X*X*5 - 24*X^3 + 102 * X^2 - 24*X + 4 + 5*X^4 - 5*X^2");
        assert_eq!(p.to_string(), "5*X^4 - 24*X^3 + 102*X^2 - 24*X + 5");
        assert_eq!(poly("-(alpha + 3/2*gamma)").to_string(), "-3/2*gamma - alpha");
        assert_eq!(poly("0*beta").to_string(), "0");
        assert_eq!(poly("-beta^2*alpha").to_string(), "-beta^2*alpha");
    }

    #[test]
    fn round_trip() {
        for s in ["4*alpha^2 - 9*beta^2 + 17*alpha*gamma", "-1/3*H*delta + 27*H^2 - 4", "t - c + 1/7"] {
            let p = poly(s);
            let printed = p.to_string();
            assert_eq!(printed.parse::<MultiPoly>().unwrap(), p);
            assert_eq!(printed.parse::<MultiPoly>().unwrap().to_string(), printed);
        }
    }

    #[test]
    fn reports_positions() {
        let err = "3*X + foo".parse::<MultiPoly>().unwrap_err();
        assert_eq!(err.position, 6);
        let err = "(X + 1".parse::<MultiPoly>().unwrap_err();
        assert_eq!(err.position, 6);
        let err = "X^".parse::<MultiPoly>().unwrap_err();
        assert_eq!(err.position, 2);
        let err = "1/0*X".parse::<MultiPoly>().unwrap_err();
        assert_eq!(err.position, 2);
        assert!("X X".parse::<MultiPoly>().is_err());
    }
}
