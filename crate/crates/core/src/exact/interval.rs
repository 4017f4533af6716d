use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use super::{format_rational, parse_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IntervalError {
    #[error("malformed interval {0:?}: expected (lo,hi) or [lo,hi]")]
    Syntax(String),
    #[error("bad endpoint {0:?}")]
    Endpoint(String),
    #[error("empty interval: lower endpoint exceeds upper endpoint")]
    Inverted,
    #[error("infinite endpoint cannot be closed")]
    ClosedInfinity,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Endpoint {
    NegInf,
    PosInf,
    Finite { value: Rational, closed: bool },
}

impl Endpoint {
    pub fn open(value: Rational) -> Self {
        Endpoint::Finite { value, closed: false }
    }

    pub fn closed(value: Rational) -> Self {
        Endpoint::Finite { value, closed: true }
    }

    pub fn value(&self) -> Option<&Rational> {
        match self {
            Endpoint::Finite { value, .. } => Some(value),
            _ => None,
        }
    }

    pub fn is_closed(&self) -> bool {
        matches!(self, Endpoint::Finite { closed: true, .. })
    }
}

/// Interval over the rationals with per-endpoint openness and optional
/// infinite ends.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalInterval {
    lo: Endpoint,
    hi: Endpoint,
}

impl RationalInterval {
    pub fn new(lo: Endpoint, hi: Endpoint) -> Result<Self, IntervalError> {
        if matches!(lo, Endpoint::PosInf) || matches!(hi, Endpoint::NegInf) {
            return Err(IntervalError::Inverted);
        }
        if let (Some(a), Some(b)) = (lo.value(), hi.value()) {
            if a > b {
                return Err(IntervalError::Inverted);
            }
        }
        Ok(Self { lo, hi })
    }

    pub fn real_line() -> Self {
        Self { lo: Endpoint::NegInf, hi: Endpoint::PosInf }
    }

    /// `(lo, +inf)`.
    pub fn above(lo: Rational) -> Self {
        Self { lo: Endpoint::open(lo), hi: Endpoint::PosInf }
    }

    pub fn open(lo: Rational, hi: Rational) -> Result<Self, IntervalError> {
        Self::new(Endpoint::open(lo), Endpoint::open(hi))
    }

    pub fn closed(lo: Rational, hi: Rational) -> Result<Self, IntervalError> {
        Self::new(Endpoint::closed(lo), Endpoint::closed(hi))
    }

    /// Degenerate `[x, x]`.
    pub fn point(x: Rational) -> Self {
        Self { lo: Endpoint::closed(x.clone()), hi: Endpoint::closed(x) }
    }

    pub fn lo(&self) -> &Endpoint {
        &self.lo
    }

    pub fn hi(&self) -> &Endpoint {
        &self.hi
    }

    pub fn lo_value(&self) -> Option<&Rational> {
        self.lo.value()
    }

    pub fn hi_value(&self) -> Option<&Rational> {
        self.hi.value()
    }

    pub fn is_point(&self) -> bool {
        matches!((self.lo.value(), self.hi.value()), (Some(a), Some(b)) if a == b)
    }

    pub fn is_bounded(&self) -> bool {
        self.lo.value().is_some() && self.hi.value().is_some()
    }

    /// Width for bounded intervals.
    pub fn width(&self) -> Option<Rational> {
        Some(self.hi.value()? - self.lo.value()?)
    }

    pub fn contains(&self, x: &Rational) -> bool {
        let above = match &self.lo {
            Endpoint::NegInf => true,
            Endpoint::PosInf => false,
            Endpoint::Finite { value, closed } => {
                if *closed {
                    x >= value
                } else {
                    x > value
                }
            }
        };
        let below = match &self.hi {
            Endpoint::PosInf => true,
            Endpoint::NegInf => false,
            Endpoint::Finite { value, closed } => {
                if *closed {
                    x <= value
                } else {
                    x < value
                }
            }
        };
        above && below
    }

    /// True when the interval has no points (e.g. `(a, a)`).
    pub fn is_empty(&self) -> bool {
        match (&self.lo, &self.hi) {
            (Endpoint::Finite { value: a, closed: ca }, Endpoint::Finite { value: b, closed: cb }) => {
                a == b && !(*ca && *cb)
            }
            _ => false,
        }
    }
}

impl fmt::Display for RationalInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (open, lo) = match &self.lo {
            Endpoint::NegInf => ('(', "-inf".to_string()),
            Endpoint::PosInf => ('(', "inf".to_string()),
            Endpoint::Finite { value, closed } => (if *closed { '[' } else { '(' }, format_rational(value)),
        };
        let (close, hi) = match &self.hi {
            Endpoint::PosInf => (')', "inf".to_string()),
            Endpoint::NegInf => (')', "-inf".to_string()),
            Endpoint::Finite { value, closed } => (if *closed { ']' } else { ')' }, format_rational(value)),
        };
        write!(f, "{open}{lo},{hi}{close}")
    }
}

impl FromStr for RationalInterval {
    type Err = IntervalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let text = s.trim();
        let syntax = || IntervalError::Syntax(s.to_string());
        let lo_closed = match text.chars().next() {
            Some('(') => false,
            Some('[') => true,
            _ => return Err(syntax()),
        };
        let hi_closed = match text.chars().last() {
            Some(')') => false,
            Some(']') => true,
            _ => return Err(syntax()),
        };
        if text.len() < 2 {
            return Err(syntax());
        }
        let body = &text[1..text.len() - 1];
        let (a, b) = body.split_once(',').ok_or_else(syntax)?;
        let endpoint = |tok: &str, closed: bool| -> Result<Endpoint, IntervalError> {
            match tok.trim() {
                "inf" | "+inf" => {
                    if closed {
                        Err(IntervalError::ClosedInfinity)
                    } else {
                        Ok(Endpoint::PosInf)
                    }
                }
                "-inf" => {
                    if closed {
                        Err(IntervalError::ClosedInfinity)
                    } else {
                        Ok(Endpoint::NegInf)
                    }
                }
                t => parse_rational(t)
                    .map(|value| Endpoint::Finite { value, closed })
                    .map_err(|_| IntervalError::Endpoint(t.to_string())),
            }
        };
        Self::new(endpoint(a, lo_closed)?, endpoint(b, hi_closed)?)
    }
}

impl Serialize for RationalInterval {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratio};

    #[test]
    fn parse_forms() {
        let i: RationalInterval = "(0,inf)".parse().unwrap();
        assert_eq!(i, RationalInterval::above(rat(0)));
        let j: RationalInterval = "[1/2, 3]".parse().unwrap();
        assert!(j.contains(&ratio(1, 2)) && j.contains(&rat(3)));
        let k: RationalInterval = "(-inf,inf)".parse().unwrap();
        assert_eq!(k, RationalInterval::real_line());
        assert_eq!(k.to_string(), "(-inf,inf)");
        assert_eq!(j.to_string(), "[1/2,3]");
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!("(2,1)".parse::<RationalInterval>(), Err(IntervalError::Inverted));
        assert_eq!("[-inf,1)".parse::<RationalInterval>(), Err(IntervalError::ClosedInfinity));
        assert!("0,1".parse::<RationalInterval>().is_err());
        assert!("(a,1)".parse::<RationalInterval>().is_err());
    }

    #[test]
    fn membership_respects_openness() {
        let i = RationalInterval::open(rat(0), rat(1)).unwrap();
        assert!(!i.contains(&rat(0)));
        assert!(i.contains(&ratio(1, 2)));
        assert!(!i.contains(&rat(1)));
        assert!(RationalInterval::open(rat(1), rat(1)).unwrap().is_empty());
        assert!(!RationalInterval::point(rat(1)).is_empty());
    }
}
