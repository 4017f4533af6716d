use std::cmp::Ordering;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::exact::{format_rational, Rational, RationalInterval};

/// The real number `(p + sign * sqrt(d)) / q` with `d >= 0`, `q > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticSurd {
    p: Rational,
    negative: bool,
    d: Rational,
    q: Rational,
}

impl QuadraticSurd {
    /// `None` if `d < 0` or `q == 0`; a negative `q` is folded into the
    /// other parts.
    pub fn new(p: Rational, negative: bool, d: Rational, q: Rational) -> Option<Self> {
        if d.is_negative() || q.is_zero() {
            return None;
        }
        if q.is_negative() {
            return Some(Self { p: -p, negative: !negative, d, q: -q });
        }
        Some(Self { p, negative, d, q })
    }

    /// Exact comparison of this number with a rational.
    pub fn cmp_rational(&self, x: &Rational) -> Ordering {
        // sign of (p - q x) + s sqrt(d)
        let u = &self.p - &self.q * x;
        let plus = |u: &Rational| -> Ordering {
            if !u.is_negative() {
                if u.is_zero() && self.d.is_zero() {
                    Ordering::Equal
                } else {
                    Ordering::Greater
                }
            } else {
                self.d.cmp(&(u * u))
            }
        };
        if self.negative {
            plus(&-u).reverse()
        } else {
            plus(&u)
        }
    }

    pub fn in_interval(&self, i: &RationalInterval) -> bool {
        if i.is_empty() {
            return false;
        }
        let above_lo = match i.lo_value() {
            None => true,
            Some(a) => match self.cmp_rational(a) {
                Ordering::Greater => true,
                Ordering::Equal => i.lo().is_closed(),
                Ordering::Less => false,
            },
        };
        let below_hi = match i.hi_value() {
            None => true,
            Some(b) => match self.cmp_rational(b) {
                Ordering::Less => true,
                Ordering::Equal => i.hi().is_closed(),
                Ordering::Greater => false,
            },
        };
        above_lo && below_hi
    }
}

impl std::fmt::Display for QuadraticSurd {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = if self.negative { '-' } else { '+' };
        write!(
            f,
            "({} {} sqrt({}))/{}",
            format_rational(&self.p),
            s,
            format_rational(&self.d),
            format_rational(&self.q)
        )
    }
}

impl Serialize for QuadraticSurd {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratio};

    #[test]
    fn sqrt13_roots() {
        let lo = QuadraticSurd::new(rat(4), true, rat(13), rat(3)).unwrap();
        let hi = QuadraticSurd::new(rat(4), false, rat(13), rat(3)).unwrap();
        // (4 - 3.6055)/3 = 0.1315, (4 + 3.6055)/3 = 2.5352
        assert_eq!(lo.cmp_rational(&ratio(13, 100)), Ordering::Greater);
        assert_eq!(lo.cmp_rational(&ratio(14, 100)), Ordering::Less);
        assert_eq!(hi.cmp_rational(&ratio(253, 100)), Ordering::Greater);
        assert_eq!(hi.cmp_rational(&ratio(254, 100)), Ordering::Less);
        assert!(hi.in_interval(&"(2,3)".parse().unwrap()));
        assert!(!lo.in_interval(&"(1/2,inf)".parse().unwrap()));
        assert_eq!(hi.to_string(), "(4 + sqrt(13))/3");
    }

    #[test]
    fn perfect_squares_and_sign_folding() {
        let two = QuadraticSurd::new(rat(1), false, rat(9), rat(2)).unwrap();
        assert_eq!(two.cmp_rational(&rat(2)), Ordering::Equal);
        let neg_q = QuadraticSurd::new(rat(1), false, rat(9), rat(-2)).unwrap();
        assert_eq!(neg_q.cmp_rational(&rat(-2)), Ordering::Equal);
        assert!(QuadraticSurd::new(rat(1), false, rat(-1), rat(1)).is_none());
        assert!(two.in_interval(&"[2,3)".parse().unwrap()));
        assert!(!two.in_interval(&"(2,3)".parse().unwrap()));
    }
}
