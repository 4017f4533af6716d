use num_traits::{Signed, Zero};

use crate::exact::{Endpoint, Rational, RationalInterval};
use crate::multipoly::univariate::{sign, UPoly};
use crate::multipoly::{MultiPoly, Var};

/// Where to read the sign of a chain element.
#[derive(Debug, Clone, Copy)]
enum At<'a> {
    NegInf,
    PosInf,
    Point(&'a Rational),
}

/// Sturm chain of the squarefree part of a univariate polynomial.
///
/// `chain[0]` is the squarefree part `s`, `chain[1] = s'`, and each later
/// entry is the negated remainder of the two before it. The last entry is a
/// nonzero constant because `gcd(s, s') = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SturmChain {
    var: Var,
    chain: Vec<UPoly>,
}

impl SturmChain {
    pub fn new(p: &UPoly, var: Var) -> Self {
        let s = p.squarefree_part();
        let mut chain = vec![s.clone()];
        if s.degree().unwrap_or(0) > 0 {
            chain.push(s.derivative());
            loop {
                let n = chain.len();
                let r = chain[n - 2].rem(&chain[n - 1]);
                if r.is_zero() {
                    break;
                }
                chain.push(r.neg());
            }
        }
        Self { var, chain }
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn squarefree(&self) -> &UPoly {
        &self.chain[0]
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    pub fn polys(&self) -> Vec<MultiPoly> {
        self.chain.iter().map(|p| p.to_multi(self.var)).collect()
    }

    fn variations(&self, at: At<'_>) -> usize {
        let signs = self.chain.iter().map(|p| match at {
            At::Point(x) => p.sign_at(x),
            At::PosInf => sign(&p.leading()),
            At::NegInf => {
                let s = sign(&p.leading());
                if p.degree().unwrap_or(0) % 2 == 1 {
                    -s
                } else {
                    s
                }
            }
        });
        let mut last = 0i8;
        let mut count = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Distinct real roots strictly between the two endpoint positions
    /// (finite endpoints treated as open).
    fn count_open(&self, lo: At<'_>, hi: At<'_>) -> usize {
        let s = self.squarefree();
        // V(a) - V(b) counts roots in (a, b]
        let total = self.variations(lo) - self.variations(hi);
        match hi {
            At::Point(b) if s.sign_at(b) == 0 => total - 1,
            _ => total,
        }
    }

    /// Distinct real roots in `(lo, hi)`, both finite.
    pub fn count_between(&self, lo: &Rational, hi: &Rational) -> usize {
        if lo >= hi {
            return 0;
        }
        self.count_open(At::Point(lo), At::Point(hi))
    }

    /// Distinct real roots in an arbitrary interval.
    pub fn count_in(&self, interval: &RationalInterval) -> usize {
        if interval.is_empty() {
            return 0;
        }
        let s = self.squarefree();
        if s.degree().unwrap_or(0) == 0 {
            return 0;
        }
        if interval.is_point() {
            let x = interval.lo_value().expect("finite point");
            return usize::from(s.sign_at(x) == 0);
        }
        let lo = match interval.lo() {
            Endpoint::Finite { value, .. } => At::Point(value),
            _ => At::NegInf,
        };
        let hi = match interval.hi() {
            Endpoint::Finite { value, .. } => At::Point(value),
            _ => At::PosInf,
        };
        let mut n = self.count_open(lo, hi);
        for e in [interval.lo(), interval.hi()] {
            if let Endpoint::Finite { value, closed: true } = e {
                if s.sign_at(value) == 0 {
                    n += 1;
                }
            }
        }
        n
    }
}

/// Cauchy bound: every real root lies strictly inside `(-B, B)`.
pub fn cauchy_bound(p: &UPoly) -> Rational {
    let lead = p.leading().abs();
    let mut m = Rational::zero();
    for c in p.coeffs().iter().take(p.coeffs().len().saturating_sub(1)) {
        let r = c.abs() / &lead;
        if r > m {
            m = r;
        }
    }
    m + Rational::from_integer(1.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, RationalInterval};

    fn chain(coeffs: &[i64]) -> SturmChain {
        SturmChain::new(&UPoly::from_ints(coeffs), Var::X)
    }

    #[test]
    fn chain_shape() {
        let c = chain(&[-2, 0, 1]);
        assert_eq!(c.len(), 3);
        assert_eq!(c.polys()[1].to_string(), "2*X");
        assert!(c.polys().last().unwrap().is_constant());
    }

    #[test]
    fn counts_with_endpoints() {
        let c = chain(&[0, -1, 0, 1]); // X^3 - X: roots -1, 0, 1
        assert_eq!(c.count_in(&RationalInterval::real_line()), 3);
        assert_eq!(c.count_in(&"(0,1)".parse().unwrap()), 0);
        assert_eq!(c.count_in(&"[0,1]".parse().unwrap()), 2);
        assert_eq!(c.count_in(&"(0,1]".parse().unwrap()), 1);
        assert_eq!(c.count_in(&"(-1,inf)".parse().unwrap()), 2);
        assert_eq!(c.count_in(&"(-inf,-1]".parse().unwrap()), 1);
        assert_eq!(c.count_in(&RationalInterval::point(rat(0))), 1);
        assert_eq!(c.count_between(&rat(-2), &rat(2)), 3);
    }

    #[test]
    fn bound_contains_roots() {
        let p = UPoly::from_ints(&[-6, 11, -6, 1]); // roots 1, 2, 3
        let b = cauchy_bound(&p);
        assert!(b > rat(3));
        let c = SturmChain::new(&p, Var::X);
        assert_eq!(c.count_between(&-b.clone(), &b), 3);
    }
}
