use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::univariate::UPoly;
use super::{MultiPoly, PolyError, Var};
use crate::exact::{int_gcd, int_lcm, Integer, Rational};

/// Quotient of two polynomials with a nonzero denominator.
///
/// Normal form: numerator and denominator carry integer coefficients with no
/// common integer factor, and the denominator has a positive leading
/// coefficient. When both sides are polynomials in one common variable they
/// are additionally divided by their gcd, so univariate fractions are fully
/// reduced.
#[derive(Debug, Clone)]
pub struct PolyFraction {
    num: MultiPoly,
    den: MultiPoly,
}

impl PolyFraction {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self, PolyError> {
        if den.is_zero() {
            return Err(PolyError::ZeroDenominator);
        }
        Ok(Self::normalized(num, den))
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        Self::normalized(p, MultiPoly::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(MultiPoly::constant(c))
    }

    pub fn var(v: Var) -> Self {
        Self::from_poly(MultiPoly::var(v))
    }

    fn normalized(num: MultiPoly, den: MultiPoly) -> Self {
        if num.is_zero() {
            return Self { num, den: MultiPoly::one() };
        }
        let (mut num, mut den) = (num, den);
        if let Some(h) = num.exact_divide(&den).expect("nonzero denominator") {
            num = h;
            den = MultiPoly::one();
        } else if let Some(v) = common_variable(&num, &den) {
            let a = UPoly::from_multi(&num, v).expect("univariate numerator");
            let b = UPoly::from_multi(&den, v).expect("univariate denominator");
            let g = a.gcd(&b);
            if g.degree().unwrap_or(0) > 0 {
                num = a.div_rem(&g).0.to_multi(v);
                den = b.div_rem(&g).0.to_multi(v);
            }
        }
        // integer coefficients, jointly primitive, positive leading denominator
        let mut factor = integer_scaling(&num, &den);
        if den.leading_coefficient().is_negative() {
            factor = -factor;
        }
        Self { num: num.scale(&factor), den: den.scale(&factor) }
    }

    pub fn numer(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denom(&self) -> &MultiPoly {
        &self.den
    }

    pub fn into_parts(self) -> (MultiPoly, MultiPoly) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The polynomial value when the denominator is a constant.
    pub fn as_poly(&self) -> Option<MultiPoly> {
        let c = self.den.constant_value()?;
        Some(self.num.scale(&(Rational::one() / c)))
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self::normalized(&self.num + &other.num, self.den.clone());
        }
        Self::normalized(
            &(&self.num * &other.den) + &(&other.num * &self.den),
            &self.den * &other.den,
        )
    }

    pub fn neg(&self) -> Self {
        Self { num: -&self.num, den: self.den.clone() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::normalized(&self.num * &other.num, &self.den * &other.den)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::normalized(self.num.scale(c), self.den.clone())
    }

    pub fn div(&self, other: &Self) -> Result<Self, PolyError> {
        if other.is_zero() {
            return Err(PolyError::ZeroDenominator);
        }
        Ok(Self::normalized(&self.num * &other.den, &self.den * &other.num))
    }

    pub fn pow(&self, e: u32) -> Self {
        Self::normalized(self.num.pow(e), self.den.pow(e))
    }

    pub fn evaluate(&self, point: &HashMap<Var, Rational>) -> Result<Rational, PolyError> {
        let d = self.den.evaluate(point)?;
        if d.is_zero() {
            return Err(PolyError::ZeroDenominator);
        }
        Ok(self.num.evaluate(point)? / d)
    }

    /// Replaces `v` by `expr` in both numerator and denominator.
    pub fn substitute(&self, v: Var, expr: &PolyFraction) -> Result<Self, PolyError> {
        let n = substitute(&self.num, v, expr)?;
        let d = substitute(&self.den, v, expr)?;
        n.div(&d)
    }

    pub fn is_even_in(&self, v: Var) -> bool {
        self.num.is_even_in(v) && self.den.is_even_in(v)
    }
}

/// Smallest positive rational making every coefficient of both sides an
/// integer with joint gcd one.
fn integer_scaling(num: &MultiPoly, den: &MultiPoly) -> Rational {
    let mut den_lcm = Integer::one();
    for (_, c) in num.terms().chain(den.terms()) {
        den_lcm = int_lcm(&den_lcm, c.denom());
    }
    let lcm = Rational::from_integer(den_lcm);
    let mut num_gcd = Integer::zero();
    for (_, c) in num.terms().chain(den.terms()) {
        num_gcd = int_gcd(&num_gcd, (c * &lcm).numer());
    }
    lcm / Rational::from_integer(num_gcd)
}

fn common_variable(num: &MultiPoly, den: &MultiPoly) -> Option<Var> {
    let mut vars = num.vars();
    vars.extend(den.vars());
    (vars.len() == 1).then(|| *vars.iter().next().expect("one variable"))
}

impl PartialEq for PolyFraction {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for PolyFraction {}

impl From<MultiPoly> for PolyFraction {
    fn from(p: MultiPoly) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for PolyFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.constant_value().is_some_and(|c| c.is_one()) {
            return write!(f, "{}", self.num);
        }
        write!(f, "({})/({})", self.num, self.den)
    }
}

impl serde::Serialize for PolyFraction {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Substitutes `v <- expr` into `p`, tracking the denominator exactly.
pub fn substitute(p: &MultiPoly, v: Var, expr: &PolyFraction) -> Result<PolyFraction, PolyError> {
    let coeffs = p.coefficients_in(v);
    if coeffs.is_empty() {
        return Ok(PolyFraction::from_poly(MultiPoly::zero()));
    }
    let deg = coeffs.len() - 1;
    // sum_k c_k N^k D^(deg-k) / D^deg
    let (n, d) = (expr.numer(), expr.denom());
    let mut num_pows = vec![MultiPoly::one()];
    let mut den_pows = vec![MultiPoly::one()];
    for _ in 0..deg {
        num_pows.push(num_pows.last().expect("nonempty") * n);
        den_pows.push(den_pows.last().expect("nonempty") * d);
    }
    let mut total = MultiPoly::zero();
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        total = &total + &(&(c * &num_pows[k]) * &den_pows[deg - k]);
    }
    PolyFraction::new(total, den_pows[deg].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratio};
    use crate::multipoly::poly;

    fn frac(n: &str, d: &str) -> PolyFraction {
        PolyFraction::new(poly(n), poly(d)).unwrap()
    }

    #[test]
    fn normal_form() {
        let f = frac("2*X^2-2", "4*X-4");
        assert_eq!(f.numer(), &poly("X+1"));
        assert_eq!(f.denom(), &poly("2"));
        let g = frac("1/2*alpha", "-1/3*gamma");
        assert_eq!(g.numer(), &poly("-3*alpha"));
        assert_eq!(g.denom(), &poly("2*gamma"));
        assert_eq!(PolyFraction::new(poly("1"), MultiPoly::zero()).unwrap_err(), PolyError::ZeroDenominator);
    }

    #[test]
    fn substitute_examples() {
        let constraint = poly("mu^2-(alpha+gamma)*mu+alpha*gamma-beta^2");
        let case1 = substitute(&constraint, Var::Mu, &frac("-(alpha+gamma)", "3")).unwrap();
        assert_eq!(case1.numer(), &poly("4*alpha^2+17*alpha*gamma+4*gamma^2-9*beta^2"));
        assert_eq!(case1.denom(), &poly("9"));
        let case2 = substitute(&constraint, Var::Mu, &frac("d-alpha-gamma", "1")).unwrap();
        assert_eq!(
            case2.as_poly().unwrap(),
            poly("2*alpha^2-beta^2-3*alpha*d+d^2+5*alpha*gamma-3*d*gamma+2*gamma^2")
        );
        let one = substitute(&poly("X^2"), Var::X, &PolyFraction::constant(rat(1))).unwrap();
        assert_eq!(one.as_poly().unwrap(), poly("1"));
    }

    #[test]
    fn field_operations() {
        let a = frac("t+1", "1-t");
        let b = frac("t-1", "t+1");
        let s = a.pow(2).add(&b.pow(2));
        // 2(t^4 + 6t^2 + 1)/(t^2 - 1)^2
        assert_eq!(s, frac("2*t^4+12*t^2+2", "t^4-2*t^2+1"));
        assert!(s.is_even_in(Var::T));
        let pt = HashMap::from([(Var::T, rat(3))]);
        assert_eq!(s.evaluate(&pt).unwrap(), ratio(2 * (81 + 54 + 1), 64));
        assert_eq!(a.mul(&a.div(&a).unwrap()), a);
        let zero_den = HashMap::from([(Var::T, rat(1))]);
        assert_eq!(a.evaluate(&zero_den), Err(PolyError::ZeroDenominator));
    }
}
