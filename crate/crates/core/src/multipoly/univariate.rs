//! Dense univariate polynomials over the rationals.
//!
//! Used where a polynomial is known to involve a single variable: Euclidean
//! gcds for reducing rational functions, Sturm chains, and squarefree
//! decomposition.

use num_traits::{One, Signed, Zero};

use super::{Monomial, MultiPoly, PolyError, Var};
use crate::exact::{Integer, Rational};

/// Coefficients lowest degree first; no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UPoly {
    coeffs: Vec<Rational>,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(Integer::from(c))).collect())
    }

    /// Reads a polynomial in `v` alone (constants allowed).
    pub fn from_multi(p: &MultiPoly, v: Var) -> Result<Self, PolyError> {
        if let Some(w) = p.vars().into_iter().find(|&w| w != v) {
            return Err(PolyError::NotUnivariate { expected: v, found: w });
        }
        let deg = p.degree_in(v).unwrap_or(0) as usize;
        let mut coeffs = vec![Rational::zero(); deg + 1];
        for (m, c) in p.terms() {
            coeffs[m.exp(v) as usize] = c.clone();
        }
        Ok(Self::new(coeffs))
    }

    pub fn to_multi(&self, v: Var) -> MultiPoly {
        MultiPoly::from_terms(
            self.coeffs.iter().enumerate().map(|(k, c)| (Monomial::var(v, k as u16), c.clone())),
        )
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Sign of the value at `x`: -1, 0 or 1.
    pub fn sign_at(&self, x: &Rational) -> i8 {
        sign(&self.eval(x))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(Integer::from(k)))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|a| -a).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        self.scale(&(Rational::one() / self.leading()))
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lead = divisor.leading();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &lead;
            if !c.is_zero() {
                for (j, b) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * b;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `p / gcd(p, p')`, monic.
    pub fn squarefree_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// Yun's algorithm: returns `(k, s_k)` with `p = lc * prod s_k^k`, each
    /// `s_k` monic, squarefree, pairwise coprime; constant factors omitted.
    pub fn squarefree_decomposition(&self) -> Vec<(usize, Self)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let d = self.derivative();
        let a0 = self.gcd(&d);
        let mut b = self.div_rem(&a0).0;
        let mut c = d.div_rem(&a0).0;
        let mut dd = c.sub(&b.derivative());
        let mut k = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&dd);
            b = b.div_rem(&a).0;
            c = dd.div_rem(&a).0;
            dd = c.sub(&b.derivative());
            if a.degree().unwrap_or(0) > 0 {
                out.push((k, a));
            }
            k += 1;
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            (0..n)
                .map(|i| {
                    let a = self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero);
                    let b = other.coeffs.get(i).cloned().unwrap_or_else(Rational::zero);
                    a - b
                })
                .collect(),
        )
    }
}

pub fn sign(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Gcd of two polynomials in `v` alone, as a monic `MultiPoly`.
pub fn univariate_gcd(p: &MultiPoly, q: &MultiPoly, v: Var) -> Result<MultiPoly, PolyError> {
    let a = UPoly::from_multi(p, v)?;
    let b = UPoly::from_multi(q, v)?;
    Ok(a.gcd(&b).to_multi(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::multipoly::poly;

    #[test]
    fn gcd_and_squarefree() {
        let p = UPoly::from_multi(&poly("(X-1)^2*(X-3)"), Var::X).unwrap();
        assert_eq!(p.squarefree_part().to_multi(Var::X), poly("(X-1)*(X-3)"));
        let dec = p.squarefree_decomposition();
        assert_eq!(dec.len(), 2);
        assert_eq!(dec[0], (1, UPoly::from_ints(&[-3, 1])));
        assert_eq!(dec[1], (2, UPoly::from_ints(&[-1, 1])));
        let g = univariate_gcd(&poly("X^2-1"), &poly("X^2+2*X+1"), Var::X).unwrap();
        assert_eq!(g, poly("X+1"));
    }

    #[test]
    fn division_identity() {
        let a = UPoly::from_ints(&[5, -24, 102, -24, 5]);
        let b = UPoly::from_ints(&[51, -24, 5]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q.mul(&b).sub(&a.sub(&r)), UPoly::zero());
        assert!(r.degree().unwrap_or(0) < 2);
        assert_eq!(a.eval(&rat(1)), rat(64));
    }

    #[test]
    fn rejects_other_variables() {
        assert!(UPoly::from_multi(&poly("X + t"), Var::X).is_err());
        assert_eq!(UPoly::from_multi(&poly("7"), Var::X).unwrap(), UPoly::from_ints(&[7]));
    }
}
