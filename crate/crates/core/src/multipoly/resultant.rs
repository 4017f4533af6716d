//! Resultants with respect to one variable.
//!
//! The production path is the subresultant polynomial remainder sequence
//! (Collins' algorithm in the form of Cohen, Algorithm 3.3.7), working over
//! the coefficient ring `Q[other variables]` with exact divisions only. The
//! Sylvester determinant, expanded by fraction-free Bareiss elimination, is an
//! independent route used to cross-check it.
//!
//! Sign convention: `Res(p, q) = lc(p)^deg(q) * prod_{p(a)=0} q(a)`, so
//! `Res_x(x - a, x - b) = a - b`.

use num_traits::{One, Zero};
use serde::Serialize;

use super::{MultiPoly, PolyError, Var};
use crate::exact::Rational;

/// A resultant split as `scalar * primitive` (see
/// [`MultiPoly::content_primitive`]). A vanishing resultant has both parts
/// zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Eliminant {
    #[serde(serialize_with = "crate::exact::serialize_rational")]
    pub scalar: Rational,
    pub primitive: MultiPoly,
}

impl Eliminant {
    pub fn from_value(value: MultiPoly) -> Self {
        match value.content_primitive() {
            Ok((scalar, primitive)) => Self { scalar, primitive },
            Err(_) => Self { scalar: Rational::zero(), primitive: MultiPoly::zero() },
        }
    }

    pub fn value(&self) -> MultiPoly {
        self.primitive.scale(&self.scalar)
    }

    pub fn is_zero(&self) -> bool {
        self.scalar.is_zero()
    }
}

fn check_inputs(p: &MultiPoly, q: &MultiPoly, v: Var) -> Result<(), PolyError> {
    if p.is_zero() || q.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    if p.degree_in(v) == Some(0) || q.degree_in(v) == Some(0) {
        return Err(PolyError::DegenerateDegree(v));
    }
    Ok(())
}

type Coeffs = Vec<MultiPoly>;

fn degree(a: &Coeffs) -> usize {
    a.len() - 1
}

fn lc(a: &Coeffs) -> &MultiPoly {
    a.last().expect("nonzero polynomial")
}

fn trim(mut a: Coeffs) -> Coeffs {
    while a.last().is_some_and(MultiPoly::is_zero) {
        a.pop();
    }
    a
}

/// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) * a = q * b + r`.
fn prem(a: &Coeffs, b: &Coeffs) -> Coeffs {
    let db = degree(b);
    let lb = lc(b).clone();
    let mut r = a.clone();
    let mut e = degree(a) as i64 - db as i64 + 1;
    while !r.is_empty() && degree(&r) >= db {
        let shift = degree(&r) - db;
        let lr = lc(&r).clone();
        let mut next: Coeffs = r.iter().map(|c| &lb * c).collect();
        for (j, bc) in b.iter().enumerate() {
            next[j + shift] = &next[j + shift] - &(&lr * bc);
        }
        r = trim(next);
        e -= 1;
    }
    if e > 0 {
        let f = lb.pow(e as u32);
        r = r.iter().map(|c| &f * c).collect();
    }
    r
}

fn div_exact(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    a.exact_divide(b)
        .expect("nonzero divisor")
        .expect("subresultant division is exact")
}

/// `Res_v(p, q)` via the subresultant PRS, split into scalar and primitive
/// part.
pub fn resultant(p: &MultiPoly, q: &MultiPoly, v: Var) -> Result<Eliminant, PolyError> {
    check_inputs(p, q, v)?;
    Ok(Eliminant::from_value(subresultant_value(p, q, v)))
}

fn subresultant_value(p: &MultiPoly, q: &MultiPoly, v: Var) -> MultiPoly {
    let (ca, pa) = p.content_primitive().expect("nonzero");
    let (cb, pb) = q.content_primitive().expect("nonzero");
    let mut a = pa.coefficients_in(v);
    let mut b = pb.coefficients_in(v);
    let mut t = num_traits::pow(ca, degree(&b)) * num_traits::pow(cb, degree(&a));
    let mut s = Rational::one();
    if degree(&a) < degree(&b) {
        if degree(&a) % 2 == 1 && degree(&b) % 2 == 1 {
            s = -s;
        }
        std::mem::swap(&mut a, &mut b);
    }
    let mut g = MultiPoly::one();
    let mut h = MultiPoly::one();
    loop {
        let delta = degree(&a) - degree(&b);
        if degree(&a) % 2 == 1 && degree(&b) % 2 == 1 {
            s = -s;
        }
        let r = prem(&a, &b);
        a = b;
        if r.is_empty() {
            return MultiPoly::zero();
        }
        let divisor = &g * &h.pow(delta as u32);
        b = r.iter().map(|c| div_exact(c, &divisor)).collect();
        g = lc(&a).clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => div_exact(&g.pow(delta as u32), &h.pow(delta as u32 - 1)),
        };
        if degree(&b) == 0 {
            break;
        }
    }
    let da = degree(&a) as u32;
    let lb = lc(&b).clone();
    let h = if da == 0 { h } else { div_exact(&lb.pow(da), &h.pow(da - 1)) };
    t *= s;
    h.scale(&t)
}

/// Sylvester matrix of `p` (degree m) and `q` (degree n) in `v`: n shifted
/// rows of p's coefficients, then m shifted rows of q's, leading coefficient
/// first.
pub fn sylvester_matrix(p: &MultiPoly, q: &MultiPoly, v: Var) -> Result<Vec<Vec<MultiPoly>>, PolyError> {
    check_inputs(p, q, v)?;
    let a: Coeffs = p.coefficients_in(v).into_iter().rev().collect();
    let b: Coeffs = q.coefficients_in(v).into_iter().rev().collect();
    let (m, n) = (a.len() - 1, b.len() - 1);
    let size = m + n;
    let mut rows = vec![vec![MultiPoly::zero(); size]; size];
    for i in 0..n {
        for (j, c) in a.iter().enumerate() {
            rows[i][i + j] = c.clone();
        }
    }
    for i in 0..m {
        for (j, c) in b.iter().enumerate() {
            rows[n + i][i + j] = c.clone();
        }
    }
    Ok(rows)
}

/// Fraction-free determinant (Bareiss) over `Q[alphabet]`, with row pivoting.
pub fn bareiss_determinant(mut m: Vec<Vec<MultiPoly>>) -> MultiPoly {
    let n = m.len();
    if n == 0 {
        return MultiPoly::one();
    }
    let mut negate = false;
    let mut prev = MultiPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(pivot) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return MultiPoly::zero();
            };
            m.swap(k, pivot);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = div_exact(&num, &prev);
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// `Res_v(p, q)` as the Sylvester determinant. Independent of
/// [`resultant`]; the two must agree exactly.
pub fn sylvester_resultant(p: &MultiPoly, q: &MultiPoly, v: Var) -> Result<Eliminant, PolyError> {
    let m = sylvester_matrix(p, q, v)?;
    Ok(Eliminant::from_value(bareiss_determinant(m)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::multipoly::poly;

    #[test]
    fn linear_pair() {
        let r = resultant(&poly("gamma - alpha"), &poly("gamma - d"), Var::Gamma).unwrap();
        assert_eq!(r.value(), poly("alpha - d"));
        let s = sylvester_resultant(&poly("gamma - alpha"), &poly("gamma - d"), Var::Gamma).unwrap();
        assert_eq!(s, r);
    }

    #[test]
    fn sqrt2_sqrt3() {
        // frozen from the 4x4 Sylvester determinant expanded by hand:
        // prod over x = +-sqrt2 of (x^2 - 3) = (-1)(-1) = 1
        let r = resultant(&poly("X^2-2"), &poly("X^2-3"), Var::X).unwrap();
        assert_eq!(r.value(), poly("1"));
        let s = sylvester_resultant(&poly("X^2-2"), &poly("X^2-3"), Var::X).unwrap();
        assert_eq!(s.value(), poly("1"));
    }

    #[test]
    fn rejects_degenerate_inputs() {
        assert_eq!(
            resultant(&poly("X"), &MultiPoly::zero(), Var::X),
            Err(PolyError::ZeroPolynomial)
        );
        assert_eq!(
            resultant(&poly("X"), &poly("alpha"), Var::X),
            Err(PolyError::DegenerateDegree(Var::X))
        );
    }

    #[test]
    fn shared_root_vanishes() {
        let r = resultant(&poly("(X-1)*(X+2)"), &poly("(X-1)*(X^2+7)"), Var::X).unwrap();
        assert!(r.is_zero());
        let s = sylvester_resultant(&poly("(X-1)*(X+2)"), &poly("(X-1)*(X^2+7)"), Var::X).unwrap();
        assert!(s.is_zero());
    }

    #[test]
    fn degree_gap_cases() {
        // deg difference of 2 exercises the h update with delta >= 2
        let p = poly("X^5 + alpha*X^2 + 1");
        let q = poly("X^2 - alpha");
        let r = resultant(&p, &q, Var::X).unwrap();
        let s = sylvester_resultant(&p, &q, Var::X).unwrap();
        assert_eq!(r, s);
        // Res(X^2 - a, p) = p(sqrt a) p(-sqrt a) = (a^2 + 1)^2 - a^5
        let swapped = resultant(&q, &p, Var::X).unwrap();
        assert_eq!(swapped.value(), poly("(alpha^2+1)^2 - alpha^5"));
        assert_eq!(r.value(), swapped.value());
    }

    #[test]
    fn bareiss_small() {
        let m = vec![
            vec![poly("0"), poly("1"), poly("2")],
            vec![poly("3"), poly("4"), poly("5")],
            vec![poly("6"), poly("7"), poly("9")],
        ];
        assert_eq!(bareiss_determinant(m), MultiPoly::constant(rat(-3)));
    }
}
