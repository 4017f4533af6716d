use num_traits::One;

use super::{MultiPoly, PolyError};
use crate::exact::Rational;

/// Returns `h` with `p = q * h`, or `Ok(None)` when `q` does not divide `p`.
///
/// Leading-term division under the graded order: if `q | p` then the leading
/// monomial of every intermediate remainder is divisible by `LM(q)`, so the
/// first non-divisible leading term proves non-divisibility.
pub(super) fn exact_divide(p: &MultiPoly, q: &MultiPoly) -> Result<Option<MultiPoly>, PolyError> {
    let (lm_q, lc_q) = q.leading_term().ok_or(PolyError::DivisionByZero)?;
    let (lm_q, lc_q) = (lm_q.clone(), lc_q.clone());
    if let Some(c) = q.constant_value() {
        return Ok(Some(p.scale(&(Rational::one() / c))));
    }
    let mut rem = p.clone();
    let mut quot = MultiPoly::zero();
    while let Some((lm, lc)) = rem.leading_term() {
        let Some(m) = lm.div(&lm_q) else {
            return Ok(None);
        };
        let c = lc / &lc_q;
        let step = MultiPoly::term(c, m);
        rem = &rem - &(q * &step);
        quot = &quot + &step;
    }
    Ok(Some(quot))
}

#[cfg(test)]
mod tests {
    use crate::multipoly::{poly, MultiPoly, PolyError};

    #[test]
    fn divides_exactly() {
        assert_eq!(poly("X^2-1").exact_divide(&poly("X-1")).unwrap(), Some(poly("X+1")));
        assert_eq!(poly("X^2+1").exact_divide(&poly("X-1")).unwrap(), None);
        assert_eq!(poly("6*alpha").exact_divide(&poly("4")).unwrap(), Some(poly("3/2*alpha")));
        assert_eq!(poly("X").exact_divide(&MultiPoly::zero()), Err(PolyError::DivisionByZero));
    }

    #[test]
    fn multivariate_cofactor() {
        let f = poly("100*gamma^3+300*alpha*gamma^2+(300*alpha^2-126)*gamma+100*alpha^3-369*alpha");
        let lin = poly("alpha+4*gamma");
        let prod = &lin * &f;
        assert_eq!(prod.exact_divide(&lin).unwrap(), Some(f.clone()));
        assert_eq!((&prod + &poly("1")).exact_divide(&lin).unwrap(), None);
        assert_eq!(f.exact_divide(&lin).unwrap(), None);
    }
}
