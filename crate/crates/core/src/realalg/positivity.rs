use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::isolate::{as_univariate, isolate_roots};
use super::sturm::SturmChain;
use super::RealAlgError;
use crate::exact::{midpoint, rat, serialize_rational, Rational, RationalInterval};
use crate::multipoly::{Monomial, MultiPoly, Var};

/// Exact witness that a polynomial is positive (or, for forms, nonnegative).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum PositivityCertificate {
    /// `aX^2 + bX + c` with `a > 0` and `b^2 - 4ac < 0`.
    NegativeDiscriminant {
        polynomial: MultiPoly,
        #[serde(serialize_with = "serialize_rational")]
        leading: Rational,
        #[serde(serialize_with = "serialize_rational")]
        discriminant: Rational,
    },
    /// No root in `interval` and a positive value at `sample`.
    NoRealRoots {
        polynomial: MultiPoly,
        interval: RationalInterval,
        #[serde(serialize_with = "serialize_rational")]
        sample: Rational,
        #[serde(serialize_with = "serialize_rational")]
        value: Rational,
    },
    /// `a x^2 + b x y + c y^2 = a (x + shift y)^2 + residual y^2` with
    /// `a > 0` and `residual >= 0`.
    SquareDecomposition {
        form: MultiPoly,
        #[serde(skip)]
        vars: (Var, Var),
        #[serde(serialize_with = "serialize_rational")]
        a: Rational,
        #[serde(serialize_with = "serialize_rational")]
        shift: Rational,
        #[serde(serialize_with = "serialize_rational")]
        residual: Rational,
        decomposition: MultiPoly,
        strict: bool,
    },
}

impl PositivityCertificate {
    /// Re-validates the witness from scratch.
    pub fn recheck(&self) -> bool {
        match self {
            Self::NegativeDiscriminant { polynomial, leading, discriminant } => {
                let Ok((u, _)) = as_univariate(polynomial, Var::X) else { return false };
                if u.degree() != Some(2) {
                    return false;
                }
                let c = u.coeffs();
                let disc = &c[1] * &c[1] - rat(4) * &c[2] * &c[0];
                c[2] == *leading && disc == *discriminant && leading.is_positive() && disc.is_negative()
            }
            Self::NoRealRoots { polynomial, interval, sample, value } => {
                let Ok((u, v)) = as_univariate(polynomial, Var::X) else { return false };
                SturmChain::new(&u, v).count_in(interval) == 0
                    && interval.contains(sample)
                    && u.eval(sample) == *value
                    && value.is_positive()
            }
            Self::SquareDecomposition { form, vars, a, shift, residual, decomposition, .. } => {
                a.is_positive()
                    && !residual.is_negative()
                    && *decomposition == square_form(*vars, a, shift, residual)
                    && decomposition == form
            }
        }
    }
}

/// Why positivity could not be certified.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Refutation {
    /// The polynomial has a root in the interval.
    RootInInterval { root: RationalInterval },
    /// A sample point where the value is not positive.
    NonPositiveSample {
        #[serde(serialize_with = "serialize_rational")]
        at: Rational,
        #[serde(serialize_with = "serialize_rational")]
        value: Rational,
    },
    /// The quadratic form takes negative values.
    Indefinite {
        #[serde(serialize_with = "serialize_rational")]
        discriminant: Rational,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Positivity {
    Certified(PositivityCertificate),
    Refuted(Refutation),
}

impl Positivity {
    pub fn certificate(&self) -> Option<&PositivityCertificate> {
        match self {
            Positivity::Certified(c) => Some(c),
            Positivity::Refuted(_) => None,
        }
    }

    pub fn is_certified(&self) -> bool {
        matches!(self, Positivity::Certified(_))
    }
}

fn sample_point(interval: &RationalInterval) -> Rational {
    match (interval.lo_value(), interval.hi_value()) {
        (Some(a), Some(b)) => midpoint(a, b),
        (Some(a), None) => a + Rational::one(),
        (None, Some(b)) => b - Rational::one(),
        (None, None) => Rational::zero(),
    }
}

/// Certifies `p > 0` on `interval`, or explains why not.
pub fn certify_positive(p: &MultiPoly, interval: &RationalInterval) -> Result<Positivity, RealAlgError> {
    let (u, v) = as_univariate(p, Var::X)?;
    if interval.is_empty() {
        return Err(RealAlgError::EmptyInterval);
    }
    if u.degree() == Some(2) {
        let c = u.coeffs();
        let disc = &c[1] * &c[1] - rat(4) * &c[2] * &c[0];
        if c[2].is_positive() && disc.is_negative() {
            return Ok(Positivity::Certified(PositivityCertificate::NegativeDiscriminant {
                polynomial: p.clone(),
                leading: c[2].clone(),
                discriminant: disc,
            }));
        }
    }
    if SturmChain::new(&u, v).count_in(interval) > 0 {
        let iso = isolate_roots(p, interval)?;
        return Ok(Positivity::Refuted(Refutation::RootInInterval { root: iso.roots[0].interval.clone() }));
    }
    let sample = sample_point(interval);
    let value = u.eval(&sample);
    if !value.is_positive() {
        return Ok(Positivity::Refuted(Refutation::NonPositiveSample { at: sample, value }));
    }
    Ok(Positivity::Certified(PositivityCertificate::NoRealRoots {
        polynomial: p.clone(),
        interval: interval.clone(),
        sample,
        value,
    }))
}

fn square_form(vars: (Var, Var), a: &Rational, shift: &Rational, residual: &Rational) -> MultiPoly {
    let (x, y) = (MultiPoly::var(vars.0), MultiPoly::var(vars.1));
    let inner = &x + &y.scale(shift);
    inner.pow(2).scale(a) + y.pow(2).scale(residual)
}

/// Positive-semidefiniteness of the binary form `a x^2 + b x y + c y^2`,
/// certified by completing the square in `x`. Forms with no `x^2` term are
/// handled by swapping the roles of `x` and `y`.
pub fn quadratic_form_definite(q: &MultiPoly, x: Var, y: Var) -> Result<Positivity, RealAlgError> {
    if q.is_zero() {
        return Err(RealAlgError::ZeroPolynomial);
    }
    let homogeneous = q.terms().all(|(m, _)| {
        m.degree() == 2 && m.exp(x) + m.exp(y) == 2
    });
    if !homogeneous {
        return Err(RealAlgError::NotBinaryQuadraticForm);
    }
    let coef = |i: u16, j: u16| q.coefficient(&Monomial::var(x, i).mul(&Monomial::var(y, j)));
    let (a, b, c) = (coef(2, 0), coef(1, 1), coef(0, 2));
    let disc = &b * &b - rat(4) * &a * &c;
    if disc.is_positive() || a.is_negative() || c.is_negative() {
        return Ok(Positivity::Refuted(Refutation::Indefinite { discriminant: disc }));
    }
    let (vars, a, b, c) = if a.is_zero() { ((y, x), c, b, a) } else { ((x, y), a, b, c) };
    // here a > 0 (if both squares vanish then b = 0 too and q = 0)
    let shift = &b / (rat(2) * &a);
    let residual = (rat(4) * &a * &c - &b * &b) / (rat(4) * &a);
    let decomposition = square_form(vars, &a, &shift, &residual);
    Ok(Positivity::Certified(PositivityCertificate::SquareDecomposition {
        form: q.clone(),
        vars,
        strict: residual.is_positive(),
        a,
        shift,
        residual,
        decomposition,
    }))
}
