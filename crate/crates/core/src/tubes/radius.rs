use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use super::{admissible_roots, biharmonic_polynomial, mean_curvature_nonvanishing, spectrum, Family, TubeError};
use crate::exact::{midpoint, rat, ratio, serialize_rational, to_decimal, Rational, RationalInterval};
use crate::multipoly::{MultiPoly, Var};
use crate::realalg::QuadraticSurd;

/// An identity between two integer polynomial expressions in `(n, m)`,
/// established by evaluation on a grid large enough for the degrees
/// involved (a polynomial of degree at most `k` in each variable that
/// vanishes on `{0..k}^2` is zero).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub lhs: &'static str,
    pub rhs: &'static str,
    pub grid: usize,
    pub holds: bool,
}

fn identity_on_grid(
    lhs: &'static str,
    rhs: &'static str,
    degree: i64,
    f: impl Fn(i64, i64) -> i64,
    g: impl Fn(i64, i64) -> i64,
) -> IdentityCheck {
    let mut grid = 0;
    let mut holds = true;
    for n in 0..=degree {
        for m in 0..=degree {
            grid += 1;
            holds &= f(n, m) == g(n, m);
        }
    }
    IdentityCheck { lhs, rhs, grid, holds }
}

/// `(n+2)^2 - (2n-2m-1)(2m+1) = (2m-n+1)^2 + 4(n+1)` and its `m = 0` case
/// `(1-n)^2 + 4(n+1) = n^2 + 2n + 5`.
pub fn discriminant_identity() -> [IdentityCheck; 2] {
    [
        identity_on_grid(
            "(n+2)^2 - (2n-2m-1)(2m+1)",
            "(2m-n+1)^2 + 4(n+1)",
            2,
            |n, m| (n + 2).pow(2) - (2 * n - 2 * m - 1) * (2 * m + 1),
            |n, m| (2 * m - n + 1).pow(2) + 4 * (n + 1),
        ),
        identity_on_grid("(1-n)^2 + 4(n+1)", "n^2 + 2n + 5", 2, |n, _| (1 - n).pow(2) + 4 * (n + 1), |n, _| {
            n * n + 2 * n + 5
        }),
    ]
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RadiusVerdict {
    pub n: u32,
    pub m: u32,
    pub condition: MultiPoly,
    pub expected: MultiPoly,
    pub condition_matches: bool,
    /// Quarter discriminant of the computed condition.
    #[serde(serialize_with = "serialize_rational")]
    pub discriminant: Rational,
    /// `(2m-n+1)^2 + 4(n+1)`.
    #[serde(serialize_with = "serialize_rational")]
    pub radicand: Rational,
    pub radicand_matches: bool,
    /// Closed-form roots `(n+2 -+ sqrt(radicand))/(2n-2m-1)` and the
    /// isolating intervals they were located in.
    pub roots: Vec<(QuadraticSurd, RationalInterval)>,
    pub roots_match: bool,
    pub mean_curvature_nonzero: bool,
}

impl RadiusVerdict {
    pub fn holds(&self) -> bool {
        self.condition_matches && self.radicand_matches && self.roots_match && self.mean_curvature_nonzero
    }
}

/// Checks the type-A condition against `(2n-2m-1)X^2 - 2(n+2)X + (2m+1)` and
/// its roots against the closed-form radii.
pub fn verify_radius_formula(n: u32, m: u32) -> Result<RadiusVerdict, TubeError> {
    let model = spectrum(Family::A { m }, n)?;
    let cond = biharmonic_polynomial(&model)?;
    let (ni, mi) = (n as i64, m as i64);
    let (a, b, c) = (2 * ni - 2 * mi - 1, -2 * (ni + 2), 2 * mi + 1);
    let expected = MultiPoly::from_coefficients(Var::X, &[MultiPoly::int(c), MultiPoly::int(b), MultiPoly::int(a)]);
    let coeffs: Vec<Rational> = cond
        .polynomial
        .coefficients_in(Var::X)
        .iter()
        .map(|p| p.constant_value().unwrap_or_else(Rational::zero))
        .collect();
    let discriminant = if coeffs.len() == 3 {
        let half = &coeffs[1] / rat(2);
        &half * &half - &coeffs[2] * &coeffs[0]
    } else {
        Rational::zero()
    };
    let radicand = rat((2 * mi - ni + 1).pow(2) + 4 * (ni + 1));
    let iso = admissible_roots(&cond)?;
    let surd = |negative| QuadraticSurd::new(rat(ni + 2), negative, radicand.clone(), rat(a)).expect("positive radicand");
    let roots: Vec<_> = [surd(true), surd(false)]
        .into_iter()
        .zip(iso.roots.iter().map(|r| r.interval.clone()))
        .collect();
    let roots_match = iso.count() == 2 && roots.iter().all(|(s, i)| s.in_interval(i));
    Ok(RadiusVerdict {
        n,
        m,
        condition_matches: cond.polynomial == expected,
        condition: cond.polynomial.clone(),
        expected,
        radicand_matches: discriminant == radicand,
        discriminant,
        radicand,
        roots,
        roots_match,
        mean_curvature_nonzero: !mean_curvature_nonvanishing(&model, &cond)?.is_zero(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RadiusError {
    #[error("X enclosure must be bounded and positive")]
    NonPositiveEnclosure,
    #[error("precision must be positive")]
    NonPositivePrecision,
    #[error("X is too close to 0 for the supported radius range")]
    OutOfRange,
    #[error("X enclosure too wide: radius known only to width {0}")]
    EnclosureTooWide(String),
}

/// Rigorous enclosures of `sin r` and `cos r` for `0 <= r <= 2`, from
/// alternating Taylor partial sums whose last term is below `tol`.
pub fn sin_cos_enclosure(r: &Rational, tol: &Rational) -> ((Rational, Rational), (Rational, Rational)) {
    assert!(!r.is_negative() && *r <= rat(2), "series bracket needs 0 <= r <= 2");
    let r2 = r * r;
    let bracket = |first: Rational, offset: i64| {
        // terms r^(2k+offset)/(2k+offset)!, decreasing from k = 2 on for r <= 2
        let mut term = first;
        let mut prev = Rational::zero();
        let mut sum = term.clone();
        let mut k = 0i64;
        while k < 2 || term.abs() >= *tol {
            k += 1;
            term = -term * &r2 / rat((2 * k + offset - 1) * (2 * k + offset));
            prev = sum.clone();
            sum += &term;
        }
        if prev < sum {
            (prev, sum)
        } else {
            (sum, prev)
        }
    };
    (bracket(r.clone(), 1), bracket(Rational::one(), 0))
}

/// Enclosure of `cot^2 r`, or `None` when `sin r` is not yet bounded away
/// from 0.
fn cot2_enclosure(r: &Rational, tol: &Rational) -> Option<(Rational, Rational)> {
    let ((s_lo, s_hi), (c_lo, c_hi)) = sin_cos_enclosure(r, tol);
    if !s_lo.is_positive() {
        return None;
    }
    let (c2_lo, c2_hi) = if !c_lo.is_negative() {
        (&c_lo * &c_lo, &c_hi * &c_hi)
    } else if !c_hi.is_positive() {
        (&c_hi * &c_hi, &c_lo * &c_lo)
    } else {
        (Rational::zero(), (&c_lo * &c_lo).max(&c_hi * &c_hi))
    };
    Some((c2_lo / (&s_hi * &s_hi), c2_hi / (&s_lo * &s_lo)))
}

/// A rigorous enclosure `lo < r < hi` of `r = arccot(sqrt X)` with a decimal
/// approximation of its midpoint.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RadiusEnclosure {
    #[serde(serialize_with = "serialize_rational")]
    pub lo: Rational,
    #[serde(serialize_with = "serialize_rational")]
    pub hi: Rational,
    /// Decimal rendering of the midpoint; approximate by construction.
    pub approx: String,
}

/// Bisection on `r` in `(0, 157/100)` comparing rigorous enclosures of
/// `cot^2 r` with the given enclosure of `X`.
pub fn radius_from_x(x: &RationalInterval, precision: &Rational) -> Result<RadiusEnclosure, RadiusError> {
    if !precision.is_positive() {
        return Err(RadiusError::NonPositivePrecision);
    }
    let (Some(x_lo), Some(x_hi)) = (x.lo_value(), x.hi_value()) else {
        return Err(RadiusError::NonPositiveEnclosure);
    };
    if !x_lo.is_positive() {
        return Err(RadiusError::NonPositiveEnclosure);
    }
    let finest = {
        let p = precision.min(&Rational::one()).clone();
        let p4 = &p * &p * &p * &p;
        p4 / rat(1 << 12)
    };
    // decides whether the root lies right (true) or left (false) of r,
    // tightening the series tolerance only when needed
    let side = |r: &Rational| -> Option<bool> {
        let mut tol = ratio(1, 256);
        loop {
            if let Some((c_lo, c_hi)) = cot2_enclosure(r, &tol) {
                if c_lo > *x_hi {
                    return Some(true);
                }
                if c_hi < *x_lo {
                    return Some(false);
                }
            }
            if tol < finest {
                return None;
            }
            tol = &tol * &tol;
        }
    };
    let mut lo = Rational::zero();
    let mut hi = ratio(157, 100);
    if side(&hi) != Some(false) {
        return Err(RadiusError::OutOfRange);
    }
    while &hi - &lo > *precision {
        let mid = midpoint(&lo, &hi);
        match side(&mid) {
            Some(true) => lo = mid,
            Some(false) => hi = mid,
            None => return Err(RadiusError::EnclosureTooWide(to_decimal(&(&hi - &lo), 20))),
        }
    }
    let mut digits = 0;
    let mut scale = Rational::one();
    while scale > *precision {
        scale /= rat(10);
        digits += 1;
    }
    Ok(RadiusEnclosure { approx: to_decimal(&midpoint(&lo, &hi), digits), lo, hi })
}
