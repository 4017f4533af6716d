//! Nonexistence for the tubes over `Gr_2(C^5)` and `SO(10)/U(5)`: the
//! condition quartic splits as `X^2 q1 + q2` with both quadratics positive
//! on the whole line.

use serde::Serialize;

use super::{biharmonic_polynomial, spectrum, Family, TubeError, TubeModel};
use crate::exact::RationalInterval;
use crate::multipoly::{poly, MultiPoly};
use crate::realalg::{certify_positive, count_real_roots, Positivity};

/// Dimension at which each exceptional tube lives.
pub const D_DIMENSION: u32 = 9;
pub const E_DIMENSION: u32 = 15;

/// `(family, condition, q1, q2)` as printed.
pub const PRINTED: [(&str, &str, &str, &str); 2] = [
    ("D", "5*X^4 - 24*X^3 + 102*X^2 - 24*X + 5", "5*X^2 - 24*X + 51", "51*X^2 - 24*X + 5"),
    ("E", "9*X^4 - 40*X^3 + 158*X^2 - 40*X + 9", "9*X^2 - 40*X + 79", "79*X^2 - 40*X + 9"),
];

#[derive(Debug, Clone, Serialize)]
pub struct QuarticDecomposition {
    pub family: Family,
    pub n: u32,
    pub condition: MultiPoly,
    pub printed: MultiPoly,
    pub condition_matches: bool,
    pub real_roots: usize,
    pub q1: MultiPoly,
    pub q2: MultiPoly,
    /// `condition == X^2 q1 + q2` as polynomials.
    pub identity_holds: bool,
    pub q1_positive: Positivity,
    pub q2_positive: Positivity,
}

impl QuarticDecomposition {
    pub fn holds(&self) -> bool {
        self.condition_matches
            && self.real_roots == 0
            && self.identity_holds
            && self.q1_positive.is_certified()
            && self.q2_positive.is_certified()
    }
}

/// Computes the condition for `family` in dimension `n` and checks it
/// against the printed quartic and its decomposition.
pub fn decompose_exceptional(family: Family, n: u32) -> Result<QuarticDecomposition, TubeError> {
    decompose_model(&spectrum(family, n)?)
}

/// As [`decompose_exceptional`] for an explicit model.
pub fn decompose_model(model: &TubeModel) -> Result<QuarticDecomposition, TubeError> {
    let (family, n) = (model.family, model.n);
    let tag = family.tag().to_string();
    let (_, printed, q1, q2) = PRINTED
        .iter()
        .find(|(t, ..)| *t == tag)
        .ok_or_else(|| TubeError::InvalidParameters(format!("no printed quartic for type {family}")))?;
    let cond = biharmonic_polynomial(model)?;
    let (printed, q1, q2) = (poly(printed), poly(q1), poly(q2));
    let line = RationalInterval::real_line();
    Ok(QuarticDecomposition {
        family,
        n,
        condition_matches: cond.polynomial == printed,
        real_roots: count_real_roots(&cond.polynomial, &line)?,
        identity_holds: cond.polynomial == &poly("X^2") * &q1 + q2.clone(),
        q1_positive: certify_positive(&q1, &line)?,
        q2_positive: certify_positive(&q2, &line)?,
        condition: cond.polynomial,
        printed,
        q1,
        q2,
    })
}
