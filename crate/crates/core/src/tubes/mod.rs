//! The homogeneous real hypersurfaces of `CP^n(4)`: tubes over `CP^m`, over a
//! complex quadric, over `CP^1 x CP^((n-1)/2)`, over the Grassmannian
//! `Gr_2(C^5)` and over `SO(10)/U(5)`.
//!
//! Principal curvatures are rational functions of `t = cot r`. Everything is
//! computed in `Q(t)`; only the even quantities (`|A|^2`, `t * trA`) are
//! rewritten in `X = t^2 = cot^2 r`.

mod nonexistence;
mod radius;

pub use nonexistence::{decompose_exceptional, decompose_model, QuarticDecomposition, D_DIMENSION, E_DIMENSION};

pub use radius::{
    discriminant_identity, radius_from_x, sin_cos_enclosure, verify_radius_formula, IdentityCheck,
    RadiusEnclosure, RadiusError, RadiusVerdict,
};

use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::exact::{rat, serialize_rational, Rational, RationalInterval};
use crate::multipoly::{resultant, MultiPoly, PolyError, PolyFraction, Var};
use crate::realalg::{count_real_roots, isolate_roots, RealAlgError, RootIsolation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TubeError {
    #[error("invalid tube parameters: {0}")]
    InvalidParameters(String),
    #[error("unknown family {0:?} (expected A, B, C, D or E)")]
    UnknownFamily(String),
    #[error("|A|^2 is not even in t: {0}")]
    NotEven(String),
    #[error("denominator {0} changes sign on the admissible domain")]
    DenominatorSign(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    RealAlg(#[from] RealAlgError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FamilyTag {
    A,
    B,
    C,
    D,
    E,
}

impl FromStr for FamilyTag {
    type Err = TubeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "A" | "a" => Ok(FamilyTag::A),
            "B" | "b" => Ok(FamilyTag::B),
            "C" | "c" => Ok(FamilyTag::C),
            "D" | "d" => Ok(FamilyTag::D),
            "E" | "e" => Ok(FamilyTag::E),
            other => Err(TubeError::UnknownFamily(other.to_string())),
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// A family together with its focal parameter (only type A has one).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(into = "String")]
pub enum Family {
    A { m: u32 },
    B,
    C,
    D,
    E,
}

impl Family {
    pub fn new(tag: FamilyTag, m: Option<u32>) -> Result<Self, TubeError> {
        match (tag, m) {
            (FamilyTag::A, Some(m)) => Ok(Family::A { m }),
            (FamilyTag::A, None) => Err(TubeError::InvalidParameters("type A needs m".into())),
            (_, Some(_)) => Err(TubeError::InvalidParameters(format!("type {tag} takes no m"))),
            (FamilyTag::B, None) => Ok(Family::B),
            (FamilyTag::C, None) => Ok(Family::C),
            (FamilyTag::D, None) => Ok(Family::D),
            (FamilyTag::E, None) => Ok(Family::E),
        }
    }

    pub fn tag(&self) -> FamilyTag {
        match self {
            Family::A { .. } => FamilyTag::A,
            Family::B => FamilyTag::B,
            Family::C => FamilyTag::C,
            Family::D => FamilyTag::D,
            Family::E => FamilyTag::E,
        }
    }

    fn check(&self, n: u32) -> Result<(), TubeError> {
        let bad = |msg: String| Err(TubeError::InvalidParameters(msg));
        match *self {
            Family::A { m } if n < 2 || m + 2 > n => bad(format!("type A needs 0 <= m <= n-2, got n={n}, m={m}")),
            Family::B if n < 2 => bad(format!("type B needs n >= 2, got {n}")),
            Family::C if n < 5 || n.is_multiple_of(2) => bad(format!("type C needs odd n >= 5, got {n}")),
            Family::D if n != 9 => bad(format!("type D lives in CP^9, got n={n}")),
            Family::E if n != 15 => bad(format!("type E lives in CP^15, got n={n}")),
            _ => Ok(()),
        }
    }

    /// Admissible `X = cot^2 r`: `r in (0, pi/2)` for A, `(0, pi/4)` otherwise.
    pub fn domain(&self) -> RationalInterval {
        match self {
            Family::A { .. } => RationalInterval::above(rat(0)),
            _ => RationalInterval::above(rat(1)),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::A { m } => write!(f, "A(m={m})"),
            other => write!(f, "{}", other.tag()),
        }
    }
}

impl From<Family> for String {
    fn from(f: Family) -> String {
        f.to_string()
    }
}

/// Multiplicities in the order of [`curvatures`]: `(cot r, -tan r)` for A,
/// `(cot(r - pi/4), cot(r + pi/4), cot r, -tan r)` for B to E.
pub fn multiplicities(family: Family, n: u32) -> Vec<u32> {
    match family {
        Family::A { m } => vec![2 * (n - m - 1), 2 * m],
        Family::B => vec![n - 1, n - 1],
        Family::C => vec![2, 2, n - 3, n - 3],
        Family::D => vec![4, 4, 4, 4],
        Family::E => vec![6, 6, 8, 8],
    }
}

fn t() -> PolyFraction {
    PolyFraction::var(Var::T)
}

fn frac(num: &str, den: &str) -> PolyFraction {
    PolyFraction::new(crate::multipoly::poly(num), crate::multipoly::poly(den)).expect("nonzero denominator")
}

/// The distinct principal curvatures on the holomorphic distribution, as
/// functions of `t = cot r`, with display labels.
fn curvatures(family: Family) -> Vec<(&'static str, PolyFraction)> {
    let mut out = Vec::new();
    if !matches!(family, Family::A { .. }) {
        out.push(("cot(r-pi/4)", frac("t+1", "1-t")));
        out.push(("cot(r+pi/4)", frac("t-1", "t+1")));
    }
    if matches!(family, Family::B) {
        // the quadric has only the rotated pair
        return out;
    }
    out.push(("cot r", t()));
    out.push(("-tan r", frac("-1", "t")));
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumEntry {
    pub label: &'static str,
    pub value: PolyFraction,
    pub multiplicity: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TubeModel {
    pub family: Family,
    pub n: u32,
    pub spectrum: Vec<SpectrumEntry>,
    /// `delta = 2 cot 2r = (t^2 - 1)/t`, the eigenvalue on `xi`.
    pub hopf: PolyFraction,
}

impl TubeModel {
    /// `sum of multiplicities + 1 = 2n - 1`.
    pub fn dimension_holds(&self) -> bool {
        self.spectrum.iter().map(|e| e.multiplicity).sum::<u32>() + 1 == 2 * self.n - 1
    }

    /// `trA` in `Q(t)`.
    pub fn trace(&self) -> PolyFraction {
        self.spectrum
            .iter()
            .fold(self.hopf.clone(), |acc, e| acc.add(&e.value.scale(&rat(e.multiplicity as i64))))
    }

    /// `|A|^2` in `Q(t)`, before rewriting in `X`.
    pub fn norm_squared_in_t(&self) -> PolyFraction {
        self.spectrum.iter().fold(self.hopf.pow(2), |acc, e| {
            acc.add(&e.value.pow(2).scale(&rat(e.multiplicity as i64)))
        })
    }
}

/// Builds the model with the standard multiplicity table.
pub fn spectrum(family: Family, n: u32) -> Result<TubeModel, TubeError> {
    spectrum_with_multiplicities(family, n, &multiplicities(family, n))
}

/// Builds the model with a caller-supplied multiplicity table. Family
/// constraints are enforced; the dimension count is left to
/// [`TubeModel::dimension_holds`] so altered tables can be examined.
pub fn spectrum_with_multiplicities(family: Family, n: u32, mults: &[u32]) -> Result<TubeModel, TubeError> {
    family.check(n)?;
    let values = curvatures(family);
    let expected = if matches!(family, Family::A { .. } | Family::B) { 2 } else { 4 };
    if mults.len() != expected || values.len() != expected {
        return Err(TubeError::InvalidParameters(format!(
            "type {family} needs {expected} multiplicities, got {}",
            mults.len()
        )));
    }
    let spectrum = values
        .into_iter()
        .zip(mults)
        .filter(|(_, &k)| k > 0)
        .map(|((label, value), &multiplicity)| SpectrumEntry { label, value, multiplicity })
        .collect();
    Ok(TubeModel { family, n, spectrum, hopf: frac("t^2-1", "t") })
}

/// Rewrites an even rational function of `t` in `X = t^2`.
fn even_in_x(f: &PolyFraction) -> Result<PolyFraction, TubeError> {
    if !f.is_even_in(Var::T) {
        return Err(TubeError::NotEven(f.to_string()));
    }
    let num = f.numer().halve_even(Var::T, Var::X)?;
    let den = f.denom().halve_even(Var::T, Var::X)?;
    Ok(PolyFraction::new(num, den)?)
}

/// `|A|^2` as a rational function of `X = cot^2 r`.
pub fn norm_a_squared(model: &TubeModel) -> Result<PolyFraction, TubeError> {
    even_in_x(&model.norm_squared_in_t())
}

/// `t * trA` as a rational function of `X`. Since `t > 0` it vanishes exactly
/// where `H` does.
pub fn scaled_trace(model: &TubeModel) -> Result<PolyFraction, TubeError> {
    even_in_x(&model.trace().mul(&t()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BiharmonicCondition {
    pub family: Family,
    pub n: u32,
    /// Primitive numerator of `|A|^2 - 2(n+1)` in `X`.
    pub polynomial: MultiPoly,
    pub domain: RationalInterval,
    /// Denominator that was cleared; positive on `domain`.
    pub cleared_denominator: MultiPoly,
    /// `numerator = scalar * polynomial`.
    #[serde(serialize_with = "serialize_rational")]
    pub scalar: Rational,
}

/// The condition `|A|^2 = 2(n+1)` for a biharmonic tube with constant
/// `H != 0`, as a polynomial in `X`.
pub fn biharmonic_polynomial(model: &TubeModel) -> Result<BiharmonicCondition, TubeError> {
    let norm = norm_a_squared(model)?;
    let target = PolyFraction::constant(rat(2 * (model.n as i64 + 1)));
    let diff = norm.sub(&target);
    let domain = model.family.domain();
    let (mut num, mut den) = diff.into_parts();
    if count_real_roots(&den, &domain)? != 0 {
        return Err(TubeError::DenominatorSign(den.to_string()));
    }
    let sample = rat(2);
    if crate::multipoly::univariate::UPoly::from_multi(&den, Var::X)?.eval(&sample).is_negative() {
        num = -num;
        den = -den;
    }
    let (scalar, polynomial) = num.content_primitive()?;
    Ok(BiharmonicCondition {
        family: model.family,
        n: model.n,
        polynomial,
        domain,
        cleared_denominator: den,
        scalar,
    })
}

/// Real roots of the condition inside the admissible domain.
pub fn admissible_roots(cond: &BiharmonicCondition) -> Result<RootIsolation, TubeError> {
    Ok(isolate_roots(&cond.polynomial, &cond.domain)?)
}

/// Certifies `H != 0` at every root of the condition: the resultant in `X`
/// of the condition and the numerator of `t * trA` is a nonzero constant, so
/// no root is shared. Returns that resultant.
pub fn mean_curvature_nonvanishing(model: &TubeModel, cond: &BiharmonicCondition) -> Result<Rational, TubeError> {
    let tr = scaled_trace(model)?;
    let num = tr.numer();
    if num.is_zero() {
        return Ok(Rational::zero());
    }
    if num.is_constant() {
        return Ok(num.constant_value().expect("constant"));
    }
    let res = resultant(&cond.polynomial, num, Var::X)?;
    Ok(res.value().constant_value().unwrap_or_else(Rational::zero))
}
