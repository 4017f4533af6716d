//! Derivation along `phi X` for non-Hopf hypersurfaces of `CP^2(4)` with two
//! distinct principal curvatures, and the elimination chains built on it.
//!
//! The shape operator in the frame `{xi, X, phi X}` has entries
//! `alpha, beta, gamma, mu` subject to
//!
//! ```text
//! mu^2 - (alpha+gamma) mu + alpha gamma - beta^2 = 0
//! D(alpha) = beta (alpha + gamma - 3 mu)
//! D(beta)  = beta^2 + gamma^2 + mu (alpha - 2 gamma) + 1
//! D(gamma) = (gamma - mu)(gamma^2 - alpha gamma - 1)/beta + beta (2 gamma + mu)
//! ```
//!
//! where `D = phi X`. Each chain fixes `mu` as a linear expression in
//! `alpha, gamma, d` (`d` a constant, `D(d) = 0`). On polynomials even in
//! `beta` the operator `beta * D` is again polynomial and even in `beta`.

mod chain;
mod hopf;
pub mod reference;

pub use chain::{chain_case1, chain_case2, ChainCertificate, ChainOptions, ChainStep, Detail};
pub use hopf::{bihar2_eigenvalue, hopf_relation, sphere_relation_check, thm1_eliminate};

use serde::Serialize;
use thiserror::Error;

use crate::exact::{ratio, Rational};
use crate::multipoly::{poly, resultant, Eliminant, MultiPoly, PolyError, Var};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DeriveError {
    #[error("polynomial is not even in beta: {0}")]
    OddInBeta(String),
    #[error("variable {0} is outside {{alpha, beta, gamma, d}}")]
    ForeignVariable(Var),
    #[error("step {step}: {message}")]
    Broken { step: String, message: String },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// `num * beta^(-k)`, with `num` not divisible by `beta` when `k > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    num: MultiPoly,
    k: u16,
}

impl LaurentPoly {
    pub fn new(num: MultiPoly, k: u16) -> Self {
        let beta = MultiPoly::var(Var::Beta);
        let (mut num, mut k) = (num, k);
        while k > 0 && !num.is_zero() {
            match num.exact_divide(&beta) {
                Ok(Some(q)) => {
                    num = q;
                    k -= 1;
                }
                _ => break,
            }
        }
        if num.is_zero() {
            k = 0;
        }
        Self { num, k }
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        Self { num: p, k: 0 }
    }

    pub fn numerator(&self) -> &MultiPoly {
        &self.num
    }

    pub fn offset(&self) -> u16 {
        self.k
    }

    pub fn add(&self, other: &Self) -> Self {
        let k = self.k.max(other.k);
        let lift = |p: &Self| p.num.mul_monomial(&crate::multipoly::Monomial::var(Var::Beta, k - p.k));
        Self::new(lift(self) + lift(other), k)
    }

    pub fn mul_poly(&self, p: &MultiPoly) -> Self {
        Self::new(&self.num * p, self.k)
    }

    pub fn mul_beta(&self) -> Self {
        if self.k > 0 {
            Self::new(self.num.clone(), self.k - 1)
        } else {
            Self::new(&self.num * &MultiPoly::var(Var::Beta), 0)
        }
    }

    pub fn as_poly(&self) -> Option<&MultiPoly> {
        (self.k == 0).then_some(&self.num)
    }
}

/// The three derivative images with `mu` replaced by a linear expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationContext {
    pub label: &'static str,
    pub mu: MultiPoly,
    pub d_alpha: LaurentPoly,
    pub d_beta: LaurentPoly,
    pub d_gamma: LaurentPoly,
}

impl DerivationContext {
    pub fn with_mu(label: &'static str, mu: MultiPoly) -> Self {
        let sub = |text: &str| poly(text).compose(Var::Mu, &mu);
        Self {
            label,
            d_alpha: LaurentPoly::from_poly(sub(reference::ALPHA_DERIVATIVE)),
            d_beta: LaurentPoly::from_poly(sub(reference::BETA_DERIVATIVE)),
            d_gamma: LaurentPoly::new(
                sub(reference::GAMMA_DERIVATIVE_SINGULAR) + sub(reference::GAMMA_DERIVATIVE_REGULAR) * poly("beta^2"),
                1,
            ),
            mu,
        }
    }

    /// `mu = -(alpha + gamma)/3`, from `alpha + gamma + 3 mu = 0`.
    pub fn case1() -> Self {
        Self::with_mu("alpha + gamma + 3 mu = 0", poly("alpha + gamma").scale(&ratio(-1, 3)))
    }

    /// `mu = d - alpha - gamma`, from `alpha + gamma + mu = d`.
    pub fn case2() -> Self {
        Self::with_mu("alpha + gamma + mu = d", poly("d - alpha - gamma"))
    }

    /// `D(p)` by the chain rule, `D(d) = 0`.
    pub fn derive(&self, p: &MultiPoly) -> LaurentPoly {
        [(Var::Alpha, &self.d_alpha), (Var::Beta, &self.d_beta), (Var::Gamma, &self.d_gamma)]
            .into_iter()
            .fold(LaurentPoly::from_poly(MultiPoly::zero()), |acc, (v, image)| {
                acc.add(&image.mul_poly(&p.partial_derivative(v)))
            })
    }
}

fn check_domain(p: &MultiPoly) -> Result<(), DeriveError> {
    if let Some(v) = p.vars().into_iter().find(|v| !matches!(v, Var::Alpha | Var::Beta | Var::Gamma | Var::D)) {
        return Err(DeriveError::ForeignVariable(v));
    }
    if !p.is_even_in(Var::Beta) {
        return Err(DeriveError::OddInBeta(p.to_string()));
    }
    Ok(())
}

/// `beta * D(p)` for `p` even in `beta`; the result is a polynomial, even in
/// `beta`.
pub fn phi_derive(p: &MultiPoly, ctx: &DerivationContext) -> Result<MultiPoly, DeriveError> {
    check_domain(p)?;
    let out = ctx.derive(p).mul_beta();
    let out = out.as_poly().cloned().ok_or_else(|| DeriveError::Broken {
        step: "phi_derive".into(),
        message: "beta * D(p) kept a negative beta power".into(),
    })?;
    if !out.is_even_in(Var::Beta) {
        return Err(DeriveError::Broken { step: "phi_derive".into(), message: "parity lost".into() });
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EliminationPath {
    /// One input is `c B + r` with `c` a nonzero constant; `B = -r/c` was
    /// substituted into the other.
    Substitution,
    Resultant,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BetaElimination {
    pub path: EliminationPath,
    pub eliminant: Eliminant,
}

fn halve(p: &MultiPoly) -> Result<MultiPoly, DeriveError> {
    if !p.is_even_in(Var::Beta) {
        return Err(DeriveError::OddInBeta(p.to_string()));
    }
    Ok(p.halve_even(Var::Beta, Var::B)?)
}

/// Solves `p = 0` for `B` when `p` is linear in `B` with constant coefficient.
fn linear_solution(p: &MultiPoly) -> Option<MultiPoly> {
    if p.degree_in(Var::B) != Some(1) {
        return None;
    }
    let coeffs = p.coefficients_in(Var::B);
    let c: Rational = coeffs[1].constant_value()?;
    Some(coeffs[0].scale(&(-Rational::from_integer(1.into()) / c)))
}

/// Eliminates `beta` from two polynomials even in `beta` through `B = beta^2`.
pub fn eliminate_beta(p: &MultiPoly, q: &MultiPoly) -> Result<BetaElimination, DeriveError> {
    let (pb, qb) = (halve(p)?, halve(q)?);
    let substituted = if let Some(b) = linear_solution(&pb) {
        Some(qb.compose(Var::B, &b))
    } else {
        linear_solution(&qb).map(|b| pb.compose(Var::B, &b))
    };
    match substituted {
        Some(value) => Ok(BetaElimination { path: EliminationPath::Substitution, eliminant: Eliminant::from_value(value) }),
        None => eliminate_beta_resultant(p, q),
    }
}

/// Always through `Res_B`; the cross-check for [`eliminate_beta`].
pub fn eliminate_beta_resultant(p: &MultiPoly, q: &MultiPoly) -> Result<BetaElimination, DeriveError> {
    let (pb, qb) = (halve(p)?, halve(q)?);
    Ok(BetaElimination { path: EliminationPath::Resultant, eliminant: resultant(&pb, &qb, Var::B)? })
}
