//! Ruled real hypersurfaces: `A xi = alpha xi + beta U`, `A U = beta xi`,
//! `A Z = 0` for `Z` orthogonal to `xi` and `U`, with `beta != 0`.

use num_traits::Zero;
use serde::Serialize;

use super::{gauss_component, trace_and_h, Frame, FrameError, ShapeTemplate};
use crate::exact::{format_rational, ratio, Rational};
use crate::multipoly::{poly, MultiPoly, PolyFraction, Var};

/// Connection value of `<R(phi U, xi) U, phi U>` taken as an axiom.
pub const CONNECTION_VALUE: &str = "alpha*(2*beta - beta^-1)";
/// `phi U (beta)` expressed through the shape operator.
pub const PHI_U_BETA: &str = "beta^2 + 1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RuledVerdict {
    Minimal,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Branch {
    /// The factor set to zero.
    pub condition: MultiPoly,
    pub accepted: bool,
    /// Why a branch was rejected.
    pub reason: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RuledCertificate {
    pub n: u32,
    pub alpha: MultiPoly,
    pub connection_value: PolyFraction,
    /// `beta` times the connection value.
    pub cleared: MultiPoly,
    pub gauss_subframe: MultiPoly,
    pub gauss_full: MultiPoly,
    pub branches: Vec<Branch>,
    /// `phi U (beta)` on the `beta^2 = 1/2` branch.
    #[serde(serialize_with = "crate::exact::serialize_opt_rational")]
    pub phi_u_beta: Option<Rational>,
    pub trace: MultiPoly,
    pub mean_curvature: MultiPoly,
    pub mean_curvature_on_branch: MultiPoly,
    pub verdict: RuledVerdict,
}

impl RuledCertificate {
    pub fn is_minimal(&self) -> bool {
        self.verdict == RuledVerdict::Minimal
    }
}

pub fn ruled_scenario(n: u32) -> Result<RuledCertificate, FrameError> {
    ruled_scenario_with_alpha(n, &MultiPoly::var(Var::Alpha))
}

/// Runs the ruled argument with `alpha` replaced by the given expression.
pub fn ruled_scenario_with_alpha(n: u32, alpha: &MultiPoly) -> Result<RuledCertificate, FrameError> {
    let beta = MultiPoly::var(Var::Beta);
    let labels = ["phiU", "xi", "U", "phiU"];
    let sub = Frame::ruled_subframe();
    let gauss_subframe = gauss_component(&sub, &ShapeTemplate::ruled(&sub, alpha)?, labels)?;
    let full = Frame::ruled(n);
    let template = ShapeTemplate::ruled(&full, alpha)?;
    let gauss_full = gauss_component(&full, &template, labels)?;

    // alpha (2 beta - 1/beta) = (alpha (2 beta^2 - 1)) / beta
    let two_beta_sq_minus_one = poly("2*beta^2 - 1");
    let cleared = alpha * &two_beta_sq_minus_one;
    let connection_value = PolyFraction::new(cleared.clone(), beta.clone()).expect("beta is nonzero as a polynomial");

    // Gauss gives 0 for the same component, so cleared = 0 (beta != 0)
    let consistent = gauss_subframe.is_zero() && gauss_full.is_zero();
    let mut branches = Vec::new();
    let mut phi_u_beta = None;
    if !cleared.is_zero() {
        if !alpha.is_constant() {
            branches.push(Branch { condition: alpha.clone(), accepted: true, reason: None });
        }
        // beta^2 = 1/2 makes beta constant, so phi U (beta) must vanish
        let value = poly(PHI_U_BETA)
            .halve_even(Var::Beta, Var::X)
            .expect("even in beta")
            .compose(Var::X, &MultiPoly::constant(ratio(1, 2)))
            .constant_value()
            .unwrap_or_else(Rational::zero);
        let rejected = !value.is_zero();
        branches.push(Branch {
            condition: two_beta_sq_minus_one,
            accepted: !rejected,
            reason: rejected.then(|| format!("constant beta needs phiU(beta) = 0, but beta^2 + 1 = {}", format_rational(&value))),
        });
        phi_u_beta = Some(value);
    }

    let (trace, mean_curvature) = trace_and_h(&template, n);
    // surviving branch: alpha = 0
    let mean_curvature_on_branch = mean_curvature.compose(Var::Alpha, &MultiPoly::zero());
    let only_alpha_zero = branches.iter().filter(|b| b.accepted).all(|b| &b.condition == alpha || alpha.is_zero());
    let verdict = if consistent && only_alpha_zero && mean_curvature_on_branch.is_zero() {
        RuledVerdict::Minimal
    } else {
        RuledVerdict::Inconclusive
    };
    Ok(RuledCertificate {
        n,
        alpha: alpha.clone(),
        connection_value,
        cleared,
        gauss_subframe,
        gauss_full,
        branches,
        phi_u_beta,
        trace,
        mean_curvature,
        mean_curvature_on_branch,
        verdict,
    })
}
