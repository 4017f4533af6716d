use num_traits::Zero;

use super::chain::{ChainCertificate, ChainStep};
use super::reference;
use super::DeriveError;
use crate::exact::{format_rational, rat, ratio, Rational};
use crate::multipoly::{poly, resultant, MultiPoly, Var};

/// The eigenvalue forced on `grad H` by `2 A(grad H) + (2n-1) H grad H = 0`.
pub fn bihar2_eigenvalue(n: u32) -> MultiPoly {
    MultiPoly::var(Var::H).scale(&ratio(-(2 * n as i64 - 1), 2))
}

/// Residual `2 l1 l2 - (l1 + l2) delta - 2` of the Hopf eigenvalue relation.
pub fn hopf_relation(l1: &MultiPoly, l2: &MultiPoly, delta: &MultiPoly) -> MultiPoly {
    (l1 * l2).scale(&rat(2)) - &(&(l1 + l2) * delta) - MultiPoly::int(2)
}

/// Residuals of the relation on the geodesic sphere, `l1 = l2 = t`,
/// `delta = (t^2 - 1)/t`, at the given values of `t`.
pub fn sphere_relation_check(ts: &[Rational]) -> Vec<(Rational, Rational)> {
    ts.iter()
        .filter(|t| !t.is_zero())
        .map(|t| {
            let c = |r: Rational| MultiPoly::constant(r);
            let delta = (t * t - rat(1)) / t;
            let r = hopf_relation(&c(t.clone()), &c(t.clone()), &c(delta));
            (t.clone(), r.constant_value().unwrap_or_else(Rational::zero))
        })
        .collect()
}

fn step(name: &str, claim: &str, produced: MultiPoly, reference: MultiPoly) -> ChainStep {
    let mut s = ChainStep {
        name: name.into(),
        claim: claim.into(),
        scalar: produced.proportional(&reference),
        produced,
        reference: Some(reference),
        extracted: None,
        derived: false,
        details: Vec::new(),
        passed: false,
    };
    s.passed = s.scalar.is_some();
    s
}

/// Hopf hypersurface in `CP^2` with `A = diag(-3H/2, lambda, delta)`:
/// eliminates `lambda` between the trace condition and the eigenvalue
/// relation and checks that the result pins `H` to finitely many values once
/// `delta` is fixed.
pub fn thm1_eliminate() -> Result<ChainCertificate, DeriveError> {
    let (h, lambda, delta) = (MultiPoly::var(Var::H), MultiPoly::var(Var::Lambda), MultiPoly::var(Var::Delta));
    let mut steps = Vec::new();

    let eig = bihar2_eigenvalue(2);
    steps.push(step("eigenvalue", "A(grad H) = -(3H/2) grad H", eig.clone(), poly("-3/2*H")));

    // trA = (2n-1) H = 3H
    let e1 = &(&(&eig + &lambda) + &delta) - &h.scale(&rat(3));
    steps.push(step("trace", "lambda + delta = (9/2) H", e1.clone(), poly(reference::hopf::TRACE)));

    let e2 = hopf_relation(&eig, &lambda, &delta).scale(&rat(-2));
    steps.push(step("eigenvalue relation", "-6 lambda H = (2 lambda - 3H) delta + 4", e2.clone(), poly(reference::hopf::RELATION)));

    let res = resultant(&e1, &e2, Var::Lambda)?;
    if res.is_zero() {
        return Err(DeriveError::Broken { step: "eliminant".into(), message: "Res_lambda vanishes".into() });
    }
    let lambda_value = &h.scale(&ratio(9, 2)) - &delta;
    let oracle = e2.compose(Var::Lambda, &lambda_value);
    let mut s = step(
        "eliminant",
        "Res_lambda of the two relations agrees with substituting lambda = (9/2)H - delta",
        res.value(),
        oracle.clone(),
    );
    s.derived = true;
    s.details.push(super::Detail { key: "oracle".into(), value: oracle.to_string() });
    s.details.push(super::Detail { key: "scalar".into(), value: format_rational(&res.scalar) });
    let deg = res.primitive.degree_in(Var::H).unwrap_or(0);
    s.details.push(super::Detail { key: "degree in H".into(), value: deg.to_string() });
    s.passed &= deg == 2;
    steps.push(s);

    // with delta constant the eliminant is a nonzero polynomial in H whose
    // leading coefficient does not involve delta
    let lead = res.primitive.leading_coefficient_in(Var::H);
    let mut s = ChainStep {
        name: "finitely many H".into(),
        claim: "constant delta leaves finitely many values for H, so H is locally constant".into(),
        produced: lead.clone(),
        reference: None,
        scalar: None,
        extracted: None,
        derived: true,
        details: Vec::new(),
        passed: false,
    };
    s.passed = lead.is_constant() && !lead.is_zero() && deg >= 1;
    steps.push(s);

    Ok(ChainCertificate { name: "Hopf case in CP^2".into(), hypotheses: vec!["grad H != 0".into()], seed: None, steps })
}
