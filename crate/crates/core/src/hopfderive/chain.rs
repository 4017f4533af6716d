use std::collections::HashMap;

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::reference::{self, case1, case2};
use super::{eliminate_beta, eliminate_beta_resultant, phi_derive, DerivationContext, DeriveError};
use crate::exact::{format_rational, rat, rational, serialize_opt_rational, Rational};
use crate::multipoly::{poly, resultant, substitute, MultiPoly, PolyFraction, Var};
use crate::realalg::{quadratic_form_definite, Positivity, PositivityCertificate};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Detail {
    pub key: String,
    pub value: String,
}

/// One replayed step of an elimination chain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainStep {
    pub name: String,
    /// The claim this step checks, in words.
    pub claim: String,
    pub produced: MultiPoly,
    /// The printed polynomial `produced` must be proportional to.
    pub reference: Option<MultiPoly>,
    /// `produced = scalar * reference`.
    #[serde(serialize_with = "serialize_opt_rational")]
    pub scalar: Option<Rational>,
    /// Linear factor divided out exactly to obtain `produced`.
    pub extracted: Option<MultiPoly>,
    /// True when `produced` is computed data with no printed counterpart.
    pub derived: bool,
    pub details: Vec<Detail>,
    pub passed: bool,
}

impl ChainStep {
    fn new(name: &str, claim: &str, produced: MultiPoly) -> Self {
        Self {
            name: name.to_string(),
            claim: claim.to_string(),
            produced,
            reference: None,
            scalar: None,
            extracted: None,
            derived: false,
            details: Vec::new(),
            passed: false,
        }
    }

    fn detail(mut self, key: &str, value: impl ToString) -> Self {
        self.details.push(Detail { key: key.to_string(), value: value.to_string() });
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.details.iter().find(|d| d.key == key).map(|d| d.value.as_str())
    }
}

/// Matches `produced` against a printed polynomial up to a nonzero scalar.
fn matched(name: &str, claim: &str, produced: MultiPoly, printed: &str) -> ChainStep {
    let reference = poly(printed);
    let scalar = produced.proportional(&reference);
    let mut step = ChainStep::new(name, claim, produced);
    step.passed = scalar.is_some();
    step.scalar = scalar;
    step.reference = Some(reference);
    step
}

/// Divides `value` by a linear factor; the step passes iff the division is
/// exact.
fn extraction(name: &str, claim: &str, value: &MultiPoly, factor: &str) -> Result<(ChainStep, MultiPoly), DeriveError> {
    let f = poly(factor);
    let quotient = value.exact_divide(&f)?;
    let mut step = ChainStep::new(name, claim, quotient.clone().unwrap_or_else(|| value.clone()));
    step.extracted = Some(f);
    step.passed = quotient.is_some();
    let cofactor = quotient.ok_or_else(|| DeriveError::Broken {
        step: name.to_string(),
        message: format!("{factor} does not divide {value}"),
    })?;
    Ok((step, cofactor))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainCertificate {
    pub name: String,
    /// Standing hypotheses, recorded but never divided by.
    pub hypotheses: Vec<String>,
    pub seed: Option<u64>,
    pub steps: Vec<ChainStep>,
}

impl ChainCertificate {
    pub fn passed(&self) -> bool {
        self.steps.iter().all(|s| s.passed)
    }

    pub fn step(&self, name: &str) -> Option<&ChainStep> {
        self.steps.iter().find(|s| s.name == name)
    }

    pub fn failures(&self) -> Vec<&str> {
        self.steps.iter().filter(|s| !s.passed).map(|s| s.name.as_str()).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChainOptions {
    pub seed: u64,
    /// Rational values of `d` at which the final eliminant is re-checked.
    pub d_samples: usize,
    /// Random points for the pointwise derivation oracle.
    pub oracle_points: usize,
}

impl Default for ChainOptions {
    fn default() -> Self {
        Self { seed: 1, d_samples: 5, oracle_points: 20 }
    }
}

/// The constraint with `mu` replaced; returns the cleared numerator and the
/// cleared denominator.
fn relation(ctx: &DerivationContext) -> Result<(MultiPoly, MultiPoly), DeriveError> {
    let sub = substitute(&poly(reference::CONSTRAINT), Var::Mu, &PolyFraction::from_poly(ctx.mu.clone()))?;
    let (num, den) = sub.into_parts();
    Ok((num, den))
}

/// Eliminant of `p`, `q` in `beta`, cross-checked against the resultant path.
fn eliminant_step(name: &str, claim: &str, p: &MultiPoly, q: &MultiPoly) -> Result<(ChainStep, MultiPoly), DeriveError> {
    let main = eliminate_beta(p, q)?;
    let check = eliminate_beta_resultant(p, q)?;
    let value = main.eliminant.value();
    let agree = value.proportional(&check.eliminant.value());
    let mut step = ChainStep::new(name, claim, main.eliminant.primitive.clone())
        .detail("path", format!("{:?}", main.path).to_lowercase())
        .detail("scalar", format_rational(&main.eliminant.scalar))
        .detail(
            "resultant path ratio",
            agree.as_ref().map(format_rational).unwrap_or_else(|| "disagree".into()),
        );
    step.derived = true;
    step.passed = !value.is_zero() && agree.is_some();
    Ok((step, main.eliminant.primitive))
}

/// Smallest `alpha` in `0, 1, -1, 2, -2, ...` where `p(alpha, d = d0)` is
/// nonzero: a re-checkable nonvanishing witness.
fn nonzero_witness(p: &MultiPoly, extra: &HashMap<Var, Rational>) -> Option<(Rational, Rational)> {
    (0..64i64).map(|k| if k % 2 == 1 { rat((k + 1) / 2) } else { rat(-k / 2) }).find_map(|a| {
        let mut point = extra.clone();
        point.insert(Var::Alpha, a.clone());
        let v = p.evaluate(&point).ok()?;
        (!v.is_zero()).then_some((a, v))
    })
}

/// `Res_gamma(cubic, other)`: nonzero, free of `gamma` and `beta`.
fn final_step(name: &str, claim: &str, cubic: &MultiPoly, other: &MultiPoly) -> Result<ChainStep, DeriveError> {
    let res = resultant(cubic, other, Var::Gamma)?;
    let value = res.primitive.clone();
    let only_alpha_d = value.vars().iter().all(|v| matches!(v, Var::Alpha | Var::D));
    let mut step = ChainStep::new(name, claim, value.clone())
        .detail("scalar", format_rational(&res.scalar))
        .detail("degree in alpha", value.degree_in(Var::Alpha).unwrap_or(0))
        .detail("degree in d", value.degree_in(Var::D).unwrap_or(0))
        .detail("terms", value.len());
    let witness = if value.contains_var(Var::D) { None } else { nonzero_witness(&value, &HashMap::new()) };
    if let Some((a, v)) = &witness {
        step = step.detail("nonzero at alpha", format!("{} -> {}", format_rational(a), format_rational(v)));
    }
    step.derived = true;
    step.passed = !res.is_zero()
        && only_alpha_d
        && value.contains_var(Var::Alpha)
        && (value.contains_var(Var::D) || witness.is_some());
    Ok(step)
}

/// `factor = 0` solved for `alpha` and substituted into the relation must
/// leave a multiple of `beta^2`, and put `gamma = mu`.
fn branch_rejection(name: &str, ctx: &DerivationContext, relation: &MultiPoly, factor: &str) -> ChainStep {
    let f = poly(factor);
    // factor = alpha + rest
    let alpha = -(&f - &MultiPoly::var(Var::Alpha));
    let produced = relation.compose(Var::Alpha, &alpha);
    let mu_minus_gamma = (&ctx.mu - &MultiPoly::var(Var::Gamma)).compose(Var::Alpha, &alpha);
    let mut step = matched(
        name,
        &format!("{factor} = 0 gives gamma = mu and then beta = 0, excluded for non-Hopf"),
        produced,
        "beta^2",
    )
    .detail("alpha", &alpha)
    .detail("mu - gamma", &mu_minus_gamma);
    step.passed &= mu_minus_gamma.is_zero();
    step
}

fn square_detail(cert: &Positivity) -> String {
    match cert.certificate() {
        Some(PositivityCertificate::SquareDecomposition { decomposition, a, shift, residual, vars, .. }) => format!(
            "{} = {}*({} + {}*{})^2 + {}*{}^2",
            decomposition,
            format_rational(a),
            vars.0,
            format_rational(shift),
            vars.1,
            format_rational(residual),
            vars.1
        ),
        _ => "not certified".into(),
    }
}

/// Once `alpha` is constant, `D(alpha) = 0` with `beta != 0` gives
/// `mu = (alpha + gamma)/3`, and the right-hand side of the `D(beta)` identity
/// becomes `beta^2 + (alpha^2 - alpha gamma + gamma^2)/3 + 1 > 0`.
pub(super) fn beta_derivative_positivity() -> Result<ChainStep, DeriveError> {
    let mu = poly("alpha + gamma").scale(&rational(1, 3).expect("nonzero"));
    let rhs = poly(reference::BETA_DERIVATIVE).compose(Var::Mu, &mu);
    let form = poly("alpha^2 - alpha*gamma + gamma^2");
    let expected = poly("beta^2 + 1") + form.scale(&rational(1, 3).expect("nonzero"));
    let cert = quadratic_form_definite(&form, Var::Alpha, Var::Gamma).map_err(|e| DeriveError::Broken {
        step: "beta-derivative positivity".into(),
        message: e.to_string(),
    })?;
    let certified = cert.certificate().is_some_and(|c| c.recheck());
    let mut step = ChainStep::new(
        "beta-derivative positivity",
        "with mu = (alpha+gamma)/3 the right-hand side of D(beta) is positive, so beta cannot be constant",
        rhs.clone(),
    )
    .detail("form", &form)
    .detail("decomposition", square_detail(&cert))
    .detail("lower bound", "1");
    step.reference = Some(expected.clone());
    step.scalar = rhs.proportional(&expected);
    step.passed = rhs == expected && certified;
    Ok(step)
}

pub fn chain_case1() -> Result<ChainCertificate, DeriveError> {
    let ctx = DerivationContext::case1();
    let mut steps = Vec::new();

    let (rel, den) = relation(&ctx)?;
    steps.push(
        matched("relation", "eliminating mu gives 4 alpha^2 - 9 beta^2 + 17 alpha gamma + 4 gamma^2 = 0", rel.clone(), case1::RELATION)
            .detail("cleared denominator", &den),
    );

    let derived = phi_derive(&rel, &ctx)?;
    steps.push(matched("derived relation", "differentiating the relation along phi X", derived.clone(), case1::DERIVED));

    let (step, elim) = eliminant_step("beta eliminant", "eliminating beta gives (alpha + 4 gamma) f = 0", &rel, &derived)?;
    steps.push(step);
    let (step, cubic) = extraction("factor alpha+4gamma", "alpha + 4 gamma divides the eliminant", &elim, case1::FACTOR)?;
    steps.push(step);
    steps.push(matched("cubic f", "the cofactor is f(alpha, gamma)", cubic.clone(), case1::CUBIC));

    // derivative of f, with beta^2 eliminated through the relation
    let df = phi_derive(&cubic, &ctx)?;
    let (mut step, elim_f) = eliminant_step(
        "derivative of f",
        "differentiating f along phi X and eliminating beta",
        &rel,
        &df,
    )?;
    step = step.detail("raw derivative", &df);
    steps.push(step);
    let (step, quartic) = extraction(
        "factor alpha+4gamma (derivative)",
        "alpha + 4 gamma divides the eliminated derivative of f",
        &elim_f,
        case1::FACTOR,
    )?;
    steps.push(step);
    let printed = poly(case1::QUARTIC);
    let mut step = matched("quartic", "the eliminated derivative of f is the printed quartic", quartic.clone(), case1::QUARTIC);
    if !step.passed {
        step = step.detail("printed quartic modulo f is zero", {
            let r = resultant(&cubic, &printed, Var::Gamma)?;
            r.is_zero()
        });
    }
    steps.push(step);

    steps.push(final_step(
        "final eliminant",
        "Res_gamma(f, quartic) is a nontrivial polynomial in alpha",
        &cubic,
        &quartic,
    )?);
    steps.push(final_step(
        "final eliminant (printed quartic)",
        "Res_gamma(f, printed quartic) is a nontrivial polynomial in alpha",
        &cubic,
        &printed,
    )?);

    steps.push(branch_rejection("branch alpha+4gamma=0", &ctx, &rel, case1::FACTOR));

    // alpha constant: D(alpha) = 0 forces alpha + gamma - 3 mu = 0; with
    // mu = -(alpha+gamma)/3 this is gamma = -alpha and mu = 0
    let lin = poly("alpha + gamma - 3*mu").compose(Var::Mu, &ctx.mu);
    let gamma = solve_linear(&lin, Var::Gamma)?;
    let at = rel.compose(Var::Gamma, &gamma);
    let cert = quadratic_form_definite(&-at.clone(), Var::Alpha, Var::Beta)
        .map_err(|e| DeriveError::Broken { step: "constant alpha".into(), message: e.to_string() })?;
    let strict = matches!(cert.certificate(), Some(PositivityCertificate::SquareDecomposition { strict: true, .. }));
    let mut step = ChainStep::new(
        "constant alpha",
        "alpha + gamma - 3 mu = 0 with the relation forces beta = 0",
        at,
    )
    .detail("gamma", &gamma)
    .detail("mu", ctx.mu.compose(Var::Gamma, &gamma))
    .detail("negated relation", square_detail(&cert));
    step.passed = strict;
    steps.push(step);

    steps.push(beta_derivative_positivity()?);

    Ok(ChainCertificate {
        name: "case 1: alpha + gamma + 3 mu = 0".into(),
        hypotheses: vec!["beta != 0 (non-Hopf)".into()],
        seed: None,
        steps,
    })
}

fn solve_linear(p: &MultiPoly, v: Var) -> Result<MultiPoly, DeriveError> {
    let broken = || DeriveError::Broken { step: "solve".into(), message: format!("{p} is not linear in {v}") };
    if p.degree_in(v) != Some(1) {
        return Err(broken());
    }
    let c = p.coefficients_in(v);
    let lead = c[1].constant_value().ok_or_else(broken)?;
    Ok(c[0].scale(&(-Rational::one() / lead)))
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    let num = loop {
        let n: i64 = rng.gen_range(-12..=12);
        if n != 0 {
            break n;
        }
    };
    rational(num, rng.gen_range(1..=7i64)).expect("positive denominator")
}

fn at(point: &[(Var, &Rational)]) -> HashMap<Var, Rational> {
    point.iter().map(|(v, r)| (*v, (*r).clone())).collect()
}

fn coefficient_list(p: &MultiPoly, v: Var, prefix: &str) -> Vec<(String, String)> {
    p.coefficients_in(v)
        .into_iter()
        .enumerate()
        .map(|(i, c)| (format!("{prefix}{i}"), c.to_string()))
        .collect()
}

pub fn chain_case2(opts: &ChainOptions) -> Result<ChainCertificate, DeriveError> {
    let ctx = DerivationContext::case2();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut steps = Vec::new();

    let (rel, den) = relation(&ctx)?;
    steps.push(
        matched("relation", "eliminating mu with alpha + gamma + mu = d", rel.clone(), case2::RELATION)
            .detail("cleared denominator", &den),
    );
    let derived = phi_derive(&rel, &ctx)?;
    steps.push(matched("derived relation", "differentiating the relation along phi X", derived.clone(), case2::DERIVED));

    let (step, elim) = eliminant_step("beta eliminant", "eliminating beta gives (alpha - d + 2 gamma) g = 0", &rel, &derived)?;
    steps.push(step);
    let (step, cubic) = extraction("factor alpha-d+2gamma", "alpha - d + 2 gamma divides the eliminant", &elim, case2::FACTOR)?;
    steps.push(step);
    steps.push(matched("cubic g", "the cofactor is g(alpha, gamma)", cubic.clone(), case2::CUBIC));

    // beta * D(g) = P(gamma) beta^2 + Q(gamma)
    let dg = phi_derive(&cubic, &ctx)?;
    let in_b = dg.halve_even(Var::Beta, Var::B)?;
    let pq = in_b.coefficients_in(Var::B);
    let (q_part, p_part) = (pq[0].clone(), pq.get(1).cloned().unwrap_or_default());
    let mut step = ChainStep::new("derivative of g", "beta D(g) = (sum P_i gamma^i) beta^2 + sum Q_i gamma^i", dg.clone());
    for (k, v) in coefficient_list(&p_part, Var::Gamma, "P").into_iter().chain(coefficient_list(&q_part, Var::Gamma, "Q")) {
        step = step.detail(&k, v);
    }
    step.derived = true;
    step.passed = pq.len() <= 2
        && p_part.degree_in(Var::Gamma).unwrap_or(0) <= 3
        && q_part.degree_in(Var::Gamma).unwrap_or(0) <= 5;
    steps.push(step);

    let (mut step, elim_g) = eliminant_step(
        "beta eliminant (derivative)",
        "eliminating beta from the derivative of g and the relation",
        &rel,
        &dg,
    )?;
    let elim_g_scalar = eliminate_beta(&rel, &dg)?.eliminant.scalar;
    step = step.detail("eliminant scalar", format_rational(&elim_g_scalar));
    steps.push(step);
    let (mut step, r_poly) = extraction(
        "factor alpha-d+2gamma (derivative)",
        "(alpha - d + 2 gamma) sum R_i gamma^i = 0",
        &elim_g,
        case2::FACTOR,
    )?;
    for (k, v) in coefficient_list(&r_poly, Var::Gamma, "R") {
        step = step.detail(&k, v);
    }
    step.derived = true;
    step.passed &= r_poly.degree_in(Var::Gamma).unwrap_or(0) <= 4;
    steps.push(step);

    let mut step = final_step(
        "final eliminant",
        "Res_gamma(g, sum R_i gamma^i) is a nontrivial polynomial in alpha over Q[d]",
        &cubic,
        &r_poly,
    )?;
    let mut all_nonzero = true;
    for i in 0..opts.d_samples {
        let d0 = random_rational(&mut rng);
        let specialized = step.produced.specialize(&at(&[(Var::D, &d0)]));
        let witness = nonzero_witness(&specialized, &HashMap::new());
        all_nonzero &= !specialized.is_zero() && specialized.contains_var(Var::Alpha) && witness.is_some();
        let text = match witness {
            Some((a, v)) => format!("d = {}: nonzero at alpha = {} ({})", format_rational(&d0), format_rational(&a), format_rational(&v)),
            None => format!("d = {}: vanishes", format_rational(&d0)),
        };
        step = step.detail(&format!("d sample {i}"), text);
    }
    step.passed &= all_nonzero;
    steps.push(step);

    steps.push(pointwise_oracle(&mut rng, opts.oracle_points, &ctx, &cubic, &p_part, &q_part, &r_poly, &elim_g_scalar));

    steps.push(branch_rejection("branch alpha-d+2gamma=0", &ctx, &rel, case2::FACTOR));
    steps.push(beta_derivative_positivity()?);

    Ok(ChainCertificate {
        name: "case 2: alpha + gamma + mu = d".into(),
        hypotheses: vec!["beta != 0 (non-Hopf)".into(), "d != 0 constant, D(d) = 0".into()],
        seed: Some(opts.seed),
        steps,
    })
}

/// At random points with `beta^2` solved from the relation, compares the
/// recorded `P`, `Q`, `R` with `beta D(g)` evaluated directly from the chain
/// rule (partials of `g` at the point times the derivative images).
#[allow(clippy::too_many_arguments)]
fn pointwise_oracle(
    rng: &mut ChaCha8Rng,
    points: usize,
    ctx: &DerivationContext,
    g: &MultiPoly,
    p_part: &MultiPoly,
    q_part: &MultiPoly,
    r_poly: &MultiPoly,
    r_scale: &Rational,
) -> ChainStep {
    let (ga, gg) = (g.partial_derivative(Var::Alpha), g.partial_derivative(Var::Gamma));
    let factor = poly(case2::FACTOR);
    let mut agree = 0;
    let mut step = ChainStep::new(
        "pointwise oracle",
        "P, Q, R agree with beta D(g) evaluated pointwise",
        MultiPoly::zero(),
    );
    for i in 0..points {
        let (a0, g0, d0, b0) = loop {
            let (a0, g0, d0) = (random_rational(rng), random_rational(rng), random_rational(rng));
            let b0 = &rat(2) * &a0 * &a0 - &rat(3) * &a0 * &d0 + &d0 * &d0 + &rat(5) * &a0 * &g0 - &rat(3) * &d0 * &g0
                + &rat(2) * &g0 * &g0;
            if b0.is_positive() {
                break (a0, g0, d0, b0);
            }
        };
        let pt = at(&[(Var::Alpha, &a0), (Var::Gamma, &g0), (Var::D, &d0)]);
        let ev = |p: &MultiPoly| p.evaluate(&pt).expect("point covers alpha, gamma, d");
        let mu0 = ev(&ctx.mu);
        // beta D(alpha) = B (alpha + gamma - 3 mu); beta D(gamma) = (gamma - mu)(gamma^2 - alpha gamma - 1) + B (2 gamma + mu)
        let direct = ev(&ga) * &b0 * (&a0 + &g0 - rat(3) * &mu0)
            + ev(&gg) * ((&g0 - &mu0) * (&g0 * &g0 - &a0 * &g0 - rat(1)) + &b0 * (rat(2) * &g0 + &mu0));
        let recorded = ev(p_part) * &b0 + ev(q_part);
        let via_r = r_scale * ev(&factor) * ev(r_poly);
        let ok = direct == recorded && recorded == via_r;
        if ok {
            agree += 1;
        }
        if i < 3 {
            step = step.detail(
                &format!("point {i}"),
                format!(
                    "alpha={}, gamma={}, d={}, beta^2={}: {}",
                    format_rational(&a0),
                    format_rational(&g0),
                    format_rational(&d0),
                    format_rational(&b0),
                    format_rational(&direct)
                ),
            );
        }
    }
    step = step.detail("agreeing points", format!("{agree}/{points}"));
    step.derived = true;
    step.passed = points > 0 && agree == points;
    step
}
