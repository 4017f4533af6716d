//! Acceptance criteria 1 to 11, one PASS/FAIL line each.
//!
//! Lines are written straight to stdout so they show up in the test log.
//! Criterion 6 fails: the eliminated derivative of the cubic `f` is not
//! proportional to the printed quartic. The test asserts exactly that
//! failure shape and fails on any other deviation.

use std::io::Write;
use std::time::{Duration, Instant};

use biharm_core::exact::{rat, ratio, Rational, RationalInterval};
use biharm_core::framecalc::ruled_scenario;
use biharm_core::hopfderive::{chain_case1, chain_case2, phi_derive, thm1_eliminate, ChainCertificate, ChainOptions, DerivationContext};
use biharm_core::multipoly::{poly, resultant, sylvester_resultant, MultiPoly, PolyFraction, Var};
use biharm_core::realalg::{count_real_roots, isolate_roots, quadratic_form_definite, PositivityCertificate};
use biharm_core::tubes::{
    admissible_roots, biharmonic_polynomial, decompose_exceptional, discriminant_identity, norm_a_squared, spectrum,
    verify_radius_formula, Family,
};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    number: u32,
    title: &'static str,
    passed: bool,
    elapsed: Duration,
    note: String,
}

fn line(o: &Outcome) {
    let text = format!(
        "criterion {:>2} {:<4} {} ({:.2?}){}\n",
        o.number,
        if o.passed { "PASS" } else { "FAIL" },
        o.title,
        o.elapsed,
        if o.note.is_empty() { String::new() } else { format!(": {}", o.note) }
    );
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn timed(number: u32, title: &'static str, f: impl FnOnce() -> (bool, String)) -> Outcome {
    let start = Instant::now();
    let (passed, note) = f();
    Outcome { number, title, passed, elapsed: start.elapsed(), note }
}

fn criterion_1() -> (bool, String) {
    let mut ok = discriminant_identity()[0].holds;
    let mut cases = 0;
    for n in 2..=25u32 {
        for m in 0..=n - 2 {
            let v = verify_radius_formula(n, m).unwrap();
            ok &= v.condition_matches && v.radicand_matches;
            cases += 1;
        }
    }
    (ok, format!("{cases} (n, m) pairs"))
}

fn criterion_2() -> (bool, String) {
    let v = verify_radius_formula(2, 0).unwrap();
    let roots: Vec<String> = v.roots.iter().map(|(s, _)| s.to_string()).collect();
    let isolated = count_real_roots(&poly("3*X^2 - 8*X + 1"), &RationalInterval::above(rat(0))).unwrap() == 2;
    let exact = roots == ["(4 - sqrt(13))/3", "(4 + sqrt(13))/3"] && v.roots_match;
    let mut radicand = discriminant_identity()[1].holds;
    for n in 2..=25u32 {
        radicand &= verify_radius_formula(n, 0).unwrap().radicand == rat((n * n + 2 * n + 5) as i64);
    }
    (isolated && exact && radicand, roots.join(", "))
}

fn criterion_3() -> (bool, String) {
    let mut ok = true;
    let mut notes = Vec::new();
    for (f, n) in [(Family::D, 9), (Family::E, 15)] {
        let d = decompose_exceptional(f, n).unwrap();
        let by_disc = [&d.q1_positive, &d.q2_positive]
            .iter()
            .all(|p| matches!(p.certificate(), Some(c @ PositivityCertificate::NegativeDiscriminant { .. }) if c.recheck()));
        ok &= d.holds() && by_disc;
        notes.push(format!("{f}: {} real roots", d.real_roots));
    }
    (ok, notes.join(", "))
}

fn criterion_4() -> (bool, String) {
    let d = norm_a_squared(&spectrum(Family::D, 9).unwrap()).unwrap();
    let e = norm_a_squared(&spectrum(Family::E, 15).unwrap()).unwrap();
    let want_d = PolyFraction::new(poly("5*X^4 - 4*X^3 + 62*X^2 - 4*X + 5"), poly("X*(X-1)^2")).unwrap();
    let want_e = PolyFraction::new(poly("3*(3*X^4 - 2*X^3 + 30*X^2 - 2*X + 3)"), poly("X*(X-1)^2"))
        .unwrap()
        .sub(&PolyFraction::constant(rat(2)));
    (d == want_d && e == want_e, format!("D: {d}; E: {e}"))
}

fn criterion_5() -> (bool, String) {
    let mut total = 0;
    let mut ok = true;
    let sweep = (2..=25).map(|n| (Family::B, n)).chain((5..=25).step_by(2).map(|n| (Family::C, n)));
    for (f, n) in sweep {
        let cond = biharmonic_polynomial(&spectrum(f, n).unwrap()).unwrap();
        ok &= admissible_roots(&cond).unwrap().count() == 0;
        total += 1;
    }
    (ok, format!("{total} tubes, no roots in (1,inf)"))
}

fn scalar_of(cert: &ChainCertificate, step: &str) -> Option<Rational> {
    cert.step(step).and_then(|s| s.scalar.clone()).filter(|s| !s.is_zero())
}

fn criterion_6(cert: &ChainCertificate) -> (bool, String) {
    let matched = ["relation", "derived relation", "cubic f", "quartic"].map(|s| (s, scalar_of(cert, s)));
    let divides = ["factor alpha+4gamma", "factor alpha+4gamma (derivative)"].iter().all(|s| cert.step(s).unwrap().passed);
    let finals = ["final eliminant", "final eliminant (printed quartic)"].iter().all(|s| cert.step(s).unwrap().passed);
    let missing: Vec<&str> = matched.iter().filter(|(_, s)| s.is_none()).map(|(n, _)| *n).collect();
    let note = if missing.is_empty() {
        "all printed polynomials reproduced".to_string()
    } else {
        format!("not proportional to the printed text: {}", missing.join(", "))
    };
    (missing.is_empty() && divides && finals, note)
}

fn criterion_7(cert: &ChainCertificate) -> (bool, String) {
    let names = [
        "relation",
        "derived relation",
        "cubic g",
        "factor alpha-d+2gamma",
        "factor alpha-d+2gamma (derivative)",
        "final eliminant",
        "pointwise oracle",
    ];
    let ok = names.iter().all(|n| cert.step(n).is_some_and(|s| s.passed));
    let oracle = cert.step("pointwise oracle").and_then(|s| s.get("agreeing points")).unwrap_or("?").to_string();
    (ok && cert.passed(), format!("oracle {oracle}"))
}

fn criterion_8() -> (bool, String) {
    let cert = thm1_eliminate().unwrap();
    let e = cert.step("eliminant").unwrap();
    let deg = e.get("degree in H").unwrap_or("?").to_string();
    (e.passed && e.scalar.is_some() && deg == "2", format!("H-degree {deg}"))
}

fn criterion_9(cert: &ChainCertificate) -> (bool, String) {
    let form = poly("alpha^2 - alpha*gamma + gamma^2");
    let cert9 = quadratic_form_definite(&form, Var::Alpha, Var::Gamma).unwrap();
    let identity = poly("(alpha - 1/2*gamma)^2 + 3/4*gamma^2") == form;
    let ok = match cert9.certificate() {
        Some(c @ PositivityCertificate::SquareDecomposition { a, shift, residual, .. }) => {
            c.recheck() && *a == rat(1) && *shift == ratio(-1, 2) && *residual == ratio(3, 4)
        }
        _ => false,
    };
    let step = cert.step("beta-derivative positivity").is_some_and(|s| s.passed);
    (ok && identity && step, "(alpha - gamma/2)^2 + (3/4) gamma^2".into())
}

fn criterion_10() -> (bool, String) {
    let mut ok = true;
    for n in [2, 3, 5] {
        let c = ruled_scenario(n).unwrap();
        let rejected = c.branches.iter().any(|b| !b.accepted && b.condition == poly("2*beta^2 - 1"));
        ok &= c.gauss_subframe.is_zero() && c.gauss_full.is_zero() && rejected && c.phi_u_beta == Some(ratio(3, 2)) && c.is_minimal();
    }
    (ok, "minimal for n = 2, 3, 5".into())
}

fn random_x_poly(rng: &mut ChaCha8Rng, max_deg: u32) -> MultiPoly {
    let deg = rng.gen_range(1..=max_deg);
    let mut p = MultiPoly::zero();
    for i in 0..=deg {
        let mut c = MultiPoly::int(rng.gen_range(-6..=6)) + MultiPoly::var(Var::Alpha) * MultiPoly::int(rng.gen_range(-3..=3));
        if i == deg && c.is_zero() {
            c = MultiPoly::int(1);
        }
        p = p + c * MultiPoly::var(Var::X).pow(i);
    }
    if p.degree_in(Var::X) != Some(deg as u16) {
        p = p + MultiPoly::var(Var::X).pow(deg);
    }
    p
}

fn criterion_11() -> (bool, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut ok = true;
    for _ in 0..100 {
        let (p, q, r) = (random_x_poly(&mut rng, 3), random_x_poly(&mut rng, 3), random_x_poly(&mut rng, 2));
        let (dp, dq) = (p.degree_in(Var::X).unwrap() as u32, q.degree_in(Var::X).unwrap() as u32);
        let pq = resultant(&p, &q, Var::X).unwrap().value();
        let qp = resultant(&q, &p, Var::X).unwrap().value();
        ok &= pq == qp.scale(&rat(if dp * dq % 2 == 0 { 1 } else { -1 }));
        ok &= resultant(&p, &(&q * &r), Var::X).unwrap().value() == &pq * &resultant(&p, &r, Var::X).unwrap().value();
        let a = MultiPoly::var(Var::X) - MultiPoly::int(rng.gen_range(-5..=5));
        ok &= resultant(&(&a * &p), &(&a * &q), Var::X).unwrap().is_zero();
        ok &= pq == sylvester_resultant(&p, &q, Var::X).unwrap().value();
    }
    for _ in 0..100 {
        let mut planted: Vec<i64> = (0..rng.gen_range(0..5)).map(|_| rng.gen_range(-20..=20)).collect();
        planted.sort();
        planted.dedup();
        let x = MultiPoly::var(Var::X);
        let p = planted.iter().fold(&x * &x + MultiPoly::int(rng.gen_range(1..=5)), |acc, &r| acc * (&x - &MultiPoly::constant(ratio(r, 3))));
        let iso = isolate_roots(&p, &RationalInterval::real_line()).unwrap();
        ok &= iso.count() == planted.len();
        ok &= planted.iter().zip(&iso.roots).all(|(r, i)| i.interval.contains(&ratio(*r, 3)));
    }
    let ctx = DerivationContext::case2();
    for _ in 0..50 {
        let mut even = || {
            (0..3).fold(MultiPoly::zero(), |acc, _| {
                acc + MultiPoly::int(rng.gen_range(-4..=4))
                    * MultiPoly::var(Var::Alpha).pow(rng.gen_range(0..3))
                    * MultiPoly::var(Var::Beta).pow(2 * rng.gen_range(0..2))
                    * MultiPoly::var(Var::Gamma).pow(rng.gen_range(0..3))
            })
        };
        let (p, q) = (even(), even());
        let (dp, dq) = (phi_derive(&p, &ctx).unwrap(), phi_derive(&q, &ctx).unwrap());
        ok &= phi_derive(&(&p * &q), &ctx).unwrap() == &p * &dq + &dp * &q;
        ok &= phi_derive(&(&p + &q), &ctx).unwrap() == &dp + &dq;
        ok &= dp.is_even_in(Var::Beta);
    }
    (ok, "100 resultant, 100 PRS/Sylvester, 100 Sturm, 50 derivation instances".into())
}

#[test]
fn acceptance() {
    let start = Instant::now();
    let case1 = chain_case1().unwrap();
    let case1_time = start.elapsed();
    let _ = std::io::stdout().lock().write_all(b"\n");
    let mut outcomes = vec![
        timed(1, "type A condition and radicand identity", criterion_1),
        timed(2, "CP^2 radii and m = 0 radicand", criterion_2),
        timed(3, "types D/E: quartics, root counts, decompositions", criterion_3),
        timed(4, "corrected |A|^2 for D and E", criterion_4),
        timed(5, "B/C sweep has no admissible roots", criterion_5),
        timed(6, "chain case 1", || criterion_6(&case1)),
        timed(7, "chain case 2 with symbolic d", || criterion_7(&chain_case2(&ChainOptions::default()).unwrap())),
        timed(8, "Hopf CP^2 eliminant", criterion_8),
        timed(9, "beta-derivative positivity", || criterion_9(&case1)),
        timed(10, "ruled hypersurfaces are minimal", criterion_10),
        timed(11, "property suites", criterion_11),
    ];
    outcomes[5].elapsed += case1_time;
    // runtime budgets, measured on this build profile
    for (o, budget) in outcomes.iter_mut().zip([1, 60, 1, 60, 5, 10, 60, 60, 60, 60, 120]) {
        if o.elapsed > Duration::from_secs(budget) && !cfg!(debug_assertions) {
            o.passed = false;
            o.note.push_str(&format!(" (over {budget} s)"));
        }
    }
    for o in &outcomes {
        line(o);
    }
    let failing: Vec<u32> = outcomes.iter().filter(|o| !o.passed).map(|o| o.number).collect();
    // criterion 6 is known to fail on the printed quartic alone
    assert_eq!(failing, vec![6], "unexpected acceptance failures");
    assert_eq!(case1.failures(), vec!["quartic"]);
}
