//! Randomized invariants for the algebra kernel.

use biharm_core::exact::{parse_rational, format_rational, rat, ratio, Rational, RationalInterval};
use biharm_core::hopfderive::{phi_derive, DerivationContext, DeriveError};
use biharm_core::multipoly::{resultant, sylvester_resultant, MultiPoly, Var};
use biharm_core::realalg::{count_real_roots, isolate_roots};
use num_traits::Zero;
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| ratio(n, d))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    small_rational().prop_filter("nonzero", |r| !r.is_zero())
}

/// Sparse polynomial in `vars` with exponents below `max_exp`.
fn poly_in(vars: &'static [Var], max_exp: u32, max_terms: usize) -> impl Strategy<Value = MultiPoly> {
    let term = (proptest::collection::vec(0..max_exp, vars.len()), small_rational());
    proptest::collection::vec(term, 0..=max_terms).prop_map(move |terms| {
        terms.into_iter().fold(MultiPoly::zero(), |acc, (exps, c)| {
            let m = vars.iter().zip(&exps).fold(MultiPoly::constant(c), |m, (&v, &e)| m * MultiPoly::var(v).pow(e));
            acc + m
        })
    })
}

const RING_VARS: &[Var] = &[Var::Alpha, Var::Gamma, Var::X];
const COEFF_VARS: &[Var] = &[Var::Alpha];

/// Polynomial in `X` over `Q[alpha]` of exact degree `deg >= 1` in `X`.
fn x_poly(max_deg: u32) -> impl Strategy<Value = MultiPoly> {
    (1..=max_deg, poly_in(COEFF_VARS, 2, 2), nonzero_rational(), proptest::collection::vec(poly_in(COEFF_VARS, 2, 2), 0..4))
        .prop_map(|(deg, lead_extra, lead, lower)| {
            let x = MultiPoly::var(Var::X);
            // leading coefficient lead + alpha*(...) stays nonzero
            let lc = MultiPoly::constant(lead) + MultiPoly::var(Var::Alpha) * lead_extra;
            let mut p = lc * x.pow(deg);
            for (i, c) in lower.into_iter().enumerate() {
                p = p + c * x.pow(i as u32 % deg);
            }
            p
        })
}

fn even_derivation_poly() -> impl Strategy<Value = MultiPoly> {
    let term = (0u32..3, 0u32..2, 0u32..3, -5i64..=5);
    proptest::collection::vec(term, 1..5).prop_map(|terms| {
        terms.into_iter().fold(MultiPoly::zero(), |acc, (a, b, g, c)| {
            acc + MultiPoly::var(Var::Alpha).pow(a)
                * MultiPoly::var(Var::Beta).pow(2 * b)
                * MultiPoly::var(Var::Gamma).pow(g)
                * MultiPoly::int(c)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn rational_field_axioms(a in small_rational(), b in small_rational(), c in nonzero_rational()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &a * &b + &a * &c);
        prop_assert_eq!(&(&a / &c) * &c, a.clone());
        prop_assert_eq!(&a - &a, rat(0));
        prop_assert_eq!(parse_rational(&format_rational(&a)).unwrap(), a);
    }

    #[test]
    fn ring_axioms(p in poly_in(RING_VARS, 3, 4), q in poly_in(RING_VARS, 3, 4), r in poly_in(RING_VARS, 3, 4)) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &p * &q + &p * &r);
        prop_assert_eq!(&p - &p, MultiPoly::zero());
        prop_assert_eq!(&p * &MultiPoly::one(), p.clone());
    }

    #[test]
    fn partial_derivative_leibniz(p in poly_in(RING_VARS, 3, 4), q in poly_in(RING_VARS, 3, 4)) {
        for v in RING_VARS {
            let lhs = (&p * &q).partial_derivative(*v);
            let rhs = &p.partial_derivative(*v) * &q + &p * &q.partial_derivative(*v);
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn exact_division_recovers_factor(p in poly_in(RING_VARS, 3, 4), q in poly_in(RING_VARS, 3, 3)) {
        prop_assume!(!q.is_zero());
        prop_assert_eq!((&p * &q).exact_divide(&q).unwrap(), Some(p.clone()));
    }

    #[test]
    fn parse_round_trip(p in poly_in(RING_VARS, 4, 5)) {
        let text = p.to_string();
        prop_assert_eq!(text.parse::<MultiPoly>().unwrap(), p);
    }

    #[test]
    fn resultant_swap_sign(p in x_poly(3), q in x_poly(3)) {
        let (dp, dq) = (p.degree_in(Var::X).unwrap() as u32, q.degree_in(Var::X).unwrap() as u32);
        let pq = resultant(&p, &q, Var::X).unwrap().value();
        let qp = resultant(&q, &p, Var::X).unwrap().value();
        let sign = if (dp * dq) % 2 == 0 { rat(1) } else { rat(-1) };
        prop_assert_eq!(pq, qp.scale(&sign));
    }

    #[test]
    fn resultant_multiplicative(p in x_poly(2), q1 in x_poly(2), q2 in x_poly(2)) {
        let whole = resultant(&p, &(&q1 * &q2), Var::X).unwrap().value();
        let parts = resultant(&p, &q1, Var::X).unwrap().value() * resultant(&p, &q2, Var::X).unwrap().value();
        prop_assert_eq!(whole, parts);
    }

    #[test]
    fn resultant_detects_common_roots(a in small_rational(), b in small_rational(), p in x_poly(2), q in x_poly(2)) {
        let x = MultiPoly::var(Var::X);
        let la = &x - &MultiPoly::constant(a.clone());
        let lb = &x - &MultiPoly::constant(b.clone());
        prop_assert!(resultant(&(&la * &p), &(&la * &q), Var::X).unwrap().is_zero());
        prop_assert_eq!(resultant(&la, &lb, Var::X).unwrap().value(), MultiPoly::constant(&a - &b));
    }

    #[test]
    fn prs_matches_sylvester(p in x_poly(4), q in x_poly(3)) {
        let prs = resultant(&p, &q, Var::X).unwrap();
        let syl = sylvester_resultant(&p, &q, Var::X).unwrap();
        prop_assert_eq!(prs.value(), syl.value());
    }

    #[test]
    fn sturm_counts_planted_roots(
        roots in proptest::collection::btree_set(-12i64..=12, 0..5),
        extra in 1i64..=6,
        lo in -14i64..=0,
        hi in 1i64..=14,
    ) {
        let x = MultiPoly::var(Var::X);
        // planted roots r/2 (distinct), times X^2 + extra with no real roots;
        // the first root is doubled to exercise multiplicities
        let mut p = &x.pow(2) + &MultiPoly::int(extra);
        for (i, r) in roots.iter().enumerate() {
            let f = &x - &MultiPoly::constant(ratio(*r, 2));
            p = if i == 0 { p * f.pow(2) } else { p * f };
        }
        let line = RationalInterval::real_line();
        prop_assert_eq!(count_real_roots(&p, &line).unwrap(), roots.len());
        let window = RationalInterval::open(rat(lo), rat(hi)).unwrap();
        let inside = roots.iter().filter(|r| window.contains(&ratio(**r, 2))).count();
        prop_assert_eq!(count_real_roots(&p, &window).unwrap(), inside);
        let iso = isolate_roots(&p, &line).unwrap();
        for (r, found) in roots.iter().zip(&iso.roots) {
            prop_assert!(found.interval.contains(&ratio(*r, 2)));
            let want = if Some(r) == roots.iter().next() { 2 } else { 1 };
            prop_assert_eq!(found.multiplicity, want);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn derivation_leibniz_linearity_parity(p in even_derivation_poly(), q in even_derivation_poly(), c in small_rational()) {
        for ctx in [DerivationContext::case1(), DerivationContext::case2()] {
            let dp = phi_derive(&p, &ctx).unwrap();
            let dq = phi_derive(&q, &ctx).unwrap();
            prop_assert!(dp.is_even_in(Var::Beta));
            prop_assert_eq!(phi_derive(&(&p * &q), &ctx).unwrap(), &p * &dq + &dp * &q);
            let lin = &p.scale(&c) + &q;
            prop_assert_eq!(phi_derive(&lin, &ctx).unwrap(), &dp.scale(&c) + &dq);
            let odd = &p * &MultiPoly::var(Var::Beta);
            if !p.is_zero() {
                prop_assert!(matches!(phi_derive(&odd, &ctx), Err(DeriveError::OddInBeta(_))));
            }
        }
    }
}
