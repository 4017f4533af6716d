use num_traits::Zero;
use serde::Serialize;

use super::sturm::{cauchy_bound, SturmChain};
use super::RealAlgError;
use crate::exact::{midpoint, Endpoint, Rational, RationalInterval};
use crate::multipoly::univariate::UPoly;
use crate::multipoly::{MultiPoly, Var};

/// One isolated real root: either an exact rational point `[r, r]`, or an open
/// interval `(lo, hi)` on which the squarefree part changes sign and has
/// exactly one root.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsolatedRoot {
    pub interval: RationalInterval,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootIsolation {
    pub polynomial: MultiPoly,
    #[serde(skip)]
    pub var: Var,
    pub roots: Vec<IsolatedRoot>,
}

impl RootIsolation {
    pub fn count(&self) -> usize {
        self.roots.len()
    }
}

/// Reads `p` as a univariate polynomial; constants get `fallback` as their
/// variable.
pub(super) fn as_univariate(p: &MultiPoly, fallback: Var) -> Result<(UPoly, Var), RealAlgError> {
    if p.is_zero() {
        return Err(RealAlgError::ZeroPolynomial);
    }
    let v = p.univariate_var()?.unwrap_or(fallback);
    Ok((UPoly::from_multi(p, v)?, v))
}

/// Number of distinct real roots of `p` in `interval`.
pub fn count_real_roots(p: &MultiPoly, interval: &RationalInterval) -> Result<usize, RealAlgError> {
    let (u, v) = as_univariate(p, Var::X)?;
    Ok(SturmChain::new(&u, v).count_in(interval))
}

/// Disjoint isolating intervals for every distinct real root of `p` in
/// `interval`, in increasing order, with multiplicities.
pub fn isolate_roots(p: &MultiPoly, interval: &RationalInterval) -> Result<RootIsolation, RealAlgError> {
    let (u, v) = as_univariate(p, Var::X)?;
    let chain = SturmChain::new(&u, v);
    let s = chain.squarefree().clone();
    let mut roots = Vec::new();
    if !interval.is_empty() && s.degree().unwrap_or(0) > 0 {
        if interval.is_point() {
            let x = interval.lo_value().expect("finite");
            if s.sign_at(x) == 0 {
                roots.push(RationalInterval::point(x.clone()));
            }
        } else {
            let bound = cauchy_bound(&s);
            let lo = interval.lo_value().cloned().unwrap_or_else(|| -bound.clone());
            let hi = interval.hi_value().cloned().unwrap_or(bound);
            if interval.lo().is_closed() && s.sign_at(&lo) == 0 {
                roots.push(RationalInterval::point(lo.clone()));
            }
            bisect(&chain, lo.clone(), hi.clone(), &mut roots);
            if interval.hi().is_closed() && s.sign_at(&hi) == 0 {
                roots.push(RationalInterval::point(hi));
            }
        }
    }
    let factors = u.squarefree_decomposition();
    let roots = roots
        .into_iter()
        .map(|interval| {
            let multiplicity = multiplicity_in(&factors, &interval);
            IsolatedRoot { interval, multiplicity }
        })
        .collect();
    Ok(RootIsolation { polynomial: p.clone(), var: v, roots })
}

fn multiplicity_in(factors: &[(usize, UPoly)], interval: &RationalInterval) -> usize {
    for (k, f) in factors {
        let hit = match (interval.lo_value(), interval.hi_value()) {
            (Some(a), Some(b)) if a == b => f.sign_at(a) == 0,
            (Some(a), Some(b)) => f.sign_at(a) * f.sign_at(b) < 0,
            _ => false,
        };
        if hit {
            return *k;
        }
    }
    1
}

/// Splits the open interval `(lo, hi)` until each piece holds one root.
fn bisect(chain: &SturmChain, lo: Rational, hi: Rational, out: &mut Vec<RationalInterval>) {
    let s = chain.squarefree();
    let mut stack = vec![(lo, hi)];
    let mut found = Vec::new();
    while let Some((a, b)) = stack.pop() {
        match chain.count_between(&a, &b) {
            0 => {}
            1 => found.push(tighten(chain, a, b)),
            _ => {
                let m = midpoint(&a, &b);
                if s.sign_at(&m) == 0 {
                    found.push(RationalInterval::point(m.clone()));
                }
                stack.push((m.clone(), b));
                stack.push((a, m));
            }
        }
    }
    found.sort_by(|x, y| x.lo_value().cmp(&y.lo_value()));
    out.extend(found);
}

/// Given `(a, b)` holding exactly one root of `s`, moves endpoints that are
/// themselves roots of `s` inward so both endpoint signs are nonzero.
fn tighten(chain: &SturmChain, mut a: Rational, mut b: Rational) -> RationalInterval {
    let s = chain.squarefree();
    while s.sign_at(&a) == 0 || s.sign_at(&b) == 0 {
        let m = midpoint(&a, &b);
        if s.sign_at(&m) == 0 {
            return RationalInterval::point(m);
        }
        if chain.count_between(&a, &m) == 1 {
            b = m;
        } else {
            a = m;
        }
    }
    RationalInterval::open(a, b).expect("ordered endpoints")
}

/// Shrinks an isolating interval of a simple root of the squarefree part of
/// `p` to width at most `width`, by bisection with exact signs.
pub fn refine_root(
    p: &MultiPoly,
    iso: &RationalInterval,
    width: &Rational,
) -> Result<RationalInterval, RealAlgError> {
    if *width <= Rational::zero() {
        return Err(RealAlgError::NonPositiveWidth);
    }
    let (u, v) = as_univariate(p, Var::X)?;
    let chain = SturmChain::new(&u, v);
    let s = chain.squarefree();
    if iso.is_point() {
        let x = iso.lo_value().expect("finite");
        return if s.sign_at(x) == 0 { Ok(iso.clone()) } else { Err(RealAlgError::NotIsolating) };
    }
    let (Some(lo), Some(hi)) = (iso.lo_value(), iso.hi_value()) else {
        return Err(RealAlgError::NotIsolating);
    };
    let (mut a, mut b) = (lo.clone(), hi.clone());
    let (sa, sb) = (s.sign_at(&a), s.sign_at(&b));
    if sa * sb >= 0 || chain.count_between(&a, &b) != 1 {
        return Err(RealAlgError::NotIsolating);
    }
    while &b - &a > *width {
        let m = midpoint(&a, &b);
        let sm = s.sign_at(&m);
        if sm == 0 {
            return Ok(RationalInterval::point(m));
        }
        if sm == sa {
            a = m;
        } else {
            b = m;
        }
    }
    Ok(RationalInterval::new(Endpoint::open(a), Endpoint::open(b)).expect("ordered endpoints"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{ratio, rat};
    use crate::multipoly::poly;

    #[test]
    fn sqrt2() {
        let iso = isolate_roots(&poly("X^2-2"), &"(0,inf)".parse().unwrap()).unwrap();
        assert_eq!(iso.count(), 1);
        let r = refine_root(&poly("X^2-2"), &iso.roots[0].interval, &ratio(1, 1024)).unwrap();
        assert!(r.width().unwrap() <= ratio(1, 1024));
        let (a, b) = (r.lo_value().unwrap(), r.hi_value().unwrap());
        assert!(a * a < rat(2) && b * b > rat(2));
        let from_12 = refine_root(&poly("X^2-2"), &"(1,2)".parse().unwrap(), &ratio(1, 1024)).unwrap();
        assert!(from_12.width().unwrap() <= ratio(1, 1024));
    }

    #[test]
    fn radicands_of_the_geodesic_sphere() {
        let p = poly("3*X^2-8*X+1");
        assert_eq!(count_real_roots(&p, &"(0,inf)".parse().unwrap()).unwrap(), 2);
        let iso = isolate_roots(&p, &"(0,inf)".parse().unwrap()).unwrap();
        assert_eq!(iso.count(), 2);
        // (4 - sqrt13)/3 ~ 0.13, (4 + sqrt13)/3 ~ 2.54
        let upper = refine_root(&p, &iso.roots[1].interval, &ratio(1, 1_000_000_000_000)).unwrap();
        let (a, b) = (upper.lo_value().unwrap().clone(), upper.hi_value().unwrap().clone());
        // 3x - 4 = sqrt13 on the upper root: check (3a-4)^2 < 13 < (3b-4)^2
        let sq = |x: &Rational| (x * rat(3) - rat(4)) * (x * rat(3) - rat(4));
        assert!(sq(&a) < rat(13) && sq(&b) > rat(13));
    }

    #[test]
    fn multiplicities_from_squarefree_factorization() {
        let iso = isolate_roots(&poly("(X-1)^2*(X-3)"), &RationalInterval::real_line()).unwrap();
        assert_eq!(iso.count(), 2);
        assert_eq!(iso.roots[0].multiplicity, 2);
        assert!(iso.roots[0].interval.contains(&rat(1)));
        assert_eq!(iso.roots[1].multiplicity, 1);
        assert!(iso.roots[1].interval.contains(&rat(3)));
    }

    #[test]
    fn endpoint_roots() {
        let p = poly("X*(X-1)*(X-2)");
        let open = isolate_roots(&p, &"(0,2)".parse().unwrap()).unwrap();
        assert_eq!(open.count(), 1);
        let closed = isolate_roots(&p, &"[0,2]".parse().unwrap()).unwrap();
        assert_eq!(closed.count(), 3);
        assert_eq!(closed.roots[0].interval, RationalInterval::point(rat(0)));
        // root at 1 sits exactly on the first bisection midpoint
        assert!(closed.roots.iter().any(|r| r.interval == RationalInterval::point(rat(1))));
        // open interval touching a root at its endpoint gets tightened
        let q = poly("(X-1)*(X-3)");
        let iso = isolate_roots(&q, &"(1,4)".parse().unwrap()).unwrap();
        assert_eq!(iso.count(), 1);
        let i = &iso.roots[0].interval;
        let s = UPoly::from_multi(&q, Var::X).unwrap();
        if !i.is_point() {
            assert!(s.sign_at(i.lo_value().unwrap()) * s.sign_at(i.hi_value().unwrap()) < 0);
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        assert_eq!(
            count_real_roots(&MultiPoly::zero(), &RationalInterval::real_line()),
            Err(RealAlgError::ZeroPolynomial)
        );
        assert_eq!(
            refine_root(&poly("X^2-2"), &"(2,3)".parse().unwrap(), &ratio(1, 2)),
            Err(RealAlgError::NotIsolating)
        );
        assert_eq!(
            refine_root(&poly("X-5"), &"(0,10)".parse().unwrap(), &rat(0)),
            Err(RealAlgError::NonPositiveWidth)
        );
        let five = refine_root(&poly("X-5"), &"(0,10)".parse().unwrap(), &ratio(1, 2)).unwrap();
        assert!(five.contains(&rat(5)));
        assert!(count_real_roots(&poly("X*t"), &RationalInterval::real_line()).is_err());
    }
}
