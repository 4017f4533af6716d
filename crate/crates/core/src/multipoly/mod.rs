//! Sparse multivariate polynomials over the rationals.
//!
//! Polynomials live over a closed twelve-letter alphabet ([`Var`]). Terms are
//! kept in a `BTreeMap` keyed by [`Monomial`], whose `Ord` is graded
//! lexicographic with the precedence `gamma > beta > alpha > d > delta >
//! lambda > mu > H > X > B > t > c`. The leading term is therefore the last
//! map entry, and every sign normalization in the crate refers to it.

mod division;
mod fraction;
mod parse;
mod resultant;
pub mod univariate;

pub use fraction::{substitute, PolyFraction};
pub use parse::ParseError;
pub use resultant::{bareiss_determinant, resultant, sylvester_matrix, sylvester_resultant, Eliminant};

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::exact::{int_gcd, int_lcm, Integer, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("variable {0} has no assigned value")]
    MissingAssignment(Var),
    #[error("polynomial must be nonzero")]
    ZeroPolynomial,
    #[error("polynomial has degree 0 in {0}; resultant needs positive degree")]
    DegenerateDegree(Var),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("polynomial is not even in {0}")]
    NotEven(Var),
    #[error("expected a polynomial in {expected} only, found {found}")]
    NotUnivariate { expected: Var, found: Var },
}

pub const NVARS: usize = 12;

/// The closed variable alphabet, declared in monomial-order precedence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Gamma,
    Beta,
    Alpha,
    D,
    Delta,
    Lambda,
    Mu,
    H,
    X,
    B,
    T,
    C,
}

impl Var {
    pub const ALL: [Var; NVARS] = [
        Var::Gamma,
        Var::Beta,
        Var::Alpha,
        Var::D,
        Var::Delta,
        Var::Lambda,
        Var::Mu,
        Var::H,
        Var::X,
        Var::B,
        Var::T,
        Var::C,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::Gamma => "gamma",
            Var::Beta => "beta",
            Var::Alpha => "alpha",
            Var::D => "d",
            Var::Delta => "delta",
            Var::Lambda => "lambda",
            Var::Mu => "mu",
            Var::H => "H",
            Var::X => "X",
            Var::B => "B",
            Var::T => "t",
            Var::C => "c",
        }
    }

    pub fn from_name(name: &str) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.name() == name)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponent vector over the alphabet.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial([u16; NVARS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; NVARS])
    }

    pub fn var(v: Var, exp: u16) -> Self {
        let mut e = [0; NVARS];
        e[v.index()] = exp;
        Monomial(e)
    }

    pub fn exp(&self, v: Var) -> u16 {
        self.0[v.index()]
    }

    pub fn with_exp(&self, v: Var, exp: u16) -> Self {
        let mut e = self.0;
        e[v.index()] = exp;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = [0u16; NVARS];
        for (i, slot) in e.iter_mut().enumerate() {
            *slot = self.0[i].checked_add(other.0[i]).expect("exponent overflow");
        }
        Monomial(e)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut e = [0u16; NVARS];
        for (i, slot) in e.iter_mut().enumerate() {
            *slot = self.0[i].checked_sub(other.0[i])?;
        }
        Some(Monomial(e))
    }

    pub fn vars(&self) -> impl Iterator<Item = (Var, u16)> + '_ {
        Var::ALL.into_iter().filter_map(|v| {
            let e = self.exp(v);
            (e > 0).then_some((v, e))
        })
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn int(c: i64) -> Self {
        Self::constant(Rational::from_integer(Integer::from(c)))
    }

    pub fn var(v: Var) -> Self {
        Self::term(Rational::one(), Monomial::var(v, 1))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    /// Builds from arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// Value of a constant polynomial.
    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coefficient(&self) -> Rational {
        self.leading_term().map(|(_, c)| c.clone()).unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Degree in `v`; `None` for the zero polynomial.
    pub fn degree_in(&self, v: Var) -> Option<u16> {
        self.terms.keys().map(|m| m.exp(v)).max()
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        self.terms.keys().flat_map(|m| m.vars().map(|(v, _)| v)).collect()
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exp(v) > 0)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Self { terms: self.terms.iter().map(|(k, a)| (k.mul(m), a.clone())).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn partial_derivative(&self, v: Var) -> Self {
        Self::from_terms(self.terms.iter().filter_map(|(m, c)| {
            let e = m.exp(v);
            (e > 0).then(|| (m.with_exp(v, e - 1), c * Rational::from_integer(Integer::from(e))))
        }))
    }

    /// Exact value at a point; every variable of `self` must be assigned.
    pub fn evaluate(&self, point: &HashMap<Var, Rational>) -> Result<Rational, PolyError> {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (v, e) in m.vars() {
                let x = point.get(&v).ok_or(PolyError::MissingAssignment(v))?;
                term *= num_traits::pow(x.clone(), e as usize);
            }
            total += term;
        }
        Ok(total)
    }

    /// Substitutes rational values for the assigned variables only.
    pub fn specialize(&self, point: &HashMap<Var, Rational>) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| {
            let mut coeff = c.clone();
            let mut mono = m.clone();
            for (v, e) in m.vars() {
                if let Some(x) = point.get(&v) {
                    coeff *= num_traits::pow(x.clone(), e as usize);
                    mono = mono.with_exp(v, 0);
                }
            }
            (mono, coeff)
        }))
    }

    /// Replaces `v` by a polynomial.
    pub fn compose(&self, v: Var, value: &MultiPoly) -> Self {
        let coeffs = self.coefficients_in(v);
        // Horner in v
        let mut acc = Self::zero();
        for c in coeffs.iter().rev() {
            acc = &(&acc * value) + c;
        }
        acc
    }

    /// Coefficients with respect to `v`, lowest degree first. Each entry is
    /// free of `v`. The zero polynomial gives an empty vector.
    pub fn coefficients_in(&self, v: Var) -> Vec<MultiPoly> {
        let Some(deg) = self.degree_in(v) else {
            return Vec::new();
        };
        let mut out = vec![MultiPoly::zero(); deg as usize + 1];
        for (m, c) in &self.terms {
            let e = m.exp(v) as usize;
            out[e].add_term(m.with_exp(v, 0), c.clone());
        }
        out
    }

    /// Inverse of [`MultiPoly::coefficients_in`].
    pub fn from_coefficients(v: Var, coeffs: &[MultiPoly]) -> Self {
        let mut p = Self::zero();
        for (k, c) in coeffs.iter().enumerate() {
            for (m, a) in &c.terms {
                p.add_term(m.with_exp(v, m.exp(v) + k as u16), a.clone());
            }
        }
        p
    }

    /// Leading coefficient with respect to `v`.
    pub fn leading_coefficient_in(&self, v: Var) -> MultiPoly {
        self.coefficients_in(v).pop().unwrap_or_default()
    }

    pub fn is_even_in(&self, v: Var) -> bool {
        self.terms.keys().all(|m| m.exp(v) % 2 == 0)
    }

    /// Rewrites an even polynomial in `from` as a polynomial in `to`, with
    /// `to = from^2`.
    pub fn halve_even(&self, from: Var, to: Var) -> Result<Self, PolyError> {
        if !self.is_even_in(from) {
            return Err(PolyError::NotEven(from));
        }
        if from != to && self.contains_var(to) {
            return Err(PolyError::NotUnivariate { expected: from, found: to });
        }
        Ok(Self::from_terms(self.terms.iter().map(|(m, c)| {
            let e = m.exp(from) / 2;
            (m.with_exp(from, 0).with_exp(to, e), c.clone())
        })))
    }

    /// Inverse of [`MultiPoly::halve_even`].
    pub fn double_in(&self, from: Var, to: Var) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| {
            let e = m.exp(from) * 2;
            (m.with_exp(from, 0).with_exp(to, e), c.clone())
        }))
    }

    /// Splits `self = content * primitive`, where the primitive part has
    /// coprime integer coefficients and a positive leading coefficient.
    pub fn content_primitive(&self) -> Result<(Rational, MultiPoly), PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let mut num_gcd = Integer::zero();
        let mut den_lcm = Integer::one();
        for c in self.terms.values() {
            num_gcd = int_gcd(&num_gcd, c.numer());
            den_lcm = int_lcm(&den_lcm, c.denom());
        }
        let mut content = Rational::new(num_gcd, den_lcm);
        if self.leading_coefficient().is_negative() {
            content = -content;
        }
        let inv = Rational::one() / &content;
        Ok((content, self.scale(&inv)))
    }

    /// The primitive part (zero stays zero).
    pub fn primitive(&self) -> MultiPoly {
        self.content_primitive().map(|(_, p)| p).unwrap_or_default()
    }

    /// Returns `s` with `self = s * other`, if such a rational exists.
    pub fn proportional(&self, other: &MultiPoly) -> Option<Rational> {
        if self.is_zero() || other.is_zero() || self.len() != other.len() {
            return None;
        }
        let (m, c) = self.leading_term()?;
        let d = other.terms.get(m)?;
        let s = c / d;
        self.terms
            .iter()
            .all(|(k, a)| other.terms.get(k).is_some_and(|b| &(b * &s) == a))
            .then_some(s)
    }

    pub fn exact_divide(&self, divisor: &MultiPoly) -> Result<Option<MultiPoly>, PolyError> {
        division::exact_divide(self, divisor)
    }

    /// Univariate variable of the polynomial: `Ok(None)` for constants.
    pub fn univariate_var(&self) -> Result<Option<Var>, PolyError> {
        let vars = self.vars();
        let mut it = vars.iter();
        match (it.next(), it.next()) {
            (None, _) => Ok(None),
            (Some(&v), None) => Ok(Some(v)),
            (Some(&v), Some(&w)) => Err(PolyError::NotUnivariate { expected: v, found: w }),
        }
    }
}

impl Serialize for MultiPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl From<Var> for MultiPoly {
    fn from(v: Var) -> Self {
        MultiPoly::var(v)
    }
}

impl From<Rational> for MultiPoly {
    fn from(c: Rational) -> Self {
        MultiPoly::constant(c)
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &'a MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &'a MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &'a MultiPoly) -> MultiPoly {
        let mut acc: HashMap<Monomial, Rational> = HashMap::with_capacity(self.len() * rhs.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                *acc.entry(m1.mul(m2)).or_insert_with(Rational::zero) += c1 * c2;
            }
        }
        MultiPoly { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: MultiPoly) -> MultiPoly { (&self).$f(&rhs) }
        }
        impl<'a> $tr<&'a MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: &'a MultiPoly) -> MultiPoly { (&self).$f(rhs) }
        }
        impl<'a> $tr<MultiPoly> for &'a MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: MultiPoly) -> MultiPoly { self.$f(&rhs) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

/// Parses polynomial text; panics on malformed input. Meant for literals.
pub fn poly(text: &str) -> MultiPoly {
    text.parse().unwrap_or_else(|e| panic!("bad polynomial literal {text:?}: {e}"))
}
