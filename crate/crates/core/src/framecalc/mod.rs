//! Finite frame calculus on a real hypersurface of `CP^n(4)`.
//!
//! A [`Frame`] is an orthonormal basis with a distinguished `xi` and the
//! matrix of `phi`; a [`ShapeTemplate`] is the symmetric matrix of the shape
//! operator in that basis, with polynomial entries. The Gauss equation
//!
//! ```text
//! R(X,Y)Z = c [<Y,Z>X - <X,Z>Y + <phi Y,Z> phi X - <phi X,Z> phi Y - 2 <phi X,Y> phi Z]
//!           + <AY,Z> AX - <AX,Z> AY
//! ```
//!
//! is evaluated exactly with `c = 1`.

mod ruled;

pub use ruled::{ruled_scenario, CONNECTION_VALUE, PHI_U_BETA, ruled_scenario_with_alpha, Branch, RuledCertificate, RuledVerdict};

use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::exact::{rat, ratio, Rational};
use crate::multipoly::{MultiPoly, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrameError {
    #[error("unknown frame label {0:?}")]
    UnknownLabel(String),
    #[error("duplicate frame label {0:?}")]
    DuplicateLabel(String),
    #[error("matrix must be {expected}x{expected}")]
    Shape { expected: usize },
    #[error("phi structure fails: {0}")]
    Structure(String),
    #[error("shape template is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("bad template entry: {0}")]
    Parse(#[from] ParseError),
    #[error("bad template text: {0}")]
    Json(String),
}

pub type Vector = Vec<MultiPoly>;

/// The identities `phi xi = 0`, `phi^T = -phi`, `phi^2 = -I + xi xi^T`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StructureCheck {
    pub phi_xi_zero: bool,
    pub skew: bool,
    pub square: bool,
}

impl StructureCheck {
    pub fn holds(&self) -> bool {
        self.phi_xi_zero && self.skew && self.square
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Frame {
    labels: Vec<String>,
    xi: usize,
    /// `phi(e_j) = sum_i phi[i][j] e_i`.
    #[serde(skip)]
    phi: Vec<Vec<Rational>>,
}

impl Frame {
    /// Builds a frame and checks the `phi` identities.
    pub fn new(labels: Vec<String>, xi: &str, phi: Vec<Vec<Rational>>) -> Result<Self, FrameError> {
        let frame = Self::unchecked(labels, xi, phi)?;
        let check = frame.structure_check();
        if !check.holds() {
            return Err(FrameError::Structure(format!("{check:?}")));
        }
        Ok(frame)
    }

    fn unchecked(labels: Vec<String>, xi: &str, phi: Vec<Vec<Rational>>) -> Result<Self, FrameError> {
        let n = labels.len();
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(FrameError::DuplicateLabel(l.clone()));
            }
        }
        if phi.len() != n || phi.iter().any(|r| r.len() != n) {
            return Err(FrameError::Shape { expected: n });
        }
        let xi = labels.iter().position(|l| l == xi).ok_or_else(|| FrameError::UnknownLabel(xi.into()))?;
        Ok(Self { labels, xi, phi })
    }

    /// A frame `xi` plus pairs `(e, phi e)` with the given names.
    pub fn with_pairs(pairs: &[(&str, &str)]) -> Self {
        let mut labels = vec!["xi".to_string()];
        for (a, b) in pairs {
            labels.push((*a).into());
            labels.push((*b).into());
        }
        let n = labels.len();
        let mut phi = vec![vec![Rational::zero(); n]; n];
        for k in 0..pairs.len() {
            let (a, b) = (1 + 2 * k, 2 + 2 * k);
            phi[b][a] = Rational::one(); // phi e_a = e_b
            phi[a][b] = -Rational::one(); // phi e_b = -e_a
        }
        Self::new(labels, "xi", phi).expect("paired frame satisfies the phi identities")
    }

    /// `{e1, e2 = phi e1, xi}` in that order.
    pub fn hopf_plane() -> Self {
        let f = Self::with_pairs(&[("e1", "e2")]);
        f.reordered(&["e1", "e2", "xi"])
    }

    /// `{xi, X, phi X}`.
    pub fn two_curvature() -> Self {
        Self::with_pairs(&[("X", "phiX")])
    }

    /// `{xi, U, phi U}`.
    pub fn ruled_subframe() -> Self {
        Self::with_pairs(&[("U", "phiU")])
    }

    /// `{xi, U, phi U, V1, phi V1, ..., V(n-2), phi V(n-2)}`: `2n - 1` labels.
    pub fn ruled(n: u32) -> Self {
        let names: Vec<(String, String)> = (1..n.saturating_sub(1)).map(|i| (format!("V{i}"), format!("phiV{i}"))).collect();
        let mut pairs = vec![("U", "phiU")];
        pairs.extend(names.iter().map(|(a, b)| (a.as_str(), b.as_str())));
        Self::with_pairs(&pairs)
    }

    fn reordered(&self, order: &[&str]) -> Self {
        let idx: Vec<usize> = order.iter().map(|l| self.index(l).expect("known label")).collect();
        let phi = idx.iter().map(|&i| idx.iter().map(|&j| self.phi[i][j].clone()).collect()).collect();
        Self::new(order.iter().map(|s| s.to_string()).collect(), &self.labels[self.xi], phi).expect("permutation keeps identities")
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn xi_label(&self) -> &str {
        &self.labels[self.xi]
    }

    pub fn index(&self, label: &str) -> Result<usize, FrameError> {
        self.labels.iter().position(|l| l == label).ok_or_else(|| FrameError::UnknownLabel(label.into()))
    }

    pub fn basis(&self, label: &str) -> Result<Vector, FrameError> {
        let i = self.index(label)?;
        Ok((0..self.dim()).map(|j| if i == j { MultiPoly::one() } else { MultiPoly::zero() }).collect())
    }

    pub fn phi(&self, v: &[MultiPoly]) -> Vector {
        self.phi
            .iter()
            .map(|row| row.iter().zip(v).fold(MultiPoly::zero(), |acc, (a, x)| acc + x.scale(a)))
            .collect()
    }

    pub fn structure_check(&self) -> StructureCheck {
        let n = self.dim();
        let phi_xi_zero = (0..n).all(|i| self.phi[i][self.xi].is_zero());
        let skew = (0..n).all(|i| (0..n).all(|j| self.phi[i][j] == -self.phi[j][i].clone()));
        let square = (0..n).all(|i| {
            (0..n).all(|j| {
                let s: Rational = (0..n).map(|k| &self.phi[i][k] * &self.phi[k][j]).sum();
                let delta = if i == j { Rational::one() } else { Rational::zero() };
                let xx = if i == self.xi && j == self.xi { Rational::one() } else { Rational::zero() };
                s == xx - delta
            })
        });
        StructureCheck { phi_xi_zero, skew, square }
    }
}

pub fn inner(u: &[MultiPoly], v: &[MultiPoly]) -> MultiPoly {
    u.iter().zip(v).fold(MultiPoly::zero(), |acc, (a, b)| acc + a * b)
}

fn axpy(acc: &mut Vector, c: &MultiPoly, v: &[MultiPoly]) {
    for (a, x) in acc.iter_mut().zip(v) {
        *a = &*a + &(c * x);
    }
}

/// Symmetric shape-operator matrix; `A e_j = sum_i entries[i][j] e_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShapeTemplate {
    entries: Vec<Vec<MultiPoly>>,
}

impl ShapeTemplate {
    pub fn new(entries: Vec<Vec<MultiPoly>>) -> Result<Self, FrameError> {
        let n = entries.len();
        if entries.iter().any(|r| r.len() != n) {
            return Err(FrameError::Shape { expected: n });
        }
        for (i, row) in entries.iter().enumerate() {
            if let Some(j) = (0..i).find(|&j| row[j] != entries[j][i]) {
                return Err(FrameError::NotSymmetric(i, j));
            }
        }
        Ok(Self { entries })
    }

    pub fn from_rows(rows: &[&[&str]]) -> Result<Self, FrameError> {
        let entries = rows
            .iter()
            .map(|r| r.iter().map(|s| s.parse::<MultiPoly>()).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(entries)
    }

    /// Parses a JSON array of rows of polynomial strings.
    pub fn from_json(text: &str) -> Result<Self, FrameError> {
        let rows: Vec<Vec<String>> = serde_json::from_str(text).map_err(|e| FrameError::Json(e.to_string()))?;
        let entries = rows
            .iter()
            .map(|r| r.iter().map(|s| s.parse::<MultiPoly>()).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(entries)
    }

    pub fn zero(n: usize) -> Self {
        Self { entries: vec![vec![MultiPoly::zero(); n]; n] }
    }

    pub fn diagonal(d: Vec<MultiPoly>) -> Self {
        let n = d.len();
        let mut t = Self::zero(n);
        for (i, v) in d.into_iter().enumerate() {
            t.entries[i][i] = v;
        }
        t
    }

    /// `diag(-3H/2, lambda, delta)` on [`Frame::hopf_plane`].
    pub fn hopf_plane() -> Self {
        Self::from_rows(&[&["-3/2*H", "0", "0"], &["0", "lambda", "0"], &["0", "0", "delta"]]).expect("valid")
    }

    /// `A xi = alpha xi + beta X`, `A X = beta xi + gamma X`, `A phiX = mu phiX`
    /// on [`Frame::two_curvature`].
    pub fn two_curvature() -> Self {
        Self::from_rows(&[&["alpha", "beta", "0"], &["beta", "gamma", "0"], &["0", "0", "mu"]]).expect("valid")
    }

    /// `A xi = alpha xi + beta U`, `A U = beta xi`, zero elsewhere, on a
    /// frame from [`Frame::ruled`] or [`Frame::ruled_subframe`].
    pub fn ruled(frame: &Frame, alpha: &MultiPoly) -> Result<Self, FrameError> {
        let (x, u) = (frame.index(frame.xi_label())?, frame.index("U")?);
        let mut t = Self::zero(frame.dim());
        t.entries[x][x] = alpha.clone();
        t.entries[x][u] = MultiPoly::var(crate::multipoly::Var::Beta);
        t.entries[u][x] = MultiPoly::var(crate::multipoly::Var::Beta);
        Ok(t)
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &MultiPoly {
        &self.entries[i][j]
    }

    pub fn apply(&self, v: &[MultiPoly]) -> Vector {
        self.entries
            .iter()
            .map(|row| row.iter().zip(v).fold(MultiPoly::zero(), |acc, (a, x)| acc + a * x))
            .collect()
    }

    fn check(&self, frame: &Frame) -> Result<(), FrameError> {
        if self.dim() != frame.dim() {
            return Err(FrameError::Shape { expected: frame.dim() });
        }
        Ok(())
    }
}

/// `<R(X,Y)Z, W>` for vectors, with `c = 1`.
pub fn gauss_tensor(frame: &Frame, a: &ShapeTemplate, x: &[MultiPoly], y: &[MultiPoly], z: &[MultiPoly], w: &[MultiPoly]) -> MultiPoly {
    let (px, py, pz) = (frame.phi(x), frame.phi(y), frame.phi(z));
    let (ax, ay) = (a.apply(x), a.apply(y));
    let mut r = vec![MultiPoly::zero(); frame.dim()];
    axpy(&mut r, &inner(y, z), x);
    axpy(&mut r, &-inner(x, z), y);
    axpy(&mut r, &inner(&py, z), &px);
    axpy(&mut r, &-inner(&px, z), &py);
    axpy(&mut r, &inner(&px, y).scale(&rat(-2)), &pz);
    axpy(&mut r, &inner(&ay, z), &ax);
    axpy(&mut r, &-inner(&ax, z), &ay);
    inner(&r, w)
}

/// `<R(X,Y)Z, W>` for four frame labels.
pub fn gauss_component(frame: &Frame, a: &ShapeTemplate, labels: [&str; 4]) -> Result<MultiPoly, FrameError> {
    a.check(frame)?;
    let [x, y, z, w] = labels.map(|l| frame.basis(l));
    Ok(gauss_tensor(frame, a, &x?, &y?, &z?, &w?))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HopfTest {
    pub hopf: bool,
    /// Components of `A xi` off `xi` that are not identically zero.
    pub obstructions: Vec<(String, MultiPoly)>,
}

/// `xi` is principal iff every component of `A xi` off `xi` vanishes.
pub fn hopf_test(a: &ShapeTemplate, frame: &Frame) -> Result<HopfTest, FrameError> {
    a.check(frame)?;
    let image = a.apply(&frame.basis(frame.xi_label())?);
    let obstructions: Vec<_> = image
        .into_iter()
        .enumerate()
        .filter(|(i, c)| *i != frame.xi && !c.is_zero())
        .map(|(i, c)| (frame.labels[i].clone(), c))
        .collect();
    Ok(HopfTest { hopf: obstructions.is_empty(), obstructions })
}

/// `(trA, H = trA/(2n-1))`. Directions missing from the template contribute
/// zero to the trace.
pub fn trace_and_h(a: &ShapeTemplate, n: u32) -> (MultiPoly, MultiPoly) {
    let tr = (0..a.dim()).fold(MultiPoly::zero(), |acc, i| acc + a.entries[i][i].clone());
    let h = tr.scale(&ratio(1, 2 * n as i64 - 1));
    (tr, h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multipoly::poly;

    #[test]
    fn structures() {
        for f in [Frame::hopf_plane(), Frame::two_curvature(), Frame::ruled(2), Frame::ruled(5)] {
            assert!(f.structure_check().holds());
        }
        assert_eq!(Frame::ruled(5).dim(), 9);
        let bad = vec![vec![rat(0), rat(1)], vec![rat(1), rat(0)]];
        assert!(matches!(Frame::new(vec!["xi".into(), "U".into()], "xi", bad), Err(FrameError::Structure(_))));
        assert!(matches!(Frame::new(vec!["a".into(), "a".into()], "a", vec![]), Err(FrameError::DuplicateLabel(_))));
    }

    #[test]
    fn constant_curvature_sanity() {
        let f = Frame::ruled(3);
        let a = ShapeTemplate::zero(f.dim());
        // totally real plane: U and V1 (phi U orthogonal to V1)
        assert_eq!(gauss_component(&f, &a, ["U", "V1", "V1", "U"]).unwrap(), poly("1"));
        assert_eq!(gauss_component(&f, &a, ["U", "xi", "xi", "U"]).unwrap(), poly("1"));
        assert_eq!(gauss_component(&f, &a, ["U", "phiU", "phiU", "U"]).unwrap(), poly("4"));
        assert_eq!(gauss_component(&f, &a, ["V1", "phiV1", "phiV1", "V1"]).unwrap(), poly("4"));
        assert!(gauss_component(&f, &a, ["U", "W", "U", "W"]).is_err());
    }

    #[test]
    fn antisymmetry() {
        let f = Frame::two_curvature();
        let a = ShapeTemplate::two_curvature();
        let l = f.labels().to_vec();
        for x in &l {
            for y in &l {
                for z in &l {
                    for w in &l {
                        let r = gauss_component(&f, &a, [x, y, z, w]).unwrap();
                        assert_eq!(r, -gauss_component(&f, &a, [y, x, z, w]).unwrap());
                        assert_eq!(r, -gauss_component(&f, &a, [x, y, w, z]).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn hopf_tests() {
        assert!(hopf_test(&ShapeTemplate::hopf_plane(), &Frame::hopf_plane()).unwrap().hopf);
        let t = hopf_test(&ShapeTemplate::two_curvature(), &Frame::two_curvature()).unwrap();
        assert!(!t.hopf);
        assert_eq!(t.obstructions, vec![("X".to_string(), poly("beta"))]);
        let f = Frame::ruled(3);
        assert!(!hopf_test(&ShapeTemplate::ruled(&f, &poly("alpha")).unwrap(), &f).unwrap().hopf);
    }

    #[test]
    fn traces() {
        let (tr, h) = trace_and_h(&ShapeTemplate::hopf_plane(), 2);
        assert_eq!(tr, poly("-3/2*H + lambda + delta"));
        assert_eq!(&tr - &poly("3*H"), poly("lambda + delta - 9/2*H"));
        assert_eq!(h, poly("-1/2*H + 1/3*lambda + 1/3*delta"));
        let f = Frame::ruled(4);
        let (_, h) = trace_and_h(&ShapeTemplate::ruled(&f, &poly("alpha")).unwrap(), 4);
        assert_eq!(h, poly("1/7*alpha"));
        assert!(trace_and_h(&ShapeTemplate::zero(3), 2).1.is_zero());
    }

    #[test]
    fn template_text() {
        let t = ShapeTemplate::from_json(r#"[["alpha","beta"],["beta","gamma"]]"#).unwrap();
        assert_eq!(t.entry(0, 1), &poly("beta"));
        assert!(matches!(ShapeTemplate::from_json(r#"[["alpha","beta"],["0","gamma"]]"#), Err(FrameError::NotSymmetric(1, 0))));
        assert!(matches!(ShapeTemplate::from_json("[1,2]"), Err(FrameError::Json(_))));
    }
}
