//! Exact real algebra for univariate polynomials over the rationals: Sturm
//! counting, root isolation and refinement, and positivity certificates.

mod isolate;
mod positivity;
mod sturm;
mod surd;

pub use isolate::{count_real_roots, isolate_roots, refine_root, IsolatedRoot, RootIsolation};
pub use positivity::{certify_positive, quadratic_form_definite, Positivity, PositivityCertificate, Refutation};
pub use sturm::{cauchy_bound, SturmChain};
pub use surd::QuadraticSurd;

use thiserror::Error;

use crate::multipoly::PolyError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealAlgError {
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("interval does not isolate a simple root")]
    NotIsolating,
    #[error("refinement width must be positive")]
    NonPositiveWidth,
    #[error("empty interval")]
    EmptyInterval,
    #[error("not a binary quadratic form in the given variables")]
    NotBinaryQuadraticForm,
}
