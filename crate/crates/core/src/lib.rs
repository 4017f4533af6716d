//! Exact verification kernel for the classification of proper biharmonic
//! real hypersurfaces in complex projective space `CP^n(4)`.
//!
//! Every proof-bearing computation runs over the rationals:
//!
//! - [`exact`]: big integers, rationals, rational intervals.
//! - [`multipoly`]: sparse multivariate polynomials, exact division,
//!   substitution, resultants (subresultant PRS and a Sylvester oracle).
//! - [`realalg`]: Sturm chains, real-root isolation and refinement,
//!   positivity certificates.
//! - [`tubes`]: principal-curvature spectra of the homogeneous tubes and
//!   their biharmonicity conditions.
//! - [`hopfderive`]: the derivation engine along `phi X` and the replayed
//!   elimination chains for two principal curvatures.
//! - [`framecalc`]: frames, shape-operator templates and the Gauss equation;
//!   the ruled-hypersurface scenario.
//! - [`report`]: named scenarios and deterministic JSON/markdown reports.

pub mod exact;
pub mod multipoly;
pub mod realalg;
pub mod tubes;
pub mod hopfderive;
pub mod framecalc;
pub mod report;
