//! Cohomology of symplectic cuts from purely algebraic input.
//!
//! Given `H*(C_-)`, `H*(M)`, `H*(M_-)` and the restriction maps `p*: H*(C_-) -> H*(M_-)` and
//! `i*: H*(M) -> H*(M_-)`, the ring `H*(C_+)` is the subring `ker(p* - i*)` of
//! `H*(C_-) ⊕ H*(M)` (components in that order) modulo the ideal generated by the image of
//! the relative class map `δ`, which is supplied through its generators as pairs `(c, m)`.
//! `H*(C_0)` is `H*(C_-)` modulo the annihilator of the Poincaré dual of `C_0`.
//!
//! The pipeline requires `i*` to be surjective in every degree and every `δ`-pair to satisfy
//! `p*(c) = i*(m)`; either failure is an error.

mod equalizer;
mod ideal;
mod identities;
mod pipeline;
mod present;
mod quotient;
mod reduction;
mod scenario;

pub use equalizer::{equalizer_subring, subalgebra_from_subspaces, SubalgebraWithEmbedding};
pub use ideal::{annihilator, ideal_span, Ideal};
pub use identities::{
    betti_identities, divide_by_one_minus_t2, ses_dimension_check, BettiVerdict, IdentityVerdict,
};
pub use pipeline::{compute_cut_plus, CutChecks, CutReport, ExpectationOutcome, IsoOutcome};
pub use present::{
    extract_presentation, minimal_generators, presentation_from_generators, relation_space,
    verify_presentation_iso, ExtractedPresentation, IsoVerdict, RelationCheck, RelationSpace,
};
pub use quotient::{quotient_algebra, QuotientAlgebra};
pub use reduction::{compute_reduction, ReductionReport};
pub use scenario::{
    validate_hypotheses, DeltaPair, Expected, HypothesisReport, IsoCheck, IsoTarget, Scenario,
};

use thiserror::Error;

use crate::exactla::LinAlgError;
use crate::graded::GradedError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CutError {
    #[error("perfection hypothesis violated: i* is not surjective in degree {}", join(.degrees))]
    PerfectionViolated { degrees: Vec<usize> },
    #[error("delta pair #{index} is not in ker(p* - i*): p*(c) - i*(m) = {residual}")]
    DeltaOutsideEqualizer { index: usize, residual: String },
    #[error("named element `{name}` is not in ker(p* - i*): p*(c) - i*(m) = {residual}")]
    NamedOutsideEqualizer { name: String, residual: String },
    #[error("subspaces are not closed under multiplication in degree {degree}")]
    NotAnIdeal { degree: usize },
    #[error("subspaces do not form a unital subalgebra in degree {degree}")]
    NotASubalgebra { degree: usize },
    #[error("algebra is not connected: degree 0 has dimension {dim0}")]
    Disconnected { dim0: usize },
    #[error("{what}")]
    MapMismatch { what: String },
    #[error("the dimension n = {n} must be even")]
    OddDimension { n: usize },
    #[error("{what} has top degree {found}, expected n = {expected}")]
    TopDegreeMismatch {
        what: String,
        expected: usize,
        found: usize,
    },
    #[error(transparent)]
    Graded(#[from] GradedError),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
}

fn join(degrees: &[usize]) -> String {
    degrees
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}
