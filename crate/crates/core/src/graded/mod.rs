//! Finite-dimensional graded-commutative algebras over the rationals.
//!
//! A [`Presentation`] (generators, homogeneous relations, a top degree `N`) is turned into a
//! [`GradedAlgebra`] by [`realize`], which computes each graded piece as the span of
//! monomials modulo the span of monomial multiples of the relations. Everything above `N`
//! is zero by definition, and multiplying into a degree above `N` is an error.
//!
//! Sign convention: generators are ordered by declaration; transposing two odd-degree
//! generators contributes a factor of `-1`. Only even degrees occur in the bundled examples.

mod algebra;
mod hom;
mod laurent;
mod monomial;
mod polynomial;
mod presentation;
mod realize;

pub use algebra::{direct_sum, direct_sum_pair, Element, GradedAlgebra};
pub use hom::{build_hom, hom_from_generator_images, is_surjective_degreewise, GradedHom};
pub use laurent::LaurentPoly;
pub use monomial::{enumerate_monomials, Generator, Monomial};
pub use polynomial::{Homogeneity, Polynomial};
pub use presentation::Presentation;
pub use realize::{evaluate, realize};

use thiserror::Error;

use crate::exactla::LinAlgError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradedError {
    #[error("relation `{relation}` is not homogeneous")]
    InhomogeneousRelation { relation: String },
    #[error("unknown generator `{name}`")]
    UnknownGenerator { name: String },
    #[error("generator `{name}` is declared twice")]
    DuplicateGenerator { name: String },
    #[error("generator `{name}` must have positive degree")]
    ZeroDegreeGenerator { name: String },
    #[error("generator `{name}` has degree {degree} above the top degree {top}")]
    GeneratorAboveTop {
        name: String,
        degree: usize,
        top: usize,
    },
    #[error("product of degrees {left} and {right} exceeds the top degree {top}")]
    DegreeOverflow {
        left: usize,
        right: usize,
        top: usize,
    },
    #[error("{context}: expected degree {expected}, found {found}")]
    DegreeMismatch {
        context: String,
        expected: usize,
        found: usize,
    },
    #[error("{context} is not homogeneous")]
    Inhomogeneous { context: String },
    #[error("element of degree {degree} needs {expected} coordinates, found {found}")]
    BadElement {
        degree: usize,
        expected: usize,
        found: usize,
    },
    #[error("top degrees differ: {left} vs {right}")]
    TopDegreeMismatch { left: usize, right: usize },
    #[error("relation `{relation}` maps to `{image}`, not to zero")]
    RelationNotPreserved { relation: String, image: String },
    #[error("no image given for generator `{generator}`")]
    MissingImage { generator: String },
    #[error("the generators do not span degree {degree}")]
    NotGenerated { degree: usize },
    #[error("map does not preserve {what}")]
    NotMultiplicative { what: String },
    #[error("could not parse `{text}`: {message}")]
    Expression { text: String, message: String },
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
}
