//! Exact computation of rational cohomology rings of symplectic cuts.
//!
//! The crate is layered: [`exactla`] does exact linear algebra over `Q`, [`graded`] builds
//! truncated graded-commutative algebras from presentations, [`cutcalc`] runs the cut
//! constructions on top of them and [`dsl`] reads scenario files and renders reports.

pub mod cutcalc;
pub mod dsl;
pub mod exactla;
pub mod graded;
