//! Structural checks shared by the property suite and the acceptance run.

use std::collections::BTreeMap;

use symcut::cutcalc::{
    annihilator, extract_presentation, ideal_span, quotient_algebra, verify_presentation_iso, Ideal,
};
use symcut::graded::{realize, GradedAlgebra};

pub fn laws(a: &GradedAlgebra) -> Result<(), String> {
    a.check_unit()?;
    a.check_associativity()?;
    a.check_graded_commutativity()
}

/// `realize(extract_presentation(a))` has the dimensions of `a`, and sending each extracted
/// generator to the element it came from is an isomorphism.
pub fn round_trip(a: &GradedAlgebra) -> Result<(), String> {
    let x = extract_presentation(a).map_err(|e| e.to_string())?;
    let back = realize(&x.presentation).map_err(|e| e.to_string())?;
    if back.dims() != a.dims() {
        return Err(format!(
            "round trip dims {:?} vs {:?}",
            back.dims(),
            a.dims()
        ));
    }
    let images: BTreeMap<String, _> = x
        .presentation
        .generators()
        .iter()
        .map(|g| g.name.clone())
        .zip(x.images.iter().cloned())
        .collect();
    let v = verify_presentation_iso(&x.presentation, a, &images).map_err(|e| e.to_string())?;
    if !v.is_isomorphism {
        return Err(format!("extracted presentation is not isomorphic: {v:?}"));
    }
    Ok(())
}

pub fn ideal_and_quotient(a: &GradedAlgebra, ideal: &Ideal) -> Result<(), String> {
    if let Some(d) = ideal.closure_violation(a).map_err(|e| e.to_string())? {
        return Err(format!("ideal not closed in degree {d}"));
    }
    let q = quotient_algebra(a, ideal).map_err(|e| e.to_string())?;
    q.check_representative_independence(a, ideal)?;
    laws(&q.algebra)
}

/// All checks on `a`, plus ideals generated by and annihilating each attached generator.
/// Returns the number of ideals examined.
pub fn exercise(a: &GradedAlgebra) -> Result<usize, String> {
    laws(a)?;
    round_trip(a)?;
    let mut ideals = 0;
    for (_, g) in a.generators() {
        for ideal in [
            ideal_span(a, std::slice::from_ref(g)).map_err(|e| e.to_string())?,
            annihilator(a, g).map_err(|e| e.to_string())?,
        ] {
            ideal_and_quotient(a, &ideal)?;
            ideals += 1;
        }
    }
    Ok(ideals)
}
