use super::ideal::{annihilator, Ideal};
use super::identities::IdentityVerdict;
use super::quotient::{quotient_algebra, QuotientAlgebra};
use super::CutError;
use crate::graded::{Element, GradedAlgebra, GradedError, LaurentPoly};

/// `H*(C_0)` as `H*(C_-) / Ann(e)` with its diagnostics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionReport {
    pub annihilator: Ideal,
    pub c0: QuotientAlgebra,
    /// `P_C0 = P_C- - t^n P_M-(1/t)`, present when `P_M-` was supplied.
    pub ses_check: Option<IdentityVerdict>,
    pub warnings: Vec<String>,
}

/// Quotient of `c_minus` by the annihilator of the degree-2 class `e`. The top degree of
/// `c_minus` plays the role of `n`.
pub fn compute_reduction(
    c_minus: &GradedAlgebra,
    e: &Element,
    p_m_minus: Option<&LaurentPoly>,
) -> Result<ReductionReport, CutError> {
    if e.degree() != 2 {
        return Err(GradedError::DegreeMismatch {
            context: "Poincaré dual class".into(),
            expected: 2,
            found: e.degree(),
        }
        .into());
    }
    let ann = annihilator(c_minus, e)?;
    let c0 = quotient_algebra(c_minus, &ann)?;
    let mut warnings = Vec::new();
    if e.is_zero() {
        warnings
            .push("Poincaré dual class is zero; the reduced ring is the zero algebra".to_string());
    }
    let ses_check = p_m_minus.map(|pm| {
        let n = c_minus.top_degree() as i64;
        IdentityVerdict::check(
            "P_C0 = P_C- - t^n P_M-(1/t)",
            c0.algebra.poincare(),
            &c_minus.poincare() - &pm.invert().shift(n),
        )
    });
    Ok(ReductionReport {
        annihilator: ann,
        c0,
        ses_check,
        warnings,
    })
}
