use std::collections::BTreeMap;

use serde::Serialize;

use super::equalizer::{equalizer_subring, SubalgebraWithEmbedding};
use super::ideal::{ideal_span, Ideal};
use super::identities::{betti_identities, ses_dimension_check, BettiVerdict, IdentityVerdict};
use super::present::{
    extract_presentation, presentation_from_generators, verify_presentation_iso,
    ExtractedPresentation, IsoVerdict,
};
use super::quotient::{quotient_algebra, QuotientAlgebra};
use super::reduction::{compute_reduction, ReductionReport};
use super::scenario::{validate_hypotheses, HypothesisReport, IsoTarget, Scenario};
use super::CutError;
use crate::graded::{direct_sum_pair, evaluate, Element, GradedAlgebra, GradedError, Presentation};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CutChecks {
    /// `dim H^k(C) = dim H^k(C_-) + dim H^k(M) - dim H^k(M_-)` for every `k`.
    pub dimension_formula: bool,
    /// `P_C+ = P_C - t^n P_M-(1/t)`.
    pub poincare_consistency: IdentityVerdict,
    /// Poincaré polynomial of the δ-ideal equals `t^n P_M-(1/t)`.
    pub delta_matches_relative: IdentityVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsoOutcome {
    pub name: String,
    pub target: IsoTarget,
    pub verdict: IsoVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExpectationOutcome {
    pub key: String,
    pub expected: Vec<usize>,
    pub actual: Vec<usize>,
    pub ok: bool,
}

/// Everything computed for one scenario.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutReport {
    pub n: usize,
    pub hypotheses: HypothesisReport,
    /// `H*(C) = ker(p* - i*)` with its embedding in `H*(C_-) ⊕ H*(M)`.
    pub c: SubalgebraWithEmbedding,
    pub delta_ideal: Ideal,
    pub c_plus: QuotientAlgebra,
    pub checks: CutChecks,
    pub c_presentation: ExtractedPresentation,
    pub c_plus_presentation: ExtractedPresentation,
    /// Presentations in the named elements, when they generate.
    pub c_named_presentation: Option<Presentation>,
    pub c_plus_named_presentation: Option<Presentation>,
    pub reduction: Option<ReductionReport>,
    pub betti: Option<BettiVerdict>,
    pub ses: Option<IdentityVerdict>,
    pub isos: Vec<IsoOutcome>,
    pub expectations: Vec<ExpectationOutcome>,
    pub warnings: Vec<String>,
}

impl CutReport {
    /// Failed golden comparisons and failed isomorphism claims.
    pub fn failures(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .expectations
            .iter()
            .filter(|e| !e.ok)
            .map(|e| {
                format!(
                    "expected {} = {:?}, computed {:?}",
                    e.key, e.expected, e.actual
                )
            })
            .collect();
        out.extend(
            self.isos
                .iter()
                .filter(|i| !i.verdict.is_isomorphism)
                .map(|i| {
                    format!(
                        "presentation {} is not isomorphic to the computed ring",
                        i.name
                    )
                }),
        );
        out
    }
}

/// Validates the hypotheses, forms the equalizer `H*(C)`, the δ-ideal and the quotient
/// `H*(C_+)`, then runs every consistency check the scenario supports.
pub fn compute_cut_plus(s: &Scenario) -> Result<CutReport, CutError> {
    let hypotheses = validate_hypotheses(s)?;
    if let Some(err) = hypotheses.to_error() {
        return Err(err);
    }

    let c = equalizer_subring(&s.c_minus, &s.m, &s.p_star, &s.i_star)?;
    let to_c = |cm: &Element, m: &Element| -> Result<Element, CutError> {
        let v = direct_sum_pair(&s.c_minus, &s.m, cm, m)?;
        Ok(c.preimage(&v)?
            .expect("pair verified to lie in the equalizer"))
    };
    let named = s
        .named
        .iter()
        .map(|(name, p)| Ok((name.clone(), to_c(&p.cminus, &p.m)?)))
        .collect::<Result<Vec<_>, CutError>>()?;
    let named_gens: Vec<_> = s
        .named_generators()
        .into_iter()
        .zip(named.iter().map(|(_, e)| e.clone()))
        .collect();
    let delta_gens = s
        .delta
        .iter()
        .map(|p| to_c(&p.cminus, &p.m))
        .collect::<Result<Vec<_>, _>>()?;
    let c = c.with_generators(named_gens.clone())?;
    let delta_ideal = ideal_span(&c.algebra, &delta_gens)?;
    let c_plus = quotient_algebra(&c.algebra, &delta_ideal)?;

    let n = s.n as i64;
    let p_m_minus = s.m_minus.poincare();
    let relative = p_m_minus.invert().shift(n);
    let dimension_formula =
        (0..=s.n).all(|k| c.algebra.dim(k) + s.m_minus.dim(k) == s.c_minus.dim(k) + s.m.dim(k));
    let checks = CutChecks {
        dimension_formula,
        poincare_consistency: IdentityVerdict::check(
            "P_C+ = P_C - t^n P_M-(1/t)",
            c_plus.algebra.poincare(),
            &c.algebra.poincare() - &relative,
        ),
        delta_matches_relative: IdentityVerdict::check(
            "P_delta = t^n P_M-(1/t)",
            crate::graded::LaurentPoly::from_dims(&delta_ideal.dims()),
            relative.clone(),
        ),
    };

    let c_presentation = extract_presentation(&c.algebra)?;
    let c_plus_presentation = extract_presentation(&c_plus.algebra)?;
    let named_presentation = |a: &GradedAlgebra| -> Result<Option<Presentation>, CutError> {
        if named_gens.is_empty() {
            return Ok(None);
        }
        let gens: Vec<_> = a.generators().to_vec();
        match presentation_from_generators(a, &gens) {
            Ok(p) => Ok(Some(p)),
            Err(CutError::Graded(GradedError::NotGenerated { .. })) => Ok(None),
            Err(e) => Err(e),
        }
    };
    let c_named_presentation = named_presentation(&c.algebra)?;
    let c_plus_named_presentation = named_presentation(&c_plus.algebra)?;

    let mut warnings = Vec::new();
    let (reduction, betti, ses) = match &s.pd_class {
        Some(e) => {
            let r = compute_reduction(&s.c_minus, e, Some(&p_m_minus))?;
            warnings.extend(r.warnings.iter().cloned());
            let p_c0 = r.c0.algebra.poincare();
            let p_cm = s.c_minus.poincare();
            let betti = betti_identities(&p_m_minus, n, &p_c0, &p_cm);
            let ses = ses_dimension_check(&p_c0, &p_cm, &p_m_minus);
            (Some(r), Some(betti), Some(ses))
        }
        None => (None, None, None),
    };

    let mut isos = Vec::new();
    for iso in &s.isos {
        let target = match iso.target {
            IsoTarget::C => &c.algebra,
            IsoTarget::CPlus => &c_plus.algebra,
        };
        let images = iso
            .images
            .iter()
            .map(|(gen, poly)| {
                let g = iso
                    .presentation
                    .generators()
                    .iter()
                    .find(|g| &g.name == gen)
                    .ok_or_else(|| GradedError::UnknownGenerator { name: gen.clone() })?;
                let names = target.generator_list();
                let values: Vec<Element> =
                    target.generators().iter().map(|(_, e)| e.clone()).collect();
                Ok((
                    gen.clone(),
                    evaluate(target, &names, &values, poly, g.degree)?,
                ))
            })
            .collect::<Result<BTreeMap<_, _>, CutError>>()?;
        isos.push(IsoOutcome {
            name: iso.name.clone(),
            target: iso.target,
            verdict: verify_presentation_iso(&iso.presentation, target, &images)?,
        });
    }

    let mut expectations = Vec::new();
    let mut expect = |key: &str, want: &Option<Vec<usize>>, actual: Vec<usize>| {
        if let Some(want) = want {
            expectations.push(ExpectationOutcome {
                key: key.into(),
                ok: *want == actual,
                expected: want.clone(),
                actual,
            });
        }
    };
    expect("c_dims", &s.expected.c_dims, c.algebra.dims());
    expect("cplus_dims", &s.expected.cplus_dims, c_plus.algebra.dims());
    expect("delta_dims", &s.expected.delta_dims, delta_ideal.dims());
    if let Some(r) = &reduction {
        expect("c0_dims", &s.expected.c0_dims, r.c0.algebra.dims());
    }

    if !checks.poincare_consistency.holds {
        warnings.push(format!(
            "P_C+ differs from P_C - t^n P_M-(1/t) by {}",
            checks.poincare_consistency.difference
        ));
    }
    if !checks.delta_matches_relative.holds {
        warnings.push(format!(
            "delta-ideal dimensions differ from those of H*(M_-, M_0) by {}",
            checks.delta_matches_relative.difference
        ));
    }
    if let Some(b) = &betti {
        for v in [&b.c0, &b.c_minus] {
            if !v.holds {
                warnings.push(format!("identity {} fails by {}", v.name, v.difference));
            }
        }
    }
    if let Some(v) = &ses {
        if !v.holds {
            warnings.push(format!("identity {} fails by {}", v.name, v.difference));
        }
    }

    Ok(CutReport {
        n: s.n,
        hypotheses,
        c,
        delta_ideal,
        c_plus,
        checks,
        c_presentation,
        c_plus_presentation,
        c_named_presentation,
        c_plus_named_presentation,
        reduction,
        betti,
        ses,
        isos,
        expectations,
        warnings,
    })
}
