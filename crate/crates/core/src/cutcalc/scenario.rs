use std::sync::Arc;

use serde::Serialize;

use super::CutError;
use crate::graded::{
    is_surjective_degreewise, Element, Generator, GradedAlgebra, GradedError, GradedHom,
    Polynomial, Presentation,
};

/// A generator of the image of `δ`, as its `(H*(C_-), H*(M))` components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaPair {
    pub cminus: Element,
    pub m: Element,
}

impl DeltaPair {
    pub fn degree(&self) -> usize {
        self.cminus.degree()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum IsoTarget {
    #[serde(rename = "c")]
    C,
    #[serde(rename = "cplus")]
    CPlus,
}

/// A claimed presentation of `H*(C)` or `H*(C_+)`, with generator images written as
/// polynomials in the scenario's named equalizer elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoCheck {
    pub name: String,
    pub presentation: Presentation,
    pub target: IsoTarget,
    pub images: Vec<(String, Polynomial)>,
}

/// Optional golden values; every present entry is compared after the computation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Expected {
    pub c_dims: Option<Vec<usize>>,
    pub cplus_dims: Option<Vec<usize>>,
    pub delta_dims: Option<Vec<usize>>,
    pub c0_dims: Option<Vec<usize>>,
}

/// Input bundle for the cut computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scenario {
    pub c_minus: Arc<GradedAlgebra>,
    pub m: Arc<GradedAlgebra>,
    pub m_minus: Arc<GradedAlgebra>,
    pub p_star: GradedHom,
    pub i_star: GradedHom,
    pub n: usize,
    pub delta: Vec<DeltaPair>,
    pub pd_class: Option<Element>,
    pub named: Vec<(String, DeltaPair)>,
    pub isos: Vec<IsoCheck>,
    pub expected: Expected,
}

impl Scenario {
    /// The three algebras are taken from the maps: `p*: C_- -> M_-` and `i*: M -> M_-`.
    pub fn new(
        p_star: GradedHom,
        i_star: GradedHom,
        n: usize,
        delta: Vec<DeltaPair>,
        pd_class: Option<Element>,
    ) -> Result<Self, CutError> {
        if n % 2 == 1 {
            return Err(CutError::OddDimension { n });
        }
        if p_star.target() != i_star.target() {
            return Err(CutError::MapMismatch {
                what: "p* and i* must share the target H*(M_-)".into(),
            });
        }
        let c_minus = p_star.source().clone();
        let m = i_star.source().clone();
        let m_minus = p_star.target().clone();
        for (what, a) in [("H*(C_-)", &c_minus), ("H*(M)", &m), ("H*(M_-)", &m_minus)] {
            if a.top_degree() != n {
                return Err(CutError::TopDegreeMismatch {
                    what: what.into(),
                    expected: n,
                    found: a.top_degree(),
                });
            }
        }
        for pair in &delta {
            check_pair(&c_minus, &m, pair)?;
        }
        if let Some(e) = &pd_class {
            c_minus.check_element(e)?;
            if e.degree() != 2 {
                return Err(GradedError::DegreeMismatch {
                    context: "Poincaré dual class".into(),
                    expected: 2,
                    found: e.degree(),
                }
                .into());
            }
        }
        Ok(Scenario {
            c_minus,
            m,
            m_minus,
            p_star,
            i_star,
            n,
            delta,
            pd_class,
            named: Vec::new(),
            isos: Vec::new(),
            expected: Expected::default(),
        })
    }

    pub fn with_named(mut self, named: Vec<(String, DeltaPair)>) -> Result<Self, CutError> {
        for (_, pair) in &named {
            check_pair(&self.c_minus, &self.m, pair)?;
        }
        self.named = named;
        Ok(self)
    }

    pub fn with_isos(mut self, isos: Vec<IsoCheck>) -> Self {
        self.isos = isos;
        self
    }

    pub fn with_expected(mut self, expected: Expected) -> Self {
        self.expected = expected;
        self
    }

    /// Generators standing for the named equalizer elements.
    pub fn named_generators(&self) -> Vec<Generator> {
        self.named
            .iter()
            .map(|(name, p)| Generator::new(name.clone(), p.degree()))
            .collect()
    }

    /// `p*(c) - i*(m)` in `H*(M_-)`.
    pub fn residual(&self, pair: &DeltaPair) -> Result<Element, CutError> {
        let pc = self.p_star.apply(&pair.cminus)?;
        let im = self.i_star.apply(&pair.m)?;
        Ok(pc.sub(&im)?)
    }
}

fn check_pair(
    c_minus: &GradedAlgebra,
    m: &GradedAlgebra,
    pair: &DeltaPair,
) -> Result<(), CutError> {
    c_minus.check_element(&pair.cminus)?;
    m.check_element(&pair.m)?;
    if pair.cminus.degree() != pair.m.degree() {
        return Err(GradedError::DegreeMismatch {
            context: "pair components".into(),
            expected: pair.cminus.degree(),
            found: pair.m.degree(),
        }
        .into());
    }
    Ok(())
}

/// Results of the input hypotheses: surjectivity of `i*` and `δ`-pairs in `ker(p* - i*)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HypothesisReport {
    pub i_star_surjective: Vec<bool>,
    pub p_star_surjective: Vec<bool>,
    /// Rendered `p*(c) - i*(m)` for each pair that misses the equalizer.
    pub delta_residuals: Vec<Option<String>>,
    pub named_residuals: Vec<(String, Option<String>)>,
}

impl HypothesisReport {
    pub fn failing_degrees(&self) -> Vec<usize> {
        self.i_star_surjective
            .iter()
            .enumerate()
            .filter(|(_, &ok)| !ok)
            .map(|(d, _)| d)
            .collect()
    }

    pub fn ok(&self) -> bool {
        self.failing_degrees().is_empty()
            && self.delta_residuals.iter().all(Option::is_none)
            && self.named_residuals.iter().all(|(_, r)| r.is_none())
    }

    /// The first violated hypothesis as an error.
    pub fn to_error(&self) -> Option<CutError> {
        let degrees = self.failing_degrees();
        if !degrees.is_empty() {
            return Some(CutError::PerfectionViolated { degrees });
        }
        if let Some((index, r)) = self
            .delta_residuals
            .iter()
            .enumerate()
            .find_map(|(i, r)| r.as_ref().map(|r| (i, r)))
        {
            return Some(CutError::DeltaOutsideEqualizer {
                index,
                residual: r.clone(),
            });
        }
        self.named_residuals.iter().find_map(|(name, r)| {
            r.as_ref().map(|r| CutError::NamedOutsideEqualizer {
                name: name.clone(),
                residual: r.clone(),
            })
        })
    }
}

pub fn validate_hypotheses(s: &Scenario) -> Result<HypothesisReport, CutError> {
    let render = |pair: &DeltaPair| -> Result<Option<String>, CutError> {
        let r = s.residual(pair)?;
        Ok((!r.is_zero()).then(|| s.m_minus.format_element(&r)))
    };
    Ok(HypothesisReport {
        i_star_surjective: is_surjective_degreewise(&s.i_star),
        p_star_surjective: is_surjective_degreewise(&s.p_star),
        delta_residuals: s.delta.iter().map(render).collect::<Result<_, _>>()?,
        named_residuals: s
            .named
            .iter()
            .map(|(name, p)| Ok((name.clone(), render(p)?)))
            .collect::<Result<_, CutError>>()?,
    })
}
