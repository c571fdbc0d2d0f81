use std::collections::BTreeMap;
use std::sync::Arc;

use thiserror::Error;

use super::doc::{PairDecl, ScenarioDoc};
use super::parser::parse_doc;
use super::DslError;
use crate::cutcalc::{CutError, DeltaPair, IsoCheck, Scenario};
use crate::graded::{build_hom, realize, GradedAlgebra, GradedHom, Presentation};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BuildOptions {
    /// Replaces the top degree of every algebra and the dimension `n`.
    pub max_degree: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScenarioError {
    #[error("parse error at {0}")]
    Parse(#[from] DslError),
    #[error("{context}: {source}")]
    Invalid {
        context: String,
        #[source]
        source: CutError,
    },
}

fn invalid<E: Into<CutError>>(context: impl Into<String>) -> impl FnOnce(E) -> ScenarioError {
    let context = context.into();
    move |e| ScenarioError::Invalid {
        context,
        source: e.into(),
    }
}

pub fn parse_scenario(text: &str) -> Result<Scenario, ScenarioError> {
    parse_scenario_with(text, BuildOptions::default())
}

pub fn parse_scenario_with(text: &str, opts: BuildOptions) -> Result<Scenario, ScenarioError> {
    Scenario::from_doc(&parse_doc(text)?, opts)
}

impl Scenario {
    /// Realizes the declared algebras and maps and assembles the validated scenario.
    pub fn from_doc(doc: &ScenarioDoc, opts: BuildOptions) -> Result<Scenario, ScenarioError> {
        let present = |name: &str| -> Result<Presentation, ScenarioError> {
            let a = doc.algebra(name).expect("names resolved by the parser");
            match opts.max_degree {
                Some(top) => a
                    .presentation
                    .with_top_degree(top)
                    .map_err(invalid(format!("algebra `{name}`"))),
                None => Ok(a.presentation.clone()),
            }
        };
        let mut realized: BTreeMap<&str, Arc<GradedAlgebra>> = BTreeMap::new();
        let mut algebra = |name: &str| -> Result<Arc<GradedAlgebra>, ScenarioError> {
            if let Some(a) = realized.get(name) {
                return Ok(a.clone());
            }
            let a =
                Arc::new(realize(&present(name)?).map_err(invalid(format!("algebra `{name}`")))?);
            let key = doc.algebra(name).expect("resolved").name.as_str();
            realized.insert(key, a.clone());
            Ok(a)
        };

        let cut = &doc.cut;
        let mut hom = |map_name: &str, src: &str, tgt: &str| -> Result<GradedHom, ScenarioError> {
            let m = doc.map(map_name).expect("names resolved by the parser");
            if m.source != src || m.target != tgt {
                return Err(ScenarioError::Invalid {
                    context: format!("map `{map_name}`"),
                    source: CutError::MapMismatch {
                        what: format!(
                            "expected a map {src} -> {tgt}, but `{map_name}` is {} -> {}",
                            m.source, m.target
                        ),
                    },
                });
            }
            let ctx = format!("map `{map_name}`");
            let src_p = present(src)?;
            let target = algebra(tgt)?;
            let images = m
                .images
                .iter()
                .zip(src_p.generators())
                .map(|((name, poly), g)| {
                    Ok((
                        name.clone(),
                        target.evaluate(poly, g.degree).map_err(invalid(&ctx))?,
                    ))
                })
                .collect::<Result<BTreeMap<_, _>, ScenarioError>>()?;
            build_hom(&src_p, target.clone(), &images).map_err(invalid(ctx))
        };
        let p_star = hom(&cut.p, &cut.minus, &cut.common)?;
        let i_star = hom(&cut.i, &cut.total, &cut.common)?;

        let c_minus = p_star.source().clone();
        let m = i_star.source().clone();
        let pair = |p: &PairDecl, ctx: &str| -> Result<DeltaPair, ScenarioError> {
            Ok(DeltaPair {
                cminus: c_minus
                    .evaluate(&p.cminus, p.degree)
                    .map_err(invalid(ctx))?,
                m: m.evaluate(&p.m, p.degree).map_err(invalid(ctx))?,
            })
        };
        // an override may leave pairs above the new top, where everything is zero
        let delta = cut
            .delta
            .iter()
            .enumerate()
            .filter(|(_, p)| opts.max_degree.is_none_or(|top| p.degree <= top))
            .map(|(k, p)| pair(p, &format!("delta pair #{k}")))
            .collect::<Result<Vec<_>, _>>()?;
        let pd = cut
            .pd
            .as_ref()
            .map(|e| {
                c_minus
                    .evaluate(e, 2)
                    .map_err(invalid("Poincaré dual class"))
            })
            .transpose()?;
        let named = cut
            .named
            .iter()
            .map(|(name, p)| Ok((name.clone(), pair(p, &format!("named element `{name}`"))?)))
            .collect::<Result<Vec<_>, ScenarioError>>()?;

        let n = opts.max_degree.unwrap_or(cut.n);
        let isos = doc
            .isos
            .iter()
            .map(|iso| {
                Ok(IsoCheck {
                    name: iso.algebra.clone(),
                    presentation: present(&iso.algebra)?,
                    target: iso.target,
                    images: iso.images.clone(),
                })
            })
            .collect::<Result<Vec<_>, ScenarioError>>()?;

        let scenario = Scenario::new(p_star, i_star, n, delta, pd)
            .and_then(|s| s.with_named(named))
            .map_err(invalid("cut"))?;
        let mut expected = doc.expected.clone();
        if opts.max_degree.is_some() {
            // golden dimensions describe the declared degrees only
            expected = Default::default();
        }
        Ok(scenario.with_isos(isos).with_expected(expected))
    }
}
