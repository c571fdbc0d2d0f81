//! Text and JSON rendering. JSON objects come out with sorted keys, rationals as `p/q`.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

use crate::cutcalc::{
    BettiVerdict, CutReport, ExtractedPresentation, HypothesisReport, IdentityVerdict, IsoOutcome,
    IsoTarget, ReductionReport, Scenario,
};
use crate::exactla::is_zero_vector;
use crate::graded::{GradedAlgebra, Presentation};

/// Version of the JSON layout, written as the top-level `"schema"` field.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Text,
    Json,
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

fn finish(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("json values serialize");
    s.push('\n');
    s
}

fn algebra_json(a: &GradedAlgebra) -> Value {
    let top = a.top_degree();
    let mut products = Vec::new();
    for d1 in 1..=top {
        for d2 in d1..=top - d1 {
            for i in 0..a.dim(d1) {
                let start = if d1 == d2 { i } else { 0 };
                for j in start..a.dim(d2) {
                    let coords = a.basis_product(d1, i, d2, j);
                    if !is_zero_vector(coords) {
                        products.push(json!({
                            "left": [d1, i],
                            "right": [d2, j],
                            "coords": coords.iter().map(ToString::to_string).collect::<Vec<_>>(),
                        }));
                    }
                }
            }
        }
    }
    let generators: Vec<Value> = a
        .generators()
        .iter()
        .map(|(g, e)| json!({"name": g.name, "degree": g.degree, "value": a.format_element(e)}))
        .collect();
    json!({
        "dims": a.dims(),
        "poincare": a.poincare().to_string(),
        "basis": (0..=top).map(|d| a.labels(d).to_vec()).collect::<Vec<_>>(),
        "products": products,
        "generators": generators,
    })
}

fn presentation_json(p: &Presentation) -> Value {
    json!({
        "generators": p.generators().iter().map(|g| json!({"name": g.name, "degree": g.degree})).collect::<Vec<_>>(),
        "relations": p.relations().iter().map(|r| p.display_relation(r)).collect::<Vec<_>>(),
        "top": p.top_degree(),
    })
}

fn extracted_json(x: &ExtractedPresentation, a: &GradedAlgebra) -> Value {
    let mut v = presentation_json(&x.presentation);
    v["images"] = json!(x
        .images
        .iter()
        .map(|e| a.format_element(e))
        .collect::<Vec<_>>());
    v
}

fn hypotheses_json(h: &HypothesisReport) -> Value {
    let mut v = to_value(h);
    v["failing_degrees"] = json!(h.failing_degrees());
    v["ok"] = json!(h.ok());
    v
}

fn reduction_json(r: &ReductionReport) -> Value {
    json!({
        "annihilator_dims": r.annihilator.dims(),
        "c0": algebra_json(&r.c0.algebra),
        "ses_check": r.ses_check.as_ref().map(to_value),
        "warnings": r.warnings,
    })
}

fn dims_line(out: &mut String, label: &str, dims: &[usize]) {
    let cells: Vec<String> = dims.iter().map(|d| format!("{d:>3}")).collect();
    let _ = writeln!(out, "  {label:<12}{}", cells.join(""));
}

fn verdict_line(out: &mut String, v: &IdentityVerdict) {
    if v.holds {
        let _ = writeln!(out, "  holds   {}", v.name);
    } else {
        let _ = writeln!(
            out,
            "  FAILS   {}  (lhs {}, rhs {}, difference {})",
            v.name, v.lhs, v.rhs, v.difference
        );
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn hypotheses_text(out: &mut String, s: &Scenario, h: &HypothesisReport) {
    let _ = writeln!(out, "hypotheses:");
    let failing = h.failing_degrees();
    if failing.is_empty() {
        let _ = writeln!(out, "  i* surjective in every degree: yes");
    } else {
        let list: Vec<String> = failing.iter().map(ToString::to_string).collect();
        let _ = writeln!(
            out,
            "  perfection hypothesis violated: i* is not surjective in degree {}",
            list.join(", ")
        );
    }
    let p_ok = h.p_star_surjective.iter().all(|&b| b);
    let _ = writeln!(out, "  p* surjective in every degree: {}", yes(p_ok));
    for (k, r) in h.delta_residuals.iter().enumerate() {
        match r {
            None => {
                let _ = writeln!(
                    out,
                    "  delta pair #{k} (degree {}): in ker(p* - i*)",
                    s.delta[k].degree()
                );
            }
            Some(r) => {
                let _ = writeln!(
                    out,
                    "  delta pair #{k}: not in ker(p* - i*), p*(c) - i*(m) = {r}"
                );
            }
        }
    }
    for (name, r) in &h.named_residuals {
        match r {
            None => {
                let _ = writeln!(out, "  named element {name}: in ker(p* - i*)");
            }
            Some(r) => {
                let _ = writeln!(
                    out,
                    "  named element {name}: not in ker(p* - i*), p*(c) - i*(m) = {r}"
                );
            }
        }
    }
    let _ = writeln!(out, "  verdict: {}", if h.ok() { "ok" } else { "FAILED" });
}

fn presentation_text(
    out: &mut String,
    title: &str,
    p: &Presentation,
    images: Option<(&GradedAlgebra, &[crate::graded::Element])>,
) {
    let gens: Vec<String> = p
        .generators()
        .iter()
        .enumerate()
        .map(|(k, g)| match images {
            Some((a, imgs)) => format!("{}:{} = {}", g.name, g.degree, a.format_element(&imgs[k])),
            None => format!("{}:{}", g.name, g.degree),
        })
        .collect();
    let _ = writeln!(out, "{title}:");
    let _ = writeln!(
        out,
        "  generators: {}",
        if gens.is_empty() {
            "none".into()
        } else {
            gens.join(", ")
        }
    );
    if p.relations().is_empty() {
        let _ = writeln!(out, "  relations: none");
    } else {
        let _ = writeln!(out, "  relations:");
        for r in p.relations() {
            let _ = writeln!(out, "    {}", p.display_relation(r));
        }
    }
}

fn isos_text(out: &mut String, isos: &[IsoOutcome]) {
    for iso in isos {
        let target = match iso.target {
            IsoTarget::C => "H*(C)",
            IsoTarget::CPlus => "H*(C_+)",
        };
        let v = &iso.verdict;
        let _ = writeln!(out, "presentation {} -> {target}:", iso.name);
        for r in &v.relations {
            let status = if r.holds { "ok  " } else { "FAIL" };
            let _ = writeln!(out, "  {status} {} |-> {}", r.relation, r.image);
        }
        let _ = writeln!(
            out,
            "  surjective in every degree: {}",
            yes(v.surjective.iter().all(|&b| b))
        );
        let _ = writeln!(
            out,
            "  dimensions {:?} vs {:?}",
            v.presentation_dims, v.algebra_dims
        );
        let _ = writeln!(
            out,
            "  isomorphism: {}",
            if v.is_isomorphism {
                "confirmed"
            } else {
                "REJECTED"
            }
        );
    }
}

fn messages(out: &mut String, title: &str, items: &[String]) {
    if !items.is_empty() {
        let _ = writeln!(out, "{title}:");
        for w in items {
            let _ = writeln!(out, "  {w}");
        }
    }
}

/// Full report of a cut computation.
pub fn emit_report(s: &Scenario, r: &CutReport, format: Format) -> String {
    match format {
        Format::Json => finish(json!({
            "schema": SCHEMA_VERSION,
            "n": r.n,
            "hypotheses": hypotheses_json(&r.hypotheses),
            "c_minus": algebra_json(&s.c_minus),
            "m": algebra_json(&s.m),
            "m_minus": algebra_json(&s.m_minus),
            "c": {
                "algebra": algebra_json(&r.c.algebra),
                "dims": r.c.algebra.dims(),
                "presentation": extracted_json(&r.c_presentation, &r.c.algebra),
                "named_presentation": r.c_named_presentation.as_ref().map(presentation_json),
            },
            "delta_ideal": {"dims": r.delta_ideal.dims()},
            "c_plus": {
                "algebra": algebra_json(&r.c_plus.algebra),
                "dims": r.c_plus.algebra.dims(),
                "presentation": extracted_json(&r.c_plus_presentation, &r.c_plus.algebra),
                "named_presentation": r.c_plus_named_presentation.as_ref().map(presentation_json),
            },
            "checks": to_value(&r.checks),
            "reduction": r.reduction.as_ref().map(reduction_json),
            "betti": r.betti.as_ref().map(to_value),
            "ses": r.ses.as_ref().map(to_value),
            "isos": to_value(&r.isos),
            "expectations": to_value(&r.expectations),
            "warnings": r.warnings,
            "failures": r.failures(),
        })),
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "cut scenario, n = {}", r.n);
            hypotheses_text(&mut out, s, &r.hypotheses);
            let _ = writeln!(out, "dimensions by degree 0..{}:", r.n);
            dims_line(&mut out, "H*(C_-)", &s.c_minus.dims());
            dims_line(&mut out, "H*(M)", &s.m.dims());
            dims_line(&mut out, "H*(M_-)", &s.m_minus.dims());
            dims_line(&mut out, "H*(C)", &r.c.algebra.dims());
            dims_line(&mut out, "delta ideal", &r.delta_ideal.dims());
            dims_line(&mut out, "H*(C_+)", &r.c_plus.algebra.dims());
            if let Some(red) = &r.reduction {
                dims_line(&mut out, "H*(C_0)", &red.c0.algebra.dims());
            }
            let _ = writeln!(
                out,
                "Poincaré polynomial of H*(C_+): {}",
                r.c_plus.algebra.poincare()
            );
            presentations_text(&mut out, r);
            let _ = writeln!(out, "checks:");
            let _ = writeln!(
                out,
                "  {}   dim H(C) = dim H(C_-) + dim H(M) - dim H(M_-)",
                if r.checks.dimension_formula {
                    "holds"
                } else {
                    "FAILS"
                }
            );
            verdict_line(&mut out, &r.checks.poincare_consistency);
            verdict_line(&mut out, &r.checks.delta_matches_relative);
            if let Some(b) = &r.betti {
                verdict_line(&mut out, &b.c0);
                verdict_line(&mut out, &b.c_minus);
            }
            if let Some(v) = &r.ses {
                verdict_line(&mut out, v);
            }
            isos_text(&mut out, &r.isos);
            for e in &r.expectations {
                let _ = writeln!(
                    out,
                    "expect {} = {:?}: {}",
                    e.key,
                    e.expected,
                    if e.ok {
                        "ok".to_string()
                    } else {
                        format!("MISMATCH, computed {:?}", e.actual)
                    }
                );
            }
            messages(&mut out, "warnings", &r.warnings);
            messages(&mut out, "failures", &r.failures());
            out
        }
    }
}

fn presentations_text(out: &mut String, r: &CutReport) {
    presentation_text(
        out,
        "H*(C) minimal presentation",
        &r.c_presentation.presentation,
        Some((&r.c.algebra, &r.c_presentation.images)),
    );
    if let Some(p) = &r.c_named_presentation {
        presentation_text(out, "H*(C) in the named elements", p, None);
    }
    presentation_text(
        out,
        "H*(C_+) minimal presentation",
        &r.c_plus_presentation.presentation,
        Some((&r.c_plus.algebra, &r.c_plus_presentation.images)),
    );
    if let Some(p) = &r.c_plus_named_presentation {
        presentation_text(out, "H*(C_+) in the named elements", p, None);
    }
}

/// Hypothesis verdicts only; this works for scenarios that fail them.
pub fn emit_validation(s: &Scenario, h: &HypothesisReport, format: Format) -> String {
    match format {
        Format::Json => finish(json!({
            "schema": SCHEMA_VERSION,
            "n": s.n,
            "hypotheses": hypotheses_json(h),
        })),
        Format::Text => {
            let mut out = String::new();
            hypotheses_text(&mut out, s, h);
            out
        }
    }
}

pub fn emit_reduction(s: &Scenario, r: &ReductionReport, format: Format) -> String {
    match format {
        Format::Json => finish(json!({
            "schema": SCHEMA_VERSION,
            "n": s.n,
            "c_minus": algebra_json(&s.c_minus),
            "reduction": reduction_json(r),
        })),
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "reduction H*(C_0) = H*(C_-) / Ann(pd):");
            dims_line(&mut out, "H*(C_-)", &s.c_minus.dims());
            dims_line(&mut out, "Ann(pd)", &r.annihilator.dims());
            dims_line(&mut out, "H*(C_0)", &r.c0.algebra.dims());
            let _ = writeln!(
                out,
                "Poincaré polynomial of H*(C_0): {}",
                r.c0.algebra.poincare()
            );
            if let Some(v) = &r.ses_check {
                verdict_line(&mut out, v);
            }
            messages(&mut out, "warnings", &r.warnings);
            out
        }
    }
}

pub fn emit_betti(b: &BettiVerdict, ses: &IdentityVerdict, format: Format) -> String {
    match format {
        Format::Json => finish(json!({
            "schema": SCHEMA_VERSION,
            "betti": to_value(b),
            "ses": to_value(ses),
            "all_hold": b.holds() && ses.holds,
        })),
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "Poincaré polynomial identities:");
            verdict_line(&mut out, &b.c0);
            verdict_line(&mut out, &b.c_minus);
            verdict_line(&mut out, ses);
            out
        }
    }
}

pub fn emit_presentations(r: &CutReport, format: Format) -> String {
    match format {
        Format::Json => finish(json!({
            "schema": SCHEMA_VERSION,
            "c": {
                "presentation": extracted_json(&r.c_presentation, &r.c.algebra),
                "named_presentation": r.c_named_presentation.as_ref().map(presentation_json),
            },
            "c_plus": {
                "presentation": extracted_json(&r.c_plus_presentation, &r.c_plus.algebra),
                "named_presentation": r.c_plus_named_presentation.as_ref().map(presentation_json),
            },
        })),
        Format::Text => {
            let mut out = String::new();
            presentations_text(&mut out, r);
            out
        }
    }
}

pub fn emit_isos(r: &CutReport, format: Format) -> String {
    match format {
        Format::Json => finish(json!({
            "schema": SCHEMA_VERSION,
            "isos": to_value(&r.isos),
            "all_confirmed": r.isos.iter().all(|i| i.verdict.is_isomorphism),
        })),
        Format::Text => {
            let mut out = String::new();
            if r.isos.is_empty() {
                let _ = writeln!(out, "no iso claims in scenario");
            }
            isos_text(&mut out, &r.isos);
            out
        }
    }
}
