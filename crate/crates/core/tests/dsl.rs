use proptest::prelude::*;

use symcut::cutcalc::{compute_cut_plus, CutError};
use symcut::dsl::{
    bundled_examples, emit_report, emit_validation, parse_doc, parse_scenario, parse_scenario_with,
    BuildOptions, DslErrorKind, Format, ScenarioError, FLAG_U3,
};
use symcut::graded::GradedError;

const POINT: &str = "
algebra P { top 0; }
map id: P -> P { }
cut { minus = P; total = P; common = P; p = id; i = id; n = 0; }
";

fn parse_kind(text: &str) -> DslErrorKind {
    match parse_scenario(text) {
        Err(ScenarioError::Parse(e)) => e.kind,
        other => panic!("expected a parse error, got {other:?}"),
    }
}

#[test]
fn bundled_round_trip() {
    for (name, text) in bundled_examples() {
        let doc = parse_doc(text).unwrap();
        let printed = doc.to_string();
        let reparsed = parse_doc(&printed).unwrap();
        assert_eq!(
            reparsed.to_string(),
            printed,
            "{name}: printing is not a fixed point"
        );
        assert_eq!(
            parse_scenario(&printed).unwrap(),
            parse_scenario(text).unwrap(),
            "{name}"
        );
    }
}

#[test]
fn flag_file_shape() {
    let doc = parse_doc(FLAG_U3).unwrap();
    assert_eq!(doc.cut.n, 6);
    assert_eq!(doc.cut.delta.len(), 2);
    assert_eq!(doc.maps.len(), 2);
    let s = parse_scenario(FLAG_U3).unwrap();
    assert_eq!(s.c_minus.dims(), vec![1, 0, 2, 0, 2, 0, 1]);
    assert_eq!(s.m.dims(), vec![1, 0, 2, 0, 2, 0, 1]);
    assert_eq!(s.m_minus.dims(), vec![1, 0, 1, 0, 0, 0, 0]);
}

#[test]
fn point_scenario() {
    let s = parse_scenario(POINT).unwrap();
    let r = compute_cut_plus(&s).unwrap();
    assert_eq!(r.c_plus.algebra.dims(), vec![1]);
    let json = emit_report(&s, &r, Format::Json);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["c_plus"]["dims"], serde_json::json!([1]));
}

#[test]
fn json_report_is_deterministic_and_versioned() {
    let s = parse_scenario(FLAG_U3).unwrap();
    let a = emit_report(&s, &compute_cut_plus(&s).unwrap(), Format::Json);
    let s2 = parse_scenario(FLAG_U3).unwrap();
    let b = emit_report(&s2, &compute_cut_plus(&s2).unwrap(), Format::Json);
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(
        v["c_plus"]["dims"],
        serde_json::json!([1, 0, 3, 0, 3, 0, 1])
    );
    assert_eq!(v["c"]["dims"], serde_json::json!([1, 0, 3, 0, 4, 0, 2]));
}

#[test]
fn inhomogeneous_relation() {
    let text = "algebra A { gen u:2, v:2; rel u*v - u; top 4; }";
    assert_eq!(parse_kind(text), DslErrorKind::InhomogeneousRelation);
}

#[test]
fn unknown_identifier_in_pair() {
    let text = FLAG_U3.replace("{cminus: b^2, m: v^2}", "{cminus: b^2, m: w^2}");
    assert_eq!(
        parse_kind(&text),
        DslErrorKind::UnknownIdentifier("w".into())
    );
}

#[test]
fn degree_mismatches() {
    let text = FLAG_U3.replace("a -> abar; b -> 0;", "a -> abar^2; b -> 0;");
    assert_eq!(parse_kind(&text), DslErrorKind::DegreeMismatch);
    let text = FLAG_U3.replace("{cminus: b^2, m: v^2}", "{cminus: b^2, m: v}");
    assert_eq!(parse_kind(&text), DslErrorKind::DegreeMismatch);
    let text = FLAG_U3.replace("pd = b;", "pd = b^2;");
    assert_eq!(parse_kind(&text), DslErrorKind::DegreeMismatch);
}

#[test]
fn duplicates() {
    let text = FLAG_U3.replace("gen a:2, b:2;", "gen a:2, a:2;");
    assert_eq!(parse_kind(&text), DslErrorKind::Duplicate("a".into()));
    let text = format!("{FLAG_U3}\nalgebra M {{ top 6; }}");
    assert_eq!(parse_kind(&text), DslErrorKind::Duplicate("M".into()));
    let text = FLAG_U3.replace("n = 6;", "n = 6; n = 6;");
    assert_eq!(parse_kind(&text), DslErrorKind::Duplicate("n".into()));
}

#[test]
fn syntax_errors_carry_positions() {
    let e = parse_doc("algebra A {\n  gen u:2\n  top 2;\n}").unwrap_err();
    assert_eq!(e.kind, DslErrorKind::Syntax);
    assert_eq!((e.line, e.col), (3, 3));
    let e = parse_doc("algebra A { gen u:2; rel 1.5*u; top 2; }").unwrap_err();
    assert!(e.message.contains("p/q"));
    let e = parse_doc("algebra A {\n  gen u:2;\n  rel u^2;\n  gen v:2;\n  top 2;\n}").unwrap_err();
    assert_eq!(e.kind, DslErrorKind::Syntax);
    assert_eq!((e.line, e.col), (4, 3));
}

#[test]
fn missing_pieces() {
    assert_eq!(parse_kind("algebra A { top 2; }"), DslErrorKind::Semantic);
    let text = FLAG_U3.replace("n = 6;", "");
    assert_eq!(parse_kind(&text), DslErrorKind::Semantic);
    let text = FLAG_U3.replace("b -> 0;", "");
    assert_eq!(parse_kind(&text), DslErrorKind::Semantic);
}

#[test]
fn semantic_failures_are_invalid_not_parse() {
    // with abar^2 != 0 the relation a^2 is no longer sent to zero
    let text = FLAG_U3.replace("rel abar^2;", "rel abar^3;");
    match parse_scenario(&text) {
        Err(ScenarioError::Invalid {
            source: CutError::Graded(GradedError::RelationNotPreserved { relation, .. }),
            ..
        }) => {
            assert_eq!(relation, "a^2");
        }
        other => panic!("{other:?}"),
    }
    let text = FLAG_U3.replace("i = i;", "i = p;");
    match parse_scenario(&text) {
        Err(ScenarioError::Invalid {
            source: CutError::MapMismatch { .. },
            ..
        }) => {}
        other => panic!("{other:?}"),
    }
    let text = FLAG_U3.replace("n = 6;", "n = 4;");
    match parse_scenario(&text) {
        Err(ScenarioError::Invalid {
            source: CutError::TopDegreeMismatch { .. },
            ..
        }) => {}
        other => panic!("{other:?}"),
    }
}

#[test]
fn validation_names_failing_degree() {
    let text = FLAG_U3.replace("u -> abar; v -> 0;", "u -> 0; v -> 0;");
    let text = text.replace("a -> abar; b -> 0;", "a -> 0; b -> 0;");
    let s = parse_scenario(&text).unwrap();
    let h = symcut::cutcalc::validate_hypotheses(&s).unwrap();
    assert_eq!(h.failing_degrees(), vec![2]);
    let out = emit_validation(&s, &h, Format::Text);
    assert!(out.contains("not surjective in degree 2"), "{out}");
    assert!(
        matches!(compute_cut_plus(&s), Err(CutError::PerfectionViolated { degrees }) if degrees == vec![2])
    );
}

#[test]
fn max_degree_override() {
    let s = parse_scenario_with(
        FLAG_U3,
        BuildOptions {
            max_degree: Some(4),
        },
    )
    .unwrap();
    assert_eq!(s.n, 4);
    let r = compute_cut_plus(&s).unwrap();
    assert_eq!(r.c.algebra.dims(), vec![1, 0, 3, 0, 4]);
    assert!(r.expectations.is_empty());
}

fn token() -> impl Strategy<Value = String> {
    prop_oneof![
        Just("algebra".to_string()),
        Just("map".to_string()),
        Just("cut".to_string()),
        Just("gen".to_string()),
        Just("rel".to_string()),
        Just("top".to_string()),
        Just("A".to_string()),
        Just("u".to_string()),
        Just("{".to_string()),
        Just("}".to_string()),
        Just(";".to_string()),
        Just(":".to_string()),
        Just("->".to_string()),
        Just("^".to_string()),
        Just("*".to_string()),
        Just("/".to_string()),
        Just("(".to_string()),
        Just(")".to_string()),
        Just("[".to_string()),
        Just("]".to_string()),
        Just("=".to_string()),
        Just("-".to_string()),
        (0u32..100).prop_map(|n| n.to_string()),
    ]
}

proptest! {
    #[test]
    fn parser_never_panics_on_bytes(text in "\\PC{0,200}") {
        let _ = parse_scenario(&text);
    }

    #[test]
    fn parser_never_panics_on_token_soup(toks in prop::collection::vec(token(), 0..60)) {
        let _ = parse_scenario(&toks.join(" "));
    }

    #[test]
    fn parser_never_panics_on_mutated_flag(cut in 0usize..2000, len in 0usize..20, insert in "\\PC{0,5}") {
        let start = cut.min(FLAG_U3.len());
        let end = (start + len).min(FLAG_U3.len());
        if FLAG_U3.is_char_boundary(start) && FLAG_U3.is_char_boundary(end) {
            let text = format!("{}{}{}", &FLAG_U3[..start], insert, &FLAG_U3[end..]);
            let _ = parse_scenario(&text);
        }
    }
}
