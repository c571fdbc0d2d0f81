use std::fs;
use std::path::{Path, PathBuf};

use symcut::dsl::{BLOWUP_CP2, FLAG_U3};
use symcut_cli::{run, EXIT_FAILED, EXIT_INPUT, EXIT_OK};

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn symcut(args: &[&str]) -> Run {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("symcut").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Run {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p
}

fn arg(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn examples_writes_bundled_scenarios() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("nested");
    let r = symcut(&["examples", arg(&target)]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    assert_eq!(
        fs::read_to_string(target.join("flag_u3.cut")).unwrap(),
        FLAG_U3
    );
    assert_eq!(
        fs::read_to_string(target.join("blowup_cp2.cut")).unwrap(),
        BLOWUP_CP2
    );
}

#[test]
fn cut_flag_json() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "flag.cut", FLAG_U3);
    let r = symcut(&["cut", arg(&f), "--output", "json"]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    assert!(r.err.is_empty(), "{}", r.err);
    let compact: String = r.out.split_whitespace().collect();
    assert!(compact.contains("\"schema\":1"));
    assert!(compact.contains("\"dims\":[1,0,3,0,3,0,1]"), "{}", r.out);
}

#[test]
fn every_subcommand_succeeds_on_bundled_examples() {
    let dir = tempfile::tempdir().unwrap();
    for (name, text) in [("flag.cut", FLAG_U3), ("blowup.cut", BLOWUP_CP2)] {
        let f = write(dir.path(), name, text);
        for sub in [
            "validate",
            "cut",
            "reduce",
            "betti",
            "present",
            "verify-iso",
        ] {
            for output in ["text", "json"] {
                let r = symcut(&[sub, arg(&f), "--output", output, "--strict"]);
                assert_eq!(r.code, EXIT_OK, "{sub} {name} {output}: {}", r.err);
                assert!(!r.out.is_empty());
            }
        }
    }
}

#[test]
fn betti_reports_identities_holding() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "flag.cut", FLAG_U3);
    let r = symcut(&["betti", arg(&f)]);
    assert_eq!(r.code, EXIT_OK);
    let holds = r
        .out
        .lines()
        .filter(|l| l.trim_start().starts_with("holds"))
        .count();
    assert_eq!(holds, 3, "{}", r.out);
    assert!(!r.out.contains("FAILS"));
}

#[test]
fn output_is_byte_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "flag.cut", FLAG_U3);
    for output in ["text", "json"] {
        let a = symcut(&["cut", arg(&f), "--output", output]).out;
        let b = symcut(&["cut", arg(&f), "--output", output]).out;
        assert_eq!(a, b);
    }
}

#[test]
fn parse_error_exits_2_with_position() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(
        dir.path(),
        "bad.cut",
        "algebra A {\n  gen u:2;\n  rel u^2 +;\n}\n",
    );
    let r = symcut(&["cut", arg(&f)]);
    assert_eq!(r.code, EXIT_INPUT);
    assert!(r.err.contains("bad.cut:3:"), "{}", r.err);
    assert!(r.out.is_empty());
}

#[test]
fn unreadable_input_exits_2() {
    let r = symcut(&["validate", "/nonexistent/scenario.cut"]);
    assert_eq!(r.code, EXIT_INPUT);
    assert!(r.err.contains("cannot read"));
}

#[test]
fn usage_errors_exit_2_and_help_exits_0() {
    assert_eq!(symcut(&[]).code, EXIT_INPUT);
    assert_eq!(symcut(&["cut"]).code, EXIT_INPUT);
    assert_eq!(
        symcut(&["cut", "x.cut", "--output", "yaml"]).code,
        EXIT_INPUT
    );
    let help = symcut(&["--help"]);
    assert_eq!(help.code, EXIT_OK);
    assert!(help.out.contains("verify-iso"));
}

#[test]
fn broken_surjectivity_names_degree() {
    let dir = tempfile::tempdir().unwrap();
    let text = FLAG_U3.replace("u -> abar; v -> 0;", "u -> 0; v -> 0;");
    let f = write(dir.path(), "broken.cut", &text);
    let r = symcut(&["validate", arg(&f), "--output", "json"]);
    assert_eq!(r.code, EXIT_FAILED);
    assert!(r.err.contains("degree 2"), "{}", r.err);
    let compact: String = r.out.split_whitespace().collect();
    assert!(compact.contains("\"failing_degrees\":[2]"), "{}", r.out);
}

#[test]
fn failed_expectation_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let text = FLAG_U3.replace(
        "cplus_dims = [1, 0, 3, 0, 3, 0, 1]",
        "cplus_dims = [1, 0, 3, 0, 4, 0, 1]",
    );
    let f = write(dir.path(), "wrong.cut", &text);
    let r = symcut(&["cut", arg(&f)]);
    assert_eq!(r.code, EXIT_FAILED);
    assert!(r.err.contains("cplus_dims"), "{}", r.err);
}

#[test]
fn rejected_iso_claim_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let text = FLAG_U3.replace("a -> y + z;", "a -> y;");
    let f = write(dir.path(), "iso.cut", &text);
    let r = symcut(&["verify-iso", arg(&f)]);
    assert_eq!(r.code, EXIT_FAILED);
    assert!(r.err.contains("BottSamelson"), "{}", r.err);
}

#[test]
fn missing_pd_class() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "nopd.cut", &FLAG_U3.replace("  pd = b;\n", ""));
    for sub in ["reduce", "betti"] {
        let r = symcut(&[sub, arg(&f)]);
        assert_eq!(r.code, EXIT_FAILED);
        assert!(r.err.contains("no `pd` class"), "{}", r.err);
    }
    assert_eq!(symcut(&["cut", arg(&f)]).code, EXIT_OK);
}

#[test]
fn warnings_fail_only_under_strict() {
    let dir = tempfile::tempdir().unwrap();
    // a zero pd class makes the reduction the zero algebra, which is only a warning
    let text = FLAG_U3
        .replace("  pd = b;\n", "  pd = 0*a;\n")
        .replace("  c0_dims = [1, 0, 2, 0, 1, 0, 0];\n", "");
    let f = write(dir.path(), "zero_pd.cut", &text);
    let lax = symcut(&["reduce", arg(&f)]);
    assert_eq!(lax.code, EXIT_OK, "{}", lax.err);
    assert!(lax.err.contains("warning:"), "{}", lax.err);
    assert_eq!(symcut(&["reduce", arg(&f), "--strict"]).code, EXIT_FAILED);
}

#[test]
fn max_degree_override() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "flag.cut", FLAG_U3);
    let r = symcut(&["cut", arg(&f), "--max-degree", "4", "--output", "json"]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    assert!(r.out.contains("\"n\": 4"), "{}", r.out);
}
