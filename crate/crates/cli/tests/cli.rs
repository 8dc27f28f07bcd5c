use std::io::Write;
use std::process::{Command, Stdio};

use clap::Parser;
use npreproj_cli::specfile::{parse_spec, to_text};
use npreproj_cli::{run, Cli, Output, EXIT_ERROR, EXIT_FALSE, EXIT_OK, EXIT_UNKNOWN};
use serde_json::Value;

fn npreproj(args: &[&str], input: &str) -> Output {
    let cli = Cli::try_parse_from(std::iter::once("npreproj").chain(args.iter().copied())).expect("valid arguments");
    run(&cli, &mut || Ok(input.to_string()))
}

fn family(args: &[&str]) -> String {
    let mut full = vec!["family"];
    full.extend_from_slice(args);
    let out = npreproj(&full, "");
    assert_eq!(out.code, EXIT_OK, "{}", out.stdout);
    out.stdout
}

fn json(out: &Output) -> Value {
    serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", out.stdout))
}

#[test]
fn nakayama_pipeline() {
    let out = npreproj(&["analyze", "--n", "2"], &family(&["linear_nakayama", "3"]));
    assert_eq!(out.code, EXIT_OK);
    let r = &json(&out)["report"];
    assert_eq!(r["n_rep_finite"]["value"]["verdict"], "true");
    assert_eq!(r["preprojective"]["value"]["dim"], 6);
    assert_eq!(r["cross_validation"]["agree"], true);
}

#[test]
fn auslander_a3_gamma() {
    let out = npreproj(&["gamma", "--n", "2"], &family(&["auslander", "A3-nonlinear"]));
    let r = &json(&out)["report"];
    assert_eq!(r["dim"], 5);
    assert_eq!(r["maps_shape"], "∘→∘←∘");
}

#[test]
fn check_verdicts_and_exit_codes() {
    let aus_a4 = family(&["auslander", "A4"]);
    let out = npreproj(&["check", "self-injective", "--n", "2"], &aus_a4);
    assert_eq!((out.code, json(&out)["verdict"].as_str()), (EXIT_OK, Some("true")));
    assert_eq!(json(&out)["report"]["target"], "preprojective");

    let aus_a3 = family(&["auslander", "A3-nonlinear"]);
    let out = npreproj(&["check", "n-rep-finite", "--n", "2"], &aus_a3);
    assert_eq!((out.code, json(&out)["verdict"].as_str()), (EXIT_FALSE, Some("false")));

    // the input itself is not self-injective, its preprojective algebra is
    let out = npreproj(&["check", "self-injective", "--direct"], &aus_a4);
    assert_eq!(out.code, EXIT_FALSE);

    let out = npreproj(&["check", "gorenstein", "--n", "2"], &aus_a3);
    assert_eq!(json(&out)["report"]["detail"]["value"], 1);
}

#[test]
fn caps_give_unknown() {
    let out = npreproj(&["check", "tau-n-finite", "--n", "1", "--cap", "1"], &family(&["dynkin", "A4"]));
    assert_eq!(out.code, EXIT_UNKNOWN, "{}", out.stdout);
    assert_eq!(json(&out)["verdict"], "unknown");
    assert_eq!(json(&out)["report"]["detail"]["value"]["verdict"], "unknown");
}

#[test]
fn orbit_hom_of_a2() {
    let out = npreproj(&["amiot-hom", "--n", "1"], &family(&["dynkin", "A2"]));
    let r = &json(&out)["report"];
    assert_eq!(r["total"], 4);
    assert_eq!(r["pieces"]["0"], 3);
}

#[test]
fn preprojective_presentation_reparses() {
    let out = npreproj(&["preprojective", "--n", "2"], &family(&["linear_nakayama", "3"]));
    let r = &json(&out)["report"];
    assert_eq!(r["graded_dims"], serde_json::json!([5, 1]));
    let spec = parse_spec(r["spec"].as_str().unwrap()).unwrap();
    assert_eq!(spec.spec.vertices.len(), 3);
    let again = npreproj(&["check", "self-injective", "--direct"], r["spec"].as_str().unwrap());
    assert_eq!(again.code, EXIT_OK);
}

#[test]
fn json_is_deterministic() {
    let input = family(&["auslander", "A3-nonlinear"]);
    let a = npreproj(&["analyze", "--n", "2", "--seed", "7"], &input);
    let b = npreproj(&["analyze", "--n", "2", "--seed", "7"], &input);
    assert_eq!(a.stdout, b.stdout);
    assert!(json(&a).get("timings_ms").is_none());
    let t = npreproj(&["analyze", "--n", "2", "--timings"], &input);
    assert!(json(&t)["timings_ms"]["preprojective"].is_number());
}

#[test]
fn empty_report_skeleton() {
    let out = npreproj(&["analyze"], "vertices: []\n");
    assert_eq!(out.code, EXIT_OK);
    let v = json(&out);
    for key in ["tool", "version", "schema", "input_digest", "seed", "n", "caps", "report"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    assert_eq!(v["report"]["dim"], 0);
    assert_eq!(v["report"]["gamma"]["status"], "skipped");
}

#[test]
fn markdown_tau_table() {
    let out = npreproj(&["analyze", "--n", "2", "--format", "md"], &family(&["auslander", "A3-nonlinear"]));
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("| Λ | 1 | 2 | 3 / 1 2 | 4 / 3 / 2 | 5 / 3 / 1 | 6 / 4 5 / 3 | 15 |"), "{}", out.stdout);
    assert!(out.stdout.contains("| τ₂⁻Λ | 4 | 5 | 6 / 4 5 | - | - | - | 5 |"), "{}", out.stdout);
    assert!(out.stdout.contains("- `3`: a1 → 1, a2 → 2"));
    assert!(out.stdout.contains("maps between summands: ∘→∘←∘"));
}

#[test]
fn structured_errors() {
    let out = npreproj(&["analyze"], "vertices: [1, 2, 3]\narrows: [a1: 1 -> 2, a2: 2 -> 3]\nrelations: [a2*a1]\n");
    assert_eq!(out.code, EXIT_ERROR);
    let e = &json(&out)["error"];
    assert_eq!(e["kind"], "parse");
    assert_eq!(e["detail"]["kind"], "non-composable");
    assert_eq!((e["detail"]["line"].as_u64(), e["detail"]["column"].as_u64()), (Some(3), Some(16)));

    let out = npreproj(&["analyze", "--format", "md"], "vertices: [1\n");
    assert_eq!(out.code, EXIT_ERROR);
    assert!(out.stdout.is_empty() && out.stderr.starts_with("error: parse error at 1:"), "{}", out.stderr);

    let out = npreproj(&["family", "nope"], "");
    assert_eq!(json(&out)["error"]["kind"], "usage");
    let out = npreproj(&["family", "linear_nakayama", "2"], "");
    assert_eq!(json(&out)["error"]["variant"], "InvalidParameter");
}

#[test]
fn field_resolution() {
    let a2 = "vertices: [1, 2]\narrows: [a: 1 -> 2]\n";
    assert_eq!(json(&npreproj(&["analyze", "--n", "1"], a2))["field"], "GF(32003)");
    assert_eq!(json(&npreproj(&["analyze", "--n", "1", "--field", "Q"], a2))["field"], "Q");
    let with_field = format!("field: GF(5)\n{a2}");
    assert_eq!(json(&npreproj(&["analyze", "--n", "1"], &with_field))["field"], "GF(5)");
    assert_eq!(json(&npreproj(&["analyze", "--n", "1", "--field", "GF(7)"], &with_field))["field"], "GF(7)");
}

#[test]
fn family_specs_are_canonical() {
    let cases: [&[&str]; 7] = [
        &["linear_nakayama", "4"],
        &["thm39_type2", "3", "gd"],
        &["canonical_2222", "3"],
        &["canonical_2222", "1/2"],
        &["dynkin", "A3:<>"],
        &["auslander", "A3"],
        &["higher_auslander_chain", "3", "2"],
    ];
    for args in cases {
        let text = family(args);
        let parsed = parse_spec(&text).unwrap_or_else(|e| panic!("{args:?}: {e}"));
        assert_eq!(to_text(&parsed), text, "{args:?}");
    }
    let chain = parse_spec(&family(&["higher_auslander_chain", "3", "2"])).unwrap();
    assert_eq!(chain.spec.vertices.len(), 10);
}

#[test]
fn binary_reads_stdin() {
    let exe = env!("CARGO_BIN_EXE_npreproj");
    let spec = Command::new(exe).args(["family", "linear_nakayama", "3"]).output().unwrap();
    assert!(spec.status.success());
    let mut child = Command::new(exe).args(["check", "n-rep-finite", "--n", "2"]).stdin(Stdio::piped()).stdout(Stdio::piped()).spawn().unwrap();
    child.stdin.take().unwrap().write_all(&spec.stdout).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_OK));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["verdict"], "true");
}
