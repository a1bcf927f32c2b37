//! End-to-end tests driving the `shilov` binary.

use std::process::{Command, Output};

fn shilov(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_shilov"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout(out)).expect("stdout is one JSON document")
}

#[test]
fn info_text_shows_the_boundary_model() {
    let out = shilov(&["info", "V"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("SO(10)/SO(7)"), "{text}");
    assert!(text.contains("boundary dim: 24"), "{text}");
    assert!(text.contains("torsion-free:   no"), "{text}");
    assert!(text.contains("citations:"), "{text}");
}

#[test]
fn info_json_matches_the_declared_schema() {
    let out = shilov(&["info", "IV(6)", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["domain"], "IV(6)");
    assert_eq!(doc["ambient_dim"], 12);
    assert_eq!(doc["rank"], 2);
    assert_eq!(doc["tube_class"], "tube");
    assert_eq!(doc["shilov_model"], "L^6");
    assert_eq!(doc["shilov_dim"], 6);
    assert_eq!(doc["lie_sphere_bundle_trivial"], true);
    let inv = &doc["invariants"];
    assert_eq!(inv["pi1_free_rank"], 1);
    assert_eq!(inv["orientable"], "yes");
    assert_eq!(inv["cover_kind"], "canonical-Z-cover");
    assert_eq!(inv["cover_poincare"], "1 + t^1 + t^5 + t^6");
    assert!(!inv["citations"].as_array().unwrap().is_empty());

    let out = shilov(&["info", "IV(7)"]);
    assert!(stdout(&out).contains("sphere bundle:  non-trivial"));
    let out = shilov(&["info", "V", "--format", "json"]);
    assert!(json(&out)["lie_sphere_bundle_trivial"].is_null());
}

#[test]
fn no_cite_strips_citations() {
    let out = shilov(&["info", "V", "--no-cite"]);
    assert!(!stdout(&out).contains("citations:"));
    let out = shilov(&["info", "V", "--format", "json", "--no-cite"]);
    assert_eq!(
        json(&out)["invariants"]["citations"]
            .as_array()
            .unwrap()
            .len(),
        0
    );
    let out = shilov(&[
        "distinguish",
        "VI",
        "IV(27)",
        "--format",
        "json",
        "--no-cite",
    ]);
    assert!(json(&out)["certificate"]["anchor"].is_null());
}

#[test]
fn parse_errors_exit_with_status_one() {
    let out = shilov(&["info", "I(0,1)"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("requires p >= q >= 1"));

    let out = shilov(&["distinguish", "IV(4)", "V"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("requires n >= 5"));

    let out = shilov(&["info", "VII"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_with_status_one() {
    let out = shilov(&["bogus"]);
    assert_eq!(out.status.code(), Some(1));
    let out = shilov(&["verify", "--max-dim", "1"]);
    assert_eq!(out.status.code(), Some(1));
    let out = shilov(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn distinguish_reports_separations_and_exits_zero() {
    let out = shilov(&["distinguish", "VI", "IV(27)", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let cert = &json(&out)["certificate"];
    assert_eq!(cert["result"], "separated");
    assert_eq!(cert["step"], 4);
    assert_eq!(cert["invariant"], "pi9_nonzero");
    assert_eq!(cert["lhs"], "yes");
    assert_eq!(cert["rhs"], "no");

    let out = shilov(&["distinguish", "I(3,3)", "I(3,3)"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("isomorphic"));
}

#[test]
fn inconclusive_distinguish_exits_with_status_three() {
    let out = shilov(&["distinguish", "IV(8)", "I(1,1) x I(4,1)"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("inconclusive"));

    let out = shilov(&[
        "distinguish",
        "IV(8)",
        "I(1,1) x I(4,1)",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(json(&out)["certificate"]["result"], "inconclusive");
}

#[test]
fn verify_sweep_exits_zero_and_reports() {
    let out = shilov(&["verify", "--max-dim", "60"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("result: verified"), "{text}");

    let out = shilov(&["verify", "--max-dim", "60", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["verified"], true);
    assert_eq!(doc["failures"].as_array().unwrap().len(), 0);
    assert_eq!(doc["identity_checks"].as_array().unwrap().len(), 5);
}

#[test]
fn coincidences_lists_the_known_products() {
    let out = shilov(&["coincidences", "--max-dim", "20", "--factors", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("IV(6) ~ I(1,1) x I(3,1)"), "{text}");

    let out = shilov(&["coincidences", "--max-dim", "20", "--factors", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("no invariant-vector coincidences"));

    let out = shilov(&[
        "coincidences",
        "--max-dim",
        "8",
        "--factors",
        "2",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert!(doc["coincidences"].is_array());
}
