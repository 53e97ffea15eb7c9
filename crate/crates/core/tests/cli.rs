mod common;

use std::process::{Command, Output};

use common::fixture_path;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bn-courant"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_on(command: &str, fixture: &str) -> Output {
    let path = fixture_path(fixture);
    run(&[command, "--instance", path.to_str().unwrap()])
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn exit_codes_over_the_fixture_catalog() {
    let table = [
        ("axioms", "untwisted_d2", 0),
        ("axioms", "twisted_d3", 0),
        ("axioms", "nonclosed_f2", 1),
        ("structure", "cx_even", 0),
        ("structure", "kah_bfield", 0),
        ("structure", "untwisted_d2", 2),
        ("integrable", "cx_even", 0),
        ("integrable", "cx_even_twisted", 0),
        ("integrable", "cx_odd3_twisted", 1),
        ("integrable", "kah3_twisted", 1),
        ("adapt", "cx_odd", 0),
        ("adapt", "cx_even_gauge", 0),
        ("adapt", "cx_odd3_twisted", 0),
        ("kahler", "kah", 0),
        ("kahler", "kah_bfield", 0),
        ("kahler", "kah3_h3", 1),
        ("kahler", "kah3_twisted", 1),
        ("kahler", "cx_even", 2),
    ];
    for (command, fixture, expected) in table {
        let out = run_on(command, fixture);
        assert_eq!(
            code(&out),
            expected,
            "{command} {fixture}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
}

#[test]
fn failing_axioms_report_a_witness() {
    let out = run_on("axioms", "nonclosed_f2");
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let failed: Vec<_> = report["stages"][0]["postconditions"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|p| p["pass"] == false)
        .collect();
    assert!(!failed.is_empty());
    assert!(failed.iter().all(|p| p["witness"].is_string()));
    assert_eq!(report["pass"], false);
}

#[test]
fn non_integrable_input_prints_the_nijenhuis_witness() {
    let out = run_on("integrable", "cx_odd3_twisted");
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("N_F(P e_"));
}

#[test]
fn adapt_confirms_the_torsion_formulas() {
    let out = run_on("adapt", "cx_odd");
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("T(u,v,w) = ¼⟨N_F(u,v),w⟩ on U^⊥"));
    assert!(text.contains("integrable: T = 0"));
}

#[test]
fn adapt_certifies_the_obstruction() {
    let out = run_on("adapt", "cx_odd3_twisted");
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("rank 27 vs augmented rank 28"));
}

#[test]
fn kahler_fixture_shows_all_three_claims() {
    let out = run_on("kahler", "kah");
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    for claim in ["\"T = 0\"", "\"D̃ G = 0\"", "\"D̃ F = 0\""] {
        assert!(text.contains(claim), "{claim}");
    }
}

#[test]
fn prolong_dimensions() {
    let out = run(&["prolong", "--n", "3"]);
    assert_eq!(code(&out), 0);
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let u21 = report["dimensions"]
        .as_array()
        .unwrap()
        .iter()
        .find(|d| d["algebra"] == "u(2,1)")
        .unwrap();
    assert_eq!(u21["dimension_expected"], 36);
    assert_eq!(u21["dimension_computed"], 36);

    let out = run(&["prolong", "--split", "1,0:0,1"]);
    assert_eq!(code(&out), 0);
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["dimensions"][0]["dimension_computed"], 4);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&run(&["prolong", "--n", "0"])), 2);
    assert_eq!(code(&run(&["prolong", "--split", "1:0"])), 2);
    assert_eq!(code(&run(&["prolong"])), 2);
    assert_eq!(code(&run(&["axioms", "--instance", "/nonexistent/instance.json"])), 2);
}

#[test]
fn malformed_polynomial_reports_its_position() {
    let text = std::fs::read_to_string(fixture_path("cx_even_gauge")).unwrap();
    let broken = text.replacen("\"x1\"", "\"x1 +* 2\"", 1);
    assert_ne!(text, broken);
    let path = std::env::temp_dir().join(format!("bn-courant-malformed-{}.json", std::process::id()));
    std::fs::write(&path, broken).unwrap();
    let out = run(&["structure", "--instance", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(code(&out), 2);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("position 4"), "{err}");
}

#[test]
fn reports_are_byte_identical_across_runs() {
    for (command, fixture) in [("axioms", "twisted_d3"), ("adapt", "cx_even")] {
        let a = run_on(command, fixture);
        let b = run_on(command, fixture);
        assert_eq!(a.stdout, b.stdout, "{command} {fixture}");
    }
}

#[test]
fn out_flag_writes_the_same_report() {
    let path = std::env::temp_dir().join(format!("bn-courant-out-{}.json", std::process::id()));
    let fixture = fixture_path("untwisted_d2");
    let fixture = fixture.to_str().unwrap();
    let out = run(&["axioms", "--instance", fixture, "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let written = std::fs::read(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(written, run(&["axioms", "--instance", fixture]).stdout);
}

#[test]
fn seed_changes_the_samples() {
    let fixture = fixture_path("twisted_d3");
    let fixture = fixture.to_str().unwrap();
    let a = run(&["axioms", "--instance", fixture, "--seed", "1"]);
    let report: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(report["seed"], 1);
    assert_eq!(code(&a), 0);
}
