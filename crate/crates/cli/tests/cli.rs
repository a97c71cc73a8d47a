use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use wes_cli::input::InputDocument;
use wes_cli::report::{GammaGroupJson, HomologyJson, InvariantsJson, ValidationJson};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn wes(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wes")).args(args).output().unwrap()
}

fn wes_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_wes"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn run(args: &[&str], name: &str) -> (i32, String, String) {
    let path = fixture(name);
    let mut all: Vec<&str> = args.to_vec();
    all.push(path.to_str().unwrap());
    let out = wes(&all);
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn validate_exit_codes() {
    assert_eq!(run(&["validate"], "cyclic_h5_m5.json").0, 0);
    assert_eq!(run(&["validate"], "z8_nonsplit.json").0, 0);
    assert_eq!(run(&["validate"], "zero.json").0, 0);

    let (code, out, _) = run(&["validate"], "even_h3.json");
    assert_eq!(code, 2);
    assert!(out.contains("H3 ⊗ Z2 ≠ 0"), "{out}");

    let (code, _, err) = run(&["validate"], "malformed.json");
    assert_eq!(code, 1);
    assert!(err.contains("invalid input document"), "{err}");

    let (code, _, err) = run(&["validate"], "noncanonical.json");
    assert_eq!(code, 1);
    assert!(err.contains("H4"), "{err}");

    assert_eq!(run(&["validate"], "does_not_exist.json").0, 1);
    assert_eq!(wes(&["frobnicate"]).status.code(), Some(1));
}

#[test]
fn validate_json() {
    let (code, out, _) = run(&["validate", "--json"], "even_h3.json");
    assert_eq!(code, 2);
    let r: ValidationJson = serde_json::from_str(&out).unwrap();
    assert!(!r.passed);
    assert_eq!(r.checks[0].name, "h3-odd");
    assert_eq!(r.checks[0].kind, "hypothesis");
}

#[test]
fn shape_errors_exit_one() {
    let doc = r#"{"groups": {"H3": {"torsion": [3]}, "H4": {"torsion": [2, 2]}, "H5": {"torsion": [8]},
                  "H6": {"rank": 1}}, "b6": [[1]], "pi5_class": [[1]]}"#;
    let out = wes_stdin(&["validate", "-"], doc);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("[FAIL] b6-shape"));
    let out = wes_stdin(&["invariants", "-"], doc);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn invariants_of_examples() {
    let (code, out, _) = run(&["invariants"], "z8_nonsplit.json");
    assert_eq!(code, 0);
    assert!(out.contains("Γ5 = H4 ⊗ Z2 ⊕ H2(H3; Z) = Z2 + Z2"), "{out}");
    assert!(out.contains("coker b6 = Z2"));
    assert!(out.contains("Ext(H5, coker b6) = Z2"));
    assert!(out.contains("pi4 ≅ H4 = Z2 + Z2"));
    assert!(out.contains("pi5 = Z16"));

    let (_, out, _) = run(&["invariants"], "cyclic_h5_m5.json");
    assert!(out.contains("Γ5 = H4 ⊗ Z2 ⊕ H2(H3; Z) = 0"), "{out}");

    let (_, out, _) = run(&["invariants", "--json"], "zero.json");
    let r: InvariantsJson = serde_json::from_str(&out).unwrap();
    for g in [&r.h3, &r.h4, &r.h5, &r.h6, &r.gamma5, &r.coker_b6, &r.ext, &r.pi5] {
        assert_eq!(g.name, "0");
    }
}

#[test]
fn invariants_json_round_trips() {
    for name in ["z8_split.json", "z8_nonsplit.json", "cyclic_h5_m15.json", "zero.json"] {
        let (code, out, _) = run(&["invariants", "--json"], name);
        assert_eq!(code, 0);
        let parsed: InvariantsJson = serde_json::from_str(&out).unwrap();
        let text = std::fs::read_to_string(fixture(name)).unwrap();
        let w = InputDocument::parse(&text).unwrap().to_wes_data().unwrap().resolve().unwrap();
        assert_eq!(parsed, InvariantsJson::from(&w.report()));
        assert_eq!(serde_json::to_string_pretty(&parsed).unwrap() + "\n", out);
    }
}

#[test]
fn gamma_group_cyclic_h5() {
    let (code, out, _) = run(&["gamma-group"], "cyclic_h5_m5.json");
    assert_eq!(code, 0);
    assert!(out.contains("image in aut(H6) x aut(H5): order 8, Z2 x Z4"), "{out}");

    let (_, out, _) = run(&["gamma-group", "--json"], "cyclic_h5_m15.json");
    let r: GammaGroupJson = serde_json::from_str(&out).unwrap();
    assert_eq!(r.image_f6_f5.order, 16);
    assert_eq!(r.image_f6_f5.structure.invariant_factors, Some(vec![2, 2, 4]));
}

#[test]
fn gamma_group_z8() {
    for name in ["z8_split.json", "z8_nonsplit.json"] {
        let (code, out, _) = run(&["gamma-group", "--oracle"], name);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("image in aut(H6) x aut(H5): order 8, Z2 x Z2 x Z2"), "{out}");
        assert!(out.contains(
            "(f6, f5) in {([[-1]], [[1]]), ([[-1]], [[3]]), ([[-1]], [[5]]), ([[-1]], [[7]]), \
             ([[1]], [[1]]), ([[1]], [[3]]), ([[1]], [[5]]), ([[1]], [[7]])}"
        ));
        assert!(out.contains("not Z4"), "{out}");
        assert!(out.contains("0 disagreements"));

        let (_, out, _) = run(&["gamma-group", "--json", "--oracle"], name);
        let r: GammaGroupJson = serde_json::from_str(&out).unwrap();
        assert_eq!(r.image_f6_f5.order, 8);
        assert_eq!(r.order, r.elements.len());
        let oracle = r.oracle.unwrap();
        assert!(oracle.disagreements.is_empty());
        assert_eq!(oracle.tuples, 2 * 4 * 6 * 2);
    }
}

#[test]
fn budget_exceeded_exits_four() {
    let (code, out, err) = run(&["gamma-group", "--budget", "1"], "z8_nonsplit.json");
    assert_eq!(code, 4);
    assert!(out.is_empty());
    assert!(err.contains("budget exceeded"), "{err}");
}

#[test]
fn hypothesis_violation_exits_two_everywhere() {
    for cmd in ["invariants", "gamma-group"] {
        let (code, _, err) = run(&[cmd], "even_h3.json");
        assert_eq!(code, 2, "{cmd}: {err}");
    }
}

#[test]
fn homology_command() {
    let (code, out, _) = run(&["homology"], "complex_zero.json");
    assert_eq!(code, 0);
    assert!(out.contains("H3 = Z\nH4 = Z^2\nH5 = Z^3\nH6 = Z\n"), "{out}");

    let (code, out, _) = run(&["homology", "--json"], "complex_d5.json");
    assert_eq!(code, 0);
    let h: HomologyJson = serde_json::from_str(&out).unwrap();
    assert_eq!(h.h4.name, "Z5");
    assert_eq!(h.template.b6, None);
    assert_eq!(h.hints.b6_rows, Some(0));

    let (code, _, err) = run(&["homology"], "complex_bad.json");
    assert_eq!(code, 1);
    assert!(err.contains("not a chain complex"), "{err}");

    assert_eq!(run(&["homology"], "zero.json").0, 1);
}

#[test]
fn homology_template_can_be_filled_in() {
    let (_, out, _) = run(&["homology", "--json"], "complex_d5.json");
    let h: HomologyJson = serde_json::from_str(&out).unwrap();
    let mut doc = serde_json::to_value(&h.template).unwrap();
    doc["b6"] = serde_json::json!([]);
    doc["pi5_class"] = serde_json::json!([]);
    let out = wes_stdin(&["validate", "-"], &doc.to_string());
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn groups_from_chain_complex() {
    let (code, out, _) = run(&["invariants"], "from_complex.json");
    assert_eq!(code, 0);
    assert!(out.contains("H4 = Z3"), "{out}");
}

#[test]
fn output_is_deterministic() {
    let path = fixture("z8_nonsplit.json");
    let args = ["gamma-group", "--json", "--oracle", path.to_str().unwrap()];
    let runs: Vec<Vec<u8>> = ["1", "4", "1"]
        .iter()
        .map(|threads| {
            Command::new(env!("CARGO_BIN_EXE_wes"))
                .args(args)
                .env("RAYON_NUM_THREADS", threads)
                .output()
                .unwrap()
                .stdout
        })
        .collect();
    assert!(!runs[0].is_empty());
    assert!(runs.windows(2).all(|w| w[0] == w[1]));
}

#[test]
fn large_integers_survive() {
    let doc = r#"{"groups": {"H3": {"torsion": []}, "H4": {"torsion": []},
                  "H5": {"torsion": [340282366920938463463374607431768211457]},
                  "H6": {"torsion": []}}, "b6": [], "pi5_class": [[]]}"#;
    let out = wes_stdin(&["invariants", "--json", "-"], doc);
    assert_eq!(out.status.code(), Some(0));
    let r: InvariantsJson = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r.h5.name, "Z340282366920938463463374607431768211457");
}
