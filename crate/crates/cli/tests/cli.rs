//! End-to-end tests driving the compiled binary: exit codes, report
//! determinism, file round-trips, and the documented command examples.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::{json, Value};
use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tenscat"))
        .args(args)
        .output()
        .expect("the binary should launch")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no exit code; killed by a signal?")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn path_str(dir: &TempDir, name: &str) -> String {
    dir.path().join(name).to_str().unwrap().to_string()
}

fn read_json(path: &str) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn write_json(path: &str, value: &Value) {
    std::fs::write(path, serde_json::to_string_pretty(value).unwrap()).unwrap();
}

fn scalar_matrix(entries: &[&[&str]]) -> Value {
    json!({
        "rows": entries.len(),
        "cols": entries[0].len(),
        "entries": entries
            .iter()
            .map(|row| row.to_vec())
            .collect::<Vec<_>>(),
    })
}

/// Emits a named builtin algebra into `dir` and returns both the path
/// and the parsed document, for tests that assemble module files.
fn emit_algebra(dir: &TempDir, builtin: &str) -> (String, Value) {
    let path = path_str(dir, &format!("{builtin}.json"));
    let out = run(&["algebra", "emit", "--builtin", builtin, "--out", &path]);
    assert_eq!(code(&out), 0, "emit failed: {}", stderr(&out));
    let doc = read_json(&path);
    (path, doc)
}

#[test]
fn checking_sweedler_passes_every_axiom() {
    let out = run(&["algebra", "check", "--builtin", "sweedler"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("check hopf-axioms: pass"), "got: {text}");
    assert!(text.contains("dim 4"), "got: {text}");
}

#[test]
fn checking_taft_three_reports_dim_nine() {
    let out = run(&["algebra", "check", "--builtin", "taft", "--n", "3"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("dim 9"), "got: {text}");
    assert!(text.contains("zeta_3"), "got: {text}");
}

#[test]
fn the_z6_counterexample_fails_with_its_witness() {
    let out = run(&["verify", "z6-counterexample"]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("Z/2"), "got: {text}");
    assert!(text.contains("fail"), "got: {text}");
}

#[test]
fn kunneth_over_sweedler_passes_fifty_seeded_pairs() {
    let out = run(&[
        "verify", "kunneth", "--builtin", "sweedler", "--cases", "50", "--seed", "7",
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    assert!(stdout(&out).contains("check kunneth-suite: pass"));
}

#[test]
fn the_a2_functor_suite_passes() {
    let out = run(&["verify", "a2-functor"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
}

#[test]
fn usage_and_input_errors_exit_two() {
    assert_eq!(code(&run(&["verify", "bogus-suite"])), 2);
    assert_eq!(code(&run(&[])), 2);
    assert_eq!(code(&run(&["algebra", "check", "--builtin", "nope"])), 2);
    assert_eq!(
        code(&run(&["algebra", "check", "--input", "/definitely/not/here.json"])),
        2
    );
    assert_eq!(code(&run(&["--help"])), 0);
    assert_eq!(code(&run(&["verify", "--help"])), 0);
}

#[test]
fn structured_reports_are_byte_deterministic() {
    let args = [
        "verify", "kunneth", "--builtin", "c2", "--cases", "5", "--seed", "9",
        "--format", "structured",
    ];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(code(&first), 0);
    assert_eq!(first.stdout, second.stdout);

    let report: Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(report["check"], "kunneth-suite");
    assert_eq!(report["verdict"], "pass");
    let cases = report["cases"].as_array().unwrap();
    assert_eq!(cases.len(), 5);
    for case in cases {
        assert!(case["id"].is_string());
        assert!(case["inputs"].is_string());
        assert_eq!(case["verdict"], "pass");
    }
    assert!(report["notes"].as_array().is_some());
}

#[test]
fn the_out_flag_mirrors_the_rendered_report() {
    let dir = TempDir::new().unwrap();
    let mirror = path_str(&dir, "report.json");
    let out = run(&[
        "verify", "unit", "--builtin", "sweedler", "--format", "structured",
        "--out", &mirror,
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(std::fs::read(&mirror).unwrap(), out.stdout);
}

#[test]
fn emitted_algebra_files_reparse_and_recheck() {
    let dir = TempDir::new().unwrap();
    let (first, _) = emit_algebra(&dir, "q8");
    let second = path_str(&dir, "q8-again.json");
    let out = run(&["algebra", "emit", "--builtin", "q8", "--out", &second]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        std::fs::read(&first).unwrap(),
        std::fs::read(&second).unwrap()
    );

    let check = run(&["algebra", "check", "--input", &first]);
    assert_eq!(code(&check), 0);
    assert!(stdout(&check).contains("dim 8"));
}

#[test]
fn corrupting_the_comultiplication_names_the_axiom() {
    let dir = TempDir::new().unwrap();
    let (_, mut doc) = emit_algebra(&dir, "sweedler");
    // Add an x (x) x term to the image of g: row 2*4+2, column 1.
    doc["comult"]["entries"][10][1] = json!("1");
    let bad = path_str(&dir, "bad.json");
    write_json(&bad, &doc);

    let out = run(&["algebra", "check", "--input", &bad]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("[fail] coassociativity"), "got: {text}");
    assert!(text.contains("failing basis tuple"), "got: {text}");
}

#[test]
fn garbage_files_are_input_errors() {
    let dir = TempDir::new().unwrap();
    let garbled = path_str(&dir, "garbled.json");
    std::fs::write(&garbled, "definitely not json").unwrap();
    let out = run(&["algebra", "check", "--input", &garbled]);
    assert_eq!(code(&out), 2);

    let (_, algebra) = emit_algebra(&dir, "c2");
    let module = json!({
        "algebra": algebra,
        "dim": 1,
        "action": [scalar_matrix(&[&["1"]]), scalar_matrix(&[&["1/0"]])],
    });
    let broken = path_str(&dir, "broken-module.json");
    write_json(&broken, &module);
    let out = run(&["module", "dual", "--input", &broken]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("zero denominator"), "got: {}", stderr(&out));
}

/// Writes the one-dimensional sign module of the order-two group
/// algebra whose document is given.
fn write_sign_module(dir: &TempDir, algebra: &Value, name: &str) -> String {
    let module = json!({
        "algebra": algebra,
        "dim": 1,
        "action": [scalar_matrix(&[&["1"]]), scalar_matrix(&[&["-1"]])],
    });
    let path = path_str(dir, name);
    write_json(&path, &module);
    path
}

#[test]
fn the_sign_module_tensor_square_is_trivial() {
    let dir = TempDir::new().unwrap();
    let (_, algebra) = emit_algebra(&dir, "c2");
    let sign = write_sign_module(&dir, &algebra, "sign.json");
    let square = path_str(&dir, "square.json");

    let out = run(&["module", "tensor", "--left", &sign, "--right", &sign, "--out", &square]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("tensor product has dim 1"), "got: {text}");
    assert!(
        text.contains("isomorphic to the trivial module via intertwiner"),
        "got: {text}"
    );

    let trivial = path_str(&dir, "trivial.json");
    let out = run(&[
        "module", "emit", "--builtin", "c2", "--kind", "trivial", "--out", &trivial,
    ]);
    assert_eq!(code(&out), 0);
    let iso = run(&["module", "iso", "--left", &square, "--right", &trivial]);
    assert_eq!(code(&iso), 0);
    assert!(stdout(&iso).contains("isomorphic via intertwiner"));

    let not_iso = run(&["module", "iso", "--left", &sign, "--right", &trivial]);
    assert_eq!(code(&not_iso), 1);
    assert!(stdout(&not_iso).contains("no invertible intertwiner"));

    let hom = run(&["module", "hom", "--left", &sign, "--right", &trivial]);
    assert_eq!(code(&hom), 0);
    assert!(stdout(&hom).contains("hom space has dim 0"));
}

#[test]
fn module_hom_mixing_algebras_is_an_input_error() {
    let dir = TempDir::new().unwrap();
    let small = path_str(&dir, "c2-trivial.json");
    let big = path_str(&dir, "sweedler-trivial.json");
    run(&["module", "emit", "--builtin", "c2", "--kind", "trivial", "--out", &small]);
    run(&["module", "emit", "--builtin", "sweedler", "--kind", "trivial", "--out", &big]);

    let out = run(&["module", "hom", "--left", &small, "--right", &big]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("different algebras"), "got: {}", stderr(&out));
}

#[test]
fn dualizing_a_sweedler_projective_confirms_the_zigzags() {
    let dir = TempDir::new().unwrap();
    let (_, algebra) = emit_algebra(&dir, "sweedler");
    // The projective spanned by e = (1+g)/2 and ex, as a right module:
    // g fixes e and negates ex, x and gx both send e to ex and ex to 0.
    let module = json!({
        "algebra": algebra,
        "dim": 2,
        "action": [
            scalar_matrix(&[&["1", "0"], &["0", "1"]]),
            scalar_matrix(&[&["1", "0"], &["0", "-1"]]),
            scalar_matrix(&[&["0", "0"], &["1", "0"]]),
            scalar_matrix(&[&["0", "0"], &["1", "0"]]),
        ],
    });
    let projective = path_str(&dir, "projective.json");
    write_json(&projective, &module);

    for side in ["left", "right"] {
        let dual = path_str(&dir, &format!("dual-{side}.json"));
        let out = run(&["module", "dual", "--input", &projective, "--side", side, "--out", &dual]);
        assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
        let text = stdout(&out);
        assert!(text.contains("check dual-zigzag: pass"), "got: {text}");
        assert!(text.contains(&format!("{side} dual has dim 2")), "got: {text}");

        // The emitted dual must re-parse as a valid module file.
        let reload = run(&["module", "iso", "--left", &dual, "--right", &dual]);
        assert_eq!(code(&reload), 0, "stderr: {}", stderr(&reload));
    }
}

#[test]
fn complex_files_flow_through_stalk_tensor_dual_and_cohomology() {
    let dir = TempDir::new().unwrap();
    let module = path_str(&dir, "c2-regular.json");
    run(&["module", "emit", "--builtin", "c2", "--kind", "regular", "--out", &module]);

    let stalk = path_str(&dir, "stalk.json");
    let out = run(&["complex", "stalk", "--module", &module, "--degree", "-1", "--out", &stalk]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));

    let out = run(&["complex", "cohomology", "--input", &stalk]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("H^-1:"), "got: {}", stdout(&out));

    let square = path_str(&dir, "square.json");
    let out = run(&["complex", "tensor", "--left", &stalk, "--right", &stalk, "--out", &square]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let out = run(&["complex", "cohomology", "--input", &square]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("H^-2:"), "got: {}", stdout(&out));

    let dual = path_str(&dir, "dual.json");
    let out = run(&["complex", "dual", "--input", &stalk, "--side", "right", "--out", &dual]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let out = run(&["complex", "cohomology", "--input", &dual]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("H^1:"), "got: {}", stdout(&out));

    let other = path_str(&dir, "sweedler-trivial.json");
    run(&["module", "emit", "--builtin", "sweedler", "--kind", "trivial", "--out", &other]);
    let other_stalk = path_str(&dir, "other-stalk.json");
    run(&["complex", "stalk", "--module", &other, "--out", &other_stalk]);
    let mixed = run(&["complex", "tensor", "--left", &stalk, "--right", &other_stalk]);
    assert_eq!(code(&mixed), 2);
    assert!(stderr(&mixed).contains("different algebras"), "got: {}", stderr(&mixed));
}

#[test]
fn names_lists_the_embedded_builtins() {
    let out = run(&["algebra", "names"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    for name in ["sweedler", "taft", "q8", "s3", "c2xc2xc2"] {
        assert!(text.lines().any(|l| l == name), "missing {name} in: {text}");
    }
}

#[test]
fn dual_zigzag_verification_needs_a_rigid_backend() {
    let out = run(&["verify", "dual-zigzag", "--builtin", "a2"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("rigid"), "got: {}", stderr(&out));
}

#[test]
fn every_builtin_emits_and_rechecks_cleanly(){
    let dir = TempDir::new().unwrap();
    let names = run(&["algebra", "names"]);
    for name in stdout(&names).lines() {
        if name == "taft" {
            continue;
        }
        let path = path_str(&dir, &format!("{name}.json"));
        let out = run(&["algebra", "emit", "--builtin", name, "--out", &path]);
        assert_eq!(code(&out), 0, "emit {name}: {}", stderr(&out));
        let check = run(&["algebra", "check", "--input", &path]);
        assert_eq!(code(&check), 0, "check {name}: {}", stderr(&check));
    }
    let path = path_str(&dir, "taft2.json");
    let out = run(&["algebra", "emit", "--builtin", "taft", "--n", "2", "--out", &path]);
    assert_eq!(code(&out), 0, "emit taft: {}", stderr(&out));
    let check = run(&["algebra", "check", "--input", &path]);
    assert_eq!(code(&check), 0, "check taft: {}", stderr(&check));
}
