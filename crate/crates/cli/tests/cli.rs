//! End-to-end tests of the command-line surface: file formats, exit codes
//! and determinism.

use std::path::Path;
use std::process::{Command, Output};
use std::sync::Arc;

use tenring::constructions::{example_qnak, FactorOrder};
use tenring::formats::{AlgebraDoc, BimoduleDoc, PairDoc};
use tenring::linalg::FieldSpec;
use tenring::module::FdModule;
use tenring::tensor_ring::{ind, stalk, TensorPowers, DEFAULT_NILPOTENCY_CAP};

fn tr() -> Command {
    Command::new(env!("CARGO_BIN_EXE_tr"))
}

fn run(args: &[&str], cwd: &Path) -> Output {
    tr().args(args)
        .current_dir(cwd)
        .output()
        .expect("binary runs")
}

fn emit_example(dir: &Path) {
    let out = run(
        &[
            "example", "qnak", "--field", "2", "--n", "3", "--h", "2", "--i", "1", "--j", "3",
            "-o", "ex",
        ],
        dir,
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn example_emits_instance_and_nilpotency_reads_it() {
    let tmp = tempfile::tempdir().unwrap();
    emit_example(tmp.path());
    for f in ["algebra.json", "bimodule.json", "manifest.json"] {
        assert!(tmp.path().join("ex").join(f).exists(), "{f}");
    }
    // emitted documents re-parse to structurally equal values
    let text = std::fs::read_to_string(tmp.path().join("ex/algebra.json")).unwrap();
    let doc: AlgebraDoc = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_value(&doc).unwrap(), serde_json::from_str::<serde_json::Value>(&text).unwrap());
    let alg = doc.to_algebra().unwrap();
    assert_eq!(alg.dim(), 6);

    let out = run(
        &["nilpotency", "ex/algebra.json", "ex/bimodule.json"],
        tmp.path(),
    );
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["nilIndex"], 1);
    assert_eq!(v["dims"], serde_json::json!([6, 4]));
    assert_eq!(v["ringDim"], 10);
}

#[test]
fn guard_violation_is_an_input_error() {
    let tmp = tempfile::tempdir().unwrap();
    let out = run(
        &[
            "example", "qnak", "--n", "3", "--h", "2", "--i", "1", "--j", "2", "-o", "bad",
        ],
        tmp.path(),
    );
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("precondition"));
}

#[test]
fn build_and_trivext_emit_the_tensor_ring() {
    let tmp = tempfile::tempdir().unwrap();
    emit_example(tmp.path());
    let out = run(
        &["build", "ex/algebra.json", "ex/bimodule.json"],
        tmp.path(),
    );
    assert!(out.status.success());
    let doc: AlgebraDoc = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc.dim, 10);
    doc.to_algebra().unwrap();
    let out2 = run(
        &["trivext", "ex/algebra.json", "ex/bimodule.json"],
        tmp.path(),
    );
    assert!(out2.status.success());
    let doc2: AlgebraDoc = serde_json::from_slice(&out2.stdout).unwrap();
    assert_eq!(doc2, doc);
}

#[test]
fn hypotheses_report_is_favorable_for_the_example() {
    let tmp = tempfile::tempdir().unwrap();
    emit_example(tmp.path());
    let out = run(
        &[
            "hypotheses",
            "ex/algebra.json",
            "ex/bimodule.json",
            "--variant",
            "gp",
        ],
        tmp.path(),
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["applicable"], "true");
    assert_eq!(v["condition_t"]["detail"]["reason"], "M right-projective");
}

#[test]
fn verify_campaign_exit_codes_and_determinism() {
    let tmp = tempfile::tempdir().unwrap();
    emit_example(tmp.path());
    let args = [
        "verify",
        "gp",
        "ex/algebra.json",
        "ex/bimodule.json",
        "--samples",
        "20",
        "--seed",
        "7",
        "--bound",
        "16",
    ];
    let out1 = run(&args, tmp.path());
    assert!(out1.status.success(), "{}", String::from_utf8_lossy(&out1.stderr));
    let out2 = run(&args, tmp.path());
    assert_eq!(out1.stdout, out2.stdout, "same seed, same bytes");
    let v: serde_json::Value = serde_json::from_slice(&out1.stdout).unwrap();
    assert_eq!(v["verdict"], "true");
    assert_eq!(v["summary"]["disagreements"], 0);
    // different seed differs
    let out3 = run(
        &[
            "verify",
            "gp",
            "ex/algebra.json",
            "ex/bimodule.json",
            "--samples",
            "20",
            "--seed",
            "8",
            "--bound",
            "16",
        ],
        tmp.path(),
    );
    assert_ne!(out1.stdout, out3.stdout);
}

#[test]
fn classify_stalk_pair_is_a_negative_verdict() {
    let tmp = tempfile::tempdir().unwrap();
    emit_example(tmp.path());
    // write the stalk pair (R, 0) next to the instance
    let (r, m) = example_qnak(FieldSpec::new(2).unwrap(), 3, 2, 1, 3, FactorOrder::default())
        .unwrap();
    let tp = TensorPowers::new(r.clone(), m, DEFAULT_NILPOTENCY_CAP).unwrap();
    let s = stalk(&tp, Arc::new(FdModule::regular_left(&r))).unwrap();
    let doc = PairDoc::from_pair(&s);
    std::fs::write(
        tmp.path().join("pair.json"),
        serde_json::to_string_pretty(&doc).unwrap(),
    )
    .unwrap();
    let out = run(
        &[
            "classify", "ex", "pair.json", "--class", "gp", "--method", "both", "--bound", "16",
        ],
        tmp.path(),
    );
    assert_eq!(out.status.code(), Some(1), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["phi"]["verdict"], "false");
    assert_eq!(v["direct"], "false");
    assert_eq!(v["agree"], true);

    // an induced projective pair classifies true with exit 0
    let p = ind(&tp, tenring::resolution::indec_projective(&r, 0).module)
        .unwrap()
        .pair;
    std::fs::write(
        tmp.path().join("good.json"),
        serde_json::to_string_pretty(&PairDoc::from_pair(&p)).unwrap(),
    )
    .unwrap();
    let out = run(
        &[
            "classify", "ex", "good.json", "--class", "proj", "--method", "both", "--bound",
            "16",
        ],
        tmp.path(),
    );
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn morita_subcommand_builds_the_double_example() {
    let tmp = tempfile::tempdir().unwrap();
    emit_example(tmp.path());
    // U and V are the same bimodule document over (R, R)
    let out = run(
        &[
            "morita",
            "--a",
            "ex/algebra.json",
            "--b",
            "ex/algebra.json",
            "--u",
            "ex/bimodule.json",
            "--v",
            "ex/bimodule.json",
        ],
        tmp.path(),
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["ring"]["dim"], 20);
    assert_eq!(v["cells"].as_array().unwrap().len(), 20);
}

#[test]
fn malformed_documents_exit_three() {
    let tmp = tempfile::tempdir().unwrap();
    std::fs::write(tmp.path().join("bad.json"), "{ not json").unwrap();
    let out = run(&["nilpotency", "bad.json", "bad.json"], tmp.path());
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("bad.json"));

    // structurally broken algebra: wrong unit
    let (r, m) = example_qnak(FieldSpec::new(2).unwrap(), 3, 2, 1, 3, FactorOrder::default())
        .unwrap();
    let mut doc = AlgebraDoc::from_algebra(&r);
    doc.unit = vec![0; doc.dim];
    std::fs::write(
        tmp.path().join("alg.json"),
        serde_json::to_string(&doc).unwrap(),
    )
    .unwrap();
    std::fs::write(
        tmp.path().join("bim.json"),
        serde_json::to_string(&BimoduleDoc::from_bimodule(&m)).unwrap(),
    )
    .unwrap();
    let out = run(&["nilpotency", "alg.json", "bim.json"], tmp.path());
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn lemmas_subcommand_passes_on_the_example() {
    let tmp = tempfile::tempdir().unwrap();
    emit_example(tmp.path());
    let out = run(
        &[
            "lemmas",
            "ex/algebra.json",
            "ex/bimodule.json",
            "--samples",
            "6",
            "--seed",
            "3",
            "--bound",
            "16",
        ],
        tmp.path(),
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["verdict"], "true");
    for p in v["properties"].as_array().unwrap() {
        assert_eq!(p["passed"], true, "{}", p["name"]);
    }
}
