use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::{json, Value};

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_algebroid"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn write_json(dir: &tempfile::TempDir, name: &str, v: &Value) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, serde_json::to_string(v).unwrap()).unwrap();
    p.to_str().unwrap().to_owned()
}

fn load(name: &str) -> Value {
    serde_json::from_str(&std::fs::read_to_string(data(name)).unwrap()).unwrap()
}

#[test]
fn reconstruct_c2_reports_two_dimensional_coend() {
    let out = run(&["reconstruct", data("c2.json").to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("\"dim_L\": 2"));
    let doc: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(doc["roundtrip"]["injective"], json!(true));
    assert_eq!(doc["roundtrip"]["surjective"], json!(true));
}

#[test]
fn reconstruct_output_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("swap_out.json");
    let out = run(&[
        "reconstruct",
        data("swap.json").to_str().unwrap(),
        "-o",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(doc["coend"]["dim_L"], json!(8));
    let out = run(&["verify", out_path.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn hand_written_hopf_algebra_verifies() {
    let out = run(&["verify", data("hopf_c3.json").to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let stderr = String::from_utf8(out.stderr).unwrap();
    for tag in ["Eq.10", "Eq.35", "Lemma7.1/41b", "OpAntipode/2"] {
        assert!(stderr.contains(&format!("pass  {tag} ")), "{tag} missing");
    }
    let out = run(&["check-bialgebroid", data("hopf_c3.json").to_str().unwrap()]);
    assert_eq!(code(&out), 0);
}

#[test]
fn corrupted_coproduct_fails_coassociativity() {
    let dir = tempfile::tempdir().unwrap();
    let mut doc = load("hopf_c3.json");
    doc["coend"]["coproduct"][4] = json!([0, 0, 0]);
    doc["coend"]["coproduct"][5] = json!([0, 1, 0]);
    let path = write_json(&dir, "bad.json", &doc);
    let out = run(&["check-coalgebroid", &path, "--report", "json"]);
    assert_eq!(code(&out), 1);
    let rep: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(rep["entries"]["Eq.10"]["passed"], json!(false));
    let out = run(&["verify", &path]);
    assert_ne!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stderr).contains("FAIL  Eq.10"));
}

#[test]
fn same_seed_same_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let outs: Vec<Vec<u8>> = (0..2)
        .map(|i| {
            let p = dir.path().join(format!("out{i}.json"));
            let out = run(&[
                "reconstruct",
                data("swap.json").to_str().unwrap(),
                "--seed",
                "17",
                "-o",
                p.to_str().unwrap(),
            ]);
            assert_eq!(code(&out), 0);
            std::fs::read(p).unwrap()
        })
        .collect();
    assert_eq!(outs[0], outs[1]);
}

#[test]
fn skip_roundtrip_omits_the_block() {
    let out = run(&[
        "reconstruct",
        data("dual_numbers.json").to_str().unwrap(),
        "--skip-roundtrip",
    ]);
    assert_eq!(code(&out), 0);
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["coend"]["dim_L"], json!(4));
    assert!(doc.get("roundtrip").is_none());
}

#[test]
fn dualize_gives_one_dimensional_duals() {
    let out = run(&["dualize", data("c2.json").to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    let duals = doc["duals"].as_array().unwrap();
    assert_eq!(duals.len(), 2);
    for d in duals {
        assert_eq!(d["left_dual"]["dim"], json!(1));
        assert_eq!(d["right_dual"]["dim"], json!(1));
    }
}

#[test]
fn info_summarizes() {
    let out = run(&["info", data("swap.json").to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("field: gf:7"));
    assert!(text.contains("object M: dimension 2"));
}

#[test]
fn error_kinds_have_distinct_exit_codes() {
    let dir = tempfile::tempdir().unwrap();

    let missing = dir.path().join("missing.json");
    let io = code(&run(&["info", missing.to_str().unwrap()]));

    let garbage = dir.path().join("garbage.json");
    std::fs::write(&garbage, "{ not json").unwrap();
    let parse = code(&run(&["info", garbage.to_str().unwrap()]));

    let mut doc = load("c2.json");
    doc["morphisms"][0]["matrix"] = json!([[1, 0]]);
    let schema = code(&run(&[
        "reconstruct",
        &write_json(&dir, "schema.json", &doc),
    ]));

    let mut doc = load("dual_numbers.json");
    doc["modules"]["I"] =
        json!({ "dim": 1, "tau_left": [[[1]], [[0]]], "tau_right": [[[1]], [[0]]] });
    doc["morphisms"][0]["matrix"] = json!([[1]]);
    for key in ["tensor", "duals", "right_duals", "unit_object", "unit_iso"] {
        doc.as_object_mut().unwrap().remove(key);
    }
    let not_projective = code(&run(&["reconstruct", &write_json(&dir, "np.json", &doc)]));

    let mut doc = load("c2.json");
    doc.as_object_mut().unwrap().remove("duals");
    let no_antipode = code(&run(&["dualize", &write_json(&dir, "nodual.json", &doc)]));

    let mut doc = load("hopf_c3.json");
    doc["coend"]["product"][0][1] = json!(1);
    let failed = code(&run(&[
        "check-bialgebroid",
        &write_json(&dir, "failed.json", &doc),
    ]));

    let usage = code(&run(&["reconstruct"]));
    let field = code(&run(&[
        "info",
        data("c2.json").to_str().unwrap(),
        "--field",
        "gf:5",
    ]));

    assert_eq!(
        [
            failed,
            usage,
            io,
            parse,
            schema,
            not_projective,
            no_antipode,
            field
        ],
        [1, 2, 3, 4, 5, 6, 7, 5]
    );
}
