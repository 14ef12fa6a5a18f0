use std::path::PathBuf;
use std::process::{Command, Output};

use jsonschema::JSONSchema;
use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_curalg"));
    c.env_remove("CURALG_MAX_MONOMIALS");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn schema(name: &str) -> JSONSchema {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../docs/schemas").join(format!("{name}.schema.json"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    JSONSchema::compile(&serde_json::from_str(&text).unwrap()).expect("schema compiles")
}

fn check(name: &str, out: &Output, code: i32) -> Value {
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert_eq!(out.status.code(), Some(code), "{name}: {stdout}\n{}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_str(&stdout).unwrap_or_else(|e| panic!("{name}: {e}\n{stdout}"));
    let s = schema(if code == 0 { name } else { "error" });
    if let Err(errors) = s.validate(&v) {
        let msgs: Vec<String> = errors.map(|e| format!("{} at {}", e, e.instance_path)).collect();
        panic!("{name}: schema violations {msgs:?}\n{stdout}");
    }
    v
}

fn write_temp(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn freelie_rows() {
    let v = check("freelie", &run(&["freelie", "--d", "3", "--max-r", "6"]), 0);
    let dims: Vec<u64> = v["rows"].as_array().unwrap().iter().map(|r| r["dim"].as_u64().unwrap()).collect();
    assert_eq!(dims, [3, 3, 8, 18, 48, 116]);
    let v = check("freelie", &run(&["freelie", "--d", "2", "--max-r", "3", "--words"]), 0);
    assert_eq!(v["rows"][2]["words"], serde_json::json!([[0, 0, 1], [0, 1, 1]]));
}

#[test]
fn algebra_reports() {
    let v = check("check-algebra", &run(&["check-algebra", "--algebra", "sl2"]), 0);
    assert_eq!(v["perfect"], true);
    let v = check("kertau", &run(&["kertau", "--algebra", "builtin:sl2", "--r", "3", "--basis"]), 0);
    assert_eq!(v["kernel_dim"], 5);
    assert_eq!(v["kernel"].as_array().unwrap().len(), 5);
    let v = check("truncdim", &run(&["truncdim", "--algebra", "sl2", "--k", "4"]), 0);
    assert_eq!(v["dim"], 12);
    check("error", &run(&["check-algebra", "--algebra", "builtin:g2"]), 2);
}

#[test]
fn bad_algebra_file_fails_check() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_temp(&dir, "anti.json", r#"{"dim":2,"basis":["a","b"],"brackets":[[0,1,[[0,"1"]]],[1,0,[[0,"1"]]]]}"#);
    let v = check("check-algebra", &run(&["check-algebra", "--algebra", &path]), 1);
    assert_eq!(v["error"], "NOT_ANTISYMMETRIC");
    assert_eq!(v["witness"], serde_json::json!([0, 1]));
    let path = write_temp(
        &dir,
        "jacobi.json",
        r#"{"dim":3,"basis":["a","b","c"],"brackets":[[0,1,[[2,"1"]]],[1,2,[[0,"1"]]],[0,2,[[0,"1"]]]]}"#,
    );
    let v = check("check-algebra", &run(&["check-algebra", "--algebra", &path]), 1);
    assert_eq!(v["error"], "JACOBI_FAILS");
    let path = write_temp(&dir, "abelian.json", r#"{"dim":2,"basis":["a","b"],"brackets":[]}"#);
    let v = check("check-algebra", &run(&["check-algebra", "--algebra", &path]), 0);
    assert_eq!(v["perfect"], false);
}

#[test]
fn verify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let good = write_temp(
        &dir,
        "good.json",
        r#"{"algebra":"sl2","dim":2,
            "rho":[[["0","1"],["0","0"]],[["1","0"],["0","-1"]],[["0","0"],["1","0"]]],
            "eta":[[["0","1"],["0","0"]],[["1","0"],["0","-1"]],[["0","0"],["1","0"]]]}"#,
    );
    let v = check("verify", &run(&["verify", "--file", &good]), 0);
    assert_eq!(v["certificate"]["kind"], "BOUNDED");
    let bad = write_temp(
        &dir,
        "bad.json",
        r#"{"algebra":"sl2","dim":2,
            "rho":[[["0","1"],["0","0"]],[["1","0"],["0","-1"]],[["0","0"],["1","0"]]],
            "eta":[[["0","1"],["0","0"]],[["0","0"],["0","0"]],[["0","0"],["0","0"]]]}"#,
    );
    let v = check("verify", &run(&["verify", "--file", &bad]), 1);
    assert_eq!(v["error"], "C2_FAILS");
    assert!(v["witness"].is_array());
    let broken = write_temp(&dir, "broken.json", "{\"algebra\": ");
    check("verify", &run(&["verify", "--file", &broken]), 2);
    check("verify", &run(&["verify", "--file", "/no/such/file.json"]), 2);
}

#[test]
fn build_then_reuse() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("kr.json");
    let out = bin().args(["build", "--kind", "kr", "--r", "3", "--output"]).arg(&file).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&file).unwrap();
    let v: Value = serde_json::from_str(&text).unwrap();
    assert!(schema("build").is_valid(&v));
    assert_eq!(v["report"]["per_degree_dims"], serde_json::json!([1, 3, 5]));
    let f = file.to_string_lossy();
    check("verify", &run(&["verify", "--file", &f]), 0);
    let v = check("hom", &run(&["hom", "--m1", &f, "--m2", &f]), 0);
    assert_eq!(v["dim"], 1);
    let zeros = vec!["0"; 9].join(",");
    let mut unit = vec!["0"; 9];
    unit[0] = "1";
    let unit = unit.join(",");
    let v = check("act", &run(&["act", "--module", &f, "--x", "E12", "--r", "1", "--v", &unit]), 0);
    assert_ne!(v["result"], serde_json::json!(vec!["0"; 9]));
    check("act", &run(&["act", "--module", &f, "--x", "1,0,0", "--r", "2", "--v", &zeros]), 0);
}

#[test]
fn every_build_kind() {
    let cases: &[&[&str]] = &[
        &["--kind", "evaluation", "--rep", "ad", "--a", "-2"],
        &["--kind", "tensor-ideal", "--ideal", "ker-tau", "--n", "2"],
        &["--kind", "tensor-ideal", "--ideal", "augmentation", "--n", "2"],
        &["--kind", "sym-ideal", "--ideal", "degree:2", "--n", "2"],
        &["--kind", "sym-dual", "--n", "2"],
        &["--kind", "kr", "--r", "2"],
        &["--kind", "kostant", "--algebra", "so3"],
        &["--kind", "kostant-dual", "--algebra", "so4"],
        &["--kind", "even-odd", "--algebra", "so3", "--parity", "odd", "--at-least", "0"],
    ];
    for c in cases {
        let mut args = vec!["build"];
        args.extend_from_slice(c);
        check("build", &run(&args), 0);
    }
    let v = check("build", &run(&["build", "--kind", "tensor-ideal", "--ideal", "zero", "--n", "3"]), 1);
    assert_eq!(v["error"], "KER_TAU_NOT_CONTAINED");
    let v = check("build", &run(&["build", "--kind", "even-odd", "--algebra", "so3", "--at-most", "0"]), 1);
    assert_eq!(v["error"], "NOT_CLOSED");
}

#[test]
fn ext_reports() {
    let v = check("ext", &run(&["ext", "--m1", "builtin:trivial", "--m2", "builtin:sl2-ad-eval:1", "--R", "6"]), 0);
    assert_eq!(v["ext1"], 1);
    assert_eq!(v["stabilized"], true);
    let v = check("ext", &run(&["ext", "--m1", "builtin:trivial", "--m2", "builtin:sl2-nat-eval:1/2", "--R", "4"]), 0);
    assert_eq!(v["ext1"], 0);
    let v = check(
        "ext-irr",
        &run(&["ext-irr", "--v", "builtin:sl2-nat-eval:0", "--v2", "builtin:sl2-nat-eval:0", "--points", "0", "--R", "4", "--check"]),
        0,
    );
    assert_eq!(v["ext1"], 1);
    assert_eq!(v["agree"], true);
    check("error", &run(&["ext", "--m1", "builtin:trivial", "--m2", "builtin:sl2-bogus-eval:1"]), 2);
}

#[test]
fn module_queries() {
    let v = check("iso", &run(&["iso", "--m1", "builtin:sl2-v2-eval:1", "--m2", "builtin:sl2-ad-eval:1"]), 0);
    assert_eq!(v["isomorphic"], true);
    let v = check("iso", &run(&["iso", "--m1", "builtin:sl2-ad-eval:0", "--m2", "builtin:sl2-ad-eval:1"]), 0);
    assert_eq!(v["isomorphic"], false);
    let v = check("annihilate", &run(&["annihilate", "--module", "builtin:sl2-nat-eval:-1", "--roots", "-1"]), 0);
    assert_eq!(v["annihilated"], true);
    let v = check("annihilate", &run(&["annihilate", "--module", "builtin:sl2-nat-eval:3", "--degree", "1"]), 0);
    assert_eq!(v["polynomial"], serde_json::json!(["-3", "1"]));
    let v = check("highest", &run(&["highest", "--module", "builtin:sl2-v3-eval:0"]), 0);
    assert_eq!(v["spaces"][0]["weight"][0], "3");
}

#[test]
fn size_cap_is_an_input_error() {
    let v = check("error", &run(&["--max-monomials", "100", "freelie", "--d", "3", "--max-r", "5"]), 2);
    assert_eq!(v["error"], "SIZE_LIMIT");
    let out = bin().env("CURALG_MAX_MONOMIALS", "10").args(["kertau", "--algebra", "sl2", "--r", "3"]).output().unwrap();
    let v = check("error", &out, 2);
    assert_eq!(v["witness"]["cap"], 10);
}

#[test]
fn output_is_deterministic() {
    let cases: &[&[&str]] = &[
        &["ext", "--m1", "builtin:trivial", "--m2", "builtin:sl2-ad-eval:-2", "--R", "5"],
        &["iso", "--m1", "builtin:sl2-v2-eval:0", "--m2", "builtin:sl2-ad-eval:0", "--seed", "11"],
        &["build", "--kind", "kostant-dual", "--algebra", "so3"],
        &["kertau", "--algebra", "sl3", "--r", "3", "--basis"],
    ];
    for c in cases {
        let a = run(c);
        let b = run(c);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout, "{c:?}");
    }
}
