use schubcalc::cli::run;
use schubcalc::Poly;
use std::process::Command;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("schubcalc").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(s: &str) -> serde_json::Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn schubert_compute_s0() {
    let (code, out, _) = call(&["schubert", "compute", "--perm", "[1,0]@0"]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["degree"], 1);
    let poly = Poly::from_json(&v["poly"].to_string()).unwrap();
    assert_eq!(poly, Poly::c(1));
}

#[test]
fn dual_lr_table() {
    let (code, out, _) = call(&["coproduct", "dual-lr", "--lambda", "3,1"]);
    assert_eq!(code, 0);
    let v = json(&out);
    let entries = v["entries"].as_array().unwrap();
    let find = |mu: &[u64], nu: &[u64]| {
        entries
            .iter()
            .find(|e| e["mu"] == serde_json::json!(mu) && e["nu"] == serde_json::json!(nu))
            .map(|e| Poly::from_json(&e["coeff"].to_string()).unwrap())
    };
    assert_eq!(find(&[1], &[2]), Some(Poly::parse("y0 - y1").unwrap()));
    assert_eq!(find(&[], &[3, 1]), Some(Poly::one()));
    assert_eq!(find(&[3, 1], &[1]), None);
}

#[test]
fn affine_relations_text() {
    let (code, out, _) = call(&["--format", "text", "affine", "relations", "-n", "2", "--max-degree", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out, "m(2) = -c1^2 + c1*y1 + 2*c2\n");
}

#[test]
fn exit_codes() {
    assert_eq!(call(&["schubert", "compute", "--perm", "[1,1]"]).0, 2);
    assert_eq!(call(&["schubert", "compute"]).0, 2);
    assert_eq!(call(&["frobnicate"]).0, 2);
    assert_eq!(call(&["coproduct", "dual-lr", "--lambda", "2,x"]).0, 2);
    assert_eq!(call(&["--degree-cap", "2", "coproduct", "dual-lr", "--lambda", "3,1"]).0, 2);
    assert_eq!(call(&["affine", "relations", "-n", "2", "--max-degree", "2"]).0, 0);
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("schubcalc"));
    let (_, _, err) = call(&["schubert", "compute", "--perm", "[1,1]"]);
    assert_eq!(json(err.trim())["error"], "invalid_input");
}

#[test]
fn verify_suites_report() {
    for args in [
        &["verify", "cauchy", "--max-length", "3"][..],
        &["verify", "graham", "--max-size", "6"],
        &["verify", "localization", "-n", "2", "--length", "3"],
        &["verify", "shift", "--max-length", "2"],
    ] {
        let (code, out, _) = call(args);
        assert_eq!(code, 0, "{args:?}");
        let v = json(&out);
        assert_eq!(v[0]["failures"].as_array().unwrap().len(), 0);
        assert_eq!(v[0]["passed"], v[0]["cases"]);
    }
}

#[test]
fn typec_commands() {
    let (code, out, _) = call(&["--format", "text", "typec", "relation", "-p", "1"]);
    assert_eq!(code, 0);
    assert_eq!(out, "c1^2 - c1*z - 2*c2\n");
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("f.txt");
    std::fs::write(&f, "c1^2").unwrap();
    let (code, out, _) = call(&["typec", "normal-form", "--input", f.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(
        json(&out),
        serde_json::json!([{"z": 0, "lambda": [2], "coeff": "2"}, {"z": 1, "lambda": [1], "coeff": "1"}])
    );
    assert_eq!(call(&["typec", "embed-check", "-p", "2"]).0, 0);
}

const JOBS: &[&[&str]] = &[
    &["schubert", "compute", "--perm", "[2,-1,0,1]@-1"],
    &["schubert", "interpolate", "--perm", "[2,0,1]@0"],
    &["schubert", "stanley", "--perm", "[3,1,2]@1"],
    &["schubert", "kempf-laksov", "--lambda", "2,2,1"],
    &["schubert", "vexillary", "--k", "1", "--p", "0", "--q", "1"],
    &["coproduct", "dual-lr", "--lambda", "3,2"],
    &["coproduct", "comodule", "--perm", "[1,-1,0]@-1"],
    &["coproduct", "two-torus", "--lambda", "2,1"],
    &["affine", "relations", "-n", "3", "--max-degree", "4"],
    &["affine", "localize", "-n", "2", "--values", "0,3"],
    &["--format", "text", "coproduct", "dual-lr", "--lambda", "2,1"],
];

#[test]
fn repeated_runs_are_identical() {
    for job in JOBS {
        let a = call(job);
        let b = call(job);
        assert_eq!(a.0, 0, "{job:?}: {}", a.2);
        assert_eq!(a, b, "{job:?}");
    }
}

#[test]
fn cache_is_transparent() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    for job in JOBS {
        let plain = call(job);
        let mut with: Vec<&str> = vec!["--cache-dir", d];
        with.extend_from_slice(job);
        let miss = call(&with);
        let hit = call(&with);
        assert_eq!(plain, miss, "{job:?}");
        assert_eq!(plain, hit, "{job:?}");
    }
    assert!(std::fs::read_dir(dir.path()).unwrap().count() >= JOBS.len());
}

#[test]
fn binary_output_is_byte_identical() {
    let exe = env!("CARGO_BIN_EXE_schubcalc");
    let args = ["--jobs", "2", "coproduct", "dual-lr", "--lambda", "3,1"];
    let a = Command::new(exe).args(args).output().unwrap();
    let b = Command::new(exe).args(args).output().unwrap();
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(String::from_utf8(a.stdout).unwrap(), call(&args).1);
    let bad = Command::new(exe).args(["schubert", "compute", "--perm", "nope"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
