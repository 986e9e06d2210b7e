//! End-to-end exercises of the command-line surface.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_contact-tri"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{:?} failed: {}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn generate_is_deterministic_and_quiet_suppresses_the_banner() {
    let a = stdout(&["--quiet", "generate", "s21_10"]);
    let b = stdout(&["--quiet", "generate", "s21_10"]);
    assert_eq!(a, b);
    assert_eq!(a.lines().count(), 30);
    let with_banner = stdout(&["generate", "s21_10"]);
    assert!(with_banner.starts_with("contact-tri "));
    assert!(with_banner.ends_with(&a));
}

#[test]
fn generate_list_names_the_catalog() {
    let listing = stdout(&["--quiet", "generate", "--list"]);
    for name in ["s3_5", "sigma8", "cube77", "t3_40", "torus10"] {
        assert!(listing.lines().any(|l| l.starts_with(name)), "{}", name);
    }
}

#[test]
fn fvector_accepts_generated_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s12.facets");
    stdout(&[
        "--quiet",
        "generate",
        "s12",
        "--out",
        path.to_str().unwrap(),
    ]);
    let out = stdout(&["--quiet", "fvector", path.to_str().unwrap()]);
    assert!(out.contains("(7, 21, 28, 14)"));
}

#[test]
fn homology_json_shape() {
    let out = stdout(&["--quiet", "--json", "homology", "s21_10"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["0"]["betti"], 1);
    assert_eq!(v["1"]["betti"], 1);
    assert_eq!(v["1"]["torsion"].as_array().unwrap().len(), 0);
}

#[test]
fn verify_suite_exits_zero_and_emits_json() {
    let out = run(&["--quiet", "verify", "ledger"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("PASS"));
    assert!(!text.contains("FAIL "));

    let json = stdout(&["--quiet", "--json", "verify", "fvectors"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert!(v["checks"].as_array().unwrap().len() >= 6);
}

#[test]
fn verify_cube77_reports_all_four_check_kinds() {
    let out = stdout(&["--quiet", "verify", "cube77"]);
    for id in ["fvector", "gluing", "edge_lengths", "max_diameter"] {
        assert!(
            out.lines().any(|l| l.starts_with("PASS") && l.contains(id)),
            "missing {} in:\n{}",
            id,
            out
        );
    }
    assert!(out.contains("0 failed"));
}

#[test]
fn unknown_target_exits_with_usage_code() {
    let out = run(&["--quiet", "fvector", "not_a_thing"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn consum_adds_vertex_counts() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("sum.facets");
    stdout(&[
        "--quiet",
        "consum",
        "s3_5",
        "s3_5",
        "--sigma1",
        "1 2 3 4",
        "--sigma2",
        "1 2 3 4",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    let check = stdout(&["--quiet", "fvector", out_path.to_str().unwrap()]);
    assert!(check.contains("(6, "), "{}", check);
}

#[test]
fn schain_reports_ledger_and_counts() {
    let out = stdout(&["--quiet", "--json", "schain", "--n", "3", "--sign", "+"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["f_vector"][0], 13);
    assert_eq!(v["ledger"]["d3"], 3);
    assert_eq!(v["ledger"]["f0_bound"], 13);
}

#[test]
fn quotient_runs_from_a_class_file() {
    let dir = tempfile::tempdir().unwrap();
    let complex = dir.path().join("prism.facets");
    std::fs::write(&complex, "a b c d\nb c d e\n").unwrap();
    // The first member of a class names it: vertex a collapses onto z.
    let classes = dir.path().join("classes.txt");
    std::fs::write(&classes, "z a\n").unwrap();
    let out = stdout(&[
        "--quiet",
        "quotient",
        complex.to_str().unwrap(),
        "--classes",
        classes.to_str().unwrap(),
    ]);
    assert!(
        out.contains("b c d z") || out.contains("z b c d"),
        "{}",
        out
    );
}

#[test]
fn t3_reports_stats_and_containment() {
    let out = stdout(&["--quiet", "--json", "t3", "--n", "1", "--r0", "0.45"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["f_vector"][0], 40);
    assert_eq!(v["ledger"]["contact"]["d2"][2], -1);
    // Diameter sqrt(2)/3 against disk diameter 0.45: the report flags the
    // failing margin rather than hiding it.
    assert_eq!(v["containment"]["pass"], false);
    let margin = v["containment"]["margin"].as_f64().unwrap();
    assert!(margin < 0.0 && margin > -0.03);
}

#[test]
fn t3_family_passes_containment_when_the_margin_allows() {
    let out = stdout(&["--quiet", "--json", "t3", "--n", "2", "--r0", "0.45"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["f_vector"][0], 64);
    assert_eq!(v["ledger"]["contact"]["d2"][2], -2);
    // 1/(2 sqrt2) = 0.3536 vs 2 * 0.45 / 3 = 0.3: still failing, stated.
    assert_eq!(v["containment"]["pass"], false);
}

#[test]
fn delta_reports_a_small_fit() {
    let out = stdout(&[
        "--quiet",
        "--json",
        "delta",
        "--samples",
        "200",
        "--tol",
        "0.005",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let d = v["delta_hat"].as_f64().unwrap();
    assert!(d > 0.0 && d < 0.99);
    assert_eq!(v["below_one"], true);
}

#[test]
fn ledger_pipeline_round_trips_json() {
    let dir = tempfile::tempdir().unwrap();
    let l0 = dir.path().join("l0.json");
    let l1 = dir.path().join("l1.json");
    stdout(&[
        "--quiet",
        "ledger",
        "new",
        "--manifold",
        "s3",
        "--f0",
        "5",
        "--out",
        l0.to_str().unwrap(),
    ]);
    stdout(&[
        "--quiet",
        "ledger",
        "twist",
        "--in",
        l0.to_str().unwrap(),
        "--sl",
        "1",
        "--df0",
        "3",
        "--out",
        l1.to_str().unwrap(),
    ]);
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&l1).unwrap()).unwrap();
    assert_eq!(v["d3"], 1);
    assert_eq!(v["f0_bound"], 8);
    assert_eq!(v["history"].as_array().unwrap().len(), 1);

    let bound = stdout(&["--quiet", "ledger", "bound", "--n", "-3"]);
    assert_eq!(bound.trim(), "13");
    let general = stdout(&["--quiet", "ledger", "bound", "--n", "0", "--f0", "5"]);
    assert_eq!(general.trim(), "11");
}

#[test]
fn ledger_twist_with_class_undefines_d3() {
    let dir = tempfile::tempdir().unwrap();
    let l0 = dir.path().join("t0.json");
    let l1 = dir.path().join("t1.json");
    stdout(&[
        "--quiet",
        "ledger",
        "new",
        "--manifold",
        "t3",
        "--f0",
        "40",
        "--out",
        l0.to_str().unwrap(),
    ]);
    stdout(&[
        "--quiet",
        "ledger",
        "twist",
        "--in",
        l0.to_str().unwrap(),
        "--class",
        "0,0,1",
        "--df0",
        "0",
        "--out",
        l1.to_str().unwrap(),
    ]);
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&l1).unwrap()).unwrap();
    assert_eq!(v["d2"][2], -1);
    assert_eq!(v["d3"], "UNDEFINED");
}

#[test]
fn export_writes_off_meshes() {
    let cube = stdout(&["--quiet", "export", "cube77"]);
    let mut lines = cube.lines();
    assert_eq!(lines.next().unwrap(), "OFF");
    let counts = lines.next().unwrap();
    assert!(counts.starts_with("77 458 "), "{}", counts);

    let sigma = stdout(&["--quiet", "export", "sigma8"]);
    assert!(sigma.starts_with("4OFF"));
    assert!(sigma.contains("unit 3-sphere"));

    // Periodic targets export the pre-quotient cube.
    let torus = stdout(&["--quiet", "export", "t3_40"]);
    assert!(torus.starts_with("OFF"));
    assert!(torus.lines().nth(1).unwrap().starts_with("77 458"));

    let family = stdout(&["--quiet", "export", "t3_family", "--n", "2"]);
    assert!(family.lines().nth(1).unwrap().starts_with("125 "));
}

#[test]
fn export_without_realization_is_a_usage_error() {
    let out = run(&["--quiet", "export", "s21_10"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn generate_off_flag_writes_the_mesh() {
    let dir = tempfile::tempdir().unwrap();
    let facets = dir.path().join("c.facets");
    let off = dir.path().join("c.off");
    stdout(&[
        "--quiet",
        "generate",
        "cube77",
        "--out",
        facets.to_str().unwrap(),
        "--off",
        off.to_str().unwrap(),
    ]);
    let text = std::fs::read_to_string(&off).unwrap();
    assert!(text.starts_with("OFF"));
    let listing = std::fs::read_to_string(&facets).unwrap();
    assert_eq!(listing.lines().count(), 202);
}
