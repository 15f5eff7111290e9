//! End-to-end checks of the `weakdual` binary: JSON shapes, exit codes,
//! and determinism of seeded output.

use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_weakdual"));
    // Tests must not inherit a seed from the harness environment.
    cmd.env_remove("WEAKDUAL_SEED");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn groups_lists_the_catalog_with_schema_version() {
    let out = run(&["groups"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["schema_version"], "1");
    assert_eq!(v["command"], "groups");
    let names: Vec<&str> = v["cases"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["description"]["name"].as_str().unwrap())
        .collect();
    // Four singular cases first, then the classical comparison groups.
    assert_eq!(
        names,
        [
            "ginzburg_auto",
            "ginzburg_dual",
            "garrett_auto",
            "garrett_dual",
            "gl1",
            "gl2",
            "sl2",
            "gl3",
            "c3_auxiliary"
        ]
    );

    // Filtering keeps a single entry and its normalization constants.
    let out = run(&["groups", "--case", "garrett_auto"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let cases = v["cases"].as_array().unwrap();
    assert_eq!(cases.len(), 1);
    assert_eq!(cases[0]["constants"]["a"], "3/2");
    assert_eq!(cases[0]["constants"]["epsilon"], "4");
}

#[test]
fn weights_start_at_the_origin_in_degree_zero() {
    let out = run(&["weights", "--case", "ginzburg_dual", "--max-degree", "2"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["by_degree"]["0"], serde_json::json!([["0", "0", "0"]]));
    // The triple cover's cone has three extremal rays, all in degree one;
    // their Weyl dimensions sum to the Hilbert coefficient 14.
    assert_eq!(
        v["by_degree"]["1"],
        serde_json::json!([["1", "0", "-1"], ["1", "1", "-1"], ["2", "1", "-1"]])
    );
    assert_eq!(v["by_degree"]["2"].as_array().unwrap().len(), 6);
    assert_eq!(v["total"], 1 + 3 + 6);
}

#[test]
fn hilbert_reproduces_the_frozen_series() {
    let out = run(&["hilbert", "--case", "ginzburg_auto", "--trunc", "5"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(
        v["coeffs"],
        serde_json::json!(["1", "8", "35", "111", "286", "637"])
    );
}

#[test]
fn lfactor_evaluates_the_tensor_cone_at_rational_points() {
    let out = run(&[
        "lfactor", "--space", "tensor", "--point", "2,3", "--point", "1,1/2", "--trunc", "3",
    ]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    // Linear term is the sum of the four products a_i * b_j.
    assert_eq!(v["coeffs"], serde_json::json!(["1", "15/2", "145/4", "1155/8"]));
}

#[test]
fn match_passes_and_echoes_the_seed() {
    let out = run(&["match", "--pair", "garrett", "--trunc", "4", "--samples", "3", "--seed", "7"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["seed"], 7);
    assert_eq!(v["pass"], true);
    let points = v["points"].as_array().unwrap();
    assert_eq!(points.len(), 3);
    assert_eq!(points[0]["label"], "identity");
    assert_eq!(points[1]["label"], "repeated-coordinate");
    for p in points {
        assert_eq!(p["pass"], true);
        assert_eq!(p["automorphic"], p["spectral"]);
        assert!(p["first_mismatch_degree"].is_null());
    }
}

#[test]
fn match_output_is_byte_deterministic() {
    let args = ["match", "--pair", "ginzburg", "--trunc", "3", "--samples", "3", "--seed", "11"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);

    // The environment seed is a fallback; the flag wins over it.
    let c = bin()
        .args(["match", "--pair", "ginzburg", "--trunc", "3", "--samples", "3"])
        .env("WEAKDUAL_SEED", "11")
        .output()
        .unwrap();
    assert_eq!(a.stdout, c.stdout);
    let d = bin()
        .args(&args)
        .env("WEAKDUAL_SEED", "99")
        .output()
        .unwrap();
    assert_eq!(a.stdout, d.stdout);

    // Without a flag or environment override the default seed is reported.
    let e = run(&["match", "--pair", "ginzburg", "--trunc", "3", "--samples", "2"]);
    assert_eq!(json(&e)["seed"], 2024);
}

#[test]
fn identity_assembles_a_global_comparison_from_a_places_file() {
    let path = std::env::temp_dir().join("weakdual-cli-places-test.json");
    std::fs::write(
        &path,
        r#"[
            {"q": 2, "satake": {"semisimple": ["2", "1/2"], "gm": "3"}},
            {"q": 3, "satake": {"semisimple": ["1/3", "-2"], "gm": "-1/5"}}
        ]"#,
    )
    .unwrap();
    let out = run(&[
        "identity",
        "--pair",
        "ginzburg",
        "--genus",
        "2",
        "--places",
        path.to_str().unwrap(),
        "--trunc",
        "4",
    ]);
    std::fs::remove_file(&path).ok();
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["pass"], true);
    let places = v["places"].as_array().unwrap();
    assert_eq!(places.len(), 2);
    assert!(places.iter().all(|p| p["pass"] == true));
    // The two normalization ledgers disagree by exactly three quarter-powers
    // of Delta, i.e. q^(3(g-1)/2) at each place.
    assert_eq!(v["ledger"]["difference_quarter_units"], "3");
    assert_eq!(v["ledger"]["q_exponent_difference"], "3/2");
    assert_eq!(v["ledger"]["expected_discrepancy"], "3");
    assert_eq!(v["central_term"], "(chi_f o theta_check)(partial^(-3/2))");
}

#[test]
fn integrality_check_reports_the_verdict_as_a_query() {
    // chi = (5,4,4): torus conditions hold, threshold sits at valuation one.
    let out = run(&[
        "integrality", "check", "--case", "ginzburg_auto", "--chi", "5,4,4", "--vt", "0",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["integral"], false);

    let out = run(&[
        "integrality", "check", "--case", "ginzburg_auto", "--chi", "5,4,4", "--vt", "inf",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["integral"], true);
}

#[test]
fn classical_tate_inverts_the_linear_factor() {
    let out = run(&["classical", "--check", "tate", "--chi-p", "2/3", "--trunc", "4"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["pass"], true);
    assert_eq!(
        v["coeffs"],
        serde_json::json!(["1", "2/3", "4/9", "8/27", "16/81"])
    );
}

#[test]
fn usage_errors_exit_with_code_two() {
    let cases: &[&[&str]] = &[
        &["nosuchcommand"],
        &["hilbert", "--case", "nosuchcase"],
        &["weights", "--case", "gl2"],
        // A Satake point with a zero coordinate is rejected.
        &["lfactor", "--space", "tensor", "--point", "1,0", "--point", "1,1"],
        // Wrong arity for the chosen space.
        &["lfactor", "--space", "a3", "--point", "1,2"],
        &["classical", "--check", "tate"],
        &["match", "--pair", "ginzburg", "--samples", "0"],
        &["identity", "--pair", "garrett", "--places", "/nonexistent/places.json"],
        &["integrality", "check", "--case", "ginzburg_auto", "--chi", "1/2,0,0", "--vt", "0"],
    ];
    for args in cases {
        let out = run(args);
        assert_eq!(code(&out), 2, "expected usage error for {args:?}");
    }
}

#[test]
fn weights_reject_the_classical_auxiliaries_without_cones() {
    // c3_auxiliary exists in the catalog but has no spherical model attached,
    // so weight enumeration is a usage error rather than an empty answer.
    let out = run(&["weights", "--case", "c3_auxiliary", "--kind", "automorphic"]);
    assert_eq!(code(&out), 2);
}
