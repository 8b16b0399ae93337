use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn orbitkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orbitkit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn report(args: &[&str]) -> (i32, Value) {
    let out = orbitkit(args);
    let code = out.status.code().expect("exit code");
    let json = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (code, json)
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("orbitkit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn golden_cube_orbits() {
    let (code, r) = report(&[
        "orbits",
        "--poset",
        "prod:2x2x2",
        "--ell",
        "2",
        "--action",
        "row",
    ]);
    assert_eq!(code, 0);
    assert_eq!(r["orbit_sizes"], serde_json::json!({"5": 30, "9": 2}));
    assert_eq!(r["elements"], 168);
    for key in [
        "set",
        "action",
        "order",
        "homomesies",
        "resonance",
        "certificates",
        "conventions",
    ] {
        assert!(r.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn rectangle_order() {
    let (code, r) = report(&[
        "order",
        "--poset",
        "prod:2x3",
        "--ell",
        "2",
        "--restriction",
        "q:5",
        "--action",
        "pro",
        "--expect",
        "5",
    ]);
    assert_eq!(code, 0);
    assert_eq!(r["order"], 5);
    let (code, r) = report(&[
        "order",
        "--poset",
        "prod:2x3",
        "--ell",
        "2",
        "--restriction",
        "q:5",
        "--expect",
        "7",
    ]);
    assert_eq!(code, 1);
    assert!(!r["certificates"].as_array().unwrap().is_empty());
}

#[test]
fn enumerate_single_element() {
    let (code, r) = report(&[
        "enumerate",
        "--poset",
        "chain:1",
        "--ell",
        "3",
        "--restriction",
        "q:2",
    ]);
    assert_eq!(code, 0);
    assert_eq!(r["elements"], 4);
}

#[test]
fn divisibility_claims() {
    let (code, _) = report(&[
        "order",
        "--poset",
        "V",
        "--ell",
        "2",
        "--restriction",
        "q:5",
        "--divides",
        "10",
    ]);
    assert_eq!(code, 0);
    let (code, r) = report(&[
        "order",
        "--poset",
        "V",
        "--ell",
        "2",
        "--restriction",
        "q:5",
        "--divides",
        "3",
    ]);
    assert_eq!(code, 1);
    assert_eq!(r["verified"], false);
}

#[test]
fn homomesy_with_expected_constant() {
    let base = [
        "homomesy",
        "--poset",
        "prod:2x2x2",
        "--ell",
        "2",
        "--stat",
        "antipodal:1.2.1",
    ];
    let (code, r) = report(&[&base[..], &["--expect", "2"]].concat());
    assert_eq!(code, 0);
    assert_eq!(r["homomesies"][0]["constant"], "2");
    let (code, _) = report(&[&base[..], &["--expect", "5/2"]].concat());
    assert_eq!(code, 1);
    let (code, _) = report(&[
        "homomesy",
        "--poset",
        "prod:2x2",
        "--ell",
        "2",
        "--restriction",
        "q:4",
        "--stat",
        "chi:0@1",
    ]);
    assert_eq!(code, 1);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["orbits", "--poset", "nonsense:3"][..],
        &["orbits"][..],
        &[
            "orbits",
            "--poset",
            "prod:3x3x3",
            "--ell",
            "3",
            "--cap",
            "50",
        ][..],
        &["orbits", "--poset", "V", "--action", "togpro"][..],
        &["homomesy", "--poset", "V"][..],
        &["frobnicate"][..],
    ] {
        let out = orbitkit(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn resonance_and_equivariance() {
    let (code, r) = report(&[
        "resonance",
        "--poset",
        "V",
        "--ell",
        "2",
        "--restriction",
        "q:4",
    ]);
    assert_eq!(code, 0);
    assert_eq!(r["resonance"][0]["verified"], true);
    let (code, _) = report(&[
        "resonance",
        "--poset",
        "prod:2x2",
        "--ell",
        "1",
        "--restriction",
        "q:4",
        "--action",
        "togpro",
    ]);
    assert_eq!(code, 0);
    let (code, _) = report(&[
        "equivariance",
        "--poset",
        "prod:2x2",
        "--ell",
        "2",
        "--restriction",
        "q:5",
    ]);
    assert_eq!(code, 0);
    let (code, _) = report(&[
        "equivariance",
        "--poset",
        "prod:2x2",
        "--ell",
        "2",
        "--restriction",
        "q:5",
        "--against",
        "hpro",
        "--pi",
        "threechains:2,2,2",
        "--v",
        "-1,-1,1",
    ]);
    assert_eq!(code, 0);
}

#[test]
fn distribution_laws() {
    let (code, r) = report(&[
        "distribution",
        "--law",
        "ssyt",
        "--dims",
        "2x2",
        "--bound",
        "4",
    ]);
    assert_eq!(code, 0);
    assert_eq!(r["distribution"][0]["verified"], true);
    let (code, _) = report(&[
        "distribution",
        "--law",
        "partition",
        "--dims",
        "2x3",
        "--ell",
        "2",
    ]);
    assert_eq!(code, 0);
}

#[test]
fn bijection_round_trip() {
    let input = scratch("labeling.json");
    let forward = scratch("partition.json");
    let back = scratch("back.json");
    std::fs::write(
        &input,
        r#"{"labels":[1,2,3,4],"ell":2,"restriction_ref":"q:5"}"#,
    )
    .unwrap();
    let common = ["--poset", "chain:2", "--ell", "2", "--restriction", "q:5"];
    let out = orbitkit(
        &[
            &[
                "bijection",
                "--input",
                input.to_str().unwrap(),
                "--output",
                forward.to_str().unwrap(),
            ][..],
            &common[..],
        ]
        .concat(),
    );
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let out = orbitkit(
        &[
            &[
                "bijection",
                "--direction",
                "inverse",
                "--input",
                forward.to_str().unwrap(),
                "--output",
                back.to_str().unwrap(),
            ][..],
            &common[..],
        ]
        .concat(),
    );
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let back: Value = serde_json::from_str(&std::fs::read_to_string(back).unwrap()).unwrap();
    assert_eq!(back["labels"], serde_json::json!([1, 2, 3, 4]));
}

#[test]
fn reports_ignore_worker_count() {
    let args = [
        "orbits",
        "--poset",
        "V*chain:2",
        "--ell",
        "2",
        "--stat",
        "chi:all",
    ];
    let one = orbitkit(&[&args[..], &["--workers", "1"]].concat());
    let four = orbitkit(&[&args[..], &["--workers", "4"]].concat());
    assert!(one.status.success());
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn config_file_and_csv() {
    let cfg = scratch("run.toml");
    let csv = scratch("sizes.csv");
    std::fs::write(&cfg, "poset = \"prod:2x2x2\"\nell = 2\naction = \"row\"\n").unwrap();
    let (code, r) = report(&[
        "orbits",
        "--config",
        cfg.to_str().unwrap(),
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert_eq!(r["orbit_count"], 32);
    assert_eq!(
        std::fs::read_to_string(csv).unwrap(),
        "size,count\n5,30\n9,2\n"
    );
}

#[test]
fn suite_subset_and_mutation() {
    let (code, r) = report(&["suite", "small", "--criterion", "3", "--criterion", "8"]);
    assert_eq!(code, 0);
    assert_eq!(r["criteria"].as_array().unwrap().len(), 2);
    let (code, r) = report(&["suite", "--criterion", "1", "--mutate", "togpro-sweep"]);
    assert_eq!(code, 1);
    assert!(!r["certificates"].as_array().unwrap().is_empty());
}
