use std::process::{Command, Output};

fn sptlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sptlab"))
        .args(args)
        .env_remove("SPTLAB_SERIES_ORDER")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn spt_examples() {
    for (args, want) in [
        (vec!["spt", "4", "--method", "weighted"], "10\n"),
        (vec!["spt", "5", "--method", "moments"], "14\n"),
        (vec!["spt", "6", "--method", "marked"], "26\n"),
    ] {
        let out = sptlab(&args);
        assert!(out.status.success(), "{args:?}");
        assert_eq!(stdout(&out), want, "{args:?}");
    }
    for (n, method) in [
        ("14", "s-partitions"),
        ("25", "marked"),
        ("40", "series"),
        ("30", "moments"),
    ] {
        let out = sptlab(&["spt", n, "--method", method]);
        assert!(out.status.success());
        assert_eq!(
            out.stdout,
            sptlab(&["spt", n]).stdout,
            "spt({n}) by {method}"
        );
    }
    let json = sptlab(&["spt", "4", "--format", "json"]);
    assert_eq!(
        stdout(&json),
        "{\"n\":4,\"method\":\"weighted\",\"spt\":10}\n"
    );
}

#[test]
fn caps_name_their_flags() {
    let out = sptlab(&["spt", "19", "--method", "s-partitions"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--s-partition-cap"));

    let out = sptlab(&["spt", "41", "--method", "series"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--series-order"));

    let out = sptlab(&["spt", "30", "--max-n", "20"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--max-n"));
}

#[test]
fn series_order_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_sptlab"))
        .args(["spt", "45", "--method", "series"])
        .env("SPTLAB_SERIES_ORDER", "50")
        .output()
        .unwrap();
    assert!(out.status.success());
    let weighted = sptlab(&["spt", "45"]);
    assert_eq!(out.stdout, weighted.stdout);
}

#[test]
fn tables_match_golden_files() {
    for (id, golden) in [
        ("2.1", include_str!("golden/table_2_1.tsv")),
        ("3.1", include_str!("golden/table_3_1.tsv")),
        ("3.2", include_str!("golden/table_3_2.tsv")),
    ] {
        let out = sptlab(&["table", id]);
        assert!(out.status.success());
        assert_eq!(stdout(&out), golden, "table {id}");
    }
    let t31 = stdout(&sptlab(&["table", "3.1"]));
    assert_eq!(t31.lines().count(), 11);
    assert_eq!(
        t31.lines().last().unwrap(),
        "((1,1,1,1),4)\t((4),1,4)\t0\t0"
    );
    assert_eq!(stdout(&sptlab(&["table", "3.2"])).lines().count(), 15);

    let bad = sptlab(&["table", "4.1"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn tables_in_other_formats() {
    let json: serde_json::Value =
        serde_json::from_slice(&sptlab(&["table", "2.1", "--format", "json"]).stdout).unwrap();
    assert_eq!(json["s_partitions"].as_array().unwrap().len(), 16);
    assert_eq!(
        json["doubly_marked_partitions"].as_array().unwrap().len(),
        10
    );
    let pretty = sptlab(&["table", "3.2", "--format", "pretty"]);
    assert!(pretty.status.success());
    assert!(stdout(&pretty).contains("((5),1,5)"));
}

#[test]
fn class_sizes() {
    for (n, modulus, size, count) in [("4", "5", 2, 5), ("5", "7", 2, 7), ("19", "7", 260, 7)] {
        let out = sptlab(&["classes", n, "--modulus", modulus, "--format", "json"]);
        assert!(out.status.success());
        let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        let sizes: Vec<u64> = json["sizes"]
            .as_array()
            .unwrap()
            .iter()
            .map(|v| v.as_u64().unwrap())
            .collect();
        assert_eq!(sizes, vec![size; count], "classes {n} mod {modulus}");
        assert_eq!(json["equinumerous"], true);
    }
    let uneven = sptlab(&["classes", "6", "--modulus", "5"]);
    assert!(uneven.status.success());
}

#[test]
fn map_examples() {
    let out = sptlab(&["map", "delta", r#"{"parts":[2,1,1,1,1],"k":5}"#, "--trace"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(
        json["result"],
        serde_json::json!({"parts": [2, 2, 1, 1], "s": 2, "t": 2})
    );
    assert_eq!(json["steps"], 3);
    assert_eq!(json["trace"]["steps"].as_array().unwrap().len(), 4);

    let out = sptlab(&["map", "lambda", r#"{"parts":[1,1,1,1],"s":1,"t":1}"#]);
    assert_eq!(stdout(&out), "{\"parts\":[4],\"k\":1}\n");

    let out = sptlab(&["map", "delta", r#"{"parts":[4],"k":1}"#, "--trace"]);
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["steps"], 0);
    assert_eq!(
        json["result"],
        serde_json::json!({"parts": [1, 1, 1, 1], "s": 1, "t": 1})
    );
}

#[test]
fn map_errors() {
    let out = sptlab(&["map", "delta", r#"{"parts":[2,1,"#]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("column"));

    let out = sptlab(&["map", "delta", r#"{"parts":[2,1],"k":1}"#]);
    assert_eq!(out.status.code(), Some(3));

    let out = sptlab(&["map", "lambda", r#"{"parts":[3,1],"s":1,"t":2}"#]);
    assert_eq!(out.status.code(), Some(3));

    let out = sptlab(&["map", "delta", r#"{"parts":[1,2],"k":1}"#]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_examples() {
    for (suite, max_n) in [("congruences", "20"), ("bijections", "12"), ("gf", "30")] {
        let out = sptlab(&[
            "verify", "--suite", suite, "--max-n", max_n, "--format", "json",
        ]);
        assert!(out.status.success(), "{suite}: {}", stdout(&out));
        let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(json["overall"], true);
        let names: Vec<&str> = json["checks"]
            .as_array()
            .unwrap()
            .iter()
            .map(|c| c["name"].as_str().unwrap())
            .collect();
        assert!(names.iter().all(|n| n.starts_with(suite)));
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(names, sorted);
    }
}

#[test]
fn verify_all_passes_and_catches_faults() {
    let clean = sptlab(&["verify", "--max-n", "12"]);
    assert!(clean.status.success(), "{}", stdout(&clean));
    for fault in [
        "spt",
        "partition-count",
        "rank-counts",
        "crank-counts",
        "recurrence",
        "psi",
        "tau",
        "delta",
        "lambda",
        "gf-spt",
        "gf-ns",
    ] {
        let out = sptlab(&[
            "verify",
            "--max-n",
            "12",
            "--inject-fault",
            fault,
            "--format",
            "json",
        ]);
        assert_eq!(out.status.code(), Some(1), "fault {fault}");
        let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(json["overall"], false);
        let failing: Vec<&serde_json::Value> = json["checks"]
            .as_array()
            .unwrap()
            .iter()
            .filter(|c| c["passed"] == false)
            .collect();
        assert!(!failing.is_empty());
        assert!(failing.iter().all(|c| c["counterexample"].is_string()));
    }
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["table", "2.1"],
        vec!["classes", "9", "--modulus", "5"],
        vec!["verify", "--suite", "dyson", "--format", "tsv"],
    ] {
        assert_eq!(sptlab(&args).stdout, sptlab(&args).stdout, "{args:?}");
    }
}
