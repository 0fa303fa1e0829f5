//! End-to-end tests of the command-line binary: exit codes, output formats,
//! cache behaviour, and determinism across worker counts.

use std::process::{Command, Output};

use qcongruence::congruences::{CongruenceReport, Status};
use qcongruence::runner::{RunReport, Summary, TaskKind, TaskSpec};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_qcongruence"))
}

fn run_ok(args: &[&str]) -> Output {
    let out = bin().args(args).output().expect("binary runs");
    assert!(
        out.status.code() == Some(0),
        "expected exit 0 for {args:?}: {}\n{}",
        out.status,
        String::from_utf8_lossy(&out.stderr)
    );
    out
}

#[test]
fn passing_run_exits_zero_with_summary() {
    let out = run_ok(&["verify", "theorem", "--id", "3.1", "--n-range", "3:15"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("summary: 14 passed, 0 failed, 0 undefined"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["verify", "theorem", "--id", "9.9", "--n-range", "3:5"] as &[&str],
        &["verify", "theorem", "--id", "3.1", "--n-range", "5:3"],
        &["verify", "theorem", "--id", "3.1", "--n-range", "oops"],
        &["numeric", "--id", "unheard-of"],
        &["supercong", "--id", "B2"], // missing --p-range is a clap error
    ] {
        let out = bin().args(args).output().expect("binary runs");
        assert_eq!(out.status.code(), Some(2), "args {args:?}");
    }
}

#[test]
fn json_report_has_schema_fields() {
    let out = run_ok(&[
        "--format", "json",
        "verify", "theorem", "--id", "3.3", "--n-range", "3:9",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).expect("valid json");
    assert_eq!(v["task"]["kind"], "theorem");
    assert_eq!(v["task"]["id"], "3.3");
    assert!(v["results"].as_array().unwrap().len() == 4);
    assert_eq!(v["results"][0]["statement_id"], "thm33");
    assert_eq!(v["results"][0]["status"], "pass");
    assert_eq!(v["summary"]["failed"], 0);
    assert!(v["wall_time_ms"].is_u64());
}

#[test]
fn modform_csv_lists_coefficients() {
    let out = run_ok(&["--format", "csv", "modform", "--form", "f2", "--limit", "8"]);
    let text = String::from_utf8_lossy(&out.stdout);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,a_n");
    assert_eq!(lines[1], "1,1");
    assert_eq!(lines[2], "2,-2");
    assert_eq!(lines[3], "3,-2");
    assert_eq!(lines.len(), 8); // header + a(1)..a(7)
}

fn normalized_json(out: &Output) -> serde_json::Value {
    let mut v: serde_json::Value = serde_json::from_slice(&out.stdout).expect("valid json");
    v.as_object_mut().unwrap().remove("wall_time_ms");
    for item in v["results"].as_array_mut().unwrap() {
        item.as_object_mut().unwrap().remove("elapsed");
    }
    v
}

#[test]
fn reports_are_deterministic_across_jobs() {
    let args = |jobs: &str| {
        vec![
            "--format".to_string(), "json".to_string(),
            "--jobs".to_string(), jobs.to_string(),
            "verify".to_string(), "theorem".to_string(),
            "--id".to_string(), "3.4".to_string(),
            "--n-range".to_string(), "3:25".to_string(),
        ]
    };
    let a = run_ok(&args("1").iter().map(|s| s.as_str()).collect::<Vec<_>>());
    let b = run_ok(&args("4").iter().map(|s| s.as_str()).collect::<Vec<_>>());
    assert_eq!(normalized_json(&a), normalized_json(&b));
}

#[test]
fn cache_skips_passes_and_survives_corruption() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("verdicts.jsonl");
    let cache_s = cache.to_str().unwrap();
    let args =
        ["verify", "theorem", "--id", "3.2", "--n-range", "3:13", "--cache", cache_s];

    run_ok(&args);
    let first = std::fs::read_to_string(&cache).unwrap();
    assert_eq!(first.lines().count(), 6);

    // second run: all items already recorded, nothing appended, still exit 0
    run_ok(&args);
    assert_eq!(std::fs::read_to_string(&cache).unwrap(), first);

    // --force recomputes but appends nothing new (keys already present)
    let mut forced = args.to_vec();
    forced.push("--force");
    run_ok(&forced);
    assert_eq!(std::fs::read_to_string(&cache).unwrap(), first);

    // corrupt cache: warning on stderr, full recompute, then usable again
    std::fs::write(&cache, "{ not json\n").unwrap();
    let out = bin().args(args).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("corrupt cache"));
    assert_eq!(std::fs::read_to_string(&cache).unwrap().lines().count(), 7);
}

#[test]
fn cache_path_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("env-cache.jsonl");
    let out = bin()
        .env("QCONG_CACHE", &cache)
        .args(["verify", "problem", "--id", "3.6", "--n-range", "3:31"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(cache.exists());
    assert_eq!(std::fs::read_to_string(&cache).unwrap().lines().count(), 4);
}

// The exit-code contract itself, property-tested with injected stub results:
// all_ok holds exactly when no stub failed or came out undefined.
#[test]
fn exit_contract_with_injected_stubs() {
    use proptest::prelude::*;
    let status = prop_oneof![
        Just(Status::Pass),
        Just(Status::Fail),
        Just(Status::Undefined),
        Just(Status::Skipped),
    ];
    proptest!(|(statuses in proptest::collection::vec(status, 0..40))| {
        let results: Vec<CongruenceReport> = statuses
            .iter()
            .enumerate()
            .map(|(i, s)| CongruenceReport {
                statement_id: format!("stub{i}"),
                params: Default::default(),
                status: *s,
                witness: None,
                elapsed: Default::default(),
            })
            .collect();
        let mut summary = Summary::default();
        for s in &statuses {
            match s {
                Status::Pass | Status::Skipped => summary.passed += 1,
                Status::Fail => summary.failed += 1,
                Status::Undefined => summary.undefined += 1,
            }
        }
        let report = RunReport {
            task: TaskSpec::new(TaskKind::Numeric, "bauer"),
            results,
            coefficients: None,
            summary,
            wall_time: Default::default(),
        };
        let expect_ok = !statuses
            .iter()
            .any(|s| matches!(s, Status::Fail | Status::Undefined));
        prop_assert_eq!(report.all_ok(), expect_ok);
    });
}
