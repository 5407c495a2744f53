//! End-to-end tests of the command-line surface: subcommand output, file
//! formats, and exit codes.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn matflat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_matflat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).trim().to_string()
}

fn tmpfile(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join("matflat-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn qbinom_prints_exact_value() {
    let out = matflat(&["qbinom", "2", "3", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "7");
    // big values stay exact (cross-checked against an independent
    // product-formula evaluation)
    let out = matflat(&["qbinom", "9", "12", "6"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "25700898795425967456865415317747420");
}

#[test]
fn construct_flats_minor_pipeline() {
    let path = tmpfile("m3.json");
    let out = matflat(&["construct", "blokhuis", "--q", "3", "-o", path.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(&path).unwrap();
    let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(parsed["type"], "rank3");
    assert_eq!(parsed["n"], 9);
    assert_eq!(parsed["long_lines"].as_array().unwrap().len(), 9);

    let out = matflat(&["flats", path.to_str().unwrap(), "--k", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "18");

    let out = matflat(&["minor", path.to_str().unwrap(), "--max-line"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().next().unwrap(), "5");
}

#[test]
fn construct_pg_emits_linear_format() {
    let path = tmpfile("fano.json");
    let out = matflat(&["construct", "pg", "--r", "3", "--q", "2", "-o", path.to_str().unwrap()]);
    assert!(out.status.success());
    let parsed: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(parsed["type"], "linear");
    assert_eq!(parsed["q"], 2);
    assert_eq!(parsed["rank"], 3);
    assert_eq!(parsed["columns"].as_array().unwrap().len(), 7);

    let out = matflat(&["flats", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "W_0 = 1\nW_1 = 7\nW_2 = 7\nW_3 = 1");
}

#[test]
fn flats_list_prints_sorted_element_lists() {
    let path = tmpfile("u26.json");
    std::fs::write(&path, r#"{"type":"uniform","r":2,"n":6}"#).unwrap();
    let out = matflat(&["flats", path.to_str().unwrap(), "--k", "1", "--list"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines, vec!["0", "1", "2", "3", "4", "5"]);

    let out = matflat(&["--format", "json", "flats", path.to_str().unwrap(), "--k", "1", "--list"]);
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["count"], 6);
}

#[test]
fn check_exit_codes() {
    // holds: exit 0
    let path = tmpfile("m3-check.json");
    let out = matflat(&["construct", "blokhuis", "--q", "3", "-o", path.to_str().unwrap()]);
    assert!(out.status.success());
    let out = matflat(&["check", path.to_str().unwrap(), "--ell", "5", "--k", "2"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));

    // violated: exit 2 with a JSON witness on stdout
    let path = tmpfile("u27.json");
    std::fs::write(&path, r#"{"type":"uniform","r":2,"n":7}"#).unwrap();
    let out = matflat(&["check", path.to_str().unwrap(), "--ell", "6", "--k", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["status"], "fail");
    assert_eq!(parsed["values"]["W_k"], "7");
    assert_eq!(parsed["values"]["bound"], "6");

    // not in the class: a data error, not a violation
    let out = matflat(&["check", path.to_str().unwrap(), "--ell", "2", "--k", "1"]);
    assert_eq!(out.status.code(), Some(65));
}

#[test]
fn usage_errors_exit_64() {
    let out = matflat(&["qbinom", "2"]);
    assert_eq!(out.status.code(), Some(64));
    let out = matflat(&["no-such-subcommand"]);
    assert_eq!(out.status.code(), Some(64));
    let out = matflat(&["construct", "pg", "--q", "2"]); // missing --r
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn file_errors_exit_66() {
    let out = matflat(&["flats", "/nonexistent/nowhere.json", "--k", "1"]);
    assert_eq!(out.status.code(), Some(66));

    let path = tmpfile("broken.json");
    std::fs::write(&path, "{\"type\":\"linear\",").unwrap();
    let out = matflat(&["flats", path.to_str().unwrap(), "--k", "1"]);
    assert_eq!(out.status.code(), Some(66));

    let path = tmpfile("badfield.json");
    std::fs::write(&path, r#"{"type":"linear","q":4,"rank":2,"columns":[[1,0],[9,1]]}"#).unwrap();
    let out = matflat(&["flats", path.to_str().unwrap(), "--k", "1"]);
    assert_eq!(out.status.code(), Some(66));
    assert!(String::from_utf8_lossy(&out.stderr).contains("columns[1][0]"));
}

#[test]
fn resource_limit_exits_69() {
    let path = tmpfile("pg43.json");
    let out = matflat(&["construct", "pg", "--r", "4", "--q", "3", "-o", path.to_str().unwrap()]);
    assert!(out.status.success());
    let out = matflat(&["--cap", "50", "flats", path.to_str().unwrap(), "--k", "2"]);
    assert_eq!(out.status.code(), Some(69));
}

#[test]
fn verify_paper_quick_is_green_and_machine_readable() {
    let report_path = tmpfile("quick-report.json");
    let out = matflat(&[
        "verify-paper",
        "--profile",
        "quick",
        "--out",
        report_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let parsed: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report_path).unwrap()).unwrap();
    assert_eq!(parsed["schema"], 1);
    assert_eq!(parsed["failed"], 0);
    let reports = parsed["reports"].as_array().unwrap();
    assert!(reports.iter().any(|r| r["claim_id"].as_str().unwrap().starts_with("lemma3-W2")));
    assert!(reports.iter().any(|r| r["claim_id"].as_str().unwrap().starts_with("pg-whitney")));
    assert!(reports.iter().all(|r| r["status"] == "pass"));
}

#[test]
fn verify_paper_table_output_summarizes() {
    let out = matflat(&["verify-paper", "--profile", "quick"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.lines().any(|l| l.starts_with("PASS")));
    assert!(text.lines().last().unwrap().contains("passed"));
}

#[test]
fn threads_option_gives_identical_output() {
    let path = tmpfile("pg33.json");
    let out = matflat(&["construct", "pg", "--r", "3", "--q", "3", "-o", path.to_str().unwrap()]);
    assert!(out.status.success());
    let p = path.to_str().unwrap();
    let a = matflat(&["--threads", "1", "--format", "json", "flats", p, "--k", "2", "--list"]);
    let b = matflat(&["--threads", "8", "--format", "json", "flats", p, "--k", "2", "--list"]);
    assert_eq!(stdout(&a), stdout(&b));

    let a = matflat(&["--threads", "1", "--format", "json", "minor", p]);
    let b = matflat(&["--threads", "8", "--format", "json", "minor", p]);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn verify_paper_deterministic_across_thread_counts() {
    fn strip_runtimes(v: &mut serde_json::Value) {
        match v {
            serde_json::Value::Object(map) => {
                map.remove("runtime_ms");
                for (_, child) in map.iter_mut() {
                    strip_runtimes(child);
                }
            }
            serde_json::Value::Array(items) => {
                for child in items.iter_mut() {
                    strip_runtimes(child);
                }
            }
            _ => {}
        }
    }
    let run = |threads: &str| {
        let out = matflat(&["--threads", threads, "--format", "json", "verify-paper", "--profile", "quick"]);
        assert_eq!(out.status.code(), Some(0));
        let mut v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        strip_runtimes(&mut v);
        v
    };
    assert_eq!(run("1"), run("8"));
}

#[test]
fn constructed_files_reload_cleanly() {
    for (args, name) in [
        (vec!["construct", "pg", "--r", "4", "--q", "2"], "pg"),
        (vec!["construct", "ag", "--r", "3", "--q", "3"], "ag"),
        (vec!["construct", "blokhuis", "--q", "4"], "blokhuis"),
        (vec!["construct", "pgfree", "--q", "2"], "pgfree"),
    ] {
        let path = tmpfile(&format!("reload-{name}.json"));
        let mut full = args.clone();
        full.push("-o");
        full.push(path.to_str().unwrap());
        let out = matflat(&full);
        assert!(out.status.success(), "{name}: {}", String::from_utf8_lossy(&out.stderr));
        let out = matflat(&["flats", path.to_str().unwrap()]);
        assert!(out.status.success(), "{name} reload");
    }
}

#[test]
fn construct_writes_to_stdout_without_output_path() {
    let out = matflat(&["construct", "ag", "--r", "2", "--q", "5"]);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["type"], "linear");
    assert_eq!(parsed["columns"].as_array().unwrap().len(), 5);
}

#[test]
fn help_exits_zero() {
    let out = matflat(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(Path::new(env!("CARGO_BIN_EXE_matflat")).exists());
}
