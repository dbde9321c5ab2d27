use std::fs;
use std::process::{Command, Output};

fn franel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_franel"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn seq_plain_output() {
    let o = franel(&["seq", "--family", "franel", "--count", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1 2 10 56 346\n");
    let o = franel(&["seq", "--family", "powersum", "--r", "0", "--count", "3"]);
    assert_eq!(stdout(&o), "1 2 3\n");
    let o = franel(&["seq", "--family", "multinomial", "--m", "3", "--r", "2", "--count", "4"]);
    assert_eq!(stdout(&o), "1 3 15 93\n");
    let o = franel(&["seq", "--family", "a002893", "--count", "4", "--modulus", "10"]);
    assert_eq!(stdout(&o), "1 3 5 3\n");
}

#[test]
fn seq_json_and_csv_use_decimal_strings() {
    let o = franel(&["seq", "--family", "powersum", "--r", "6", "--count", "30", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let last = doc["values"][29].as_str().unwrap();
    assert!(last.len() > 20, "value exceeds 64 bits: {last}");
    assert_eq!(doc["family"], "powersum");
    let o = franel(&["seq", "--family", "franel", "--count", "3", "--format", "csv"]);
    assert_eq!(stdout(&o), "n,value\n0,1\n1,2\n2,10\n");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(franel(&["seq", "--family", "powersum", "--count", "3"]).status.code(), Some(2));
    assert_eq!(franel(&["seq", "--family", "franel", "--count", "0"]).status.code(), Some(2));
    assert_eq!(franel(&["seq", "--family", "nope", "--count", "3"]).status.code(), Some(2));
    assert_eq!(franel(&["verify", "--suite", "lemmas", "--pmax", "4"]).status.code(), Some(2));
    assert_eq!(franel(&["scan", "--conjecture", "conj1", "--jobs", "0"]).status.code(), Some(2));
    assert_eq!(franel(&["scan", "--conjecture", "conj1", "--mmax", "3"]).status.code(), Some(2));
    assert_eq!(franel(&["bogus"]).status.code(), Some(2));
}

#[test]
fn oracle_command() {
    let o = franel(&["oracle", "--m", "3", "--n", "2", "--r", "2"]);
    assert_eq!((o.status.code(), stdout(&o)), (Some(0), "15 == 15 OK\n".to_string()));
    let o = franel(&["oracle", "--m", "2", "--n", "4", "--r", "3"]);
    assert_eq!(stdout(&o), "346 == 346 OK\n");
    let o = franel(&["oracle", "--m", "1", "--n", "7", "--r", "9"]);
    assert_eq!(stdout(&o), "1 == 1 OK\n");
    let o = franel(&["oracle", "--m", "6", "--n", "30", "--r", "2", "--budget", "1000"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("budget"));
}

#[test]
fn verify_small_suites() {
    let o = franel(&["verify", "--suite", "identities", "--nmax", "1", "--stable"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["summary"]["failed"], 0);
    assert!(doc["results"].as_array().unwrap().iter().all(|r| r["params"]["n"] == "1"));
    assert!(doc.get("generated_at").is_none());

    let o = franel(&["verify", "--suite", "theorems", "--nmax", "50", "--pmax", "50"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["summary"]["failed"], 0);
    assert!(doc["generated_at"].is_u64());

    let o = franel(&["verify", "--suite", "all", "--nmax", "100", "--pmax", "100", "--stable"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["summary"]["failed"], 0);
    assert_eq!(doc["errata_notes"].as_array().unwrap().len(), 3);
}

#[test]
fn csv_report() {
    let o = franel(&["verify", "--suite", "lemmas", "--pmax", "7", "--format", "csv"]);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("check_name,kind,params,modulus,lhs_residue,rhs_residue,holds"));
    assert!(text.contains("lemma_sun,lemma,p=5,125,96,96,true"));
    assert!(text.contains("lemma_fpmod,lemma,p=7,343,2,2,true"));
}

#[test]
fn scan_writes_out_file_and_finds_nothing() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("scan.json");
    let o = franel(&[
        "scan", "--conjecture", "conj2", "--mmax", "3", "--rmax", "3", "--nmax", "20",
        "--out", out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let doc: serde_json::Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(doc["counterexamples"].as_array().unwrap().len(), 0);
    assert_eq!(doc["summary"]["total"], 3 * 4 * 20);
}

#[test]
fn unwritable_output_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("missing").join("x.json");
    let o = franel(&["verify", "--suite", "lemmas", "--pmax", "7", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn stable_reports_are_identical_across_jobs() {
    let run = |jobs: &str| {
        let o = franel(&[
            "scan", "--conjecture", "conj1", "--rmax", "4", "--nmax", "60", "--stable", "--jobs", jobs,
        ]);
        assert_eq!(o.status.code(), Some(0));
        o.stdout
    };
    assert_eq!(run("1"), run("8"));
}

#[test]
fn cache_is_written_reused_and_revalidated() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache.json");
    let c = cache.to_str().unwrap();
    let o = franel(&["seq", "--family", "franel", "--count", "40", "--cache", c]);
    assert_eq!(o.status.code(), Some(0));
    let first = stdout(&o);
    let text = fs::read_to_string(&cache).unwrap();
    assert!(text.contains("\"family\":\"franel\""));

    let o = franel(&["seq", "--family", "franel", "--count", "40", "--cache", c]);
    assert_eq!(stdout(&o), first);
    assert!(o.stderr.is_empty());

    // corrupt an early term: the entry must be dropped, not trusted
    let poisoned = text.replacen("\"56\"", "\"57\"", 1);
    assert_ne!(poisoned, text);
    fs::write(&cache, poisoned).unwrap();
    let o = franel(&["seq", "--family", "franel", "--count", "40", "--cache", c]);
    assert_eq!(stdout(&o), first);
    assert!(String::from_utf8_lossy(&o.stderr).contains("discarding cached franel"));

    fs::write(&cache, "not json").unwrap();
    let o = franel(&["seq", "--family", "franel", "--count", "5", "--cache", c]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1 2 10 56 346\n");
    assert!(String::from_utf8_lossy(&o.stderr).contains("corrupt cache"));
}
