use std::process::{Command, Output};

fn symconv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symconv"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compute_examples() {
    let cases: [(&[&str], &str); 5] = [
        (&["compute", "bernoulli", "12"], "-691/2730"),
        (&["compute", "biv_lucas", "2"], "y^2 + 2*t"),
        (&["compute", "biv_balancing", "3", "--at", "y=1,t=1"], "35"),
        (
            &["compute", "biv_lucas_balancing", "2", "--at", "y=1,t=1"],
            "17",
        ),
        (&["compute", "euler", "4"], "5"),
    ];
    for (args, want) in cases {
        let out = symconv(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        assert_eq!(stdout(&out).trim(), want, "{args:?}");
    }
}

#[test]
fn compute_rejects_negative_indices() {
    let out = symconv(&["compute", "bernoulli", "-3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = symconv(&["compute", "pell", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_single_identity_prints_each_index() {
    let out = symconv(&["verify", "--id", "T2.1a", "--max-n", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for n in 0..=6 {
        assert!(
            text.contains(&format!("T2.1a:as_printed n={n} pass")),
            "{text}"
        );
    }
}

#[test]
fn unknown_identity_is_a_usage_error() {
    let out = symconv(&["verify", "--id", "NOPE"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown identity: NOPE"));
}

#[test]
fn bad_flags_are_usage_errors() {
    assert_eq!(
        symconv(&["verify", "--format", "yaml"]).status.code(),
        Some(2)
    );
    assert_eq!(
        symconv(&["verify", "--variant", "all"]).status.code(),
        Some(2)
    );
    assert_eq!(
        symconv(&["verify", "--all", "--id", "T2.1a"]).status.code(),
        Some(2)
    );
}

#[test]
fn printed_failures_do_not_change_the_exit_code() {
    let out = symconv(&["verify", "--id", "T3.3", "--format", "json", "--max-n", "8"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let results = v["results"].as_array().unwrap();
    assert_eq!(results.len(), 2);
    assert_eq!(results[0]["variant"], "as_printed");
    assert_eq!(results[0]["status"], "fail");
    assert_eq!(results[1]["status"], "pass");
    assert!(results[1]["first_fail_n"].is_null());
    assert_eq!(v["errata"][0]["id"], "T3.3");
}

#[test]
fn report_writes_to_a_file() {
    let dir = std::env::temp_dir().join(format!("symconv-report-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.md");
    let out = symconv(&[
        "report",
        "--id",
        "BINET.C",
        "--id",
        "C2.1.2",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let md = std::fs::read_to_string(&path).unwrap();
    assert!(md.contains("## Errata"));
    assert!(md.contains("| BINET.C |"));
    assert!(md.contains("| C2.1.2 |"));
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn corrected_report_has_no_failures() {
    let out = symconv(&[
        "report",
        "--variant",
        "corrected",
        "--format",
        "json",
        "--max-n",
        "10",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["results"]
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r["status"] == "pass"));
    assert!(v["errata"].as_array().unwrap().is_empty());
}

#[test]
fn series_coefficients() {
    let out = symconv(&["series", "bernoulli", "4"]);
    assert_eq!(stdout(&out), "0: 1\n1: -1/2\n2: 1/6\n3: 0\n4: -1/30\n");
    let out = symconv(&["series", "sym_s", "2", "--at", "x1=2,x2=3"]);
    assert_eq!(stdout(&out), "0: 0\n1: 1\n2: 5\n");
}
