use std::io::Write;
use std::process::{Command, Output, Stdio};

fn touchard(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_touchard"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn touchard_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_touchard"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_defaults() {
    let o = touchard(&["verify"]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let text = stdout(&o);
    let identity_lines = text.lines().filter(|l| l.starts_with("n=")).count();
    assert!(identity_lines >= 402);
    assert!(text
        .lines()
        .any(|l| l == "n=3 lhs=14 rhs=14 holds=true terms=8,6"));
    assert!(text.contains("roundtrip n=10 dyck=58786 restricted=58786 g=58786 failures=0 ok=true"));
}

#[test]
fn verify_small_and_ndjson() {
    let o = touchard(&[
        "verify",
        "--max-identity-n",
        "3",
        "--max-roundtrip-len",
        "0",
        "--max-census-n",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text
        .lines()
        .any(|l| l == "n=3 lhs=14 rhs=14 holds=true terms=8,6"));
    let round_trips: Vec<&str> = text
        .lines()
        .filter(|l| l.starts_with("roundtrip"))
        .collect();
    assert_eq!(
        round_trips,
        vec!["roundtrip n=0 dyck=1 restricted=1 g=1 failures=0 ok=true"]
    );

    let o = touchard(&["verify", "--max-identity-n", "1", "--format", "ndjson"]);
    assert_eq!(o.status.code(), Some(0));
    for line in stdout(&o).lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(v["check"].is_string());
    }
}

#[test]
fn injected_faults_fail_verify() {
    for fault in ["swap-colors", "last-red-zero"] {
        let o = touchard(&[
            "verify",
            "--max-identity-n",
            "2",
            "--max-roundtrip-len",
            "4",
            "--inject-fault",
            fault,
        ]);
        assert_eq!(o.status.code(), Some(1), "{fault}");
        assert!(String::from_utf8_lossy(&o.stderr).contains("first failing check: roundtrip"));
    }
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(
        touchard(&["verify", "--max-identity-n", "-1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        touchard(&["verify", "--format", "xml"]).status.code(),
        Some(2)
    );
    assert_eq!(touchard(&["enumerate", "tree", "3"]).status.code(), Some(2));
    assert_eq!(touchard(&["count", "catalan"]).status.code(), Some(2));
    assert_eq!(touchard(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn map_examples_and_inverse() {
    let o = touchard(&["map", "c2g", "--word", "UUDD"]);
    assert_eq!(stdout(&o), "R\n");
    let o = touchard(&["map", "g2c", "--word", "R"]);
    assert_eq!(stdout(&o), "UUDD\n");
    let o = touchard(&["map", "encode", "--word", "UD"]);
    assert_eq!(stdout(&o), "G\n");

    let all = stdout(&touchard(&["enumerate", "g", "4"]));
    for (there, back) in [
        ("raise", "drop"),
        ("g2c", "c2g"),
        ("tsplit", "tmerge"),
        ("msplit", "mmerge"),
    ] {
        let mapped = touchard_stdin(&["map", there], &all);
        assert_eq!(mapped.status.code(), Some(0));
        let returned = touchard_stdin(&["map", back], &stdout(&mapped));
        assert_eq!(stdout(&returned), all, "{there}/{back}");
    }
}

#[test]
fn map_reports_bad_lines() {
    let o = touchard_stdin(&["map", "decode"], "URD\nGR\nUXD\nG\n");
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "UUDUDD\nUD\n");
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("line 2:"), "{err}");
    assert!(err.contains("line 3:"), "{err}");
    assert!(!err.contains("line 4:"));
}

#[test]
fn enumerate_examples() {
    assert_eq!(
        stdout(&touchard(&["enumerate", "g", "2"])),
        "UD\nGG\nGR\nRG\nRR\n"
    );
    assert_eq!(stdout(&touchard(&["enumerate", "dyck", "0"])), "\n");
    assert_eq!(
        stdout(&touchard(&["enumerate", "motzkin", "3", "--count-only"])),
        "4\n"
    );
    assert_eq!(
        stdout(&touchard(&[
            "enumerate",
            "grestricted",
            "5",
            "--count-only"
        ])),
        "42\n"
    );
}

#[test]
fn count_examples() {
    assert_eq!(stdout(&touchard(&["count", "catalan", "4"])), "14\n");
    assert_eq!(stdout(&touchard(&["count", "motzkin", "7"])), "127\n");
    assert_eq!(
        stdout(&touchard(&["count", "touchard-rhs", "0"])),
        "n=0 lhs=1 rhs=1 holds=true terms=1\n"
    );
    assert_eq!(
        stdout(&touchard(&["count", "motzkin-rhs", "3"])),
        "n=3 lhs=14 rhs=14 holds=true terms=1,3,6,4\n"
    );
}

#[test]
fn render_and_sample() {
    assert_eq!(
        stdout(&touchard(&["render", "ascii", "--word", "UD"])),
        "  \n/\\\n"
    );
    let o = touchard_stdin(&["render", "ascii"], "UHD\n");
    assert_eq!(stdout(&o), " - \n/ \\\n");
    let o = touchard(&["render", "svg", "--word", "URD", "--unit", "5"]);
    let svg = stdout(&o);
    assert_eq!(svg.matches("<polyline").count(), 3);
    assert_eq!(svg.matches("class=\"step red\"").count(), 1);
    assert_eq!(
        touchard(&["render", "svg", "--word", "DU"]).status.code(),
        Some(1)
    );
    assert_eq!(
        touchard(&["render", "svg", "--word", "UD", "--unit", "0"])
            .status
            .code(),
        Some(2)
    );

    let dir = std::env::temp_dir().join(format!("touchard-render-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("p.svg");
    let o = touchard(&[
        "render",
        "svg",
        "--word",
        "UGD",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(std::fs::read_to_string(&path).unwrap().starts_with("<?xml"));
    std::fs::remove_dir_all(&dir).unwrap();

    assert_eq!(
        stdout(&touchard(&["sample", "dyck", "1", "--seed", "7"])),
        "UD\n"
    );
    let a = stdout(&touchard(&["sample", "g", "9", "--seed", "42"]));
    assert_eq!(a, stdout(&touchard(&["sample", "g", "9", "--seed", "42"])));
    assert_eq!(a.trim_end().len(), 9);
}
