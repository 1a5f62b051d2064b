use std::process::{Command, Output};

fn qrwe(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qrwe")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn scalar_commands() {
    let out = qrwe(&["trace", "--level", "4", "--weight", "6", "--q", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "-12\n");

    let out = qrwe(&["moments", "--q", "5", "--R", "0"]);
    assert_eq!(stdout(&out), "5\n");

    let formula = stdout(&qrwe(&["moments", "--q", "7", "--R", "2", "--flavor", "2tors"]));
    let census = stdout(&qrwe(&["moments", "--q", "7", "--R", "2", "--flavor", "2tors", "--empirical"]));
    assert_eq!(formula, census);

    let out = qrwe(&["classnum", "--disc", "-23"]);
    assert_eq!(stdout(&out), "{\"disc\":-23,\"h\":3,\"h_w\":\"3\"}\n");
    assert_eq!(stdout(&qrwe(&["hurwitz", "--disc", "-3"])), "1/3\n");
}

#[test]
fn enumerator_commands_agree() {
    let closed = qrwe(&["c14", "--q", "7"]);
    let brute = qrwe(&["brute", "--q", "7", "--h", "4"]);
    assert!(closed.status.success() && brute.status.success());
    assert_eq!(stdout(&closed), stdout(&brute));
    let v: serde_json::Value = serde_json::from_str(&stdout(&closed)).unwrap();
    assert_eq!((v["n"].as_u64(), v["q"].as_u64()), (Some(8), Some(7)));

    let csv = stdout(&qrwe(&["--format", "csv", "c14", "--q", "5"]));
    assert!(csv.starts_with("i,j,k,A\n6,0,0,1\n"));

    let dual = qrwe(&["dual", "--q", "7", "--max-codim", "8"]);
    assert_eq!(stdout(&dual), stdout(&qrwe(&["brute", "--q", "7", "--h", "2"])));

    let checks = qrwe(&["dual", "--q", "11", "--max-codim", "7", "--checks"]);
    assert!(checks.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&checks)).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 36);
    assert!(rows.iter().all(|r| r["match"] == true));
}

#[test]
fn verify_suite_passes() {
    let out = qrwe(&["verify", "--suite", "c14", "--qmax", "9"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("PASS"));
    assert!(!stdout(&out).contains("FAIL"));
}

#[test]
fn exit_codes() {
    // Usage errors.
    assert_eq!(qrwe(&["trace", "--level", "3", "--weight", "4", "--q", "3"]).status.code(), Some(2));
    assert_eq!(qrwe(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(qrwe(&["c14"]).status.code(), Some(2));
    // Domain errors are reported like usage errors.
    let out = qrwe(&["c14", "--q", "6"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("odd prime power"));
    // Computational refusals.
    let out = qrwe(&["brute", "--q", "7", "--h", "4", "--budget", "100"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("16807"));
    assert_eq!(qrwe(&["--help"]).status.code(), Some(0));
}
