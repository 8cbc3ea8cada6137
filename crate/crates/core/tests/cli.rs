use std::process::Command;

fn run(args: &[&str]) -> (i32, String) {
    let o = Command::new(env!("CARGO_BIN_EXE_k3pencil")).args(args).output().unwrap();
    (o.status.code().unwrap_or(-1), String::from_utf8(o.stdout).unwrap())
}

#[test]
fn flagged_series_exits_zero() {
    let (code, out) = run(&["series", "--op", "domb", "--n", "20"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema"], "k3pencil/1");
    assert_eq!(v["checks"][0]["status"], "flagged");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["identities", "--only", "no_such_identity"]).0, 2);
    assert_eq!(run(&["series", "--op", "nope"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
}

#[test]
fn out_writes_the_report_to_a_file() {
    let path = std::env::temp_dir().join(format!("k3pencil-cli-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    let (code, _) = run(&["--out", p, "lattice", "--spec", "U+<12>"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(v["checks"][0]["details"]["rank"], 3);
}
