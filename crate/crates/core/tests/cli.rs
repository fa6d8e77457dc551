use std::process::{Command, Output};

fn kj(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kj")).args(args).output().expect("kj runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).trim().to_string()
}

#[test]
fn example_count() {
    let o = kj(&["kostant", "--type", "A", "--rank", "3", "--weight-alpha", "1,2,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "5");
}

#[test]
fn unreachable_weight_prints_zero() {
    let o = kj(&["kostant", "--type", "A", "--rank", "1", "--weight-alpha", "-1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0");
}

#[test]
fn single_ball_sequences() {
    let o = kj(&["js", "count", "--initial", "1", "--terminal", "1", "--length", "3"]);
    assert_eq!(stdout(&o), "4");
}

#[test]
fn restricted_heights() {
    let o = kj(&["js", "count", "--initial", "1,1,0,-1", "--terminal", "1", "--length", "4", "--throws", "heights=1,3"]);
    assert_eq!(stdout(&o), "4");
}

#[test]
fn domain_error_exit_one() {
    let o = kj(&["kostant", "--type", "B", "--rank", "1", "--weight-eps", "1"]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8_lossy(&o.stderr);
    assert_eq!(err.trim().lines().count(), 1, "{err}");
}

#[test]
fn malformed_vector_names_token() {
    let o = kj(&["js", "count", "--initial", "1,q", "--terminal", "1", "--length", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("`q`"));
}

#[test]
fn usage_error_exit_two() {
    assert_eq!(kj(&["kostant", "--type", "A"]).status.code(), Some(2));
    assert_eq!(kj(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn json_is_canonical() {
    let o = kj(&["--json", "kostant", "--type", "A", "--rank", "3", "--weight-alpha", "1,2,1", "--enumerate"]);
    let text = stdout(&o);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["count"], "5");
    assert_eq!(v["partitions"].as_array().unwrap().len(), 5);
    assert_eq!(serde_json::to_string(&v).unwrap(), text);
}

#[test]
fn json_counts_are_strings() {
    for args in [
        vec!["--json", "gf", "--row", "2|2", "--upto", "30"],
        vec!["--json", "catalan", "--r", "7"],
        vec!["--json", "lidskii", "--weight-eps", "1,1,1,-3"],
        vec!["--json", "closedform", "--which", "c45", "--r", "40"],
    ] {
        let o = kj(&args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        let text = stdout(&o);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert!(!text.contains('.'), "{text}");
        assert_eq!(serde_json::to_string(&v).unwrap(), text);
    }
}

#[test]
fn tesler_order_charpoly() {
    let o = kj(&["poset", "charpoly", "--initial", "1,1,1", "--terminal", "3", "--length", "3"]);
    assert_eq!(stdout(&o), "q^3 - 3q^2 + 3q - 1");
    let o = kj(&["poset", "charpoly", "--initial", "1", "--terminal", "1", "--length", "3", "--dot"]);
    assert!(stdout(&o).starts_with("digraph"));
}

#[test]
fn bcd_methods_agree() {
    let o = kj(&["--json", "bcd", "count", "--type", "C", "--rank", "3", "--highest-root"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    for k in ["oracle", "juggling", "conveyor", "schmidt-bincer"] {
        assert_eq!(v[k], "10", "{k}");
    }
    assert_eq!(v["agree"], true);
}

#[test]
fn root_and_partition_files() {
    let dir = std::env::temp_dir().join(format!("kj-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let roots = dir.join("roots.txt");
    std::fs::write(&roots, "# length at most two\n1-2\n2-3\n3-4\n4-5\n1-3\n2-4\n3-5\n").unwrap();
    let o = kj(&["permdet", "--rank", "4", "--roots", roots.to_str().unwrap(), "--quiet"]);
    assert_eq!(stdout(&o), "5");
    let part = dir.join("p.txt");
    std::fs::write(&part, "{1-2, 2-3^2, 3-4}\n").unwrap();
    let o = kj(&["bijection", "to-juggling", "--partition", part.to_str().unwrap(), "--initial", "1,1,-1", "--length", "3"]);
    assert_eq!(stdout(&o), "<1,1,-1>\n<2,-1>\n<1>\n<1>");
    let o = kj(&["permdet", "--rank", "3", "--roots", dir.join("missing").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn selftest_single_criterion() {
    let o = kj(&["selftest", "--only", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("1/1 criteria pass"));
}
