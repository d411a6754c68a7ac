use std::path::Path;
use std::process::{Command, Output};

use pgcodes_cli::BUDGET_VAR;

fn pgcodes(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pgcodes"))
        .args(args)
        .env_remove(BUDGET_VAR)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn construct(dir: &Path, construction: &str, q: &str, n: &str) -> std::path::PathBuf {
    let path = dir.join(format!("{construction}-{q}-{n}.scode"));
    let o = pgcodes(&["construct", "--q", q, "--n", n, "--construction", construction, "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}{}", stdout(&o), String::from_utf8_lossy(&o.stderr));
    path
}

#[test]
fn parity_guard_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("x");
    for (c, n) in [("even", "5"), ("odd", "4"), ("pg7", "5"), ("odd", "3")] {
        let o = pgcodes(&["construct", "--q", "2", "--n", n, "--construction", c, "--out", out.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(2), "{c} n={n}");
    }
    assert!(!out.exists());
}

#[test]
fn unparseable_arguments_exit_two() {
    assert_eq!(pgcodes(&[]).status.code(), Some(2));
    assert_eq!(pgcodes(&["construct", "--q", "2"]).status.code(), Some(2));
    assert_eq!(pgcodes(&["verify", "--in", "x", "--checks", "speed"]).status.code(), Some(2));
    assert_eq!(pgcodes(&["--help"]).status.code(), Some(0));
    assert_eq!(pgcodes(&["--version"]).status.code(), Some(0));
}

#[test]
fn prop32_breakdown_and_verify() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.scode");
    let o = pgcodes(&["construct", "--q", "2", "--n", "4", "--construction", "prop32", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("M = 4621\n"), "{text}");
    assert!(text.contains("census M = 4621\n"));
    assert!(text.lines().any(|l| l.trim_start().starts_with("L2") && l.contains(" 525 ") && l.ends_with("(census 525)")));
    let o = pgcodes(&["verify", "--in", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let report = stdout(&o);
    assert!(report.contains("d_measured=4\n"));
    assert!(report.contains("checks=distance,cover(t=3),cardinality\n"));
    assert!(report.contains("result=pass\n"));
}

#[test]
fn a_duplicated_block_fails_cardinality() {
    let dir = tempfile::tempdir().unwrap();
    let path = construct(dir.path(), "even", "2", "4");
    let text = std::fs::read_to_string(&path).unwrap();
    let (head, body) = text.split_once("\n# 0 ").unwrap();
    let blocks: Vec<String> = format!("# 0 {body}").trim_end().split("\n\n").map(str::to_string).collect();
    let mut out: Vec<String> = Vec::new();
    for (i, b) in blocks.iter().enumerate() {
        let rest = b.split_once(' ').unwrap().1.split_once(' ').unwrap().1;
        out.push(format!("# {} {rest}", out.len()));
        if i == 10 {
            out.push(format!("# {} {rest}", out.len()));
        }
    }
    let head = head.replace("M=4737", "M=4738");
    let dup = dir.path().join("dup.scode");
    std::fs::write(&dup, format!("{head}\n{}\n", out.join("\n\n"))).unwrap();
    let o = pgcodes(&["verify", "--in", dup.to_str().unwrap(), "--checks", "cardinality"]);
    assert_eq!(o.status.code(), Some(1), "{}{}", stdout(&o), String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("[FAIL] cardinality"));
    let o = pgcodes(&["verify", "--in", dup.to_str().unwrap(), "--checks", "distance"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("d_measured=0\n"));
}

#[test]
fn unreadable_files_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("missing");
    assert_eq!(pgcodes(&["verify", "--in", missing.to_str().unwrap()]).status.code(), Some(2));
    let junk = dir.path().join("junk");
    std::fs::write(&junk, "SCODE v1\nhello\n").unwrap();
    let o = pgcodes(&["verify", "--in", junk.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("junk"));
}

#[test]
fn budget_override() {
    let dir = tempfile::tempdir().unwrap();
    let path = construct(dir.path(), "even", "2", "4");
    let run = |v: &str| {
        Command::new(env!("CARGO_BIN_EXE_pgcodes"))
            .args(["verify", "--in", path.to_str().unwrap(), "--checks", "distance"])
            .env(BUDGET_VAR, v)
            .output()
            .unwrap()
    };
    assert_eq!(run("1000").status.code(), Some(2));
    assert_eq!(run("lots").status.code(), Some(2));
    assert_eq!(run("20000000").status.code(), Some(0));
}

#[test]
fn sampled_reports_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let path = construct(dir.path(), "pg7", "2", "4");
    let args = ["verify", "--in", path.to_str().unwrap(), "--checks", "distance", "--mode", "sampled", "--seed", "1", "--samples", "100000"];
    let strip = |o: &Output| stdout(o).lines().filter(|l| !l.starts_with("wall_time_ms=")).collect::<Vec<_>>().join("\n");
    let (a, b) = (pgcodes(&args), pgcodes(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(strip(&a), strip(&b));
    assert!(strip(&a).contains("pairs=100000"));
    assert!(strip(&a).contains("mode=sampled(seed=0x1,samples=100000)"));
}

#[test]
fn formulas_table() {
    let o = pgcodes(&["formulas", "--q", "2", "--n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for row in ["M_pg7 = 4797", "M_even = 4737", "M_prop32 = 4621"] {
        assert!(text.lines().any(|l| l == row), "missing {row}\n{text}");
    }
    assert!(text.lines().any(|l| l == "common_generators = 5"), "{text}");
    let o = pgcodes(&["formulas", "--q", "3", "--n", "4"]);
    let expect = 3u64.pow(12) + 9 * 100 * 13 + 1;
    assert!(stdout(&o).lines().any(|l| l == format!("M_pg7 = {expect}")));
    let o = pgcodes(&["formulas", "--q", "2", "--n", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().any(|l| l.starts_with("M_even = ") && !l.contains("undefined")), "{text}");
    assert!(text.lines().any(|l| l.starts_with("M_pg7 = undefined")), "{text}");
}
