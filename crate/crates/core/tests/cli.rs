use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_degenlab")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch(name: &str, text: &str) -> String {
    let dir = std::env::temp_dir().join(format!("degenlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.display().to_string()
}

#[test]
fn groebner_basis_of_the_twisted_cubic() {
    let o = run(&["gb", &fixture("twisted_cubic.ideal")]);
    assert_eq!(o.status.code(), Some(0));
    let mut lines: Vec<String> = stdout(&o).lines().map(str::to_string).collect();
    lines.sort();
    assert_eq!(lines, ["-x2*x3 + x1*x4", "-x2^2 + x1*x3", "-x3^2 + x2*x4"]);
}

#[test]
fn parse_errors_exit_two_with_a_position() {
    let bad = scratch("bad.ideal", "vars x1..x3\nx1*y\n");
    let o = run(&["gb", &bad]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2, column 4"));
    assert_eq!(run(&["gb", "/nonexistent/file.ideal"]).status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["--field", "F4", "gb", &fixture("twisted_cubic.ideal")]).status.code(), Some(2));
    assert_eq!(run(&["--order", "sideways", "gb", &fixture("twisted_cubic.ideal")]).status.code(), Some(2));
    assert_eq!(run(&["--order", "lex", "paper-suite"]).status.code(), Some(2));
}

#[test]
fn failing_verdict_exits_one() {
    // minimal primes (x1) and (x2, x3) have different heights
    assert_eq!(run(&["hirsch", &scratch("mixed.ideal", "vars x1..x3\nx1*x2\nx1*x3\n")]).status.code(), Some(1));
    let wrong = scratch("wrong.ideal", "vars x1..x3\norder lex\nx1*x2 - x3^2\nexpect-initial x3^2\n");
    let o = run(&["verify-degen", &wrong]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL    initial-list"));
}

#[test]
fn json_reports_are_byte_identical() {
    let args = ["--json", "verify-degen", &fixture("non_cm_prime.ideal")];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["schema"], "degenlab.report/1");
    assert_eq!(v["summary"]["fail"], 0);
}

#[test]
fn seeded_gin_is_reproducible() {
    let args = ["--seed", "7", "--json", "gin", &fixture("twisted_cubic.ideal")];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn text_verify_has_tables() {
    let o = run(&["verify-degen", &fixture("twisted_cubic.ideal")]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    for needle in ["Betti S/I", "Betti S/in(I)", "h^ij S/I", "h^ij S/in(I)", "hochster-oracle", "koszul-oracle"] {
        assert!(s.contains(needle), "missing {needle}");
    }
}

#[test]
fn koszul_oracle_and_local_cohomology_table() {
    let o = run(&["betti", "--oracle", "koszul", &fixture("twisted_cubic.ideal")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("koszul oracle on [0, 3]: PASS"));
    let o = run(&["lc-table", "--range", "-3..0", &fixture("twisted_cubic.ideal")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("depth Some(2), dim Some(2)"));
}

#[test]
fn stanley_reisner_of_a_path() {
    let o = run(&["sr", "--facets", "1 2, 2 3"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.starts_with("(x1*x3)"));
    assert!(s.contains("f = [1, 3, 2]"));
}

#[test]
fn cd_example_is_hirsch() {
    let o = run(&["--json", "hirsch", &fixture("cd_example.ideal")]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["hirsch"], true);
    assert_eq!(v["diameter"], 3);
    assert_eq!(v["edges"].as_array().unwrap().len(), 3);
}

#[test]
fn knutson_budget_zero_keeps_only_f() {
    let o = run(&["--json", "knutson", "--budget", "0", &fixture("coordinate_product.ideal")]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["members"].as_array().unwrap().len(), 1);
}
