use std::io::Write;
use std::process::{Command, Output, Stdio};

fn monocover(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_monocover"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn monocover");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn gen(args: &[&str]) -> String {
    let mut full = vec!["gen"];
    full.extend_from_slice(args);
    let out = monocover(&full, "");
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    stdout(&out)
}

fn temp_file(name: &str, contents: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("monocover-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn near_split_pipeline_verifies() {
    let graph = gen(&["--family", "antihole", "--k", "3"]);
    let bundle = monocover(&["cover", "--method", "near-split"], &graph);
    assert_eq!(bundle.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&bundle.stderr).contains("components: 2"));
    let verdict = monocover(&["verify"], &stdout(&bundle));
    assert_eq!(verdict.status.code(), Some(0));
    assert!(stdout(&verdict).starts_with("accept"));
}

#[test]
fn oracle_min_cover_of_p42() {
    let graph = gen(&["--family", "p42", "--copies", "1"]);
    let out = monocover(&["oracle", "--min-cover", "2"], &graph);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "2");
}

#[test]
fn oracle_bounds_on_c7_star() {
    let graph = gen(&["--family", "antihole"]);
    let none = monocover(&["oracle", "--bounds", "2,2"], &graph);
    assert_eq!(none.status.code(), Some(1));
    let some = monocover(&["oracle", "--bounds", "3,3"], &graph);
    assert_eq!(some.status.code(), Some(0));
    assert!(stdout(&some).starts_with("2\n"));
}

#[test]
fn verify_names_uncovered_vertex() {
    let graph = temp_file("k4.txt", "4 2\n0 1 1\n0 2 1\n0 3 1\n1 2 1\n1 3 1\n2 3 1\n");
    let cert = temp_file("short.txt", "1\n1 1: 0 1 2\n");
    let out = monocover(&["verify", graph.to_str().unwrap(), "--cert", cert.to_str().unwrap()], "");
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("{3}"), "{}", stdout(&out));
}

#[test]
fn cover_out_file_round_trips() {
    let graph = gen(&["--family", "random-alpha2", "--n", "12", "--seed", "9"]);
    let path = temp_file("graph.txt", &graph);
    let cert = path.with_extension("cert");
    let out = monocover(
        &["cover", "--method", "general", path.to_str().unwrap(), "--out", cert.to_str().unwrap()],
        "",
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("components: "));
    let check = monocover(&["verify", path.to_str().unwrap(), "--cert", cert.to_str().unwrap()], "");
    assert_eq!(check.status.code(), Some(0));
}

#[test]
fn gen_is_seeded_and_prints_seed() {
    let a = gen(&["--family", "random-alpha2", "--n", "9", "--seed", "3"]);
    let b = gen(&["--family", "random-alpha2", "--n", "9", "--seed", "3"]);
    assert_eq!(a, b);
    assert!(a.contains("# seed 3"));
    assert!(gen(&["--family", "random", "--n", "6"]).contains("# seed 0"));
}

#[test]
fn classify_reports_case() {
    let graph = gen(&["--family", "p42"]);
    let out = monocover(&["classify"], &graph);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("case: II"));
}

#[test]
fn search_reports_and_exit_codes() {
    let host = temp_file("c5.txt", &gen(&["--family", "antihole", "--k", "2"]));
    let host = host.to_str().unwrap();
    let ok = monocover(
        &["search", "--host", host, "--predicate", "has-bounds-cover:4,4", "--jobs", "2"],
        "",
    );
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).contains("failed=0"));
    let partial = monocover(
        &["search", "--host", host, "--predicate", "min-cover-value:2", "--budget", "5"],
        "",
    );
    assert_eq!(partial.status.code(), Some(3));
    assert!(stdout(&partial).contains("partial=true"));
    let fail = monocover(
        &["search", "--host", host, "--predicate", "min-cover-at-most:1,1"],
        "",
    );
    assert_eq!(fail.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(monocover(&["cover", "--method", "alpha2"], "3 2\n0 1 5\n").status.code(), Some(2));
    assert_eq!(monocover(&["frobnicate"], "").status.code(), Some(2));
    assert_eq!(monocover(&["gen", "--family", "p42", "--copies", "0"], "").status.code(), Some(2));
    let big = gen(&["--family", "p42", "--copies", "5"]);
    assert_eq!(monocover(&["oracle", "--min-cover", "2"], &big).status.code(), Some(3));
}
