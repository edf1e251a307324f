use std::io::Write;
use std::process::{Command, Stdio};

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn boltool(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_boltool"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    Output {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn export(id: &str, params: &[&str]) -> String {
    let mut args = vec!["catalog", "export", id];
    for p in params {
        args.extend(["--param", p]);
    }
    let out = boltool(&args, "");
    assert_eq!(out.code, 0, "{}", out.stderr);
    out.stdout
}

#[test]
fn list_shows_every_entry() {
    let out = boltool(&["catalog", "list"], "");
    assert_eq!(out.code, 0);
    for id in bolalg::catalog::ids() {
        assert!(out.stdout.contains(id), "{id}");
    }
    assert!(out.stdout.contains("fails B2 under zero-fill (also B3, B4)"));
}

#[test]
fn show_type_iv_lists_notes_and_constraint() {
    let out = boltool(&["catalog", "show", "type-iv", "--param", "x=2", "--param", "p=-1/2"], "");
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("p = -1/2, x = 2"));
    assert!(out.stdout.contains("not homogeneous"));
    assert!(out.stdout.contains("Levi-Malcev theorem can not be applied"));
    assert!(out.stdout.contains("dimensionally inconsistent"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(boltool(&["catalog", "show", "nope"], "").code, 2);
    assert_eq!(boltool(&["catalog", "show", "zero-n", "--param", "n=0"], "").code, 2);
    assert_eq!(boltool(&["catalog", "export", "type-iv", "--param", "x=1"], "").code, 2);
    assert_eq!(boltool(&["frobnicate"], "").code, 2);
}

#[test]
fn parse_errors_exit_3_with_line() {
    let out = boltool(&["check", "-"], "boltext 1\ndim 2\nbin 1 3 -> 1:1\n");
    assert_eq!(out.code, 3);
    assert!(out.stderr.contains("line 3"), "{}", out.stderr);
    assert_eq!(boltool(&["check", "-"], "").code, 3);
    let missing = boltool(&["check", "/nonexistent/file.bol"], "");
    assert_eq!(missing.code, 3);
    assert!(missing.stderr.contains("cannot read"));
}

#[test]
fn check_reports_witness() {
    let out = boltool(&["check", "-"], &export("type-iv", &["x=0", "p=0"]));
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("B2  FAIL"));
    assert!(out.stdout.contains("(1, 2, 3)"));
    assert_eq!(boltool(&["check", "-"], &export("sl2-plus-type-i", &[])).code, 0);
}

#[test]
fn report_refuses_failing_algebra_unless_forced() {
    let iv = export("type-iv", &["x=1", "p=1"]);
    let plain = boltool(&["report", "-"], &iv);
    assert_eq!(plain.code, 1);
    let forced = boltool(&["report", "-", "--force", "--series"], &iv);
    assert!(forced.stdout.contains("Weak derived series"), "{}", forced.stdout);
}

#[test]
fn report_sections_follow_flags() {
    let ti = export("type-i", &[]);
    let out = boltool(&["report", "-", "--radical"], &ti);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("Weak radical"));
    assert!(!out.stdout.contains("Splitting"));
    let all = boltool(&["report", "-"], &ti);
    for section in ["Axioms", "Products", "Weak derived series", "Ideals", "Weak radical", "Splitting"] {
        assert!(all.stdout.contains(section), "{section}");
    }
}

#[test]
fn direct_sum_report_splits() {
    let out = boltool(&["report", "-", "--levi"], &export("sl2-plus-type-i", &[]));
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("6 = 3 + 3"), "{}", out.stdout);
}

#[test]
fn json_report_parses() {
    let out = boltool(&["report", "-", "--json", "--paper-compare"], &export("type-i", &[]));
    assert_eq!(out.code, 0);
    let doc: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(doc["dim"], 3);
    assert!(doc["paper_claims"].is_object());
}

#[test]
fn torsion_round_trip_through_files() {
    let dir = std::env::temp_dir().join(format!("boltool-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bol = dir.join("t.bol");
    let text = export("type-i", &[]);
    std::fs::write(&bol, &text).unwrap();
    let tor = boltool(&["to-torsion", bol.to_str().unwrap()], "");
    assert_eq!(tor.code, 0);
    assert!(tor.stdout.contains("dtor 1 3 3 -> 1:-1, 2:-2"), "{}", tor.stdout);
    let back = boltool(&["from-torsion", "-"], &tor.stdout);
    assert_eq!(back.code, 0);
    assert!(back.stdout.starts_with(&text), "{}", back.stdout);
    assert!(back.stderr.contains("passes B1-B4"), "{}", back.stderr);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn from_torsion_rejects_non_antisymmetric_torsion() {
    let out = boltool(&["from-torsion", "-"], "boltext 1\ndim 2\ntor 1 1 -> 1:1\n");
    assert_eq!(out.code, 3);
}
