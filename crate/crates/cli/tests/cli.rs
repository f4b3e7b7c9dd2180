use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn theory_file(name: &str, contents: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli-tests");
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    fs::write(&path, contents).unwrap();
    path
}

fn mbnf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mbnf")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn married() -> String {
    theory_file("married.mbnf", "# two kinds of model\nnot married | B married\n").display().to_string()
}

#[test]
fn entailed_belief() {
    let path = theory_file("ex22.mbnf", "B p\n");
    let out = mbnf(&["--theory", path.to_str().unwrap(), "--query", "B p"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "verdict=ENTAILED engine=flat\n");
    let out = mbnf(&["--theory", path.to_str().unwrap(), "--query", "B q"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn not_entailed_with_witness() {
    let out = mbnf(&["--theory", &married(), "--query", "B married", "--witness"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(
        stdout(&out),
        "verdict=NOT-ENTAILED engine=flat\n\
         partition:\n  P not(married)\n  N B(married)\n\
         ob: true\n\
         initial-world: {}\n"
    );
}

#[test]
fn lists_model_families() {
    let out = mbnf(&["--engine", "oracle", "--models", "--theory", &married()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "models=2 engine=oracle\n\
         model 1: worlds=[{married}] initial-worlds=[{}, {married}]\n\
         model 2: worlds=[{}, {married}] initial-worlds=[{}, {married}]\n"
    );
    let out = mbnf(&["--models", "--theory", &married(), "--query", "B married"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).starts_with("verdict=NOT-ENTAILED engine=oracle\nmodels=2\n"));
}

#[test]
fn engines_agree() {
    let theories = [
        (
            "gate.mbnf",
            "not married -> B hasNoChildren",
            vec!["B hasNoChildren", "B married", "hasNoChildren"],
        ),
        (
            "birds.mbnf",
            "B bird & not ~flies -> B flies\nB bird\n",
            vec!["B flies", "B ~flies", "flies | bird"],
        ),
        (
            "married.mbnf",
            "not married | B married",
            vec!["B married", "~B married", "B married | ~B married"],
        ),
        ("nested.mbnf", "B(a | B b)\nnot a | B ~not b\n", vec!["B b", "B(a | b)", "~B b"]),
    ];
    for (name, text, queries) in theories {
        let path = theory_file(name, text);
        let path = path.to_str().unwrap();
        let flat = text.lines().all(|l| mbnf_core::parse(l).map_or(true, |f| f.is_flat()));
        for q in queries {
            let mut engines = vec!["auto", "general", "oracle"];
            if flat {
                engines.push("flat");
            }
            let codes: Vec<_> = engines
                .iter()
                .map(|e| mbnf(&["--theory", path, "--query", q, "--engine", e]).status.code())
                .collect();
            assert!(
                codes.iter().all(|c| *c == codes[0] && c.is_some_and(|c| c < 2)),
                "{name} {q}: {codes:?}"
            );
        }
    }
}

#[test]
fn errors_exit_with_two() {
    let bad = theory_file("bad.mbnf", "B p\nB (p &\n");
    let out = mbnf(&["--theory", bad.to_str().unwrap(), "--query", "B p"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains(":2:"));

    let nested = theory_file("deep.mbnf", "B B p\n");
    let out = mbnf(&["--theory", nested.to_str().unwrap(), "--query", "B p", "--engine", "flat"]);
    assert_eq!(out.status.code(), Some(2));

    let wide = theory_file("wide.mbnf", "B(a & b & c & d)\n");
    let out = mbnf(&["--theory", wide.to_str().unwrap(), "--query", "B a", "--engine", "oracle"]);
    assert_eq!(out.status.code(), Some(2));
    let out = mbnf(&[
        "--theory",
        wide.to_str().unwrap(),
        "--query",
        "B a",
        "--engine",
        "oracle",
        "--oracle-cap",
        "4",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));

    let out = mbnf(&["--theory", &married(), "--query", "B married", "--oracle-cap", "5"]);
    assert_eq!(out.status.code(), Some(2));
    let out = mbnf(&["--theory", &married(), "--query", "B ("]);
    assert_eq!(out.status.code(), Some(2));
    let out = mbnf(&["--theory", "/nonexistent/theory.mbnf", "--query", "B p"]);
    assert_eq!(out.status.code(), Some(2));
    let out = mbnf(&["--theory", &married()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn empty_theory_is_true() {
    let path = theory_file("empty.mbnf", "# nothing\n\n");
    let out = mbnf(&["--theory", path.to_str().unwrap(), "--query", "B true"]);
    assert_eq!(out.status.code(), Some(0));
    let out = mbnf(&["--theory", path.to_str().unwrap(), "--query", "B p"]);
    assert_eq!(out.status.code(), Some(1));
}
