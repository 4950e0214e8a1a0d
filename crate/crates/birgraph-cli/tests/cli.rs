use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_birgraph")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden(name: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(p).unwrap()
}

fn check_golden(name: &str, args: &[&str]) {
    let o = run(args);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o), golden(name), "{args:?}");
}

fn temp(name: &str) -> String {
    let dir = std::env::temp_dir().join(format!("birgraph-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name).to_string_lossy().into_owned()
}

#[test]
fn golden_outputs() {
    check_golden("tables.txt", &["tables"]);
    check_golden("tables_small.txt", &["tables", "--range", "k=0..1,n=2..3", "--samples", "5", "--seed", "9"]);
    check_golden("standardize_circle.txt", &["standardize", "C(-3,-1,-2,-2,-1)", "--canonical"]);
    check_golden("standardize_chain.txt", &["standardize", "L[3]", "--canonical"]);
    check_golden("invariants_matrix.txt", &["invariants", "L[0,0,0]", "--matrix"]);
    check_golden("equiv_circle.txt", &["equiv", "C(0,0,-3,-5,-2)", "C(0,0,-5,-2,-3)"]);
    check_golden("randwalk.txt", &["randwalk", "L[0,-2]", "--seed", "42", "--steps", "6", "--mixed"]);
}

#[test]
fn table_cells_by_hand() {
    let out = golden("tables.txt");
    let cells = [
        ("((0_4l))", "l=2", "3,3,2"),
        ("((0_4l+1))", "l=1", "3,2,0"),
        ("((0_4l+2))", "l=0", "1,1,0"),
        ("((0_4l+3))", "l=1", "3,4,0"),
        ("((0_2k,w))", "k=3", "3,4,0"),
        ("((0_4l,-1))", "l=2", "5,4,0"),
        ("((0_4l+1,w))", "l=1", "3,3,0"),
        ("((0_4l+3,w))", "l=0", "1,2,1"),
        ("((0_4l,-1,-1))", "l=1", "3,3,0"),
        ("((0_4l+2,-1,-1))", "l=0", "1,3,0"),
        ("((0_2k,w1..wn))", "k=1 n=3", "1,4,0"),
        ("((0_4l,(-2)_n))", "l=1 n=2", "2,3,1"),
        ("[[0_m]]", "m=7", "3,3,1"),
        ("[[0_2k,w1..wn]]", "k=2 n=3", "2,5,0"),
    ];
    for (row, param, inertia) in cells {
        let line = out
            .lines()
            .find(|l| l.starts_with(&format!("{row} ")) && l.contains(&format!(" {param} ")))
            .unwrap_or_else(|| panic!("no line for {row} {param}"));
        assert!(line.contains(&format!("inertia={inertia} ")), "{line}");
        assert!(line.ends_with(" ok"), "{line}");
    }
    assert!(out.lines().all(|l| l.ends_with(" ok")));
}

#[test]
fn invariants_line() {
    let o = run(&["invariants", "L[0,0,0]"]);
    assert_eq!(stdout(&o), "delta=0 inertia=1,1,1 betti=0 contractible=false\n");
    let o = run(&["invariants", "L[-2,-1,-3]"]);
    assert_eq!(stdout(&o), "delta=1 inertia=0,3,0 betti=0 contractible=true\n");
}

#[test]
fn parse_round_trip() {
    for g in ["L[0,0,-2]", "C(0,0,-3,-5,-2)", "L[5]", "C(-1)"] {
        let o = run(&["parse", g]);
        let once = stdout(&o);
        let twice = stdout(&run(&["parse", once.trim()]));
        assert_eq!(once, twice);
    }
    let branched = "V 0 -1\nV 1 -2\nV 2 -2\nV 3 -2\nE 0 1\nE 0 2\nE 0 3";
    let path = temp("star.graph");
    std::fs::write(&path, branched).unwrap();
    let o = run(&["parse", &format!("@{path}")]);
    assert_eq!(stdout(&o).trim(), branched);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["equiv", "C(0,0,-3,-5,-2)", "C(0,0,-5,-2,-3)"]).status.code(), Some(0));
    let o = run(&["equiv", "L[0,0,0]", "L[0,0,0,0,0]"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("not equivalent"));
    assert_eq!(run(&["parse", "L[0,x]"]).status.code(), Some(2));
    assert_eq!(run(&["invariants", "V 0 1\nE 0 7"]).status.code(), Some(2));
    assert_eq!(run(&["tables", "--range", "q=1..2"]).status.code(), Some(2));

    let trace = temp("bad.trace");
    std::fs::write(&trace, "source x\ntarget y\nsteps 0\n").unwrap();
    assert_eq!(run(&["replay", "L[0]", &trace]).status.code(), Some(3));
    assert_eq!(run(&["replay", "L[0]", &temp("missing.trace")]).status.code(), Some(12));
}

#[test]
fn trace_files_replay() {
    let path = temp("c.trace");
    let o = run(&["standardize", "C(-3,-1,-2,-2,-1)", "--trace", &path]);
    assert!(o.status.success());
    let o = run(&["replay", "C(-3,-1,-2,-2,-1)", &path]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().next(), Some("C(0,0)"));

    let path = temp("e.trace");
    assert!(run(&["equiv", "L[0,0,-2,-3]", "L[0,0,-3,-2]", "--trace", &path]).status.success());
    let o = run(&["replay", "L[0,0,-2,-3]", &path]);
    let first = stdout(&o);
    let first = first.lines().next().unwrap();
    assert!(first == "L[0,0,-3,-2]" || first == "L[-2,-3,0,0]", "{first}");

    let walk = run(&["randwalk", "C(0,0)", "--seed", "5", "--steps", "8"]);
    let path = temp("w.trace");
    std::fs::write(&path, &walk.stdout).unwrap();
    let o = run(&["replay", "C(0,0)", &path]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let out = stdout(&o);
    let graph: Vec<&str> = out.lines().filter(|l| !l.starts_with("trace:")).collect();
    let end = temp("w.graph");
    std::fs::write(&end, graph.join("\n")).unwrap();
    let back = run(&["standardize", &format!("@{end}")]);
    assert_eq!(stdout(&back).lines().next(), Some("C(0,0)"));
}
