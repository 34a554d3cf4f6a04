use std::fs;
use std::process::{Command, Output};

use zdg::fixtures::{default_pattern, load_fixtures, FixtureEntry};
use zdg::record::ClassificationRecord;
use zdg_core::{emit_graph6, Graph};

fn zdg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zdg")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn fixture(name: &str) -> FixtureEntry {
    let pattern = default_pattern().replace("*.toml", &format!("{name}.toml"));
    load_fixtures(&pattern).unwrap().pop().unwrap()
}

#[test]
fn classify_two_vertices() {
    let out = zdg(&["classify", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let recs: Vec<ClassificationRecord> = stdout(&out).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    let cats: Vec<Option<&str>> = recs.iter().map(|r| r.category.as_deref()).collect();
    assert_eq!(cats, [Some("Disconnected"), Some("ZDG")]);
    assert_eq!(recs[1].graph6, emit_graph6(&Graph::complete(2).unwrap()));
    assert!(String::from_utf8_lossy(&out.stderr).contains("total 2"));
}

#[test]
fn classify_rejects_bad_orders() {
    assert_eq!(zdg(&["classify", "--n", "0"]).status.code(), Some(2));
    assert_eq!(zdg(&["classify", "--n", "8"]).status.code(), Some(2));
    assert_eq!(zdg(&["classify"]).status.code(), Some(2));
}

#[test]
fn classify_with_atlas_index() {
    let dir = tempfile::tempdir().unwrap();
    let index = dir.path().join("atlas.txt");
    let star = emit_graph6(&Graph::star(6).unwrap());
    fs::write(&index, format!("G270 {star}\n")).unwrap();
    let out_path = dir.path().join("n7.jsonl");
    let out = zdg(&[
        "classify",
        "--n",
        "7",
        "--jobs",
        "2",
        "--out",
        out_path.to_str().unwrap(),
        "--atlas-index",
        index.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let tagged: Vec<String> = fs::read_to_string(&out_path)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str::<ClassificationRecord>(l).unwrap())
        .filter_map(|r| r.atlas_id.map(|id| format!("{id} {}", r.category.unwrap())))
        .collect();
    assert_eq!(tagged, ["G270 ZDG"]);

    fs::write(&index, "G270\n").unwrap();
    let out = zdg(&["classify", "--n", "3", "--atlas-index", index.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 1"));
}

#[test]
fn tiny_budget_is_inconclusive() {
    let out = zdg(&["classify", "--n", "6", "--no-patterns", "--budget", "0"]);
    let stderr = String::from_utf8_lossy(&out.stderr).into_owned();
    let inconclusive: usize = stderr.rsplit("inconclusive ").next().unwrap().trim().parse().unwrap();
    assert!(inconclusive > 0, "{stderr}");
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(zdg(&["classify", "--n", "3", "--budget", "lots"]).status.code(), Some(2));
}

#[test]
fn check_star_on_six_cycle() {
    let out = zdg(&["check-star", "--graph", &emit_graph6(&Graph::cycle(6).unwrap())]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("star_ok=false"), "{text}");
    assert!(text.contains("failing pair: 1 4"), "{text}");
    let out = zdg(&["check-star", "--graph", &emit_graph6(&Graph::star(4).unwrap())]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_g319_table() {
    let f = fixture("G319");
    let g6 = emit_graph6(&f.graph);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g319.txt");
    let rows = [
        "1 0 0 4 4 4 4",
        "0 2 2 0 2 2 2",
        "0 2 2 0 2 2 2",
        "4 0 0 0 0 0 0",
        "4 2 2 0 2 2 2",
        "4 2 2 0 2 2 2",
        "4 2 2 0 2 2 2",
    ];
    fs::write(&path, rows.join("\n")).unwrap();
    let out = zdg(&["verify", "--graph", &g6, "--table", path.to_str().unwrap()]);
    assert_eq!(stdout(&out).trim(), "OK");
    assert_eq!(out.status.code(), Some(0));

    // 5·5 = 5 gives (5·5)·1 = 4 but 5·(5·1) = 5·4 = 0.
    let mut bad = rows.map(String::from);
    bad[4] = "4 2 2 0 5 2 2".into();
    fs::write(&path, bad.join("\n")).unwrap();
    let out = zdg(&["verify", "--graph", &g6, "--table", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).starts_with("FAIL: not associative"), "{}", stdout(&out));

    fs::write(&path, "1 0\n0 1\n").unwrap();
    let out = zdg(&["verify", "--graph", &g6, "--table", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn realize_g600_is_unsat() {
    let g6 = emit_graph6(&fixture("G600").graph);
    let out = zdg(&["realize", "--graph", &g6]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).starts_with("UNSAT (exhaustive,"), "{}", stdout(&out));
    assert!(stdout(&out).contains("nodes)"));

    let out = zdg(&["realize", "--graph", &emit_graph6(&Graph::path(4).unwrap())]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("SAT\n"));
    assert_eq!(zdg(&["realize", "--graph", "!!"]).status.code(), Some(2));
}

#[test]
fn fixtures_subset() {
    let pattern = default_pattern().replace("*.toml", "G3*.toml");
    let out = zdg(&["fixtures", "--fixtures", &pattern]);
    let text = stdout(&out);
    assert_eq!(out.status.code(), Some(0), "{text}");
    assert!(text.lines().any(|l| l.starts_with("ok   G319 ") && l.contains("table verifies")), "{text}");
    let out = zdg(&["fixtures", "--fixtures", &pattern, "--no-patterns"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out)
        .lines()
        .filter(|l| l.starts_with("ok"))
        .all(|l| l.contains("via search") || l.contains("via condition")));
    let out = zdg(&["fixtures", "--fixtures", "/nonexistent/*.toml"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verdict_mismatch_exits_nonzero() {
    let dir = tempfile::tempdir().unwrap();
    let text = "name = \"P4\"\nexpected = \"StarNotZDG\"\nlabels = [\"a\", \"b\", \"c\", \"d\"]\n\
                adjacency = [\"a: b\", \"b: a c\", \"c: b d\", \"d: c\"]\n";
    fs::write(dir.path().join("p4.toml"), text).unwrap();
    let out = zdg(&["fixtures", "--fixtures", dir.path().join("*.toml").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).starts_with("FAIL P4"), "{}", stdout(&out));
}
