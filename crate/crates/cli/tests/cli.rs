use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn tempres(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tempres"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

const PATH3: &str = "temporal-graph v1\nvertices 3\nmode finite\nedge 0 1 1\nedge 1 2 1\n";

fn field<'a>(text: &'a str, key: &str) -> &'a str {
    text.lines()
        .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix(": ")))
        .unwrap_or_else(|| panic!("no `{key}` in\n{text}"))
}

#[test]
fn solve_path_of_three() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "p.txt", PATH3);
    let out = tempres(&["solve", "--input", p(&f), "--algorithm", "path"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(field(&text, "size"), "2");
    assert_eq!(field(&text, "verdict"), "resolving");
    assert!(text.contains("  0: [1, inf]"));
}

#[test]
fn auto_on_periodic_path_needs_one_landmark() {
    let dir = TempDir::new().unwrap();
    let f = write(
        &dir,
        "pp.txt",
        "temporal-graph v1\nvertices 4\nmode periodic 3\nedge 0 1 2\nedge 1 2 3\nedge 2 3 1\n",
    );
    let out = tempres(&["solve", "--input", p(&f)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(field(&stdout(&out), "size"), "1");
}

#[test]
fn verify_exit_codes() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "p.txt", PATH3);
    let all = tempres(&["verify", "--input", p(&f), "--set", "0,1,2"]);
    assert_eq!(all.status.code(), Some(0));
    assert_eq!(field(&stdout(&all), "verdict"), "resolving");

    let middle = tempres(&["verify", "--input", p(&f), "--set", "1"]);
    assert_eq!(middle.status.code(), Some(1));
    assert_eq!(field(&stdout(&middle), "verdict"), "not-separating 0 2");

    let bad = tempres(&["verify", "--input", p(&f), "--set", "7"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn malformed_input_is_exit_two_with_line() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "bad.txt", "temporal-graph v1\nvertices 2\nmode finite\nedge 1 0 1\n");
    let out = tempres(&["solve", "--input", p(&f)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 4"));
}

#[test]
fn guard_is_exit_three_and_overridable() {
    let dir = TempDir::new().unwrap();
    let uniform = tempres(&["generate", "binary-tree-uniform", "--levels", "5"]);
    let f = write(&dir, "t.txt", &stdout(&uniform));
    let out = tempres(&["solve", "--input", p(&f), "--algorithm", "bruteforce"]);
    assert_eq!(out.status.code(), Some(3));

    // a 21-vertex path with labels 1,2 everywhere: the guard trips, the
    // override solves it
    let mut text = String::from("temporal-graph v1\nvertices 21\nmode finite\n");
    for v in 1..21 {
        text.push_str(&format!("edge {} {v} 1 2\n", v - 1));
    }
    let f = write(&dir, "long.txt", &text);
    let blocked = tempres(&["solve", "--input", p(&f)]);
    assert_eq!(blocked.status.code(), Some(3));
    let forced = tempres(&["solve", "--input", p(&f), "--unsafe-no-guard", "--jobs", "2"]);
    assert_eq!(forced.status.code(), Some(0));
    assert_eq!(field(&stdout(&forced), "verdict"), "resolving");
}

#[test]
fn json_and_human_agree() {
    let dir = TempDir::new().unwrap();
    for seed in 0..15 {
        let g = tempres(&[
            "generate", "graph", "--seed", &seed.to_string(), "--n", "6", "--edge-prob", "0.5",
            "--max-labels", "2", "--label-max", "4",
        ]);
        assert_eq!(g.status.code(), Some(0));
        let f = write(&dir, "g.txt", &stdout(&g));

        let human = tempres(&["solve", "--input", p(&f)]);
        let json = tempres(&["solve", "--input", p(&f), "--json"]);
        assert_eq!(human.status.code(), json.status.code());
        let human = stdout(&human);
        let v: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
        let set: Vec<String> = v["set"]
            .as_array()
            .unwrap()
            .iter()
            .map(|x| x.to_string())
            .collect();
        assert_eq!(field(&human, "set"), set.join(" "));
        assert_eq!(field(&human, "size"), v["size"].to_string());
        assert_eq!(field(&human, "algorithm"), v["algorithm"].as_str().unwrap());
        assert_eq!(v["certificate"]["verdict"], "resolving");

        for spec in ["0", "0,1", "2,5"] {
            let human = tempres(&["verify", "--input", p(&f), "--set", spec]);
            let json = tempres(&["verify", "--input", p(&f), "--set", spec, "--json"]);
            assert_eq!(human.status.code(), json.status.code());
            let v: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
            let expected = match v["verdict"].as_str().unwrap() {
                "resolving" => "resolving".to_string(),
                "not-reaching" => format!("not-reaching {}", v["vertex"]),
                "not-separating" => format!("not-separating {} {}", v["u"], v["v"]),
                other => panic!("unknown verdict {other}"),
            };
            assert_eq!(field(&stdout(&human), "verdict"), expected);
        }
    }
}

#[test]
fn generate_is_deterministic_and_round_trips() {
    let dir = TempDir::new().unwrap();
    let args = ["generate", "subdivided-star", "--seed", "5", "--degree", "4", "--max-branch-len", "3"];
    let a = stdout(&tempres(&args));
    assert_eq!(a, stdout(&tempres(&args)));
    let f = write(&dir, "s.txt", &a);
    let out = tempres(&["solve", "--input", p(&f)]);
    assert_eq!(field(&stdout(&out), "algorithm"), "substar12");

    let o = dir.path().join("m.txt");
    let status = tempres(&[
        "generate", "3dm", "--seed", "2", "--p-size", "2", "--triples", "3", "--ground", "6",
        "--output", p(&o),
    ]);
    assert_eq!(status.status.code(), Some(0));
    assert!(fs::read_to_string(&o).unwrap().starts_with("3dm v1\n"));
}

#[test]
fn reduce_commands() {
    let dir = TempDir::new().unwrap();
    let m = write(&dir, "m.txt", "3dm v1\nground 6 2\ntarget 1\ntriple 1 3 5\ntriple 2 4 6\n");
    let proof = stdout(&tempres(&["reduce", "3dm-substar", "--input", p(&m)]));
    assert!(proof.starts_with("# budget: 2\ntemporal-graph v1\n"));
    let statement = stdout(&tempres(&["reduce", "3dm-substar", "--input", p(&m), "--budget", "statement"]));
    assert!(statement.starts_with("# budget: 3\n"));

    let tree = tempres(&["reduce", "3dm-tree-intervals", "--input", p(&m)]);
    assert_eq!(tree.status.code(), Some(0));
    assert!(stdout(&tree).starts_with("# budget: "));

    let wrong = tempres(&["reduce", "3dm-tree", "--input", p(&m), "--budget", "statement"]);
    assert_eq!(wrong.status.code(), Some(2));

    let g = write(&dir, "p.txt", PATH3);
    let complete = stdout(&tempres(&["reduce", "adjacency-complete", "--input", p(&g)]));
    assert_eq!(
        complete,
        "temporal-graph v1\nvertices 3\nmode finite\nedge 0 1 1\nedge 0 2 2\nedge 1 2 1\n"
    );
    let mismatched = tempres(&["reduce", "3dm-substar", "--input", p(&g)]);
    assert_eq!(mismatched.status.code(), Some(2));
}
