use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn run(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_token-cover"))
        .args(args)
        .arg("--out")
        .arg(dir)
        .env_remove("TOKEN_COVER_OUT")
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn json(path: &Path) -> Value {
    serde_json::from_slice(&fs::read(path).unwrap()).unwrap()
}

fn evidence<'a>(report: &'a Value, label: &str) -> &'a Value {
    &report["evidence"]
        .as_array()
        .unwrap()
        .iter()
        .find(|e| e["label"] == label)
        .unwrap_or_else(|| panic!("no evidence `{label}`"))["value"]
}

#[test]
fn build_token_star() {
    let dir = TempDir::new().unwrap();
    let out = run(dir.path(), &["build", "--token", "star:5", "--k", "3"]);
    assert_eq!(code(&out), 0);
    let g = json(&dir.path().join("token_star5_k3.json"));
    assert_eq!(g["vertices"], 20);
    assert!(dir.path().join("token_star5_k3.dot").exists());
}

#[test]
fn build_johnson_and_dot_only() {
    let dir = TempDir::new().unwrap();
    assert_eq!(code(&run(dir.path(), &["build", "--johnson", "4", "2"])), 0);
    assert_eq!(json(&dir.path().join("johnson_4_2.json"))["vertices"], 6);

    let out = run(
        dir.path(),
        &[
            "build",
            "--token",
            "complete:6",
            "--k",
            "2",
            "--format",
            "dot",
        ],
    );
    assert_eq!(code(&out), 0);
    let dot = fs::read_to_string(dir.path().join("token_complete6_k2.dot")).unwrap();
    assert_eq!(dot.lines().filter(|l| l.contains("[label=")).count(), 15);
    assert_eq!(dot.lines().filter(|l| l.contains(" -- ")).count(), 60);
    assert!(!dir.path().join("token_complete6_k2.json").exists());
}

#[test]
fn build_other_sources() {
    let dir = TempDir::new().unwrap();
    for (args, file, vertices) in [
        (
            vec!["build", "--line", "complete:5"],
            "line_complete5.json",
            10,
        ),
        (
            vec!["build", "--subdivision", "complete:4"],
            "subdivision_complete4.json",
            10,
        ),
        (
            vec!["build", "--family", "bipartite:2,3"],
            "family_bipartite2-3.json",
            5,
        ),
        (
            vec!["build", "--inclusion", "5", "2", "3"],
            "inclusion_5_2_3.json",
            20,
        ),
        (
            vec!["build", "--theorem1-base", "8"],
            "theorem1_base_n8.json",
            4,
        ),
        (
            vec!["build", "--theorem1-cover", "8"],
            "theorem1_cover_n8.json",
            28,
        ),
    ] {
        assert_eq!(code(&run(dir.path(), &args)), 0, "{args:?}");
        assert_eq!(json(&dir.path().join(file))["vertices"], vertices, "{file}");
    }
    let base = json(&dir.path().join("theorem1_base_n8.json"));
    assert_eq!(base["group_order"], 8);
    assert_eq!(base["omega"], serde_json::json!([1, 1, 1, 2]));
}

#[test]
fn build_usage_errors() {
    let dir = TempDir::new().unwrap();
    for args in [
        vec!["build"],
        vec!["build", "--token", "star:5"],
        vec!["build", "--token", "star:5", "--k", "9"],
        vec!["build", "--johnson", "4", "2", "--line", "complete:4"],
        vec!["build", "--family", "wheel:4"],
        vec!["build", "--theorem1-base", "7"],
        vec!["build", "--token", "complete:30", "--k", "15"],
    ] {
        assert_eq!(code(&run(dir.path(), &args)), 2, "{args:?}");
    }
}

#[test]
fn verify_theorem1_single_and_range() {
    let dir = TempDir::new().unwrap();
    let out = run(dir.path(), &["verify-theorem1", "--n", "6"]);
    assert_eq!(code(&out), 0);
    let r = json(&dir.path().join("theorem1_n6.json"));
    assert_eq!(r["schema_version"], 1);
    assert_eq!(r["status"], "pass");
    assert_eq!(*evidence(&r, "cover_vertices"), 15);
    assert_eq!(*evidence(&r, "simple_edges"), 60);
    assert!(String::from_utf8_lossy(&out.stdout).contains("theorem1 n=6: pass"));

    let out = run(dir.path(), &["verify-theorem1", "--n", "4..10"]);
    assert_eq!(code(&out), 0);
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert_eq!(stdout.lines().filter(|l| l.contains(": pass")).count(), 4);
    for n in [4, 8, 10] {
        assert_eq!(
            json(&dir.path().join(format!("theorem1_n{n}.json")))["status"],
            "pass"
        );
    }

    assert_eq!(code(&run(dir.path(), &["verify-theorem1", "--n", "7"])), 2);
    assert_eq!(
        code(&run(dir.path(), &["verify-theorem1", "--n", "3..3"])),
        2
    );
}

#[test]
fn zz_reports() {
    let dir = TempDir::new().unwrap();
    assert_eq!(
        code(&run(
            dir.path(),
            &["zz", "--family", "complete:5", "--k", "2..4"]
        )),
        0
    );
    for k in 2..=4 {
        assert_eq!(
            json(&dir.path().join(format!("zz_complete5_k{k}.json")))["status"],
            "pass"
        );
    }
    assert_eq!(
        code(&run(
            dir.path(),
            &["zz", "--family", "star:4", "--k", "2..4"]
        )),
        0
    );

    assert_eq!(
        code(&run(dir.path(), &["zz", "--family", "path:4", "--k", "2"])),
        0
    );
    let r = json(&dir.path().join("zz_path4_k2.json"));
    assert_eq!(r["status"], "pass");
    assert_eq!(*evidence(&r, "predicted_edge_transitive"), false);
    assert_eq!(*evidence(&r, "computed_edge_transitive"), false);

    assert_eq!(
        code(&run(dir.path(), &["zz", "--family", "star:4", "--k", "5"])),
        2
    );
}

#[test]
fn conjecture_runs() {
    let dir = TempDir::new().unwrap();
    assert_eq!(code(&run(dir.path(), &["conjecture", "1", "--n", "3"])), 0);
    let r = json(&dir.path().join("conjecture1_n3.json"));
    assert_eq!(r["status"], "pass");
    assert_eq!(*evidence(&r, "verified_base_sizes"), serde_json::json!([1]));

    assert_eq!(code(&run(dir.path(), &["conjecture", "2", "--n", "4"])), 2);
    assert_eq!(code(&run(dir.path(), &["conjecture", "1", "--n", "4"])), 2);
    assert_eq!(code(&run(dir.path(), &["conjecture", "3", "--n", "5"])), 2);
}

#[test]
fn budget_exhaustion_exits_3() {
    let dir = TempDir::new().unwrap();
    let out = run(
        dir.path(),
        &[
            "conjecture",
            "1",
            "--n",
            "5",
            "--budget",
            "1",
            "--group-cap",
            "10",
        ],
    );
    assert_eq!(code(&out), 3);
    let r = json(&dir.path().join("conjecture1_n5.json"));
    assert_eq!(r["status"], "budget_exhausted");
}

#[test]
fn config_file_and_flag_precedence() {
    let dir = TempDir::new().unwrap();
    let cfg = dir.path().join("caps.cfg");
    fs::write(&cfg, "max_vertices = 10\n").unwrap();
    let cfg = cfg.to_str().unwrap();
    let capped = run(
        dir.path(),
        &["build", "--token", "star:5", "--k", "3", "--config", cfg],
    );
    assert_eq!(code(&capped), 2);
    let flag_wins = run(
        dir.path(),
        &[
            "build",
            "--token",
            "star:5",
            "--k",
            "3",
            "--config",
            cfg,
            "--max-vertices",
            "20",
        ],
    );
    assert_eq!(code(&flag_wins), 0);
}

#[test]
fn out_directory_from_environment() {
    let dir = TempDir::new().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_token-cover"))
        .args(["build", "--johnson", "5", "2"])
        .env("TOKEN_COVER_OUT", dir.path())
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
    assert!(dir.path().join("johnson_5_2.json").exists());
}

#[test]
fn identical_runs_are_byte_identical() {
    let a = TempDir::new().unwrap();
    let b = TempDir::new().unwrap();
    for dir in [a.path(), b.path()] {
        assert_eq!(
            code(&run(
                dir,
                &["build", "--token", "bipartite:2,4", "--k", "3"]
            )),
            0
        );
        assert_eq!(code(&run(dir, &["verify-theorem1", "--n", "4..8"])), 0);
        assert_eq!(
            code(&run(dir, &["zz", "--family", "cycle:6", "--k", "2..3"])),
            0
        );
        assert_eq!(code(&run(dir, &["conjecture", "1", "--n", "5"])), 0);
    }
    let mut names: Vec<_> = fs::read_dir(a.path())
        .unwrap()
        .map(|e| e.unwrap().file_name())
        .collect();
    names.sort();
    assert!(names.len() >= 8);
    for name in names {
        let x = fs::read(a.path().join(&name)).unwrap();
        let y = fs::read(b.path().join(&name)).unwrap();
        assert_eq!(x, y, "{name:?} differs");
    }
}
