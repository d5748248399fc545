use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use hyperchoose::generators::{gen_complete, gen_fano};
use hyperchoose::{is_proper, Coloring, Hypergraph};
use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_hyperchoose"));
    c.env_remove("HYPERCHOOSE_SEED");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

struct Scratch(PathBuf);

impl Scratch {
    fn new(name: &str) -> Self {
        let dir =
            std::env::temp_dir().join(format!("hyperchoose-cli-{name}-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        Scratch(dir)
    }

    fn file(&self, name: &str, contents: &str) -> String {
        let p = self.0.join(name);
        fs::write(&p, contents).unwrap();
        p.to_str().unwrap().to_owned()
    }

    fn path(&self, name: &str) -> PathBuf {
        self.0.join(name)
    }
}

impl Drop for Scratch {
    fn drop(&mut self) {
        let _ = fs::remove_dir_all(&self.0);
    }
}

fn k33_file(dir: &Scratch) -> String {
    dir.file("k33.hgr", &gen_complete(2, 3, 3).unwrap().0.to_hgr())
}

const BAD_LISTS: &str = r#"{"n":6,"lists":[[1,2],[1,3],[2,3],[1,2],[1,3],[2,3]]}"#;

#[test]
fn analyze_k33_exact() {
    let dir = Scratch::new("analyze");
    let out = run(&["--no-timing", "analyze", "--exact", &k33_file(&dir)]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["bounds"]["sparse"], 3);
    assert_eq!(v["bounds"]["degree"], 3);
    assert_eq!(v["bounds"]["gk"], 4);
    assert_eq!(v["ch"], 3);
    assert_eq!(
        (v["l_num"].as_u64(), v["l_den"].as_u64()),
        (Some(3), Some(2))
    );
    assert_eq!(v["two_colorable"], true);
}

#[test]
fn analyze_fano_without_exact_has_no_exact_fields() {
    let dir = Scratch::new("fano");
    let path = dir.file("fano.hgr", &gen_fano().to_hgr());
    let v = json(&run(&["--no-timing", "analyze", &path]));
    assert_eq!(v["two_colorable"], false);
    assert_eq!(v["bounds"]["gk"], 3);
    assert!(v["bounds"].get("sparse").is_none());
    assert!(v.get("ch").is_none() && v.get("chi").is_none());
    let v = json(&run(&["--no-timing", "exact", &path, "--what", "chi"]));
    assert_eq!(v["value"], 3);
}

#[test]
fn malformed_and_missing_input_exit_two() {
    let dir = Scratch::new("malformed");
    let bad = dir.file("bad.hgr", "p hg 3 1\ne 0 9\n");
    assert_eq!(run(&["analyze", &bad]).status.code(), Some(2));
    assert_eq!(
        run(&[
            "dense",
            "split-color",
            "/no/such.hgr",
            "--lists",
            "/no/such.json"
        ])
        .status
        .code(),
        Some(2)
    );
}

#[test]
fn color_methods_and_exit_codes() {
    let dir = Scratch::new("color");
    let k33 = k33_file(&dir);
    let three = dir.file(
        "three.json",
        r#"{"n":6,"lists":[[1,2,3],[2,3,4],[1,3,4],[1,2,4],[1,2,3],[2,3,4]]}"#,
    );
    let bad = dir.file("bad.json", BAD_LISTS);
    let out_file = dir.path("coloring.json");

    let out = run(&[
        "--no-timing",
        "color",
        &k33,
        "--lists",
        &three,
        "--method",
        "sparse",
        "--out",
        out_file.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let written: Coloring = serde_json::from_str(&fs::read_to_string(&out_file).unwrap()).unwrap();
    let h = Hypergraph::parse(&fs::read_to_string(&k33).unwrap()).unwrap();
    assert!(is_proper(&h, &written));

    assert_eq!(
        run(&["color", &k33, "--lists", &bad, "--method", "exact"])
            .status
            .code(),
        Some(5)
    );
    assert_eq!(
        run(&["color", &k33, "--lists", &bad, "--method", "sparse"])
            .status
            .code(),
        Some(4)
    );

    let fano = dir.file("fano.hgr", &gen_fano().to_hgr());
    let f3 = dir.file(
        "f3.json",
        &format!(
            r#"{{"n":7,"lists":{}}}"#,
            serde_json::to_string(&vec![vec![1, 2, 3]; 7]).unwrap()
        ),
    );
    let out = run(&[
        "--no-timing",
        "color",
        &fano,
        "--lists",
        &f3,
        "--method",
        "gk",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["selection"].as_array().unwrap().len(), 7);
    assert_eq!(
        run(&["color", &fano, "--lists", &f3, "--method", "sparse"])
            .status
            .code(),
        Some(4)
    );
}

#[test]
fn choosability_orient_and_coefficient() {
    let dir = Scratch::new("choose");
    let k33 = k33_file(&dir);
    let v = json(&run(&["--no-timing", "choosability", &k33, "--f", "2"]));
    assert_eq!(v["choosable"], false);
    assert_eq!(v["witness"]["lists"].as_array().unwrap().len(), 6);
    let v = json(&run(&[
        "--no-timing",
        "choosability",
        &k33,
        "--f",
        "3,3,3,3,3,3",
    ]));
    assert_eq!(v["choosable"], true);
    assert_eq!(
        run(&["choosability", &k33, "--f", "2", "--max-colors", "6"])
            .status
            .code(),
        Some(3)
    );

    let v = json(&run(&["--no-timing", "orient", &k33]));
    assert_eq!(v["k"], 2);
    assert_eq!(v["orientation"].as_array().unwrap().len(), 9);
    assert_eq!(run(&["orient", &k33, "--k", "1"]).status.code(), Some(4));

    let v = json(&run(&["--no-timing", "coefficient", &k33]));
    assert!(v["coef"].as_str().unwrap().parse::<u64>().unwrap() >= 1);
    assert_eq!(v["choosable_bound"], 3);
}

#[test]
fn dense_commands_are_reproducible() {
    let out = run(&[
        "--no-timing",
        "dense",
        "thresholds",
        "--s",
        "16",
        "--l",
        "2",
        "--t",
        "6",
    ]);
    let v = json(&out);
    assert_eq!(
        (v["ert_upper"].as_bool(), v["corollary"].as_bool()),
        (Some(true), Some(false))
    );

    let args = [
        "--no-timing",
        "dense",
        "lower-bound",
        "--s",
        "2",
        "--l",
        "2",
        "--t",
        "6",
        "--trials",
        "10000",
        "--seed",
        "1",
    ];
    let a = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert!(json(&a)["witness_fraction"].as_f64().unwrap() > 0.0);
    assert_eq!(a.stdout, run(&args).stdout);

    let from_env = bin()
        .env("HYPERCHOOSE_SEED", "1")
        .args(&args[..args.len() - 2])
        .output()
        .unwrap();
    assert_eq!(from_env.stdout, a.stdout);

    let csv = run(&[
        "dense",
        "lower-bound",
        "--s",
        "3",
        "--l",
        "2",
        "--sweep",
        "6,8",
        "--trials",
        "100",
    ]);
    let text = String::from_utf8(csv.stdout).unwrap();
    assert!(text.starts_with("s,l,t,trials,witness_fraction,seed\n"));
    assert_eq!(text.lines().count(), 3);

    assert_eq!(
        run(&[
            "dense",
            "lower-bound",
            "--s",
            "2",
            "--l",
            "2",
            "--t",
            "30",
            "--trials",
            "1"
        ])
        .status
        .code(),
        Some(3)
    );
}

#[test]
fn split_color_report() {
    let dir = Scratch::new("split");
    let k33 = k33_file(&dir);
    let lists = dir.file(
        "eight.json",
        &format!(
            r#"{{"n":6,"lists":{}}}"#,
            serde_json::to_string(&vec![(1..=8).collect::<Vec<u32>>(); 6]).unwrap()
        ),
    );
    let v = json(&run(&[
        "--no-timing",
        "dense",
        "split-color",
        &k33,
        "--lists",
        &lists,
        "--seed",
        "3",
    ]));
    let c: Coloring = serde_json::from_value(v["coloring"].clone()).unwrap();
    assert!(is_proper(&gen_complete(2, 3, 3).unwrap().0, &c));
    let v = json(&run(&[
        "--no-timing",
        "dense",
        "split-color",
        &k33,
        "--lists",
        &lists,
        "--trials",
        "500",
    ]));
    let total: u64 = ["monochromatic", "dangerous", "colored", "uncolorable"]
        .iter()
        .map(|k| v[k].as_u64().unwrap())
        .sum();
    assert_eq!(total, 500);
}

#[test]
fn generators_write_hgr() {
    let out = run(&["generate", "complete", "--s", "3", "--n", "2", "--m", "2"]);
    let h = Hypergraph::parse(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    assert_eq!(h.edge_count(), 4);
    let out = run(&["generate", "regular", "--k", "4", "--n", "8", "--seed", "2"]);
    let h = Hypergraph::parse(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    assert_eq!(h.degrees(), vec![4; 8]);
    assert_eq!(
        run(&["generate", "regular", "--k", "4", "--n", "3"])
            .status
            .code(),
        Some(2)
    );
}
