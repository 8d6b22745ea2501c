use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_daisycube"))
}

fn run(args: &[&str]) -> Output {
    bin()
        .args(args)
        .output()
        .expect("failed to spawn daisycube")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join("cli");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn write(name: &str, text: &str) -> PathBuf {
    let p = scratch(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn generated(args: &[&str], name: &str) -> PathBuf {
    let o = run(args);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    write(name, &stdout(&o))
}

#[test]
fn generate_fibonacci() {
    let o = run(&["generate", "--family", "fibonacci", "-n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).trim(),
        r#"{"n":3,"vertices":["000","100","010","001","101"]}"#
    );
}

#[test]
fn generate_daisy_from_generator_file() {
    let gens = write("gens.json", r#"{"n":3,"generators":["110","011"]}"#);
    let o = run(&[
        "generate",
        "--family",
        "daisy",
        "--generators",
        gens.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["vertices"].as_array().unwrap().len(), 6);
}

#[test]
fn generate_qnf_to_file() {
    let out = scratch("q3-111.json");
    let o = run(&[
        "generate",
        "--family",
        "qnf",
        "-n",
        "3",
        "--pattern",
        "111",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(doc["vertices"].as_array().unwrap().len(), 7);
}

#[test]
fn generate_errors() {
    assert_eq!(
        run(&["generate", "--family", "petersen", "-n", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["generate", "--family", "hypercube", "-n", "21"])
            .status
            .code(),
        Some(2)
    );
    let capped = run(&[
        "generate",
        "--family",
        "hypercube",
        "-n",
        "4",
        "--max-vertices",
        "8",
    ]);
    assert_eq!(capped.status.code(), Some(2));
    assert!(stderr(&capped).contains("more than 8 vertices"));
    assert_eq!(
        run(&["generate", "--family", "qnf", "-n", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["generate", "--family", "daisy"]).status.code(),
        Some(2)
    );
    let bad = write("bad-gens.json", r#"{"n":3,"generators":["11"]}"#);
    assert_eq!(
        run(&[
            "generate",
            "--family",
            "daisy",
            "--generators",
            bad.to_str().unwrap()
        ])
        .status
        .code(),
        Some(2)
    );
}

#[test]
fn generated_output_round_trips_byte_for_byte() {
    for family in ["hypercube", "fibonacci", "lucas", "vertex-deleted"] {
        let text = stdout(&run(&["generate", "--family", family, "-n", "5"]));
        let g = daisycube::io::graph_from_json(&text).unwrap();
        assert_eq!(format!("{}\n", daisycube::io::graph_to_json(&g)), text);
    }
}

#[test]
fn indices_all_on_fibonacci_cube_4() {
    let path = generated(&["generate", "--family", "fibonacci", "-n", "4"], "g4.json");
    let o = run(&["indices", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["agreement"], true);
    let reports = doc["reports"].as_array().unwrap();
    let methods: Vec<&str> = reports
        .iter()
        .map(|r| r["method"].as_str().unwrap())
        .collect();
    assert_eq!(methods, ["semicube", "oracle", "corollary"]);
    for r in reports {
        assert_eq!((r["W"].as_u64(), r["Mo"].as_u64()), (Some(54), Some(28)));
        assert_eq!(r["residual"], 0);
        assert_eq!(r["relation_holds"], true);
    }
}

#[test]
fn indices_on_six_cycle() {
    let path = write(
        "c6.json",
        r#"{"n":3,"vertices":["000","001","011","111","110","100"]}"#,
    );
    let o = run(&["indices", path.to_str().unwrap(), "--method", "oracle"]);
    assert_eq!(o.status.code(), Some(0));
    let r: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((r["W"].as_u64(), r["Mo"].as_u64()), (Some(27), Some(0)));
    assert_eq!(r["relation_holds"], false);
    assert_eq!(r["residual"], 18);

    for method in ["semicube", "corollary", "all"] {
        let o = run(&["indices", path.to_str().unwrap(), "--method", method]);
        assert_eq!(o.status.code(), Some(1), "method {method}");
        assert!(stderr(&o).contains("not downward-closed"), "{}", stderr(&o));
    }
}

#[test]
fn indices_semicube_rejects_non_isometric_labeling() {
    let path = write(
        "p5.json",
        r#"{"n":3,"vertices":["010","011","001","101","100"]}"#,
    );
    let o = run(&["indices", path.to_str().unwrap(), "--method", "semicube"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(
        stderr(&o).contains("not an isometric embedding"),
        "{}",
        stderr(&o)
    );
}

#[test]
fn indices_on_single_vertex() {
    let path = write("k1.json", r#"{"n":0,"vertices":[""]}"#);
    let o = run(&["indices", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
    for r in doc["reports"].as_array().unwrap() {
        assert_eq!(
            (r["W"].as_u64(), r["Mo"].as_u64(), r["residual"].as_i64()),
            (Some(0), Some(0), Some(0))
        );
    }
}

#[test]
fn verify_exit_codes() {
    let g8 = generated(&["generate", "--family", "fibonacci", "-n", "8"], "g8.json");
    let o = run(&["verify", g8.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["passed"], true);

    let c6 = write(
        "c6-verify.json",
        r#"{"n":3,"vertices":["000","001","011","111","110","100"]}"#,
    );
    let o = run(&["verify", c6.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let reason = doc["reason"].as_str().unwrap();
    assert!(reason.starts_with("not downward-closed"), "{reason}");
    assert!(reason.ends_with("relation residual 18"), "{reason}");

    let dup = write("dup.json", r#"{"n":2,"vertices":["01","10","01"]}"#);
    assert_eq!(
        run(&["verify", dup.to_str().unwrap()]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["verify", "/nonexistent/graph.json"]).status.code(),
        Some(2)
    );

    let split = write("split.json", r#"{"n":3,"vertices":["000","011"]}"#);
    let o = run(&["verify", split.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("disconnected"));
}

#[test]
fn verify_every_generated_family() {
    for (family, extra) in [
        ("hypercube", vec![]),
        ("fibonacci", vec![]),
        ("lucas", vec![]),
        ("vertex-deleted", vec![]),
        ("qnf", vec!["--pattern", "111"]),
    ] {
        for n in 1..=7 {
            let n = n.to_string();
            let mut args = vec!["generate", "--family", family, "-n", &n];
            args.extend(&extra);
            let path = generated(&args, &format!("{family}-{n}.json"));
            let o = run(&["verify", path.to_str().unwrap()]);
            assert_eq!(o.status.code(), Some(0), "{family} n={n}: {}", stderr(&o));
        }
    }
}

#[test]
fn sweep_fibonacci_csv() {
    let o = run(&[
        "sweep",
        "--family",
        "fibonacci",
        "--n-min",
        "0",
        "--n-max",
        "6",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("family,n,V,E,W,Mo,residual,relation_holds")
    );
    let v: Vec<&str> = lines.map(|l| l.split(',').nth(2).unwrap()).collect();
    assert_eq!(v, ["1", "2", "3", "5", "8", "13", "21"]);
}

#[test]
fn sweep_hypercube_is_balanced() {
    let o = run(&[
        "sweep",
        "--family",
        "hypercube",
        "--n-min",
        "1",
        "--n-max",
        "5",
    ]);
    let text = stdout(&o);
    assert!(text
        .lines()
        .skip(1)
        .all(|l| l.split(',').nth(5) == Some("0")));
}

#[test]
fn sweep_lucas_3() {
    let o = run(&["sweep", "--family", "lucas", "--n-min", "3", "--n-max", "3"]);
    assert_eq!(stdout(&o).lines().nth(1), Some("lucas,3,4,3,9,6,0,true"));
}

#[test]
fn sweep_json_and_non_daisy_pattern() {
    let o = run(&[
        "sweep",
        "--family",
        "qnf",
        "--pattern",
        "010",
        "--n-min",
        "3",
        "--n-max",
        "5",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let rows: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert!(rows.iter().all(|r| r["method"] == "oracle"));
}

#[test]
fn sweep_stops_at_the_cap_with_partial_output() {
    let o = run(&[
        "sweep",
        "--family",
        "hypercube",
        "--n-min",
        "1",
        "--n-max",
        "6",
        "--max-vertices",
        "16",
    ]);
    assert_eq!(o.status.code(), Some(2));
    // header plus n = 1..=4
    assert_eq!(stdout(&o).lines().count(), 5);
    assert!(stderr(&o).contains("hypercube n=5"));

    assert_eq!(
        run(&["sweep", "--family", "lucas", "--n-min", "4", "--n-max", "3"])
            .status
            .code(),
        Some(2)
    );
}
