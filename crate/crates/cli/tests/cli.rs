use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn confspace(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_confspace"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write(dir: &TempDir, name: &str, body: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn plan_same_start_and_goal_is_constant() {
    let dir = TempDir::new().unwrap();
    let c = write(
        &dir,
        "c.json",
        r#"{"surface": "annulus", "n": 2, "points": [[0.1, 0], [0.6, 2]]}"#,
    );
    let o = confspace(&[
        "plan",
        "--surface",
        "annulus",
        "--start",
        &c,
        "--goal",
        &c,
        "--samples",
        "9",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let samples = doc["samples"].as_array().unwrap();
    assert_eq!(samples.len(), 9);
    for s in samples {
        assert_eq!(s["points"], samples[0]["points"]);
    }
}

#[test]
fn plan_annulus_redistribution_example() {
    let dir = TempDir::new().unwrap();
    let x = write(
        &dir,
        "x.json",
        r#"{"surface": "annulus", "n": 2, "points": [[0.0, 0], [0.0, 1]]}"#,
    );
    let y = write(
        &dir,
        "y.json",
        r#"{"surface": "annulus", "n": 2, "points": [[0.0, 5], [0.5, 7]]}"#,
    );
    let out = dir.path().join("path.json");
    let svg = dir.path().join("path.svg");
    let o = confspace(&[
        "plan",
        "--surface",
        "annulus",
        "--start",
        &x,
        "--goal",
        &y,
        "--json",
        out.to_str().unwrap(),
        "--svg",
        svg.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stderr(&o).contains("segments: 2"), "{}", stderr(&o));
    assert!(stdout(&o).is_empty());
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(doc["surface"], "annulus");
    assert_eq!(doc["n"], 2);
    assert_eq!(doc["segments"].as_array().unwrap().len(), 2);
    assert_eq!(doc["segments"][0]["kind"], "arc-slide");
    let plot = std::fs::read_to_string(&svg).unwrap();
    assert!(plot.starts_with("<svg"));
}

#[test]
fn plan_disc_reports_stratum() {
    let dir = TempDir::new().unwrap();
    let x = write(
        &dir,
        "x.json",
        r#"{"surface": "disc", "n": 3, "points": [[-1, 0], [0, 0], [2, 0]]}"#,
    );
    let y = write(
        &dir,
        "y.json",
        r#"{"surface": "disc", "n": 3, "points": [[0, 0], [4, 0], [1, 2]]}"#,
    );
    let o = confspace(&["plan", "--surface", "disc3", "--start", &x, "--goal", &y]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stderr(&o).contains("stratum: E"), "{}", stderr(&o));
    assert!(stderr(&o).contains("endpoints exact"));
}

#[test]
fn malformed_input_exits_2() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.json", "{ not json");
    let good = write(
        &dir,
        "good.json",
        r#"{"surface": "disc", "n": 3, "points": [[0, 0], [1, 0], [0, 1]]}"#,
    );
    let dup = write(
        &dir,
        "dup.json",
        r#"{"surface": "disc", "n": 3, "points": [[0, 0], [0, 0], [0, 1]]}"#,
    );
    let two = write(
        &dir,
        "two.json",
        r#"{"surface": "disc", "n": 2, "points": [[0, 0], [1, 0]]}"#,
    );
    for (start, surface) in [(&bad, "disc3"), (&dup, "disc3"), (&two, "disc3"), (&good, "annulus")] {
        let o = confspace(&["plan", "--surface", surface, "--start", start, "--goal", &good]);
        assert_eq!(o.status.code(), Some(2), "{start}: {}", stderr(&o));
    }
    let missing = dir.path().join("missing.json");
    let o = confspace(&[
        "plan",
        "--surface",
        "disc3",
        "--start",
        missing.to_str().unwrap(),
        "--goal",
        &good,
    ]);
    assert_eq!(o.status.code(), Some(2));
    let o = confspace(&["plan", "--surface", "torus", "--start", &good, "--goal", &good]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn plan_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let x = write(
        &dir,
        "x.json",
        r#"{"surface": "disc", "n": 3, "points": [[0.3, 1], [-2, 0.5], [1.5, -0.7]]}"#,
    );
    let y = write(
        &dir,
        "y.json",
        r#"{"surface": "disc", "n": 3, "points": [[3, 1], [-1, -4], [2, 2]]}"#,
    );
    let run = |name: &str| {
        let svg = dir.path().join(name);
        let o = confspace(&[
            "plan",
            "--surface",
            "disc3",
            "--start",
            &x,
            "--goal",
            &y,
            "--svg",
            svg.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        (o.stdout, std::fs::read(svg).unwrap())
    };
    assert_eq!(run("a.svg"), run("b.svg"));
}

#[test]
fn braid_reports_linking() {
    let o = confspace(&["braid", "--n", "3", "--word", "s1 s2 s2 s1", "--linking", "--hub", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.contains("pure: true"));
    assert!(text.contains("linking: ψ1,2=1 ψ1,3=1 ψ2,3=0"), "{text}");
    assert!(text.contains("hub(2): true"));
}

#[test]
fn braid_conjugation_check() {
    let o = confspace(&["braid", "--n", "3", "--word", "s1 s1", "--conjugate", "s2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(
        stdout(&o).contains("conjugation check: ok, linking ψ1,2=0 ψ1,3=1 ψ2,3=0"),
        "{}",
        stdout(&o)
    );
}

#[test]
fn braid_errors() {
    let o = confspace(&["braid", "--n", "2", "--word", "s1", "--linking"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stdout(&o).contains("pure: false"));
    let o = confspace(&["braid", "--n", "2", "--word", "s2"]);
    assert_eq!(o.status.code(), Some(2));
    let o = confspace(&["braid", "--n", "3", "--word", "t1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = confspace(&["braid", "--n", "3", "--word", "s1", "--conjugate", "s9"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn json_output_matches_svg_samples() {
    // the plot is drawn from the exported samples: every start marker sits
    // where the first sample says
    let dir = TempDir::new().unwrap();
    let x = write(
        &dir,
        "x.json",
        r#"{"surface": "annulus", "n": 1, "points": [[0.2, 9]]}"#,
    );
    let y = write(
        &dir,
        "y.json",
        r#"{"surface": "annulus", "n": 1, "points": [[0.7, 0]]}"#,
    );
    let json = dir.path().join("p.json");
    let svg = dir.path().join("p.svg");
    let o = confspace(&[
        "plan",
        "--surface",
        "annulus",
        "--start",
        &x,
        "--goal",
        &y,
        "--samples",
        "3",
        "--json",
        json.to_str().unwrap(),
        "--svg",
        svg.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(doc["samples"].as_array().unwrap().len(), 3);
    assert_eq!(doc["samples"][2]["points"][0][0].as_f64().unwrap(), 0.7);
    assert!(Path::new(&svg).exists());
}
