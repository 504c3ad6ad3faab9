use std::path::Path;
use std::process::{Command, Output};

use gelfond_core::blossom::ControlNet;
use gelfond_core::curves::GelfondBezierCurve;
use gelfond_core::gelfond_basis::{bernstein, elementary_exponents};
use gelfond_core::partitions::ExponentSequence;
use serde_json::Value;

fn gelfond(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gelfond")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = gelfond(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn table(text: &str) -> (Vec<String>, Vec<Vec<f64>>) {
    let mut lines = text.split_terminator("\r\n");
    let header = lines.next().unwrap().split(',').map(String::from).collect();
    let rows = lines.map(|l| l.split(',').map(|x| x.parse().unwrap()).collect()).collect();
    (header, rows)
}

const COMPARISON_POINTS: &str = "0,0;0.2,1;0.8,1;1,0";

#[test]
fn basis_table_partition_of_unity() {
    let text = stdout(&["basis", "--exponents", "0,3,4,6,9", "--samples", "101"]);
    assert!(!text.replace("\r\n", "").contains('\n'), "rows end in CRLF");
    let (header, rows) = table(&text);
    assert_eq!(header.len(), 7);
    assert_eq!(header.last().unwrap(), "unity_residual");
    assert_eq!(rows.len(), 101);
    for row in &rows {
        assert!(row[6].abs() <= 1e-10);
        assert!((row[1..6].iter().sum::<f64>() - 1.0).abs() <= 1e-10);
    }
}

#[test]
fn polynomial_exponents_give_bernstein() {
    let (_, rows) = table(&stdout(&["basis", "--exponents", "0,1,2,3", "--samples", "21"]));
    for row in rows {
        for k in 0..=3 {
            assert!((row[k + 1] - bernstein(3, k, row[0])).abs() < 1e-15);
        }
    }
}

#[test]
fn closed_form_matches_generic_route() {
    let closed = table(&stdout(&["basis", "--closed-form", "elementary", "--l", "2", "--n", "3"])).1;
    let exps = elementary_exponents(2, 3).unwrap();
    let list: Vec<String> = exps.exponents().iter().map(|r| r.to_string()).collect();
    let generic = table(&stdout(&["basis", "--exponents", &list.join(",")])).1;
    assert_eq!(closed.len(), generic.len());
    for (a, b) in closed.iter().zip(&generic) {
        for (x, y) in a.iter().zip(b) {
            assert!((x - y).abs() < 1e-14, "{a:?} vs {b:?}");
        }
    }
}

#[test]
fn curve_csv_is_bitwise_evaluate() {
    let spaces = ["0,1,2,3", "0,1,2,20", "0,2,50,100"];
    let text = stdout(&[
        "curve", "--exponents", spaces[0], "--compare", spaces[1], "--compare", spaces[2],
        "--points", COMPARISON_POINTS, "--samples", "57",
    ]);
    let (_, rows) = table(&text);
    assert_eq!(rows.len(), 3 * 57);
    let pts = vec![vec![0.0, 0.0], vec![0.2, 1.0], vec![0.8, 1.0], vec![1.0, 0.0]];
    for (c, space) in spaces.iter().enumerate() {
        let exps: Vec<f64> = space.split(',').map(|x| x.parse().unwrap()).collect();
        let net = ControlNet::new(ExponentSequence::new(exps).unwrap(), pts.clone()).unwrap();
        let samples = GelfondBezierCurve::new(net).sample(56).unwrap();
        for (row, (t, p)) in rows[c * 57..(c + 1) * 57].iter().zip(samples) {
            assert_eq!(row[0] as usize, c);
            assert_eq!(row[1].to_bits(), t.to_bits());
            assert_eq!(row[2].to_bits(), p[0].to_bits());
            assert_eq!(row[3].to_bits(), p[1].to_bits());
        }
    }
}

#[test]
fn three_space_svg_draws_three_curves() {
    let svg = stdout(&[
        "curve", "--exponents", "0,1,2,3", "--compare", "0,1,2,20", "--compare", "0,2,50,100",
        "--points", COMPARISON_POINTS, "--format", "svg",
    ]);
    assert!(svg.contains("version=\"1.1\""));
    assert_eq!(svg.matches("stroke-width=\"2\"").count(), 3);
    assert!(svg.contains("stroke=\"#1f4e9c\""));
    assert_eq!(svg.matches("<circle").count(), 4);
}

#[test]
fn single_control_point_is_a_constant_curve() {
    let svg = stdout(&["curve", "--exponents", "0", "--points", "0.5,-2", "--format", "svg"]);
    assert!(svg.trim_end().ends_with("</svg>"));
    assert!(!svg.contains("stroke-width=\"2\""));
    let (_, rows) = table(&stdout(&["curve", "--exponents", "0", "--points", "0.5,-2", "--samples", "5"]));
    assert!(rows.iter().all(|r| r[2] == 0.5 && r[3] == -2.0));
}

#[test]
fn identical_runs_are_byte_identical() {
    let runs: [&[&str]; 3] = [
        &["curve", "--exponents", "0,1/2,3", "--points", COMPARISON_POINTS, "--format", "json"],
        &["elevate", "--preset", "affine", "--iterations", "5", "--format", "json"],
        &["basis", "--exponents", "0,0.5,2.25,7"],
    ];
    for args in runs {
        assert_eq!(gelfond(args).stdout, gelfond(args).stdout, "{args:?}");
    }
}

#[test]
fn input_errors_exit_with_2() {
    let cases: [&[&str]; 7] = [
        &["basis", "--exponents", "0,3,3"],
        &["basis", "--exponents", "1,2"],
        &["basis", "--exponents", "0,x"],
        &["basis", "--exponents", "0,1", "--samples", "1"],
        &["curve", "--exponents", "0,1", "--points", "0,0,0;1,1,1", "--format", "svg"],
        &["elevate", "--exponents", "0,1,2,3", "--tail", "affine:-1,5"],
        &["insert", "--curve", "/nonexistent/curve.json", "--rho", "2"],
    ];
    for args in cases {
        let out = gelfond(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn zero_iterations_echo_the_polygon() {
    let poly = "0,0;1,3;4,3;5,-1";
    let text = stdout(&["elevate", "--preset", "linear", "--points", poly, "--iterations", "0", "--format", "json"]);
    let v: Value = serde_json::from_str(&text).unwrap();
    let expected: Value = serde_json::from_str("[[0.0,0.0],[1.0,3.0],[4.0,3.0],[5.0,-1.0]]").unwrap();
    assert_eq!(v["final_polygon"], expected);
    assert_eq!(v["rows"].as_array().unwrap().len(), 1);
    let (header, rows) = table(&stdout(&["elevate", "--preset", "linear", "--iterations", "0"]));
    assert_eq!(header, ["iteration", "polygon_size", "hausdorff", "sup_param_distance"]);
    assert_eq!(rows, vec![vec![0.0, 4.0, rows[0][2], rows[0][3]]]);
}

#[test]
fn presets_converge_or_plateau() {
    let last = |preset: &str| {
        let (_, rows) = table(&stdout(&["elevate", "--preset", preset, "--iterations", "100"]));
        assert_eq!(rows.len(), 101);
        rows[100][2]
    };
    assert!(last("linear") < 1e-2);
    assert!(last("affine") < 1e-2);
    assert!(last("quadratic") > 0.1);
}

#[test]
fn frames_are_written_per_iteration() {
    let dir = tempfile::tempdir().unwrap();
    let frames = dir.path().join("frames");
    stdout(&["elevate", "--preset", "linear", "--iterations", "3", "--frames", frames.to_str().unwrap()]);
    let mut names: Vec<String> = std::fs::read_dir(&frames)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names.sort();
    assert_eq!(names, ["frame_0000.svg", "frame_0001.svg", "frame_0002.svg", "frame_0003.svg"]);
}

fn record_curve(v: &Value) -> GelfondBezierCurve {
    let num = |x: &Value| match x {
        Value::String(s) if s.contains('/') => {
            let (p, q) = s.split_once('/').unwrap();
            p.parse::<f64>().unwrap() / q.parse::<f64>().unwrap()
        }
        Value::String(s) => s.parse().unwrap(),
        x => x.as_f64().unwrap(),
    };
    let exps = v["exponents"].as_array().unwrap().iter().map(num).collect();
    let pts = v["points"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| p.as_array().unwrap().iter().map(num).collect())
        .collect();
    let iv: Vec<f64> = v["interval"].as_array().unwrap().iter().map(num).collect();
    let net = ControlNet::new(ExponentSequence::new(exps).unwrap(), pts).unwrap();
    GelfondBezierCurve::on_interval(net, iv[0], iv[1]).unwrap()
}

#[test]
fn insert_keeps_the_curve_and_record_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("c.json");
    std::fs::write(&file, r#"{"exponents": [0, "1/2", 3], "interval": [1, "5/2"], "points": [[0,0],[1,2],[3,1]]}"#)
        .unwrap();
    let text = stdout(&["insert", "--curve", file.to_str().unwrap(), "--rho", "7/4"]);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["exponents"][2], "7/4");
    let after = record_curve(&v);
    let before = record_curve(&serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap());
    for i in 0..=30 {
        let t = 1.0 + 1.5 * i as f64 / 30.0;
        let (p, q) = (before.evaluate(t).unwrap(), after.evaluate(t).unwrap());
        assert!((p[0] - q[0]).abs() < 1e-13 && (p[1] - q[1]).abs() < 1e-13, "t={t}");
    }
}

fn derivative(curve: &GelfondBezierCurve, t: f64, side: f64) -> Vec<f64> {
    let h = 1e-6 * side;
    let (a, b, c) = (curve.evaluate(t).unwrap(), curve.evaluate(t + h).unwrap(), curve.evaluate(t + 2.0 * h).unwrap());
    (0..a.len()).map(|i| (-3.0 * a[i] + 4.0 * b[i] - c[i]) / (2.0 * h)).collect()
}

#[test]
fn join_is_c1() {
    let text = stdout(&[
        "join", "--exponents", "0,2,3,5", "--points", "0,0;1,1;2,1;3,0", "--interval", "1,2",
        "--right-exponents", "0,1,10,25", "--right-interval", "2,3", "--right-points", "4,-1;5,0",
    ]);
    let v: Value = serde_json::from_str(&text).unwrap();
    let left = record_curve(&serde_json::json!({
        "exponents": [0, 2, 3, 5], "interval": [1, 2], "points": [[0,0],[1,1],[2,1],[3,0]]
    }));
    let right = record_curve(&v["right"]);
    assert_eq!(right.evaluate(2.0).unwrap(), left.evaluate(2.0).unwrap());
    let (dl, dr) = (derivative(&left, 2.0, -1.0), derivative(&right, 2.0, 1.0));
    let scale = dl.iter().map(|x| x.abs()).fold(0.0, f64::max);
    for i in 0..2 {
        assert!((dl[i] - dr[i]).abs() <= 1e-6 * scale, "{dl:?} vs {dr:?}");
    }
}

#[test]
fn decasteljau_trace_ends_at_curve_value() {
    let text = stdout(&["decasteljau", "--exponents", "0,3,4,6,9", "--points", "0,0;1,2;2,3;3,2;4,0", "--t", "0.3"]);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["levels"].as_array().unwrap().len(), 5);
    assert_eq!(v["convex"], true);
    let pts = vec![vec![0.0, 0.0], vec![1.0, 2.0], vec![2.0, 3.0], vec![3.0, 2.0], vec![4.0, 0.0]];
    let net = ControlNet::new(ExponentSequence::from_integers(&[0, 3, 4, 6, 9]).unwrap(), pts).unwrap();
    let p = GelfondBezierCurve::new(net).evaluate(0.3).unwrap();
    for i in 0..2 {
        assert!((v["value"][i].as_f64().unwrap() - p[i]).abs() < 1e-14);
    }
}

#[test]
fn oracle_routes_agree() {
    let text = stdout(&["oracle", "--exponents", "0,3,4,6,9"]);
    let rows: Vec<Vec<&str>> = text.split_terminator("\r\n").skip(1).map(|l| l.split(',').collect()).collect();
    assert!(rows.len() >= 5);
    for row in rows {
        assert_eq!(row[2], "true", "{row:?}");
    }
}

#[test]
fn config_file_and_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.json");
    let out = dir.path().join("table.csv");
    std::fs::write(
        &cfg,
        format!(r#"{{"command": "basis", "exponents": [0, 1, 2], "samples": 4, "output": {:?}}}"#, out),
    )
    .unwrap();
    stdout(&["--config", cfg.to_str().unwrap(), "basis", "--samples", "6"]);
    let (header, rows) = table(&std::fs::read_to_string(&out).unwrap());
    assert_eq!(header.len(), 5);
    assert_eq!(rows.len(), 6);
    let wrong = gelfond(&["--config", cfg.to_str().unwrap(), "curve"]);
    assert_eq!(wrong.status.code(), Some(2));
    assert!(Path::new(&out).exists());
}
