mod common;

use common::{dist, lcq, read_svg};
use serde_json::Value;

fn json(out: &std::process::Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

fn complex(v: &Value) -> (f64, f64) {
    (v["re"].as_f64().unwrap(), v["im"].as_f64().unwrap())
}

fn close(a: (f64, f64), b: (f64, f64), eps: f64) -> bool {
    dist(a, b) <= eps
}

#[test]
fn solve_worked_example_json() {
    let out = lcq(&["solve", "--c1", "-1-7i", "--c2", "-18+1i", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["class"], "Regular");
    let k = &v["construction"];
    assert!((k["theta_star"].as_f64().unwrap() - 0.1973956).abs() < 1e-7);
    assert!(close(complex(&k["circle"]["center"]), (0.676471, 2.617647), 1e-6));
    assert!((k["circle"]["radius"].as_f64().unwrap() - 2.703644).abs() < 1e-6);
    let roots: Vec<(f64, f64)> = v["roots"].as_array().unwrap().iter().map(|r| complex(&r["value"])).collect();
    assert!(close(roots[0], (-2.0, 3.0), 1e-12));
    assert!(close(roots[1], (3.0, 4.0), 1e-12));
    assert_eq!(v["flags"]["polish_applied"], true);
    assert_eq!(v["flags"]["fallback_used"], false);
}

#[test]
fn solve_table_shows_degrees_minutes_seconds() {
    let out = lcq(&["solve", "--c1=-1-7i", "--c2=-18+1i"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("11°18'35.757\""), "{text}");
}

#[test]
fn solve_derived_example() {
    let out = lcq(&["solve", "--c1", "-4-2i", "--c2", "2+4i", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let roots: Vec<(f64, f64)> = v["roots"].as_array().unwrap().iter().map(|r| complex(&r["value"])).collect();
    assert!(close(roots[0], (1.0, 1.0), 1e-12));
    assert!(close(roots[1], (3.0, 1.0), 1e-12));
}

#[test]
fn solve_double_root_exits_two_with_oracle_roots() {
    let out = lcq(&["solve", "--c1", "-2", "--c2", "1", "--json"]);
    assert_eq!(out.status.code(), Some(2));
    let v = json(&out);
    assert_eq!(v["class"], "DoubleRoot");
    for r in v["oracle_roots"].as_array().unwrap() {
        assert!(close(complex(r), (1.0, 0.0), 1e-15));
    }
}

#[test]
fn solve_without_polish_reports_it() {
    let out = lcq(&["solve", "--c1", "-1-7i", "--c2", "-18+1i", "--json", "--no-polish"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["flags"]["polish_applied"], false);
}

#[test]
fn tolerance_flags_reach_the_solver() {
    let out = lcq(&["solve", "--c1", "-1-7i", "--c2", "-18+1i", "--json", "--tol-collinear", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["flags"]["fallback_reason"], "CollinearCircleFit");
    assert!(v["construction"].is_null());

    let out = lcq(&["--tol-degenerate", "1e3", "solve", "--c1", "-1-7i", "--c2", "-18+1i"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn parse_errors_name_argument_and_offset() {
    let out = lcq(&["solve", "--c1", "-1-7", "--c2", "1"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("--c1"), "{err}");
    assert!(err.contains("offset 4"), "{err}");

    let out = lcq(&["solve", "--c1", "1", "--c2", "2x"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr).unwrap().contains("--c2"));
}

#[test]
fn figure_derived_example() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("derived.svg");
    let out = lcq(&["figure", "--c1", "-4-2i", "--c2", "2+4i", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let svg = read_svg(&path);
    let (sx, sy) = svg.axis_scales("p1", (2.0, 1.0));
    assert!((sx - sy).abs() < 1e-3, "{sx} vs {sy}");
    for (id, plane) in [("r1", (1.0, 1.0)), ("r2", (3.0, 1.0)), ("center", (2.0, -1.0))] {
        assert!(dist(svg.marker(id), svg.expected_pixel(sx, plane)) <= 1.0, "{id}");
    }
    for id in ["r1", "r2"] {
        assert!(svg.distance_to_circle(svg.marker(id)) <= 1.0);
        assert!(svg.distance_to_line(svg.marker(id)) <= 1.0);
    }
    // Every marker sits inside the viewport.
    for (_, (x, y)) in &svg.markers {
        assert!((0.0..=svg.width).contains(x) && (0.0..=svg.height).contains(y));
    }
}

#[test]
fn figure_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.svg");
    let b = dir.path().join("b.svg");
    for p in [&a, &b] {
        let out = lcq(&["figure", "--c1", "-1-7i", "--c2", "-18+1i", "--out", p.to_str().unwrap(), "--width", "640"]);
        assert_eq!(out.status.code(), Some(0));
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert!((read_svg(&a).width - 640.0).abs() < 1e-9);
}

#[test]
fn figure_rejects_degenerate_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("x.svg");
    let out = lcq(&["figure", "--c1", "0", "--c2", "1", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!path.exists());
}

#[test]
fn verify_default_run_passes() {
    let out = lcq(&["verify", "--seed", "42", "--trials", "1000"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    assert!(String::from_utf8(out.stdout).unwrap().contains("PASS"));
}

#[test]
fn verify_rejects_zero_trials() {
    assert_eq!(lcq(&["verify", "--trials", "0"]).status.code(), Some(1));
}

#[test]
fn verify_single_trial_is_reproducible() {
    let a = lcq(&["verify", "--seed", "7", "--trials", "1"]);
    let b = lcq(&["verify", "--seed", "7", "--trials", "1"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn batch_writes_statistics_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("stats.json");
    let out = lcq(&["batch", "--seed", "7", "--trials", "2000", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(std::fs::read(&path).unwrap(), out.stdout);
    let v = json(&out);
    assert_eq!(v["trials"], 2000);
    assert_eq!(v["regular_count"], 2000);
    assert!(v["max_rel_error"].as_f64().unwrap() <= 1e-8);
    assert!(v["median_rel_error"].as_f64().unwrap() <= v["p99_rel_error"].as_f64().unwrap());
    assert!(v["worst_seed"].is_u64());
}

#[test]
fn batch_near_degenerate_has_no_silent_failures() {
    let out = lcq(&["batch", "--near-degenerate", "--trials", "1000"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["silent_failures"], 0);
    assert!(v["max_rel_error"].as_f64().unwrap() <= 1e-8);
}
