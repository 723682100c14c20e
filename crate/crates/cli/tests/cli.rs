//! End-to-end tests of the `chordspace` binary: JSON envelope schema, golden
//! values (numeric fields at 1e-9 relative unless Monte Carlo), exit codes,
//! and determinism across seeds and worker counts.

use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chordspace"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is one JSON document")
}

fn envelope_checks(v: &Value, command: &str) {
    assert_eq!(v["command"], command);
    assert!(v["params"].is_object());
    assert!(v["result"].is_object());
    assert!(v["elapsed_ms"].is_u64());
}

fn rel_eq(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * b.abs().max(1e-300)
}

#[test]
#[allow(clippy::approx_constant)] // the rounded angles are the CLI input under test
fn dist_matches_library_route() {
    let out = run(&["dist", "--c1", "1.0472,2.0944", "--c2", "4.1888,5.2360"]);
    let v = json_of(&out);
    envelope_checks(&v, "dist");
    let d = v["result"]["distance"].as_f64().unwrap();
    // same computation through the library API
    let expect = chordspace::hausdorff_distance(
        &chordspace::Chord::new(1.0472, 2.0944).unwrap(),
        &chordspace::Chord::new(4.1888, 5.2360).unwrap(),
        &chordspace::Circle::unit(),
    );
    assert!(rel_eq(d, expect, 1e-9), "{d} vs {expect}");
    // the rounded inputs are the inscribed-triangle configuration
    assert!((d - 3f64.sqrt()).abs() < 1e-3);
}

#[test]
fn dist_of_identical_chords_is_zero() {
    let out = run(&["dist", "--c1", "0.4,2.0", "--c2", "0.4,2.0"]);
    let v = json_of(&out);
    assert_eq!(v["result"]["distance"].as_f64().unwrap(), 0.0);
}

#[test]
fn dist_exit_codes() {
    // invalid radius
    let out = run(&["dist", "--c1", "0,1", "--c2", "1,2", "--radius", "0"]);
    assert_eq!(out.status.code(), Some(2));
    // degenerate chord
    let out = run(&["dist", "--c1", "1,1", "--c2", "1,2"]);
    assert_eq!(out.status.code(), Some(2));
    // malformed pair is a usage error (clap exits 2)
    let out = run(&["dist", "--c1", "1", "--c2", "1,2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn measure_exact_values() {
    let cases = [
        ("full", 19.739208802178716),
        ("bertrand", 6.579736267392906),
        ("tube:0.5", 0.25),
        ("rect:0.3,0.7", 0.21),
        ("samearc:0.8", 0.32000000000000006),
    ];
    for (spec, expect) in cases {
        let v = json_of(&run(&["measure", "--set", spec, "--method", "exact"]));
        envelope_checks(&v, "measure");
        let got = v["result"]["exact_value"].as_f64().unwrap();
        assert!(rel_eq(got, expect, 1e-9), "{spec}: {got} vs {expect}");
    }
}

#[test]
fn measure_cover_ladder_brackets_exact_value() {
    let v = json_of(&run(&[
        "measure", "--set", "bertrand", "--method", "cover", "--n", "300",
    ]));
    let exact = v["result"]["exact_value"].as_f64().unwrap();
    assert!(rel_eq(exact, 6.579736267392906, 1e-9));
    let estimates = v["result"]["estimates"].as_array().unwrap();
    assert!(!estimates.is_empty());
    let last = estimates.last().unwrap();
    // finest rung: inner enumeration below, outer grid above
    assert!(rel_eq(last["lower_bound"].as_f64().unwrap(), 6.382344179371117, 1e-9));
    assert!(last["upper_bound"].as_f64().unwrap() >= exact);
    // ladder is ordered by decreasing epsilon
    let eps: Vec<f64> = estimates
        .iter()
        .map(|e| e["epsilon"].as_f64().unwrap())
        .collect();
    assert!(eps.windows(2).all(|w| w[0] > w[1]));
}

#[test]
fn measure_cover_csv_has_ladder_rows() {
    let out = run(&[
        "measure", "--set", "tube:0.5", "--method", "cover", "--n", "64", "--format", "csv",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "epsilon,n_subdivisions,lower_bound,upper_bound");
    assert_eq!(lines.len(), 8); // header + n ∈ {1,2,4,8,16,32,64}
}

#[test]
fn measure_rejects_bad_specs() {
    assert_eq!(run(&["measure", "--set", "blob:1"]).status.code(), Some(2));
    assert_eq!(run(&["measure", "--set", "tube:-1"]).status.code(), Some(2));
    assert_eq!(run(&["measure", "--set", "tube:9"]).status.code(), Some(2));
}

#[test]
fn bertrand_estimates_match_library_and_kind() {
    let v = json_of(&run(&[
        "bertrand", "--kind", "h2", "--samples", "100000", "--seed", "7",
    ]));
    envelope_checks(&v, "bertrand");
    let hits = v["result"]["hits"].as_u64().unwrap();
    let expect = chordspace::mc_probability(
        chordspace::SamplerKind::H2Uniform,
        |c| c.is_bertrand(),
        100_000,
        7,
    )
    .unwrap();
    assert_eq!(hits, expect.hits, "CLI and library streams must agree");
    let p = v["result"]["p_hat"].as_f64().unwrap();
    assert!((p - 1.0 / 3.0).abs() < 4.0 * 0.0014910, "{p}");
    let ci = v["result"]["ci95"].as_array().unwrap();
    assert!(ci[0].as_f64().unwrap() <= p && p <= ci[1].as_f64().unwrap());

    let v = json_of(&run(&[
        "bertrand", "--kind", "midpoint", "--samples", "100000", "--seed", "7",
    ]));
    let p = v["result"]["p_hat"].as_f64().unwrap();
    assert!((p - 0.25).abs() < 4.0 * 0.0013693, "{p}");

    let v = json_of(&run(&[
        "bertrand", "--kind", "radius", "--samples", "100000", "--seed", "7",
    ]));
    let p = v["result"]["p_hat"].as_f64().unwrap();
    assert!((p - 0.5).abs() < 4.0 * 0.0015811, "{p}");

    assert_eq!(
        run(&["bertrand", "--kind", "nope", "--samples", "10"]).status.code(),
        Some(2)
    );
}

#[test]
fn bertrand_is_deterministic_and_jobs_independent() {
    let strip_elapsed = |mut v: Value| {
        v.as_object_mut().unwrap().remove("elapsed_ms");
        v
    };
    let a = strip_elapsed(json_of(&run(&[
        "bertrand", "--kind", "h2", "--samples", "200000", "--seed", "3", "--jobs", "1",
    ])));
    let b = strip_elapsed(json_of(&run(&[
        "bertrand", "--kind", "h2", "--samples", "200000", "--seed", "3", "--jobs", "4",
    ])));
    assert_eq!(a, b);
}

#[test]
fn bertrand_probability_is_radius_invariant() {
    let p_of = |radius: &str| {
        json_of(&run(&[
            "bertrand", "--kind", "h2", "--samples", "50000", "--seed", "11", "--radius", radius,
        ]))["result"]["p_hat"]
            .as_f64()
            .unwrap()
    };
    let p1 = p_of("0.5");
    let p2 = p_of("1");
    let p3 = p_of("3");
    assert_eq!(p1, p2);
    assert_eq!(p2, p3);
}

#[test]
fn dimension_fit_and_errors() {
    let v = json_of(&run(&[
        "dimension", "--set", "tube:1", "--eps", "0.2,0.1,0.05,0.025",
    ]));
    envelope_checks(&v, "dimension");
    let s = v["result"]["s_estimate"].as_f64().unwrap();
    assert!((1.9..=2.1).contains(&s), "slope {s}");
    assert_eq!(v["result"]["counts"].as_array().unwrap().len(), 4);

    // too few epsilons
    let out = run(&["dimension", "--set", "tube:1", "--eps", "0.2,0.1,0.05"]);
    assert_eq!(out.status.code(), Some(2));
    // constant counts: a set far below probe resolution
    let out = run(&[
        "dimension", "--set", "samearc:0.0000000001", "--eps", "0.2,0.1,0.05,0.025",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sample_csv_schema_and_determinism() {
    let args = ["sample", "--kind", "h2", "--samples", "64", "--seed", "5", "--format", "csv"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout, "same seed, same bytes");
    let text = String::from_utf8(a.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "a,b,length,is_bertrand");
    assert_eq!(lines.len(), 65);
    for row in &lines[1..] {
        let f: Vec<&str> = row.split(',').collect();
        let a: f64 = f[0].parse().unwrap();
        let b: f64 = f[1].parse().unwrap();
        let len: f64 = f[2].parse().unwrap();
        assert!(a < b && len > 0.0 && len <= 2.0);
        assert!(f[3] == "true" || f[3] == "false");
    }
}

#[test]
fn sample_json_format() {
    let v = json_of(&run(&["sample", "--kind", "midpoint", "--samples", "8", "--seed", "2"]));
    let chords = v["result"]["chords"].as_array().unwrap();
    assert_eq!(chords.len(), 8);
    for c in chords {
        assert!(c["a"].as_f64().unwrap() < c["b"].as_f64().unwrap());
        assert!(c["is_bertrand"].is_boolean());
    }
}

#[test]
fn plot_commands_write_svg() {
    let dir = std::env::temp_dir().join(format!("chordspace-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cases: Vec<Vec<&str>> = vec![
        vec!["plot", "--what", "ball", "--center", "0,3.1416", "--eps", "0.2"],
        vec!["plot", "--what", "tube", "--arc1", "0,0.5", "--arc2", "2,2.5"],
        vec!["plot", "--what", "samples", "--kind", "h2", "--samples", "200", "--seed", "1"],
        vec!["plot", "--what", "convergence", "--set", "tube:1", "--n", "128"],
    ];
    for (i, case) in cases.iter().enumerate() {
        let path = dir.join(format!("fig{i}.svg"));
        let mut args = case.clone();
        let path_str = path.to_str().unwrap().to_string();
        args.push("--out");
        args.push(&path_str);
        let out = run(&args);
        let v = json_of(&out);
        envelope_checks(&v, "plot");
        let svg = std::fs::read_to_string(&path).unwrap();
        assert!(svg.starts_with("<svg"), "case {i}");
        assert!(svg.ends_with("</svg>"), "case {i}");
        assert_eq!(v["result"]["bytes"].as_u64().unwrap() as usize, svg.len());
    }
    std::fs::remove_dir_all(&dir).ok();

    // I/O failure is an internal error
    let out = run(&[
        "plot", "--what", "ball", "--center", "0,3.1416", "--eps", "0.2",
        "--out", "/nonexistent-dir/x.svg",
    ]);
    assert_eq!(out.status.code(), Some(1));
    // missing required parameter for the figure kind
    let out = run(&["plot", "--what", "ball", "--eps", "0.2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn measures_scale_with_radius_squared() {
    let measure = |spec: &str, radius: &str| {
        json_of(&run(&["measure", "--set", spec, "--method", "exact", "--radius", radius]))
            ["result"]["exact_value"]
            .as_f64()
            .unwrap()
    };
    let base = measure("full", "1");
    for r in ["0.5", "3"] {
        let rf: f64 = r.parse().unwrap();
        assert!(rel_eq(measure("full", r), base * rf * rf, 1e-12));
    }
}
