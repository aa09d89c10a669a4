use std::path::Path;
use std::process::{Command, Output};

fn sperturb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sperturb"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn read_csv(p: &Path) -> (Vec<String>, Vec<Vec<f64>>) {
    let mut r = csv::Reader::from_path(p).unwrap();
    let header = r.headers().unwrap().iter().map(String::from).collect();
    let rows = r
        .records()
        .map(|rec| rec.unwrap().iter().map(|v| v.parse().unwrap()).collect())
        .collect();
    (header, rows)
}

fn read_json(p: &Path) -> serde_json::Value {
    serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap()
}

#[test]
fn figure_green_curve() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("green.csv");
    assert!(sperturb(&["figure-green", "--out", path_str(&out)])
        .status
        .success());
    let (header, rows) = read_csv(&out);
    assert_eq!(header, ["r", "R2"]);
    assert_eq!(rows.len(), 200);
    let last = rows.last().unwrap();
    assert_eq!((last[0], last[1]), (1.0, 0.0));
    assert!(rows.iter().all(|r| r[0] > 0.0 && r[1] >= -1e-12));
    let max = rows.iter().map(|r| r[1]).fold(f64::NEG_INFINITY, f64::max);
    assert!((0.0086..=0.0090).contains(&max));
    let side = read_json(&out.with_extension("json"));
    assert_eq!(side["max_R2"].as_f64().unwrap(), max);
}

#[test]
fn figure_dirichlet_curves() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("dirichlet.csv");
    assert!(sperturb(&["figure-dirichlet", "--out", path_str(&out)])
        .status
        .success());
    let (header, rows) = read_csv(&out);
    assert_eq!(header, ["r", "R1", "R2"]);
    assert!((rows[0][1] - 0.21015).abs() < 1e-5);
    let max2 = rows.iter().map(|r| r[2]).fold(f64::NEG_INFINITY, f64::max);
    assert!((0.0395..=0.0403).contains(&max2));
    let last = rows.last().unwrap();
    assert!(last[1].abs() < 1e-15 && last[2].abs() < 1e-15);
}

#[test]
fn outputs_are_bit_stable() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.csv"), dir.path().join("b.csv"));
    for p in [&a, &b] {
        let args = [
            "solve",
            "--engine",
            "quadrature",
            "--boundary",
            "modes:0.5,1,0",
            "--epsilon",
            "0.5",
            "--terms",
            "2",
            "--grid",
            "4",
            "--out",
            path_str(p),
        ];
        assert!(sperturb(&args).status.success());
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn solve_reports_certificates() {
    let dir = tempfile::tempdir().unwrap();
    let disk = dir.path().join("disk.csv");
    assert!(sperturb(&[
        "solve",
        "--epsilon",
        "1",
        "--terms",
        "2",
        "--out",
        path_str(&disk)
    ])
    .status
    .success());
    let s = read_json(&disk.with_extension("json"));
    assert!((s["bound_value"].as_f64().unwrap() - 0.17678).abs() < 1e-5);
    assert_eq!(s["certified"], true);
    let (header, rows) = read_csv(&disk);
    assert_eq!(header, ["x", "y", "phi"]);
    assert!(rows
        .iter()
        .all(|r| r[2] >= 0.75 - 1e-15 && r[2] <= 1.0 + 1e-15));

    let ellipse = dir.path().join("ellipse.json");
    let args = [
        "solve",
        "--domain",
        "ellipse:1,1.1",
        "--epsilon",
        "1",
        "--terms",
        "2",
        "--format",
        "json",
        "--out",
        path_str(&ellipse),
    ];
    assert!(sperturb(&args).status.success());
    let e = read_json(&ellipse);
    assert!((e["bound_value"].as_f64().unwrap() - 0.2992).abs() < 1e-4);
    assert!((e["value_at_center"].as_f64().unwrap() - 0.72624).abs() < 1e-5);
    assert!(e["samples"].as_array().unwrap().len() > 1);

    let flat = dir.path().join("flat.csv");
    assert!(sperturb(&[
        "solve",
        "--epsilon",
        "0",
        "--terms",
        "1",
        "--out",
        path_str(&flat)
    ])
    .status
    .success());
    assert_eq!(read_json(&flat.with_extension("json"))["bound_value"], 0.0);
}

#[test]
fn divergence_is_a_warning() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("wide.csv");
    let o = sperturb(&[
        "solve",
        "--domain",
        "disk:2",
        "--epsilon",
        "1.5",
        "--out",
        path_str(&out),
    ]);
    assert!(o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));
    assert_eq!(read_json(&out.with_extension("json"))["certified"], false);
}

#[test]
fn configuration_errors_exit_with_two() {
    let out = std::env::temp_dir().join("sperturb-never-written.csv");
    for args in [
        vec!["solve", "--domain", "square:1", "--epsilon", "1"],
        vec!["solve", "--potential", "const:-1", "--epsilon", "1"],
        vec!["solve", "--boundary", "modes:0,1,0", "--epsilon", "1"],
        vec!["solve", "--epsilon", "1", "--terms", "0"],
        vec!["solve", "--epsilon", "1", "--tol", "-1"],
        vec!["solve", "--epsilon", "1", "--unknown"],
    ] {
        let mut full = args.clone();
        full.extend(["--out", path_str(&out)]);
        assert_eq!(sperturb(&full).status.code(), Some(2), "{args:?}");
    }
    assert!(!out.exists());
}

#[test]
fn min_order_helper() {
    let o = sperturb(&["min-order", "--epsilon", "1", "--target", "0.1"]);
    assert_eq!(String::from_utf8_lossy(&o.stdout).trim(), "3");
    let o = sperturb(&["min-order", "--epsilon", "1", "--target", "0.36"]);
    assert_eq!(String::from_utf8_lossy(&o.stdout).trim(), "1");
    let o = sperturb(&[
        "min-order",
        "--domain",
        "disk:2",
        "--epsilon",
        "1",
        "--target",
        "0.1",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_filters_and_detects_corruption() {
    let o = sperturb(&["verify", "--filter", "green"]);
    assert!(o.status.success());
    let text = String::from_utf8_lossy(&o.stdout);
    assert!(text.contains("Green"));
    assert!(!text.contains("Dirichlet-to-Neumann"));
    let o = sperturb(&["verify", "--filter", "1", "--corrupt-bound-constant"]);
    assert_eq!(o.status.code(), Some(1));
    let o = sperturb(&["verify", "--filter", "nothing-matches-this"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn full_verification_passes() {
    let o = sperturb(&["verify"]);
    let text = String::from_utf8_lossy(&o.stdout);
    assert!(o.status.success(), "{text}");
    assert!(!text.contains("FAIL"));
}
