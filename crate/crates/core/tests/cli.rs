use bier_spheres::cli::{run_args, Outcome, EXIT_CAP, EXIT_ERROR, EXIT_OK};
use bier_spheres::fixtures::FIXTURES;

fn bier(args: &[&str]) -> Outcome {
    run_args(std::iter::once("bier").chain(args.iter().copied()))
}

#[test]
fn verify_passes_on_every_fixture() {
    for f in FIXTURES {
        let o = bier(&["verify", "--fixture", f.name]);
        assert_eq!(o.code, EXIT_OK, "{}: {}{}", f.name, o.stdout, o.stderr);
        assert!(o.stdout.ends_with("verdict: OK\n"));
    }
}

#[test]
fn classify_all_pairs_report() {
    let o = bier(&[
        "classify",
        "--all-pairs",
        "--fixture",
        "m4-example",
        "--format",
        "csv",
    ]);
    assert_eq!(o.code, EXIT_OK);
    let lines: Vec<&str> = o.stdout.lines().collect();
    assert_eq!(lines.len(), 257);
    assert!(lines.contains(&"\"{1,2}\",\"{1,2}\",cross-polytope,S^1,\"(0,0,1)\""));
}

#[test]
fn output_is_deterministic() {
    let args = [
        "corpus-verify",
        "--exhaustive",
        "2",
        "--sizes",
        "4",
        "--count",
        "5",
        "--seed",
        "9",
    ];
    let first = bier(&args);
    assert_eq!(first.code, EXIT_OK, "{}", first.stderr);
    assert_eq!(first, bier(&args));
    for fmt in ["table", "csv", "json"] {
        let a = [
            "betti",
            "--method",
            "both",
            "--fixture",
            "square",
            "--format",
            fmt,
        ];
        assert_eq!(bier(&a), bier(&a));
    }
}

#[test]
fn inline_json_and_diagnostics() {
    let o = bier(&[
        "bier",
        "--input",
        r#"{"m": 3, "facets": [[1, 2]]}"#,
        "--format",
        "json",
    ]);
    assert_eq!(o.code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["base_m"], 3);
    assert_eq!(v["facets"].as_array().unwrap().len(), 4);

    let o = bier(&["dual", "--input", r#"{"m": 3, "facets": [[1, "x"]]}"#]);
    assert_eq!(o.code, EXIT_ERROR);
    assert!(o.stderr.contains("line 1"), "{}", o.stderr);

    let o = bier(&["homology", "--input", "/nonexistent/complex.json"]);
    assert_eq!(o.code, EXIT_ERROR);
}

#[test]
fn cap_exit_code() {
    let o = bier(&[
        "betti",
        "--method",
        "brute",
        "--cap",
        "6",
        "--fixture",
        "square",
    ]);
    assert_eq!(o.code, EXIT_CAP);
    let o = bier(&[
        "betti",
        "--method",
        "closed",
        "--cap",
        "6",
        "--fixture",
        "square",
    ]);
    assert_eq!(o.code, EXIT_OK);
}

#[test]
fn cup_queries() {
    let o = bier(&["cup", "--fixture", "seven-vertex", "1,2", "4,6"]);
    assert_eq!(o.stdout, "{1,2} x {4,6} = ±{1,2,4,6}\n");
    let o = bier(&["cup", "--fixture", "seven-vertex", "1,2,3,6", "1,4"]);
    assert_eq!(o.code, EXIT_ERROR);
    assert!(o.stderr.contains("{1,2,3,6}"));
}

#[test]
fn skeleton_fixture_betti_agrees() {
    let o = bier(&["betti", "--method", "both", "--fixture", "skeleton:6:1"]);
    assert_eq!(o.code, EXIT_OK);
    assert!(o.stdout.contains("verdict: OK"));
}
