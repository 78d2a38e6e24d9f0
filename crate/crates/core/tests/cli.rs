use std::io::BufReader;

use lattice16::census::Census;
use lattice16::classifier::Label;
use lattice16::cli::run;

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("lattice16").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn classify_witnessed_grid() {
    let (code, out, _) = invoke(&["classify", "XXX./X.X./.X.X/XXX."]);
    assert_eq!(code, 0);
    assert!(out.contains("PPT_ENTANGLED"), "{out}");
}

#[test]
fn classify_full_lattice() {
    let (code, out, _) = invoke(&["--format", "json", "classify", "0xFFFF"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["label"], "SEPARABLE");
    assert_eq!(v["justification"], "MAXIMALLY_MIXED");
}

#[test]
fn empty_subset_is_usage_error() {
    let (code, _, err) = invoke(&["classify", ""]);
    assert_eq!(code, 2);
    assert!(!err.is_empty());
}

#[test]
fn unknown_subcommand_is_usage_error() {
    assert_eq!(invoke(&["frobnicate"]).0, 2);
}

#[test]
fn tolerance_out_of_range() {
    assert_eq!(invoke(&["--tolerance", "0.5", "classify", "0x0033"]).0, 2);
    assert_eq!(invoke(&["--tolerance", "0", "classify", "0x0033"]).0, 2);
}

#[test]
fn decompose_npt_is_usage_error() {
    assert_eq!(invoke(&["decompose", "0x0001"]).0, 2);
}

#[test]
fn single_point_spectrum() {
    let (code, out, _) = invoke(&["ptspectrum", "0x0001"]);
    assert_eq!(code, 0);
    assert!(out.contains("-0.25"), "{out}");
}

#[test]
fn census_writes_parseable_jsonl() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("n6.jsonl");
    let csv_path = dir.path().join("n6.csv");
    let (code, _, err) = invoke(&[
        "census",
        "--min",
        "6",
        "--max",
        "6",
        "--out",
        out_path.to_str().unwrap(),
        "--summary",
        csv_path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{err}");
    let census =
        Census::read_jsonl(BufReader::new(std::fs::File::open(&out_path).unwrap())).unwrap();
    assert!(!census.records.is_empty());
    assert!(census
        .records
        .iter()
        .all(|r| r.n == 6 && r.label != Label::Unknown));
    assert_eq!(census.total_subsets(), 8008);
    let csv = std::fs::read_to_string(&csv_path).unwrap();
    let row6 = csv.lines().find(|l| l.starts_with("6,")).unwrap();
    assert!(row6.starts_with("6,7696,192,120,0,"), "{row6}");
}

#[test]
fn verify_sample_succeeds() {
    let (code, out, err) = invoke(&["--seed", "3", "verify"]);
    assert_eq!(code, 0, "{err}");
    assert!(!out.is_empty());
}

#[test]
fn output_independent_of_thread_count() {
    let args = |t: &'static str| {
        [
            "--format",
            "json",
            "--threads",
            t,
            "census",
            "--min",
            "9",
            "--max",
            "9",
        ]
    };
    let (c1, one, _) = invoke(&args("1"));
    let (c4, four, _) = invoke(&args("4"));
    assert_eq!((c1, c4), (0, 0));
    assert!(!one.is_empty());
    assert_eq!(one, four);
}

#[test]
fn render_and_orbit() {
    let (code, out, _) = invoke(&["render", "0x0033"]);
    assert_eq!(code, 0);
    assert!(out.contains("0x0033"), "{out}");
    let (code, out, _) = invoke(&["--format", "json", "orbit", "0x0033"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(v["orbit_size"].as_u64().unwrap() > 0);
}
