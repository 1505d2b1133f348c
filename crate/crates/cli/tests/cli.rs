use std::process::{Command, Output};

use emw_core::arith::frac;
use emw_core::polyform::cleared_poly;
use emw_core::powersum::{sum_direct, PowerSumQuery};
use emw_core::{Int, Rat};
use serde_json::Value;

fn emw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_emw")).args(args).output().expect("spawn emw")
}

fn stdout(args: &[&str]) -> String {
    let out = emw(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    serde_json::from_str(&stdout(&full)).unwrap()
}

fn csv_rows(text: &str) -> (Vec<String>, Vec<Vec<String>>) {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let headers = r.headers().unwrap().iter().map(String::from).collect();
    let rows = r.records().map(|rec| rec.unwrap().iter().map(String::from).collect()).collect();
    (headers, rows)
}

#[test]
fn sum_examples() {
    assert_eq!(stdout(&["sum", "--k", "3", "--m", "5"]), "k,m,S,EML,diff\n3,5,100,100,0\n");
    assert_eq!(stdout(&["sum", "--k", "1", "--m", "3"]), "k,m,S,EML,diff\n1,3,3,3,0\n");
}

#[test]
fn exit_codes() {
    assert_eq!(emw(&["sum", "--k", "0", "--m", "3"]).status.code(), Some(2));
    assert_eq!(emw(&["figure2", "--k-to", "3"]).status.code(), Some(2));
    assert_eq!(emw(&["ratios", "--case", "even_km1", "--k", "5..9"]).status.code(), Some(2));
    assert_eq!(emw(&["--trial-budget", "2", "candidates", "--k", "40"]).status.code(), Some(3));
    assert_eq!(emw(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(emw(&["sum", "--k", "x", "--m", "3"]).status.code(), Some(1));
    assert_eq!(emw(&["--digits", "51", "sum", "--k", "1", "--m", "3"]).status.code(), Some(1));
    assert_eq!(emw(&["--help"]).status.code(), Some(0));
}

#[test]
fn domain_errors_go_to_stderr_only() {
    let out = emw(&["sum", "--k", "0", "--m", "3"]);
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
}

#[test]
fn search_json_rows() {
    let v = json(&["search", "--k", "1..5", "--m", "3..100"]);
    assert_eq!(v["schema_version"], "1");
    assert_eq!(v["command"], "search");
    assert_eq!(v["rows"], serde_json::json!([{"k": 1, "m": 3}]));
}

#[test]
fn candidates_k10_integers() {
    let v = json(&["candidates", "--k", "10"]);
    let ints: Vec<&str> = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["integer_ge3"] == true)
        .map(|r| r["candidate"].as_str().unwrap())
        .collect();
    assert_eq!(ints, ["3", "6", "9", "18"]);
}

#[test]
fn candidates_odd_k_records_zero_root() {
    let (_, rows) = csv_rows(&stdout(&["candidates", "--k", "3"]));
    let values: Vec<&str> = rows.iter().map(|r| r[2].as_str()).collect();
    assert_eq!(values, ["0", "1/2", "1", "2", "4"]);
}

#[test]
fn poly_k2_coefficients() {
    let v = json(&["poly", "--k", "2"]);
    let coeffs: Vec<&str> =
        v["rows"].as_array().unwrap().iter().map(|r| r["coefficient"].as_str().unwrap()).collect();
    assert_eq!(coeffs, ["2", "0", "-9", "2"]);
    let powers: Vec<i64> =
        v["rows"].as_array().unwrap().iter().map(|r| r["power"].as_i64().unwrap()).collect();
    assert_eq!(powers, [0, 1, 2, 3]);
}

#[test]
fn poly_q_and_full() {
    let (_, rows) = csv_rows(&stdout(&["poly", "--k", "3", "--q"]));
    let coeffs: Vec<&str> = rows.iter().map(|r| r[4].as_str()).collect();
    assert_eq!(coeffs, ["4", "0", "-12", "2"]);
    assert_eq!(emw(&["poly", "--k", "4", "--q"]).status.code(), Some(2));
    let (_, rows) = csv_rows(&stdout(&["poly", "--k", "2", "--full-eml"]));
    assert_eq!(rows[0][2], "6");
    let coeffs: Vec<&str> = rows.iter().map(|r| r[4].as_str()).collect();
    assert_eq!(coeffs, ["0", "1", "-9", "2"]);
}

#[test]
fn csv_header_always_present() {
    // An empty result still carries its header.
    let text = stdout(&["search", "--k", "2..3", "--m", "3..50"]);
    assert_eq!(text, "k,m\n");
    for args in [
        vec!["signs", "--k-max", "6"],
        vec!["ratios", "--case", "odd_kp1", "--k", "3..9"],
        vec!["threshold", "--k", "1..3"],
        vec!["figure2", "--k-to", "6"],
        vec!["approx", "--k", "4", "--m", "7/2"],
    ] {
        let text = stdout(&args);
        assert!(text.ends_with('\n') && !text.contains('\r'), "{args:?}");
        let first = text.lines().next().unwrap();
        assert!(first.starts_with(|c: char| c.is_ascii_alphabetic()), "{args:?}: {first}");
    }
}

#[test]
fn json_is_a_single_document() {
    for args in [vec!["signs", "--k-max", "6"], vec!["figure2", "--k-to", "6"], vec!["threshold", "--k", "2"]]
    {
        let v = json(&args);
        let obj = v.as_object().unwrap();
        let keys: Vec<&str> = obj.keys().map(String::as_str).collect();
        assert_eq!(keys, ["schema_version", "command", "params", "rows"]);
    }
}

#[test]
fn output_identical_across_jobs() {
    let cases: [&[&str]; 4] = [
        &["search", "--k", "1..8", "--m", "3..400"],
        &["signs", "--k-max", "40"],
        &["figure1", "--k", "2..20", "--m", "3..40"],
        &["--format", "json", "figure2", "--k-to", "30", "--exact"],
    ];
    for args in cases {
        let base = stdout(args);
        assert_eq!(base, stdout(args), "{args:?} run-to-run");
        for jobs in ["1", "3", "8"] {
            let mut with = vec!["--jobs", jobs];
            with.extend_from_slice(args);
            assert_eq!(base, stdout(&with), "{args:?} --jobs {jobs}");
        }
    }
}

#[test]
fn figure1_exact_columns_round_trip() {
    let (headers, rows) = csv_rows(&stdout(&["figure1", "--k", "1..6", "--m", "3..30"]));
    let col = |name: &str| headers.iter().position(|h| h == name).unwrap();
    assert_eq!(rows.len(), 6 * 28);
    for r in &rows {
        let k: u32 = r[col("k")].parse().unwrap();
        let m: u64 = r[col("m")].parse().unwrap();
        let s: Int = r[col("S_exact")].parse().unwrap();
        assert_eq!(s, sum_direct(PowerSumQuery::new(m - 1, k).unwrap()));
        let mk: Int = r[col("m_pow_k")].parse().unwrap();
        assert_eq!(mk, Int::from(m).pow(k));
        let p: Int = r[col("P_exact")].parse().unwrap();
        assert_eq!(p, &s - &mk);
        let pr: Rat = r[col("P_R")].parse().unwrap();
        // 2(k+1) P_R is the cleared polynomial at m.
        let cleared = cleared_poly(k).unwrap().poly.eval_int(&Int::from(m));
        assert_eq!(pr * Rat::from_integer(Int::from(2 * (k + 1))), Rat::from_integer(cleared));
        let sign = &r[col("P_exact_sign")];
        let expect = if p > Int::from(0) {
            "POS"
        } else if p < Int::from(0) {
            "NEG"
        } else {
            "ZERO"
        };
        assert_eq!(sign, expect);
        if k == 1 && m == 3 {
            assert_eq!(r[col("P_exact")], "0");
            assert_eq!(r[col("P_exact_log10")], "");
        }
    }
}

#[test]
fn figure1_spot_row() {
    let (headers, rows) = csv_rows(&stdout(&["figure1", "--k", "2", "--m", "3"]));
    let get = |name: &str| rows[0][headers.iter().position(|h| h == name).unwrap()].clone();
    assert_eq!(get("S_exact"), "5");
    assert_eq!(get("S_R"), "29/6");
    assert_eq!(get("m_pow_k"), "9");
    assert_eq!(get("P_R"), "-25/6");
    assert_eq!(get("P_R_plus_C"), "-4");
    assert_eq!(get("P_exact"), "-4");
}

#[test]
fn figure2_examples() {
    let v = json(&["figure2", "--k-to", "10"]);
    let rows = v["rows"].as_array().unwrap();
    let find = |case: &str, k: i64| rows.iter().find(|r| r["case"] == case && r["k"] == k).unwrap();
    let r = find("EVEN_KM1", 4);
    assert_eq!(
        (r["m0"].as_i64(), r["value"].as_str(), r["sign"].as_str()),
        (Some(3), Some("-663"), Some("NEG"))
    );
    let r = find("EVEN_2KM1", 8);
    assert!((r["R"].as_f64().unwrap() - 0.930).abs() <= 1e-3);
    assert_eq!(r["sign"], "POS");
    let r = find("ODD_PROD", 5);
    assert_eq!(r["m0"], 18);
    assert_eq!(r["sign"], "POS");
    assert!((r["R"].as_f64().unwrap() - 0.399).abs() <= 1e-3);
}

#[test]
fn ratios_exact_column_round_trips() {
    let (headers, rows) =
        csv_rows(&stdout(&["--exact", "--digits", "12", "ratios", "--case", "odd_kp1", "--k", "3..9"]));
    assert_eq!(headers, ["case", "k", "R", "R_exact", "limit", "R_minus_limit"]);
    for r in rows {
        let k: i64 = r[1].parse().unwrap();
        let exact: Rat = r[3].parse().unwrap();
        // Independent form: 2(k+1)/(3k+1) * ((k+1)/k)^k.
        let mut want = frac(2 * (k + 1), 3 * k + 1);
        for _ in 0..k {
            want *= frac(k + 1, k);
        }
        assert_eq!(exact, want);
        let float: f64 = r[2].parse().unwrap();
        assert!((float - emw_core::arith::rat_to_f64(&want)).abs() < 1e-11);
    }
}

#[test]
fn digits_controls_float_width() {
    let text = stdout(&["--digits", "3", "threshold", "--k", "2"]);
    assert_eq!(text.lines().nth(1).unwrap(), "2,4.500,5,0.500,16,true");
}

#[test]
fn approx_at_integer_m_has_zero_error() {
    let v = json(&["--exact", "approx", "--k", "6", "--m", "9"]);
    let row = &v["rows"][0];
    assert_eq!(row["error_exact"], "0");
    assert_eq!(row["S_EML_p_exact"], row["S_exact"]);
    let truncated = json(&["--exact", "approx", "--k", "6", "--m", "9", "--p", "1"]);
    assert_ne!(truncated["rows"][0]["error_exact"], "0");
}

#[test]
fn threshold_k1() {
    let (_, rows) = csv_rows(&stdout(&["threshold", "--k", "1"]));
    assert_eq!(rows[0][2], "4");
}
