//! End-to-end checks of the binary: output formats, exit codes, and the
//! documented sharp values.

use std::process::{Command, Output};

fn ellik(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ellik"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn eval_k_at_symmetric_point() {
    let out = ellik(&["eval", "K", "0.70710678118654752"]);
    assert!(out.status.success());
    let k: f64 = stdout(&out).trim().parse().unwrap();
    // (1/sqrt2) K^2 = 2.43074525691989...
    let v = k * k / (2.0f64).sqrt();
    assert!((v - 2.4307452569198932).abs() < 1e-12, "{v}");
}

#[test]
fn eval_mu_symmetric_point() {
    let out = ellik(&["eval", "mu", "0.70710678118654752"]);
    let mu: f64 = stdout(&out).trim().parse().unwrap();
    assert!((mu - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
}

#[test]
fn eval_q2_near_zero_endpoint() {
    let out = ellik(&["eval", "Q2", "1e-8"]);
    let v: f64 = stdout(&out).trim().parse().unwrap();
    assert!((v - std::f64::consts::PI / 25.0f64.ln()).abs() < 1e-6);
}

#[test]
fn eval_extended_gives_32_digits() {
    let out = ellik(&["eval", "K", "0.5", "--precision", "extended"]);
    let text = stdout(&out);
    let mantissa = text.trim().split('e').next().unwrap().replace(['-', '.'], "");
    assert_eq!(mantissa.len(), 32, "{text}");
    // K(0.5) = 1.6857503548125960429... at the represented argument
    assert!(text.starts_with("1.685750354812596042"), "{text}");
}

#[test]
fn eval_q1_supports_symbolic_constant() {
    let out = ellik(&["eval", "Q1", "0.5", "--c", "e^{4/3}"]);
    assert!(out.status.success());
    let v: f64 = stdout(&out).trim().parse().unwrap();
    // K(1/sqrt2) / (4/3 + ln sqrt2)
    let want = 1.8540746773013719 / (4.0 / 3.0 + 0.5 * (2.0f64).ln());
    assert!((v - want).abs() < 1e-13);
}

#[test]
fn eval_domain_error_is_exit_2() {
    let out = ellik(&["eval", "K", "1.5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr.clone())
        .unwrap()
        .contains("domain"));
}

#[test]
fn eval_f_takes_four_arguments() {
    let out = ellik(&["eval", "F", "0.5", "0.5", "1", "0"]);
    let v: f64 = stdout(&out).trim().parse().unwrap();
    assert_eq!(v, 1.0);
    let out = ellik(&["eval", "F", "0.5", "0.5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn coeffs_csv_rows() {
    let out = ellik(&["coeffs", "alpha", "4"]);
    let text = stdout(&out);
    let lines: Vec<&str> = text.trim().lines().collect();
    assert_eq!(lines[0], "n,num,den");
    assert_eq!(*lines.last().unwrap(), "4,243,163840");

    let out = ellik(&["coeffs", "wallis", "2"]);
    assert!(stdout(&out).trim().ends_with("2,3,8"));

    let out = ellik(&["coeffs", "beta", "1"]);
    assert!(stdout(&out).trim().ends_with("1,-17,6"));
}

#[test]
fn coeffs_json_and_unknown_sequence() {
    let out = ellik(&["coeffs", "q", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v[0]["n"], 2);
    let out = ellik(&["coeffs", "nope", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_thm2_small_grid_passes() {
    let out = ellik(&["verify", "thm2", "--points", "250"]);
    assert_eq!(out.status.code(), Some(0));
    let reports: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let arr = reports.as_array().unwrap();
    assert_eq!(arr.len(), 3);
    for r in arr {
        assert_eq!(r["status"], "pass", "{r}");
        assert!(r["runtime_ms"].is_number());
        assert!(r["grid"]["points"].is_number());
    }
}

#[test]
fn verify_thm1_with_off_constant_fails() {
    let out = ellik(&["verify", "thm1", "--c", "4.0", "--points", "120"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_thm3_reports_the_known_red_check() {
    // thm3 carries the deliberately red h-endpoint tolerance; the suite
    // must exit 1 with exactly that claim failing
    let out = ellik(&["verify", "thm3", "--points", "150"]);
    assert_eq!(out.status.code(), Some(1));
    let reports: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    for r in reports.as_array().unwrap() {
        if r["claim_id"] == "thm3-h-endpoint" {
            assert_eq!(r["status"], "fail");
        } else {
            assert_eq!(r["status"], "pass", "{r}");
        }
    }
}

#[test]
fn verify_unknown_suite_is_exit_2() {
    let out = ellik(&["verify", "nope"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sweep_q2_rows_increase() {
    let out = ellik(&["sweep", "Q2", "--points", "10"]);
    let text = stdout(&out);
    let mut lines = text.trim().lines();
    assert_eq!(lines.next().unwrap(), "x,value");
    let vals: Vec<f64> = lines
        .map(|l| l.split(',').nth(1).unwrap().parse().unwrap())
        .collect();
    assert_eq!(vals.len(), 10);
    for w in vals.windows(2) {
        assert!(w[1] > w[0]);
    }
}

#[test]
fn sweep_rejects_bad_grid() {
    let out = ellik(&["sweep", "D", "--lo", "0.9", "--hi", "0.1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sweep_writes_file() {
    let dir = std::env::temp_dir().join("ellik-sweep-test.csv");
    let _ = std::fs::remove_file(&dir);
    let out = ellik(&["sweep", "D", "--points", "50", "--out", dir.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&dir).unwrap();
    assert_eq!(text.lines().count(), 51);
    std::fs::remove_file(&dir).ok();
}
