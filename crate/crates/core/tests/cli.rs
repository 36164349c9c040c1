use std::process::{Command, Output};

use hilbert_kunz::report::CertificationReport;
use hilbert_kunz::Rational;

fn hk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hk-certify"))
        .args(args)
        .output()
        .expect("spawn hk-certify")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn vol_prints_exact_and_truncated() {
    let out = hk(&["vol", "--dim", "6", "--s", "3/2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "241/15360 ≈ 0.0156\n");
    let out = hk(&["vol", "--dim", "6", "--s", "1.5", "--digits", "8"]);
    assert_eq!(stdout(&out), "241/15360 ≈ 0.01569010\n");
}

#[test]
fn bad_rational_is_a_usage_error() {
    let out = hk(&["vol", "--dim", "6", "--s", "1,5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn verify_tables_rejects_other_dimensions() {
    let out = hk(&["verify-tables", "--dim", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exit_code_tracks_overall_pass() {
    for dim in ["5", "6"] {
        let out = hk(&["verify-tables", "--dim", dim]);
        let report = CertificationReport::parse_text(&stdout(&out)).unwrap();
        assert_eq!(out.status.success(), report.overall_pass);
        assert_eq!(report.overall_pass, report.rows.iter().all(|r| r.pass));
    }
    let out = hk(&["bound", "--dim", "7", "--e", "5", "--r", "3", "--s", "3.32", "--target", "1.112"]);
    assert!(out.status.success());
    let out = hk(&["bound", "--dim", "7", "--e", "5", "--r", "3", "--s", "3.32", "--target", "1.113"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn report_decimals_truncate_their_exact_values() {
    for dim in ["5", "6"] {
        let report = CertificationReport::parse_text(&stdout(&hk(&["verify-tables", "--dim", dim]))).unwrap();
        for row in &report.rows {
            assert_eq!(row.exact_bound.to_decimal(4), row.decimal);
            let shown: Rational = row.decimal.parse().unwrap();
            assert!(shown <= row.exact_bound);
        }
    }
}

#[test]
fn thread_cap_does_not_change_output() {
    let base = hk(&["verify-tables", "--dim", "6"]);
    for threads in ["1", "3"] {
        let out = Command::new(env!("CARGO_BIN_EXE_hk-certify"))
            .args(["verify-tables", "--dim", "6"])
            .env("HK_CERTIFY_THREADS", threads)
            .output()
            .unwrap();
        assert_eq!(out.stdout, base.stdout);
        assert_eq!(out.status.code(), base.status.code());
    }
    let out = Command::new(env!("CARGO_BIN_EXE_hk-certify"))
        .args(["monomial", "--ideal", "3 0 0 / 0 2 0 / 0 0 2 / 1 1 1", "--q", "1,2,3"])
        .env("HK_CERTIFY_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(out.stdout, hk(&["monomial", "--ideal", "3 0 0 / 0 2 0 / 0 0 2 / 1 1 1", "--q", "1,2,3"]).stdout);
}

#[test]
fn csv_export_matches_report() {
    let dir = tempdir();
    let path = dir.join("dim5.csv");
    let out = hk(&["verify-tables", "--dim", "5", "--csv", path.to_str().unwrap()]);
    let report = CertificationReport::parse_text(&stdout(&out)).unwrap();
    let mut reader = csv::Reader::from_path(&path).unwrap();
    let records: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(records.len(), report.rows.len());
    for (rec, row) in records.iter().zip(&report.rows) {
        assert_eq!(&rec[1], row.label);
        assert_eq!(rec[3].parse::<Rational>().unwrap(), row.exact_bound);
        assert_eq!(&rec[6], row.pass.to_string());
    }
    let _ = std::fs::remove_dir_all(dir);
}

#[test]
fn monomial_file_input() {
    let dir = tempdir();
    let path = dir.join("sq.ideal");
    std::fs::write(&path, "# (x^2, xy, y^2)\n2 0\n1 1\n0 2\n").unwrap();
    let out = hk(&["monomial", "--file", path.to_str().unwrap(), "--q", "2,3,4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("2, 12, 3\n3, 27, 3\n4, 48, 3\n"));
    assert!(text.ends_with("normalized constant: 3\n"));
    let out = hk(&["monomial", "--file", path.to_str().unwrap(), "--q", "3,2"]);
    assert_eq!(out.status.code(), Some(2));
    let _ = std::fs::remove_dir_all(dir);
}

#[test]
fn quadric_and_radical_commands() {
    assert_eq!(stdout(&hk(&["quadric", "--p", "3", "--d", "5"])), "33/29 ≈ 1.1379; exceeds 17/15: yes\n");
    assert_eq!(stdout(&hk(&["quadric", "--p", "3", "--d", "6"])), "193/177 ≈ 1.0903; exceeds 781/720: yes\n");
    assert_eq!(stdout(&hk(&["radical", "--dim", "4", "--case", "minimal_gap"])), "657/625 ≈ 1.0512\n");
    assert_eq!(stdout(&hk(&["radical", "--dim", "3", "--e", "7"])), "7/6 ≈ 1.1666\n");
}

#[test]
fn md_table() {
    let text = stdout(&hk(&["md", "--max", "6"]));
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "d, m_d, 1+m_d");
    assert_eq!(lines[6], "6, 61/720, 781/720");
}

fn tempdir() -> std::path::PathBuf {
    use std::sync::atomic::{AtomicUsize, Ordering};
    static NEXT: AtomicUsize = AtomicUsize::new(0);
    let dir = std::env::temp_dir().join(format!(
        "hk-certify-it-{}-{}",
        std::process::id(),
        NEXT.fetch_add(1, Ordering::Relaxed)
    ));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}
