use std::path::Path;
use std::process::{Command, Output};

fn ssp5(args: &[&str], envs: &[(&str, &str)]) -> Output {
    let mut c = Command::new(env!("CARGO_BIN_EXE_ssp5"));
    c.args(args).env_remove("SSP5_CACHE_DIR");
    for (k, v) in envs {
        c.env(k, v);
    }
    c.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn markdown_row_for_23() {
    let o = ssp5(&["enum", "--prime", "23", "--format", "md"], &[]);
    assert!(o.status.success());
    assert!(
        stdout(&o).lines().any(|l| l == "23 | 0 0 0 0 1 0 1 | 2"),
        "{}",
        stdout(&o)
    );
}

#[test]
fn bad_primes_exit_2() {
    for p in ["12", "11", "1"] {
        assert_eq!(
            ssp5(&["enum", "--prime", p], &[]).status.code(),
            Some(2),
            "p = {p}"
        );
    }
    assert_eq!(
        ssp5(&["enum", "--prime", "31", "--types", "5"], &[])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn type41_at_31_as_json() {
    let o = ssp5(&["enum", "--prime", "31", "--types", "4-1"], &[]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["counts"]["4-1"], 1);
    assert_eq!(v["counts"]["All"], 1);
    let recs = v["records"].as_array().unwrap();
    assert_eq!(recs.len(), 1);
    for field in ["type", "p", "params", "model", "aut", "key"] {
        assert!(recs[0].get(field).is_some(), "missing {field}");
    }
    assert_eq!(recs[0]["type"], "4-1");
    assert_eq!(recs[0]["aut"], "C2³");
}

#[test]
fn csv_columns() {
    let o = ssp5(&["enum", "--prime", "31", "--format", "csv"], &[]);
    assert_eq!(
        stdout(&o),
        "p,t41,t7,t9,t10,t11,t12,t15,all\n31,1,1,0,1,0,0,0,3\n"
    );
}

#[test]
fn verify_tables_flags_41_and_43() {
    let o = ssp5(&["verify-tables", "--range", "13..50"], &[]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 10);
    let flagged: Vec<&str> = out
        .lines()
        .filter(|l| l.starts_with("PAPER_INCONSISTENT"))
        .collect();
    assert_eq!(flagged.len(), 2);
    assert!(flagged[0].contains("printed 41 | 0 0 0 1 0 0 0 | 0 computed 41 | 0 0 0 1 0 0 0 | 1"));
    assert!(out
        .lines()
        .filter(|l| !l.starts_with("PAPER_INCONSISTENT"))
        .all(|l| l.starts_with("MATCH")));
}

#[test]
fn verify_tables_empty_range() {
    let o = ssp5(&["verify-tables", "--range", "100..13"], &[]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
}

#[test]
fn verify_tables_reports_mismatches_with_exit_4() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tables.txt");
    std::fs::write(&path, "23 0 0 0 0 1 0 0 1\n").unwrap();
    let o = ssp5(
        &[
            "verify-tables",
            "--range",
            "23..23",
            "--fixtures",
            path.to_str().unwrap(),
        ],
        &[],
    );
    assert_eq!(o.status.code(), Some(4));
    assert!(stdout(&o).starts_with("MISMATCH"));
    let missing = dir.path().join("absent.txt");
    let o = ssp5(
        &[
            "verify-tables",
            "--range",
            "23..23",
            "--fixtures",
            missing.to_str().unwrap(),
        ],
        &[],
    );
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn oracle_lines() {
    let o = ssp5(&["oracle", "--prime", "23", "--curve", "y^2 = x^12+1"], &[]);
    let out = stdout(&o);
    assert!(
        out.contains("superspecial=true") && out.contains("aut=D12⋊C4"),
        "{out}"
    );
    let o = ssp5(&["oracle", "--prime", "19", "--curve", "y^2 = x^11+x"], &[]);
    assert!(stdout(&o).contains("superspecial=true"));
    let o = ssp5(
        &["oracle", "--prime", "19", "--curve", "y^2 = (x-1)^2"],
        &[],
    );
    assert_eq!(o.status.code(), Some(2));
    let o = ssp5(&["oracle", "--prime", "19", "--curve", "y^2 = x^^2"], &[]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn ssjlist_and_ssp2() {
    let o = ssp5(&["ssjlist", "--prime", "23"], &[]);
    assert_eq!(stdout(&o).lines().count(), 3);
    let o = ssp5(&["ssp2", "--prime", "13"], &[]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("# p=13 jacobians="));
}

fn cache_header(dir: &Path, name: &str) -> String {
    std::fs::read_to_string(dir.join(name))
        .unwrap()
        .lines()
        .next()
        .unwrap()
        .to_string()
}

#[test]
fn cache_round_trip_gives_identical_reports() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    for p in ["29", "31", "47"] {
        let cold = ssp5(&["enum", "--prime", p, "--cache-dir", d], &[]);
        let warm = ssp5(&["enum", "--prime", p], &[("SSP5_CACHE_DIR", d)]);
        let none = ssp5(&["enum", "--prime", p], &[]);
        assert!(cold.status.success());
        assert_eq!(cold.stdout, warm.stdout);
        assert_eq!(cold.stdout, none.stdout);
    }
    assert_eq!(
        cache_header(dir.path(), "Sp_31.cache"),
        "ssp5-cache v1 p=31 kind=Sp"
    );
    assert_eq!(
        cache_header(dir.path(), "SSp2_31.cache"),
        "ssp5-cache v1 p=31 kind=SSp2"
    );

    std::fs::write(
        dir.path().join("Sp_29.cache"),
        "ssp5-cache v1 p=31 kind=Sp\n",
    )
    .unwrap();
    let o = ssp5(&["enum", "--prime", "29", "--cache-dir", d], &[]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("cache"));
}

#[test]
fn output_is_independent_of_thread_count() {
    let one = ssp5(&["enum", "--prime", "71"], &[("RAYON_NUM_THREADS", "1")]);
    let four = ssp5(&["enum", "--prime", "71"], &[("RAYON_NUM_THREADS", "4")]);
    assert!(one.status.success());
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn output_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.md");
    let o = ssp5(
        &[
            "enum",
            "--prime",
            "23",
            "--format",
            "md",
            "--output",
            path.to_str().unwrap(),
        ],
        &[],
    );
    assert_eq!(std::fs::read(&path).unwrap(), o.stdout);
}
