use std::collections::BTreeSet;

use ssp5::elliptic::enumerate_supersingular_j;
use ssp5::field::FieldTowerCtx;
use ssp5::genus5::TypeLabel;
use ssp5::report::*;

fn all() -> BTreeSet<TypeLabel> {
    TypeLabel::ALL.into_iter().collect()
}

#[test]
fn json_round_trip_is_idempotent() {
    for p in [23, 31, 131] {
        let (doc, _) = build_report(p, &all(), None).unwrap();
        let json = doc.to_json();
        let back = ReportDoc::from_json(&json).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.to_json(), json);
    }
}

#[test]
fn counts_match_records() {
    let (doc, _) = build_report(71, &all(), None).unwrap();
    for t in TypeLabel::ALL {
        let n = doc.records.iter().filter(|r| r.type_label == t).count();
        assert_eq!(doc.counts.0.get(t), Some(n));
    }
    assert_eq!(doc.counts.all(), doc.records.len());
    assert_eq!(doc.meta.completeness, Completeness::Complete);
    assert!(doc.records.windows(2).all(|w| w[0].key < w[1].key));
}

#[test]
fn json_with_wrong_total_is_rejected() {
    let (doc, _) = build_report(23, &all(), None).unwrap();
    let json = doc.to_json().replace("\"All\": 2", "\"All\": 3");
    assert!(ReportDoc::from_json(&json).is_err());
}

#[test]
fn families_only_without_type41() {
    let types = [TypeLabel::T7, TypeLabel::T10].into_iter().collect();
    let (doc, info) = build_report(31, &types, None).unwrap();
    assert_eq!(doc.meta.completeness, Completeness::FamiliesOnly);
    assert!(info.ssp2.is_none());
    assert_eq!(doc.row().to_string(), "31 | 0 1 0 1 0 0 0 | 2");
    assert!(doc.to_markdown().contains("31 | - 1 - 1 - - - | 2"));
    assert_eq!(
        doc.to_csv().unwrap(),
        "p,t41,t7,t9,t10,t11,t12,t15,all\n31,,1,,1,,,,2\n"
    );
}

#[test]
fn cache_files_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let k = FieldTowerCtx::new(37).unwrap();
    let (s, st) = load_or_compute_sp(&k, Some(dir.path())).unwrap();
    assert_eq!(st, CacheStatus::Miss);
    let (s2, st) = load_or_compute_sp(&k, Some(dir.path())).unwrap();
    assert_eq!(st, CacheStatus::Hit);
    assert_eq!(s2.values(), s.values());
    assert_eq!(s.values(), enumerate_supersingular_j(&k).values());
    let (c, _) = load_or_compute_ssp2(&k, &s, Some(dir.path())).unwrap();
    let (c2, st) = load_or_compute_ssp2(&k, &s, Some(dir.path())).unwrap();
    assert_eq!(st, CacheStatus::Hit);
    assert_eq!(c, c2);

    let file = CacheFile::read(dir.path(), 37, CacheKind::SSp2)
        .unwrap()
        .unwrap();
    assert_eq!(
        CacheFile::parse(&file.render(), 37, CacheKind::SSp2).unwrap(),
        file
    );
    assert!(CacheFile::parse(&file.render(), 41, CacheKind::SSp2).is_err());
    assert!(CacheFile::parse(&file.render(), 37, CacheKind::Sp).is_err());
    assert!(CacheFile::read(dir.path(), 43, CacheKind::Sp)
        .unwrap()
        .is_none());
}

#[test]
fn cold_and_cached_reports_agree_up_to_50() {
    let dir = tempfile::tempdir().unwrap();
    for p in (13..=50).filter(|&p| ssp5::field::is_prime(p)) {
        let (cold, _) = build_report(p, &all(), None).unwrap();
        let (first, _) = build_report(p, &all(), Some(dir.path())).unwrap();
        let (hit, info) = build_report(p, &all(), Some(dir.path())).unwrap();
        assert_eq!(info.sp.1, CacheStatus::Hit);
        assert_eq!(cold.to_json(), first.to_json());
        assert_eq!(cold.to_json(), hit.to_json());
    }
}

#[test]
fn type_lists() {
    assert_eq!(parse_types("4-1, 7").unwrap().len(), 2);
    assert!(parse_types("4-2").is_err());
    assert!("xml".parse::<Format>().is_err());
}
