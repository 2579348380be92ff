//! One PASS or FAIL line per acceptance criterion. Exits nonzero if any fails.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ssp5::curve::{is_supersingular_elliptic, is_superspecial, HyperCurve};
use ssp5::elliptic::{
    enumerate_supersingular_j, expected_supersingular_count, legendre_params_of_j,
};
use ssp5::field::{distinct_roots, is_prime, FieldTowerCtx, Poly};
use ssp5::genus5::{
    is_group_table, is_superspecial_genus5, is_superspecial_habc_direct,
    transform_composition_table, type9_four_curve_test, type9_series, HabcParams, TypeLabel,
};
use ssp5::report::{
    parse_tables, verify_tables, ReportDoc, RowComparison, RowStatus, KNOWN_ANOMALIES,
    PRINTED_EXCEPTIONS, TABLES_FIXTURE,
};
use ssp5::ssp2::{enumerate_ssp2, exhaustive_ssp2_oracle, OracleDomain};

/// Bound for criterion 10; the paper only claims O(1).
const MONITOR_BOUND: usize = 12;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn primes(lo: u64, hi: u64) -> impl Iterator<Item = u64> {
    (lo..hi).filter(|&p| is_prime(p))
}

fn field(p: u64) -> FieldTowerCtx {
    FieldTowerCtx::new(p).expect("prime above 11")
}

/// Recomputed fixture rows with p in `lo..=hi`.
fn recount(lo: u64, hi: u64) -> Vec<(RowComparison, ReportDoc)> {
    let rows = parse_tables(TABLES_FIXTURE).expect("fixture parses");
    let mut out = Vec::new();
    verify_tables(&rows, &(lo..=hi), None, |c, d, _| {
        out.push((c.clone(), d.clone()))
    })
    .expect("every row computes");
    out
}

fn table_criterion(rows: &[(RowComparison, ReportDoc)]) -> Outcome {
    let mut bad = Vec::new();
    let mut flagged = Vec::new();
    for (c, d) in rows {
        match c.status {
            RowStatus::Match => {}
            RowStatus::PaperInconsistent => flagged.push(format!(
                "{} (printed {}, computed {})",
                c.p, c.printed, c.computed
            )),
            RowStatus::Mismatch => bad.push(format!(
                "{}: printed {} computed {}",
                c.p, c.printed, c.computed
            )),
        }
        if !d.meta.checks.all_hold() {
            bad.push(format!("{}: cross-checks failed {:?}", c.p, d.meta.checks));
        }
    }
    let matched = rows.len() - flagged.len() - bad.len();
    let mut detail = format!("{} rows, {matched} exact", rows.len());
    if !flagged.is_empty() {
        detail += &format!("; PAPER_INCONSISTENT {}", flagged.join(", "));
    }
    if !bad.is_empty() {
        detail += &format!("; mismatches {}", bad.join("; "));
    }
    outcome(bad.is_empty(), detail)
}

fn criterion3(rows: &[(RowComparison, ReportDoc)]) -> Outcome {
    let zero: BTreeSet<u64> = rows
        .iter()
        .filter(|(c, _)| c.p >= 23 && c.computed.all == 0)
        .map(|(c, _)| c.p)
        .collect();
    let printed: BTreeSet<u64> = PRINTED_EXCEPTIONS
        .iter()
        .copied()
        .filter(|&p| (23..200).contains(&p))
        .collect();
    let expected: BTreeSet<u64> = printed
        .iter()
        .copied()
        .filter(|p| !KNOWN_ANOMALIES.contains(p))
        .collect();
    let resolved: Vec<String> = rows
        .iter()
        .filter(|(c, _)| KNOWN_ANOMALIES.contains(&c.p))
        .map(|(c, d)| {
            let types: Vec<&str> = d.records.iter().map(|r| r.type_label.as_str()).collect();
            format!(
                "{} has {} curve(s) of type {}",
                c.p,
                c.computed.all,
                types.join(",")
            )
        })
        .collect();
    outcome(
        zero == expected,
        format!(
            "no curve for {zero:?}; printed list {printed:?}; resolved: {}",
            resolved.join("; ")
        ),
    )
}

fn criterion4() -> Outcome {
    let mut n = 0;
    let mut disagree = 0;
    for p in [13, 17, 23] {
        let k = field(p);
        let s = enumerate_supersingular_j(&k);
        let mut rng = ChaCha8Rng::seed_from_u64(p);
        let mut tested = 0;
        while tested < 100 {
            let mut e = || k.elem(rng.gen_range(0..p as i64), rng.gen_range(0..p as i64));
            let Ok(q) = HabcParams::new(&k, e(), e(), e()) else {
                continue;
            };
            tested += 1;
            n += 1;
            disagree += (is_superspecial_genus5(&k, &q, &s) != is_superspecial_habc_direct(&k, &q))
                as usize;
        }
    }
    outcome(
        disagree == 0,
        format!("{n} random triples at p = 13, 17, 23, {disagree} disagreements"),
    )
}

fn criterion5() -> Outcome {
    let mut parts = Vec::new();
    let mut pass = true;
    for p in [13, 17, 19, 23] {
        let k = field(p);
        let t = Instant::now();
        let g = enumerate_ssp2(&k, &enumerate_supersingular_j(&k)).expect("graph");
        let oracle = exhaustive_ssp2_oracle(&k, OracleDomain::Fp2).expect("oracle");
        let eq = g.keys() == oracle;
        pass &= eq;
        parts.push(format!(
            "p={p}: {} vs {} classes{} ({:.1?})",
            g.jacobians.len(),
            oracle.len(),
            if eq { "" } else { " DIFFER" },
            t.elapsed()
        ));
    }
    outcome(pass, parts.join(", "))
}

fn criterion6() -> Outcome {
    let mut bad = Vec::new();
    let mut confirmed = 0;
    for p in primes(13, 500) {
        let k = field(p);
        let s = enumerate_supersingular_j(&k);
        if s.len() != expected_supersingular_count(p) {
            bad.push(format!("|S_{p}| = {}", s.len()));
        }
        if p < 100 {
            for j in s.values() {
                let lambda = legendre_params_of_j(&k, j.0)[0];
                let f = Poly::new(vec![k.zero(), k.one(), k.zero()])
                    .mul(&k, &Poly::new(vec![k.neg(k.one()), k.one()]))
                    .mul(&k, &Poly::new(vec![k.neg(lambda), k.one()]));
                let ok = HyperCurve::new(&k, f).is_ok_and(|h| is_supersingular_elliptic(&k, &h));
                confirmed += ok as usize;
                if !ok {
                    bad.push(format!("j = {} at p = {p} fails the oracle", k.encode(j.0)));
                }
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!(
            "sizes checked for 13 <= p < 500, {confirmed} j-invariants confirmed for p < 100{}",
            failures(&bad)
        ),
    )
}

fn criterion7(rows: &[(RowComparison, ReportDoc)]) -> Outcome {
    let orbit_fail: Vec<u64> = rows
        .iter()
        .filter(|(c, d)| c.p <= 100 && d.meta.checks.orbit_dedup_agrees != Some(true))
        .map(|(c, _)| c.p)
        .collect();
    let k = field(103);
    let mut rng = ChaCha8Rng::seed_from_u64(45);
    let mut tables = BTreeSet::new();
    let mut used = 0;
    while used < 1000 {
        let mut e = || k.elem(rng.gen_range(0..103), rng.gen_range(0..103));
        let Ok(q) = HabcParams::new(&k, e(), e(), e()) else {
            continue;
        };
        if let Some(t) = transform_composition_table(&k, &q) {
            tables.insert(t);
            used += 1;
        }
    }
    let t = *tables.first().expect("some table");
    let s3 = tables.len() == 1 && is_group_table(&t) && t[1][2] == 3 && t[2][1] == 4;
    outcome(
        orbit_fail.is_empty() && s3,
        format!(
            "orbit and key dedup agree for every p <= 100{}; 1000 triples give {} composition table(s), group of order 6 non-abelian: {s3}",
            if orbit_fail.is_empty() { String::new() } else { format!(" except {orbit_fail:?}") },
            tables.len()
        ),
    )
}

fn sparse(k: &FieldTowerCtx, terms: &[(usize, i64)]) -> HyperCurve {
    let mut v = vec![0i64; terms.iter().map(|t| t.0).max().unwrap() + 1];
    for &(i, a) in terms {
        v[i] = a;
    }
    HyperCurve::new(k, Poly::from_ints(k, &v)).expect("square-free")
}

fn criterion8() -> Outcome {
    let mut bad = Vec::new();
    let mut residues_yes = BTreeSet::new();
    let mut residues_no = BTreeSet::new();
    for p in primes(12, 200) {
        let k = field(p);
        if is_superspecial(&k, &sparse(&k, &[(12, 1), (0, 1)])) != (p % 12 == 11) {
            bad.push(format!("x^12+1 at {p}"));
        }
        if is_superspecial(&k, &sparse(&k, &[(11, 1), (1, 1)])) != matches!(p % 20, 11 | 19) {
            bad.push(format!("x^11+x at {p}"));
        }
        if is_superspecial(&k, &sparse(&k, &[(11, 1), (0, 1)])) {
            residues_yes.insert(p % 11);
        } else {
            residues_no.insert(p % 11);
        }
    }
    let x11 = residues_yes == BTreeSet::from([10]) && !residues_no.contains(&10);
    outcome(
        bad.is_empty() && x11,
        format!(
            "x^12+1 iff p = 11 mod 12 and x^11+x iff p = 11, 19 mod 20 hold{}; x^11+1 observed superspecial iff p = 10 mod 11 ({}), printed as \"p = 11 (mod 10)\"",
            if bad.is_empty() { String::new() } else { format!(" except {bad:?}") },
            if x11 { "confirmed" } else { "NOT confirmed" }
        ),
    )
}

fn criterion9(rows: &[(RowComparison, ReportDoc)]) -> Outcome {
    let mut bad = Vec::new();
    let mut roots = 0;
    for p in primes(13, 300) {
        let k = field(p);
        let s = enumerate_supersingular_j(&k);
        let [f1, f2, f3] = type9_series(&k).expect("denominators coprime to p");
        for d in distinct_roots(&k, &f3).expect("nonzero") {
            if d.is_zero() || d == k.one() {
                continue;
            }
            roots += 1;
            let series = f1.eval(&k, d).is_zero() && f2.eval(&k, d).is_zero();
            if series != type9_four_curve_test(&k, &s, d) {
                bad.push(format!("δ = {} at p = {p}", k.encode(d)));
            }
        }
    }
    for (c, _) in rows {
        let k = field(c.p);
        let s = enumerate_supersingular_j(&k);
        let j12 = s.contains(k.div(k.from_i64(16384), k.from_i64(5)));
        for row in [&c.printed, &c.computed] {
            if (row.get(TypeLabel::T11) == 1) != (c.p % 12 == 11)
                || (row.get(TypeLabel::T12) == 1) != j12
            {
                bad.push(format!("Type 11/12 columns at p = {}", c.p));
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!("{roots} roots of the Legendre Hasse polynomial for p < 300 agree under both criteria; Type 11 and 12 columns agree for p < 200{}", failures(&bad)),
    )
}

fn criterion10(rows: &[(RowComparison, ReportDoc)]) -> Outcome {
    let max = |f: &dyn Fn(&ReportDoc) -> usize| {
        rows.iter()
            .map(|(_, d)| (f(d), d.p))
            .max()
            .unwrap_or((0, 0))
    };
    let t7 = max(&|d| d.meta.monitors.type7_params);
    let t9 = max(&|d| d.meta.monitors.type9_gcd_degree);
    let t10 = max(&|d| d.meta.monitors.type10_params);
    let worst = t7.0.max(t9.0).max(t10.0);
    outcome(
        worst <= MONITOR_BOUND,
        format!(
            "max stored A (x^4+1 family) {} at p={}, max deg F {} at p={}, max stored A (tetrahedral family) {} at p={}; bound {MONITOR_BOUND}",
            t7.0, t7.1, t9.0, t9.1, t10.0, t10.1
        ),
    )
}

fn main() {
    let start = Instant::now();
    let small = recount(13, 100);
    let medium = recount(101, 199);
    let all: Vec<_> = small.iter().chain(&medium).cloned().collect();

    let mut results: BTreeMap<u32, (&str, Outcome)> = BTreeMap::new();
    results.insert(1, ("table rows 13..100", table_criterion(&small)));
    results.insert(2, ("table rows 101..199", table_criterion(&medium)));
    results.insert(3, ("exception list 23 <= p < 200", criterion3(&all)));
    results.insert(4, ("decomposition vs Hasse-Witt", criterion4()));
    results.insert(5, ("genus-2 graph vs brute force", criterion5()));
    results.insert(6, ("supersingular j-invariants", criterion6()));
    results.insert(7, ("transform orbits vs keys", criterion7(&all)));
    results.insert(8, ("congruences", criterion8()));
    results.insert(9, ("x^6 family criteria and Type 11/12", criterion9(&all)));
    results.insert(10, ("heuristic monitors", criterion10(&all)));

    let mut failed = 0;
    for (n, (name, o)) in &results {
        println!(
            "{} criterion {n} ({name}): {}",
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
        failed += (!o.pass) as usize;
    }
    println!(
        "acceptance: {} of {} criteria pass in {:.1?}",
        results.len() - failed,
        results.len(),
        start.elapsed()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}

fn failures(bad: &[String]) -> String {
    if bad.is_empty() {
        String::new()
    } else {
        format!("; failures: {}", bad.join(", "))
    }
}
