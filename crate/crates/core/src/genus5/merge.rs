//! Joining the enumeration paths into one classified list.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::families::{
    enumerate_parameterless, enumerate_type10, enumerate_type7, enumerate_type9, keys_of,
};
use super::record::{CurveRecord, Source, TypeLabel};
use super::type41::enumerate_type41;
use super::Candidate;
use crate::curve::{format_curve, is_superspecial, CanonicalKey, GroupLabel};
use crate::elliptic::SupersingularSet;
use crate::error::{Error, Result};
use crate::field::FieldTowerCtx;
use crate::ssp2::Ssp2Catalog;

/// Number of classes per type, for the types that were asked for.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct TypeCounts(pub BTreeMap<TypeLabel, usize>);

impl TypeCounts {
    pub fn get(&self, t: TypeLabel) -> Option<usize> {
        self.0.get(&t).copied()
    }

    pub fn all(&self) -> usize {
        self.0.values().sum()
    }
}

/// Quantities expected to stay bounded as p grows; reported, never asserted.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct Monitors {
    /// Distinct A values kept by the (x⁴+1)(x⁸−Ax⁴+1) search.
    pub type7_params: usize,
    pub type7_skipped: Option<String>,
    /// Degree of gcd(F1, F2, F3).
    pub type9_gcd_degree: usize,
    /// Distinct A values kept by the tetrahedral search.
    pub type10_params: usize,
    /// Distinct {a, b, c} found over the genus-2 catalog; absent when that
    /// search did not run.
    pub habc_params: Option<usize>,
}

/// Consistency checks between independent paths.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct Checks {
    /// Orbit and key deduplication of the C2³ classes agree.
    pub orbit_dedup_agrees: Option<bool>,
    /// The non-generic H_{a,b,c} classes are exactly the family classes.
    pub families_match_habc: Option<bool>,
    /// x¹² + 1 appears iff p ≡ 11 (mod 12).
    pub type15_congruence: bool,
    /// The Type 11 normal form appears iff p ≡ 11 (mod 12).
    pub type11_congruence: bool,
    /// The Type 12 normal form appears iff j = 16384/5 is supersingular.
    pub type12_criterion: bool,
}

impl Checks {
    pub fn all_hold(&self) -> bool {
        self.orbit_dedup_agrees != Some(false)
            && self.families_match_habc != Some(false)
            && self.type15_congruence
            && self.type11_congruence
            && self.type12_criterion
    }
}

#[derive(Clone, Debug)]
pub struct Enumeration {
    pub p: u64,
    /// Sorted by canonical key.
    pub records: Vec<CurveRecord>,
    pub counts: TypeCounts,
    pub monitors: Monitors,
    pub checks: Checks,
}

/// Unions candidate lists by canonical key, names every class by its full
/// automorphism group and re-verifies each with the Hasse–Witt matrix.
pub fn classify_and_merge(k: &FieldTowerCtx, lists: &[&[Candidate]]) -> Result<Vec<CurveRecord>> {
    let mut by_key: BTreeMap<&CanonicalKey, Vec<&Candidate>> = BTreeMap::new();
    for c in lists.iter().flat_map(|l| l.iter()) {
        by_key.entry(&c.key).or_default().push(c);
    }
    by_key
        .into_par_iter()
        .map(|(key, cands)| {
            let first = cands[0];
            if let Some(other) = cands.iter().find(|c| c.tag != first.tag) {
                return Err(Error::Integrity(format!(
                    "key {key} classified as {} by {:?} and as {} by {:?}",
                    first.tag.label, first.source, other.tag.label, other.source
                )));
            }
            let type_label = first.type_label().ok_or_else(|| {
                Error::Integrity(format!(
                    "key {key} has group {} without C2³",
                    first.tag.label
                ))
            })?;
            // the most specific source names the parameters
            let chosen = cands.iter().max_by_key(|c| c.source).expect("nonempty");
            if !is_superspecial(k, &chosen.curve) {
                return Err(Error::Integrity(format!(
                    "{} is not superspecial",
                    format_curve(k, &chosen.curve)
                )));
            }
            let found_by: BTreeSet<Source> = cands.iter().map(|c| c.source).collect();
            Ok(CurveRecord {
                type_label,
                p: k.p(),
                params: chosen.params.clone(),
                model: format_curve(k, &chosen.curve),
                aut: first.tag.label,
                key: key.clone(),
                found_by: found_by.into_iter().collect(),
            })
        })
        .collect()
}

/// Runs every path for p. The H_{a,b,c} search needs the genus-2 catalog and
/// is the only way to count Type 4-1; without it `types` must exclude 4-1.
pub fn enumerate_genus5(
    k: &FieldTowerCtx,
    s: &SupersingularSet,
    catalog: Option<&Ssp2Catalog>,
    types: &BTreeSet<TypeLabel>,
) -> Result<Enumeration> {
    if catalog.is_none() && types.contains(&TypeLabel::T4_1) {
        return Err(Error::RejectedInput(
            "Type 4-1 needs the genus-2 catalog".into(),
        ));
    }
    let t7 = enumerate_type7(k, s)?;
    let t9 = enumerate_type9(k)?;
    let t10 = enumerate_type10(k, s)?;
    let nf = enumerate_parameterless(k)?;
    let habc = catalog.map(|c| enumerate_type41(k, s, c)).transpose()?;

    let mut monitors = Monitors {
        type7_params: t7.stored_params,
        type7_skipped: t7.skipped.clone(),
        type9_gcd_degree: t9.gcd_degree.unwrap_or(0),
        type10_params: t10.stored_params,
        habc_params: None,
    };
    let family_lists = [
        &t7.candidates[..],
        &t9.candidates,
        &t10.candidates,
        &nf.candidates,
    ];
    let mut checks = Checks::default();
    let mut lists: Vec<&[Candidate]> = family_lists.to_vec();
    if let Some(h) = &habc {
        monitors.habc_params = Some(h.params);
        checks.orbit_dedup_agrees = Some(h.orbit_dedup_agrees());
        let special = keys_of(
            h.candidates
                .iter()
                .filter(|c| c.tag.label != GroupLabel::C2Cubed),
        );
        let fam = keys_of(family_lists.iter().flat_map(|l| l.iter()));
        checks.families_match_habc = Some(special == fam);
        if special != fam {
            log::warn!(
                "p = {}: {} special classes from H_abc, {} from the families",
                k.p(),
                special.len(),
                fam.len()
            );
        }
        lists.push(&h.candidates);
    }
    let merged = classify_and_merge(k, &lists)?;

    let has = |t: TypeLabel| nf.candidates.iter().any(|c| c.type_label() == Some(t));
    let p11 = k.p() % 12 == 11;
    checks.type15_congruence = has(TypeLabel::T15) == p11;
    checks.type11_congruence = has(TypeLabel::T11) == p11;
    let j12 = k.div(k.from_i64(16384), k.from_i64(5));
    checks.type12_criterion = has(TypeLabel::T12) == s.contains(j12);

    let records: Vec<CurveRecord> = merged
        .into_iter()
        .filter(|r| types.contains(&r.type_label))
        .collect();
    let mut counts = TypeCounts(types.iter().map(|&t| (t, 0)).collect());
    for r in &records {
        *counts.0.get_mut(&r.type_label).expect("filtered") += 1;
    }
    Ok(Enumeration {
        p: k.p(),
        records,
        counts,
        monitors,
        checks,
    })
}
