//! Every superspecial H_{a,b,c}, read off the genus-2 catalog.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use super::habc::{build_habc, elliptic_factors, habc_transforms, HabcParams};
use super::record::Source;
use super::Candidate;
use crate::curve::{branch_set, canonical_key, CanonicalKey, GroupLabel};
use crate::elliptic::SupersingularSet;
use crate::error::Result;
use crate::field::FieldTowerCtx;
use crate::ssp2::{rosenhain_expansions, Ssp2Catalog};

#[derive(Clone, Debug)]
pub struct Type41Outcome {
    /// One candidate per isomorphism class, of every type, sorted by key.
    pub candidates: Vec<Candidate>,
    /// Rosenhain expansions examined.
    pub expansions: usize,
    /// Distinct parameter sets {a, b, c} with all three elliptic factors supersingular.
    pub params: usize,
    /// C2³ classes found by keeping one representative per transform orbit.
    pub orbit_classes: usize,
    /// C2³ classes found by canonical key.
    pub key_classes: usize,
    /// No two orbit representatives share a canonical key.
    pub orbit_keys_distinct: bool,
}

impl Type41Outcome {
    /// Whether the two deduplications produced the same classes.
    pub fn orbit_dedup_agrees(&self) -> bool {
        self.orbit_keys_distinct && self.orbit_classes == self.key_classes
    }
}

/// Steps 1 and 2: all valid (a, b, c) over the catalog.
fn collect_params(
    k: &FieldTowerCtx,
    s: &SupersingularSet,
    catalog: &Ssp2Catalog,
) -> (usize, BTreeSet<HabcParams>) {
    catalog
        .entries
        .par_iter()
        .map(|e| {
            let exps = rosenhain_expansions(k, &e.triple);
            let n = exps.len();
            let found: BTreeSet<HabcParams> = exps
                .into_iter()
                .filter(|t| elliptic_factors(k, t).iter().all(|j| s.contains(j.0)))
                .map(|t| HabcParams::from_rosenhain(k, &t))
                .collect();
            (n, found)
        })
        .reduce(
            || (0, BTreeSet::new()),
            |(n1, mut a), (n2, b)| {
                a.extend(b);
                (n1 + n2, a)
            },
        )
}

/// Step 3 done by transform orbits: keeps a parameter set unless one of its
/// six images is already kept.
fn orbit_representatives(k: &FieldTowerCtx, params: &[HabcParams]) -> Vec<HabcParams> {
    let mut kept = BTreeSet::new();
    let mut reps = Vec::new();
    for q in params {
        if habc_transforms(k, q).iter().any(|t| kept.contains(t)) {
            continue;
        }
        kept.insert(*q);
        reps.push(*q);
    }
    reps
}

/// Runs the H_{a,b,c} search over the catalog. The returned candidates cover
/// every type; the C2³ ones are the Type 4-1 classes.
pub fn enumerate_type41(
    k: &FieldTowerCtx,
    s: &SupersingularSet,
    catalog: &Ssp2Catalog,
) -> Result<Type41Outcome> {
    let (expansions, params) = collect_params(k, s, catalog);
    let keyed: Vec<(CanonicalKey, HabcParams)> = params
        .par_iter()
        .map(|q| Ok((canonical_key(k, &branch_set(k, &build_habc(k, q))?), *q)))
        .collect::<Result<_>>()?;
    let mut classes: BTreeMap<CanonicalKey, Vec<HabcParams>> = BTreeMap::new();
    for (key, q) in keyed {
        classes.entry(key).or_default().push(q);
    }
    let candidates: Vec<Candidate> = classes
        .par_iter()
        .map(|(_, qs)| {
            let q = qs[0];
            let [a, b, c] = q.encode(k);
            let p = BTreeMap::from([
                ("a".to_string(), a),
                ("b".to_string(), b),
                ("c".to_string(), c),
            ]);
            Candidate::new(k, build_habc(k, &q), p, Source::Habc)
        })
        .collect::<Result<_>>()?;

    let generic: Vec<(&Candidate, &Vec<HabcParams>)> = candidates
        .iter()
        .zip(classes.values())
        .filter(|(c, _)| c.tag.label == GroupLabel::C2Cubed)
        .collect();
    let mut generic_params: Vec<HabcParams> = generic
        .iter()
        .flat_map(|(_, qs)| qs.iter().copied())
        .collect();
    generic_params.sort();
    let reps = orbit_representatives(k, &generic_params);
    let rep_keys: BTreeSet<CanonicalKey> = reps
        .iter()
        .map(|q| Ok(canonical_key(k, &branch_set(k, &build_habc(k, q))?)))
        .collect::<Result<_>>()?;
    log::debug!(
        "p = {}: {expansions} expansions, {} parameter sets, {} classes, {} generic",
        k.p(),
        params.len(),
        candidates.len(),
        generic.len()
    );
    Ok(Type41Outcome {
        key_classes: generic.len(),
        orbit_classes: reps.len(),
        orbit_keys_distinct: rep_keys.len() == reps.len(),
        expansions,
        params: params.len(),
        candidates,
    })
}
