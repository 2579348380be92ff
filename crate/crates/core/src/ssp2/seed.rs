//! Starting points for the Richelot walk.
//!
//! Four constructions are tried, each over every j in S_p:
//!
//! * `ClassThree`: {0, 1, −1, δ, 1/δ, ∞} with 64(2δ−1)³(2δ+1)³ = j δ².
//! * `ClassTwo`: {0, 1, δ, (δ−1)/δ, 1/(1−δ), ∞} with δ a Legendre
//!   parameter of j.
//! * `PrimeFieldScan`: Rosenhain triples over F_p, in a fixed order, up to
//!   a fixed budget. Only run when the two families above find nothing.
//! * `Gluing`: y² = (x² − 1)(x² − b)(x² − c), whose quotients by x ↦ −x are
//!   branched over {1, b, c, ∞} and {0, 1, b, c}. Choosing b and c so that
//!   both are supersingular reaches every Jacobian next to a product
//!   surface. The superspecial graph is connected, so a walk that starts
//!   from these cannot miss a component.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::richelot::{rosenhain_from_ext_points, XPoint};
use super::rosenhain::{rosenhain_of, rosenhain_superspecial, RosenhainTriple};
use crate::curve::{BranchSet, CanonicalKey, P1Point};
use crate::elliptic::{legendre_params_of_j, SupersingularSet};
use crate::error::{Error, Result};
use crate::field::{distinct_roots, ExtField, FieldTowerCtx, Fp2Elem, Poly};

/// Triples examined by the prime-field scan before giving up.
pub const PRIME_FIELD_SCAN_BUDGET: usize = 200_000;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SeedStrategy {
    ClassThree,
    ClassTwo,
    PrimeFieldScan,
    Gluing,
}

impl SeedStrategy {
    pub fn as_str(self) -> &'static str {
        match self {
            SeedStrategy::ClassThree => "class-three",
            SeedStrategy::ClassTwo => "class-two",
            SeedStrategy::PrimeFieldScan => "prime-field-scan",
            SeedStrategy::Gluing => "gluing",
        }
    }
}

/// What one strategy tried and what survived the Hasse–Witt check.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SeedRecord {
    pub strategy: SeedStrategy,
    pub candidates: usize,
    pub verified: usize,
}

#[derive(Clone, Debug)]
pub struct Seeds {
    /// Distinct verified seeds, sorted by key.
    pub nodes: Vec<(CanonicalKey, RosenhainTriple)>,
    pub provenance: Vec<SeedRecord>,
}

struct Collector<'a> {
    k: &'a FieldTowerCtx,
    found: BTreeMap<CanonicalKey, RosenhainTriple>,
}

impl Collector<'_> {
    /// Canonicalizes and verifies each candidate; returns the stage record.
    fn stage(
        &mut self,
        strategy: SeedStrategy,
        cands: Vec<(CanonicalKey, RosenhainTriple)>,
    ) -> SeedRecord {
        let candidates = cands.len();
        let mut unique = BTreeMap::new();
        unique.extend(cands);
        let mut verified = 0;
        for (key, t) in unique {
            if rosenhain_superspecial(self.k, &t) {
                verified += 1;
                self.found.entry(key).or_insert(t);
            }
        }
        log::debug!(
            "p = {}: seed strategy {} kept {verified} of {candidates}",
            self.k.p(),
            strategy.as_str()
        );
        SeedRecord {
            strategy,
            candidates,
            verified,
        }
    }
}

fn finite(x: Fp2Elem) -> P1Point {
    P1Point::Finite(x)
}

fn class_three(k: &FieldTowerCtx, s: &SupersingularSet) -> Vec<(CanonicalKey, RosenhainTriple)> {
    let quartic = Poly::from_ints(k, &[-1, 0, 4])
        .pow(k, 3)
        .scale(k, k.from_i64(64));
    let mut out = Vec::new();
    for j in s.values() {
        let f = quartic.sub(k, &Poly::monomial(j.0, 2));
        for d in distinct_roots(k, &f).expect("nonzero sextic") {
            if d.is_zero() || d == k.one() || d == k.from_i64(-1) {
                continue;
            }
            let pts = vec![
                finite(k.zero()),
                finite(k.one()),
                finite(k.from_i64(-1)),
                finite(d),
                finite(k.inv(d)),
                P1Point::Infinity,
            ];
            if let Ok(b) = BranchSet::new(pts) {
                out.extend(rosenhain_of(k, &b).ok());
            }
        }
    }
    out
}

fn class_two(k: &FieldTowerCtx, s: &SupersingularSet) -> Vec<(CanonicalKey, RosenhainTriple)> {
    let mut out = Vec::new();
    for j in s.values() {
        let mut ds = legendre_params_of_j(k, j.0);
        ds.dedup();
        for d in ds {
            let Some(inv_1md) = k.try_inv(k.sub(k.one(), d)) else {
                continue;
            };
            let Some(inv_d) = k.try_inv(d) else { continue };
            let pts = vec![
                finite(k.zero()),
                finite(k.one()),
                finite(d),
                finite(k.mul(k.sub(d, k.one()), inv_d)),
                finite(inv_1md),
                P1Point::Infinity,
            ];
            if let Ok(b) = BranchSet::new(pts) {
                out.extend(rosenhain_of(k, &b).ok());
            }
        }
    }
    out
}

fn prime_field_scan(k: &FieldTowerCtx) -> Vec<(CanonicalKey, RosenhainTriple)> {
    let p = k.p() as i64;
    let mut out = Vec::new();
    let mut tried = 0;
    'scan: for a in 2..p {
        for b in (a + 1)..p {
            for c in (b + 1)..p {
                if tried == PRIME_FIELD_SCAN_BUDGET {
                    break 'scan;
                }
                tried += 1;
                let t = RosenhainTriple::new(k.from_i64(a), k.from_i64(b), k.from_i64(c))
                    .expect("distinct, not 0 or 1");
                if rosenhain_superspecial(k, &t) {
                    out.push((t.canonical_key(k), t));
                }
            }
        }
    }
    out
}

fn gluing(k: &FieldTowerCtx, s: &SupersingularSet) -> Result<Vec<(CanonicalKey, RosenhainTriple)>> {
    let e = ExtField::new(k);
    let lambdas: Vec<Vec<Fp2Elem>> = s
        .values()
        .iter()
        .map(|j| {
            let mut v = legendre_params_of_j(k, j.0);
            v.dedup();
            v
        })
        .collect();
    let mut out = Vec::new();
    for (i1, l1s) in lambdas.iter().enumerate() {
        for l2s in &lambdas[i1..] {
            for &l1 in l1s {
                for &l2 in l2s {
                    // {1, b, c, ∞} has parameter l1 = (c − 1)/(b − 1), and
                    // {0, 1, b, c} sends to (0, 1, ∞, l2) with c ↦ ∞
                    let b = k.div(k.mul(l2, k.sub(l1, k.one())), l1);
                    let c = k.add(k.one(), k.mul(l1, k.sub(b, k.one())));
                    if [b, c].iter().any(|&v| v.is_zero() || v == k.one()) || b == c {
                        continue;
                    }
                    let (rb, rc) = (e.sqrt_of_base(b), e.sqrt_of_base(c));
                    let pts = [
                        XPoint::Fin(e.one()),
                        XPoint::Fin(e.neg(e.one())),
                        XPoint::Fin(rb),
                        XPoint::Fin(e.neg(rb)),
                        XPoint::Fin(rc),
                        XPoint::Fin(e.neg(rc)),
                    ];
                    out.push(rosenhain_from_ext_points(&e, &pts)?);
                }
            }
        }
    }
    Ok(out)
}

/// Verified superspecial genus-2 seeds for p, with per-strategy provenance.
pub fn find_seed_ssp2(k: &FieldTowerCtx, s: &SupersingularSet) -> Result<Seeds> {
    if k.p() <= 11 {
        return Err(Error::RejectedInput(format!(
            "p must exceed 11, got {}",
            k.p()
        )));
    }
    let mut col = Collector {
        k,
        found: BTreeMap::new(),
    };
    let mut provenance = vec![
        col.stage(SeedStrategy::ClassThree, class_three(k, s)),
        col.stage(SeedStrategy::ClassTwo, class_two(k, s)),
    ];
    if col.found.is_empty() {
        provenance.push(col.stage(SeedStrategy::PrimeFieldScan, prime_field_scan(k)));
    }
    provenance.push(col.stage(SeedStrategy::Gluing, gluing(k, s)?));
    if col.found.is_empty() {
        let tried = provenance
            .iter()
            .map(|r| r.strategy.as_str())
            .collect::<Vec<_>>()
            .join(", ");
        return Err(Error::BootstrapFailure { p: k.p(), tried });
    }
    Ok(Seeds {
        nodes: col.found.into_iter().collect(),
        provenance,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elliptic::enumerate_supersingular_j;

    fn seeds(p: u64) -> Seeds {
        let k = FieldTowerCtx::new(p).unwrap();
        find_seed_ssp2(&k, &enumerate_supersingular_j(&k)).unwrap()
    }

    #[test]
    fn seeds_exist_at_23_and_37() {
        for p in [23, 37] {
            let s = seeds(p);
            assert!(!s.nodes.is_empty(), "p = {p}");
            assert!(s
                .provenance
                .iter()
                .any(|r| r.strategy == SeedStrategy::Gluing && r.verified > 0));
        }
    }

    #[test]
    fn every_gluing_candidate_is_superspecial() {
        for p in [13, 29, 41] {
            let k = FieldTowerCtx::new(p).unwrap();
            let s = enumerate_supersingular_j(&k);
            let cands = gluing(&k, &s).unwrap();
            assert!(!cands.is_empty());
            for (key, t) in cands {
                assert!(rosenhain_superspecial(&k, &t), "p = {p}");
                assert_eq!(t.canonical_key(&k), key);
            }
        }
    }

    #[test]
    fn scan_finds_prime_field_seeds() {
        let k = FieldTowerCtx::new(23).unwrap();
        let found = prime_field_scan(&k);
        assert!(!found.is_empty());
        assert!(found.iter().all(|(_, t)| rosenhain_superspecial(&k, t)));
    }
}
