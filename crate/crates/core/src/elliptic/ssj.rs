//! The set S_p of supersingular j-invariants, found by walking the
//! 2-isogeny graph.

use std::collections::{BTreeSet, VecDeque};

use super::jinv::{hasse_polynomial, j_from_legendre, phi2_at, JInvariant};
use crate::error::{Error, Result};
use crate::field::{poly_roots, FieldTowerCtx, Fp2Elem};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SupersingularSet {
    p: u64,
    values: Vec<JInvariant>,
}

impl SupersingularSet {
    pub fn from_values(p: u64, mut values: Vec<JInvariant>) -> Self {
        values.sort();
        values.dedup();
        SupersingularSet { p, values }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn values(&self) -> &[JInvariant] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn contains(&self, j: Fp2Elem) -> bool {
        self.values.binary_search(&JInvariant(j)).is_ok()
    }

    /// One element encoding per line, sorted.
    pub fn payload_lines(&self, k: &FieldTowerCtx) -> Vec<String> {
        self.values.iter().map(|j| k.encode(j.0)).collect()
    }

    pub fn from_payload_lines<'a>(
        k: &FieldTowerCtx,
        lines: impl IntoIterator<Item = &'a str>,
    ) -> Result<Self> {
        let mut values = Vec::new();
        for line in lines {
            values.push(JInvariant(k.parse_elem(line.trim())?));
        }
        let n = values.len();
        let set = SupersingularSet::from_values(k.p(), values);
        if set.len() != n {
            return Err(Error::Cache("duplicate j-invariants in payload".into()));
        }
        Ok(set)
    }
}

/// ⌊p/12⌋ + ε, ε = 0, 1, 1, 2 for p ≡ 1, 5, 7, 11 (mod 12).
pub fn expected_supersingular_count(p: u64) -> usize {
    let eps = match p % 12 {
        1 => 0,
        5 | 7 => 1,
        11 => 2,
        _ => panic!("p = {p} is not a prime above 3"),
    };
    (p / 12) as usize + eps
}

/// The 2-isogenous j-invariants of j, with multiplicity.
pub fn two_isogenous(k: &FieldTowerCtx, j: Fp2Elem) -> Vec<Fp2Elem> {
    poly_roots(k, &phi2_at(k, j)).expect("Φ₂(X, j) is monic")
}

fn seed_j(k: &FieldTowerCtx) -> Fp2Elem {
    let p = k.p();
    if p % 4 == 3 {
        k.from_i64(1728)
    } else if p % 3 == 2 {
        k.zero()
    } else {
        let roots = poly_roots(k, &hasse_polynomial(k)).expect("nonzero polynomial");
        let lambda = roots
            .first()
            .copied()
            .expect("the Hasse polynomial splits over F_{p^2}");
        j_from_legendre(k, lambda)
            .expect("Hasse roots avoid 0 and 1")
            .0
    }
}

pub fn enumerate_supersingular_j(k: &FieldTowerCtx) -> SupersingularSet {
    let start = seed_j(k);
    let mut seen = BTreeSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(j) = queue.pop_front() {
        for nb in two_isogenous(k, j) {
            if seen.insert(nb) {
                queue.push_back(nb);
            }
        }
    }
    let set = SupersingularSet::from_values(k.p(), seen.into_iter().map(JInvariant).collect());
    log::debug!("p = {}: |S_p| = {}", k.p(), set.len());
    set
}

pub fn is_supersingular_j(j: Fp2Elem, s: &SupersingularSet) -> bool {
    s.contains(j)
}
