//! Brute force over every Rosenhain triple, for checking the graph walk.

use std::collections::BTreeSet;

use rayon::prelude::*;

use super::rosenhain::RosenhainTriple;
use crate::curve::CanonicalKey;
use crate::error::{Error, Result};
use crate::field::{FieldTowerCtx, Fp2Elem, Poly};

/// Largest p scanned over F_{p^2}.
pub const MAX_P_FP2: u64 = 23;
/// Largest p scanned over F_p.
pub const MAX_P_FP: u64 = 61;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OracleDomain {
    Fp,
    Fp2,
}

/// Canonical keys of every superspecial y² = x(x−1)(x−λ)(x−μ)(x−ν) with
/// λ, μ, ν in the domain.
pub fn exhaustive_ssp2_oracle(
    k: &FieldTowerCtx,
    domain: OracleDomain,
) -> Result<BTreeSet<CanonicalKey>> {
    let p = k.p();
    let limit = match domain {
        OracleDomain::Fp => MAX_P_FP,
        OracleDomain::Fp2 => MAX_P_FP2,
    };
    if p > limit {
        return Err(Error::CostGuard(format!(
            "exhaustive {domain:?} scan is limited to p <= {limit}, got p = {p}"
        )));
    }
    let vals: Vec<Fp2Elem> = match domain {
        OracleDomain::Fp => k.prime_field_elements().collect(),
        OracleDomain::Fp2 => k.elements().collect(),
    };
    let vals: Vec<Fp2Elem> = vals
        .into_iter()
        .filter(|v| !v.is_zero() && *v != k.one())
        .collect();
    let e = ((p - 1) / 2) as usize;
    let p = p as usize;
    let targets = [p - 1, p - 2, 2 * p - 1, 2 * p - 2];
    // (x − ν)^e = Σ C(e, i) (−ν)^(e−i) x^i
    let binom: Vec<Fp2Elem> = {
        let mut v = vec![k.one()];
        for i in 0..e {
            let next = k.div(
                k.mul(v[i], k.from_u64((e - i) as u64)),
                k.from_u64(i as u64 + 1),
            );
            v.push(next);
        }
        v
    };
    let n = vals.len();
    let hits: Vec<RosenhainTriple> = (0..n)
        .into_par_iter()
        .flat_map_iter(|a| {
            let mut local = Vec::new();
            for b in (a + 1)..n {
                let (l, m) = (vals[a], vals[b]);
                let quartic = Poly::from_roots(k, &[k.zero(), k.one(), l, m]);
                let g = quartic.pow_trunc(k, e as u64, 2 * p - 1);
                let gc = |i: usize| g.coeff(i);
                for &nu in &vals[b + 1..] {
                    let mneg = k.neg(nu);
                    let mut pw = vec![k.one(); e + 1];
                    for i in 1..=e {
                        pw[i] = k.mul(pw[i - 1], mneg);
                    }
                    let h: Vec<Fp2Elem> = (0..=e).map(|i| k.mul(binom[i], pw[e - i])).collect();
                    let zero_at = |t: usize| {
                        h.iter()
                            .enumerate()
                            .take(e.min(t) + 1)
                            .fold(Fp2Elem::ZERO, |s, (i, &hi)| k.add(s, k.mul(hi, gc(t - i))))
                            .is_zero()
                    };
                    if targets.iter().all(|&t| zero_at(t)) {
                        local.push(RosenhainTriple::new(l, m, nu).expect("distinct, not 0 or 1"));
                    }
                }
            }
            local
        })
        .collect();
    Ok(hits
        .par_iter()
        .map(|t| t.canonical_key(k))
        .collect::<Vec<_>>()
        .into_iter()
        .collect())
}
