//! Genus-2 curves in Rosenhain form y² = x(x−1)(x−λ)(x−μ)(x−ν).

use std::collections::BTreeSet;

use crate::curve::{
    canonical_key, for_each_ordered_triple, BranchSet, CanonicalKey, HyperCurve, MobiusMap, P1Point,
};
use crate::error::{Error, Result};
use crate::field::{FieldTowerCtx, Fp2Elem, Poly};

/// An unordered triple {λ, μ, ν}, stored sorted.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct RosenhainTriple([Fp2Elem; 3]);

impl RosenhainTriple {
    pub fn new(a: Fp2Elem, b: Fp2Elem, c: Fp2Elem) -> Result<Self> {
        let mut v = [a, b, c];
        v.sort();
        if v[0] == v[1] || v[1] == v[2] {
            return Err(Error::RepeatedPoints);
        }
        if v.iter().any(|x| x.is_zero() || *x == Fp2Elem::ONE) {
            return Err(Error::RejectedInput(
                "Rosenhain parameters must avoid 0 and 1".into(),
            ));
        }
        Ok(RosenhainTriple(v))
    }

    pub fn values(&self) -> [Fp2Elem; 3] {
        self.0
    }

    pub fn branch_set(&self) -> BranchSet {
        let [l, m, n] = self.0;
        BranchSet::new(vec![
            P1Point::Finite(Fp2Elem::ZERO),
            P1Point::Finite(Fp2Elem::ONE),
            P1Point::Finite(l),
            P1Point::Finite(m),
            P1Point::Finite(n),
            P1Point::Infinity,
        ])
        .expect("validated triple")
    }

    pub fn poly(&self, k: &FieldTowerCtx) -> Poly {
        let [l, m, n] = self.0;
        Poly::from_roots(k, &[Fp2Elem::ZERO, Fp2Elem::ONE, l, m, n])
    }

    pub fn curve(&self, k: &FieldTowerCtx) -> HyperCurve {
        HyperCurve::new(k, self.poly(k)).expect("distinct roots")
    }

    pub fn canonical_key(&self, k: &FieldTowerCtx) -> CanonicalKey {
        canonical_key(k, &self.branch_set())
    }

    /// The triple stored in a canonical key of a six-point set: the three
    /// points other than 0, 1 and ∞.
    pub fn from_canonical_key(key: &CanonicalKey) -> Result<Self> {
        let pts = key.points();
        if pts.len() != 6 {
            return Err(Error::Integrity(format!(
                "expected 6 branch points, got {}",
                pts.len()
            )));
        }
        let rest: Vec<Fp2Elem> = pts
            .iter()
            .filter_map(|q| q.finite())
            .filter(|x| !x.is_zero() && *x != Fp2Elem::ONE)
            .collect();
        match rest.as_slice() {
            [a, b, c] => RosenhainTriple::new(*a, *b, *c),
            _ => Err(Error::Integrity(
                "canonical form does not contain 0, 1, ∞".into(),
            )),
        }
    }

    pub fn encode(&self, k: &FieldTowerCtx) -> String {
        let [a, b, c] = self.0;
        format!("{};{};{}", k.encode(a), k.encode(b), k.encode(c))
    }

    pub fn parse(k: &FieldTowerCtx, s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(';').collect();
        let [a, b, c] = parts.as_slice() else {
            return Err(Error::Parse(format!(
                "expected three ';'-separated values, got {s:?}"
            )));
        };
        RosenhainTriple::new(
            k.parse_elem(a.trim())?,
            k.parse_elem(b.trim())?,
            k.parse_elem(c.trim())?,
        )
    }
}

/// The Rosenhain triple of a six-point branch set, read off its canonical form.
pub fn rosenhain_of(k: &FieldTowerCtx, b: &BranchSet) -> Result<(CanonicalKey, RosenhainTriple)> {
    let key = canonical_key(k, b);
    let t = RosenhainTriple::from_canonical_key(&key)?;
    Ok((key, t))
}

/// Every unordered triple obtained by sending an ordered triple of branch
/// points to (0, 1, ∞); 120 / |reduced automorphism group| of them.
pub fn rosenhain_expansions(k: &FieldTowerCtx, t: &RosenhainTriple) -> Vec<RosenhainTriple> {
    let b = t.branch_set();
    let pts = b.points();
    let mut out = BTreeSet::new();
    for_each_ordered_triple(6, |i, j, l| {
        let m = MobiusMap::to_standard(k, pts[i], pts[j], pts[l]).expect("distinct points");
        let rest: Vec<Fp2Elem> = (0..6)
            .filter(|&r| r != i && r != j && r != l)
            .map(|r| {
                m.apply(k, pts[r])
                    .finite()
                    .expect("only the third point goes to ∞")
            })
            .collect();
        out.insert(
            RosenhainTriple::new(rest[0], rest[1], rest[2]).expect("images of distinct points"),
        );
    });
    out.into_iter().collect()
}

/// Zero test for the 2×2 Cartier-Manin matrix of a Rosenhain curve: the
/// coefficients of x^(p−1), x^(p−2), x^(2p−1), x^(2p−2) in f^((p−1)/2).
pub fn rosenhain_superspecial(k: &FieldTowerCtx, t: &RosenhainTriple) -> bool {
    let p = k.p() as usize;
    let pw = t.poly(k).pow_trunc(k, (k.p() - 1) / 2, 2 * p);
    [p - 1, p - 2, 2 * p - 1, 2 * p - 2]
        .iter()
        .all(|&i| pw.coeff(i).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::{is_superspecial, reduced_automorphisms};

    #[test]
    fn validation() {
        let k = FieldTowerCtx::new(23).unwrap();
        assert!(RosenhainTriple::new(k.from_i64(2), k.from_i64(2), k.from_i64(3)).is_err());
        assert!(RosenhainTriple::new(k.from_i64(0), k.from_i64(2), k.from_i64(3)).is_err());
        assert!(RosenhainTriple::new(k.from_i64(1), k.from_i64(2), k.from_i64(3)).is_err());
        let t = RosenhainTriple::new(k.from_i64(5), k.elem(2, 1), k.from_i64(3)).unwrap();
        assert_eq!(RosenhainTriple::parse(&k, &t.encode(&k)).unwrap(), t);
    }

    #[test]
    fn expansions_times_stabilizer() {
        let k = FieldTowerCtx::new(31).unwrap();
        let generic = RosenhainTriple::new(k.from_i64(5), k.elem(2, 1), k.elem(3, 7)).unwrap();
        let ex = rosenhain_expansions(&k, &generic);
        assert_eq!(
            ex.len() * reduced_automorphisms(&k, &generic.branch_set()).len(),
            120
        );
        let key = generic.canonical_key(&k);
        assert!(ex.iter().all(|t| t.canonical_key(&k) == key));
        // y² = x⁶ − 1 has a large reduced group
        let h = HyperCurve::new(&k, Poly::from_ints(&k, &[-1, 0, 0, 0, 0, 0, 1])).unwrap();
        let b = crate::curve::branch_set(&k, &h).unwrap();
        let (_, t) = rosenhain_of(&k, &b).unwrap();
        let n = rosenhain_expansions(&k, &t).len();
        assert!(n < 120);
        assert_eq!(n * reduced_automorphisms(&k, &b).len(), 120);
    }

    #[test]
    fn fast_test_matches_matrix() {
        let k = FieldTowerCtx::new(19).unwrap();
        let mut hits = 0;
        for a in 2..19 {
            for b in (a + 1)..19 {
                for c in (b + 1)..19 {
                    let t =
                        RosenhainTriple::new(k.from_i64(a), k.from_i64(b), k.from_i64(c)).unwrap();
                    let fast = rosenhain_superspecial(&k, &t);
                    assert_eq!(fast, is_superspecial(&k, &t.curve(&k)));
                    hits += usize::from(fast);
                }
            }
        }
        assert!(hits > 0);
    }
}
