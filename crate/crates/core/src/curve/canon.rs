//! PGL_2 canonical forms of branch sets.
//!
//! Every ordered triple of distinct points is sent to (0, 1, ∞) and the
//! image set is sorted; the least sorted image over all triples is the
//! canonical form. Two sets get the same form exactly when a Möbius map
//! carries one onto the other, since any such map permutes the triples.

use std::fmt;

use super::hyper::BranchSet;
use super::p1::{MobiusMap, P1Point};
use crate::error::{Error, Result};
use crate::field::{FieldTowerCtx, Fp2Elem};

/// Byte encoding of a canonical form: a big-endian u16 point count, then
/// per point a tag byte (0 finite, 1 ∞) and the big-endian words c0, c1.
/// Byte order agrees with the order on sorted point lists.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn from_points(points: &[P1Point]) -> Self {
        let mut bytes = Vec::with_capacity(2 + 9 * points.len());
        bytes.extend_from_slice(&(points.len() as u16).to_be_bytes());
        for q in points {
            match q {
                P1Point::Finite(x) => {
                    bytes.push(0);
                    bytes.extend_from_slice(&x.c0.to_be_bytes());
                    bytes.extend_from_slice(&x.c1.to_be_bytes());
                }
                P1Point::Infinity => {
                    bytes.push(1);
                    bytes.extend_from_slice(&[0; 8]);
                }
            }
        }
        CanonicalKey(bytes)
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn points(&self) -> Vec<P1Point> {
        self.0[2..]
            .chunks_exact(9)
            .map(|c| match c[0] {
                0 => P1Point::Finite(Fp2Elem {
                    c0: u32::from_be_bytes(c[1..5].try_into().unwrap()),
                    c1: u32::from_be_bytes(c[5..9].try_into().unwrap()),
                }),
                _ => P1Point::Infinity,
            })
            .collect()
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn from_hex(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad canonical key {s:?}"));
        if !s.len().is_multiple_of(2) || !s.is_ascii() {
            return Err(bad());
        }
        let bytes = (0..s.len())
            .step_by(2)
            .map(|i| u8::from_str_radix(&s[i..i + 2], 16))
            .collect::<Result<Vec<u8>, _>>()
            .map_err(|_| bad())?;
        if bytes.len() < 2 {
            return Err(bad());
        }
        let n = u16::from_be_bytes([bytes[0], bytes[1]]) as usize;
        if bytes.len() != 2 + 9 * n || bytes[2..].chunks_exact(9).any(|c| c[0] > 1) {
            return Err(bad());
        }
        Ok(CanonicalKey(bytes))
    }
}

impl serde::Serialize for CanonicalKey {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

impl<'de> serde::Deserialize<'de> for CanonicalKey {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        CanonicalKey::from_hex(&s).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

/// Calls `visit` with every ordered triple of distinct indices below n.
pub(crate) fn for_each_ordered_triple(n: usize, mut visit: impl FnMut(usize, usize, usize)) {
    for i in 0..n {
        for j in 0..n {
            if j == i {
                continue;
            }
            for l in 0..n {
                if l != i && l != j {
                    visit(i, j, l);
                }
            }
        }
    }
}

/// The least sorted image of `b` over all normalizations.
pub fn canonical_form(k: &FieldTowerCtx, b: &BranchSet) -> Vec<P1Point> {
    let pts = b.points();
    assert!(pts.len() >= 3, "canonical form needs at least three points");
    let mut best: Option<Vec<P1Point>> = None;
    let mut img = Vec::with_capacity(pts.len());
    for_each_ordered_triple(pts.len(), |i, j, l| {
        let m = MobiusMap::to_standard(k, pts[i], pts[j], pts[l]).expect("points are distinct");
        img.clear();
        img.extend(pts.iter().map(|&q| m.apply(k, q)));
        img.sort_unstable();
        if best.as_ref().is_none_or(|cur| img < *cur) {
            best = Some(img.clone());
        }
    });
    best.expect("at least one triple")
}

pub fn canonical_key(k: &FieldTowerCtx, b: &BranchSet) -> CanonicalKey {
    CanonicalKey::from_points(&canonical_form(k, b))
}
