//! Reduced and full automorphism groups of hyperelliptic curves.
//!
//! The reduced group is the stabilizer of the branch set in PGL_2(F_{p^2}).
//! Each reduced automorphism x -> (ax+b)/(cx+d) lifts to the pair
//! (x, y) -> (M(x), ±e·y/(cx+d)^(g+1)) with e^2 = F(ax+b, cx+d)/F(x, 1),
//! F the binary form of f. The constant e may only exist in F_{p^4}; the
//! group it generates is the geometric one either way.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::canon::{canonical_key, for_each_ordered_triple};
use super::hyper::{branch_set, BranchSet, HyperCurve};
use super::p1::MobiusMap;
use crate::error::{Error, Result};
use crate::field::{ExtElem, ExtField, FieldTowerCtx, Fp2Elem, Poly};

/// The stabilizer of `b` in PGL_2(F_{p^2}), sorted, identity included.
pub fn reduced_automorphisms(k: &FieldTowerCtx, b: &BranchSet) -> Vec<MobiusMap> {
    let pts = b.points();
    assert!(pts.len() >= 3, "need at least three branch points");
    let src = MobiusMap::to_standard(k, pts[0], pts[1], pts[2]).expect("distinct points");
    let mut out = Vec::new();
    for_each_ordered_triple(pts.len(), |i, j, l| {
        let dst = MobiusMap::to_standard(k, pts[i], pts[j], pts[l]).expect("distinct points");
        let m = dst.inverse(k).compose(k, &src);
        if pts.iter().all(|&q| b.contains(&m.apply(k, q))) {
            out.push(m);
        }
    });
    out.sort();
    out
}

/// The seventeen full automorphism groups of genus-5 hyperelliptic curves
/// in characteristic p > 11.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum GroupLabel {
    C2,
    C2Sq,
    C4,
    C6,
    C2Cubed,
    C2xC4,
    D12,
    C3sdC4,
    C2SqsdC4,
    D20,
    C2xD12,
    C2xA4,
    A4sdC4,
    C2xA5,
    C22,
    C4xD10,
    D12sdC4,
}

impl GroupLabel {
    pub const ALL: [GroupLabel; 17] = [
        GroupLabel::C2,
        GroupLabel::C2Sq,
        GroupLabel::C4,
        GroupLabel::C6,
        GroupLabel::C2Cubed,
        GroupLabel::C2xC4,
        GroupLabel::D12,
        GroupLabel::C3sdC4,
        GroupLabel::C2SqsdC4,
        GroupLabel::D20,
        GroupLabel::C2xD12,
        GroupLabel::C2xA4,
        GroupLabel::A4sdC4,
        GroupLabel::C2xA5,
        GroupLabel::C22,
        GroupLabel::C4xD10,
        GroupLabel::D12sdC4,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            GroupLabel::C2 => "C2",
            GroupLabel::C2Sq => "C2²",
            GroupLabel::C4 => "C4",
            GroupLabel::C6 => "C6",
            GroupLabel::C2Cubed => "C2³",
            GroupLabel::C2xC4 => "C2×C4",
            GroupLabel::D12 => "D12",
            GroupLabel::C3sdC4 => "C3⋊C4",
            GroupLabel::C2SqsdC4 => "C2²⋊C4",
            GroupLabel::D20 => "D20",
            GroupLabel::C2xD12 => "C2×D12",
            GroupLabel::C2xA4 => "C2×A4",
            GroupLabel::A4sdC4 => "A4⋊C4",
            GroupLabel::C2xA5 => "C2×A5",
            GroupLabel::C22 => "C22",
            GroupLabel::C4xD10 => "C4×D10",
            GroupLabel::D12sdC4 => "D12⋊C4",
        }
    }

    pub fn order(self) -> usize {
        match self {
            GroupLabel::C2 => 2,
            GroupLabel::C2Sq | GroupLabel::C4 => 4,
            GroupLabel::C6 => 6,
            GroupLabel::C2Cubed | GroupLabel::C2xC4 => 8,
            GroupLabel::D12 | GroupLabel::C3sdC4 => 12,
            GroupLabel::C2SqsdC4 => 16,
            GroupLabel::D20 => 20,
            GroupLabel::C22 => 22,
            GroupLabel::C2xD12 | GroupLabel::C2xA4 => 24,
            GroupLabel::C4xD10 => 40,
            GroupLabel::A4sdC4 | GroupLabel::D12sdC4 => 48,
            GroupLabel::C2xA5 => 120,
        }
    }

    /// Whether the group has a subgroup isomorphic to C2³.
    pub fn contains_c2_cubed(self) -> bool {
        matches!(
            self,
            GroupLabel::C2Cubed
                | GroupLabel::C2SqsdC4
                | GroupLabel::C2xD12
                | GroupLabel::C2xA4
                | GroupLabel::A4sdC4
                | GroupLabel::C2xA5
                | GroupLabel::D12sdC4
        )
    }
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GroupLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GroupLabel::ALL
            .into_iter()
            .find(|g| g.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown group label {s:?}")))
    }
}

impl From<GroupLabel> for String {
    fn from(g: GroupLabel) -> String {
        g.as_str().to_string()
    }
}

impl TryFrom<String> for GroupLabel {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GroupTag {
    pub label: GroupLabel,
    pub order: usize,
    /// element order -> number of elements of that order
    pub order_histogram: BTreeMap<usize, usize>,
}

/// The full automorphism group as explicit (reduced map, lifting constant) pairs.
pub struct FullGroup<'a> {
    k: &'a FieldTowerCtx,
    genus: usize,
    maps: Vec<MobiusMap>,
    index: HashMap<MobiusMap, usize>,
    elems: Vec<(usize, ExtElem)>,
}

impl<'a> FullGroup<'a> {
    pub fn new(k: &'a FieldTowerCtx, h: &HyperCurve, b: &BranchSet) -> Self {
        let maps = reduced_automorphisms(k, b);
        let index: HashMap<MobiusMap, usize> =
            maps.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let ext = ExtField::new(k);
        let x0 = k
            .elements()
            .find(|&x| !h.f().eval(k, x).is_zero())
            .expect("f has fewer roots than field elements");
        let fx0 = h.f().eval(k, x0);
        let mut elems = Vec::with_capacity(2 * maps.len());
        for (i, m) in maps.iter().enumerate() {
            let num = h.eval_form(k, k.add(k.mul(m.a, x0), m.b), k.add(k.mul(m.c, x0), m.d));
            let e = ext.sqrt_of_base(k.div(num, fx0));
            elems.push((i, e));
            elems.push((i, ext.neg(e)));
        }
        FullGroup {
            k,
            genus: h.genus(),
            maps,
            index,
            elems,
        }
    }

    pub fn reduced_order(&self) -> usize {
        self.maps.len()
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn elements(&self) -> &[(usize, ExtElem)] {
        &self.elems
    }

    pub fn identity(&self) -> (usize, ExtElem) {
        (
            self.index[&MobiusMap::identity()],
            ExtField::new(self.k).one(),
        )
    }

    /// `x ∘ y`.
    pub fn mul(&self, x: (usize, ExtElem), y: (usize, ExtElem)) -> (usize, ExtElem) {
        let k = self.k;
        let ext = ExtField::new(k);
        let raw = self.maps[x.0].mul_raw(k, &self.maps[y.0]);
        let (n, lambda) = raw.normalized(k);
        let scale = k.inv(k.pow(lambda, (self.genus + 1) as u64));
        let e = ext.mul(ext.mul(x.1, y.1), ext.from_base(scale));
        (self.index[&n], e)
    }

    pub fn element_order(&self, x: (usize, ExtElem)) -> usize {
        let id = self.identity();
        let mut acc = x;
        let mut n = 1;
        while acc != id {
            acc = self.mul(acc, x);
            n += 1;
            assert!(n <= self.order(), "element order exceeds group order");
        }
        n
    }

    pub fn order_histogram(&self) -> BTreeMap<usize, usize> {
        let mut hist = BTreeMap::new();
        for &x in &self.elems {
            *hist.entry(self.element_order(x)).or_insert(0) += 1;
        }
        hist
    }

    /// Searches for three commuting involutions generating a copy of C2³.
    pub fn has_c2_cubed(&self) -> bool {
        let id = self.identity();
        let inv: Vec<_> = self
            .elems
            .iter()
            .copied()
            .filter(|&x| x != id && self.mul(x, x) == id)
            .collect();
        let commute = |a, b| self.mul(a, b) == self.mul(b, a);
        for (ia, &a) in inv.iter().enumerate() {
            for &b in &inv[ia + 1..] {
                if !commute(a, b) {
                    continue;
                }
                let ab = self.mul(a, b);
                if inv
                    .iter()
                    .any(|&c| c != a && c != b && c != ab && commute(a, c) && commute(b, c))
                {
                    return true;
                }
            }
        }
        false
    }
}

fn label_from_histogram(order: usize, hist: &BTreeMap<usize, usize>) -> Option<GroupLabel> {
    let count = |n: usize| hist.get(&n).copied().unwrap_or(0);
    let max_order = hist.keys().copied().max().unwrap_or(1);
    let label = match order {
        2 => GroupLabel::C2,
        4 if max_order == 2 => GroupLabel::C2Sq,
        4 => GroupLabel::C4,
        6 => GroupLabel::C6,
        8 if max_order == 2 => GroupLabel::C2Cubed,
        8 => GroupLabel::C2xC4,
        12 if count(4) > 0 => GroupLabel::C3sdC4,
        12 => GroupLabel::D12,
        16 => GroupLabel::C2SqsdC4,
        20 => GroupLabel::D20,
        22 => GroupLabel::C22,
        24 if count(2) == 7 => GroupLabel::C2xA4,
        24 if count(2) == 15 => GroupLabel::C2xD12,
        40 => GroupLabel::C4xD10,
        48 if max_order >= 12 => GroupLabel::D12sdC4,
        48 => GroupLabel::A4sdC4,
        120 => GroupLabel::C2xA5,
        _ => return None,
    };
    Some(label)
}

/// Normal forms of the groups that are pinned down by a single curve.
fn normal_forms(k: &FieldTowerCtx) -> Vec<(GroupLabel, Poly)> {
    let mut out = Vec::new();
    let mono = |c: &[(usize, Fp2Elem)]| {
        let deg = c.iter().map(|t| t.0).max().unwrap();
        let mut v = vec![Fp2Elem::ZERO; deg + 1];
        for &(i, a) in c {
            v[i] = k.add(v[i], a);
        }
        Poly::new(v)
    };
    let (one, i) = (k.one(), |n: i64| k.from_i64(n));
    out.push((GroupLabel::D12sdC4, mono(&[(12, one), (0, one)])));
    out.push((GroupLabel::C4xD10, mono(&[(11, one), (1, one)])));
    out.push((GroupLabel::C22, mono(&[(11, one), (0, one)])));
    // (x^4 + 1)(x^8 - 34 x^4 + 1)
    out.push((
        GroupLabel::A4sdC4,
        mono(&[(12, one), (8, i(-33)), (4, i(-33)), (0, one)]),
    ));
    if let Some((a, _)) = k.from_ratio(484, 5).and_then(|v| k.sqrt(v)) {
        let ma = k.neg(a);
        let two_a = k.mul_int(a, 2);
        out.push((
            GroupLabel::C2xA5,
            mono(&[
                (12, one),
                (10, ma),
                (8, i(-33)),
                (6, two_a),
                (4, i(-33)),
                (2, ma),
                (0, one),
            ]),
        ));
    }
    out
}

/// Computes the full automorphism group of a genus-5 curve and names it.
pub fn full_automorphism_type(k: &FieldTowerCtx, h: &HyperCurve) -> Result<GroupTag> {
    if h.genus() != 5 {
        return Err(Error::RejectedInput(format!(
            "group labels are defined for genus 5, got genus {}",
            h.genus()
        )));
    }
    let b = branch_set(k, h)?;
    let g = FullGroup::new(k, h, &b);
    let order = g.order();
    let order_histogram = g.order_histogram();
    let label = match label_from_histogram(order, &order_histogram) {
        Some(l) => l,
        None => {
            let key = canonical_key(k, &b);
            normal_forms(k)
                .into_iter()
                .find(|(_, f)| {
                    HyperCurve::new(k, f.clone())
                        .and_then(|c| branch_set(k, &c))
                        .is_ok_and(|nb| canonical_key(k, &nb) == key)
                })
                .map(|(l, _)| l)
                .ok_or_else(|| {
                    Error::Integrity(format!(
                        "no group label for order {order} with histogram {order_histogram:?}"
                    ))
                })?
        }
    };
    debug_assert_eq!(label.order(), order);
    Ok(GroupTag {
        label,
        order,
        order_histogram,
    })
}

/// Applies a Möbius change of variable to the curve: returns a polynomial g
/// with y^2 = g(x) isomorphic to y^2 = f(x), g(x) = (cx+d)^(2g+2) f(M(x)).
pub fn transport_curve(k: &FieldTowerCtx, h: &HyperCurve, m: &MobiusMap) -> Result<HyperCurve> {
    let n = 2 * h.genus() + 2;
    let num = Poly::new(vec![m.b, m.a]);
    let den = Poly::new(vec![m.d, m.c]);
    let mut acc = Poly::zero();
    for i in 0..=n {
        let c = h.f().coeff(i);
        if c.is_zero() {
            continue;
        }
        let term = num
            .pow(k, i as u64)
            .mul(k, &den.pow(k, (n - i) as u64))
            .scale(k, c);
        acc = acc.add(k, &term);
    }
    HyperCurve::new(k, acc)
}
