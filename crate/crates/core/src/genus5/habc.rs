//! The three-parameter family y² = (x⁴+ax²+1)(x⁴+bx²+1)(x⁴+cx²+1).

use crate::curve::P1Point;
use crate::curve::{is_superspecial, HyperCurve};
use crate::elliptic::{j_from_four_points, JInvariant, SupersingularSet};
use crate::error::{Error, Result};
use crate::field::{FieldTowerCtx, Fp2Elem, Poly};
use crate::ssp2::{rosenhain_superspecial, RosenhainTriple};

/// An unordered triple {a, b, c}, stored sorted.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct HabcParams([Fp2Elem; 3]);

impl HabcParams {
    pub fn new(k: &FieldTowerCtx, a: Fp2Elem, b: Fp2Elem, c: Fp2Elem) -> Result<Self> {
        let mut v = [a, b, c];
        v.sort();
        if v[0] == v[1] || v[1] == v[2] {
            return Err(Error::RejectedInput(
                "a, b, c must be pairwise distinct".into(),
            ));
        }
        let two = k.from_i64(2);
        if v.iter().any(|&x| x == two || x == k.neg(two)) {
            return Err(Error::RejectedInput("a, b, c must avoid 2 and −2".into()));
        }
        Ok(HabcParams(v))
    }

    pub fn values(&self) -> [Fp2Elem; 3] {
        self.0
    }

    /// The images of 0, 1 and ∞ under λ = −(2 + a)/(2 − a).
    pub fn rosenhain(&self, k: &FieldTowerCtx) -> RosenhainTriple {
        let [a, b, c] = self.0.map(|x| lambda_of(k, x));
        RosenhainTriple::new(a, b, c).expect("λ is injective and avoids 0 and 1")
    }

    /// Inverse of [`HabcParams::rosenhain`]: a = 2(λ + 1)/(λ − 1).
    pub fn from_rosenhain(k: &FieldTowerCtx, t: &RosenhainTriple) -> Self {
        let [a, b, c] = t.values().map(|l| a_of(k, l));
        HabcParams::new(k, a, b, c).expect("a = ±2 would need λ = 1 or 0")
    }

    pub fn encode(&self, k: &FieldTowerCtx) -> [String; 3] {
        self.0.map(|x| k.encode(x))
    }
}

pub fn lambda_of(k: &FieldTowerCtx, a: Fp2Elem) -> Fp2Elem {
    let two = k.from_i64(2);
    k.neg(k.div(k.add(two, a), k.sub(two, a)))
}

pub fn a_of(k: &FieldTowerCtx, lambda: Fp2Elem) -> Fp2Elem {
    k.div(k.mul_int(k.add(lambda, k.one()), 2), k.sub(lambda, k.one()))
}

pub fn build_habc(k: &FieldTowerCtx, q: &HabcParams) -> HyperCurve {
    let f = q
        .values()
        .iter()
        .map(|&a| Poly::new(vec![k.one(), Fp2Elem::ZERO, a, Fp2Elem::ZERO, k.one()]))
        .fold(Poly::one(), |acc, g| acc.mul(k, &g));
    HyperCurve::new(k, f).expect("valid parameters give a square-free sextic in x²")
}

/// j-invariants of the three elliptic factors, branched over {λ,μ,ν,∞},
/// {0,λ,μ,ν} and {1,λ,μ,ν}, and the Rosenhain triple of the genus-2 factor.
pub fn decompose_habc(
    k: &FieldTowerCtx,
    q: &HabcParams,
) -> (JInvariant, JInvariant, JInvariant, RosenhainTriple) {
    let t = q.rosenhain(k);
    let [j1, j2, j3] = elliptic_factors(k, &t);
    (j1, j2, j3, t)
}

pub(crate) fn elliptic_factors(k: &FieldTowerCtx, t: &RosenhainTriple) -> [JInvariant; 3] {
    let [l, m, n] = t.values().map(P1Point::Finite);
    let quad =
        |extra: P1Point| j_from_four_points(k, [l, m, n, extra]).expect("four distinct points");
    [
        quad(P1Point::Infinity),
        quad(P1Point::Finite(k.zero())),
        quad(P1Point::Finite(k.one())),
    ]
}

/// Superspecial through the decomposition: three supersingular elliptic
/// factors and a superspecial genus-2 factor.
pub fn is_superspecial_genus5(k: &FieldTowerCtx, q: &HabcParams, s: &SupersingularSet) -> bool {
    let (j1, j2, j3, t) = decompose_habc(k, q);
    [j1, j2, j3].iter().all(|j| s.contains(j.0)) && rosenhain_superspecial(k, &t)
}

/// The same question answered by the 5×5 Cartier–Manin matrix.
pub fn is_superspecial_habc_direct(k: &FieldTowerCtx, q: &HabcParams) -> bool {
    is_superspecial(k, &build_habc(k, q))
}

/// x ↦ (12 − 2x)/(2 + x); an involution away from x = −2.
fn t3(k: &FieldTowerCtx, x: Fp2Elem) -> Fp2Elem {
    k.div(
        k.sub(k.from_i64(12), k.mul_int(x, 2)),
        k.add(k.from_i64(2), x),
    )
}

/// x ↦ (12 + 2x)/(2 − x).
fn t5(k: &FieldTowerCtx, x: Fp2Elem) -> Fp2Elem {
    k.div(
        k.add(k.from_i64(12), k.mul_int(x, 2)),
        k.sub(k.from_i64(2), x),
    )
}

/// The six parameter sets giving curves isomorphic to H_{a,b,c}, in the
/// order: identity, negation, t3, −t3, t5, −t5.
pub fn habc_transforms(k: &FieldTowerCtx, q: &HabcParams) -> [HabcParams; 6] {
    let v = q.values();
    let map = |f: &dyn Fn(Fp2Elem) -> Fp2Elem| {
        let [a, b, c] = v.map(f);
        HabcParams::new(k, a, b, c).expect("the transforms preserve validity")
    };
    [
        *q,
        map(&|x| k.neg(x)),
        map(&|x| t3(k, x)),
        map(&|x| k.neg(t3(k, x))),
        map(&|x| t5(k, x)),
        map(&|x| k.neg(t5(k, x))),
    ]
}

/// Entry (i, j) is the index of T_i ∘ T_j among the six transforms, read
/// off the images of `q`. `None` when the six images of `q` are not distinct.
pub fn transform_composition_table(k: &FieldTowerCtx, q: &HabcParams) -> Option<[[usize; 6]; 6]> {
    let images = habc_transforms(k, q);
    if (1..6).any(|i| images[..i].contains(&images[i])) {
        return None;
    }
    let mut t = [[0; 6]; 6];
    for (i, row) in t.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            let composed = habc_transforms(k, &images[j])[i];
            *cell = images
                .iter()
                .position(|x| *x == composed)
                .expect("the transforms are closed");
        }
    }
    Some(t)
}

/// Whether a 6×6 table with identity 0 is an associative group law with inverses.
pub fn is_group_table(t: &[[usize; 6]; 6]) -> bool {
    (0..6).all(|i| {
        t[0][i] == i
            && t[i][0] == i
            && (0..6).any(|j| t[i][j] == 0)
            && (0..6).all(|j| (0..6).all(|l| t[t[i][j]][l] == t[i][t[j][l]]))
    })
}
