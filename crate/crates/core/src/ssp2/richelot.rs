//! Richelot (2,2)-isogenies out of genus-2 Jacobians.
//!
//! A quadratic splitting pairs the six branch points; pair {r, s} becomes the
//! binary quadratic (X − rZ)(X − sZ), and a pair containing ∞ becomes
//! Z(X − sZ). With δ the determinant of the three coefficient vectors:
//!
//! * δ ≠ 0: the codomain is the Jacobian of y² = H₁H₂H₃ with
//!   H_i = G′_{i+1}G_{i+2} − G_{i+1}G′_{i+2}.
//! * δ = 0: one involution τ swaps the points of every pair, and the
//!   codomain is the product of the two elliptic quotients of the curve by
//!   τ and by τ composed with the hyperelliptic involution. In the
//!   coordinate u = z², z a coordinate in which τ is z ↦ −z, they are
//!   branched over {u₁, u₂, u₃, ∞} and {u₁, u₂, u₃, 0}.
//!
//! The roots of H_i and the fixed points of τ may lie in F_{p^4}, so the
//! computation runs there and projects back.

use super::rosenhain::{rosenhain_of, RosenhainTriple};
use crate::curve::{BranchSet, CanonicalKey, P1Point};
use crate::elliptic::JInvariant;
use crate::error::{Error, Result};
use crate::field::{ExtElem, ExtField, FieldTowerCtx, Fp2Elem};

/// Three disjoint pairs covering six branch points.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct QuadSplitting {
    pairs: [(P1Point, P1Point); 3],
}

impl QuadSplitting {
    pub fn new(pairs: [(P1Point, P1Point); 3]) -> Result<Self> {
        let mut all: Vec<P1Point> = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
        all.sort();
        if all.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::RejectedInput(
                "splitting factors share a root".into(),
            ));
        }
        Ok(QuadSplitting { pairs })
    }

    pub fn pairs(&self) -> &[(P1Point, P1Point); 3] {
        &self.pairs
    }

    /// Coefficients (x², x, 1) of each factor.
    fn quadratics(&self, k: &FieldTowerCtx) -> [[Fp2Elem; 3]; 3] {
        self.pairs.map(|(a, b)| match (a, b) {
            (P1Point::Finite(r), P1Point::Finite(s)) => [k.one(), k.neg(k.add(r, s)), k.mul(r, s)],
            (P1Point::Infinity, P1Point::Finite(s)) | (P1Point::Finite(s), P1Point::Infinity) => {
                [k.zero(), k.one(), k.neg(s)]
            }
            _ => unreachable!("points are distinct"),
        })
    }
}

/// The 15 splittings of a six-point set, in a fixed order.
pub fn all_splittings(b: &BranchSet) -> Vec<QuadSplitting> {
    let p = b.points();
    assert_eq!(p.len(), 6, "Richelot splittings need six branch points");
    let mut out = Vec::with_capacity(15);
    for i in 1..6 {
        let rest: Vec<usize> = (1..6).filter(|&r| r != i).collect();
        for j in 1..4 {
            let others: Vec<usize> = rest[1..]
                .iter()
                .copied()
                .filter(|&r| r != rest[j])
                .collect();
            let pairs = [
                (p[0], p[i]),
                (p[rest[0]], p[rest[j]]),
                (p[others[0]], p[others[1]]),
            ];
            out.push(QuadSplitting::new(pairs).expect("disjoint pairs"));
        }
    }
    out
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Codomain {
    Jacobian {
        key: CanonicalKey,
        triple: RosenhainTriple,
    },
    /// j-invariants of the two factors, sorted.
    Product { j1: JInvariant, j2: JInvariant },
}

fn det3(k: &FieldTowerCtx, m: &[[Fp2Elem; 3]; 3]) -> Fp2Elem {
    let minor = |a: usize, b: usize, c: usize, d: usize| {
        k.sub(k.mul(m[1][a], m[2][b]), k.mul(m[1][c], m[2][d]))
    };
    let t0 = k.mul(m[0][0], minor(1, 2, 2, 1));
    let t1 = k.mul(m[0][1], minor(0, 2, 2, 0));
    let t2 = k.mul(m[0][2], minor(0, 1, 1, 0));
    k.add(k.sub(t0, t1), t2)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum XPoint {
    Fin(ExtElem),
    Inf,
}

/// Image of q under the map sending (p1, p2, p3) to (0, 1, ∞).
fn ext_normalize(e: &ExtField, p1: XPoint, p2: XPoint, p3: XPoint, q: XPoint) -> XPoint {
    use XPoint::*;
    let d = |a: ExtElem, b: ExtElem| e.sub(a, b);
    let (num, den) = match (p1, p2, p3, q) {
        _ if q == p3 => return Inf,
        _ if q == p1 => return Fin(e.zero()),
        _ if q == p2 => return Fin(e.one()),
        (Inf, Fin(y), Fin(w), Fin(x)) => (d(y, w), d(x, w)),
        (Fin(a), Inf, Fin(w), Fin(x)) => (d(x, a), d(x, w)),
        (Fin(a), Fin(y), Inf, Fin(x)) => (d(x, a), d(y, a)),
        (Fin(a), Fin(y), Fin(w), Fin(x)) => (e.mul(d(x, a), d(y, w)), e.mul(d(x, w), d(y, a))),
        (Fin(a), Fin(y), Fin(w), Inf) => (d(y, w), d(y, a)),
        _ => unreachable!("at most one point is ∞"),
    };
    match e.try_inv(den) {
        Some(inv) => Fin(e.mul(num, inv)),
        None => Inf,
    }
}

/// Projective roots of g2 x² + g1 x + g0.
fn projective_roots(e: &ExtField, g: [Fp2Elem; 3]) -> [XPoint; 2] {
    let k = e.k;
    let [g2, g1, g0] = g;
    if g2.is_zero() {
        [XPoint::Inf, XPoint::Fin(e.from_base(k.neg(k.div(g0, g1))))]
    } else {
        e.quadratic_roots(g2, g1, g0).map(XPoint::Fin)
    }
}

fn ext_j(e: &ExtField, q: [XPoint; 4]) -> Result<Fp2Elem> {
    let XPoint::Fin(l) = ext_normalize(e, q[0], q[1], q[2], q[3]) else {
        return Err(Error::Integrity("degenerate elliptic quotient".into()));
    };
    // 256 (λ² − λ + 1)³ / (λ² (λ − 1)²)
    let one = e.one();
    let t = e.add(e.sub(e.mul(l, l), l), one);
    let lm1 = e.sub(l, one);
    let num = e.mul(e.from_base(e.k.from_i64(256)), e.mul(e.mul(t, t), t));
    let den = e.mul(e.mul(l, l), e.mul(lm1, lm1));
    let inv = e
        .try_inv(den)
        .ok_or_else(|| Error::Integrity("singular elliptic quotient".into()))?;
    e.to_base(e.mul(num, inv))
        .ok_or_else(|| Error::Integrity("j-invariant of a quotient is not in F_p^2".into()))
}

/// Sends the first three of six points to (0, 1, ∞) and reads off the
/// Rosenhain triple; the remaining images must land in F_{p^2}.
pub(crate) fn rosenhain_from_ext_points(
    e: &ExtField,
    pts: &[XPoint],
) -> Result<(CanonicalKey, RosenhainTriple)> {
    let mut images = Vec::with_capacity(3);
    for &q in &pts[3..] {
        match ext_normalize(e, pts[0], pts[1], pts[2], q) {
            XPoint::Fin(v) => images.push(e.to_base(v).ok_or_else(|| {
                Error::Integrity("genus-2 curve has no F_p^2 Rosenhain model".into())
            })?),
            XPoint::Inf => return Err(Error::Integrity("branch points collide".into())),
        }
    }
    let triple = RosenhainTriple::new(images[0], images[1], images[2])?;
    rosenhain_of(e.k, &triple.branch_set())
}

/// The codomain of the Richelot isogeny attached to `s`.
pub fn richelot_codomain(k: &FieldTowerCtx, s: &QuadSplitting) -> Result<Codomain> {
    let e = ExtField::new(k);
    let g = s.quadratics(k);
    let delta = det3(k, &g);
    if delta.is_zero() {
        return degenerate_codomain(k, &e, s, &g);
    }
    // H_i = G'_{i+1} G_{i+2} − G_{i+1} G'_{i+2} as (x², x, 1) coefficients
    let h = |a: [Fp2Elem; 3], b: [Fp2Elem; 3]| -> [Fp2Elem; 3] {
        // a' b − a b' for a = a2 x² + a1 x + a0 (the x³ terms cancel)
        let x2 = k.sub(k.mul(a[0], b[1]), k.mul(a[1], b[0]));
        let x1 = k.mul_int(k.sub(k.mul(a[0], b[2]), k.mul(a[2], b[0])), 2);
        let x0 = k.sub(k.mul(a[1], b[2]), k.mul(a[2], b[1]));
        [x2, x1, x0]
    };
    let hs = [h(g[1], g[2]), h(g[2], g[0]), h(g[0], g[1])];
    let pts: Vec<XPoint> = hs.iter().flat_map(|&q| projective_roots(&e, q)).collect();
    let (key, triple) = rosenhain_from_ext_points(&e, &pts)?;
    Ok(Codomain::Jacobian { key, triple })
}

fn degenerate_codomain(
    k: &FieldTowerCtx,
    e: &ExtField,
    s: &QuadSplitting,
    g: &[[Fp2Elem; 3]; 3],
) -> Result<Codomain> {
    // τ(x) = (αx + β)/(γx − α) swaps the roots of G = (g2, g1, g0) iff
    // γ g0 + α g1 − β g2 = 0; the three conditions have rank 2.
    let rows: Vec<[Fp2Elem; 3]> = g.iter().map(|q| [q[1], k.neg(q[0]), q[2]]).collect();
    let cross = |a: [Fp2Elem; 3], b: [Fp2Elem; 3]| {
        [
            k.sub(k.mul(a[1], b[2]), k.mul(a[2], b[1])),
            k.sub(k.mul(a[2], b[0]), k.mul(a[0], b[2])),
            k.sub(k.mul(a[0], b[1]), k.mul(a[1], b[0])),
        ]
    };
    let v = [
        cross(rows[0], rows[1]),
        cross(rows[0], rows[2]),
        cross(rows[1], rows[2]),
    ]
    .into_iter()
    .find(|v| v.iter().any(|c| !c.is_zero()))
    .ok_or_else(|| Error::Integrity("splitting quadratics are proportional".into()))?;
    let [alpha, beta, gamma] = v;
    // fixed points: γx² − 2αx − β = 0; put a fixed point at ∞ last
    let fixed = projective_roots(e, [gamma, k.mul_int(alpha, -2), k.neg(beta)]);
    let (e1, e2) = match fixed {
        [XPoint::Inf, f] | [f, XPoint::Inf] => (f, XPoint::Inf),
        [a, b] => (a, b),
    };
    let XPoint::Fin(e1) = e1 else {
        unreachable!("one fixed point is finite")
    };
    // u = ((x − e1)/(x − e2))², the quotient by τ
    let u_of = |q: P1Point| -> XPoint {
        let n = match (q, e2) {
            (P1Point::Infinity, XPoint::Inf) => return XPoint::Inf,
            (P1Point::Infinity, XPoint::Fin(_)) => e.one(),
            (P1Point::Finite(x), XPoint::Inf) => e.sub(e.from_base(x), e1),
            (P1Point::Finite(x), XPoint::Fin(f2)) => {
                let xe = e.from_base(x);
                e.div(e.sub(xe, e1), e.sub(xe, f2))
            }
        };
        XPoint::Fin(e.mul(n, n))
    };
    let us: Vec<XPoint> = s.pairs().iter().map(|&(a, _)| u_of(a)).collect();
    for (&(a, b), u) in s.pairs().iter().zip(&us) {
        debug_assert_eq!(u_of(b), *u, "τ must swap {a:?} and {b:?}");
    }
    let zero = XPoint::Fin(e.zero());
    let ja = ext_j(e, [us[0], us[1], us[2], XPoint::Inf])?;
    let jb = ext_j(e, [us[0], us[1], us[2], zero])?;
    let (j1, j2) = if ja <= jb { (ja, jb) } else { (jb, ja) };
    Ok(Codomain::Product {
        j1: JInvariant(j1),
        j2: JInvariant(j2),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elliptic::{enumerate_supersingular_j, j_from_four_points};
    use crate::ssp2::rosenhain::rosenhain_superspecial;

    fn fin(x: Fp2Elem) -> P1Point {
        P1Point::Finite(x)
    }

    #[test]
    fn fifteen_distinct_splittings() {
        let k = FieldTowerCtx::new(23).unwrap();
        let t = RosenhainTriple::new(k.from_i64(3), k.from_i64(5), k.from_i64(7)).unwrap();
        let sp = all_splittings(&t.branch_set());
        assert_eq!(sp.len(), 15);
        let mut norm: Vec<Vec<(P1Point, P1Point)>> = sp
            .iter()
            .map(|s| {
                let mut v: Vec<_> = s
                    .pairs()
                    .iter()
                    .map(|&(a, b)| (a.min(b), a.max(b)))
                    .collect();
                v.sort();
                v
            })
            .collect();
        norm.sort();
        norm.dedup();
        assert_eq!(norm.len(), 15);
    }

    #[test]
    fn shared_root_rejected() {
        let k = FieldTowerCtx::new(23).unwrap();
        let (a, b, c) = (fin(k.from_i64(2)), fin(k.from_i64(3)), fin(k.from_i64(4)));
        assert!(QuadSplitting::new([(a, b), (b, c), (a, c)]).is_err());
    }

    #[test]
    fn degenerate_family_gives_expected_j() {
        // x(x−1)(x+1)(x−δ)(x−1/δ) and ∞; the splitting {1,−1},{∞,δ},{0,1/δ}
        // is degenerate with both j equal to 64(2δ−1)³(2δ+1)³/δ²
        let k = FieldTowerCtx::new(101).unwrap();
        for dv in [5i64, 3, 7, 10] {
            let d = k.from_i64(dv);
            let di = k.inv(d);
            let (one, mone) = (fin(k.one()), fin(k.from_i64(-1)));
            let want = {
                let a = k.sub(k.mul_int(d, 2), k.one());
                let b = k.add(k.mul_int(d, 2), k.one());
                let num = k.mul_int(k.mul(k.mul(k.sqr(a), a), k.mul(k.sqr(b), b)), 64);
                k.div(num, k.sqr(d))
            };
            let s = QuadSplitting::new([
                (one, mone),
                (P1Point::Infinity, fin(d)),
                (fin(k.zero()), fin(di)),
            ])
            .unwrap();
            match richelot_codomain(&k, &s).unwrap() {
                Codomain::Product { j1, j2 } => {
                    assert_eq!(j1.0, want);
                    assert_eq!(j2.0, want);
                }
                other => panic!("expected a product, got {other:?}"),
            }
        }
    }

    #[test]
    fn degenerate_matches_quotient_construction() {
        // y² = (x² − a)(x² − b)(x² − c): splitting by ± pairs gives the
        // quotients branched at {a, b, c, ∞} and {0, a, b, c}
        let k = FieldTowerCtx::new(103).unwrap();
        let sq = [k.from_i64(4), k.from_i64(9), k.from_i64(25)];
        let r: Vec<Fp2Elem> = [2i64, 3, 5].iter().map(|&v| k.from_i64(v)).collect();
        let pairs = [0, 1, 2].map(|i| (P1Point::Finite(r[i]), P1Point::Finite(k.neg(r[i]))));
        let Codomain::Product { j1, j2 } =
            richelot_codomain(&k, &QuadSplitting::new(pairs).unwrap()).unwrap()
        else {
            panic!("expected a product")
        };
        let p = |x: Fp2Elem| P1Point::Finite(x);
        let ja = j_from_four_points(&k, [p(sq[0]), p(sq[1]), p(sq[2]), P1Point::Infinity]).unwrap();
        let jb = j_from_four_points(&k, [p(k.zero()), p(sq[0]), p(sq[1]), p(sq[2])]).unwrap();
        let mut want = [ja, jb];
        want.sort();
        assert_eq!([j1, j2], want);
    }

    #[test]
    fn superspecial_is_preserved() {
        for p in [23i64, 31] {
            let k = FieldTowerCtx::new(p as u64).unwrap();
            let s = enumerate_supersingular_j(&k);
            let seeds: Vec<RosenhainTriple> = (2..p)
                .flat_map(|a| ((a + 1)..p).flat_map(move |b| ((b + 1)..p).map(move |c| (a, b, c))))
                .map(|(a, b, c)| {
                    RosenhainTriple::new(k.from_i64(a), k.from_i64(b), k.from_i64(c)).unwrap()
                })
                .filter(|t| rosenhain_superspecial(&k, t))
                .take(10)
                .collect();
            assert!(
                !seeds.is_empty(),
                "no F_p-rational superspecial Rosenhain curve at p = {p}"
            );
            for t in seeds {
                for sp in all_splittings(&t.branch_set()) {
                    match richelot_codomain(&k, &sp).unwrap() {
                        Codomain::Jacobian { triple, .. } => {
                            assert!(rosenhain_superspecial(&k, &triple))
                        }
                        Codomain::Product { j1, j2 } => {
                            assert!(s.contains(j1.0) && s.contains(j2.0))
                        }
                    }
                }
            }
        }
    }
}
