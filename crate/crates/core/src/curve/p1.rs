//! Points of the projective line and Möbius transformations over F_{p^2}.

use crate::error::{Error, Result};
use crate::field::{FieldTowerCtx, Fp2Elem};

/// A point of P^1(F_{p^2}). Infinity sorts after every finite point.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum P1Point {
    Finite(Fp2Elem),
    Infinity,
}

impl P1Point {
    pub fn finite(&self) -> Option<Fp2Elem> {
        match self {
            P1Point::Finite(x) => Some(*x),
            P1Point::Infinity => None,
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, P1Point::Infinity)
    }

    pub fn encode(&self, k: &FieldTowerCtx) -> String {
        match self {
            P1Point::Finite(x) => k.encode(*x),
            P1Point::Infinity => "inf".to_string(),
        }
    }

    pub fn parse(k: &FieldTowerCtx, s: &str) -> Result<P1Point> {
        if s == "inf" {
            Ok(P1Point::Infinity)
        } else {
            k.parse_elem(s).map(P1Point::Finite)
        }
    }
}

impl From<Fp2Elem> for P1Point {
    fn from(x: Fp2Elem) -> Self {
        P1Point::Finite(x)
    }
}

/// x -> (a x + b) / (c x + d), a matrix taken up to scalars.
///
/// Values built by this module are normalized: the first nonzero entry of
/// `(a, b, c, d)` is 1, so equal maps compare equal.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct MobiusMap {
    pub a: Fp2Elem,
    pub b: Fp2Elem,
    pub c: Fp2Elem,
    pub d: Fp2Elem,
}

impl MobiusMap {
    pub fn identity() -> Self {
        MobiusMap {
            a: Fp2Elem::ONE,
            b: Fp2Elem::ZERO,
            c: Fp2Elem::ZERO,
            d: Fp2Elem::ONE,
        }
    }

    pub fn new(k: &FieldTowerCtx, a: Fp2Elem, b: Fp2Elem, c: Fp2Elem, d: Fp2Elem) -> Result<Self> {
        let m = MobiusMap { a, b, c, d };
        if m.det(k).is_zero() {
            return Err(Error::RejectedInput("singular Möbius matrix".into()));
        }
        Ok(m.normalized(k).0)
    }

    pub fn det(&self, k: &FieldTowerCtx) -> Fp2Elem {
        k.sub(k.mul(self.a, self.d), k.mul(self.b, self.c))
    }

    /// The normalized representative and the scalar it was divided by.
    pub fn normalized(&self, k: &FieldTowerCtx) -> (Self, Fp2Elem) {
        let s = [self.a, self.b, self.c, self.d]
            .into_iter()
            .find(|x| !x.is_zero())
            .expect("zero matrix");
        let si = k.inv(s);
        (
            MobiusMap {
                a: k.mul(self.a, si),
                b: k.mul(self.b, si),
                c: k.mul(self.c, si),
                d: k.mul(self.d, si),
            },
            s,
        )
    }

    pub fn apply(&self, k: &FieldTowerCtx, pt: P1Point) -> P1Point {
        match pt {
            P1Point::Finite(x) => {
                let den = k.add(k.mul(self.c, x), self.d);
                let num = k.add(k.mul(self.a, x), self.b);
                match k.try_inv(den) {
                    Some(di) => P1Point::Finite(k.mul(num, di)),
                    None => P1Point::Infinity,
                }
            }
            P1Point::Infinity => match k.try_inv(self.c) {
                Some(ci) => P1Point::Finite(k.mul(self.a, ci)),
                None => P1Point::Infinity,
            },
        }
    }

    /// Raw matrix product `self * other` (apply `other` first), not normalized.
    pub fn mul_raw(&self, k: &FieldTowerCtx, o: &MobiusMap) -> MobiusMap {
        MobiusMap {
            a: k.add(k.mul(self.a, o.a), k.mul(self.b, o.c)),
            b: k.add(k.mul(self.a, o.b), k.mul(self.b, o.d)),
            c: k.add(k.mul(self.c, o.a), k.mul(self.d, o.c)),
            d: k.add(k.mul(self.c, o.b), k.mul(self.d, o.d)),
        }
    }

    /// `self ∘ other`, normalized.
    pub fn compose(&self, k: &FieldTowerCtx, other: &MobiusMap) -> MobiusMap {
        self.mul_raw(k, other).normalized(k).0
    }

    pub fn inverse(&self, k: &FieldTowerCtx) -> MobiusMap {
        MobiusMap {
            a: self.d,
            b: k.neg(self.b),
            c: k.neg(self.c),
            d: self.a,
        }
        .normalized(k)
        .0
    }

    /// The unique map sending `(p1, p2, p3)` to `(0, 1, ∞)`.
    pub fn to_standard(k: &FieldTowerCtx, p1: P1Point, p2: P1Point, p3: P1Point) -> Result<Self> {
        if p1 == p2 || p2 == p3 || p1 == p3 {
            return Err(Error::RepeatedPoints);
        }
        let (z, o) = (Fp2Elem::ZERO, Fp2Elem::ONE);
        let m = match (p1, p2, p3) {
            (P1Point::Infinity, P1Point::Finite(y), P1Point::Finite(w)) => {
                // (y - w) / (x - w)
                MobiusMap {
                    a: z,
                    b: k.sub(y, w),
                    c: o,
                    d: k.neg(w),
                }
            }
            (P1Point::Finite(x1), P1Point::Infinity, P1Point::Finite(w)) => {
                // (x - x1) / (x - w)
                MobiusMap {
                    a: o,
                    b: k.neg(x1),
                    c: o,
                    d: k.neg(w),
                }
            }
            (P1Point::Finite(x1), P1Point::Finite(y), P1Point::Infinity) => {
                // (x - x1) / (y - x1)
                MobiusMap {
                    a: o,
                    b: k.neg(x1),
                    c: z,
                    d: k.sub(y, x1),
                }
            }
            (P1Point::Finite(x1), P1Point::Finite(y), P1Point::Finite(w)) => {
                // (x - x1)(y - w) / ((x - w)(y - x1))
                let s = k.sub(y, w);
                let t = k.sub(y, x1);
                MobiusMap {
                    a: s,
                    b: k.neg(k.mul(x1, s)),
                    c: t,
                    d: k.neg(k.mul(w, t)),
                }
            }
            _ => unreachable!("at most one point is infinite"),
        };
        Ok(m.normalized(k).0)
    }

    /// The unique map sending `src[i]` to `dst[i]` for i = 0, 1, 2.
    pub fn from_triples(k: &FieldTowerCtx, src: [P1Point; 3], dst: [P1Point; 3]) -> Result<Self> {
        let s = Self::to_standard(k, src[0], src[1], src[2])?;
        let d = Self::to_standard(k, dst[0], dst[1], dst[2])?;
        Ok(d.inverse(k).compose(k, &s))
    }
}

/// Cross-ratio: the image of `q4` under the map sending (q1, q2, q3) to (0, 1, ∞).
pub fn cross_ratio(k: &FieldTowerCtx, q: [P1Point; 4]) -> Result<P1Point> {
    let m = MobiusMap::to_standard(k, q[0], q[1], q[2])?;
    Ok(m.apply(k, q[3]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(k: &FieldTowerCtx, c0: i64, c1: i64) -> P1Point {
        P1Point::Finite(k.elem(c0, c1))
    }

    #[test]
    fn standard_triple_gives_identity() {
        let k = FieldTowerCtx::new(13).unwrap();
        let m = MobiusMap::to_standard(&k, pt(&k, 0, 0), pt(&k, 1, 0), P1Point::Infinity).unwrap();
        assert_eq!(m, MobiusMap::identity());
    }

    #[test]
    fn inf_one_zero() {
        let k = FieldTowerCtx::new(13).unwrap();
        let (zero, one, inf) = (pt(&k, 0, 0), pt(&k, 1, 0), P1Point::Infinity);
        let m = MobiusMap::to_standard(&k, inf, one, zero).unwrap();
        assert_eq!(m.apply(&k, inf), zero);
        assert_eq!(m.apply(&k, one), one);
        assert_eq!(m.apply(&k, zero), inf);
        // the unique such map is x -> 1/x
        let recip = MobiusMap::new(&k, k.zero(), k.one(), k.one(), k.zero()).unwrap();
        assert_eq!(m, recip);
    }

    #[test]
    fn repeated_points_rejected() {
        let k = FieldTowerCtx::new(13).unwrap();
        let r = MobiusMap::to_standard(&k, pt(&k, 0, 0), pt(&k, 0, 0), pt(&k, 1, 0));
        assert!(matches!(r, Err(Error::RepeatedPoints)));
    }

    #[test]
    fn triples_are_mapped() {
        let k = FieldTowerCtx::new(31).unwrap();
        let src = [pt(&k, 3, 1), P1Point::Infinity, pt(&k, 7, 0)];
        let dst = [pt(&k, 5, 5), pt(&k, 2, 9), P1Point::Infinity];
        let m = MobiusMap::from_triples(&k, src, dst).unwrap();
        for i in 0..3 {
            assert_eq!(m.apply(&k, src[i]), dst[i]);
        }
        let mi = m.inverse(&k);
        assert_eq!(mi.compose(&k, &m), MobiusMap::identity());
    }

    #[test]
    fn cross_ratio_of_standard_points() {
        let k = FieldTowerCtx::new(31).unwrap();
        let l = pt(&k, 4, 11);
        let cr = cross_ratio(&k, [pt(&k, 0, 0), pt(&k, 1, 0), P1Point::Infinity, l]).unwrap();
        assert_eq!(cr, l);
    }
}
