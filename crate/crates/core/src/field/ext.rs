//! The quadratic extension F_{p^4} = F_{p^2}[t]/(t^2 - n), n the least
//! non-square of F_{p^2}.
//!
//! Only used internally where an intermediate quantity may leave F_{p^2}
//! (Richelot codomain roots, fixed points of involutions, lifting constants
//! of automorphisms). Every value that reaches a caller is projected back to
//! F_{p^2} with [`ExtField::to_base`].

use super::fp2::{FieldTowerCtx, Fp2Elem};

/// a + b*t with t^2 = n.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct ExtElem {
    pub a: Fp2Elem,
    pub b: Fp2Elem,
}

impl ExtElem {
    pub fn is_zero(self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

#[derive(Clone, Copy)]
pub struct ExtField<'a> {
    pub k: &'a FieldTowerCtx,
}

impl<'a> ExtField<'a> {
    pub fn new(k: &'a FieldTowerCtx) -> Self {
        ExtField { k }
    }

    pub fn zero(&self) -> ExtElem {
        ExtElem::default()
    }

    pub fn one(&self) -> ExtElem {
        self.from_base(Fp2Elem::ONE)
    }

    pub fn from_base(&self, a: Fp2Elem) -> ExtElem {
        ExtElem {
            a,
            b: Fp2Elem::ZERO,
        }
    }

    /// Projects back to F_{p^2}; `None` if the element is not in the base field.
    pub fn to_base(&self, x: ExtElem) -> Option<Fp2Elem> {
        x.b.is_zero().then_some(x.a)
    }

    pub fn add(&self, x: ExtElem, y: ExtElem) -> ExtElem {
        ExtElem {
            a: self.k.add(x.a, y.a),
            b: self.k.add(x.b, y.b),
        }
    }

    pub fn sub(&self, x: ExtElem, y: ExtElem) -> ExtElem {
        ExtElem {
            a: self.k.sub(x.a, y.a),
            b: self.k.sub(x.b, y.b),
        }
    }

    pub fn neg(&self, x: ExtElem) -> ExtElem {
        ExtElem {
            a: self.k.neg(x.a),
            b: self.k.neg(x.b),
        }
    }

    pub fn mul(&self, x: ExtElem, y: ExtElem) -> ExtElem {
        let k = self.k;
        let bb = k.mul(k.mul(x.b, y.b), k.nonsquare());
        ExtElem {
            a: k.add(k.mul(x.a, y.a), bb),
            b: k.add(k.mul(x.a, y.b), k.mul(x.b, y.a)),
        }
    }

    pub fn try_inv(&self, x: ExtElem) -> Option<ExtElem> {
        let k = self.k;
        // (a + bt)(a - bt) = a^2 - n b^2
        let norm = k.sub(k.sqr(x.a), k.mul(k.sqr(x.b), k.nonsquare()));
        let ni = k.try_inv(norm)?;
        Some(ExtElem {
            a: k.mul(x.a, ni),
            b: k.neg(k.mul(x.b, ni)),
        })
    }

    pub fn inv(&self, x: ExtElem) -> ExtElem {
        self.try_inv(x).expect("inverse of zero in F_p^4")
    }

    pub fn div(&self, x: ExtElem, y: ExtElem) -> ExtElem {
        self.mul(x, self.inv(y))
    }

    pub fn pow(&self, x: ExtElem, mut e: u64) -> ExtElem {
        let mut base = x;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// A square root of a base-field element; always exists in F_{p^4}.
    pub fn sqrt_of_base(&self, x: Fp2Elem) -> ExtElem {
        let k = self.k;
        match k.sqrt(x) {
            Some((s, _)) => self.from_base(s),
            None => {
                // x/n is a square, and (s t)^2 = s^2 n = x
                let (s, _) = k.sqrt(k.div(x, k.nonsquare())).expect("x/n is a square");
                ExtElem {
                    a: Fp2Elem::ZERO,
                    b: s,
                }
            }
        }
    }

    /// Roots of a x^2 + b x + c (a != 0) in F_{p^4}.
    pub fn quadratic_roots(&self, a: Fp2Elem, b: Fp2Elem, c: Fp2Elem) -> [ExtElem; 2] {
        let k = self.k;
        let disc = k.sub(k.sqr(b), k.mul_int(k.mul(a, c), 4));
        let s = self.sqrt_of_base(disc);
        let inv2a = self.from_base(k.inv(k.mul_int(a, 2)));
        let mb = self.from_base(k.neg(b));
        [
            self.mul(self.add(mb, s), inv2a),
            self.mul(self.sub(mb, s), inv2a),
        ]
    }
}
