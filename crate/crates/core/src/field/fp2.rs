//! Arithmetic in the prime field F_p and its quadratic extension
//! F_{p^2} = F_p[w]/(w^2 - r), with r the least quadratic non-residue mod p.

use std::fmt;

use crate::error::{Error, Result};

/// Deterministic primality test by trial division. Inputs are below 2^31.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// An element c0 + c1*w of F_{p^2}.
///
/// The derived ordering is lexicographic on `(c0, c1)`; it is the canonical
/// total order used by branch-set keys and reports.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Debug)]
pub struct Fp2Elem {
    pub c0: u32,
    pub c1: u32,
}

impl Fp2Elem {
    pub const ZERO: Fp2Elem = Fp2Elem { c0: 0, c1: 0 };
    pub const ONE: Fp2Elem = Fp2Elem { c0: 1, c1: 0 };

    #[inline]
    pub fn is_zero(self) -> bool {
        self.c0 == 0 && self.c1 == 0
    }

    #[inline]
    pub fn in_prime_field(self) -> bool {
        self.c1 == 0
    }
}

/// The pair (F_p, F_{p^2}) together with the data needed for square roots
/// and for the auxiliary quadratic extension of F_{p^2}.
///
/// Immutable after construction; share it freely across threads.
#[derive(Clone, Debug)]
pub struct FieldTowerCtx {
    p: u64,
    r: u64,
    // p^2 - 1 = 2^ts_s * ts_t with ts_t odd
    ts_s: u32,
    ts_t: u64,
    ts_root: Fp2Elem,
    nonsquare: Fp2Elem,
}

impl FieldTowerCtx {
    /// Builds the tower for an odd prime `p > 11` (and `p < 2^31`).
    pub fn new(p: u64) -> Result<Self> {
        if p <= 11 {
            return Err(Error::RejectedInput(format!(
                "p = {p} must be a prime > 11"
            )));
        }
        if p >= 1 << 31 {
            return Err(Error::RejectedInput(format!("p = {p} exceeds 2^31")));
        }
        if !is_prime(p) {
            return Err(Error::RejectedInput(format!("p = {p} is not prime")));
        }
        Ok(Self::new_unchecked(p))
    }

    /// Same as [`FieldTowerCtx::new`] but accepts any odd prime, including the
    /// small ones the enumeration algorithms exclude.
    pub fn new_any_odd_prime(p: u64) -> Result<Self> {
        if !(3..1 << 31).contains(&p) || !is_prime(p) {
            return Err(Error::RejectedInput(format!(
                "p = {p} is not an odd prime below 2^31"
            )));
        }
        Ok(Self::new_unchecked(p))
    }

    fn new_unchecked(p: u64) -> Self {
        let mut r = 2;
        while pow_mod(r, (p - 1) / 2, p) != p - 1 {
            r += 1;
        }
        let q = p * p - 1;
        let ts_s = q.trailing_zeros();
        let ts_t = q >> ts_s;
        let mut ctx = FieldTowerCtx {
            p,
            r,
            ts_s,
            ts_t,
            ts_root: Fp2Elem::ZERO,
            nonsquare: Fp2Elem::ZERO,
        };
        let nonsquare = ctx
            .elements()
            .find(|&x| !x.is_zero() && !ctx.is_square(x))
            .expect("F_p^2 has non-squares");
        ctx.nonsquare = nonsquare;
        ctx.ts_root = ctx.pow(nonsquare, ts_t);
        ctx
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }

    /// The least quadratic non-residue r of F_p, so that w^2 = r.
    #[inline]
    pub fn nonresidue(&self) -> u64 {
        self.r
    }

    /// The least non-square of F_{p^2} in the canonical order.
    #[inline]
    pub fn nonsquare(&self) -> Fp2Elem {
        self.nonsquare
    }

    #[inline]
    pub fn zero(&self) -> Fp2Elem {
        Fp2Elem::ZERO
    }

    #[inline]
    pub fn one(&self) -> Fp2Elem {
        Fp2Elem::ONE
    }

    /// The generator w of F_{p^2} over F_p.
    #[inline]
    pub fn omega(&self) -> Fp2Elem {
        Fp2Elem { c0: 0, c1: 1 }
    }

    #[inline]
    pub fn from_i64(&self, v: i64) -> Fp2Elem {
        let m = v.rem_euclid(self.p as i64) as u32;
        Fp2Elem { c0: m, c1: 0 }
    }

    #[inline]
    pub fn from_u64(&self, v: u64) -> Fp2Elem {
        Fp2Elem {
            c0: (v % self.p) as u32,
            c1: 0,
        }
    }

    /// Builds c0 + c1*w from arbitrary integers.
    pub fn elem(&self, c0: i64, c1: i64) -> Fp2Elem {
        let p = self.p as i64;
        Fp2Elem {
            c0: c0.rem_euclid(p) as u32,
            c1: c1.rem_euclid(p) as u32,
        }
    }

    /// A rational number num/den mapped into F_p.
    pub fn from_ratio(&self, num: i64, den: i64) -> Option<Fp2Elem> {
        let d = self.from_i64(den);
        self.try_inv(d).map(|di| self.mul(self.from_i64(num), di))
    }

    #[inline]
    pub fn add(&self, a: Fp2Elem, b: Fp2Elem) -> Fp2Elem {
        Fp2Elem {
            c0: add_p(a.c0, b.c0, self.p),
            c1: add_p(a.c1, b.c1, self.p),
        }
    }

    #[inline]
    pub fn sub(&self, a: Fp2Elem, b: Fp2Elem) -> Fp2Elem {
        Fp2Elem {
            c0: sub_p(a.c0, b.c0, self.p),
            c1: sub_p(a.c1, b.c1, self.p),
        }
    }

    #[inline]
    pub fn neg(&self, a: Fp2Elem) -> Fp2Elem {
        Fp2Elem {
            c0: sub_p(0, a.c0, self.p),
            c1: sub_p(0, a.c1, self.p),
        }
    }

    #[inline]
    pub fn mul(&self, a: Fp2Elem, b: Fp2Elem) -> Fp2Elem {
        let p = self.p;
        let (a0, a1, b0, b1) = (a.c0 as u64, a.c1 as u64, b.c0 as u64, b.c1 as u64);
        let t = (a1 * b1) % p * self.r;
        let c0 = (a0 * b0 + t % p) % p;
        let c1 = (a0 * b1 + a1 * b0) % p;
        Fp2Elem {
            c0: c0 as u32,
            c1: c1 as u32,
        }
    }

    #[inline]
    pub fn sqr(&self, a: Fp2Elem) -> Fp2Elem {
        self.mul(a, a)
    }

    /// Multiplication by an integer scalar.
    #[inline]
    pub fn mul_int(&self, a: Fp2Elem, k: i64) -> Fp2Elem {
        self.mul(a, self.from_i64(k))
    }

    pub fn pow(&self, a: Fp2Elem, mut e: u64) -> Fp2Elem {
        let mut base = a;
        let mut acc = Fp2Elem::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.sqr(base);
            e >>= 1;
        }
        acc
    }

    /// The norm c0^2 - r*c1^2 in F_p.
    #[inline]
    pub fn norm(&self, a: Fp2Elem) -> u64 {
        let p = self.p;
        let (a0, a1) = (a.c0 as u64, a.c1 as u64);
        let t = (a1 * a1) % p * self.r % p;
        (a0 * a0 % p + p - t) % p
    }

    pub fn try_inv(&self, a: Fp2Elem) -> Option<Fp2Elem> {
        if a.is_zero() {
            return None;
        }
        let n_inv = inv_p(self.norm(a), self.p);
        let p = self.p;
        Some(Fp2Elem {
            c0: (a.c0 as u64 * n_inv % p) as u32,
            c1: ((p - a.c1 as u64) % p * n_inv % p) as u32,
        })
    }

    /// Inverse of a nonzero element. Panics on zero.
    #[inline]
    pub fn inv(&self, a: Fp2Elem) -> Fp2Elem {
        self.try_inv(a).expect("inverse of zero in F_p^2")
    }

    #[inline]
    pub fn div(&self, a: Fp2Elem, b: Fp2Elem) -> Fp2Elem {
        self.mul(a, self.inv(b))
    }

    /// x -> x^p, i.e. c0 + c1*w -> c0 - c1*w.
    #[inline]
    pub fn frobenius(&self, a: Fp2Elem) -> Fp2Elem {
        Fp2Elem {
            c0: a.c0,
            c1: sub_p(0, a.c1, self.p),
        }
    }

    /// True iff `a` is zero or a square in F_{p^2}; decided through the norm.
    pub fn is_square(&self, a: Fp2Elem) -> bool {
        if a.is_zero() {
            return true;
        }
        let n = self.norm(a);
        pow_mod(n, (self.p - 1) / 2, self.p) == 1
    }

    /// Both square roots `(s, -s)` of `a`, with `s` the smaller in the
    /// canonical order, or `None` if `a` is not a square.
    pub fn sqrt(&self, a: Fp2Elem) -> Option<(Fp2Elem, Fp2Elem)> {
        if a.is_zero() {
            return Some((a, a));
        }
        if !self.is_square(a) {
            return None;
        }
        // Tonelli-Shanks in the cyclic group F_{p^2}^*
        let mut m = self.ts_s;
        let mut c = self.ts_root;
        let mut t = self.pow(a, self.ts_t);
        let mut root = self.pow(a, self.ts_t.div_ceil(2));
        while t != Fp2Elem::ONE {
            let mut i = 0;
            let mut t2 = t;
            while t2 != Fp2Elem::ONE {
                t2 = self.sqr(t2);
                i += 1;
            }
            debug_assert!(i < m);
            let mut b = c;
            for _ in 0..(m - i - 1) {
                b = self.sqr(b);
            }
            m = i;
            c = self.sqr(b);
            t = self.mul(t, c);
            root = self.mul(root, b);
        }
        debug_assert_eq!(self.sqr(root), a);
        let other = self.neg(root);
        Some(if root <= other {
            (root, other)
        } else {
            (other, root)
        })
    }

    /// All p^2 elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = Fp2Elem> + '_ {
        let p = self.p as u32;
        (0..p).flat_map(move |c0| (0..p).map(move |c1| Fp2Elem { c0, c1 }))
    }

    /// All p elements of the prime field, in order.
    pub fn prime_field_elements(&self) -> impl Iterator<Item = Fp2Elem> + '_ {
        (0..self.p as u32).map(|c0| Fp2Elem { c0, c1: 0 })
    }

    /// Text encoding: `c0` when c1 = 0, else `c0+c1*w`.
    pub fn encode(&self, a: Fp2Elem) -> String {
        if a.c1 == 0 {
            a.c0.to_string()
        } else {
            format!("{}+{}*w", a.c0, a.c1)
        }
    }

    /// Parses the strict element encoding produced by [`FieldTowerCtx::encode`].
    pub fn parse_elem(&self, s: &str) -> Result<Fp2Elem> {
        let bad = || Error::Parse(format!("bad field element {s:?}"));
        let (c0, c1) = match s.split_once('+') {
            None => (s, None),
            Some((a, b)) => (a, Some(b.strip_suffix("*w").ok_or_else(bad)?)),
        };
        let c0: u64 = c0.parse().map_err(|_| bad())?;
        let c1: u64 = match c1 {
            Some(c) => c.parse().map_err(|_| bad())?,
            None => 0,
        };
        if c0 >= self.p || c1 >= self.p {
            return Err(bad());
        }
        Ok(Fp2Elem {
            c0: c0 as u32,
            c1: c1 as u32,
        })
    }

    /// A `Display` adapter using the text encoding.
    pub fn show(&self, a: Fp2Elem) -> Shown {
        Shown(self.encode(a))
    }
}

/// Display wrapper returned by [`FieldTowerCtx::show`].
pub struct Shown(String);

impl fmt::Display for Shown {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[inline]
fn add_p(a: u32, b: u32, p: u64) -> u32 {
    let s = a as u64 + b as u64;
    (if s >= p { s - p } else { s }) as u32
}

#[inline]
fn sub_p(a: u32, b: u32, p: u64) -> u32 {
    let (a, b) = (a as u64, b as u64);
    (if a >= b { a - b } else { a + p - b }) as u32
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

pub(crate) fn inv_p(a: u64, p: u64) -> u64 {
    let (mut old_r, mut r) = (a as i64, p as i64);
    let (mut old_s, mut s) = (1i64, 0i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1, "{a} not invertible mod {p}");
    old_s.rem_euclid(p as i64) as u64
}
