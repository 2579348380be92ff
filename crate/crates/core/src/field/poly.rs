//! Dense univariate polynomials over F_{p^2}.
//!
//! Coefficients are stored little-endian and always trimmed, so the zero
//! polynomial is the empty vector and `lead()` of a nonzero polynomial is
//! nonzero.

use super::fp2::{FieldTowerCtx, Fp2Elem};

const KARATSUBA_THRESHOLD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly {
    coeffs: Vec<Fp2Elem>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Fp2Elem>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// From little-endian integer coefficients.
    pub fn from_ints(k: &FieldTowerCtx, coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| k.from_i64(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly {
            coeffs: vec![Fp2Elem::ONE],
        }
    }

    pub fn constant(c: Fp2Elem) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial c * x^n.
    pub fn monomial(c: Fp2Elem, n: usize) -> Self {
        let mut v = vec![Fp2Elem::ZERO; n + 1];
        v[n] = c;
        Poly::new(v)
    }

    pub fn x() -> Self {
        Poly {
            coeffs: vec![Fp2Elem::ZERO, Fp2Elem::ONE],
        }
    }

    /// x - a
    pub fn linear(k: &FieldTowerCtx, a: Fp2Elem) -> Self {
        Poly::new(vec![k.neg(a), Fp2Elem::ONE])
    }

    /// The monic polynomial with the given roots (with multiplicity).
    pub fn from_roots(k: &FieldTowerCtx, roots: &[Fp2Elem]) -> Self {
        roots
            .iter()
            .fold(Poly::one(), |acc, &r| acc.mul(k, &Poly::linear(k, r)))
    }

    pub fn coeffs(&self) -> &[Fp2Elem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Fp2Elem> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Fp2Elem {
        self.coeffs.get(i).copied().unwrap_or(Fp2Elem::ZERO)
    }

    pub fn lead(&self) -> Fp2Elem {
        self.coeffs.last().copied().unwrap_or(Fp2Elem::ZERO)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// True iff every coefficient lies in F_p.
    pub fn is_over_prime_field(&self) -> bool {
        self.coeffs.iter().all(|c| c.in_prime_field())
    }

    pub fn add(&self, k: &FieldTowerCtx, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(
            (0..n)
                .map(|i| k.add(self.coeff(i), other.coeff(i)))
                .collect(),
        )
    }

    pub fn sub(&self, k: &FieldTowerCtx, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(
            (0..n)
                .map(|i| k.sub(self.coeff(i), other.coeff(i)))
                .collect(),
        )
    }

    pub fn neg(&self, k: &FieldTowerCtx) -> Poly {
        Poly::new(self.coeffs.iter().map(|&c| k.neg(c)).collect())
    }

    pub fn scale(&self, k: &FieldTowerCtx, c: Fp2Elem) -> Poly {
        Poly::new(self.coeffs.iter().map(|&a| k.mul(a, c)).collect())
    }

    pub fn mul(&self, k: &FieldTowerCtx, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        Poly::new(mul_slices(k, &self.coeffs, &other.coeffs))
    }

    /// Product truncated to the coefficients of degree `< len`.
    pub fn mul_trunc(&self, k: &FieldTowerCtx, other: &Poly, len: usize) -> Poly {
        let a = &self.coeffs[..self.coeffs.len().min(len)];
        let b = &other.coeffs[..other.coeffs.len().min(len)];
        if a.is_empty() || b.is_empty() {
            return Poly::zero();
        }
        let mut prod = mul_slices(k, a, b);
        prod.truncate(len);
        Poly::new(prod)
    }

    pub fn pow(&self, k: &FieldTowerCtx, e: u64) -> Poly {
        self.pow_trunc(k, e, usize::MAX)
    }

    /// `self^e` truncated to the coefficients of degree `< len`.
    pub fn pow_trunc(&self, k: &FieldTowerCtx, mut e: u64, len: usize) -> Poly {
        let deg = self.coeffs.len().saturating_sub(1);
        if len != usize::MAX && deg > 0 {
            // for a short base, multiplying e times costs e·len·deg against
            // roughly len² per squaring
            let steps = 2 * (64 - e.leading_zeros()) as usize;
            if (e as usize).saturating_mul(deg + 1) < steps.saturating_mul(len / 2) {
                return self.pow_trunc_by_steps(k, e, len);
            }
        }
        let mut acc = Poly::one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_trunc(k, &base, len);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_trunc(k, &base, len);
            }
        }
        acc
    }

    fn pow_trunc_by_steps(&self, k: &FieldTowerCtx, e: u64, len: usize) -> Poly {
        let f = &self.coeffs;
        let mut acc = vec![Fp2Elem::ZERO; len];
        acc[0] = k.one();
        let mut top = 0;
        for _ in 0..e {
            top = (top + f.len() - 1).min(len - 1);
            // in place, from the top down, so acc[i - d] is still the old value
            for i in (0..=top).rev() {
                let mut s = Fp2Elem::ZERO;
                for (d, &c) in f.iter().enumerate().take(i + 1) {
                    if !c.is_zero() {
                        s = k.add(s, k.mul(c, acc[i - d]));
                    }
                }
                acc[i] = s;
            }
        }
        Poly::new(acc)
    }

    /// Quotient and remainder. Panics if `divisor` is zero.
    pub fn div_rem(&self, k: &FieldTowerCtx, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let Some(nd) = self.degree() else {
            return (Poly::zero(), Poly::zero());
        };
        if nd < dd {
            return (Poly::zero(), self.clone());
        }
        let lead_inv = k.inv(divisor.lead());
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Fp2Elem::ZERO; nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let c = k.mul(rem[i + dd], lead_inv);
            if c.is_zero() {
                continue;
            }
            quot[i] = c;
            for (j, &dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = k.sub(rem[i + j], k.mul(c, dc));
            }
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn rem(&self, k: &FieldTowerCtx, divisor: &Poly) -> Poly {
        self.div_rem(k, divisor).1
    }

    pub fn monic(&self, k: &FieldTowerCtx) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(k, k.inv(self.lead()))
    }

    /// Monic gcd; gcd(0, 0) = 0.
    pub fn gcd(&self, k: &FieldTowerCtx, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(k, &b);
            a = b;
            b = r;
        }
        a.monic(k)
    }

    pub fn derivative(&self, k: &FieldTowerCtx) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| k.mul(c, k.from_u64(i as u64)))
                .collect(),
        )
    }

    pub fn eval(&self, k: &FieldTowerCtx, x: Fp2Elem) -> Fp2Elem {
        self.coeffs
            .iter()
            .rev()
            .fold(Fp2Elem::ZERO, |acc, &c| k.add(k.mul(acc, x), c))
    }

    /// `self^e mod modulus` by square-and-multiply.
    pub fn pow_mod(&self, k: &FieldTowerCtx, mut e: u64, modulus: &Poly) -> Poly {
        let mut acc = Poly::one().rem(k, modulus);
        let mut base = self.rem(k, modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(k, &base).rem(k, modulus);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(k, &base).rem(k, modulus);
            }
        }
        acc
    }

    /// f(x) -> f(c x)
    pub fn scale_variable(&self, k: &FieldTowerCtx, c: Fp2Elem) -> Poly {
        let mut pw = Fp2Elem::ONE;
        let mut out = Vec::with_capacity(self.coeffs.len());
        for &a in &self.coeffs {
            out.push(k.mul(a, pw));
            pw = k.mul(pw, c);
        }
        Poly::new(out)
    }

    /// True iff gcd(f, f') is constant (f nonzero).
    pub fn is_square_free(&self, k: &FieldTowerCtx) -> bool {
        !self.is_zero() && self.gcd(k, &self.derivative(k)).is_constant()
    }

    /// Maps every coefficient through the p-power Frobenius.
    pub fn frobenius(&self, k: &FieldTowerCtx) -> Poly {
        Poly::new(self.coeffs.iter().map(|&c| k.frobenius(c)).collect())
    }
}

fn mul_slices(k: &FieldTowerCtx, a: &[Fp2Elem], b: &[Fp2Elem]) -> Vec<Fp2Elem> {
    if a.len().min(b.len()) < KARATSUBA_THRESHOLD {
        return schoolbook(k, a, b);
    }
    karatsuba(k, a, b)
}

fn schoolbook(k: &FieldTowerCtx, a: &[Fp2Elem], b: &[Fp2Elem]) -> Vec<Fp2Elem> {
    let mut out = vec![Fp2Elem::ZERO; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = k.add(out[i + j], k.mul(x, y));
        }
    }
    out
}

fn karatsuba(k: &FieldTowerCtx, a: &[Fp2Elem], b: &[Fp2Elem]) -> Vec<Fp2Elem> {
    let half = a.len().max(b.len()) / 2;
    let split = |s: &[Fp2Elem]| -> (Vec<Fp2Elem>, Vec<Fp2Elem>) {
        if s.len() <= half {
            (s.to_vec(), Vec::new())
        } else {
            (s[..half].to_vec(), s[half..].to_vec())
        }
    };
    let (a0, a1) = split(a);
    let (b0, b1) = split(b);
    let mut out = vec![Fp2Elem::ZERO; a.len() + b.len() - 1];
    let acc = |out: &mut Vec<Fp2Elem>, v: &[Fp2Elem], shift: usize, negate: bool| {
        for (i, &c) in v.iter().enumerate() {
            if i + shift < out.len() {
                out[i + shift] = if negate {
                    k.sub(out[i + shift], c)
                } else {
                    k.add(out[i + shift], c)
                };
            }
        }
    };
    let mulv = |x: &[Fp2Elem], y: &[Fp2Elem]| -> Vec<Fp2Elem> {
        if x.is_empty() || y.is_empty() {
            Vec::new()
        } else {
            mul_slices(k, x, y)
        }
    };
    let z0 = mulv(&a0, &b0);
    let z2 = mulv(&a1, &b1);
    let sum = |x: &[Fp2Elem], y: &[Fp2Elem]| -> Vec<Fp2Elem> {
        (0..x.len().max(y.len()))
            .map(|i| {
                k.add(
                    x.get(i).copied().unwrap_or(Fp2Elem::ZERO),
                    y.get(i).copied().unwrap_or(Fp2Elem::ZERO),
                )
            })
            .collect()
    };
    let z1 = mulv(&sum(&a0, &a1), &sum(&b0, &b1));
    acc(&mut out, &z0, 0, false);
    acc(&mut out, &z2, 2 * half, false);
    acc(&mut out, &z1, half, false);
    acc(&mut out, &z0, half, true);
    acc(&mut out, &z2, half, true);
    out
}
