//! j-invariants from Legendre parameters, four branch points and cubics.

use crate::curve::{cross_ratio, P1Point};
use crate::error::{Error, Result};
use crate::field::{poly_roots, FieldTowerCtx, Fp2Elem, Poly};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct JInvariant(pub Fp2Elem);

impl JInvariant {
    pub fn value(self) -> Fp2Elem {
        self.0
    }
}

/// j = 256 (λ² − λ + 1)³ / (λ² (λ − 1)²).
pub fn j_from_legendre(k: &FieldTowerCtx, lambda: Fp2Elem) -> Result<JInvariant> {
    let lm1 = k.sub(lambda, k.one());
    let den = k.mul(k.sqr(lambda), k.sqr(lm1));
    let inv = k
        .try_inv(den)
        .ok_or_else(|| Error::RejectedInput("Legendre parameter must avoid 0 and 1".into()))?;
    let t = k.add(k.sub(k.sqr(lambda), lambda), k.one());
    let num = k.mul_int(k.mul(k.sqr(t), t), 256);
    Ok(JInvariant(k.mul(num, inv)))
}

/// j of the elliptic curve branched over four distinct points of P^1.
pub fn j_from_four_points(k: &FieldTowerCtx, q: [P1Point; 4]) -> Result<JInvariant> {
    match cross_ratio(k, q)? {
        P1Point::Finite(l) => j_from_legendre(k, l),
        P1Point::Infinity => Err(Error::RepeatedPoints),
    }
}

/// j of y² = x³ + a x² + b x + c.
pub fn j_from_cubic(k: &FieldTowerCtx, a: Fp2Elem, b: Fp2Elem, c: Fp2Elem) -> Result<JInvariant> {
    // 256 (a² − 3b)³ / disc, disc = a²b² − 4b³ − 4a³c − 27c² + 18abc
    let a2 = k.sqr(a);
    let t = k.sub(a2, k.mul_int(b, 3));
    let num = k.mul_int(k.mul(k.sqr(t), t), 256);
    let disc = [
        k.mul(a2, k.sqr(b)),
        k.mul_int(k.mul(k.sqr(b), b), -4),
        k.mul_int(k.mul(k.mul(a2, a), c), -4),
        k.mul_int(k.sqr(c), -27),
        k.mul_int(k.mul(k.mul(a, b), c), 18),
    ]
    .into_iter()
    .fold(Fp2Elem::ZERO, |acc, v| k.add(acc, v));
    let inv = k
        .try_inv(disc)
        .ok_or_else(|| Error::RejectedInput("singular cubic".into()))?;
    Ok(JInvariant(k.mul(num, inv)))
}

/// Roots of 256(z² − z + 1)³ − j z²(z − 1)² in F_{p^2}, with multiplicity:
/// the Legendre parameters of the curves with invariant j.
pub fn legendre_params_of_j(k: &FieldTowerCtx, j: Fp2Elem) -> Vec<Fp2Elem> {
    let t = Poly::from_ints(k, &[1, -1, 1]);
    let lhs = t.pow(k, 3).scale(k, k.from_i64(256));
    let rhs = Poly::from_ints(k, &[0, 0, 1, -2, 1]).scale(k, j);
    poly_roots(k, &lhs.sub(k, &rhs)).expect("the sextic has leading coefficient 256")
}

/// Σ_{i ≤ (p−1)/2} C((p−1)/2, i)² z^i over F_p; its roots are the
/// supersingular Legendre parameters.
pub fn hasse_polynomial(k: &FieldTowerCtx) -> Poly {
    let m = (k.p() - 1) / 2;
    let mut coeffs = Vec::with_capacity(m as usize + 1);
    let mut binom = k.one();
    for i in 0..=m {
        coeffs.push(k.sqr(binom));
        // C(m, i+1) = C(m, i) (m − i) / (i + 1); i + 1 <= m < p so the division is safe
        if i < m {
            binom = k.mul(binom, k.div(k.from_u64(m - i), k.from_u64(i + 1)));
        }
    }
    Poly::new(coeffs)
}

/// The classical modular polynomial Φ₂(X, Y) specialised at Y = j, as a cubic in X.
pub fn phi2_at(k: &FieldTowerCtx, j: Fp2Elem) -> Poly {
    let c = |v: i64| k.from_i64(v);
    let j2 = k.sqr(j);
    let j3 = k.mul(j2, j);
    // X³ + Y³ − X²Y² + 1488(X²Y + XY²) − 162000(X² + Y²) + 40773375 XY
    //   + 8748000000(X + Y) − 157464000000000
    let x0 = [
        j3,
        k.mul(c(-162000), j2),
        k.mul(c(8748000000), j),
        c(-157464000000000),
    ];
    let x1 = [k.mul(c(1488), j2), k.mul(c(40773375), j), c(8748000000)];
    let x2 = [k.neg(j2), k.mul(c(1488), j), c(-162000)];
    let sum = |v: &[Fp2Elem]| v.iter().fold(Fp2Elem::ZERO, |a, &b| k.add(a, b));
    Poly::new(vec![sum(&x0), sum(&x1), sum(&x2), k.one()])
}
