//! Truncated Gaussian hypergeometric series reduced mod p.

use crate::error::{Error, Result};
use crate::field::{FieldTowerCtx, Fp2Elem, Poly};

/// A rational number num/den with den > 0.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Rational {
    pub num: i64,
    pub den: i64,
}

impl Rational {
    pub const fn new(num: i64, den: i64) -> Self {
        assert!(den > 0, "denominator must be positive");
        Rational { num, den }
    }

    /// (num + n·den)/den, i.e. self + n.
    fn shifted(self, n: i64) -> Rational {
        Rational {
            num: self.num + n * self.den,
            den: self.den,
        }
    }

    fn reduce(self, k: &FieldTowerCtx) -> Option<Fp2Elem> {
        let d = k.from_i64(self.den);
        k.try_inv(d).map(|inv| k.mul(k.from_i64(self.num), inv))
    }
}

#[derive(Clone, Copy, Debug)]
pub struct HypergeomSpec {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    /// Degree of truncation.
    pub d: usize,
}

/// Σ_{n ≤ d} (a)_n (b)_n / ((c)_n n!) zⁿ, built term by term from
/// coeff_{n+1} = coeff_n (a+n)(b+n) / ((c+n)(n+1)).
pub fn truncated_hypergeometric(k: &FieldTowerCtx, spec: &HypergeomSpec) -> Result<Poly> {
    let mut coeffs = Vec::with_capacity(spec.d + 1);
    let mut c = k.one();
    coeffs.push(c);
    for n in 0..spec.d {
        let idx = n + 1;
        let bad = || Error::HypergeometricDenominator { index: idx };
        let a = spec.a.shifted(n as i64).reduce(k).ok_or_else(bad)?;
        let b = spec.b.shifted(n as i64).reduce(k).ok_or_else(bad)?;
        let cn = spec.c.shifted(n as i64).reduce(k).ok_or_else(bad)?;
        let den = k.mul(cn, k.from_u64(idx as u64));
        let inv = k.try_inv(den).ok_or_else(bad)?;
        c = k.mul(k.mul(c, k.mul(a, b)), inv);
        coeffs.push(c);
    }
    Ok(Poly::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elliptic::hasse_polynomial;

    const HALF: Rational = Rational::new(1, 2);
    const ONE: Rational = Rational::new(1, 1);

    #[test]
    fn small_cases() {
        let k = FieldTowerCtx::new(13).unwrap();
        let g0 = truncated_hypergeometric(
            &k,
            &HypergeomSpec {
                a: HALF,
                b: HALF,
                c: ONE,
                d: 0,
            },
        )
        .unwrap();
        assert_eq!(g0, Poly::one());
        let g1 = truncated_hypergeometric(
            &k,
            &HypergeomSpec {
                a: HALF,
                b: HALF,
                c: ONE,
                d: 1,
            },
        )
        .unwrap();
        assert_eq!(g1, Poly::new(vec![k.one(), k.inv(k.from_i64(4))]));
    }

    #[test]
    fn legendre_case_is_hasse_polynomial() {
        // (1/2)_n / n! = (−1)ⁿ C(−1/2, n) and −1/2 = (p−1)/2 mod p
        for p in [13, 17, 29, 31] {
            let k = FieldTowerCtx::new(p).unwrap();
            let d = ((p - 1) / 2) as usize;
            let g = truncated_hypergeometric(
                &k,
                &HypergeomSpec {
                    a: HALF,
                    b: HALF,
                    c: ONE,
                    d,
                },
            )
            .unwrap();
            assert_eq!(g, hasse_polynomial(&k), "p = {p}");
        }
    }

    #[test]
    fn denominator_divisible_by_p() {
        let k = FieldTowerCtx::new(13).unwrap();
        let spec = HypergeomSpec {
            a: HALF,
            b: HALF,
            c: ONE,
            d: 13,
        };
        assert!(matches!(
            truncated_hypergeometric(&k, &spec),
            Err(Error::HypergeometricDenominator { index: 13 })
        ));
    }
}
