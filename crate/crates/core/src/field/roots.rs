//! Roots in F_{p^2} of polynomials over F_{p^2}.
//!
//! gcd with x^(p^2) - x isolates the product of the distinct linear factors,
//! which is then split by Cantor-Zassenhaus style equal-degree splitting.
//! The splitting randomness is seeded from a hash of (p, coefficients), so
//! repeated calls return identical results.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::fp2::{FieldTowerCtx, Fp2Elem};
use super::poly::Poly;
use crate::error::{Error, Result};

/// All roots of `f` in F_{p^2}, with multiplicity, sorted.
pub fn poly_roots(k: &FieldTowerCtx, f: &Poly) -> Result<Vec<Fp2Elem>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let distinct = distinct_roots(k, f)?;
    let mut out = Vec::with_capacity(f.degree().unwrap_or(0));
    for r in distinct {
        let lin = Poly::linear(k, r);
        let mut g = f.clone();
        loop {
            let (q, rem) = g.div_rem(k, &lin);
            if !rem.is_zero() {
                break;
            }
            out.push(r);
            g = q;
        }
    }
    out.sort();
    Ok(out)
}

/// The distinct roots of `f` in F_{p^2}, sorted.
pub fn distinct_roots(k: &FieldTowerCtx, f: &Poly) -> Result<Vec<Fp2Elem>> {
    let Some(deg) = f.degree() else {
        return Err(Error::ZeroPolynomial);
    };
    if deg == 0 {
        return Ok(Vec::new());
    }
    let f = f.monic(k);
    let q = k.p() * k.p();
    let xq = Poly::x().pow_mod(k, q, &f);
    let g = f.gcd(k, &xq.sub(k, &Poly::x()));
    let mut rng = ChaCha8Rng::seed_from_u64(seed_for(k, &f));
    let mut roots = Vec::new();
    split_linear(k, &g, &mut rng, &mut roots);
    roots.sort();
    Ok(roots)
}

fn split_linear(k: &FieldTowerCtx, g: &Poly, rng: &mut ChaCha8Rng, out: &mut Vec<Fp2Elem>) {
    match g.degree() {
        None | Some(0) => {}
        Some(1) => {
            let g = g.monic(k);
            out.push(k.neg(g.coeff(0)));
        }
        Some(d) => {
            let half = (k.p() * k.p() - 1) / 2;
            let p = k.p();
            loop {
                let a = k.elem(rng.gen_range(0..p) as i64, rng.gen_range(0..p) as i64);
                let shifted = Poly::new(vec![a, Fp2Elem::ONE]);
                let h = shifted.pow_mod(k, half, g).sub(k, &Poly::one());
                let d1 = g.gcd(k, &h);
                let dd = d1.degree().unwrap_or(0);
                if dd > 0 && dd < d {
                    let (other, _) = g.div_rem(k, &d1);
                    split_linear(k, &d1, rng, out);
                    split_linear(k, &other, rng, out);
                    return;
                }
            }
        }
    }
}

fn seed_for(k: &FieldTowerCtx, f: &Poly) -> u64 {
    // FNV-1a over p and the coefficient words
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    let mut eat = |w: u64| {
        for b in w.to_le_bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
    };
    eat(k.p());
    for c in f.coeffs() {
        eat(((c.c1 as u64) << 32) | c.c0 as u64);
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plus_minus_one() {
        let k = FieldTowerCtx::new(13).unwrap();
        let f = Poly::from_ints(&k, &[-1, 0, 1]);
        assert_eq!(poly_roots(&k, &f).unwrap(), vec![k.one(), k.from_i64(12)]);
    }

    #[test]
    fn sqrt_of_r() {
        let k = FieldTowerCtx::new(23).unwrap();
        let f = Poly::from_ints(&k, &[-(k.nonresidue() as i64), 0, 1]);
        let roots = poly_roots(&k, &f).unwrap();
        assert_eq!(roots, vec![k.omega(), k.neg(k.omega())]);
    }

    #[test]
    fn multiplicities_are_reported() {
        let k = FieldTowerCtx::new(17).unwrap();
        let a = k.elem(2, 3);
        let f = Poly::from_roots(&k, &[a, a, a, k.one()])
            .mul(&k, &Poly::from_ints(&k, &[-3, 0, 0, 0, 1])); // x^4 - 3 may not split
        let roots = poly_roots(&k, &f).unwrap();
        assert_eq!(roots.iter().filter(|&&r| r == a).count(), 3);
        for r in roots {
            assert!(f.eval(&k, r).is_zero());
        }
    }

    #[test]
    fn zero_polynomial_is_an_error() {
        let k = FieldTowerCtx::new(13).unwrap();
        assert!(matches!(
            poly_roots(&k, &Poly::zero()),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn deterministic() {
        let k = FieldTowerCtx::new(101).unwrap();
        let f = Poly::from_ints(&k, &[5, 1, 0, 7, 0, 0, 1, 3, 1]);
        assert_eq!(poly_roots(&k, &f).unwrap(), poly_roots(&k, &f).unwrap());
    }
}
