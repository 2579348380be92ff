//! Hyperelliptic curves y^2 = f(x) and their branch points.

use super::p1::{MobiusMap, P1Point};
use crate::error::{Error, Result};
use crate::field::{distinct_roots, FieldTowerCtx, Fp2Elem, Poly};

/// y^2 = f(x) with f square-free of degree at least 3.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct HyperCurve {
    f: Poly,
    genus: usize,
}

impl HyperCurve {
    pub fn new(k: &FieldTowerCtx, f: Poly) -> Result<Self> {
        let deg = f.degree().ok_or(Error::ZeroPolynomial)?;
        if !f.is_square_free(k) {
            return Err(Error::NotSquareFree);
        }
        if deg < 3 {
            return Err(Error::RejectedInput(format!(
                "degree {deg} does not define a curve of genus >= 1"
            )));
        }
        Ok(HyperCurve {
            f,
            genus: deg.div_ceil(2) - 1,
        })
    }

    pub fn f(&self) -> &Poly {
        &self.f
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    /// The degree-(2g+2) binary form F(X, Z) = Z^(2g+2) f(X/Z) evaluated at (x, z).
    pub fn eval_form(&self, k: &FieldTowerCtx, x: Fp2Elem, z: Fp2Elem) -> Fp2Elem {
        let n = 2 * self.genus + 2;
        let mut acc = Fp2Elem::ZERO;
        // Horner in x with powers of z folded in from the top
        for i in (0..=n).rev() {
            acc = k.add(
                k.mul(acc, x),
                k.mul(self.f.coeff(i), k.pow(z, (n - i) as u64)),
            );
        }
        acc
    }
}

/// The 2g+2 branch points of a hyperelliptic curve, kept sorted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct BranchSet {
    points: Vec<P1Point>,
}

impl BranchSet {
    /// Builds a branch set; the points must be pairwise distinct.
    pub fn new(mut points: Vec<P1Point>) -> Result<Self> {
        points.sort();
        if points.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::RepeatedPoints);
        }
        Ok(BranchSet { points })
    }

    pub fn points(&self) -> &[P1Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, pt: &P1Point) -> bool {
        self.points.binary_search(pt).is_ok()
    }

    pub fn transform(&self, k: &FieldTowerCtx, m: &MobiusMap) -> BranchSet {
        let mut points: Vec<P1Point> = self.points.iter().map(|&q| m.apply(k, q)).collect();
        points.sort();
        BranchSet { points }
    }

    /// The monic polynomial whose roots are the finite points. The curve
    /// y^2 = f has this branch set (∞ appears because the degree is then odd).
    pub fn to_poly(&self, k: &FieldTowerCtx) -> Poly {
        let roots: Vec<Fp2Elem> = self.points.iter().filter_map(|q| q.finite()).collect();
        Poly::from_roots(k, &roots)
    }

    pub fn to_curve(&self, k: &FieldTowerCtx) -> Result<HyperCurve> {
        HyperCurve::new(k, self.to_poly(k))
    }
}

/// All roots of f in F_{p^2}, plus ∞ when deg f is odd.
pub fn branch_set(k: &FieldTowerCtx, h: &HyperCurve) -> Result<BranchSet> {
    let f = h.f();
    let deg = f.degree().expect("curve polynomial is nonzero");
    let roots = distinct_roots(k, f)?;
    if roots.len() < deg {
        return Err(Error::RootsOutsideField {
            count: deg - roots.len(),
        });
    }
    let mut points: Vec<P1Point> = roots.into_iter().map(P1Point::Finite).collect();
    if deg % 2 == 1 {
        points.push(P1Point::Infinity);
    }
    BranchSet::new(points)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn x12_plus_1_splits_at_13() {
        let k = FieldTowerCtx::new(13).unwrap();
        let mut c = vec![0i64; 13];
        c[0] = 1;
        c[12] = 1;
        let h = HyperCurve::new(&k, Poly::from_ints(&k, &c)).unwrap();
        assert_eq!(h.genus(), 5);
        let b = branch_set(&k, &h).unwrap();
        assert_eq!(b.len(), 12);
        assert!(!b.contains(&P1Point::Infinity));
    }

    #[test]
    fn odd_degree_contributes_infinity() {
        let k = FieldTowerCtx::new(41).unwrap();
        let mut c = vec![0i64; 12];
        c[1] = 1;
        c[11] = 1;
        let h = HyperCurve::new(&k, Poly::from_ints(&k, &c)).unwrap();
        let b = branch_set(&k, &h).unwrap();
        assert_eq!(b.len(), 12);
        assert!(b.contains(&P1Point::Infinity));
        assert!(b.contains(&P1Point::Finite(k.zero())));
        for q in b
            .points()
            .iter()
            .filter_map(|q| q.finite())
            .filter(|x| !x.is_zero())
        {
            assert_eq!(k.pow(q, 10), k.from_i64(-1));
        }
    }

    #[test]
    fn square_is_rejected() {
        let k = FieldTowerCtx::new(13).unwrap();
        let f = Poly::from_ints(&k, &[1, -2, 1]);
        assert!(matches!(HyperCurve::new(&k, f), Err(Error::NotSquareFree)));
        let f3 =
            Poly::from_ints(&k, &[1, -2, 1, 0, 0, 0, 0]).mul(&k, &Poly::from_ints(&k, &[2, 1]));
        assert!(matches!(HyperCurve::new(&k, f3), Err(Error::NotSquareFree)));
    }

    #[test]
    fn roots_outside_are_reported() {
        // 5 does not divide 13^2 - 1, so x -> x^5 is a bijection and x^5 = 2 has one root
        let k = FieldTowerCtx::new(13).unwrap();
        let h = HyperCurve::new(&k, Poly::from_ints(&k, &[-2, 0, 0, 0, 0, 1])).unwrap();
        let r = branch_set(&k, &h);
        assert!(
            matches!(r, Err(Error::RootsOutsideField { count: 4 })),
            "{r:?}"
        );
    }

    #[test]
    fn form_matches_polynomial_on_affine_chart() {
        let k = FieldTowerCtx::new(29).unwrap();
        let h = HyperCurve::new(
            &k,
            Poly::from_ints(&k, &[3, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1]),
        )
        .unwrap();
        let x = k.elem(5, 7);
        assert_eq!(h.eval_form(&k, x, k.one()), h.f().eval(&k, x));
        // odd degree: F(1, 0) is the x^12 coefficient, which is zero
        assert!(h.eval_form(&k, k.one(), k.zero()).is_zero());
    }
}
