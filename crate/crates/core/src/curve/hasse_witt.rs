//! Cartier-Manin (Hasse-Witt) matrices of hyperelliptic curves.
//!
//! Entry (i, j), 1 <= i, j <= g, is the coefficient of x^(ip - j) in
//! f(x)^((p-1)/2). Transposing or Frobenius-twisting the convention does not
//! change whether the matrix vanishes, which is all the superspeciality test
//! needs; this layout is the one pinned by the tests below.

use super::hyper::HyperCurve;
use crate::field::{FieldTowerCtx, Fp2Elem};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HwMatrix {
    g: usize,
    rows: Vec<Vec<Fp2Elem>>,
}

impl HwMatrix {
    pub fn genus(&self) -> usize {
        self.g
    }

    /// Entry (i, j) with 1-based indices.
    pub fn entry(&self, i: usize, j: usize) -> Fp2Elem {
        self.rows[i - 1][j - 1]
    }

    pub fn rows(&self) -> &[Vec<Fp2Elem>] {
        &self.rows
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(|c| c.is_zero())
    }

    pub fn rank(&self, k: &FieldTowerCtx) -> usize {
        let mut m = self.rows.clone();
        let n = self.g;
        let mut rank = 0;
        for col in 0..n {
            let Some(piv) = (rank..n).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(rank, piv);
            let inv = k.inv(m[rank][col]);
            let pivot_row = m[rank].clone();
            for (r, row) in m.iter_mut().enumerate() {
                if r != rank && !row[col].is_zero() {
                    let factor = k.mul(row[col], inv);
                    for (x, &y) in row.iter_mut().zip(&pivot_row).skip(col) {
                        *x = k.sub(*x, k.mul(factor, y));
                    }
                }
            }
            rank += 1;
        }
        rank
    }
}

pub fn hasse_witt_matrix(k: &FieldTowerCtx, h: &HyperCurve) -> HwMatrix {
    let p = k.p() as usize;
    let g = h.genus();
    let pw = h.f().pow_trunc(k, (k.p() - 1) / 2, g * p);
    let rows = (1..=g)
        .map(|i| (1..=g).map(|j| pw.coeff(i * p - j)).collect())
        .collect();
    HwMatrix { g, rows }
}

/// A curve is superspecial exactly when its Cartier-Manin matrix vanishes.
pub fn is_superspecial(k: &FieldTowerCtx, h: &HyperCurve) -> bool {
    hasse_witt_matrix(k, h).is_zero()
}

/// For genus 1 the same test decides supersingularity.
pub fn is_supersingular_elliptic(k: &FieldTowerCtx, h: &HyperCurve) -> bool {
    assert_eq!(h.genus(), 1, "expects an elliptic curve");
    is_superspecial(k, h)
}
