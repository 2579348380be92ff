//! The one-parameter families and the parameterless normal forms.

use std::collections::{BTreeMap, BTreeSet};

use super::hypergeom::{truncated_hypergeometric, HypergeomSpec, Rational};
use super::record::Source;
use super::Candidate;
use crate::curve::HyperCurve;
use crate::elliptic::{j_from_legendre, legendre_params_of_j, SupersingularSet};
use crate::error::Result;
use crate::field::{distinct_roots, ExtElem, ExtField, FieldTowerCtx, Fp2Elem, Poly};

/// What one family produced, plus the numbers the heuristic monitors watch.
#[derive(Clone, Debug, Default)]
pub struct FamilyOutcome {
    pub candidates: Vec<Candidate>,
    /// Distinct parameter values that passed the supersingularity tests.
    pub stored_params: usize,
    /// Degree of the gcd polynomial, for the x⁶ family.
    pub gcd_degree: Option<usize>,
    /// Set when the family cannot contribute at this p.
    pub skipped: Option<String>,
}

/// Keeps the first candidate of each canonical key.
fn dedup_by_key(mut out: FamilyOutcome) -> FamilyOutcome {
    let mut seen = BTreeSet::new();
    out.candidates.retain(|c| seen.insert(c.key.clone()));
    out
}

fn sparse(k: &FieldTowerCtx, terms: &[(usize, Fp2Elem)]) -> Poly {
    let deg = terms.iter().map(|t| t.0).max().unwrap_or(0);
    let mut v = vec![Fp2Elem::ZERO; deg + 1];
    for &(i, a) in terms {
        v[i] = k.add(v[i], a);
    }
    Poly::new(v)
}

fn in_s(k: &FieldTowerCtx, s: &SupersingularSet, lambda: Fp2Elem) -> bool {
    j_from_legendre(k, lambda).is_ok_and(|j| s.contains(j.0))
}

fn distinct_params(k: &FieldTowerCtx, j: Fp2Elem) -> Vec<Fp2Elem> {
    let mut v = legendre_params_of_j(k, j);
    v.dedup();
    v
}

/// (x⁴ + 1)(x⁸ − Ax⁴ + 1).
pub fn type7_curve(k: &FieldTowerCtx, a: Fp2Elem) -> Result<HyperCurve> {
    let one = k.one();
    let c = k.sub(one, a);
    HyperCurve::new(k, sparse(k, &[(12, one), (8, c), (4, c), (0, one)]))
}

/// A = 2 + 16δ/(δ − 1)².
pub fn type7_a_of_delta(k: &FieldTowerCtx, d: Fp2Elem) -> Fp2Elem {
    let dm1 = k.sub(d, k.one());
    k.add(k.from_i64(2), k.div(k.mul_int(d, 16), k.sqr(dm1)))
}

/// 64(2δ − 1)³(2δ + 1)³ / δ².
pub fn type7_second_j(k: &FieldTowerCtx, d: Fp2Elem) -> Fp2Elem {
    let m = k.sub(k.mul_int(d, 2), k.one());
    let pl = k.add(k.mul_int(d, 2), k.one());
    let t = k.mul(m, pl);
    k.div(k.mul_int(k.mul(k.sqr(t), t), 64), k.sqr(d))
}

/// Curves (x⁴+1)(x⁸−Ax⁴+1) with every elliptic factor supersingular.
pub fn enumerate_type7(k: &FieldTowerCtx, s: &SupersingularSet) -> Result<FamilyOutcome> {
    if k.p() % 4 != 3 {
        return Ok(FamilyOutcome {
            skipped: Some("p = 1 (mod 4): j = 1728 is ordinary".into()),
            ..Default::default()
        });
    }
    let (one, mone) = (k.one(), k.from_i64(-1));
    let mut stored: BTreeMap<Fp2Elem, Fp2Elem> = BTreeMap::new();
    for j in s.values() {
        for d in distinct_params(k, j.0) {
            if d.is_zero() || d == one || d == mone {
                continue;
            }
            if s.contains(type7_second_j(k, d)) {
                stored.entry(type7_a_of_delta(k, d)).or_insert(d);
            }
        }
    }
    let mut out = FamilyOutcome {
        stored_params: stored.len(),
        ..Default::default()
    };
    let two = k.from_i64(2);
    for (a, d) in stored {
        if a == two || a == k.neg(two) {
            continue;
        }
        let h = type7_curve(k, a)?;
        let params = BTreeMap::from([
            ("A".to_string(), k.encode(a)),
            ("delta".to_string(), k.encode(d)),
        ]);
        out.candidates
            .push(Candidate::new(k, h, params, Source::FamilyA4)?);
    }
    Ok(dedup_by_key(out))
}

/// (x⁶ − 1)(x⁶ − δ).
pub fn type9_curve(k: &FieldTowerCtx, d: Fp2Elem) -> Result<HyperCurve> {
    let one = k.one();
    HyperCurve::new(
        k,
        sparse(k, &[(12, one), (6, k.neg(k.add(one, d))), (0, d)]),
    )
}

/// The three truncated series whose common roots are the superspecial δ.
pub fn type9_series(k: &FieldTowerCtx) -> Result<[Poly; 3]> {
    let p = k.p() as usize;
    let r = Rational::new;
    let half = r(1, 2);
    let (f1, f2) = if p % 6 == 1 {
        (
            HypergeomSpec {
                a: half,
                b: r(1, 6),
                c: r(2, 3),
                d: (p - 1) / 6,
            },
            HypergeomSpec {
                a: half,
                b: r(1, 3),
                c: r(5, 6),
                d: (p - 1) / 3,
            },
        )
    } else {
        (
            HypergeomSpec {
                a: half,
                b: r(5, 6),
                c: r(4, 3),
                d: (p - 5) / 6,
            },
            HypergeomSpec {
                a: half,
                b: r(2, 3),
                c: r(7, 6),
                d: (p - 2) / 3,
            },
        )
    };
    let f3 = HypergeomSpec {
        a: half,
        b: half,
        c: r(1, 1),
        d: (p - 1) / 2,
    };
    Ok([
        truncated_hypergeometric(k, &f1)?,
        truncated_hypergeometric(k, &f2)?,
        truncated_hypergeometric(k, &f3)?,
    ])
}

fn ext_j_of_cubic(e: &ExtField, a: ExtElem, b: ExtElem, c: ExtElem) -> Option<Fp2Elem> {
    // 256 (a² − 3b)³ / (a²b² − 4b³ − 4a³c − 27c² + 18abc)
    let n = |v: i64| e.from_base(e.k.from_i64(v));
    let a2 = e.mul(a, a);
    let t = e.sub(a2, e.mul(n(3), b));
    let num = e.mul(n(256), e.mul(e.mul(t, t), t));
    let disc = [
        e.mul(a2, e.mul(b, b)),
        e.mul(n(-4), e.mul(e.mul(b, b), b)),
        e.mul(n(-4), e.mul(e.mul(a2, a), c)),
        e.mul(n(-27), e.mul(c, c)),
        e.mul(n(18), e.mul(e.mul(a, b), c)),
    ]
    .into_iter()
    .fold(e.zero(), |acc, v| e.add(acc, v));
    let inv = e.try_inv(disc)?;
    e.to_base(e.mul(num, inv))
}

/// The four-elliptic-curve test for x¹² + Ax⁶ + 1 with A² = δ + 1/δ + 2:
/// X³ + (3X + 2 ∓ A)², X(X² + AX + 1) and X³ − 3X + A all supersingular.
pub fn type9_four_curve_test(k: &FieldTowerCtx, s: &SupersingularSet, d: Fp2Elem) -> bool {
    let Some(dinv) = k.try_inv(d) else {
        return false;
    };
    let a_sq = k.add(k.add(d, dinv), k.from_i64(2));
    let e = ExtField::new(k);
    let a = e.sqrt_of_base(a_sq);
    let n = |v: i64| e.from_base(k.from_i64(v));
    let js = [
        // X³ + 9X² + 6(2 − A)X + (2 − A)² and its conjugate
        {
            let t = e.sub(n(2), a);
            ext_j_of_cubic(&e, n(9), e.mul(n(6), t), e.mul(t, t))
        },
        {
            let t = e.add(n(2), a);
            ext_j_of_cubic(&e, n(9), e.mul(n(6), t), e.mul(t, t))
        },
        ext_j_of_cubic(&e, a, n(1), n(0)),
        ext_j_of_cubic(&e, n(0), n(-3), a),
    ];
    js.iter().all(|j| j.is_some_and(|j| s.contains(j)))
}

/// Whether δ is a common root of the three truncated series.
pub fn type9_series_test(k: &FieldTowerCtx, d: Fp2Elem) -> Result<bool> {
    Ok(type9_series(k)?.iter().all(|f| f.eval(k, d).is_zero()))
}

pub fn enumerate_type9(k: &FieldTowerCtx) -> Result<FamilyOutcome> {
    let [f1, f2, f3] = type9_series(k)?;
    let f = f1.gcd(k, &f2).gcd(k, &f3);
    let degree = f.degree().unwrap_or(0);
    let roots: Vec<Fp2Elem> = if degree == 0 {
        Vec::new()
    } else {
        distinct_roots(k, &f)?
    };
    let mut out = FamilyOutcome {
        gcd_degree: Some(degree),
        ..Default::default()
    };
    for d in roots {
        if d.is_zero() || d == k.one() {
            continue;
        }
        out.stored_params += 1;
        let h = type9_curve(k, d)?;
        let params = BTreeMap::from([("delta".to_string(), k.encode(d))]);
        out.candidates
            .push(Candidate::new(k, h, params, Source::FamilyX6)?);
    }
    Ok(dedup_by_key(out))
}

/// x¹² − Ax¹⁰ − 33x⁸ + 2Ax⁶ − 33x⁴ − Ax² + 1.
pub fn type10_curve(k: &FieldTowerCtx, a: Fp2Elem) -> Result<HyperCurve> {
    let (one, ma, c33) = (k.one(), k.neg(a), k.from_i64(-33));
    HyperCurve::new(
        k,
        sparse(
            k,
            &[
                (12, one),
                (10, ma),
                (8, c33),
                (6, k.mul_int(a, 2)),
                (4, c33),
                (2, ma),
                (0, one),
            ],
        ),
    )
}

/// A = 2(δ + 1)(δ − 2)(2δ − 1) / (δ(δ − 1)).
pub fn type10_a_of_delta(k: &FieldTowerCtx, d: Fp2Elem) -> Fp2Elem {
    let one = k.one();
    let num = k.mul(
        k.mul(k.add(d, one), k.sub(d, k.from_i64(2))),
        k.sub(k.mul_int(d, 2), one),
    );
    k.div(k.mul_int(num, 2), k.mul(d, k.sub(d, one)))
}

/// ε and ε′ = (1 − δ)(δ ∓ r)² with r² = δ² − δ + 1, when r is in F_{p^2}.
pub fn type10_epsilons(k: &FieldTowerCtx, d: Fp2Elem) -> Option<(Fp2Elem, Fp2Elem)> {
    let q = k.add(k.sub(k.sqr(d), d), k.one());
    let (r, _) = k.sqrt(q)?;
    let omd = k.sub(k.one(), d);
    Some((
        k.mul(omd, k.sqr(k.sub(d, r))),
        k.mul(omd, k.sqr(k.add(d, r))),
    ))
}

pub fn enumerate_type10(k: &FieldTowerCtx, s: &SupersingularSet) -> Result<FamilyOutcome> {
    let one = k.one();
    let mut stored: BTreeMap<Fp2Elem, (Fp2Elem, Fp2Elem, Fp2Elem)> = BTreeMap::new();
    for j in s.values() {
        for d in distinct_params(k, j.0) {
            if d.is_zero() || d == one || k.add(k.sub(k.sqr(d), d), one).is_zero() {
                continue;
            }
            let Some((eps, eps2)) = type10_epsilons(k, d) else {
                continue;
            };
            if in_s(k, s, eps) && in_s(k, s, eps2) {
                stored
                    .entry(type10_a_of_delta(k, d))
                    .or_insert((d, eps, eps2));
            }
        }
    }
    let mut out = FamilyOutcome {
        stored_params: stored.len(),
        ..Default::default()
    };
    for (a, (d, eps, eps2)) in stored {
        if k.add(k.sqr(a), k.from_i64(108)).is_zero() {
            continue;
        }
        let h = type10_curve(k, a)?;
        let params = BTreeMap::from([
            ("A".to_string(), k.encode(a)),
            ("delta".to_string(), k.encode(d)),
            ("epsilon".to_string(), k.encode(eps)),
            ("epsilon_prime".to_string(), k.encode(eps2)),
        ]);
        out.candidates
            .push(Candidate::new(k, h, params, Source::FamilyTetra)?);
    }
    Ok(dedup_by_key(out))
}

/// Normal forms of the three parameterless types: x¹² − 33x⁸ − 33x⁴ + 1,
/// x¹¹ + 11x⁶ − x and x¹² + 1.
pub fn parameterless_curves(k: &FieldTowerCtx) -> Vec<HyperCurve> {
    let (one, i) = (k.one(), |v: i64| k.from_i64(v));
    [
        sparse(k, &[(12, one), (8, i(-33)), (4, i(-33)), (0, one)]),
        sparse(k, &[(11, one), (6, i(11)), (1, i(-1))]),
        sparse(k, &[(12, one), (0, one)]),
    ]
    .into_iter()
    .map(|f| HyperCurve::new(k, f).expect("square-free for p > 11"))
    .collect()
}

/// The superspecial parameterless normal forms.
pub fn enumerate_parameterless(k: &FieldTowerCtx) -> Result<FamilyOutcome> {
    let mut out = FamilyOutcome::default();
    for h in parameterless_curves(k) {
        if crate::curve::is_superspecial(k, &h) {
            out.candidates
                .push(Candidate::new(k, h, BTreeMap::new(), Source::NormalForm)?);
        }
    }
    out.stored_params = out.candidates.len();
    Ok(dedup_by_key(out))
}

/// Distinct keys in a list of candidates.
pub(crate) fn keys_of<'a>(
    c: impl IntoIterator<Item = &'a Candidate>,
) -> BTreeSet<crate::curve::CanonicalKey> {
    c.into_iter().map(|c| c.key.clone()).collect()
}
