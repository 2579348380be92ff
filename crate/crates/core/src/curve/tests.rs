use proptest::prelude::*;

use super::*;
use crate::field::{is_prime, FieldTowerCtx, Poly};

fn sparse(k: &FieldTowerCtx, terms: &[(usize, i64)]) -> HyperCurve {
    let deg = terms.iter().map(|t| t.0).max().unwrap();
    let mut v = vec![0i64; deg + 1];
    for &(i, a) in terms {
        v[i] += a;
    }
    HyperCurve::new(k, Poly::from_ints(k, &v)).unwrap()
}

fn primes(lo: u64, hi: u64) -> impl Iterator<Item = u64> {
    (lo..hi).filter(|&n| is_prime(n))
}

fn random_map(k: &FieldTowerCtx, v: [(u32, u32); 4]) -> Option<MobiusMap> {
    let p = k.p() as i64;
    let e = |(a, b): (u32, u32)| k.elem(a as i64 % p, b as i64 % p);
    MobiusMap::new(k, e(v[0]), e(v[1]), e(v[2]), e(v[3])).ok()
}

fn arb_map_entries() -> impl Strategy<Value = [(u32, u32); 4]> {
    prop::array::uniform4((any::<u32>(), any::<u32>()))
}

#[test]
fn x11_plus_1_congruence() {
    // observed: superspecial exactly when p = 21 (mod 22), i.e. p = 10 (mod 11)
    for p in primes(13, 200) {
        let k = FieldTowerCtx::new(p).unwrap();
        let h = sparse(&k, &[(11, 1), (0, 1)]);
        assert_eq!(is_superspecial(&k, &h), p % 11 == 10, "p = {p}");
    }
}

#[test]
fn x11_plus_x_and_x12_plus_1_congruences() {
    for p in primes(13, 200) {
        let k = FieldTowerCtx::new(p).unwrap();
        let h = sparse(&k, &[(11, 1), (1, 1)]);
        assert_eq!(
            is_superspecial(&k, &h),
            p % 20 == 11 || p % 20 == 19,
            "x^11+x, p = {p}"
        );
        let h = sparse(&k, &[(12, 1), (0, 1)]);
        assert_eq!(is_superspecial(&k, &h), p % 12 == 11, "x^12+1, p = {p}");
    }
}

#[test]
fn orbit_times_stabilizer() {
    for (p, terms) in [
        (23, vec![(12, 1), (0, 1)]),
        (41, vec![(11, 1), (1, 1)]),
        (43, vec![(11, 1), (0, 1)]),
    ] {
        let k = FieldTowerCtx::new(p).unwrap();
        let h = sparse(&k, &terms);
        let b = branch_set(&k, &h).unwrap();
        let n = b.len();
        let key = canonical_form(&k, &b);
        let pts = b.points();
        let mut images = std::collections::BTreeSet::new();
        let mut hits = 0;
        for_each_ordered_triple(n, |i, j, l| {
            let m = mobius_to_standard(&k, pts[i], pts[j], pts[l]).unwrap();
            let mut img: Vec<P1Point> = pts.iter().map(|&q| m.apply(&k, q)).collect();
            img.sort();
            hits += usize::from(img == key);
            images.insert(img);
        });
        let stab = reduced_automorphisms(&k, &b).len();
        assert_eq!(images.len() * stab, n * (n - 1) * (n - 2));
        assert_eq!(hits, stab);
    }
}

#[test]
fn full_order_is_twice_reduced_and_c2_cubed_matches_label() {
    let k = FieldTowerCtx::new(23).unwrap();
    let curves = [
        sparse(&k, &[(12, 1), (0, 1)]),
        sparse(&k, &[(12, 1), (6, 5), (0, 1)]),
        sparse(&k, &[(12, 1), (8, -33), (4, -33), (0, 1)]),
    ];
    for h in curves {
        let Ok(b) = branch_set(&k, &h) else { continue };
        let t = full_automorphism_type(&k, &h).unwrap();
        let g = FullGroup::new(&k, &h, &b);
        assert_eq!(t.order, 2 * g.reduced_order());
        assert_eq!(
            g.has_c2_cubed(),
            t.label.contains_c2_cubed(),
            "{:?}",
            t.label
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn key_is_invariant_under_mobius(v in arb_map_entries()) {
        let k = FieldTowerCtx::new(23).unwrap();
        let pts = (0..12).map(|i| P1Point::Finite(k.elem(i, i * i + 1))).collect();
        let b = BranchSet::new(pts).unwrap();
        if let Some(m) = random_map(&k, v) {
            prop_assert_eq!(canonical_key(&k, &b.transform(&k, &m)), canonical_key(&k, &b));
        }
    }

    #[test]
    fn superspeciality_survives_transport(v in arb_map_entries()) {
        let k = FieldTowerCtx::new(23).unwrap();
        for h in [sparse(&k, &[(12, 1), (0, 1)]), sparse(&k, &[(12, 1), (4, 3), (0, 1)])] {
            if let Some(m) = random_map(&k, v) {
                let h2 = transport_curve(&k, &h, &m).unwrap();
                prop_assert_eq!(is_superspecial(&k, &h2), is_superspecial(&k, &h));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn superspeciality_survives_transport_genus2(v in arb_map_entries()) {
        let k = FieldTowerCtx::new(23).unwrap();
        let h = sparse(&k, &[(5, 1), (1, -1)]);
        let base = is_superspecial(&k, &h);
        if let Some(m) = random_map(&k, v) {
            let h2 = transport_curve(&k, &h, &m).unwrap();
            prop_assert_eq!(is_superspecial(&k, &h2), base);
        }
    }
}
