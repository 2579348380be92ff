//! Hyperelliptic curves, branch-set geometry and automorphism groups.

mod automorphism;
mod canon;
mod hasse_witt;
mod hyper;
mod p1;
mod text;

pub use automorphism::{
    full_automorphism_type, reduced_automorphisms, transport_curve, FullGroup, GroupLabel, GroupTag,
};
pub(crate) use canon::for_each_ordered_triple;
pub use canon::{canonical_form, canonical_key, CanonicalKey};
pub use hasse_witt::{hasse_witt_matrix, is_supersingular_elliptic, is_superspecial, HwMatrix};
pub use hyper::{branch_set, BranchSet, HyperCurve};
pub use p1::{cross_ratio, MobiusMap, P1Point};
pub use text::{format_curve, format_poly, parse_curve, parse_poly};

/// Shorthand for [`MobiusMap::to_standard`].
pub fn mobius_to_standard(
    k: &crate::field::FieldTowerCtx,
    p1: P1Point,
    p2: P1Point,
    p3: P1Point,
) -> crate::Result<MobiusMap> {
    MobiusMap::to_standard(k, p1, p2, p3)
}

#[cfg(test)]
mod tests;
