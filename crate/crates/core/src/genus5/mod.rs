//! Superspecial genus-5 hyperelliptic curves whose automorphism group
//! contains C2³.
//!
//! Every such curve is isomorphic to some H_{a,b,c}, so
//! [`enumerate_type41`] finds all of them from the genus-2 catalog. The
//! families in [`families`] reach the larger groups directly and serve as an
//! independent cross-check, and [`classify_and_merge`] joins the lists by
//! canonical key and names each class by its full automorphism group.

mod families;
mod habc;
mod hypergeom;
mod merge;
mod record;
mod type41;

use std::collections::BTreeMap;

pub use families::{
    enumerate_parameterless, enumerate_type10, enumerate_type7, enumerate_type9,
    parameterless_curves, type10_a_of_delta, type10_curve, type10_epsilons, type7_a_of_delta,
    type7_curve, type7_second_j, type9_curve, type9_four_curve_test, type9_series,
    type9_series_test, FamilyOutcome,
};
pub use habc::{
    a_of, build_habc, decompose_habc, habc_transforms, is_group_table, is_superspecial_genus5,
    is_superspecial_habc_direct, lambda_of, transform_composition_table, HabcParams,
};
pub use hypergeom::{truncated_hypergeometric, HypergeomSpec, Rational};
pub use merge::{classify_and_merge, enumerate_genus5, Checks, Enumeration, Monitors, TypeCounts};
pub use record::{CurveRecord, Source, TypeLabel};
pub use type41::{enumerate_type41, Type41Outcome};

use crate::curve::{
    branch_set, canonical_key, full_automorphism_type, CanonicalKey, GroupTag, HyperCurve,
};
use crate::error::Result;
use crate::field::FieldTowerCtx;

/// A curve found by one enumeration path, already keyed and classified.
#[derive(Clone, Debug)]
pub struct Candidate {
    pub key: CanonicalKey,
    pub curve: HyperCurve,
    pub params: BTreeMap<String, String>,
    pub source: Source,
    pub tag: GroupTag,
}

impl Candidate {
    pub fn new(
        k: &FieldTowerCtx,
        curve: HyperCurve,
        params: BTreeMap<String, String>,
        source: Source,
    ) -> Result<Self> {
        let key = canonical_key(k, &branch_set(k, &curve)?);
        let tag = full_automorphism_type(k, &curve)?;
        Ok(Candidate {
            key,
            curve,
            params,
            source,
            tag,
        })
    }

    pub fn type_label(&self) -> Option<TypeLabel> {
        TypeLabel::from_group(self.tag.label)
    }
}
