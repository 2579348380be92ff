//! Output rows: one isomorphism class of superspecial genus-5 curve.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::curve::{CanonicalKey, GroupLabel};
use crate::error::Error;

/// The seven types whose automorphism group contains C2³.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum TypeLabel {
    T4_1,
    T7,
    T9,
    T10,
    T11,
    T12,
    T15,
}

impl TypeLabel {
    pub const ALL: [TypeLabel; 7] = [
        TypeLabel::T4_1,
        TypeLabel::T7,
        TypeLabel::T9,
        TypeLabel::T10,
        TypeLabel::T11,
        TypeLabel::T12,
        TypeLabel::T15,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TypeLabel::T4_1 => "4-1",
            TypeLabel::T7 => "7",
            TypeLabel::T9 => "9",
            TypeLabel::T10 => "10",
            TypeLabel::T11 => "11",
            TypeLabel::T12 => "12",
            TypeLabel::T15 => "15",
        }
    }

    /// Column name in CSV output.
    pub fn csv_column(self) -> &'static str {
        match self {
            TypeLabel::T4_1 => "t41",
            TypeLabel::T7 => "t7",
            TypeLabel::T9 => "t9",
            TypeLabel::T10 => "t10",
            TypeLabel::T11 => "t11",
            TypeLabel::T12 => "t12",
            TypeLabel::T15 => "t15",
        }
    }

    pub fn group(self) -> GroupLabel {
        match self {
            TypeLabel::T4_1 => GroupLabel::C2Cubed,
            TypeLabel::T7 => GroupLabel::C2SqsdC4,
            TypeLabel::T9 => GroupLabel::C2xD12,
            TypeLabel::T10 => GroupLabel::C2xA4,
            TypeLabel::T11 => GroupLabel::A4sdC4,
            TypeLabel::T12 => GroupLabel::C2xA5,
            TypeLabel::T15 => GroupLabel::D12sdC4,
        }
    }

    pub fn from_group(g: GroupLabel) -> Option<TypeLabel> {
        TypeLabel::ALL.into_iter().find(|t| t.group() == g)
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TypeLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        TypeLabel::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| {
                Error::Parse(format!(
                    "unknown type {s:?}; expected one of 4-1, 7, 9, 10, 11, 12, 15"
                ))
            })
    }
}

impl Serialize for TypeLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for TypeLabel {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Which enumeration produced a curve.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    /// Rosenhain expansions of the genus-2 catalog.
    Habc,
    /// (x⁴+1)(x⁸−Ax⁴+1).
    FamilyA4,
    /// (x⁶−1)(x⁶−δ).
    FamilyX6,
    /// x¹² − Ax¹⁰ − 33x⁸ + 2Ax⁶ − 33x⁴ − Ax² + 1.
    FamilyTetra,
    /// A parameterless normal form.
    NormalForm,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CurveRecord {
    #[serde(rename = "type")]
    pub type_label: TypeLabel,
    pub p: u64,
    /// Parameter name to encoded field element; empty for normal forms.
    pub params: BTreeMap<String, String>,
    pub model: String,
    pub aut: GroupLabel,
    pub key: CanonicalKey,
    pub found_by: Vec<Source>,
}
