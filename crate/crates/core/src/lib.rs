//! Enumeration of superspecial hyperelliptic curves of genus 5 whose
//! automorphism group contains (Z/2Z)^3, in characteristic p > 11.

pub mod curve;
pub mod elliptic;
pub mod error;
pub mod field;
pub mod genus5;
pub mod report;
pub mod ssp2;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/fields.md")]
    mod fields {}
    #[doc = include_str!("../../../book/src/curves.md")]
    mod curves {}
    #[doc = include_str!("../../../book/src/supersingular.md")]
    mod supersingular {}
    #[doc = include_str!("../../../book/src/ssp2.md")]
    mod ssp2 {}
    #[doc = include_str!("../../../book/src/genus5.md")]
    mod genus5 {}
    #[doc = include_str!("../../../book/src/reports.md")]
    mod reports {}
}
