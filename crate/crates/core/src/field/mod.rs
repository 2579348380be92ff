//! Exact arithmetic in F_p, F_{p^2} and polynomial rings over F_{p^2}.

mod ext;
mod fp2;
mod poly;
mod roots;

pub use ext::{ExtElem, ExtField};
pub use fp2::{is_prime, FieldTowerCtx, Fp2Elem, Shown};
pub use poly::Poly;
pub use roots::{distinct_roots, poly_roots};
