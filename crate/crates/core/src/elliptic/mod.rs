//! Supersingular elliptic curves: j-invariants, the Hasse polynomial and S_p.

mod jinv;
mod ssj;

pub use jinv::{
    hasse_polynomial, j_from_cubic, j_from_four_points, j_from_legendre, legendre_params_of_j,
    phi2_at, JInvariant,
};
pub use ssj::{
    enumerate_supersingular_j, expected_supersingular_count, is_supersingular_j, two_isogenous,
    SupersingularSet,
};
