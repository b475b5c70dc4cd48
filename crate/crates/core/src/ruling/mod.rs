//! Normal rulings, ruling polynomials and the L_n tangle combinations.

pub mod colored;
pub mod combo;
pub mod lrec;
pub mod sweep;

pub use colored::{
    colored_ruling_polynomial, reduced_ruling_polynomial, satellite_ruling_eval,
    satellite_ruling_polynomial,
};
pub use combo::TangleCombo;
pub use lrec::{build_alpha, build_alpha_by_resolution, build_beta, build_gamma, build_l, c_word};
pub use sweep::{
    enumerate_rulings, is_reduced, is_reduced_at, ruling_polynomial,
    ruling_polynomial_by_enumeration, ruling_polynomial_with, ClusterFilter, NormalRuling, Pairing,
};
