//! Dubrovnik polynomial by skein recursion, the BMW symmetrizer and the
//! colored Kauffman polynomial.

pub mod bmw;
pub mod colored;
pub mod skein;

pub use bmw::{
    bmw_symmetrizer, bmw_symmetrizer_with, build_d, build_d_with, normalized_symmetrizer,
    normalized_symmetrizer_with, FramedCombo, HookShape, DEFAULT_HOOK,
};
pub use colored::{
    colored_kauffman, colored_kauffman_with, kauffman_of_front, satellite_kauffman_eval,
};
pub use skein::{delta, kauffman, kauffman_with, SkeinConfig, DEFAULT_NODE_BUDGET};
