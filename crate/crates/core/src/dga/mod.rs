//! The Chekanov–Eliashberg DGA of a front, with base points, and counts of
//! its finite-dimensional representations over finite fields.

mod bruhat;
mod complex;
mod number;
mod reps;

pub use bruhat::bruhat_cell;
pub use complex::{build_dga, build_dga_with, BasePoint, Dga, Letter, Word, DEFAULT_DISK_BUDGET};
pub use number::{
    dga_of_front, normalize_count, total_rep_number, total_rep_number_with, verify_lemma_count,
    verify_lemma_count_with, with_clustered_base_points, LemmaCountReport,
};
pub use reps::{count_augmentations, count_representations, RepQuery, DEFAULT_REP_BUDGET};
