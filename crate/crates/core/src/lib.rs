//! Exact invariants of Legendrian knots given as front diagrams.
//!
//! The crate computes ungraded ruling polynomials (plain, reduced and
//! colored), Dubrovnik Kauffman polynomials of framed diagrams together with
//! the BMW symmetrizer used to color them, and finite-field representation
//! counts of the Chekanov–Eliashberg DGA of the Ng resolution.
//!
//! Heavy searches run on rayon when the `parallel` feature is enabled (the
//! default) and fall back to plain loops otherwise; see [`exec::Exec`].

pub mod algebra;
pub mod builtins;
pub mod dga;
pub mod diagram;
pub mod error;
pub mod exec;
pub mod kauffman;
pub mod ruling;
pub mod verify;

pub use error::{Error, Result};
pub use exec::Exec;
