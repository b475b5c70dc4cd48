//! Exact scalars: Laurent polynomials, rational functions in (a, s) with the
//! `a^-1 = 0` specialization, ℚ(√q), and binary fields with small matrices.

pub mod gf;
pub mod laurent;
pub mod matrix;
pub mod qsqrt;
pub mod rational;

pub use gf::{Gf, GfElem};
pub use laurent::{AsExp, AzExp, Laurent, LaurentAS, LaurentAZ, LaurentZ, Monomial, ZExp};
pub use matrix::{gl_order, Mat};
pub use qsqrt::{QSqrt, Q};
pub use rational::{ADegree, RationalAS};

/// Value of a Laurent polynomial in `z` at `z = q^{1/2} - q^{-1/2}`.
pub fn eval_z_at_sqrt_q(p: &LaurentZ, q: u64) -> QSqrt {
    let z = QSqrt::sqrt_q(q).sub(&QSqrt::sqrt_q_pow(q, -1));
    let zinv = z.inv().expect("q > 1");
    p.terms().fold(QSqrt::zero(q), |acc, (e, c)| {
        let base = if e.0 >= 0 { &z } else { &zinv };
        let pw = (0..e.0.unsigned_abs()).fold(QSqrt::one(q), |x, _| x.mul(base));
        acc.add(&pw.mul(&QSqrt::from_int(q, c)))
    })
}
