use std::fmt;

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::Serialize;

use super::laurent::LaurentAS;
use crate::error::{Error, Result};

pub type Q = Ratio<i128>;

/// Exact element `rational + sqrt_coeff·√q` of ℚ(√q).
///
/// When `q` is a perfect square the irrational part is folded into the
/// rational one, so the representation is always canonical.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QSqrt {
    q: u64,
    rational: Q,
    sqrt_coeff: Q,
}

fn perfect_root(q: u64) -> Option<i128> {
    let r = (q as f64).sqrt().round() as u64;
    (r * r == q).then_some(r as i128)
}

impl QSqrt {
    pub fn new(q: u64, rational: Q, sqrt_coeff: Q) -> Self {
        match perfect_root(q) {
            Some(r) => QSqrt {
                q,
                rational: rational + sqrt_coeff * Q::from_integer(r),
                sqrt_coeff: Q::zero(),
            },
            None => QSqrt {
                q,
                rational,
                sqrt_coeff,
            },
        }
    }

    pub fn from_int(q: u64, n: i128) -> Self {
        Self::new(q, Q::from_integer(n), Q::zero())
    }

    pub fn from_ratio(q: u64, r: Q) -> Self {
        Self::new(q, r, Q::zero())
    }

    pub fn zero(q: u64) -> Self {
        Self::from_int(q, 0)
    }

    pub fn one(q: u64) -> Self {
        Self::from_int(q, 1)
    }

    /// `√q` itself.
    pub fn sqrt_q(q: u64) -> Self {
        Self::new(q, Q::zero(), Q::one())
    }

    /// `(√q)^k` for any integer `k`.
    pub fn sqrt_q_pow(q: u64, k: i32) -> Self {
        let half = Q::from_integer(q as i128).pow(k.div_euclid(2));
        if k.rem_euclid(2) == 0 {
            Self::from_ratio(q, half)
        } else {
            Self::new(q, Q::zero(), half)
        }
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn rational(&self) -> Q {
        self.rational
    }

    pub fn sqrt_coeff(&self) -> Q {
        self.sqrt_coeff
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.sqrt_coeff.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.q, o.q, "mixed ℚ(√q) fields");
        Self::new(
            self.q,
            self.rational + o.rational,
            self.sqrt_coeff + o.sqrt_coeff,
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        QSqrt {
            q: self.q,
            rational: -self.rational,
            sqrt_coeff: -self.sqrt_coeff,
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.q, o.q, "mixed ℚ(√q) fields");
        let qq = Q::from_integer(self.q as i128);
        Self::new(
            self.q,
            self.rational * o.rational + self.sqrt_coeff * o.sqrt_coeff * qq,
            self.rational * o.sqrt_coeff + self.sqrt_coeff * o.rational,
        )
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let qq = Q::from_integer(self.q as i128);
        let norm = self.rational * self.rational - self.sqrt_coeff * self.sqrt_coeff * qq;
        Ok(Self::new(
            self.q,
            self.rational / norm,
            -self.sqrt_coeff / norm,
        ))
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }

    /// Value of an `a`-free Laurent polynomial in `s` at `s = √q`.
    pub fn eval_s_poly(p: &LaurentAS, q: u64) -> Self {
        p.terms().fold(Self::zero(q), |acc, (m, c)| {
            acc.add(&Self::sqrt_q_pow(q, m.s).mul(&Self::from_int(q, c)))
        })
    }

    pub fn render(&self) -> String {
        if self.sqrt_coeff.is_zero() {
            return self.rational.to_string();
        }
        let irr = format!("{}*sqrt({})", self.sqrt_coeff, self.q);
        if self.rational.is_zero() {
            irr
        } else {
            format!("{} + {}", self.rational, irr)
        }
    }
}

impl fmt::Display for QSqrt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Serialize for QSqrt {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("QSqrt", 3)?;
        st.serialize_field("q", &self.q)?;
        st.serialize_field("rational", &self.rational.to_string())?;
        st.serialize_field("sqrtq_coeff", &self.sqrt_coeff.to_string())?;
        st.end()
    }
}
