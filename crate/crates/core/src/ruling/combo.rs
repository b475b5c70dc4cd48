use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::RationalAS;
use crate::diagram::LegendrianTangle;
use crate::error::{Error, Result};

/// A formal linear combination of Legendrian n-tangles with coefficients in
/// ℤ(a, s). Like terms (identical event lists) are collected.
#[derive(Clone)]
pub struct TangleCombo {
    arity: usize,
    terms: BTreeMap<LegendrianTangle, RationalAS>,
}

impl TangleCombo {
    pub fn zero(arity: usize) -> Self {
        TangleCombo {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(arity: usize) -> Self {
        Self::single(RationalAS::one(), LegendrianTangle::identity(arity))
    }

    pub fn single(coef: RationalAS, t: LegendrianTangle) -> Self {
        let mut c = Self::zero(t.arity());
        c.add_term(coef, t);
        c
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&RationalAS, &LegendrianTangle)> {
        self.terms.iter().map(|(t, c)| (c, t))
    }

    pub fn coefficient(&self, t: &LegendrianTangle) -> RationalAS {
        self.terms.get(t).cloned().unwrap_or_else(RationalAS::zero)
    }

    pub fn add_term(&mut self, coef: RationalAS, t: LegendrianTangle) {
        assert_eq!(t.arity(), self.arity, "tangle arity mismatch in combo");
        if coef.is_zero() {
            return;
        }
        let merged = match self.terms.remove(&t) {
            Some(c) => c.add(&coef),
            None => coef,
        };
        if !merged.is_zero() {
            self.terms.insert(t, merged);
        }
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        if self.arity != o.arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: o.arity,
            });
        }
        let mut out = self.clone();
        for (c, t) in o.terms() {
            out.add_term(c.clone(), t.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, k: &RationalAS) -> Self {
        let mut out = Self::zero(self.arity);
        for (c, t) in self.terms() {
            out.add_term(c.mul(k), t.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.scale(&RationalAS::constant(-1)))
    }

    /// `self · o`, where each tangle of `o` is stacked to the left.
    pub fn mul(&self, o: &Self) -> Result<Self> {
        if self.arity != o.arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: o.arity,
            });
        }
        let mut out = Self::zero(self.arity);
        for (c1, t1) in self.terms() {
            for (c2, t2) in o.terms() {
                out.add_term(c1.mul(c2), t1.multiply(t2)?);
            }
        }
        Ok(out)
    }

    /// Adds `k` straight strands below every term.
    pub fn extend_below(&self, k: usize) -> Self {
        let mut out = Self::zero(self.arity + k);
        for (c, t) in self.terms() {
            out.add_term(c.clone(), t.extend_below(k));
        }
        out
    }

    /// Drops terms containing a visible fishtail, which vanish in the
    /// Legendrian skein quotient.
    pub fn drop_fishtails(&self) -> Self {
        let mut out = Self::zero(self.arity);
        for (c, t) in self.terms() {
            if !t.has_fishtail() {
                out.add_term(c.clone(), t.clone());
            }
        }
        out
    }

    /// Applies the `a^-1 = 0` specialization to every coefficient.
    pub fn specialize_a_inv_zero(&self) -> Result<Self> {
        let mut out = Self::zero(self.arity);
        for (c, t) in self.terms() {
            out.add_term(c.specialize_a_inv_zero()?, t.clone());
        }
        Ok(out)
    }

    /// Term-wise equality of coefficients (as rational functions).
    pub fn same_terms(&self, o: &Self) -> bool {
        self.arity == o.arity
            && self.terms.len() == o.terms.len()
            && self
                .terms
                .iter()
                .all(|(t, c)| o.terms.get(t).map(|d| d == c).unwrap_or(false))
    }
}

impl fmt::Display for TangleCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms().map(|(c, t)| format!("({c})·[{t}]")).collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for TangleCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TangleCombo[{}]({self})", self.arity)
    }
}
