use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

/// A monomial in some fixed set of Laurent variables.
pub trait Monomial: Copy + Ord + Hash + fmt::Debug + Send + Sync {
    fn unit() -> Self;
    fn times(self, other: Self) -> Self;
    fn inverse(self) -> Self;
    /// Writes the variable part (nothing for the unit monomial).
    fn render(&self, out: &mut String);
}

/// Exponent of `z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ZExp(pub i32);

/// Exponents of `a` and `s`, ordered by `a` first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct AsExp {
    pub a: i32,
    pub s: i32,
}

/// Exponents of `a` and `z`, ordered by `a` first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct AzExp {
    pub a: i32,
    pub z: i32,
}

fn render_var(out: &mut String, name: &str, e: i32) {
    match e {
        0 => {}
        1 => out.push_str(name),
        _ => {
            out.push_str(name);
            out.push('^');
            out.push_str(&e.to_string());
        }
    }
}

impl Monomial for ZExp {
    fn unit() -> Self {
        ZExp(0)
    }
    fn times(self, o: Self) -> Self {
        ZExp(self.0 + o.0)
    }
    fn inverse(self) -> Self {
        ZExp(-self.0)
    }
    fn render(&self, out: &mut String) {
        render_var(out, "z", self.0);
    }
}

impl Monomial for AsExp {
    fn unit() -> Self {
        AsExp { a: 0, s: 0 }
    }
    fn times(self, o: Self) -> Self {
        AsExp {
            a: self.a + o.a,
            s: self.s + o.s,
        }
    }
    fn inverse(self) -> Self {
        AsExp {
            a: -self.a,
            s: -self.s,
        }
    }
    fn render(&self, out: &mut String) {
        render_var(out, "a", self.a);
        render_var(out, "s", self.s);
    }
}

impl Monomial for AzExp {
    fn unit() -> Self {
        AzExp { a: 0, z: 0 }
    }
    fn times(self, o: Self) -> Self {
        AzExp {
            a: self.a + o.a,
            z: self.z + o.z,
        }
    }
    fn inverse(self) -> Self {
        AzExp {
            a: -self.a,
            z: -self.z,
        }
    }
    fn render(&self, out: &mut String) {
        render_var(out, "a", self.a);
        render_var(out, "z", self.z);
    }
}

/// Sparse Laurent polynomial with `i128` coefficients.
///
/// Zero coefficients are never stored, so structural equality is value
/// equality. Coefficient overflow panics rather than wrapping.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Laurent<M: Monomial> {
    terms: BTreeMap<M, i128>,
}

pub type LaurentZ = Laurent<ZExp>;
pub type LaurentAS = Laurent<AsExp>;
pub type LaurentAZ = Laurent<AzExp>;

fn checked(x: Option<i128>) -> i128 {
    x.expect("Laurent coefficient overflow")
}

impl<M: Monomial> Laurent<M> {
    pub fn zero() -> Self {
        Laurent {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i128) -> Self {
        Self::term(M::unit(), c)
    }

    pub fn term(m: M, c: i128) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(m, c);
        }
        Laurent { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (M, i128)> + '_ {
        self.terms.iter().map(|(m, c)| (*m, *c))
    }

    pub fn coeff(&self, m: M) -> i128 {
        self.terms.get(&m).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: M, c: i128) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(m).or_insert(0);
        *entry = checked(entry.checked_add(c));
        if *entry == 0 {
            self.terms.remove(&m);
        }
    }

    pub fn scale(&self, c: i128) -> Self {
        if c == 0 {
            return Self::zero();
        }
        Laurent {
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (*m, checked(x.checked_mul(c))))
                .collect(),
        }
    }

    pub fn shift(&self, by: M) -> Self {
        Laurent {
            terms: self.terms.iter().map(|(m, c)| (m.times(by), *c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// The single term of a monomial polynomial `c·m`, if it is one.
    pub fn as_monomial(&self) -> Option<(M, i128)> {
        if self.terms.len() == 1 {
            self.terms().next()
        } else {
            None
        }
    }

    /// Gcd of all coefficients (0 for the zero polynomial).
    pub fn content(&self) -> i128 {
        self.terms
            .values()
            .fold(0i128, |g, c| num_integer::Integer::gcd(&g, c))
    }

    pub fn div_exact_scalar(&self, c: i128) -> Self {
        Laurent {
            terms: self
                .terms
                .iter()
                .map(|(m, x)| {
                    debug_assert_eq!(x % c, 0);
                    (*m, x / c)
                })
                .collect(),
        }
    }

    pub fn leading(&self) -> Option<(M, i128)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, *c))
    }

    /// Canonical text: terms by decreasing monomial, explicit signs.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let mut var = String::new();
            m.render(&mut var);
            let neg = *c < 0;
            let mag = c.unsigned_abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if var.is_empty() || mag != 1 {
                out.push_str(&mag.to_string());
            }
            out.push_str(&var);
        }
        out
    }
}

impl<M: Monomial> fmt::Display for Laurent<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<M: Monomial> fmt::Debug for Laurent<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent({})", self.render())
    }
}

impl<M: Monomial> AddAssign<&Laurent<M>> for Laurent<M> {
    fn add_assign(&mut self, rhs: &Laurent<M>) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, *c);
        }
    }
}

impl<M: Monomial> SubAssign<&Laurent<M>> for Laurent<M> {
    fn sub_assign(&mut self, rhs: &Laurent<M>) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -*c);
        }
    }
}

impl<M: Monomial> Add for &Laurent<M> {
    type Output = Laurent<M>;
    fn add(self, rhs: &Laurent<M>) -> Laurent<M> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<M: Monomial> Sub for &Laurent<M> {
    type Output = Laurent<M>;
    fn sub(self, rhs: &Laurent<M>) -> Laurent<M> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<M: Monomial> Mul for &Laurent<M> {
    type Output = Laurent<M>;
    fn mul(self, rhs: &Laurent<M>) -> Laurent<M> {
        let mut out = Laurent::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.times(*m2), checked(c1.checked_mul(*c2)));
            }
        }
        out
    }
}

impl<M: Monomial> Neg for &Laurent<M> {
    type Output = Laurent<M>;
    fn neg(self) -> Laurent<M> {
        self.scale(-1)
    }
}

macro_rules! owned_ops {
    ($($tr:ident :: $f:ident),*) => {$(
        impl<M: Monomial> $tr for Laurent<M> {
            type Output = Laurent<M>;
            fn $f(self, rhs: Laurent<M>) -> Laurent<M> {
                (&self).$f(&rhs)
            }
        }
        impl<M: Monomial> $tr<&Laurent<M>> for Laurent<M> {
            type Output = Laurent<M>;
            fn $f(self, rhs: &Laurent<M>) -> Laurent<M> {
                (&self).$f(rhs)
            }
        }
    )*};
}
owned_ops!(Add::add, Sub::sub, Mul::mul);

impl<M: Monomial> Neg for Laurent<M> {
    type Output = Laurent<M>;
    fn neg(self) -> Laurent<M> {
        self.scale(-1)
    }
}

impl<M: Monomial> Serialize for Laurent<M> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.render())
    }
}

impl LaurentZ {
    pub fn z() -> Self {
        Self::term(ZExp(1), 1)
    }

    pub fn z_pow(e: i32) -> Self {
        Self::term(ZExp(e), 1)
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.terms.keys().next().map(|m| m.0)
    }
}

impl LaurentAS {
    pub fn a() -> Self {
        Self::term(AsExp { a: 1, s: 0 }, 1)
    }

    pub fn s() -> Self {
        Self::term(AsExp { a: 0, s: 1 }, 1)
    }

    pub fn mono(a: i32, s: i32, c: i128) -> Self {
        Self::term(AsExp { a, s }, c)
    }

    /// `z = s - s^-1`.
    pub fn z_in_s() -> Self {
        &Self::s() - &Self::mono(0, -1, 1)
    }

    pub fn is_a_free(&self) -> bool {
        self.terms.keys().all(|m| m.a == 0)
    }

    /// Highest power of `a`, or `None` for zero.
    pub fn deg_a(&self) -> Option<i32> {
        self.terms.keys().map(|m| m.a).max()
    }

    /// Coefficient of `a^k` as a polynomial in `s`.
    pub fn a_coeff(&self, k: i32) -> LaurentAS {
        Laurent {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.a == k)
                .map(|(m, c)| (AsExp { a: 0, s: m.s }, *c))
                .collect(),
        }
    }

    pub fn min_exponents(&self) -> Option<AsExp> {
        let a = self.terms.keys().map(|m| m.a).min()?;
        let s = self.terms.keys().map(|m| m.s).min()?;
        Some(AsExp { a, s })
    }
}

impl LaurentAZ {
    pub fn a() -> Self {
        Self::term(AzExp { a: 1, z: 0 }, 1)
    }

    pub fn z() -> Self {
        Self::term(AzExp { a: 0, z: 1 }, 1)
    }

    pub fn mono(a: i32, z: i32, c: i128) -> Self {
        Self::term(AzExp { a, z }, c)
    }

    pub fn deg_a(&self) -> Option<i32> {
        self.terms.keys().map(|m| m.a).max()
    }

    /// Coefficient of `a^k` as a polynomial in `z`.
    pub fn a_coeff(&self, k: i32) -> LaurentZ {
        let mut out = LaurentZ::zero();
        for (m, c) in &self.terms {
            if m.a == k {
                out.add_term(ZExp(m.z), *c);
            }
        }
        out
    }

    /// Multiplies by `z^{-e}` for the smallest `e` making all `z` exponents
    /// nonnegative; returns that `e` together with the shifted polynomial.
    pub fn clear_z(&self) -> (i32, LaurentAZ) {
        let e = self.terms.keys().map(|m| -m.z).max().unwrap_or(0).max(0);
        (e, self.shift(AzExp { a: 0, z: e }))
    }
}

/// `(s - s^-1)^k` for `k >= 0`.
pub fn z_power_in_s(k: u32) -> LaurentAS {
    LaurentAS::z_in_s().pow(k)
}
