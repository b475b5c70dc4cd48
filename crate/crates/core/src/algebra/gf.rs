use std::fmt;
use std::ops::{Add, Mul};

use serde::Serialize;

use crate::error::{Error, Result};

/// Reduction polynomials for GF(2^k), bit i = coefficient of x^i.
const MODULI: [u8; 5] = [0, 0b10, 0b111, 0b1011, 0b10011];

fn clmul_reduce(k: u8, x: u8, y: u8) -> u8 {
    let mut acc: u16 = 0;
    for i in 0..k {
        if (y >> i) & 1 == 1 {
            acc ^= (x as u16) << i;
        }
    }
    let m = MODULI[k as usize] as u16;
    for bit in (k..2 * k).rev() {
        if (acc >> bit) & 1 == 1 {
            acc ^= m << (bit - k);
        }
    }
    acc as u8
}

/// The field GF(2^k) for `1 <= k <= 4`, with a full multiplication table.
#[derive(Clone)]
pub struct Gf {
    k: u8,
    q: u8,
    mul: [[u8; 16]; 16],
    inv: [u8; 16],
}

impl Gf {
    pub fn new(k: u8) -> Result<Self> {
        if !(1..=4).contains(&k) {
            return Err(Error::BadFieldOrder(1u64 << k.min(63)));
        }
        let q = 1u8 << k;
        let mut mul = [[0u8; 16]; 16];
        let mut inv = [0u8; 16];
        for x in 0..q {
            for y in 0..q {
                mul[x as usize][y as usize] = clmul_reduce(k, x, y);
                if mul[x as usize][y as usize] == 1 {
                    inv[x as usize] = y;
                }
            }
        }
        Ok(Gf { k, q, mul, inv })
    }

    pub fn with_order(q: u64) -> Result<Self> {
        match q {
            2 => Self::new(1),
            4 => Self::new(2),
            8 => Self::new(3),
            16 => Self::new(4),
            _ => Err(Error::BadFieldOrder(q)),
        }
    }

    pub fn k(&self) -> u8 {
        self.k
    }

    pub fn q(&self) -> u64 {
        self.q as u64
    }

    pub fn elements(&self) -> impl Iterator<Item = u8> {
        0..self.q
    }

    #[inline]
    pub fn add(&self, x: u8, y: u8) -> u8 {
        x ^ y
    }

    #[inline]
    pub fn mul(&self, x: u8, y: u8) -> u8 {
        self.mul[x as usize][y as usize]
    }

    pub fn inv(&self, x: u8) -> Result<u8> {
        if x == 0 {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.inv[x as usize])
        }
    }

    pub fn pow(&self, x: u8, e: u32) -> u8 {
        (0..e).fold(1, |acc, _| self.mul(acc, x))
    }
}

impl fmt::Debug for Gf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q)
    }
}

/// A standalone element of GF(2^k), value in the polynomial basis 1, x, x², x³.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct GfElem {
    k: u8,
    value: u8,
}

impl GfElem {
    pub fn new(k: u8, value: u8) -> Result<Self> {
        if !(1..=4).contains(&k) {
            return Err(Error::BadFieldOrder(1u64 << k.min(63)));
        }
        if value >> k != 0 {
            return Err(Error::Validation(format!(
                "{value} is not an element of GF(2^{k})"
            )));
        }
        Ok(GfElem { k, value })
    }

    pub fn zero(k: u8) -> Self {
        GfElem { k, value: 0 }
    }

    pub fn one(k: u8) -> Self {
        GfElem { k, value: 1 }
    }

    /// The class of `x`; a generator of the multiplicative group for the
    /// chosen moduli.
    pub fn generator(k: u8) -> Self {
        GfElem {
            k,
            value: if k == 1 { 1 } else { 2 },
        }
    }

    pub fn k(self) -> u8 {
        self.k
    }

    pub fn value(self) -> u8 {
        self.value
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn all(k: u8) -> impl Iterator<Item = GfElem> {
        (0..(1u8 << k)).map(move |value| GfElem { k, value })
    }

    pub fn inv(self) -> Result<Self> {
        if self.value == 0 {
            return Err(Error::DivisionByZero);
        }
        let q = 1u32 << self.k;
        Ok(self.pow(q - 2))
    }

    pub fn pow(self, e: u32) -> Self {
        (0..e).fold(GfElem::one(self.k), |acc, _| acc * self)
    }
}

impl Add for GfElem {
    type Output = GfElem;
    fn add(self, o: GfElem) -> GfElem {
        assert_eq!(self.k, o.k, "mixed fields");
        GfElem {
            k: self.k,
            value: self.value ^ o.value,
        }
    }
}

impl Mul for GfElem {
    type Output = GfElem;
    fn mul(self, o: GfElem) -> GfElem {
        assert_eq!(self.k, o.k, "mixed fields");
        GfElem {
            k: self.k,
            value: clmul_reduce(self.k, self.value, o.value),
        }
    }
}
