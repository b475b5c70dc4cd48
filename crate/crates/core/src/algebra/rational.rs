use std::fmt;

use serde::Serialize;

use super::laurent::{AsExp, LaurentAS, LaurentAZ, LaurentZ};
use super::qsqrt::QSqrt;
use crate::error::{Error, Result};

/// `a`-degree of a rational function; `NegInfinity` is the degree of zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum ADegree {
    NegInfinity,
    Finite(i32),
}

impl fmt::Display for ADegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ADegree::NegInfinity => f.write_str("-inf"),
            ADegree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Element of ℤ(a, s).
///
/// The denominator is kept factored: a positive integer times pairwise
/// distinct primitive polynomials (cyclotomic factors in `s` are split off,
/// anything else is kept whole). Every operation cancels factors that divide
/// the numerator, so values stay reduced in practice; equality does not rely
/// on it.
#[derive(Clone)]
pub struct RationalAS {
    num: LaurentAS,
    den_c: i128,
    den_f: Vec<(LaurentAS, u32)>,
}

impl RationalAS {
    pub fn new(num: LaurentAS, den: LaurentAS) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (c, mono, factors) = factor(&den);
        let mut r = RationalAS {
            num: num.shift(AsExp {
                a: -mono.a,
                s: -mono.s,
            }),
            den_c: 1,
            den_f: Vec::new(),
        };
        if c < 0 {
            r.num = -r.num;
        }
        r.den_c = c.abs();
        for f in factors {
            r.push_factor(f, 1);
        }
        r.reduce();
        Ok(r)
    }

    pub fn from_poly(p: LaurentAS) -> Self {
        RationalAS {
            num: p,
            den_c: 1,
            den_f: Vec::new(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(LaurentAS::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentAS::one())
    }

    pub fn constant(c: i128) -> Self {
        Self::from_poly(LaurentAS::constant(c))
    }

    pub fn mono(a: i32, s: i32, c: i128) -> Self {
        Self::from_poly(LaurentAS::mono(a, s, c))
    }

    /// `z = s - s^-1` as an element of ℤ[s^±1].
    pub fn z() -> Self {
        Self::from_poly(LaurentAS::z_in_s())
    }

    /// Embeds ℤ[z^±1] via `z = s - s^-1`.
    pub fn from_laurent_z(p: &LaurentZ) -> Self {
        let shift = -p.min_degree().unwrap_or(0).min(0);
        let z = LaurentAS::z_in_s();
        let mut num = LaurentAS::zero();
        for (e, c) in p.terms() {
            num += &z.pow((e.0 + shift) as u32).scale(c);
        }
        Self::new(num, z.pow(shift as u32)).expect("nonzero denominator")
    }

    /// Embeds ℤ[a^±1, z^±1] via `z = s - s^-1`.
    pub fn from_laurent_az(p: &LaurentAZ) -> Self {
        let (shift, cleared) = p.clear_z();
        let z = LaurentAS::z_in_s();
        let mut num = LaurentAS::zero();
        for (m, c) in cleared.terms() {
            num += &z.pow(m.z as u32).shift(AsExp { a: m.a, s: 0 }).scale(c);
        }
        Self::new(num, z.pow(shift as u32)).expect("nonzero denominator")
    }

    /// `c_n = s^{n(n-1)/2} ∏_{i=1}^n [i]_s` where `[i]_s = (s^i - s^-i)/(s - s^-1)`.
    pub fn c_n(n: usize) -> Self {
        let mut acc = LaurentAS::mono(0, (n * (n.saturating_sub(1)) / 2) as i32, 1);
        for i in 1..=n as i32 {
            let mut qint = LaurentAS::zero();
            let mut e = i - 1;
            while e >= -(i - 1) {
                qint.add_term(AsExp { a: 0, s: e }, 1);
                e -= 2;
            }
            acc = &acc * &qint;
        }
        Self::from_poly(acc)
    }

    pub fn numerator(&self) -> &LaurentAS {
        &self.num
    }

    /// The expanded denominator.
    pub fn denominator(&self) -> LaurentAS {
        let mut d = LaurentAS::constant(self.den_c);
        for (f, e) in &self.den_f {
            d = &d * &f.pow(*e);
        }
        d
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_a_free(&self) -> bool {
        self.num.is_a_free() && self.den_f.iter().all(|(f, _)| f.is_a_free())
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.num.is_zero() {
            return o.clone();
        }
        if o.num.is_zero() {
            return self.clone();
        }
        let l = num_integer::Integer::lcm(&self.den_c, &o.den_c);
        let mut den_f = self.den_f.clone();
        for (f, e) in &o.den_f {
            match den_f.iter_mut().find(|(g, _)| g == f) {
                Some((_, e2)) => *e2 = (*e2).max(*e),
                None => den_f.push((f.clone(), *e)),
            }
        }
        let lift = |r: &Self| {
            let mut p = r.num.scale(l / r.den_c);
            for (f, e) in &den_f {
                let have = r
                    .den_f
                    .iter()
                    .find(|(g, _)| g == f)
                    .map(|(_, e)| *e)
                    .unwrap_or(0);
                if *e > have {
                    p = &p * &f.pow(e - have);
                }
            }
            p
        };
        let mut r = RationalAS {
            num: &lift(self) + &lift(o),
            den_c: l,
            den_f,
        };
        r.reduce();
        r
    }

    pub fn neg(&self) -> Self {
        RationalAS {
            num: -&self.num,
            ..self.clone()
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.num.is_zero() || o.num.is_zero() {
            return Self::zero();
        }
        let mut r = RationalAS {
            num: &self.num * &o.num,
            den_c: self.den_c * o.den_c,
            den_f: self.den_f.clone(),
        };
        for (f, e) in &o.den_f {
            r.push_factor(f.clone(), *e);
        }
        r.reduce();
        r
    }

    pub fn mul_poly(&self, p: &LaurentAS) -> Self {
        self.mul(&Self::from_poly(p.clone()))
    }

    pub fn inv(&self) -> Result<Self> {
        Self::new(self.denominator(), self.num.clone())
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    pub fn deg_a(&self) -> ADegree {
        match self.num.deg_a() {
            Some(n) => {
                let d: i32 = self
                    .den_f
                    .iter()
                    .map(|(f, e)| f.deg_a().unwrap_or(0) * *e as i32)
                    .sum();
                ADegree::Finite(n - d)
            }
            None => ADegree::NegInfinity,
        }
    }

    /// The `a^-1 = 0` specialization, defined for `deg_a <= 0`.
    pub fn specialize_a_inv_zero(&self) -> Result<Self> {
        match self.deg_a() {
            ADegree::NegInfinity => Ok(Self::zero()),
            ADegree::Finite(d) if d < 0 => Ok(Self::zero()),
            ADegree::Finite(0) => {
                let n = self.num.a_coeff(self.num.deg_a().unwrap_or(0));
                let mut d = LaurentAS::constant(self.den_c);
                for (f, e) in &self.den_f {
                    d = &d * &f.a_coeff(f.deg_a().unwrap_or(0)).pow(*e);
                }
                Self::new(n, d)
            }
            ADegree::Finite(d) => Err(Error::PositiveADegree(d)),
        }
    }

    /// Evaluates an `a`-free function at `s = √q`.
    pub fn eval_sqrt_q(&self, q: u64) -> Result<QSqrt> {
        if !self.is_a_free() {
            return Err(Error::NotAFree);
        }
        let n = QSqrt::eval_s_poly(&self.num, q);
        let d = QSqrt::eval_s_poly(&self.denominator(), q);
        n.div(&d)
    }

    pub fn render(&self) -> String {
        if self.den_f.is_empty() && self.den_c == 1 {
            return self.num.render();
        }
        format!("({})/({})", self.num.render(), self.denominator().render())
    }

    fn push_factor(&mut self, f: LaurentAS, e: u32) {
        match self.den_f.iter_mut().find(|(g, _)| *g == f) {
            Some((_, e2)) => *e2 += e,
            None => self.den_f.push((f, e)),
        }
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            *self = Self::zero();
            return;
        }
        for (f, e) in self.den_f.iter_mut() {
            while *e > 0 {
                match exact_div(&self.num, f) {
                    Some(q) => {
                        self.num = q;
                        *e -= 1;
                    }
                    None => break,
                }
            }
        }
        self.den_f.retain(|(_, e)| *e > 0);
        self.den_f.sort_by_cached_key(|(f, _)| f.render());
        let g = num_integer::Integer::gcd(&self.num.content(), &self.den_c);
        if g > 1 {
            self.num = self.num.div_exact_scalar(g);
            self.den_c /= g;
        }
    }
}

/// `p = c · m · ∏ factors` with `c` an integer, `m` a monomial and each factor
/// primitive with exponents starting at 0 and a positive leading coefficient.
fn factor(p: &LaurentAS) -> (i128, AsExp, Vec<LaurentAS>) {
    let m = p.min_exponents().expect("nonzero polynomial");
    let mut rest = p.shift(AsExp { a: -m.a, s: -m.s });
    let mut c = rest.content();
    if rest.leading().map(|(_, lc)| lc < 0).unwrap_or(false) {
        c = -c;
    }
    rest = rest.div_exact_scalar(c);
    let mut out = Vec::new();
    if rest.is_a_free() {
        for phi in cyclotomics() {
            while rest.len() > 1 {
                match exact_div(&rest, phi) {
                    Some(q) => {
                        out.push(phi.clone());
                        rest = q;
                    }
                    None => break,
                }
            }
        }
    }
    if rest != LaurentAS::one() {
        out.push(rest);
    }
    (c, m, out)
}

const MAX_CYCLOTOMIC: i32 = 64;

/// `Φ_1(s), …, Φ_64(s)`.
fn cyclotomics() -> &'static [LaurentAS] {
    static CACHE: std::sync::OnceLock<Vec<LaurentAS>> = std::sync::OnceLock::new();
    CACHE.get_or_init(|| {
        let mut phis: Vec<LaurentAS> = Vec::new();
        for d in 1..=MAX_CYCLOTOMIC {
            let mut p = &LaurentAS::mono(0, d, 1) - &LaurentAS::one();
            for (e, phi) in phis.iter().enumerate() {
                if d % (e as i32 + 1) == 0 {
                    p = exact_div(&p, phi).expect("cyclotomic divisor");
                }
            }
            phis.push(p);
        }
        phis
    })
}

/// Exact quotient `num / den` in ℤ[a^±1, s^±1], if it exists.
fn exact_div(num: &LaurentAS, den: &LaurentAS) -> Option<LaurentAS> {
    let exps = |p: &LaurentAS| {
        let a: Vec<i32> = p.terms().map(|(m, _)| m.a).collect();
        let s: Vec<i32> = p.terms().map(|(m, _)| m.s).collect();
        (
            *a.iter().min().unwrap(),
            *a.iter().max().unwrap(),
            *s.iter().min().unwrap(),
            *s.iter().max().unwrap(),
        )
    };
    if num.is_zero() {
        return Some(LaurentAS::zero());
    }
    let (na0, na1, ns0, ns1) = exps(num);
    let (da0, da1, ds0, ds1) = exps(den);
    let (qa0, qa1, qs0, qs1) = (na0 - da0, na1 - da1, ns0 - ds0, ns1 - ds1);
    if qa0 > qa1 || qs0 > qs1 {
        return None;
    }
    let (lm, lc) = den.leading()?;
    let mut rem = num.clone();
    let mut quot = LaurentAS::zero();
    while let Some((m, c)) = rem.leading() {
        if c % lc != 0 {
            return None;
        }
        let qm = AsExp {
            a: m.a - lm.a,
            s: m.s - lm.s,
        };
        if qm.a < qa0 || qm.a > qa1 || qm.s < qs0 || qm.s > qs1 {
            return None;
        }
        let t = LaurentAS::term(qm, c / lc);
        rem -= &(&t * den);
        quot += &t;
    }
    Some(quot)
}

impl PartialEq for RationalAS {
    fn eq(&self, o: &Self) -> bool {
        self.sub(o).is_zero()
    }
}

impl Eq for RationalAS {}

impl fmt::Display for RationalAS {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for RationalAS {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalAS({})", self.render())
    }
}

impl Serialize for RationalAS {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.render())
    }
}

impl From<LaurentAS> for RationalAS {
    fn from(p: LaurentAS) -> Self {
        Self::from_poly(p)
    }
}
