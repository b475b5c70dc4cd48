use crate::algebra::{LaurentAS, RationalAS};
use crate::diagram::{LegendrianTangle, TEvent};
use crate::error::{Error, Result};
use crate::ruling::{build_gamma, TangleCombo};

/// Combinations of tangles consumed through `fr` and the Kauffman
/// polynomial. Every term of 𝒴_n is a Legendrian tangle, so the ruling
/// combo type serves both purposes.
pub type FramedCombo = TangleCombo;

/// Right-hand half of the hook tangle D_{i,j}. The left half is fixed: the
/// strand at level i descends past the intermediate strands and meets the
/// strand at level j in a right cusp.
///
/// Only `BottomCusp` makes 𝒴_n crossing-absorbing and idempotent for n ≥ 3;
/// the other shapes agree with it on D_{i,i+1} in arity i+1 and are kept for
/// comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HookShape {
    /// A left cusp joining right endpoints n−1, n; every other strand runs
    /// straight through.
    BottomCusp,
    /// A left cusp joining right endpoints i, i+1; the intermediate strands
    /// shift down by one.
    CuspAtI,
    /// A left cusp joining right endpoints j−1, j.
    CuspAtJ,
    /// The mirror image of the left half: right endpoints i and j joined.
    Mirror,
}

pub const DEFAULT_HOOK: HookShape = HookShape::BottomCusp;

/// D_{i,j} in arity n (1-based levels); the zero combo when i ≥ j.
pub fn build_d(i: usize, j: usize, n: usize) -> Result<FramedCombo> {
    build_d_with(i, j, n, DEFAULT_HOOK)
}

pub fn build_d_with(i: usize, j: usize, n: usize, shape: HookShape) -> Result<FramedCombo> {
    if i == 0 || j == 0 || i > n || j > n {
        return Err(Error::BadIndices(format!("D_({i},{j}) in arity {n}")));
    }
    if i >= j {
        return Ok(TangleCombo::zero(n));
    }
    let mut w: Vec<TEvent> = (i - 1..j - 2).map(TEvent::X).collect();
    w.push(TEvent::R(j - 2));
    match shape {
        HookShape::BottomCusp => w.push(TEvent::L(n - 2)),
        HookShape::CuspAtI => w.push(TEvent::L(i - 1)),
        HookShape::CuspAtJ => w.push(TEvent::L(j - 2)),
        HookShape::Mirror => {
            w.push(TEvent::L(j - 2));
            w.extend((i - 1..j - 2).rev().map(TEvent::X));
        }
    }
    Ok(TangleCombo::single(
        RationalAS::one(),
        LegendrianTangle::new(n, w)?,
    ))
}

/// Y_n by the recursion Y_1 = 1,
/// Y_n = Y_{n-1}γ_n + Y_{n-1}·z/(1 − s^{2n−3}a)·Σ_{i=1}^{n-1} a s^{2n−2i−1} Σ_{j=0}^{i-1} s^j D_{i−j,i+1}.
pub fn bmw_symmetrizer(n: usize) -> Result<FramedCombo> {
    bmw_symmetrizer_with(n, DEFAULT_HOOK)
}

pub fn bmw_symmetrizer_with(n: usize, shape: HookShape) -> Result<FramedCombo> {
    if n == 0 {
        return Err(Error::BadIndices("Y_0 is undefined".to_string()));
    }
    let mut y = TangleCombo::identity(1);
    for m in 2..=n {
        let prev = y.extend_below(1);
        let mut inner = TangleCombo::zero(m);
        for i in 1..m {
            for j in 0..i {
                let c = RationalAS::mono(1, (2 * m - 2 * i - 1 + j) as i32, 1);
                inner = inner.add(&build_d_with(i - j, i + 1, m, shape)?.scale(&c))?;
            }
        }
        let den = &LaurentAS::one() - &LaurentAS::mono(1, (2 * m - 3) as i32, 1);
        let factor = RationalAS::new(LaurentAS::z_in_s(), den)?;
        y = prev
            .mul(&build_gamma(m))?
            .add(&prev.mul(&inner.scale(&factor))?)?;
    }
    Ok(y)
}

/// 𝒴_n = Y_n / c_n.
pub fn normalized_symmetrizer(n: usize) -> Result<FramedCombo> {
    normalized_symmetrizer_with(n, DEFAULT_HOOK)
}

pub fn normalized_symmetrizer_with(n: usize, shape: HookShape) -> Result<FramedCombo> {
    Ok(bmw_symmetrizer_with(n, shape)?.scale(&RationalAS::c_n(n).inv()?))
}
