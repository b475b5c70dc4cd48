use super::combo::TangleCombo;
use crate::algebra::RationalAS;
use crate::diagram::{LegendrianTangle, TEvent};
use crate::error::{Error, Result};

fn tangle(n: usize, events: Vec<TEvent>) -> LegendrianTangle {
    LegendrianTangle::new(n, events).expect("generated tangles are valid")
}

fn s_pow(k: i32) -> RationalAS {
    RationalAS::mono(0, k, 1)
}

/// γ_n = 1 + Σ_{j=1}^{n-1} s^j σ_{n-1}σ_{n-2}⋯σ_{n-j}.
pub fn build_gamma(n: usize) -> TangleCombo {
    let mut out = TangleCombo::identity(n);
    for j in 1..n {
        let word = (n - j - 1..=n - 2).map(TEvent::X).collect();
        out.add_term(s_pow(j as i32), tangle(n, word));
    }
    out
}

fn check_alpha(k: usize, n: usize) -> Result<()> {
    if k < 2 || k > n {
        return Err(Error::BadIndices(format!(
            "alpha_({k},{n}) needs 2 <= k <= n"
        )));
    }
    Ok(())
}

/// α_{k,n} by the recursion α_{2,n} = e_{n-1},
/// α_{k+1,n} = σα σ − zσα − zασ + z²α with σ = σ_{n-k}.
pub fn build_alpha(k: usize, n: usize) -> Result<TangleCombo> {
    check_alpha(k, n)?;
    let z = RationalAS::z();
    let mut alpha = TangleCombo::single(RationalAS::one(), LegendrianTangle::hook(n - 1, n)?);
    for kk in 2..k {
        let sigma = TangleCombo::single(RationalAS::one(), LegendrianTangle::sigma(n - kk, n)?);
        let sas = sigma.mul(&alpha)?.mul(&sigma)?;
        let sa = sigma.mul(&alpha)?.scale(&z);
        let as_ = alpha.mul(&sigma)?.scale(&z);
        let a = alpha.scale(&z.mul(&z));
        alpha = sas.sub(&sa)?.sub(&as_)?.add(&a)?;
    }
    Ok(alpha)
}

/// The word of C_{k,n} = σ_{n-k+1}⋯σ_{n-2} e_{n-1} σ_{n-2}⋯σ_{n-k+1}.
pub fn c_word(k: usize, n: usize) -> Result<Vec<TEvent>> {
    check_alpha(k, n)?;
    let mut w: Vec<TEvent> = (n - k..n - 2).map(TEvent::X).collect();
    w.push(TEvent::R(n - 2));
    w.push(TEvent::L(n - 2));
    w.extend((n - k..n - 2).rev().map(TEvent::X));
    Ok(w)
}

/// α_{k,n} as Σ_X (−z)^{|X|} r_X(C_{k,n}), where r_X smooths the crossings
/// in X horizontally (deletes them from the word).
pub fn build_alpha_by_resolution(k: usize, n: usize) -> Result<TangleCombo> {
    let word = c_word(k, n)?;
    let crossings: Vec<usize> = (0..word.len())
        .filter(|&i| matches!(word[i], TEvent::X(_)))
        .collect();
    let minus_z = RationalAS::z().neg();
    let mut out = TangleCombo::zero(n);
    for mask in 0u32..(1 << crossings.len()) {
        let resolved: Vec<TEvent> = word
            .iter()
            .enumerate()
            .filter(|(i, _)| {
                crossings
                    .iter()
                    .position(|c| c == i)
                    .map(|b| mask >> b & 1 == 0)
                    .unwrap_or(true)
            })
            .map(|(_, e)| *e)
            .collect();
        out.add_term(minus_z.pow(mask.count_ones()), tangle(n, resolved));
    }
    Ok(out)
}

/// β_n = (1 − z Σ_{k=2}^n α_{k,n}) γ_n.
pub fn build_beta(n: usize) -> Result<TangleCombo> {
    let mut sum = TangleCombo::zero(n);
    for k in 2..=n {
        sum = sum.add(&build_alpha(k, n)?)?;
    }
    let left = TangleCombo::identity(n).sub(&sum.scale(&RationalAS::z()))?;
    left.mul(&build_gamma(n))
}

/// L_1 = 1, L_n = L_{n-1} β_n with L_{n-1} extended by a strand below.
pub fn build_l(n: usize) -> Result<TangleCombo> {
    if n == 0 {
        return Err(Error::BadIndices("L_0 is undefined".to_string()));
    }
    let mut l = TangleCombo::identity(1);
    for m in 2..=n {
        l = l.extend_below(1).mul(&build_beta(m)?)?;
    }
    Ok(l)
}
