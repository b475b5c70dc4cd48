use super::combo::TangleCombo;
use super::sweep::{ruling_polynomial_with, ClusterFilter};
use crate::algebra::{LaurentZ, RationalAS};
use crate::diagram::{satellite, FrontDiagram, LegendrianTangle, PermutationBraid};
use crate::error::{Error, Result};
use crate::exec::Exec;

/// Σ z^{j(ρ)} over rulings of S(K, β) that are reduced at the insertion slice.
pub fn reduced_ruling_polynomial(
    k: &FrontDiagram,
    beta: &LegendrianTangle,
    exec: Exec,
) -> Result<LaurentZ> {
    let sat = satellite(k, beta)?;
    let m = &sat.markup;
    let filter = ClusterFilter {
        slice: m.insertion_slice,
        clusters: &m.insertion().clusters,
    };
    Ok(ruling_polynomial_with(&sat.front, Some(filter), exec))
}

/// R¹ of a satellite, without the reducedness filter.
pub fn satellite_ruling_polynomial(
    k: &FrontDiagram,
    pattern: &LegendrianTangle,
    exec: Exec,
) -> Result<LaurentZ> {
    Ok(ruling_polynomial_with(
        &satellite(k, pattern)?.front,
        None,
        exec,
    ))
}

/// Σ r_i R¹_{S(K, α_i)} for a combo Σ r_i α_i with `a`-free coefficients,
/// with z = s − s⁻¹.
pub fn satellite_ruling_eval(
    k: &FrontDiagram,
    combo: &TangleCombo,
    exec: Exec,
) -> Result<RationalAS> {
    let terms: Vec<(RationalAS, LegendrianTangle)> =
        combo.terms().map(|(c, t)| (c.clone(), t.clone())).collect();
    if terms.iter().any(|(c, _)| !c.is_a_free()) {
        return Err(Error::NotAFree);
    }
    let polys = exec.map(&terms, |(_, t)| {
        satellite_ruling_polynomial(k, t, Exec::Sequential)
    });
    let mut acc = RationalAS::zero();
    for ((c, _), p) in terms.iter().zip(polys) {
        acc = acc.add(&c.mul(&RationalAS::from_laurent_z(&p?)));
    }
    Ok(acc)
}

/// R¹_{n,K} = (1/c_n) Σ_{β ∈ S_n} s^{λ(β)} R̃_{S(K,β)} with z = s − s⁻¹.
pub fn colored_ruling_polynomial(k: &FrontDiagram, n: usize, exec: Exec) -> Result<RationalAS> {
    let braids = PermutationBraid::all(n);
    let polys = exec.map(&braids, |b| {
        reduced_ruling_polynomial(k, &b.to_tangle(), Exec::Sequential)
    });
    let mut acc = RationalAS::zero();
    for (b, p) in braids.iter().zip(polys) {
        let term = RationalAS::from_laurent_z(&p?).mul(&RationalAS::mono(0, b.length() as i32, 1));
        acc = acc.add(&term);
    }
    acc.div(&RationalAS::c_n(n))
}
