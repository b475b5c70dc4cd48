use super::bmw::{normalized_symmetrizer_with, FramedCombo, HookShape, DEFAULT_HOOK};
use super::skein::{kauffman_with, SkeinConfig};
use crate::algebra::{LaurentAZ, RationalAS};
use crate::diagram::{framed_from_front, satellite, FrontDiagram, LegendrianTangle};
use crate::error::Result;
use crate::exec::Exec;

/// F of `fr(front)`.
pub fn kauffman_of_front(front: &FrontDiagram, cfg: SkeinConfig) -> Result<LaurentAZ> {
    kauffman_with(&framed_from_front(front), cfg)
}

/// Σ r_i F_{S(K, α_i)} with z = s − s⁻¹.
pub fn satellite_kauffman_eval(
    k: &FrontDiagram,
    combo: &FramedCombo,
    cfg: SkeinConfig,
) -> Result<RationalAS> {
    let terms: Vec<(RationalAS, LegendrianTangle)> =
        combo.terms().map(|(c, t)| (c.clone(), t.clone())).collect();
    let inner = SkeinConfig {
        exec: Exec::Sequential,
        ..cfg
    };
    let values = cfg.exec.map(&terms, |(_, t)| {
        let sat = satellite(k, t)?;
        kauffman_of_front(&sat.front, inner)
    });
    let mut acc = RationalAS::zero();
    for ((c, _), v) in terms.iter().zip(values) {
        acc = acc.add(&c.mul(&RationalAS::from_laurent_az(&v?)));
    }
    Ok(acc)
}

/// F_{n,K}(a, s) = F_{S(K, 𝒴_n)} with z = s − s⁻¹.
pub fn colored_kauffman(k: &FrontDiagram, n: usize, cfg: SkeinConfig) -> Result<RationalAS> {
    colored_kauffman_with(k, n, cfg, DEFAULT_HOOK)
}

pub fn colored_kauffman_with(
    k: &FrontDiagram,
    n: usize,
    cfg: SkeinConfig,
    shape: HookShape,
) -> Result<RationalAS> {
    satellite_kauffman_eval(k, &normalized_symmetrizer_with(n, shape)?, cfg)
}
