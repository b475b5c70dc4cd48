use serde::Serialize;

use super::complex::{build_dga, Dga};
use super::reps::{count_representations, RepQuery};
use crate::algebra::{eval_z_at_sqrt_q, gl_order, QSqrt};
use crate::diagram::{insertion_point, ng_resolution, Event, FrontDiagram, PermutationBraid};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::ruling::reduced_ruling_polynomial;

/// The DGA of a front's Ng resolution. Fronts without base points get one
/// per component.
pub fn dga_of_front(front: &FrontDiagram) -> Result<Dga> {
    build_dga(&ng_resolution(&front.with_base_point_per_component()))
}

/// `count · (q^{n²})^{−rb/2} · |GL(n, 𝔽_q)|^{−ℓ}`.
pub fn normalize_count(count: u128, n: usize, q: u64, rb: usize, ell: usize) -> QSqrt {
    let scale = QSqrt::sqrt_q_pow(q, -((n * n * rb) as i32));
    let gl = QSqrt::from_int(q, gl_order(n as u32, q) as i128);
    let mut v = QSqrt::from_int(q, count as i128).mul(&scale);
    for _ in 0..ell {
        v = v.div(&gl).expect("|GL| is nonzero");
    }
    v
}

/// Total `n`-dimensional representation number over `𝔽_q`.
pub fn total_rep_number(k: &FrontDiagram, n: usize, q: u64, exec: Exec) -> Result<QSqrt> {
    total_rep_number_with(k, &RepQuery::new(n, q).with_exec(exec))
}

/// [`total_rep_number`] with explicit search settings; the cell is ignored.
pub fn total_rep_number_with(k: &FrontDiagram, query: &RepQuery) -> Result<QSqrt> {
    let dga = dga_of_front(k)?;
    let count = count_representations(
        &dga,
        &RepQuery {
            cell: None,
            ..query.clone()
        },
    )?;
    Ok(normalize_count(
        count,
        query.n,
        query.q,
        dga.rb(),
        dga.ell(),
    ))
}

/// `k` with all base points removed except the insertion point, which is
/// replaced by `ell` adjacent base points `*1 … *ell`.
pub fn with_clustered_base_points(k: &FrontDiagram, ell: usize) -> Result<FrontDiagram> {
    if ell == 0 {
        return Err(Error::Validation(
            "at least one base point is required".to_string(),
        ));
    }
    let ins = insertion_point(k)?;
    let mut events = Vec::new();
    for (e, ev) in k.events().iter().enumerate() {
        match ev {
            Event::BasePoint(p, _) if e == ins => {
                events.extend((1..=ell).map(|i| Event::BasePoint(*p, format!("*{i}"))));
            }
            Event::BasePoint(..) => {}
            other => events.push(other.clone()),
        }
    }
    FrontDiagram::new(events)
}

#[derive(Debug, Clone, Serialize)]
pub struct LemmaCountReport {
    pub beta: String,
    pub n: usize,
    pub q: u64,
    pub ell: usize,
    pub rb: usize,
    pub lambda: usize,
    /// Number of representations with `f(t₁⋯t_ℓ)` in the cell of `β`.
    pub count: u128,
    pub reduced_ruling: String,
    pub predicted: String,
    pub equal: bool,
}

/// Compares the per-cell representation count of `k` (with one base point
/// per right cusp, clustered at the insertion point) against the value
/// predicted by the reduced ruling polynomial of `S(k, β)`.
pub fn verify_lemma_count(
    k: &FrontDiagram,
    beta: &PermutationBraid,
    q: u64,
    exec: Exec,
) -> Result<LemmaCountReport> {
    verify_lemma_count_with(k, beta, &RepQuery::new(beta.n(), q).with_exec(exec))
}

/// [`verify_lemma_count`] with explicit search settings; `n` and the cell
/// are taken from `beta`.
pub fn verify_lemma_count_with(
    k: &FrontDiagram,
    beta: &PermutationBraid,
    query: &RepQuery,
) -> Result<LemmaCountReport> {
    let (q, exec) = (query.q, query.exec);
    let n = beta.n();
    let ell = k.right_cusps();
    let kb = with_clustered_base_points(k, ell)?;
    let dga = build_dga(&ng_resolution(&kb))?;
    let count = count_representations(
        &dga,
        &RepQuery {
            n,
            cell: Some(beta.perm().to_vec()),
            ..query.clone()
        },
    )?;
    let rr = reduced_ruling_polynomial(k, &beta.to_tangle(), exec)?;
    let rb = dga.rb();
    let lambda = beta.length();
    let gl = QSqrt::from_int(q, gl_order(n as u32, q) as i128);
    let mut rhs = eval_z_at_sqrt_q(&rr, q)
        .mul(&QSqrt::sqrt_q_pow(
            q,
            (n * (n - 1) + n * n * rb + lambda) as i32,
        ))
        .mul(&QSqrt::from_int(q, (q as i128 - 1).pow(n as u32)));
    for _ in 1..ell {
        rhs = rhs.mul(&gl);
    }
    let lhs = QSqrt::from_int(q, count as i128);
    Ok(LemmaCountReport {
        beta: beta.render(),
        n,
        q,
        ell,
        rb,
        lambda,
        count,
        reduced_ruling: rr.render(),
        predicted: rhs.render(),
        equal: lhs == rhs,
    })
}
