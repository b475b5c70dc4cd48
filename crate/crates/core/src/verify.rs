//! Verification suites that check the main identities between the invariants
//! on built-in and randomly generated fronts. Each suite returns a
//! serializable report; nothing in a report depends on timing or on the
//! number of worker threads.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{ADegree, LaurentZ, RationalAS};
use crate::builtins::{trefoil, unknot, unknot_stab};
use crate::dga::{
    dga_of_front, total_rep_number_with, verify_lemma_count_with, RepQuery, DEFAULT_REP_BUDGET,
};
use crate::diagram::{
    framed_from_front, Cross, Event, FEvent, FramedDiagram, FrontDiagram, LegendrianTangle,
    PermutationBraid,
};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::kauffman::{
    bmw_symmetrizer, build_d, colored_kauffman, kauffman_of_front, kauffman_with,
    normalized_symmetrizer, satellite_kauffman_eval, SkeinConfig,
};
use crate::ruling::{
    build_gamma, build_l, colored_ruling_polynomial, ruling_polynomial, satellite_ruling_eval,
    TangleCombo,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    fn new(suite: &str) -> Self {
        SuiteReport {
            suite: suite.to_string(),
            passed: true,
            checks: Vec::new(),
        }
    }

    fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.passed &= passed;
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    /// Records `lhs == rhs`, with both sides in the detail.
    fn push_eq<T: PartialEq + std::fmt::Display>(
        &mut self,
        name: impl Into<String>,
        lhs: &T,
        rhs: &T,
    ) {
        self.push(name, lhs == rhs, format!("{lhs} vs {rhs}"));
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// The available suites, by CLI name.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Skein,
    TheoremRulingsKauffman,
    TheoremMain,
    LemmaCount,
    BmwIdentities,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Skein,
        Suite::TheoremRulingsKauffman,
        Suite::TheoremMain,
        Suite::LemmaCount,
        Suite::BmwIdentities,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Skein => "skein",
            Suite::TheoremRulingsKauffman => "theorem-rulings-kauffman",
            Suite::TheoremMain => "theorem-main",
            Suite::LemmaCount => "lemma-count",
            Suite::BmwIdentities => "bmw-identities",
        }
    }

    pub fn parse(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Validation(format!("unknown suite '{s}'")))
    }
}

/// Settings shared by all suites.
#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub exec: Exec,
    pub skein: SkeinConfig,
    /// Node budget of each representation search.
    pub rep_budget: u64,
    pub seed: u64,
    /// Number of random fronts in the randomized suites.
    pub random_fronts: usize,
    /// Fronts to check; the built-ins when empty.
    pub fronts: Vec<(String, FrontDiagram)>,
    /// Representation dimensions and field orders for `theorem-main`, and
    /// colors for the colored checks.
    pub grid: Vec<(usize, u64)>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            exec: Exec::default(),
            skein: SkeinConfig::default(),
            rep_budget: DEFAULT_REP_BUDGET,
            seed: 0,
            random_fronts: 20,
            fronts: Vec::new(),
            grid: vec![(1, 2), (1, 4), (2, 2)],
        }
    }
}

impl VerifyConfig {
    fn fronts(&self) -> Vec<(String, FrontDiagram)> {
        if self.fronts.is_empty() {
            builtin_fronts()
        } else {
            self.fronts.clone()
        }
    }

    /// Fronts usable as satellite companions (knots with an insertion point).
    fn companions(&self) -> Vec<(String, FrontDiagram)> {
        if self.fronts.is_empty() {
            vec![
                ("unknot".to_string(), unknot()),
                ("trefoil-rh".to_string(), trefoil()),
            ]
        } else {
            self.fronts.clone()
        }
    }

    fn query(&self, n: usize, q: u64) -> RepQuery {
        RepQuery {
            budget: self.rep_budget,
            ..RepQuery::new(n, q).with_exec(self.exec)
        }
    }

    fn skein(&self) -> SkeinConfig {
        SkeinConfig {
            exec: self.exec,
            ..self.skein
        }
    }
}

fn builtin_fronts() -> Vec<(String, FrontDiagram)> {
    vec![
        ("unknot".to_string(), unknot()),
        ("unknot-stab".to_string(), unknot_stab()),
        ("trefoil-rh".to_string(), trefoil()),
    ]
}

/// A random front in plat position: `components` nested left cusps, then
/// `crossings` random crossings, then right cusps. One base point sits on
/// the top strand after the left cusps, oriented left to right.
pub fn random_plat_front<R: Rng>(
    rng: &mut R,
    max_components: usize,
    max_crossings: usize,
) -> FrontDiagram {
    let c = rng.gen_range(1..=max_components.max(1));
    let m = rng.gen_range(0..=max_crossings);
    let mut events: Vec<Event> = (0..c).map(|i| Event::LeftCusp(2 * i)).collect();
    events.push(Event::BasePoint(0, "*".to_string()));
    for _ in 0..m {
        if 2 * c >= 2 {
            events.push(Event::Crossing(rng.gen_range(0..2 * c - 1)));
        }
    }
    events.extend((0..c).map(|_| Event::RightCusp(0)));
    FrontDiagram::new(events).expect("plat fronts are valid")
}

/// `count` random plat fronts from `seed`.
pub fn random_fronts(
    seed: u64,
    count: usize,
    max_components: usize,
    max_crossings: usize,
) -> Vec<FrontDiagram> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_plat_front(&mut rng, max_components, max_crossings))
        .collect()
}

fn rz(p: &LaurentZ) -> RationalAS {
    RationalAS::from_laurent_z(p)
}

fn with_events(
    front: &FrontDiagram,
    at: usize,
    remove: usize,
    insert: &[Event],
) -> Result<FrontDiagram> {
    let mut ev = front.events().to_vec();
    ev.splice(at..at + remove, insert.iter().cloned());
    FrontDiagram::new(ev)
}

/// Ruling skein relations on random fronts, the fishtail relation directly
/// and through satellites, and confluence of the Kauffman skein recursion.
pub fn suite_skein(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new(Suite::Skein.name());
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let z = LaurentZ::z();
    for idx in 0..cfg.random_fronts {
        let k = random_plat_front(&mut rng, 3, 6);
        let tag = format!("front {idx} [{}]", k.render());
        let crossings: Vec<(usize, usize)> = k
            .events()
            .iter()
            .enumerate()
            .filter_map(|(e, ev)| match ev {
                Event::Crossing(q) => Some((e, *q)),
                _ => None,
            })
            .collect();
        if !crossings.is_empty() {
            let (e, q) = crossings[rng.gen_range(0..crossings.len())];
            let xx = with_events(&k, e, 0, &[Event::Crossing(q)])?;
            let id = with_events(&k, e, 1, &[])?;
            let hook = with_events(&k, e, 1, &[Event::RightCusp(q), Event::LeftCusp(q)])?;
            let lhs = ruling_polynomial(&xx);
            let rhs = &(&ruling_polynomial(&id) + &(&z * &ruling_polynomial(&k)))
                - &(&z * &ruling_polynomial(&hook));
            rep.push(
                format!("double crossing, {tag}, event {}", e + 1),
                lhs == rhs,
                format!("{} vs {}", lhs.render(), rhs.render()),
            );
        }
        let t = rng.gen_range(0..=k.events().len());
        let strands = k.counts()[t];
        if strands >= 2 {
            let q = rng.gen_range(0..strands - 1);
            for (name, ins) in [
                (
                    "sigma e",
                    [Event::Crossing(q), Event::RightCusp(q), Event::LeftCusp(q)],
                ),
                (
                    "e sigma",
                    [Event::RightCusp(q), Event::LeftCusp(q), Event::Crossing(q)],
                ),
            ] {
                let f = with_events(&k, t, 0, &ins)?;
                let r = ruling_polynomial(&f);
                rep.push(
                    format!("fishtail {name}, {tag}, slice {t}"),
                    r.is_zero(),
                    r.render(),
                );
            }
        }
        let fr = framed_from_front(&k);
        for (i, ev) in fr.events().iter().enumerate() {
            let FEvent::Cross(q, kind) = *ev else {
                continue;
            };
            let word = fr.events();
            let mut flipped = word.to_vec();
            flipped[i] = FEvent::Cross(q, kind.flip());
            let mut h = word.to_vec();
            h.remove(i);
            let mut v = word.to_vec();
            v.splice(i..=i, [FEvent::Cap(q), FEvent::Cup(q)]);
            let f = |w: Vec<FEvent>| kauffman_with(&FramedDiagram::closed(w)?, cfg.skein());
            let lhs = f(word.to_vec())?;
            let smooth = &crate::algebra::LaurentAZ::z() * &(&f(h)? - &f(v)?);
            let rhs = match kind {
                Cross::Pos => &f(flipped)? + &smooth,
                Cross::Neg => &f(flipped)? - &smooth,
            };
            rep.push(
                format!("kauffman switch, {tag}, framed event {}", i + 1),
                lhs == rhs,
                lhs.render(),
            );
        }
    }
    for (name, k) in cfg.companions() {
        for n in 2..=3 {
            for i in 1..n {
                let s = LegendrianTangle::sigma(i, n)?;
                let e = LegendrianTangle::hook(i, n)?;
                for (label, t) in [("sigma e", s.multiply(&e)?), ("e sigma", e.multiply(&s)?)] {
                    let r = satellite_ruling_eval(
                        &k,
                        &TangleCombo::single(RationalAS::one(), t),
                        cfg.exec,
                    )?;
                    rep.push(
                        format!("satellite fishtail {label}_{i}, n = {n}, {name}"),
                        r.is_zero(),
                        r.render(),
                    );
                }
            }
        }
    }
    Ok(rep)
}

/// `F|_{a⁻¹=0} = R¹` and `deg_a F ≤ 0` for fronts, and the colored version
/// for the companions.
pub fn suite_theorem_rulings_kauffman(cfg: &VerifyConfig, colors: &[usize]) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new(Suite::TheoremRulingsKauffman.name());
    let mut fronts = cfg.fronts();
    if cfg.fronts.is_empty() {
        for (i, k) in random_fronts(cfg.seed, cfg.random_fronts, 3, 8)
            .into_iter()
            .enumerate()
        {
            fronts.push((format!("random {i} [{}]", k.render()), k));
        }
    }
    let results = cfg.exec.map(&fronts, |(_, k)| {
        let f = kauffman_of_front(
            k,
            SkeinConfig {
                exec: Exec::Sequential,
                ..cfg.skein
            },
        )?;
        Ok::<_, Error>((RationalAS::from_laurent_az(&f), ruling_polynomial(k)))
    });
    for ((name, _), res) in fronts.iter().zip(results) {
        let (f, r) = res?;
        let deg = f.deg_a();
        rep.push(
            format!("deg_a <= 0, {name}"),
            deg <= ADegree::Finite(0),
            deg.to_string(),
        );
        rep.push_eq(
            format!("specialization equals rulings, {name}"),
            &f.specialize_a_inv_zero()?,
            &rz(&r),
        );
    }
    for (name, k) in cfg.companions() {
        for &n in colors {
            let f = colored_kauffman(&k, n, cfg.skein())?;
            let deg = f.deg_a();
            rep.push(
                format!("colored deg_a <= 0, n = {n}, {name}"),
                deg <= ADegree::Finite(0),
                deg.to_string(),
            );
            let spec = f.specialize_a_inv_zero()?;
            let r = colored_ruling_polynomial(&k, n, cfg.exec)?;
            rep.push_eq(
                format!("colored specialization equals colored rulings, n = {n}, {name}"),
                &spec,
                &r,
            );
            if n == 2 && name == "unknot" && cfg.fronts.is_empty() {
                let q = RationalAS::mono(0, 2, 1);
                let one = RationalAS::one();
                let expected = q.div(&q.sub(&one).pow(2).mul(&q.add(&one)))?;
                rep.push_eq(
                    "unknot n = 2 closed form q/((q-1)^2(q+1))",
                    &spec,
                    &expected,
                );
            }
        }
    }
    Ok(rep)
}

/// Normalized representation counts against colored ruling polynomials.
pub fn suite_theorem_main(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new(Suite::TheoremMain.name());
    for (name, k) in cfg.companions() {
        let dga = dga_of_front(&k)?;
        rep.push(
            format!("d^2 = 0, {name}"),
            dga.d_squared_is_zero(),
            format!("rb = {}, ell = {}", dga.rb(), dga.ell()),
        );
        for &(n, q) in &cfg.grid {
            let lhs = total_rep_number_with(&k, &cfg.query(n, q))?;
            let rhs = colored_ruling_polynomial(&k, n, cfg.exec)?.eval_sqrt_q(q)?;
            rep.push(
                format!("representation number equals colored rulings, n = {n}, q = {q}, {name}"),
                lhs == rhs,
                format!("{} vs {}", lhs.render(), rhs.render()),
            );
        }
    }
    Ok(rep)
}

/// Per-cell representation counts against reduced ruling polynomials.
pub fn suite_lemma_count(cfg: &VerifyConfig, n: usize, q: u64) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new(Suite::LemmaCount.name());
    for (name, k) in cfg.companions() {
        for b in PermutationBraid::all(n) {
            let r = verify_lemma_count_with(&k, &b, &cfg.query(n, q))?;
            rep.push(
                format!("cell {}, q = {q}, {name}", b.render()),
                r.equal,
                format!(
                    "count {} vs predicted {} (reduced rulings {})",
                    r.count, r.predicted, r.reduced_ruling
                ),
            );
        }
    }
    Ok(rep)
}

/// Identities of the symmetrizer and the ruling-side elements, checked
/// through satellites.
pub fn suite_bmw_identities(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new(Suite::BmwIdentities.name());
    let one = RationalAS::one();
    let s = RationalAS::mono(0, 1, 1);
    let c2_inv = RationalAS::c_n(2).inv()?;
    let id = LegendrianTangle::identity(2);
    let sigma = LegendrianTangle::sigma(1, 2)?;
    let e = LegendrianTangle::hook(1, 2)?;

    let mut expected = TangleCombo::zero(2);
    expected.add_term(c2_inv.clone(), id.clone());
    expected.add_term(c2_inv.mul(&s), sigma.clone());
    let sa = RationalAS::mono(1, 1, 1);
    expected.add_term(
        c2_inv.mul(&sa.mul(&RationalAS::z()).div(&one.sub(&sa))?),
        e.clone(),
    );
    let y2 = normalized_symmetrizer(2)?;
    rep.push(
        "normalized Y2 closed form",
        y2.same_terms(&expected),
        format!("{y2}"),
    );
    let spec = y2.specialize_a_inv_zero()?;
    let l2 = build_l(2)?.drop_fishtails().scale(&c2_inv);
    rep.push(
        "specialized Y2 equals L2/c2",
        spec.same_terms(&l2),
        format!("{spec} vs {l2}"),
    );

    let y2_raw = bmw_symmetrizer(2)?;
    let sig = TangleCombo::single(one.clone(), sigma);
    for (name, k) in cfg.companions() {
        let base = satellite_kauffman_eval(&k, &y2_raw, cfg.skein())?;
        let absorbed = satellite_kauffman_eval(&k, &y2_raw.mul(&sig)?, cfg.skein())?;
        rep.push_eq(
            format!("crossing absorption, {name}"),
            &absorbed,
            &base.mul(&s),
        );
        let squared = satellite_kauffman_eval(&k, &y2_raw.mul(&y2_raw)?, cfg.skein())?;
        rep.push_eq(
            format!("quasi-idempotence, {name}"),
            &squared,
            &base.mul(&RationalAS::c_n(2)),
        );
        for n in 2..=3 {
            let gamma = build_gamma(n);
            for i in 1..n {
                let lhs = satellite_ruling_eval(&k, &build_d(i, n, n)?.mul(&gamma)?, cfg.exec)?;
                let mut sum = TangleCombo::zero(n);
                for r in 0..n - i {
                    sum =
                        sum.add(&build_d(i, n - r, n)?.scale(&RationalAS::mono(0, r as i32, 1)))?;
                }
                let rhs = satellite_ruling_eval(&k, &sum, cfg.exec)?;
                rep.push_eq(
                    format!("D gamma expansion, i = {i}, n = {n}, {name}"),
                    &lhs,
                    &rhs,
                );
            }
            let lhs = colored_ruling_polynomial(&k, n, cfg.exec)?;
            let rhs =
                satellite_ruling_eval(&k, &build_l(n)?, cfg.exec)?.div(&RationalAS::c_n(n))?;
            rep.push_eq(format!("colored rulings from L{n}, {name}"), &lhs, &rhs);
        }
    }
    Ok(rep)
}

/// Runs one suite with its default parameters (colors and cells up to 2,
/// `q = 2` for the per-cell counts).
pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Result<SuiteReport> {
    match suite {
        Suite::Skein => suite_skein(cfg),
        Suite::TheoremRulingsKauffman => suite_theorem_rulings_kauffman(cfg, &[1, 2]),
        Suite::TheoremMain => suite_theorem_main(cfg),
        Suite::LemmaCount => suite_lemma_count(cfg, 2, 2),
        Suite::BmwIdentities => suite_bmw_identities(cfg),
    }
}
