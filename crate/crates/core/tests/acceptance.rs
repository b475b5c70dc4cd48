//! Acceptance run: every criterion prints one PASS or FAIL line with its
//! wall time against the allowed budget. Exits nonzero if any fails.

use std::time::{Duration, Instant};

use legendrian_core::algebra::{gl_order, ADegree, Gf, LaurentZ, QSqrt, RationalAS};
use legendrian_core::builtins::{trefoil, unknot, unknot_stab};
use legendrian_core::dga::{
    bruhat_cell, build_dga, count_augmentations, count_representations, dga_of_front,
    normalize_count, total_rep_number, verify_lemma_count, RepQuery,
};
use legendrian_core::diagram::{ng_resolution, satellite, FrontDiagram, PermutationBraid};
use legendrian_core::kauffman::{colored_kauffman, kauffman_of_front, SkeinConfig};
use legendrian_core::ruling::{
    build_l, colored_ruling_polynomial, ruling_polynomial, satellite_ruling_eval,
};
use legendrian_core::verify::{
    run_suite, suite_bmw_identities, suite_skein, suite_theorem_rulings_kauffman, Suite,
    SuiteReport, VerifyConfig,
};
use legendrian_core::{Error, Exec};

type Outcome = Result<Vec<String>, Error>;

struct Runner {
    failed: usize,
}

impl Runner {
    fn run(&mut self, id: usize, title: &str, limit: Duration, body: impl FnOnce() -> Outcome) {
        let start = Instant::now();
        let result = body();
        let took = start.elapsed();
        let (ok, notes) = match result {
            Ok(fails) => (fails.is_empty(), fails),
            Err(e) => (false, vec![format!("error: {e}")]),
        };
        let in_time = took <= limit;
        let verdict = if ok && in_time { "PASS" } else { "FAIL" };
        println!(
            "{verdict} criterion {id:>2}: {title} ({:.2} s, limit {} s)",
            took.as_secs_f64(),
            limit.as_secs()
        );
        for n in &notes {
            println!("    {n}");
        }
        if !in_time {
            println!("    over the time limit");
        }
        if verdict == "FAIL" {
            self.failed += 1;
        }
    }
}

fn check(fails: &mut Vec<String>, ok: bool, what: impl FnOnce() -> String) {
    if !ok {
        fails.push(what());
    }
}

fn eq<T: PartialEq + std::fmt::Debug>(fails: &mut Vec<String>, name: &str, got: T, want: T) {
    if got != want {
        fails.push(format!("{name}: got {got:?}, want {want:?}"));
    }
}

fn suite_fails(fails: &mut Vec<String>, r: &SuiteReport) {
    for c in r.failures() {
        fails.push(format!("{}: {} ({})", r.suite, c.name, c.detail));
    }
}

fn companions() -> [(&'static str, FrontDiagram); 2] {
    [("unknot", unknot()), ("trefoil", trefoil())]
}

fn ruling_baselines() -> Outcome {
    let mut f = Vec::new();
    eq(
        &mut f,
        "unknot",
        ruling_polynomial(&unknot()),
        LaurentZ::z_pow(-1),
    );
    eq(
        &mut f,
        "stabilized unknot",
        ruling_polynomial(&unknot_stab()),
        LaurentZ::zero(),
    );
    eq(
        &mut f,
        "trefoil",
        ruling_polynomial(&trefoil()),
        &LaurentZ::z() + &LaurentZ::z_pow(-1).scale(2),
    );
    eq(&mut f, "trefoil tb", trefoil().tb(), 1);
    Ok(f)
}

fn rulings_from_kauffman() -> Outcome {
    let cfg = VerifyConfig {
        random_fronts: 20,
        ..VerifyConfig::default()
    };
    let mut f = Vec::new();
    let r = suite_theorem_rulings_kauffman(&cfg, &[1])?;
    let random = r
        .checks
        .iter()
        .filter(|c| c.name.contains("random"))
        .count();
    check(&mut f, random >= 40, || {
        format!("only {random} random-front checks")
    });
    suite_fails(&mut f, &r);
    Ok(f)
}

fn skein_properties() -> Outcome {
    let mut f = Vec::new();
    suite_fails(&mut f, &suite_skein(&VerifyConfig::default())?);
    Ok(f)
}

fn bmw_layer() -> Outcome {
    let mut f = Vec::new();
    suite_fails(&mut f, &suite_bmw_identities(&VerifyConfig::default())?);
    Ok(f)
}

fn colored_rulings_from_l() -> Outcome {
    let mut f = Vec::new();
    for (name, k) in companions() {
        for n in 2..=3 {
            let lhs = colored_ruling_polynomial(&k, n, Exec::Parallel)?;
            let rhs = satellite_ruling_eval(&k, &build_l(n)?, Exec::Parallel)?
                .div(&RationalAS::c_n(n))?;
            eq(&mut f, &format!("{name}, n = {n}"), lhs, rhs);
        }
    }
    Ok(f)
}

fn colored_kauffman_specializes() -> Outcome {
    let mut f = Vec::new();
    let cfg = SkeinConfig {
        exec: Exec::Parallel,
        ..SkeinConfig::default()
    };
    for (name, k) in companions() {
        let ck = colored_kauffman(&k, 2, cfg)?;
        check(&mut f, ck.deg_a() <= ADegree::Finite(0), || {
            format!("{name}: deg_a = {}", ck.deg_a())
        });
        let spec = ck.specialize_a_inv_zero()?;
        let cr = colored_ruling_polynomial(&k, 2, Exec::Parallel)?;
        if name == "unknot" {
            let q = RationalAS::mono(0, 2, 1);
            let one = RationalAS::one();
            let closed = q.div(&q.sub(&one).pow(2).mul(&q.add(&one)))?;
            eq(&mut f, "unknot closed form", cr.clone(), closed);
        }
        eq(&mut f, name, spec, cr);
    }
    Ok(f)
}

fn representation_numbers() -> Outcome {
    let mut f = Vec::new();
    for (name, k) in companions() {
        for (n, q) in [(1, 2), (1, 4), (2, 2)] {
            let lhs = total_rep_number(&k, n, q, Exec::Parallel)?;
            let rhs = colored_ruling_polynomial(&k, n, Exec::Parallel)?.eval_sqrt_q(q)?;
            eq(&mut f, &format!("{name}, n = {n}, q = {q}"), lhs, rhs);
        }
    }
    let u = dga_of_front(&unknot())?;
    let t = dga_of_front(&trefoil())?;
    eq(
        &mut f,
        "unknot augmentations at q = 2",
        count_augmentations(&u, 2, Exec::Parallel)?,
        2,
    );
    let u2 = count_representations(&u, &RepQuery::new(2, 2))?;
    eq(&mut f, "unknot n = 2 count", u2, 16);
    eq(
        &mut f,
        "unknot n = 2 value",
        normalize_count(u2, 2, 2, u.rb(), u.ell()),
        QSqrt::from_ratio(2, (2, 3).into()),
    );
    let t1 = count_augmentations(&t, 2, Exec::Parallel)?;
    eq(&mut f, "trefoil augmentations at q = 2", t1, 20);
    let five_over_root2 = QSqrt::from_ratio(2, 5.into()).mul(&QSqrt::sqrt_q_pow(2, -1));
    eq(
        &mut f,
        "trefoil value",
        normalize_count(t1, 1, 2, t.rb(), t.ell()),
        five_over_root2,
    );
    Ok(f)
}

fn lemma_counts() -> Outcome {
    let mut f = Vec::new();
    for (name, k) in companions() {
        for b in PermutationBraid::all(2) {
            let r = verify_lemma_count(&k, &b, 2, Exec::Parallel)?;
            check(&mut f, r.equal, || {
                format!("{name}, {}: {} vs {}", r.beta, r.count, r.predicted)
            });
            if name == "unknot" && b.length() == 1 {
                eq(&mut f, "unknot sigma1 forced zero", r.count, 0);
            }
            check(&mut f, r.ell == k.right_cusps(), || {
                format!("{name}: ell = {}", r.ell)
            });
        }
    }
    Ok(f)
}

fn structural() -> Outcome {
    let mut f = Vec::new();
    let builtins = [
        ("unknot", unknot()),
        ("unknot-stab", unknot_stab()),
        ("trefoil", trefoil()),
    ];
    let cfg = SkeinConfig {
        exec: Exec::Parallel,
        ..SkeinConfig::default()
    };
    for (name, k) in &builtins {
        check(&mut f, dga_of_front(k)?.d_squared_is_zero(), || {
            format!("d^2, {name}")
        });
        let fk = kauffman_of_front(k, cfg)?;
        check(&mut f, fk.deg_a().is_some_and(|d| d <= 0), || {
            format!("deg_a, {name}")
        });
        for n in 1..=3 {
            for b in PermutationBraid::all(n) {
                let s = satellite(k, &b.to_tangle())?;
                let d = build_dga(&ng_resolution(&s.front))?;
                let tag = format!("{name}, {}", b.render());
                check(&mut f, d.d_squared_is_zero(), || format!("d^2, {tag}"));
                eq(
                    &mut f,
                    &format!("chords, {tag}"),
                    d.rb(),
                    n * n * k.rb() + b.length(),
                );
                if n == 2 {
                    let fs = kauffman_of_front(&s.front, cfg)?;
                    check(&mut f, fs.deg_a().is_some_and(|d| d <= 0), || {
                        format!("deg_a, {tag}")
                    });
                }
            }
        }
    }
    for n in 1..=3 {
        for q in [2u64, 4] {
            let gf = Gf::with_order(q)?;
            let mut sizes = std::collections::BTreeMap::new();
            for m in gf.general_linear(n) {
                *sizes.entry(bruhat_cell(&gf, &m)?).or_insert(0u128) += 1;
            }
            let borel = (q as u128 - 1).pow(n as u32) * (q as u128).pow((n * (n - 1) / 2) as u32);
            eq(
                &mut f,
                &format!("cell count, n = {n}, q = {q}"),
                sizes.len(),
                (1..=n).product::<usize>(),
            );
            eq(
                &mut f,
                &format!("cell total, n = {n}, q = {q}"),
                sizes.values().sum::<u128>(),
                gl_order(n as u32, q),
            );
            for (w, size) in sizes {
                let len = PermutationBraid::new(&w)?.length() as u32;
                eq(
                    &mut f,
                    &format!("cell {w:?}, q = {q}"),
                    size,
                    borel * (q as u128).pow(len),
                );
            }
        }
    }
    Ok(f)
}

fn all_suites_json(exec: Exec, seed: u64) -> Result<String, Error> {
    let cfg = VerifyConfig {
        exec,
        seed,
        ..VerifyConfig::default()
    };
    let reports = Suite::ALL
        .iter()
        .map(|&s| run_suite(s, &cfg))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(serde_json::to_string(&reports).expect("reports serialize"))
}

fn determinism() -> Outcome {
    let mut f = Vec::new();
    let seed = 7;
    let sequential = all_suites_json(Exec::Sequential, seed)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(4)
        .build()
        .expect("thread pool");
    let first = pool.install(|| all_suites_json(Exec::Parallel, seed))?;
    let second = pool.install(|| all_suites_json(Exec::Parallel, seed))?;
    check(&mut f, sequential == first, || {
        "1 worker and 4 workers differ".to_string()
    });
    check(&mut f, first == second, || {
        "two runs with the same seed differ".to_string()
    });
    check(&mut f, !sequential.contains("\"passed\":false"), || {
        "a suite failed".to_string()
    });
    Ok(f)
}

fn main() {
    let mut r = Runner { failed: 0 };
    let s = Duration::from_secs;
    r.run(1, "ruling baselines", s(1), ruling_baselines);
    r.run(
        2,
        "rulings from the Kauffman polynomial at n = 1",
        s(30),
        rulings_from_kauffman,
    );
    r.run(3, "skein and fishtail relations", s(30), skein_properties);
    r.run(4, "BMW layer", s(120), bmw_layer);
    r.run(
        5,
        "colored rulings from L_n",
        s(120),
        colored_rulings_from_l,
    );
    r.run(
        6,
        "colored Kauffman specialization",
        s(300),
        colored_kauffman_specializes,
    );
    r.run(7, "representation numbers", s(300), representation_numbers);
    r.run(8, "per-cell representation counts", s(300), lemma_counts);
    r.run(9, "structural properties", s(120), structural);
    r.run(10, "determinism", s(900), determinism);
    if r.failed > 0 {
        println!("{} acceptance criteria failed", r.failed);
        std::process::exit(1);
    }
    println!("all acceptance criteria passed");
}
