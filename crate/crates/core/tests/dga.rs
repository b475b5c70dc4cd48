mod common;

use legendrian_core::algebra::{Gf, Mat, QSqrt, RationalAS};
use legendrian_core::builtins::{trefoil, unknot, unknot_stab};
use legendrian_core::dga::{
    bruhat_cell, build_dga, build_dga_with, count_augmentations, count_representations,
    dga_of_front, normalize_count, total_rep_number, verify_lemma_count,
    with_clustered_base_points, Dga, Letter, RepQuery,
};
use legendrian_core::diagram::{ng_resolution, satellite, FrontDiagram, PermutationBraid};
use legendrian_core::ruling::{colored_ruling_polynomial, ruling_polynomial};
use legendrian_core::verify::random_plat_front;
use legendrian_core::{Error, Exec};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn differentials(d: &Dga) -> Vec<String> {
    (0..d.rb())
        .map(|i| {
            format!(
                "d {} = {}",
                d.name(Letter::Chord(i)),
                d.render_differential(i)
            )
        })
        .collect()
}

fn flip_t(d: &Dga) -> Dga {
    let mut out = d.clone();
    for words in &mut out.differential {
        for w in words.iter_mut() {
            for l in w.iter_mut() {
                if let Letter::T { inverse, .. } = l {
                    *inverse = !*inverse;
                }
            }
        }
    }
    out
}

fn ruling_at(k: &FrontDiagram, q: u64) -> QSqrt {
    RationalAS::from_laurent_z(&ruling_polynomial(k))
        .eval_sqrt_q(q)
        .unwrap()
}

#[test]
fn builtin_differentials() {
    assert_eq!(
        differentials(&dga_of_front(&unknot()).unwrap()),
        ["d c1 = 1 + t^-1"]
    );
    let t = dga_of_front(&trefoil()).unwrap();
    assert_eq!(
        differentials(&t),
        [
            "d a1 = 0",
            "d a2 = 0",
            "d a3 = 0",
            "d c1 = 1 + t^-1 a1 + t^-1 a1 a2 a3 + t^-1 a3",
            "d c2 = 1 + a1 + a3 + a3 a2 a1",
        ]
    );
    for k in [unknot(), unknot_stab(), trefoil()] {
        assert!(dga_of_front(&k).unwrap().d_squared_is_zero());
    }
}

#[test]
fn disk_budget_is_enforced() {
    let r = build_dga_with(&ng_resolution(&trefoil()), 1);
    assert!(r.map_err(|e| e.is_budget()).unwrap_err());
}

#[test]
fn satellites_have_square_zero_differential() {
    for k in [unknot(), unknot_stab(), trefoil()] {
        for n in 2..=3 {
            for b in PermutationBraid::all(n) {
                let s = satellite(&k, &b.to_tangle()).unwrap();
                let d = build_dga(&ng_resolution(&s.front)).unwrap();
                assert!(d.d_squared_is_zero(), "n = {n}, {}", b.render());
                assert_eq!(d.rb(), n * n * k.rb() + b.length());
            }
        }
    }
}

#[test]
fn augmentation_anchors() {
    let u = dga_of_front(&unknot()).unwrap();
    assert_eq!(count_augmentations(&u, 2, Exec::Sequential).unwrap(), 2);
    assert_eq!(count_augmentations(&u, 4, Exec::Sequential).unwrap(), 4);
    let t = dga_of_front(&trefoil()).unwrap();
    assert_eq!(count_augmentations(&t, 2, Exec::Parallel).unwrap(), 20);
    assert_eq!(count_augmentations(&t, 4, Exec::Parallel).unwrap(), 272);
    let five_over_root2 = QSqrt::from_ratio(2, 5.into()).mul(&QSqrt::sqrt_q_pow(2, -1));
    assert_eq!(normalize_count(20, 1, 2, 5, 1), five_over_root2);
    assert_eq!(
        count_augmentations(&dga_of_front(&unknot_stab()).unwrap(), 2, Exec::Sequential).unwrap(),
        0
    );
}

#[test]
fn two_dimensional_anchors() {
    let u = dga_of_front(&unknot()).unwrap();
    assert_eq!(count_representations(&u, &RepQuery::new(2, 2)).unwrap(), 16);
    assert_eq!(
        total_rep_number(&unknot(), 2, 2, Exec::Sequential).unwrap(),
        QSqrt::from_ratio(2, (2, 3).into())
    );
    let t = dga_of_front(&trefoil()).unwrap();
    assert_eq!(
        count_representations(&t, &RepQuery::new(2, 2)).unwrap(),
        78848
    );
    for k in [unknot(), trefoil()] {
        let col = colored_ruling_polynomial(&k, 2, Exec::Parallel)
            .unwrap()
            .eval_sqrt_q(2)
            .unwrap();
        assert_eq!(total_rep_number(&k, 2, 2, Exec::Parallel).unwrap(), col);
    }
}

#[test]
fn brute_force_agrees_on_small_cases() {
    let cases: [(FrontDiagram, usize, u64); 6] = [
        (unknot(), 1, 2),
        (unknot(), 1, 4),
        (unknot(), 2, 2),
        (unknot_stab(), 2, 2),
        (trefoil(), 1, 2),
        (trefoil(), 1, 4),
    ];
    for (k, n, q) in cases {
        let d = dga_of_front(&k).unwrap();
        let fast = count_representations(&d, &RepQuery::new(n, q)).unwrap();
        assert_eq!(
            fast,
            common::brute_count_representations(&d, n, q, None) as u128,
            "n = {n}, q = {q}"
        );
    }
}

#[test]
fn cell_counts_match_brute_force_and_sum_to_total() {
    let gf = Gf::with_order(2).unwrap();
    for k in [unknot(), trefoil()] {
        let kb = with_clustered_base_points(&k, 2).unwrap();
        let d = build_dga(&ng_resolution(&kb)).unwrap();
        assert_eq!(d.ell(), 2);
        let total = count_representations(&d, &RepQuery::new(2, 2)).unwrap();
        let mut sum = 0;
        for w in PermutationBraid::all(2) {
            let c = count_representations(&d, &RepQuery::new(2, 2).with_cell(w.perm().to_vec()))
                .unwrap();
            sum += c;
            if k == unknot() {
                let coset = common::double_coset(2, 2, w.perm());
                let pred = |m: &common::M| coset.contains(m);
                assert_eq!(
                    c,
                    common::brute_count_representations(&d, 2, 2, Some(&pred)) as u128
                );
                let all_in_cell = coset.iter().all(|m| {
                    let rows: Vec<&[u8]> = m.iter().map(|r| r.as_slice()).collect();
                    bruhat_cell(&gf, &Mat::from_rows(&rows)).unwrap() == w.perm()
                });
                assert!(all_in_cell);
            }
        }
        assert_eq!(sum, total);
    }
}

#[test]
fn total_number_ignores_extra_base_points() {
    let extra = [
        ("L1; B1 *; B1 x; R1", unknot()),
        ("L1; L3; B1 *; X2; B2 y; X2; X2; R1; R1", trefoil()),
        ("L1; L3; B1 *; X2; X2; X2; B1 y; B2 w; R1; R1", trefoil()),
    ];
    for (text, k) in extra {
        let f = FrontDiagram::parse(text).unwrap();
        for (n, q) in [(1, 2), (1, 4), (2, 2)] {
            assert_eq!(
                total_rep_number(&f, n, q, Exec::Parallel).unwrap(),
                total_rep_number(&k, n, q, Exec::Parallel).unwrap(),
                "{text}, n = {n}, q = {q}"
            );
        }
    }
    for ell in 1..=3 {
        let kb = with_clustered_base_points(&trefoil(), ell).unwrap();
        assert_eq!(kb.base_points().len(), ell);
        assert_eq!(
            total_rep_number(&kb, 1, 2, Exec::Sequential).unwrap(),
            ruling_at(&trefoil(), 2)
        );
    }
    assert!(matches!(
        with_clustered_base_points(&trefoil(), 0),
        Err(Error::Validation(_))
    ));
}

#[test]
fn inverting_every_base_point_preserves_counts() {
    for k in [unknot(), trefoil()] {
        let d = dga_of_front(&k).unwrap();
        let f = flip_t(&d);
        assert!(f.d_squared_is_zero());
        for (n, q) in [(1, 2), (1, 4), (2, 2)] {
            assert_eq!(
                count_representations(&d, &RepQuery::new(n, q)).unwrap(),
                count_representations(&f, &RepQuery::new(n, q)).unwrap()
            );
        }
    }
}

#[test]
fn lemma_count_cases() {
    for k in [unknot(), trefoil()] {
        for b in PermutationBraid::all(2) {
            let r = verify_lemma_count(&k, &b, 2, Exec::Parallel).unwrap();
            assert!(
                r.equal,
                "{} {}: {} vs {}",
                k.render(),
                r.beta,
                r.count,
                r.predicted
            );
            if k == unknot() && b.length() == 1 {
                assert_eq!(r.count, 0);
            }
        }
    }
}

#[test]
fn query_validation_and_budget() {
    let d = dga_of_front(&trefoil()).unwrap();
    assert!(count_representations(&d, &RepQuery::new(0, 2)).is_err());
    assert!(count_representations(&d, &RepQuery::new(1, 3)).is_err());
    assert!(count_representations(&d, &RepQuery::new(2, 2).with_cell(vec![0, 0])).is_err());
    let tiny = RepQuery {
        budget: 100,
        ..RepQuery::new(2, 2)
    };
    assert!(matches!(
        count_representations(&d, &tiny),
        Err(Error::BudgetExceeded(_))
    ));
}

#[test]
fn sequential_and_parallel_counts_agree() {
    let d = dga_of_front(&trefoil()).unwrap();
    assert_eq!(
        count_representations(&d, &RepQuery::new(2, 2).with_exec(Exec::Sequential)).unwrap(),
        count_representations(&d, &RepQuery::new(2, 2).with_exec(Exec::Parallel)).unwrap()
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn random_fronts(seed in 0u64..100_000) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = random_plat_front(&mut rng, 3, 6);
        let d = dga_of_front(&k).unwrap();
        prop_assert!(d.d_squared_is_zero());
        prop_assert_eq!(total_rep_number(&k, 1, 2, Exec::Sequential).unwrap(), ruling_at(&k, 2));
        let fast = count_representations(&d, &RepQuery::new(1, 2)).unwrap();
        prop_assert_eq!(fast, common::brute_count_representations(&d, 1, 2, None) as u128);
        prop_assert_eq!(fast, count_representations(&flip_t(&d), &RepQuery::new(1, 2)).unwrap());
    }
}
