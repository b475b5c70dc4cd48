mod common;

use legendrian_core::algebra::{LaurentAZ, LaurentZ, RationalAS};
use legendrian_core::builtins::{trefoil, unknot, unknot_stab};
use legendrian_core::diagram::{framed_from_front, Cross, FEvent, FramedDiagram, LegendrianTangle};
use legendrian_core::kauffman::{
    bmw_symmetrizer, build_d, colored_kauffman, delta, kauffman, kauffman_of_front, kauffman_with,
    satellite_kauffman_eval, SkeinConfig,
};
use legendrian_core::ruling::{colored_ruling_polynomial, ruling_polynomial, TangleCombo};
use legendrian_core::verify::random_plat_front;
use legendrian_core::{Error, Exec};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A random closed Morse word with at most `max_width` strands.
fn random_framed(rng: &mut ChaCha8Rng, max_width: usize, steps: usize) -> Vec<FEvent> {
    let mut w = Vec::new();
    let mut c = 0usize;
    for _ in 0..steps {
        let roll = rng.gen_range(0..10);
        if c == 0 || (roll < 2 && c + 2 <= max_width) {
            w.push(FEvent::Cup(rng.gen_range(0..=c)));
            c += 2;
        } else if roll < 3 {
            w.push(FEvent::Cap(rng.gen_range(0..c - 1)));
            c -= 2;
        } else if c >= 2 {
            let k = if rng.gen_bool(0.5) {
                Cross::Pos
            } else {
                Cross::Neg
            };
            w.push(FEvent::Cross(rng.gen_range(0..c - 1), k));
        }
    }
    while c > 0 {
        w.push(FEvent::Cap(rng.gen_range(0..c - 1)));
        c -= 2;
    }
    w
}

fn f(events: Vec<FEvent>) -> LaurentAZ {
    kauffman(&FramedDiagram::closed(events).unwrap()).unwrap()
}

fn rz(p: &LaurentZ) -> RationalAS {
    RationalAS::from_laurent_z(p)
}

#[test]
fn normalization() {
    assert_eq!(f(vec![]), LaurentAZ::one());
    assert_eq!(f(vec![FEvent::Cup(0), FEvent::Cap(0)]), delta());
    let two = vec![
        FEvent::Cup(0),
        FEvent::Cup(2),
        FEvent::Cap(2),
        FEvent::Cap(0),
    ];
    assert_eq!(f(two), &delta() * &delta());
}

#[test]
fn kinks_contribute_a_powers() {
    let pos = vec![
        FEvent::Cup(0),
        FEvent::Cup(2),
        FEvent::Cross(1, Cross::Pos),
        FEvent::Cap(0),
        FEvent::Cap(0),
    ];
    let neg = vec![
        FEvent::Cup(0),
        FEvent::Cup(2),
        FEvent::Cross(1, Cross::Neg),
        FEvent::Cap(0),
        FEvent::Cap(0),
    ];
    let a = f(pos);
    let b = f(neg);
    assert_eq!(&a * &b, &delta() * &delta());
    assert!(
        a == &LaurentAZ::mono(1, 0, 1) * &delta() || a == &LaurentAZ::mono(-1, 0, 1) * &delta()
    );
    assert_ne!(a, b);
}

#[test]
fn builtin_values() {
    let u = kauffman_of_front(&unknot(), SkeinConfig::default()).unwrap();
    assert_eq!(u, &LaurentAZ::mono(-1, 0, 1) * &delta());
    for k in [unknot(), unknot_stab(), trefoil()] {
        let v = kauffman_of_front(&k, SkeinConfig::default()).unwrap();
        assert!(v.deg_a().unwrap() <= 0);
        let r = RationalAS::from_laurent_az(&v)
            .specialize_a_inv_zero()
            .unwrap();
        assert_eq!(r, rz(&ruling_polynomial(&k)));
    }
    let t = kauffman_of_front(&trefoil(), SkeinConfig::default()).unwrap();
    assert_eq!(t.a_coeff(0), &LaurentZ::z() + &LaurentZ::z_pow(-1).scale(2));
}

#[test]
fn engine_matches_naive_skein_on_builtins() {
    for k in [unknot(), unknot_stab(), trefoil()] {
        let d = framed_from_front(&k);
        assert_eq!(kauffman(&d).unwrap(), common::naive_kauffman(d.events()));
    }
}

#[test]
fn regular_isotopy_moves() {
    // Sliding a cup past a distant crossing.
    let a = vec![
        FEvent::Cup(0),
        FEvent::Cup(2),
        FEvent::Cross(1, Cross::Pos),
        FEvent::Cup(4),
        FEvent::Cross(1, Cross::Pos),
        FEvent::Cap(4),
        FEvent::Cap(2),
        FEvent::Cap(0),
    ];
    let mut b = a.clone();
    b.swap(2, 3);
    assert_eq!(f(a), f(b));
    // Reidemeister II.
    let r2 = vec![
        FEvent::Cup(0),
        FEvent::Cup(2),
        FEvent::Cross(1, Cross::Pos),
        FEvent::Cross(1, Cross::Neg),
        FEvent::Cap(2),
        FEvent::Cap(0),
    ];
    assert_eq!(f(r2), &delta() * &delta());
}

#[test]
fn resource_limit() {
    let d = framed_from_front(&trefoil());
    let cfg = SkeinConfig {
        node_budget: 2,
        ..SkeinConfig::default()
    };
    assert!(matches!(
        kauffman_with(&d, cfg),
        Err(Error::ResourceLimit(_))
    ));
    let open = FramedDiagram::new(2, vec![]).unwrap();
    assert!(matches!(kauffman(&open), Err(Error::Validation(_))));
}

#[test]
fn d_tangles() {
    assert_eq!(build_d(2, 1, 2).unwrap().len(), 0);
    let e = TangleCombo::single(RationalAS::one(), LegendrianTangle::hook(1, 2).unwrap());
    assert!(build_d(1, 2, 2).unwrap().same_terms(&e));
    assert!(matches!(build_d(0, 1, 2), Err(Error::BadIndices(_))));
}

#[test]
fn symmetrizers() {
    assert!(bmw_symmetrizer(1)
        .unwrap()
        .same_terms(&TangleCombo::identity(1)));
    assert!(bmw_symmetrizer(0).is_err());
    let cfg = SkeinConfig::default();
    for k in [unknot(), trefoil()] {
        let c1 = colored_kauffman(&k, 1, cfg).unwrap();
        assert_eq!(
            c1,
            RationalAS::from_laurent_az(&kauffman_of_front(&k, cfg).unwrap())
        );
    }
}

#[test]
fn colored_two_specializes_to_colored_rulings() {
    let cfg = SkeinConfig {
        exec: Exec::Parallel,
        ..SkeinConfig::default()
    };
    for k in [unknot(), trefoil()] {
        let c = colored_kauffman(&k, 2, cfg).unwrap();
        assert!(c.deg_a() <= legendrian_core::algebra::ADegree::Finite(0));
        assert_eq!(
            c.specialize_a_inv_zero().unwrap(),
            colored_ruling_polynomial(&k, 2, Exec::Parallel).unwrap()
        );
    }
}

#[test]
fn sequential_and_parallel_agree() {
    let y2 = bmw_symmetrizer(2).unwrap();
    let seq = SkeinConfig {
        exec: Exec::Sequential,
        ..SkeinConfig::default()
    };
    let par = SkeinConfig {
        exec: Exec::Parallel,
        ..SkeinConfig::default()
    };
    assert_eq!(
        satellite_kauffman_eval(&trefoil(), &y2, seq).unwrap(),
        satellite_kauffman_eval(&trefoil(), &y2, par).unwrap()
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn engine_matches_naive_skein(seed in 0u64..100_000) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let w = random_framed(&mut rng, 6, 10);
        let d = FramedDiagram::closed(w.clone()).unwrap();
        prop_assert_eq!(kauffman(&d).unwrap(), common::naive_kauffman(&w));
    }

    #[test]
    fn fronts_have_nonpositive_a_degree(seed in 0u64..100_000) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = random_plat_front(&mut rng, 3, 6);
        let v = kauffman_of_front(&k, SkeinConfig::default()).unwrap();
        prop_assert!(v.deg_a().unwrap() <= 0);
        let r = RationalAS::from_laurent_az(&v).specialize_a_inv_zero().unwrap();
        prop_assert_eq!(r, rz(&ruling_polynomial(&k)));
    }
}
