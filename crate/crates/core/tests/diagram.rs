use legendrian_core::builtins::{resolve_front, trefoil, unknot, unknot_stab, BUILTINS};
use legendrian_core::diagram::{
    framed_from_front, framed_from_tangle, ng_resolution, satellite, Cross, Event, FEvent,
    FrontDiagram, LegendrianTangle, PermutationBraid,
};
use legendrian_core::verify::random_plat_front;
use legendrian_core::Error;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn parse_examples() {
    let u = FrontDiagram::parse("L1; R1").unwrap();
    assert_eq!((u.right_cusps(), u.crossings()), (1, 0));
    let t = FrontDiagram::parse("L1; L3; X2; X2; X2; R1; R1").unwrap();
    assert_eq!((t.right_cusps(), t.crossings()), (2, 3));
    assert!(t.is_plat());
    assert!(matches!(
        FrontDiagram::parse("L1; R2"),
        Err(Error::Validation(_))
    ));
    assert!(matches!(
        FrontDiagram::parse("L1; L3"),
        Err(Error::Validation(_))
    ));
    match FrontDiagram::parse("L1\nQ 1\nR1") {
        Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
        other => panic!("expected a parse error, got {other:?}"),
    }
}

#[test]
fn newline_and_semicolon_forms_agree() {
    let a = FrontDiagram::parse("L1; L3; B1 *; X2; X2; X2; R1; R1").unwrap();
    let b = FrontDiagram::parse("L 1\nL 3\nB 1 *\nX 2\nX 2\nX 2\nR 1\nR 1\n").unwrap();
    assert_eq!(a, b);
}

#[test]
fn builtins_resolve_and_round_trip() {
    for (name, _) in BUILTINS {
        let f = resolve_front(name).unwrap();
        assert_eq!(FrontDiagram::parse(&f.render()).unwrap(), f);
        assert!(f.is_plat());
    }
    assert_eq!(resolve_front("L1; R1").unwrap().rb(), 1);
}

#[test]
fn thurston_bennequin_numbers() {
    assert_eq!(unknot().tb(), -1);
    assert_eq!(trefoil().tb(), 1);
    assert_eq!(unknot_stab().tb(), -2);
}

#[test]
fn permutation_braids() {
    let id = PermutationBraid::parse("123").unwrap();
    assert_eq!((id.word().len(), id.length()), (0, 0));
    let s = PermutationBraid::parse("21").unwrap();
    assert_eq!(s.word(), &[0]);
    let cyc = PermutationBraid::parse("2,3,1").unwrap();
    assert_eq!(cyc.length(), 2);
    assert_eq!(PermutationBraid::parse("312").unwrap().length(), 2);
    assert_eq!(PermutationBraid::parse("321").unwrap().length(), 3);
    assert!(PermutationBraid::parse("22").is_err());
    assert!(PermutationBraid::parse("02").is_err());
    for n in 1..=4 {
        let all = PermutationBraid::all(n);
        assert_eq!(all.len(), (1..=n).product::<usize>());
        for b in all {
            let inversions = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| b.perm()[i] > b.perm()[j])
                .count();
            assert_eq!(b.length(), inversions);
        }
    }
}

#[test]
fn tangle_products() {
    let s = LegendrianTangle::sigma(1, 2).unwrap();
    let id = LegendrianTangle::identity(2);
    assert_eq!(id.multiply(&s).unwrap(), s);
    assert_eq!(s.multiply(&id).unwrap(), s);
    assert_eq!(s.multiply(&s).unwrap().crossings(), 2);
    let e = LegendrianTangle::hook(1, 2).unwrap();
    // β is stacked to the left, so its events come first.
    let se = s.multiply(&e).unwrap();
    assert_eq!(se.events()[0], e.events()[0]);
    let x = LegendrianTangle::sigma(2, 3).unwrap();
    let y = LegendrianTangle::hook(1, 3).unwrap();
    let w = LegendrianTangle::sigma(1, 3).unwrap();
    assert_eq!(
        x.multiply(&y).unwrap().multiply(&w).unwrap(),
        x.multiply(&y.multiply(&w).unwrap()).unwrap()
    );
    assert!(matches!(
        s.multiply(&LegendrianTangle::identity(3)),
        Err(Error::ArityMismatch { .. })
    ));
}

#[test]
fn satellite_examples() {
    let s1 = satellite(&unknot(), &LegendrianTangle::identity(1)).unwrap();
    let plain: Vec<Event> = unknot()
        .events()
        .iter()
        .filter(|e| !matches!(e, Event::BasePoint(..)))
        .cloned()
        .collect();
    assert_eq!(s1.front.events(), plain.as_slice());

    let s2 = satellite(&unknot(), &LegendrianTangle::identity(2)).unwrap();
    assert_eq!((s2.front.crossings(), s2.front.right_cusps()), (2, 2));
    assert_eq!(ng_resolution(&s2.front).rb(), 4);

    let st = satellite(&trefoil(), &LegendrianTangle::sigma(1, 2).unwrap()).unwrap();
    assert_eq!((st.front.crossings(), st.front.right_cusps()), (17, 4));
    assert_eq!(ng_resolution(&st.front).rb(), 21);
}

#[test]
fn satellite_inventory_on_builtins() {
    for (name, _) in BUILTINS {
        let k = resolve_front(name).unwrap();
        for n in 1..=3 {
            for b in PermutationBraid::all(n) {
                let s = satellite(&k, &b.to_tangle()).unwrap();
                let rb = ng_resolution(&s.front).rb();
                assert_eq!(rb, n * n * k.rb() + b.length(), "{name}, {}", b.render());
                assert_eq!(
                    s.front.crossings(),
                    n * n * k.crossings() + n * (n - 1) * k.right_cusps() + b.length()
                );
                assert_eq!(
                    s.front.tb(),
                    (n * n) as i64 * k.tb() + b.length() as i64,
                    "{name}, {}",
                    b.render()
                );
            }
        }
    }
}

#[test]
fn satellite_needs_plat_and_base_point() {
    let not_plat = FrontDiagram::parse("L1; B1 *; R1; L1; R1").unwrap();
    assert!(matches!(
        satellite(&not_plat, &LegendrianTangle::identity(2)),
        Err(Error::NotPlat)
    ));
    let bare = FrontDiagram::parse("L1; R1").unwrap();
    assert!(matches!(
        satellite(&bare, &LegendrianTangle::identity(2)),
        Err(Error::NoInsertionPoint(_))
    ));
}

#[test]
fn ng_resolution_chord_counts() {
    assert_eq!(ng_resolution(&unknot()).rb(), 1);
    assert_eq!(ng_resolution(&trefoil()).rb(), 5);
}

#[test]
fn framed_conversion() {
    assert_eq!(framed_from_front(&unknot()).writhe(), -1);
    assert_eq!(framed_from_front(&trefoil()).writhe(), 1);
    let fe = framed_from_tangle(&LegendrianTangle::hook(1, 2).unwrap());
    let kinks = fe
        .events()
        .iter()
        .filter(|e| matches!(e, FEvent::Cross(_, Cross::Pos)))
        .count();
    assert_eq!(kinks, 1);
    assert_eq!(
        fe.events()
            .iter()
            .filter(|e| matches!(e, FEvent::Cap(_)))
            .count(),
        1
    );
    assert_eq!(
        fe.events()
            .iter()
            .filter(|e| matches!(e, FEvent::Cup(_)))
            .count(),
        1
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_fronts_round_trip_and_count(seed in 0u64..10_000) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = random_plat_front(&mut rng, 3, 8);
        prop_assert_eq!(FrontDiagram::parse(&k.render()).unwrap(), k.clone());
        prop_assert_eq!(ng_resolution(&k).rb(), k.crossings() + k.right_cusps());
        prop_assert!(ng_resolution(&k).map.euler_consistent());
    }
}
