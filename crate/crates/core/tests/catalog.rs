use num_bigint::BigUint;
use twodist::catalog::*;
use twodist::exactnum::{rat, HexC, Q33, Q5};
use twodist::geometry::{Family, Hexagon};
use twodist::graphs::{automorphism_report, is_isomorphic, EdgeKind};
use twodist::solver::*;
use twodist::Error;

#[test]
fn pentagon_family_counts() {
    assert_eq!(g5().len(), 5);
    let g = g126();
    assert_eq!(
        (g.n(), g.graph().e1().len(), g.graph().e2().len()),
        (126, 350, 350)
    );
    let h = g16().unwrap();
    assert_eq!(h.graph(), &g16_pattern());
    // vertex 1 at the origin, vertex 16 at 5·u_0
    assert_eq!(h.point(0), g.point(g126_origin(&g)));
    assert_eq!(h.point(15), g.point(g126_extreme(&g, 0)));
}

#[test]
fn g16_proof_and_mutations() {
    let g = g16().unwrap();
    let r = replay_g16_proof(g.graph());
    assert!(r.all_pass(), "{r:#?}");
    assert_eq!(r.steps.len(), 5);
    let cases = [
        (g.graph().without_edge(0, 1), 2),
        (g.graph().with_edge(6, 7, EdgeKind::One).unwrap(), 3),
        (g.graph().without_edge(3, 10), 4),
        (g.graph().without_edge(13, 15), 5),
    ];
    for (m, step) in cases {
        let r = replay_g16_proof(&m);
        assert!(!r.step(step).unwrap().pass, "step {step} should fail");
    }
}

#[test]
fn g16_colourings() {
    let g = g16().unwrap();
    assert!(forces_mono_pair(g.graph(), 0, 15, 5, Budget::unlimited()).unwrap());
    assert!(!forces_mono_pair(g.graph(), 0, 15, 6, Budget::unlimited()).unwrap());
    let mut seen = 0;
    for_each_coloring(g.graph(), 5, false, |c| {
        assert_eq!(c[0], c[15]);
        seen += 1;
        true
    })
    .unwrap();
    assert_eq!(seen, 1440);
    assert_eq!(color_enumerate(g.graph(), 5, true).unwrap().len(), 12);
    assert!(color_enumerate(g.graph(), 4, false).unwrap().is_empty());
}

#[test]
fn g16_symmetry_orders() {
    let r = automorphism_report(g16().unwrap().graph());
    assert_eq!(r.order_color_preserving, BigUint::from(4u32));
    assert_eq!(r.order_color_permuting, BigUint::from(8u32));
    assert_eq!(r.order_uncolored, BigUint::from(48u32));
    assert_eq!(r.matching_variants(48), vec!["uncolored"]);
}

#[test]
fn spindles_are_six_chromatic() {
    let (one, d2) = pent_targets();
    for (s, cos, chord) in [
        (g31().unwrap(), Q5::new(rat(95, 100), rat(1, 100)), one),
        (g31_alt().unwrap(), Q5::new(rat(95, 100), rat(-1, 100)), d2),
    ] {
        assert_eq!(s.n(), 31);
        assert_eq!(s.cos(), &cos);
        assert_eq!(s.designed_chord_sq(), chord);
        let (a, b) = s.designed_edge();
        assert!(s.graph().is_adjacent(a, b));
        let out = color_decide(&ColoringQuery::new(s.graph(), 5), Budget::unlimited()).unwrap();
        assert_eq!(out.verdict, Verdict::NotColorable);
        assert!(matches!(
            color_decide(&ColoringQuery::new(s.graph(), 6), Budget::unlimited())
                .unwrap()
                .verdict,
            Verdict::Colorable(_)
        ));
    }
}

#[test]
fn g126_forcing_and_reduction() {
    let g = g126();
    let o = g126_origin(&g);
    for j in 0..5 {
        let e = g126_extreme(&g, j);
        let f = g126_extreme(&g, j + 1);
        assert!(forces_mono_pair(g.graph(), o, e, 5, Budget::unlimited()).unwrap());
        assert!(forces_mono_pair(g.graph(), e, f, 5, Budget::unlimited()).unwrap());
    }
    let coords: Vec<_> = g
        .points()
        .iter()
        .map(twodist::geometry::Pentagon::to_f64_xy)
        .collect();
    let e = g126_extreme(&g, 0);
    for p in [
        OrderPolicy::Periphery,
        OrderPolicy::AscendingDegree,
        OrderPolicy::Random(5),
    ] {
        let r =
            reduce_preserving(g.graph(), o, e, 5, p, Some(&coords), Budget::unlimited()).unwrap();
        let sub = g.induced(&r.kept);
        assert!(forces_mono_pair(sub.graph(), r.pair.0, r.pair.1, 5, Budget::unlimited()).unwrap());
        if p != OrderPolicy::Random(5) {
            assert_eq!(sub.n(), 16, "{p:?}");
            assert!(is_isomorphic(sub.graph(), &g16_pattern()).is_some());
        } else {
            // a random order can stop at a larger locally minimal graph
            assert_eq!(sub.n(), 93);
        }
        // no single deletion keeps the pair forced
        for w in 0..sub.n() {
            if w == r.pair.0 || w == r.pair.1 {
                continue;
            }
            let keep: Vec<usize> = (0..sub.n()).filter(|&x| x != w).collect();
            let smaller = sub.graph().induced(&keep);
            let pos = |x: usize| keep.iter().position(|&y| y == x).unwrap();
            assert!(!forces_mono_pair(
                &smaller,
                pos(r.pair.0),
                pos(r.pair.1),
                5,
                Budget::unlimited()
            )
            .unwrap());
        }
    }
}

#[test]
fn hexagon_generators() {
    assert_eq!(g7().len(), 7);
    assert_eq!(g19().len(), 19);
    assert_eq!(HexC::rho().norm_sq(), Q33::from_ints(1, 0));
    let (p, q) = hex_pair();
    assert_eq!(Hexagon::dist_sq(&p, &q), Q33::new(rat(25, 3), rat(0, 1)));
}

#[test]
fn literal_hexagon_disk_differs_from_the_stated_count() {
    let g = g313();
    assert_eq!(
        (g.n(), g.graph().e1().len(), g.graph().e2().len()),
        (361, 1668, 351)
    );
    assert!(matches!(hex_pair_indices(&g), Err(Error::MissingVertex(_))));
    assert!(matches!(
        g199(OrderPolicy::Periphery, Budget::unlimited()),
        Err(Error::MissingVertex(_))
    ));
}

#[test]
fn centroid_disk_gives_313_without_the_pair() {
    // (1 + ω)/3 = 1/2 + (√3/6)·i
    let center = HexC::new(rat(1, 2), rat(1, 6), rat(0, 1), rat(0, 1));
    let g = g313_with(&HexFilter {
        center,
        r_sq: Q33::from_ints(3, 0),
    });
    assert_eq!(
        (g.n(), g.graph().e1().len(), g.graph().e2().len()),
        (313, 1395, 280)
    );
    assert!(hex_pair_indices(&g).is_err());
}
