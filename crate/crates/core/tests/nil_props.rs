use geom3::algebra::QuadRat;
use geom3::nil::*;
use proptest::prelude::*;

fn scalar() -> impl Strategy<Value = QuadRat> {
    (-20i64..20, 1i64..6, -6i64..6, 1i64..4).prop_map(|(p, q, r, s)| {
        &QuadRat::frac(p, q) + &(&QuadRat::frac(r, s) * &"√3".parse::<QuadRat>().unwrap())
    })
}

fn point() -> impl Strategy<Value = HeisPoint> {
    (scalar(), scalar(), scalar()).prop_map(|(x, y, z)| HeisPoint::new(x, y, z).unwrap())
}

fn rational(num: std::ops::Range<i64>) -> impl Strategy<Value = QuadRat> {
    (num, 1i64..5).prop_map(|(p, q)| QuadRat::frac(p, q))
}

fn lattice() -> impl Strategy<Value = NilLattice> {
    (
        [rational(-6..7), rational(-6..7)],
        [rational(-6..7), rational(-6..7)],
        rational(-5..5),
        rational(-5..5),
        1u64..5,
    )
        .prop_filter_map("dependent", |(u, v, r, s, n)| {
            nil_lattice_make(u, v, r, s, n).ok()
        })
}

fn element() -> impl Strategy<Value = HeisIsometry> {
    let rot = prop_oneof![
        (0i64..4).prop_map(PlanarOrth::quarter_turn),
        (0i64..6).prop_map(PlanarOrth::sixth_turn),
        (0i64..6).prop_map(|k| PlanarOrth::reflection().compose(&PlanarOrth::sixth_turn(k))),
    ];
    (rot, point()).prop_map(|(r, p)| HeisIsometry::new(r, p).unwrap())
}

proptest! {
    #[test]
    fn group_axioms(g in point(), h in point(), k in point()) {
        let gh_k = heis_mul(&heis_mul(&g, &h).unwrap(), &k).unwrap();
        let g_hk = heis_mul(&g, &heis_mul(&h, &k).unwrap()).unwrap();
        prop_assert_eq!(gh_k, g_hk);
        prop_assert_eq!(heis_mul(&g, &HeisPoint::identity()).unwrap(), g.clone());
        prop_assert!(heis_mul(&g, &g.inv()).unwrap().is_identity());
        prop_assert!(heis_mul(&g.inv(), &g).unwrap().is_identity());
    }

    #[test]
    fn commutator_matches_products(g in point(), h in point()) {
        let direct = heis_mul(&heis_mul(&heis_mul(&g, &h).unwrap(), &g.inv()).unwrap(), &h.inv()).unwrap();
        let c = heis_commutator(&g, &h).unwrap();
        prop_assert_eq!(&direct, &c);
        prop_assert!(c.is_central());
        let conj = heis_mul(&heis_mul(&g, &h).unwrap(), &g.inv()).unwrap();
        prop_assert_eq!(heis_conjugate(&g, &h).unwrap(), conj);
    }

    #[test]
    fn centre_commutes(a in scalar(), g in point()) {
        let c = HeisPoint::central(a);
        prop_assert_eq!(heis_mul(&c, &g).unwrap(), heis_mul(&g, &c).unwrap());
    }

    #[test]
    fn isometry_composition_is_action(a in element(), b in element(), p in point()) {
        prop_assert_eq!(a.compose(&b).apply(&p), a.apply(&b.apply(&p)));
        prop_assert_eq!(a.inv().apply(&a.apply(&p)), p.clone());
        // automorphism property of the twist
        let q = HeisPoint::ints(1, -2, 3);
        prop_assert_eq!(twist(&a.rot, &heis_mul(&p, &q).unwrap()), heis_mul(&twist(&a.rot, &p), &twist(&a.rot, &q)).unwrap());
    }

    #[test]
    fn normalizer_closure(l in lattice()) {
        let nm = nil_normalizer(&l).unwrap();
        prop_assert_eq!(nm.index, l.n * l.n);
        prop_assert_eq!(nm.continuous_axis, [0, 0, 1]);
        for b in &nm.planar_basis {
            let t = HeisPoint { x: b[0].clone(), y: b[1].clone(), z: QuadRat::int(0) };
            for g in l.generators() {
                prop_assert!(l.contains(&heis_conjugate(&t, &g).unwrap()));
            }
            // the planar translations do not centralize: the continuous part is only the z-axis
            let u = HeisPoint { x: l.u[0].clone(), y: l.u[1].clone(), z: l.r.clone() };
            let v = HeisPoint { x: l.v[0].clone(), y: l.v[1].clone(), z: l.s.clone() };
            let cu = heis_commutator(&t, &u).unwrap();
            let cv = heis_commutator(&t, &v).unwrap();
            prop_assert!(!(cu.is_identity() && cv.is_identity()));
        }
        // central elements centralize everything
        for g in l.generators() {
            let c = HeisPoint::central(QuadRat::frac(3, 7));
            prop_assert_eq!(heis_mul(&c, &g).unwrap(), heis_mul(&g, &c).unwrap());
        }
    }

    #[test]
    fn point_group_closed_and_preserving(l in lattice()) {
        let g = planar_point_group(&l.u, &l.v).unwrap();
        prop_assert_eq!(g.elements.len(), g.tag.order());
        for a in &g.elements {
            prop_assert!(PlanarPointGroup::preserves(a, &l.u, &l.v));
            for b in &g.elements {
                prop_assert!(g.elements.contains(&a.compose(b)));
            }
        }
    }

    #[test]
    fn lifts_normalize(l in lattice()) {
        let g = planar_point_group(&l.u, &l.v).unwrap();
        for s in &g.elements {
            let w = nil_lift(&l, s).unwrap();
            prop_assert!(normalizes(&l, &HeisIsometry::new(s.clone(), w).unwrap()));
        }
    }
}

#[test]
fn square_p_finite_orders() {
    for p in 1..=3u64 {
        let d = nil_quotient_isometry(&NilLattice::square_p(p), None).unwrap();
        assert_eq!(d.finite_part.order, Some(8 * p * p));
    }
}
