use geom3::hyperbolic::*;
use num_complex::Complex64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rand_sl2(rng: &mut impl Rng) -> MobiusMap {
    loop {
        let e: [f64; 4] = std::array::from_fn(|_| rng.gen_range(-3.0..3.0));
        if e[0] * e[3] - e[1] * e[2] > 0.2 {
            return MobiusMap::new(e[0], e[1], e[2], e[3]).unwrap();
        }
    }
}

#[derive(Clone, Copy, Debug)]
enum Kind {
    Ell,
    Par,
    Hyp,
}

/// An element of the chosen one-parameter group, away from the identity.
fn one_param(kind: Kind, rng: &mut impl Rng) -> MobiusMap {
    let sign = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
    match kind {
        Kind::Ell => MobiusMap::rotation(rng.gen_range(0.3..(2.0 * std::f64::consts::PI - 0.3))),
        Kind::Par => MobiusMap::translation(sign * rng.gen_range(0.2..4.0)),
        Kind::Hyp => MobiusMap::diag(rng.gen_range(1.3..5.0f64).powf(sign)),
    }
}

fn tag_of(kind: Kind) -> IsometryTag {
    match kind {
        Kind::Ell => IsometryTag::Elliptic,
        Kind::Par => IsometryTag::Parabolic,
        Kind::Hyp => IsometryTag::Hyperbolic,
    }
}

const KINDS: [Kind; 3] = [Kind::Ell, Kind::Par, Kind::Hyp];

#[test]
fn class_is_conjugation_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for kind in KINDS {
        let m = one_param(kind, &mut rng);
        for _ in 0..100 {
            let g = rand_sl2(&mut rng);
            let c = m.conjugate_by(&g);
            assert_eq!(
                classify_isometry(&c).unwrap().tag,
                tag_of(kind),
                "{kind:?} conj by {g:?}"
            );
        }
    }
}

#[test]
fn commute_iff_equal_fixed_sets() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let (mut yes, mut no) = (0, 0);
    for i in 0..500 {
        let k1 = KINDS[i % 3];
        let g = rand_sl2(&mut rng);
        let m1 = one_param(k1, &mut rng).conjugate_by(&g);
        let m2 = match i % 5 {
            // same one-parameter group
            0 | 1 => one_param(k1, &mut rng).conjugate_by(&g),
            // shares ∞ with a diagonal or nilpotent partner but not the full fixed set
            2 if !matches!(k1, Kind::Ell) => {
                let other = if matches!(k1, Kind::Hyp) {
                    Kind::Par
                } else {
                    Kind::Hyp
                };
                one_param(other, &mut rng).conjugate_by(&g)
            }
            _ => one_param(KINDS[rng.gen_range(0..3)], &mut rng).conjugate_by(&rand_sl2(&mut rng)),
        };
        let r = commute_test(&m1, &m2).unwrap();
        assert_eq!(
            r.commute, r.fixed_sets_equal,
            "pair {i}: {m1:?} {m2:?} {r:?}"
        );
        if r.commute {
            yes += 1
        } else {
            no += 1
        }
    }
    assert!(
        yes >= 150 && no >= 150,
        "unbalanced sample: {yes} commuting, {no} not"
    );
}

#[test]
fn fixed_points_are_fixed() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for i in 0..300 {
        let m = one_param(KINDS[i % 3], &mut rng).conjugate_by(&rand_sl2(&mut rng));
        match classify_isometry(&m).unwrap().fixed_set {
            FixedSet::Interior([x, y]) => {
                let z = Complex64::new(x, y);
                assert!((mobius_apply(&m, z).unwrap() - z).norm() < 1e-9 * (1.0 + z.norm()));
            }
            FixedSet::Boundary(ps) => {
                for p in ps {
                    assert!(p.apply(&m).chordal(p) < 1e-9, "{m:?} moves {p:?}");
                }
            }
        }
    }
}

/// Samples SL₂(ℝ) elements of `U_ε` by picking `a, x, y` and solving for `b`.
fn sample_u_eps(eps: f64, rng: &mut impl Rng) -> [[f64; 2]; 2] {
    loop {
        let a = 1.0 + rng.gen_range(-eps..eps);
        let x = rng.gen_range(-eps..eps);
        let y = rng.gen_range(-eps..eps);
        let m = [[a, x], [y, (1.0 + x * y) / a]];
        if in_u_eps(&m, eps) {
            return m;
        }
    }
}

#[test]
fn commutators_stay_in_u_eps() {
    const C: f64 = 8.0;
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for eps in [1e-2, 1e-3] {
        for _ in 0..1000 {
            let (g, h) = (sample_u_eps(eps, &mut rng), sample_u_eps(eps, &mut rng));
            let k = sl2_commutator(&g, &h);
            let dev = [k[0][0] - 1.0, k[1][1] - 1.0, k[0][1], k[1][0]]
                .iter()
                .fold(0.0f64, |m, x| m.max(x.abs()));
            assert!(dev < C * eps * eps, "eps {eps}: deviation {dev}");
            assert!(in_u_eps(&k, eps));
        }
    }
}

#[test]
fn exp_of_generators_matches_one_parameter_groups() {
    let d = sl2_exp([[0.4, 0.0], [0.0, -0.4]]);
    let h = MobiusMap::from_matrix(d).unwrap();
    assert_eq!(classify_isometry(&h).unwrap().tag, IsometryTag::Hyperbolic);
    let r = MobiusMap::from_matrix(sl2_exp([[0.0, 0.4], [-0.4, 0.0]])).unwrap();
    assert!(commute_test(&r, &MobiusMap::rotation(1.0)).unwrap().commute);
}

proptest! {
    #[test]
    fn action_is_a_homomorphism(
        e1 in prop::array::uniform4(-3.0f64..3.0),
        e2 in prop::array::uniform4(-3.0f64..3.0),
        re in -3.0f64..3.0, im in 0.1f64..3.0,
    ) {
        let det = |e: &[f64; 4]| e[0] * e[3] - e[1] * e[2];
        prop_assume!(det(&e1) > 0.2 && det(&e2) > 0.2);
        let m1 = MobiusMap::new(e1[0], e1[1], e1[2], e1[3]).unwrap();
        let m2 = MobiusMap::new(e2[0], e2[1], e2[2], e2[3]).unwrap();
        let z = Complex64::new(re, im);
        let w = mobius_apply(&m1.compose(&m2), z).unwrap();
        let w2 = mobius_apply(&m1, mobius_apply(&m2, z).unwrap()).unwrap();
        prop_assert!(w.im > 0.0);
        prop_assert!((w - w2).norm() <= 1e-10 * (1.0 + w.norm()), "{} vs {}", w, w2);
    }

    #[test]
    fn normalization_invariants(e in prop::array::uniform4(-5.0f64..5.0)) {
        prop_assume!(e[0] * e[3] - e[1] * e[2] > 0.01);
        let m = MobiusMap::new(e[0], e[1], e[2], e[3]).unwrap();
        prop_assert!((m.a * m.d - m.b * m.c - 1.0).abs() < 1e-10);
        prop_assert!(m.trace() >= 0.0);
    }
}
