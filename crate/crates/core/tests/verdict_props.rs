use geom3::verdict::*;
use geom3::{Geometry, GroupTag};
use proptest::prelude::*;

fn f(s: &str) -> SimpleFactor {
    s.parse().unwrap()
}

const ALL: [&str; 20] = [
    "SL(2,R)", "SL(3,R)", "SL(4,R)", "SU(2,1)", "SU(2,2)", "SL(2,C)", "SL(3,C)", "SO(2,2)",
    "SO(3,1)", "SO(3,2)", "SO(4,C)", "Sp(4,R)", "Sp(2,1)", "Sp(4,C)", "G2", "F4", "E6", "SO(3)",
    "SO(4)", "SO(5,1)",
];

fn factor() -> impl Strategy<Value = SimpleFactor> {
    prop::sample::select(ALL.to_vec()).prop_map(f)
}

/// The fixed higher-rank grid used by the acceptance run as well.
pub fn higher_rank_grid() -> Vec<Vec<SimpleFactor>> {
    [
        "SL(3,R)",
        "SL(4,R)",
        "SO(2,2)",
        "SO(2,2), SO(4)",
        "SO(3,1), SO(2,2), SO(4,C)",
        "Sp(4,R)",
        "SU(2,2)",
        "SL(3,C)",
        "SL(2,R), SL(2,R)",
        "G2",
        "SO(3,2), SO(3)",
        "SL(2,C), SL(2,R)",
    ]
    .iter()
    .map(|s| parse_factors(s).unwrap())
    .collect()
}

#[test]
fn rank_is_additive_over_factors() {
    for a in ALL {
        for b in ALL {
            let s = LatticeSpec::new(vec![f(a), f(b)], true).unwrap();
            assert_eq!(s.real_rank(), real_rank(f(a)) + real_rank(f(b)));
        }
    }
}

#[test]
fn non_so3_geometries_always_factor_through_finite() {
    let grid = higher_rank_grid();
    assert_eq!(grid.len(), 12);
    for g in Geometry::ALL
        .iter()
        .filter(|g| !matches!(g, Geometry::S3 | Geometry::S2xR))
    {
        for tag in [
            GroupTag::Trivial,
            GroupTag::S1,
            GroupTag::Torus(3),
            GroupTag::SO3xS1,
            GroupTag::SO4,
        ] {
            for factors in &grid {
                for uniform in [true, false] {
                    let spec = LatticeSpec::new(factors.clone(), uniform).unwrap();
                    let v = zimmer_verdict(
                        &ZimmerTarget {
                            geometry: *g,
                            identity_component: tag,
                        },
                        &spec,
                    )
                    .unwrap();
                    assert_eq!(v.tag, VerdictTag::FactorsThroughFinite);
                    assert!(!v.reasons.is_empty());
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn isotypic_survives_permutation_and_duplication(fs in prop::collection::vec(factor(), 1..5), k in 0usize..5) {
        let base = is_isotypic(&fs);
        let mut p = fs.clone();
        p.reverse();
        p.rotate_left(k % fs.len());
        prop_assert_eq!(is_isotypic(&p), base);
        let mut dup = fs.clone();
        dup.push(fs[k % fs.len()]);
        prop_assert_eq!(is_isotypic(&dup), base);
    }

    #[test]
    fn compact_factors_only_enable_matching_types(fs in prop::collection::vec(factor(), 1..4), c in prop::sample::select(vec!["SO(3)", "SO(4)"])) {
        let spec = LatticeSpec::new(fs.clone(), true).unwrap();
        prop_assume!(spec.real_rank() >= 2);
        let target = ZimmerTarget { geometry: Geometry::S3, identity_component: GroupTag::SO4 };
        let before = zimmer_verdict(&target, &spec).unwrap().tag;
        let mut more = fs.clone();
        more.push(f(c));
        let after = zimmer_verdict(&target, &LatticeSpec::new(more, true).unwrap()).unwrap().tag;
        if before == VerdictTag::FactorsThroughFinite && after == VerdictTag::PossibleInfiniteIsometricAction {
            // only possible if the added compact factor shares the A1 type of the rest
            prop_assert!(fs.iter().all(|x| x.complex_type().iter().all(|t| *t == ComplexType::A(1))));
        }
        if before == VerdictTag::PossibleInfiniteIsometricAction {
            prop_assert_eq!(after, VerdictTag::PossibleInfiniteIsometricAction);
        }
    }

    #[test]
    fn roundtrip_factor_strings(x in factor()) {
        prop_assert_eq!(x.to_string().parse::<SimpleFactor>().unwrap(), x);
    }

    #[test]
    fn galois_twice_is_identity_and_products_preserve(k in 0i64..3, l in 0i64..3) {
        let g = boost().clone();
        prop_assert_eq!(sigma4(&sigma4(&g)), g.clone());
        // boost powers, composed with a swap of the positive coordinates
        let mut swap = identity4();
        swap[0][0] = geom3::algebra::QuadRat::int(0);
        swap[1][1] = geom3::algebra::QuadRat::int(0);
        swap[0][1] = geom3::algebra::QuadRat::int(1);
        swap[1][0] = geom3::algebra::QuadRat::int(1);
        let pow = |m: &Mat4, n: i64| (0..n).fold(identity4(), |acc, _| mul(&acc, m));
        let h = mul(&pow(&g, k), &pow(&swap, l));
        let t = galois_twist_pair(&h).unwrap();
        prop_assert!(t.preserves_q && t.sigma_preserves_sigma_q);
    }
}

fn boost() -> &'static Mat4 {
    static B: std::sync::OnceLock<Mat4> = std::sync::OnceLock::new();
    B.get_or_init(|| {
        let (a, b) = find_form_unit(3).unwrap();
        form_boost(&a, &b)
    })
}

fn mul(a: &Mat4, b: &Mat4) -> Mat4 {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            (0..4).fold(geom3::algebra::QuadRat::int(0), |acc, k| {
                &acc + &(&a[i][k] * &b[k][j])
            })
        })
    })
}
