use geom3::algebra::smith_general;
use geom3::euclid::*;
use geom3::fibered::s2r::{mat3_identity, Mat3};
use geom3::fibered::{s2r_decompose, s2r_quotient_identity_component, S2RIsometry};
use geom3::spherical::spherical_components_lookup;
use geom3::GroupTag;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn perms(n: usize) -> Vec<Vec<usize>> {
    if n == 1 {
        return vec![vec![0]];
    }
    let mut out = vec![];
    for p in perms(n - 1) {
        for k in 0..n {
            let mut q = p.clone();
            q.insert(k, n - 1);
            out.push(q);
        }
    }
    out
}

fn signed_perms(n: usize) -> Vec<RatMat> {
    let mut out = vec![];
    for p in perms(n) {
        for s in 0..(1 << n) {
            let signs: Vec<i64> = (0..n)
                .map(|i| if s >> i & 1 == 1 { -1 } else { 1 })
                .collect();
            out.push(signed_permutation(&p, &signs));
        }
    }
    out
}

/// Rank of Γ^ab: integer cokernel of `[σ₁ − I | σ₂ − I | …]` acting on ℤᵈ.
fn abelianization_rank(dim: usize, gens: &[RatMat]) -> usize {
    if gens.is_empty() {
        return dim;
    }
    let rows: Vec<Vec<BigInt>> = (0..dim)
        .map(|i| {
            gens.iter()
                .flat_map(|g| {
                    (0..dim).map(move |j| g[i][j].to_integer() - BigInt::from((i == j) as i64))
                })
                .collect()
        })
        .collect();
    smith_general(&rows, dim * gens.len()).cokernel_rank()
}

#[test]
fn betti_matches_abelianization_oracle() {
    let mut checked = 0;
    for dim in [2usize, 3] {
        let all = signed_perms(dim);
        // every single generator and every pair (a sampled stride for d = 3)
        let stride = if dim == 2 { 1 } else { 7 };
        let mut gen_sets: Vec<Vec<RatMat>> = all.iter().map(|g| vec![g.clone()]).collect();
        for (i, a) in all.iter().enumerate().step_by(stride) {
            for b in all.iter().skip(i).step_by(stride) {
                gen_sets.push(vec![a.clone(), b.clone()]);
            }
        }
        for gens in gen_sets {
            let g = CrystalGroup::standard(dim, gens.clone()).unwrap();
            let (b, tag) = betti_identity_component(&g).unwrap();
            assert_eq!(b, abelianization_rank(dim, &gens), "{gens:?}");
            assert_eq!(tag, GroupTag::torus(b as u32));
            checked += 1;
        }
    }
    assert!(checked >= 20);
}

#[test]
fn planar_subgroups_of_d4() {
    // (generators, betti, finite order), by hand: order = |⊕ℤ/dᵢ| · |N_D4(P)/P|
    let r = signed_permutation(&[1, 0], &[1, -1]);
    let r2 = signed_permutation(&[0, 1], &[-1, -1]);
    let f = signed_permutation(&[0, 1], &[1, -1]);
    let diag = signed_permutation(&[1, 0], &[1, 1]);
    let cases: Vec<(Vec<RatMat>, usize, u64)> = vec![
        (vec![], 2, 8),
        (vec![r2.clone()], 0, 16),
        (vec![r.clone()], 0, 4),
        (vec![f.clone()], 1, 4),
        (vec![diag.clone()], 1, 2),
        (vec![r2.clone(), f.clone()], 0, 8),
        (vec![r.clone(), f.clone()], 0, 2),
    ];
    for (gens, b, order) in cases {
        let g = CrystalGroup::standard(2, gens.clone()).unwrap();
        let d = euclid_quotient_isometry(&g).unwrap();
        assert_eq!(d.identity_component, GroupTag::torus(b as u32), "{gens:?}");
        assert_eq!(d.finite_part.order, Some(order), "{gens:?}");
    }
}

fn int_mat(m: [[i64; 3]; 3]) -> Vec<Vec<BigRational>> {
    m.iter()
        .map(|r| {
            r.iter()
                .map(|&x| BigRational::from_integer(x.into()))
                .collect()
        })
        .collect()
}

proptest! {
    #[test]
    fn translation_rank_is_basis_invariant(
        k in 1usize..=3,
        a in -3i64..=3, b in -3i64..=3, c in -3i64..=3,
        swap in 0usize..3,
    ) {
        // unimodular: a product of elementary shears and a permutation
        let shear = int_mat([[1, a, b], [0, 1, c], [0, 0, 1]]);
        let basis: Vec<Vec<i64>> = (0..k).map(|i| (0..3).map(|j| (i == j) as i64 * (i as i64 + 2)).collect()).collect();
        let g = CrystalGroup::from_int(3, &[], &basis).unwrap();
        let mut moved: Vec<RatVec> = (0..k)
            .map(|i| (0..3).map(|j| (0..k).map(|l| &shear[i][l] * &g.lattice[l][j]).sum()).collect())
            .collect();
        moved.rotate_left(swap % k);
        let h = CrystalGroup::new(3, vec![], moved, None).unwrap();
        prop_assert_eq!(translation_rank(&g), translation_rank(&h));
        prop_assert_eq!(translation_rank(&h), k);
    }
}

#[test]
fn s2xr_table_agrees_with_decomposition() {
    let minus: Mat3 = mat3_identity().map(|r| r.map(|x| -x));
    let id = mat3_identity();
    let iso = |m: Mat3, s: f64, f: i8| S2RIsometry::new(m, s, f).unwrap();
    let models: Vec<(&str, Vec<S2RIsometry>)> = vec![
        ("S2xS1", vec![iso(id, 1.0, 1)]),
        (
            "S2 bundle over S1, non-orientable",
            vec![iso(minus, 1.0, 1)],
        ),
        ("RP2xS1", vec![iso(minus, 0.0, 1), iso(id, 1.0, 1)]),
        ("RP3#RP3", vec![iso(minus, 0.0, -1), iso(minus, 1.0, -1)]),
    ];
    let rows = spherical_components_lookup("s2xr-manifolds").unwrap();
    assert_eq!(rows.len(), 4);
    for (name, gens) in models {
        let row = rows
            .iter()
            .find(|r| r.component_data["manifold"] == name)
            .unwrap();
        let computed = s2r_quotient_identity_component(&s2r_decompose(&gens).unwrap()).unwrap();
        assert_eq!(row.identity_component, Some(computed), "{name}");
    }
}
