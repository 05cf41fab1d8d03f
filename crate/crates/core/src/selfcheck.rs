//! Embedded golden suite over the worked examples, with fault injection for negative controls.

use num_bigint::BigInt;
use num_complex::Complex64;
use serde::Serialize;

use crate::algebra::{galois_conjugate, smith_normal_form, IntMat2, QuadRat, SnfResult};
use crate::error::Result;
use crate::euclid::{
    betti_identity_component, euclid_quotient_isometry, euclid_volume_verdict, signed_permutation,
    translation_rank, CrystalGroup,
};
use crate::fibered::{
    axis_rotation, christoffel_h2, frame_at_identity, hv_decompose, psl2_quotient_isometry,
    s2r_decompose, sasaki_inner, sasaki_norm, sl2_basis, unit_tangent_embed, FiberedQuotient,
    LType, S2RIsometry, TangentVector,
};
use crate::hyperbolic::{
    centralizer_type, classify_isometry, hn_quotient_isometry_verdict, sl2_exp,
    surface_circle_action_possible, BoundaryPoint, CentralizerType, FixedSet, IsometryTag,
    MobiusMap,
};
use crate::iso::{Geometry, GroupTag};
use crate::nil::{
    heis_commutator, heis_conjugate, nil_center_intersection, nil_lattice_make,
    nil_lift_point_group, nil_normalizer, nil_projection_dichotomy, nil_quotient_isometry,
    nil_volume_verdict, planar_point_group, Dichotomy, HeisIsometry, HeisPoint, NilLattice,
    PlanarOrth, VolumeVerdict, DEFAULT_WORD_BOUND,
};
use crate::sol::{
    sol_centralizer, sol_lattice_make, sol_mul, sol_normalizer_lattice, sol_quotient_isometry_with,
    SolLattice, SolPoint,
};
use crate::spherical::{lookup_in, parse_table, LOOKUP_JSON};
use crate::verdict::{
    aspherical_check, complex_type, is_isotypic, max_isometry_dim, parse_factors,
    quotient_isometry_summary, real_rank, zimmer_verdict, LatticeSpec, QuotientInput, SimpleFactor,
    VerdictTag, ZimmerTarget,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckItem {
    pub id: String,
    pub module: &'static str,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SelfcheckReport {
    pub items: Vec<CheckItem>,
    pub passed: usize,
    pub failed: usize,
}

/// Faults injected into the suite's inputs.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Faults {
    /// Feed the lookup checks a damaged copy of the embedded table.
    pub corrupt_lookup: bool,
    /// Replace the Smith-form routine with one that is off by one.
    pub bad_snf: bool,
}

pub fn selfcheck() -> SelfcheckReport {
    selfcheck_with(Faults::default())
}

struct Suite {
    items: Vec<CheckItem>,
}

impl Suite {
    /// Records `observed == expected`; an error counts as a failure.
    fn eq(
        &mut self,
        id: &str,
        module: &'static str,
        expected: &str,
        observed: impl FnOnce() -> Result<String>,
    ) {
        let (pass, detail) = match observed() {
            Ok(o) if o == expected => (true, o),
            Ok(o) => (false, format!("expected {expected}, got {o}")),
            Err(e) => (false, format!("error: {e}")),
        };
        self.items.push(CheckItem {
            id: id.into(),
            module,
            pass,
            detail,
        });
    }

    fn holds(&mut self, id: &str, module: &'static str, f: impl FnOnce() -> Result<bool>) {
        self.eq(id, module, "true", || f().map(|b| b.to_string()));
    }
}

fn q(s: &str) -> QuadRat {
    s.parse().expect("literal parses")
}

fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() < tol
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn cat(n: u64) -> Result<SolLattice> {
    sol_lattice_make(&IntMat2::from_i64(2, 1, 1, 1), n)
}

fn spec(factors: &str, uniform: bool) -> Result<LatticeSpec> {
    LatticeSpec::new(parse_factors(factors)?, uniform)
}

pub fn selfcheck_with(faults: Faults) -> SelfcheckReport {
    let snf = move |m: &IntMat2| -> SnfResult {
        let mut s = smith_normal_form(m);
        if faults.bad_snf {
            s.d2 += 1;
        }
        s
    };
    let table_text = if faults.corrupt_lookup {
        LOOKUP_JSON.replacen("\"version\": 1", "\"version\": 7", 1)
    } else {
        LOOKUP_JSON.to_string()
    };
    let lookup = |family: &str| -> Result<Vec<String>> {
        let t = parse_table(&table_text)?;
        Ok(lookup_in(&t, family)?
            .into_iter()
            .map(|r| match r.identity_component {
                Some(tag) => tag.name(),
                None => r.component_data["group"]
                    .as_str()
                    .unwrap_or("?")
                    .to_string(),
            })
            .collect())
    };

    let mut s = Suite { items: Vec::new() };

    // core-algebra
    s.eq("galois-conjugate", "core-algebra", "3 - √2", || {
        Ok(galois_conjugate(&q("3+√2")).to_string())
    });
    s.eq("snf-lambda5", "core-algebra", "diag(11,11)", || {
        let r = snf(&IntMat2::from_i64(-88, -55, -55, -33));
        Ok(format!("diag({},{})", r.d1, r.d2))
    });

    // nil
    s.eq("heis-commutator", "nil", "(0, 0, 1)", || {
        Ok(heis_commutator(&HeisPoint::ints(1, 0, 0), &HeisPoint::ints(0, 1, 0))?.to_string())
    });
    s.holds("heis-conjugation", "nil", || {
        let (g, t) = (HeisPoint::ints(2, 3, 5), HeisPoint::ints(7, 11, 13));
        Ok(heis_conjugate(&g, &t)? == HeisPoint::ints(7, 11, 13 + 2 * 11 - 3 * 7))
    });
    s.holds("lattice-square", "nil", || {
        let l = nil_lattice_make([q("1"), q("0")], [q("0"), q("1")], q("0"), q("0"), 1)?;
        Ok(l == NilLattice::square()
            && [(1, 0, 0), (0, 1, 0), (0, 0, 1), (3, -2, 7)]
                .iter()
                .all(|&(x, y, z)| l.contains(&HeisPoint::ints(x, y, z)))
            && !l.contains(&HeisPoint::central(q("1/2"))))
    });
    for p in 1..=3u64 {
        s.holds(&format!("lattice-square-p{p}"), "nil", || {
            let l = nil_lattice_make([q("1"), q("0")], [q("0"), q("1")], q("0"), q("0"), p)?;
            Ok(l == NilLattice::square_p(p)
                && l.contains(&HeisPoint::central(QuadRat::frac(1, p as i64))))
        });
    }
    s.eq("center-square", "nil", "1", || {
        Ok(nil_center_intersection(&NilLattice::square()).to_string())
    });
    s.eq("center-square-p3", "nil", "1/3", || {
        Ok(nil_center_intersection(&NilLattice::square_p(3)).to_string())
    });
    s.holds("center-hexagonal-p2", "nil", || {
        Ok(nil_center_intersection(&NilLattice::hexagonal_p(2)) == q("(1/4)√3"))
    });
    s.holds("normalizer-square", "nil", || {
        let n = nil_normalizer(&NilLattice::square())?;
        Ok(n.planar_basis == [[q("1"), q("0")], [q("0"), q("1")]]
            && n.index == 1
            && n.continuous_axis == [0, 0, 1])
    });
    s.holds("normalizer-square-p3", "nil", || {
        let n = nil_normalizer(&NilLattice::square_p(3))?;
        Ok(n.planar_basis == [[q("1/3"), q("0")], [q("0"), q("1/3")]] && n.index == 9)
    });
    s.holds("normalizer-general", "nil", || {
        let l = nil_lattice_make(
            [q("1"), q("0")],
            [q("1/3"), q("7/5")],
            q("1/2"),
            q("2/7"),
            2,
        )?;
        let n = nil_normalizer(&l)?;
        Ok(
            n.planar_basis == [[q("1/2"), q("0")], [q("1/6"), q("7/10")]]
                && n.continuous_axis == [0, 0, 1],
        )
    });
    s.eq("point-group-square", "nil", "D4", || {
        Ok(planar_point_group(&[q("1"), q("0")], &[q("0"), q("1")])?
            .tag
            .name()
            .to_string())
    });
    s.eq("point-group-hexagonal", "nil", "D6", || {
        Ok(
            planar_point_group(&[q("1"), q("0")], &[q("1/2"), q("(1/2)√3")])?
                .tag
                .name()
                .to_string(),
        )
    });
    s.eq("iso-square", "nil", "S1 | S1 ⋊ D4 | 8", || {
        let d = nil_quotient_isometry(&NilLattice::square(), None)?;
        Ok(format!(
            "{} | {} | {}",
            d.identity_component.name(),
            d.structure,
            d.finite_part.order.unwrap_or(0)
        ))
    });
    s.eq("iso-square-with-d4", "nil", "Z2 | 2", || {
        let l = NilLattice::square();
        let extra =
            nil_lift_point_group(&l, &[PlanarOrth::quarter_turn(1), PlanarOrth::reflection()])?;
        let d = nil_quotient_isometry(&l, Some(&extra))?;
        Ok(format!(
            "{} | {}",
            d.finite_part.label,
            d.finite_part.order.unwrap_or(0)
        ))
    });
    for p in 1..=3u64 {
        let label = if p == 1 {
            "D4".to_string()
        } else {
            format!("(Z{p} × Z{p}) ⋊ D4")
        };
        s.eq(
            &format!("iso-square-p{p}"),
            "nil",
            &format!("S1 | {label} | {}", 8 * p * p),
            || {
                let d = nil_quotient_isometry(&NilLattice::square_p(p), None)?;
                Ok(format!(
                    "{} | {} | {}",
                    d.identity_component.name(),
                    d.finite_part.label,
                    d.finite_part.order.unwrap_or(0)
                ))
            },
        );
    }
    for p in 1..=2u64 {
        let label = if p == 1 {
            "D6".to_string()
        } else {
            format!("(Z{p} × Z{p}) ⋊ D6")
        };
        s.eq(
            &format!("iso-hexagonal-p{p}"),
            "nil",
            &format!("S1 | {label} | {}", 12 * p * p),
            || {
                let d = nil_quotient_isometry(&NilLattice::hexagonal_p(p), None)?;
                Ok(format!(
                    "{} | {} | {}",
                    d.identity_component.name(),
                    d.finite_part.label,
                    d.finite_part.order.unwrap_or(0)
                ))
            },
        );
    }
    s.holds("dichotomy-screw-line", "nil", || {
        let tr = |x: &str| {
            HeisIsometry::translation(HeisPoint::new(q(x), q("0"), q("1")).expect("same field"))
        };
        let g = [
            tr("1"),
            tr("1/3"),
            HeisIsometry::rotation(PlanarOrth::quarter_turn(2)),
        ];
        Ok(nil_projection_dichotomy(&g, DEFAULT_WORD_BOUND)?
            == Dichotomy::AbelianFixesLine {
                point: ["0".into(), "0".into()],
                direction: ["1".into(), "0".into()],
            })
    });
    s.holds("volume-line", "nil", || {
        let d = Dichotomy::AbelianFixesLine {
            point: ["0".into(), "0".into()],
            direction: ["1".into(), "0".into()],
        };
        Ok(nil_volume_verdict(&d)? == VolumeVerdict::InfiniteVolume)
    });
    s.holds("volume-point", "nil", || {
        let g = HeisIsometry::new(PlanarOrth::quarter_turn(1), HeisPoint::central(q("1/3")))?;
        let d = nil_projection_dichotomy(&[g], DEFAULT_WORD_BOUND)?;
        Ok(matches!(d, Dichotomy::AbelianFixesPoint { .. })
            && nil_volume_verdict(&d)? == VolumeVerdict::InfiniteVolume)
    });
    s.holds("volume-discrete", "nil", || {
        let g: Vec<HeisIsometry> = NilLattice::square()
            .generators()
            .into_iter()
            .map(HeisIsometry::translation)
            .collect();
        let d = nil_projection_dichotomy(&g, DEFAULT_WORD_BOUND)?;
        Ok(matches!(d, Dichotomy::DiscreteProjection { .. })
            && nil_volume_verdict(&d)? == VolumeVerdict::FiniteVolumePossible)
    });

    // sol
    s.holds("sol-conjugation", "sol", || {
        let (t, u, v) = (0.7f64, 1.5, -2.0);
        let g = SolPoint::float(0.0, 0.0, t);
        let r = sol_mul(&sol_mul(&g, &SolPoint::float(u, v, 0.0))?, &g.inv())?;
        let SolPoint::Float { x, y, t: k } = r else {
            return Ok(false);
        };
        Ok(
            (x - t.exp() * u).abs() < 1e-12
                && (y - (-t).exp() * v).abs() < 1e-12
                && k.abs() < 1e-15,
        )
    });
    s.holds("sol-lattice", "sol", || {
        Ok(cat(1)?.a == IntMat2::from_i64(2, 1, 1, 1))
    });
    s.holds("normalizer-n1", "sol", || {
        Ok(sol_normalizer_lattice(&cat(1)?)?.is_scaled_integer_lattice(1))
    });
    s.holds("normalizer-n2", "sol", || {
        let n = sol_normalizer_lattice(&cat(2)?)?;
        let fifth = num_rational::BigRational::new(1.into(), 5.into());
        let inside = (0..2).all(|j| n.basis.column(j).iter().all(|x| (x / &fifth).is_integer()));
        // [Λ₂ : ℤ²] = 5 and [(1/5)ℤ² : Λ₂] = 25/5 = 5
        Ok(n.index == BigInt::from(5)
            && inside
            && !n.is_scaled_integer_lattice(1)
            && !n.is_scaled_integer_lattice(5))
    });
    s.holds("normalizer-n5", "sol", || {
        Ok(sol_normalizer_lattice(&cat(5)?)?.is_scaled_integer_lattice(11))
    });
    for (n, want) in [
        (1, "trivial | 1"),
        (2, "Z5 ⋊ Z2 | 10"),
        (5, "(Z11 × Z11) ⋊ Z5 | 605"),
    ] {
        s.eq(&format!("iso-n{n}"), "sol", want, || {
            let g = sol_quotient_isometry_with(&cat(n)?, snf)?;
            Ok(format!("{} | {}", g.label, g.finite.order))
        });
    }
    for n in [1, 2, 5] {
        s.holds(&format!("centralizer-n{n}"), "sol", || {
            Ok(sol_centralizer(&cat(n)?)?.trivial)
        });
    }

    // hyperbolic
    s.holds("classify-diagonal", "hyperbolic", || {
        let k = classify_isometry(&MobiusMap::diag(0.8f64.exp()))?;
        Ok(k.tag == IsometryTag::Hyperbolic
            && k.fixed_set.approx_eq(
                &FixedSet::Boundary(vec![BoundaryPoint::Real(0.0), BoundaryPoint::Infinity]),
                1e-12,
            ))
    });
    s.holds("classify-parabolic", "hyperbolic", || {
        let k = classify_isometry(&MobiusMap::translation(2.5))?;
        Ok(k.tag == IsometryTag::Parabolic
            && k.fixed_set
                .approx_eq(&FixedSet::Boundary(vec![BoundaryPoint::Infinity]), 1e-12))
    });
    s.holds("classify-elliptic", "hyperbolic", || {
        let k = classify_isometry(&MobiusMap::rotation(std::f64::consts::FRAC_PI_4))?;
        Ok(k.tag == IsometryTag::Elliptic
            && k.fixed_set
                .approx_eq(&FixedSet::Interior([0.0, 1.0]), 1e-12))
    });
    s.holds("centralizer-elliptic", "hyperbolic", || {
        Ok(centralizer_type(&MobiusMap::rotation(0.9))?.0 == CentralizerType::Circle)
    });
    s.holds("centralizer-parabolic", "hyperbolic", || {
        Ok(centralizer_type(&MobiusMap::translation(1.0))?.0 == CentralizerType::RealLine)
    });
    s.holds("centralizer-hyperbolic", "hyperbolic", || {
        Ok(centralizer_type(&MobiusMap::diag(3.0))?.0 == CentralizerType::RealLine)
    });
    s.eq("hn-dim3", "hyperbolic", "FiniteIsometryGroup", || {
        Ok(hn_quotient_isometry_verdict(3)?.tag.into())
    });
    s.eq("hn-dim2", "hyperbolic", "FiniteIsometryGroup", || {
        Ok(hn_quotient_isometry_verdict(2)?.tag.into())
    });
    s.holds("surface-circle-action", "hyperbolic", || {
        Ok(!surface_circle_action_possible(2) && !surface_circle_action_possible(5))
    });

    // fibered
    s.holds("christoffel-at-i", "fibered", || {
        Ok(christoffel_h2(Complex64::i(), 1, 2, 1)? == -1.0)
    });
    s.holds("sasaki-vertical-norm", "fibered", || {
        Ok(
            (sasaki_norm(&TangentVector::at_identity(c(0.0, 0.0), c(0.0, 2.0))) - 2.0).abs()
                < 1e-12,
        )
    });
    s.holds("sasaki-horizontal-pair", "fibered", || {
        let a = TangentVector::at_identity(c(0.0, 2.0), c(2.0, 0.0));
        let b = TangentVector::at_identity(c(2.0, 0.0), c(0.0, -2.0));
        Ok(
            sasaki_inner(&a, &b)?.abs() < 1e-12
                && (sasaki_norm(&a) - sasaki_norm(&b)).abs() < 1e-12,
        )
    });
    s.holds("split-horizontal", "fibered", || {
        let (_, v) = hv_decompose(&TangentVector::at_identity(c(0.0, 2.0), c(2.0, 0.0)));
        Ok(v.x.norm() < 1e-12 && v.zv.norm() < 1e-12)
    });
    s.holds("split-vertical", "fibered", || {
        let (h, _) = hv_decompose(&TangentVector::at_identity(c(0.0, 0.0), c(0.0, 2.0)));
        Ok(h.x.norm() < 1e-12 && h.zv.norm() < 1e-12)
    });
    s.holds("embed-identity", "fibered", || {
        let (z, w) = unit_tangent_embed(&MobiusMap::identity());
        Ok(close(z, Complex64::i(), 1e-15) && close(w, c(1.0, 0.0), 1e-15))
    });
    let basis = sl2_basis();
    let scaled = |m: [[f64; 2]; 2], t: f64| m.map(|r| r.map(|x| x * t));
    s.holds("embed-x1-orbit", "fibered", || {
        let t = 0.3f64;
        let (z, w) = unit_tangent_embed(&MobiusMap::from_matrix(sl2_exp(scaled(basis[0], t)))?);
        Ok(close(z, c(0.0, (2.0 * t).exp()), 1e-12) && close(w, c((2.0 * t).exp(), 0.0), 1e-12))
    });
    s.holds("embed-x2-orbit", "fibered", || {
        let t = 0.3f64;
        let (z, w) = unit_tangent_embed(&MobiusMap::from_matrix(sl2_exp(scaled(basis[1], t)))?);
        Ok(close(z, Complex64::i(), 1e-12) && close(w, Complex64::from_polar(1.0, 2.0 * t), 1e-12))
    });
    for (j, (x, zv)) in [
        (c(0.0, 2.0), c(2.0, 0.0)),
        (c(0.0, 0.0), c(0.0, 2.0)),
        (c(2.0, 0.0), c(0.0, -2.0)),
    ]
    .into_iter()
    .enumerate()
    {
        s.holds(&format!("frame-x{}", j + 1), "fibered", || {
            let f = frame_at_identity()?[j];
            Ok(close(f.x, x, 1e-5) && close(f.zv, zv, 1e-5))
        });
    }
    s.holds("s2r-irrational-rotation", "fibered", || {
        let g = S2RIsometry::new(axis_rotation([0.0, 0.0, 1.0], 2f64.sqrt()), 1.0, 1)?;
        let d = s2r_decompose(&[g])?;
        Ok(d.f_order_bound == 1
            && matches!(d.l_type, LType::LambdaZ(l) if (l - 1.0).abs() < 1e-12)
            && !d.has_flip)
    });
    s.eq("psl2-quotient", "fibered", "S1 | S1 ⋊ F", || {
        let d = psl2_quotient_isometry(FiberedQuotient::Psl2);
        Ok(format!("{} | {}", d.identity_component.name(), d.structure))
    });
    s.eq(
        "h2xr-quotient",
        "fibered",
        "S1 | finite extension of S1",
        || {
            let d = psl2_quotient_isometry(FiberedQuotient::H2xR);
            Ok(format!("{} | {}", d.identity_component.name(), d.structure))
        },
    );
    s.eq(
        "sl2-quotient",
        "fibered",
        "S1 | finite extension of S1",
        || {
            let d = psl2_quotient_isometry(FiberedQuotient::Sl2Tilde);
            Ok(format!("{} | {}", d.identity_component.name(), d.structure))
        },
    );

    // euclid-spherical
    let quarter = signed_permutation(&[1, 0], &[1, -1]);
    let flip = signed_permutation(&[0, 1], &[1, -1]);
    s.eq("rank-screw", "euclid-spherical", "1", || {
        Ok(translation_rank(&CrystalGroup::from_int(3, &[], &[vec![0, 0, 1]])?).to_string())
    });
    s.eq("rank-torus-line", "euclid-spherical", "2", || {
        Ok(translation_rank(&CrystalGroup::from_int(
            3,
            &[],
            &[vec![1, 0, 0], vec![0, 1, 0]],
        )?)
        .to_string())
    });
    let lattices: [&[Vec<i64>]; 3] = [
        &[vec![0, 0, 1]],
        &[vec![1, 0, 0], vec![0, 1, 0]],
        &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]],
    ];
    for (r, want) in [
        (1, "InfiniteVolume"),
        (2, "InfiniteVolume"),
        (3, "FiniteVolumeCompact"),
    ] {
        s.eq(&format!("volume-rank{r}"), "euclid-spherical", want, || {
            Ok(format!(
                "{:?}",
                euclid_volume_verdict(&CrystalGroup::from_int(3, &[], lattices[r - 1])?)?
            ))
        });
    }
    s.eq("betti-d4", "euclid-spherical", "0 | trivial", || {
        let (b, tag) = betti_identity_component(&CrystalGroup::standard(
            2,
            vec![quarter.clone(), flip.clone()],
        )?)?;
        Ok(format!("{b} | {}", tag.name()))
    });
    s.eq(
        "iso-square-torus",
        "euclid-spherical",
        "T2 | D4 | 8",
        || {
            let d = euclid_quotient_isometry(&CrystalGroup::standard(2, vec![])?)?;
            Ok(format!(
                "{} | {} | {}",
                d.identity_component.name(),
                d.finite_part.label,
                d.finite_part.order.unwrap_or(0)
            ))
        },
    );
    s.eq(
        "iso-square-d4",
        "euclid-spherical",
        "trivial | Z2 | 2",
        || {
            let d = euclid_quotient_isometry(&CrystalGroup::standard(
                2,
                vec![quarter.clone(), flip.clone()],
            )?)?;
            Ok(format!(
                "{} | {} | {}",
                d.identity_component.name(),
                d.finite_part.label,
                d.finite_part.order.unwrap_or(0)
            ))
        },
    );
    s.eq(
        "lookup-orbifold-orientation",
        "euclid-spherical",
        "S1, S1xS1, trivial",
        || Ok(lookup("spherical-orbifold-orientation-preserving")?.join(", ")),
    );
    s.eq(
        "lookup-s2xr-free",
        "euclid-spherical",
        "Z/p, Z/p x Z/2, D_n",
        || Ok(lookup("s2xr-free-finite-actions")?.join(", ")),
    );
    s.holds("lookup-spherical-so4", "euclid-spherical", || {
        Ok(lookup("spherical-manifold")?.contains(&GroupTag::SO4.name()))
    });

    // verdict-engine
    let factor = |t: &str| -> Result<SimpleFactor> { t.parse() };
    s.eq("rank-sl3r", "verdict-engine", "2", || {
        Ok(real_rank(factor("SL(3,R)")?).to_string())
    });
    s.eq("rank-so22", "verdict-engine", "2", || {
        Ok(real_rank(factor("SO(2,2)")?).to_string())
    });
    s.eq("type-so22", "verdict-engine", "[A1, A1]", || {
        Ok(format!(
            "[{}]",
            complex_type(factor("SO(2,2)")?)
                .iter()
                .map(|t| t.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        ))
    });
    s.holds("isotypic-so22-so4", "verdict-engine", || {
        Ok(is_isotypic(&parse_factors("SO(2,2), SO(4)")?))
    });
    s.holds("isotypic-footnote", "verdict-engine", || {
        Ok(is_isotypic(&parse_factors("SO(3,1), SO(2,2), SO(4,C)")?))
    });
    s.holds("zimmer-sl3z", "verdict-engine", || {
        let sp = spec("SL(3,R)", false)?;
        let mut all = true;
        for geometry in Geometry::ALL {
            for id in [
                GroupTag::Trivial,
                GroupTag::S1,
                GroupTag::SO3,
                GroupTag::SO4,
                GroupTag::SO3xS1,
            ] {
                all &= zimmer_verdict(
                    &ZimmerTarget {
                        geometry,
                        identity_component: id,
                    },
                    &sp,
                )?
                .tag == VerdictTag::FactorsThroughFinite;
            }
        }
        Ok(all)
    });
    s.holds("zimmer-round-sphere", "verdict-engine", || {
        let x = ZimmerTarget {
            geometry: Geometry::S3,
            identity_component: GroupTag::SO4,
        };
        Ok(zimmer_verdict(&x, &spec("SO(2,2), SO(4)", true)?)?.tag
            == VerdictTag::PossibleInfiniteIsometricAction)
    });
    for (r, n) in [(3, 2), (4, 3)] {
        s.holds(&format!("aspherical-r{r}-n{n}"), "verdict-engine", || {
            Ok(aspherical_check(r, n)?.is_some_and(|v| v.tag == VerdictTag::FactorsThroughFinite))
        });
    }
    s.eq("alexandrov-bound", "verdict-engine", "6", || {
        Ok(max_isometry_dim(3)?.to_string())
    });
    s.eq("summary-sol", "verdict-engine", "605", || {
        let g = sol_quotient_isometry_with(&cat(5)?, snf)?;
        let d = quotient_isometry_summary(&QuotientInput::Sol(cat(5)?))?.descriptor;
        Ok(if d.finite_part.order == Some(g.finite.order) {
            g.finite.order.to_string()
        } else {
            "mismatch".into()
        })
    });
    s.eq("summary-nil", "verdict-engine", "S1 ⋊ D4", || {
        Ok(quotient_isometry_summary(&QuotientInput::Nil {
            lattice: NilLattice::square(),
            extra: vec![],
        })?
        .descriptor
        .structure)
    });
    s.eq("summary-h3", "verdict-engine", "trivial | finite", || {
        let d = quotient_isometry_summary(&QuotientInput::H3)?.descriptor;
        Ok(format!(
            "{} | {}",
            d.identity_component.name(),
            if d.finite_part.label.starts_with("finite") {
                "finite"
            } else {
                "?"
            }
        ))
    });

    // cli-level examples through the library
    s.eq(
        "cli-sol-iso-json",
        "cli",
        r#"{"identity_component":"trivial","finite":{"abelian_invariants":[11,11],"cyclic_extension":5,"order":605}}"#,
        || Ok(serde_json::to_string(&sol_quotient_isometry_with(&sol_lattice_make(&IntMat2::parse_row_major("2,1,1,1")?, 5)?, snf)?).map_err(|e| crate::GeomError::Consistency(e.to_string()))?),
    );
    s.eq("cli-nil-iso-hz", "cli", "S1 ⋊ D4", || {
        Ok(nil_quotient_isometry(&NilLattice::preset("HZ")?, None)?.structure)
    });
    s.holds("cli-zimmer-nonuniform", "cli", || {
        let d = nil_quotient_isometry(&NilLattice::preset("HZ")?, None)?;
        let x = ZimmerTarget {
            geometry: Geometry::Nil,
            identity_component: d.identity_component,
        };
        Ok(zimmer_verdict(&x, &spec("SL(3,R)", false)?)?.tag == VerdictTag::FactorsThroughFinite)
    });

    let passed = s.items.iter().filter(|i| i.pass).count();
    let failed = s.items.len() - passed;
    SelfcheckReport {
        items: s.items,
        passed,
        failed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fresh_build_passes() {
        let r = selfcheck();
        let bad: Vec<_> = r.items.iter().filter(|i| !i.pass).collect();
        assert!(bad.is_empty(), "{bad:#?}");
        assert!(r.passed >= 80);
    }

    #[test]
    fn corrupted_lookup_fails_lookup_rows_only() {
        let r = selfcheck_with(Faults {
            corrupt_lookup: true,
            bad_snf: false,
        });
        let failed: Vec<_> = r
            .items
            .iter()
            .filter(|i| !i.pass)
            .map(|i| i.id.as_str())
            .collect();
        assert_eq!(
            failed,
            [
                "lookup-orbifold-orientation",
                "lookup-s2xr-free",
                "lookup-spherical-so4"
            ]
        );
    }

    #[test]
    fn bad_smith_form_fails_sol_items() {
        let r = selfcheck_with(Faults {
            corrupt_lookup: false,
            bad_snf: true,
        });
        let failed: Vec<_> = r
            .items
            .iter()
            .filter(|i| !i.pass)
            .map(|i| i.id.as_str())
            .collect();
        assert!(
            failed.contains(&"iso-n5")
                && failed.contains(&"cli-sol-iso-json")
                && failed.contains(&"snf-lambda5")
        );
        assert!(r.items.iter().filter(|i| i.module == "nil").all(|i| i.pass));
    }
}
