use geom3::algebra::{smith_normal_form, IntMat2, QuadRat};
use geom3::sol::*;
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use proptest::prelude::*;

/// SL₂(ℤ) matrix with the given trace: [[p, q], [r, t − p]] with qr = p(t − p) − 1.
fn with_trace(t: i64, p: i64, pick: usize) -> Option<IntMat2> {
    let c = p * (t - p) - 1;
    if c == 0 {
        return Some(IntMat2::from_i64(p, 1 + pick as i64 % 3, 0, t - p));
    }
    let divs: Vec<i64> = (1..=c.abs())
        .filter(|d| c % d == 0)
        .flat_map(|d| [d, -d])
        .collect();
    let q = divs[pick % divs.len()];
    Some(IntMat2::from_i64(p, q, c / q, t - p))
}

fn hyperbolic() -> impl Strategy<Value = IntMat2> {
    (3i64..=10, -4i64..8, 0usize..64).prop_filter_map("no matrix", |(t, p, k)| with_trace(t, p, k))
}

/// Order of ℤ²/Mℤ² by iteration: the order k₁ of e₁, then the order of e₂
/// modulo ⟨e₁⟩ + Mℤ². Membership x ∈ Mℤ² ⇔ adj(M)·x ≡ 0 (mod det M).
fn cokernel_order_by_iteration(m: &IntMat2) -> u64 {
    let e = m.to_i64().unwrap();
    let (a, b, c, d) = (
        e[0][0] as i128,
        e[0][1] as i128,
        e[1][0] as i128,
        e[1][1] as i128,
    );
    let det = (a * d - b * c).abs();
    let inside = |x: i128, y: i128| (d * x - b * y) % det == 0 && (-c * x + a * y) % det == 0;
    let k1 = (1..=det).find(|&k| inside(k, 0)).unwrap();
    let m2 = (1..=det)
        .find(|&mm| (0..k1).any(|j| inside(j, mm)))
        .unwrap();
    (k1 * m2) as u64
}

fn close(a: &SolPoint, b: &SolPoint) -> bool {
    match (a, b) {
        (SolPoint::Float { x, y, t }, SolPoint::Float { x: u, y: v, t: s }) => {
            (x - u).abs() < 1e-12 * (1.0 + x.abs())
                && (y - v).abs() < 1e-12 * (1.0 + y.abs())
                && (t - s).abs() < 1e-12
        }
        _ => a == b,
    }
}

fn fpoint() -> impl Strategy<Value = SolPoint> {
    (-3.0f64..3.0, -3.0f64..3.0, -2.0f64..2.0).prop_map(|(x, y, t)| SolPoint::float(x, y, t))
}

proptest! {
    #[test]
    fn float_group_axioms(g in fpoint(), h in fpoint(), k in fpoint()) {
        let l = sol_mul(&sol_mul(&g, &h).unwrap(), &k).unwrap();
        let r = sol_mul(&g, &sol_mul(&h, &k).unwrap()).unwrap();
        prop_assert!(close(&l, &r));
        prop_assert!(close(&sol_mul(&g, &g.inv()).unwrap(), &SolPoint::float(0.0, 0.0, 0.0)));
    }

    #[test]
    fn exact_group_axioms(x in -5i64..5, y in -5i64..5, k in -3i64..3, u in -5i64..5, v in -5i64..5, j in -3i64..3) {
        let unit: QuadRat = "2+√3".parse().unwrap();
        let g = SolPoint::exact(QuadRat::int(x), QuadRat::frac(y, 2), k, unit.clone()).unwrap();
        let h = SolPoint::exact(QuadRat::frac(u, 3), QuadRat::int(v), j, unit.clone()).unwrap();
        let l = sol_mul(&sol_mul(&g, &h).unwrap(), &g).unwrap();
        let r = sol_mul(&g, &sol_mul(&h, &g).unwrap()).unwrap();
        prop_assert_eq!(l, r);
        let e = sol_mul(&g, &g.inv()).unwrap();
        prop_assert_eq!(e, SolPoint::exact(QuadRat::int(0), QuadRat::int(0), 0, unit).unwrap());
    }

    #[test]
    fn fixed_line_translates(g in fpoint()) {
        let SolPoint::Float { t, .. } = g else { unreachable!() };
        prop_assume!(t.abs() > 1e-3);
        let FixedLine::Float { p, q } = sol_fixed_line(&g).unwrap() else { unreachable!() };
        for s in [-1.0, 0.0, 2.5] {
            let moved = sol_mul(&g, &SolPoint::float(p, q, s)).unwrap();
            let SolPoint::Float { x, y, t: s2 } = moved else { unreachable!() };
            prop_assert!((x - p).abs() < 1e-12 * (1.0 + p.abs()));
            prop_assert!((y - q).abs() < 1e-12 * (1.0 + q.abs()));
            prop_assert!((s2 - (s + t)).abs() < 1e-12);
        }
    }

    #[test]
    fn order_formula_and_cokernel_oracle(a in hyperbolic(), n in 1u64..=4) {
        let l = sol_lattice_make(&a, n).unwrap();
        let g = sol_quotient_isometry(&l).unwrap();
        let det = l.gap().det().abs();
        prop_assert_eq!(det.clone(), (BigInt::from(2) - l.power().trace()).abs());
        prop_assert_eq!(g.finite.order, det.to_u64().unwrap() * n);
        let s = smith_normal_form(&l.gap());
        prop_assert_eq!((&s.d1 * &s.d2).to_u64().unwrap() * n, g.finite.order);
        prop_assert_eq!(cokernel_order_by_iteration(&l.gap()), det.to_u64().unwrap());
        prop_assert!(sol_centralizer(&l).unwrap().trivial);
    }

    #[test]
    fn glue_preserves_normalizer(a in hyperbolic(), n in 1u64..=4) {
        let l = sol_lattice_make(&a, n).unwrap();
        let nm = sol_normalizer_lattice(&l).unwrap();
        let image = &a.to_rat() * &nm.basis;
        let coords = &nm.basis.inverse().unwrap() * &image;
        prop_assert!(coords.m.iter().flatten().all(|x| x.is_integer()));
        prop_assert!(coords.det().abs() == num_rational::BigRational::from_integer(1.into()));
    }
}
