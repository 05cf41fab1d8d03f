use geom3::algebra::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn small_rat() -> impl Strategy<Value = BigRational> {
    (-40i64..40, 1i64..12).prop_map(|(p, q)| BigRational::new(p.into(), q.into()))
}

fn quad(d: u64) -> impl Strategy<Value = QuadRat> {
    (small_rat(), small_rat()).prop_map(move |(a, b)| QuadRat::new(a, b, d).unwrap())
}

fn field() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![2u64, 3, 5, 6, 7, 13])
}

fn triple() -> impl Strategy<Value = (QuadRat, QuadRat, QuadRat)> {
    field().prop_flat_map(|d| (quad(d), quad(d), quad(d)))
}

fn int_mat(bound: i64) -> impl Strategy<Value = IntMat2> {
    (
        -bound..=bound,
        -bound..=bound,
        -bound..=bound,
        -bound..=bound,
    )
        .prop_map(|(a, b, c, d)| IntMat2::from_i64(a, b, c, d))
}

/// Hyperbolic SL₂(ℤ) elements as words in the positive generators.
fn hyperbolic_sl2() -> impl Strategy<Value = IntMat2> {
    prop::collection::vec((0usize..2, 1i64..4), 2..6).prop_filter_map("trace ≤ 2", |w| {
        let mut m = IntMat2::identity();
        for (g, k) in w {
            let e = if g == 0 {
                IntMat2::from_i64(1, k, 0, 1)
            } else {
                IntMat2::from_i64(1, 0, k, 1)
            };
            m = &m * &e;
        }
        (m.trace() > BigInt::from(2)).then_some(m)
    })
}

proptest! {
    #[test]
    fn field_axioms((x, y, z) in triple()) {
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        if !x.is_zero() {
            prop_assert_eq!(&x * &x.inv().unwrap(), QuadRat::one());
            prop_assert_eq!(&(&y / &x) * &x, y.clone());
        }
    }

    #[test]
    fn galois_is_order_two_automorphism((x, y, _z) in triple()) {
        prop_assert_eq!(galois_conjugate(&(&x + &y)), &x.conj() + &y.conj());
        prop_assert_eq!(galois_conjugate(&(&x * &y)), &x.conj() * &y.conj());
        prop_assert_eq!(x.conj().conj(), x.clone());
        // norm is multiplicative and equals x·σ(x)
        prop_assert_eq!(QuadRat::rational(x.norm()), &x * &x.conj());
    }

    #[test]
    fn sign_agrees_with_float((x, _, _) in triple()) {
        let f = x.to_f64();
        if f.abs() > 1e-9 {
            prop_assert_eq!(x.signum_i(), if f > 0.0 { 1 } else { -1 });
        }
        let fl = x.floor();
        prop_assert!(QuadRat::rational(BigRational::from_integer(fl.clone())) <= x);
        prop_assert!(QuadRat::rational(BigRational::from_integer(fl + 1)) > x);
    }

    #[test]
    fn display_roundtrip((x, _, _) in triple()) {
        let s = x.to_string();
        prop_assert_eq!(s.parse::<QuadRat>().unwrap(), x);
    }

    #[test]
    fn snf_contract(m in int_mat(100)) {
        let s = smith_normal_form(&m);
        prop_assert_eq!(&(&s.u * &m) * &s.v, IntMat2::diag(s.d1.clone(), s.d2.clone()));
        prop_assert!(s.u.det().abs().is_one());
        prop_assert!(s.v.det().abs().is_one());
        prop_assert!(!s.d1.is_negative() && !s.d2.is_negative());
        if s.d1.is_zero() { prop_assert!(s.d2.is_zero()); } else { prop_assert!((&s.d2 % &s.d1).is_zero()); }
        prop_assert_eq!(&s.d1 * &s.d2, m.det().abs());
    }

    #[test]
    fn diagonalization_roundtrip(a in hyperbolic_sl2()) {
        let dg = diagonalize_sl2(&a).unwrap();
        let diag = Mat2::diag(dg.eigs.0.clone(), dg.eigs.1.clone());
        let b = dg.conjugator();
        let back = &(&b.checked_inverse().unwrap() * &diag) * &b;
        prop_assert_eq!(back, a.to_quad());
        prop_assert_eq!(&dg.eigs.0 * &dg.eigs.1, QuadRat::one());
        prop_assert!(dg.eigs.0 > QuadRat::one());
    }
}
