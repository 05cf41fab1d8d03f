//! Diagonalizing hyperbolic elements of SL₂(ℤ) over ℚ(√(t²−4)).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::mat::{IntMat2, QuadMat2};
use super::quad::QuadRat;
use crate::error::{GeomError, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct Sl2Diagonalization {
    /// `λ > 1` first, then `λ⁻¹`.
    pub eigs: (QuadRat, QuadRat),
    /// Columns are eigenvectors for `eigs.0` and `eigs.1`: `A = P·diag·P⁻¹`.
    pub basis: QuadMat2,
}

impl Sl2Diagonalization {
    /// The field parameter `d` of ℚ(√(t²−4)).
    pub fn d(&self) -> u64 {
        self.eigs.0.d()
    }

    /// `B = P⁻¹`, so that `B·A·B⁻¹ = diag(λ, λ⁻¹)`.
    pub fn conjugator(&self) -> QuadMat2 {
        self.basis
            .checked_inverse()
            .expect("eigenbasis is invertible")
    }
}

pub fn diagonalize_sl2(a: &IntMat2) -> Result<Sl2Diagonalization> {
    if !a.det().is_one() {
        return Err(GeomError::InvalidInput(format!("det {} ≠ 1", a.det())));
    }
    let t = a.trace();
    if t <= BigInt::from(2) {
        return Err(GeomError::NotHyperbolic(format!("trace {t} ≤ 2")));
    }
    let disc = &t * &t - BigInt::from(4);
    let root = QuadRat::sqrt_int(&disc)?;
    let d = root.d();
    let half = QuadRat::frac(1, 2);
    let tq = QuadRat::rational(BigRational::from_integer(t));
    let l1 = (&(&tq + &root) * &half).in_field(d);
    let l2 = (&(&tq - &root) * &half).in_field(d);
    let aq = a.to_quad();
    let eigvec = |l: &QuadRat| -> [QuadRat; 2] {
        let [[p, q], [r, s]] = &aq.m;
        if !q.is_zero() {
            [q.clone(), l - p]
        } else {
            // q = 0 forces r ≠ 0 for a hyperbolic matrix
            [l - s, r.clone()]
        }
    };
    let basis = QuadMat2::from_columns(&eigvec(&l1), &eigvec(&l2));
    Ok(Sl2Diagonalization {
        eigs: (l1, l2),
        basis,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> QuadRat {
        s.parse().unwrap()
    }

    fn verify(a: &IntMat2, dg: &Sl2Diagonalization) {
        let diag = QuadMat2::diag(dg.eigs.0.clone(), dg.eigs.1.clone());
        let p = &dg.basis;
        let back = &(p * &diag) * &p.checked_inverse().unwrap();
        assert_eq!(back, a.to_quad());
        assert_eq!(&dg.eigs.0 * &dg.eigs.1, QuadRat::int(1));
    }

    #[test]
    fn cat_map() {
        let a = IntMat2::from_i64(2, 1, 1, 1);
        let dg = diagonalize_sl2(&a).unwrap();
        assert_eq!(dg.eigs.0, q("3/2 + (1/2)√5"));
        assert_eq!(dg.eigs.1, q("3/2 - (1/2)√5"));
        verify(&a, &dg);
        // characteristic polynomial x² − 3x + 1 vanishes at both
        for l in [&dg.eigs.0, &dg.eigs.1] {
            assert!((&(l * l) - &(&QuadRat::int(3) * l) + QuadRat::int(1)).is_zero());
        }
    }

    #[test]
    fn folded_square_factor() {
        let a = IntMat2::from_i64(3, 1, 2, 1);
        let dg = diagonalize_sl2(&a).unwrap();
        assert_eq!(dg.eigs.0, q("2+√3"));
        assert_eq!(dg.eigs.1, q("2-√3"));
        assert_eq!(dg.d(), 3);
        verify(&a, &dg);
        let b = IntMat2::from_i64(1, 0, 3, 1);
        assert!(diagonalize_sl2(&b).is_err());
        let lower = IntMat2::from_i64(1, 0, 1, 1).pow(1);
        assert!(diagonalize_sl2(&lower).is_err());
    }

    #[test]
    fn parabolic_rejected() {
        let e = diagonalize_sl2(&IntMat2::from_i64(1, 1, 0, 1)).unwrap_err();
        assert!(matches!(e, GeomError::NotHyperbolic(_)));
    }

    #[test]
    fn upper_right_zero() {
        // q = 0 cannot happen for det 1, trace > 2 integers, but r = 0 can
        let a = IntMat2::from_i64(2, 3, 1, 2);
        verify(&a, &diagonalize_sl2(&a).unwrap());
        let a = IntMat2::from_i64(5, 2, 2, 1);
        verify(&a, &diagonalize_sl2(&a).unwrap());
    }
}
