//! 2×2 matrices over an exact ring (integers, rationals, or ℚ(√d)).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::quad::QuadRat;
use crate::error::{GeomError, Result};

pub trait Ring:
    Clone + PartialEq + Zero + One + Neg<Output = Self> + Sub<Output = Self> + fmt::Display
{
}
impl Ring for BigInt {}
impl Ring for BigRational {}
impl Ring for QuadRat {}

/// Row-major 2×2 matrix `[[a, b], [c, d]]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat2<T> {
    pub m: [[T; 2]; 2],
}

pub type IntMat2 = Mat2<BigInt>;
pub type RatMat2 = Mat2<BigRational>;
pub type QuadMat2 = Mat2<QuadRat>;

impl<T: Ring> Mat2<T> {
    pub fn new(a: T, b: T, c: T, d: T) -> Self {
        Mat2 {
            m: [[a, b], [c, d]],
        }
    }

    pub fn identity() -> Self {
        Self::new(T::one(), T::zero(), T::zero(), T::one())
    }

    pub fn zero() -> Self {
        Self::new(T::zero(), T::zero(), T::zero(), T::zero())
    }

    pub fn diag(a: T, d: T) -> Self {
        Self::new(a, T::zero(), T::zero(), d)
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.m[i][j]
    }

    pub fn det(&self) -> T {
        let [[a, b], [c, d]] = &self.m;
        a.clone() * d.clone() - b.clone() * c.clone()
    }

    pub fn trace(&self) -> T {
        self.m[0][0].clone() + self.m[1][1].clone()
    }

    pub fn transpose(&self) -> Self {
        let [[a, b], [c, d]] = self.m.clone();
        Self::new(a, c, b, d)
    }

    /// Adjugate: `adj(M)·M = det(M)·I`.
    pub fn adj(&self) -> Self {
        let [[a, b], [c, d]] = self.m.clone();
        Self::new(d, -b, -c, a)
    }

    pub fn scale(&self, k: &T) -> Self {
        let f = |x: &T| x.clone() * k.clone();
        Self::new(
            f(&self.m[0][0]),
            f(&self.m[0][1]),
            f(&self.m[1][0]),
            f(&self.m[1][1]),
        )
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Mat2<U> {
        Mat2::new(
            f(&self.m[0][0]),
            f(&self.m[0][1]),
            f(&self.m[1][0]),
            f(&self.m[1][1]),
        )
    }

    pub fn apply(&self, v: &[T; 2]) -> [T; 2] {
        let [[a, b], [c, d]] = &self.m;
        [
            a.clone() * v[0].clone() + b.clone() * v[1].clone(),
            c.clone() * v[0].clone() + d.clone() * v[1].clone(),
        ]
    }

    pub fn column(&self, j: usize) -> [T; 2] {
        [self.m[0][j].clone(), self.m[1][j].clone()]
    }

    pub fn from_columns(c0: &[T; 2], c1: &[T; 2]) -> Self {
        Self::new(c0[0].clone(), c1[0].clone(), c0[1].clone(), c1[1].clone())
    }

    /// `self^n` by repeated squaring; `n = 0` gives the identity.
    pub fn pow(&self, mut n: u64) -> Self {
        let mut acc = Self::identity();
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }
}

impl<T: Ring + std::ops::Div<Output = T>> Mat2<T> {
    pub fn inverse(&self) -> Result<Self> {
        let det = self.det();
        if det.is_zero() {
            return Err(GeomError::DivisionByZero);
        }
        let adj = self.adj();
        Ok(adj.map(|x| x.clone() / det.clone()))
    }
}

impl Mat2<QuadRat> {
    pub fn checked_inverse(&self) -> Result<Self> {
        let det = self.det();
        let inv = det.inv()?;
        Ok(self.adj().scale(&inv))
    }
}

impl<'a, T: Ring> Mul for &'a Mat2<T> {
    type Output = Mat2<T>;
    fn mul(self, o: &Mat2<T>) -> Mat2<T> {
        let e = |i: usize, j: usize| {
            self.m[i][0].clone() * o.m[0][j].clone() + self.m[i][1].clone() * o.m[1][j].clone()
        };
        Mat2::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }
}
impl<T: Ring> Mul for Mat2<T> {
    type Output = Mat2<T>;
    fn mul(self, o: Mat2<T>) -> Mat2<T> {
        &self * &o
    }
}
impl<'a, T: Ring> Add for &'a Mat2<T> {
    type Output = Mat2<T>;
    fn add(self, o: &Mat2<T>) -> Mat2<T> {
        let e = |i: usize, j: usize| self.m[i][j].clone() + o.m[i][j].clone();
        Mat2::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }
}
impl<'a, T: Ring> Sub for &'a Mat2<T> {
    type Output = Mat2<T>;
    fn sub(self, o: &Mat2<T>) -> Mat2<T> {
        let e = |i: usize, j: usize| self.m[i][j].clone() - o.m[i][j].clone();
        Mat2::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }
}

impl<T: Ring> fmt::Display for Mat2<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [c, d]] = &self.m;
        write!(f, "[[{a}, {b}], [{c}, {d}]]")
    }
}

impl IntMat2 {
    pub fn from_i64(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self::new(a.into(), b.into(), c.into(), d.into())
    }

    /// Parses four comma-separated integers in row-major order.
    pub fn parse_row_major(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 4 {
            return Err(GeomError::InvalidInput(format!(
                "expected 4 comma-separated integers, got '{s}'"
            )));
        }
        let mut e = Vec::with_capacity(4);
        for p in parts {
            e.push(
                p.parse::<BigInt>()
                    .map_err(|_| GeomError::InvalidInput(format!("bad integer '{p}'")))?,
            );
        }
        let d = e.pop().unwrap();
        let c = e.pop().unwrap();
        let b = e.pop().unwrap();
        let a = e.pop().unwrap();
        Ok(Self::new(a, b, c, d))
    }

    pub fn to_rat(&self) -> RatMat2 {
        self.map(|x| BigRational::from_integer(x.clone()))
    }

    pub fn to_quad(&self) -> QuadMat2 {
        self.map(|x| QuadRat::rational(BigRational::from_integer(x.clone())))
    }

    pub fn to_i64(&self) -> Option<[[i64; 2]; 2]> {
        use num_traits::ToPrimitive;
        let g = |i: usize, j: usize| self.m[i][j].to_i64();
        Some([[g(0, 0)?, g(0, 1)?], [g(1, 0)?, g(1, 1)?]])
    }
}

/// `a^n` for an integer matrix.
pub fn int_mat_pow(a: &IntMat2, n: u64) -> IntMat2 {
    a.pow(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn powers_of_cat_map() {
        let a = IntMat2::from_i64(2, 1, 1, 1);
        assert_eq!(int_mat_pow(&a, 2), IntMat2::from_i64(5, 3, 3, 2));
        assert_eq!(int_mat_pow(&a, 5), IntMat2::from_i64(89, 55, 55, 34));
        assert_eq!(int_mat_pow(&a, 0), IntMat2::identity());
        // independent: A^n = [[F(2n+1), F(2n)], [F(2n), F(2n−1)]]
        let fib: Vec<i64> = (0..40)
            .scan((0i64, 1i64), |s, _| {
                let r = s.0;
                *s = (s.1, s.0 + s.1);
                Some(r)
            })
            .collect();
        for n in 1..12u64 {
            let k = 2 * n as usize;
            assert_eq!(
                int_mat_pow(&a, n),
                IntMat2::from_i64(fib[k + 1], fib[k], fib[k], fib[k - 1]),
                "n = {n}"
            );
        }
    }

    #[test]
    fn repeated_multiplication_agrees() {
        let a = IntMat2::from_i64(3, -2, 7, 5);
        let mut acc = IntMat2::identity();
        for n in 0..9 {
            assert_eq!(a.pow(n), acc);
            acc = &acc * &a;
        }
    }

    #[test]
    fn parse() {
        assert_eq!(
            IntMat2::parse_row_major("2, 1,1,1").unwrap(),
            IntMat2::from_i64(2, 1, 1, 1)
        );
        assert!(IntMat2::parse_row_major("1,2,3").is_err());
    }
}
