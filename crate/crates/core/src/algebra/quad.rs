//! Exact arithmetic in a real quadratic field ℚ(√d).

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{GeomError, Result};

/// `a + b√d` with `d > 1` square-free.
///
/// A value with `b = 0` is a rational number and is treated as living in
/// every quadratic field: it combines with any `d`, and equality ignores its
/// tag. Only two genuinely irrational operands with different `d` clash.
#[derive(Clone, Debug)]
pub struct QuadRat {
    a: BigRational,
    b: BigRational,
    d: u64,
}

/// Tag used for rationals created without reference to a field.
const RATIONAL_TAG: u64 = 2;

pub fn is_squarefree(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2u64;
    while k * k <= n {
        if n % (k * k) == 0 {
            return false;
        }
        k += 1;
    }
    true
}

/// Write `n = s² · m` with `m` square-free. Returns `(s, m)`.
pub fn square_split(n: &BigInt) -> (BigInt, BigInt) {
    assert!(!n.is_negative());
    if n.is_zero() {
        return (BigInt::zero(), BigInt::one());
    }
    let mut s = BigInt::one();
    let mut m = BigInt::one();
    let mut rest = n.clone();
    let mut p = BigInt::from(2);
    while &p * &p <= rest {
        let mut e = 0u32;
        while (&rest % &p).is_zero() {
            rest /= &p;
            e += 1;
        }
        s *= p.pow(e / 2);
        if e % 2 == 1 {
            m *= &p;
        }
        p += 1;
    }
    m *= rest;
    (s, m)
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl QuadRat {
    pub fn new(a: BigRational, b: BigRational, d: u64) -> Result<Self> {
        if !is_squarefree(d) {
            return Err(GeomError::InvalidInput(format!(
                "radicand {d} is not a square-free integer > 1"
            )));
        }
        Ok(QuadRat { a, b, d })
    }

    /// Small-integer convenience constructor: `a + b√d`.
    pub fn from_ints(a: i64, b: i64, d: u64) -> Result<Self> {
        Self::new(rat(a), rat(b), d)
    }

    pub fn rational(q: BigRational) -> Self {
        QuadRat {
            a: q,
            b: BigRational::zero(),
            d: RATIONAL_TAG,
        }
    }

    pub fn int(n: i64) -> Self {
        Self::rational(rat(n))
    }

    pub fn frac(p: i64, q: i64) -> Self {
        Self::rational(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    /// `√n` for a non-negative integer `n`, with square factors pulled out.
    pub fn sqrt_int(n: &BigInt) -> Result<Self> {
        if n.is_negative() {
            return Err(GeomError::InvalidInput(format!("√{n} is not real")));
        }
        let (s, m) = square_split(n);
        if m.is_one() {
            return Ok(Self::rational(BigRational::from_integer(s)));
        }
        let d = m
            .to_u64()
            .ok_or_else(|| GeomError::InvalidInput("radicand too large".into()))?;
        Ok(QuadRat {
            a: BigRational::zero(),
            b: BigRational::from_integer(s),
            d,
        })
    }

    pub fn a(&self) -> &BigRational {
        &self.a
    }
    pub fn b(&self) -> &BigRational {
        &self.b
    }
    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        self.is_rational().then_some(&self.a)
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational()
            .filter(|q| q.is_integer())
            .map(|q| q.to_integer())
    }

    /// Same value, re-tagged into ℚ(√d) when it is rational.
    pub fn in_field(&self, d: u64) -> Self {
        if self.is_rational() {
            QuadRat {
                a: self.a.clone(),
                b: BigRational::zero(),
                d,
            }
        } else {
            self.clone()
        }
    }

    fn common_d(&self, other: &Self) -> Result<u64> {
        match (self.is_rational(), other.is_rational()) {
            (false, false) if self.d != other.d => Err(GeomError::FieldMismatch(self.d, other.d)),
            (false, _) => Ok(self.d),
            (true, false) => Ok(other.d),
            (true, true) => Ok(self.d),
        }
    }

    pub fn checked_add(&self, o: &Self) -> Result<Self> {
        let d = self.common_d(o)?;
        Ok(QuadRat {
            a: &self.a + &o.a,
            b: &self.b + &o.b,
            d,
        })
    }

    pub fn checked_sub(&self, o: &Self) -> Result<Self> {
        let d = self.common_d(o)?;
        Ok(QuadRat {
            a: &self.a - &o.a,
            b: &self.b - &o.b,
            d,
        })
    }

    pub fn checked_mul(&self, o: &Self) -> Result<Self> {
        let d = self.common_d(o)?;
        let dd = BigRational::from_integer(BigInt::from(d));
        Ok(QuadRat {
            a: &self.a * &o.a + &self.b * &o.b * dd,
            b: &self.a * &o.b + &self.b * &o.a,
            d,
        })
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self> {
        let inv = o.inv()?;
        self.checked_mul(&inv)
    }

    /// Field norm `a² − d b²`.
    pub fn norm(&self) -> BigRational {
        let dd = BigRational::from_integer(BigInt::from(self.d));
        &self.a * &self.a - &self.b * &self.b * dd
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(GeomError::DivisionByZero);
        }
        let n = self.norm();
        Ok(QuadRat {
            a: &self.a / &n,
            b: -&self.b / &n,
            d: self.d,
        })
    }

    /// The non-trivial Galois automorphism `a + b√d ↦ a − b√d`.
    pub fn conj(&self) -> Self {
        QuadRat {
            a: self.a.clone(),
            b: -&self.b,
            d: self.d,
        }
    }

    /// Exact sign as -1, 0, 1.
    pub fn signum_i(&self) -> i32 {
        let sa = sign(&self.a);
        let sb = sign(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 {
            return sb;
        }
        if sa == sb {
            return sa;
        }
        // opposite signs: compare a² with d b²
        let n = self.norm();
        match sign(&n) {
            0 => 0,
            s if s > 0 => sa,
            _ => sb,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum_i() > 0
    }
    pub fn is_negative(&self) -> bool {
        self.signum_i() < 0
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        a + b * (self.d as f64).sqrt()
    }

    /// Largest integer `k` with `k ≤ self`, exactly.
    pub fn floor(&self) -> BigInt {
        if self.is_rational() {
            return self.a.floor().to_integer();
        }
        let approx = self.to_f64().floor();
        let mut k = BigInt::from(approx as i64);
        let le = |k: &BigInt, x: &QuadRat| {
            QuadRat::rational(BigRational::from_integer(k.clone())).cmp_exact(x)
                != Ordering::Greater
        };
        while !le(&k, self) {
            k -= 1;
        }
        while le(&(&k + 1), self) {
            k += 1;
        }
        k
    }

    /// Exact comparison. Panics on a field mismatch (see [`QuadRat::try_cmp`]).
    pub fn cmp_exact(&self, o: &Self) -> Ordering {
        self.try_cmp(o).expect("comparison across quadratic fields")
    }

    pub fn try_cmp(&self, o: &Self) -> Result<Ordering> {
        Ok(self.checked_sub(o)?.signum_i().cmp(&0))
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = QuadRat::int(1).in_field(self.d);
        for _ in 0..k.unsigned_abs() {
            acc = acc.checked_mul(&base)?;
        }
        Ok(acc)
    }
}

fn sign(q: &BigRational) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

impl PartialEq for QuadRat {
    fn eq(&self, o: &Self) -> bool {
        self.a == o.a && self.b == o.b && (self.b.is_zero() || self.d == o.d)
    }
}
impl Eq for QuadRat {}

impl Hash for QuadRat {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.a.hash(state);
        self.b.hash(state);
        if !self.b.is_zero() {
            self.d.hash(state);
        }
    }
}

impl PartialOrd for QuadRat {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        self.try_cmp(o).ok()
    }
}

// Operator sugar panics on a field mismatch; the checked_* forms report it.
impl Add for QuadRat {
    type Output = QuadRat;
    fn add(self, o: Self) -> Self {
        self.checked_add(&o).expect("field mismatch in +")
    }
}
impl<'a> Add<&'a QuadRat> for &'a QuadRat {
    type Output = QuadRat;
    fn add(self, o: &QuadRat) -> QuadRat {
        self.checked_add(o).expect("field mismatch in +")
    }
}
impl Sub for QuadRat {
    type Output = QuadRat;
    fn sub(self, o: Self) -> Self {
        self.checked_sub(&o).expect("field mismatch in -")
    }
}
impl<'a> Sub<&'a QuadRat> for &'a QuadRat {
    type Output = QuadRat;
    fn sub(self, o: &QuadRat) -> QuadRat {
        self.checked_sub(o).expect("field mismatch in -")
    }
}
impl Mul for QuadRat {
    type Output = QuadRat;
    fn mul(self, o: Self) -> Self {
        self.checked_mul(&o).expect("field mismatch in *")
    }
}
impl<'a> Mul<&'a QuadRat> for &'a QuadRat {
    type Output = QuadRat;
    fn mul(self, o: &QuadRat) -> QuadRat {
        self.checked_mul(o).expect("field mismatch in *")
    }
}
impl std::ops::Div for QuadRat {
    type Output = QuadRat;
    fn div(self, o: Self) -> Self {
        self.checked_div(&o).expect("field mismatch or zero in /")
    }
}
impl<'a> std::ops::Div<&'a QuadRat> for &'a QuadRat {
    type Output = QuadRat;
    fn div(self, o: &QuadRat) -> QuadRat {
        self.checked_div(o).expect("field mismatch or zero in /")
    }
}
impl Neg for QuadRat {
    type Output = QuadRat;
    fn neg(self) -> Self {
        QuadRat {
            a: -self.a,
            b: -self.b,
            d: self.d,
        }
    }
}
impl<'a> Neg for &'a QuadRat {
    type Output = QuadRat;
    fn neg(self) -> QuadRat {
        -(self.clone())
    }
}

impl Zero for QuadRat {
    fn zero() -> Self {
        QuadRat::int(0)
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}
impl One for QuadRat {
    fn one() -> Self {
        QuadRat::int(1)
    }
}

impl From<BigRational> for QuadRat {
    fn from(q: BigRational) -> Self {
        QuadRat::rational(q)
    }
}
impl From<i64> for QuadRat {
    fn from(n: i64) -> Self {
        QuadRat::int(n)
    }
}

fn fmt_rat(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Renders as `a + b√d`, e.g. `3/7 - (1/7)√2`, `√5`, `-2√3`.
impl fmt::Display for QuadRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", fmt_rat(&self.a));
        }
        let babs = self.b.abs();
        let coeff = if babs.is_one() {
            String::new()
        } else if babs.is_integer() {
            fmt_rat(&babs)
        } else {
            format!("({})", fmt_rat(&babs))
        };
        let surd = format!("{coeff}√{}", self.d);
        if self.a.is_zero() {
            if self.b.is_negative() {
                write!(f, "-{surd}")
            } else {
                write!(f, "{surd}")
            }
        } else {
            let op = if self.b.is_negative() { '-' } else { '+' };
            write!(f, "{} {op} {surd}", fmt_rat(&self.a))
        }
    }
}

/// Parses `p`, `p/q`, `√d`, `b√d`, `a + b√d`, `a - (p/q)√d`; `sqrt` may stand for `√`.
impl std::str::FromStr for QuadRat {
    type Err = GeomError;
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s
            .replace("sqrt", "√")
            .chars()
            .filter(|c| !c.is_whitespace())
            .collect();
        if s.is_empty() {
            return Err(GeomError::InvalidInput("empty number".into()));
        }
        // split at every top-level sign that is not leading or after '/'
        let chars: Vec<char> = s.chars().collect();
        let mut terms = Vec::new();
        let mut cur = String::new();
        let mut depth = 0;
        for (i, &c) in chars.iter().enumerate() {
            match c {
                '(' => depth += 1,
                ')' => depth -= 1,
                '+' | '-' if i > 0 && depth == 0 && chars[i - 1] != '/' => {
                    terms.push(std::mem::take(&mut cur));
                }
                _ => {}
            }
            cur.push(c);
        }
        terms.push(cur);
        let mut acc = QuadRat::int(0);
        for term in &terms {
            acc = acc.checked_add(&parse_term(term)?)?;
        }
        Ok(acc)
    }
}

fn parse_term(t: &str) -> Result<QuadRat> {
    let (neg, body) = match t.strip_prefix('-') {
        Some(r) => (true, r),
        None => (false, t.strip_prefix('+').unwrap_or(t)),
    };
    let v = match body.split_once('√') {
        Some((coef, rad)) => {
            let coef = coef
                .trim_start_matches('(')
                .trim_end_matches(')')
                .trim_end_matches('*');
            let c = if coef.is_empty() {
                rat(1)
            } else {
                parse_rational(coef)?
            };
            let n: BigInt = rad
                .parse()
                .map_err(|_| GeomError::InvalidInput(format!("bad radicand '{rad}'")))?;
            let r = QuadRat::sqrt_int(&n)?;
            QuadRat::rational(c).checked_mul(&r)?
        }
        None => QuadRat::rational(parse_rational(body)?),
    };
    Ok(if neg { -v } else { v })
}

/// Parses `p` or `p/q` into a reduced rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || GeomError::InvalidInput(format!("bad rational '{s}'"));
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(GeomError::DivisionByZero);
            }
            Ok(BigRational::new(p, q))
        }
        None => {
            let p: BigInt = s.parse().map_err(|_| bad())?;
            Ok(BigRational::from_integer(p))
        }
    }
}

/// Binomial coefficient `C(k, 2) = k(k−1)/2` for any integer `k`.
pub fn choose2(k: &BigInt) -> BigInt {
    (k * (k - BigInt::one())).div_floor(&BigInt::from(2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> QuadRat {
        s.parse().unwrap()
    }

    #[test]
    fn norm_identity() {
        let x = q("1+√2");
        let y = q("1-√2");
        assert_eq!(&x * &y, QuadRat::int(-1));
    }

    #[test]
    fn inverse_via_conjugate() {
        let x = q("3+√2");
        let inv = x.inv().unwrap();
        assert_eq!(inv.to_string(), "3/7 - (1/7)√2");
        // independent check: multiply by x and by the conjugate formula
        assert_eq!(&inv * &x, QuadRat::int(1));
        let by_conj = QuadRat::frac(3, 7).checked_sub(&q("(1/7)√2")).unwrap();
        assert_eq!(inv, by_conj);
    }

    #[test]
    fn doubling() {
        assert_eq!((q("√2") + q("√2")).to_string(), "2√2");
    }

    #[test]
    fn galois_examples() {
        assert_eq!(q("3+√2").conj(), q("3-√2"));
        assert_eq!(QuadRat::int(5).conj(), QuadRat::int(5));
        let x = q("1+√5");
        let y = q("2-√5");
        // (1+√5)(2−√5) = 2 − √5 + 2√5 − 5 = −3 + √5
        assert_eq!(&x * &y, q("-3+√5"));
        assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
    }

    #[test]
    fn mismatch_and_zero_division() {
        assert_eq!(
            q("√2").checked_add(&q("√3")),
            Err(GeomError::FieldMismatch(2, 3))
        );
        assert_eq!(
            QuadRat::int(1).checked_div(&QuadRat::int(0)),
            Err(GeomError::DivisionByZero)
        );
        // rationals are compatible with every field
        assert_eq!(q("1").checked_add(&q("√3")).unwrap(), q("1+√3"));
        assert!(QuadRat::new(rat(1), rat(1), 8).is_err());
        assert!(QuadRat::new(rat(1), rat(1), 1).is_err());
    }

    #[test]
    fn sqrt_folds_squares() {
        let r = QuadRat::sqrt_int(&BigInt::from(45)).unwrap();
        assert_eq!(r.to_string(), "3√5");
        assert_eq!(
            QuadRat::sqrt_int(&BigInt::from(16)).unwrap(),
            QuadRat::int(4)
        );
    }

    #[test]
    fn exact_sign_and_floor() {
        assert!(q("3-2√2").is_positive()); // 0.17
        assert!(q("-3+2√2").is_negative());
        assert!(q("7-5√2").is_negative()); // 7 − 7.07
        assert_eq!(q("3-2√2").floor(), BigInt::from(0));
        assert_eq!(q("-1/2+√3").floor(), BigInt::from(1));
        assert_eq!(q("-√2").floor(), BigInt::from(-2));
        assert_eq!(q("5/2").floor(), BigInt::from(2));
    }

    #[test]
    fn display_parse_roundtrip() {
        for s in [
            "0",
            "-7/3",
            "√5",
            "-√5",
            "2√3",
            "1/2 + (1/2)√5",
            "3/7 - (1/7)√2",
        ] {
            assert_eq!(q(s).to_string(), s);
        }
    }

    #[test]
    fn choose2_negative() {
        assert_eq!(choose2(&BigInt::from(-1)), BigInt::from(1));
        assert_eq!(choose2(&BigInt::from(4)), BigInt::from(6));
        assert_eq!(choose2(&BigInt::from(0)), BigInt::from(0));
    }
}
