//! Möbius action of PSL₂(ℝ) on the upper half-plane and the trace trichotomy.

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::algebra::RatMat2;
use crate::error::{GeomError, Result};

/// Default tolerance for the trace classification.
pub const CLASSIFY_TOL: f64 = 1e-9;
/// Default tolerance for commutator and fixed-set comparisons.
pub const COMPARE_TOL: f64 = 1e-7;

/// An element of PSL₂(ℝ): normalized to `ad − bc = 1` and `tr ≥ 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct MobiusMap {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    /// The exact input, when one was supplied (not normalized).
    pub exact: Option<RatMat2>,
}

impl MobiusMap {
    /// Rescales by `1/√det`; a non-positive determinant is rejected.
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        let det = a * d - b * c;
        if !(det > 0.0) || !det.is_finite() {
            return Err(GeomError::InvalidInput(format!(
                "determinant {det} is not positive"
            )));
        }
        let s = det.sqrt();
        let (mut a, mut b, mut c, mut d) = (a / s, b / s, c / s, d / s);
        let tr = a + d;
        if tr < 0.0 || (tr == 0.0 && c < 0.0) {
            (a, b, c, d) = (-a, -b, -c, -d);
        }
        Ok(MobiusMap {
            a,
            b,
            c,
            d,
            exact: None,
        })
    }

    pub fn from_exact(m: &RatMat2) -> Result<Self> {
        if !m.det().is_positive() {
            return Err(GeomError::InvalidInput(
                "determinant is not positive".into(),
            ));
        }
        let f = |x: &BigRational| x.to_f64().unwrap_or(f64::NAN);
        let mut out = Self::new(f(&m.m[0][0]), f(&m.m[0][1]), f(&m.m[1][0]), f(&m.m[1][1]))?;
        out.exact = Some(m.clone());
        Ok(out)
    }

    pub fn identity() -> Self {
        Self::new(1.0, 0.0, 0.0, 1.0).unwrap()
    }

    pub fn diag(l: f64) -> Self {
        Self::new(l, 0.0, 0.0, 1.0 / l).unwrap()
    }

    pub fn translation(t: f64) -> Self {
        Self::new(1.0, t, 0.0, 1.0).unwrap()
    }

    /// Rotation by angle θ about i: `[[cos, sin], [−sin, cos]]` of θ/2.
    pub fn rotation(theta: f64) -> Self {
        let (s, c) = (theta / 2.0).sin_cos();
        Self::new(c, s, -s, c).unwrap()
    }

    pub fn matrix(&self) -> [[f64; 2]; 2] {
        [[self.a, self.b], [self.c, self.d]]
    }

    pub fn from_matrix(m: [[f64; 2]; 2]) -> Result<Self> {
        Self::new(m[0][0], m[0][1], m[1][0], m[1][1])
    }

    pub fn trace(&self) -> f64 {
        self.a + self.d
    }

    pub fn compose(&self, o: &Self) -> Self {
        Self::from_matrix(mat_mul(&self.matrix(), &o.matrix())).expect("product of SL₂ elements")
    }

    pub fn inv(&self) -> Self {
        Self::new(self.d, -self.b, -self.c, self.a).unwrap()
    }

    pub fn conjugate_by(&self, g: &Self) -> Self {
        g.compose(self).compose(&g.inv())
    }

    pub fn norm(&self) -> f64 {
        self.matrix()
            .iter()
            .flatten()
            .fold(0.0f64, |m, x| m.max(x.abs()))
    }

    fn is_identity(&self, tol: f64) -> bool {
        if let Some(e) = &self.exact {
            return e.m[0][1].is_zero() && e.m[1][0].is_zero() && e.m[0][0] == e.m[1][1];
        }
        (self.a - 1.0).abs() <= tol
            && self.b.abs() <= tol
            && self.c.abs() <= tol
            && (self.d - 1.0).abs() <= tol
    }
}

pub fn mat_mul(x: &[[f64; 2]; 2], y: &[[f64; 2]; 2]) -> [[f64; 2]; 2] {
    let e = |i: usize, j: usize| x[i][0] * y[0][j] + x[i][1] * y[1][j];
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

/// `(az + b)/(cz + d)` for `Im z > 0`.
pub fn mobius_apply(m: &MobiusMap, z: Complex64) -> Result<Complex64> {
    if !(z.im > 0.0) {
        return Err(GeomError::InvalidInput(format!(
            "{z} is not in the upper half-plane"
        )));
    }
    let den = m.c * z + m.d;
    if den.norm() == 0.0 {
        return Err(GeomError::InvalidInput("point is sent to ∞".into()));
    }
    Ok((m.a * z + m.b) / den)
}

/// A point of ∂ℍ² = ℝ ∪ {∞}.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundaryPoint {
    Real(f64),
    Infinity,
}

impl BoundaryPoint {
    /// Chordal distance on the circle ℝ ∪ {∞}.
    pub fn chordal(self, o: BoundaryPoint) -> f64 {
        match (self, o) {
            (BoundaryPoint::Infinity, BoundaryPoint::Infinity) => 0.0,
            (BoundaryPoint::Real(x), BoundaryPoint::Infinity)
            | (BoundaryPoint::Infinity, BoundaryPoint::Real(x)) => 1.0 / (1.0 + x * x).sqrt(),
            (BoundaryPoint::Real(x), BoundaryPoint::Real(y)) => {
                (x - y).abs() / ((1.0 + x * x) * (1.0 + y * y)).sqrt()
            }
        }
    }

    pub fn apply(self, m: &MobiusMap) -> BoundaryPoint {
        match self {
            BoundaryPoint::Infinity if m.c == 0.0 => BoundaryPoint::Infinity,
            BoundaryPoint::Infinity => BoundaryPoint::Real(m.a / m.c),
            BoundaryPoint::Real(x) => {
                let den = m.c * x + m.d;
                if den == 0.0 {
                    BoundaryPoint::Infinity
                } else {
                    BoundaryPoint::Real((m.a * x + m.b) / den)
                }
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum IsometryTag {
    Elliptic,
    Parabolic,
    Hyperbolic,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FixedSet {
    /// `[re, im]`.
    Interior([f64; 2]),
    Boundary(Vec<BoundaryPoint>),
}

impl FixedSet {
    /// Equal within `tol` (chordal on the boundary, relative in the interior).
    pub fn approx_eq(&self, o: &FixedSet, tol: f64) -> bool {
        match (self, o) {
            (FixedSet::Interior(p), FixedSet::Interior(q)) => {
                let (p, q) = (Complex64::new(p[0], p[1]), Complex64::new(q[0], q[1]));
                // scale-invariant: comparable to hyperbolic distance for nearby points
                (p - q).norm() / (p.im * q.im).sqrt() <= tol
            }
            (FixedSet::Boundary(a), FixedSet::Boundary(b)) if a.len() == b.len() => {
                let matched = |xs: &[BoundaryPoint], ys: &[BoundaryPoint]| {
                    xs.iter().all(|x| ys.iter().any(|y| x.chordal(*y) <= tol))
                };
                matched(a, b) && matched(b, a)
            }
            _ => false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IsometryClass {
    pub tag: IsometryTag,
    pub fixed_set: FixedSet,
}

/// Trace trichotomy with default tolerance.
pub fn classify_isometry(m: &MobiusMap) -> Result<IsometryClass> {
    classify_isometry_tol(m, CLASSIFY_TOL)
}

pub fn classify_isometry_tol(m: &MobiusMap, tol: f64) -> Result<IsometryClass> {
    if m.is_identity(tol) {
        return Err(GeomError::Identity);
    }
    let tag = match &m.exact {
        Some(e) => {
            // sign of tr² − 4 det, exactly
            let t = e.trace();
            let s = &t * &t - BigRational::from_integer(4.into()) * e.det();
            if s.is_positive() {
                IsometryTag::Hyperbolic
            } else if s.is_zero() {
                IsometryTag::Parabolic
            } else {
                IsometryTag::Elliptic
            }
        }
        None => {
            let gap = m.trace().abs() - 2.0;
            if gap > tol {
                IsometryTag::Hyperbolic
            } else if gap < -tol {
                IsometryTag::Elliptic
            } else {
                IsometryTag::Parabolic
            }
        }
    };
    Ok(IsometryClass {
        tag,
        fixed_set: fixed_points(m, tag),
    })
}

/// Roots of `c z² + (d − a) z − b = 0` appropriate to the class.
fn fixed_points(m: &MobiusMap, tag: IsometryTag) -> FixedSet {
    let (a, b, c, d) = (m.a, m.b, m.c, m.d);
    let bq = d - a;
    let cq = -b;
    let c_zero = c.abs() <= 1e-15 * m.norm();
    match tag {
        IsometryTag::Elliptic => {
            let disc = (a + d).powi(2) - 4.0;
            let re = (a - d) / (2.0 * c) + 0.0;
            let im = (-disc).max(0.0).sqrt() / (2.0 * c.abs());
            FixedSet::Interior([re, im])
        }
        IsometryTag::Parabolic => {
            if c_zero {
                FixedSet::Boundary(vec![BoundaryPoint::Infinity])
            } else {
                FixedSet::Boundary(vec![BoundaryPoint::Real((a - d) / (2.0 * c) + 0.0)])
            }
        }
        IsometryTag::Hyperbolic => {
            if c_zero {
                FixedSet::Boundary(vec![
                    BoundaryPoint::Real(-cq / bq + 0.0),
                    BoundaryPoint::Infinity,
                ])
            } else {
                let disc = ((a + d).powi(2) - 4.0).max(0.0).sqrt();
                let q = -0.5 * (bq + bq.signum() * disc);
                let q = if q == 0.0 { -0.5 * disc } else { q };
                let mut r = [q / c + 0.0, cq / q + 0.0];
                r.sort_by(|x, y| x.partial_cmp(y).unwrap());
                FixedSet::Boundary(vec![BoundaryPoint::Real(r[0]), BoundaryPoint::Real(r[1])])
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CommuteReport {
    pub commute: bool,
    pub fixed_sets_equal: bool,
}

/// Commutator distance to ±I, scaled by the operand norms.
pub fn commutator_defect(m1: &MobiusMap, m2: &MobiusMap) -> f64 {
    let p = mat_mul(&m1.matrix(), &m2.matrix());
    let q = mat_mul(&m2.matrix(), &m1.matrix());
    let dist = |s: f64| {
        (0..2)
            .flat_map(|i| (0..2).map(move |j| (i, j)))
            .fold(0.0f64, |acc, (i, j)| acc.max((p[i][j] - s * q[i][j]).abs()))
    };
    dist(1.0).min(dist(-1.0)) / (m1.norm() * m2.norm())
}

pub fn commute_test(m1: &MobiusMap, m2: &MobiusMap) -> Result<CommuteReport> {
    commute_test_tol(m1, m2, CLASSIFY_TOL, COMPARE_TOL)
}

pub fn commute_test_tol(
    m1: &MobiusMap,
    m2: &MobiusMap,
    tol: f64,
    cmp_tol: f64,
) -> Result<CommuteReport> {
    let c1 = classify_isometry_tol(m1, tol)?;
    let c2 = classify_isometry_tol(m2, tol)?;
    Ok(CommuteReport {
        commute: commutator_defect(m1, m2) <= cmp_tol,
        fixed_sets_equal: c1.fixed_set.approx_eq(&c2.fixed_set, cmp_tol),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CentralizerType {
    RealLine,
    Circle,
}

/// Generator of the centralizing one-parameter group, up to conjugacy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum OneParameter {
    Diagonal,
    UpperNilpotent,
    Rotation,
}

pub fn centralizer_type(m: &MobiusMap) -> Result<(CentralizerType, OneParameter)> {
    Ok(match classify_isometry(m)?.tag {
        IsometryTag::Elliptic => (CentralizerType::Circle, OneParameter::Rotation),
        IsometryTag::Parabolic => (CentralizerType::RealLine, OneParameter::UpperNilpotent),
        IsometryTag::Hyperbolic => (CentralizerType::RealLine, OneParameter::Diagonal),
    })
}

/// `exp` of a traceless 2×2 matrix, using `X² = −det(X)·I`.
pub fn sl2_exp(x: [[f64; 2]; 2]) -> [[f64; 2]; 2] {
    let delta = -(x[0][0] * x[1][1] - x[0][1] * x[1][0]);
    let (c, s) = if delta > 0.0 {
        let r = delta.sqrt();
        (r.cosh(), r.sinh() / r)
    } else if delta < 0.0 {
        let r = (-delta).sqrt();
        (r.cos(), r.sin() / r)
    } else {
        (1.0, 1.0)
    };
    [
        [c + s * x[0][0], s * x[0][1]],
        [s * x[1][0], c + s * x[1][1]],
    ]
}

/// The neighbourhood `U_ε = {[[a, x], [y, b]] : |x|, |y| < ε, |a − 1|, |b − 1| < ε}`.
pub fn in_u_eps(m: &[[f64; 2]; 2], eps: f64) -> bool {
    (m[0][0] - 1.0).abs() < eps
        && (m[1][1] - 1.0).abs() < eps
        && m[0][1].abs() < eps
        && m[1][0].abs() < eps
}

/// `g h g⁻¹ h⁻¹` in SL₂(ℝ) (no projective normalization).
pub fn sl2_commutator(g: &[[f64; 2]; 2], h: &[[f64; 2]; 2]) -> [[f64; 2]; 2] {
    let inv = |m: &[[f64; 2]; 2]| [[m[1][1], -m[0][1]], [-m[1][0], m[0][0]]];
    mat_mul(&mat_mul(&mat_mul(g, h), &inv(g)), &inv(h))
}

/// Verdict record for finite-volume ℍⁿ quotients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HnVerdict {
    pub tag: &'static str,
    pub dim: u32,
    pub normalizer_discrete: bool,
    pub order_formula: &'static str,
}

pub fn hn_quotient_isometry_verdict(dim: u32) -> Result<HnVerdict> {
    if dim < 2 {
        return Err(GeomError::InvalidInput(
            "dimension must be at least 2".into(),
        ));
    }
    Ok(HnVerdict {
        tag: "FiniteIsometryGroup",
        dim,
        normalizer_discrete: true,
        order_formula: "Vol(F_Γ)/Vol(F_Λ)",
    })
}

/// Whether a closed orientable hyperbolic-or-flat surface of this genus admits a faithful S¹-action.
pub fn surface_circle_action_possible(genus: u32) -> bool {
    genus < 2
}
