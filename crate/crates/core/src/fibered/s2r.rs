//! Discrete subgroups of Iso(S²×ℝ) = O(3) × (ℝ ⋊ ℤ₂).

use serde::Serialize;

use crate::error::{GeomError, Result};
use crate::iso::GroupTag;

pub type Mat3 = [[f64; 3]; 3];

const ORTHO_TOL: f64 = 1e-12;
const EQ_TOL: f64 = 1e-8;
/// Largest zero-shift subgroup enumerated.
pub const F_CAP: usize = 240;
/// Default cap on Euclid rounds for the shift gcd.
pub const DEFAULT_ROUNDS: usize = 64;

pub fn mat3_mul(a: &Mat3, b: &Mat3) -> Mat3 {
    std::array::from_fn(|i| std::array::from_fn(|j| (0..3).map(|k| a[i][k] * b[k][j]).sum()))
}

pub fn mat3_transpose(a: &Mat3) -> Mat3 {
    std::array::from_fn(|i| std::array::from_fn(|j| a[j][i]))
}

pub fn mat3_identity() -> Mat3 {
    std::array::from_fn(|i| std::array::from_fn(|j| if i == j { 1.0 } else { 0.0 }))
}

pub fn mat3_det(a: &Mat3) -> f64 {
    a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
        - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
}

fn mat3_dist(a: &Mat3, b: &Mat3) -> f64 {
    (0..3)
        .flat_map(|i| (0..3).map(move |j| (a[i][j] - b[i][j]).abs()))
        .fold(0.0, f64::max)
}

/// Rotation by `angle` about `axis` (Rodrigues).
pub fn axis_rotation(axis: [f64; 3], angle: f64) -> Mat3 {
    let n = (axis.iter().map(|x| x * x).sum::<f64>()).sqrt();
    let [x, y, z] = axis.map(|c| c / n);
    let (s, c) = angle.sin_cos();
    let t = 1.0 - c;
    [
        [c + x * x * t, x * y * t - z * s, x * z * t + y * s],
        [y * x * t + z * s, c + y * y * t, y * z * t - x * s],
        [z * x * t - y * s, z * y * t + x * s, c + z * z * t],
    ]
}

/// `(p, t) ↦ (rot·p, flip·t + shift)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct S2RIsometry {
    pub rot: Mat3,
    pub shift: f64,
    pub flip: i8,
}

impl S2RIsometry {
    pub fn new(rot: Mat3, shift: f64, flip: i8) -> Result<Self> {
        if flip != 1 && flip != -1 {
            return Err(GeomError::InvalidInput("flip must be ±1".into()));
        }
        if mat3_dist(&mat3_mul(&mat3_transpose(&rot), &rot), &mat3_identity()) > ORTHO_TOL {
            return Err(GeomError::InvalidInput(
                "rotation part is not orthogonal".into(),
            ));
        }
        if !shift.is_finite() {
            return Err(GeomError::InvalidInput("shift is not finite".into()));
        }
        Ok(S2RIsometry { rot, shift, flip })
    }

    pub fn identity() -> Self {
        S2RIsometry {
            rot: mat3_identity(),
            shift: 0.0,
            flip: 1,
        }
    }

    pub fn compose(&self, o: &Self) -> Self {
        S2RIsometry {
            rot: mat3_mul(&self.rot, &o.rot),
            shift: self.flip as f64 * o.shift + self.shift,
            flip: self.flip * o.flip,
        }
    }

    pub fn inv(&self) -> Self {
        S2RIsometry {
            rot: mat3_transpose(&self.rot),
            shift: -(self.flip as f64) * self.shift,
            flip: self.flip,
        }
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inv() } else { *self };
        (0..k.unsigned_abs()).fold(Self::identity(), |acc, _| acc.compose(&base))
    }

    pub fn apply(&self, p: [f64; 3], t: f64) -> ([f64; 3], f64) {
        let q = std::array::from_fn(|i| (0..3).map(|k| self.rot[i][k] * p[k]).sum());
        (q, self.flip as f64 * t + self.shift)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", content = "lambda")]
pub enum LType {
    TrivialL,
    LambdaZ(f64),
    LambdaZSemidirectZ2(f64),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct S2RDecomposition {
    pub f_order_bound: usize,
    pub l_type: LType,
    pub has_flip: bool,
    /// Rotation parts of the zero-shift subgroup F.
    pub f_elements: Vec<Mat3>,
    /// A twisted translation `(σ, λ)` generating the translations mod F.
    pub translation: Option<S2RIsometry>,
    /// A reflection of the ℝ factor, when present.
    pub reflection: Option<S2RIsometry>,
    /// Rotation parts of the input generators.
    pub holonomy: Vec<Mat3>,
}

impl S2RDecomposition {
    pub fn lambda(&self) -> f64 {
        match self.l_type {
            LType::TrivialL => 0.0,
            LType::LambdaZ(l) | LType::LambdaZSemidirectZ2(l) => l,
        }
    }

    /// Writes `g = f · τᵐ · ρᵉ` with `f ∈ F`, if possible.
    pub fn express(&self, g: &S2RIsometry) -> Option<(usize, i64, bool)> {
        let mut h = *g;
        let uses_rho = g.flip == -1;
        if uses_rho {
            h = h.compose(&self.reflection?.inv());
        }
        let m = match self.translation {
            Some(t) => (h.shift / t.shift).round() as i64,
            None => 0,
        };
        if let Some(t) = self.translation {
            h = h.compose(&t.pow(-m));
        }
        if h.shift.abs() > EQ_TOL * (1.0 + g.shift.abs()) {
            return None;
        }
        let k = self
            .f_elements
            .iter()
            .position(|f| mat3_dist(f, &h.rot) < 1e-7)?;
        Some((k, m, uses_rho))
    }
}

pub fn s2r_decompose(gens: &[S2RIsometry]) -> Result<S2RDecomposition> {
    s2r_decompose_with(gens, DEFAULT_ROUNDS)
}

/// F, λ and a flip flag. Non-discreteness of the shifts (non-terminating Euclid, or a
/// gcd collapsing below 10⁻⁶ of the shift scale) and infinite F are reported.
pub fn s2r_decompose_with(gens: &[S2RIsometry], max_rounds: usize) -> Result<S2RDecomposition> {
    let reflection = gens.iter().find(|g| g.flip == -1).copied();
    // translation-type elements generating the translation subgroup of the image in Iso(ℝ)
    let mut pool: Vec<S2RIsometry> = gens.iter().filter(|g| g.flip == 1).copied().collect();
    if let Some(r) = reflection {
        pool.extend(
            gens.iter()
                .filter(|g| g.flip == -1)
                .map(|g| g.compose(&r.inv())),
        );
    }
    let scale = pool.iter().map(|g| g.shift.abs()).fold(0.0, f64::max);
    let tol = EQ_TOL * scale.max(1.0);
    let translation = shift_gcd(&pool, tol, scale, max_rounds)?;
    let lambda = translation.map_or(0.0, |t| t.shift);

    let reduce = |g: S2RIsometry| -> S2RIsometry {
        match translation {
            Some(t) => g.compose(&t.pow(-((g.shift / lambda).round() as i64))),
            None => g,
        }
    };
    let mut seeds: Vec<S2RIsometry> = pool.iter().map(|g| reduce(*g)).collect();
    if let Some(r) = reflection {
        seeds.push(r.compose(&r));
        if let Some(t) = translation {
            seeds.push(r.compose(&t).compose(&r.inv()).compose(&t));
        }
    }
    for s in &seeds {
        if s.shift.abs() > tol || s.flip != 1 {
            return Err(GeomError::Consistency(
                "kernel seed has nonzero shift".into(),
            ));
        }
    }
    let mut conjugators: Vec<S2RIsometry> = translation.into_iter().collect();
    conjugators.extend(reflection);
    let f = close_finite(
        seeds.iter().map(|s| s.rot).collect(),
        &conjugators.iter().map(|c| c.rot).collect::<Vec<_>>(),
    )?;

    let l_type = match (translation, reflection) {
        (None, _) => LType::TrivialL,
        (Some(_), None) => LType::LambdaZ(lambda),
        (Some(_), Some(_)) => LType::LambdaZSemidirectZ2(lambda),
    };
    Ok(S2RDecomposition {
        f_order_bound: f.len(),
        l_type,
        has_flip: reflection.is_some(),
        f_elements: f,
        translation,
        reflection,
        holonomy: gens.iter().map(|g| g.rot).collect(),
    })
}

/// Extended Euclid on shifts, carrying group elements along; returns an element whose
/// shift generates the translation subgroup.
fn shift_gcd(
    pool: &[S2RIsometry],
    tol: f64,
    scale: f64,
    max_rounds: usize,
) -> Result<Option<S2RIsometry>> {
    let mut live: Vec<S2RIsometry> = pool
        .iter()
        .filter(|g| g.shift.abs() > tol)
        .map(|g| if g.shift < 0.0 { g.inv() } else { *g })
        .collect();
    for _ in 0..max_rounds {
        live.sort_by(|a, b| a.shift.partial_cmp(&b.shift).unwrap());
        let b = match live.first() {
            Some(b) => *b,
            None => return Ok(None),
        };
        if b.shift < 1e-6 * scale {
            return Err(GeomError::NotDiscrete(format!(
                "shift gcd collapses to {:e}",
                b.shift
            )));
        }
        let mut next = vec![b];
        for a in &live[1..] {
            let q = (a.shift / b.shift).floor() as i64;
            let mut r = a.compose(&b.pow(-q));
            if r.shift > b.shift - tol {
                r = r.compose(&b.inv());
            }
            if r.shift.abs() > tol {
                next.push(if r.shift < 0.0 { r.inv() } else { r });
            }
        }
        if next.len() == 1 {
            return Ok(Some(b));
        }
        live = next;
    }
    Err(GeomError::NotDiscrete(format!(
        "shift gcd did not terminate in {max_rounds} rounds"
    )))
}

/// Closure of `seeds` under products and conjugation, as a finite subgroup of O(3).
/// Elements are only ever right-multiplied by (conjugated) seeds, so rounding grows
/// linearly in word length.
fn close_finite(seeds: Vec<Mat3>, conjugators: &[Mat3]) -> Result<Vec<Mat3>> {
    let too_big =
        || GeomError::NotDiscrete(format!("zero-shift subgroup exceeds {F_CAP} elements"));
    let known = |set: &[Mat3], m: &Mat3| set.iter().any(|e| mat3_dist(e, m) < EQ_TOL);
    let mut gens: Vec<Mat3> = Vec::new();
    let mut i = 0;
    for s in seeds {
        if !known(&gens, &s) {
            gens.push(s);
        }
    }
    while i < gens.len() {
        for c in conjugators {
            for m in [
                mat3_mul(&mat3_mul(c, &gens[i]), &mat3_transpose(c)),
                mat3_mul(&mat3_mul(&mat3_transpose(c), &gens[i]), c),
            ] {
                if !known(&gens, &m) {
                    if gens.len() >= F_CAP {
                        return Err(too_big());
                    }
                    gens.push(m);
                }
            }
        }
        i += 1;
    }
    let mut elems = vec![mat3_identity()];
    let mut i = 0;
    while i < elems.len() {
        for g in &gens {
            let m = mat3_mul(&elems[i], g);
            if !known(&elems, &m) {
                if elems.len() >= F_CAP {
                    return Err(too_big());
                }
                elems.push(m);
            }
        }
        i += 1;
    }
    Ok(elems)
}

/// Unit axis of a non-identity rotation.
fn rotation_axis(h: &Mat3) -> [f64; 3] {
    let v = [h[2][1] - h[1][2], h[0][2] - h[2][0], h[1][0] - h[0][1]];
    let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if n > 1e-6 {
        return v.map(|x| x / n);
    }
    // half-turn: columns of h + I span the axis
    let cols: Vec<[f64; 3]> = (0..3)
        .map(|j| std::array::from_fn(|i| h[i][j] + if i == j { 1.0 } else { 0.0 }))
        .collect();
    let best = cols
        .iter()
        .max_by(|a, b| norm3(a).partial_cmp(&norm3(b)).unwrap())
        .unwrap();
    best.map(|x| x / norm3(best))
}

fn norm3(v: &[f64; 3]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

/// Identity component of the centralizer in SO(3) of a set of O(3) elements.
pub fn so3_centralizer_component(hol: &[Mat3]) -> GroupTag {
    let nontrivial: Vec<Mat3> = hol
        .iter()
        .map(|g| {
            if mat3_det(g) < 0.0 {
                g.map(|r| r.map(|x| -x))
            } else {
                *g
            }
        })
        .filter(|h| mat3_dist(h, &mat3_identity()) > EQ_TOL)
        .collect();
    let Some(first) = nontrivial.first() else {
        return GroupTag::SO3;
    };
    let axis = rotation_axis(first);
    let shared = nontrivial.iter().all(|h| {
        let a = rotation_axis(h);
        (a[0] * axis[0] + a[1] * axis[1] + a[2] * axis[2]).abs() > 1.0 - 1e-8
    });
    if shared {
        GroupTag::S1
    } else {
        GroupTag::Trivial
    }
}

/// Identity component of Iso of a compact quotient: the SO(3)-centralizer times the
/// ℝ-translations when no element reverses the ℝ factor.
pub fn s2r_quotient_identity_component(d: &S2RDecomposition) -> Result<GroupTag> {
    if d.translation.is_none() {
        return Err(GeomError::InvalidInput(
            "quotient is not compact: no translation in the ℝ factor".into(),
        ));
    }
    let rot = so3_centralizer_component(&d.holonomy);
    Ok(match (rot, d.has_flip) {
        (GroupTag::SO3, false) => GroupTag::SO3xS1,
        (GroupTag::S1, false) => GroupTag::S1xS1,
        (_, false) => GroupTag::S1,
        (r, true) => r,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iso(rot: Mat3, shift: f64, flip: i8) -> S2RIsometry {
        S2RIsometry::new(rot, shift, flip).unwrap()
    }

    fn irrational() -> Mat3 {
        axis_rotation([0.0, 0.0, 1.0], 2f64.sqrt())
    }

    #[test]
    fn examples() {
        let d = s2r_decompose(&[iso(irrational(), 1.0, 1)]).unwrap();
        assert_eq!((d.f_order_bound, d.l_type), (1, LType::LambdaZ(1.0)));
        assert_eq!(
            s2r_quotient_identity_component(&d).unwrap(),
            GroupTag::S1xS1
        );

        let rho = axis_rotation([1.0, 0.0, 0.0], std::f64::consts::PI);
        let d = s2r_decompose(&[iso(mat3_identity(), 1.0, 1), iso(rho, 0.0, 1)]).unwrap();
        assert_eq!((d.f_order_bound, d.l_type), (2, LType::LambdaZ(1.0)));

        let d =
            s2r_decompose(&[iso(mat3_identity(), 1.0, 1), iso(mat3_identity(), 0.0, -1)]).unwrap();
        assert_eq!(d.l_type, LType::LambdaZSemidirectZ2(1.0));
        assert!(d.has_flip);
    }

    #[test]
    fn gcd_of_commensurable_shifts() {
        let d =
            s2r_decompose(&[iso(mat3_identity(), 0.6, 1), iso(mat3_identity(), 1.0, 1)]).unwrap();
        assert!((d.lambda() - 0.2).abs() < 1e-12);
        let err = s2r_decompose(&[
            iso(mat3_identity(), 1.0, 1),
            iso(mat3_identity(), 2f64.sqrt(), 1),
        ]);
        assert!(matches!(err, Err(GeomError::NotDiscrete(_))));
    }

    #[test]
    fn identity_components() {
        let d = s2r_decompose(&[iso(mat3_identity(), 1.0, 1)]).unwrap();
        assert_eq!(
            s2r_quotient_identity_component(&d).unwrap(),
            GroupTag::SO3xS1
        );
        let minus: Mat3 = mat3_identity().map(|r| r.map(|x| -x));
        let d = s2r_decompose(&[iso(minus, 1.0, 1)]).unwrap();
        assert_eq!(
            s2r_quotient_identity_component(&d).unwrap(),
            GroupTag::SO3xS1
        );
        // RP³ # RP³
        let d = s2r_decompose(&[iso(minus, 0.0, -1), iso(minus, 1.0, -1)]).unwrap();
        assert_eq!(s2r_quotient_identity_component(&d).unwrap(), GroupTag::SO3);
        let no_l = s2r_decompose(&[iso(minus, 0.0, 1)]).unwrap();
        assert!(s2r_quotient_identity_component(&no_l).is_err());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(
            S2RIsometry::new([[1.0, 0.1, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]], 0.0, 1).is_err()
        );
        assert!(S2RIsometry::new(mat3_identity(), 0.0, 2).is_err());
        let irr = iso(irrational(), 0.0, 1);
        assert!(matches!(
            s2r_decompose(&[irr, iso(mat3_identity(), 1.0, 1)]),
            Err(GeomError::NotDiscrete(_))
        ));
    }
}
