//! Sasaki metric on Tℍ² ≅ ℍ² × ℂ and the embedding PSL₂(ℝ) → T¹ℍ².

use num_complex::Complex64;
use serde::{Serialize, Serializer};

use crate::error::{GeomError, Result};
use crate::hyperbolic::{sl2_exp, MobiusMap};

/// A tangent vector `(X, Z)` to Tℍ² at the base point `(z, w)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TangentVector {
    pub z: Complex64,
    pub w: Complex64,
    /// Horizontal displacement of the base point.
    pub x: Complex64,
    /// Fiber velocity.
    pub zv: Complex64,
}

impl TangentVector {
    pub fn new(z: Complex64, w: Complex64, x: Complex64, zv: Complex64) -> Result<Self> {
        if !(z.im > 0.0) {
            return Err(GeomError::InvalidInput(format!(
                "base point {z} is not in ℍ²"
            )));
        }
        Ok(TangentVector { z, w, x, zv })
    }

    /// At the base point `(i, 1)`.
    pub fn at_identity(x: Complex64, zv: Complex64) -> Self {
        TangentVector {
            z: Complex64::i(),
            w: Complex64::new(1.0, 0.0),
            x,
            zv,
        }
    }

    fn with(&self, x: Complex64, zv: Complex64) -> Self {
        TangentVector { x, zv, ..*self }
    }
}

impl Serialize for TangentVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            z: [f64; 2],
            w: [f64; 2],
            #[serde(rename = "X")]
            x: [f64; 2],
            #[serde(rename = "Z")]
            zv: [f64; 2],
        }
        let p = |c: Complex64| [c.re, c.im];
        Repr {
            z: p(self.z),
            w: p(self.w),
            x: p(self.x),
            zv: p(self.zv),
        }
        .serialize(s)
    }
}

/// Christoffel symbol `Γᵏᵢⱼ` of `(dx² + dy²)/y²` at `p`, indices in `{1, 2}`.
pub fn christoffel_h2(p: Complex64, i: u8, j: u8, k: u8) -> Result<f64> {
    if !(p.im > 0.0) {
        return Err(GeomError::InvalidInput(format!("{p} is not in ℍ²")));
    }
    if ![i, j, k].iter().all(|n| (1..=2).contains(n)) {
        return Err(GeomError::InvalidInput("indices must be 1 or 2".into()));
    }
    let y = p.im;
    Ok(match (k, i, j) {
        (2, 1, 1) => 1.0 / y,
        (2, 2, 2) | (1, 1, 2) | (1, 2, 1) => -1.0 / y,
        _ => 0.0,
    })
}

fn comps(c: Complex64) -> [f64; 2] {
    [c.re, c.im]
}

/// `Xʲ vⁱ Γᵏᵢⱼ ∂ₖ` with `v = w`.
pub fn connection_term(z: Complex64, w: Complex64, x: Complex64) -> Complex64 {
    let (xv, vv) = (comps(x), comps(w));
    let mut out = [0.0; 2];
    for (k, o) in out.iter_mut().enumerate() {
        for i in 0..2 {
            for j in 0..2 {
                *o += xv[j]
                    * vv[i]
                    * christoffel_h2(z, i as u8 + 1, j as u8 + 1, k as u8 + 1).unwrap();
            }
        }
    }
    Complex64::new(out[0], out[1])
}

/// Hyperbolic inner product of two vectors at `z`.
fn h2_inner(z: Complex64, a: Complex64, b: Complex64) -> f64 {
    (a * b.conj()).re / (z.im * z.im)
}

pub fn sasaki_inner(s: &TangentVector, t: &TangentVector) -> Result<f64> {
    if s.z != t.z || s.w != t.w {
        return Err(GeomError::InvalidInput(
            "vectors have different base points".into(),
        ));
    }
    let vs = s.zv + connection_term(s.z, s.w, s.x);
    let vt = t.zv + connection_term(t.z, t.w, t.x);
    Ok(h2_inner(s.z, s.x, t.x) + h2_inner(s.z, vs, vt))
}

pub fn sasaki_norm(t: &TangentVector) -> f64 {
    sasaki_inner(t, t).unwrap().sqrt()
}

/// `(X, Z) = (X, −conn(X)) + (0, Z + conn(X))`.
pub fn hv_decompose(t: &TangentVector) -> (TangentVector, TangentVector) {
    let c = connection_term(t.z, t.w, t.x);
    (t.with(t.x, -c), t.with(Complex64::new(0.0, 0.0), t.zv + c))
}

/// `φ(m) = ((ai + b)/(ci + d), 1/(ci + d)²)`.
pub fn unit_tangent_embed(m: &MobiusMap) -> (Complex64, Complex64) {
    let i = Complex64::i();
    let den = m.c * i + m.d;
    ((m.a * i + m.b) / den, 1.0 / (den * den))
}

/// Derivative action `(z, w) ↦ ((az + b)/(cz + d), w/(cz + d)²)`.
pub fn tangent_action(m: &MobiusMap, z: Complex64, w: Complex64) -> (Complex64, Complex64) {
    let den = m.c * z + m.d;
    ((m.a * z + m.b) / den, w / (den * den))
}

/// `‖w‖_z`.
pub fn h2_norm(z: Complex64, w: Complex64) -> f64 {
    w.norm() / z.im
}

/// `X₁ = diag(1, −1)`, `X₂` the rotation generator, `X₃` the symmetric one.
pub fn sl2_basis() -> [[[f64; 2]; 2]; 3] {
    [
        [[1.0, 0.0], [0.0, -1.0]],
        [[0.0, 1.0], [-1.0, 0.0]],
        [[0.0, 1.0], [1.0, 0.0]],
    ]
}

/// Central-difference step for the frame.
pub const FRAME_STEP: f64 = 1e-6;

fn displayed_frame() -> [(Complex64, Complex64); 3] {
    let c = Complex64::new;
    [
        (c(0.0, 2.0), c(2.0, 0.0)),
        (c(0.0, 0.0), c(0.0, 2.0)),
        (c(2.0, 0.0), c(0.0, -2.0)),
    ]
}

/// Images of the basis at `(i, 1)`, differentiated numerically and checked against the closed form.
pub fn frame_at_identity() -> Result<[TangentVector; 3]> {
    let basis = sl2_basis();
    let expected = displayed_frame();
    let mut out =
        [TangentVector::at_identity(Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0)); 3];
    for (k, x) in basis.iter().enumerate() {
        let at = |t: f64| {
            let m = MobiusMap::from_matrix(sl2_exp(x.map(|r| r.map(|e| e * t)))).unwrap();
            unit_tangent_embed(&m)
        };
        let (p, q) = (at(FRAME_STEP), at(-FRAME_STEP));
        let dx = (p.0 - q.0) / (2.0 * FRAME_STEP);
        let dz = (p.1 - q.1) / (2.0 * FRAME_STEP);
        let (ex, ez) = expected[k];
        if (dx - ex).norm() > 1e-5 || (dz - ez).norm() > 1e-5 {
            return Err(GeomError::Consistency(format!(
                "frame vector {} is ({dx}, {dz})",
                k + 1
            )));
        }
        out[k] = TangentVector::at_identity(dx, dz);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn christoffel_examples() {
        assert_eq!(christoffel_h2(c(0.0, 1.0), 1, 2, 1).unwrap(), -1.0);
        assert_eq!(christoffel_h2(c(0.0, 2.0), 1, 1, 2).unwrap(), 0.5);
        assert_eq!(christoffel_h2(c(0.0, 2.0), 1, 1, 1).unwrap(), 0.0);
        assert_eq!(christoffel_h2(c(3.0, 2.0), 2, 2, 2).unwrap(), -0.5);
        assert!(christoffel_h2(c(0.0, -1.0), 1, 1, 1).is_err());
        assert!(christoffel_h2(c(0.0, 1.0), 0, 1, 1).is_err());
    }

    #[test]
    fn norm_examples() {
        assert!(
            (sasaki_norm(&TangentVector::at_identity(c(0.0, 0.0), c(0.0, 2.0))) - 2.0).abs()
                < 1e-15
        );
        assert_eq!(
            sasaki_norm(&TangentVector::at_identity(c(0.0, 0.0), c(0.0, 0.0))),
            0.0
        );
        let a = TangentVector::at_identity(c(0.0, 2.0), c(2.0, 0.0));
        let b = TangentVector::at_identity(c(2.0, 0.0), c(0.0, -2.0));
        assert!(sasaki_inner(&a, &b).unwrap().abs() < 1e-15);
        assert!((sasaki_norm(&a) - sasaki_norm(&b)).abs() < 1e-15);
    }

    #[test]
    fn split_matches_display_at_identity() {
        let (h, v) = hv_decompose(&TangentVector::at_identity(c(0.0, 2.0), c(2.0, 0.0)));
        assert_eq!(v.zv, c(0.0, 0.0));
        assert_eq!(h.zv, c(2.0, 0.0));
        let (h, _) = hv_decompose(&TangentVector::at_identity(c(0.0, 0.0), c(0.0, 2.0)));
        assert_eq!((h.x, h.zv), (c(0.0, 0.0), c(0.0, 0.0)));
        // the closed form (0, Z − X² + X¹i) + (X, X² − X¹i)
        let (x, z) = (c(0.7, -1.3), c(0.2, 0.5));
        let (h, v) = hv_decompose(&TangentVector::at_identity(x, z));
        assert!((v.zv - (z - x.im + x.re * Complex64::i())).norm() < 1e-15);
        assert!((h.zv - (x.im - x.re * Complex64::i())).norm() < 1e-15);
    }

    #[test]
    fn embed_examples() {
        let (z, w) = unit_tangent_embed(&MobiusMap::identity());
        assert_eq!((z, w), (c(0.0, 1.0), c(1.0, 0.0)));
        let t = 0.37f64;
        let (z, w) = unit_tangent_embed(&MobiusMap::diag(t.exp()));
        assert!(
            (z - c(0.0, (2.0 * t).exp())).norm() < 1e-12 && (w - (2.0 * t).exp()).norm() < 1e-12
        );
        let (z, w) = unit_tangent_embed(&MobiusMap::rotation(2.0 * t));
        assert!((z - c(0.0, 1.0)).norm() < 1e-12 && (w - c(0.0, 2.0 * t).exp()).norm() < 1e-12);
    }

    #[test]
    fn frame() {
        let f = frame_at_identity().unwrap();
        let e = displayed_frame();
        for k in 0..3 {
            assert!((f[k].x - e[k].0).norm() < 1e-5 && (f[k].zv - e[k].1).norm() < 1e-5);
        }
    }

    #[test]
    fn serializes_with_pairs() {
        let v = serde_json::to_value(TangentVector::at_identity(c(1.0, 2.0), c(3.0, 4.0))).unwrap();
        assert_eq!(
            v,
            serde_json::json!({"z": [0.0, 1.0], "w": [1.0, 0.0], "X": [1.0, 2.0], "Z": [3.0, 4.0]})
        );
    }
}
