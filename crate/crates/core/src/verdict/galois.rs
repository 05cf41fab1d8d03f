//! The Galois twist `g ↦ (g, σ(g))` for `SO(x² + y² − √2 z² − √2 w²)` over ℚ(√2).

use serde::Serialize;

use num_traits::{One, Zero};

use crate::algebra::QuadRat;
use crate::error::{GeomError, Result};

pub type Mat4 = [[QuadRat; 4]; 4];

fn mul4(a: &Mat4, b: &Mat4) -> Mat4 {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            (0..4).fold(QuadRat::zero(), |acc, k| &acc + &(&a[i][k] * &b[k][j]))
        })
    })
}

fn transpose4(a: &Mat4) -> Mat4 {
    std::array::from_fn(|i| std::array::from_fn(|j| a[j][i].clone()))
}

pub fn sigma4(a: &Mat4) -> Mat4 {
    a.clone().map(|r| r.map(|x| x.conj()))
}

pub fn identity4() -> Mat4 {
    std::array::from_fn(|i| std::array::from_fn(|j| QuadRat::int((i == j) as i64)))
}

fn sqrt2() -> QuadRat {
    QuadRat::from_ints(0, 1, 2).unwrap()
}

/// `diag(1, 1, −√2, −√2)`.
pub fn twist_form() -> Mat4 {
    let mut q = identity4();
    q[2][2] = -sqrt2();
    q[3][3] = -sqrt2();
    q
}

fn preserves(g: &Mat4, q: &Mat4) -> bool {
    &mul4(&mul4(&transpose4(g), q), g) == q
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GaloisTwist {
    #[serde(serialize_with = "ser4")]
    pub g: Mat4,
    #[serde(serialize_with = "ser4")]
    pub sigma_g: Mat4,
    /// `gᵀ Q g = Q`.
    pub preserves_q: bool,
    /// `σ(g)ᵀ σ(Q) σ(g) = σ(Q)`, with σ(Q) positive definite.
    pub sigma_preserves_sigma_q: bool,
}

fn ser4<S: serde::Serializer>(m: &Mat4, s: S) -> std::result::Result<S::Ok, S::Error> {
    let rows: Vec<Vec<String>> = m
        .iter()
        .map(|r| r.iter().map(|x| x.to_string()).collect())
        .collect();
    rows.serialize(s)
}

pub fn galois_twist_pair(g: &Mat4) -> Result<GaloisTwist> {
    if let Some(x) = g.iter().flatten().find(|x| !x.is_rational() && x.d() != 2) {
        return Err(GeomError::FieldMismatch(x.d(), 2));
    }
    let q = twist_form();
    let sg = sigma4(g);
    Ok(GaloisTwist {
        preserves_q: preserves(g, &q),
        sigma_preserves_sigma_q: preserves(&sg, &sigma4(&q)),
        g: g.clone(),
        sigma_g: sg,
    })
}

/// Smallest `(a, b)` with integer coordinates in ℚ(√2), `b ≠ 0`, and `a² − √2 b² = 1`.
pub fn find_form_unit(bound: i64) -> Option<(QuadRat, QuadRat)> {
    let mut best: Option<(i64, QuadRat, QuadRat)> = None;
    let one = QuadRat::one();
    for a0 in -bound..=bound {
        for a1 in -bound..=bound {
            for b0 in -bound..=bound {
                for b1 in -bound..=bound {
                    if b0 == 0 && b1 == 0 {
                        continue;
                    }
                    let size = a0.abs() + a1.abs() + b0.abs() + b1.abs();
                    if best.as_ref().is_some_and(|(s, _, _)| *s <= size) {
                        continue;
                    }
                    let a = QuadRat::from_ints(a0, a1, 2).unwrap();
                    let b = QuadRat::from_ints(b0, b1, 2).unwrap();
                    if &(&a * &a) - &(&sqrt2() * &(&b * &b)) == one {
                        best = Some((size, a, b));
                    }
                }
            }
        }
    }
    best.map(|(_, a, b)| (a, b))
}

/// The hyperbolic rotation `[[a, √2 b], [b, a]]` in the (x, z)-plane.
pub fn form_boost(a: &QuadRat, b: &QuadRat) -> Mat4 {
    let mut g = identity4();
    g[0][0] = a.clone();
    g[0][2] = &sqrt2() * b;
    g[2][0] = b.clone();
    g[2][2] = a.clone();
    g
}
