//! Lattices in H_ℝ: generated by (u, r), (v, s) and the central (0, 0, λ/n).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::heis::{common_field, conjugate, mul, HeisPoint};
use crate::algebra::QuadRat;
use crate::error::{GeomError, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilLattice {
    pub u: [QuadRat; 2],
    pub v: [QuadRat; 2],
    pub r: QuadRat,
    pub s: QuadRat,
    pub n: u64,
    pub lambda: QuadRat,
}

/// Canonical JSON shape; scalars are rendered as `a + b√d` strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NilLatticeJson {
    pub u: [String; 2],
    pub v: [String; 2],
    pub r: String,
    pub s: String,
    pub n: u64,
    pub lambda: String,
}

fn q(s: &str) -> QuadRat {
    s.parse().expect("literal")
}

pub fn nil_lattice_make(
    u: [QuadRat; 2],
    v: [QuadRat; 2],
    r: QuadRat,
    s: QuadRat,
    n: u64,
) -> Result<NilLattice> {
    common_field(u.iter().chain(&v).chain([&r, &s]))?;
    if n == 0 {
        return Err(GeomError::InvalidInput(
            "n must be a positive integer".into(),
        ));
    }
    let lambda = &(&u[0] * &v[1]) - &(&u[1] * &v[0]);
    if lambda.is_zero() {
        return Err(GeomError::InvalidInput(
            "u and v are linearly dependent".into(),
        ));
    }
    Ok(NilLattice {
        u,
        v,
        r,
        s,
        n,
        lambda,
    })
}

impl NilLattice {
    /// H_ℤ.
    pub fn square() -> Self {
        Self::square_p(1)
    }

    /// G_p: the square lattice with centre (0,0,1/p).
    pub fn square_p(p: u64) -> Self {
        nil_lattice_make([q("1"), q("0")], [q("0"), q("1")], q("0"), q("0"), p).unwrap()
    }

    /// L_p: u = (1,0), v = (1/2, √3/2), centre √3/(2p).
    pub fn hexagonal_p(p: u64) -> Self {
        nil_lattice_make(
            [q("1"), q("0")],
            [q("1/2"), q("(1/2)√3")],
            q("0"),
            q("0"),
            p,
        )
        .unwrap()
    }

    /// Presets accepted on the command line: `HZ`, `Gp:<p>`, `hex:<p>`.
    pub fn preset(name: &str) -> Result<Self> {
        let bad = || GeomError::InvalidInput(format!("unknown lattice preset '{name}'"));
        let parse_p = |s: &str| -> Result<u64> {
            let p: u64 = s.parse().map_err(|_| bad())?;
            if p == 0 {
                return Err(bad());
            }
            Ok(p)
        };
        match name.split_once(':') {
            None if name == "HZ" => Ok(Self::square()),
            Some(("Gp", p)) => Ok(Self::square_p(parse_p(p)?)),
            Some(("hex", p)) => Ok(Self::hexagonal_p(parse_p(p)?)),
            _ => Err(bad()),
        }
    }

    pub fn to_json(&self) -> NilLatticeJson {
        NilLatticeJson {
            u: [self.u[0].to_string(), self.u[1].to_string()],
            v: [self.v[0].to_string(), self.v[1].to_string()],
            r: self.r.to_string(),
            s: self.s.to_string(),
            n: self.n,
            lambda: self.lambda.to_string(),
        }
    }

    /// Rebuilds from JSON; a supplied `lambda` must agree with `u × v`.
    pub fn from_json(j: &NilLatticeJson) -> Result<Self> {
        let p = |s: &String| s.parse::<QuadRat>();
        let l = nil_lattice_make(
            [p(&j.u[0])?, p(&j.u[1])?],
            [p(&j.v[0])?, p(&j.v[1])?],
            p(&j.r)?,
            p(&j.s)?,
            j.n,
        )?;
        if p(&j.lambda)? != l.lambda {
            return Err(GeomError::InvalidInput(format!(
                "lambda {} disagrees with u₁v₂ − u₂v₁ = {}",
                j.lambda, l.lambda
            )));
        }
        Ok(l)
    }

    pub fn generators(&self) -> [HeisPoint; 3] {
        [
            HeisPoint {
                x: self.u[0].clone(),
                y: self.u[1].clone(),
                z: self.r.clone(),
            },
            HeisPoint {
                x: self.v[0].clone(),
                y: self.v[1].clone(),
                z: self.s.clone(),
            },
            HeisPoint::central(self.center_gen()),
        ]
    }

    /// λ/n, the positive generator of Γ ∩ Z(H_ℝ) (up to sign of λ).
    pub fn center_gen(&self) -> QuadRat {
        &self.lambda / &QuadRat::int(self.n as i64)
    }

    /// Coordinates `(α, β)` with `(x, y) = α u + β v`.
    pub fn plane_coords(&self, x: &QuadRat, y: &QuadRat) -> (QuadRat, QuadRat) {
        let [u1, u2] = &self.u;
        let [v1, v2] = &self.v;
        let a = &(&(x * v2) - &(y * v1)) / &self.lambda;
        let b = &(&(u1 * y) - &(u2 * x)) / &self.lambda;
        (a, b)
    }

    /// z-coordinate of `(u, r)^a (v, s)^b`.
    pub fn z_ab(&self, a: &BigInt, b: &BigInt) -> QuadRat {
        let gen = self.generators();
        let pa = gen[0].pow(int64(a));
        let pb = gen[1].pow(int64(b));
        mul(&pa, &pb).z
    }

    /// `(u, r)^a (v, s)^b`.
    pub fn word(&self, a: &BigInt, b: &BigInt) -> HeisPoint {
        let gen = self.generators();
        mul(&gen[0].pow(int64(a)), &gen[1].pow(int64(b)))
    }

    /// Exact membership: integer plane coordinates and a z-offset in (λ/n)ℤ.
    pub fn contains(&self, h: &HeisPoint) -> bool {
        let (a, b) = self.plane_coords(&h.x, &h.y);
        let (Some(a), Some(b)) = (a.as_integer(), b.as_integer()) else {
            return false;
        };
        let dz = &h.z - &self.z_ab(&a, &b);
        (&dz / &self.center_gen()).as_integer().is_some()
    }
}

fn int64(k: &BigInt) -> i64 {
    use num_traits::ToPrimitive;
    k.to_i64().expect("lattice word exponent fits in i64")
}

/// Λ-part of the normalizer: translations `(k/n)u + (l/n)v`, with all of ℝ in z.
#[derive(Clone, Debug, PartialEq)]
pub struct NilNormalizer {
    /// Generators `u/n` and `v/n` of the planar part (taken with z = 0).
    pub planar_basis: [[QuadRat; 2]; 2],
    /// Index of the lattice's planar projection in the normalizer's.
    pub index: u64,
    /// The continuous factor is the full centre {(0,0,t)}: the z-axis.
    pub continuous_axis: [i64; 3],
}

pub fn nil_normalizer(l: &NilLattice) -> Result<NilNormalizer> {
    let k = QuadRat::int(l.n as i64);
    let basis = [[&l.u[0] / &k, &l.u[1] / &k], [&l.v[0] / &k, &l.v[1] / &k]];
    let out = NilNormalizer {
        planar_basis: basis,
        index: l.n * l.n,
        continuous_axis: [0, 0, 1],
    };
    // closure: every generator conjugates lattice generators back into the lattice
    for t in normalizer_generators(&out) {
        for g in l.generators() {
            if !l.contains(&conjugate(&t, &g)) || !l.contains(&conjugate(&t.inv(), &g)) {
                return Err(GeomError::Consistency(format!(
                    "{t} does not normalize the lattice"
                )));
            }
        }
    }
    Ok(out)
}

/// Representative generators of the normalizer: the two planar translations
/// and a sample of the central line.
pub fn normalizer_generators(nm: &NilNormalizer) -> Vec<HeisPoint> {
    let [a, b] = &nm.planar_basis;
    vec![
        HeisPoint {
            x: a[0].clone(),
            y: a[1].clone(),
            z: QuadRat::zero(),
        },
        HeisPoint {
            x: b[0].clone(),
            y: b[1].clone(),
            z: QuadRat::zero(),
        },
        HeisPoint::central(QuadRat::rational(BigRational::new(
            BigInt::one(),
            BigInt::from(7),
        ))),
    ]
}
