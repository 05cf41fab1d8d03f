//! The Heisenberg group H_ℝ in global coordinates: (x,y,z) is the matrix
//! with rows (1,x,z), (0,1,y), (0,0,1).

use std::fmt;

use num_traits::Zero;

use crate::algebra::QuadRat;
use crate::error::{GeomError, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HeisPoint {
    pub x: QuadRat,
    pub y: QuadRat,
    pub z: QuadRat,
}

/// The irrational field shared by a collection of scalars, if any.
pub fn common_field<'a>(xs: impl IntoIterator<Item = &'a QuadRat>) -> Result<Option<u64>> {
    let mut d = None;
    for x in xs {
        if x.is_rational() {
            continue;
        }
        match d {
            None => d = Some(x.d()),
            Some(e) if e != x.d() => return Err(GeomError::FieldMismatch(e, x.d())),
            _ => {}
        }
    }
    Ok(d)
}

impl HeisPoint {
    pub fn new(x: QuadRat, y: QuadRat, z: QuadRat) -> Result<Self> {
        common_field([&x, &y, &z])?;
        Ok(HeisPoint { x, y, z })
    }

    pub fn ints(x: i64, y: i64, z: i64) -> Self {
        HeisPoint {
            x: x.into(),
            y: y.into(),
            z: z.into(),
        }
    }

    pub fn identity() -> Self {
        Self::ints(0, 0, 0)
    }

    pub fn central(z: QuadRat) -> Self {
        HeisPoint {
            x: QuadRat::zero(),
            y: QuadRat::zero(),
            z,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn is_central(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn scalars(&self) -> [&QuadRat; 3] {
        [&self.x, &self.y, &self.z]
    }

    pub fn inv(&self) -> Self {
        HeisPoint {
            x: -&self.x,
            y: -&self.y,
            z: &(&self.x * &self.y) - &self.z,
        }
    }

    /// `g^k` for any integer `k`: `(kx, ky, kz + C(k,2)·xy)`.
    pub fn pow(&self, k: i64) -> Self {
        let kq = QuadRat::int(k);
        let c2 = QuadRat::frac(k * (k - 1), 2);
        HeisPoint {
            x: &kq * &self.x,
            y: &kq * &self.y,
            z: &(&kq * &self.z) + &(&c2 * &(&self.x * &self.y)),
        }
    }
}

impl fmt::Display for HeisPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

/// `(x,y,z)·(u,v,w) = (x+u, y+v, z+w+xv)`.
pub fn heis_mul(g: &HeisPoint, h: &HeisPoint) -> Result<HeisPoint> {
    common_field(g.scalars().into_iter().chain(h.scalars()))?;
    Ok(mul(g, h))
}

pub(crate) fn mul(g: &HeisPoint, h: &HeisPoint) -> HeisPoint {
    HeisPoint {
        x: &g.x + &h.x,
        y: &g.y + &h.y,
        z: &(&g.z + &h.z) + &(&g.x * &h.y),
    }
}

/// `[g,h] = g h g⁻¹ h⁻¹ = (0, 0, xv − uy)`.
pub fn heis_commutator(g: &HeisPoint, h: &HeisPoint) -> Result<HeisPoint> {
    common_field(g.scalars().into_iter().chain(h.scalars()))?;
    Ok(HeisPoint::central(cross(&g.x, &g.y, &h.x, &h.y)))
}

pub(crate) fn cross(x: &QuadRat, y: &QuadRat, u: &QuadRat, v: &QuadRat) -> QuadRat {
    &(x * v) - &(u * y)
}

/// `g t g⁻¹ = (t₁, t₂, t₃ + x t₂ − y t₁)`.
pub fn heis_conjugate(g: &HeisPoint, t: &HeisPoint) -> Result<HeisPoint> {
    common_field(g.scalars().into_iter().chain(t.scalars()))?;
    Ok(conjugate(g, t))
}

pub(crate) fn conjugate(g: &HeisPoint, t: &HeisPoint) -> HeisPoint {
    HeisPoint {
        x: t.x.clone(),
        y: t.y.clone(),
        z: &t.z + &cross(&g.x, &g.y, &t.x, &t.y),
    }
}
