//! Isometries of Nil: H_ℝ ⋊ O(2), restricted to crystallographic rotations.

use std::fmt;

use num_traits::{One, Zero};

use super::heis::{common_field, mul, HeisPoint};
use crate::algebra::{QuadMat2, QuadRat};
use crate::error::{GeomError, Result};

/// Finite-order orthogonal map of the plane with exact entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlanarOrth(QuadMat2);

impl PlanarOrth {
    pub fn new(m: QuadMat2) -> Result<Self> {
        common_field(m.m.iter().flatten())?;
        if &m.transpose() * &m != QuadMat2::identity() {
            return Err(GeomError::InvalidInput(format!("{m} is not orthogonal")));
        }
        let o = PlanarOrth(m);
        if o.det() == 1 && !matches!(o.order(), Some(1 | 2 | 3 | 4 | 6)) {
            return Err(GeomError::InvalidInput(format!(
                "rotation {} does not have order 1, 2, 3, 4 or 6",
                o.0
            )));
        }
        Ok(o)
    }

    pub fn identity() -> Self {
        PlanarOrth(QuadMat2::identity())
    }

    /// Rotation by `k·π/2`.
    pub fn quarter_turn(k: i64) -> Self {
        let (c, s) = [(1, 0), (0, 1), (-1, 0), (0, -1)][k.rem_euclid(4) as usize];
        PlanarOrth(QuadMat2::new(c.into(), (-s).into(), s.into(), c.into()))
    }

    /// Rotation by `k·π/3` (entries in ℚ(√3)).
    pub fn sixth_turn(k: i64) -> Self {
        let h = QuadRat::frac(1, 2);
        let r = "(1/2)√3".parse::<QuadRat>().unwrap();
        let (c, s) = match k.rem_euclid(6) {
            0 => (QuadRat::one(), QuadRat::zero()),
            1 => (h.clone(), r.clone()),
            2 => (-&h, r.clone()),
            3 => (-QuadRat::one(), QuadRat::zero()),
            4 => (-&h, -&r),
            _ => (h.clone(), -&r),
        };
        PlanarOrth(QuadMat2::new(c.clone(), -&s, s, c))
    }

    /// The reflection `R(x, y) = (x, −y)`.
    pub fn reflection() -> Self {
        PlanarOrth(QuadMat2::diag(QuadRat::one(), -QuadRat::one()))
    }

    pub fn matrix(&self) -> &QuadMat2 {
        &self.0
    }

    pub fn det(&self) -> i32 {
        self.0.det().signum_i()
    }

    pub fn compose(&self, o: &Self) -> Self {
        PlanarOrth(&self.0 * &o.0)
    }

    pub fn inv(&self) -> Self {
        PlanarOrth(self.0.transpose())
    }

    /// Order if ≤ 12.
    pub fn order(&self) -> Option<u32> {
        let mut p = self.0.clone();
        for k in 1..=12 {
            if p.is_identity() {
                return Some(k);
            }
            p = &p * &self.0;
        }
        None
    }

    pub fn apply(&self, x: &QuadRat, y: &QuadRat) -> (QuadRat, QuadRat) {
        let [[a, b], [c, d]] = &self.0.m;
        (&(a * x) + &(b * y), &(c * x) + &(d * y))
    }
}

impl fmt::Display for PlanarOrth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The automorphism of H_ℝ covering `ρ ∈ O(2)`:
/// `m_ρ(x,y,z) = (ρ(x,y), det ρ·(z − xy/2) + XY/2)` with `(X,Y) = ρ(x,y)`.
///
/// This is the unique lift that fixes the symmetric coordinate `z − xy/2`
/// up to orientation; it gives `m_{π/2}(n,m,p) = (−m, n, p − nm)` and
/// `R(x,y,z) = (x, −y, −z)`.
pub fn twist(rho: &PlanarOrth, p: &HeisPoint) -> HeisPoint {
    let (x2, y2) = rho.apply(&p.x, &p.y);
    let half = QuadRat::frac(1, 2);
    let sym = &p.z - &(&half * &(&p.x * &p.y));
    let sym = if rho.det() < 0 { -sym } else { sym };
    let z2 = &sym + &(&half * &(&x2 * &y2));
    HeisPoint {
        x: x2,
        y: y2,
        z: z2,
    }
}

/// `m_ρ ∘ L_trans`, acting by `h ↦ m_ρ(trans · h)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HeisIsometry {
    pub rot: PlanarOrth,
    pub trans: HeisPoint,
}

impl HeisIsometry {
    pub fn new(rot: PlanarOrth, trans: HeisPoint) -> Result<Self> {
        common_field(rot.0.m.iter().flatten().chain(trans.scalars()))?;
        Ok(HeisIsometry { rot, trans })
    }

    pub fn translation(g: HeisPoint) -> Self {
        HeisIsometry {
            rot: PlanarOrth::identity(),
            trans: g,
        }
    }

    pub fn rotation(rot: PlanarOrth) -> Self {
        HeisIsometry {
            rot,
            trans: HeisPoint::identity(),
        }
    }

    pub fn identity() -> Self {
        Self::translation(HeisPoint::identity())
    }

    pub fn apply(&self, h: &HeisPoint) -> HeisPoint {
        twist(&self.rot, &mul(&self.trans, h))
    }

    /// `self ∘ o`: `(m_ρ L_g)(m_σ L_h) = m_{ρσ} L_{m_σ⁻¹(g)·h}`.
    pub fn compose(&self, o: &Self) -> Self {
        let g = twist(&o.rot.inv(), &self.trans);
        HeisIsometry {
            rot: self.rot.compose(&o.rot),
            trans: mul(&g, &o.trans),
        }
    }

    pub fn inv(&self) -> Self {
        HeisIsometry {
            rot: self.rot.inv(),
            trans: twist(&self.rot, &self.trans.inv()),
        }
    }

    pub fn conjugate(&self, o: &Self) -> Self {
        self.compose(o).compose(&self.inv())
    }

    pub fn is_identity(&self) -> bool {
        self.rot == PlanarOrth::identity() && self.trans.is_identity()
    }

    /// A non-trivial central translation `L_{(0,0,c)}`, `c ≠ 0`.
    pub fn is_nontrivial_central(&self) -> bool {
        self.rot == PlanarOrth::identity() && self.trans.is_central() && !self.trans.z.is_zero()
    }

    /// The induced planar isometry `p ↦ ρ p + b`.
    pub fn projection(&self) -> (PlanarOrth, (QuadRat, QuadRat)) {
        let b = self.rot.apply(&self.trans.x, &self.trans.y);
        (self.rot.clone(), b)
    }
}

impl fmt::Display for HeisIsometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rot == PlanarOrth::identity() {
            write!(f, "L{}", self.trans)
        } else {
            write!(f, "m{}∘L{}", self.rot, self.trans)
        }
    }
}
