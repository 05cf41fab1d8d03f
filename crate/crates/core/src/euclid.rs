//! Flat quotients: translation rank, volume, and the Betti-number torus.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::algebra::{smith_general, QuadMat2, QuadRat};
use crate::error::{GeomError, Result};
use crate::iso::{FinitePart, Geometry, GroupTag, IsoDescriptor};
use crate::nil::planar_point_group;

pub type RatVec = Vec<BigRational>;
pub type RatMat = Vec<Vec<BigRational>>;

/// `Γ = L ⋊ P` with optional translation parts for the point generators.
#[derive(Clone, Debug, PartialEq)]
pub struct CrystalGroup {
    pub dim: usize,
    pub point_gens: Vec<RatMat>,
    /// Basis vectors of the translation lattice.
    pub lattice: Vec<RatVec>,
    pub vector_system: Option<Vec<RatVec>>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn mat_mul(a: &RatMat, b: &RatMat) -> RatMat {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..b[0].len())
                .map(|j| (0..b.len()).map(|k| &a[i][k] * &b[k][j]).sum())
                .collect()
        })
        .collect()
}

fn mat_vec(a: &RatMat, v: &RatVec) -> RatVec {
    a.iter()
        .map(|r| r.iter().zip(v).map(|(x, y)| x * y).sum())
        .collect()
}

fn identity(n: usize) -> RatMat {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { rat(1) } else { rat(0) })
                .collect()
        })
        .collect()
}

fn transpose(a: &RatMat) -> RatMat {
    (0..a[0].len())
        .map(|j| a.iter().map(|r| r[j].clone()).collect())
        .collect()
}

/// Row rank over ℚ.
pub fn rat_rank(rows: &[RatVec]) -> usize {
    let mut m: Vec<RatVec> = rows.to_vec();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for i in 0..m.len() {
            if i != rank && !m[i][c].is_zero() {
                let f = &m[i][c] / &m[rank][c];
                let pivot = m[rank].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Coefficients `c` with `Σ cᵢ bᵢ = x`, for linearly independent `basis`.
pub fn lattice_coords(basis: &[RatVec], x: &RatVec) -> Option<RatVec> {
    let k = basis.len();
    // augmented system: d equations in k unknowns
    let mut m: Vec<RatVec> = (0..x.len())
        .map(|i| {
            basis
                .iter()
                .map(|b| b[i].clone())
                .chain([x[i].clone()])
                .collect()
        })
        .collect();
    let mut row = 0;
    let mut pivots = vec![];
    for c in 0..k {
        let p = (row..m.len()).find(|&i| !m[i][c].is_zero())?;
        m.swap(row, p);
        let inv = m[row][c].recip();
        for v in m[row].iter_mut() {
            *v *= &inv;
        }
        for i in 0..m.len() {
            if i != row && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let pivot = m[row].clone();
                for (a, b) in m[i].iter_mut().zip(&pivot) {
                    *a -= &f * b;
                }
            }
        }
        pivots.push(row);
        row += 1;
    }
    if m[row..].iter().any(|r| !r[k].is_zero()) {
        return None;
    }
    Some(pivots.iter().map(|&r| m[r][k].clone()).collect())
}

fn is_integral(v: &RatVec) -> bool {
    v.iter().all(|x| x.is_integer())
}

impl CrystalGroup {
    pub fn new(
        dim: usize,
        point_gens: Vec<RatMat>,
        lattice: Vec<RatVec>,
        vector_system: Option<Vec<RatVec>>,
    ) -> Result<Self> {
        if !(2..=3).contains(&dim) {
            return Err(GeomError::InvalidInput("dimension must be 2 or 3".into()));
        }
        let square = |m: &RatMat| m.len() == dim && m.iter().all(|r| r.len() == dim);
        if !point_gens.iter().all(square) || !lattice.iter().all(|v| v.len() == dim) {
            return Err(GeomError::InvalidInput(format!(
                "entries must be {dim}-dimensional"
            )));
        }
        if lattice.len() > dim || rat_rank(&lattice) != lattice.len() {
            return Err(GeomError::InvalidInput(
                "lattice basis is not linearly independent".into(),
            ));
        }
        for g in &point_gens {
            if mat_mul(&transpose(g), g) != identity(dim) {
                return Err(GeomError::InvalidInput(
                    "point generator is not orthogonal".into(),
                ));
            }
            for b in &lattice {
                match lattice_coords(&lattice, &mat_vec(g, b)) {
                    Some(c) if is_integral(&c) => {}
                    _ => {
                        return Err(GeomError::InvalidInput(
                            "point generator does not preserve the lattice".into(),
                        ))
                    }
                }
            }
        }
        if let Some(vs) = &vector_system {
            if vs.len() != point_gens.len() || !vs.iter().all(|v| v.len() == dim) {
                return Err(GeomError::InvalidInput(
                    "vector system must pair with the point generators".into(),
                ));
            }
        }
        Ok(CrystalGroup {
            dim,
            point_gens,
            lattice,
            vector_system,
        })
    }

    /// `ℤᵈ` with the given point group.
    pub fn standard(dim: usize, point_gens: Vec<RatMat>) -> Result<Self> {
        Self::new(dim, point_gens, identity(dim), None)
    }

    pub fn from_int(
        dim: usize,
        point_gens: &[Vec<Vec<i64>>],
        lattice: &[Vec<i64>],
    ) -> Result<Self> {
        let m = |r: &Vec<i64>| r.iter().map(|&x| rat(x)).collect::<RatVec>();
        Self::new(
            dim,
            point_gens
                .iter()
                .map(|g| g.iter().map(m).collect())
                .collect(),
            lattice.iter().map(m).collect(),
            None,
        )
    }

    /// Point generators in lattice coordinates (integral when the lattice has full rank).
    pub fn lattice_matrices(&self) -> Result<Vec<Vec<Vec<BigInt>>>> {
        if self.lattice.len() != self.dim {
            return Err(GeomError::InvalidInput(
                "lattice does not have full rank".into(),
            ));
        }
        self.point_gens
            .iter()
            .map(|g| {
                let cols: Vec<Vec<BigInt>> = self
                    .lattice
                    .iter()
                    .map(|b| {
                        lattice_coords(&self.lattice, &mat_vec(g, b))
                            .unwrap()
                            .into_iter()
                            .map(|x| x.to_integer())
                            .collect()
                    })
                    .collect();
                Ok((0..self.dim)
                    .map(|i| cols.iter().map(|c| c[i].clone()).collect())
                    .collect())
            })
            .collect()
    }

    fn check_split(&self) -> Result<()> {
        if let Some(vs) = &self.vector_system {
            for v in vs {
                match lattice_coords(&self.lattice, v) {
                    Some(c) if is_integral(&c) => {}
                    _ => return Err(GeomError::OutOfScope("non-symmorphic vector system".into())),
                }
            }
        }
        Ok(())
    }
}

pub fn translation_rank(g: &CrystalGroup) -> usize {
    rat_rank(&g.lattice)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum EuclidVolume {
    InfiniteVolume,
    FiniteVolumeCompact,
}

pub fn euclid_volume_verdict(g: &CrystalGroup) -> Result<EuclidVolume> {
    if g.dim != 3 {
        return Err(GeomError::InvalidInput(
            "volume verdict is for dimension 3".into(),
        ));
    }
    Ok(if translation_rank(g) < 3 {
        EuclidVolume::InfiniteVolume
    } else {
        EuclidVolume::FiniteVolumeCompact
    })
}

/// Dimension of the P-invariant subspace: `d − rank(⨁ (σⱼ − I))`.
pub fn betti_identity_component(g: &CrystalGroup) -> Result<(usize, GroupTag)> {
    if translation_rank(g) != g.dim {
        return Err(GeomError::InvalidInput(
            "lattice does not have full rank".into(),
        ));
    }
    g.check_split()?;
    let id = identity(g.dim);
    let rows: Vec<RatVec> = g
        .point_gens
        .iter()
        .flat_map(|s| {
            (0..g.dim)
                .map(|i| (0..g.dim).map(|j| &s[i][j] - &id[i][j]).collect::<RatVec>())
                .collect::<Vec<_>>()
        })
        .collect();
    let b = g.dim - if rows.is_empty() { 0 } else { rat_rank(&rows) };
    Ok((b, GroupTag::torus(b as u32)))
}

fn to_quad(m: &RatMat) -> QuadMat2 {
    let q = |x: &BigRational| QuadRat::rational(x.clone());
    QuadMat2::new(q(&m[0][0]), q(&m[0][1]), q(&m[1][0]), q(&m[1][1]))
}

/// `|N(Γ)/(N₀Γ)|` in the plane: translational part `⊕ ℤ/dᵢ` from the stacked `I − σ`,
/// times the normalizer of P in the lattice's orthogonal stabilizer, modulo P.
fn planar_finite_part(g: &CrystalGroup) -> Result<FinitePart> {
    let mats = g.lattice_matrices()?;
    let stacked: Vec<Vec<BigInt>> = mats
        .iter()
        .flat_map(|m| {
            (0..2)
                .map(|i| {
                    (0..2)
                        .map(|j| BigInt::from((i == j) as i64) - &m[i][j])
                        .collect::<Vec<_>>()
                })
                .collect::<Vec<_>>()
        })
        .collect();
    let trans: u64 = if stacked.is_empty() {
        1
    } else {
        smith_general(&stacked, 2)
            .diagonal
            .iter()
            .filter(|d| !d.is_zero())
            .map(|d| u64::try_from(d.abs()).unwrap())
            .product()
    };
    let q = |x: &BigRational| QuadRat::rational(x.clone());
    let (u, v) = (
        [q(&g.lattice[0][0]), q(&g.lattice[0][1])],
        [q(&g.lattice[1][0]), q(&g.lattice[1][1])],
    );
    let stab = planar_point_group(&u, &v)?;
    let gens: Vec<QuadMat2> = g.point_gens.iter().map(to_quad).collect();
    // P as a subset of the stabilizer, closed under the generators
    let mut p: Vec<QuadMat2> = vec![QuadMat2::identity()];
    let mut i = 0;
    while i < p.len() {
        for s in &gens {
            let m = &p[i] * s;
            if !p.contains(&m) {
                p.push(m);
            }
        }
        i += 1;
    }
    let normalizer = stab
        .elements
        .iter()
        .filter(|e| {
            let (m, mi) = (e.matrix(), e.inv());
            gens.iter().all(|s| p.contains(&(&(m * s) * mi.matrix())))
        })
        .count();
    let rot = normalizer / p.len();
    let order = trans * rot as u64;
    let label = match (order, p.len(), trans) {
        (1, _, _) => "trivial".to_string(),
        (_, 1, 1) => stab.tag.name().to_string(),
        (2, _, _) => "Z2".to_string(),
        _ => format!("order {order}"),
    };
    Ok(FinitePart {
        label,
        order: Some(order),
        generators: vec![],
    })
}

pub fn euclid_quotient_isometry(g: &CrystalGroup) -> Result<IsoDescriptor> {
    let (b, tag) = betti_identity_component(g)?;
    let finite_part = if g.dim == 2 {
        planar_finite_part(g)?
    } else {
        FinitePart {
            label: "finite, order not computed".into(),
            order: None,
            generators: vec![],
        }
    };
    let structure = if b == 0 {
        format!("finite: {}", finite_part.label)
    } else {
        format!("{} ⋊ {}", tag.name(), finite_part.label)
    };
    Ok(IsoDescriptor {
        geometry: Geometry::Euclid,
        identity_component: tag,
        finite_part,
        structure,
    })
}

/// Signed permutation matrix: `perm[i]` is the image of axis `i`, `signs[i]` its sign.
pub fn signed_permutation(perm: &[usize], signs: &[i64]) -> RatMat {
    let n = perm.len();
    let mut m = vec![vec![rat(0); n]; n];
    for i in 0..n {
        m[perm[i]][i] = rat(signs[i]);
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quarter() -> RatMat {
        signed_permutation(&[1, 0], &[1, -1])
    }

    fn flip() -> RatMat {
        signed_permutation(&[0, 1], &[1, -1])
    }

    #[test]
    fn ranks_and_volume() {
        let z3 = CrystalGroup::standard(3, vec![]).unwrap();
        assert_eq!(translation_rank(&z3), 3);
        assert_eq!(
            euclid_volume_verdict(&z3).unwrap(),
            EuclidVolume::FiniteVolumeCompact
        );
        // a screw motion generates a rank-one translation lattice
        let screw = CrystalGroup::from_int(3, &[], &[vec![0, 0, 1]]).unwrap();
        assert_eq!(translation_rank(&screw), 1);
        assert_eq!(
            euclid_volume_verdict(&screw).unwrap(),
            EuclidVolume::InfiniteVolume
        );
        let slab = CrystalGroup::from_int(3, &[], &[vec![1, 0, 0], vec![0, 1, 0]]).unwrap();
        assert_eq!(translation_rank(&slab), 2);
        assert_eq!(
            euclid_volume_verdict(&slab).unwrap(),
            EuclidVolume::InfiniteVolume
        );
    }

    #[test]
    fn betti_examples() {
        let z3 = CrystalGroup::standard(3, vec![]).unwrap();
        assert_eq!(
            betti_identity_component(&z3).unwrap(),
            (3, GroupTag::Torus(3))
        );
        let d4 = CrystalGroup::standard(2, vec![quarter(), flip()]).unwrap();
        assert_eq!(
            betti_identity_component(&d4).unwrap(),
            (0, GroupTag::Trivial)
        );
        let lift = |m: RatMat| {
            let mut out = identity(3);
            for i in 0..2 {
                for j in 0..2 {
                    out[i][j] = m[i][j].clone();
                }
            }
            out
        };
        let d4z = CrystalGroup::standard(3, vec![lift(quarter()), lift(flip())]).unwrap();
        assert_eq!(betti_identity_component(&d4z).unwrap(), (1, GroupTag::S1));
    }

    #[test]
    fn planar_examples() {
        let z2 = euclid_quotient_isometry(&CrystalGroup::standard(2, vec![]).unwrap()).unwrap();
        assert_eq!(
            (
                z2.identity_component,
                z2.finite_part.label.as_str(),
                z2.finite_part.order
            ),
            (GroupTag::Torus(2), "D4", Some(8))
        );
        let d4 =
            euclid_quotient_isometry(&CrystalGroup::standard(2, vec![quarter(), flip()]).unwrap())
                .unwrap();
        assert_eq!(
            (d4.identity_component, d4.finite_part.label.as_str()),
            (GroupTag::Trivial, "Z2")
        );
        let t3 = euclid_quotient_isometry(&CrystalGroup::standard(3, vec![]).unwrap()).unwrap();
        assert_eq!(
            (t3.identity_component, t3.finite_part.order),
            (GroupTag::Torus(3), None)
        );
    }

    #[test]
    fn validation() {
        let bad = vec![vec![rat(1), rat(1)], vec![rat(0), rat(1)]];
        assert!(CrystalGroup::standard(2, vec![bad]).is_err());
        // a quarter turn does not preserve a rectangular lattice
        assert!(CrystalGroup::from_int(
            2,
            &[vec![vec![0, -1], vec![1, 0]]],
            &[vec![1, 0], vec![0, 2]]
        )
        .is_err());
        assert!(CrystalGroup::from_int(2, &[], &[vec![1, 0], vec![2, 0]]).is_err());
        let half = BigRational::new(1.into(), 2.into());
        let glide = CrystalGroup::new(2, vec![flip()], identity(2), Some(vec![vec![half, rat(0)]]))
            .unwrap();
        assert!(matches!(
            betti_identity_component(&glide),
            Err(GeomError::OutOfScope(_))
        ));
        let split = CrystalGroup::new(
            2,
            vec![flip()],
            identity(2),
            Some(vec![vec![rat(1), rat(0)]]),
        )
        .unwrap();
        assert_eq!(betti_identity_component(&split).unwrap().0, 1);
    }
}
