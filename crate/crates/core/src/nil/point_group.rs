//! Orthogonal stabilizer of a planar lattice {k u + l v}.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::heis::common_field;
use super::iso::PlanarOrth;
use crate::algebra::{QuadMat2, QuadRat};
use crate::error::{GeomError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PointGroupTag {
    C2,
    D2,
    D4,
    D6,
}

impl PointGroupTag {
    pub fn order(self) -> usize {
        match self {
            PointGroupTag::C2 => 2,
            PointGroupTag::D2 => 4,
            PointGroupTag::D4 => 8,
            PointGroupTag::D6 => 12,
        }
    }
    pub fn name(self) -> &'static str {
        match self {
            PointGroupTag::C2 => "C2",
            PointGroupTag::D2 => "D2",
            PointGroupTag::D4 => "D4",
            PointGroupTag::D6 => "D6",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PlanarPointGroup {
    pub tag: PointGroupTag,
    pub elements: Vec<PlanarOrth>,
    /// A rotation of maximal order, followed by a reflection when there is one.
    pub generators: Vec<PlanarOrth>,
}

fn dot(a: &[QuadRat; 2], b: &[QuadRat; 2]) -> QuadRat {
    &(&a[0] * &b[0]) + &(&a[1] * &b[1])
}

fn add(a: &[QuadRat; 2], b: &[QuadRat; 2], k: i64) -> [QuadRat; 2] {
    let k = QuadRat::int(k);
    [&a[0] + &(&k * &b[0]), &a[1] + &(&k * &b[1])]
}

fn comb(a: &[QuadRat; 2], b: &[QuadRat; 2], k: i64, l: i64) -> [QuadRat; 2] {
    let (k, l) = (QuadRat::int(k), QuadRat::int(l));
    [&(&k * &a[0]) + &(&l * &b[0]), &(&k * &a[1]) + &(&l * &b[1])]
}

/// Lagrange–Gauss reduction: `|b1| ≤ |b2|` and `|b1·b2| ≤ |b1|²/2`.
fn reduce(mut b1: [QuadRat; 2], mut b2: [QuadRat; 2]) -> ([QuadRat; 2], [QuadRat; 2]) {
    loop {
        if dot(&b2, &b2).cmp_exact(&dot(&b1, &b1)) == Ordering::Less {
            std::mem::swap(&mut b1, &mut b2);
        }
        // nearest integer to (b1·b2)/|b1|²
        let mu = &dot(&b1, &b2) / &dot(&b1, &b1);
        let k = (&mu + &QuadRat::frac(1, 2)).floor();
        if k == 0.into() {
            return (b1, b2);
        }
        let k: i64 = k.try_into().expect("reduction step fits in i64");
        b2 = add(&b2, &b1, -k);
    }
}

pub fn planar_point_group(u: &[QuadRat; 2], v: &[QuadRat; 2]) -> Result<PlanarPointGroup> {
    if let Some(d) = common_field(u.iter().chain(v))? {
        if d != 3 {
            return Err(GeomError::OutOfScope(format!(
                "planar lattices over ℚ(√{d}); supported fields are ℚ and ℚ(√3)"
            )));
        }
    }
    let basis = QuadMat2::from_columns(u, v);
    if basis.det() == QuadRat::int(0) {
        return Err(GeomError::InvalidInput(
            "u and v are linearly dependent".into(),
        ));
    }
    let (b1, b2) = reduce(u.clone(), v.clone());
    let (n1, n2, g12) = (dot(&b1, &b1), dot(&b2, &b2), dot(&b1, &b2));
    // in a reduced basis every vector no longer than b2 has coefficients in [−2, 2]
    let mut short1 = Vec::new();
    let mut short2 = Vec::new();
    for k in -2..=2 {
        for l in -2..=2 {
            let w = comb(&b1, &b2, k, l);
            let nw = dot(&w, &w);
            if nw == n1 {
                short1.push(w.clone());
            }
            if nw == n2 {
                short2.push(w);
            }
        }
    }
    let src_inv = QuadMat2::from_columns(&b1, &b2).checked_inverse()?;
    let mut elements: Vec<PlanarOrth> = Vec::new();
    for w1 in &short1 {
        for w2 in &short2 {
            if dot(w1, w2) != g12 {
                continue;
            }
            let m = &QuadMat2::from_columns(w1, w2) * &src_inv;
            let o = PlanarOrth::new(m)?;
            if !elements.contains(&o) {
                elements.push(o);
            }
        }
    }
    let tag = match elements.len() {
        2 => PointGroupTag::C2,
        4 => PointGroupTag::D2,
        8 => PointGroupTag::D4,
        12 => PointGroupTag::D6,
        k => return Err(GeomError::Consistency(format!("stabilizer of order {k}"))),
    };
    let rot = elements
        .iter()
        .filter(|e| e.det() > 0)
        .max_by_key(|e| e.order().unwrap_or(0))
        .cloned()
        .expect("identity is a rotation");
    let mut generators = vec![rot];
    if let Some(refl) = elements.iter().find(|e| e.det() < 0) {
        generators.push(refl.clone());
    }
    Ok(PlanarPointGroup {
        tag,
        elements,
        generators,
    })
}

impl PlanarPointGroup {
    /// Whether `m` maps the lattice spanned by `u, v` into itself.
    pub fn preserves(m: &PlanarOrth, u: &[QuadRat; 2], v: &[QuadRat; 2]) -> bool {
        let b = QuadMat2::from_columns(u, v);
        let Ok(bi) = b.checked_inverse() else {
            return false;
        };
        let c = &(&bi * m.matrix()) * &b;
        c.m.iter().flatten().all(|x| x.as_integer().is_some())
    }
}
