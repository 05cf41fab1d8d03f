//! Discrete projection versus a fixed point or line in the plane.

use std::collections::{HashSet, VecDeque};

use num_traits::Zero;
use serde::Serialize;

use super::iso::HeisIsometry;
use crate::algebra::QuadRat;
use crate::error::{GeomError, Result};

pub const DEFAULT_WORD_BOUND: usize = 6;

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Dichotomy {
    /// Some word is a non-trivial central translation.
    DiscreteProjection {
        witness: String,
    },
    /// All projections fix this point.
    AbelianFixesPoint {
        point: [String; 2],
    },
    /// All projections preserve the line through `point` along `direction`.
    AbelianFixesLine {
        point: [String; 2],
        direction: [String; 2],
    },
    Undetermined,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VolumeVerdict {
    FiniteVolumePossible,
    InfiniteVolume,
}

type V2 = [QuadRat; 2];

fn dot(a: &V2, b: &V2) -> QuadRat {
    &(&a[0] * &b[0]) + &(&a[1] * &b[1])
}

/// Solutions of `A p = c` over the field: `None` if inconsistent, else one solution.
fn solve_rows(rows: &[(V2, QuadRat)]) -> Option<V2> {
    let mut rows: Vec<(V2, QuadRat)> = rows
        .iter()
        .filter(|(r, c)| !(r[0].is_zero() && r[1].is_zero() && c.is_zero()))
        .cloned()
        .collect();
    if rows
        .iter()
        .any(|(r, c)| r[0].is_zero() && r[1].is_zero() && !c.is_zero())
    {
        return None;
    }
    let mut p: V2 = [QuadRat::zero(), QuadRat::zero()];
    // eliminate column by column
    let mut pivots: Vec<(usize, V2, QuadRat)> = Vec::new();
    for col in 0..2 {
        let Some(idx) = rows.iter().position(|(r, _)| !r[col].is_zero()) else {
            continue;
        };
        let (pr, pc) = rows.remove(idx);
        for (r, c) in rows.iter_mut() {
            if !r[col].is_zero() {
                let f = &r[col] / &pr[col];
                *r = [&r[0] - &(&f * &pr[0]), &r[1] - &(&f * &pr[1])];
                *c = &*c - &(&f * &pc);
            }
        }
        if rows
            .iter()
            .any(|(r, c)| r[0].is_zero() && r[1].is_zero() && !c.is_zero())
        {
            return None;
        }
        pivots.push((col, pr, pc));
    }
    for (col, r, c) in pivots.into_iter().rev() {
        let other = 1 - col;
        let val = &(&c - &(&r[other] * &p[other])) / &r[col];
        p[col] = val;
    }
    Some(p)
}

fn fmt2(v: &V2) -> [String; 2] {
    [v[0].to_string(), v[1].to_string()]
}

/// Bounded breadth-first word search for a non-trivial central element.
fn central_word(gens: &[HeisIsometry], bound: usize) -> Option<HeisIsometry> {
    let letters: Vec<HeisIsometry> = gens
        .iter()
        .cloned()
        .chain(gens.iter().map(|g| g.inv()))
        .collect();
    let mut seen: HashSet<HeisIsometry> = HashSet::from([HeisIsometry::identity()]);
    let mut frontier = VecDeque::from([HeisIsometry::identity()]);
    for _ in 0..bound {
        let mut next = VecDeque::new();
        while let Some(w) = frontier.pop_front() {
            for a in &letters {
                let x = w.compose(a);
                if x.is_nontrivial_central() {
                    return Some(x);
                }
                if seen.insert(x.clone()) {
                    next.push_back(x);
                }
            }
        }
        frontier = next;
    }
    None
}

pub fn nil_projection_dichotomy(gens: &[HeisIsometry], word_bound: usize) -> Result<Dichotomy> {
    let proj: Vec<_> = gens.iter().map(|g| g.projection()).collect();
    let zero: V2 = [QuadRat::zero(), QuadRat::zero()];

    // a common fixed point: (ρ − I) p = −b for every generator
    let mut rows = Vec::new();
    for (rho, b) in &proj {
        let m = rho.matrix();
        let r0 = [&m.m[0][0] - &QuadRat::int(1), m.m[0][1].clone()];
        let r1 = [m.m[1][0].clone(), &m.m[1][1] - &QuadRat::int(1)];
        rows.push((r0, -&b.0));
        rows.push((r1, -&b.1));
    }
    if let Some(p) = solve_rows(&rows) {
        return Ok(Dichotomy::AbelianFixesPoint { point: fmt2(&p) });
    }

    // a common invariant line {p + s d}
    let mut dirs: Vec<V2> = Vec::new();
    if let Some((_, b)) = proj
        .iter()
        .find(|(r, b)| r.det() > 0 && r.order() == Some(1) && !(b.0.is_zero() && b.1.is_zero()))
    {
        dirs.push([b.0.clone(), b.1.clone()]);
    } else if let Some((r, _)) = proj.iter().find(|(r, _)| r.det() < 0) {
        // axis of a reflection and its normal
        let m = r.matrix();
        let axis = if !(&m.m[0][0] + &QuadRat::int(1)).is_zero() || !m.m[1][0].is_zero() {
            [&m.m[0][0] + &QuadRat::int(1), m.m[1][0].clone()]
        } else {
            [m.m[0][1].clone(), &m.m[1][1] + &QuadRat::int(1)]
        };
        dirs.push(axis.clone());
        dirs.push([-&axis[1], axis[0].clone()]);
    }
    for d in dirs {
        let nrm: V2 = [-&d[1], d[0].clone()];
        let mut rows = Vec::new();
        let mut ok = true;
        for (rho, b) in &proj {
            let rd = rho.matrix().apply(&d);
            // ρ d ∥ d
            if !dot(&rd, &nrm).is_zero() {
                ok = false;
                break;
            }
            // nᵀ(ρ − I) p = −nᵀ b
            let m = rho.matrix();
            let nt = [
                &(&nrm[0] * &(&m.m[0][0] - &QuadRat::int(1))) + &(&nrm[1] * &m.m[1][0]),
                &(&nrm[0] * &m.m[0][1]) + &(&nrm[1] * &(&m.m[1][1] - &QuadRat::int(1))),
            ];
            rows.push((nt, -&dot(&nrm, &[b.0.clone(), b.1.clone()])));
        }
        if ok {
            if let Some(p) = solve_rows(&rows) {
                return Ok(Dichotomy::AbelianFixesLine {
                    point: fmt2(&p),
                    direction: fmt2(&d),
                });
            }
        }
    }
    let _ = zero;

    if let Some(w) = central_word(gens, word_bound) {
        return Ok(Dichotomy::DiscreteProjection {
            witness: w.to_string(),
        });
    }
    Ok(Dichotomy::Undetermined)
}

pub fn nil_volume_verdict(d: &Dichotomy) -> Result<VolumeVerdict> {
    match d {
        Dichotomy::DiscreteProjection { .. } => Ok(VolumeVerdict::FiniteVolumePossible),
        Dichotomy::AbelianFixesPoint { .. } | Dichotomy::AbelianFixesLine { .. } => {
            Ok(VolumeVerdict::InfiniteVolume)
        }
        Dichotomy::Undetermined => Err(GeomError::InvalidInput("dichotomy undetermined".into())),
    }
}
