//! Iso(H_ℝ/G) = N(G)/G, computed inside Q = N_Iso(L)/L for the lattice L ⊂ G.
//!
//! Every element of N_Iso(L) is `m_σ ∘ L_{w_σ} ∘ L_τ ∘ C_t` with σ ∈ Aut(Γ), w_σ
//! a fixed lift, τ ∈ (1/n)Γ and C_t a central translation, so classes in Q
//! are keyed by (σ, τ mod Γ, t mod λ/n).

use std::collections::{HashMap, HashSet, VecDeque};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::heis::{mul, HeisPoint};
use super::iso::{HeisIsometry, PlanarOrth};
use super::lattice::NilLattice;
use super::point_group::{planar_point_group, PlanarPointGroup};
use crate::algebra::QuadRat;
use crate::error::{GeomError, Result};
use crate::iso::{FinitePart, Geometry, GroupTag, IsoDescriptor};

const MAX_GROUP: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Key {
    sigma: usize,
    i: u64,
    j: u64,
    t: QuadRat,
}

impl Key {
    fn class(&self) -> (usize, u64, u64) {
        (self.sigma, self.i, self.j)
    }
}

struct Ctx<'a> {
    l: &'a NilLattice,
    aut: PlanarPointGroup,
    lifts: Vec<HeisPoint>,
    c: QuadRat,
}

/// Planar translation `w` such that `m_σ ∘ L_w` normalizes the lattice.
///
/// Conjugating `L_h` gives `L_{m_σ(w h w⁻¹)}`; matching its z-coordinate
/// with the lattice word over `σ(h)` is linear in `w` with determinant λ.
pub fn nil_lift(l: &NilLattice, sigma: &PlanarOrth) -> Result<HeisPoint> {
    if !PlanarPointGroup::preserves(sigma, &l.u, &l.v) {
        return Err(GeomError::InvalidInput(format!(
            "{sigma} does not preserve the planar lattice"
        )));
    }
    let det = QuadRat::int(sigma.det() as i64);
    let half = QuadRat::frac(1, 2);
    let rhs = |h: &HeisPoint| -> QuadRat {
        let (xx, yy) = sigma.apply(&h.x, &h.y);
        let (a, b) = l.plane_coords(&xx, &yy);
        let (a, b) = (a.as_integer().unwrap(), b.as_integer().unwrap());
        let target = &l.z_ab(&a, &b) - &(&half * &(&xx * &yy));
        &(&det * &target) - &(&h.z - &(&half * &(&h.x * &h.y)))
    };
    let [gu, gv, _] = l.generators();
    let (cu, cv) = (rhs(&gu), rhs(&gv));
    let [u1, u2] = &l.u;
    let [v1, v2] = &l.v;
    let w1 = &(&(u1 * &cv) - &(v1 * &cu)) / &l.lambda;
    let w2 = &(&(u2 * &cv) - &(v2 * &cu)) / &l.lambda;
    let w = HeisPoint {
        x: w1,
        y: w2,
        z: QuadRat::zero(),
    };
    let phi = HeisIsometry {
        rot: sigma.clone(),
        trans: w.clone(),
    };
    if !normalizes(l, &phi) {
        return Err(GeomError::Consistency(format!(
            "lift of {sigma} fails to normalize"
        )));
    }
    Ok(w)
}

fn in_lattice(l: &NilLattice, g: &HeisIsometry) -> bool {
    g.rot == PlanarOrth::identity() && l.contains(&g.trans)
}

/// Whether `φ L φ⁻¹ = L` (checked on generators, both directions).
pub fn normalizes(l: &NilLattice, phi: &HeisIsometry) -> bool {
    let inv = phi.inv();
    l.generators().iter().all(|g| {
        let t = HeisIsometry::translation(g.clone());
        in_lattice(l, &phi.conjugate(&t)) && in_lattice(l, &inv.conjugate(&t))
    })
}

impl<'a> Ctx<'a> {
    fn new(l: &'a NilLattice) -> Result<Self> {
        let aut = planar_point_group(&l.u, &l.v)?;
        let lifts = aut
            .elements
            .iter()
            .map(|s| nil_lift(l, s))
            .collect::<Result<Vec<_>>>()?;
        Ok(Ctx {
            l,
            aut,
            lifts,
            c: l.center_gen().abs(),
        })
    }

    fn n(&self) -> u64 {
        self.l.n
    }

    fn reduce_mod_c(&self, t: &QuadRat) -> QuadRat {
        let k = (t / &self.c).floor();
        t - &(&QuadRat::rational(k.into()) * &self.c)
    }

    fn key(&self, phi: &HeisIsometry) -> Result<Key> {
        let sigma = self
            .aut
            .elements
            .iter()
            .position(|e| *e == phi.rot)
            .ok_or_else(|| GeomError::InvalidInput(format!("{} is not in Aut(Γ)", phi.rot)))?;
        let h = mul(&self.lifts[sigma].inv(), &phi.trans);
        let (al, be) = self.l.plane_coords(&h.x, &h.y);
        let nq = QuadRat::int(self.n() as i64);
        let (Some(na), Some(nb)) = ((&al * &nq).as_integer(), (&be * &nq).as_integer()) else {
            return Err(GeomError::InvalidInput(format!(
                "{phi} does not normalize the lattice"
            )));
        };
        let n = BigInt::from(self.n());
        let (fa, fb) = (
            num_integer::Integer::div_floor(&na, &n),
            num_integer::Integer::div_floor(&nb, &n),
        );
        let reduced = mul(&h, &self.l.word(&fa, &fb).inv());
        let i = (na - &fa * &n).to_u64().unwrap();
        let j = (nb - &fb * &n).to_u64().unwrap();
        Ok(Key {
            sigma,
            i,
            j,
            t: self.reduce_mod_c(&reduced.z),
        })
    }

    fn element(&self, k: &Key) -> HeisIsometry {
        let nq = QuadRat::int(self.n() as i64);
        let a = &QuadRat::int(k.i as i64) / &nq;
        let b = &QuadRat::int(k.j as i64) / &nq;
        let tau = HeisPoint {
            x: &(&a * &self.l.u[0]) + &(&b * &self.l.v[0]),
            y: &(&a * &self.l.u[1]) + &(&b * &self.l.v[1]),
            z: k.t.clone(),
        };
        HeisIsometry {
            rot: self.aut.elements[k.sigma].clone(),
            trans: mul(&self.lifts[k.sigma], &tau),
        }
    }

    fn closure(&self, gens: &[HeisIsometry]) -> Result<Vec<Key>> {
        let id = self.key(&HeisIsometry::identity())?;
        let mut seen: HashSet<Key> = HashSet::from([id.clone()]);
        let mut order = vec![id.clone()];
        let mut queue = VecDeque::from([id]);
        while let Some(k) = queue.pop_front() {
            let e = self.element(&k);
            for g in gens {
                let nk = self.key(&e.compose(g))?;
                if seen.insert(nk.clone()) {
                    if seen.len() > MAX_GROUP {
                        return Err(GeomError::NotDiscrete(
                            "adjoined group is infinite modulo the lattice".into(),
                        ));
                    }
                    order.push(nk.clone());
                    queue.push_back(nk);
                }
            }
        }
        Ok(order)
    }
}

/// Generators of the canonical lifts `m_σ ∘ L_{w_σ}` of planar point-group elements.
pub fn nil_lift_point_group(l: &NilLattice, rots: &[PlanarOrth]) -> Result<Vec<HeisIsometry>> {
    rots.iter()
        .map(|s| {
            Ok(HeisIsometry {
                rot: s.clone(),
                trans: nil_lift(l, s)?,
            })
        })
        .collect()
}

/// Iso(H_ℝ/G) for `G = ⟨L, extra⟩` where `extra` normalizes `L`.
pub fn nil_quotient_isometry(
    l: &NilLattice,
    extra: Option<&[HeisIsometry]>,
) -> Result<IsoDescriptor> {
    let ctx = Ctx::new(l)?;
    let extra = extra.unwrap_or(&[]);
    for e in extra {
        if !normalizes(l, e) {
            return Err(GeomError::InvalidInput(format!(
                "{e} does not normalize the lattice"
            )));
        }
    }
    let group = ctx.closure(extra)?;
    let mut by_class: HashMap<(usize, u64, u64), Vec<QuadRat>> = HashMap::new();
    for k in &group {
        by_class.entry(k.class()).or_default().push(k.t.clone());
    }
    if by_class.values().any(|ts| ts.len() > 1) {
        return Err(GeomError::InvalidInput(
            "adjoined elements generate central translations outside the lattice".into(),
        ));
    }
    let members: HashSet<Key> = group.iter().cloned().collect();
    let orientation_reversing = extra.iter().any(|e| e.rot.det() < 0);

    // For each normalizer class q0 (t = 0), the admissible central offsets t.
    let half_c = &ctx.c / &QuadRat::int(2);
    let mut total = 0u64;
    let mut valid_classes = 0u64;
    let mut central_count = 0u64;
    let n = ctx.n();
    for sigma in 0..ctx.aut.elements.len() {
        for i in 0..n {
            for j in 0..n {
                let q0 = ctx.element(&Key {
                    sigma,
                    i,
                    j,
                    t: QuadRat::zero(),
                });
                let q0_inv = q0.inv();
                let det0 = QuadRat::int(q0.rot.det() as i64);
                let mut offsets: Option<Vec<QuadRat>> = None; // None = every t
                let mut ok = true;
                for e in extra {
                    let f = ctx.key(&q0.compose(e).compose(&q0_inv))?;
                    if e.rot.det() > 0 {
                        ok &= members.contains(&f);
                        continue;
                    }
                    let mut sol = Vec::new();
                    if let Some(ts) = by_class.get(&f.class()) {
                        for te in ts {
                            let t0 =
                                ctx.reduce_mod_c(&(&det0 * &(&(&f.t - te) / &QuadRat::int(2))));
                            sol.push(t0.clone());
                            sol.push(ctx.reduce_mod_c(&(&t0 + &half_c)));
                        }
                    }
                    offsets = Some(match offsets {
                        None => sol,
                        Some(prev) => prev.into_iter().filter(|t| sol.contains(t)).collect(),
                    });
                }
                if !ok {
                    continue;
                }
                match &offsets {
                    None => {
                        valid_classes += 1;
                    }
                    Some(ts) => {
                        total += ts.len() as u64;
                        if sigma == identity_index(&ctx) && i == 0 && j == 0 {
                            central_count = ts.len() as u64;
                        }
                    }
                }
            }
        }
    }
    let e_order = group.len() as u64;
    let gens_text = |ctx: &Ctx| -> Vec<String> {
        let mut g: Vec<String> = ctx
            .aut
            .generators
            .iter()
            .map(|s| {
                let idx = ctx.aut.elements.iter().position(|e| e == s).unwrap();
                HeisIsometry {
                    rot: s.clone(),
                    trans: ctx.lifts[idx].clone(),
                }
                .to_string()
            })
            .collect();
        if ctx.n() > 1 {
            for k in [
                Key {
                    sigma: identity_index(ctx),
                    i: 1,
                    j: 0,
                    t: QuadRat::zero(),
                },
                Key {
                    sigma: identity_index(ctx),
                    i: 0,
                    j: 1,
                    t: QuadRat::zero(),
                },
            ] {
                g.push(ctx.element(&k).to_string());
            }
        }
        g
    };
    if !orientation_reversing {
        if valid_classes % e_order != 0 {
            return Err(GeomError::Consistency(
                "normalizer classes not a union of cosets".into(),
            ));
        }
        let order = valid_classes / e_order;
        let tag = ctx.aut.tag.name();
        let (label, structure, generators) = if extra.is_empty() {
            let splits = n == 1 && ctx.lifts.iter().all(|w| w.is_identity());
            let label = if n == 1 {
                tag.to_string()
            } else {
                format!("(Z{n} × Z{n}) ⋊ {tag}")
            };
            let structure = if splits {
                format!("S1 ⋊ {label}")
            } else {
                format!("1 → S1 → Iso → {label} → 1")
            };
            (label, structure, gens_text(&ctx))
        } else {
            let label = format!("order {order}");
            (label.clone(), format!("1 → S1 → Iso → {label} → 1"), vec![])
        };
        return Ok(IsoDescriptor {
            geometry: Geometry::Nil,
            identity_component: GroupTag::S1,
            finite_part: FinitePart {
                label,
                order: Some(order),
                generators,
            },
            structure,
        });
    }
    if total % e_order != 0 {
        return Err(GeomError::Consistency(
            "normalizer not a union of cosets".into(),
        ));
    }
    let order = total / e_order;
    let label = if order == central_count {
        format!("Z{order}")
    } else {
        format!("order {order}")
    };
    Ok(IsoDescriptor {
        geometry: Geometry::Nil,
        identity_component: GroupTag::Trivial,
        finite_part: FinitePart {
            label: label.clone(),
            order: Some(order),
            generators: vec![],
        },
        structure: if order == central_count {
            format!("Z{order}")
        } else {
            format!(
                "1 → Z{central_count} → Iso → order {} → 1",
                order / central_count.max(1)
            )
        },
    })
}

fn identity_index(ctx: &Ctx) -> usize {
    ctx.aut
        .elements
        .iter()
        .position(|e| *e == PlanarOrth::identity())
        .unwrap()
}

/// Order of the component group for `L` alone, for convenience.
pub fn nil_finite_order(l: &NilLattice) -> Result<u64> {
    nil_quotient_isometry(l, None)?
        .finite_part
        .order
        .ok_or_else(|| GeomError::Consistency("no order".into()))
}
