//! Sol geometry: ℝ² ⋊ ℝ with t acting by diag(e^t, e^{−t}), its lattices
//! Γ_{Aⁿ} = ℤ² ⋊_{Aⁿ} ℤ and their quotient isometry groups.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{
    diagonalize_sl2, smith_normal_form, IntMat2, QuadMat2, QuadRat, RatMat2, SnfResult,
};
use crate::error::{GeomError, Result};
use crate::iso::{FinitePart, Geometry, GroupTag, IsoDescriptor};

/// A point of Sol; `e^t` is either a float or an exact power `λ^k` of a unit.
#[derive(Clone, Debug, PartialEq)]
pub enum SolPoint {
    Float {
        x: f64,
        y: f64,
        t: f64,
    },
    /// `t = k·log λ` where `λ > 0` has norm 1 in ℚ(√d).
    Exact {
        x: QuadRat,
        y: QuadRat,
        k: i64,
        unit: QuadRat,
    },
}

impl SolPoint {
    pub fn float(x: f64, y: f64, t: f64) -> Self {
        SolPoint::Float { x, y, t }
    }

    pub fn exact(x: QuadRat, y: QuadRat, k: i64, unit: QuadRat) -> Result<Self> {
        if !unit.is_positive() || unit == QuadRat::one() || unit.norm() != BigRational::one() {
            return Err(GeomError::InvalidInput(format!(
                "{unit} is not a positive norm-one unit ≠ 1"
            )));
        }
        crate::nil::heis::common_field([&x, &y, &unit])?;
        Ok(SolPoint::Exact { x, y, k, unit })
    }

    pub fn inv(&self) -> Self {
        match self {
            SolPoint::Float { x, y, t } => SolPoint::Float {
                x: -x * (-t).exp(),
                y: -y * t.exp(),
                t: -t,
            },
            SolPoint::Exact { x, y, k, unit } => {
                let e = unit.pow(-*k).unwrap();
                let f = unit.pow(*k).unwrap();
                SolPoint::Exact {
                    x: -(&e * x),
                    y: -(&f * y),
                    k: -k,
                    unit: unit.clone(),
                }
            }
        }
    }
}

/// `(x,y,t)·(u,v,s) = (x + e^t u, y + e^{−t} v, t + s)`.
pub fn sol_mul(g: &SolPoint, h: &SolPoint) -> Result<SolPoint> {
    match (g, h) {
        (SolPoint::Float { x, y, t }, SolPoint::Float { x: u, y: v, t: s }) => {
            Ok(SolPoint::Float {
                x: x + t.exp() * u,
                y: y + (-t).exp() * v,
                t: t + s,
            })
        }
        (
            SolPoint::Exact { x, y, k, unit },
            SolPoint::Exact {
                x: u,
                y: v,
                k: j,
                unit: unit2,
            },
        ) => {
            if unit != unit2
                && !(u.is_zero() && v.is_zero() && *j == 0)
                && !(x.is_zero() && y.is_zero() && *k == 0)
            {
                return Err(GeomError::InvalidInput(
                    "exact Sol points over different units".into(),
                ));
            }
            let unit = if *k == 0 && x.is_zero() && y.is_zero() {
                unit2
            } else {
                unit
            };
            let e = unit.pow(*k)?;
            let f = unit.pow(-*k)?;
            Ok(SolPoint::Exact {
                x: x.checked_add(&e.checked_mul(u)?)?,
                y: y.checked_add(&f.checked_mul(v)?)?,
                k: k + j,
                unit: unit.clone(),
            })
        }
        _ => Err(GeomError::InvalidInput(
            "cannot mix exact and float Sol points".into(),
        )),
    }
}

/// The invariant line `{(p, q, s)}` on which `g` acts by `s ↦ s + t`.
#[derive(Clone, Debug, PartialEq)]
pub enum FixedLine {
    Float { p: f64, q: f64 },
    Exact { p: QuadRat, q: QuadRat },
}

pub fn sol_fixed_line(g: &SolPoint) -> Result<FixedLine> {
    match g {
        SolPoint::Float { x, y, t } => {
            if *t == 0.0 {
                return Err(GeomError::InvalidInput(
                    "t = 0: no transverse invariant line".into(),
                ));
            }
            Ok(FixedLine::Float {
                p: x / (1.0 - t.exp()),
                q: y / (1.0 - (-t).exp()),
            })
        }
        SolPoint::Exact { x, y, k, unit } => {
            if *k == 0 {
                return Err(GeomError::InvalidInput(
                    "t = 0: no transverse invariant line".into(),
                ));
            }
            let one = QuadRat::one();
            let p = x.checked_div(&(&one - &unit.pow(*k)?))?;
            let q = y.checked_div(&(&one - &unit.pow(-*k)?))?;
            Ok(FixedLine::Exact { p, q })
        }
    }
}

/// Γ_{aⁿ} = ℤ² ⋊_{aⁿ} ℤ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolLattice {
    pub a: IntMat2,
    pub n: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolLatticeJson {
    pub matrix: [[i64; 2]; 2],
    pub power: u64,
}

pub fn sol_lattice_make(a: &IntMat2, n: u64) -> Result<SolLattice> {
    if n == 0 {
        return Err(GeomError::InvalidInput(
            "power must be a positive integer".into(),
        ));
    }
    if !a.det().is_one() {
        return Err(GeomError::InvalidInput(format!("det {} ≠ 1", a.det())));
    }
    if a.trace() <= BigInt::from(2) {
        return Err(GeomError::NotHyperbolic(format!("trace {} ≤ 2", a.trace())));
    }
    Ok(SolLattice { a: a.clone(), n })
}

impl SolLattice {
    pub fn power(&self) -> IntMat2 {
        self.a.pow(self.n)
    }

    /// `I − aⁿ`.
    pub fn gap(&self) -> IntMat2 {
        &IntMat2::identity() - &self.power()
    }

    pub fn to_json(&self) -> Result<SolLatticeJson> {
        let matrix = self
            .a
            .to_i64()
            .ok_or_else(|| GeomError::InvalidInput("entries too large".into()))?;
        Ok(SolLatticeJson {
            matrix,
            power: self.n,
        })
    }

    pub fn from_json(j: &SolLatticeJson) -> Result<Self> {
        let [[a, b], [c, d]] = j.matrix;
        sol_lattice_make(&IntMat2::from_i64(a, b, c, d), j.power)
    }
}

/// Λ_n = (I − aⁿ)⁻¹ ℤ² (basis = columns), extended by ⟨a⟩.
#[derive(Clone, Debug, PartialEq)]
pub struct SolNormalizer {
    pub basis: RatMat2,
    /// `[Λ_n : ℤ²] = |det(I − aⁿ)|`.
    pub index: BigInt,
    pub glue: IntMat2,
}

impl SolNormalizer {
    /// Whether `v ∈ Λ_n`.
    pub fn contains(&self, v: &[BigRational; 2]) -> bool {
        let c = self.basis.inverse().expect("basis is invertible").apply(v);
        c.iter().all(|x| x.is_integer())
    }

    /// Whether Λ_n = (1/k)ℤ².
    pub fn is_scaled_integer_lattice(&self, k: i64) -> bool {
        let step = BigRational::new(BigInt::one(), BigInt::from(k));
        let zero = BigRational::zero();
        let gens_in =
            self.contains(&[step.clone(), zero.clone()]) && self.contains(&[zero, step.clone()]);
        let basis_in = (0..2).all(|j| {
            self.basis
                .column(j)
                .iter()
                .all(|x| (x / &step).is_integer())
        });
        gens_in && basis_in
    }
}

pub fn sol_normalizer_lattice(l: &SolLattice) -> Result<SolNormalizer> {
    let gap = l.gap();
    let det = gap.det();
    if det.is_zero() {
        return Err(GeomError::Consistency("I − aⁿ is singular".into()));
    }
    let basis = gap.to_rat().inverse()?;
    Ok(SolNormalizer {
        basis,
        index: det.abs(),
        glue: l.a.clone(),
    })
}

/// `(Λ_n / ℤ²) ⋊_a ℤ_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolFinite {
    pub abelian_invariants: Vec<u64>,
    pub cyclic_extension: u64,
    pub order: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolIsometryGroup {
    pub identity_component: GroupTag,
    pub finite: SolFinite,
    /// Action of `a` on the cokernel in Smith coordinates (rows reduced mod each invariant).
    #[serde(skip)]
    pub action: Vec<Vec<u64>>,
    #[serde(skip)]
    pub label: String,
}

impl SolIsometryGroup {
    pub fn to_descriptor(&self) -> IsoDescriptor {
        IsoDescriptor {
            geometry: Geometry::Sol,
            identity_component: self.identity_component,
            finite_part: FinitePart {
                label: self.label.clone(),
                order: Some(self.finite.order),
                generators: vec![],
            },
            structure: self.label.clone(),
        }
    }
}

pub fn sol_quotient_isometry(l: &SolLattice) -> Result<SolIsometryGroup> {
    sol_quotient_isometry_with(l, smith_normal_form)
}

/// As [`sol_quotient_isometry`] with an injectable Smith-form routine; the
/// result is cross-checked against `|det(I − aⁿ)| = |2 − tr aⁿ|`.
pub fn sol_quotient_isometry_with(
    l: &SolLattice,
    snf: impl Fn(&IntMat2) -> SnfResult,
) -> Result<SolIsometryGroup> {
    let gap = l.gap();
    let s = snf(&gap);
    let fast = (BigInt::from(2) - l.power().trace()).abs();
    if &s.d1 * &s.d2 != fast || gap.det().abs() != fast {
        return Err(GeomError::Consistency(format!(
            "Smith form d1·d2 = {} disagrees with |2 − tr aⁿ| = {fast}",
            &s.d1 * &s.d2
        )));
    }
    if &(&s.u * &gap) * &s.v != IntMat2::diag(s.d1.clone(), s.d2.clone()) {
        return Err(GeomError::Consistency(
            "Smith transforms do not diagonalize I − aⁿ".into(),
        ));
    }
    let to_u64 = |x: &BigInt| {
        x.to_u64()
            .ok_or_else(|| GeomError::OutOfScope("group too large".into()))
    };
    let invariants: Vec<u64> = s
        .nontrivial_invariants()
        .iter()
        .map(to_u64)
        .collect::<Result<_>>()?;
    let order = fast
        .to_u64()
        .ok_or_else(|| GeomError::OutOfScope("group too large".into()))?
        * l.n;

    // a acts on ℤ²/(I − aⁿ)ℤ²; in Smith coordinates y = u x it is u a u⁻¹
    let u_inv = s.u.adj().scale(&s.u.det()); // det u = ±1
    let act = &(&s.u * &l.a) * &u_inv;
    let mods = [s.d1.clone(), s.d2.clone()];
    let keep: Vec<usize> = (0..2).filter(|&i| !mods[i].is_one()).collect();
    let action: Vec<Vec<u64>> = keep
        .iter()
        .map(|&i| {
            keep.iter()
                .map(|&j| to_u64(&act.m[i][j].mod_floor(&mods[i])))
                .collect::<Result<_>>()
        })
        .collect::<Result<_>>()?;

    let label = if order == 1 {
        "trivial".to_string()
    } else {
        let base = match invariants.as_slice() {
            [] => String::new(),
            [d] => format!("Z{d}"),
            ds => format!(
                "({})",
                ds.iter()
                    .map(|d| format!("Z{d}"))
                    .collect::<Vec<_>>()
                    .join(" × ")
            ),
        };
        let trivial_action = action.iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, &x)| x == u64::from(i == j) % invariants[i])
        });
        match (base.is_empty(), l.n) {
            (true, n) => format!("Z{n}"),
            (false, 1) => base,
            (false, n) if trivial_action => format!("{base} × Z{n}"),
            (false, n) => format!("{base} ⋊ Z{n}"),
        }
    };
    Ok(SolIsometryGroup {
        identity_component: GroupTag::Trivial,
        finite: SolFinite {
            abelian_invariants: invariants,
            cyclic_extension: l.n,
            order,
        },
        action,
        label,
    })
}

/// Evidence that the centralizer of Γ_{aⁿ} in Sol is trivial.
#[derive(Clone, Debug, PartialEq)]
pub struct CentralizerReport {
    pub trivial: bool,
    /// Eigen-coordinates `(a, b)` of the lattice vector e₁, both non-zero: forces e^t = 1.
    pub translation_witness: [QuadRat; 2],
    /// `e^s = λⁿ ≠ 1` for the glue generator: forces x = y = 0.
    pub glue_unit: QuadRat,
}

pub fn sol_centralizer(l: &SolLattice) -> Result<CentralizerReport> {
    let dg = diagonalize_sl2(&l.a)?;
    let b = dg.conjugator();
    let e1 = [QuadRat::one(), QuadRat::zero()];
    let w = b.apply(&e1);
    // (e^t a, e^{−t} b) = (a, b) with a ≠ 0 gives e^t = 1, i.e. t = 0
    let t_forced = !w[0].is_zero() && !w[1].is_zero();
    // (e^s x, e^{−s} y) = (x, y) with e^s ≠ 1 gives x = y = 0
    let lam_n = dg.eigs.0.pow(l.n as i64)?;
    let xy_forced = lam_n != QuadRat::one() && lam_n.inv()? != QuadRat::one();
    Ok(CentralizerReport {
        trivial: t_forced && xy_forced,
        translation_witness: w,
        glue_unit: lam_n,
    })
}

pub type QuadMat3 = [[QuadRat; 3]; 3];

fn mat3_from(block: &QuadMat2, col: [QuadRat; 2]) -> QuadMat3 {
    let z = QuadRat::zero;
    [
        [block.m[0][0].clone(), block.m[0][1].clone(), col[0].clone()],
        [block.m[1][0].clone(), block.m[1][1].clone(), col[1].clone()],
        [z(), z(), QuadRat::one()],
    ]
}

fn conj3(m: &QuadMat3) -> QuadMat3 {
    m.clone().map(|row| row.map(|x| x.conj()))
}

/// Restriction of scalars: A is diagonalizable over ℚ(c), c = √(tr²−4).
#[derive(Clone, Debug, PartialEq)]
pub struct SolQStructure {
    pub d: u64,
    pub eigs: (QuadRat, QuadRat),
    /// `B` with `B A B⁻¹ = diag(λ, λ⁻¹)`.
    pub conjugator: QuadMat2,
    /// σ(B) A σ(B)⁻¹ = diag(σλ, σλ⁻¹) = diag(λ⁻¹, λ).
    pub galois_pair_check: bool,
    /// `(Y, σ(Y))` for the generators e₁, e₂ and the glue map, conjugated into Sol.
    pub embedding_pairs: Vec<(QuadMat3, QuadMat3)>,
}

pub fn sol_q_structure(a: &IntMat2) -> Result<SolQStructure> {
    let dg = diagonalize_sl2(a)?;
    let b = dg.conjugator();
    let aq = a.to_quad();
    let diag = QuadMat2::diag(dg.eigs.0.clone(), dg.eigs.1.clone());
    let sb = b.map(|x| x.conj());
    let twin = QuadMat2::diag(dg.eigs.0.conj(), dg.eigs.1.conj());
    let check = &(&b * &aq) * &b.checked_inverse()? == diag
        && &(&sb * &aq) * &sb.checked_inverse()? == twin
        && twin == QuadMat2::diag(dg.eigs.1.clone(), dg.eigs.0.clone());
    let zero2 = [QuadRat::zero(), QuadRat::zero()];
    let gens = [
        mat3_from(&QuadMat2::identity(), b.column(0)),
        mat3_from(&QuadMat2::identity(), b.column(1)),
        mat3_from(&(&(&b * &aq) * &b.checked_inverse()?), zero2),
    ];
    let embedding_pairs = gens.iter().map(|y| (y.clone(), conj3(y))).collect();
    Ok(SolQStructure {
        d: dg.d(),
        eigs: dg.eigs,
        conjugator: b,
        galois_pair_check: check,
        embedding_pairs,
    })
}
