//! Dispatch: each command yields a JSON value and a text rendering.

use std::fmt::Write as _;

use geom3::euclid::{
    betti_identity_component, euclid_quotient_isometry, euclid_volume_verdict, translation_rank,
    CrystalGroup,
};
use geom3::fibered::{
    christoffel_h2, frame_at_identity, hv_decompose, psl2_quotient_isometry, s2r_decompose,
    s2r_quotient_identity_component, sasaki_norm, unit_tangent_embed, FiberedQuotient,
    TangentVector,
};
use geom3::hyperbolic::{
    centralizer_type, classify_isometry_tol, commute_test_tol, hn_quotient_isometry_verdict,
    FixedSet, COMPARE_TOL,
};
use geom3::nil::{
    nil_center_intersection, nil_lift_point_group, nil_normalizer, nil_projection_dichotomy,
    nil_quotient_isometry, nil_volume_verdict, planar_point_group,
};
use geom3::selfcheck::selfcheck;
use geom3::sol::{sol_centralizer, sol_normalizer_lattice, sol_quotient_isometry};
use geom3::spherical::{lookup_table, spherical_components_lookup};
use geom3::verdict::{parse_factors, zimmer_verdict, LatticeSpec, ZimmerTarget};
use geom3::{GeomError, Geometry, GroupTag, IsoDescriptor};
use num_complex::Complex64;
use serde::Serialize;
use serde_json::json;

use crate::args::{self, tolerance};
use crate::{
    Cmd, CrystalArgs, EuclidOp, FiberOp, HypOp, LookupArgs, NilOp, QuotientKind, SolOp, ZimmerArgs,
};

#[derive(Debug)]
pub enum CliError {
    Schema(String),
    Domain(GeomError),
}

impl From<GeomError> for CliError {
    fn from(e: GeomError) -> Self {
        CliError::Domain(e)
    }
}

impl CliError {
    /// Exit code, error kind and detail.
    pub fn parts(&self) -> (u8, &'static str, String) {
        match self {
            CliError::Schema(d) => (2, "schema", d.clone()),
            CliError::Domain(e) => (1, e.kind(), e.to_string()),
        }
    }
}

#[derive(Serialize)]
struct ErrorBody<'a> {
    kind: &'a str,
    detail: &'a str,
}

/// `{"error":{"kind","detail"}}`.
pub fn envelope(kind: &str, detail: &str) -> String {
    #[derive(Serialize)]
    struct Envelope<'a> {
        error: ErrorBody<'a>,
    }
    serde_json::to_string(&Envelope {
        error: ErrorBody { kind, detail },
    })
    .expect("strings serialize")
}

pub struct Out {
    /// Compact JSON in the serializer's field order.
    pub json: String,
    pub text: String,
    pub code: u8,
}

fn out(v: impl Serialize, text: String) -> Result<Out, CliError> {
    let json = serde_json::to_string(&v)
        .map_err(|e| CliError::Domain(GeomError::Consistency(e.to_string())))?;
    Ok(Out {
        json,
        text,
        code: 0,
    })
}

fn descriptor_text(d: &IsoDescriptor) -> String {
    let order = d
        .finite_part
        .order
        .map_or("order not determined".to_string(), |o| format!("order {o}"));
    let mut s = format!(
        "geometry: {}\nidentity component: {}\nfinite part: {} ({order})\nstructure: {}\n",
        d.geometry, d.identity_component, d.finite_part.label, d.structure
    );
    for g in &d.finite_part.generators {
        let _ = writeln!(s, "  generator: {g}");
    }
    s
}

fn c2(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}

pub fn run(cmd: Cmd) -> Result<Out, CliError> {
    match cmd {
        Cmd::Nil { op } => nil(op),
        Cmd::Sol { op } => sol(op),
        Cmd::Hyp { op } => hyp(op),
        Cmd::Fiber { op } => fiber(op),
        Cmd::Euclid { op } => euclid(op),
        Cmd::Lookup(a) => lookup(a),
        Cmd::Zimmer(a) => zimmer(a),
        Cmd::Selfcheck => {
            let r = selfcheck();
            let mut text = String::new();
            for i in &r.items {
                let _ = writeln!(
                    text,
                    "{} {} ({}): {}",
                    if i.pass { "PASS" } else { "FAIL" },
                    i.id,
                    i.module,
                    i.detail
                );
            }
            let _ = writeln!(text, "{} passed, {} failed", r.passed, r.failed);
            let code = u8::from(r.failed > 0);
            Ok(Out {
                code,
                ..out(&r, text)?
            })
        }
    }
}

fn nil(op: NilOp) -> Result<Out, CliError> {
    match op {
        NilOp::Lattice(a) => {
            let l = args::nil_lattice(&a)?;
            let j = l.to_json();
            let text = format!(
                "u = ({}, {}), v = ({}, {}), r = {}, s = {}, n = {}, lambda = {}\n",
                j.u[0], j.u[1], j.v[0], j.v[1], j.r, j.s, j.n, j.lambda
            );
            out(j, text)
        }
        NilOp::Center(a) => {
            let c = nil_center_intersection(&args::nil_lattice(&a)?).to_string();
            let text = format!("centre generated by (0, 0, {c})\n");
            out(json!({ "center_generator": c }), text)
        }
        NilOp::Normalizer(a) => {
            let n = nil_normalizer(&args::nil_lattice(&a)?)?;
            let b = n.planar_basis.clone().map(|v| v.map(|x| x.to_string()));
            let text = format!(
                "planar part generated by ({}, {}) and ({}, {}); index {}; continuous factor the centre\n",
                b[0][0], b[0][1], b[1][0], b[1][1], n.index
            );
            out(
                json!({ "planar_basis": b, "index": n.index, "continuous_axis": n.continuous_axis }),
                text,
            )
        }
        NilOp::PointGroup(a) => {
            let l = args::nil_lattice(&a)?;
            let pg = planar_point_group(&l.u, &l.v)?;
            let gens: Vec<String> = pg.generators.iter().map(ToString::to_string).collect();
            let text = format!("{} (order {})\n", pg.tag.name(), pg.tag.order());
            out(
                json!({ "tag": pg.tag.name(), "order": pg.tag.order(), "generators": gens }),
                text,
            )
        }
        NilOp::Iso {
            lattice,
            with_point_group,
        } => {
            let l = args::nil_lattice(&lattice)?;
            let extra = if with_point_group {
                let pg = planar_point_group(&l.u, &l.v)?;
                Some(nil_lift_point_group(&l, &pg.generators)?)
            } else {
                None
            };
            let d = nil_quotient_isometry(&l, extra.as_deref())?;
            let text = descriptor_text(&d);
            out(d, text)
        }
        NilOp::Dichotomy { gens, word_bound } => {
            let g = gens
                .iter()
                .map(|s| args::heis_isometry(s))
                .collect::<Result<Vec<_>, _>>()?;
            let d = nil_projection_dichotomy(&g, word_bound)?;
            let volume = nil_volume_verdict(&d).ok();
            let text = format!(
                "{}\nvolume: {}\n",
                serde_json::to_string(&d).unwrap_or_default(),
                volume.map_or("undetermined".to_string(), |v| format!("{v:?}"))
            );
            out(json!({ "dichotomy": d, "volume": volume }), text)
        }
    }
}

fn sol(op: SolOp) -> Result<Out, CliError> {
    match op {
        SolOp::Lattice(a) => {
            let j = args::sol_lattice(&a)?.to_json()?;
            let text = format!("A = {:?}, n = {}\n", j.matrix, j.power);
            out(j, text)
        }
        SolOp::Normalizer(a) => {
            let n = sol_normalizer_lattice(&args::sol_lattice(&a)?)?;
            let cols: Vec<[String; 2]> = (0..2)
                .map(|j| n.basis.column(j).map(|x| x.to_string()))
                .collect();
            let text = format!(
                "Λ_n basis ({}, {}), ({}, {}); index {} over ℤ²\n",
                cols[0][0], cols[0][1], cols[1][0], cols[1][1], n.index
            );
            out(json!({ "basis": cols, "index": n.index.to_string() }), text)
        }
        SolOp::Iso(a) => {
            let g = sol_quotient_isometry(&args::sol_lattice(&a)?)?;
            let text = format!(
                "identity component: {}\nfinite part: {} (order {})\nabelian invariants: {:?}, cyclic extension: {}\n",
                g.identity_component, g.label, g.finite.order, g.finite.abelian_invariants, g.finite.cyclic_extension
            );
            out(&g, text)
        }
        SolOp::Centralizer(a) => {
            let c = sol_centralizer(&args::sol_lattice(&a)?)?;
            let w = [
                c.translation_witness[0].to_string(),
                c.translation_witness[1].to_string(),
            ];
            let text = format!("centralizer trivial: {}\n", c.trivial);
            out(
                json!({ "trivial": c.trivial, "translation_witness": w, "glue_unit": c.glue_unit.to_string() }),
                text,
            )
        }
    }
}

fn fixed_text(f: &FixedSet) -> String {
    match f {
        FixedSet::Interior([x, y]) => format!("interior point {x} + {y}i"),
        FixedSet::Boundary(ps) => {
            format!("boundary {}", serde_json::to_string(ps).unwrap_or_default())
        }
    }
}

fn hyp(op: HypOp) -> Result<Out, CliError> {
    match op {
        HypOp::Classify { matrix } => {
            let m = args::mobius(&matrix)?;
            let k = classify_isometry_tol(&m, tolerance()?)?;
            let text = format!("{:?}, fixed {}\n", k.tag, fixed_text(&k.fixed_set));
            out(&k, text)
        }
        HypOp::Commute { m1, m2 } => {
            let (a, b) = (args::mobius(&m1)?, args::mobius(&m2)?);
            let r = commute_test_tol(&a, &b, tolerance()?, COMPARE_TOL)?;
            let text = format!(
                "commute: {}, equal fixed sets: {}\n",
                r.commute, r.fixed_sets_equal
            );
            out(r, text)
        }
        HypOp::Centralizer { matrix } => {
            let (t, p) = centralizer_type(&args::mobius(&matrix)?)?;
            let text = format!("{t:?} ({p:?})\n");
            out(json!({ "centralizer": t, "one_parameter": p }), text)
        }
        HypOp::Hn { dim } => {
            let v = hn_quotient_isometry_verdict(dim)?;
            let text = format!("{} (order {})\n", v.tag, v.order_formula);
            out(&v, text)
        }
    }
}

fn fiber(op: FiberOp) -> Result<Out, CliError> {
    match op {
        FiberOp::Frame => {
            let f = frame_at_identity()?;
            let mut text = String::new();
            for (j, t) in f.iter().enumerate() {
                let _ = writeln!(text, "Ψ(X{}) = ({:.6}, {:.6})", j + 1, t.x, t.zv);
            }
            out(f, text)
        }
        FiberOp::Embed { matrix } => {
            let (z, w) = unit_tangent_embed(&args::mobius(&matrix)?);
            out(
                json!({ "z": c2(z), "w": c2(w) }),
                format!("φ = ({z}, {w})\n"),
            )
        }
        FiberOp::Christoffel { at, i, j, k } => {
            let g = christoffel_h2(args::complex(&at)?, i, j, k)?;
            out(json!({ "value": g }), format!("{g}\n"))
        }
        FiberOp::Sasaki { z, w, x, zv } => {
            let t = TangentVector::new(
                args::complex(&z)?,
                args::complex(&w)?,
                args::complex(&x)?,
                args::complex(&zv)?,
            )?;
            let (h, v) = hv_decompose(&t);
            let n = sasaki_norm(&t);
            let text = format!(
                "norm {n}\nhorizontal ({}, {})\nvertical ({}, {})\n",
                h.x, h.zv, v.x, v.zv
            );
            out(json!({ "norm": n, "horizontal": h, "vertical": v }), text)
        }
        FiberOp::Quotient { kind } => {
            let k = match kind {
                QuotientKind::Psl2 => FiberedQuotient::Psl2,
                QuotientKind::H2xr => FiberedQuotient::H2xR,
                QuotientKind::Sl2 => FiberedQuotient::Sl2Tilde,
            };
            let d = psl2_quotient_isometry(k);
            let text = descriptor_text(&d);
            out(d, text)
        }
        FiberOp::S2r { gens } => {
            let g = gens
                .iter()
                .map(|s| args::s2r_isometry(s))
                .collect::<Result<Vec<_>, _>>()?;
            let d = s2r_decompose(&g)?;
            let id = s2r_quotient_identity_component(&d).ok();
            let text = format!(
                "|F| = {}, L = {:?}, flip: {}, identity component: {}\n",
                d.f_order_bound,
                d.l_type,
                d.has_flip,
                id.map_or("n/a (no translations)".to_string(), |t| t.name())
            );
            out(
                json!({ "f_order": d.f_order_bound, "l_type": d.l_type, "has_flip": d.has_flip, "identity_component": id }),
                text,
            )
        }
    }
}

fn crystal(a: &CrystalArgs) -> Result<CrystalGroup, CliError> {
    let gens = a
        .gens
        .iter()
        .map(|g| args::square_matrix(g, a.dim))
        .collect::<Result<Vec<_>, _>>()?;
    let lattice: Vec<Vec<i64>> = if a.lattice.is_empty() {
        (0..a.dim)
            .map(|i| (0..a.dim).map(|j| i64::from(i == j)).collect())
            .collect()
    } else {
        a.lattice
            .iter()
            .map(|v| args::vector(v, a.dim))
            .collect::<Result<_, _>>()?
    };
    Ok(CrystalGroup::from_int(a.dim, &gens, &lattice)?)
}

fn euclid(op: EuclidOp) -> Result<Out, CliError> {
    match op {
        EuclidOp::Volume(a) => {
            let g = crystal(&a)?;
            let r = translation_rank(&g);
            let v = euclid_volume_verdict(&g)?;
            out(
                json!({ "translation_rank": r, "volume": v }),
                format!("translation rank {r}: {v:?}\n"),
            )
        }
        EuclidOp::Betti(a) => {
            let (b, tag) = betti_identity_component(&crystal(&a)?)?;
            out(
                json!({ "betti": b, "identity_component": tag }),
                format!("b1 = {b}, identity component {tag}\n"),
            )
        }
        EuclidOp::Iso(a) => {
            let d = euclid_quotient_isometry(&crystal(&a)?)?;
            let text = descriptor_text(&d);
            out(d, text)
        }
    }
}

fn lookup(a: LookupArgs) -> Result<Out, CliError> {
    if a.dump {
        let t = lookup_table();
        let text = serde_json::to_string_pretty(&t).unwrap_or_default() + "\n";
        return out(t, text);
    }
    let family = a.family.unwrap_or_default();
    let rows = spherical_components_lookup(&family)?;
    let mut text = String::new();
    for r in &rows {
        let tag = r.identity_component.map_or("-".to_string(), |t| t.name());
        let _ = writeln!(text, "{tag}\t{}", r.component_data);
    }
    out(rows, text)
}

fn zimmer(a: ZimmerArgs) -> Result<Out, CliError> {
    let geometry: Geometry = a
        .geometry
        .parse()
        .map_err(|e: GeomError| CliError::Schema(e.to_string()))?;
    let factors = parse_factors(&a.factors).map_err(|e| CliError::Schema(e.to_string()))?;
    let spec = LatticeSpec::new(factors, !a.nonuniform)?;
    let identity_component = match &a.identity_component {
        Some(t) => t
            .parse::<GroupTag>()
            .map_err(|e| CliError::Schema(e.to_string()))?,
        None => match geometry {
            Geometry::Nil => {
                let p = a
                    .preset
                    .as_deref()
                    .ok_or_else(|| CliError::Schema("nil needs --preset".into()))?;
                let l = geom3::nil::NilLattice::preset(p)
                    .map_err(|e| CliError::Schema(e.to_string()))?;
                nil_quotient_isometry(&l, None)?.identity_component
            }
            Geometry::Sol => {
                sol_quotient_isometry(&args::sol_lattice_from(
                    a.preset.as_deref(),
                    a.matrix.as_deref(),
                    a.power,
                )?)?
                .identity_component
            }
            Geometry::H3 => GroupTag::Trivial,
            Geometry::H2xR => psl2_quotient_isometry(FiberedQuotient::H2xR).identity_component,
            Geometry::Sl2 => psl2_quotient_isometry(FiberedQuotient::Sl2Tilde).identity_component,
            Geometry::Euclid => {
                let dim = a.dim.unwrap_or(3);
                euclid_quotient_isometry(&crystal(&CrystalArgs {
                    dim,
                    gens: a.gens.clone(),
                    lattice: vec![],
                })?)?
                .identity_component
            }
            Geometry::S3 | Geometry::S2xR => {
                return Err(CliError::Schema(format!(
                    "{geometry} needs --identity-component (the quotient's table row)"
                )));
            }
        },
    };
    let v = zimmer_verdict(
        &ZimmerTarget {
            geometry,
            identity_component,
        },
        &spec,
    )?;
    let mut text = format!("{:?}\n", v.tag);
    for r in &v.reasons {
        let _ = writeln!(text, "  {}: {}", r.rule, r.citation);
    }
    out(v, text)
}
