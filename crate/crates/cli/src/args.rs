//! Argument-value parsers; failures are schema errors.

use geom3::algebra::{IntMat2, QuadRat};
use geom3::fibered::{axis_rotation, S2RIsometry};
use geom3::hyperbolic::MobiusMap;
use geom3::nil::{HeisIsometry, HeisPoint, NilLattice, PlanarOrth};
use geom3::sol::{sol_lattice_make, SolLattice};
use geom3::{nil::nil_lattice_make, GeomError};
use num_complex::Complex64;

use crate::commands::CliError;
use crate::{NilLatticeArgs, SolLatticeArgs};

fn schema(msg: impl Into<String>) -> CliError {
    CliError::Schema(msg.into())
}

fn split(s: &str) -> Vec<&str> {
    s.split(',').map(str::trim).collect()
}

pub fn floats(s: &str, n: usize) -> Result<Vec<f64>, CliError> {
    let parts = split(s);
    if parts.len() != n {
        return Err(schema(format!(
            "expected {n} comma-separated numbers, got '{s}'"
        )));
    }
    parts
        .iter()
        .map(|p| {
            p.parse::<f64>()
                .map_err(|_| schema(format!("bad number '{p}'")))
        })
        .collect()
}

pub fn ints(s: &str) -> Result<Vec<i64>, CliError> {
    split(s)
        .iter()
        .map(|p| {
            p.parse::<i64>()
                .map_err(|_| schema(format!("bad integer '{p}'")))
        })
        .collect()
}

pub fn complex(s: &str) -> Result<Complex64, CliError> {
    let v = floats(s, 2)?;
    Ok(Complex64::new(v[0], v[1]))
}

fn quad(s: &str) -> Result<QuadRat, CliError> {
    s.parse()
        .map_err(|e: GeomError| schema(format!("bad number '{s}': {e}")))
}

fn quad_list(s: &str, n: usize) -> Result<Vec<QuadRat>, CliError> {
    let parts = split(s);
    if parts.len() != n {
        return Err(schema(format!(
            "expected {n} comma-separated numbers, got '{s}'"
        )));
    }
    parts.into_iter().map(quad).collect()
}

/// A float matrix for the hyperbolic plane; a non-positive determinant is a domain error.
pub fn mobius(s: &str) -> Result<MobiusMap, CliError> {
    let e = floats(s, 4)?;
    Ok(MobiusMap::new(e[0], e[1], e[2], e[3])?)
}

pub fn int_matrix(s: &str) -> Result<IntMat2, CliError> {
    IntMat2::parse_row_major(s).map_err(|e| schema(e.to_string()))
}

/// A `dim × dim` row-major integer matrix.
pub fn square_matrix(s: &str, dim: usize) -> Result<Vec<Vec<i64>>, CliError> {
    let e = ints(s)?;
    if e.len() != dim * dim {
        return Err(schema(format!("expected {} entries, got '{s}'", dim * dim)));
    }
    Ok(e.chunks(dim).map(<[i64]>::to_vec).collect())
}

pub fn vector(s: &str, dim: usize) -> Result<Vec<i64>, CliError> {
    let e = ints(s)?;
    if e.len() != dim {
        return Err(schema(format!("expected {dim} entries, got '{s}'")));
    }
    Ok(e)
}

pub fn nil_lattice(a: &NilLatticeArgs) -> Result<NilLattice, CliError> {
    match (&a.preset, &a.u, &a.v) {
        (Some(p), _, _) => NilLattice::preset(p).map_err(|e| schema(e.to_string())),
        (None, Some(u), Some(v)) => {
            let (u, v) = (quad_list(u, 2)?, quad_list(v, 2)?);
            Ok(nil_lattice_make(
                [u[0].clone(), u[1].clone()],
                [v[0].clone(), v[1].clone()],
                quad(&a.r)?,
                quad(&a.s)?,
                a.n,
            )?)
        }
        _ => Err(schema("give --preset or both --u and --v")),
    }
}

pub fn sol_lattice_from(
    preset: Option<&str>,
    matrix: Option<&str>,
    power: u64,
) -> Result<SolLattice, CliError> {
    let a = match (preset, matrix) {
        (Some("fib"), None) => IntMat2::from_i64(2, 1, 1, 1),
        (Some(p), None) => return Err(schema(format!("unknown Sol preset '{p}'"))),
        (None, Some(m)) => int_matrix(m)?,
        _ => return Err(schema("give --preset fib or --matrix a,b,c,d")),
    };
    Ok(sol_lattice_make(&a, power)?)
}

pub fn sol_lattice(a: &SolLatticeArgs) -> Result<SolLattice, CliError> {
    sol_lattice_from(a.preset.as_deref(), a.matrix.as_deref(), a.power)
}

/// `ROT[:x,y,z]`: `id` (or `t`), `qK` (K quarter turns), `hK` (K sixth turns), each optionally followed by `f`.
pub fn heis_isometry(s: &str) -> Result<HeisIsometry, CliError> {
    let (rot, trans) = s.split_once(':').unwrap_or((s, "0,0,0"));
    let (turn, reflect) = match rot.strip_suffix('f') {
        Some(r) => (if r.is_empty() { "id" } else { r }, true),
        None => (rot, false),
    };
    let k = |t: &str| {
        t[1..]
            .parse::<i64>()
            .map_err(|_| schema(format!("bad rotation '{rot}'")))
    };
    let mut m = match turn {
        "id" | "t" => PlanarOrth::identity(),
        t if t.starts_with('q') => PlanarOrth::quarter_turn(k(t)?),
        t if t.starts_with('h') => PlanarOrth::sixth_turn(k(t)?),
        _ => return Err(schema(format!("bad rotation '{rot}'"))),
    };
    if reflect {
        m = m.compose(&PlanarOrth::reflection());
    }
    let t = quad_list(trans, 3)?;
    Ok(HeisIsometry::new(
        m,
        HeisPoint::new(t[0].clone(), t[1].clone(), t[2].clone())?,
    )?)
}

/// `ax,ay,az:angle:shift[:flip]`.
pub fn s2r_isometry(s: &str) -> Result<S2RIsometry, CliError> {
    let parts: Vec<&str> = s.split(':').collect();
    if !(3..=4).contains(&parts.len()) {
        return Err(schema(format!(
            "expected axis:angle:shift[:flip], got '{s}'"
        )));
    }
    let axis = floats(parts[0], 3)?;
    let angle = floats(parts[1], 1)?[0];
    let shift = floats(parts[2], 1)?[0];
    let flip = match parts.get(3).copied() {
        None | Some("1") => 1,
        Some("-1") => -1,
        Some(f) => return Err(schema(format!("flip must be 1 or -1, got '{f}'"))),
    };
    Ok(S2RIsometry::new(
        axis_rotation([axis[0], axis[1], axis[2]], angle),
        shift,
        flip,
    )?)
}

/// Float tolerance from `GEOM3_TOL`, default 1e-9.
pub fn tolerance() -> Result<f64, CliError> {
    match std::env::var("GEOM3_TOL") {
        Err(_) => Ok(geom3::hyperbolic::CLASSIFY_TOL),
        Ok(v) => match v.trim().parse::<f64>() {
            Ok(t) if t > 0.0 && t.is_finite() => Ok(t),
            _ => Err(schema(format!(
                "GEOM3_TOL must be a positive number, got '{v}'"
            ))),
        },
    }
}
