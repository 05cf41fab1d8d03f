//! Browser bindings: each export returns compact JSON, or `{"error":{"kind","detail"}}`.

use geom3::algebra::IntMat2;
use geom3::hyperbolic::{classify_isometry, MobiusMap};
use geom3::nil::{nil_lift_point_group, nil_quotient_isometry, planar_point_group, NilLattice};
use geom3::sol::{sol_lattice_make, sol_quotient_isometry};
use geom3::GeomError;
use serde::Serialize;
use wasm_bindgen::prelude::*;

fn render<T: Serialize>(r: Result<T, GeomError>) -> String {
    #[derive(Serialize)]
    struct Body<'a> {
        kind: &'a str,
        detail: String,
    }
    #[derive(Serialize)]
    struct Envelope<'a> {
        error: Body<'a>,
    }
    let s = match r {
        Ok(v) => serde_json::to_string(&v),
        Err(e) => serde_json::to_string(&Envelope {
            error: Body {
                kind: e.kind(),
                detail: e.to_string(),
            },
        }),
    };
    s.unwrap_or_else(|e| format!("{{\"error\":{{\"kind\":\"internal\",\"detail\":\"{e}\"}}}}"))
}

/// Iso(Sol/Γ_{Aⁿ}) for a row-major `a,b,c,d`.
#[wasm_bindgen]
pub fn sol_iso(matrix: &str, power: u32) -> String {
    render(
        IntMat2::parse_row_major(matrix)
            .and_then(|a| sol_lattice_make(&a, u64::from(power)))
            .and_then(|l| sol_quotient_isometry(&l)),
    )
}

/// Trace trichotomy and fixed set of `z ↦ (az + b)/(cz + d)`.
#[wasm_bindgen]
pub fn classify_mobius(a: f64, b: f64, c: f64, d: f64) -> String {
    render(MobiusMap::new(a, b, c, d).and_then(|m| classify_isometry(&m)))
}

/// Iso(H_ℝ/L) for a preset (`HZ`, `Gp:p`, `hex:p`), optionally with the point group adjoined.
#[wasm_bindgen]
pub fn nil_iso(preset: &str, with_point_group: bool) -> String {
    render(NilLattice::preset(preset).and_then(|l| {
        let extra = if with_point_group {
            let pg = planar_point_group(&l.u, &l.v)?;
            Some(nil_lift_point_group(&l, &pg.generators)?)
        } else {
            None
        };
        nil_quotient_isometry(&l, extra.as_deref())
    }))
}
