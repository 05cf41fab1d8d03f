//! One entry point per geometry for the isometry group of a finite-volume quotient.

use serde::Serialize;

use crate::error::{GeomError, Result};
use crate::euclid::{euclid_quotient_isometry, CrystalGroup};
use crate::fibered::{
    psl2_quotient_isometry, s2r_decompose, s2r_quotient_identity_component, FiberedQuotient,
    S2RIsometry,
};
use crate::hyperbolic::hn_quotient_isometry_verdict;
use crate::iso::{FinitePart, Geometry, GroupTag, IsoDescriptor};
use crate::nil::{nil_quotient_isometry, HeisIsometry, NilLattice};
use crate::sol::{sol_quotient_isometry, SolLattice};
use crate::spherical::spherical_components_lookup;

pub enum QuotientInput {
    Nil {
        lattice: NilLattice,
        extra: Vec<HeisIsometry>,
    },
    Sol(SolLattice),
    H3,
    Euclid(CrystalGroup),
    /// The caller supplies the identity component from the spherical table.
    S3(GroupTag),
    S2xR(Vec<S2RIsometry>),
    H2xR,
    Sl2,
}

impl QuotientInput {
    pub fn geometry(&self) -> Geometry {
        match self {
            QuotientInput::Nil { .. } => Geometry::Nil,
            QuotientInput::Sol(_) => Geometry::Sol,
            QuotientInput::H3 => Geometry::H3,
            QuotientInput::Euclid(_) => Geometry::Euclid,
            QuotientInput::S3(_) => Geometry::S3,
            QuotientInput::S2xR(_) => Geometry::S2xR,
            QuotientInput::H2xR => Geometry::H2xR,
            QuotientInput::Sl2 => Geometry::Sl2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Summary {
    #[serde(flatten)]
    pub descriptor: IsoDescriptor,
    pub citation: &'static str,
}

fn unknown_finite(label: &str) -> FinitePart {
    FinitePart {
        label: label.into(),
        order: None,
        generators: vec![],
    }
}

pub fn quotient_isometry_summary(input: &QuotientInput) -> Result<Summary> {
    let (descriptor, citation) = match input {
        QuotientInput::Nil { lattice, extra } => (
            nil_quotient_isometry(lattice, (!extra.is_empty()).then_some(extra.as_slice()))?,
            "Iso(X/G) has finitely many connected components; for Nil the identity component is S1",
        ),
        QuotientInput::Sol(l) => (
            sol_quotient_isometry(l)?.to_descriptor(),
            "Iso(X/G) is finite if X is either H3 or Sol",
        ),
        QuotientInput::H3 => {
            let v = hn_quotient_isometry_verdict(3)?;
            (
                IsoDescriptor {
                    geometry: Geometry::H3,
                    identity_component: GroupTag::Trivial,
                    finite_part: unknown_finite("finite, order Vol(F_Γ)/Vol(F_Λ)"),
                    structure: v.tag.into(),
                },
                "Iso(X/G) is finite if X is either H3 or Sol",
            )
        }
        QuotientInput::Euclid(g) => (
            euclid_quotient_isometry(g)?,
            "closed subgroup of R3/Z3 up to finite index; identity component a torus",
        ),
        QuotientInput::S3(tag) => {
            let known = [
                "spherical-manifold",
                "spherical-orbifold-orientation-preserving",
            ]
            .iter()
            .flat_map(|f| spherical_components_lookup(f).unwrap())
            .any(|r| r.identity_component == Some(*tag));
            if !known {
                return Err(GeomError::InvalidInput(format!(
                    "{tag} is not a spherical table entry"
                )));
            }
            (
                IsoDescriptor {
                    geometry: Geometry::S3,
                    identity_component: *tag,
                    finite_part: unknown_finite("finite, order not computed"),
                    structure: "closed subgroup of O(4)".into(),
                },
                "closed subgroup of SO(4)",
            )
        }
        QuotientInput::S2xR(gens) => {
            let id = s2r_quotient_identity_component(&s2r_decompose(gens)?)?;
            (
                IsoDescriptor {
                    geometry: Geometry::S2xR,
                    identity_component: id,
                    finite_part: unknown_finite("finite, order not computed"),
                    structure: "closed subgroup of SO(3) x S1 up to finite index".into(),
                },
                "closed subgroup of SO(3) x S1",
            )
        }
        QuotientInput::H2xR => (
            psl2_quotient_isometry(FiberedQuotient::H2xR),
            "finite extension of S1; closed subgroup of S1 up to finite index",
        ),
        QuotientInput::Sl2 => (
            psl2_quotient_isometry(FiberedQuotient::Sl2Tilde),
            "finite extension of S1; closed subgroup of S1 up to finite index",
        ),
    };
    Ok(Summary {
        descriptor,
        citation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::IntMat2;
    use crate::sol::sol_lattice_make;

    #[test]
    fn examples() {
        let l = sol_lattice_make(&IntMat2::from_i64(2, 1, 1, 1), 5).unwrap();
        let s = quotient_isometry_summary(&QuotientInput::Sol(l)).unwrap();
        assert_eq!(s.descriptor.finite_part.order, Some(605));
        let s = quotient_isometry_summary(&QuotientInput::Nil {
            lattice: NilLattice::square(),
            extra: vec![],
        })
        .unwrap();
        assert_eq!(
            (
                s.descriptor.identity_component,
                s.descriptor.finite_part.label.as_str()
            ),
            (GroupTag::S1, "D4")
        );
        let s = quotient_isometry_summary(&QuotientInput::H3).unwrap();
        assert_eq!(s.descriptor.structure, "FiniteIsometryGroup");
        assert!(quotient_isometry_summary(&QuotientInput::S3(GroupTag::SO3xS1)).is_err());
        assert_eq!(
            quotient_isometry_summary(&QuotientInput::S3(GroupTag::SO4))
                .unwrap()
                .descriptor
                .identity_component,
            GroupTag::SO4
        );
    }
}
