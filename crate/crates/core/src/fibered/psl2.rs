//! Shape of the isometry groups of ℍ²×ℝ-, PSL₂(ℝ)- and SL₂~-quotients.

use serde::{Deserialize, Serialize};

use crate::iso::{FinitePart, Geometry, GroupTag, IsoDescriptor};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FiberedQuotient {
    /// `PSL₂(ℝ)/Γ` for a lattice Γ.
    Psl2,
    H2xR,
    /// Quotients of the universal cover.
    Sl2Tilde,
}

/// Finite-covolume quotients: identity component S¹, finite part unconstrained.
pub fn psl2_quotient_isometry(kind: FiberedQuotient) -> IsoDescriptor {
    let (geometry, structure) = match kind {
        FiberedQuotient::Psl2 => (Geometry::Sl2, "S1 ⋊ F"),
        FiberedQuotient::H2xR => (Geometry::H2xR, "finite extension of S1"),
        FiberedQuotient::Sl2Tilde => (Geometry::Sl2, "finite extension of S1"),
    };
    IsoDescriptor {
        geometry,
        identity_component: GroupTag::S1,
        finite_part: FinitePart {
            label: "F (finite, unconstrained)".into(),
            order: None,
            generators: vec![],
        },
        structure: structure.into(),
    }
}
