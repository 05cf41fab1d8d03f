//! Verdicts for isometric actions of higher-rank lattices.

use serde::{Deserialize, Serialize};

use super::lie::{is_isotypic, SimpleFactor};
use crate::error::{GeomError, Result};
use crate::iso::{Geometry, GroupTag};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeSpec {
    pub factors: Vec<SimpleFactor>,
    pub uniform: bool,
}

impl LatticeSpec {
    pub fn new(factors: Vec<SimpleFactor>, uniform: bool) -> Result<Self> {
        if factors.is_empty() {
            return Err(GeomError::InvalidInput(
                "a lattice spec needs at least one factor".into(),
            ));
        }
        Ok(LatticeSpec { factors, uniform })
    }

    pub fn real_rank(&self) -> u32 {
        self.factors.iter().map(|f| f.real_rank()).sum()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum VerdictTag {
    FactorsThroughFinite,
    PossibleInfiniteIsometricAction,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Reason {
    pub rule: &'static str,
    pub citation: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub tag: VerdictTag,
    pub reasons: Vec<Reason>,
}

pub mod rules {
    use super::Reason;

    pub const NONUNIFORM: Reason = Reason {
        rule: "nonuniform-lattice",
        citation: "a non-uniform higher-rank lattice acting isometrically on a finite-volume geometric 3-orbifold factors through a finite group",
    };
    pub const INFINITE_IMAGE: Reason = Reason {
        rule: "infinite-image-representation",
        citation: "an infinite-image homomorphism to a compact group forces the group G × K to be isotypic",
    };
    pub const GODEMENT: Reason = Reason {
        rule: "godement-compactness",
        citation:
            "Godement's compactness criterion: lattices with compact Galois twist are uniform",
    };
    pub const NO_SO3: Reason = Reason {
        rule: "no-so3-in-isometries",
        citation: "infinite isometric image requires Iso(X/G) to contain SO(3); otherwise the action factors through a finite group",
    };
    pub const NOT_ISOTYPIC: Reason = Reason {
        rule: "not-isotypic-with-so3",
        citation: "the lattice's ambient group together with SO(3) is not isotypic",
    };
    pub const SO3_ISOTYPIC: Reason = Reason {
        rule: "so3-isotypic-uniform",
        citation: "Iso(X) contains SO(3) and the uniform lattice's ambient group is isotypic with SO(3): Galois twists give isometric actions with dense orbits",
    };
    pub const ASPHERICAL: Reason = Reason {
        rule: "aspherical-dimension",
        citation: "isometric actions of SL_r(Z) on closed aspherical n-manifolds factor through a finite group if n < r",
    };
}

/// The quotient being acted on: its geometry and the identity component of its isometry group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZimmerTarget {
    pub geometry: Geometry,
    pub identity_component: GroupTag,
}

impl ZimmerTarget {
    /// Only the S³ and S²×ℝ families can carry an SO(3) of isometries.
    pub fn contains_so3(&self) -> bool {
        matches!(self.geometry, Geometry::S3 | Geometry::S2xR)
            && self.identity_component.contains_so3()
    }
}

pub fn zimmer_verdict(x: &ZimmerTarget, spec: &LatticeSpec) -> Result<Verdict> {
    let rank = spec.real_rank();
    if rank < 2 {
        return Err(GeomError::OutOfScope(format!(
            "real rank {rank} < 2: not a higher-rank lattice"
        )));
    }
    use rules::*;
    if !spec.uniform {
        return Ok(Verdict {
            tag: VerdictTag::FactorsThroughFinite,
            reasons: vec![NONUNIFORM, INFINITE_IMAGE, GODEMENT],
        });
    }
    if !x.contains_so3() {
        return Ok(Verdict {
            tag: VerdictTag::FactorsThroughFinite,
            reasons: vec![NO_SO3],
        });
    }
    let mut with_so3 = spec.factors.clone();
    with_so3.push(SimpleFactor::SO3);
    if is_isotypic(&with_so3) {
        Ok(Verdict {
            tag: VerdictTag::PossibleInfiniteIsometricAction,
            reasons: vec![SO3_ISOTYPIC, INFINITE_IMAGE],
        })
    } else {
        Ok(Verdict {
            tag: VerdictTag::FactorsThroughFinite,
            reasons: vec![NOT_ISOTYPIC, INFINITE_IMAGE],
        })
    }
}

/// `SL_r(ℤ)` on closed aspherical `n`-manifolds; `None` when `n ≥ r`.
pub fn aspherical_check(r: u32, n: u32) -> Result<Option<Verdict>> {
    if r < 3 {
        return Err(GeomError::InvalidInput("r must be at least 3".into()));
    }
    Ok((n < r).then(|| Verdict {
        tag: VerdictTag::FactorsThroughFinite,
        reasons: vec![rules::ASPHERICAL],
    }))
}

/// Maximal dimension of the isometry group of an n-dimensional Alexandrov space.
pub fn max_isometry_dim(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(GeomError::InvalidInput("dimension must be positive".into()));
    }
    Ok(n * (n + 1) / 2)
}
