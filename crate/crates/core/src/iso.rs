//! Shared descriptors for isometry groups of quotients.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::GeomError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Geometry {
    Euclid,
    S3,
    H3,
    S2xR,
    H2xR,
    Nil,
    Sol,
    Sl2,
}

impl Geometry {
    pub const ALL: [Geometry; 8] = [
        Geometry::Euclid,
        Geometry::S3,
        Geometry::H3,
        Geometry::S2xR,
        Geometry::H2xR,
        Geometry::Nil,
        Geometry::Sol,
        Geometry::Sl2,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Geometry::Euclid => "euclid",
            Geometry::S3 => "s3",
            Geometry::H3 => "h3",
            Geometry::S2xR => "s2xr",
            Geometry::H2xR => "h2xr",
            Geometry::Nil => "nil",
            Geometry::Sol => "sol",
            Geometry::Sl2 => "sl2",
        }
    }
}

impl fmt::Display for Geometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Geometry {
    type Err = GeomError;
    fn from_str(s: &str) -> Result<Self, GeomError> {
        let t = s
            .to_lowercase()
            .replace('²', "2")
            .replace(['×', '·'], "x")
            .replace('ℝ', "r")
            .replace(['_', '-', ' '], "");
        Ok(match t.as_str() {
            "euclid" | "e3" | "euclidean" => Geometry::Euclid,
            "s3" | "spherical" => Geometry::S3,
            "h3" | "hyperbolic" => Geometry::H3,
            "s2xr" | "s2r" => Geometry::S2xR,
            "h2xr" | "h2r" => Geometry::H2xR,
            "nil" => Geometry::Nil,
            "sol" | "solv" => Geometry::Sol,
            "sl2" | "sl2~" | "sl2r" => Geometry::Sl2,
            _ => return Err(GeomError::InvalidInput(format!("unknown geometry '{s}'"))),
        })
    }
}

/// Identity components that occur for compact geometric 3-orbifolds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupTag {
    Trivial,
    S1,
    /// A torus `T^k`, `k ≥ 2`.
    Torus(u32),
    SO3,
    SO4,
    O2,
    O4,
    O2xO2,
    S1xZ2S1,
    S1xS1,
    SO3xS1,
}

impl GroupTag {
    pub fn name(&self) -> String {
        match self {
            GroupTag::Trivial => "trivial".into(),
            GroupTag::S1 => "S1".into(),
            GroupTag::Torus(k) => format!("T{k}"),
            GroupTag::SO3 => "SO(3)".into(),
            GroupTag::SO4 => "SO(4)".into(),
            GroupTag::O2 => "O(2)".into(),
            GroupTag::O4 => "O(4)".into(),
            GroupTag::O2xO2 => "O(2)xO(2)".into(),
            GroupTag::S1xZ2S1 => "S1x_Z2S1".into(),
            GroupTag::S1xS1 => "S1xS1".into(),
            GroupTag::SO3xS1 => "SO(3)xS1".into(),
        }
    }

    /// Torus of dimension `k` (`T⁰` trivial, `T¹ = S¹`).
    pub fn torus(k: u32) -> Self {
        match k {
            0 => GroupTag::Trivial,
            1 => GroupTag::S1,
            k => GroupTag::Torus(k),
        }
    }

    /// Whether the group contains a copy of SO(3).
    pub fn contains_so3(&self) -> bool {
        matches!(
            self,
            GroupTag::SO3 | GroupTag::SO4 | GroupTag::O4 | GroupTag::SO3xS1
        )
    }
}

impl fmt::Display for GroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for GroupTag {
    type Err = GeomError;
    fn from_str(s: &str) -> Result<Self, GeomError> {
        let t: String = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .collect::<String>()
            .replace('×', "x")
            .replace('¹', "1")
            .replace('ℤ', "Z")
            .replace('₂', "2");
        Ok(match t.as_str() {
            "trivial" | "1" => GroupTag::Trivial,
            "S1" | "SO(2)" | "T1" => GroupTag::S1,
            "SO(3)" => GroupTag::SO3,
            "SO(4)" => GroupTag::SO4,
            "O(2)" => GroupTag::O2,
            "O(4)" => GroupTag::O4,
            "O(2)xO(2)" => GroupTag::O2xO2,
            "S1x_Z2S1" => GroupTag::S1xZ2S1,
            "S1xS1" => GroupTag::S1xS1,
            "SO(3)xS1" | "SO3xS1" => GroupTag::SO3xS1,
            _ => match t.strip_prefix('T').and_then(|k| k.parse::<u32>().ok()) {
                Some(k) if k >= 2 => GroupTag::Torus(k),
                _ => return Err(GeomError::InvalidInput(format!("unknown group tag '{s}'"))),
            },
        })
    }
}

impl Serialize for GroupTag {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.name())
    }
}

impl<'de> Deserialize<'de> for GroupTag {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The component group `Iso(X/Γ) / Iso(X/Γ)₀`, as far as it is determined.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FinitePart {
    pub label: String,
    /// `None` when the order is not pinned down.
    pub order: Option<u64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub generators: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoDescriptor {
    pub geometry: Geometry,
    pub identity_component: GroupTag,
    pub finite_part: FinitePart,
    /// Human-readable shape, e.g. `S1 ⋊ D4` or the exact sequence.
    pub structure: String,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tags_roundtrip() {
        for t in [
            GroupTag::Trivial,
            GroupTag::S1,
            GroupTag::Torus(3),
            GroupTag::SO3,
            GroupTag::SO4,
            GroupTag::O2,
            GroupTag::O4,
            GroupTag::O2xO2,
            GroupTag::S1xZ2S1,
            GroupTag::S1xS1,
            GroupTag::SO3xS1,
        ] {
            assert_eq!(t.name().parse::<GroupTag>().unwrap(), t);
            let j = serde_json::to_string(&t).unwrap();
            assert_eq!(serde_json::from_str::<GroupTag>(&j).unwrap(), t);
        }
        assert_eq!("S¹×S¹".parse::<GroupTag>().unwrap(), GroupTag::S1xS1);
        assert!("T1x".parse::<GroupTag>().is_err());
    }

    #[test]
    fn geometry_parse() {
        for g in Geometry::ALL {
            assert_eq!(g.tag().parse::<Geometry>().unwrap(), g);
        }
        assert_eq!("H²×ℝ".parse::<Geometry>().unwrap(), Geometry::H2xR);
    }
}
