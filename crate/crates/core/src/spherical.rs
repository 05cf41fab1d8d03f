//! Static tables for spherical and S²×ℝ quotients.

use serde::{Deserialize, Serialize};

use crate::error::{GeomError, Result};
use crate::iso::GroupTag;

/// The embedded table.
pub const LOOKUP_JSON: &str = include_str!("../data/lookup.json");

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SphericalLookupRow {
    pub family: String,
    /// Absent for rows describing finite groups rather than quotients.
    pub identity_component: Option<GroupTag>,
    pub component_data: serde_json::Value,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LookupTable {
    pub version: u32,
    pub rows: Vec<SphericalLookupRow>,
}

pub const FAMILIES: [&str; 4] = [
    "spherical-manifold",
    "spherical-orbifold-orientation-preserving",
    "s2xr-manifolds",
    "s2xr-free-finite-actions",
];

pub fn parse_table(text: &str) -> Result<LookupTable> {
    let t: LookupTable = serde_json::from_str(text)
        .map_err(|e| GeomError::Consistency(format!("lookup table: {e}")))?;
    if t.version != 1 {
        return Err(GeomError::Consistency(format!(
            "unsupported lookup table version {}",
            t.version
        )));
    }
    if let Some(r) = t
        .rows
        .iter()
        .find(|r| !FAMILIES.contains(&r.family.as_str()))
    {
        return Err(GeomError::Consistency(format!(
            "unknown family {}",
            r.family
        )));
    }
    Ok(t)
}

pub fn lookup_table() -> LookupTable {
    parse_table(LOOKUP_JSON).expect("embedded lookup table is well-formed")
}

/// Rows of one family, or every row for `"all"`.
pub fn spherical_components_lookup(query: &str) -> Result<Vec<SphericalLookupRow>> {
    lookup_in(&lookup_table(), query)
}

pub fn lookup_in(t: &LookupTable, query: &str) -> Result<Vec<SphericalLookupRow>> {
    if query == "all" {
        return Ok(t.rows.clone());
    }
    if !FAMILIES.contains(&query) {
        return Err(GeomError::InvalidInput(format!(
            "unknown family {query:?}; expected one of {FAMILIES:?} or \"all\""
        )));
    }
    Ok(t.rows
        .iter()
        .filter(|r| r.family == query)
        .cloned()
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tags(q: &str) -> Vec<Option<GroupTag>> {
        spherical_components_lookup(q)
            .unwrap()
            .into_iter()
            .map(|r| r.identity_component)
            .collect()
    }

    #[test]
    fn examples() {
        assert_eq!(
            tags("spherical-orbifold-orientation-preserving"),
            vec![
                Some(GroupTag::S1),
                Some(GroupTag::S1xS1),
                Some(GroupTag::Trivial)
            ]
        );
        let groups: Vec<String> = spherical_components_lookup("s2xr-free-finite-actions")
            .unwrap()
            .iter()
            .map(|r| r.component_data["group"].as_str().unwrap().to_string())
            .collect();
        assert_eq!(groups, ["Z/p", "Z/p x Z/2", "D_n"]);
        assert!(tags("spherical-manifold").contains(&Some(GroupTag::SO4)));
        assert_eq!(tags("spherical-manifold").len(), 6);
        assert_eq!(spherical_components_lookup("all").unwrap().len(), 16);
        assert!(spherical_components_lookup("hyperbolic").is_err());
    }

    #[test]
    fn manifold_rows_are_in_allowed_set() {
        use GroupTag::*;
        let allowed = [SO4, SO3, O2, O2xO2, S1xZ2S1, S1, S1xS1, Trivial, O4];
        for fam in [
            "spherical-manifold",
            "spherical-orbifold-orientation-preserving",
        ] {
            for t in tags(fam) {
                assert!(allowed.contains(&t.unwrap()));
            }
        }
    }

    #[test]
    fn round_trip_is_exact() {
        let t = lookup_table();
        let s = serde_json::to_string(&t).unwrap();
        let t2 = parse_table(&s).unwrap();
        assert_eq!(t, t2);
        assert_eq!(s, serde_json::to_string(&t2).unwrap());
    }

    #[test]
    fn rejects_corrupt_tables() {
        assert!(parse_table("{\"version\": 2, \"rows\": []}").is_err());
        assert!(parse_table("{\"version\": 1, \"rows\": [{\"family\": \"x\", \"identity_component\": null, \"component_data\": {}}]}").is_err());
        assert!(parse_table(&LOOKUP_JSON.replace("SO(4)", "SO(5)")).is_err());
    }
}
