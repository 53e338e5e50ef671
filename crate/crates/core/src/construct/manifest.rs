//! Family metadata shipped as `data/families.json`.
//!
//! Integer quantities are monomials `factor * m^m * p^(p + pe*e)`; the first
//! row whose `when` clause matches the parameters supplies the expectations.

use serde::{Deserialize, Serialize};

use super::{ConstructError, Params};

const MANIFEST_JSON: &str = include_str!("../../data/families.json");

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Monomial {
    pub factor: u64,
    #[serde(default)]
    pub m: u32,
    #[serde(default)]
    pub p: u32,
    #[serde(default)]
    pub pe: u32,
}

impl Monomial {
    pub fn eval(&self, params: &Params) -> Option<u128> {
        let mut v = self.factor as u128;
        v = v.checked_mul((params.m as u128).checked_pow(self.m)?)?;
        let p_exp = self.p.checked_add(self.pe.checked_mul(params.e)?)?;
        v.checked_mul((params.p as u128).checked_pow(p_exp)?)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct When {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<Vec<u64>>,
}

impl When {
    fn matches(&self, params: &Params) -> bool {
        self.m.as_ref().is_none_or(|ms| ms.contains(&params.m))
            && self.p.as_ref().is_none_or(|ps| ps.contains(&params.p))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    #[serde(default)]
    pub when: When,
    pub aut_order: Monomial,
    pub aut_group: String,
    pub stabilizer: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverEntry {
    pub kind: String,
    pub base: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fibre_order: Option<Monomial>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyEntry {
    pub name: String,
    pub display: String,
    pub parameters: Vec<String>,
    pub conditions: Vec<String>,
    pub vertices: Monomial,
    pub rows: Vec<Row>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cover: Option<CoverEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Manifest {
    pub families: Vec<FamilyEntry>,
}

/// Expectations for one parameterised instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Expected {
    pub vertices: u128,
    pub aut_order: u128,
    pub aut_group: String,
    pub stabilizer: String,
    /// Arc-transitivity level implied by the stabilizer type.
    pub s: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cover: Option<CoverEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fibre_order: Option<u128>,
}

/// The `s` for which a stabilizer type occurs in a pentavalent `(G, s)`-transitive graph.
pub fn s_for_stabilizer(label: &str) -> Option<u32> {
    match label {
        "Z5" | "D5" | "D10" => Some(1),
        "F20" | "F20xZ2" | "A5" | "S5" => Some(2),
        "F20xZ4" | "A4xA5" | "S4xS5" | "(A4xA5):Z2" => Some(3),
        "ASL(2,4)" | "AGL(2,4)" | "ASigmaL(2,4)" | "AGammaL(2,4)" => Some(4),
        _ => None,
    }
}

impl Manifest {
    pub fn builtin() -> &'static Manifest {
        static M: std::sync::OnceLock<Manifest> = std::sync::OnceLock::new();
        M.get_or_init(|| Manifest::parse(MANIFEST_JSON).expect("bundled manifest is valid"))
    }

    pub fn parse(text: &str) -> Result<Manifest, ConstructError> {
        serde_json::from_str(text).map_err(|e| ConstructError::Manifest(e.to_string()))
    }

    pub fn entry(&self, name: &str) -> Option<&FamilyEntry> {
        self.families.iter().find(|f| f.name == name)
    }

    pub fn expected(&self, name: &str, params: &Params) -> Result<Expected, ConstructError> {
        let entry = self.entry(name).ok_or_else(|| ConstructError::UnknownFamily(name.into()))?;
        let row = entry
            .rows
            .iter()
            .find(|r| r.when.matches(params))
            .ok_or_else(|| ConstructError::Manifest(format!("no row of {name} matches {params:?}")))?;
        let overflow = || ConstructError::Manifest(format!("{name}: value overflows u128"));
        Ok(Expected {
            vertices: entry.vertices.eval(params).ok_or_else(overflow)?,
            aut_order: row.aut_order.eval(params).ok_or_else(overflow)?,
            aut_group: row.aut_group.clone(),
            stabilizer: row.stabilizer.clone(),
            s: s_for_stabilizer(&row.stabilizer),
            cover: entry.cover.clone(),
            fibre_order: entry.cover.as_ref().and_then(|c| c.fibre_order.as_ref()).and_then(|f| f.eval(params)),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(m: u64, p: u64, e: u32) -> Params {
        Params { m, p, e }
    }

    #[test]
    fn table_rows() {
        let man = Manifest::builtin();
        let ex = man.expected("cgd1", &params(1, 11, 2)).unwrap();
        assert_eq!((ex.vertices, ex.aut_order), (2662, 13310));
        assert_eq!(ex.fibre_order, Some(121));
        assert_eq!(man.expected("cgd4", &params(1, 5, 1)).unwrap().aut_order, 4000);
        assert_eq!(man.expected("cgd4", &params(1, 11, 1)).unwrap().aut_order, 2420);
        assert_eq!(man.expected("cgd4", &params(5, 11, 1)).unwrap().aut_order, 20 * 5 * 121);
        assert_eq!(man.expected("cgd4", &params(11, 5, 1)).unwrap().aut_order, 10 * 11 * 25);
        assert_eq!(man.expected("cgd5", &params(1, 11, 1)).unwrap().aut_order, 1210);
        assert_eq!(man.expected("cd", &params(11, 0, 0)).unwrap().aut_order, 1320);
        assert_eq!(man.expected("cd", &params(31, 0, 0)).unwrap().aut_order, 310);
        assert_eq!(man.expected("g48", &Params::default()).unwrap().stabilizer, "F20");
        assert!(man.expected("nope", &Params::default()).is_err());
    }

    #[test]
    fn every_family_has_an_entry_and_known_stabilizers() {
        let man = Manifest::builtin();
        for f in super::super::Family::ALL {
            let entry = man.entry(f.name()).unwrap_or_else(|| panic!("{} missing", f.name()));
            for row in &entry.rows {
                assert!(s_for_stabilizer(&row.stabilizer).is_some(), "{}", row.stabilizer);
                let known = crate::groups::catalog().iter().any(|(n, _)| n == &row.stabilizer);
                assert!(known, "{} not in the catalogue", row.stabilizer);
            }
        }
        assert_eq!(man.families.len(), super::super::Family::ALL.len());
    }
}
