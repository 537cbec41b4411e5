use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::liealg::{AlgebraSpec, LieAlgebra};

/// A named algebra shipped with the library.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogEntry {
    pub name: String,
    pub provenance: String,
    pub spec: AlgebraSpec,
}

impl CatalogEntry {
    pub fn algebra(&self) -> Result<LieAlgebra> {
        LieAlgebra::from_spec(&self.spec)
    }
}

const CATALOG_JSON: &str = include_str!("../../data/catalog.json");

pub fn builtin_catalog() -> Vec<CatalogEntry> {
    serde_json::from_str(CATALOG_JSON).expect("shipped catalog parses")
}

pub fn catalog_entry(name: &str) -> Option<CatalogEntry> {
    builtin_catalog().into_iter().find(|e| e.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_is_a_lie_algebra() {
        let cat = builtin_catalog();
        assert!(cat.len() >= 9);
        for e in &cat {
            let alg = e.algebra().unwrap_or_else(|err| panic!("{}: {err}", e.name));
            assert!(!alg.is_abelian(), "{}", e.name);
        }
        let mut names: Vec<_> = cat.iter().map(|e| &e.name).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), cat.len());
    }

    #[test]
    fn four_dim_entry_size() {
        let alg = catalog_entry("aff1-squared-f2").unwrap().algebra().unwrap();
        assert_eq!(alg.order(), 16);
        assert_eq!(alg.center().dim(), 0);
    }
}
