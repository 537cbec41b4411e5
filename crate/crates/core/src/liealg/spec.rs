use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// Presentation of an algebra by generators and nonzero brackets, e.g.
/// `<x, y, z | [x, y] = z>`. This is the JSON input format.
///
/// ```json
/// {"q": 2, "dim": 3, "basis": ["x", "y", "z"],
///  "brackets": [{"left": "x", "right": "y", "value": {"z": 1}}]}
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub q: u32,
    pub dim: usize,
    pub basis: Vec<String>,
    #[serde(default)]
    pub brackets: Vec<BracketSpec>,
}

/// One bracket `[left, right] = sum value[name] * name`. Coefficients are
/// element codes in `[0, q)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketSpec {
    pub left: String,
    pub right: String,
    pub value: BTreeMap<String, u32>,
}

impl AlgebraSpec {
    pub fn new(q: u32, basis: &[&str]) -> Self {
        AlgebraSpec {
            q,
            dim: basis.len(),
            basis: basis.iter().map(|s| s.to_string()).collect(),
            brackets: Vec::new(),
        }
    }

    /// Builder helper: adds `[left, right] = sum coeff * name`.
    pub fn bracket(mut self, left: &str, right: &str, value: &[(&str, u32)]) -> Self {
        self.brackets.push(BracketSpec {
            left: left.to_string(),
            right: right.to_string(),
            value: value.iter().map(|(n, c)| (n.to_string(), *c)).collect(),
        });
        self
    }
}
