use super::composition::Variant;
use super::hypergraph::HypergraphInstance;
use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Parameters a generated instance was built from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "construction", rename_all = "snake_case")]
pub enum Construction {
    CliqueReduction {
        h: Graph,
        k: usize,
    },
    OrComposition {
        variant: Variant,
        /// Input instances after padding to a power of two.
        instances: Vec<HypergraphInstance>,
        /// Number of instances before padding.
        given: usize,
        /// Union of all hyperedge sets in lexicographic order.
        hyperedges: Vec<[usize; 3]>,
        bits: usize,
    },
}

/// Symbolic names for every generated vertex.
///
/// Role names are colon-separated. Copy, instance and bit indices start at
/// 0; the numbered parts of a gadget (`alpha:i:1` to `alpha:i:4`) start at 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetLayout {
    pub construction: Construction,
    pub budget: usize,
    pub roles: BTreeMap<String, usize>,
}

impl GadgetLayout {
    pub(crate) fn new(construction: Construction) -> Self {
        GadgetLayout { construction, budget: 0, roles: BTreeMap::new() }
    }

    /// Allocates the next vertex id under `role`.
    pub(crate) fn add(&mut self, g: &mut Graph, role: String) -> usize {
        let v = g.add_vertex();
        let prev = self.roles.insert(role, v);
        debug_assert!(prev.is_none(), "role names are unique");
        v
    }

    pub fn id(&self, role: &str) -> Result<usize> {
        self.roles.get(role).copied().ok_or_else(|| Error::Precondition(format!("no vertex has role {role:?}")))
    }

    pub(crate) fn get(&self, role: &str) -> usize {
        self.roles[role]
    }

    /// Role names indexed by vertex id.
    pub fn names(&self) -> Vec<&str> {
        let mut out = vec![""; self.roles.len()];
        for (name, &v) in &self.roles {
            out[v] = name;
        }
        out
    }

    /// True iff the roles name each vertex of `g` exactly once.
    pub fn is_bijection(&self, g: &Graph) -> bool {
        let mut seen = vec![false; g.n()];
        self.roles.len() == g.n()
            && self.roles.values().all(|&v| v < g.n() && !std::mem::replace(&mut seen[v], true))
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}
