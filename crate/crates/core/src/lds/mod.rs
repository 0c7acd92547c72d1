//! Locating-dominating sets: candidate sets, instances, verification.
//!
//! `D` is locating-dominating when every vertex outside `D` has a nonempty
//! neighbourhood in `D` and no two outside vertices share that neighbourhood.

mod solver;

pub use solver::{
    enumerate_minimum_solutions, lds_number, solve_exact, solve_exact_with, SolverConfig,
    DEFAULT_SOLVER_CAP,
};

use crate::error::Result;
use crate::graph::{format_vertex_list, parse_vertex_list, Graph};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// A vertex subset, stored sorted and without duplicates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CodeSet {
    vertices: Vec<usize>,
}

impl CodeSet {
    pub fn new() -> Self {
        CodeSet::default()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn insert(&mut self, v: usize) -> bool {
        match self.vertices.binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.vertices.insert(pos, v);
                true
            }
        }
    }

    pub fn remove(&mut self, v: usize) -> bool {
        match self.vertices.binary_search(&v) {
            Ok(pos) => {
                self.vertices.remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.vertices.iter().copied()
    }

    /// Membership mask over `0..n`.
    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut m = vec![false; n];
        for &v in &self.vertices {
            if v < n {
                m[v] = true;
            }
        }
        m
    }

    pub fn parse(text: &str) -> Result<CodeSet> {
        Ok(parse_vertex_list(text)?.into_iter().collect())
    }

    /// Solution file text: the size, then one id per line.
    pub fn to_file_string(&self) -> String {
        format_vertex_list(&self.vertices)
    }
}

impl FromIterator<usize> for CodeSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut vertices: Vec<usize> = iter.into_iter().collect();
        vertices.sort_unstable();
        vertices.dedup();
        CodeSet { vertices }
    }
}

impl Extend<usize> for CodeSet {
    fn extend<I: IntoIterator<Item = usize>>(&mut self, iter: I) {
        self.vertices.extend(iter);
        self.vertices.sort_unstable();
        self.vertices.dedup();
    }
}

impl<const N: usize> From<[usize; N]> for CodeSet {
    fn from(a: [usize; N]) -> Self {
        a.into_iter().collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    pub graph: Graph,
    pub budget: usize,
}

impl Instance {
    pub fn new(graph: Graph, budget: usize) -> Self {
        Instance { graph, budget }
    }

    /// The budget clamped to `n`.
    pub fn effective_budget(&self) -> usize {
        self.budget.min(self.graph.n())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Violation {
    Undominated(usize),
    /// Two outside vertices with the same neighbourhood in `D`, smaller first.
    Confounded(usize, usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Invalid(Violation),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }

    pub fn violation(&self) -> Option<Violation> {
        match self {
            Verdict::Valid => None,
            Verdict::Invalid(v) => Some(*v),
        }
    }
}

/// Checks `d` against the definition. The witness is the first outside vertex
/// (by id) that is undominated or shares its neighbourhood in `d` with a
/// smaller outside vertex.
pub fn is_locating_dominating(g: &Graph, d: &CodeSet) -> Result<Verdict> {
    for v in d.iter() {
        g.check_vertex(v)?;
    }
    let inside = d.mask(g.n());
    let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
    for v in 0..g.n() {
        if inside[v] {
            continue;
        }
        let code: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| inside[w]).collect();
        if code.is_empty() {
            return Ok(Verdict::Invalid(Violation::Undominated(v)));
        }
        if let Some(&u) = seen.get(&code) {
            return Ok(Verdict::Invalid(Violation::Confounded(u, v)));
        }
        seen.insert(code, v);
    }
    Ok(Verdict::Valid)
}

/// Shorthand for `is_locating_dominating(..)?.is_valid()`.
pub fn is_valid(g: &Graph, d: &CodeSet) -> Result<bool> {
    Ok(is_locating_dominating(g, d)?.is_valid())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::graph::{complete, path};

    #[test]
    fn examples() {
        let p3 = path(3);
        assert_eq!(is_locating_dominating(&p3, &CodeSet::from([0, 2])).unwrap(), Verdict::Valid);
        assert_eq!(
            is_locating_dominating(&p3, &CodeSet::from([1])).unwrap(),
            Verdict::Invalid(Violation::Confounded(0, 2))
        );
        assert_eq!(
            is_locating_dominating(&complete(3), &CodeSet::from([0])).unwrap(),
            Verdict::Invalid(Violation::Confounded(1, 2))
        );
        assert_eq!(
            is_locating_dominating(&path(4), &CodeSet::from([0])).unwrap(),
            Verdict::Invalid(Violation::Undominated(2))
        );
    }

    #[test]
    fn invalid_ids_are_errors() {
        let err = is_locating_dominating(&path(3), &CodeSet::from([3])).unwrap_err();
        assert!(matches!(err, Error::InvalidVertex { vertex: 3, n: 3 }));
    }

    #[test]
    fn codeset_file_round_trip() {
        let d = CodeSet::from([5, 1, 3, 1]);
        assert_eq!(d.vertices(), &[1, 3, 5]);
        assert_eq!(CodeSet::parse(&d.to_file_string()).unwrap(), d);
    }
}
