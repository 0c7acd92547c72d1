//! Simple undirected graphs with vertex ids `0..n`.
//!
//! Adjacency lists are kept sorted, so neighbourhood comparisons are plain
//! slice comparisons and serialization is deterministic.

mod catalog;
mod families;
pub(crate) mod io;
mod max_leaf;
pub mod random;
mod twins;

pub use catalog::{canonical_code, nonisomorphic_graphs};
pub use families::*;
pub use io::{format_vertex_list, parse_vertex_list};
pub use max_leaf::{
    max_leaf_by_spanning_trees, max_leaf_number_exact, max_leaf_number_with_cap,
    DEFAULT_MAX_LEAF_CAP,
};
pub use twins::{twin_classes, TwinClass, TwinClasses, TwinKind};

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    /// Appends an isolated vertex and returns its id.
    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    /// Adds `uv`; duplicate edges are ignored.
    ///
    /// # Panics
    /// On a self-loop or an out-of-range id.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.try_add_edge(u, v).expect("invalid edge");
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        for x in [u, v] {
            if x >= n {
                return Err(Error::InvalidVertex { vertex: x, n });
            }
        }
        if u == v {
            return Err(Error::Precondition(format!("self-loop at {u}")));
        }
        if let Err(pos) = self.adj[u].binary_search(&v) {
            self.adj[u].insert(pos, v);
            let pos = self.adj[v].binary_search(&u).unwrap_err();
            self.adj[v].insert(pos, u);
        }
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if let Ok(pos) = self.adj[u].binary_search(&v) {
            self.adj[u].remove(pos);
            let pos = self.adj[v].binary_search(&u).unwrap();
            self.adj[v].remove(pos);
        }
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// `N[v]`, sorted.
    pub fn closed_neighborhood(&self, v: usize) -> Vec<usize> {
        let mut out = self.adj[v].clone();
        let pos = out.binary_search(&v).unwrap_err();
        out.insert(pos, v);
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut adj = vec![Vec::new(); n];
        for (u, row) in adj.iter_mut().enumerate() {
            let mut it = self.adj[u].iter().peekable();
            for v in 0..n {
                if it.peek() == Some(&&v) {
                    it.next();
                } else if v != u {
                    row.push(v);
                }
            }
        }
        Graph { adj }
    }

    /// Subgraph induced by `keep`; vertex `i` of the result is `keep[i]`.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let adj = keep
            .iter()
            .map(|&v| {
                let mut row: Vec<usize> = self.adj[v]
                    .iter()
                    .filter_map(|&w| (index[w] != usize::MAX).then_some(index[w]))
                    .collect();
                row.sort_unstable();
                row
            })
            .collect();
        Graph { adj }
    }

    /// Deletes `removed` and compacts ids. The remap table sends each old id
    /// to its new id, or `None` for deleted vertices.
    pub fn remove_vertices(&self, removed: &[usize]) -> (Graph, Vec<Option<usize>>) {
        let mut gone = vec![false; self.n()];
        for &v in removed {
            gone[v] = true;
        }
        let keep: Vec<usize> = (0..self.n()).filter(|&v| !gone[v]).collect();
        let mut remap = vec![None; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            remap[v] = Some(i);
        }
        (self.induced_subgraph(&keep), remap)
    }

    /// Components, each sorted, listed by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.connected_components().len() == 1
    }

    pub fn is_clique(&self, vs: &[usize]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    pub fn is_independent(&self, vs: &[usize]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    /// Lowest lexicographic `(a, b, c)` with `ab, bc ∈ E`, `ac ∉ E`, `a < c`.
    pub fn find_induced_p3(&self) -> Option<(usize, usize, usize)> {
        let n = self.n();
        for a in 0..n {
            for &b in &self.adj[a] {
                for &c in &self.adj[b] {
                    if c > a && !self.has_edge(a, c) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    /// True when every component is a clique.
    pub fn is_cluster_graph(&self) -> bool {
        self.connected_components().iter().all(|c| self.is_clique(c))
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::InvalidVertex { vertex: v, n: self.n() })
        }
    }
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    text.parse()
}
