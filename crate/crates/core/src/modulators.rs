//! Cluster and clique modulators: vertex sets whose removal leaves a cluster
//! graph or a complete graph.

use crate::error::{Error, Result};
use crate::graph::{format_vertex_list, parse_vertex_list, Graph};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModulatorKind {
    Cluster,
    Clique,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Modulator {
    kind: ModulatorKind,
    vertices: Vec<usize>,
}

impl Modulator {
    /// Validates that `g − vertices` lies in the class named by `kind`.
    pub fn new(g: &Graph, kind: ModulatorKind, vertices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut vertices: Vec<usize> = vertices.into_iter().collect();
        vertices.sort_unstable();
        vertices.dedup();
        for &v in &vertices {
            g.check_vertex(v)?;
        }
        let m = Modulator { kind, vertices };
        if !verify_modulator(g, kind, &m.vertices) {
            return Err(Error::InvalidModulator(format!(
                "G - U is not a {} graph",
                match kind {
                    ModulatorKind::Cluster => "cluster",
                    ModulatorKind::Clique => "complete",
                }
            )));
        }
        Ok(m)
    }

    pub fn kind(&self) -> ModulatorKind {
        self.kind
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

    pub fn parse(g: &Graph, kind: ModulatorKind, text: &str) -> Result<Self> {
        Modulator::new(g, kind, parse_vertex_list(text)?)
    }

    pub fn to_file_string(&self) -> String {
        format_vertex_list(&self.vertices)
    }
}

fn remainder(g: &Graph, u: &[usize]) -> Graph {
    g.remove_vertices(u).0
}

/// True iff `g − u` is a cluster graph (`Cluster`) or complete (`Clique`).
pub fn verify_modulator(g: &Graph, kind: ModulatorKind, u: &[usize]) -> bool {
    if u.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let rest = remainder(g, u);
    match kind {
        ModulatorKind::Cluster => rest.find_induced_p3().is_none(),
        ModulatorKind::Clique => rest.m() * 2 == rest.n() * rest.n().saturating_sub(1),
    }
}

/// Repeatedly deletes all three vertices of the first induced P3.
pub fn cluster_modulator_3approx(g: &Graph) -> Modulator {
    let mut removed = vec![false; g.n()];
    let mut u = Vec::new();
    loop {
        let keep: Vec<usize> = (0..g.n()).filter(|&v| !removed[v]).collect();
        let rest = g.induced_subgraph(&keep);
        let Some((a, b, c)) = rest.find_induced_p3() else {
            break;
        };
        for x in [a, b, c] {
            removed[keep[x]] = true;
            u.push(keep[x]);
        }
    }
    u.sort_unstable();
    Modulator { kind: ModulatorKind::Cluster, vertices: u }
}

/// Both endpoints of a greedy maximal matching of the complement.
pub fn clique_modulator_2approx(g: &Graph) -> Modulator {
    let comp = g.complement();
    let mut matched = vec![false; g.n()];
    for (a, b) in comp.edges() {
        if !matched[a] && !matched[b] {
            matched[a] = true;
            matched[b] = true;
        }
    }
    let vertices = (0..g.n()).filter(|&v| matched[v]).collect();
    Modulator { kind: ModulatorKind::Clique, vertices }
}

/// Smallest modulator by exhaustive search; for tests on tiny graphs.
pub fn minimum_modulator_size(g: &Graph, kind: ModulatorKind) -> usize {
    let n = g.n();
    assert!(n <= 16, "exhaustive modulator search is for tiny graphs");
    (0..=n)
        .find(|&k| {
            (0u32..1 << n)
                .filter(|m| m.count_ones() as usize == k)
                .any(|m| verify_modulator(g, kind, &(0..n).filter(|&v| m >> v & 1 == 1).collect::<Vec<_>>()))
        })
        .unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, path};

    #[test]
    fn cluster_examples() {
        let two_triangles =
            Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(cluster_modulator_3approx(&two_triangles).is_empty());
        assert_eq!(cluster_modulator_3approx(&path(3)).vertices(), &[0, 1, 2]);
        let p4 = cluster_modulator_3approx(&path(4));
        assert_eq!(p4.vertices(), &[0, 1, 2]);
    }

    #[test]
    fn clique_examples() {
        assert!(clique_modulator_2approx(&complete(5)).is_empty());
        let mut k5e = complete(5);
        k5e.remove_edge(0, 1);
        assert_eq!(clique_modulator_2approx(&k5e).vertices(), &[0, 1]);
        let p4 = clique_modulator_2approx(&path(4));
        assert!(matches!(p4.len(), 2 | 4));
        assert!(verify_modulator(&path(4), ModulatorKind::Clique, p4.vertices()));
    }

    #[test]
    fn verify_examples() {
        assert!(verify_modulator(&path(3), ModulatorKind::Cluster, &[1]));
        assert!(!verify_modulator(&path(3), ModulatorKind::Clique, &[]));
        assert!(verify_modulator(&complete(4), ModulatorKind::Clique, &[]));
        assert!(Modulator::new(&path(3), ModulatorKind::Clique, []).is_err());
    }
}
