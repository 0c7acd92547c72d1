//! Exact max leaf number for small connected graphs.
//!
//! For `n ≥ 3` the max leaf number equals `n − γ_c(G)`, where `γ_c` is the
//! connected domination number, so the main routine searches connected
//! dominating sets by increasing size. Spanning-tree enumeration is kept as
//! a slower second route for cross-checking.

use super::Graph;
use crate::error::{Error, Result};

pub const DEFAULT_MAX_LEAF_CAP: usize = 12;

/// Hard limit for the subset search regardless of the configured cap.
const ABSOLUTE_CAP: usize = 30;

pub fn max_leaf_number_exact(g: &Graph) -> Result<usize> {
    max_leaf_number_with_cap(g, DEFAULT_MAX_LEAF_CAP)
}

fn check_input(g: &Graph, cap: usize) -> Result<()> {
    let n = g.n();
    if n > cap {
        return Err(Error::TooLarge { n, cap });
    }
    if n < 2 {
        return Err(Error::Precondition("max leaf number needs at least 2 vertices".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

pub fn max_leaf_number_with_cap(g: &Graph, cap: usize) -> Result<usize> {
    check_input(g, cap.min(ABSOLUTE_CAP))?;
    let n = g.n();
    if n == 2 {
        return Ok(2);
    }
    let closed: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(1u64 << v, |m, &w| m | (1u64 << w)))
        .collect();
    let full = (1u64 << n) - 1;
    for size in 1..=n {
        let mut set = (1u64 << size) - 1;
        while set <= full {
            if dominates(&closed, set, full) && connected(&closed, set) {
                return Ok(n - size);
            }
            // Gosper's hack: next subset of the same size.
            let c = set & set.wrapping_neg();
            let r = set + c;
            set = (((r ^ set) >> 2) / c) | r;
        }
    }
    unreachable!("V(G) is a connected dominating set of a connected graph")
}

fn dominates(closed: &[u64], set: u64, full: u64) -> bool {
    let mut cover = 0u64;
    let mut rest = set;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        cover |= closed[v];
    }
    cover == full
}

fn connected(closed: &[u64], set: u64) -> bool {
    let mut reached = set & set.wrapping_neg();
    loop {
        let mut next = reached;
        let mut rest = reached;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            next |= closed[v] & set;
        }
        if next == reached {
            return reached == set;
        }
        reached = next;
    }
}

/// Enumerates spanning trees by edge inclusion/exclusion with connectivity
/// pruning and returns the best leaf count.
pub fn max_leaf_by_spanning_trees(g: &Graph, cap: usize) -> Result<usize> {
    check_input(g, cap.min(ABSOLUTE_CAP))?;
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut search = TreeSearch { n: g.n(), edges, chosen: Vec::new(), excluded: Vec::new(), best: 0 };
    search.run(0);
    Ok(search.best)
}

struct TreeSearch {
    n: usize,
    edges: Vec<(usize, usize)>,
    chosen: Vec<usize>,
    excluded: Vec<bool>,
    best: usize,
}

impl TreeSearch {
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }

    fn forest(&self) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        for &e in &self.chosen {
            let (u, v) = self.edges[e];
            let (a, b) = (Self::find(&mut parent, u), Self::find(&mut parent, v));
            parent[a] = b;
        }
        parent
    }

    fn still_connectable(&self, from: usize) -> bool {
        let mut parent = self.forest();
        let mut comps = self.n - self.chosen.len();
        for (i, &(u, v)) in self.edges.iter().enumerate().skip(from) {
            if self.excluded[i] {
                continue;
            }
            let (a, b) = (Self::find(&mut parent, u), Self::find(&mut parent, v));
            if a != b {
                parent[a] = b;
                comps -= 1;
            }
        }
        comps == 1
    }

    fn run(&mut self, idx: usize) {
        if self.excluded.len() < self.edges.len() {
            self.excluded.resize(self.edges.len(), false);
        }
        if self.chosen.len() == self.n - 1 {
            let mut deg = vec![0usize; self.n];
            for &e in &self.chosen {
                deg[self.edges[e].0] += 1;
                deg[self.edges[e].1] += 1;
            }
            self.best = self.best.max(deg.iter().filter(|&&d| d == 1).count());
            return;
        }
        if idx == self.edges.len() {
            return;
        }
        let (u, v) = self.edges[idx];
        let mut parent = self.forest();
        if Self::find(&mut parent, u) != Self::find(&mut parent, v) {
            self.chosen.push(idx);
            self.run(idx + 1);
            self.chosen.pop();
        }
        self.excluded[idx] = true;
        if self.still_connectable(idx + 1) {
            self.run(idx + 1);
        }
        self.excluded[idx] = false;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path, star};

    #[test]
    fn examples() {
        assert_eq!(max_leaf_number_exact(&cycle(5)).unwrap(), 2);
        assert_eq!(max_leaf_number_exact(&star(3)).unwrap(), 3);
        assert_eq!(max_leaf_number_exact(&complete(4)).unwrap(), 3);
        assert_eq!(max_leaf_number_exact(&complete(2)).unwrap(), 2);
        assert_eq!(max_leaf_number_exact(&path(7)).unwrap(), 2);
    }

    #[test]
    fn spanning_tree_route_agrees_on_examples() {
        for g in [cycle(5), star(3), complete(4), complete(2), path(6), complete(5)] {
            assert_eq!(
                max_leaf_by_spanning_trees(&g, 12).unwrap(),
                max_leaf_number_exact(&g).unwrap()
            );
        }
    }

    #[test]
    fn refusals() {
        assert!(matches!(max_leaf_number_exact(&path(13)), Err(Error::TooLarge { n: 13, cap: 12 })));
        assert!(max_leaf_number_with_cap(&path(13), 13).is_ok());
        assert!(matches!(max_leaf_number_exact(&Graph::new(3)), Err(Error::Disconnected)));
    }
}
