//! Named graph families used by tests, examples and the CLI.

use super::Graph;

pub fn path(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for v in 1..n {
        g.add_edge(v - 1, v);
    }
    g
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    let mut g = path(n);
    g.add_edge(n - 1, 0);
    g
}

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    g
}

/// `K_{1,leaves}` with centre 0.
pub fn star(leaves: usize) -> Graph {
    let mut g = Graph::new(leaves + 1);
    for v in 1..=leaves {
        g.add_edge(0, v);
    }
    g
}

/// Replaces every edge by a path through `k` new vertices. Original vertices
/// keep their ids; new vertices follow in edge order.
pub fn subdivide(g: &Graph, k: usize) -> Graph {
    let mut h = Graph::new(g.n());
    for (u, v) in g.edges().collect::<Vec<_>>() {
        let mut prev = u;
        for _ in 0..k {
            let x = h.add_vertex();
            h.add_edge(prev, x);
            prev = x;
        }
        h.add_edge(prev, v);
    }
    h
}

/// Two hubs 0 and 1 joined by internally disjoint paths with the given
/// numbers of inner vertices. At most one length may be zero.
pub fn theta(inner: &[usize]) -> Graph {
    let mut g = Graph::new(2);
    for &k in inner {
        let mut prev = 0;
        for _ in 0..k {
            let x = g.add_vertex();
            g.add_edge(prev, x);
            prev = x;
        }
        g.add_edge(prev, 1);
    }
    g
}

/// A centre 0 with pendant paths of the given lengths.
pub fn spider(legs: &[usize]) -> Graph {
    let mut g = Graph::new(1);
    for &k in legs {
        let mut prev = 0;
        for _ in 0..k {
            let x = g.add_vertex();
            g.add_edge(prev, x);
            prev = x;
        }
    }
    g
}

/// Disjoint union; vertices of `b` are shifted by `a.n()`.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let mut g = a.clone();
    let off = a.n();
    for _ in 0..b.n() {
        g.add_vertex();
    }
    for (u, v) in b.edges() {
        g.add_edge(u + off, v + off);
    }
    g
}
