//! Exhaustive generation of graphs up to isomorphism for small `n`.
//!
//! Canonical forms come from individualization-refinement: refine an ordered
//! partition to an equitable one, branch on the first non-singleton cell and
//! keep the smallest adjacency code over all discrete leaves. Twins in the
//! branching cell are interchangeable, so only one per twin class is tried.

use super::Graph;
use std::collections::HashSet;

/// Largest `n` whose upper-triangle adjacency code fits in a `u64`.
pub const MAX_CATALOG_N: usize = 11;

/// All graphs on `n` vertices, one per isomorphism class, in canonical
/// labelling, sorted by canonical code.
///
/// # Panics
/// If `n > MAX_CATALOG_N`.
pub fn nonisomorphic_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= MAX_CATALOG_N, "catalog supports n <= {MAX_CATALOG_N}");
    let mut level: Vec<u64> = vec![0];
    for k in 1..=n {
        let mut next = HashSet::new();
        for &code in &level {
            let base = decode(k - 1, code);
            for mask in 0u32..(1 << (k - 1)) {
                let mut g = base.clone();
                let x = g.add_vertex();
                for v in 0..k - 1 {
                    if mask >> v & 1 == 1 {
                        g.add_edge(v, x);
                    }
                }
                next.insert(canonical_code(&g));
            }
        }
        level = next.into_iter().collect();
        level.sort_unstable();
    }
    level.into_iter().map(|c| decode(n, c)).collect()
}

fn pair_bit(i: usize, j: usize) -> u32 {
    // Pairs (i, j) with i < j enumerated row by row from the top.
    (j * (j - 1) / 2 + i) as u32
}

fn encode(g: &Graph, order: &[usize]) -> u64 {
    // order[pos] = vertex placed at position pos.
    let n = order.len();
    let mut code = 0u64;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(order[i], order[j]) {
                code |= 1 << pair_bit(i, j);
            }
        }
    }
    code
}

fn decode(n: usize, code: u64) -> Graph {
    let mut g = Graph::new(n);
    for j in 1..n {
        for i in 0..j {
            if code >> pair_bit(i, j) & 1 == 1 {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// Isomorphism-invariant code of `g`; equal codes mean isomorphic graphs.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= MAX_CATALOG_N);
    if n == 0 {
        return 0;
    }
    let open: Vec<&[usize]> = (0..n).map(|v| g.neighbors(v)).collect();
    let closed: Vec<Vec<usize>> = (0..n).map(|v| g.closed_neighborhood(v)).collect();
    let twin = |u: usize, v: usize| open[u] == open[v] || closed[u] == closed[v];
    let mut best = u64::MAX;
    let start = refine(g, vec![(0..n).collect()]);
    search(g, start, &twin, &mut best);
    best
}

fn search(g: &Graph, cells: Vec<Vec<usize>>, twin: &dyn Fn(usize, usize) -> bool, best: &mut u64) {
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        *best = (*best).min(encode(g, &order));
        return;
    };
    let cell = &cells[target];
    for (idx, &v) in cell.iter().enumerate() {
        if cell[..idx].iter().any(|&u| twin(u, v)) {
            continue;
        }
        let mut split = cells.clone();
        let rest: Vec<usize> = cell.iter().copied().filter(|&u| u != v).collect();
        split.splice(target..=target, [vec![v], rest]);
        search(g, refine(g, split), twin, best);
    }
}

/// Splits cells by neighbour counts into other cells until equitable.
/// Sub-cells are ordered by count, which keeps the result label-invariant.
fn refine(g: &Graph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut cell_of = vec![0usize; n];
    'outer: loop {
        for (i, c) in cells.iter().enumerate() {
            for &v in c {
                cell_of[v] = i;
            }
        }
        for s in 0..cells.len() {
            for c in 0..cells.len() {
                if cells[c].len() < 2 {
                    continue;
                }
                let count = |v: usize| g.neighbors(v).iter().filter(|&&w| cell_of[w] == s).count();
                let first = count(cells[c][0]);
                if cells[c].iter().all(|&v| count(v) == first) {
                    continue;
                }
                let mut keyed: Vec<(usize, usize)> = cells[c].iter().map(|&v| (count(v), v)).collect();
                keyed.sort_unstable();
                let mut parts: Vec<Vec<usize>> = Vec::new();
                let mut last = usize::MAX;
                for (k, v) in keyed {
                    if k != last {
                        parts.push(Vec::new());
                        last = k;
                    }
                    parts.last_mut().unwrap().push(v);
                }
                cells.splice(c..=c, parts);
                continue 'outer;
            }
        }
        return cells;
    }
}
