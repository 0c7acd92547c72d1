//! Clique to locating-dominating set.
//!
//! The graph holds `k` copies `H_0..H_{k-1}` of `H`, each turned into a
//! clique, a selection gadget per copy and a group-edge gadget per pair of
//! copies. Vertex ids are allocated in that order.

use super::layout::{Construction, GadgetLayout};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lds::{is_locating_dominating, CodeSet, Verdict};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueInstance {
    h: Graph,
    k: usize,
}

impl CliqueInstance {
    /// Rejects graphs with isolated vertices.
    pub fn new(h: Graph, k: usize) -> Result<Self> {
        if let Some(v) = (0..h.n()).find(|&v| h.degree(v) == 0) {
            return Err(Error::Precondition(format!("vertex {v} of H is isolated")));
        }
        Ok(CliqueInstance { h, k })
    }

    pub fn graph(&self) -> &Graph {
        &self.h
    }

    pub fn k(&self) -> usize {
        self.k
    }
}

fn copy(i: usize, v: usize) -> String {
    format!("copy:{i}:{v}")
}

fn alpha(i: usize, l: usize) -> String {
    format!("alpha:{i}:{l}")
}

fn beta(i: usize, l: usize) -> String {
    format!("beta:{i}:{l}")
}

fn rho(i: usize) -> String {
    format!("rho:{i}")
}

/// The vertex of `Q_{i,j}` wired to `u_i` and `v_j`.
fn edge_vertex(i: usize, j: usize, u: usize, v: usize) -> String {
    format!("e:{i}:{j}:{u}:{v}")
}

/// Its matched partner in `Q'_{i,j}`.
fn edge_partner(i: usize, j: usize, u: usize, v: usize) -> String {
    format!("e':{i}:{j}:{u}:{v}")
}

fn gamma(i: usize, j: usize, l: usize) -> String {
    format!("gamma:{i}:{j}:{l}")
}

fn lambda(i: usize, j: usize, owner: usize) -> String {
    format!("lambda:{i}:{j}:{owner}")
}

fn tau(i: usize, j: usize) -> String {
    format!("tau:{i}:{j}")
}

/// Ordered vertex pairs in slot order: `(u, v)` then `(v, u)` for each
/// edge `uv` with `u < v` in lexicographic order.
fn slots(h: &Graph) -> Vec<(usize, usize)> {
    h.edges().flat_map(|(u, v)| [(u, v), (v, u)]).collect()
}

fn pairs(k: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..k).flat_map(move |i| (i + 1..k).map(move |j| (i, j)))
}

fn clique_parts(layout: &GadgetLayout) -> Result<(&Graph, usize)> {
    match &layout.construction {
        Construction::CliqueReduction { h, k } => Ok((h, *k)),
        _ => Err(Error::Precondition("layout does not come from the clique reduction".into())),
    }
}

/// Builds `(G, d)` with `d = 4k + C(k,2)(2M + 1)`. `H` must have at least
/// two edges.
pub fn build_clique_reduction(inst: &CliqueInstance) -> Result<(Graph, usize, GadgetLayout)> {
    let (h, k) = (&inst.h, inst.k);
    if k < 2 {
        return Err(Error::Precondition("the reduction needs k >= 2".into()));
    }
    if h.m() < 2 {
        return Err(Error::Precondition(
            "H needs at least two edges; with one edge the matched partner of the kept slot and tau get the same code"
                .into(),
        ));
    }
    let mut g = Graph::new(0);
    let mut layout = GadgetLayout::new(Construction::CliqueReduction { h: h.clone(), k });
    let mut copies = vec![Vec::new(); k];
    for (i, c) in copies.iter_mut().enumerate() {
        for v in 0..h.n() {
            c.push(layout.add(&mut g, copy(i, v)));
        }
        for a in 0..c.len() {
            for b in a + 1..c.len() {
                g.add_edge(c[a], c[b]);
            }
        }
    }
    for (i, c) in copies.iter().enumerate() {
        let a: Vec<usize> = (1..=4).map(|l| layout.add(&mut g, alpha(i, l))).collect();
        let b: Vec<usize> = (1..=3).map(|l| layout.add(&mut g, beta(i, l))).collect();
        let r = layout.add(&mut g, rho(i));
        for w in a.windows(2).chain(b.windows(2)) {
            g.add_edge(w[0], w[1]);
        }
        for &x in c {
            for y in [a[0], b[0], r] {
                g.add_edge(x, y);
            }
        }
    }
    let slot_list = slots(h);
    for (i, j) in pairs(k) {
        let q: Vec<usize> = slot_list.iter().map(|&(u, v)| layout.add(&mut g, edge_vertex(i, j, u, v))).collect();
        let qp: Vec<usize> = slot_list.iter().map(|&(u, v)| layout.add(&mut g, edge_partner(i, j, u, v))).collect();
        let gm: Vec<usize> = (1..=4).map(|l| layout.add(&mut g, gamma(i, j, l))).collect();
        let li = layout.add(&mut g, lambda(i, j, i));
        let lj = layout.add(&mut g, lambda(i, j, j));
        let t = layout.add(&mut g, tau(i, j));
        for side in [&q, &qp] {
            for a in 0..side.len() {
                for b in a + 1..side.len() {
                    g.add_edge(side[a], side[b]);
                }
            }
        }
        for (s, (&x, &xp)) in q.iter().zip(&qp).enumerate() {
            g.add_edge(x, xp);
            for y in [li, lj, t, gm[0]] {
                g.add_edge(x, y);
            }
            g.add_edge(xp, gm[0]);
            let (u, v) = slot_list[s];
            g.add_edge(x, copies[i][u]);
            g.add_edge(x, copies[j][v]);
        }
        for w in gm.windows(2) {
            g.add_edge(w[0], w[1]);
        }
        for y in [li, lj, t] {
            g.add_edge(gm[0], y);
        }
        for &x in &copies[i] {
            g.add_edge(li, x);
        }
        for &x in &copies[j] {
            g.add_edge(lj, x);
        }
    }
    let m = h.m();
    layout.budget = 4 * k + k * (k - 1) / 2 * (2 * m + 1);
    Ok((g, layout.budget, layout))
}

fn is_clique_of(h: &Graph, s: &[usize]) -> bool {
    s.iter().enumerate().all(|(a, &x)| x < h.n() && s[a + 1..].iter().all(|&y| x != y && h.has_edge(x, y)))
}

/// The canonical solution for a `k`-clique, placing the clique's vertices
/// into the copies in ascending order.
pub fn canonical_solution_from_clique(layout: &GadgetLayout, s: &[usize]) -> Result<CodeSet> {
    let mut order = s.to_vec();
    order.sort_unstable();
    canonical_solution_with_order(layout, &order)
}

/// The canonical solution placing `order[i]` into copy `i`.
pub fn canonical_solution_with_order(layout: &GadgetLayout, order: &[usize]) -> Result<CodeSet> {
    let (h, k) = clique_parts(layout)?;
    if order.len() != k || !is_clique_of(h, order) {
        return Err(Error::Precondition(format!("{order:?} is not a clique of size {k}")));
    }
    let g = build_clique_reduction(&CliqueInstance { h: h.clone(), k })?.0;
    let mut d = CodeSet::default();
    for (i, &v) in order.iter().enumerate() {
        for role in [alpha(i, 1), alpha(i, 3), beta(i, 2), copy(i, v)] {
            d.insert(layout.get(&role));
        }
    }
    for (i, j) in pairs(k) {
        d.insert(layout.get(&gamma(i, j, 1)));
        d.insert(layout.get(&gamma(i, j, 3)));
        let skip = (order[i], order[j]);
        for (u, v) in slots(h) {
            if (u, v) != skip {
                d.insert(layout.get(&edge_vertex(i, j, u, v)));
            }
        }
    }
    if let Verdict::Invalid(v) = is_locating_dominating(&g, &d)? {
        return Err(Error::InternalBug(format!("canonical solution is not locating-dominating ({v:?})")));
    }
    if d.len() != layout.budget {
        return Err(Error::InternalBug(format!("canonical solution has {} vertices, budget is {}", d.len(), layout.budget)));
    }
    Ok(d)
}

fn extraction(step: &str, detail: String) -> Error {
    Error::Extraction { step: step.into(), detail }
}

/// Reads a `k`-clique of `H` off a solution of size at most `d`, after
/// moving the solution into canonical form.
pub fn extract_clique_from_solution(layout: &GadgetLayout, d: &CodeSet) -> Result<Vec<usize>> {
    let (h, k) = clique_parts(layout)?;
    let g = build_clique_reduction(&CliqueInstance { h: h.clone(), k })?.0;
    if !is_locating_dominating(&g, d)?.is_valid() || d.len() > layout.budget {
        return Err(Error::Precondition("input must be locating-dominating with at most d vertices".into()));
    }
    let mut sigma = Vec::with_capacity(k);
    for i in 0..k {
        let picked: Vec<usize> = (0..h.n()).filter(|&v| d.contains(layout.get(&copy(i, v)))).collect();
        let [v] = picked[..] else {
            return Err(extraction("one vertex per copy", format!("copy {i} meets the solution in {picked:?}")));
        };
        sigma.push(v);
    }
    let mut canonical = CodeSet::default();
    for (i, &v) in sigma.iter().enumerate() {
        for role in [alpha(i, 1), alpha(i, 3), beta(i, 2), copy(i, v)] {
            canonical.insert(layout.get(&role));
        }
    }
    for (i, j) in pairs(k) {
        let untouched: Vec<(usize, usize)> = slots(h)
            .into_iter()
            .filter(|&(u, v)| {
                !d.contains(layout.get(&edge_vertex(i, j, u, v))) && !d.contains(layout.get(&edge_partner(i, j, u, v)))
            })
            .collect();
        let [skip] = untouched[..] else {
            return Err(extraction(
                "one matching edge avoided",
                format!("gadget ({i}, {j}) has {} matching edges outside the solution", untouched.len()),
            ));
        };
        if skip != (sigma[i], sigma[j]) {
            return Err(extraction(
                "edge vertex agrees with copies",
                format!("gadget ({i}, {j}) skips {skip:?} but the copies pick {:?}", (sigma[i], sigma[j])),
            ));
        }
        canonical.insert(layout.get(&gamma(i, j, 1)));
        canonical.insert(layout.get(&gamma(i, j, 3)));
        for (u, v) in slots(h) {
            if (u, v) != skip {
                canonical.insert(layout.get(&edge_vertex(i, j, u, v)));
            }
        }
    }
    if let Verdict::Invalid(v) = is_locating_dominating(&g, &canonical)? {
        return Err(extraction("canonical rebuild", format!("rebuilt set is not locating-dominating ({v:?})")));
    }
    let mut s = sigma;
    s.sort_unstable();
    if !is_clique_of(h, &s) {
        return Err(extraction("clique", format!("{s:?} is not a clique of H")));
    }
    Ok(s)
}

/// A clique cover of `G` with `k + 5k + 7·C(k,2)` cliques, each verified.
pub fn clique_cover(layout: &GadgetLayout) -> Result<Vec<Vec<usize>>> {
    let (h, k) = clique_parts(layout)?;
    let g = build_clique_reduction(&CliqueInstance { h: h.clone(), k })?.0;
    let ids = |roles: &[String]| -> Vec<usize> { roles.iter().map(|r| layout.get(r)).collect() };
    let mut cover = Vec::new();
    for i in 0..k {
        cover.push(ids(&(0..h.n()).map(|v| copy(i, v)).collect::<Vec<_>>()));
    }
    for i in 0..k {
        cover.push(ids(&[rho(i)]));
        cover.push(ids(&[beta(i, 1), beta(i, 2)]));
        cover.push(ids(&[beta(i, 3)]));
        cover.push(ids(&[alpha(i, 1), alpha(i, 2)]));
        cover.push(ids(&[alpha(i, 3), alpha(i, 4)]));
    }
    for (i, j) in pairs(k) {
        cover.push(ids(&[tau(i, j)]));
        cover.push(ids(&[gamma(i, j, 1), gamma(i, j, 2)]));
        cover.push(ids(&[gamma(i, j, 3), gamma(i, j, 4)]));
        cover.push(ids(&[lambda(i, j, i)]));
        cover.push(ids(&[lambda(i, j, j)]));
        cover.push(ids(&slots(h).into_iter().map(|(u, v)| edge_vertex(i, j, u, v)).collect::<Vec<_>>()));
        cover.push(ids(&slots(h).into_iter().map(|(u, v)| edge_partner(i, j, u, v)).collect::<Vec<_>>()));
    }
    let mut covered = vec![false; g.n()];
    for c in &mut cover {
        c.sort_unstable();
        if !g.is_clique(c) {
            return Err(Error::InternalBug(format!("cover set {c:?} is not a clique")));
        }
        for &v in c.iter() {
            covered[v] = true;
        }
    }
    if let Some(v) = covered.iter().position(|&c| !c) {
        return Err(Error::InternalBug(format!("vertex {v} is not covered")));
    }
    Ok(cover)
}

/// A clique of size `k` in `h`, or `None`.
pub fn solve_clique_exact(h: &Graph, k: usize) -> Option<Vec<usize>> {
    fn grow(h: &Graph, k: usize, chosen: &mut Vec<usize>, candidates: &[usize]) -> bool {
        if chosen.len() == k {
            return true;
        }
        if chosen.len() + candidates.len() < k {
            return false;
        }
        for (idx, &v) in candidates.iter().enumerate() {
            let next: Vec<usize> = candidates[idx + 1..].iter().copied().filter(|&w| h.has_edge(v, w)).collect();
            chosen.push(v);
            if grow(h, k, chosen, &next) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut chosen = Vec::new();
    let all: Vec<usize> = (0..h.n()).collect();
    grow(h, k, &mut chosen, &all).then_some(chosen)
}
