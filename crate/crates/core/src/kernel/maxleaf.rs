//! Kernel for the max leaf number.
//!
//! A connected graph is viewed as a subdivision of a host multigraph: the
//! host vertices are kept and every other vertex has degree two and lies on
//! a subdivision path between two host vertices. Paths of at least twenty
//! vertices are cut into 5-sections and all inner sections are replaced by a
//! single fresh five-vertex path.

use super::trace::{Reducer, RuleRecord};
use super::{BoundCheck, KernelTrace, Parameter, SizeReport};
use crate::error::{Error, Result};
use crate::graph::{max_leaf_number_exact, Graph, DEFAULT_MAX_LEAF_CAP};
use crate::lds::{is_locating_dominating, CodeSet, Instance, Verdict};
use serde::{Deserialize, Serialize};
use std::ops::Range;

/// Paths shorter than this are left alone.
pub const LONG_PATH: usize = 20;
/// Longest subdivision path a kernel may contain.
pub const KERNEL_PATH_BOUND: usize = 19;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubdivisionPath {
    /// Degree-2 vertices in walking order.
    pub vertices: Vec<usize>,
    /// Host vertices adjacent to the first and the last vertex.
    pub ends: (usize, usize),
}

impl SubdivisionPath {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HostDecomposition {
    pub host: Vec<usize>,
    pub paths: Vec<SubdivisionPath>,
}

impl HostDecomposition {
    pub fn longest_path(&self) -> usize {
        self.paths.iter().map(SubdivisionPath::len).max().unwrap_or(0)
    }

    /// Number of edges minus vertices plus one in the host multigraph.
    pub fn cycle_rank(&self, g: &Graph) -> usize {
        (host_edges(g, self).len() + 1).saturating_sub(self.host.len())
    }
}

/// Splits a connected graph into host vertices and subdivision paths. The
/// default host is every vertex of degree other than two, or vertex 0 when
/// the graph is a cycle.
pub fn host_decomposition(g: &Graph, host: Option<&[usize]>) -> Result<HostDecomposition> {
    if g.is_empty() {
        return Err(Error::Precondition("the graph has no vertices".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let host: Vec<usize> = match host {
        Some(h) => {
            let mut h = h.to_vec();
            h.sort_unstable();
            h.dedup();
            for &v in &h {
                g.check_vertex(v).map_err(|_| Error::InvalidHost(format!("vertex {v} is out of range")))?;
            }
            if h.is_empty() {
                return Err(Error::InvalidHost("the host is empty".into()));
            }
            h
        }
        None => {
            let h: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) != 2).collect();
            if h.is_empty() {
                vec![0]
            } else {
                h
            }
        }
    };
    let mut is_host = vec![false; g.n()];
    for &v in &host {
        is_host[v] = true;
    }
    if let Some(v) = (0..g.n()).find(|&v| !is_host[v] && g.degree(v) != 2) {
        return Err(Error::InvalidHost(format!("vertex {v} lies outside the host but has degree {}", g.degree(v))));
    }
    let mut seen = vec![false; g.n()];
    let mut paths = Vec::new();
    for &h in &host {
        for &w in g.neighbors(h) {
            if is_host[w] || seen[w] {
                continue;
            }
            let (mut prev, mut cur) = (h, w);
            let mut vertices = Vec::new();
            while !is_host[cur] {
                seen[cur] = true;
                vertices.push(cur);
                let nb = g.neighbors(cur);
                let next = if nb[0] == prev { nb[1] } else { nb[0] };
                prev = cur;
                cur = next;
            }
            paths.push(SubdivisionPath { vertices, ends: (h, cur) });
        }
    }
    Ok(HostDecomposition { host, paths })
}

/// Sizes of consecutive sections of a subdivision path. Inner sections have
/// five vertices; the two end sections have between five and nine.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiveSectioning {
    sizes: Vec<usize>,
}

impl FiveSectioning {
    pub fn from_sizes(sizes: Vec<usize>) -> Result<Self> {
        let ok = sizes.len() >= 3
            && sizes[1..sizes.len() - 1].iter().all(|&s| s == 5)
            && [sizes[0], sizes[sizes.len() - 1]].iter().all(|s| (5..=9).contains(s))
            && sizes[0].abs_diff(sizes[sizes.len() - 1]) <= 1;
        if !ok {
            return Err(Error::Precondition(format!("{sizes:?} is not a 5-sectioning")));
        }
        Ok(FiveSectioning { sizes })
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Number of sections `t`.
    pub fn t(&self) -> usize {
        self.sizes.len()
    }

    /// Total number of path vertices.
    pub fn len(&self) -> usize {
        self.sizes.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn first(&self) -> usize {
        self.sizes[0]
    }

    pub fn last(&self) -> usize {
        self.sizes[self.sizes.len() - 1]
    }

    pub fn inner_count(&self) -> usize {
        self.sizes.len() - 2
    }

    /// Index ranges of all sections over the path.
    pub fn ranges(&self) -> Vec<Range<usize>> {
        let mut start = 0;
        self.sizes
            .iter()
            .map(|&s| {
                start += s;
                start - s..start
            })
            .collect()
    }

    /// Index ranges of the inner sections.
    pub fn inner_ranges(&self) -> Vec<Range<usize>> {
        let mut r = self.ranges();
        r.pop();
        r.remove(0);
        r
    }
}

/// The maximum 5-sectioning of a path with `len ≥ 15` vertices; the first
/// section takes the larger share of the remainder.
pub fn five_sectioning(len: usize) -> Result<FiveSectioning> {
    if len < 15 {
        return Err(Error::Precondition(format!("a path of {len} vertices is too short to section")));
    }
    let (t, rho) = (len / 5, len % 5);
    let mut sizes = vec![5; t];
    sizes[0] += rho.div_ceil(2);
    sizes[t - 1] += rho / 2;
    FiveSectioning::from_sizes(sizes)
}

fn check_path(g: &Graph, path: &[usize]) -> Result<()> {
    for &v in path {
        g.check_vertex(v)?;
        if g.degree(v) != 2 {
            return Err(Error::Precondition(format!("path vertex {v} has degree {}", g.degree(v))));
        }
    }
    if let Some(w) = path.windows(2).find(|w| !g.has_edge(w[0], w[1])) {
        return Err(Error::Precondition(format!("path vertices {} and {} are not adjacent", w[0], w[1])));
    }
    Ok(())
}

/// Positions (1 to 5) kept in every inner section, and border vertices
/// added to the end sections.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Plan {
    positions: (usize, usize),
    /// Positions in the first section counted so that 5 is its last vertex.
    left: Vec<usize>,
    /// Positions in the last section, 1 being its first vertex.
    right: Vec<usize>,
}

fn plan(l: [bool; 6], r: [bool; 5]) -> Result<Plan> {
    let p = |a, b, left: &[usize], right: &[usize]| Plan { positions: (a, b), left: left.to_vec(), right: right.to_vec() };
    let near_l3 = l[2] || l[3];
    let out = if l[5] {
        if r[1] || r[2] {
            p(2, 5, &[], &[])
        } else if l[3] || l[4] {
            p(3, 5, &[], &[])
        } else {
            p(3, 5, &[3], &[])
        }
    } else if l[4] {
        if r[1] {
            p(1, 4, &[], &[])
        } else if r[2] {
            match (near_l3, r[3] || r[4]) {
                (true, true) => p(2, 4, &[], &[]),
                (true, false) => p(2, 4, &[], &[1]),
                (false, true) => p(2, 4, &[5], &[]),
                (false, false) => p(1, 4, &[], &[1]),
            }
        } else if r[3] {
            p(1, 4, &[], &[1])
        } else {
            return Err(Error::Precondition("the second vertex of the last section is undominated".into()));
        }
    } else if l[3] {
        if r[1] {
            if r[2] || r[3] {
                p(1, 3, &[], &[])
            } else {
                p(1, 3, &[], &[3])
            }
        } else if r[2] {
            p(2, 5, &[5], &[])
        } else if r[3] {
            p(3, 5, &[5], &[])
        } else {
            return Err(Error::Precondition("the second vertex of the last section is undominated".into()));
        }
    } else {
        return Err(Error::Precondition("the fourth-last vertex of the first section is undominated".into()));
    };
    Ok(out)
}

/// Rewrites a solution so that every inner section of `path` holds the same
/// two positions and nothing else. The result is verified and never larger
/// than the input.
pub fn normalize_path_solution(g: &Graph, path: &[usize], sectioning: &FiveSectioning, s: &CodeSet) -> Result<CodeSet> {
    if path.len() < 15 || sectioning.len() != path.len() {
        return Err(Error::Precondition(format!(
            "sectioning covers {} vertices but the path has {}",
            sectioning.len(),
            path.len()
        )));
    }
    check_path(g, path)?;
    if !is_locating_dominating(g, s)?.is_valid() {
        return Err(Error::Precondition("input set is not locating-dominating".into()));
    }
    let ranges = sectioning.ranges();
    let first_end = ranges[0].end;
    let last_start = ranges[ranges.len() - 1].start;
    let mut l = [false; 6];
    for (p, slot) in l.iter_mut().enumerate().skip(2) {
        *slot = s.contains(path[first_end - 1 - (5 - p)]);
    }
    let mut r = [false; 5];
    for (p, slot) in r.iter_mut().enumerate().skip(1) {
        *slot = s.contains(path[last_start + p - 1]);
    }
    let plan = plan(l, r)?;
    let inner: CodeSet = path[first_end..last_start].iter().copied().collect();
    let mut out: CodeSet = s.iter().filter(|&v| !inner.contains(v)).collect();
    for range in sectioning.inner_ranges() {
        out.insert(path[range.start + plan.positions.0 - 1]);
        out.insert(path[range.start + plan.positions.1 - 1]);
    }
    out.extend(plan.left.iter().map(|&p| path[first_end - 1 - (5 - p)]));
    out.extend(plan.right.iter().map(|&p| path[last_start + p - 1]));
    if let Verdict::Invalid(v) = is_locating_dominating(g, &out)? {
        return Err(Error::InternalBug(format!("path normalization with {plan:?} is invalid ({v:?})")));
    }
    if out.len() > s.len() {
        return Err(Error::InternalBug(format!("path normalization with {plan:?} grew from {} to {}", s.len(), out.len())));
    }
    Ok(out)
}

/// Replaces the inner sections of one path of at least twenty vertices.
pub fn rule_long_path(inst: &Instance, decomp: &HostDecomposition, path_id: usize) -> Result<(Instance, KernelTrace)> {
    let path = decomp
        .paths
        .get(path_id)
        .ok_or_else(|| Error::Precondition(format!("no path with id {path_id}")))?;
    check_path(&inst.graph, &path.vertices)?;
    if path.len() < LONG_PATH {
        return Err(Error::Inapplicable(format!("path {path_id} has {} vertices, fewer than {LONG_PATH}", path.len())));
    }
    let mut red = Reducer::new(Parameter::MaxLeaf, inst);
    replace_long_path(&mut red, path)?;
    Ok(red.finish(None, Some(decomp.host.clone())))
}

fn replace_long_path(red: &mut Reducer, path: &SubdivisionPath) -> Result<()> {
    let sectioning = five_sectioning(path.len())?;
    let replacement: Vec<usize> = (red.next_id..red.next_id + 5).collect();
    red.next_id += 5;
    red.push(RuleRecord::LongPathReplaced {
        ends: path.ends,
        path: path.vertices.clone(),
        sections: sectioning.sizes().to_vec(),
        replacement,
        budget_delta: 2 * (sectioning.inner_count() - 1),
    })
}

/// Kernel for the max leaf number with the default or a given host.
pub fn kernelize_maxleaf(inst: &Instance, host: Option<&[usize]>) -> Result<(Instance, KernelTrace, SizeReport)> {
    kernelize_maxleaf_with(inst, host, None)
}

/// As [`kernelize_maxleaf`], with the max leaf number of the input supplied
/// for the size checks. Without it the value is computed when feasible.
pub fn kernelize_maxleaf_with(
    inst: &Instance,
    host: Option<&[usize]>,
    max_leaf: Option<usize>,
) -> Result<(Instance, KernelTrace, SizeReport)> {
    let decomp = host_decomposition(&inst.graph, host)?;
    let mut red = Reducer::new(Parameter::MaxLeaf, inst);
    for path in &decomp.paths {
        if path.len() >= LONG_PATH {
            replace_long_path(&mut red, path)?;
        }
    }
    let k = max_leaf.or_else(|| max_leaf_if_feasible(&inst.graph, &decomp));
    let report = maxleaf_report(&red, &decomp, k)?;
    let (kernel, trace) = red.finish(None, Some(decomp.host.clone()));
    Ok((kernel, trace, report))
}

fn max_leaf_if_feasible(g: &Graph, decomp: &HostDecomposition) -> Option<usize> {
    if g.n() < 2 {
        return None;
    }
    if g.n() <= DEFAULT_MAX_LEAF_CAP {
        return max_leaf_number_exact(g).ok();
    }
    max_leaf_via_host(g, decomp).ok()
}

fn maxleaf_report(red: &Reducer, decomp: &HostDecomposition, k: Option<usize>) -> Result<SizeReport> {
    let no_instance = red.negative();
    let mut report = SizeReport {
        parameter: Parameter::MaxLeaf,
        vertices_before: red.original.n(),
        vertices_after: if no_instance { 1 } else { red.stage.graph.n() },
        budget_before: red.original_budget,
        budget_after: if no_instance { 0 } else { red.budget as usize },
        no_instance,
        modulator_size: None,
        pattern_count: None,
        path_count: Some(decomp.paths.len()),
        max_leaf: k,
        checks: Vec::new(),
    };
    if no_instance {
        report.checks.push(BoundCheck::new("NO instance has one vertex", 1, 1));
        return Ok(report);
    }
    let host_local = red.stage.locals(&decomp.host)?;
    let kernel_decomp = host_decomposition(&red.stage.graph, Some(&host_local))?;
    report.checks.push(BoundCheck::new(
        "longest subdivision path <= 19",
        kernel_decomp.longest_path() as u128,
        KERNEL_PATH_BOUND as u128,
    ));
    if let Some(k) = k {
        let k = k as u128;
        report.checks.push(BoundCheck::new("paths <= 5k - 1 + floor(k/2)", decomp.paths.len() as u128, p2_bound(k)));
        report.checks.push(BoundCheck::new("vertices <= 108k + floor(k/2)", red.stage.graph.n() as u128, 108 * k + k / 2));
    }
    Ok(report)
}

fn p2_bound(k: u128) -> u128 {
    (5 * k + k / 2).saturating_sub(1)
}

/// Whether the number of subdivision paths of the default decomposition is
/// at most `5k − 1 + ⌊k/2⌋`.
pub fn check_p2_bound(g: &Graph, k: usize) -> bool {
    match host_decomposition(g, None) {
        Ok(d) => d.paths.len() as u128 <= p2_bound(k as u128),
        Err(_) => false,
    }
}

/// Lifts a solution of a max-leaf kernel back to the original graph.
pub fn lift_maxleaf_solution(trace: &KernelTrace, d: &CodeSet) -> Result<CodeSet> {
    if trace.parameter != Parameter::MaxLeaf {
        return Err(Error::Precondition("trace does not come from the max-leaf kernel".into()));
    }
    super::lift_solution(trace, d)
}

/// Limit on `C(m, r) · 3^r` for [`max_leaf_via_host`], where `m` is the
/// number of host edges and `r` the cycle rank.
pub const HOST_SEARCH_LIMIT: u128 = 5_000_000;

#[derive(Clone, Copy, Debug)]
struct HostEdge {
    a: usize,
    b: usize,
    inner: usize,
}

fn host_edges(g: &Graph, decomp: &HostDecomposition) -> Vec<(usize, usize, usize)> {
    let mut is_host = vec![false; g.n()];
    for &h in &decomp.host {
        is_host[h] = true;
    }
    let mut edges: Vec<(usize, usize, usize)> =
        g.edges().into_iter().filter(|&(a, b)| is_host[a] && is_host[b]).map(|(a, b)| (a, b, 0)).collect();
    edges.extend(decomp.paths.iter().map(|p| (p.ends.0, p.ends.1, p.len())));
    edges
}

fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1u128, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// Exact max leaf number through the host multigraph. A spanning tree of
/// the graph is a spanning tree of the host plus, for each remaining host
/// edge, one cut inside its subdivision path.
pub fn max_leaf_via_host(g: &Graph, decomp: &HostDecomposition) -> Result<usize> {
    if g.n() < 2 {
        return Err(Error::Precondition("max leaf number needs at least two vertices".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let index = |v: usize| decomp.host.binary_search(&v).expect("host vertex");
    let edges: Vec<HostEdge> = host_edges(g, decomp)
        .into_iter()
        .map(|(a, b, inner)| HostEdge { a: index(a), b: index(b), inner })
        .collect();
    let nh = decomp.host.len();
    let rank = edges.len() + 1 - nh;
    let work = binomial(edges.len() as u128, rank as u128).saturating_mul(pow3(rank));
    if work > HOST_SEARCH_LIMIT {
        return Err(Error::TooLarge { n: g.n(), cap: g.n().saturating_sub(1) });
    }
    let mut best = 0;
    let mut cut = Vec::with_capacity(rank);
    choose_cuts(&edges, nh, rank, 0, &mut cut, &mut best);
    Ok(best)
}

fn pow3(e: usize) -> u128 {
    3u128.saturating_pow(e as u32)
}

fn choose_cuts(edges: &[HostEdge], nh: usize, rank: usize, from: usize, cut: &mut Vec<usize>, best: &mut usize) {
    if cut.len() == rank {
        if let Some(degree) = tree_degrees(edges, nh, cut) {
            let mut degree = degree;
            best_cut_options(edges, cut, 0, 0, &mut degree, best);
        }
        return;
    }
    for e in from..edges.len() {
        if edges.len() - e < rank - cut.len() {
            break;
        }
        cut.push(e);
        choose_cuts(edges, nh, rank, e + 1, cut, best);
        cut.pop();
    }
}

/// Host degrees in the tree formed by all edges outside `cut`, or `None`
/// when those edges do not form a spanning tree.
fn tree_degrees(edges: &[HostEdge], nh: usize, cut: &[usize]) -> Option<Vec<usize>> {
    let mut parent: Vec<usize> = (0..nh).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut degree = vec![0; nh];
    for (i, e) in edges.iter().enumerate() {
        if cut.contains(&i) {
            continue;
        }
        let (ra, rb) = (find(&mut parent, e.a), find(&mut parent, e.b));
        if ra == rb {
            return None;
        }
        parent[ra] = rb;
        degree[e.a] += 1;
        degree[e.b] += 1;
    }
    Some(degree)
}

fn best_cut_options(edges: &[HostEdge], cut: &[usize], i: usize, inner_leaves: usize, degree: &mut [usize], best: &mut usize) {
    if i == cut.len() {
        let total = inner_leaves + degree.iter().filter(|&&d| d == 1).count();
        *best = (*best).max(total);
        return;
    }
    let e = edges[cut[i]];
    let options: &[(usize, usize, usize)] = match e.inner {
        0 => &[(0, 0, 0)],
        1 => &[(1, 1, 0), (1, 0, 1)],
        _ => &[(2, 1, 1), (1, 1, 0), (1, 0, 1)],
    };
    for &(leaves, da, db) in options {
        degree[e.a] += da;
        degree[e.b] += db;
        best_cut_options(edges, cut, i + 1, inner_leaves + leaves, degree, best);
        degree[e.a] -= da;
        degree[e.b] -= db;
    }
}
