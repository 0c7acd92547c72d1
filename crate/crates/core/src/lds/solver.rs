//! Exact minimum locating-dominating sets by branch and bound.
//!
//! Iterative deepening over the solution size. Each node branches on the
//! first violation: an undominated vertex `v` must gain a member of `N[v]`, a
//! confounded pair `u, v` must gain a member of `{u, v} ∪ (N(u) Δ N(v))`.
//! Earlier siblings are forbidden in later branches, so no set is visited
//! twice. Neighbourhood codes are tracked as XOR hashes for pair detection.
//!
//! Pruning uses two lower bounds. Let `W` be the undominated outside
//! vertices. Any completion `A` satisfies `2|W| ≤ Σ_{x∈A} ω(x)` with
//! `ω(x) = |N(x)∩W| + [N(x)∩W ≠ ∅] + 2[x∈W]`, because at most one vertex of
//! `W` can be identified by each single neighbour. Independently, a twin
//! class of size `c` needs `c − 1` members in the solution.

use super::{is_locating_dominating, CodeSet, Violation};
use crate::error::{Error, Result};
use crate::graph::{twin_classes, Graph};
use std::collections::hash_map::Entry;
use std::collections::HashMap;

pub const DEFAULT_SOLVER_CAP: usize = 128;

#[derive(Clone, Debug)]
pub struct SolverConfig {
    /// Graphs with more vertices are refused.
    pub max_vertices: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig { max_vertices: DEFAULT_SOLVER_CAP }
    }
}

/// A minimum locating-dominating set, or `None` when `limit` is given and
/// every solution is larger.
pub fn solve_exact(g: &Graph, limit: Option<usize>) -> Result<Option<CodeSet>> {
    solve_exact_with(g, limit, &SolverConfig::default())
}

pub fn solve_exact_with(g: &Graph, limit: Option<usize>, cfg: &SolverConfig) -> Result<Option<CodeSet>> {
    if g.n() > cfg.max_vertices {
        return Err(Error::TooLarge { n: g.n(), cap: cfg.max_vertices });
    }
    let mut s = Search::new(g);
    let max_budget = limit.unwrap_or(g.n()).min(g.n());
    let Some(root_lb) = s.lower_bound() else {
        return Ok(None);
    };
    for budget in root_lb..=max_budget {
        if s.run(budget) {
            let d: CodeSet = s.found[0].iter().copied().collect();
            return finish(g, d).map(Some);
        }
    }
    Ok(None)
}

pub fn lds_number(g: &Graph) -> Result<usize> {
    let d = solve_exact(g, None)?.expect("V(G) is always locating-dominating");
    Ok(d.len())
}

/// Every minimum locating-dominating set, sorted.
pub fn enumerate_minimum_solutions(g: &Graph, cfg: &SolverConfig) -> Result<Vec<CodeSet>> {
    let opt = solve_exact_with(g, None, cfg)?.expect("V(G) is always locating-dominating").len();
    let mut s = Search::new(g);
    s.collect_all = true;
    s.run(opt);
    let mut out: Vec<CodeSet> = s.found.iter().map(|d| d.iter().copied().collect()).collect();
    out.sort();
    out.dedup();
    for d in &out {
        if !is_locating_dominating(g, d)?.is_valid() {
            return Err(Error::InternalBug(format!("enumerated set {:?} is not locating-dominating", d.vertices())));
        }
    }
    Ok(out)
}

fn finish(g: &Graph, d: CodeSet) -> Result<CodeSet> {
    match is_locating_dominating(g, &d)? {
        super::Verdict::Valid => Ok(d),
        super::Verdict::Invalid(v) => Err(Error::InternalBug(format!("solver produced an invalid set: {v:?}"))),
    }
}

/// Breadth-first order from vertex 0, component by component, so branching
/// on the first violation walks the graph locally.
fn bfs_order(g: &Graph) -> Vec<usize> {
    let mut order = Vec::with_capacity(g.n());
    let mut seen = vec![false; g.n()];
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let start = order.len();
        order.push(s);
        let mut i = start;
        while i < order.len() {
            let v = order[i];
            i += 1;
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
        }
    }
    order
}

fn splitmix(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

struct Search {
    n: usize,
    /// `order[i]` is the original id of internal vertex `i`.
    order: Vec<usize>,
    adj: Vec<Vec<usize>>,
    zobrist: Vec<u64>,
    in_d: Vec<bool>,
    forbidden: Vec<u32>,
    dom: Vec<u32>,
    hash: Vec<u64>,
    chosen: Vec<usize>,
    twin_classes: Vec<Vec<usize>>,
    seen: HashMap<u64, usize>,
    scratch: Vec<u32>,
    collect_all: bool,
    found: Vec<Vec<usize>>,
}

impl Search {
    fn new(g: &Graph) -> Self {
        let n = g.n();
        let order = bfs_order(g);
        let mut index = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            index[v] = i;
        }
        let adj: Vec<Vec<usize>> = order
            .iter()
            .map(|&v| {
                let mut row: Vec<usize> = g.neighbors(v).iter().map(|&w| index[w]).collect();
                row.sort_unstable();
                row
            })
            .collect();
        let mut state = 0x5eed_u64;
        let zobrist = (0..n).map(|_| splitmix(&mut state)).collect();
        let classes = twin_classes(g, None)
            .nontrivial()
            .map(|c| c.members.iter().map(|&v| index[v]).collect())
            .collect();
        Search {
            n,
            order,
            adj,
            zobrist,
            in_d: vec![false; n],
            forbidden: vec![0; n],
            dom: vec![0; n],
            hash: vec![0; n],
            chosen: Vec::new(),
            twin_classes: classes,
            seen: HashMap::new(),
            scratch: vec![0; n],
            collect_all: false,
            found: Vec::new(),
        }
    }

    fn run(&mut self, budget: usize) -> bool {
        self.found.clear();
        self.dfs(budget);
        !self.found.is_empty()
    }

    fn add(&mut self, x: usize) {
        self.in_d[x] = true;
        self.chosen.push(x);
        for i in 0..self.adj[x].len() {
            let w = self.adj[x][i];
            self.dom[w] += 1;
            self.hash[w] ^= self.zobrist[x];
        }
    }

    fn remove(&mut self, x: usize) {
        self.in_d[x] = false;
        self.chosen.pop();
        for i in 0..self.adj[x].len() {
            let w = self.adj[x][i];
            self.dom[w] -= 1;
            self.hash[w] ^= self.zobrist[x];
        }
    }

    fn same_code(&self, u: usize, v: usize) -> bool {
        let a = self.adj[u].iter().filter(|&&w| self.in_d[w]);
        let b = self.adj[v].iter().filter(|&&w| self.in_d[w]);
        a.eq(b)
    }

    fn first_violation(&mut self) -> Option<Violation> {
        self.seen.clear();
        let mut collision = false;
        for v in 0..self.n {
            if self.in_d[v] {
                continue;
            }
            if self.dom[v] == 0 {
                return Some(Violation::Undominated(v));
            }
            match self.seen.entry(self.hash[v]) {
                Entry::Occupied(e) => {
                    let u = *e.get();
                    if self.same_code(u, v) {
                        return Some(Violation::Confounded(u, v));
                    }
                    collision = true;
                    break;
                }
                Entry::Vacant(e) => {
                    e.insert(v);
                }
            }
        }
        if collision {
            return self.first_violation_slow();
        }
        None
    }

    fn first_violation_slow(&self) -> Option<Violation> {
        let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
        for v in 0..self.n {
            if self.in_d[v] {
                continue;
            }
            let code: Vec<usize> = self.adj[v].iter().copied().filter(|&w| self.in_d[w]).collect();
            if code.is_empty() {
                return Some(Violation::Undominated(v));
            }
            if let Some(&u) = seen.get(&code) {
                return Some(Violation::Confounded(u, v));
            }
            seen.insert(code, v);
        }
        None
    }

    fn options(&self, viol: Violation) -> Vec<usize> {
        let mut opts = match viol {
            Violation::Undominated(v) => {
                let mut o = self.adj[v].clone();
                o.push(v);
                o
            }
            Violation::Confounded(u, v) => {
                let mut o = vec![u, v];
                let (a, b) = (&self.adj[u], &self.adj[v]);
                let (mut i, mut j) = (0, 0);
                while i < a.len() || j < b.len() {
                    if j == b.len() || (i < a.len() && a[i] < b[j]) {
                        o.push(a[i]);
                        i += 1;
                    } else if i == a.len() || b[j] < a[i] {
                        o.push(b[j]);
                        j += 1;
                    } else {
                        i += 1;
                        j += 1;
                    }
                }
                o
            }
        };
        opts.retain(|&x| self.forbidden[x] == 0 && !self.in_d[x]);
        opts.sort_unstable();
        opts.dedup();
        opts
    }

    /// Lower bound on the number of vertices still to add, or `None` when no
    /// completion exists.
    fn lower_bound(&mut self) -> Option<usize> {
        let mut twin_need = 0;
        for class in &self.twin_classes {
            let mut inside = 0;
            let mut blocked = 0;
            for &v in class {
                if self.in_d[v] {
                    inside += 1;
                } else if self.forbidden[v] > 0 {
                    blocked += 1;
                }
            }
            if blocked > 1 {
                return None;
            }
            twin_need = twin_need.max((class.len() - 1).saturating_sub(inside));
        }

        let cnt = &mut self.scratch;
        cnt.iter_mut().for_each(|c| *c = 0);
        let mut w_size = 0usize;
        for w in 0..self.n {
            if self.in_d[w] || self.dom[w] > 0 {
                continue;
            }
            w_size += 1;
            let mut alive = self.forbidden[w] == 0;
            for &x in &self.adj[w] {
                cnt[x] += 1;
                alive |= self.forbidden[x] == 0;
            }
            if !alive {
                return None;
            }
        }
        if w_size == 0 {
            return Some(twin_need);
        }
        let max_w = self.adj.iter().map(Vec::len).max().unwrap_or(0) + 3;
        let mut buckets = vec![0usize; max_w + 1];
        for x in 0..self.n {
            if self.in_d[x] || self.forbidden[x] > 0 {
                continue;
            }
            let c = cnt[x] as usize;
            let in_w = self.dom[x] == 0;
            let weight = c + usize::from(c > 0) + if in_w { 2 } else { 0 };
            if weight > 0 {
                buckets[weight] += 1;
            }
        }
        let target = 2 * w_size;
        let mut sum = 0;
        let mut items = 0;
        for weight in (1..=max_w).rev() {
            let k = buckets[weight];
            if k == 0 {
                continue;
            }
            let need = (target - sum).div_ceil(weight);
            if need <= k {
                items += need;
                return Some(items.max(twin_need));
            }
            items += k;
            sum += k * weight;
        }
        None
    }

    fn dfs(&mut self, budget: usize) -> bool {
        let Some(viol) = self.first_violation() else {
            let d: Vec<usize> = self.chosen.iter().map(|&x| self.order[x]).collect();
            self.found.push(d);
            return !self.collect_all;
        };
        if budget == 0 {
            return false;
        }
        match self.lower_bound() {
            Some(lb) if lb <= budget => {}
            _ => return false,
        }
        let opts = self.options(viol);
        let mut done = false;
        let mut tried = 0;
        for &c in &opts {
            self.add(c);
            done = self.dfs(budget - 1);
            self.remove(c);
            self.forbidden[c] += 1;
            tried += 1;
            if done {
                break;
            }
        }
        for &c in &opts[..tried] {
            self.forbidden[c] -= 1;
        }
        done
    }
}
