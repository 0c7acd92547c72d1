//! Kernels for the distance to a cluster graph and to a clique.
//!
//! With a modulator `U` fixed, the cliques of `G − U` are its components.
//! Each clique member has a signature `N_U(v)`, and cliques with the same
//! multiset of signatures form a pattern. Three rules shrink the instance:
//!
//! * twin reduction: of three mutual twins outside `U`, delete one and lower
//!   the budget by one;
//! * trivial patterns (no true twins inside a clique) with `r ≥ 2s + |U| + 2`
//!   cliques of size `s`: delete one clique, budget minus one;
//! * non-trivial patterns with `r ≥ |U| + 2` cliques: delete one clique,
//!   budget minus `|τ|`, where `τ` picks one vertex of every true-twin pair.

use super::report::{pow2, pow3};
use super::trace::{Reducer, RuleRecord};
use super::{BoundCheck, KernelTrace, Parameter, SizeReport};
use crate::error::{Error, Result};
use crate::graph::{twin_classes, Graph};
use crate::lds::{is_locating_dominating, CodeSet, Instance, Verdict};
use crate::modulators::{
    clique_modulator_2approx, cluster_modulator_3approx, verify_modulator, Modulator, ModulatorKind,
};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueRecord {
    /// Index of the clique among the components of `G − U`.
    pub id: usize,
    /// Members sorted by `(signature, id)`; the index is the position.
    pub members: Vec<usize>,
    pub signatures: Vec<Vec<usize>>,
    pub trivial: bool,
    /// The smaller member of every pair sharing a signature.
    pub tau: Vec<usize>,
}

impl CliqueRecord {
    fn new(g: &Graph, in_u: &[bool], id: usize, members: &[usize]) -> Self {
        let mut keyed: Vec<(Vec<usize>, usize)> = members
            .iter()
            .map(|&v| (g.neighbors(v).iter().copied().filter(|&w| in_u[w]).collect(), v))
            .collect();
        keyed.sort();
        let mut tau = Vec::new();
        let mut trivial = true;
        let mut i = 0;
        while i < keyed.len() {
            let mut j = i + 1;
            while j < keyed.len() && keyed[j].0 == keyed[i].0 {
                j += 1;
            }
            if j - i >= 2 {
                trivial = false;
            }
            if j - i == 2 {
                tau.push(keyed[i].1);
            }
            i = j;
        }
        tau.sort_unstable();
        let (signatures, members) = keyed.into_iter().unzip();
        CliqueRecord { id, members, signatures, trivial, tau }
    }

    /// Largest number of members sharing one signature.
    fn max_multiplicity(&self) -> usize {
        let mut best = 0;
        let mut run = 0;
        for i in 0..self.signatures.len() {
            run = if i > 0 && self.signatures[i] == self.signatures[i - 1] { run + 1 } else { 1 };
            best = best.max(run);
        }
        best
    }

    /// True when `D ∩ Q` holds exactly one member of every twin pair and
    /// nothing else.
    fn meets_as_tau(&self, d: &CodeSet) -> bool {
        let mut i = 0;
        while i < self.members.len() {
            let pair = i + 1 < self.members.len() && self.signatures[i] == self.signatures[i + 1];
            let hits = usize::from(d.contains(self.members[i])) + usize::from(pair && d.contains(self.members[i + 1]));
            if hits != usize::from(pair) {
                return false;
            }
            i += if pair { 2 } else { 1 };
        }
        true
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pattern {
    /// Sorted multiset of member signatures.
    pub key: Vec<Vec<usize>>,
    pub cliques: Vec<CliqueRecord>,
    /// Common clique size `s`.
    pub size: usize,
    pub trivial: bool,
    pub tau_size: usize,
}

impl Pattern {
    /// Number of member cliques `r`.
    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    pub fn clique_ids(&self) -> Vec<usize> {
        self.cliques.iter().map(|c| c.id).collect()
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.cliques.iter().flat_map(|c| c.members.iter().copied())
    }

    /// Builds a pattern from given cliques of `g − u`, which must share a key.
    pub(crate) fn from_cliques(g: &Graph, u: &[usize], cliques: &[Vec<usize>]) -> Pattern {
        let in_u = mask(g.n(), u);
        let records: Vec<CliqueRecord> =
            cliques.iter().enumerate().map(|(i, c)| CliqueRecord::new(g, &in_u, i, c)).collect();
        Pattern::from_records(records)
    }

    fn from_records(cliques: Vec<CliqueRecord>) -> Pattern {
        let first = &cliques[0];
        Pattern {
            key: first.signatures.clone(),
            size: first.members.len(),
            trivial: first.trivial,
            tau_size: first.tau.len(),
            cliques,
        }
    }

    /// A position `ℓ` and three cliques whose only member in `d` sits at `ℓ`.
    pub fn aligned_triple(&self, d: &CodeSet) -> Option<(usize, [usize; 3])> {
        let mut by_pos: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (ci, c) in self.cliques.iter().enumerate() {
            let hits: Vec<usize> = (0..c.members.len()).filter(|&p| d.contains(c.members[p])).collect();
            if let [p] = hits[..] {
                by_pos.entry(p).or_default().push(ci);
            }
        }
        by_pos.into_iter().find(|(_, cs)| cs.len() >= 3).map(|(p, cs)| (p, [cs[0], cs[1], cs[2]]))
    }

    /// Index of a clique `Q` with `d ∩ Q` equal to one member per twin pair.
    pub fn tau_clique(&self, d: &CodeSet) -> Option<usize> {
        self.cliques.iter().position(|c| c.meets_as_tau(d))
    }
}

fn mask(n: usize, vs: &[usize]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &v in vs {
        m[v] = true;
    }
    m
}

/// Groups the cliques of `g − u` into patterns, ordered by key.
pub(crate) fn patterns_of(g: &Graph, u: &[usize]) -> Vec<Pattern> {
    let in_u = mask(g.n(), u);
    let rest: Vec<usize> = (0..g.n()).filter(|&v| !in_u[v]).collect();
    let sub = g.induced_subgraph(&rest);
    let mut groups: BTreeMap<Vec<Vec<usize>>, Vec<CliqueRecord>> = BTreeMap::new();
    for (id, comp) in sub.connected_components().into_iter().enumerate() {
        let members: Vec<usize> = comp.iter().map(|&i| rest[i]).collect();
        let rec = CliqueRecord::new(g, &in_u, id, &members);
        groups.entry(rec.signatures.clone()).or_default().push(rec);
    }
    groups.into_values().map(Pattern::from_records).collect()
}

fn check_cluster_modulator(g: &Graph, u: &[usize]) -> Result<()> {
    if !verify_modulator(g, ModulatorKind::Cluster, u) {
        return Err(Error::InvalidModulator("G - U is not a cluster graph".into()));
    }
    Ok(())
}

/// Patterns of the cliques of `g − U`.
pub fn compute_patterns(g: &Graph, u: &Modulator) -> Result<Vec<Pattern>> {
    check_cluster_modulator(g, u.vertices())?;
    Ok(patterns_of(g, u.vertices()))
}

fn trivial_applies(p: &Pattern, u: usize) -> bool {
    p.trivial && p.size >= 2 && p.len() >= 2 * p.size + u + 2
}

fn nontrivial_applies(p: &Pattern, u: usize) -> bool {
    !p.trivial && p.size >= 2 && p.len() >= u + 2
}

/// One exhaustive pass of twin removal over `V(G) \ U`. Returns whether
/// anything was removed.
fn twin_pass(red: &mut Reducer, u: &[usize]) -> Result<bool> {
    let u_local = red.stage.locals(u)?;
    let in_u = mask(red.stage.graph.n(), &u_local);
    let rest: Vec<usize> = (0..red.stage.graph.n()).filter(|&v| !in_u[v]).collect();
    let classes = twin_classes(&red.stage.graph, Some(&rest));
    let mut plan = Vec::new();
    for class in classes.nontrivial() {
        let mut members: Vec<usize> = class.members.iter().map(|&v| red.stage.labels[v]).collect();
        while members.len() > 2 {
            let removed = members.pop().unwrap();
            plan.push(RuleRecord::TwinRemoved { removed, twins: members.clone(), budget_delta: 1 });
        }
    }
    let any = !plan.is_empty();
    for record in plan {
        red.push(record)?;
        if red.negative() {
            break;
        }
    }
    Ok(any)
}

fn universal(red: &Reducer, vs: &[usize]) -> Vec<usize> {
    vs.iter().map(|&v| red.stage.labels[v]).collect()
}

fn remove_clique(red: &mut Reducer, p: &Pattern, u_len: usize) -> Result<()> {
    let victim = p
        .cliques
        .iter()
        .enumerate()
        .max_by_key(|(_, c)| c.members.iter().min().copied())
        .map(|(i, _)| i)
        .unwrap();
    let removed = universal(red, &p.cliques[victim].members);
    let remaining: Vec<Vec<usize>> = p
        .cliques
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != victim)
        .map(|(_, c)| universal(red, &c.members))
        .collect();
    let key: Vec<Vec<usize>> = p.key.iter().map(|sig| universal(red, sig)).collect();
    let record = if p.trivial {
        debug_assert!(trivial_applies(p, u_len));
        RuleRecord::TrivialCliqueRemoved { key, removed, remaining, budget_delta: 1 }
    } else {
        let tau = universal(red, &p.cliques[victim].tau);
        RuleRecord::NontrivialCliqueRemoved { key, removed, tau, remaining, budget_delta: p.tau_size }
    };
    red.push(record)
}

/// Applies the first applicable clique rule. Returns whether one applied.
fn pattern_step(red: &mut Reducer, u: &[usize]) -> Result<bool> {
    let u_local = red.stage.locals(u)?;
    for p in patterns_of(&red.stage.graph, &u_local) {
        if trivial_applies(&p, u.len()) || nontrivial_applies(&p, u.len()) {
            if !p.trivial && p.cliques.iter().any(|c| c.max_multiplicity() > 2) {
                return Err(Error::Precondition("twin reduction must run before the clique rules".into()));
            }
            remove_clique(red, &p, u.len())?;
            return Ok(true);
        }
    }
    Ok(false)
}

fn checked_modulator(g: &Graph, u: &Modulator) -> Result<()> {
    if !verify_modulator(g, u.kind(), u.vertices()) {
        return Err(Error::InvalidModulator("modulator does not fit this graph".into()));
    }
    Ok(())
}

fn parameter_of(u: &Modulator) -> Parameter {
    match u.kind() {
        ModulatorKind::Cluster => Parameter::Cluster,
        ModulatorKind::Clique => Parameter::Clique,
    }
}

/// Removes twins outside `U` until every twin class there has at most two
/// members.
pub fn rule_twin_reduce(inst: &Instance, u: &Modulator) -> Result<(Instance, KernelTrace)> {
    checked_modulator(&inst.graph, u)?;
    let mut red = Reducer::new(parameter_of(u), inst);
    while !red.negative() && twin_pass(&mut red, u.vertices())? {}
    Ok(red.finish(Some(u.vertices().to_vec()), None))
}

fn single_clique_rule(inst: &Instance, u: &Modulator, pattern: &Pattern, trivial: bool) -> Result<(Instance, KernelTrace)> {
    check_cluster_modulator(&inst.graph, u.vertices())?;
    let applies = if trivial { trivial_applies(pattern, u.len()) } else { nontrivial_applies(pattern, u.len()) };
    if !applies {
        return Err(Error::Inapplicable(format!(
            "pattern with r = {}, s = {}, |U| = {} and trivial = {} does not meet the threshold",
            pattern.len(),
            pattern.size,
            u.len(),
            pattern.trivial
        )));
    }
    let current = patterns_of(&inst.graph, u.vertices());
    let Some(p) = current.into_iter().find(|p| p == pattern) else {
        return Err(Error::Inapplicable("pattern does not belong to this instance".into()));
    };
    if !trivial && p.cliques.iter().any(|c| c.max_multiplicity() > 2) {
        return Err(Error::Precondition("twin reduction must run before the clique rules".into()));
    }
    let mut red = Reducer::new(Parameter::Cluster, inst);
    remove_clique(&mut red, &p, u.len())?;
    Ok(red.finish(Some(u.vertices().to_vec()), None))
}

/// Removes one clique of a trivial pattern with `r ≥ 2s + |U| + 2`.
pub fn rule_trivial_pattern(inst: &Instance, u: &Modulator, pattern: &Pattern) -> Result<(Instance, KernelTrace)> {
    single_clique_rule(inst, u, pattern, true)
}

/// Removes one clique of a non-trivial pattern with `r ≥ |U| + 2`.
pub fn rule_nontrivial_pattern(inst: &Instance, u: &Modulator, pattern: &Pattern) -> Result<(Instance, KernelTrace)> {
    single_clique_rule(inst, u, pattern, false)
}

/// Kernel for the distance to a cluster graph. Without a modulator the
/// 3-approximation supplies one.
pub fn kernelize_cluster(inst: &Instance, u: Option<&Modulator>) -> Result<(Instance, KernelTrace, SizeReport)> {
    let u = match u {
        Some(u) => {
            check_cluster_modulator(&inst.graph, u.vertices())?;
            u.clone()
        }
        None => cluster_modulator_3approx(&inst.graph),
    };
    let uv = u.vertices();
    let mut red = Reducer::new(Parameter::Cluster, inst);
    loop {
        while !red.negative() && twin_pass(&mut red, uv)? {}
        if red.negative() || !pattern_step(&mut red, uv)? {
            break;
        }
        while !red.negative() && pattern_step(&mut red, uv)? {}
        if red.negative() {
            break;
        }
    }
    let report = cluster_report(&red, uv, Parameter::Cluster);
    let (kernel, trace) = red.finish(Some(uv.to_vec()), None);
    Ok((kernel, trace, report))
}

/// Kernel for the distance to a clique: twin reduction outside `U` only.
/// Without a modulator the 2-approximation supplies one.
pub fn kernelize_clique(inst: &Instance, u: Option<&Modulator>) -> Result<(Instance, KernelTrace, SizeReport)> {
    let u = match u {
        Some(u) => {
            if !verify_modulator(&inst.graph, ModulatorKind::Clique, u.vertices()) {
                return Err(Error::InvalidModulator("G - U is not complete".into()));
            }
            u.clone()
        }
        None => clique_modulator_2approx(&inst.graph),
    };
    let uv = u.vertices();
    let mut red = Reducer::new(Parameter::Clique, inst);
    while !red.negative() && twin_pass(&mut red, uv)? {}
    let report = cluster_report(&red, uv, Parameter::Clique);
    let (kernel, trace) = red.finish(Some(uv.to_vec()), None);
    Ok((kernel, trace, report))
}

fn cluster_report(red: &Reducer, u: &[usize], parameter: Parameter) -> SizeReport {
    let no_instance = red.negative();
    let mut report = SizeReport {
        parameter,
        vertices_before: red.original.n(),
        vertices_after: if no_instance { 1 } else { red.stage.graph.n() },
        budget_before: red.original_budget,
        budget_after: if no_instance { 0 } else { red.budget as usize },
        no_instance,
        modulator_size: Some(u.len()),
        pattern_count: None,
        path_count: None,
        max_leaf: None,
        checks: Vec::new(),
    };
    if no_instance {
        report.checks.push(BoundCheck::new("NO instance has one vertex", 1, 1));
        return report;
    }
    let k = u.len() as u128;
    let g = &red.stage.graph;
    if parameter == Parameter::Clique {
        report.checks.push(BoundCheck::new("vertices <= |U| + 2*2^|U|", g.n() as u128, k.saturating_add(2u128.saturating_mul(pow2(k)))));
    }
    let u_local = red.stage.locals(u).expect("modulator survives reduction");
    let patterns = patterns_of(g, &u_local);
    report.pattern_count = Some(patterns.len());
    let largest = patterns.iter().map(|p| p.size).max().unwrap_or(0) as u128;
    report.checks.push(BoundCheck::new("clique size <= 2^(|U|+1)", largest, pow2(k + 1)));
    let worst = |trivial: bool, bound: &dyn Fn(&Pattern) -> u128| {
        patterns
            .iter()
            .filter(|p| p.trivial == trivial)
            .map(|p| (p.len() as u128, bound(p)))
            .max_by_key(|&(r, b)| (r as i128) - (b as i128))
    };
    if let Some((r, b)) = worst(true, &|p| 2 * p.size as u128 + k + 1) {
        report.checks.push(BoundCheck::new("cliques per trivial pattern <= 2s+|U|+1", r, b));
    }
    if let Some((r, b)) = worst(false, &|_| k + 1) {
        report.checks.push(BoundCheck::new("cliques per non-trivial pattern <= |U|+1", r, b));
    }
    let count = patterns.len() as u128;
    report.checks.push(BoundCheck::new("pattern count <= 3^(2^|U|) - 1", count, pow3(pow2(k)).saturating_sub(1)));
    report.checks.push(BoundCheck::informational("pattern count <= 2*2^(2^|U|)", count, 2u128.saturating_mul(pow2(pow2(k)))));
    report
}

fn verified_normal(g: &Graph, d: &CodeSet, out: CodeSet, what: &str) -> Result<CodeSet> {
    if let Verdict::Invalid(v) = is_locating_dominating(g, &out)? {
        return Err(Error::InternalBug(format!("{what}: output is not locating-dominating ({v:?})")));
    }
    if out.len() > d.len() {
        return Err(Error::InternalBug(format!("{what}: output grew from {} to {}", d.len(), out.len())));
    }
    Ok(out)
}

fn check_input(g: &Graph, u: &[usize], d: &CodeSet) -> Result<()> {
    for &v in u {
        g.check_vertex(v)?;
    }
    if !is_locating_dominating(g, d)?.is_valid() {
        return Err(Error::Precondition("input set is not locating-dominating".into()));
    }
    Ok(())
}

/// `(D ∪ U) \ V(pattern)` plus the given vertices.
fn rebuild(d: &CodeSet, u: &[usize], pattern: &Pattern, extra: impl IntoIterator<Item = usize>) -> CodeSet {
    let inside: CodeSet = pattern.vertices().collect();
    let mut out: CodeSet = d.iter().chain(u.iter().copied()).filter(|&v| !inside.contains(v)).collect();
    out.extend(extra);
    out
}

/// Rewrites a solution so that three cliques of a trivial pattern meet it in
/// exactly their member at one common position. Requires `r ≥ 2s + |U| + 1`.
pub fn normalize_trivial_solution(g: &Graph, u: &[usize], pattern: &Pattern, d: &CodeSet) -> Result<CodeSet> {
    check_input(g, u, d)?;
    if !pattern.trivial || pattern.len() < 2 * pattern.size + u.len() + 1 {
        return Err(Error::Precondition("needs a trivial pattern with r >= 2s + |U| + 1".into()));
    }
    let inside = pattern.vertices().filter(|&v| d.contains(v)).count();
    let out = if inside < pattern.len() + u.len() && pattern.aligned_triple(d).is_some() {
        d.clone()
    } else {
        rebuild(d, u, pattern, pattern.cliques.iter().map(|c| c.members[0]))
    };
    let out = verified_normal(g, d, out, "trivial-pattern normalization")?;
    if pattern.aligned_triple(&out).is_none() {
        return Err(Error::InternalBug("trivial-pattern normalization left no aligned triple".into()));
    }
    Ok(out)
}

/// Rewrites a solution so that some clique of a non-trivial pattern meets it
/// in exactly one vertex per twin pair. Requires `r ≥ |U| + 1`.
pub fn normalize_nontrivial_solution(g: &Graph, u: &[usize], pattern: &Pattern, d: &CodeSet) -> Result<CodeSet> {
    check_input(g, u, d)?;
    if pattern.trivial || pattern.len() < u.len() + 1 {
        return Err(Error::Precondition("needs a non-trivial pattern with r >= |U| + 1".into()));
    }
    if pattern.cliques.iter().any(|c| c.max_multiplicity() > 2) {
        return Err(Error::Precondition("a signature occurs more than twice in a clique".into()));
    }
    let out = if pattern.tau_clique(d).is_some() {
        d.clone()
    } else {
        rebuild(d, u, pattern, pattern.cliques.iter().flat_map(|c| c.tau.iter().copied()))
    };
    let out = verified_normal(g, d, out, "non-trivial-pattern normalization")?;
    if pattern.tau_clique(&out).is_none() {
        return Err(Error::InternalBug("non-trivial-pattern normalization left no tau clique".into()));
    }
    Ok(out)
}

/// Lifts a solution of a cluster or clique kernel back to the original graph.
pub fn lift_cluster_solution(trace: &KernelTrace, d: &CodeSet) -> Result<CodeSet> {
    if trace.parameter == Parameter::MaxLeaf {
        return Err(Error::Precondition("trace comes from the max-leaf kernel".into()));
    }
    super::lift_solution(trace, d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, path, random::pattern_copies, star};
    use crate::kernel::lift_solution;
    use crate::lds::{enumerate_minimum_solutions, lds_number, solve_exact, SolverConfig};

    fn cluster_mod(g: &Graph, u: &[usize]) -> Modulator {
        Modulator::new(g, ModulatorKind::Cluster, u.iter().copied()).unwrap()
    }

    fn decision(g: &Graph, d: usize) -> bool {
        lds_number(g).unwrap() <= d
    }

    /// `u` (id 14) plus 7 disjoint K2s whose first endpoints see `u`.
    fn trivial_fixture() -> (Graph, Vec<usize>) {
        (pattern_copies(1, &[vec![0], vec![]], 7), vec![14])
    }

    /// `u` (id 6) plus 3 disjoint K2s fully adjacent to `u`.
    fn nontrivial_fixture() -> (Graph, Vec<usize>) {
        (pattern_copies(1, &[vec![0], vec![0]], 3), vec![6])
    }

    #[test]
    fn twin_rule_examples() {
        let (k, t) = rule_twin_reduce(&Instance::new(complete(4), 3), &cluster_mod(&complete(4), &[])).unwrap();
        assert_eq!((k.graph.clone(), k.budget), (complete(2), 1));
        assert_eq!(t.records.len(), 2);
        assert_eq!((lds_number(&complete(4)).unwrap(), lds_number(&k.graph).unwrap()), (3, 1));

        let s = star(4);
        let (k, _) = rule_twin_reduce(&Instance::new(s.clone(), 4), &cluster_mod(&s, &[0])).unwrap();
        assert_eq!((k.graph, k.budget), (star(2), 2));
        assert_eq!((lds_number(&star(4)).unwrap(), lds_number(&star(2)).unwrap()), (4, 2));

        let p4 = path(4);
        let u = cluster_modulator_3approx(&p4);
        let (k, t) = rule_twin_reduce(&Instance::new(p4.clone(), 2), &u).unwrap();
        assert_eq!((k.graph, k.budget), (p4, 2));
        assert!(t.records.is_empty());
    }

    #[test]
    fn pattern_examples() {
        let g = pattern_copies(1, &[vec![0], vec![]], 2);
        let ps = compute_patterns(&g, &cluster_mod(&g, &[4])).unwrap();
        assert_eq!(ps.len(), 1);
        assert_eq!((ps[0].len(), ps[0].size, ps[0].trivial), (2, 2, true));

        // One K2 fully adjacent to u = 4, one not adjacent at all.
        let g = Graph::from_edges(5, &[(0, 1), (2, 3), (0, 4), (1, 4)]).unwrap();
        let ps = compute_patterns(&g, &cluster_mod(&g, &[4])).unwrap();
        assert_eq!(ps.len(), 2);

        let g = pattern_copies(1, &[vec![0], vec![0]], 1);
        let ps = compute_patterns(&g, &cluster_mod(&g, &[2])).unwrap();
        assert_eq!((ps[0].trivial, ps[0].tau_size), (false, 1));

        assert!(compute_patterns(&path(3), &cluster_mod(&path(3), &[1])).is_ok());
        let bad = Modulator::new(&path(4), ModulatorKind::Cluster, [1, 2]).unwrap();
        assert!(compute_patterns(&path(6), &bad).is_err());
    }

    #[test]
    fn trivial_rule_preserves_decisions() {
        let (g, u) = trivial_fixture();
        let m = cluster_mod(&g, &u);
        let p = compute_patterns(&g, &m).unwrap().remove(0);
        assert_eq!(p.len(), 7);
        for d in 0..=15 {
            let (k, _) = rule_trivial_pattern(&Instance::new(g.clone(), d), &m, &p).unwrap();
            if d >= 1 {
                assert_eq!(k.graph.n(), 13);
                assert_eq!(decision(&k.graph, d - 1), decision(&g, d), "d = {d}");
            } else {
                assert!(!decision(&g, 0));
            }
        }
        let small = pattern_copies(1, &[vec![0], vec![]], 6);
        let m6 = cluster_mod(&small, &[12]);
        let p6 = compute_patterns(&small, &m6).unwrap().remove(0);
        assert!(matches!(rule_trivial_pattern(&Instance::new(small, 5), &m6, &p6), Err(Error::Inapplicable(_))));
    }

    #[test]
    fn trivial_rule_needs_nonempty_modulator() {
        let g = Graph::from_edges(8, &[(0, 1), (2, 3), (4, 5), (6, 7)]).unwrap();
        let m = cluster_mod(&g, &[]);
        for p in compute_patterns(&g, &m).unwrap() {
            assert!(!p.trivial);
            assert!(rule_trivial_pattern(&Instance::new(g.clone(), 4), &m, &p).is_err());
        }
    }

    #[test]
    fn nontrivial_rule_examples() {
        let (g, u) = nontrivial_fixture();
        let m = cluster_mod(&g, &u);
        let p = compute_patterns(&g, &m).unwrap().remove(0);
        for d in 0..=g.n() {
            let (k, t) = rule_nontrivial_pattern(&Instance::new(g.clone(), d), &m, &p).unwrap();
            if d >= 1 {
                assert_eq!(k.graph.n(), 5);
                assert_eq!(decision(&k.graph, d - 1), decision(&g, d), "d = {d}");
            } else {
                assert!(t.no_instance);
            }
        }
        let two = pattern_copies(1, &[vec![0], vec![0]], 2);
        let m2 = cluster_mod(&two, &[4]);
        let p2 = compute_patterns(&two, &m2).unwrap().remove(0);
        assert!(rule_nontrivial_pattern(&Instance::new(two, 3), &m2, &p2).is_err());

        // K4s made of two true-twin pairs, r = |U| + 2 = 3.
        let g = pattern_copies(1, &[vec![0], vec![0], vec![], vec![]], 3);
        let m = cluster_mod(&g, &[12]);
        let p = compute_patterns(&g, &m).unwrap().remove(0);
        assert_eq!(p.tau_size, 2);
        for d in 2..=g.n() {
            let (k, _) = rule_nontrivial_pattern(&Instance::new(g.clone(), d), &m, &p).unwrap();
            assert_eq!(k.budget, d - 2);
            assert_eq!(decision(&k.graph, d - 2), decision(&g, d), "d = {d}");
        }
    }

    #[test]
    fn cluster_driver_examples() {
        let two_triangles = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        for d in 0..=6 {
            let (k, t, r) = kernelize_cluster(&Instance::new(two_triangles.clone(), d), None).unwrap();
            assert_eq!(t.modulator.as_deref(), Some(&[][..]));
            assert!(r.all_hold());
            let kernel_yes = !t.no_instance && decision(&k.graph, k.budget);
            assert_eq!(kernel_yes, decision(&two_triangles, d), "d = {d}");
        }

        let (g, u) = trivial_fixture();
        let (k, t, r) = kernelize_cluster(&Instance::new(g.clone(), 8), Some(&cluster_mod(&g, &u))).unwrap();
        assert_eq!((k.graph.n(), k.budget, t.records.len()), (13, 7, 1));
        assert!(r.all_hold(), "{r:?}");
    }

    #[test]
    fn clique_driver_examples() {
        let (k, t, r) = kernelize_clique(&Instance::new(complete(10), 9), Some(&Modulator::new(&complete(10), ModulatorKind::Clique, []).unwrap())).unwrap();
        assert_eq!((k.graph, k.budget), (complete(2), 1));
        assert_eq!(t.records.len(), 8);
        assert!(r.all_hold());
        assert_eq!(lds_number(&complete(10)).unwrap(), 9);

        let mut g = complete(5);
        g.remove_edge(0, 1);
        let m = Modulator::new(&g, ModulatorKind::Clique, [0, 1]).unwrap();
        let (_, _, r) = kernelize_clique(&Instance::new(g, 4), Some(&m)).unwrap();
        let c = r.check("vertices <= |U| + 2*2^|U|").unwrap();
        assert_eq!(c.bound, 10);
        assert!(c.holds);
    }

    #[test]
    fn negative_budget_gives_no_instance() {
        let (k, t, _) = kernelize_clique(&Instance::new(complete(6), 2), None).unwrap();
        assert!(t.no_instance);
        assert_eq!((k.graph, k.budget), (Graph::new(1), 0));
    }

    #[test]
    fn trivial_normalizer_examples() {
        let (g, u) = trivial_fixture();
        let p = compute_patterns(&g, &cluster_mod(&g, &u)).unwrap().remove(0);
        // Position 0 of every clique plus u.
        let first: CodeSet = p.cliques.iter().map(|c| c.members[0]).chain([14]).collect();
        assert!(is_locating_dominating(&g, &first).unwrap().is_valid());
        assert_eq!(normalize_trivial_solution(&g, &u, &p, &first).unwrap(), first);

        let all: CodeSet = p.vertices().collect();
        let out = normalize_trivial_solution(&g, &u, &p, &all).unwrap();
        let expected: CodeSet = p.cliques.iter().map(|c| c.members[0]).chain([14]).collect();
        assert_eq!(out, expected);

        for d in enumerate_minimum_solutions(&g, &SolverConfig::default()).unwrap() {
            let out = normalize_trivial_solution(&g, &u, &p, &d).unwrap();
            assert!(out.len() <= d.len());
            assert!(p.aligned_triple(&out).is_some());
        }
    }

    #[test]
    fn nontrivial_normalizer_examples() {
        let (g, u) = nontrivial_fixture();
        let p = compute_patterns(&g, &cluster_mod(&g, &u)).unwrap().remove(0);
        // Every clique at τ plus one more vertex.
        let heavy: CodeSet = p.vertices().collect();
        let out = normalize_nontrivial_solution(&g, &u, &p, &heavy).unwrap();
        let expected: CodeSet = p.cliques.iter().flat_map(|c| c.tau.clone()).chain(u.clone()).collect();
        assert_eq!(out, expected);
        assert_eq!(normalize_nontrivial_solution(&g, &u, &p, &out).unwrap(), out);
        for d in enumerate_minimum_solutions(&g, &SolverConfig::default()).unwrap() {
            let out = normalize_nontrivial_solution(&g, &u, &p, &d).unwrap();
            assert!(out.len() <= d.len());
            assert!(p.tau_clique(&out).is_some());
        }
    }

    #[test]
    fn lifting_examples() {
        let (k, t, _) = kernelize_clique(&Instance::new(complete(4), 3), None).unwrap();
        let lifted = lift_solution(&t, &CodeSet::from([0])).unwrap();
        assert_eq!(lifted.len(), 3);
        assert_eq!(k.graph, complete(2));

        let (g, u) = trivial_fixture();
        let (k, t, _) = kernelize_cluster(&Instance::new(g.clone(), 8), Some(&cluster_mod(&g, &u))).unwrap();
        let d = solve_exact(&k.graph, None).unwrap().unwrap();
        let lifted = lift_cluster_solution(&t, &d).unwrap();
        assert_eq!(lifted.len(), d.len() + 1);
        assert_eq!(lifted.len(), lds_number(&g).unwrap());

        let (k, t, _) = kernelize_cluster(&Instance::new(path(4), 2), None).unwrap();
        assert!(t.records.is_empty());
        let d = CodeSet::from([1, 2]);
        assert_eq!(k.graph, path(4));
        assert_eq!(lift_solution(&t, &d).unwrap(), d);
    }
}
