//! Rule records, replay and lifting.
//!
//! Vertices carry universal ids for the whole run: the original graph's
//! vertices keep their ids and every vertex created by a rule gets the next
//! unused id. Records store universal ids only, so replaying them from the
//! original graph rebuilds every intermediate graph with its id table.

use super::cluster::{normalize_nontrivial_solution, normalize_trivial_solution, Pattern};
use super::maxleaf::{normalize_path_solution, FiveSectioning};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lds::{is_locating_dominating, CodeSet, Instance, Verdict};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parameter {
    Cluster,
    Clique,
    MaxLeaf,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum RuleRecord {
    /// A twin removed from a class of three or more mutual twins.
    TwinRemoved { removed: usize, twins: Vec<usize>, budget_delta: usize },
    /// A clique removed from a trivial pattern. Cliques list members in
    /// signature order, so equal indices mean matching positions.
    TrivialCliqueRemoved {
        key: Vec<Vec<usize>>,
        removed: Vec<usize>,
        remaining: Vec<Vec<usize>>,
        budget_delta: usize,
    },
    /// A clique removed from a non-trivial pattern.
    NontrivialCliqueRemoved {
        key: Vec<Vec<usize>>,
        removed: Vec<usize>,
        tau: Vec<usize>,
        remaining: Vec<Vec<usize>>,
        budget_delta: usize,
    },
    /// The inner sections of a long subdivision path replaced by a fresh
    /// five-vertex path.
    LongPathReplaced {
        ends: (usize, usize),
        path: Vec<usize>,
        sections: Vec<usize>,
        replacement: Vec<usize>,
        budget_delta: usize,
    },
}

impl RuleRecord {
    pub fn budget_delta(&self) -> usize {
        match self {
            RuleRecord::TwinRemoved { budget_delta, .. }
            | RuleRecord::TrivialCliqueRemoved { budget_delta, .. }
            | RuleRecord::NontrivialCliqueRemoved { budget_delta, .. }
            | RuleRecord::LongPathReplaced { budget_delta, .. } => *budget_delta,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelTrace {
    pub parameter: Parameter,
    pub original: Graph,
    pub original_budget: usize,
    /// Modulator used by the cluster and clique kernels.
    pub modulator: Option<Vec<usize>>,
    /// Host vertices used by the max-leaf kernel.
    pub host: Option<Vec<usize>>,
    pub records: Vec<RuleRecord>,
    /// Universal id of each kernel vertex.
    pub kernel_labels: Vec<usize>,
    pub kernel_budget: usize,
    /// Set when the budget went negative and the kernel is the one-vertex
    /// NO instance.
    pub no_instance: bool,
}

impl KernelTrace {
    pub fn total_budget_delta(&self) -> usize {
        self.records.iter().map(RuleRecord::budget_delta).sum()
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

/// A graph whose vertices carry universal ids, ascending in local order.
#[derive(Clone, Debug)]
pub(crate) struct Stage {
    pub graph: Graph,
    pub labels: Vec<usize>,
    index: HashMap<usize, usize>,
}

impl Stage {
    pub fn new(graph: Graph, labels: Vec<usize>) -> Self {
        let index = labels.iter().enumerate().map(|(i, &u)| (u, i)).collect();
        Stage { graph, labels, index }
    }

    pub fn original(g: &Graph) -> Self {
        Stage::new(g.clone(), (0..g.n()).collect())
    }

    pub fn local(&self, u: usize) -> Result<usize> {
        self.index
            .get(&u)
            .copied()
            .ok_or_else(|| Error::Precondition(format!("vertex {u} is not present at this stage")))
    }

    pub fn locals(&self, us: &[usize]) -> Result<Vec<usize>> {
        us.iter().map(|&u| self.local(u)).collect()
    }

    pub fn to_local(&self, d: &CodeSet) -> Result<CodeSet> {
        d.iter().map(|u| self.local(u)).collect()
    }

    pub fn to_universal(&self, d: &CodeSet) -> CodeSet {
        d.iter().map(|v| self.labels[v]).collect()
    }

    /// Removes vertices given by universal id.
    pub fn remove(&self, us: &[usize]) -> Result<Stage> {
        let locals = self.locals(us)?;
        let (graph, remap) = self.graph.remove_vertices(&locals);
        let mut labels = vec![0; graph.n()];
        for (old, new) in remap.iter().enumerate() {
            if let Some(new) = new {
                labels[*new] = self.labels[old];
            }
        }
        Ok(Stage::new(graph, labels))
    }

    /// Removes `inner` and inserts the path `fresh` between `left` and
    /// `right` (all universal ids).
    pub fn replace_path(&self, inner: &[usize], left: usize, right: usize, fresh: &[usize]) -> Result<Stage> {
        let cut = self.remove(inner)?;
        let (left, right) = (cut.local(left)?, cut.local(right)?);
        let mut graph = cut.graph.clone();
        let mut labels = cut.labels.clone();
        let mut prev = left;
        for &u in fresh {
            let x = graph.add_vertex();
            labels.push(u);
            graph.add_edge(prev, x);
            prev = x;
        }
        graph.add_edge(prev, right);
        Ok(Stage::new(graph, labels))
    }

    /// The stage after `record` is applied.
    pub fn apply(&self, record: &RuleRecord) -> Result<Stage> {
        match record {
            RuleRecord::TwinRemoved { removed, .. } => self.remove(&[*removed]),
            RuleRecord::TrivialCliqueRemoved { removed, .. }
            | RuleRecord::NontrivialCliqueRemoved { removed, .. } => self.remove(removed),
            RuleRecord::LongPathReplaced { path, sections, replacement, .. } => {
                let first = sections[0];
                let last = *sections.last().unwrap();
                let inner = &path[first..path.len() - last];
                self.replace_path(inner, path[first - 1], path[path.len() - last], replacement)
            }
        }
    }
}

/// Mutable state shared by the kernel drivers.
pub(crate) struct Reducer {
    pub parameter: Parameter,
    pub original: Graph,
    pub original_budget: usize,
    pub stage: Stage,
    pub budget: i64,
    pub records: Vec<RuleRecord>,
    pub next_id: usize,
}

impl Reducer {
    pub fn new(parameter: Parameter, inst: &Instance) -> Self {
        Reducer {
            parameter,
            original: inst.graph.clone(),
            original_budget: inst.budget,
            stage: Stage::original(&inst.graph),
            budget: inst.budget as i64,
            records: Vec::new(),
            next_id: inst.graph.n(),
        }
    }

    pub fn push(&mut self, record: RuleRecord) -> Result<()> {
        self.stage = self.stage.apply(&record)?;
        self.budget -= record.budget_delta() as i64;
        self.records.push(record);
        Ok(())
    }

    pub fn negative(&self) -> bool {
        self.budget < 0
    }

    pub fn finish(self, modulator: Option<Vec<usize>>, host: Option<Vec<usize>>) -> (Instance, KernelTrace) {
        let no_instance = self.budget < 0;
        let (inst, labels) = if no_instance {
            (Instance::new(Graph::new(1), 0), Vec::new())
        } else {
            (Instance::new(self.stage.graph.clone(), self.budget as usize), self.stage.labels.clone())
        };
        let trace = KernelTrace {
            parameter: self.parameter,
            original: self.original,
            original_budget: self.original_budget,
            modulator,
            host,
            records: self.records,
            kernel_labels: labels,
            kernel_budget: inst.budget,
            no_instance,
        };
        (inst, trace)
    }
}

fn verified(g: &Graph, d: CodeSet, what: &str) -> Result<CodeSet> {
    match is_locating_dominating(g, &d)? {
        Verdict::Valid => Ok(d),
        Verdict::Invalid(v) => Err(Error::InternalBug(format!("{what}: lifted set fails verification ({v:?})"))),
    }
}

/// Lifts a solution of the kernel to the original graph, undoing the
/// records from last to first. The result is verified before it is returned.
pub fn lift_solution(trace: &KernelTrace, kernel_solution: &CodeSet) -> Result<CodeSet> {
    if trace.no_instance {
        return Err(Error::Precondition("the kernel is the NO instance; there is nothing to lift".into()));
    }
    let mut stages = vec![Stage::original(&trace.original)];
    for r in &trace.records {
        let next = stages.last().unwrap().apply(r)?;
        stages.push(next);
    }
    let kernel = stages.last().unwrap();
    if kernel.labels != trace.kernel_labels {
        return Err(Error::Precondition("trace replay does not reproduce the recorded kernel".into()));
    }
    for v in kernel_solution.iter() {
        kernel.graph.check_vertex(v)?;
    }
    if !is_locating_dominating(&kernel.graph, kernel_solution)?.is_valid() {
        return Err(Error::Precondition("the given set is not locating-dominating in the kernel".into()));
    }
    let mut d = kernel.to_universal(kernel_solution);
    for (i, record) in trace.records.iter().enumerate().rev() {
        d = lift_step(record, &stages[i], &stages[i + 1], &d, trace.modulator.as_deref())?;
    }
    verified(&trace.original, d, "lift")
}

fn lift_step(record: &RuleRecord, before: &Stage, after: &Stage, d: &CodeSet, modulator: Option<&[usize]>) -> Result<CodeSet> {
    match record {
        RuleRecord::TwinRemoved { removed, .. } => {
            let bare = before.to_local(d)?;
            if is_locating_dominating(&before.graph, &bare)?.is_valid() {
                return Ok(d.clone());
            }
            let mut with = d.clone();
            with.insert(*removed);
            let local = verified(&before.graph, before.to_local(&with)?, "twin removal")?;
            Ok(before.to_universal(&local))
        }
        RuleRecord::TrivialCliqueRemoved { removed, remaining, .. } => {
            let u = modulator.ok_or_else(|| Error::Precondition("trace lacks the modulator".into()))?;
            let u_local = after.locals(u)?;
            let pattern = Pattern::from_cliques(&after.graph, &u_local, &remaining_local(after, remaining)?);
            let normal = normalize_trivial_solution(&after.graph, &u_local, &pattern, &after.to_local(d)?)?;
            let ell = pattern
                .aligned_triple(&normal)
                .ok_or_else(|| Error::InternalBug("normalized set has no aligned triple".into()))?
                .0;
            let mut out = after.to_universal(&normal);
            out.insert(removed[ell]);
            let local = verified(&before.graph, before.to_local(&out)?, "trivial clique removal")?;
            Ok(before.to_universal(&local))
        }
        RuleRecord::NontrivialCliqueRemoved { tau, remaining, .. } => {
            let u = modulator.ok_or_else(|| Error::Precondition("trace lacks the modulator".into()))?;
            let u_local = after.locals(u)?;
            let pattern = Pattern::from_cliques(&after.graph, &u_local, &remaining_local(after, remaining)?);
            let normal = normalize_nontrivial_solution(&after.graph, &u_local, &pattern, &after.to_local(d)?)?;
            let mut out = after.to_universal(&normal);
            out.extend(tau.iter().copied());
            let local = verified(&before.graph, before.to_local(&out)?, "non-trivial clique removal")?;
            Ok(before.to_universal(&local))
        }
        RuleRecord::LongPathReplaced { path, sections, replacement, .. } => {
            let first = sections[0];
            let last = *sections.last().unwrap();
            let mut short: Vec<usize> = path[..first].to_vec();
            short.extend(replacement);
            short.extend(&path[path.len() - last..]);
            let short_local = after.locals(&short)?;
            let sectioning = FiveSectioning::from_sizes(vec![first, 5, last])?;
            let normal = normalize_path_solution(&after.graph, &short_local, &sectioning, &after.to_local(d)?)?;
            let normal = after.to_universal(&normal);
            let positions: Vec<usize> = (0..5).filter(|&p| normal.contains(replacement[p])).collect();
            if positions.len() != 2 {
                return Err(Error::InternalBug(format!(
                    "normalized set meets the replacement path in {} vertices",
                    positions.len()
                )));
            }
            let mut out: CodeSet = normal.iter().filter(|u| !replacement.contains(u)).collect();
            let mut start = first;
            while start < path.len() - last {
                out.extend(positions.iter().map(|&p| path[start + p]));
                start += 5;
            }
            let local = verified(&before.graph, before.to_local(&out)?, "long path replacement")?;
            Ok(before.to_universal(&local))
        }
    }
}

fn remaining_local(stage: &Stage, cliques: &[Vec<usize>]) -> Result<Vec<Vec<usize>>> {
    cliques.iter().map(|c| stage.locals(c)).collect()
}
