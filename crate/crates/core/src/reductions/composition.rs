//! OR-compositions of 3-uniform hypergraph bicoloring instances.
//!
//! Every vertex `v` gets a binary choice gadget whose `alpha` and `beta`
//! vertices encode its color, every hyperedge of the union gets a gadget
//! attached to those choices, and an instance selector picks which input
//! instance the solution colors. Selector bit gadget `j` reuses the binary
//! choice gadget with `alpha` standing for bit value 0 and `beta` for 1.

use super::hypergraph::{is_proper_bicoloring, Color, HypergraphInstance};
use super::layout::{Construction, GadgetLayout};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lds::{is_locating_dominating, CodeSet, Verdict};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// The selector leaves `X` independent, bounding the vertex cover.
    Vc,
    /// The selector makes `X` a clique, bounding the distance to a clique.
    Clique,
}

impl Variant {
    /// Fewest selector bits for which the selector vertices stay distinguishable.
    pub fn min_bits(self) -> usize {
        match self {
            Variant::Vc => 1,
            Variant::Clique => 2,
        }
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "vc" => Ok(Variant::Vc),
            "clique" => Ok(Variant::Clique),
            _ => Err(Error::Precondition(format!("unknown variant {s:?}; expected vc or clique"))),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Vc => "vc",
            Variant::Clique => "clique",
        })
    }
}

const CHOICE_PARTS: [&str; 7] = ["a", "b", "c", "d", "e", "alpha", "beta"];

fn vertex_role(v: usize, part: &str) -> String {
    format!("vg:{v}:{part}")
}

fn edge_role(idx: usize, part: &str) -> String {
    format!("he:{idx}:{part}")
}

fn bit_role(j: usize, part: &str) -> String {
    format!("sel:{j}:{part}")
}

fn x_role(i: usize) -> String {
    format!("x:{i}")
}

/// The bit gadget vertex encoding value `bit`.
fn bit_value(j: usize, bit: usize) -> String {
    bit_role(j, if bit == 0 { "alpha" } else { "beta" })
}

fn add_choice_gadget(g: &mut Graph, layout: &mut GadgetLayout, role: impl Fn(&str) -> String) {
    let [a, b, c, d, e, al, be] = CHOICE_PARTS.map(|p| layout.add(g, role(p)));
    for (x, y) in [(b, c), (c, al), (al, d), (d, be), (be, c), (d, e), (a, al), (a, be)] {
        g.add_edge(x, y);
    }
}

struct Parts<'a> {
    variant: Variant,
    instances: &'a [HypergraphInstance],
    hyperedges: &'a [[usize; 3]],
    bits: usize,
}

fn parts(layout: &GadgetLayout) -> Result<Parts<'_>> {
    match &layout.construction {
        Construction::OrComposition { variant, instances, hyperedges, bits, .. } => {
            Ok(Parts { variant: *variant, instances, hyperedges, bits: *bits })
        }
        _ => Err(Error::Precondition("layout does not come from an OR-composition".into())),
    }
}

/// Builds the composition for either selector variant. The instance list is
/// padded with copies of its last entry up to a power of two of at least
/// `2^min_bits` entries.
pub fn build_or_composition(instances: &[HypergraphInstance], variant: Variant) -> Result<(Graph, usize, GadgetLayout)> {
    let Some(first) = instances.first() else {
        return Err(Error::Precondition("at least one instance is required".into()));
    };
    let n = first.n();
    if let Some(i) = instances.iter().position(|h| h.n() != n) {
        return Err(Error::Precondition(format!("instance {i} has {} vertices, instance 0 has {n}", instances[i].n())));
    }
    let given = instances.len();
    let mut padded = instances.to_vec();
    padded.resize(given.next_power_of_two().max(1 << variant.min_bits()), instances[given - 1].clone());
    let bits = padded.len().trailing_zeros() as usize;
    let mut hyperedges: Vec<[usize; 3]> = padded.iter().flat_map(|h| h.edges().iter().copied()).collect();
    hyperedges.sort_unstable();
    hyperedges.dedup();

    let mut g = Graph::new(0);
    let mut layout = GadgetLayout::new(Construction::OrComposition {
        variant,
        instances: padded.clone(),
        given,
        hyperedges: hyperedges.clone(),
        bits,
    });
    for v in 0..n {
        add_choice_gadget(&mut g, &mut layout, |p| vertex_role(v, p));
    }
    for (idx, e) in hyperedges.iter().enumerate() {
        let [r, c, a, b] = ["r", "c", "A", "B"].map(|p| layout.add(&mut g, edge_role(idx, p)));
        g.add_edge(r, c);
        g.add_edge(c, a);
        g.add_edge(c, b);
        for &v in e {
            g.add_edge(a, layout.get(&vertex_role(v, "alpha")));
            g.add_edge(b, layout.get(&vertex_role(v, "beta")));
        }
    }
    for j in 0..bits {
        add_choice_gadget(&mut g, &mut layout, |p| bit_role(j, p));
    }
    let x: Vec<usize> = (0..padded.len()).map(|i| layout.add(&mut g, x_role(i))).collect();
    for (i, &xi) in x.iter().enumerate() {
        for j in 0..bits {
            g.add_edge(xi, layout.get(&bit_value(j, 1 - (i >> j & 1))));
        }
    }
    let y0 = layout.add(&mut g, "y0".into());
    match variant {
        Variant::Vc => {
            let y1 = layout.add(&mut g, "y1".into());
            let y2 = layout.add(&mut g, "y2".into());
            let z = layout.add(&mut g, "z".into());
            let zp = layout.add(&mut g, "z'".into());
            for y in [y0, y1, zp] {
                g.add_edge(z, y);
            }
            for &xi in &x {
                for y in [y0, y1, y2, z] {
                    g.add_edge(xi, y);
                }
            }
        }
        Variant::Clique => {
            let z = layout.add(&mut g, "z".into());
            g.add_edge(y0, z);
            for (a, &xa) in x.iter().enumerate() {
                g.add_edge(xa, z);
                for &xb in &x[a + 1..] {
                    g.add_edge(xa, xb);
                }
            }
        }
    }
    for j in 0..bits {
        g.add_edge(y0, layout.get(&bit_value(j, 0)));
        g.add_edge(y0, layout.get(&bit_value(j, 1)));
    }
    for (idx, e) in hyperedges.iter().enumerate() {
        for (i, h) in padded.iter().enumerate() {
            if !h.contains(e) {
                g.add_edge(x[i], layout.get(&edge_role(idx, "A")));
                g.add_edge(x[i], layout.get(&edge_role(idx, "B")));
            }
        }
    }
    layout.budget = 3 * (n + bits) + hyperedges.len() + if variant == Variant::Vc { 2 } else { 1 };
    Ok((g, layout.budget, layout))
}

/// Composition whose `X` is independent; `d = 3(n + h) + m + 2`.
pub fn build_or_composition_vc(instances: &[HypergraphInstance]) -> Result<(Graph, usize, GadgetLayout)> {
    build_or_composition(instances, Variant::Vc)
}

/// Composition whose `X` is a clique; `d = 3(n + h) + m + 1`.
pub fn build_or_composition_clique(instances: &[HypergraphInstance]) -> Result<(Graph, usize, GadgetLayout)> {
    build_or_composition(instances, Variant::Clique)
}

fn rebuild(p: &Parts) -> Result<Graph> {
    Ok(build_or_composition(p.instances, p.variant)?.0)
}

/// The solution of size `d` selecting instance `i` colored by `coloring`.
pub fn solution_from_bicoloring(layout: &GadgetLayout, i: usize, coloring: &[Color]) -> Result<CodeSet> {
    let p = parts(layout)?;
    let h = p
        .instances
        .get(i)
        .ok_or_else(|| Error::Precondition(format!("instance index {i} is out of range")))?;
    if !is_proper_bicoloring(h, coloring) {
        return Err(Error::Precondition(format!("the coloring does not properly bicolor instance {i}")));
    }
    let mut s = CodeSet::default();
    for (v, &c) in coloring.iter().enumerate() {
        let pick = if c == Color::Alpha { "alpha" } else { "beta" };
        for part in ["c", "d", pick] {
            s.insert(layout.get(&vertex_role(v, part)));
        }
    }
    for idx in 0..p.hyperedges.len() {
        s.insert(layout.get(&edge_role(idx, "c")));
    }
    for j in 0..p.bits {
        s.insert(layout.get(&bit_role(j, "c")));
        s.insert(layout.get(&bit_role(j, "d")));
        s.insert(layout.get(&bit_value(j, i >> j & 1)));
    }
    s.insert(layout.get(&x_role(i)));
    if p.variant == Variant::Vc {
        s.insert(layout.get("z"));
    }
    let g = rebuild(&p)?;
    if let Verdict::Invalid(v) = is_locating_dominating(&g, &s)? {
        return Err(Error::InternalBug(format!("constructed solution is not locating-dominating ({v:?})")));
    }
    if s.len() != layout.budget {
        return Err(Error::InternalBug(format!("constructed solution has {} vertices, budget is {}", s.len(), layout.budget)));
    }
    Ok(s)
}

fn extraction(step: &str, detail: String) -> Error {
    Error::Extraction { step: step.into(), detail }
}

/// Reads the selected instance and its bicoloring off a solution of size at
/// most `d`. Padding copies map back to the last given instance.
pub fn extract_bicoloring(layout: &GadgetLayout, d: &CodeSet) -> Result<(usize, Vec<Color>)> {
    let p = parts(layout)?;
    let g = rebuild(&p)?;
    if !is_locating_dominating(&g, d)?.is_valid() || d.len() > layout.budget {
        return Err(Error::Precondition("input must be locating-dominating with at most d vertices".into()));
    }
    for idx in 0..p.hyperedges.len() {
        if ["A", "B"].iter().any(|part| d.contains(layout.get(&edge_role(idx, part)))) {
            return Err(extraction("hyperedge gadgets avoid A and B", format!("hyperedge {idx} has A or B in the solution")));
        }
    }
    let n = p.instances[0].n();
    let mut coloring = Vec::with_capacity(n);
    for v in 0..n {
        let a = d.contains(layout.get(&vertex_role(v, "alpha")));
        let b = d.contains(layout.get(&vertex_role(v, "beta")));
        if a == b {
            return Err(extraction("one color per vertex", format!("vertex {v} has {} of alpha and beta", usize::from(a) * 2)));
        }
        coloring.push(if a { Color::Alpha } else { Color::Beta });
    }
    let picked: Vec<usize> = (0..p.instances.len()).filter(|&i| d.contains(layout.get(&x_role(i)))).collect();
    let [i] = picked[..] else {
        return Err(extraction("unique selected instance", format!("selector vertices in the solution: {picked:?}")));
    };
    if !is_proper_bicoloring(&p.instances[i], &coloring) {
        return Err(extraction("proper bicoloring", format!("the read coloring has a monochromatic hyperedge in instance {i}")));
    }
    let given = match &layout.construction {
        Construction::OrComposition { given, .. } => *given,
        _ => unreachable!(),
    };
    Ok((i.min(given - 1), coloring))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CoverWitness {
    /// All vertices outside `X`; `X` is independent.
    VertexCover(Vec<usize>),
    /// All vertices outside `X`; `X` is a clique.
    CliqueModulator(Vec<usize>),
}

impl CoverWitness {
    pub fn vertices(&self) -> &[usize] {
        match self {
            CoverWitness::VertexCover(v) | CoverWitness::CliqueModulator(v) => v,
        }
    }
}

/// `V(G) \ X` with its defining property checked.
pub fn composition_cover_witnesses(layout: &GadgetLayout) -> Result<CoverWitness> {
    let p = parts(layout)?;
    let g = rebuild(&p)?;
    let x: Vec<usize> = (0..p.instances.len()).map(|i| layout.get(&x_role(i))).collect();
    let rest: Vec<usize> = (0..g.n()).filter(|v| !x.contains(v)).collect();
    match p.variant {
        Variant::Vc if g.is_independent(&x) => Ok(CoverWitness::VertexCover(rest)),
        Variant::Clique if g.is_clique(&x) => Ok(CoverWitness::CliqueModulator(rest)),
        v => Err(Error::InternalBug(format!("selector vertices have the wrong shape for variant {v}"))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditEntry {
    pub gadget: String,
    pub predicate: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub entries: Vec<AuditEntry>,
    /// Solution vertices inside the instance selector.
    pub selector_count: usize,
    /// Lower bound every solution meets inside the selector.
    pub selector_bound: usize,
}

impl AuditReport {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AuditEntry> {
        self.entries.iter().filter(|e| !e.holds)
    }
}

/// Checks the per-gadget lower bounds every solution satisfies: each binary
/// choice gadget meets `{a, alpha, beta}`, `{b, c}` and `{d, e}`, each
/// hyperedge gadget meets `{c, r}`, and the selector holds at least
/// `3h + 2` (independent `X`) or `3h + 1` (clique `X`) solution vertices.
pub fn audit_observations(layout: &GadgetLayout, d: &CodeSet) -> Result<AuditReport> {
    let p = parts(layout)?;
    let mut entries = Vec::new();
    let meets = |roles: &[String]| roles.iter().any(|r| d.contains(layout.get(r)));
    let mut choice = |name: String, role: &dyn Fn(&str) -> String| {
        for group in [&["a", "alpha", "beta"][..], &["b", "c"], &["d", "e"]] {
            entries.push(AuditEntry {
                gadget: name.clone(),
                predicate: format!("meets {{{}}}", group.join(", ")),
                holds: meets(&group.iter().map(|q| role(q)).collect::<Vec<_>>()),
            });
        }
    };
    let n = p.instances[0].n();
    for v in 0..n {
        choice(format!("vertex {v}"), &|q| vertex_role(v, q));
    }
    for j in 0..p.bits {
        choice(format!("bit {j}"), &|q| bit_role(j, q));
    }
    for idx in 0..p.hyperedges.len() {
        entries.push(AuditEntry {
            gadget: format!("hyperedge {idx}"),
            predicate: "meets {c, r}".into(),
            holds: meets(&[edge_role(idx, "c"), edge_role(idx, "r")]),
        });
    }
    let selector: Vec<String> = layout
        .roles
        .keys()
        .filter(|r| r.starts_with("sel:") || r.starts_with("x:") || r.starts_with('y') || r.starts_with('z'))
        .cloned()
        .collect();
    let selector_count = selector.iter().filter(|r| d.contains(layout.get(r))).count();
    let selector_bound = 3 * p.bits + if p.variant == Variant::Vc { 2 } else { 1 };
    entries.push(AuditEntry {
        gadget: "selector".into(),
        predicate: format!("holds at least {selector_bound} solution vertices"),
        holds: selector_count >= selector_bound,
    });
    Ok(AuditReport { entries, selector_count, selector_bound })
}
