use super::Graph;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TwinKind {
    /// Equal open neighbourhoods.
    False,
    /// Equal closed neighbourhoods.
    True,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwinClass {
    pub members: Vec<usize>,
    /// `None` for singletons.
    pub kind: Option<TwinKind>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwinClasses {
    /// Ordered by smallest member.
    pub classes: Vec<TwinClass>,
}

impl TwinClasses {
    pub fn nontrivial(&self) -> impl Iterator<Item = &TwinClass> {
        self.classes.iter().filter(|c| c.members.len() >= 2)
    }

    /// Number of classes of each size, indexed by size.
    pub fn histogram(&self) -> Vec<usize> {
        let max = self.classes.iter().map(|c| c.members.len()).max().unwrap_or(0);
        let mut h = vec![0; max + 1];
        for c in &self.classes {
            h[c.members.len()] += 1;
        }
        h
    }
}

/// Partitions `restrict` (default: all vertices) into maximal classes of
/// mutual twins of `g`. A vertex never has both a false twin and a true twin,
/// so grouping by open neighbourhood first and closed second is exact.
pub fn twin_classes(g: &Graph, restrict: Option<&[usize]>) -> TwinClasses {
    let all: Vec<usize>;
    let verts = match restrict {
        Some(r) => r,
        None => {
            all = (0..g.n()).collect();
            &all
        }
    };
    let mut open: BTreeMap<&[usize], Vec<usize>> = BTreeMap::new();
    for &v in verts {
        open.entry(g.neighbors(v)).or_default().push(v);
    }
    let mut classes = Vec::new();
    let mut closed: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for (_, members) in open {
        if members.len() >= 2 {
            classes.push(TwinClass { members, kind: Some(TwinKind::False) });
        } else {
            let v = members[0];
            closed.entry(g.closed_neighborhood(v)).or_default().push(v);
        }
    }
    for (_, members) in closed {
        let kind = (members.len() >= 2).then_some(TwinKind::True);
        classes.push(TwinClass { members, kind });
    }
    for c in &mut classes {
        c.members.sort_unstable();
    }
    classes.sort_by_key(|c| c.members[0]);
    TwinClasses { classes }
}
